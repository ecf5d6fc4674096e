#ifndef ORB_FACTOR_HPP
#define ORB_FACTOR_HPP

#include <vector>

#include "orb/numberfield.hpp"
#include "orb/qfactor.hpp"

namespace orb {

struct KFactor {
    Poly factor; // monic irreducible over the coefficient field
    long multiplicity;
};

struct KFactorization {
    FieldElement leading;
    std::vector<KFactor> factors;
};

/// Factor a polynomial over its number field.  Over Q this is the Hensel
/// factorizer; over a proper extension it is Trager's norm reduction.
KFactorization factor_over_field(const Poly& p);

bool is_irreducible_over_field(const Poly& p);

/// Roots of p lying in its coefficient field (no multiplicity).
std::vector<FieldElement> roots_in_field(const Poly& p);

/// Monic irreducible factors of the square-free polynomial p.
std::vector<Poly> split_into_classes(const Poly& p);

} // namespace orb

#endif
