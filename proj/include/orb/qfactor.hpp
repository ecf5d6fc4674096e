#ifndef ORB_QFACTOR_HPP
#define ORB_QFACTOR_HPP

#include <vector>

#include "orb/poly.hpp"
#include "orb/rational.hpp"

namespace orb {

struct QFactor {
    QPoly factor; // monic irreducible over Q
    long multiplicity;
};

struct QFactorization {
    Rational leading;
    std::vector<QFactor> factors;
};

/// Exact factorization over Q: square-free decomposition, factorization
/// modulo a good prime, Hensel lifting, subset recombination.
QFactorization factor_over_Q(const QPoly& p);

bool is_irreducible_over_Q(const QPoly& p);

/// Roots of p in Q (from the degree-one factors), without multiplicity.
std::vector<Rational> rational_roots(const QPoly& p);

/// The n-th cyclotomic polynomial, monic over Q.
QPoly cyclotomic(long n);

long euler_phi(long n);

} // namespace orb

#endif
