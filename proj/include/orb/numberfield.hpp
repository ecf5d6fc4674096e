#ifndef ORB_NUMBERFIELD_HPP
#define ORB_NUMBERFIELD_HPP

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "orb/poly.hpp"
#include "orb/rational.hpp"

namespace orb {

class NumberField;
class FieldElement;
using FieldPtr = std::shared_ptr<const NumberField>;

/// A simple algebraic extension Q[t]/(m(t)) with m monic irreducible.  The
/// rationals themselves are the degree-one field with m(t) = t; elements are
/// coordinate vectors in the power basis 1, a, ..., a^(d-1).
class NumberField : public std::enable_shared_from_this<NumberField> {
  public:
    /// The shared Q instance.
    static FieldPtr rationals();
    /// Build Q(a) with the given monic minimal polynomial; irreducibility is
    /// verified at construction.
    static FieldPtr extension(const QPoly& min_poly, const std::string& label);

    long degree() const { return min_poly_.degree(); }
    bool is_rationals() const { return degree() == 1; }
    const QPoly& min_poly() const { return min_poly_; }
    const std::string& label() const { return label_; }

    FieldElement element(std::vector<Rational> coords) const;
    FieldElement from_rational(const Rational& r) const;
    FieldElement from_long(long v) const;
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement generator() const;

    /// One fixed complex root of the minimal polynomial, for approximate
    /// sanity assertions only; exact decisions never consult it.
    std::complex<double> embedding_root() const { return root_; }

    friend bool same_field(const NumberField& a, const NumberField& b) {
        return &a == &b || a.min_poly_ == b.min_poly_;
    }

  private:
    NumberField(QPoly min_poly, std::string label);

    QPoly min_poly_;
    std::string label_;
    std::complex<double> root_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);
void require_same_field(const FieldPtr& a, const FieldPtr& b, const char* where);

/// An element of a NumberField; immutable after construction, arithmetic
/// reduces modulo the minimal polynomial.
class FieldElement {
  public:
    FieldElement(FieldPtr field, std::vector<Rational> coords);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when all coordinates above the constant one vanish.
    bool is_rational() const;
    /// The constant coordinate; only meaningful when is_rational().
    const Rational& rational_value() const { return coords_[0]; }

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement inverse() const;
    FieldElement pow(long e) const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    /// Canonical total order (coordinate-lexicographic); used only for
    /// deterministic serialization, not for field semantics.
    friend int compare(const FieldElement& a, const FieldElement& b);

    std::complex<double> approx() const;
    std::string to_string() const;

  private:
    FieldPtr field_;
    std::vector<Rational> coords_;
};

inline bool coeff_is_zero(const FieldElement& x) { return x.is_zero(); }
FieldElement coeff_zero(const FieldElement& like);
FieldElement coeff_one(const FieldElement& like);

using Poly = BasicPoly<FieldElement>;

/// Lift a rational polynomial into K[z].
Poly lift_to_field(const QPoly& p, const FieldPtr& field);
/// Inverse of lift_to_field when every coefficient is rational.
QPoly rational_poly(const Poly& p);
bool has_rational_coeffs(const Poly& p);
Poly poly_from_longs(const FieldPtr& field, const std::vector<long>& coeffs);
std::string poly_to_string(const Poly& p, const std::string& var);
std::string qpoly_to_string(const QPoly& p, const std::string& var);

} // namespace orb

#endif
