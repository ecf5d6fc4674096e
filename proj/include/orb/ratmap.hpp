#ifndef ORB_RATMAP_HPP
#define ORB_RATMAP_HPP

#include <optional>
#include <string>
#include <vector>

#include "orb/factor.hpp"
#include "orb/numberfield.hpp"

namespace orb {

/// A point of the projective line over a number field.
class Point {
  public:
    static Point infinity(FieldPtr field) { return Point(std::move(field), std::nullopt); }
    static Point finite(FieldElement v) {
        FieldPtr f = v.field();
        return Point(std::move(f), std::move(v));
    }

    bool is_infinity() const { return !value_.has_value(); }
    const FieldElement& value() const {
        require(value_.has_value(), errc::bad_params, "finite value of the point at infinity");
        return *value_;
    }
    const FieldPtr& field() const { return field_; }

    friend bool operator==(const Point& a, const Point& b) {
        require_same_field(a.field_, b.field_, "point compare");
        if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
        return *a.value_ == *b.value_;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

    std::string to_string() const { return is_infinity() ? "inf" : value_->to_string(); }

  private:
    Point(FieldPtr f, std::optional<FieldElement> v) : field_(std::move(f)), value_(std::move(v)) {}
    FieldPtr field_;
    std::optional<FieldElement> value_;
};

/// A Galois class of points: infinity, a single field point, or the root set
/// of a monic polynomial irreducible over the base field (degree >= 2).
class PointClass {
  public:
    enum class Kind { infinity, point, orbit };

    static PointClass infinity(FieldPtr field);
    static PointClass point(FieldElement v);
    /// The polynomial must be monic of degree >= 2; callers are responsible
    /// for irreducibility over the base field (verified supports go through
    /// the Orbifold constructor).
    static PointClass orbit(Poly q);
    static PointClass of_point(const Point& p);

    Kind kind() const { return kind_; }
    const FieldPtr& field() const { return field_; }
    const FieldElement& point_value() const { return *point_; }
    const Poly& orbit_poly() const { return *orbit_; }

    long point_count() const;
    /// (z - p) for a point class, the orbit polynomial for an orbit class.
    Poly vanishing_poly() const;

    friend bool operator==(const PointClass& a, const PointClass& b);
    friend bool operator!=(const PointClass& a, const PointClass& b) { return !(a == b); }
    /// Canonical order: infinity, then points by coordinate lex, then orbits
    /// by (degree, coefficient lex).
    friend int compare(const PointClass& a, const PointClass& b);

    std::string to_string() const;

  private:
    PointClass(Kind k, FieldPtr f) : kind_(k), field_(std::move(f)) {}
    Kind kind_;
    FieldPtr field_;
    std::optional<FieldElement> point_;
    std::optional<Poly> orbit_;
};

/// One Galois class of a fiber: every point of the class has the same local
/// degree.  points_per_value is the number of class points lying over each
/// individual value of the value class, so that the fiber of any value v
/// satisfies sum(local_degree * points_per_value) = deg f.
struct FiberClass {
    bool at_infinity = false;
    Poly support;       // monic square-free; empty when at_infinity
    long local_degree = 0;
    long points_per_value = 0;

    long total_points() const { return at_infinity ? 1 : support.degree(); }
    std::string to_string() const;
};

struct RamificationPortrait {
    struct Entry {
        PointClass value;
        std::vector<FiberClass> fiber;
    };
    std::vector<Entry> entries;
};

/// A rational self-map of the projective line, kept in lowest terms with a
/// monic denominator (or denominator 1).
class RatMap {
  public:
    RatMap(Poly num, Poly den);

    static RatMap identity(const FieldPtr& field);
    static RatMap constant(const FieldElement& value);
    static RatMap from_poly(Poly p);
    /// z^k for k >= 0, 1/z^(-k) for k < 0.
    static RatMap monomial(const FieldPtr& field, long k);

    const FieldPtr& field() const { return field_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    long degree() const { return std::max(num_.degree(), den_.degree()); }
    bool is_constant() const { return degree() <= 0; }
    bool is_polynomial() const { return den_.degree() == 0; }

    Point eval(const Point& p) const;
    Point eval(const FieldElement& v) const { return eval(Point::finite(v)); }

    friend bool operator==(const RatMap& a, const RatMap& b) {
        require_same_field(a.field_, b.field_, "ratmap compare");
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatMap& a, const RatMap& b) { return !(a == b); }

    RatMap operator-() const;
    friend RatMap operator+(const RatMap& a, const RatMap& b);
    friend RatMap operator-(const RatMap& a, const RatMap& b);
    friend RatMap operator*(const RatMap& a, const RatMap& b);
    friend RatMap operator/(const RatMap& a, const RatMap& b);
    friend RatMap operator*(const FieldElement& s, const RatMap& f);

    /// Numerator of the derivative: num' den - num den'.
    Poly derivative_numerator() const;

    std::string to_string() const;

  private:
    FieldPtr field_;
    Poly num_, den_;
};

RatMap compose(const RatMap& outer, const RatMap& inner);
RatMap iterate(const RatMap& f, long k);

/// Inverse of a degree-one map.
RatMap mobius_inverse(const RatMap& mu);
/// mu^(-1) . f . mu for a degree-one mu.
RatMap mobius_conjugate(const RatMap& f, const RatMap& mu);

long local_degree(const RatMap& f, const Point& p);

/// Image of a Galois class under f (a single Galois class).
PointClass image_class(const RatMap& f, const PointClass& c);

/// Finite critical value classes plus infinity when ramified, every returned
/// class verified critical on its fiber.  Requires deg f >= 2.
std::vector<PointClass> critical_value_classes(const RatMap& f);

std::vector<FiberClass> fiber(const RatMap& f, const PointClass& value);

RamificationPortrait ramification_portrait(const RatMap& f);

/// Find V with B = V . U when it exists (deg U must divide deg B); the exact
/// linear system for the cross-multiplied coefficients is solved over the
/// field and the first reduced-echelon kernel vector is taken.
std::optional<RatMap> solve_left_factor(const RatMap& B, const RatMap& U);

/// Re-express a map with rational coefficients over an extension of Q.
RatMap lift_ratmap(const RatMap& f, const FieldPtr& target);

} // namespace orb

#endif
