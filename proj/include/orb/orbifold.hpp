#ifndef ORB_ORBIFOLD_HPP
#define ORB_ORBIFOLD_HPP

#include <string>
#include <vector>

#include "orb/ratmap.hpp"

namespace orb {

/// An orbifold on the projective line over a number field: a finite list of
/// disjoint singular classes with ramification indices nu >= 2, kept in
/// canonical order (infinity, finite points, then orbit classes).  The empty
/// list is the non-ramified sphere.
class Orbifold {
  public:
    struct Entry {
        PointClass support;
        long nu;
    };

    /// Verifies nu >= 2 per entry, pairwise disjoint supports, and the
    /// irreducibility of every orbit polynomial over the base field.
    Orbifold(FieldPtr field, std::vector<Entry> entries);
    /// Construction path for supports that are already known to be
    /// irreducible classes (fiber splits, factorization output).
    static Orbifold trusted(FieldPtr field, std::vector<Entry> entries);

    static Orbifold sphere(FieldPtr field) { return Orbifold(std::move(field), {}); }
    /// Shorthand for rational singular points: {value or "inf" -> nu}.
    static Orbifold from_points(const FieldPtr& field,
                                const std::vector<std::pair<std::string, long>>& spec);

    const FieldPtr& field() const { return field_; }
    const std::vector<Entry>& entries() const { return entries_; }
    bool is_sphere() const { return entries_.empty(); }

    long nu_at(const PointClass& c) const;
    long nu_at_point(const Point& p) const;
    /// Number of singular points counted with class degrees.
    long singular_point_count() const;

    friend bool operator==(const Orbifold& a, const Orbifold& b);
    friend bool operator!=(const Orbifold& a, const Orbifold& b) { return !(a == b); }

    std::string to_string() const;

  private:
    Orbifold(FieldPtr field, std::vector<Entry> entries, bool verify);
    FieldPtr field_;
    std::vector<Entry> entries_;
};

/// chi(O) = 2 + sum over singular points of (1/nu - 1), exact.
Rational chi(const Orbifold& o);

/// The multiset of nu values, one per singular point (orbit classes repeat
/// their nu once per conjugate), ascending.
std::vector<long> signature(const Orbifold& o);

/// False exactly for one singular point or two singular points with unequal nu.
bool is_good(const Orbifold& o);

/// nu1(z) divides nu2(z) everywhere.
bool preceq(const Orbifold& o1, const Orbifold& o2);

/// Pointwise least common multiple of the ramification functions.
Orbifold lcm_orbifolds(const std::vector<Orbifold>& os);

/// Helper predicate of the paper's signature comparison: every nu of o1
/// divides some nu of o2 (test support only, not part of the lattice API).
bool signature_leq(const Orbifold& o1, const Orbifold& o2);

/// Re-express an orbifold over an extension field; generator_image is the
/// image of the base-field generator (ignored when the base field is Q).
Orbifold lift_orbifold(const Orbifold& o, const FieldPtr& target, const FieldElement& generator_image);

} // namespace orb

#endif
