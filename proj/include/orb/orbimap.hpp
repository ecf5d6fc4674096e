#ifndef ORB_ORBIMAP_HPP
#define ORB_ORBIMAP_HPP

#include <string>
#include <vector>

#include "orb/orbifold.hpp"

namespace orb {

enum class MapCondition {
    covering,            // nu2(f(z)) = nu1(z) deg_z f
    holomorphic,         // nu2(f(z)) | nu1(z) deg_z f
    minimal_holomorphic, // nu2(f(z)) = nu1(z) gcd(deg_z f, nu2(f(z)))
};

/// Verdict plus one witness per checked (value class, preimage class) pair;
/// the witnesses cover the full finite check set.
struct CheckReport {
    struct Witness {
        std::string value_class;
        std::string preimage_class;
        long local_degree;
        long nu1;
        long nu2;
        long lhs;
        long rhs;
        bool ok;
    };
    bool verdict = true;
    std::vector<Witness> witnesses;
    long first_violation = -1; // index into witnesses, -1 when verdict holds

    std::string to_string() const;
};

CheckReport check_map(const RatMap& f, const Orbifold& o1, const Orbifold& o2, MapCondition cond);

CheckReport check_covering(const RatMap& f, const Orbifold& o1, const Orbifold& o2);
CheckReport check_holomorphic(const RatMap& f, const Orbifold& o1, const Orbifold& o2);
CheckReport check_minimal_holomorphic(const RatMap& f, const Orbifold& o1, const Orbifold& o2);
/// The self-map form of the minimal-holomorphy condition.
CheckReport check_self(const RatMap& f, const Orbifold& o);

/// The unique orbifold making f minimal holomorphic into o2.
Orbifold pullback(const RatMap& f, const Orbifold& o2);

/// (O1f, O2f): nu2f(v) is the lcm of local degrees over the fiber of v,
/// nu1f(z) = nu2f(f(z)) / deg_z f; f: O1f -> O2f is a covering map.
std::pair<Orbifold, Orbifold> induced_orbifolds(const RatMap& f);

struct RiemannHurwitzReport {
    Rational lhs; // chi(O1)
    Rational rhs; // chi(O2) * deg f
    bool is_covering;
};

/// Requires f: O1 -> O2 holomorphic; reports chi(O1) against chi(O2) deg f.
RiemannHurwitzReport riemann_hurwitz_check(const RatMap& f, const Orbifold& o1, const Orbifold& o2);

} // namespace orb

#endif
