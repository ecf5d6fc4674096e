#include "orb/orbimap.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace orb {

namespace {

struct Identity {
    long lhs, rhs;
    bool ok;
};

Identity evaluate_condition(MapCondition cond, long nu1, long nu2, long m) {
    switch (cond) {
        case MapCondition::covering: return {nu2, nu1 * m, nu2 == nu1 * m};
        case MapCondition::holomorphic: return {nu2, nu1 * m, (nu1 * m) % nu2 == 0};
        case MapCondition::minimal_holomorphic: {
            long rhs = nu1 * integer_gcd(m, nu2);
            return {nu2, rhs, nu2 == rhs};
        }
    }
    return {0, 0, false};
}

void add_witness(CheckReport& report, const std::string& value_class, const std::string& pre,
                 long m, long nu1, long nu2, const Identity& id) {
    report.witnesses.push_back({value_class, pre, m, nu1, nu2, id.lhs, id.rhs, id.ok});
    if (!id.ok && report.first_violation < 0)
        report.first_violation = static_cast<long>(report.witnesses.size()) - 1;
    report.verdict = report.verdict && id.ok;
}

} // namespace

std::string CheckReport::to_string() const {
    std::ostringstream os;
    os << (verdict ? "true" : "false");
    for (const auto& w : witnesses) {
        os << "\n  value " << w.value_class << ", preimage " << w.preimage_class << ": nu2=" << w.nu2
           << " nu1=" << w.nu1 << " deg=" << w.local_degree << " -> " << w.lhs
           << (w.ok ? " == " : " != ") << w.rhs;
    }
    return os.str();
}

CheckReport check_map(const RatMap& f, const Orbifold& o1, const Orbifold& o2, MapCondition cond) {
    require_same_field(f.field(), o1.field(), "check_map");
    require_same_field(f.field(), o2.field(), "check_map");
    require(f.degree() >= 1, errc::degree_too_small, "map condition needs degree >= 1");

    // The finite check set: singular classes of o2, critical value classes of
    // f, and the images of the singular classes of o1.  Everywhere else the
    // conditions hold with nu1 = nu2 = 1 and local degree 1.
    std::vector<PointClass> values;
    for (const auto& e : o2.entries()) values.push_back(e.support);
    if (f.degree() >= 2)
        for (const auto& v : critical_value_classes(f)) values.push_back(v);
    for (const auto& e : o1.entries()) values.push_back(image_class(f, e.support));
    std::sort(values.begin(), values.end(),
              [](const PointClass& a, const PointClass& b) { return compare(a, b) < 0; });
    values.erase(std::unique(values.begin(), values.end()), values.end());

    CheckReport report;
    for (const auto& v : values) {
        long nu2 = o2.nu_at(v);
        for (const auto& fc : fiber(f, v)) {
            if (fc.at_infinity) {
                long nu1 = o1.nu_at(PointClass::infinity(f.field()));
                add_witness(report, v.to_string(), "inf", fc.local_degree, nu1, nu2,
                            evaluate_condition(cond, nu1, nu2, fc.local_degree));
                continue;
            }
            Poly remaining = fc.support;
            for (const auto& e : o1.entries()) {
                if (e.support.kind() == PointClass::Kind::infinity) continue;
                if (remaining.degree() < 1) break;
                Poly g = poly_gcd(remaining, e.support.vanishing_poly());
                if (g.degree() >= 1) {
                    add_witness(report, v.to_string(), poly_to_string(g, "z"), fc.local_degree, e.nu,
                                nu2, evaluate_condition(cond, e.nu, nu2, fc.local_degree));
                    remaining = remaining / g;
                }
            }
            if (remaining.degree() >= 1)
                add_witness(report, v.to_string(), poly_to_string(remaining, "z"), fc.local_degree, 1,
                            nu2, evaluate_condition(cond, 1, nu2, fc.local_degree));
        }
    }
    return report;
}

CheckReport check_covering(const RatMap& f, const Orbifold& o1, const Orbifold& o2) {
    return check_map(f, o1, o2, MapCondition::covering);
}

CheckReport check_holomorphic(const RatMap& f, const Orbifold& o1, const Orbifold& o2) {
    return check_map(f, o1, o2, MapCondition::holomorphic);
}

CheckReport check_minimal_holomorphic(const RatMap& f, const Orbifold& o1, const Orbifold& o2) {
    return check_map(f, o1, o2, MapCondition::minimal_holomorphic);
}

CheckReport check_self(const RatMap& f, const Orbifold& o) {
    return check_minimal_holomorphic(f, o, o);
}

namespace {

void push_support_classes(std::vector<Orbifold::Entry>& entries, const FiberClass& fc, long nu,
                          const FieldPtr& field) {
    if (fc.at_infinity) {
        entries.push_back({PointClass::infinity(field), nu});
        return;
    }
    for (const auto& cls : split_into_classes(fc.support)) {
        if (cls.degree() == 1)
            entries.push_back({PointClass::point(-cls.coeff_or_zero(0, cls.leading())), nu});
        else
            entries.push_back({PointClass::orbit(cls), nu});
    }
}

} // namespace

Orbifold pullback(const RatMap& f, const Orbifold& o2) {
    require_same_field(f.field(), o2.field(), "pullback");
    require(f.degree() >= 1, errc::degree_too_small, "pullback needs degree >= 1");
    std::vector<Orbifold::Entry> entries;
    for (const auto& e : o2.entries()) {
        for (const auto& fc : fiber(f, e.support)) {
            long nu1 = e.nu / integer_gcd(fc.local_degree, e.nu);
            if (nu1 > 1) push_support_classes(entries, fc, nu1, f.field());
        }
    }
    return Orbifold::trusted(f.field(), std::move(entries));
}

std::pair<Orbifold, Orbifold> induced_orbifolds(const RatMap& f) {
    require(f.degree() >= 2, errc::degree_too_small, "induced orbifolds need degree >= 2");
    std::vector<Orbifold::Entry> up, down;
    for (const auto& v : critical_value_classes(f)) {
        auto fb = fiber(f, v);
        long l = 1;
        for (const auto& fc : fb) l = integer_lcm(l, fc.local_degree);
        down.push_back({v, l});
        for (const auto& fc : fb) {
            long nu1 = l / fc.local_degree;
            if (nu1 > 1) push_support_classes(up, fc, nu1, f.field());
        }
    }
    return {Orbifold::trusted(f.field(), std::move(up)), Orbifold::trusted(f.field(), std::move(down))};
}

RiemannHurwitzReport riemann_hurwitz_check(const RatMap& f, const Orbifold& o1, const Orbifold& o2) {
    auto holo = check_holomorphic(f, o1, o2);
    require(holo.verdict, errc::not_holomorphic, "riemann_hurwitz_check needs a holomorphic map");
    RiemannHurwitzReport rep{chi(o1), chi(o2) * Rational(f.degree()), false};
    rep.is_covering = check_covering(f, o1, o2).verdict;
    require(rep.lhs <= rep.rhs, errc::verification_failure, "chi inequality violated");
    require((rep.lhs == rep.rhs) == rep.is_covering, errc::verification_failure,
            "chi equality does not match the covering verdict");
    return rep;
}

} // namespace orb
