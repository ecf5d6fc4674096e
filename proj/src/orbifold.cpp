#include "orb/orbifold.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace orb {

namespace {

bool entry_less(const Orbifold::Entry& a, const Orbifold::Entry& b) {
    return compare(a.support, b.support) < 0;
}

} // namespace

Orbifold::Orbifold(FieldPtr field, std::vector<Entry> entries) : Orbifold(std::move(field), std::move(entries), true) {}

Orbifold Orbifold::trusted(FieldPtr field, std::vector<Entry> entries) {
    return Orbifold(std::move(field), std::move(entries), false);
}

Orbifold::Orbifold(FieldPtr field, std::vector<Entry> entries, bool verify)
    : field_(std::move(field)), entries_(std::move(entries)) {
    for (const auto& e : entries_) {
        require(e.nu >= 2, errc::bad_params, "ramification index must be >= 2");
        require_same_field(e.support.field(), field_, "orbifold entry");
    }
    std::sort(entries_.begin(), entries_.end(), entry_less);
    for (size_t i = 0; i + 1 < entries_.size(); ++i)
        require(compare(entries_[i].support, entries_[i + 1].support) != 0, errc::bad_params,
                "duplicate singular support");
    if (verify) {
        for (const auto& e : entries_)
            if (e.support.kind() == PointClass::Kind::orbit)
                require(is_irreducible_over_field(e.support.orbit_poly()), errc::bad_params,
                        "orbit support must be irreducible over the base field");
        // distinct irreducible monic polynomials are automatically coprime and
        // no field point is a root of an irreducible of degree >= 2, so sorted
        // uniqueness already gives disjoint supports
    }
}

Orbifold Orbifold::from_points(const FieldPtr& field,
                               const std::vector<std::pair<std::string, long>>& spec) {
    std::vector<Entry> entries;
    for (const auto& [name, nu] : spec) {
        if (name == "inf")
            entries.push_back({PointClass::infinity(field), nu});
        else
            entries.push_back({PointClass::point(field->from_rational(rational_from_string(name))), nu});
    }
    return Orbifold(field, std::move(entries));
}

long Orbifold::nu_at(const PointClass& c) const {
    for (const auto& e : entries_)
        if (compare(e.support, c) == 0) return e.nu;
    return 1;
}

long Orbifold::nu_at_point(const Point& p) const {
    for (const auto& e : entries_) {
        switch (e.support.kind()) {
            case PointClass::Kind::infinity:
                if (p.is_infinity()) return e.nu;
                break;
            case PointClass::Kind::point:
                if (!p.is_infinity() && e.support.point_value() == p.value()) return e.nu;
                break;
            case PointClass::Kind::orbit:
                if (!p.is_infinity() && e.support.orbit_poly().eval(p.value()).is_zero()) return e.nu;
                break;
        }
    }
    return 1;
}

long Orbifold::singular_point_count() const {
    long n = 0;
    for (const auto& e : entries_) n += e.support.point_count();
    return n;
}

bool operator==(const Orbifold& a, const Orbifold& b) {
    require_same_field(a.field_, b.field_, "orbifold compare");
    if (a.entries_.size() != b.entries_.size()) return false;
    for (size_t i = 0; i < a.entries_.size(); ++i) {
        if (a.entries_[i].nu != b.entries_[i].nu) return false;
        if (compare(a.entries_[i].support, b.entries_[i].support) != 0) return false;
    }
    return true;
}

std::string Orbifold::to_string() const {
    if (entries_.empty()) return "{}";
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& e : entries_) {
        if (!first) os << ", ";
        first = false;
        os << e.support.to_string() << ":" << e.nu;
    }
    os << "}";
    return os.str();
}

Rational chi(const Orbifold& o) {
    Rational acc(2);
    for (const auto& e : o.entries()) {
        Rational term = Rational(1, e.nu) - 1;
        acc += Rational(e.support.point_count()) * term;
    }
    return acc;
}

std::vector<long> signature(const Orbifold& o) {
    std::vector<long> sig;
    for (const auto& e : o.entries())
        for (long i = 0; i < e.support.point_count(); ++i) sig.push_back(e.nu);
    std::sort(sig.begin(), sig.end());
    return sig;
}

bool is_good(const Orbifold& o) {
    long points = o.singular_point_count();
    if (points == 0 || points >= 3) return true;
    if (points == 1) return false;
    auto sig = signature(o);
    return sig[0] == sig[1];
}

bool preceq(const Orbifold& o1, const Orbifold& o2) {
    require_same_field(o1.field(), o2.field(), "preceq");
    for (const auto& e : o1.entries()) {
        long nu2 = o2.nu_at(e.support);
        if (nu2 % e.nu != 0) return false;
    }
    return true;
}

Orbifold lcm_orbifolds(const std::vector<Orbifold>& os) {
    require(!os.empty(), errc::bad_params, "lcm of an empty orbifold list");
    const FieldPtr& field = os.front().field();
    std::vector<Orbifold::Entry> merged;
    for (const auto& o : os) {
        require_same_field(o.field(), field, "lcm_orbifolds");
        for (const auto& e : o.entries()) {
            bool found = false;
            for (auto& m : merged)
                if (compare(m.support, e.support) == 0) {
                    m.nu = integer_lcm(m.nu, e.nu);
                    found = true;
                    break;
                }
            if (!found) merged.push_back(e);
        }
    }
    return Orbifold::trusted(field, std::move(merged));
}

bool signature_leq(const Orbifold& o1, const Orbifold& o2) {
    auto s2 = signature(o2);
    for (long nu : signature(o1)) {
        bool ok = std::any_of(s2.begin(), s2.end(), [nu](long m) { return m % nu == 0; });
        if (!ok) return false;
    }
    return true;
}

Orbifold lift_orbifold(const Orbifold& o, const FieldPtr& target, const FieldElement& generator_image) {
    require_same_field(generator_image.field(), target, "lift_orbifold");
    auto lift_element = [&](const FieldElement& x) {
        // evaluate the coordinate polynomial of x at the generator image
        FieldElement acc = target->zero();
        for (size_t i = x.coords().size(); i-- > 0;)
            acc = acc * generator_image + target->from_rational(x.coords()[i]);
        return acc;
    };
    std::vector<Orbifold::Entry> entries;
    for (const auto& e : o.entries()) {
        switch (e.support.kind()) {
            case PointClass::Kind::infinity:
                entries.push_back({PointClass::infinity(target), e.nu});
                break;
            case PointClass::Kind::point:
                entries.push_back({PointClass::point(lift_element(e.support.point_value())), e.nu});
                break;
            case PointClass::Kind::orbit: {
                std::vector<FieldElement> coeffs;
                for (const auto& c : e.support.orbit_poly().coeffs()) coeffs.push_back(lift_element(c));
                Poly lifted{std::move(coeffs)};
                for (const auto& cls : split_into_classes(lifted)) {
                    if (cls.degree() == 1)
                        entries.push_back({PointClass::point(-cls.coeff_or_zero(0, cls.leading())), e.nu});
                    else
                        entries.push_back({PointClass::orbit(cls), e.nu});
                }
                break;
            }
        }
    }
    return Orbifold::trusted(target, std::move(entries));
}

} // namespace orb
