#include "orb/lattes.hpp"

#include <algorithm>
#include <thread>

namespace orb {

const char* gl_tag_name(GLTag t) {
    switch (t) {
        case GLTag::not_generalized_lattes: return "NotGeneralizedLattes";
        case GLTag::generalized_lattes: return "GeneralizedLattes";
        case GLTag::ordinary_lattes: return "OrdinaryLattes";
        case GLTag::power_conjugate: return "PowerConjugate";
        case GLTag::chebyshev_conjugate: return "ChebyshevConjugate";
    }
    return "?";
}

namespace {

// Totally ramified loci as Galois classes (local degree = deg A).
std::vector<PointClass> totally_ramified_classes(const RatMap& A) {
    std::vector<PointClass> out;
    for (const auto& entry : ramification_portrait(A).entries) {
        for (const auto& fc : entry.fiber) {
            if (fc.local_degree != A.degree()) continue;
            if (fc.at_infinity) {
                out.push_back(PointClass::infinity(A.field()));
            } else {
                for (const auto& cls : split_into_classes(fc.support)) {
                    if (cls.degree() == 1)
                        out.push_back(PointClass::point(-cls.coeff_or_zero(0, cls.leading())));
                    else
                        out.push_back(PointClass::orbit(cls));
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const PointClass& a, const PointClass& b) { return compare(a, b) < 0; });
    return out;
}

std::optional<std::pair<FieldElement, long>> as_monomial(const Poly& p) {
    if (p.is_zero()) return std::nullopt;
    for (long i = 0; i < p.degree(); ++i)
        if (!p.coeff_or_zero(i, p.leading()).is_zero()) return std::nullopt;
    return std::make_pair(p.leading(), p.degree());
}

RatMap mobius_through(const Point& at_zero, const Point& at_infinity) {
    const FieldPtr& K = at_zero.field();
    if (at_zero.is_infinity()) {
        // z -> (b z + 1) / z
        require(!at_infinity.is_infinity(), errc::bad_params, "degenerate Moebius request");
        return RatMap(Poly(std::vector<FieldElement>{K->one(), at_infinity.value()}),
                      poly_from_longs(K, {0, 1}));
    }
    if (at_infinity.is_infinity()) return RatMap(Poly(std::vector<FieldElement>{at_zero.value(), K->one()}),
                                                 Poly::constant(K->one()));
    // z -> (b z + a) / (z + 1)
    return RatMap(Poly(std::vector<FieldElement>{at_zero.value(), at_infinity.value()}),
                  Poly(std::vector<FieldElement>{K->one(), K->one()}));
}

// lambda with lambda^e = rhs, extending Q by a radical when necessary.
// Returns the scale and the (possibly extended) field, with A lifted there.
struct ScaleResult {
    FieldElement lambda;
    RatMap A;
    RatMap mu0;
};

std::optional<ScaleResult> solve_radical(const RatMap& A, const RatMap& mu0, long e,
                                         const FieldElement& rhs) {
    const FieldPtr& K = A.field();
    Poly xe = Poly::monomial(K->one(), e) - Poly::constant(rhs);
    auto roots = roots_in_field(xe);
    if (!roots.empty()) return ScaleResult{roots.front(), A, mu0};
    if (!K->is_rationals()) return std::nullopt;
    auto fac = factor_over_field(xe);
    for (const auto& f : fac.factors) {
        if (f.factor.degree() < 2) continue;
        FieldPtr E = NumberField::extension(rational_poly(f.factor), "r");
        return ScaleResult{E->generator(), lift_ratmap(A, E), lift_ratmap(mu0, E)};
    }
    return std::nullopt;
}

std::optional<ConjugacyWitness> detect_power_over(const RatMap& A0, const Point& s1, const Point& s2) {
    long d = A0.degree();
    // the totally ramified pair must be invariant
    Point i1 = A0.eval(s1), i2 = A0.eval(s2);
    bool fixes = (i1 == s1 && i2 == s2);
    bool swaps = (i1 == s2 && i2 == s1);
    if (!fixes && !swaps) return std::nullopt;

    RatMap mu0 = mobius_through(s1, s2);
    RatMap C = mobius_conjugate(A0, mu0);
    auto mono_num = as_monomial(C.num());
    auto mono_den = as_monomial(C.den());
    if (!mono_num || !mono_den) return std::nullopt;
    int sign;
    FieldElement c = mono_num->first / mono_den->first;
    if (mono_num->second == d && mono_den->second == 0)
        sign = 1;
    else if (mono_num->second == 0 && mono_den->second == d)
        sign = -1;
    else
        return std::nullopt;

    long e = sign > 0 ? d - 1 : d + 1;
    FieldElement rhs = sign > 0 ? c.inverse() : c;
    auto scaled = solve_radical(A0, mu0, e, rhs);
    if (!scaled) return std::nullopt;
    const FieldPtr& K = scaled->A.field();
    RatMap rescale(Poly(std::vector<FieldElement>{K->zero(), scaled->lambda}), Poly::constant(K->one()));
    RatMap mu = compose(scaled->mu0, rescale);
    RatMap canonical = RatMap::monomial(K, sign > 0 ? d : -d);
    if (mobius_conjugate(scaled->A, mu) != canonical) return std::nullopt;
    return ConjugacyWitness{mu, sign, d, canonical};
}

} // namespace

std::optional<ConjugacyWitness> detect_power_conjugacy(const RatMap& A) {
    require(A.degree() >= 2, errc::degree_too_small, "conjugacy detection needs degree >= 2");
    auto classes = totally_ramified_classes(A);
    long points = 0;
    for (const auto& c : classes) points += c.point_count();
    if (points != 2) return std::nullopt;

    if (classes.size() == 2)
        return detect_power_over(
            A,
            classes[0].kind() == PointClass::Kind::infinity ? Point::infinity(A.field())
                                                            : Point::finite(classes[0].point_value()),
            classes[1].kind() == PointClass::Kind::infinity ? Point::infinity(A.field())
                                                            : Point::finite(classes[1].point_value()));

    // a single quadratic orbit class: split it over an extension of Q
    const PointClass& orbit = classes.front();
    if (orbit.kind() != PointClass::Kind::orbit || !A.field()->is_rationals()) return std::nullopt;
    const Poly& q = orbit.orbit_poly();
    FieldPtr E = NumberField::extension(rational_poly(q), "s");
    RatMap AE = lift_ratmap(A, E);
    FieldElement r1 = E->generator();
    FieldElement r2 = -lift_to_field(rational_poly(q), E).coeff_or_zero(1, E->zero()) - r1;
    return detect_power_over(AE, Point::finite(r1), Point::finite(r2));
}

namespace {

std::optional<ConjugacyWitness> chebyshev_from_pivot(const RatMap& A, const Point& pivot) {
    long d = A.degree();
    const FieldPtr& K0 = A.field();
    RatMap mu1 = pivot.is_infinity() ? RatMap::identity(K0) : mobius_through(Point::infinity(K0), pivot);
    RatMap A1 = mobius_conjugate(A, mu1);
    if (!A1.is_polynomial()) return std::nullopt;

    // finite critical values of the normalized polynomial
    std::vector<PointClass> finite;
    for (const auto& v : critical_value_classes(A1))
        if (v.kind() != PointClass::Kind::infinity) finite.push_back(v);

    struct Frame {
        RatMap A1, mu1;
        FieldElement w1, w2;
    };
    std::vector<Frame> frames;
    const FieldPtr& K = A1.field();
    if (finite.size() == 2 && finite[0].kind() == PointClass::Kind::point &&
        finite[1].kind() == PointClass::Kind::point) {
        frames.push_back({A1, mu1, finite[0].point_value(), finite[1].point_value()});
        frames.push_back({A1, mu1, finite[1].point_value(), finite[0].point_value()});
    } else if (finite.size() == 1 && finite[0].kind() == PointClass::Kind::orbit &&
               finite[0].orbit_poly().degree() == 2 && K->is_rationals()) {
        const Poly& q = finite[0].orbit_poly();
        FieldPtr E = NumberField::extension(rational_poly(q), "w");
        RatMap A1E = lift_ratmap(A1, E);
        RatMap mu1E = lift_ratmap(mu1, E);
        FieldElement r1 = E->generator();
        FieldElement r2 = -lift_to_field(rational_poly(q), E).coeff_or_zero(1, E->zero()) - r1;
        frames.push_back({A1E, mu1E, r1, r2});
        frames.push_back({A1E, mu1E, r2, r1});
    } else if (finite.size() == 1 && finite[0].kind() == PointClass::Kind::point && d == 2) {
        // degree two has a single finite critical value; aim it at -1 or 1
        const FieldPtr& F = A1.field();
        FieldElement a2 = A1.num().coeff_or_zero(2, F->zero());
        FieldElement w = finite[0].point_value();
        for (int sign : {1, -1}) {
            FieldElement alpha = sign > 0 ? a2 / F->from_long(2) : -(a2 / F->from_long(2));
            FieldElement beta = (sign > 0 ? -F->one() : F->one()) - alpha * w;
            RatMap sigma(Poly(std::vector<FieldElement>{beta, alpha}), Poly::constant(F->one()));
            RatMap B = mobius_conjugate(A1, mobius_inverse(sigma));
            RatMap target = sign > 0 ? chebyshev(2, F) : -chebyshev(2, F);
            if (B == target) {
                RatMap mu = compose(mu1, mobius_inverse(sigma));
                if (mobius_conjugate(A, mu) == target) return ConjugacyWitness{mu, sign, 2, target};
            }
        }
        return std::nullopt;
    } else {
        return std::nullopt;
    }

    for (const auto& fr : frames) {
        const FieldPtr& F = fr.A1.field();
        // affine sigma with sigma(w1) = -1, sigma(w2) = 1
        FieldElement span = fr.w2 - fr.w1;
        if (span.is_zero()) continue;
        FieldElement alpha = F->from_long(2) / span;
        FieldElement beta = -F->one() - alpha * fr.w1;
        RatMap sigma(Poly(std::vector<FieldElement>{beta, alpha}), Poly::constant(F->one()));
        RatMap B = mobius_conjugate(fr.A1, mobius_inverse(sigma));
        RatMap td = chebyshev(d, F);
        for (int sign : {1, -1}) {
            RatMap target = sign > 0 ? td : -td;
            if (B == target) {
                RatMap mu = compose(fr.mu1, mobius_inverse(sigma));
                RatMap A_here = same_field(F, A.field()) ? A : lift_ratmap(A, F);
                if (mobius_conjugate(A_here, mu) == target) return ConjugacyWitness{mu, sign, d, target};
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<ConjugacyWitness> detect_chebyshev_conjugacy(const RatMap& A) {
    require(A.degree() >= 2, errc::degree_too_small, "conjugacy detection needs degree >= 2");
    // exactly one totally ramified fixed point, necessarily rational over the base
    std::vector<Point> fixed;
    for (const auto& c : totally_ramified_classes(A)) {
        if (c.kind() == PointClass::Kind::orbit) continue;
        Point p = c.kind() == PointClass::Kind::infinity ? Point::infinity(A.field())
                                                         : Point::finite(c.point_value());
        if (A.eval(p) == p) fixed.push_back(p);
    }
    if (fixed.size() != 1) return std::nullopt;
    return chebyshev_from_pivot(A, fixed.front());
}

RatMap chebyshev(long n, const FieldPtr& field) {
    require(n >= 0, errc::bad_params, "chebyshev index must be nonnegative");
    Poly t0 = Poly::constant(field->one());
    if (n == 0) return RatMap::from_poly(t0);
    Poly t1 = poly_from_longs(field, {0, 1});
    if (n == 1) return RatMap::from_poly(t1);
    Poly twoz = poly_from_longs(field, {0, 2});
    for (long i = 2; i <= n; ++i) {
        Poly t2 = twoz * t1 - t0;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return RatMap::from_poly(t1);
}

namespace {

bool signature_admissible(std::vector<long> sig, long deg) {
    std::sort(sig.begin(), sig.end());
    static const std::vector<std::vector<long>> fixed = {
        {2, 2, 2, 2}, {3, 3, 3}, {2, 4, 4}, {2, 3, 6}, {2, 3, 3}, {2, 3, 4}, {2, 3, 5}};
    for (const auto& f : fixed)
        if (sig == f) return true;
    if (sig.size() == 2 && sig[0] == sig[1] && sig[0] >= 2 && sig[0] <= deg) return true;
    if (sig.size() == 3 && sig[0] == 2 && sig[1] == 2 && sig[2] >= 2 && sig[2] <= deg - 1) return true;
    return false;
}

void enumerate_candidates(const std::vector<PointClass>& slots, size_t idx, long used_points,
                          long numax, long deg, std::vector<std::pair<size_t, long>>& chosen,
                          std::vector<Orbifold>& out, const FieldPtr& field) {
    if (idx == slots.size()) {
        if (chosen.empty()) return;
        std::vector<long> sig;
        std::vector<Orbifold::Entry> entries;
        for (const auto& [slot, nu] : chosen) {
            for (long i = 0; i < slots[slot].point_count(); ++i) sig.push_back(nu);
            entries.push_back({slots[slot], nu});
        }
        if (signature_admissible(sig, deg)) out.push_back(Orbifold::trusted(field, std::move(entries)));
        return;
    }
    enumerate_candidates(slots, idx + 1, used_points, numax, deg, chosen, out, field); // nu = 1
    long pts = slots[idx].point_count();
    if (used_points + pts <= 4) {
        for (long nu = 2; nu <= numax; ++nu) {
            chosen.push_back({idx, nu});
            enumerate_candidates(slots, idx + 1, used_points + pts, numax, deg, chosen, out, field);
            chosen.pop_back();
        }
    }
}

void add_class(std::vector<PointClass>& classes, const PointClass& c) {
    for (const auto& existing : classes)
        if (compare(existing, c) == 0) return;
    classes.push_back(c);
}

} // namespace

CandidateSet candidate_orbifolds(const RatMap& A) {
    require(A.degree() >= 2, errc::degree_too_small, "candidate search needs degree >= 2");
    std::vector<PointClass> classes = critical_value_classes(A);
    bool complete = A.degree() >= 5;
    if (!complete) {
        // below degree five extend supports by preimage classes to depth two
        std::vector<PointClass> frontier = classes;
        for (int depth = 0; depth < 2; ++depth) {
            std::vector<PointClass> next;
            for (const auto& v : frontier) {
                for (const auto& fc : fiber(A, v)) {
                    if (fc.at_infinity) {
                        add_class(next, PointClass::infinity(A.field()));
                        continue;
                    }
                    for (const auto& cls : split_into_classes(fc.support)) {
                        if (cls.degree() == 1)
                            add_class(next, PointClass::point(-cls.coeff_or_zero(0, cls.leading())));
                        else
                            add_class(next, PointClass::orbit(cls));
                    }
                }
            }
            for (const auto& c : next) add_class(classes, c);
            frontier = std::move(next);
        }
    }
    std::sort(classes.begin(), classes.end(),
              [](const PointClass& a, const PointClass& b) { return compare(a, b) < 0; });
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

    CandidateSet out;
    out.complete = complete;
    long numax = std::max<long>(A.degree(), 6);
    std::vector<std::pair<size_t, long>> chosen;
    enumerate_candidates(classes, 0, 0, numax, A.degree(), chosen, out.candidates, A.field());
    return out;
}

namespace {

std::vector<char> parallel_verdicts(const RatMap& A, const std::vector<Orbifold>& candidates, int jobs) {
    std::vector<char> ok(candidates.size(), 0);
    auto work = [&](size_t begin, size_t step) {
        for (size_t i = begin; i < candidates.size(); i += step)
            ok[i] = check_self(A, candidates[i]).verdict ? 1 : 0;
    };
    if (jobs <= 1 || candidates.size() < 2) {
        work(0, 1);
    } else {
        size_t n = std::min<size_t>(static_cast<size_t>(jobs), candidates.size());
        std::vector<std::thread> pool;
        for (size_t t = 0; t < n; ++t) pool.emplace_back(work, t, n);
        for (auto& th : pool) th.join();
    }
    return ok;
}

} // namespace

Classification find_O0(const RatMap& A, int jobs) {
    require(A.degree() >= 2, errc::degree_too_small, "classification needs degree >= 2");
    if (auto w = detect_power_conjugacy(A))
        return Classification{GLTag::power_conjugate, std::nullopt, std::nullopt, std::move(w), true, {}};
    if (auto w = detect_chebyshev_conjugacy(A))
        return Classification{GLTag::chebyshev_conjugate, std::nullopt, std::nullopt, std::move(w), true, {}};

    auto cs = candidate_orbifolds(A);
    auto ok = parallel_verdicts(A, cs.candidates, jobs);
    Classification out;
    out.complete = cs.complete;
    for (size_t i = 0; i < cs.candidates.size(); ++i)
        if (ok[i]) out.passing.push_back(cs.candidates[i]);
    if (out.passing.empty()) {
        out.tag = GLTag::not_generalized_lattes;
        return out;
    }
    Orbifold o0 = lcm_orbifolds(out.passing);
    require(check_self(A, o0).verdict, errc::verification_failure,
            "LCM of passing candidates failed the self-map re-check");
    Rational c = chi(o0);
    require(sgn(c.get_num()) >= 0, errc::verification_failure, "maximal orbifold has negative chi");
    out.o0 = std::move(o0);
    out.chi0 = c;
    out.tag = is_zero(c) ? GLTag::ordinary_lattes : GLTag::generalized_lattes;
    return out;
}

bool iterate_stability_check(const RatMap& A, long l, int jobs) {
    require(l >= 2, errc::bad_params, "iterate_stability_check needs l >= 2");
    Classification base = find_O0(A, jobs);
    Classification power = find_O0(iterate(A, l), jobs);
    if (base.tag != power.tag) return false;
    if (base.o0.has_value() != power.o0.has_value()) return false;
    if (base.o0 && *base.o0 != *power.o0) return false;
    return true;
}

namespace {

RatMap ratmap_pow(const RatMap& f, long n) {
    require(n >= 1, errc::bad_params, "ratmap power needs n >= 1");
    RatMap out = f;
    for (long i = 1; i < n; ++i) out = out * f;
    return out;
}

bool commutes_with_inversion(const RatMap& R) {
    RatMap inv = RatMap::monomial(R.field(), -1);
    RatMap prod = R * compose(R, inv);
    return prod == RatMap::constant(R.field()->one());
}

RatMap dihedral_theta(const FieldPtr& K, long n) {
    // (z^(2n) + 1) / (2 z^n)
    Poly num = Poly::monomial(K->one(), 2 * n) + Poly::constant(K->one());
    Poly den = Poly::monomial(K->from_long(2), n);
    return RatMap(std::move(num), std::move(den));
}

} // namespace

std::pair<RatMap, RatMap> gen_nn(const FamilyParams& p) {
    require(p.n >= 2, errc::bad_params, "gen_nn needs n >= 2");
    require(p.r >= 1, errc::bad_params, "gen_nn needs r >= 1");
    require(integer_gcd(p.r, p.n) == 1, errc::bad_params, "gen_nn needs gcd(r, n) = 1");
    const FieldPtr& K = p.R.field();
    require(!p.R.num().is_zero(), errc::bad_params, "gen_nn needs a nonzero R");
    RatMap zn = RatMap::monomial(K, p.n);
    RatMap A = RatMap::monomial(K, p.r) * ratmap_pow(p.R, p.n);
    RatMap F = RatMap::monomial(K, p.r) * compose(p.R, zn);
    require(A.degree() >= 2, errc::bad_params, "gen_nn produced a degenerate map of degree < 2");
    require(compose(A, zn) == compose(zn, F), errc::verification_failure, "gen_nn semiconjugacy failed");
    Orbifold o = Orbifold::from_points(K, {{"0", p.n}, {"inf", p.n}});
    require(check_self(A, o).verdict, errc::verification_failure, "gen_nn self-map check failed");
    return {A, F};
}

std::pair<RatMap, RatMap> gen_22n(const FamilyParams& p) {
    require(p.n > 2, errc::bad_params, "gen_22n needs n > 2");
    require(p.r >= 1, errc::bad_params, "gen_22n needs r >= 1");
    require(integer_gcd(p.r, p.n) == 1, errc::bad_params, "gen_22n needs gcd(r, n) = 1");
    const FieldPtr& K = p.R.field();
    require(commutes_with_inversion(p.R), errc::bad_params, "gen_22n needs R commuting with 1/z");
    require(p.epsilon.pow(2 * p.n).is_one(), errc::bad_params, "gen_22n needs epsilon^(2n) = 1");
    RatMap zn = RatMap::monomial(K, p.n);
    RatMap F = p.epsilon * (RatMap::monomial(K, p.r) * compose(p.R, zn));
    RatMap theta = dihedral_theta(K, p.n);
    auto A = solve_left_factor(compose(theta, F), theta);
    require(A.has_value(), errc::verification_failure, "gen_22n descent failed");
    require(A->degree() >= 2, errc::bad_params, "gen_22n produced a degenerate map of degree < 2");
    require(compose(*A, theta) == compose(theta, F), errc::verification_failure,
            "gen_22n semiconjugacy failed");
    Orbifold o = Orbifold::from_points(K, {{"-1", 2}, {"1", 2}, {"inf", p.n}});
    require(check_self(*A, o).verdict, errc::verification_failure, "gen_22n self-map check failed");
    return {*A, F};
}

std::pair<RatMap, RatMap> gen_chebyshev_pair(const FamilyParams& p) {
    require(p.n > 2, errc::bad_params, "gen_chebyshev_pair needs n > 2");
    require(p.r >= 1, errc::bad_params, "gen_chebyshev_pair needs r >= 1");
    require(integer_gcd(p.r, p.n) == 1, errc::bad_params, "gen_chebyshev_pair needs gcd(r, n) = 1");
    const FieldPtr& K = p.R.field();
    require(commutes_with_inversion(p.R), errc::bad_params,
            "gen_chebyshev_pair needs R commuting with 1/z");
    RatMap eta = dihedral_theta(K, 1); // (z + 1/z) / 2
    RatMap zn = RatMap::monomial(K, p.n);
    RatMap F = RatMap::monomial(K, p.r) * compose(p.R, zn);
    RatMap G = RatMap::monomial(K, p.r) * ratmap_pow(p.R, p.n);
    auto B = solve_left_factor(compose(eta, F), eta);
    auto A = solve_left_factor(compose(eta, G), eta);
    require(A.has_value() && B.has_value(), errc::verification_failure,
            "gen_chebyshev_pair descent failed");
    RatMap tn = chebyshev(p.n, K);
    require(compose(*A, tn) == compose(tn, *B), errc::verification_failure,
            "gen_chebyshev_pair semiconjugacy failed");
    return {*A, *B};
}

ElementaryTransform elementary_transform(const RatMap& B, const RatMap& U) {
    auto V = solve_left_factor(B, U);
    require(V.has_value(), errc::no_factorization, "B has no left factor over the supplied U");
    return {compose(U, *V), *V};
}

ChainCertificate verify_chain(const RatMap& B, const std::vector<RatMap>& chain) {
    require(!chain.empty(), errc::bad_params, "empty transformation chain");
    RatMap current = B;
    std::optional<RatMap> U_acc, V_acc;
    for (size_t i = 0; i < chain.size(); ++i) {
        auto V = solve_left_factor(current, chain[i]);
        require(V.has_value(), errc::no_factorization,
                "chain step " + std::to_string(i + 1) + " does not factor");
        current = compose(chain[i], *V);
        U_acc = U_acc ? compose(chain[i], *U_acc) : chain[i];
        V_acc = V_acc ? compose(*V_acc, *V) : *V;
    }
    long s = static_cast<long>(chain.size());
    require(compose(*U_acc, B) == compose(current, *U_acc), errc::verification_failure,
            "chain identity U.B = B_s.U failed");
    require(compose(B, *V_acc) == compose(*V_acc, current), errc::verification_failure,
            "chain identity B.V = V.B_s failed");
    require(compose(*V_acc, *U_acc) == iterate(B, s), errc::verification_failure,
            "chain identity V.U = B^s failed");
    require(compose(*U_acc, *V_acc) == iterate(current, s), errc::verification_failure,
            "chain identity U.V = B_s^s failed");
    return {*U_acc, *V_acc, current, s};
}

namespace {

// n-th root of a polynomial with nonzero constant term, or nullopt.
std::optional<Poly> poly_nth_root(const Poly& h, long n) {
    if (h.degree() % n != 0) return std::nullopt;
    long m = h.degree() / n;
    const FieldPtr& K = h.leading().field();
    Poly xn_minus_lead = Poly::monomial(K->one(), n) - Poly::constant(h.leading());
    auto leads = roots_in_field(xn_minus_lead);
    if (leads.empty()) return std::nullopt;
    Poly r = Poly::monomial(leads.front(), m);
    for (long k = m - 1; k >= 0; --k) {
        // match the coefficient of degree (n-1)m + k
        Poly rn = r.pow(n);
        FieldElement target = h.coeff_or_zero((n - 1) * m + k, K->zero());
        FieldElement present = rn.coeff_or_zero((n - 1) * m + k, K->zero());
        FieldElement denom = K->from_long(n) * leads.front().pow(n - 1);
        FieldElement ck = (target - present) / denom;
        r = r + Poly::monomial(K->one(), k) * Poly::constant(ck);
    }
    if (r.pow(n) != h) return std::nullopt;
    return r;
}

} // namespace

PolynomialClassification classify_polynomial(const RatMap& A) {
    require(A.is_polynomial(), errc::not_polynomial, "classify_polynomial needs a polynomial map");
    require(A.degree() >= 2, errc::degree_too_small, "classify_polynomial needs degree >= 2");
    Classification cls = find_O0(A);
    require(cls.tag == GLTag::generalized_lattes, errc::not_gl,
            std::string("not a generalized Lattes polynomial (") + gl_tag_name(cls.tag) + ")");

    const FieldPtr& K = A.field();
    // prefer an {n,n} candidate supported on {w, inf} with the largest n
    const Orbifold* best = nullptr;
    for (const auto& o : cls.passing) {
        auto sig = signature(o);
        if (sig.size() != 2 || sig[0] != sig[1]) continue;
        if (o.entries().size() != 2) continue;
        if (o.entries()[0].support.kind() != PointClass::Kind::infinity) continue;
        if (o.entries()[1].support.kind() != PointClass::Kind::point) continue;
        if (!best || sig[0] > signature(*best)[0]) best = &o;
    }
    if (best) {
        long n = best->entries()[0].nu;
        FieldElement w = best->entries()[1].support.point_value();
        RatMap mu(Poly(std::vector<FieldElement>{w, K->one()}), Poly::constant(K->one()));
        RatMap shifted = mobius_conjugate(A, mu);
        require(shifted.is_polynomial(), errc::verification_failure, "affine conjugate not polynomial");
        long r = 0;
        while (shifted.num().coeff_or_zero(r, K->zero()).is_zero()) ++r;
        require(r >= 1, errc::verification_failure, "normalized polynomial does not fix zero");
        Poly h = shifted.num();
        for (long i = 0; i < r; ++i) h = h / poly_from_longs(K, {0, 1});
        auto R = poly_nth_root(h, n);
        require(R.has_value(), errc::no_factorization, "n-th root extraction failed for A / z^r");
        require(integer_gcd(r, n) == 1, errc::verification_failure, "recovered r not coprime to n");
        PolynomialClassification out;
        out.family = PolyFamily::z_r_R_n;
        out.mu = mu;
        out.r = r;
        out.n = n;
        out.R = RatMap::from_poly(*R);
        return out;
    }
    for (const auto& o : cls.passing) {
        auto sig = signature(o);
        if (sig.size() == 3 && sig[0] == 2 && sig[1] == 2) {
            PolynomialClassification out;
            out.family = PolyFamily::chebyshev_type;
            out.n = sig[2];
            out.witness_orbifold = o;
            return out;
        }
    }
    fail(errc::not_gl, "no polynomial family witness found among passing candidates");
}

} // namespace orb
