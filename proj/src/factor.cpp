#include "orb/factor.hpp"

#include <algorithm>

#include "orb/error.hpp"

namespace orb {
namespace {

// f with z replaced by z - s*a, computed by Horner over K[z].
Poly shift_by_generator(const Poly& f, long s) {
    const FieldPtr& K = f.leading().field();
    FieldElement shift = K->generator() * K->from_long(-s);
    std::vector<FieldElement> lin;
    lin.push_back(shift);
    lin.push_back(K->one());
    Poly z_minus_sa(std::move(lin));
    Poly acc = Poly::constant(f.leading());
    for (long i = f.degree(); i-- > 0;) acc = acc * z_minus_sa + Poly::constant(f.coeff_or_zero(i, f.leading()));
    return acc;
}

// Norm from K[x] down to Q[x]: Res_t(m(t), f(x) with a -> t), computed by
// sampling x at rationals and interpolating.  m is monic, so the univariate
// resultants agree with the product over conjugates at every sample.
QPoly norm_to_Q(const Poly& f) {
    const FieldPtr& K = f.leading().field();
    const QPoly& m = K->min_poly();
    long bound = f.degree() * K->degree();
    std::vector<Rational> xs, ys;
    xs.reserve(static_cast<size_t>(bound) + 1);
    ys.reserve(static_cast<size_t>(bound) + 1);
    long sample = 0;
    QPoly mq = m;
    while (static_cast<long>(xs.size()) <= bound) {
        Rational x0(sample);
        sample = sample <= 0 ? 1 - sample : -sample; // 0, 1, -1, 2, -2, ...
        // evaluate f at x0: an element of K, i.e. a polynomial in t of degree < deg m
        FieldElement value = f.eval(K->from_rational(x0));
        QPoly in_t(value.coords());
        Rational res = in_t.is_zero() ? Rational(0) : resultant(in_t, mq);
        xs.push_back(x0);
        ys.push_back(res);
    }
    return interpolate(xs, ys);
}

KFactorization factor_over_Q_field(const Poly& p) {
    const FieldPtr& K = p.leading().field();
    auto qres = factor_over_Q(rational_poly(p));
    KFactorization out{K->from_rational(qres.leading), {}};
    for (auto& f : qres.factors) out.factors.push_back({lift_to_field(f.factor, K), f.multiplicity});
    return out;
}

// Trager's method for a square-free monic input over a proper extension.
std::vector<Poly> trager_squarefree(const Poly& f) {
    const FieldPtr& K = f.leading().field();
    for (long s = 0;; s = (s <= 0 ? 1 - s : -s)) {
        Poly shifted = shift_by_generator(f, s);
        QPoly norm = norm_to_Q(shifted);
        if (norm.degree() >= 1 && poly_gcd(norm, norm.derivative()).degree() == 0) {
            auto qf = factor_over_Q(norm);
            std::vector<Poly> out;
            if (qf.factors.size() == 1) return {f.monic()};
            for (const auto& nf : qf.factors) {
                // pull the factor back: gcd(f(x), N_i(x + s*a))
                Poly lifted = lift_to_field(nf.factor, K);
                FieldElement shift = K->generator() * K->from_long(s);
                std::vector<FieldElement> lin;
                lin.push_back(shift);
                lin.push_back(K->one());
                Poly x_plus_sa(std::move(lin));
                Poly g = poly_gcd(f, lifted.compose(x_plus_sa));
                if (g.degree() >= 1) out.push_back(g.monic());
            }
            long total = 0;
            for (const auto& g : out) total += g.degree();
            require(total == f.degree(), errc::verification_failure, "trager: factor degrees do not add up");
            return out;
        }
        require(std::abs(s) < 50, errc::verification_failure, "trager: no square-free norm found");
    }
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (long i = a.degree(); i >= 0; --i) {
        int c = compare(a.coeff_or_zero(i, a.leading()), b.coeff_or_zero(i, b.leading()));
        if (c != 0) return c < 0;
    }
    return false;
}

} // namespace

KFactorization factor_over_field(const Poly& p) {
    require(!p.is_zero(), errc::zero_polynomial, "factorization of zero polynomial");
    const FieldPtr& K = p.leading().field();
    if (K->is_rationals()) return factor_over_Q_field(p);
    KFactorization out{p.leading(), {}};
    if (p.degree() == 0) return out;
    for (const auto& part : squarefree_decomposition(p))
        for (const auto& g : trager_squarefree(part.factor))
            out.factors.push_back({g, part.multiplicity});
    std::sort(out.factors.begin(), out.factors.end(),
              [](const KFactor& a, const KFactor& b) { return poly_less(a.factor, b.factor); });
    return out;
}

bool is_irreducible_over_field(const Poly& p) {
    if (p.degree() < 1) return false;
    if (p.degree() == 1) return true;
    auto f = factor_over_field(p);
    return f.factors.size() == 1 && f.factors[0].multiplicity == 1 &&
           f.factors[0].factor.degree() == p.degree();
}

std::vector<FieldElement> roots_in_field(const Poly& p) {
    std::vector<FieldElement> roots;
    for (const auto& f : factor_over_field(p).factors)
        if (f.factor.degree() == 1) roots.push_back(-f.factor.coeff_or_zero(0, p.leading()));
    return roots;
}

std::vector<Poly> split_into_classes(const Poly& p) {
    std::vector<Poly> out;
    for (const auto& f : factor_over_field(p).factors) {
        require(f.multiplicity == 1, errc::bad_params, "split_into_classes expects square-free input");
        out.push_back(f.factor);
    }
    return out;
}

} // namespace orb
