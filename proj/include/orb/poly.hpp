#ifndef ORB_POLY_HPP
#define ORB_POLY_HPP

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "orb/error.hpp"
#include "orb/rational.hpp"

namespace orb {

/// Dense univariate polynomial over an exact field.  Coefficients are stored
/// in ascending degree with no trailing zero; the empty vector is the zero
/// polynomial and its degree is the minus-infinity sentinel.
///
/// The coefficient type must provide field arithmetic and the customization
/// points coeff_is_zero / coeff_zero / coeff_one (found by ADL).
template <typename T>
class BasicPoly {
  public:
    static constexpr long minus_infinity = std::numeric_limits<long>::min();

    BasicPoly() = default;
    explicit BasicPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static BasicPoly zero() { return BasicPoly(); }
    static BasicPoly constant(T value) {
        std::vector<T> v;
        v.push_back(std::move(value));
        return BasicPoly(std::move(v));
    }
    /// c * x^k
    static BasicPoly monomial(T c, long k) {
        std::vector<T> v;
        if (!coeff_is_zero(c)) {
            v.reserve(static_cast<size_t>(k) + 1);
            for (long i = 0; i < k; ++i) v.push_back(coeff_zero(c));
            v.push_back(std::move(c));
        }
        return BasicPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return c_.empty() ? minus_infinity : static_cast<long>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }

    const T& leading() const {
        require(!c_.empty(), errc::zero_polynomial, "leading coefficient of zero polynomial");
        return c_.back();
    }
    /// Coefficient of x^k; `like` supplies the field for the implicit zeros.
    T coeff_or_zero(long k, const T& like) const {
        if (k < 0 || k >= static_cast<long>(c_.size())) return coeff_zero(like);
        return c_[static_cast<size_t>(k)];
    }

    bool operator==(const BasicPoly& o) const { return c_ == o.c_; }
    bool operator!=(const BasicPoly& o) const { return !(*this == o); }

    BasicPoly operator-() const {
        std::vector<T> v;
        v.reserve(c_.size());
        for (const T& x : c_) v.push_back(-x);
        return BasicPoly(std::move(v));
    }

    friend BasicPoly operator+(const BasicPoly& a, const BasicPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        std::vector<T> v;
        size_t n = std::max(a.c_.size(), b.c_.size());
        v.reserve(n);
        for (size_t i = 0; i < n; ++i) {
            if (i < a.c_.size() && i < b.c_.size())
                v.push_back(a.c_[i] + b.c_[i]);
            else if (i < a.c_.size())
                v.push_back(a.c_[i]);
            else
                v.push_back(b.c_[i]);
        }
        return BasicPoly(std::move(v));
    }
    friend BasicPoly operator-(const BasicPoly& a, const BasicPoly& b) { return a + (-b); }

    friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
        if (a.is_zero() || b.is_zero()) return BasicPoly();
        std::vector<T> v;
        size_t n = a.c_.size() + b.c_.size() - 1;
        const T z = coeff_zero(a.c_[0]);
        v.assign(n, z);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (coeff_is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        }
        return BasicPoly(std::move(v));
    }

    friend BasicPoly operator*(const T& s, const BasicPoly& p) {
        if (coeff_is_zero(s)) return BasicPoly();
        std::vector<T> v;
        v.reserve(p.c_.size());
        for (const T& x : p.c_) v.push_back(s * x);
        return BasicPoly(std::move(v));
    }

    T eval(const T& x) const {
        if (c_.empty()) return coeff_zero(x);
        T acc = c_.back();
        for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    BasicPoly derivative() const {
        if (c_.size() <= 1) return BasicPoly();
        std::vector<T> v;
        v.reserve(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) {
            T k = coeff_one(c_[i]);
            for (size_t j = 1; j < i; ++j) k = k + coeff_one(c_[i]);
            v.push_back(k * c_[i]);
        }
        return BasicPoly(std::move(v));
    }

    BasicPoly monic() const {
        require(!is_zero(), errc::zero_polynomial, "monic of zero polynomial");
        if (coeff_is_zero(leading() - coeff_one(leading()))) return *this;
        T inv = coeff_one(leading()) / leading();
        return inv * *this;
    }

    /// Coefficient reversal x^n p(1/x); used for the exact w = 1/z substitution.
    BasicPoly reversed(long n) const {
        require(n >= degree(), errc::bad_params, "reversal order below degree");
        if (is_zero()) return BasicPoly();
        std::vector<T> v;
        const T z = coeff_zero(c_[0]);
        v.assign(static_cast<size_t>(n) + 1, z);
        for (size_t i = 0; i < c_.size(); ++i) v[static_cast<size_t>(n) - i] = c_[i];
        return BasicPoly(std::move(v));
    }

    friend std::pair<BasicPoly, BasicPoly> divrem(const BasicPoly& a, const BasicPoly& b) {
        require(!b.is_zero(), errc::division_by_zero, "polynomial division by zero");
        if (a.degree() < b.degree()) return {BasicPoly(), a};
        const T z = coeff_zero(b.leading());
        std::vector<T> rem = a.c_;
        std::vector<T> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, z);
        T inv = coeff_one(b.leading()) / b.leading();
        for (long k = a.degree() - b.degree(); k >= 0; --k) {
            T q = rem[static_cast<size_t>(k + b.degree())] * inv;
            quo[static_cast<size_t>(k)] = q;
            if (coeff_is_zero(q)) continue;
            for (long j = 0; j <= b.degree(); ++j)
                rem[static_cast<size_t>(k + j)] = rem[static_cast<size_t>(k + j)] - q * b.c_[static_cast<size_t>(j)];
        }
        rem.erase(rem.begin() + b.degree(), rem.end());
        return {BasicPoly(std::move(quo)), BasicPoly(std::move(rem))};
    }

    friend BasicPoly operator/(const BasicPoly& a, const BasicPoly& b) {
        auto [q, r] = divrem(a, b);
        require(r.is_zero(), errc::verification_failure, "inexact polynomial division");
        return q;
    }

    friend BasicPoly operator%(const BasicPoly& a, const BasicPoly& b) { return divrem(a, b).second; }

    BasicPoly pow(long e) const {
        require(e >= 0, errc::bad_params, "negative polynomial power");
        if (e == 0) {
            require(!is_zero(), errc::bad_params, "0^0 polynomial power");
            return constant(coeff_one(c_[0]));
        }
        BasicPoly acc = *this;
        BasicPoly out;
        bool have = false;
        long k = e;
        while (k > 0) {
            if (k & 1) {
                out = have ? out * acc : acc;
                have = true;
            }
            k >>= 1;
            if (k) acc = acc * acc;
        }
        return out;
    }

    /// this(g(x))
    BasicPoly compose(const BasicPoly& g) const {
        if (is_zero()) return BasicPoly();
        BasicPoly acc = constant(c_.back());
        for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * g + constant(c_[i]);
        return acc;
    }

    std::string to_string(const std::string& var, const std::string& (*coeff_str)(const T&)) = delete;

  private:
    void trim() {
        while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

using QPoly = BasicPoly<Rational>;

/// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
template <typename T>
BasicPoly<T> poly_gcd(BasicPoly<T> a, BasicPoly<T> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

template <typename T>
struct XgcdResult {
    BasicPoly<T> g, s, t; // g = s*a + t*b, g monic (or zero)
};

template <typename T>
XgcdResult<T> poly_xgcd(const BasicPoly<T>& a, const BasicPoly<T>& b) {
    using P = BasicPoly<T>;
    if (a.is_zero() && b.is_zero()) return {P(), P(), P()};
    const T one = coeff_one(a.is_zero() ? b.leading() : a.leading());
    P r0 = a, r1 = b;
    P s0 = P::constant(one), s1 = P();
    P t0 = P(), t1 = P::constant(one);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        P s2 = s0 - q * s1;
        P t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    T inv = one / r0.leading();
    return {inv * r0, inv * s0, inv * t0};
}

/// Resultant of two nonzero polynomials via the Euclidean remainder sequence.
/// Orientation: resultant(a, b) = lc(b)^deg(a) * prod of a over the roots of
/// b, so for monic b this is exactly the product of a at the roots of b.
template <typename T>
T resultant(BasicPoly<T> a, BasicPoly<T> b) {
    require(!a.is_zero() && !b.is_zero(), errc::zero_polynomial, "resultant of zero polynomial");
    std::swap(a, b);
    const T one = coeff_one(a.leading());
    T acc = one;
    bool negate = false;
    auto lc_power = [&one](const T& lc, long e) {
        T p = one;
        for (long i = 0; i < e; ++i) p = p * lc;
        return p;
    };
    while (true) {
        if (a.degree() < b.degree()) {
            if ((a.degree() % 2 != 0) && (b.degree() % 2 != 0)) negate = !negate;
            std::swap(a, b);
        }
        if (b.degree() == 0) {
            acc = acc * lc_power(b.leading(), a.degree());
            break;
        }
        auto r = a % b;
        if (r.is_zero()) return coeff_zero(one);
        if ((a.degree() % 2 != 0) && (b.degree() % 2 != 0)) negate = !negate;
        acc = acc * lc_power(b.leading(), a.degree() - r.degree());
        a = std::move(b);
        b = std::move(r);
    }
    return negate ? -acc : acc;
}

/// Lagrange interpolation through (xs[i], ys[i]) with pairwise distinct xs.
template <typename T>
BasicPoly<T> interpolate(const std::vector<T>& xs, const std::vector<T>& ys) {
    require(!xs.empty() && xs.size() == ys.size(), errc::bad_params, "interpolation input size");
    using P = BasicPoly<T>;
    const T one = coeff_one(xs[0]);
    P result;
    for (size_t i = 0; i < xs.size(); ++i) {
        P basis = P::constant(one);
        T denom = one;
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            std::vector<T> lin;
            lin.push_back(-xs[j]);
            lin.push_back(one);
            basis = basis * P(std::move(lin));
            denom = denom * (xs[i] - xs[j]);
        }
        result = result + (ys[i] / denom) * basis;
    }
    return result;
}

template <typename T>
struct SquareFreePart {
    long multiplicity;
    BasicPoly<T> factor; // monic, square-free
};

/// Yun's algorithm (characteristic zero).  Parts come out with strictly
/// increasing multiplicity; the product of factor^multiplicity times the
/// leading constant of the input reconstructs it exactly.
template <typename T>
std::vector<SquareFreePart<T>> squarefree_decomposition(const BasicPoly<T>& p) {
    require(!p.is_zero(), errc::zero_polynomial, "square-free decomposition of zero");
    std::vector<SquareFreePart<T>> parts;
    if (p.degree() == 0) return parts;
    BasicPoly<T> f = p.monic();
    BasicPoly<T> d = f.derivative();
    BasicPoly<T> a = poly_gcd(f, d);
    BasicPoly<T> b = f / a;
    BasicPoly<T> c = d / a;
    long i = 1;
    while (true) {
        BasicPoly<T> w = c - b.derivative();
        if (w.is_zero()) {
            if (b.degree() > 0) parts.push_back({i, b.monic()});
            break;
        }
        BasicPoly<T> g = poly_gcd(b, w);
        if (g.degree() > 0) parts.push_back({i, g.monic()});
        b = b / g;
        c = w / g;
        ++i;
        if (b.degree() == 0) break;
    }
    return parts;
}

template <typename T>
BasicPoly<T> squarefree_part(const BasicPoly<T>& p) {
    auto parts = squarefree_decomposition(p);
    BasicPoly<T> out;
    bool have = false;
    for (auto& part : parts) {
        out = have ? out * part.factor : part.factor;
        have = true;
    }
    if (!have) return BasicPoly<T>::constant(coeff_one(p.leading()));
    return out;
}

} // namespace orb

#endif
