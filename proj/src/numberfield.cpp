#include "orb/numberfield.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orb/qfactor.hpp"

namespace orb {

namespace {

// Durand-Kerner iteration on double-precision coefficients.  Deterministic
// start values give a reproducible root choice per field.
std::vector<std::complex<double>> approx_roots(const QPoly& p) {
    long n = p.degree();
    std::vector<std::complex<double>> a(static_cast<size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) a[static_cast<size_t>(i)] = p.coeff_or_zero(i, Rational(0)).get_d();
    for (auto& c : a) c /= a.back();
    std::vector<std::complex<double>> roots(static_cast<size_t>(n));
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> acc(1.0, 0.0);
    for (auto& r : roots) {
        acc *= seed;
        r = acc;
    }
    auto eval = [&](std::complex<double> x) {
        std::complex<double> v = a.back();
        for (size_t i = a.size() - 1; i-- > 0;) v = v * x + a[i];
        return v;
    };
    for (int iter = 0; iter < 200; ++iter) {
        double delta = 0;
        for (size_t i = 0; i < roots.size(); ++i) {
            std::complex<double> denom(1.0, 0.0);
            for (size_t j = 0; j < roots.size(); ++j)
                if (j != i) denom *= roots[i] - roots[j];
            std::complex<double> step = eval(roots[i]) / denom;
            roots[i] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta < 1e-14) break;
    }
    return roots;
}

std::complex<double> pick_root(const QPoly& p) {
    if (p.degree() <= 1) {
        Rational r = Rational(-p.coeff_or_zero(0, Rational(0))) / p.leading();
        return {r.get_d(), 0.0};
    }
    auto roots = approx_roots(p);
    std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
        if (x.imag() != y.imag()) return x.imag() > y.imag();
        return x.real() > y.real();
    });
    return roots.front();
}

} // namespace

NumberField::NumberField(QPoly min_poly, std::string label)
    : min_poly_(std::move(min_poly)), label_(std::move(label)), root_(pick_root(min_poly_)) {}

FieldPtr NumberField::rationals() {
    static FieldPtr q(new NumberField(QPoly({Rational(0), Rational(1)}), "Q"));
    return q;
}

FieldPtr NumberField::extension(const QPoly& min_poly, const std::string& label) {
    require(min_poly.degree() >= 1, errc::bad_params, "minimal polynomial must be nonconstant");
    require(min_poly.leading() == 1, errc::bad_params, "minimal polynomial must be monic");
    if (min_poly.degree() == 1) {
        require(is_zero(min_poly.coeff_or_zero(0, Rational(0))), errc::bad_params,
                "degree-one field must be Q itself (min_poly = t)");
        return rationals();
    }
    require(is_irreducible_over_Q(min_poly), errc::bad_params,
            "minimal polynomial is reducible over Q");
    return FieldPtr(new NumberField(min_poly, label));
}

FieldElement NumberField::element(std::vector<Rational> coords) const {
    return FieldElement(shared_from_this(), std::move(coords));
}

FieldElement NumberField::from_rational(const Rational& r) const {
    std::vector<Rational> v(static_cast<size_t>(degree()), Rational(0));
    v[0] = r;
    return FieldElement(shared_from_this(), std::move(v));
}

FieldElement NumberField::from_long(long x) const { return from_rational(Rational(x)); }
FieldElement NumberField::zero() const { return from_rational(Rational(0)); }
FieldElement NumberField::one() const { return from_rational(Rational(1)); }

FieldElement NumberField::generator() const {
    require(degree() >= 2, errc::bad_params, "Q has no generator element");
    std::vector<Rational> v(static_cast<size_t>(degree()), Rational(0));
    v[1] = 1;
    return FieldElement(shared_from_this(), std::move(v));
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return a && b && same_field(*a, *b);
}

void require_same_field(const FieldPtr& a, const FieldPtr& b, const char* where) {
    require(same_field(a, b), errc::field_mismatch, std::string(where) + ": operands live in different fields");
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    require(static_cast<long>(coords_.size()) == field_->degree(), errc::bad_params,
            "coordinate vector length does not match field degree");
}

bool FieldElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return orb::is_zero(r); });
}

bool FieldElement::is_one() const {
    if (!orb::is_one(coords_[0])) return false;
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& r) { return orb::is_zero(r); });
}

bool FieldElement::is_rational() const {
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& r) { return orb::is_zero(r); });
}

FieldElement FieldElement::operator-() const {
    std::vector<Rational> v;
    v.reserve(coords_.size());
    for (const auto& c : coords_) v.push_back(-c);
    return FieldElement(field_, std::move(v));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_, "field add");
    std::vector<Rational> v;
    v.reserve(a.coords_.size());
    for (size_t i = 0; i < a.coords_.size(); ++i) v.push_back(a.coords_[i] + b.coords_[i]);
    return FieldElement(a.field_, std::move(v));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_, "field sub");
    std::vector<Rational> v;
    v.reserve(a.coords_.size());
    for (size_t i = 0; i < a.coords_.size(); ++i) v.push_back(a.coords_[i] - b.coords_[i]);
    return FieldElement(a.field_, std::move(v));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_, "field mul");
    QPoly pa(a.coords_), pb(b.coords_);
    QPoly prod = (pa * pb) % a.field_->min_poly();
    std::vector<Rational> v(a.coords_.size(), Rational(0));
    for (long i = 0; i <= prod.degree() && i < static_cast<long>(v.size()); ++i)
        v[static_cast<size_t>(i)] = prod.coeff_or_zero(i, Rational(0));
    return FieldElement(a.field_, std::move(v));
}

FieldElement FieldElement::inverse() const {
    require(!is_zero(), errc::division_by_zero, "inverse of zero field element");
    QPoly self(coords_);
    auto x = poly_xgcd(self, field_->min_poly());
    require(x.g.degree() == 0, errc::verification_failure, "minimal polynomial not irreducible");
    QPoly inv = (coeff_one(Rational(1)) / x.g.leading() * x.s) % field_->min_poly();
    std::vector<Rational> v(coords_.size(), Rational(0));
    for (long i = 0; i <= inv.degree(); ++i) v[static_cast<size_t>(i)] = inv.coeff_or_zero(i, Rational(0));
    return FieldElement(field_, std::move(v));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_, "field div");
    return a * b.inverse();
}

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement acc = *this;
    FieldElement out = field_->one();
    long k = e;
    while (k > 0) {
        if (k & 1) out = out * acc;
        k >>= 1;
        if (k) acc = acc * acc;
    }
    return out;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_, "field compare");
    return a.coords_ == b.coords_;
}

int compare(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field(), b.field(), "field order");
    for (size_t i = 0; i < a.coords().size(); ++i) {
        int c = cmp(a.coords()[i], b.coords()[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::complex<double> FieldElement::approx() const {
    std::complex<double> alpha = field_->embedding_root();
    std::complex<double> acc(0, 0);
    for (size_t i = coords_.size(); i-- > 0;) acc = acc * alpha + std::complex<double>(coords_[i].get_d(), 0);
    return acc;
}

std::string FieldElement::to_string() const {
    if (is_rational()) return orb::to_string(coords_[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (orb::is_zero(coords_[i])) continue;
        Rational c = coords_[i];
        if (!first) {
            os << (sgn(c) < 0 ? " - " : " + ");
            if (sgn(c) < 0) c = -c;
        }
        first = false;
        if (i == 0 || c != 1) {
            os << orb::to_string(c);
            if (i > 0) os << "*";
        }
        if (i == 1) os << "a";
        if (i > 1) os << "a^" << i;
    }
    if (first) os << "0";
    return os.str();
}

FieldElement coeff_zero(const FieldElement& like) { return like.field()->zero(); }
FieldElement coeff_one(const FieldElement& like) { return like.field()->one(); }

Poly lift_to_field(const QPoly& p, const FieldPtr& field) {
    std::vector<FieldElement> v;
    for (long i = 0; i <= p.degree(); ++i) v.push_back(field->from_rational(p.coeff_or_zero(i, Rational(0))));
    return Poly(std::move(v));
}

bool has_rational_coeffs(const Poly& p) {
    for (const auto& c : p.coeffs())
        if (!c.is_rational()) return false;
    return true;
}

QPoly rational_poly(const Poly& p) {
    std::vector<Rational> v;
    for (const auto& c : p.coeffs()) {
        require(c.is_rational(), errc::bad_params, "polynomial has irrational coefficients");
        v.push_back(c.rational_value());
    }
    return QPoly(std::move(v));
}

Poly poly_from_longs(const FieldPtr& field, const std::vector<long>& coeffs) {
    std::vector<FieldElement> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.push_back(field->from_long(c));
    return Poly(std::move(v));
}

std::string poly_to_string(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = p.degree(); i >= 0; --i) {
        FieldElement c = p.coeff_or_zero(i, p.leading());
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        bool negative = !cs.empty() && cs[0] == '-' && cs.find(' ') == std::string::npos;
        if (!first) {
            os << (negative ? " - " : " + ");
            if (negative) cs = cs.substr(1);
        }
        first = false;
        bool coeff_is_unit = (i > 0 && (cs == "1"));
        bool needs_parens = cs.find(' ') != std::string::npos && i > 0;
        if (!coeff_is_unit) {
            if (needs_parens)
                os << "(" << cs << ")";
            else
                os << cs;
            if (i > 0) os << "*";
        }
        if (i == 1) os << var;
        if (i > 1) os << var << "^" << i;
    }
    return os.str();
}

std::string qpoly_to_string(const QPoly& p, const std::string& var) {
    return poly_to_string(lift_to_field(p, NumberField::rationals()), var);
}

} // namespace orb
