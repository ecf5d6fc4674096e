#include "orb/ratmap.hpp"

#include <algorithm>
#include <sstream>

namespace orb {

// ----- PointClass -----

PointClass PointClass::infinity(FieldPtr field) { return PointClass(Kind::infinity, std::move(field)); }

PointClass PointClass::point(FieldElement v) {
    FieldPtr f = v.field();
    PointClass c(Kind::point, std::move(f));
    c.point_ = std::move(v);
    return c;
}

PointClass PointClass::orbit(Poly q) {
    require(q.degree() >= 2, errc::bad_params, "orbit class needs degree >= 2");
    require(q.leading().is_one(), errc::bad_params, "orbit polynomial must be monic");
    PointClass c(Kind::orbit, q.leading().field());
    c.orbit_ = std::move(q);
    return c;
}

PointClass PointClass::of_point(const Point& p) {
    if (p.is_infinity()) return infinity(p.field());
    return point(p.value());
}

long PointClass::point_count() const {
    switch (kind_) {
        case Kind::infinity:
        case Kind::point: return 1;
        case Kind::orbit: return orbit_->degree();
    }
    return 0;
}

Poly PointClass::vanishing_poly() const {
    require(kind_ != Kind::infinity, errc::bad_params, "no vanishing polynomial at infinity");
    if (kind_ == Kind::orbit) return *orbit_;
    std::vector<FieldElement> lin;
    lin.push_back(-*point_);
    lin.push_back(field_->one());
    return Poly(std::move(lin));
}

bool operator==(const PointClass& a, const PointClass& b) { return compare(a, b) == 0; }

int compare(const PointClass& a, const PointClass& b) {
    require_same_field(a.field(), b.field(), "class compare");
    auto rank = [](PointClass::Kind k) {
        switch (k) {
            case PointClass::Kind::infinity: return 0;
            case PointClass::Kind::point: return 1;
            case PointClass::Kind::orbit: return 2;
        }
        return 3;
    };
    if (rank(a.kind()) != rank(b.kind())) return rank(a.kind()) < rank(b.kind()) ? -1 : 1;
    switch (a.kind()) {
        case PointClass::Kind::infinity: return 0;
        case PointClass::Kind::point: return compare(a.point_value(), b.point_value());
        case PointClass::Kind::orbit: {
            const Poly& pa = a.orbit_poly();
            const Poly& pb = b.orbit_poly();
            if (pa.degree() != pb.degree()) return pa.degree() < pb.degree() ? -1 : 1;
            for (long i = pa.degree(); i >= 0; --i) {
                int c = compare(pa.coeff_or_zero(i, pa.leading()), pb.coeff_or_zero(i, pb.leading()));
                if (c != 0) return c;
            }
            return 0;
        }
    }
    return 0;
}

std::string PointClass::to_string() const {
    switch (kind_) {
        case Kind::infinity: return "inf";
        case Kind::point: return point_->to_string();
        case Kind::orbit: return "poly(" + poly_to_string(*orbit_, "z") + ")";
    }
    return "?";
}

std::string FiberClass::to_string() const {
    std::ostringstream os;
    if (at_infinity)
        os << "inf";
    else
        os << poly_to_string(support, "z");
    os << " (mult " << local_degree << ")";
    return os.str();
}

// ----- RatMap -----

RatMap::RatMap(Poly num, Poly den) : field_(), num_(std::move(num)), den_(std::move(den)) {
    require(!(num_.is_zero() && den_.is_zero()), errc::zero_map, "0/0 is not a map");
    const FieldElement& probe = num_.is_zero() ? den_.leading() : num_.leading();
    field_ = probe.field();
    if (!num_.is_zero() && !den_.is_zero()) {
        require_same_field(num_.leading().field(), den_.leading().field(), "ratmap");
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
    if (den_.is_zero()) {
        num_ = Poly::constant(field_->one()); // the constant map to infinity
        return;
    }
    FieldElement scale = den_.leading().inverse();
    num_ = scale * num_;
    den_ = scale * den_;
}

RatMap RatMap::identity(const FieldPtr& field) {
    return RatMap(poly_from_longs(field, {0, 1}), Poly::constant(field->one()));
}

RatMap RatMap::constant(const FieldElement& value) {
    return RatMap(Poly::constant(value), Poly::constant(value.field()->one()));
}

RatMap RatMap::from_poly(Poly p) {
    require(!p.is_zero(), errc::zero_map, "zero polynomial map needs a field; use constant()");
    FieldPtr f = p.leading().field();
    return RatMap(std::move(p), Poly::constant(f->one()));
}

RatMap RatMap::monomial(const FieldPtr& field, long k) {
    if (k >= 0) return RatMap(Poly::monomial(field->one(), k), Poly::constant(field->one()));
    return RatMap(Poly::constant(field->one()), Poly::monomial(field->one(), -k));
}

Point RatMap::eval(const Point& p) const {
    require_same_field(field_, p.field(), "eval");
    if (p.is_infinity()) {
        if (num_.degree() > den_.degree()) return Point::infinity(field_);
        if (num_.degree() < den_.degree()) return Point::finite(field_->zero());
        return Point::finite(num_.leading() / den_.leading());
    }
    if (den_.is_zero()) return Point::infinity(field_);
    FieldElement n = num_.eval(p.value());
    FieldElement d = den_.eval(p.value());
    if (d.is_zero()) return Point::infinity(field_);
    return Point::finite(n / d);
}

RatMap RatMap::operator-() const { return RatMap(-num_, den_); }

RatMap operator+(const RatMap& a, const RatMap& b) {
    require_same_field(a.field_, b.field_, "ratmap add");
    return RatMap(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatMap operator-(const RatMap& a, const RatMap& b) {
    require_same_field(a.field_, b.field_, "ratmap sub");
    return RatMap(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatMap operator*(const RatMap& a, const RatMap& b) {
    require_same_field(a.field_, b.field_, "ratmap mul");
    return RatMap(a.num_ * b.num_, a.den_ * b.den_);
}

RatMap operator/(const RatMap& a, const RatMap& b) {
    require_same_field(a.field_, b.field_, "ratmap div");
    require(!b.num_.is_zero(), errc::division_by_zero, "division by the zero map");
    return RatMap(a.num_ * b.den_, a.den_ * b.num_);
}

RatMap operator*(const FieldElement& s, const RatMap& f) {
    return RatMap(Poly::constant(s) * f.num_, f.den_);
}

Poly RatMap::derivative_numerator() const {
    return num_.derivative() * den_ - num_ * den_.derivative();
}

std::string RatMap::to_string() const {
    if (is_polynomial()) return poly_to_string(num_, "z");
    return "(" + poly_to_string(num_, "z") + ") / (" + poly_to_string(den_, "z") + ")";
}

RatMap compose(const RatMap& outer, const RatMap& inner) {
    require_same_field(outer.field(), inner.field(), "compose");
    long n = outer.degree();
    // homogeneous substitution: powers of the inner numerator and denominator
    std::vector<Poly> npow, dpow;
    npow.reserve(static_cast<size_t>(n) + 1);
    dpow.reserve(static_cast<size_t>(n) + 1);
    Poly one = Poly::constant(outer.field()->one());
    npow.push_back(one);
    dpow.push_back(one);
    for (long i = 1; i <= n; ++i) {
        npow.push_back(npow.back() * inner.num());
        dpow.push_back(dpow.back() * inner.den());
    }
    Poly rnum, rden;
    for (long i = 0; i <= n; ++i) {
        FieldElement cn = outer.num().coeff_or_zero(i, outer.field()->zero());
        FieldElement cd = outer.den().coeff_or_zero(i, outer.field()->zero());
        Poly mixed = npow[static_cast<size_t>(i)] * dpow[static_cast<size_t>(n - i)];
        if (!cn.is_zero()) rnum = rnum + Poly::constant(cn) * mixed;
        if (!cd.is_zero()) rden = rden + Poly::constant(cd) * mixed;
    }
    return RatMap(std::move(rnum), std::move(rden));
}

RatMap iterate(const RatMap& f, long k) {
    require(k >= 1, errc::bad_params, "iterate needs k >= 1");
    RatMap out = f;
    for (long i = 1; i < k; ++i) out = compose(out, f);
    return out;
}

RatMap mobius_inverse(const RatMap& mu) {
    require(mu.degree() == 1, errc::not_mobius, "inverse of a non-Moebius map");
    const FieldPtr& K = mu.field();
    FieldElement a = mu.num().coeff_or_zero(1, K->zero());
    FieldElement b = mu.num().coeff_or_zero(0, K->zero());
    FieldElement c = mu.den().coeff_or_zero(1, K->zero());
    FieldElement d = mu.den().coeff_or_zero(0, K->zero());
    Poly num(std::vector<FieldElement>{-b, d});
    Poly den(std::vector<FieldElement>{a, -c});
    return RatMap(std::move(num), std::move(den));
}

RatMap mobius_conjugate(const RatMap& f, const RatMap& mu) {
    require(mu.degree() == 1, errc::not_mobius, "conjugation needs a Moebius map");
    return compose(mobius_inverse(mu), compose(f, mu));
}

long local_degree(const RatMap& f, const Point& p) {
    require_same_field(f.field(), p.field(), "local_degree");
    if (f.is_constant()) return 1;
    if (p.is_infinity()) {
        RatMap inv = RatMap::monomial(f.field(), -1);
        return local_degree(compose(f, inv), Point::finite(f.field()->zero()));
    }
    Point v = f.eval(p);
    Poly g = v.is_infinity() ? f.den() : f.num() - Poly::constant(v.value()) * f.den();
    // multiplicity of (z - p) in g
    std::vector<FieldElement> lin;
    lin.push_back(-p.value());
    lin.push_back(f.field()->one());
    Poly factor(std::move(lin));
    long mult = 0;
    while (!g.is_zero()) {
        auto [q, r] = divrem(g, factor);
        if (!r.is_zero()) break;
        ++mult;
        g = q;
    }
    return mult;
}

namespace {

// t -> resultant(P - t*Q, modpoly) for monic modpoly: the product of P - t*Q
// over the roots of modpoly, obtained by sampling and interpolation.
Poly parametric_resultant(const Poly& P, const Poly& Q, const Poly& modpoly) {
    const FieldPtr& K = P.leading().field();
    long bound = modpoly.degree();
    std::vector<FieldElement> xs, ys;
    long sample = 0;
    while (static_cast<long>(xs.size()) <= bound) {
        FieldElement t0 = K->from_long(sample);
        sample = sample <= 0 ? 1 - sample : -sample;
        Poly At = P - Poly::constant(t0) * Q;
        FieldElement value = At.is_zero() ? K->zero() : resultant(At, modpoly);
        xs.push_back(t0);
        ys.push_back(value);
    }
    return interpolate(xs, ys);
}

} // namespace

PointClass image_class(const RatMap& f, const PointClass& c) {
    require_same_field(f.field(), c.field(), "image_class");
    switch (c.kind()) {
        case PointClass::Kind::infinity: return PointClass::of_point(f.eval(Point::infinity(f.field())));
        case PointClass::Kind::point: return PointClass::of_point(f.eval(Point::finite(c.point_value())));
        case PointClass::Kind::orbit: break;
    }
    const Poly& q = c.orbit_poly();
    if (poly_gcd(q, f.den()).degree() > 0) {
        // q is irreducible, so a common factor means q divides the denominator
        return PointClass::infinity(f.field());
    }
    Poly d = parametric_resultant(f.num(), f.den(), q);
    auto classes = split_into_classes(squarefree_part(d));
    require(classes.size() == 1, errc::verification_failure, "image of a Galois class is one class");
    const Poly& m = classes.front();
    if (m.degree() == 1) return PointClass::point(-m.coeff_or_zero(0, m.leading()));
    return PointClass::orbit(m);
}

std::vector<FiberClass> fiber(const RatMap& f, const PointClass& value) {
    require_same_field(f.field(), value.field(), "fiber");
    require(f.degree() >= 1, errc::degree_too_small, "fiber of a constant map");
    std::vector<FiberClass> out;
    long d = f.degree();

    Poly g; // vanishing polynomial of the fiber
    long k = 1;
    switch (value.kind()) {
        case PointClass::Kind::infinity: g = f.den(); break;
        case PointClass::Kind::point:
            g = f.num() - Poly::constant(value.point_value()) * f.den();
            break;
        case PointClass::Kind::orbit: {
            const Poly& q = value.orbit_poly();
            k = q.degree();
            std::vector<Poly> npow, dpow;
            Poly one = Poly::constant(f.field()->one());
            npow.push_back(one);
            dpow.push_back(one);
            for (long i = 1; i <= k; ++i) {
                npow.push_back(npow.back() * f.num());
                dpow.push_back(dpow.back() * f.den());
            }
            for (long i = 0; i <= k; ++i) {
                FieldElement qi = q.coeff_or_zero(i, f.field()->zero());
                if (qi.is_zero()) continue;
                g = g + Poly::constant(qi) * (npow[static_cast<size_t>(i)] * dpow[static_cast<size_t>(k - i)]);
            }
            require(g.degree() == k * d, errc::verification_failure,
                    "orbit fiber polynomial has unexpected degree drop");
            break;
        }
    }
    require(!g.is_zero(), errc::verification_failure, "fiber polynomial vanished");

    long finite_total = 0;
    if (g.degree() >= 1) {
        for (const auto& part : squarefree_decomposition(g)) {
            FiberClass fc;
            fc.support = part.factor;
            fc.local_degree = part.multiplicity;
            require(part.factor.degree() % k == 0, errc::verification_failure,
                    "fiber class does not split evenly over the value class");
            fc.points_per_value = part.factor.degree() / k;
            finite_total += fc.local_degree * fc.points_per_value;
            out.push_back(std::move(fc));
        }
    }
    if (finite_total < d) {
        require(k == 1, errc::verification_failure, "infinity inside an orbit fiber");
        FiberClass fc;
        fc.at_infinity = true;
        fc.local_degree = d - finite_total;
        fc.points_per_value = 1;
        out.push_back(std::move(fc));
        finite_total = d;
    }
    require(finite_total == d, errc::verification_failure, "fiber degree sum mismatch");
    return out;
}

std::vector<PointClass> critical_value_classes(const RatMap& f) {
    require(f.degree() >= 2, errc::degree_too_small, "critical values need degree >= 2");
    std::vector<PointClass> candidates;
    Poly w = f.derivative_numerator();
    require(!w.is_zero(), errc::verification_failure, "derivative numerator vanished");
    if (w.degree() >= 1) {
        Poly wm = w.monic();
        Poly dt = parametric_resultant(f.num(), f.den(), wm);
        if (!dt.is_zero() && dt.degree() >= 1)
            for (const auto& cls : split_into_classes(squarefree_part(dt))) {
                if (cls.degree() == 1)
                    candidates.push_back(PointClass::point(-cls.coeff_or_zero(0, cls.leading())));
                else
                    candidates.push_back(PointClass::orbit(cls));
            }
    }
    // the point at infinity can be critical without showing up in the resultant
    if (local_degree(f, Point::infinity(f.field())) >= 2)
        candidates.push_back(PointClass::of_point(f.eval(Point::infinity(f.field()))));
    candidates.push_back(PointClass::infinity(f.field()));

    std::sort(candidates.begin(), candidates.end(),
              [](const PointClass& a, const PointClass& b) { return compare(a, b) < 0; });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<PointClass> out;
    for (const auto& c : candidates) {
        auto fb = fiber(f, c);
        bool critical = std::any_of(fb.begin(), fb.end(),
                                    [](const FiberClass& fc) { return fc.local_degree >= 2; });
        if (critical) out.push_back(c);
    }
    return out;
}

RamificationPortrait ramification_portrait(const RatMap& f) {
    require(f.degree() >= 2, errc::degree_too_small, "portrait needs degree >= 2");
    RamificationPortrait out;
    for (const auto& v : critical_value_classes(f)) out.entries.push_back({v, fiber(f, v)});
    return out;
}

namespace {

// Reduced row echelon form; returns pivot column of each row.
std::vector<long> rref(std::vector<std::vector<FieldElement>>& m) {
    std::vector<long> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        FieldElement inv = m[r][c].inverse();
        for (size_t j = c; j < cols; ++j) m[r][j] = inv * m[r][j];
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            FieldElement factor = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - factor * m[r][j];
        }
        pivots.push_back(static_cast<long>(c));
        ++r;
    }
    return pivots;
}

} // namespace

std::optional<RatMap> solve_left_factor(const RatMap& B, const RatMap& U) {
    require_same_field(B.field(), U.field(), "solve_left_factor");
    const FieldPtr& K = B.field();
    long db = B.degree(), du = U.degree();
    require(du >= 1, errc::degree_mismatch, "inner factor must be nonconstant");
    require(db % du == 0, errc::degree_mismatch, "deg U does not divide deg B");
    long m = db / du;

    // basis polynomials P_U^i Q_U^(m-i)
    std::vector<Poly> basis;
    {
        std::vector<Poly> npow{Poly::constant(K->one())}, dpow{Poly::constant(K->one())};
        for (long i = 1; i <= m; ++i) {
            npow.push_back(npow.back() * U.num());
            dpow.push_back(dpow.back() * U.den());
        }
        for (long i = 0; i <= m; ++i) basis.push_back(npow[static_cast<size_t>(i)] * dpow[static_cast<size_t>(m - i)]);
    }

    // P_B * Ytilde - Q_B * Xtilde = 0 as a polynomial identity
    long unknowns = 2 * (m + 1);
    std::vector<Poly> cols;
    cols.reserve(static_cast<size_t>(unknowns));
    for (long i = 0; i <= m; ++i) cols.push_back(-(B.den() * basis[static_cast<size_t>(i)])); // x_i
    for (long i = 0; i <= m; ++i) cols.push_back(B.num() * basis[static_cast<size_t>(i)]);    // y_i
    long maxdeg = 0;
    for (const auto& p : cols) maxdeg = std::max(maxdeg, p.degree());
    std::vector<std::vector<FieldElement>> mat(
        static_cast<size_t>(maxdeg) + 1,
        std::vector<FieldElement>(static_cast<size_t>(unknowns), K->zero()));
    for (long j = 0; j < unknowns; ++j)
        for (long r = 0; r <= maxdeg; ++r) mat[static_cast<size_t>(r)][static_cast<size_t>(j)] =
            cols[static_cast<size_t>(j)].coeff_or_zero(r, K->zero());

    auto pivots = rref(mat);
    std::vector<bool> is_pivot(static_cast<size_t>(unknowns), false);
    for (long c : pivots) is_pivot[static_cast<size_t>(c)] = true;

    long free_col = -1;
    for (long c = 0; c < unknowns; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) {
            free_col = c;
            break;
        }
    if (free_col < 0) return std::nullopt;

    // kernel vector with 1 in the first free column
    std::vector<FieldElement> sol(static_cast<size_t>(unknowns), K->zero());
    sol[static_cast<size_t>(free_col)] = K->one();
    for (size_t r = 0; r < pivots.size(); ++r)
        sol[static_cast<size_t>(pivots[r])] = -mat[r][static_cast<size_t>(free_col)];

    std::vector<FieldElement> xc(sol.begin(), sol.begin() + (m + 1));
    std::vector<FieldElement> yc(sol.begin() + (m + 1), sol.end());
    Poly X(std::move(xc)), Y(std::move(yc));
    if (X.is_zero() && Y.is_zero()) return std::nullopt;
    if (Y.is_zero()) return std::nullopt;
    RatMap V(std::move(X), std::move(Y));
    if (compose(V, U) != B) return std::nullopt;
    return V;
}

RatMap lift_ratmap(const RatMap& f, const FieldPtr& target) {
    require(f.field()->is_rationals(), errc::field_mismatch, "lift_ratmap expects a map over Q");
    return RatMap(lift_to_field(rational_poly(f.num()), target),
                  lift_to_field(rational_poly(f.den()), target));
}

} // namespace orb
