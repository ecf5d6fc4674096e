#include "orb/qfactor.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "orb/error.hpp"

namespace orb {
namespace {

using ZPoly = std::vector<Integer>; // ascending degree, trimmed

void ztrim(ZPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

long zdeg(const ZPoly& p) { return static_cast<long>(p.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Exact division in Z[x]; returns false when not divisible.
bool zdivide(const ZPoly& num, const ZPoly& den, ZPoly& quo) {
    if (den.empty()) return false;
    ZPoly rem = num;
    ztrim(rem);
    if (rem.empty()) {
        quo.clear();
        return true;
    }
    if (zdeg(rem) < zdeg(den)) return false;
    quo.assign(static_cast<size_t>(zdeg(rem) - zdeg(den)) + 1, Integer(0));
    for (long k = zdeg(rem) - zdeg(den); k >= 0; --k) {
        Integer top = rem[static_cast<size_t>(k + zdeg(den))];
        if (sgn(top) == 0) continue;
        Integer q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), den.back().get_mpz_t());
        if (sgn(r) != 0) return false;
        quo[static_cast<size_t>(k)] = q;
        for (size_t j = 0; j < den.size(); ++j) rem[static_cast<size_t>(k) + j] -= q * den[j];
    }
    ztrim(rem);
    return rem.empty();
}

Integer zcontent(const ZPoly& p) {
    Integer g(0);
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly zprimitive(const ZPoly& p) {
    Integer g = zcontent(p);
    if (sgn(g) == 0) return {};
    if (sgn(p.back()) < 0) g = -g;
    ZPoly out(p.size());
    for (size_t i = 0; i < p.size(); ++i) out[i] = p[i] / g;
    return out;
}

ZPoly qpoly_clear_denominators(const QPoly& p) {
    Integer den(1);
    for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    ZPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        Rational scaled = c * Rational(den);
        scaled.canonicalize();
        out.push_back(Integer(scaled.get_num()));
    }
    ztrim(out);
    return out;
}

QPoly zpoly_to_monic_qpoly(const ZPoly& p) {
    std::vector<Rational> v;
    v.reserve(p.size());
    Rational lead(p.back());
    for (const auto& c : p) v.push_back(Rational(c) / lead);
    return QPoly(std::move(v));
}

// ----- arithmetic in F_p[x], p an odd word-sized prime -----

struct PPoly {
    uint64_t p = 0;
    std::vector<uint64_t> c; // ascending, trimmed
};

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod_u(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t p) { return powmod_u(a % p, p - 2, p); }

void ptrim(PPoly& f) {
    while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}

long pdeg(const PPoly& f) { return static_cast<long>(f.c.size()) - 1; }

PPoly pzero(uint64_t p) { return {p, {}}; }

PPoly pconst(uint64_t p, uint64_t v) {
    PPoly f{p, {v % p}};
    ptrim(f);
    return f;
}

PPoly px(uint64_t p) { return {p, {0, 1}}; }

PPoly psub(const PPoly& a, const PPoly& b) {
    PPoly out{a.p, {}};
    out.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < out.c.size(); ++i) {
        uint64_t x = i < a.c.size() ? a.c[i] : 0;
        uint64_t y = i < b.c.size() ? b.c[i] : 0;
        out.c[i] = (x + a.p - y) % a.p;
    }
    ptrim(out);
    return out;
}

PPoly pmul(const PPoly& a, const PPoly& b) {
    if (a.c.empty() || b.c.empty()) return pzero(a.p);
    PPoly out{a.p, std::vector<uint64_t>(a.c.size() + b.c.size() - 1, 0)};
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            out.c[i + j] = static_cast<uint64_t>(
                (static_cast<unsigned __int128>(a.c[i]) * b.c[j] + out.c[i + j]) % a.p);
    }
    ptrim(out);
    return out;
}

PPoly pscale(const PPoly& a, uint64_t s) {
    PPoly out = a;
    for (auto& x : out.c) x = mulmod(x, s, a.p);
    ptrim(out);
    return out;
}

PPoly prem(const PPoly& a, const PPoly& b) {
    require(!b.c.empty(), errc::division_by_zero, "mod-p division by zero");
    PPoly r = a;
    ptrim(r);
    uint64_t inv = invmod(b.c.back(), a.p);
    while (pdeg(r) >= pdeg(b) && !r.c.empty()) {
        uint64_t q = mulmod(r.c.back(), inv, a.p);
        long shift = pdeg(r) - pdeg(b);
        for (size_t j = 0; j < b.c.size(); ++j) {
            auto& slot = r.c[static_cast<size_t>(shift) + j];
            slot = (slot + a.p - mulmod(q, b.c[j], a.p)) % a.p;
        }
        ptrim(r);
    }
    return r;
}

// exact quotient a / b (remainder known to vanish)
PPoly pdivexact(const PPoly& a, const PPoly& b) {
    PPoly rem = a;
    ptrim(rem);
    require(!b.c.empty() && pdeg(rem) >= pdeg(b), errc::verification_failure, "bad mod-p division");
    PPoly quo{a.p, std::vector<uint64_t>(static_cast<size_t>(pdeg(rem) - pdeg(b)) + 1, 0)};
    uint64_t inv = invmod(b.c.back(), a.p);
    for (long k = pdeg(rem) - pdeg(b); k >= 0; --k) {
        uint64_t q = mulmod(rem.c[static_cast<size_t>(k + pdeg(b))], inv, a.p);
        quo.c[static_cast<size_t>(k)] = q;
        if (q == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            auto& slot = rem.c[static_cast<size_t>(k) + j];
            slot = (slot + a.p - mulmod(q, b.c[j], a.p)) % a.p;
        }
    }
    ptrim(rem);
    require(rem.c.empty(), errc::verification_failure, "inexact mod-p division");
    ptrim(quo);
    return quo;
}

PPoly pmonic(const PPoly& a) {
    if (a.c.empty()) return a;
    return pscale(a, invmod(a.c.back(), a.p));
}

PPoly pgcd(PPoly a, PPoly b) {
    while (!b.c.empty()) {
        PPoly r = prem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(a);
}

PPoly pderiv(const PPoly& a) {
    PPoly out{a.p, {}};
    for (size_t i = 1; i < a.c.size(); ++i) out.c.push_back(mulmod(a.c[i], i % a.p, a.p));
    ptrim(out);
    return out;
}

PPoly ppowmod(const PPoly& base, const Integer& e, const PPoly& mod) {
    PPoly result = pconst(base.p, 1);
    PPoly acc = prem(base, mod);
    long bits = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2));
    if (sgn(e) == 0) return result;
    for (long i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) result = prem(pmul(result, acc), mod);
        acc = prem(pmul(acc, acc), mod);
    }
    return result;
}

// Equal-degree splitting (Cantor-Zassenhaus); the rng is seeded once per
// factorization so runs are reproducible.
void edf(const PPoly& f, long d, std::mt19937_64& rng, std::vector<PPoly>& out) {
    if (pdeg(f) == d) {
        out.push_back(pmonic(f));
        return;
    }
    Integer pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(f.p), static_cast<unsigned long>(d));
    Integer e = (pd - 1) / 2;
    while (true) {
        PPoly a{f.p, {}};
        a.c.resize(static_cast<size_t>(pdeg(f)), 0);
        for (auto& x : a.c) x = rng() % f.p;
        ptrim(a);
        if (pdeg(a) < 1) continue;
        PPoly b = ppowmod(a, e, f);
        b = psub(b, pconst(f.p, 1));
        PPoly g = pgcd(b, f);
        if (pdeg(g) > 0 && pdeg(g) < pdeg(f)) {
            edf(g, d, rng, out);
            edf(pdivexact(f, g), d, rng, out);
            return;
        }
    }
}

// Distinct-degree then equal-degree factorization of a squarefree monic input.
std::vector<PPoly> factor_squarefree_mod_p(const PPoly& input) {
    std::vector<PPoly> out;
    PPoly f = pmonic(input);
    std::mt19937_64 rng(0x0b5e55edu);
    PPoly h = px(f.p);
    long d = 0;
    while (pdeg(f) > 0 && 2 * (d + 1) <= pdeg(f)) {
        ++d;
        h = ppowmod(h, Integer(static_cast<long>(f.p)), f);
        PPoly g = pgcd(psub(h, px(f.p)), f);
        if (pdeg(g) > 0) {
            edf(g, d, rng, out);
            f = pdivexact(f, g);
            h = prem(h, f);
        }
    }
    if (pdeg(f) > 0) out.push_back(pmonic(f));
    return out;
}

PPoly zpoly_mod_p(const ZPoly& f, uint64_t p) {
    PPoly out{p, {}};
    out.c.reserve(f.size());
    Integer pz(static_cast<long>(p));
    for (const auto& c : f) {
        Integer r = c % pz;
        if (sgn(r) < 0) r += pz;
        out.c.push_back(r.get_ui());
    }
    ptrim(out);
    return out;
}

bool is_prime_u(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ----- arithmetic in (Z/m)[x] for the Hensel lift -----

struct MPoly {
    std::vector<Integer> c; // ascending, coefficients reduced into [0, m)
};

void mtrim(MPoly& f) {
    while (!f.c.empty() && sgn(f.c.back()) == 0) f.c.pop_back();
}

long mdeg(const MPoly& f) { return static_cast<long>(f.c.size()) - 1; }

Integer mreduce(const Integer& x, const Integer& m) {
    Integer r = x % m;
    if (sgn(r) < 0) r += m;
    return r;
}

MPoly mmake(const ZPoly& f, const Integer& m) {
    MPoly out;
    out.c.reserve(f.size());
    for (const auto& c : f) out.c.push_back(mreduce(c, m));
    mtrim(out);
    return out;
}

MPoly madd(const MPoly& a, const MPoly& b, const Integer& m) {
    MPoly out;
    out.c.resize(std::max(a.c.size(), b.c.size()), Integer(0));
    for (size_t i = 0; i < out.c.size(); ++i) {
        Integer x = i < a.c.size() ? a.c[i] : Integer(0);
        Integer y = i < b.c.size() ? b.c[i] : Integer(0);
        out.c[i] = mreduce(x + y, m);
    }
    mtrim(out);
    return out;
}

MPoly msub(const MPoly& a, const MPoly& b, const Integer& m) {
    MPoly out;
    out.c.resize(std::max(a.c.size(), b.c.size()), Integer(0));
    for (size_t i = 0; i < out.c.size(); ++i) {
        Integer x = i < a.c.size() ? a.c[i] : Integer(0);
        Integer y = i < b.c.size() ? b.c[i] : Integer(0);
        out.c[i] = mreduce(x - y, m);
    }
    mtrim(out);
    return out;
}

MPoly mmul(const MPoly& a, const MPoly& b, const Integer& m) {
    if (a.c.empty() || b.c.empty()) return {};
    MPoly out;
    out.c.assign(a.c.size() + b.c.size() - 1, Integer(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (sgn(a.c[i]) == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    }
    for (auto& x : out.c) x = mreduce(x, m);
    mtrim(out);
    return out;
}

// division with remainder by a monic divisor
void mdivrem_monic(const MPoly& a, const MPoly& b, const Integer& m, MPoly& quo, MPoly& rem) {
    rem = a;
    mtrim(rem);
    quo.c.clear();
    if (mdeg(rem) < mdeg(b)) return;
    quo.c.assign(static_cast<size_t>(mdeg(rem) - mdeg(b)) + 1, Integer(0));
    for (long k = mdeg(rem) - mdeg(b); k >= 0; --k) {
        if (static_cast<size_t>(k + mdeg(b)) >= rem.c.size()) continue;
        Integer q = rem.c[static_cast<size_t>(k + mdeg(b))];
        if (sgn(q) == 0) continue;
        quo.c[static_cast<size_t>(k)] = q;
        for (size_t j = 0; j < b.c.size(); ++j) {
            auto idx = static_cast<size_t>(k) + j;
            rem.c[idx] = mreduce(rem.c[idx] - q * b.c[j], m);
        }
    }
    mtrim(quo);
    mtrim(rem);
}

// One quadratic Hensel step: given f = g h (mod m), s g + t h = 1 (mod m),
// h monic, lifts all four to modulus m^2.
void hensel_step(const ZPoly& f, MPoly& g, MPoly& h, MPoly& s, MPoly& t, const Integer& m) {
    Integer m2 = m * m;
    MPoly fm = mmake(f, m2);
    auto lift = [&](MPoly& q) {
        for (auto& c : q.c) c = mreduce(c, m2);
        mtrim(q);
    };
    lift(g);
    lift(h);
    lift(s);
    lift(t);
    MPoly e = msub(fm, mmul(g, h, m2), m2);
    MPoly q, r;
    mdivrem_monic(mmul(s, e, m2), h, m2, q, r);
    MPoly g1 = madd(madd(g, mmul(t, e, m2), m2), mmul(q, g, m2), m2);
    MPoly h1 = madd(h, r, m2);
    MPoly b = msub(madd(mmul(s, g1, m2), mmul(t, h1, m2), m2), mmake({Integer(1)}, m2), m2);
    MPoly c, d;
    mdivrem_monic(mmul(s, b, m2), h1, m2, c, d);
    MPoly s1 = msub(s, d, m2);
    MPoly t1 = msub(msub(t, mmul(t, b, m2), m2), mmul(c, g1, m2), m2);
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
}

ZPoly mpoly_to_zpoly(const MPoly& f) {
    ZPoly out = f.c;
    ztrim(out);
    return out;
}

MPoly to_mpoly(const PPoly& f, const Integer& m) {
    MPoly out;
    out.c.reserve(f.c.size());
    for (auto x : f.c) out.c.push_back(mreduce(Integer(static_cast<long>(x)), m));
    mtrim(out);
    return out;
}

// Lift the congruence f = lc(f) * prod(parts) (mod p) to modulus p^(2^j) >= bound.
// Returns the lifted factors, each monic modulo the final modulus `modulus`.
std::vector<ZPoly> hensel_lift_tree(const ZPoly& f, const std::vector<PPoly>& parts, uint64_t p,
                                    const Integer& bound, Integer& modulus) {
    Integer m(static_cast<long>(p));
    modulus = m;
    while (modulus < bound) modulus = modulus * modulus;

    struct Rec {
        std::vector<ZPoly> operator()(const ZPoly& local_f, const std::vector<PPoly>& fs, size_t lo,
                                      size_t hi, uint64_t p, const Integer& target) const {
            if (hi - lo == 1) return {local_f};
            size_t mid = lo + (hi - lo) / 2;
            PPoly gp = pconst(p, 1), hp = pconst(p, 1);
            for (size_t i = lo; i < mid; ++i) gp = pmul(gp, fs[i]);
            for (size_t i = mid; i < hi; ++i) hp = pmul(hp, fs[i]);
            // put the leading coefficient of local_f on the left branch
            PPoly flc = zpoly_mod_p({local_f.back()}, p);
            gp = pmul(gp, flc);
            // Bezout mod p
            PPoly a = gp, b = hp;
            PPoly s0 = pconst(p, 1), s1 = pzero(p), t0 = pzero(p), t1 = pconst(p, 1);
            while (!b.c.empty()) {
                // a = q b + r
                PPoly r = a;
                PPoly q{p, {}};
                uint64_t inv = invmod(b.c.back(), p);
                if (pdeg(r) >= pdeg(b)) {
                    q.c.assign(static_cast<size_t>(pdeg(r) - pdeg(b)) + 1, 0);
                    for (long k = pdeg(r) - pdeg(b); k >= 0 && !r.c.empty(); --k) {
                        if (static_cast<size_t>(k + pdeg(b)) >= r.c.size()) continue;
                        uint64_t qq = mulmod(r.c[static_cast<size_t>(k + pdeg(b))], inv, p);
                        q.c[static_cast<size_t>(k)] = qq;
                        for (size_t j = 0; j < b.c.size(); ++j) {
                            auto& slot = r.c[static_cast<size_t>(k) + j];
                            slot = (slot + p - mulmod(qq, b.c[j], p)) % p;
                        }
                        ptrim(r);
                    }
                    ptrim(q);
                }
                PPoly s2 = psub(s0, pmul(q, s1));
                PPoly t2 = psub(t0, pmul(q, t1));
                a = std::move(b);
                b = std::move(r);
                s0 = std::move(s1);
                s1 = std::move(s2);
                t0 = std::move(t1);
                t1 = std::move(t2);
            }
            require(pdeg(a) == 0, errc::verification_failure, "hensel: factors not coprime mod p");
            uint64_t ainv = invmod(a.c.back(), p);
            s0 = pscale(s0, ainv);
            t0 = pscale(t0, ainv);
            // now s0 * gp + t0 * hp = 1 (mod p)
            Integer m(static_cast<long>(p));
            MPoly g = to_mpoly(gp, m), h = to_mpoly(hp, m);
            MPoly s = to_mpoly(s0, m), t = to_mpoly(t0, m);
            while (m < target) {
                hensel_step(local_f, g, h, s, t, m);
                m = m * m;
            }
            ZPoly gz = mpoly_to_zpoly(g), hz = mpoly_to_zpoly(h);
            auto left = (*this)(gz, fs, lo, mid, p, target);
            auto right = (*this)(hz, fs, mid, hi, p, target);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
    };

    auto lifted = Rec{}(f, parts, 0, parts.size(), p, modulus);
    // normalize each lifted factor monic modulo `modulus`
    for (auto& g : lifted) {
        MPoly gm = mmake(g, modulus);
        Integer lead = gm.c.back();
        Integer inv;
        int ok = mpz_invert(inv.get_mpz_t(), lead.get_mpz_t(), modulus.get_mpz_t());
        require(ok != 0, errc::verification_failure, "hensel: leading coefficient not invertible");
        for (auto& c : gm.c) c = mreduce(c * inv, modulus);
        g = mpoly_to_zpoly(gm);
    }
    return lifted;
}

Integer symmetric(const Integer& x, const Integer& m) {
    Integer r = mreduce(x, m);
    if (r * 2 > m) r -= m;
    return r;
}

// Zassenhaus recombination of lifted modular factors.
std::vector<ZPoly> recombine(ZPoly f, std::vector<ZPoly> lifted, const Integer& modulus) {
    std::vector<ZPoly> out;
    std::vector<size_t> alive(lifted.size());
    for (size_t i = 0; i < alive.size(); ++i) alive[i] = i;

    auto try_subset = [&](const std::vector<size_t>& subset) -> bool {
        MPoly prod = mmake({f.back()}, modulus);
        for (size_t idx : subset) prod = mmul(prod, mmake(lifted[idx], modulus), modulus);
        ZPoly cand(prod.c.size());
        for (size_t i = 0; i < prod.c.size(); ++i) cand[i] = symmetric(prod.c[i], modulus);
        ztrim(cand);
        if (cand.empty()) return false;
        cand = zprimitive(cand);
        ZPoly quo;
        if (!zdivide(f, cand, quo)) return false;
        out.push_back(cand);
        f = zprimitive(quo);
        std::vector<size_t> next;
        for (size_t idx : alive)
            if (std::find(subset.begin(), subset.end(), idx) == subset.end()) next.push_back(idx);
        alive = std::move(next);
        return true;
    };

    size_t card = 1;
    while (2 * card <= alive.size()) {
        bool found = true;
        while (found && 2 * card <= alive.size()) {
            found = false;
            std::vector<size_t> pick(card);
            std::vector<size_t> idx(card);
            for (size_t i = 0; i < card; ++i) idx[i] = i;
            while (true) {
                for (size_t i = 0; i < card; ++i) pick[i] = alive[idx[i]];
                long degsum = 0;
                for (size_t i : pick) degsum += zdeg(lifted[i]);
                if (2 * degsum <= zdeg(f) && try_subset(pick)) {
                    found = true;
                    break;
                }
                // next combination
                long i = static_cast<long>(card) - 1;
                while (i >= 0 && idx[static_cast<size_t>(i)] == alive.size() - card + static_cast<size_t>(i)) --i;
                if (i < 0) break;
                ++idx[static_cast<size_t>(i)];
                for (size_t j = static_cast<size_t>(i) + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
        ++card;
    }
    if (zdeg(f) >= 1) out.push_back(zprimitive(f));
    return out;
}

// Factor a primitive squarefree integer polynomial into irreducibles.
std::vector<ZPoly> factor_squarefree_z(const ZPoly& f) {
    if (zdeg(f) <= 1) return {f};
    // prime selection: good reduction, squarefree image, small factor count
    uint64_t best_p = 0;
    std::vector<PPoly> best_parts;
    int good_found = 0;
    for (uint64_t p = 3; p < 100000 && good_found < 5; p += 2) {
        if (!is_prime_u(p)) continue;
        Integer lc = f.back() % Integer(static_cast<long>(p));
        if (sgn(lc) == 0) continue;
        PPoly fp = zpoly_mod_p(f, p);
        if (pdeg(fp) != zdeg(f)) continue;
        if (pdeg(pgcd(fp, pderiv(fp))) != 0) continue;
        auto parts = factor_squarefree_mod_p(fp);
        ++good_found;
        if (best_p == 0 || parts.size() < best_parts.size()) {
            best_p = p;
            best_parts = std::move(parts);
        }
        if (best_parts.size() == 1) break;
    }
    require(best_p != 0, errc::verification_failure, "no good prime found for factorization");
    if (best_parts.size() == 1) return {f};

    // Mignotte-style bound on coefficients of lc(f) * (monic factor of f)
    Integer norm2(0);
    for (const auto& c : f) norm2 += c * c;
    Integer root = sqrt(norm2) + 1;
    Integer bound = abs(f.back()) * root;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(zdeg(f) + 1));
    bound = bound * 2 + 1;

    Integer modulus;
    auto lifted = hensel_lift_tree(f, best_parts, best_p, bound, modulus);
    auto out = recombine(f, std::move(lifted), modulus);
    ZPoly check{Integer(1)};
    for (const auto& g : out) check = zmul(check, g);
    check = zprimitive(check);
    require(check == zprimitive(f), errc::verification_failure, "factor product does not reconstruct input");
    return out;
}

bool qpoly_less(const QPoly& a, const QPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (long i = a.degree(); i >= 0; --i) {
        int c = cmp(a.coeff_or_zero(i, Rational(0)), b.coeff_or_zero(i, Rational(0)));
        if (c != 0) return c < 0;
    }
    return false;
}

} // namespace

QFactorization factor_over_Q(const QPoly& p) {
    require(!p.is_zero(), errc::zero_polynomial, "factorization of zero polynomial");
    QFactorization out;
    out.leading = p.leading();
    if (p.degree() == 0) return out;
    auto parts = squarefree_decomposition(p);
    for (const auto& part : parts) {
        ZPoly zpart = zprimitive(qpoly_clear_denominators(part.factor));
        for (const auto& zf : factor_squarefree_z(zpart))
            out.factors.push_back({zpoly_to_monic_qpoly(zf), part.multiplicity});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const QFactor& a, const QFactor& b) { return qpoly_less(a.factor, b.factor); });
    return out;
}

bool is_irreducible_over_Q(const QPoly& p) {
    if (p.degree() < 1) return false;
    auto f = factor_over_Q(p);
    return f.factors.size() == 1 && f.factors[0].multiplicity == 1 &&
           f.factors[0].factor.degree() == p.degree();
}

std::vector<Rational> rational_roots(const QPoly& p) {
    std::vector<Rational> roots;
    for (const auto& f : factor_over_Q(p).factors)
        if (f.factor.degree() == 1) roots.push_back(-f.factor.coeff_or_zero(0, Rational(0)));
    return roots;
}

QPoly cyclotomic(long n) {
    require(n >= 1, errc::bad_params, "cyclotomic index must be positive");
    static std::map<long, QPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Rational> xn(static_cast<size_t>(n) + 1, Rational(0));
    xn[0] = -1;
    xn[static_cast<size_t>(n)] = 1;
    QPoly num(std::move(xn));
    for (long d = 1; d < n; ++d)
        if (n % d == 0) num = num / cyclotomic(d);
    cache[n] = num;
    return num;
}

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

} // namespace orb
