#include "hasselab/polys.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace hasselab {

// ---------------------------------------------------------------------------
// univariate integer polynomials
// ---------------------------------------------------------------------------

void z_normalize(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int z_degree(const ZPoly& f) { return (int)f.size() - 1; }

Int z_eval(const ZPoly& f, const Int& x) {
    Int r(0);
    for (auto it = f.rbegin(); it != f.rend(); ++it) r = r * x + *it;
    return r;
}

Rat z_eval(const ZPoly& f, const Rat& x) {
    Rat r(0);
    for (auto it = f.rbegin(); it != f.rend(); ++it) r = r * x + Rat(*it);
    return r;
}

ZPoly z_derivative(const ZPoly& f) {
    ZPoly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * (long)i);
    z_normalize(d);
    return d;
}

Int z_content(const ZPoly& f) {
    Int g(0);
    for (const auto& c : f) g = gcd(g, c);
    return g;
}

ZPoly z_primitive(const ZPoly& f) {
    Int g = z_content(f);
    if (g == 0 || g == 1) return f;
    ZPoly r = f;
    for (auto& c : r) c /= g;
    return r;
}

ZPoly z_mul(const ZPoly& f, const ZPoly& g) {
    if (f.empty() || g.empty()) return {};
    ZPoly r(f.size() + g.size() - 1, Int(0));
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
    z_normalize(r);
    return r;
}

ZPoly z_add(const ZPoly& f, const ZPoly& g) {
    ZPoly r(std::max(f.size(), g.size()), Int(0));
    for (std::size_t i = 0; i < f.size(); ++i) r[i] += f[i];
    for (std::size_t i = 0; i < g.size(); ++i) r[i] += g[i];
    z_normalize(r);
    return r;
}

ZPoly z_scale(const ZPoly& f, const Int& c) {
    if (c == 0) return {};
    ZPoly r = f;
    for (auto& x : r) x *= c;
    return r;
}

namespace {

// pseudo-remainder: lead(g)^(deg f - deg g + 1) * f mod g
ZPoly z_prem(ZPoly f, const ZPoly& g) {
    int dg = z_degree(g);
    assert(dg >= 0);
    const Int& lg = g.back();
    while (z_degree(f) >= dg) {
        int df = z_degree(f);
        Int c = f.back();
        for (auto& x : f) x *= lg;
        for (int i = 0; i <= dg; ++i) f[df - dg + i] -= c * g[i];
        z_normalize(f);
        if ((int)f.size() - 1 == df) f.pop_back();  // guard against stray lead
        z_normalize(f);
    }
    return f;
}

}  // namespace

ZPoly z_gcd(const ZPoly& f0, const ZPoly& g0) {
    ZPoly f = z_primitive(f0), g = z_primitive(g0);
    z_normalize(f);
    z_normalize(g);
    if (f.empty()) return g;
    if (g.empty()) return f;
    if (z_degree(f) < z_degree(g)) std::swap(f, g);
    while (!g.empty()) {
        ZPoly r = z_prem(f, g);
        f = g;
        g = z_primitive(r);
    }
    if (!f.empty() && f.back() < 0)
        for (auto& c : f) c = -c;
    return f;
}

ZPoly z_squarefree_part(const ZPoly& f0) {
    ZPoly f = z_primitive(f0);
    if (z_degree(f) <= 1) return f;
    ZPoly g = z_gcd(f, z_derivative(f));
    if (z_degree(g) == 0) return f;
    // g | f in Q[x]; scale f so the classical division is integral throughout
    int dg = z_degree(g);
    ZPoly rem = f;
    for (auto& x : rem) x *= pow_int(g.back(), (unsigned long)(z_degree(f) - dg + 1));
    ZPoly q(rem.size() - g.size() + 1, Int(0));
    while (z_degree(rem) >= dg) {
        int dr = z_degree(rem);
        Int c = rem.back() / g.back();
        q[dr - dg] = c;
        for (int i = 0; i <= dg; ++i) rem[dr - dg + i] -= c * g[i];
        z_normalize(rem);
    }
    z_normalize(q);
    return z_primitive(q);
}

// ---------------------------------------------------------------------------
// Sturm sequences
// ---------------------------------------------------------------------------
namespace {

QPoly q_from_z(const ZPoly& f) {
    QPoly r;
    r.reserve(f.size());
    for (const auto& c : f) r.emplace_back(c);
    return r;
}

Rat q_eval(const QPoly& f, const Rat& x) {
    Rat r(0);
    for (auto it = f.rbegin(); it != f.rend(); ++it) r = r * x + *it;
    return r;
}

QPoly q_neg_rem(QPoly f, const QPoly& g) {
    int dg = (int)g.size() - 1;
    while ((int)f.size() - 1 >= dg && !f.empty()) {
        int df = (int)f.size() - 1;
        Rat c = f.back() / g.back();
        for (int i = 0; i <= dg; ++i) f[df - dg + i] -= c * g[i];
        while (!f.empty() && f.back() == 0) f.pop_back();
    }
    for (auto& c : f) c = -c;
    return f;
}

std::vector<QPoly> sturm_chain(const ZPoly& f) {
    std::vector<QPoly> chain;
    chain.push_back(q_from_z(f));
    chain.push_back(q_from_z(z_derivative(f)));
    while (!chain.back().empty() && (int)chain.back().size() - 1 >= 0) {
        if (chain.back().empty()) break;
        QPoly r = q_neg_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        chain.push_back(std::move(r));
        if ((int)chain.back().size() - 1 == 0) break;
    }
    return chain;
}

int variations_at(const std::vector<QPoly>& chain, const Rat& x) {
    int var = 0, last = 0;
    for (const auto& g : chain) {
        int s = sgn(q_eval(g, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

int variations_at_inf(const std::vector<QPoly>& chain, int dir) {  // dir = +1 or -1
    int var = 0, last = 0;
    for (const auto& g : chain) {
        if (g.empty()) continue;
        int s = sgn(g.back());
        if (dir < 0 && ((int)g.size() - 1) % 2 == 1) s = -s;
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

Rat cauchy_bound(const ZPoly& f) {
    Int m(0);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        Int a = abs(f[i]);
        if (a > m) m = a;
    }
    Rat b = Rat(m) / Rat(abs(f.back()));
    return b + 1;
}

}  // namespace

int count_real_roots(const ZPoly& f0) {
    ZPoly f = z_squarefree_part(f0);
    if (z_degree(f) <= 0) return 0;
    auto chain = sturm_chain(f);
    return variations_at_inf(chain, -1) - variations_at_inf(chain, +1);
}

std::vector<RootInterval> isolate_real_roots(const ZPoly& f) {
    std::vector<RootInterval> out;
    if (z_degree(f) <= 0) return out;
    auto chain = sturm_chain(f);
    Rat b = cauchy_bound(f);
    struct Seg { Rat lo, hi; int n; };
    std::vector<Seg> work;
    {
        int n = variations_at(chain, -b) - variations_at(chain, b);
        if (n > 0) work.push_back({-b, b, n});
    }
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.n == 0) continue;
        if (s.n == 1) {
            out.push_back({std::nullopt, s.lo, s.hi});
            continue;
        }
        Rat mid = (s.lo + s.hi) / 2;
        if (z_eval(f, mid) == 0) {
            out.push_back({mid, mid, mid});
            // shrink a window around the exact root until it holds only that root
            Rat d = (s.hi - s.lo) / 4;
            for (;;) {
                Rat l = mid - d, r = mid + d;
                int inside = variations_at(chain, l) - variations_at(chain, r);
                if (inside == 1 && z_eval(f, l) != 0 && z_eval(f, r) != 0) {
                    int nl = variations_at(chain, s.lo) - variations_at(chain, l);
                    int nr = variations_at(chain, r) - variations_at(chain, s.hi);
                    if (nl > 0) work.push_back({s.lo, l, nl});
                    if (nr > 0) work.push_back({r, s.hi, nr});
                    break;
                }
                d /= 2;
            }
            continue;
        }
        int nl = variations_at(chain, s.lo) - variations_at(chain, mid);
        int nr = s.n - nl;
        if (nl > 0) work.push_back({s.lo, mid, nl});
        if (nr > 0) work.push_back({mid, s.hi, nr});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b2) {
        return a.lo < b2.lo;
    });
    return out;
}

void refine_interval(const ZPoly& f, RootInterval& iv, const Rat& width) {
    if (iv.exact) return;
    int slo = sgn(z_eval(f, iv.lo));
    while (iv.hi - iv.lo >= width) {
        Rat mid = (iv.lo + iv.hi) / 2;
        Rat v = z_eval(f, mid);
        if (v == 0) {
            iv.exact = mid;
            iv.lo = iv.hi = mid;
            return;
        }
        if (sgn(v) == slo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
}

Rat simplest_rational_in(const Rat& lo, const Rat& hi) {
    if (lo > hi) return simplest_rational_in(hi, lo);
    if (lo == hi) return lo;
    Int c = ceil_to_int(lo);
    if (Rat(c) <= hi) {
        // an integer is available; pick the one closest to zero
        if (lo > 0) return Rat(c);
        Int fl = floor_to_int(hi);
        if (hi < 0) return Rat(fl);
        return Rat(0);
    }
    Int n = floor_to_int(lo);
    Rat rl = Rat(1) / (hi - Rat(n));
    Rat rh = Rat(1) / (lo - Rat(n));
    Rat s = simplest_rational_in(rl, rh);
    return Rat(n) + Rat(1) / s;
}

std::vector<Rat> rational_roots(const ZPoly& f0) {
    std::vector<Rat> out;
    ZPoly f = f0;
    z_normalize(f);
    if (f.empty() || z_degree(f) == 0) return out;
    ZPoly g = z_squarefree_part(f);
    if (z_degree(g) < 1) return out;
    if (g[0] == 0) {
        out.emplace_back(0);
        std::size_t k = 0;
        while (k < g.size() && g[k] == 0) ++k;
        g.erase(g.begin(), g.begin() + k);
    }
    if (z_degree(g) < 1) return out;
    Int L = abs(g.back());
    Rat width = Rat(1) / Rat(L * L + 1);
    auto ivs = isolate_real_roots(g);
    for (auto& iv : ivs) {
        if (!iv.exact) refine_interval(g, iv, width);
        Rat cand = iv.exact ? *iv.exact : simplest_rational_in(iv.lo, iv.hi);
        if (z_eval(g, cand) == 0) out.push_back(cand);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// binary forms
// ---------------------------------------------------------------------------

Int BinForm::eval(const Int& x, const Int& y) const {
    // Horner in x with y-powers attached: sum c[i] x^(deg-i) y^i
    Int r(0);
    for (int i = 0; i <= deg; ++i) {
        r *= x;
        Int t = c[i];
        for (int k = 0; k < i; ++k) t *= y;
        r += t;
    }
    return r;
}

bool BinForm::is_zero() const {
    for (const auto& v : c)
        if (v != 0) return false;
    return true;
}

ZPoly BinForm::dehomogenized() const {
    ZPoly u(deg + 1, Int(0));
    for (int i = 0; i <= deg; ++i) u[deg - i] = c[i];
    z_normalize(u);
    return u;
}

std::vector<std::pair<Int, Int>> projective_rational_roots(const BinForm& f) {
    if (f.is_zero()) throw std::invalid_argument("roots of the zero form");
    std::vector<std::pair<Int, Int>> out;
    if (f.c[0] == 0) out.emplace_back(1, 0);
    ZPoly u = f.dehomogenized();
    if (!u.empty()) {
        for (const Rat& r : rational_roots(u)) out.emplace_back(num(r), den(r));
    } else {
        // f = c * y^deg only happens when all other coefficients vanish
    }
    return out;
}

// ---------------------------------------------------------------------------
// determinants, interpolation
// ---------------------------------------------------------------------------

Int int_det(std::vector<std::vector<Int>> m) {
    const int n = (int)m.size();
    if (n == 0) return Int(1);
    Int sign(1), prev(1);
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) { piv = i; break; }
            if (piv < 0) return Int(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] /= prev;  // exact (Bareiss)
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

ZPoly interpolate_at_small_points(const std::vector<Int>& values) {
    const int n = (int)values.size();
    // Newton divided differences at nodes 0,1,...,n-1
    std::vector<Rat> dd(n);
    for (int i = 0; i < n; ++i) dd[i] = Rat(values[i]);
    std::vector<Rat> coef(n);
    coef[0] = dd[0];
    for (int k = 1; k < n; ++k) {
        for (int i = 0; i < n - k; ++i) dd[i] = (dd[i + 1] - dd[i]) / Rat(k);
        coef[k] = dd[0];
    }
    // expand sum coef[k] * x(x-1)...(x-k+1)
    std::vector<Rat> poly(n, Rat(0));
    std::vector<Rat> basis{Rat(1)};
    for (int k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < basis.size(); ++i) poly[i] += coef[k] * basis[i];
        // multiply basis by (x - k)
        std::vector<Rat> nb(basis.size() + 1, Rat(0));
        for (std::size_t i = 0; i < basis.size(); ++i) {
            nb[i + 1] += basis[i];
            nb[i] -= Rat(k) * basis[i];
        }
        basis = std::move(nb);
    }
    ZPoly out(n, Int(0));
    for (int i = 0; i < n; ++i) {
        if (!is_integral(poly[i])) throw std::logic_error("interpolant not integral");
        out[i] = num(poly[i]);
    }
    z_normalize(out);
    return out;
}

// ---------------------------------------------------------------------------
// F_p arithmetic
// ---------------------------------------------------------------------------

Int Fp::inv(const Int& a) const {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::domain_error("not invertible mod p");
    return r;
}

Int Fp::pow(const Int& a, const Int& e) const {
    Int r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return r;
}

bool Fp::is_square(const Int& a) const {
    Int b = reduce(a);
    if (p == 2 || b == 0) return true;
    return pow(b, (p - 1) / 2) == 1;
}

std::optional<Int> Fp::sqrt(const Int& a0) const {
    Int a = reduce(a0);
    if (a == 0) return Int(0);
    if (p == 2) return a;
    if (pow(a, (p - 1) / 2) != 1) return std::nullopt;
    if (mod_pos(p, Int(4)) == 3) return pow(a, (p + 1) / 4);
    // Tonelli-Shanks
    Int q = p - 1;
    long s = 0;
    while (mpz_even_p(q.get_mpz_t())) { q /= 2; ++s; }
    Int z(2);
    while (pow(z, (p - 1) / 2) == 1) ++z;
    Int m(s), c = pow(z, q), t = pow(a, q), r = pow(a, (q + 1) / 2);
    while (t != 1) {
        long i = 0;
        Int tt = t;
        while (tt != 1) { tt = mul(tt, tt); ++i; }
        Int b = c;
        for (long k = 0; k < m.get_si() - i - 1; ++k) b = mul(b, b);
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    return r;
}

namespace {

// fixed-size polynomial arithmetic mod (p, modulus poly) for root finding
using FpPoly = std::vector<Int>;  // index = power, coeffs reduced

void fp_normalize(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly fp_rem(FpPoly f, const FpPoly& g, const Fp& K) {
    Int glead_inv = K.inv(g.back());
    while ((int)f.size() >= (int)g.size() && !f.empty()) {
        Int c = K.mul(f.back(), glead_inv);
        int shift = (int)f.size() - (int)g.size();
        for (std::size_t i = 0; i < g.size(); ++i)
            f[shift + i] = K.sub(f[shift + i], K.mul(c, g[i]));
        fp_normalize(f);
        if ((int)f.size() == shift + (int)g.size()) f.pop_back(), fp_normalize(f);
    }
    return f;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& mod, const Fp& K) {
    FpPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
    fp_normalize(r);
    return fp_rem(std::move(r), mod, K);
}

FpPoly fp_powmod_x(const Int& e, const FpPoly& mod, const Fp& K) {
    // x^e mod (mod, p)
    FpPoly base{Int(0), Int(1)};
    base = fp_rem(base, mod, K);
    FpPoly result{Int(1)};
    Int ee = e;
    while (ee > 0) {
        if (mpz_odd_p(ee.get_mpz_t())) result = fp_mulmod(result, base, mod, K);
        base = fp_mulmod(base, base, mod, K);
        ee /= 2;
    }
    return result;
}

FpPoly fp_powmod(FpPoly base, const Int& e, const FpPoly& mod, const Fp& K) {
    base = fp_rem(std::move(base), mod, K);
    FpPoly result{Int(1)};
    Int ee = e;
    while (ee > 0) {
        if (mpz_odd_p(ee.get_mpz_t())) result = fp_mulmod(result, base, mod, K);
        base = fp_mulmod(base, base, mod, K);
        ee /= 2;
    }
    return result;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, const Fp& K) {
    fp_normalize(a);
    fp_normalize(b);
    while (!b.empty()) {
        FpPoly r = fp_rem(a, b, K);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Int inv = K.inv(a.back());
        for (auto& c : a) c = K.mul(c, inv);
    }
    return a;
}

void fp_roots_split(const FpPoly& g, const Fp& K, std::vector<Int>& out, unsigned long salt) {
    int d = (int)g.size() - 1;
    if (d <= 0) return;
    if (d == 1) {
        out.push_back(K.mul(K.sub(Int(0), g[0]), K.inv(g[1])));
        return;
    }
    if (d == 2) {
        Int a = g[2], b = g[1], c0 = g[0];
        Int disc = K.sub(K.mul(b, b), K.mul(Int(4), K.mul(a, c0)));
        auto s = K.sqrt(disc);
        if (!s) return;  // cannot happen: g splits into linear factors
        Int inv2a = K.inv(K.mul(Int(2), a));
        out.push_back(K.mul(K.sub(*s, b), inv2a));
        Int r2 = K.mul(K.sub(K.sub(Int(0), *s), b), inv2a);
        if (r2 != out.back()) out.push_back(r2);
        return;
    }
    // Cantor-Zassenhaus style split with deterministic shifts
    for (unsigned long a = salt;; ++a) {
        FpPoly shifted{K.reduce(Int(a)), Int(1)};  // x + a
        FpPoly h = fp_powmod(shifted, (K.p - 1) / 2, g, K);
        if (h.empty())
            h = FpPoly{K.sub(Int(0), Int(1))};
        else
            h[0] = K.sub(h[0], Int(1));
        fp_normalize(h);
        FpPoly d1 = fp_gcd(h, g, K);
        int dd = (int)d1.size() - 1;
        if (dd > 0 && dd < d) {
            // divide g by d1
            FpPoly q;
            {
                FpPoly rem = g;
                Int linv = K.inv(d1.back());
                q.assign(g.size() - d1.size() + 1, Int(0));
                while ((int)rem.size() >= (int)d1.size() && !rem.empty()) {
                    Int c = K.mul(rem.back(), linv);
                    int shift = (int)rem.size() - (int)d1.size();
                    q[shift] = c;
                    for (std::size_t i = 0; i < d1.size(); ++i)
                        rem[shift + i] = K.sub(rem[shift + i], K.mul(c, d1[i]));
                    fp_normalize(rem);
                }
            }
            fp_roots_split(d1, K, out, a + 1);
            fp_roots_split(q, K, out, a + 1);
            return;
        }
    }
}

}  // namespace

std::vector<Int> roots_mod_p(const ZPoly& f, const Fp& K) {
    FpPoly g;
    g.reserve(f.size());
    for (const auto& c : f) g.push_back(K.reduce(c));
    fp_normalize(g);
    std::vector<Int> out;
    if (g.empty()) throw std::invalid_argument("roots_mod_p of zero polynomial");
    if ((int)g.size() - 1 == 0) return out;
    if (K.p < 64) {
        Int x(0);
        for (; x < K.p; ++x) {
            Int v(0);
            for (auto it = g.rbegin(); it != g.rend(); ++it) v = K.add(K.mul(v, x), *it);
            if (v == 0) out.push_back(x);
        }
        return out;
    }
    // keep only the split part: gcd(x^p - x, g)
    FpPoly xp = fp_powmod_x(K.p, g, K);
    // xp - x
    if (xp.size() < 2) xp.resize(2, Int(0));
    xp[1] = K.sub(xp[1], Int(1));
    fp_normalize(xp);
    FpPoly lin = fp_gcd(xp, g, K);
    fp_roots_split(lin, K, out, 1);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// MPoly
// ---------------------------------------------------------------------------

void MPoly::add_term(const std::array<std::uint8_t, 3>& e, const Int& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms.begin(), terms.end(), e,
                               [](const auto& t, const auto& key) { return t.first < key; });
    if (it != terms.end() && it->first == e) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    } else {
        terms.insert(it, {e, c});
    }
}

Int MPoly::eval(const std::vector<Int>& x) const {
    Int r(0);
    for (const auto& [e, c] : terms) {
        Int t = c;
        for (int v = 0; v < nvars; ++v)
            for (int k = 0; k < e[v]; ++k) t *= x[v];
        r += t;
    }
    return r;
}

MPoly MPoly::partial(int var) const {
    MPoly d = MPoly::zero(nvars);
    for (const auto& [e, c] : terms) {
        if (e[var] == 0) continue;
        auto e2 = e;
        e2[var] -= 1;
        d.add_term(e2, c * (long)e[var]);
    }
    return d;
}

MPoly MPoly::shift_scale(const std::vector<Int>& a, const Int& s) const {
    // substitute x_v <- a[v] + s * x_v, one variable at a time
    MPoly cur = *this;
    for (int v = 0; v < nvars; ++v) {
        MPoly nxt = MPoly::zero(nvars);
        for (const auto& [e, c] : cur.terms) {
            int k = e[v];
            // (a + s x)^k = sum binom(k,i) a^(k-i) s^i x^i
            Int binom(1);
            for (int i = 0; i <= k; ++i) {
                Int coef = c * binom;
                for (int j = 0; j < k - i; ++j) coef *= a[v];
                for (int j = 0; j < i; ++j) coef *= s;
                auto e2 = e;
                e2[v] = (std::uint8_t)i;
                nxt.add_term(e2, coef);
                binom = binom * (k - i) / (i + 1);
            }
        }
        cur = std::move(nxt);
    }
    return cur;
}

MPoly MPoly::divide_exact(const Int& c) const {
    MPoly r = *this;
    for (auto& [e, co] : r.terms) {
        assert(co % c == 0);
        co /= c;
    }
    return r;
}

Int MPoly::content() const {
    Int g(0);
    for (const auto& [e, c] : terms) g = gcd(g, c);
    return g;
}

ZPoly MPoly::univariate_in(int var, const std::vector<Int>& fixed) const {
    ZPoly u;
    for (const auto& [e, c] : terms) {
        Int t = c;
        for (int v = 0; v < nvars; ++v) {
            if (v == var) continue;
            for (int k = 0; k < e[v]; ++k) t *= fixed[v];
        }
        if ((std::size_t)e[var] >= u.size()) u.resize(e[var] + 1, Int(0));
        u[e[var]] += t;
    }
    z_normalize(u);
    return u;
}

int MPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms) d = std::max(d, (int)e[var]);
    return d;
}

// decimal rendering (declared in integer.hpp)
std::string decimal_string(const Rat& value, int digits) {
    Rat v = value;
    bool neg = sgn(v) < 0;
    if (neg) v = -v;
    Int scale = pow_int(Int(10), (unsigned long)digits);
    // round to nearest
    Int scaled = floor_to_int(v * Rat(scale) + Rat(1, 2));
    Int ip = scaled / scale, fp = scaled % scale;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), digits - frac.size(), '0');
    std::string s = (neg ? "-" : "") + ip.get_str();
    if (digits > 0) s += "." + frac;
    return s;
}

}  // namespace hasselab
