#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hasselab {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_from_string(const std::string& s) {
    Int v;
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
    return v;
}

inline int sgn(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sgn(const Rat& a) { return mpq_sgn(a.get_mpq_t()); }

// p-adic valuation of a nonzero integer; nullopt means +infinity (a == 0).
inline std::optional<long> vp(const Int& a, const Int& p) {
    if (a == 0) return std::nullopt;
    Int t = a, q, r;
    long v = 0;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
        if (r != 0) return v;
        t = q;
        ++v;
    }
}

// floor of the k-th root of a nonnegative integer
inline Int iroot(const Int& a, unsigned long k) {
    if (a < 0) throw std::domain_error("iroot of negative");
    Int r;
    mpz_root(r.get_mpz_t(), a.get_mpz_t(), k);
    return r;
}

inline Int isqrt(const Int& a) { return iroot(a, 2); }

inline bool is_perfect_square(const Int& a, Int* root = nullptr) {
    if (a < 0) return false;
    Int r = isqrt(a);
    if (r * r == a) {
        if (root) *root = r;
        return true;
    }
    return false;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int g;
    mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int pow_int(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

inline Int pow_int(unsigned long a, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), a, e);
    return r;
}

// a mod m reduced to [0, m)
inline Int mod_pos(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num);
    r /= Rat(den);
    return r;
}

inline Int num(const Rat& r) { return Int(r.get_num()); }
inline Int den(const Rat& r) { return Int(r.get_den()); }

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

inline Rat ceil_rat(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return Rat(q);
}

inline Int ceil_to_int(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Int floor_to_int(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

// decimal rendering of a rational, round-to-nearest, `digits` places
std::string decimal_string(const Rat& value, int digits);

}  // namespace hasselab
