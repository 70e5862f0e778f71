#include "hasselab/primes.hpp"

#include <mutex>

namespace hasselab {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) { return (u128)a * b % m; }

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin_u64(u64 n, u64 a) {
    if (a % n == 0) return true;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin_u64(n, a)) return false;
    }
    return true;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

const std::vector<std::uint32_t>& small_primes(std::uint32_t bound) {
    static std::vector<std::uint32_t> primes;
    static std::uint32_t sieved_to = 0;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    if (bound > sieved_to) {
        primes.clear();
        std::vector<bool> comp(bound + 1, false);
        for (std::uint64_t i = 2; i <= bound; ++i) {
            if (!comp[i]) {
                primes.push_back((std::uint32_t)i);
                for (std::uint64_t j = i * i; j <= bound; j += i) comp[j] = true;
            }
        }
        sieved_to = bound;
    }
    return primes;
}

namespace {

// Brent's cycle variant of Pollard rho; returns a nontrivial factor or 0.
Int brent_rho(const Int& n, unsigned long c, std::uint64_t max_iters, std::uint64_t* used) {
    Int x(2), y(2), d(1), q(1), ys, t;
    std::uint64_t iters = 0;
    unsigned long r = 1, m = 128;
    auto f = [&](Int& v) { v = mod_pos(v * v + c, n); };
    do {
        x = y;
        for (unsigned long i = 0; i < r; ++i) f(y);
        unsigned long k = 0;
        while (k < r && d == 1) {
            ys = y;
            unsigned long lim = std::min<unsigned long>(m, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                f(y);
                t = x - y;
                if (t < 0) t = -t;
                q = mod_pos(q * t, n);
            }
            iters += lim;
            d = gcd(q, n);
            k += lim;
            if (iters > max_iters) { *used += iters; return Int(0); }
        }
        r *= 2;
    } while (d == 1);
    if (d == n) {
        // backtrack
        do {
            f(ys);
            t = x - ys;
            if (t < 0) t = -t;
            d = gcd(t, n);
            ++iters;
            if (iters > max_iters) { *used += iters; return Int(0); }
        } while (d == 1);
    }
    *used += iters;
    if (d == n) return Int(0);
    return d;
}

void factor_rec(const Int& n, Factorization& out, std::uint64_t budget, std::uint64_t* used) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.primes[n] += 1;
        return;
    }
    if (*used >= budget) {
        if (out.cofactor)
            *out.cofactor *= n;
        else
            out.cofactor = n;
        return;
    }
    Int d(0);
    for (unsigned long c = 1; c < 64 && d == 0 && *used < budget; ++c)
        d = brent_rho(n, c, budget - *used, used);
    if (d == 0) {
        if (out.cofactor)
            *out.cofactor *= n;
        else
            out.cofactor = n;
        return;
    }
    factor_rec(d, out, budget, used);
    factor_rec(n / d, out, budget, used);
}

}  // namespace

Factorization factor(const Int& n_in, std::uint32_t trial_bound, std::uint64_t rho_budget) {
    Factorization out;
    Int n = n_in;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    for (std::uint32_t p : small_primes(trial_bound)) {
        if (Int(p) * p > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out.primes[Int(p)] += 1;
            n /= p;
        }
    }
    if (n == 1) return out;
    if (n <= Int(trial_bound) * trial_bound || is_prime(n)) {
        out.primes[n] += 1;
        return out;
    }
    std::uint64_t used = 0;
    factor_rec(n, out, rho_budget, &used);
    return out;
}

}  // namespace hasselab
