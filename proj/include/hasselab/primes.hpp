#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hasselab/integer.hpp"

namespace hasselab {

// deterministic Miller-Rabin, valid for all n < 3.3e24
bool is_prime_u64(std::uint64_t n);
bool is_prime(const Int& n);  // deterministic below 3.3e24, BPSW-style beyond

// primes up to `bound` (cached sieve; bound <= 2e6)
const std::vector<std::uint32_t>& small_primes(std::uint32_t bound = 1000000);

struct Factorization {
    std::map<Int, int> primes;        // prime -> exponent
    std::optional<Int> cofactor;      // composite part left when the work cap ran out
    bool complete() const { return !cofactor.has_value(); }
};

// trial division to `trial_bound`, then Brent rho limited to ~`rho_budget`
// iterations in total.
Factorization factor(const Int& n, std::uint32_t trial_bound = 1000000,
                     std::uint64_t rho_budget = 40000000);

}  // namespace hasselab
