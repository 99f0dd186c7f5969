// factor.hpp: exact integer factorization. Trial division below 10^6, then
// deterministic Miller-Rabin plus Brent's rho for the cofactor.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gl2/exact.hpp"

namespace gl2 {

// (prime, exponent) pairs, primes ascending. n must be >= 1. trial_bound
// caps the trial-division stage; callers that already stripped small primes
// can pass a low bound and go straight to Miller-Rabin plus rho.
std::vector<std::pair<uint64_t, uint32_t>> factor_u64(uint64_t n, uint64_t trial_bound = 1000000);

// Factorization of |n|; throws std::domain_error for n = 0.
std::vector<std::pair<BigInt, uint32_t>> factor_big(const BigInt& n);

// True iff no prime square divides |n|. Exact: decided by full
// factorization. Throws std::domain_error for n = 0.
bool is_squarefree(const BigInt& n);

// Distinct primes of |n|, ascending.
std::vector<BigInt> prime_support(const BigInt& n);

} // namespace gl2
