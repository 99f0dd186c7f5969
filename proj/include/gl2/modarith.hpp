// modarith.hpp: word-sized modular arithmetic, deterministic primality,
// quadratic residues and square roots mod p.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace gl2 {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m);

// Inverse of a mod m for gcd(a, m) = 1; throws std::domain_error otherwise.
uint64_t invmod(uint64_t a, uint64_t m);

// Deterministic Miller-Rabin, valid for all 64-bit n.
bool is_prime_u64(uint64_t n);

// Legendre symbol (a/p) for odd prime p: returns -1, 0 or 1.
int legendre(uint64_t a, uint64_t p);

// Square root of a mod odd prime p, if one exists. Tonelli-Shanks.
std::optional<uint64_t> sqrt_mod(uint64_t a, uint64_t p);

// All primes <= bound, by sieve of Eratosthenes.
std::vector<uint32_t> primes_up_to(uint32_t bound);

} // namespace gl2
