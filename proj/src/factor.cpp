#include "gl2/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "gl2/modarith.hpp"

namespace gl2 {

namespace {

constexpr uint64_t kTrialBound = 1000000;

uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) { uint64_t t = a % b; a = b; b = t; }
    return a;
}

// Brent's cycle variant of Pollard rho; n must be odd, composite, not a
// prime power handled elsewhere. Returns a nontrivial factor.
uint64_t rho_brent(uint64_t n) {
    if (n % 2 == 0) return 2;
    for (uint64_t c = 1;; ++c) {
        uint64_t x = 2, y = 2, d = 1;
        uint64_t ys = y, q = 1;
        const uint64_t m = 128;
        uint64_t r = 1;
        auto step = [&](uint64_t v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            x = y;
            for (uint64_t i = 0; i < r; ++i) y = step(y);
            for (uint64_t k = 0; k < r && d == 1; k += m) {
                ys = y;
                uint64_t lim = std::min(m, r - k);
                for (uint64_t i = 0; i < lim; ++i) {
                    y = step(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = gcd_u64(q, n);
            }
            r <<= 1;
        }
        if (d == n) {
            // backtrack one step at a time
            do {
                ys = step(ys);
                d = gcd_u64(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_rec(uint64_t n, std::map<uint64_t, uint32_t>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) { ++out[n]; return; }
    uint64_t d = rho_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

std::vector<std::pair<uint64_t, uint32_t>> factor_u64(uint64_t n, uint64_t trial_bound) {
    if (n == 0) throw std::domain_error("factor_u64: zero");
    std::map<uint64_t, uint32_t> acc;
    for (uint64_t p : {2ull, 3ull, 5ull}) {
        while (n % p == 0) { n /= p; ++acc[p]; }
    }
    // 6k +/- 1 wheel up to the trial bound, with early exit at sqrt
    for (uint64_t d = 7, step = 4; d <= trial_bound && d * d <= n; d += step, step = 6 - step) {
        while (n % d == 0) { n /= d; ++acc[d]; }
    }
    if (n > 1) {
        if (is_prime_u64(n)) ++acc[n];
        else factor_rec(n, acc);
    }
    return {acc.begin(), acc.end()};
}

std::vector<std::pair<BigInt, uint32_t>> factor_big(const BigInt& n) {
    if (n == 0) throw std::domain_error("factor_big: zero");
    BigInt m = abs(n);
    std::vector<std::pair<BigInt, uint32_t>> out;
    if (m == 1) return out;
    if (m.fits_ulong_p()) {
        for (auto [p, e] : factor_u64(m.get_ui()))
            out.emplace_back(BigInt(static_cast<unsigned long>(p)), e);
        return out;
    }
    // strip small primes, then insist the cofactor is word-sized; desk-scale
    // inputs stay far below 2^64 after this
    for (uint64_t p : {2ull, 3ull, 5ull}) {
        uint32_t e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) { mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p); ++e; }
        if (e) out.emplace_back(BigInt(static_cast<unsigned long>(p)), e);
    }
    for (uint64_t d = 7, step = 4; d <= kTrialBound; d += step, step = 6 - step) {
        if (!mpz_divisible_ui_p(m.get_mpz_t(), d)) continue;
        uint32_t e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), d)) { mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d); ++e; }
        out.emplace_back(BigInt(static_cast<unsigned long>(d)), e);
        if (m.fits_ulong_p()) break;
    }
    if (m > 1) {
        if (!m.fits_ulong_p())
            throw std::domain_error("factor_big: cofactor too large for exact factorization");
        for (auto [p, e] : factor_u64(m.get_ui()))
            out.emplace_back(BigInt(static_cast<unsigned long>(p)), e);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

bool is_squarefree(const BigInt& n) {
    if (n == 0) throw std::domain_error("is_squarefree: zero is not supported");
    for (const auto& [p, e] : factor_big(n))
        if (e > 1) return false;
    return true;
}

std::vector<BigInt> prime_support(const BigInt& n) {
    std::vector<BigInt> out;
    for (const auto& [p, e] : factor_big(n)) out.push_back(p);
    return out;
}

} // namespace gl2
