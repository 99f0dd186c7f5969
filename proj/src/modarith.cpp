#include "gl2/modarith.hpp"

#include <stdexcept>

namespace gl2 {

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    if (m == 1) return 0;
    uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t m) {
    // extended Euclid on (a, m), tracking only the coefficient of a
    int64_t t = 0, newt = 1;
    uint64_t r = m, newr = a % m;
    while (newr != 0) {
        uint64_t q = r / newr;
        int64_t tmp = t - static_cast<int64_t>(q) * newt;
        t = newt; newt = tmp;
        uint64_t rtmp = r - q * newr;
        r = newr; newr = rtmp;
    }
    if (r != 1) throw std::domain_error("invmod: argument not invertible");
    return t < 0 ? static_cast<uint64_t>(t + static_cast<int64_t>(m)) : static_cast<uint64_t>(t);
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // this witness set decides primality for every n < 2^64
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

int legendre(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    uint64_t e = powmod(a, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

std::optional<uint64_t> sqrt_mod(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (legendre(a, p) != 1) return std::nullopt;
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    // Tonelli-Shanks
    uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    uint64_t z = 2;
    while (legendre(z, p) != -1) ++z;
    uint64_t m = s;
    uint64_t c = powmod(z, q, p);
    uint64_t t = powmod(a, q, p);
    uint64_t r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        uint64_t i = 0, tt = t;
        while (tt != 1) { tt = mulmod(tt, tt, p); ++i; }
        uint64_t b = c;
        for (uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

std::vector<uint32_t> primes_up_to(uint32_t bound) {
    std::vector<uint32_t> out;
    if (bound < 2) return out;
    std::vector<bool> comp(bound + 1, false);
    for (uint32_t i = 2; i <= bound; ++i) {
        if (!comp[i]) {
            out.push_back(i);
            for (uint64_t j = static_cast<uint64_t>(i) * i; j <= bound; j += i) comp[j] = true;
        }
    }
    return out;
}

} // namespace gl2
