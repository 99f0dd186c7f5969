// curves.hpp: integer invariants of y^2 = x^3 + Ax + B and a squarefree
// sieve over the discriminants delta_f = 4A^3 + 27B^2 of a fixed-A family.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gl2/exact.hpp"

namespace gl2 {

struct WeierstrassCurve {
    BigInt A;
    BigInt B;

    BigInt delta_f() const;  // 4A^3 + 27B^2
};

struct CurveInvariants {
    BigInt delta_f;
    BigInt delta_E;   // -16 delta_f
    BigInt height;    // max(4|A|^3, 27B^2)
    bool squarefree_delta_f;
    std::vector<std::pair<BigInt, uint32_t>> factorization;  // of |delta_f|
};

// Throws std::domain_error when delta_f = 0 (singular curve).
CurveInvariants curve_invariants(const WeierstrassCurve& c);

// Valuation of j = 2^8 3^3 A^3 / delta_f at p; nullopt means infinite
// (j = 0, i.e. A = 0). Throws std::domain_error for nonprime p or a
// singular curve.
std::optional<int64_t> j_valuation(const WeierstrassCurve& c, const BigInt& p);

struct SieveRecord {
    int64_t B;
    BigInt delta_f;
    bool squarefree;
};

struct SieveSummary {
    BigInt A;
    int64_t b_min;
    int64_t b_max;
    uint64_t count;             // emitted records
    uint64_t squarefree_count;
    uint64_t skipped;           // B = 0 or delta_f = 0
    double density;             // squarefree_count / count
};

struct SieveResult {
    std::vector<SieveRecord> records;  // ascending B
    SieveSummary summary;
};

// Sieve of B in [b_min, b_max] for fixed A != 0. B with p^2 | delta_f(B)
// for p < 10^4 are pre-marked by lifting the roots of 27B^2 = -4A^3 mod p
// to mod p^2; the rest are settled by exact factorization. Throws
// std::domain_error for A = 0 or an empty range.
SieveResult sieve_family(const BigInt& A, int64_t b_min, int64_t b_max);

// columns: B, delta_f, squarefree (0/1)
std::string sieve_csv(const SieveResult& r);

// {A, range, count, squarefree_count, density, skipped}
Json sieve_summary_json(const SieveSummary& s);

Json sieve_json(const SieveResult& r);

} // namespace gl2
