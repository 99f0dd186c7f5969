// family.hpp: the fixed-A family pipeline. Sieve B, certify surjectivity,
// attach the discriminant bound c_ell * delta_f^k for k the inertia
// exponent of the chosen representation, count below an X grid, and fit
// the empirical exponent.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gl2/exact.hpp"
#include "gl2/group.hpp"
#include "gl2/permrep.hpp"
#include "gl2/surject.hpp"

namespace gl2 {

enum class CellPolicy { unit, wild_bound };

std::string to_string(CellPolicy p);
CellPolicy cell_policy_from_string(const std::string& s);

struct FamilyConfig {
    PrimeEll ell;
    BigInt A;
    PermKind rep_kind = PermKind::projective;
    GroupTag group = GroupTag::PGL2;
    std::vector<Gl2Element> coset_subgroup;  // used only when rep_kind is coset
    int64_t b_min = 1;
    int64_t b_max = 1;
    uint64_t budget = 1000;            // Frobenius prime bound
    CellPolicy c_policy = CellPolicy::unit;
    std::vector<BigInt> x_grid;        // strictly increasing, positive
    unsigned threads = 0;              // 0 = hardware concurrency
};

struct FamilyRecord {
    int64_t B;
    BigInt delta_f;
    bool singular = false;
    bool squarefree = false;
    std::optional<SurjectivityVerdict> verdict;  // absent when singular
    std::optional<BigInt> disc_bound;            // present iff squarefree and certified
    std::vector<BigInt> support;                 // primes of |delta_f|
    // "singular", "non-squarefree", "not-certified", or empty when counted
    std::string excluded_reason;

    bool counted() const { return disc_bound.has_value(); }
};

struct DistinctnessResult {
    bool pass = true;
    std::vector<std::pair<int64_t, int64_t>> offending;  // pairs of B
};

struct FamilyReport {
    FamilyConfig config;
    uint64_t inertia_ind = 0;
    BigInt c_ell;
    std::vector<FamilyRecord> records;              // ascending B
    std::vector<std::pair<BigInt, uint64_t>> counts;  // (X, #counted with bound <= X)
    std::optional<std::pair<double, double>> slope;   // (value, stderr)
    DistinctnessResult distinctness;
};

// The wild-ramification ceiling: 1 for the unit policy, otherwise the
// product over p | 6 ell of p^(d - 1 + d * floor(log_p d)).
BigInt c_ell_value(CellPolicy policy, PrimeEll ell, uint64_t degree);

// Runs the whole pipeline. Deterministic: the report is identical for any
// thread count. Throws std::domain_error on invalid configuration.
FamilyReport run_family(const FamilyConfig& cfg);

// #records with disc_bound <= X; exact comparison. X must be positive.
uint64_t count_below(const FamilyReport& r, const BigInt& X);

// Least-squares slope of log(count) against log(X) over points with
// positive count; returns (slope, stderr). Throws std::domain_error when
// fewer than two usable points remain.
std::pair<double, double> fit_exponent(const std::vector<std::pair<BigInt, uint64_t>>& points);

// Counted records must have pairwise distinct delta_f and pairwise distinct
// prime supports.
DistinctnessResult distinctness_check(const FamilyReport& r);

// {config, inertia_ind, c_ell, records, counts, slope, distinctness}
Json family_json(const FamilyReport& r);

// columns: B, delta_f, squarefree, certified, disc_bound, excluded_reason
std::string family_csv(const FamilyReport& r);

// Parses a comma-separated X grid of decimal integers or base^exp items.
std::vector<BigInt> parse_x_grid(const std::string& list);

} // namespace gl2
