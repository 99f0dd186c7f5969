// surject.hpp: trace-based certification that the mod-ell image of a curve
// is all of GL2(F_ell), plus the rational scan behind the 13-isogeny family.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gl2/curves.hpp"
#include "gl2/exact.hpp"
#include "gl2/group.hpp"

namespace gl2 {

// Frobenius data at a good prime p: a_p = p + 1 - #E(F_p) together with its
// mod-ell classification (disc = a_p^2 - 4p, u = a_p^2 / p).
struct FrobeniusSample {
    uint64_t p;
    int64_t a_p;
    uint32_t p_mod_ell;
    DiscClass disc_class;
    uint32_t u;
};

// Naive character-sum point count over F_p, p >= 5 of good reduction.
// Returns (#E(F_p) including the point at infinity, a_p). Throws
// std::domain_error for p in {2, 3} or p | delta_E.
std::pair<uint64_t, int64_t> count_points(const WeierstrassCurve& c, uint64_t p);

// Samples at every good prime 5 <= p <= budget, p != ell, ascending.
std::vector<FrobeniusSample> frobenius_samples(const WeierstrassCurve& c, PrimeEll ell,
                                               uint64_t budget);

// Shares the per-prime quadratic character tables across many curves; one
// scanner per family run, read-only afterwards and safe to use from
// several threads.
class FrobeniusScanner {
  public:
    explicit FrobeniusScanner(uint64_t budget);
    std::vector<FrobeniusSample> samples(const WeierstrassCurve& c, PrimeEll ell) const;

  private:
    std::vector<uint32_t> primes_;
    std::vector<std::vector<int8_t>> chi_;
};

// Witness classes, each ruling out one maximal-subgroup type:
//   W1  disc nonzero-square, a_p != 0 mod ell   (non-split Cartan normalizer)
//   W2  disc nonsquare,     a_p != 0 mod ell   (Borel, split Cartan normalizer)
//   W3  u outside {0,1,2,4} and u^2-3u+1 != 0  (exceptional projective image)
//   W4  residues p mod ell generate (Z/ell)^x  (determinant surjectivity)
// The test is sound: a proper subgroup is never certified. At a finite
// budget a missing witness is reported as not_certified, not non-surjective.
struct SurjectivityVerdict {
    bool certified;
    std::optional<uint64_t> w1, w2, w3;  // first witness prime per class
    std::vector<uint64_t> w4;            // primes that grew the residue subgroup
    std::vector<std::string> missing;    // unfilled classes, e.g. "W2"
    uint64_t examined;                   // number of samples inspected
};

// Throws std::domain_error for ell < 5 (the maximal-subgroup classification
// used here needs ell >= 5).
SurjectivityVerdict serre_test(const std::vector<FrobeniusSample>& samples, PrimeEll ell);

// {status, witnesses, missing, budget}
Json verdict_json(const SurjectivityVerdict& v);

// The degree-8 polynomial whose values A delta^2 parametrize curves with a
// rational 13-isogeny: -3(t^2+t+7)(t^2+4)(t^4-235t^3+1211t^2-1660t+6256).
Rational f13_eval(const Rational& t);

struct ThirteenHit {
    Rational t;
    Rational delta_sq;  // f13(t) / A
};

// All reduced t = r/s with |r|, s <= height_bound such that f13(t)/A is a
// nonzero rational square; ascending by t. Throws for A = 0.
std::vector<ThirteenHit> thirteen_family_scan(const BigInt& A, int64_t height_bound);

} // namespace gl2
