#include "gl2/surject.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gl2/modarith.hpp"

namespace gl2 {

std::pair<uint64_t, int64_t> count_points(const WeierstrassCurve& c, uint64_t p) {
    if (p < 5) throw std::domain_error("count_points: p in {2, 3} is not supported");
    if (p >= (1ull << 31) || !is_prime_u64(p)) throw std::domain_error("count_points: bad prime");
    BigInt df = c.delta_f();
    if (df == 0 || mpz_divisible_ui_p(df.get_mpz_t(), p))
        throw std::domain_error("count_points: bad reduction at p");

    // quadratic character table: chi[v] in {-1, 0, +1}
    std::vector<int8_t> chi(p, -1);
    chi[0] = 0;
    for (uint64_t x = 1; x < p; ++x) chi[x * x % p] = 1;

    const uint64_t a = mpz_fdiv_ui(c.A.get_mpz_t(), p);
    const uint64_t b = mpz_fdiv_ui(c.B.get_mpz_t(), p);
    int64_t charsum = 0;
    for (uint64_t x = 0; x < p; ++x)
        charsum += chi[((x * x % p + a) * x + b) % p];

    uint64_t count = p + 1 + charsum;
    int64_t a_p = static_cast<int64_t>(p) + 1 - static_cast<int64_t>(count);
    if (static_cast<double>(a_p) * a_p > 4.0 * static_cast<double>(p))
        throw std::logic_error("count_points: Hasse bound violated");
    return {count, a_p};
}

namespace {

FrobeniusSample classify(uint64_t p, int64_t a_p, PrimeEll ell) {
    const uint32_t L = ell.value;
    uint32_t ap_mod = static_cast<uint32_t>(((a_p % L) + L) % L);
    uint32_t p_mod = static_cast<uint32_t>(p % L);
    uint64_t ap2 = static_cast<uint64_t>(ap_mod) * ap_mod % L;
    uint32_t disc = static_cast<uint32_t>((ap2 + L - (4ull * p_mod) % L) % L);
    DiscClass dc = disc == 0 ? DiscClass::zero
                             : (is_square_in_fl(disc, ell) ? DiscClass::nonzero_square
                                                           : DiscClass::nonsquare);
    uint32_t u = static_cast<uint32_t>(ap2 * invmod(p_mod, L) % L);
    return {p, a_p, p_mod, dc, u};
}

} // namespace

FrobeniusScanner::FrobeniusScanner(uint64_t budget) {
    if (budget >= 5)
        for (uint32_t p : primes_up_to(static_cast<uint32_t>(std::min<uint64_t>(budget, 1u << 30))))
            if (p >= 5) primes_.push_back(p);
    chi_.reserve(primes_.size());
    for (uint32_t p : primes_) {
        std::vector<int8_t> chi(p, -1);
        chi[0] = 0;
        for (uint64_t x = 1; x < p; ++x) chi[x * x % p] = 1;
        chi_.push_back(std::move(chi));
    }
}

std::vector<FrobeniusSample> FrobeniusScanner::samples(const WeierstrassCurve& c,
                                                       PrimeEll ell) const {
    BigInt df = c.delta_f();
    if (df == 0) throw std::domain_error("frobenius_samples: singular curve");
    std::vector<FrobeniusSample> out;
    for (size_t i = 0; i < primes_.size(); ++i) {
        const uint64_t p = primes_[i];
        if (p == ell.value) continue;
        if (mpz_divisible_ui_p(df.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        const auto& chi = chi_[i];
        const uint64_t a = mpz_fdiv_ui(c.A.get_mpz_t(), p);
        const uint64_t b = mpz_fdiv_ui(c.B.get_mpz_t(), p);
        int64_t charsum = 0;
        for (uint64_t x = 0; x < p; ++x)
            charsum += chi[((x * x % p + a) * x + b) % p];
        int64_t a_p = -charsum;
        if (static_cast<double>(a_p) * a_p > 4.0 * static_cast<double>(p))
            throw std::logic_error("frobenius_samples: Hasse bound violated");
        out.push_back(classify(p, a_p, ell));
    }
    return out;
}

std::vector<FrobeniusSample> frobenius_samples(const WeierstrassCurve& c, PrimeEll ell,
                                               uint64_t budget) {
    return FrobeniusScanner(budget).samples(c, ell);
}

namespace {

uint64_t mult_order(uint32_t r, uint32_t ell) {
    uint64_t k = 1, v = r % ell;
    while (v != 1) { v = v * r % ell; ++k; }
    return k;
}

} // namespace

SurjectivityVerdict serre_test(const std::vector<FrobeniusSample>& samples, PrimeEll ell) {
    const uint32_t L = ell.value;
    if (L < 5)
        throw std::domain_error("serre_test: ell < 5 has a different subgroup classification");
    SurjectivityVerdict v{};
    v.examined = samples.size();

    uint64_t det_order = 1;  // order of the subgroup generated by the residues
    for (const auto& s : samples) {
        bool ap_nonzero = (((s.a_p % L) + L) % L) != 0;
        if (!v.w1 && s.disc_class == DiscClass::nonzero_square && ap_nonzero) v.w1 = s.p;
        if (!v.w2 && s.disc_class == DiscClass::nonsquare && ap_nonzero) v.w2 = s.p;
        uint64_t w3poly = (static_cast<uint64_t>(s.u) * s.u + 3ull * L - 3ull * s.u + 1) % L;
        if (!v.w3 && s.u != 0 && s.u != 1 && s.u != 2 && s.u != 4 && w3poly != 0) v.w3 = s.p;
        if (det_order != L - 1 && s.p_mod_ell != 0) {
            uint64_t merged = std::lcm(det_order, mult_order(s.p_mod_ell, L));
            if (merged > det_order) {
                det_order = merged;
                v.w4.push_back(s.p);
            }
        }
    }
    if (!v.w1) v.missing.push_back("W1");
    if (!v.w2) v.missing.push_back("W2");
    if (!v.w3) v.missing.push_back("W3");
    if (det_order != L - 1) v.missing.push_back("W4");
    v.certified = v.missing.empty();
    return v;
}

Json verdict_json(const SurjectivityVerdict& v) {
    Json j = Json::object();
    j["status"] = v.certified ? "certified" : "not_certified";
    Json w = Json::object();
    if (v.w1) w["W1"] = *v.w1;
    if (v.w2) w["W2"] = *v.w2;
    if (v.w3) w["W3"] = *v.w3;
    w["W4"] = v.w4;
    j["witnesses"] = std::move(w);
    j["missing"] = v.missing;
    j["budget"] = v.examined;
    return j;
}

Rational f13_eval(const Rational& t) {
    Rational t2 = t * t;
    Rational quartic = t2 * t2 - 235 * t2 * t + 1211 * t2 - 1660 * t + 6256;
    return -3 * (t2 + t + 7) * (t2 + 4) * quartic;
}

std::vector<ThirteenHit> thirteen_family_scan(const BigInt& A, int64_t height_bound) {
    if (A == 0) throw std::domain_error("thirteen_family_scan: A must be nonzero");
    std::vector<ThirteenHit> hits;
    Rational bigA(A);
    for (int64_t s = 1; s <= height_bound; ++s)
        for (int64_t r = -height_bound; r <= height_bound; ++r) {
            if (std::gcd(r < 0 ? -r : r, s) != 1) continue;
            Rational t(r, s);
            t.canonicalize();
            Rational q = f13_eval(t) / bigA;
            if (q == 0 || q < 0) continue;
            if (!mpz_perfect_square_p(q.get_num().get_mpz_t())) continue;
            if (!mpz_perfect_square_p(q.get_den().get_mpz_t())) continue;
            hits.push_back({t, q});
        }
    std::sort(hits.begin(), hits.end(),
              [](const ThirteenHit& x, const ThirteenHit& y) { return x.t < y.t; });
    return hits;
}

} // namespace gl2
