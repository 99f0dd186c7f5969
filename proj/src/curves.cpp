#include "gl2/curves.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "gl2/factor.hpp"
#include "gl2/modarith.hpp"

namespace gl2 {

BigInt WeierstrassCurve::delta_f() const { return 4 * A * A * A + 27 * B * B; }

CurveInvariants curve_invariants(const WeierstrassCurve& c) {
    BigInt df = c.delta_f();
    if (df == 0) throw std::domain_error("curve_invariants: singular curve (delta_f = 0)");
    CurveInvariants inv;
    inv.delta_f = df;
    inv.delta_E = -16 * df;
    BigInt a3 = 4 * abs(c.A) * abs(c.A) * abs(c.A);
    BigInt b2 = 27 * c.B * c.B;
    inv.height = a3 > b2 ? a3 : b2;
    inv.factorization = factor_big(df);
    inv.squarefree_delta_f = true;
    for (const auto& [p, e] : inv.factorization)
        if (e > 1) inv.squarefree_delta_f = false;
    return inv;
}

std::optional<int64_t> j_valuation(const WeierstrassCurve& c, const BigInt& p) {
    bool prime = p.fits_ulong_p() ? is_prime_u64(p.get_ui())
                                  : mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
    if (p < 2 || !prime) throw std::domain_error("j_valuation: p is not prime");
    BigInt df = c.delta_f();
    if (df == 0) throw std::domain_error("j_valuation: singular curve");
    if (c.A == 0) return std::nullopt;  // j = 0

    auto val = [&](BigInt n) -> int64_t {
        BigInt out;
        return static_cast<int64_t>(mpz_remove(out.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
    };
    // j = 2^8 3^3 A^3 / delta_f up to sign; only the valuation is used
    int64_t num = 3 * val(c.A);
    if (p == 2) num += 8;
    if (p == 3) num += 3;
    return num - val(df);
}

namespace {

constexpr uint32_t kPremarkBound = 10000;

// first value >= lo congruent to r mod m
int64_t first_in_range(int64_t lo, uint64_t r, uint64_t m) {
    int64_t rem = lo % static_cast<int64_t>(m);
    if (rem < 0) rem += m;
    int64_t delta = static_cast<int64_t>(r) - rem;
    if (delta < 0) delta += m;
    return lo + delta;
}

} // namespace

SieveResult sieve_family(const BigInt& A, int64_t b_min, int64_t b_max) {
    if (A == 0) throw std::domain_error("sieve_family: the family fixes A != 0");
    if (b_max < b_min) throw std::domain_error("sieve_family: empty range");

    const size_t n = static_cast<size_t>(b_max - b_min + 1);
    std::vector<char> marked(n, 0);
    auto mark_progression = [&](uint64_t r, uint64_t m) {
        for (int64_t b = first_in_range(b_min, r, m); b <= b_max; b += static_cast<int64_t>(m))
            marked[static_cast<size_t>(b - b_min)] = 1;
    };

    // p = 2: delta_f = 4(A^3 + 27 t^2) for B = 2t, so every even B has
    // 4 | delta_f; odd B gives odd delta_f.
    mark_progression(0, 2);
    // p = 3: if 3 | A then 27 | delta_f for every B; otherwise 3 never
    // divides delta_f.
    if (mpz_divisible_ui_p(A.get_mpz_t(), 3)) mark_progression(0, 3);

    BigInt dmax = std::max(abs(4 * A * A * A + 27 * BigInt(b_min) * BigInt(b_min)),
                           abs(4 * A * A * A + 27 * BigInt(b_max) * BigInt(b_max)));
    for (uint32_t p : primes_up_to(kPremarkBound)) {
        if (p < 5) continue;
        if (mpz_divisible_ui_p(A.get_mpz_t(), p)) {
            // p | A and p | B force p^2 | delta_f; p | A and p !| B give
            // valuation zero
            mark_progression(0, p);
            continue;
        }
        BigInt psq(p);
        psq *= p;
        if (psq > dmax) continue;
        const uint64_t p2 = static_cast<uint64_t>(p) * p;
        // solve 27 B^2 = -4 A^3 mod p^2
        uint64_t a_mod = mpz_fdiv_ui(A.get_mpz_t(), p2);
        uint64_t c = mulmod(mulmod(a_mod, a_mod, p2), a_mod, p2);
        c = mulmod(c, 4, p2);
        c = (p2 - c) % p2;                       // -4 A^3
        c = mulmod(c, invmod(27 % p2, p2), p2);  // ... / 27
        uint64_t c0 = c % p;
        if (legendre(c0, p) != 1) continue;
        uint64_t r0 = *sqrt_mod(c0, p);
        // Hensel: r = r0 + t p with t = (c - r0^2)/p * (2 r0)^-1 mod p
        uint64_t diff = (c + p2 - (r0 * r0) % p2) % p2;
        uint64_t t = mulmod((diff / p) % p, invmod(2 * r0 % p, p), p);
        uint64_t r = r0 + t * p;
        mark_progression(r, p2);
        mark_progression((p2 - r) % p2, p2);
    }

    // unmarked B carry at most one power of every premark prime, so after
    // stripping those the cofactor is rough: 1, a prime, or a short product
    // of primes above the premark bound, settled by Miller-Rabin plus rho
    auto premark_primes = primes_up_to(kPremarkBound);
    auto squarefree_unmarked = [&](const BigInt& df) {
        if (!df.fits_slong_p()) return is_squarefree(df);
        uint64_t m = static_cast<uint64_t>(std::llabs(df.get_si()));
        for (uint32_t p : premark_primes) {
            if (static_cast<uint64_t>(p) * p > m) break;
            if (m % p == 0) {
                m /= p;
                if (m % p == 0) return false;  // backstop; premarking covers this
            }
        }
        if (m == 1 || is_prime_u64(m)) return true;
        for (const auto& [p, e] : factor_u64(m, /*trial_bound=*/1))
            if (e > 1) return false;
        return true;
    };

    SieveResult out;
    out.summary = SieveSummary{A, b_min, b_max, 0, 0, 0, 0.0};
    for (int64_t b = b_min; b <= b_max; ++b) {
        if (b == 0) { ++out.summary.skipped; continue; }
        BigInt df = 4 * A * A * A + 27 * BigInt(b) * BigInt(b);
        if (df == 0) { ++out.summary.skipped; continue; }
        bool sf = marked[static_cast<size_t>(b - b_min)] ? false : squarefree_unmarked(df);
        out.records.push_back({b, df, sf});
        ++out.summary.count;
        if (sf) ++out.summary.squarefree_count;
    }
    out.summary.density = out.summary.count
                              ? static_cast<double>(out.summary.squarefree_count) / static_cast<double>(out.summary.count)
                              : 0.0;
    return out;
}

std::string sieve_csv(const SieveResult& r) {
    std::ostringstream os;
    os << "B,delta_f,squarefree\n";
    for (const auto& rec : r.records)
        os << rec.B << "," << rec.delta_f.get_str() << "," << (rec.squarefree ? 1 : 0) << "\n";
    return os.str();
}

Json sieve_summary_json(const SieveSummary& s) {
    Json j = Json::object();
    j["A"] = big_json(s.A);
    j["range"] = Json{{"min", s.b_min}, {"max", s.b_max}};
    j["count"] = s.count;
    j["squarefree_count"] = s.squarefree_count;
    j["density"] = s.density;
    j["skipped"] = s.skipped;
    return j;
}

Json sieve_json(const SieveResult& r) {
    Json j = sieve_summary_json(r.summary);
    Json recs = Json::array();
    for (const auto& rec : r.records)
        recs.push_back(Json{{"B", rec.B}, {"delta_f", big_json(rec.delta_f)}, {"squarefree", rec.squarefree}});
    j["records"] = std::move(recs);
    return j;
}

} // namespace gl2
