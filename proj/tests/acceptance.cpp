// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion is self-contained and carries its tolerances inline.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gl2/cli.hpp"
#include "gl2/curves.hpp"
#include "gl2/factor.hpp"
#include "gl2/family.hpp"
#include "gl2/group.hpp"
#include "gl2/malle.hpp"
#include "gl2/modarith.hpp"
#include "gl2/permrep.hpp"
#include "gl2/surject.hpp"

using namespace gl2;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------- criteria

Outcome criterion1_malle_closed_forms() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    for (uint32_t q : {3u, 5u, 7u, 11u, 13u}) {
        PrimeEll ell(q);
        uint64_t nat = malle_index(build_rep(ell, PermKind::natural, GroupTag::GL2)).first;
        uint64_t proj = malle_index(build_rep(ell, PermKind::projective, GroupTag::PGL2)).first;
        o.require(nat == static_cast<uint64_t>(q) * (q - 1) / 2,
                  "natural ell=" + std::to_string(q) + " got " + std::to_string(nat));
        o.require(proj == static_cast<uint64_t>(q - 1) / 2,
                  "projective ell=" + std::to_string(q) + " got " + std::to_string(proj));
    }
    double dt = seconds_since(t0);
    o.require(dt < 60.0, "runtime " + std::to_string(dt) + "s exceeds 60s");
    return o;
}

Outcome criterion2_inertia_exponents() {
    Outcome o;
    for (uint32_t q : {3u, 5u, 7u, 11u, 13u}) {
        PrimeEll ell(q);
        uint64_t nat = inertia_exponent(build_rep(ell, PermKind::natural, GroupTag::GL2));
        uint64_t proj = inertia_exponent(build_rep(ell, PermKind::projective, GroupTag::PGL2));
        o.require(nat == static_cast<uint64_t>(q - 1) * (q - 1),
                  "natural ell=" + std::to_string(q));
        o.require(proj == q - 1, "projective ell=" + std::to_string(q));
    }
    // small ell: direct orbit counting on the materialized permutation
    for (uint32_t q : {3u, 5u, 7u}) {
        PrimeEll ell(q);
        auto reg = build_rep(ell, PermKind::regular, GroupTag::GL2);
        uint64_t orbits = orbit_count(act(reg, Gl2Element::inertia_generator(ell)));
        uint64_t want = static_cast<uint64_t>(q + 1) * (q - 1) * (q - 1) * (q - 1);
        o.require(reg.degree - orbits == want, "regular direct ell=" + std::to_string(q));
    }
    // large ell: the free-action shortcut is the active code path
    for (uint32_t q : {11u, 13u}) {
        PrimeEll ell(q);
        auto reg = build_rep(ell, PermKind::regular, GroupTag::GL2);
        o.require(reg.degree > 10000, "shortcut threshold not engaged");
        uint64_t want = static_cast<uint64_t>(q + 1) * (q - 1) * (q - 1) * (q - 1);
        o.require(inertia_exponent(reg) == want, "regular shortcut ell=" + std::to_string(q));
    }
    return o;
}

Outcome criterion3_exponent_reports() {
    Outcome o;
    auto nat = exponent_report(PrimeEll(13), PermKind::natural, GroupTag::GL2);
    auto proj = exponent_report(PrimeEll(13), PermKind::projective, GroupTag::PGL2);
    auto reg = exponent_report(PrimeEll(13), PermKind::regular, GroupTag::GL2);
    o.require(nat.lower_exponent == unit_fraction(288), "natural != 1/288");
    o.require(proj.lower_exponent == unit_fraction(24), "projective != 1/24");
    o.require(reg.lower_exponent == unit_fraction(48384), "regular != 1/48384");
    return o;
}

Outcome criterion4_transvection_orbits() {
    Outcome o;
    for (uint32_t q : {3u, 5u, 7u, 11u, 13u}) {
        PrimeEll ell(q);
        auto m = Gl2Element::inertia_generator(ell);
        uint64_t nat = orbit_count(act(build_rep(ell, PermKind::natural, GroupTag::GL2), m));
        uint64_t proj = orbit_count(act(build_rep(ell, PermKind::projective, GroupTag::PGL2), m));
        o.require(nat == 2ull * q - 2, "natural orbits ell=" + std::to_string(q));
        o.require(proj == 2, "projective orbits ell=" + std::to_string(q));
    }
    return o;
}

Outcome criterion5_u_classification() {
    Outcome o;
    PrimeEll ell(7);
    const std::set<uint64_t> small{1, 2, 3, 4, 5, 7};
    uint64_t n = 0, exceptions = 0;
    for (const auto& m : enumerate_gl2(ell)) {
        auto inv = invariants_of(m);
        bool u_side = inv.u == 0 || inv.u == 1 || inv.u == 2 || inv.u == 4 ||
                      (static_cast<uint64_t>(inv.u) * inv.u + 21 - 3ull * inv.u + 1) % 7 == 0;
        bool ord_side = small.count(projective_order(m)) > 0;
        if (u_side != ord_side) ++exceptions;
        ++n;
    }
    o.require(n == 2016, "element count " + std::to_string(n));
    o.require(exceptions == 0, std::to_string(exceptions) + " exceptions");
    return o;
}

Outcome criterion6_witness_soundness() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    for (uint32_t q : {7u, 13u}) {
        PrimeEll ell(q);
        auto w1 = [&](const Gl2Element& g) {
            auto i = invariants_of(g);
            return i.disc_class == DiscClass::nonzero_square && i.trace != 0;
        };
        auto w2 = [&](const Gl2Element& g) {
            auto i = invariants_of(g);
            return i.disc_class == DiscClass::nonsquare && i.trace != 0;
        };

        uint64_t violations = 0;
        // Borel: upper triangular
        for (uint32_t a = 1; a < q; ++a)
            for (uint32_t d = 1; d < q; ++d)
                for (uint32_t b = 0; b < q; ++b)
                    if (w2(Gl2Element(ell, a, b, 0, d))) ++violations;
        o.require(violations == 0, "Borel W2 ell=" + std::to_string(q));

        // split Cartan normalizer
        violations = 0;
        for (uint32_t a = 1; a < q; ++a)
            for (uint32_t d = 1; d < q; ++d) {
                if (w2(Gl2Element(ell, a, 0, 0, d))) ++violations;
                if (w2(Gl2Element(ell, 0, a, d, 0))) ++violations;
            }
        o.require(violations == 0, "split normalizer W2 ell=" + std::to_string(q));

        // non-split Cartan normalizer
        violations = 0;
        uint32_t eps = 2;
        while (is_square_in_fl(eps, ell)) ++eps;
        for (uint32_t a = 0; a < q; ++a)
            for (uint32_t b = 0; b < q; ++b) {
                if (a == 0 && b == 0) continue;
                Gl2Element cartan(ell, a, static_cast<int64_t>(eps) * b, b, a);
                if (w1(cartan)) ++violations;
                if (w1(gl2_mul(cartan, Gl2Element::reflection(ell)))) ++violations;
            }
        o.require(violations == 0, "non-split normalizer W1 ell=" + std::to_string(q));
    }
    double dt = seconds_since(t0);
    o.require(dt < 30.0, "runtime " + std::to_string(dt) + "s exceeds 30s");
    return o;
}

Outcome criterion7_point_count_oracle() {
    Outcome o;
    std::mt19937 rng(20240613);
    std::uniform_int_distribution<int64_t> coeff(-20, 20);
    auto primes = primes_up_to(200);
    int curves = 0;
    while (curves < 20) {
        WeierstrassCurve c{BigInt(coeff(rng)), BigInt(coeff(rng))};
        BigInt df = c.delta_f();
        if (df == 0) continue;
        ++curves;
        for (uint32_t p : primes) {
            if (p < 5 || mpz_divisible_ui_p(df.get_mpz_t(), p)) continue;
            uint64_t a = mpz_fdiv_ui(c.A.get_mpz_t(), p);
            uint64_t b = mpz_fdiv_ui(c.B.get_mpz_t(), p);
            uint64_t naive = 1;
            for (uint64_t x = 0; x < p; ++x)
                for (uint64_t y = 0; y < p; ++y)
                    if ((y * y) % p == ((x * x % p + a) * x + b) % p) ++naive;
            auto [fast, a_p] = count_points(c, p);
            (void)a_p;
            o.require(fast == naive, "mismatch at p=" + std::to_string(p));
        }
    }
    return o;
}

Outcome criterion8_controls() {
    Outcome o;
    PrimeEll ell(13);

    auto neg_samples = frobenius_samples({0, 1}, ell, 10000);
    auto neg = serre_test(neg_samples, ell);
    o.require(!neg.certified, "CM curve was certified");
    o.require(neg.missing == std::vector<std::string>{"W2"}, "missing set is not {W2}");
    for (const auto& s : neg_samples)
        if (s.p % 3 == 2 && s.a_p != 0) {
            o.require(false, "a_p != 0 at supersingular p=" + std::to_string(s.p));
            break;
        }

    auto pos = serre_test(frobenius_samples({1, 1}, ell, 1000), ell);
    o.require(pos.certified, "generic curve not certified");
    o.require(pos.w2 == 5, "W2 witness is not p=5");
    o.require(pos.w3 == 5, "W3 witness is not p=5");
    return o;
}

Outcome criterion9_sieve() {
    Outcome o;
    // flags against exact per-value factorization
    auto flags = sieve_family(1, 1, 1000);
    for (const auto& rec : flags.records) {
        bool oracle = is_squarefree(rec.delta_f);
        if (rec.squarefree != oracle) {
            o.require(false, "flag mismatch at B=" + std::to_string(rec.B));
            break;
        }
    }
    auto d1 = sieve_family(1, 1, 10000);
    auto d2 = sieve_family(1, 1, 20000);
    char buf[128];
    std::snprintf(buf, sizeof buf, "density(10^4) = %.4f outside (0.5, 1.0)",
                  d1.summary.density);
    o.require(d1.summary.density > 0.5 && d1.summary.density < 1.0, buf);
    o.require(std::abs(d1.summary.density - d2.summary.density) < 0.05,
              "density moved by >= 0.05 when the range doubled");
    return o;
}

FamilyConfig acceptance_family(unsigned threads) {
    return FamilyConfig{
        .ell = PrimeEll(13),
        .A = 1,
        .rep_kind = PermKind::projective,
        .group = GroupTag::PGL2,
        .b_min = 1,
        .b_max = 2000,
        .budget = 1000,
        .c_policy = CellPolicy::unit,
        .x_grid = parse_x_grid("10^48,10^72,10^96"),
        .threads = threads,
    };
}

Outcome criterion10_family(std::optional<FamilyReport>& out_report) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    out_report = run_family(acceptance_family(4));
    double dt = seconds_since(t0);

    const auto& counts = out_report->counts;
    o.require(counts.size() == 3, "grid size");
    o.require(counts[0].second < counts[1].second && counts[1].second < counts[2].second,
              "counts not strictly increasing");

    o.require(out_report->distinctness.pass, "distinctness failed");

    uint64_t sf = 0, sf_cert = 0;
    for (const auto& rec : out_report->records) {
        if (!rec.squarefree) continue;
        ++sf;
        if (rec.verdict && rec.verdict->certified) ++sf_cert;
    }
    double frac = sf ? static_cast<double>(sf_cert) / static_cast<double>(sf) : 0.0;
    char buf[128];
    std::snprintf(buf, sizeof buf, "certified fraction %.4f below 0.9", frac);
    o.require(frac >= 0.9, buf);

    o.require(out_report->slope.has_value(), "slope not fitted");
    if (out_report->slope) {
        double target = 1.0 / 24.0;
        double rel = std::abs(out_report->slope->first - target) / target;
        std::snprintf(buf, sizeof buf, "slope %.6f is %.1f%% from 1/24",
                      out_report->slope->first, rel * 100);
        o.require(rel <= 0.25, buf);
    }

    std::snprintf(buf, sizeof buf, "runtime %.1fs exceeds 600s", dt);
    o.require(dt < 600.0, buf);
    return o;
}

Outcome criterion11_determinism(const FamilyReport& multi) {
    Outcome o;
    auto serial = run_family(acceptance_family(1));
    o.require(dump_json(family_json(serial)) == dump_json(family_json(multi)),
              "1-thread and 4-thread reports differ");
    return o;
}

} // namespace

int main() {
    int failures = 0;
    std::optional<FamilyReport> family_report;

    struct Entry {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    std::vector<Entry> entries{
        {1, "closed-form Malle indices", criterion1_malle_closed_forms},
        {2, "inertia exponents", criterion2_inertia_exponents},
        {3, "exponent reports at ell=13", criterion3_exponent_reports},
        {4, "transvection orbit structure", criterion4_transvection_orbits},
        {5, "u-classification at ell=7", criterion5_u_classification},
        {6, "witness soundness on maximal subgroups", criterion6_witness_soundness},
        {7, "point counting oracle", criterion7_point_count_oracle},
        {8, "surjectivity controls", criterion8_controls},
        {9, "squarefree sieve", criterion9_sieve},
        {10, "family run ell=13 A=1 projective", [&] { return criterion10_family(family_report); }},
        {11, "thread-count determinism", [&] { return criterion11_determinism(*family_report); }},
    };

    for (const auto& e : entries) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o = e.run();
        double dt = seconds_since(t0);
        std::printf("%s  %2d  %-42s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", e.id, e.name, dt,
                    o.detail.empty() ? "" : "  -- ", o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
