#include "gl2/family.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gl2/curves.hpp"
#include "gl2/factor.hpp"
#include "gl2/malle.hpp"

namespace gl2 {

std::string to_string(CellPolicy p) { return p == CellPolicy::unit ? "unit" : "wild-bound"; }

CellPolicy cell_policy_from_string(const std::string& s) {
    if (s == "unit") return CellPolicy::unit;
    if (s == "wild-bound") return CellPolicy::wild_bound;
    throw std::invalid_argument("unknown c_ell policy: " + s);
}

BigInt c_ell_value(CellPolicy policy, PrimeEll ell, uint64_t degree) {
    if (policy == CellPolicy::unit) return 1;
    std::vector<uint64_t> wild{2, 3};
    if (ell.value != 2 && ell.value != 3) wild.push_back(ell.value);
    BigInt out = 1;
    for (uint64_t p : wild) {
        uint64_t logp = 0, pk = p;
        while (pk <= degree) { ++logp; pk *= p; }
        BigInt f;
        mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(degree - 1 + degree * logp));
        out *= f;
    }
    return out;
}

std::vector<BigInt> parse_x_grid(const std::string& list) {
    std::vector<BigInt> grid;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        grid.push_back(parse_big_expr(item));
    }
    return grid;
}

namespace {

void validate(const FamilyConfig& cfg) {
    if (cfg.A == 0) throw std::domain_error("family: A must be nonzero");
    if (cfg.ell.value < 5)
        throw std::domain_error("family: the surjectivity test needs ell >= 5");
    if (cfg.b_min < 1) throw std::domain_error("family: B ranges over positive integers");
    if (cfg.b_max < cfg.b_min) throw std::domain_error("family: empty B range");
    for (size_t i = 0; i < cfg.x_grid.size(); ++i) {
        if (cfg.x_grid[i] <= 0) throw std::domain_error("family: X grid entries must be positive");
        if (i && cfg.x_grid[i] <= cfg.x_grid[i - 1])
            throw std::domain_error("family: X grid must be strictly increasing");
    }
}

} // namespace

FamilyReport run_family(const FamilyConfig& cfg) {
    validate(cfg);
    FamilyReport report{.config = cfg};

    PermAction rep = cfg.rep_kind == PermKind::coset
                         ? build_coset_rep(cfg.ell, cfg.group, cfg.coset_subgroup)
                         : build_rep(cfg.ell, cfg.rep_kind, cfg.group);
    report.inertia_ind = inertia_exponent(rep);
    report.c_ell = c_ell_value(cfg.c_policy, cfg.ell, rep.degree);

    SieveResult sieve = sieve_family(cfg.A, cfg.b_min, cfg.b_max);
    std::map<int64_t, const SieveRecord*> by_b;
    for (const auto& rec : sieve.records) by_b[rec.B] = &rec;

    const size_t n = static_cast<size_t>(cfg.b_max - cfg.b_min + 1);
    report.records.resize(n);

    FrobeniusScanner scanner(cfg.budget);
    std::atomic<size_t> next{0};
    std::mutex fail_mutex;
    std::exception_ptr failure;
    auto worker_body = [&](size_t i) {
        int64_t b = cfg.b_min + static_cast<int64_t>(i);
        FamilyRecord& out = report.records[i];
        out.B = b;
        auto it = by_b.find(b);
        if (it == by_b.end()) {
            // the sieve dropped it: delta_f = 0
            out.singular = true;
            out.delta_f = 0;
            out.excluded_reason = "singular";
            return;
        }
        const SieveRecord& srec = *it->second;
        out.delta_f = srec.delta_f;
        out.squarefree = srec.squarefree;
        out.support = prime_support(srec.delta_f);
        WeierstrassCurve curve{cfg.A, BigInt(b)};
        out.verdict = serre_test(scanner.samples(curve, cfg.ell), cfg.ell);
        if (!out.squarefree) {
            out.excluded_reason = "non-squarefree";
        } else if (!out.verdict->certified) {
            out.excluded_reason = "not-certified";
        } else {
            BigInt bound;
            BigInt absdf = abs(srec.delta_f);
            mpz_pow_ui(bound.get_mpz_t(), absdf.get_mpz_t(),
                       static_cast<unsigned long>(report.inertia_ind));
            out.disc_bound = report.c_ell * bound;
        }
    };
    auto worker = [&]() {
        for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
            try {
                worker_body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(fail_mutex);
                if (!failure) failure = std::current_exception();
                next.store(n);
                return;
            }
        }
    };
    unsigned nthreads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min<unsigned>(nthreads, n);
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (const auto& X : cfg.x_grid) report.counts.emplace_back(X, count_below(report, X));

    size_t usable = 0;
    for (const auto& [x, c] : report.counts)
        if (c > 0) ++usable;
    if (usable >= 3) report.slope = fit_exponent(report.counts);

    report.distinctness = distinctness_check(report);
    return report;
}

uint64_t count_below(const FamilyReport& r, const BigInt& X) {
    if (X <= 0) throw std::domain_error("count_below: X must be positive");
    uint64_t count = 0;
    for (const auto& rec : r.records)
        if (rec.disc_bound && *rec.disc_bound <= X) ++count;
    return count;
}

std::pair<double, double> fit_exponent(const std::vector<std::pair<BigInt, uint64_t>>& points) {
    std::vector<std::pair<double, double>> xy;
    for (const auto& [X, c] : points)
        if (c > 0) xy.emplace_back(log_big(X), std::log(static_cast<double>(c)));
    const size_t n = xy.size();
    if (n < 2) throw std::domain_error("fit_exponent: fewer than two usable points");
    double mx = 0, my = 0;
    for (auto [x, y] : xy) { mx += x; my += y; }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0, sxy = 0;
    for (auto [x, y] : xy) { sxx += (x - mx) * (x - mx); sxy += (x - mx) * (y - my); }
    if (sxx == 0) throw std::domain_error("fit_exponent: degenerate X values");
    double slope = sxy / sxx;
    double stderr_ = 0;
    if (n > 2) {
        double ss = 0;
        for (auto [x, y] : xy) {
            double r = y - my - slope * (x - mx);
            ss += r * r;
        }
        stderr_ = std::sqrt(ss / static_cast<double>(n - 2) / sxx);
    }
    return {slope, stderr_};
}

DistinctnessResult distinctness_check(const FamilyReport& r) {
    DistinctnessResult res;
    std::map<BigInt, int64_t> seen_df;
    std::map<std::vector<BigInt>, int64_t> seen_support;
    for (const auto& rec : r.records) {
        if (!rec.counted()) continue;
        if (auto [it, fresh] = seen_df.try_emplace(rec.delta_f, rec.B); !fresh)
            res.offending.emplace_back(it->second, rec.B);
        if (auto [it, fresh] = seen_support.try_emplace(rec.support, rec.B); !fresh)
            res.offending.emplace_back(it->second, rec.B);
    }
    std::sort(res.offending.begin(), res.offending.end());
    res.offending.erase(std::unique(res.offending.begin(), res.offending.end()),
                        res.offending.end());
    res.pass = res.offending.empty();
    return res;
}

Json family_json(const FamilyReport& r) {
    Json cfg = Json::object();
    cfg["ell"] = r.config.ell.value;
    cfg["A"] = big_json(r.config.A);
    cfg["rep"] = to_string(r.config.rep_kind);
    cfg["group"] = to_string(r.config.group);
    cfg["b_min"] = r.config.b_min;
    cfg["b_max"] = r.config.b_max;
    cfg["budget"] = r.config.budget;
    cfg["c_policy"] = to_string(r.config.c_policy);
    Json grid = Json::array();
    for (const auto& X : r.config.x_grid) grid.push_back(big_json(X));
    cfg["x_grid"] = std::move(grid);

    Json j = Json::object();
    j["config"] = std::move(cfg);
    j["inertia_ind"] = r.inertia_ind;
    j["c_ell"] = big_json(r.c_ell);

    Json recs = Json::array();
    for (const auto& rec : r.records) {
        Json jr = Json::object();
        jr["B"] = rec.B;
        jr["delta_f"] = big_json(rec.delta_f);
        jr["squarefree"] = rec.squarefree;
        jr["certified"] = rec.verdict && rec.verdict->certified;
        jr["disc_bound"] = rec.disc_bound ? Json(big_json(*rec.disc_bound)) : Json(nullptr);
        jr["excluded_reason"] = rec.excluded_reason.empty() ? Json(nullptr) : Json(rec.excluded_reason);
        Json sup = Json::array();
        for (const auto& p : rec.support) sup.push_back(big_json(p));
        jr["support"] = std::move(sup);
        recs.push_back(std::move(jr));
    }
    j["records"] = std::move(recs);

    Json counts = Json::array();
    for (const auto& [X, c] : r.counts)
        counts.push_back(Json{{"X", big_json(X)}, {"count", c}});
    j["counts"] = std::move(counts);

    j["slope"] = r.slope ? Json{{"value", r.slope->first}, {"stderr", r.slope->second}}
                         : Json(nullptr);

    Json off = Json::array();
    for (auto [b1, b2] : r.distinctness.offending) off.push_back(Json::array({b1, b2}));
    j["distinctness"] = Json{{"pass", r.distinctness.pass}, {"offending", std::move(off)}};
    return j;
}

std::string family_csv(const FamilyReport& r) {
    std::ostringstream os;
    os << "B,delta_f,squarefree,certified,disc_bound,excluded_reason\n";
    for (const auto& rec : r.records) {
        os << rec.B << "," << rec.delta_f.get_str() << "," << (rec.squarefree ? 1 : 0) << ","
           << ((rec.verdict && rec.verdict->certified) ? 1 : 0) << ","
           << (rec.disc_bound ? rec.disc_bound->get_str() : "") << ","
           << rec.excluded_reason << "\n";
    }
    return os.str();
}

} // namespace gl2
