#include "gl2/cli.hpp"

#include <cstdio>
#include <stdexcept>

#include "CLI11.hpp"

#include "gl2/curves.hpp"
#include "gl2/exact.hpp"
#include "gl2/factor.hpp"
#include "gl2/family.hpp"
#include "gl2/group.hpp"
#include "gl2/malle.hpp"
#include "gl2/permrep.hpp"
#include "gl2/surject.hpp"

namespace gl2 {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string rat_str(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

GroupTag default_group(PermKind kind) {
    return kind == PermKind::projective ? GroupTag::PGL2 : GroupTag::GL2;
}

void emit_reports(const std::vector<ExponentReport>& reports, const std::string& format,
                  std::ostream& out) {
    if (format == "json") {
        if (reports.size() == 1) {
            out << dump_json(report_json(reports[0]));
        } else {
            Json arr = Json::array();
            for (const auto& r : reports) arr.push_back(report_json(r));
            out << dump_json(arr);
        }
    } else if (format == "csv") {
        out << "ell,kind,group,degree,malle_ind,malle_a,inertia_ind,lower_exponent\n";
        for (const auto& r : reports)
            out << r.ell << "," << to_string(r.kind) << "," << to_string(r.group) << ","
                << r.degree << "," << r.malle_ind << "," << rat_str(r.malle_a) << ","
                << r.inertia_ind << "," << rat_str(r.lower_exponent) << "\n";
    } else {
        for (const auto& r : reports) {
            out << to_string(r.group) << "(F_" << r.ell << ") " << to_string(r.kind)
                << ", degree " << r.degree << "\n"
                << "  malle_ind      " << r.malle_ind << "   a(G) = " << rat_str(r.malle_a) << "\n"
                << "  inertia_ind    " << r.inertia_ind
                << "   lower exponent = " << rat_str(r.lower_exponent) << "\n"
                << "  witness        [[" << r.witness.a << "," << r.witness.b << "],["
                << r.witness.c << "," << r.witness.d << "]]\n";
        }
    }
}

int do_index(uint32_t ell_arg, std::string rep_arg, std::string group_arg, bool all_reps,
             const std::string& format, std::ostream& out) {
    PrimeEll ell(ell_arg);
    std::vector<ExponentReport> reports;
    if (all_reps) {
        reports.push_back(exponent_report(ell, PermKind::natural, GroupTag::GL2));
        reports.push_back(exponent_report(ell, PermKind::projective, GroupTag::PGL2));
        reports.push_back(exponent_report(ell, PermKind::regular, GroupTag::GL2));
    } else {
        PermKind kind = perm_kind_from_string(rep_arg);
        GroupTag group = group_arg.empty() ? default_group(kind) : group_tag_from_string(group_arg);
        reports.push_back(exponent_report(ell, kind, group));
    }
    emit_reports(reports, format, out);
    return 0;
}

int do_sieve(const std::string& a_arg, int64_t b_min, int64_t b_max, const std::string& format,
             std::ostream& out) {
    SieveResult res = sieve_family(big_from_string(a_arg), b_min, b_max);
    if (format == "json") {
        out << dump_json(sieve_json(res));
    } else if (format == "csv") {
        out << sieve_csv(res);
    } else {
        out << "A = " << res.summary.A.get_str() << ", B in [" << res.summary.b_min << ", "
            << res.summary.b_max << "]\n"
            << "records " << res.summary.count << ", squarefree " << res.summary.squarefree_count
            << ", skipped " << res.summary.skipped << ", density "
            << fmt_double(res.summary.density) << "\n";
    }
    return 0;
}

int do_frobenius(const std::string& a_arg, const std::string& b_arg, uint32_t ell_arg,
                 uint64_t budget, const std::string& format, std::ostream& out) {
    PrimeEll ell(ell_arg);
    WeierstrassCurve curve{big_from_string(a_arg), big_from_string(b_arg)};
    auto samples = frobenius_samples(curve, ell, budget);
    if (format == "json") {
        Json j = Json::object();
        j["ell"] = ell.value;
        j["A"] = big_json(curve.A);
        j["B"] = big_json(curve.B);
        j["budget"] = budget;
        Json arr = Json::array();
        for (const auto& s : samples)
            arr.push_back(Json{{"p", s.p},
                               {"a_p", s.a_p},
                               {"p_mod_ell", s.p_mod_ell},
                               {"disc_class", to_string(s.disc_class)},
                               {"u", s.u}});
        j["samples"] = std::move(arr);
        out << dump_json(j);
    } else if (format == "csv") {
        out << "p,a_p,p_mod_ell,disc_class,u\n";
        for (const auto& s : samples)
            out << s.p << "," << s.a_p << "," << s.p_mod_ell << "," << to_string(s.disc_class)
                << "," << s.u << "\n";
    } else {
        out << samples.size() << " samples\n";
        for (const auto& s : samples)
            out << "  p=" << s.p << " a_p=" << s.a_p << " p%ell=" << s.p_mod_ell << " disc "
                << to_string(s.disc_class) << " u=" << s.u << "\n";
    }
    return 0;
}

int do_surjective(const std::string& a_arg, const std::string& b_arg, uint32_t ell_arg,
                  uint64_t budget, const std::string& format, std::ostream& out) {
    PrimeEll ell(ell_arg);
    WeierstrassCurve curve{big_from_string(a_arg), big_from_string(b_arg)};
    SurjectivityVerdict v = serre_test(frobenius_samples(curve, ell, budget), ell);
    if (format == "json") {
        out << dump_json(verdict_json(v));
    } else if (format == "csv") {
        out << "status,examined,missing\n"
            << (v.certified ? "certified" : "not_certified") << "," << v.examined << ",";
        for (size_t i = 0; i < v.missing.size(); ++i) out << (i ? " " : "") << v.missing[i];
        out << "\n";
    } else {
        out << (v.certified ? "certified" : "not_certified") << " after " << v.examined
            << " samples\n";
        if (v.w1) out << "  W1 at p=" << *v.w1 << "\n";
        if (v.w2) out << "  W2 at p=" << *v.w2 << "\n";
        if (v.w3) out << "  W3 at p=" << *v.w3 << "\n";
        out << "  W4 primes:";
        for (uint64_t p : v.w4) out << " " << p;
        out << "\n";
        for (const auto& m : v.missing) out << "  missing " << m << "\n";
    }
    return 0;
}

int do_family(uint32_t ell_arg, const std::string& a_arg, const std::string& rep_arg,
              int64_t b_max, uint64_t budget, const std::string& grid_arg,
              const std::string& policy_arg, unsigned threads, const std::string& format,
              std::ostream& out) {
    PermKind kind = perm_kind_from_string(rep_arg);
    FamilyConfig cfg{
        .ell = PrimeEll(ell_arg),
        .A = big_from_string(a_arg),
        .rep_kind = kind,
        .group = default_group(kind),
        .b_min = 1,
        .b_max = b_max,
        .budget = budget,
        .c_policy = cell_policy_from_string(policy_arg),
        .x_grid = parse_x_grid(grid_arg),
        .threads = threads,
    };
    FamilyReport report = run_family(cfg);
    if (format == "json") {
        out << dump_json(family_json(report));
    } else if (format == "csv") {
        out << family_csv(report);
    } else {
        uint64_t sf = 0, cert = 0, counted = 0;
        for (const auto& rec : report.records) {
            if (rec.squarefree) ++sf;
            if (rec.verdict && rec.verdict->certified) ++cert;
            if (rec.counted()) ++counted;
        }
        out << "family ell=" << report.config.ell.value << " A=" << report.config.A.get_str()
            << " rep=" << to_string(report.config.rep_kind) << " B<=" << report.config.b_max
            << "\n"
            << "records " << report.records.size() << ", squarefree " << sf << ", certified "
            << cert << ", counted " << counted << "\n";
        for (const auto& [X, c] : report.counts)
            out << "  count(X=" << X.get_str() << ") = " << c << "\n";
        if (report.slope)
            out << "slope " << fmt_double(report.slope->first) << " (stderr "
                << fmt_double(report.slope->second) << ")\n";
        else
            out << "slope not fitted (needs 3 grid points with nonzero counts)\n";
        out << "distinctness " << (report.distinctness.pass ? "pass" : "FAIL") << "\n";
    }
    return 0;
}

int do_selfcheck(std::ostream& out) {
    int failures = 0;
    auto check = [&](const std::string& label, uint64_t got, uint64_t want) {
        bool ok = got == want;
        out << (ok ? "ok      " : "MISMATCH") << "  " << label << "  got " << got << "  want "
            << want << "\n";
        if (!ok) ++failures;
    };
    for (uint32_t l : {3u, 5u, 7u, 11u, 13u}) {
        PrimeEll ell(l);
        PermAction nat = build_rep(ell, PermKind::natural, GroupTag::GL2);
        PermAction proj = build_rep(ell, PermKind::projective, GroupTag::PGL2);
        check("malle_ind natural    ell=" + std::to_string(l), malle_index(nat).first,
              static_cast<uint64_t>(l) * (l - 1) / 2);
        check("malle_ind projective ell=" + std::to_string(l), malle_index(proj).first,
              static_cast<uint64_t>(l - 1) / 2);
        check("inertia   natural    ell=" + std::to_string(l), inertia_exponent(nat),
              static_cast<uint64_t>(l - 1) * (l - 1));
        check("inertia   projective ell=" + std::to_string(l), inertia_exponent(proj),
              static_cast<uint64_t>(l - 1));
    }
    for (uint32_t l : {3u, 5u, 7u}) {
        PrimeEll ell(l);
        PermAction reg = build_rep(ell, PermKind::regular, GroupTag::GL2);
        check("inertia   regular    ell=" + std::to_string(l), inertia_exponent(reg),
              static_cast<uint64_t>(l + 1) * (l - 1) * (l - 1) * (l - 1));
    }
    out << (failures ? "selfcheck FAILED\n" : "selfcheck passed\n");
    return failures ? 1 : 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Malle exponents for GL2/PGL2(F_ell) representations and"
                 " elliptic-curve family counts"};
    app.require_subcommand(1);

    std::string format = "json";
    uint32_t ell_arg = 0;
    std::string rep_arg = "natural", group_arg;
    bool all_reps = false;
    std::string a_arg, b_arg, grid_arg, policy_arg = "unit";
    int64_t b_min = 1, b_max = 1;
    uint64_t budget = 1000;
    unsigned threads = 0;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json, csv or table")
            ->check(CLI::IsMember({"json", "csv", "table"}));
    };

    CLI::App* index = app.add_subcommand("index", "Malle index and exponents of one representation");
    index->add_option("--ell", ell_arg, "prime ell")->required();
    index->add_option("--rep", rep_arg, "natural, projective or regular");
    index->add_option("--group", group_arg, "GL2 or PGL2");
    index->add_flag("--all-reps", all_reps, "report natural, projective and regular");
    add_format(index);

    CLI::App* exponent = app.add_subcommand("exponent", "exponent reports for all representations");
    exponent->add_option("--ell", ell_arg, "prime ell")->required();
    exponent->add_option("--rep", rep_arg, "natural, projective or regular");
    exponent->add_option("--group", group_arg, "GL2 or PGL2");
    add_format(exponent);

    CLI::App* sieve = app.add_subcommand("sieve", "squarefree sieve over delta_f = 4A^3 + 27B^2");
    sieve->add_option("--A", a_arg, "fixed A, nonzero")->required();
    sieve->add_option("--b-min", b_min, "first B");
    sieve->add_option("--b-max", b_max, "last B")->required();
    add_format(sieve);

    CLI::App* frob = app.add_subcommand("frobenius", "Frobenius traces with mod-ell classification");
    frob->add_option("--A", a_arg)->required();
    frob->add_option("--B", b_arg)->required();
    frob->add_option("--ell", ell_arg)->required();
    frob->add_option("--budget", budget, "prime bound");
    add_format(frob);

    CLI::App* surj = app.add_subcommand("surjective", "certify the mod-ell image is all of GL2");
    surj->add_option("--A", a_arg)->required();
    surj->add_option("--B", b_arg)->required();
    surj->add_option("--ell", ell_arg)->required();
    surj->add_option("--budget", budget, "prime bound");
    add_format(surj);

    CLI::App* family = app.add_subcommand("family", "fixed-A family run with counts and slope");
    family->add_option("--ell", ell_arg)->required();
    family->add_option("--A", a_arg)->required();
    family->add_option("--rep", rep_arg, "natural, projective or regular");
    family->add_option("--b-max", b_max)->required();
    family->add_option("--budget", budget, "Frobenius prime bound");
    family->add_option("--x-grid", grid_arg, "comma-separated X values; decimal or base^exp")
        ->required();
    family->add_option("--c-policy", policy_arg, "unit or wild-bound");
    family->add_option("--threads", threads, "worker cap, 0 = all cores");
    add_format(family);

    CLI::App* selfcheck = app.add_subcommand("selfcheck", "replay the closed-form matrix");
    add_format(selfcheck);

    std::vector<std::string> argv = args;
    argv.insert(argv.begin(), "gl2malle");
    std::vector<const char*> cargv;
    for (const auto& s : argv) cargv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (index->parsed())
            return do_index(ell_arg, rep_arg, group_arg, all_reps, format, out);
        if (exponent->parsed())
            return do_index(ell_arg, rep_arg, group_arg, /*all_reps=*/true, format, out);
        if (sieve->parsed()) return do_sieve(a_arg, b_min, b_max, format, out);
        if (frob->parsed()) return do_frobenius(a_arg, b_arg, ell_arg, budget, format, out);
        if (surj->parsed()) return do_surjective(a_arg, b_arg, ell_arg, budget, format, out);
        if (family->parsed())
            return do_family(ell_arg, a_arg, rep_arg, b_max, budget, grid_arg, policy_arg,
                             threads, format, out);
        if (selfcheck->parsed()) return do_selfcheck(out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 2;
}

} // namespace gl2
