#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "orchard/text_io.hpp"

using json = nlohmann::json;
using namespace orchard;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct Options {
    std::string format = "plain";
    bool lines = false;
    bool structure = false;
    bool supersingular = false;
    bool arrangement_file = false;
    bool alt_psi = false;
    std::string curve_arg;
    std::string group_arg;
    std::string theorem_id;
    std::string real_file;
    std::string real_curve;
    std::int64_t p = 0;
    std::int64_t n = 1;
    std::int64_t t = 0;
    std::optional<std::int64_t> n1;
    std::optional<std::int64_t> n2;
    std::optional<std::int64_t> q;
    std::optional<std::int64_t> big_n;
    std::int64_t pmin = 7;
    std::int64_t pmax = 47;
};

std::string quote_csv(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

json group_to_json(const AbelianStructure& g) {
    json arr = json::array();
    for (auto f : g.factors) arr.push_back(f);
    return arr;
}

int cmd_curve(const Options& opt) {
    EllipticCurve curve = parse_curve(opt.curve_arg);
    if (opt.arrangement_file) {
        std::cout << arrangement_to_text(lines_from_group(curve), curve.field());
        return kExitOk;
    }
    AbelianStructure group = curve.group_structure();
    const std::int64_t n = group.order();
    const std::int64_t t = zero_sum_triples(group);
    // The triple list itself is only materialized when asked for.
    Arrangement arr;
    if (opt.lines || opt.structure || opt.format == "json") {
        arr = lines_from_group(curve);
        if (arr.n_lines() != t) fail(Errc::Internal, "formula and enumeration disagree");
    }
    const bool has_bound = n >= 3;
    const std::int64_t bound = has_bound ? green_tao_bound(n) : 0;
    const std::int64_t excess = has_bound ? t - bound : 0;

    if (opt.format == "json") {
        json out = {
            {"field", curve.field().str()}, {"curve", curve.str()},    {"n", n},
            {"t", t},                       {"group", group_to_json(group)},
            {"bound", has_bound ? json(bound) : json(nullptr)},
            {"excess", has_bound ? json(excess) : json(nullptr)},
        };
        json pts = json::array();
        for (const auto& P : arr.points) pts.push_back(P.str());
        out["points"] = pts;
        json lns = json::array();
        for (const auto& l : arr.lines) lns.push_back({l[0], l[1], l[2]});
        out["lines"] = lns;
        if (opt.supersingular) {
            out["trace"] = curve.trace();
            out["supersingular"] = curve.is_supersingular(SupersingularTest::Trace);
        }
        std::cout << out.dump() << '\n';
        return kExitOk;
    }

    std::cout << "N=" << n << " t=" << t << " group=" << group.str();
    if (has_bound)
        std::cout << " bound=" << bound << " excess=" << excess;
    else
        std::cout << " bound=n/a excess=n/a";
    std::cout << '\n';
    if (opt.supersingular) {
        std::cout << "trace=" << curve.trace()
                  << " supersingular=" << (curve.is_supersingular(SupersingularTest::Trace) ? "true" : "false");
        if (curve.is_short_form() && curve.field().has_odd_characteristic())
            std::cout << " deuring_agrees="
                      << (curve.is_supersingular(SupersingularTest::Deuring) ==
                                  curve.is_supersingular(SupersingularTest::Trace)
                              ? "true"
                              : "false");
        std::cout << '\n';
    }
    if (opt.structure) {
        std::cout << "points:\n";
        for (std::size_t i = 0; i < arr.points.size(); ++i)
            std::cout << i << ' ' << arr.points[i].str() << '\n';
    }
    if (opt.lines) {
        std::cout << "lines:\n";
        for (const auto& l : arr.lines) std::cout << l[0] << ' ' << l[1] << ' ' << l[2] << '\n';
    }
    return kExitOk;
}

int cmd_formula(const Options& opt) {
    AbelianStructure group = parse_group(opt.group_arg);
    const std::int64_t formula = zero_sum_triples(group);
    std::optional<std::int64_t> brute;
    if (group.order() <= 500) brute = zero_sum_triples_bruteforce(group);
    const std::int64_t n = group.order();
    const bool has_bound = n >= 3;
    const std::int64_t bound = has_bound ? green_tao_bound(n) : 0;

    if (opt.format == "json") {
        json out = {{"group", group_to_json(group)},
                    {"order", n},
                    {"formula", formula},
                    {"brute", brute ? json(*brute) : json(nullptr)},
                    {"bound", has_bound ? json(bound) : json(nullptr)},
                    {"excess", has_bound ? json(formula - bound) : json(nullptr)},
                    {"psi", psi(group)}};
        if (opt.alt_psi) out["psi_index_gap"] = psi_index_gap(group);
        std::cout << out.dump() << '\n';
        return kExitOk;
    }

    std::cout << "formula=" << formula;
    std::cout << " brute=" << (brute ? std::to_string(*brute) : "skipped");
    if (has_bound)
        std::cout << " bound=" << bound << " excess=" << formula - bound;
    else
        std::cout << " bound=n/a excess=n/a";
    std::cout << " psi=" << psi(group);
    if (opt.alt_psi) std::cout << " psi_index_gap=" << psi_index_gap(group);
    std::cout << '\n';
    if (brute && *brute != formula) {
        std::cerr << "formula and brute force disagree\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_admissible(const Options& opt) {
    AdmissibilityVerdict order = schoof_admissible(opt.p, static_cast<int>(opt.n), opt.t);
    std::optional<AdmissibilityVerdict> group;
    if (opt.n1 && opt.n2)
        group = ruck_admissible(opt.p, static_cast<int>(opt.n), opt.t, *opt.n1, *opt.n2);
    else if (opt.n1 || opt.n2)
        fail(Errc::ParseError, "give both n1 and n2 or neither");

    if (opt.format == "json") {
        json out = {{"q", order.q},
                    {"t", order.t},
                    {"order_admissible", order.admissible},
                    {"order_clause", order.rule}};
        if (group) {
            out["group_admissible"] = group->admissible;
            out["group_clause"] = group->rule;
        }
        std::cout << out.dump() << '\n';
        return kExitOk;
    }
    std::cout << "order admissible=" << (order.admissible ? "true" : "false")
              << " clause=" << order.rule << '\n';
    if (group)
        std::cout << "group admissible=" << (group->admissible ? "true" : "false")
                  << " clause=" << group->rule << '\n';
    return kExitOk;
}

int cmd_table3(const Options& opt) {
    auto rows = reproduce_table3();
    bool all_pass = true;
    for (const auto& row : rows) all_pass = all_pass && row.pass;

    if (opt.format == "json") {
        json out = json::array();
        for (const auto& row : rows) {
            out.push_back({{"curve", row.curve_label},
                           {"printed_q", row.printed_q},
                           {"q", row.effective_q},
                           {"group", row.computed_group},
                           {"N", row.computed_n},
                           {"t", row.computed_t_formula},
                           {"t_enumerated", row.computed_t_enumerated},
                           {"bound", row.computed_bound},
                           {"excess", row.excess},
                           {"status", row.pass ? "pass" : "fail"},
                           {"note", row.note}});
        }
        std::cout << out.dump() << '\n';
        return all_pass ? kExitOk : kExitMismatch;
    }
    if (opt.format == "csv") {
        std::cout << "curve,q,group,N,t,bound,excess,status\n";
        for (const auto& row : rows)
            std::cout << quote_csv(row.curve_label) << ',' << row.effective_q << ','
                      << quote_csv(row.computed_group) << ',' << row.computed_n << ','
                      << row.computed_t_formula << ',' << row.computed_bound << ',' << row.excess
                      << ',' << (row.pass ? "pass" : "fail") << '\n';
        return all_pass ? kExitOk : kExitMismatch;
    }

    int passed = 0;
    for (const auto& row : rows) {
        std::cout << (row.pass ? "PASS" : "FAIL") << ' ' << row.curve_label << " q=" << row.effective_q
                  << " group=" << row.computed_group << " N=" << row.computed_n
                  << " t=" << row.computed_t_formula << " bound=" << row.computed_bound;
        if (!row.note.empty()) std::cout << " note: " << row.note;
        std::cout << '\n';
        if (row.pass) ++passed;
    }
    std::cout << passed << "/" << rows.size() << " rows match\n";
    return all_pass ? kExitOk : kExitMismatch;
}

int cmd_verify(const Options& opt) {
    if (opt.theorem_id == "t38") {
        if (!opt.q || !opt.big_n) fail(Errc::ParseError, "t38 needs --p (via --q) and --N");
    } else if (!opt.q) {
        fail(Errc::ParseError, "verify needs --q");
    }
    TheoremReport report = verify_theorem(opt.theorem_id, *opt.q, opt.big_n);

    if (opt.format == "json") {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back(
                {{"what", c.what}, {"expected", c.expected}, {"got", c.got}, {"ok", c.ok}});
        json out = {{"id", report.id},
                    {"pass", report.pass},
                    {"checks", checks},
                    {"notes", report.notes}};
        std::cout << out.dump() << '\n';
        return report.pass ? kExitOk : kExitMismatch;
    }

    for (const auto& c : report.checks) {
        std::cout << (c.ok ? "ok" : "FAIL") << ": " << c.what << " expected=" << c.expected
                  << " got=" << c.got << '\n';
    }
    for (const auto& note : report.notes) std::cout << "note: " << note << '\n';
    std::cout << report.id << ' ' << (report.pass ? "pass" : "fail") << '\n';
    return report.pass ? kExitOk : kExitMismatch;
}

int cmd_real(const Options& opt) {
    std::ifstream in(opt.real_file);
    if (!in) fail(Errc::ParseError, "cannot open " + opt.real_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    RationalConfig config = parse_rational_config(buffer.str());

    std::optional<std::array<std::int64_t, 5>> curve_coeffs;
    if (!opt.real_curve.empty()) {
        std::array<std::int64_t, 5> coeffs{};
        std::istringstream cs(opt.real_curve);
        std::string tok;
        std::size_t i = 0;
        while (std::getline(cs, tok, ',')) {
            if (i >= 5) fail(Errc::ParseError, "curve takes five integer coefficients");
            coeffs[i++] = std::stoll(tok);
        }
        if (i != 5) fail(Errc::ParseError, "curve takes five integer coefficients");
        curve_coeffs = coeffs;
    }

    auto lines = rational_three_rich_lines(config.points);
    bool ok = true;
    std::ostringstream plain;
    plain << "points=" << config.points.size() << " lines=" << lines.size() << '\n';
    if (!config.lines.empty() && config.lines != lines) {
        plain << "file lines differ from the recomputed set\n";
        ok = false;
    }
    if (curve_coeffs) {
        bool on = true;
        for (const auto& P : config.points)
            if (!rational_on_curve(P, *curve_coeffs)) on = false;
        plain << "on-curve over Q: " << (on ? "ok" : "FAIL") << '\n';
        ok = ok && on;
    }

    json reductions = json::array();
    for (std::int64_t p = opt.pmin; p <= opt.pmax; ++p) {
        if (!is_prime(p)) continue;
        ReductionReport r = check_reduction_mod_p(config.points, lines, p, curve_coeffs);
        plain << "reduction mod " << p << ": "
              << (r.ok() ? "matches" : "MISMATCH") << " (" << r.n_points << " points, " << r.n_lines
              << " lines)\n";
        ok = ok && r.ok();
        reductions.push_back({{"p", p},
                              {"matches", r.ok()},
                              {"points", r.n_points},
                              {"lines", r.n_lines}});
    }

    if (opt.format == "json") {
        json out = {{"points", config.points.size()},
                    {"lines", lines.size()},
                    {"reductions", reductions},
                    {"pass", ok}};
        std::cout << out.dump() << '\n';
    } else {
        std::cout << plain.str();
    }
    return ok ? kExitOk : kExitMismatch;
}

int cmd_sweep(const Options& opt) {
    auto entries = sweep_short_form(opt.p);
    auto join = [](const std::vector<std::string>& v) {
        std::string out;
        for (const auto& s : v) out += (out.empty() ? "" : "|") + s;
        return out;
    };
    auto join_counts = [](const std::vector<std::int64_t>& v) {
        std::string out;
        for (auto c : v) out += (out.empty() ? "" : "|") + std::to_string(c);
        return out;
    };

    if (opt.format == "json") {
        json out = json::array();
        for (const auto& e : entries) {
            json structures = json::array();
            for (const auto& s : e.structures) structures.push_back(s);
            out.push_back({{"N", e.n_points},
                           {"curves", e.curve_count},
                           {"structures", structures},
                           {"lines", e.line_counts},
                           {"bound", e.bound}});
        }
        std::cout << out.dump() << '\n';
        return kExitOk;
    }
    if (opt.format == "csv") {
        std::cout << "N,curves,structures,lines,bound\n";
        for (const auto& e : entries)
            std::cout << e.n_points << ',' << e.curve_count << ',' << quote_csv(join(e.structures))
                      << ',' << quote_csv(join_counts(e.line_counts)) << ',' << e.bound << '\n';
        return kExitOk;
    }
    for (const auto& e : entries)
        std::cout << "N=" << e.n_points << " curves=" << e.curve_count
                  << " structures=" << join(e.structures) << " lines=" << join_counts(e.line_counts)
                  << " bound=" << e.bound << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"orchard: 3-rich line arrangements from elliptic curves over finite fields"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* sub, bool with_csv) {
        auto values = with_csv ? std::vector<std::string>{"plain", "json", "csv"}
                               : std::vector<std::string>{"plain", "json"};
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember(values))
            ->capture_default_str();
    };

    CLI::App* curve = app.add_subcommand("curve", "analyze one curve");
    curve->add_option("curve", opt.curve_arg, "curve spec, e.g. \"5^1;0,0,0,0,3\"")->required();
    curve->add_flag("--lines", opt.lines, "print the 3-rich line triples");
    curve->add_flag("--structure", opt.structure, "print the indexed point list");
    curve->add_flag("--supersingular", opt.supersingular, "print the supersingularity verdict");
    curve->add_flag("--arrangement", opt.arrangement_file,
                    "emit the canonical arrangement file instead of the summary");
    add_format(curve, false);

    CLI::App* formula = app.add_subcommand("formula", "triple count for an abelian group");
    formula->add_option("group", opt.group_arg, "invariant factors, e.g. \"2,10\"")->required();
    formula->add_flag("--alt-psi", opt.alt_psi, "also print the index-gap psi variant");
    add_format(formula, false);

    CLI::App* admissible = app.add_subcommand("admissible", "realizability of an order / group shape");
    admissible->add_option("--p", opt.p, "characteristic")->required();
    admissible->add_option("--n", opt.n, "extension degree")->capture_default_str();
    admissible->add_option("--t", opt.t, "trace")->required();
    admissible->add_option("--n1", opt.n1, "first invariant factor (prime-to-p part)");
    admissible->add_option("--n2", opt.n2, "second invariant factor");
    add_format(admissible, false);

    CLI::App* table3 = app.add_subcommand("table3", "recompute the published example table");
    add_format(table3, true);

    CLI::App* verify = app.add_subcommand("verify", "check one theorem");
    verify->add_option("id", opt.theorem_id, "t35 | t36 | t37 | t38")->required();
    verify->add_option("--q", opt.q, "field size (p for t38)");
    verify->add_option("--p", opt.q, "alias for --q, reads better for t38");
    verify->add_option("--N", opt.big_n, "point count (t38 only)");
    add_format(verify, false);

    CLI::App* real = app.add_subcommand("real", "check a rational configuration and its reductions");
    real->add_option("file", opt.real_file, "configuration file")->required();
    real->add_option("--curve", opt.real_curve, "integer coefficients a1,a2,a3,a4,a6");
    real->add_option("--pmin", opt.pmin, "first prime to reduce by")->capture_default_str();
    real->add_option("--pmax", opt.pmax, "last prime to reduce by")->capture_default_str();
    add_format(real, false);

    CLI::App* sweep = app.add_subcommand("sweep", "per-N statistics over all short-form curves");
    sweep->add_option("--p", opt.p, "prime field characteristic")->required();
    add_format(sweep, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (curve->parsed()) return cmd_curve(opt);
        if (formula->parsed()) return cmd_formula(opt);
        if (admissible->parsed()) return cmd_admissible(opt);
        if (table3->parsed()) return cmd_table3(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (real->parsed()) return cmd_real(opt);
        if (sweep->parsed()) return cmd_sweep(opt);
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return e.code() == Errc::TooLarge ? kExitCap : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
