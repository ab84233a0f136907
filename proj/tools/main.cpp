#include <charconv>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wiener/wiener.hpp"

namespace {

using namespace wiener;

std::string render(const std::string& json, const std::string& format) {
    return format == "json" ? json : json_to_text(json);
}

std::int64_t oracle_cap_from_env() {
    const char* env = std::getenv("WIENER_ORACLE_CAP");
    if (!env || !*env) return kDefaultOracleCap;
    std::int64_t cap = 0;
    std::string s(env);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
    if (ec != std::errc() || p != s.data() + s.size() || cap < 1)
        throw InputError("WIENER_ORACLE_CAP must be a positive integer, got \"" +
                         s + "\"");
    return cap;
}

int cmd_wiener(const std::string& tree_path, const std::string& caterpillar,
               const std::string& format) {
    if (tree_path.empty() == caterpillar.empty())
        throw InputError("pass exactly one of --tree or --caterpillar");
    if (!tree_path.empty()) {
        Tree t = read_tree_file(tree_path);
        const WienerValue wp = wiener_pairwise(t);
        const WienerValue we = wiener_edgecut(t);
        std::cout << render(tree_wiener_report_json(t, wp, we), format);
        return wp == we ? 0 : 1;
    }
    SpineWeights y = SpineWeights::parse(caterpillar);
    const WienerValue formula = caterpillar_wiener(y);
    const WienerValue pairwise = wiener_pairwise(build_caterpillar(y));
    std::cout << render(caterpillar_wiener_report_json(y, formula, pairwise),
                        format);
    return formula == pairwise ? 0 : 1;
}

int cmd_maximize(const std::string& degrees, const std::string& method,
                 const std::string& format) {
    DegreeSequence ds = parse_degree_sequence(degrees);
    SolveMethod m = SolveMethod::automatic;
    if (method == "oracle") m = SolveMethod::oracle;
    else if (method == "valley") m = SolveMethod::valley;
    else if (method == "closed") m = SolveMethod::closed;
    MaxResult r = solve(ds, m, oracle_cap_from_env());
    std::cout << render(maximize_report_json(ds, r), format);
    return 0;
}

int cmd_greedy(const std::string& degrees, const std::string& format) {
    DegreeSequence ds = parse_degree_sequence(degrees);
    SpineWeights y = greedy_caterpillar(ds);
    MaxResult ref;
    const MaxResult* ref_ptr = nullptr;
    if (ds.k() <= 25) {
        ref = solve(ds, SolveMethod::automatic, oracle_cap_from_env());
        ref_ptr = &ref;
    }
    std::cout << render(greedy_report_json(ds, y, ref_ptr), format);
    return 0;
}

int cmd_bound(const std::string& degrees, const std::string& format) {
    DegreeSequence ds = parse_degree_sequence(degrees);
    std::cout << render(bound_report_json(ds, upper_bound(ds)), format);
    return 0;
}

int cmd_audit(const std::string& k_list, std::int64_t wmax, bool trees,
              const std::string& format) {
    std::vector<std::int64_t> k_set;
    std::size_t pos = 0;
    while (pos <= k_list.size()) {
        std::size_t comma = k_list.find(',', pos);
        if (comma == std::string::npos) comma = k_list.size();
        std::string tok = k_list.substr(pos, comma - pos);
        std::int64_t k = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), k);
        if (ec != std::errc() || p != tok.data() + tok.size())
            throw InputError("bad k value \"" + tok + "\"");
        k_set.push_back(k);
        if (comma == k_list.size()) break;
        pos = comma + 1;
    }
    AuditReport r = audit_sweep(k_set, wmax, trees, oracle_cap_from_env());
    std::cout << render(audit_report_json(r), format);
    return r.has_hard_failures() ? 1 : 0;
}

int cmd_example13(const std::string& format) {
    CounterexampleReport r = greedy_counterexample();
    std::cout << render(counterexample_report_json(r), format);
    const bool ok = r.gap == r.published_gap && r.w_better > r.w_greedy &&
                    !r.greedy_is_optimal && r.better_is_optimal &&
                    !r.audit.has_hard_failures();
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wiener index tools: compute, maximize and audit over trees "
                 "with a prescribed degree sequence"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto* c_wiener = app.add_subcommand(
        "wiener", "Wiener value of a tree file or a caterpillar");
    std::string tree_path, caterpillar;
    c_wiener->add_option("--tree", tree_path,
                         "Tree file: line one n, then n-1 lines \"u v\"");
    c_wiener->add_option("--caterpillar", caterpillar,
                         "Spine weights, e.g. 12,2,3,4,4,4");

    auto* c_max = app.add_subcommand(
        "maximize", "Maximum Wiener value over trees with given degrees");
    std::string degrees, method = "auto";
    c_max->add_option("--degrees", degrees, "Degree list, e.g. 13,5,5,5,4,3,1x25")
        ->required();
    c_max->add_option("--method", method, "Solver")
        ->check(CLI::IsMember({"auto", "oracle", "valley", "closed"}))
        ->capture_default_str();

    auto* c_greedy = app.add_subcommand(
        "greedy", "Greedy caterpillar for given degrees, with optimal reference");
    std::string g_degrees;
    c_greedy->add_option("--degrees", g_degrees, "Degree list")->required();

    auto* c_bound = app.add_subcommand(
        "bound", "Degree-based upper bound on the maximum Wiener value");
    std::string b_degrees;
    c_bound->add_option("--degrees", b_degrees, "Degree list")->required();

    auto* c_audit = app.add_subcommand(
        "audit", "Check every claim family against the exhaustive oracle");
    std::string k_list = "2,3,4,5,6";
    std::int64_t wmax = 5;
    bool trees = false;
    c_audit->add_option("--k", k_list, "Spine sizes to sweep")
        ->capture_default_str();
    c_audit->add_option("--wmax", wmax, "Largest weight in the sweep")
        ->capture_default_str();
    c_audit->add_flag("--trees", trees,
                      "Also scan all labeled trees when n <= 12");

    auto* c_ex = app.add_subcommand(
        "example13", "Reproduce the published greedy counterexample");

    for (auto* sub : {c_wiener, c_max, c_greedy, c_bound, c_audit, c_ex})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_wiener) return cmd_wiener(tree_path, caterpillar, format);
        if (*c_max) return cmd_maximize(degrees, method, format);
        if (*c_greedy) return cmd_greedy(g_degrees, format);
        if (*c_bound) return cmd_bound(b_degrees, format);
        if (*c_audit) return cmd_audit(k_list, wmax, trees, format);
        if (*c_ex) return cmd_example13(format);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
