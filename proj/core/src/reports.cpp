#include "wiener/reports.hpp"

#include <sstream>
#include <vector>

#include <json.hpp>

namespace wiener {

namespace {

using json = nlohmann::ordered_json;

json weights_json(const SpineWeights& y) { return json(y.values()); }

json weights_list_json(const std::vector<SpineWeights>& ys) {
    json a = json::array();
    for (const auto& y : ys) a.push_back(weights_json(y));
    return a;
}

json rational_json(const Rational& r) {
    return json{{"num", r.num}, {"den", r.den}};
}

json max_result_json(const MaxResult& r) {
    return json{{"method", to_string(r.method)},
                {"f_star", r.f_star},
                {"w_star", r.w_star},
                {"argmax", weights_list_json(r.argmax)}};
}

json instance_header(const DegreeSequence& ds) {
    return json{{"degrees", ds.str()}, {"n", ds.n()}, {"k", ds.k()}};
}

std::string compress_runs(const std::vector<std::int64_t>& d) {
    std::string s;
    std::size_t i = 0;
    while (i < d.size()) {
        std::size_t j = i;
        while (j < d.size() && d[j] == d[i]) ++j;
        if (!s.empty()) s += ',';
        s += std::to_string(d[i]);
        if (j - i > 1) s += "x" + std::to_string(j - i);
        i = j;
    }
    return s;
}

json record_json(const AuditRecord& r) {
    json j{{"instance", r.instance},
           {"source", to_string(r.source)},
           {"case", r.claim_case},
           {"oracle_f", r.oracle_f},
           {"oracle_argmax", weights_list_json(r.oracle_argmax)}};
    if (r.claimed_f) j["claimed_f"] = *r.claimed_f;
    if (r.source != ClaimSource::t24_bound)
        j["claimed_argmax"] = weights_list_json(r.claimed_argmax);
    if (r.bound) j["bound"] = rational_json(*r.bound);
    if (r.bound_tight) j["bound_tight"] = *r.bound_tight;
    if (r.source == ClaimSource::t27)
        j["non_valley_argmax"] = weights_list_json(r.non_valley_argmax);
    j["verdict"] = to_string(r.verdict);
    return j;
}

json tree_check_json(const TreeCheckResult& t) {
    return json{{"degrees", compress_runs(t.degrees)},
                {"n", t.n},
                {"tree_count", t.tree_count},
                {"max_wiener", t.max_wiener},
                {"max_only_caterpillars", t.max_only_caterpillars}};
}

json audit_json(const AuditReport& r) {
    json summary = json::object();
    for (int v = 0; v < kVerdictCount; ++v)
        summary[to_string(static_cast<Verdict>(v))] = r.verdict_counts[static_cast<std::size_t>(v)];
    json j{{"k_set", r.k_set},
           {"weight_cap", r.weight_cap},
           {"instance_count", r.instance_count},
           {"summary", summary},
           {"hard_failures", r.has_hard_failures()}};
    j["records"] = json::array();
    for (const auto& rec : r.records) j["records"].push_back(record_json(rec));
    if (!r.tree_checks.empty()) {
        j["tree_checks"] = json::array();
        for (const auto& t : r.tree_checks)
            j["tree_checks"].push_back(tree_check_json(t));
    }
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string tree_wiener_report_json(const Tree& t, WienerValue pairwise,
                                    WienerValue edgecut) {
    return dump(json{{"input", "tree"},
                     {"n", t.n()},
                     {"wiener_pairwise", pairwise},
                     {"wiener_edgecut", edgecut},
                     {"agree", pairwise == edgecut}});
}

std::string caterpillar_wiener_report_json(const SpineWeights& y,
                                           WienerValue formula,
                                           WienerValue pairwise) {
    return dump(json{{"input", "caterpillar"},
                     {"weights", weights_json(y)},
                     {"n", y.tree_size()},
                     {"wiener_formula", formula},
                     {"wiener_pairwise", pairwise},
                     {"agree", formula == pairwise}});
}

std::string maximize_report_json(const DegreeSequence& ds, const MaxResult& r) {
    json j = instance_header(ds);
    j.update(max_result_json(r));
    return dump(j);
}

std::string greedy_report_json(const DegreeSequence& ds, const SpineWeights& y,
                               const MaxResult* reference) {
    json j = instance_header(ds);
    j["greedy"] = weights_json(y);
    j["f"] = f_value(y);
    j["w"] = caterpillar_wiener(y);
    if (reference) {
        const bool optimal = f_value(y) == reference->f_star;
        j["f_star"] = reference->f_star;
        j["w_star"] = reference->w_star;
        j["optimal"] = optimal;
        j["gap"] = reference->f_star - f_value(y);
        j["status"] = optimal ? "OPTIMAL" : "SUBOPTIMAL";
    }
    return dump(j);
}

std::string bound_report_json(const DegreeSequence& ds, const BoundReport& b) {
    json j = instance_header(ds);
    j["bound"] = rational_json(b.bound);
    j["tight"] = b.tight;
    j["lambda1"] = b.lambda1;
    j["lambda_cap"] = b.lambda_cap;
    return dump(j);
}

std::string audit_report_json(const AuditReport& r) { return dump(audit_json(r)); }

std::string counterexample_report_json(const CounterexampleReport& r) {
    json j{{"degrees", compress_runs(r.degrees)},
           {"n", static_cast<std::int64_t>(r.degrees.size())},
           {"k", r.better.k()},
           {"better", weights_json(r.better)},
           {"greedy", weights_json(r.greedy)},
           {"f_better", r.f_better},
           {"f_greedy", r.f_greedy},
           {"w_better", r.w_better},
           {"w_greedy", r.w_greedy},
           {"gap", r.gap},
           {"published_w_better", r.published_w_better},
           {"published_w_greedy", r.published_w_greedy},
           {"published_gap", r.published_gap},
           {"gap_matches_published", r.gap == r.published_gap},
           {"greedy_is_optimal", r.greedy_is_optimal},
           {"better_is_optimal", r.better_is_optimal},
           {"oracle", max_result_json(r.oracle)},
           {"audit", audit_json(r.audit)}};
    return dump(j);
}

namespace {

bool all_scalars(const json& a) {
    for (const auto& e : a)
        if (e.is_object() || e.is_array()) return false;
    return true;
}

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string joined_scalars(const json& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ',';
        s += scalar_text(a[i]);
    }
    return s;
}

std::vector<std::string> render_lines(const json& j);

std::vector<std::string> render_array(const json& a) {
    std::vector<std::string> lines;
    for (const auto& e : a) {
        if (!e.is_object() && !e.is_array()) {
            lines.push_back("- " + scalar_text(e));
        } else if (e.is_array() && all_scalars(e)) {
            lines.push_back(e.empty() ? "- []" : "- " + joined_scalars(e));
        } else {
            auto sub = render_lines(e);
            for (std::size_t i = 0; i < sub.size(); ++i)
                lines.push_back((i == 0 ? "- " : "  ") + sub[i]);
        }
    }
    return lines;
}

std::vector<std::string> render_lines(const json& j) {
    std::vector<std::string> lines;
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object()) {
                lines.push_back(key + ":");
                for (auto& l : render_lines(value)) lines.push_back("  " + l);
            } else if (value.is_array()) {
                if (value.empty()) {
                    lines.push_back(key + ": []");
                } else if (all_scalars(value)) {
                    lines.push_back(key + ": " + joined_scalars(value));
                } else {
                    lines.push_back(key + ":");
                    for (auto& l : render_array(value))
                        lines.push_back("  " + l);
                }
            } else {
                lines.push_back(key + ": " + scalar_text(value));
            }
        }
    } else if (j.is_array()) {
        lines = render_array(j);
    } else {
        lines.push_back(scalar_text(j));
    }
    return lines;
}

} // namespace

std::string json_to_text(const std::string& json_str) {
    json j = json::parse(json_str);
    std::ostringstream out;
    for (auto& l : render_lines(j)) out << l << "\n";
    return out.str();
}

} // namespace wiener
