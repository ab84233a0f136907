#include <doctest.h>

#include <json.hpp>

#include "wiener/wiener.hpp"

using namespace wiener;
using njson = nlohmann::json;

TEST_CASE("maximize report carries the full result") {
    auto ds = parse_degree_sequence("13,5,5,5,4,3,1x25");
    MaxResult r = solve(ds);
    std::string s = maximize_report_json(ds, r);
    njson j = njson::parse(s);
    CHECK(j["degrees"] == "13,5x3,4,3,1x25");
    CHECK(j["n"] == 31);
    CHECK(j["k"] == 6);
    CHECK(j["method"] == "closed_form");
    CHECK(j["f_star"] == 886);
    CHECK(j["w_star"] == 1786);
    CHECK(j["argmax"].size() == 2);
    CHECK(j["argmax"][0] == njson::parse("[12,2,3,4,4,4]"));
    CHECK(j["argmax"][1] == njson::parse("[12,3,2,4,4,4]"));
}

TEST_CASE("text mirrors the json field for field") {
    auto ds = parse_degree_sequence("13,5,5,5,4,3,1x25");
    MaxResult r = solve(ds);
    std::string text = json_to_text(maximize_report_json(ds, r));
    CHECK(text == "degrees: 13,5x3,4,3,1x25\n"
                  "n: 31\n"
                  "k: 6\n"
                  "method: closed_form\n"
                  "f_star: 886\n"
                  "w_star: 1786\n"
                  "argmax:\n"
                  "  - 12,2,3,4,4,4\n"
                  "  - 12,3,2,4,4,4\n");
}

TEST_CASE("bound report keeps the rational exact") {
    auto ds = DegreeSequence::validate({3, 2, 1, 1, 1});
    std::string s = bound_report_json(ds, upper_bound(ds));
    njson j = njson::parse(s);
    CHECK(j["bound"]["num"] == 37);
    CHECK(j["bound"]["den"] == 2);
    CHECK(j["tight"] == false);
    CHECK(j["lambda_cap"] == 1);
    CHECK(j["lambda1"].is_number_float());
    std::string text = json_to_text(s);
    CHECK(text.find("bound:\n  num: 37\n  den: 2\n") != std::string::npos);
}

TEST_CASE("counterexample report records both value pairs") {
    std::string s = counterexample_report_json(greedy_counterexample());
    njson j = njson::parse(s);
    CHECK(j["w_better"] == 1786);
    CHECK(j["w_greedy"] == 1770);
    CHECK(j["published_w_better"] == 9886);
    CHECK(j["published_w_greedy"] == 9870);
    CHECK(j["gap"] == 16);
    CHECK(j["published_gap"] == 16);
    CHECK(j["gap_matches_published"] == true);
    CHECK(j["greedy_is_optimal"] == false);
    CHECK(j["better_is_optimal"] == true);
    CHECK(j["audit"]["hard_failures"] == false);
}

TEST_CASE("audit report structure survives the round trip") {
    AuditReport r = audit_sweep({2, 6}, 2, true);
    std::string s = audit_report_json(r);
    njson j = njson::parse(s);
    CHECK(j["instance_count"] == r.instance_count);
    CHECK(j["records"].size() == r.records.size());
    CHECK(j["summary"]["value_mismatch"] == 0);
    CHECK(j["hard_failures"] == false);
    CHECK(j["tree_checks"].size() == r.tree_checks.size());
    // bound records carry the rational, not a claimed value
    bool saw_bound = false;
    for (const auto& rec : j["records"]) {
        if (rec["source"] == "T2.4-bound") {
            saw_bound = true;
            CHECK(rec.contains("bound"));
            CHECK_FALSE(rec.contains("claimed_f"));
            CHECK_FALSE(rec.contains("claimed_argmax"));
        }
        if (rec["source"] == "T2.7") CHECK(rec.contains("non_valley_argmax"));
    }
    CHECK(saw_bound);
}

TEST_CASE("reports are byte-identical across runs") {
    auto ds = parse_degree_sequence("4,3,2,1x5");
    CHECK(maximize_report_json(ds, solve(ds)) ==
          maximize_report_json(ds, solve(ds)));
    AuditReport a = audit_sweep({2, 3}, 3);
    AuditReport b = audit_sweep({2, 3}, 3);
    CHECK(audit_report_json(a) == audit_report_json(b));
    CHECK(json_to_text(audit_report_json(a)) ==
          json_to_text(audit_report_json(b)));
}

TEST_CASE("caterpillar and tree wiener reports") {
    SpineWeights y({12, 2, 3, 4, 4, 4});
    std::string s = caterpillar_wiener_report_json(
        y, caterpillar_wiener(y), wiener_pairwise(build_caterpillar(y)));
    njson j = njson::parse(s);
    CHECK(j["weights"] == njson::parse("[12,2,3,4,4,4]"));
    CHECK(j["wiener_formula"] == 1786);
    CHECK(j["wiener_pairwise"] == 1786);
    CHECK(j["agree"] == true);

    Tree t = build_caterpillar(y);
    njson jt = njson::parse(
        tree_wiener_report_json(t, wiener_pairwise(t), wiener_edgecut(t)));
    CHECK(jt["n"] == 31);
    CHECK(jt["agree"] == true);
}
