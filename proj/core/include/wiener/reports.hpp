#pragma once

#include <string>

#include "wiener/audit.hpp"
#include "wiener/bounds.hpp"
#include "wiener/solvers.hpp"
#include "wiener/tree.hpp"

namespace wiener {

// Every report renders first to JSON with a fixed field order and exact
// integers (the only floating-point field anywhere is lambda1).  The text
// form is derived from the same JSON, so the two views can never drift.

std::string tree_wiener_report_json(const Tree& t, WienerValue pairwise,
                                    WienerValue edgecut);
std::string caterpillar_wiener_report_json(const SpineWeights& y,
                                           WienerValue formula,
                                           WienerValue pairwise);
std::string maximize_report_json(const DegreeSequence& ds, const MaxResult& r);
std::string greedy_report_json(const DegreeSequence& ds, const SpineWeights& y,
                               const MaxResult* reference);
std::string bound_report_json(const DegreeSequence& ds, const BoundReport& b);
std::string audit_report_json(const AuditReport& r);
std::string counterexample_report_json(const CounterexampleReport& r);

/// Renders any of the JSON reports as indented key/value text, field for
/// field in the same order.  Scalar arrays print comma-joined, so weight
/// vectors keep their usual text form.
std::string json_to_text(const std::string& json);

} // namespace wiener
