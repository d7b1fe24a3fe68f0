#pragma once

// Report serialization. One rule everywhere: numbers travel as strings
// ("3/4" in exact mode, shortest-round-trip decimal in float mode), keys keep
// insertion order, and nothing time- or machine-dependent enters a report.
// Byte-identical runs from equal (config, seed) are a supported contract.

#include <string>

#include <json.hpp>

#include "claims.hpp"
#include "constants.hpp"
#include "dual_norm.hpp"
#include "verify.hpp"
#include "version.hpp"

namespace greedylab {

using report_json = nlohmann::ordered_json;

inline report_json to_json(const constant_used& c) {
    report_json j;
    j["name"] = c.name;
    j["value"] = c.value;
    j["kind"] = to_string(c.kind);
    return j;
}

template <class R>
report_json to_json(const constant_estimate<R>& c) {
    report_json j;
    j["name"] = c.name;
    j["value"] = scalar_ops<R>::str(c.value);
    j["kind"] = to_string(c.kind);
    j["window"] = c.window;
    j["witness"] = c.witness;
    return j;
}

inline report_json to_json(const check_report& r) {
    report_json j;
    j["claim"] = r.claim;
    j["space"] = r.space;
    j["weights"] = r.weights;
    j["mode"] = r.mode;
    j["window"] = r.window;
    j["seed"] = std::to_string(r.seed);
    j["instances_valid"] = r.valid;
    j["instances_rejected"] = r.rejected;
    j["hypothesis_status"] = r.hypothesis_status;
    j["coefficient"] = r.coefficient;
    report_json cs = report_json::array();
    for (const auto& c : r.constants) cs.push_back(to_json(c));
    j["constants"] = std::move(cs);
    j["caveat_witness_constants"] = r.caveat;
    j["max_slack"] = r.max_slack;
    j["violations"] = r.violation_count;
    if (!r.violations.empty()) j["violation_samples"] = r.violations;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

template <class R>
report_json to_json(const sigma_result<R>& s) {
    report_json j;
    j["value"] = scalar_ops<R>::str(s.value);
    j["best_set"] = s.best_set.str();
    j["sets_examined"] = s.sets_examined;
    return j;
}

inline report_json to_json(const dual_norm_result& d) {
    report_json j;
    j["value"] = d.value.str();
    j["witness"] = d.witness.encode();
    j["lp_rows"] = d.lp_rows;
    j["pivots"] = d.pivots;
    return j;
}

inline report_json to_json(const example_check& c) {
    report_json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["expected"] = c.expected;
    j["actual"] = c.actual;
    return j;
}

inline report_json to_json(const examples_report& r) {
    report_json j;
    j["all_pass"] = r.all_pass;
    report_json cs = report_json::array();
    for (const auto& c : r.checks) cs.push_back(to_json(c));
    j["checks"] = std::move(cs);
    return j;
}

// top-level envelope: config echo + library version + payload
inline report_json report_envelope(const report_json& config_echo) {
    report_json j;
    j["library_version"] = library_version;
    j["config"] = config_echo;
    return j;
}

inline std::string render_report(const report_json& j) { return j.dump(2) + "\n"; }

} // namespace greedylab
