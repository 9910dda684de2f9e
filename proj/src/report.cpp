#include "starsurf/report.hpp"

#include <json.hpp>

#include <sstream>

namespace starsurf {

bool CheckReport::all_applicable_pass() const {
    for (const auto& r : identities)
        if (r.applicable && !r.pass) return false;
    return true;
}

bool CheckReport::any_engine_inconsistent() const {
    for (const auto& d : diffs)
        if (d.verdict == "engine-inconsistent") return true;
    return false;
}

std::string CheckReport::to_json() const {
    nlohmann::json j;
    j["schema"] = kReportSchema;
    j["kind"] = kind;
    j["backend"] = backend;
    j["source"] = source;
    j["order"] = order;
    j["odd_dim"] = odd_dim;
    j["metric_degree"] = metric_degree;
    j["graded_symmetric"] = graded_symmetric;
    j["conventions"] = conventions;
    if (!identities.empty()) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : identities) {
            nlohmann::json row;
            row["identity"] = r.identity;
            row["applicable"] = r.applicable;
            row["verdict"] = r.applicable ? (r.pass ? "pass" : "fail") : "not-applicable";
            if (!r.note.empty()) row["note"] = r.note;
            rows.push_back(std::move(row));
        }
        j["identities"] = std::move(rows);
    }
    if (!diffs.empty()) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& d : diffs) {
            nlohmann::json row;
            row["tensor"] = d.tensor;
            row["indices"] = d.indices;
            row["engine_value"] = d.engine_value;
            row["paper_value"] = d.paper_value;
            row["oracle_value"] = d.oracle_value;
            row["verdict"] = d.verdict;
            row["confidence"] = d.confidence;
            if (!d.note.empty()) row["note"] = d.note;
            rows.push_back(std::move(row));
        }
        j["rows"] = std::move(rows);
    }
    if (!values.empty()) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& [name, value] : values) {
            nlohmann::json row;
            row["component"] = name;
            row["value"] = value;
            rows.push_back(std::move(row));
        }
        j["components"] = std::move(rows);
    }
    return j.dump(2);
}

std::string CheckReport::to_text() const {
    std::ostringstream os;
    os << "# " << kind << " (" << backend << ", order " << order << ", P = " << odd_dim
       << ", |g| = " << metric_degree << ", graded symmetric: "
       << (graded_symmetric ? "yes" : "no") << ")\n";
    if (!source.empty()) os << "# source: " << source << "\n";
    for (const auto& [k, v] : conventions) os << "# convention " << k << ": " << v << "\n";
    for (const auto& r : identities) {
        os << (r.applicable ? (r.pass ? "PASS " : "FAIL ") : "N/A  ") << r.identity;
        if (!r.note.empty()) os << "  (" << r.note << ")";
        os << "\n";
    }
    for (const auto& d : diffs) {
        os << "[" << d.verdict << "] " << d.tensor << "(" << d.indices << ")";
        if (d.confidence == "low") os << " [low-confidence transcription]";
        os << "\n    engine: " << d.engine_value << "\n    paper:  " << d.paper_value
           << "\n    oracle: " << d.oracle_value << "\n";
        if (!d.note.empty()) os << "    note:   " << d.note << "\n";
    }
    for (const auto& [name, value] : values) os << name << " = " << value << "\n";
    return os.str();
}

} // namespace starsurf
