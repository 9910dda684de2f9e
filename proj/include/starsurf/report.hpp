#pragma once

#include <map>
#include <string>
#include <vector>

namespace starsurf {

inline constexpr const char* kReportSchema = "starsurf.report/1";

// Verdict of one proposition / theorem residual check.
struct IdentityRow {
    std::string identity;
    bool applicable = false;
    bool pass = false;
    std::string note;
};

// One component of a three-way comparison: engine (symbolic backend),
// transcribed paper table, substitution oracle.
struct DiffRow {
    std::string tensor;
    std::string indices;
    std::string engine_value;
    std::string paper_value;   // "-" when the table omits the component
    std::string oracle_value;  // "agree", "disagree(set k)", "n/a"
    std::string verdict;       // "match" | "engine-consistent-paper-differs" | "engine-inconsistent"
    std::string confidence;    // "high" | "low"
    std::string note;
};

struct CheckReport {
    std::string kind;     // "identity_check" | "example_diff" | "compute"
    std::string backend;  // "exact" | "symbolic"
    std::string source;   // file or generator description
    int order = 0;
    int odd_dim = 0;
    std::string metric_degree;  // "even" | "odd"
    bool graded_symmetric = false;
    std::vector<IdentityRow> identities;
    std::vector<DiffRow> diffs;
    // tensor component dump for `compute`: name -> canonical value
    std::vector<std::pair<std::string, std::string>> values;
    std::map<std::string, std::string> conventions;

    bool all_applicable_pass() const;
    bool any_engine_inconsistent() const;

    std::string to_json() const;  // pretty-printed, schema-tagged
    std::string to_text() const;
};

} // namespace starsurf
