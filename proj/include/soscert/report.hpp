#ifndef SOSCERT_REPORT_HPP
#define SOSCERT_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "soscert/rational.hpp"
#include "soscert/sqf_cert.hpp"

namespace soscert {

// Machine-readable certificate record. Rationals serialize as exact
// "num/den" strings, never floats, so replays compare bit-for-bit.
struct ReportedCondition {
    std::string name;
    std::string anchor;
    std::string verdict;  // "pass" | "fail"
    std::optional<std::string> witness;
    std::string note;
};

struct CertificateReport {
    std::string pipeline;
    long n = 0;
    long k = 0;
    std::string P;  // exact rational string; empty when unused
    std::string mode;
    nlohmann::json params;
    std::vector<ReportedCondition> conditions;
    nlohmann::json degrees;
    nlohmann::json timings_ms;

    bool all_pass() const;
    nlohmann::json to_json() const;
    static CertificateReport from_json(const nlohmann::json& j);
};

void append_condition(CertificateReport& rep, const ConditionReport& c);

void write_report_file(const CertificateReport& rep, const std::string& path);
CertificateReport load_report_file(const std::string& path);

// Verdict-level equality ignoring timings: same pipeline, params, ordered
// condition names, verdicts and witnesses.
bool same_verdicts(const CertificateReport& a, const CertificateReport& b);

// CSV with a header row; cells are exact rational strings.
void write_csv_file(const std::string& path, const std::vector<std::string>& header,
                    const std::vector<std::vector<Rational>>& rows);

}  // namespace soscert

#endif
