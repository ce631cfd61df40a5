#include "soscert/report.hpp"

#include <fstream>
#include <stdexcept>

namespace soscert {

bool CertificateReport::all_pass() const {
    for (const auto& c : conditions) {
        if (c.verdict != "pass") return false;
    }
    return true;
}

nlohmann::json CertificateReport::to_json() const {
    nlohmann::json j;
    j["header"] = {{"pipeline", pipeline}, {"n", n}, {"k", k}, {"P", P}, {"mode", mode}, {"params", params}};
    nlohmann::json conds = nlohmann::json::array();
    for (const auto& c : conditions) {
        nlohmann::json jc = {{"name", c.name}, {"anchor", c.anchor}, {"verdict", c.verdict}};
        if (c.witness) jc["witness"] = *c.witness;
        if (!c.note.empty()) jc["note"] = c.note;
        conds.push_back(std::move(jc));
    }
    j["conditions"] = std::move(conds);
    j["degrees"] = degrees;
    j["timings_ms"] = timings_ms;
    return j;
}

CertificateReport CertificateReport::from_json(const nlohmann::json& j) {
    CertificateReport rep;
    const auto& h = j.at("header");
    rep.pipeline = h.at("pipeline").get<std::string>();
    rep.n = h.at("n").get<long>();
    rep.k = h.at("k").get<long>();
    rep.P = h.at("P").get<std::string>();
    rep.mode = h.at("mode").get<std::string>();
    rep.params = h.value("params", nlohmann::json::object());
    for (const auto& jc : j.at("conditions")) {
        ReportedCondition c;
        c.name = jc.at("name").get<std::string>();
        c.anchor = jc.at("anchor").get<std::string>();
        c.verdict = jc.at("verdict").get<std::string>();
        if (jc.contains("witness")) c.witness = jc.at("witness").get<std::string>();
        c.note = jc.value("note", std::string());
        rep.conditions.push_back(std::move(c));
    }
    rep.degrees = j.value("degrees", nlohmann::json::object());
    rep.timings_ms = j.value("timings_ms", nlohmann::json::object());
    return rep;
}

void append_condition(CertificateReport& rep, const ConditionReport& c) {
    ReportedCondition rc;
    rc.name = c.name;
    rc.anchor = c.anchor;
    rc.verdict = c.pass ? "pass" : "fail";
    if (c.witness) rc.witness = rational_to_string(*c.witness);
    rc.note = c.note;
    rep.conditions.push_back(std::move(rc));
}

void write_report_file(const CertificateReport& rep, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open report path: " + path);
    out << rep.to_json().dump(2) << "\n";
}

CertificateReport load_report_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open report path: " + path);
    nlohmann::json j;
    in >> j;
    return CertificateReport::from_json(j);
}

bool same_verdicts(const CertificateReport& a, const CertificateReport& b) {
    if (a.pipeline != b.pipeline || a.n != b.n || a.k != b.k || a.P != b.P || a.mode != b.mode) return false;
    if (a.conditions.size() != b.conditions.size()) return false;
    for (std::size_t i = 0; i < a.conditions.size(); ++i) {
        const auto& ca = a.conditions[i];
        const auto& cb = b.conditions[i];
        if (ca.name != cb.name || ca.anchor != cb.anchor || ca.verdict != cb.verdict) return false;
        if (ca.witness.has_value() != cb.witness.has_value()) return false;
        if (ca.witness && *ca.witness != *cb.witness) return false;
    }
    return true;
}

void write_csv_file(const std::string& path, const std::vector<std::string>& header,
                    const std::vector<std::vector<Rational>>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open csv path: " + path);
    for (std::size_t i = 0; i < header.size(); ++i) {
        out << header[i] << (i + 1 < header.size() ? "," : "\n");
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << rational_to_string(row[i]) << (i + 1 < row.size() ? "," : "\n");
        }
    }
}

}  // namespace soscert
