#include "record.hpp"

#include <cmath>
#include <sstream>

namespace newform::harness {

namespace {

nlohmann::json num(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

double denum(const nlohmann::json& j) {
    if (j.is_number()) return j.get<double>();
    std::string s = j.get<std::string>();
    if (s == "inf") return INFINITY;
    if (s == "-inf") return -INFINITY;
    return NAN;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

}  // namespace

Record make_record(std::string suite, std::string check, std::string anchor, nlohmann::json params, double residual,
                   double tolerance, std::string detail) {
    Record r;
    r.suite = std::move(suite);
    r.check = std::move(check);
    r.anchor = std::move(anchor);
    r.params = std::move(params);
    r.residual = residual;
    r.tolerance = tolerance;
    r.pass = residual <= tolerance;  // false for NaN
    r.detail = std::move(detail);
    return r;
}

nlohmann::json to_json(const Record& r) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["check"] = r.check;
    j["anchor"] = r.anchor;
    j["parameters"] = r.params;
    j["residual"] = num(r.residual);
    j["tolerance"] = num(r.tolerance);
    j["status"] = r.pass ? "pass" : "fail";
    if (!r.detail.empty()) j["detail"] = r.detail;
    j["provenance"] = r.provenance;
    return j;
}

Record from_json(const nlohmann::json& j) {
    Record r;
    r.suite = j.value("suite", "");
    r.check = j.at("check").get<std::string>();
    r.anchor = j.value("anchor", "");
    r.params = j.value("parameters", nlohmann::json::object());
    r.residual = j.contains("residual") ? denum(j["residual"]) : 0;
    r.tolerance = j.contains("tolerance") ? denum(j["tolerance"]) : 0;
    r.pass = j.at("status").get<std::string>() == "pass";
    r.detail = j.value("detail", "");
    if (j.contains("provenance")) r.provenance = j["provenance"].get<std::map<std::string, std::string>>();
    return r;
}

std::string to_jsonl(const std::vector<Record>& recs) {
    std::string s;
    for (const auto& r : recs) s += to_json(r).dump() + "\n";
    return s;
}

std::string csv_header() { return "suite,check,anchor,parameters,residual,tolerance,status,detail\n"; }

std::string to_csv_row(const Record& r) {
    return csv_escape(r.suite) + "," + csv_escape(r.check) + "," + csv_escape(r.anchor) + "," +
           csv_escape(r.params.dump()) + "," + fmt(r.residual) + "," + fmt(r.tolerance) + "," +
           (r.pass ? "pass" : "fail") + "," + csv_escape(r.detail) + "\n";
}

std::string to_csv(const std::vector<Record>& recs) {
    std::string s = csv_header();
    for (const auto& r : recs) s += to_csv_row(r);
    return s;
}

}  // namespace newform::harness
