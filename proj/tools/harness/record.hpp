#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace newform::harness {

// One check outcome. Nothing run-dependent (timings, hostnames) goes in here, so equal configs give
// byte-identical streams.
struct Record {
    std::string suite;
    std::string check;
    std::string anchor;  // stable id of the identity being exercised
    nlohmann::json params = nlohmann::json::object();
    double residual = 0;
    double tolerance = 0;
    bool pass = false;
    std::string detail;
    std::map<std::string, std::string> provenance;
};

Record make_record(std::string suite, std::string check, std::string anchor, nlohmann::json params, double residual,
                   double tolerance, std::string detail = {});

nlohmann::json to_json(const Record& r);
Record from_json(const nlohmann::json& j);
std::string to_jsonl(const std::vector<Record>& recs);
std::string csv_header();
std::string to_csv_row(const Record& r);
std::string to_csv(const std::vector<Record>& recs);

}  // namespace newform::harness
