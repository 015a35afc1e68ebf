#pragma once

#include <functional>
#include <string>
#include <vector>

#include "config.hpp"
#include "record.hpp"

namespace newform::harness {

const std::vector<std::string>& suite_names();  // dims cosets decomp trace hecke gk rs oldforms
// Records in a fixed order independent of the worker count. Unknown name throws ConfigError.
std::vector<Record> run_suite(const std::string& name, const RunConfig& cfg);
// Only tasks whose primary check name passes `keep` are run (a task may emit several records).
std::vector<Record> run_suite(const std::string& name, const RunConfig& cfg,
                              const std::function<bool(const std::string&)>& keep);

// ---- fixtures written by `compute`
nlohmann::json compute_whittaker(const RunConfig& cfg, const std::string& beta);
nlohmann::json compute_satake(const RunConfig& cfg, const std::vector<int>& lambda);
// n = 1: m = 0 newform, m = 1 level-one projection, m = 2 eta_{(1),0,2}
nlohmann::json compute_xi(const RunConfig& cfg, const std::string& beta, bool symbolic);
nlohmann::json compute_oldform_xi(const RunConfig& cfg, const std::string& beta, const std::vector<int>& lambda,
                                  int mprime);

}  // namespace newform::harness
