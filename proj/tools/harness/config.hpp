#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace newform::harness {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unset optional fields mean "the suite's full default sweep".
struct RunConfig {
    int p = 3;
    std::optional<int> n, r, m, a;
    int Mprec = 8;      // extra p-adic digits beyond the level
    int T = 12;         // Y-series truncation
    int depth = 8;      // oracle shell depth
    int samples = 1000;
    uint64_t seed = 1;
    int jobs = 0;       // 0: hardware concurrency
    double tol_symbolic = 0;
    double tol_oracle = 1e-3;
    double tol_shintani = 1e-6;
    std::string out;
    std::string format = "jsonl";  // or csv

    void validate() const;  // throws ConfigError naming the field
};

// key = value lines, '#' comments. Keys are the field names above.
std::map<std::string, std::string> read_config_file(const std::string& path);
// NEWFORM_<KEY> variables (key upper-cased), for every known key that is set
std::map<std::string, std::string> read_env();
void apply(RunConfig& cfg, const std::map<std::string, std::string>& kv, const std::string& origin);
const char* const* config_keys();  // null-terminated

}  // namespace newform::harness
