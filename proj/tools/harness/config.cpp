#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>

namespace newform::harness {

namespace {

const char* const kKeys[] = {"p",       "n",    "r",    "m",           "a",          "Mprec",         "T",
                             "depth",   "samples", "seed", "jobs",      "tol_symbolic", "tol_oracle", "tol_shintani",
                             "out",     "format", nullptr};

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r"), e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

int to_int(const std::string& key, const std::string& v, const std::string& origin) {
    try {
        size_t pos = 0;
        long x = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return int(x);
    } catch (const std::exception&) {
        throw ConfigError("field '" + key + "' (" + origin + "): not an integer: '" + v + "'");
    }
}

double to_double(const std::string& key, const std::string& v, const std::string& origin) {
    try {
        size_t pos = 0;
        double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("field '" + key + "' (" + origin + "): not a number: '" + v + "'");
    }
}

}  // namespace

const char* const* config_keys() { return kKeys; }

void RunConfig::validate() const {
    auto fail = [](const std::string& f, const std::string& why) { throw ConfigError("field '" + f + "': " + why); };
    if (p == 2 || !is_prime(p)) fail("p", "must be an odd prime, got " + std::to_string(p));
    if (n && *n < 1) fail("n", "must be positive");
    if (r && *r < 1) fail("r", "must be positive");
    if (r && n && *r > *n) fail("r", "must not exceed n");
    if (m && *m < 0) fail("m", "must be nonnegative");
    if (a && *a < 0) fail("a", "must be nonnegative");
    if (Mprec < 1) fail("Mprec", "must be positive");
    if (T < 1) fail("T", "must be positive");
    if (depth < 1) fail("depth", "must be positive");
    if (samples < 1) fail("samples", "must be positive");
    if (jobs < 0) fail("jobs", "must be nonnegative");
    if (tol_symbolic < 0 || tol_oracle < 0 || tol_shintani < 0) fail("tol_*", "tolerances must be nonnegative");
    if (format != "jsonl" && format != "csv") fail("format", "must be jsonl or csv");
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config file '" + path + "': cannot open");
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config file '" + path + "' line " + std::to_string(lineno) + ": expected key = value");
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

std::map<std::string, std::string> read_env() {
    std::map<std::string, std::string> kv;
    for (const char* const* k = kKeys; *k; ++k) {
        std::string name = "NEWFORM_";
        for (const char* c = *k; *c; ++c) name += char(std::toupper(static_cast<unsigned char>(*c)));
        if (const char* v = std::getenv(name.c_str())) kv[*k] = v;
    }
    return kv;
}

void apply(RunConfig& cfg, const std::map<std::string, std::string>& kv, const std::string& origin) {
    for (const auto& [k, v] : kv) {
        if (k == "p") cfg.p = to_int(k, v, origin);
        else if (k == "n") cfg.n = to_int(k, v, origin);
        else if (k == "r") cfg.r = to_int(k, v, origin);
        else if (k == "m") cfg.m = to_int(k, v, origin);
        else if (k == "a") cfg.a = to_int(k, v, origin);
        else if (k == "Mprec") cfg.Mprec = to_int(k, v, origin);
        else if (k == "T") cfg.T = to_int(k, v, origin);
        else if (k == "depth") cfg.depth = to_int(k, v, origin);
        else if (k == "samples") cfg.samples = to_int(k, v, origin);
        else if (k == "seed") {
            try {
                cfg.seed = std::stoull(v);
            } catch (const std::exception&) {
                throw ConfigError("field 'seed' (" + origin + "): not an integer: '" + v + "'");
            }
        } else if (k == "jobs") cfg.jobs = to_int(k, v, origin);
        else if (k == "tol_symbolic") cfg.tol_symbolic = to_double(k, v, origin);
        else if (k == "tol_oracle") cfg.tol_oracle = to_double(k, v, origin);
        else if (k == "tol_shintani") cfg.tol_shintani = to_double(k, v, origin);
        else if (k == "out") cfg.out = v;
        else if (k == "format") cfg.format = v;
        else throw ConfigError("unknown field '" + k + "' (" + origin + ")");
    }
}

}  // namespace newform::harness
