#pragma once

#include <map>
#include <string>
#include <vector>

#include "record.hpp"

namespace newform::harness {

struct SuiteSummary {
    long total = 0, passed = 0, failed = 0;
    double worst_ratio = 0;  // max residual / tolerance among finite ones (residual itself when tol = 0)
    std::string worst_check;
    double seconds = -1;     // from timing sidecars, -1 when absent
};

struct Digest {
    std::map<std::string, SuiteSummary> suites;
    std::vector<Record> failures;
    long total = 0, failed = 0;
};

// Reads JSON-lines report files; `<path>.timing` is picked up when present. Missing files throw
// std::runtime_error naming the path.
Digest summarize(const std::vector<std::string>& paths);
std::string digest_text(const Digest& d);
std::string digest_csv(const Digest& d);

// one line per suite: {"suite": ..., "seconds": ...}
std::string timing_line(const std::string& suite, double seconds);

}  // namespace newform::harness
