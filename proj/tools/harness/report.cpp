#include "report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace newform::harness {

namespace {

std::string fmt(double x, int prec = 6) {
    std::ostringstream os;
    os.precision(prec);
    os << x;
    return os.str();
}

}  // namespace

std::string timing_line(const std::string& suite, double seconds) {
    return nlohmann::json{{"suite", suite}, {"seconds", seconds}}.dump() + "\n";
}

Digest summarize(const std::vector<std::string>& paths) {
    Digest d;
    for (const auto& path : paths) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open report file '" + path + "'");
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            Record r;
            try {
                r = from_json(nlohmann::json::parse(line));
            } catch (const std::exception& e) {
                throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed record: " + e.what());
            }
            SuiteSummary& s = d.suites[r.suite];
            ++s.total;
            ++d.total;
            if (r.pass) {
                ++s.passed;
            } else {
                ++s.failed;
                ++d.failed;
                d.failures.push_back(r);
            }
            double ratio = r.tolerance > 0 ? r.residual / r.tolerance : r.residual;
            if (std::isfinite(ratio) && ratio >= s.worst_ratio) {
                if (ratio > s.worst_ratio || s.worst_check.empty()) s.worst_check = r.check;
                s.worst_ratio = ratio;
            } else if (!std::isfinite(ratio)) {
                s.worst_ratio = INFINITY;
                s.worst_check = r.check;
            }
        }
        std::ifstream tin(path + ".timing");
        while (tin && std::getline(tin, line)) {
            if (line.empty()) continue;
            auto j = nlohmann::json::parse(line);
            SuiteSummary& s = d.suites[j.at("suite").get<std::string>()];
            s.seconds = std::max(0.0, s.seconds) + j.at("seconds").get<double>();
        }
    }
    return d;
}

std::string digest_text(const Digest& d) {
    if (d.total == 0 && d.suites.empty()) return "";
    std::ostringstream os;
    os << "suite       records   pass   fail   worst residual/tol   time\n";
    for (const auto& [name, s] : d.suites) {
        char buf[200];
        std::snprintf(buf, sizeof buf, "%-10s %8ld %6ld %6ld   %-18s %s\n", name.c_str(), s.total, s.passed, s.failed,
                      fmt(s.worst_ratio, 3).c_str(), s.seconds < 0 ? "-" : (fmt(s.seconds, 3) + " s").c_str());
        os << buf;
        if (!s.worst_check.empty()) os << "           worst: " << s.worst_check << "\n";
    }
    os << "total " << d.total << " records, " << (d.total - d.failed) << " pass, " << d.failed << " fail\n";
    for (const auto& r : d.failures) os << "FAIL " << to_json(r).dump() << "\n";
    return os.str();
}

std::string digest_csv(const Digest& d) {
    std::string s = "suite,records,pass,fail,worst_ratio,worst_check,seconds\n";
    for (const auto& [name, x] : d.suites)
        s += name + "," + std::to_string(x.total) + "," + std::to_string(x.passed) + "," + std::to_string(x.failed) + "," +
             fmt(x.worst_ratio, 17) + "," + x.worst_check + "," + (x.seconds < 0 ? "" : fmt(x.seconds, 6)) + "\n";
    return s;
}

}  // namespace newform::harness
