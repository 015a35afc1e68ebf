// Acceptance gate: one line per criterion. A criterion listed with --known-red must fail (its failure is
// documented); any other failure, or a known-red criterion that passes, makes the exit status nonzero.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "harness/config.hpp"
#include "harness/record.hpp"
#include "harness/suites.hpp"

using namespace newform::harness;

namespace {

struct Outcome {
    bool pass = false;
    std::string summary;
};

struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<Outcome()> run;
};

bool starts_with(const std::string& s, const std::string& pre) { return s.rfind(pre, 0) == 0; }

using Pred = std::function<bool(const std::string&)>;

Pred prefix(std::vector<std::string> pres) {
    return [pres](const std::string& c) {
        for (const auto& p : pres)
            if (starts_with(c, p)) return true;
        return false;
    };
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

// all records must pass; summary gives the count and the worst residual
Outcome all_pass(const std::vector<Record>& recs) {
    Outcome o;
    if (recs.empty()) return {false, "no records"};
    long bad = 0;
    double worst = 0;
    std::string first_bad;
    for (const auto& r : recs) {
        worst = std::max(worst, r.residual);
        if (!r.pass) {
            ++bad;
            if (first_bad.empty()) first_bad = r.check + " residual " + fmt(r.residual) + " > " + fmt(r.tolerance);
        }
    }
    o.pass = bad == 0;
    o.summary = std::to_string(recs.size()) + " records, max residual " + fmt(worst);
    if (bad) o.summary += "; " + std::to_string(bad) + " failing, first: " + first_bad;
    return o;
}

std::vector<Record> operator+(std::vector<Record> a, const std::vector<Record>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> known_red;
    std::string out;
    int det_samples = 200;
    std::vector<int> select;
    app.add_option("--known-red", known_red, "criteria expected to fail");
    app.add_option("--out", out, "also write the result lines here");
    app.add_option("--determinism-samples", det_samples, "sample count for the reruns of criterion 12");
    app.add_option("--only", select, "run only these criteria");
    CLI11_PARSE(app, argc, argv);
    const std::set<int> red(known_red.begin(), known_red.end());

    RunConfig base;  // defaults: p = 3, seed = 1, samples = 1000
    base.jobs = 0;

    std::vector<Criterion> crit;
    crit.push_back({1, "oldform dimension = Hecke trace count (n<=3, a<=4, m<=a+8)", 1, [&] {
                        return all_pass(run_suite("dims", base, prefix({"dims.trace_vs_closed_form"})));
                    }});
    crit.push_back({2, "Vandermonde identity (l<=10, r<=5, n<=6)", 1,
                    [&] { return all_pass(run_suite("dims", base, prefix({"dims.vandermonde"}))); }});
    crit.push_back({3, "conductor and dimension recursions (n<=5, k<=2, conductors<=3, m<=10)", 10, [&] {
                        return all_pass(
                            run_suite("dims", base, prefix({"dims.conductor_recursion", "dims.recursion"})));
                    }});
    crit.push_back({4, "compact decomposition round trip, 1000 samples per (n, m), n<=2, 1<=m<=4", 120,
                    [&] { return all_pass(run_suite("decomp", base)); }});
    crit.push_back({5, "double coset classifier invariance and distinct representatives, 1000 per config", 300, [&] {
                        return all_pass(
                            run_suite("cosets", base, prefix({"cosets.representatives", "cosets.invariance"})));
                    }});
    crit.push_back({6, "Levi intersection membership, 1000 conjugated samples", 120,
                    [&] { return all_pass(run_suite("cosets", base, prefix({"cosets.levi"}))); }});
    crit.push_back({7, "Hecke involution square and trace enumeration", 1,
                    [&] { return all_pass(run_suite("trace", base)); }});
    crit.push_back({8, "GL2 Jacquet integral vs Shintani, p in {3,5}, |mu|<=3, depth 6", 120, [&] {
                        RunConfig c = base;
                        c.depth = 6;
                        return all_pass(run_suite("rs", c, prefix({"rs.shintani_gl2"})));
                    }});
    crit.push_back({9, "rank-one intertwining integral vs closed form, 27 specializations", 300,
                    [&] { return all_pass(run_suite("gk", base)); }});
    crit.push_back({10, "newform identity at U(3), p=3, three Satake values; symbolic property suite", 600, [&] {
                        std::vector<Record> recs =
                            run_suite("rs", base, [](const std::string& c) { return c != "rs.shintani_gl2"; });
                        recs = recs + run_suite("hecke", base, prefix({"hecke.equivariance", "hecke.commutativity"}));
                        return all_pass(recs);
                    }});
    crit.push_back({11, "oldform formulas at n=1: level raising vs the closed-form q_E X S(phi) prediction", 600, [&] {
                        std::vector<Record> recs = run_suite("oldforms", base);
                        Outcome o = all_pass(recs);
                        // spell out which parts hold
                        std::string parts;
                        for (const auto& r : recs)
                            if (r.check.find("oracle") == std::string::npos || r.params.value("beta", "") == "1/2")
                                parts += " " + r.check + (r.pass ? "=pass" : "=FAIL");
                        o.summary += ";" + parts;
                        return o;
                    }});
    crit.push_back({12, "determinism: identical config and seed give byte-identical streams", 600, [&] {
                        RunConfig c = base;
                        c.samples = det_samples;
                        long suites = 0;
                        std::string diff;
                        for (const auto& name : suite_names()) {
                            RunConfig c1 = c, c2 = c, c3 = c;
                            c1.jobs = 1;
                            c2.jobs = 1;
                            c3.jobs = 3;  // worker count is not part of the output
                            std::string a = to_jsonl(run_suite(name, c1)), b = to_jsonl(run_suite(name, c2)),
                                        d = to_jsonl(run_suite(name, c3));
                            ++suites;
                            if (a != b || a != d) diff += " " + name;
                            if (a.empty()) diff += " " + name + "(empty)";
                        }
                        return Outcome{diff.empty(), std::to_string(suites) + " suites rerun at " +
                                                         std::to_string(det_samples) + " samples" +
                                                         (diff.empty() ? ", identical" : "; differing:" + diff)};
                    }});

    std::ostringstream lines;
    int unexpected = 0;
    for (const auto& c : crit) {
        if (!select.empty() && std::find(select.begin(), select.end(), c.id) == select.end()) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = secs <= c.budget_s;
        bool pass = o.pass && in_budget;
        if (!in_budget) o.summary += "; over budget (" + fmt(c.budget_s) + " s)";
        std::string status;
        if (red.count(c.id)) {
            status = pass ? "PASS (unexpected, listed as known red)" : "FAIL (known, see README)";
            if (pass) ++unexpected;
        } else {
            status = pass ? "PASS" : "FAIL";
            if (!pass) ++unexpected;
        }
        char head[64];
        std::snprintf(head, sizeof head, "criterion %2d: %-40s", c.id, status.c_str());
        std::string line = std::string(head) + " " + fmt(secs) + " s | " + c.title + " | " + o.summary + "\n";
        std::cout << line << std::flush;
        lines << line;
    }
    if (!out.empty()) std::ofstream(out) << lines.str();
    return unexpected ? 1 : 0;
}
