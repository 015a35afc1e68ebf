// newform: verification suites, fixture generation and report digests.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "harness/config.hpp"
#include "harness/record.hpp"
#include "harness/report.hpp"
#include "harness/suites.hpp"

using namespace newform::harness;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Every config key becomes a flag of the same name; values are applied last (defaults < --config < env < flags).
struct ConfigFlags {
    std::map<std::string, std::string> values;
    std::string config_path;

    void attach(CLI::App* app) {
        app->add_option("--config", config_path, "key = value file");
        for (const char* const* k = config_keys(); *k; ++k) {
            std::string key = *k;
            app->add_option_function<std::string>(
                "--" + key, [this, key](const std::string& v) { values[key] = v; }, "config field '" + key + "'");
        }
    }

    RunConfig resolve() const {
        RunConfig cfg;
        if (!config_path.empty()) apply(cfg, read_config_file(config_path), "config file");
        apply(cfg, read_env(), "environment");
        apply(cfg, values, "command line");
        cfg.validate();
        return cfg;
    }
};

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::vector<int> parse_lambda(const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            v.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ConfigError("field 'lambda': not an integer list: '" + s + "'");
        }
    }
    if (v.empty()) throw ConfigError("field 'lambda': empty");
    return v;
}

int cmd_verify(const std::string& suite, const RunConfig& cfg) {
    std::vector<std::string> names;
    if (suite == "all") names = suite_names();
    else names = {suite};
    std::string body = cfg.format == "csv" ? csv_header() : "";
    std::string timing;
    bool ok = true;
    for (const auto& name : names) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<Record> recs = run_suite(name, cfg);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        for (const auto& r : recs) {
            ok = ok && r.pass;
            body += cfg.format == "csv" ? to_csv_row(r) : to_json(r).dump() + "\n";
        }
        timing += timing_line(name, secs);
    }
    write_out(cfg.out, body);
    // timings are kept out of the record stream so that reruns compare byte for byte
    if (cfg.out.empty()) std::cerr << timing;
    else write_out(cfg.out + ".timing", timing);
    return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Checks for unramified U(2n+1) newform computations"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run a check suite; exit 0 iff every record passes");
    std::string suite;
    std::vector<std::string> choices = suite_names();
    choices.push_back("all");
    verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(choices));
    ConfigFlags vflags;
    vflags.attach(verify);

    auto* compute = app.add_subcommand("compute", "write a fixture as JSON");
    std::string table, beta = "1/2", lambda = "1";
    bool symbolic = false;
    int mprime = 2;
    compute->add_option("table", table, "xi | oldform-xi | satake | whittaker")
        ->required()
        ->check(CLI::IsMember({"xi", "oldform-xi", "satake", "whittaker"}));
    compute->add_option("--beta", beta, "rational Satake value with |beta| < 1");
    compute->add_option("--lambda", lambda, "comma-separated partition");
    compute->add_flag("--symbolic", symbolic, "xi: closed-form table instead of the oracle");
    compute->add_option("--mprime", mprime, "oldform-xi: target level");
    ConfigFlags cflags;
    cflags.attach(compute);

    auto* report = app.add_subcommand("report", "digest of JSON-lines reports");
    std::vector<std::string> paths;
    std::string rformat = "text", rout;
    report->add_option("paths", paths, "report files");
    report->add_option("--format", rformat, "text | csv")->check(CLI::IsMember({"text", "csv"}));
    report->add_option("--out", rout, "also write the CSV digest here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) return cmd_verify(suite, vflags.resolve());
        if (*compute) {
            RunConfig cfg = cflags.resolve();
            nlohmann::json j;
            if (table == "whittaker") j = compute_whittaker(cfg, beta);
            else if (table == "satake") j = compute_satake(cfg, parse_lambda(lambda));
            else if (table == "xi") j = compute_xi(cfg, beta, symbolic);
            else j = compute_oldform_xi(cfg, beta, parse_lambda(lambda), mprime);
            write_out(cfg.out, j.dump(2) + "\n");
            return 0;
        }
        if (*report) {
            Digest d = summarize(paths);
            std::cout << (rformat == "csv" ? digest_csv(d) : digest_text(d));
            if (!rout.empty()) write_out(rout, digest_csv(d));
            return d.failed ? kExitFail : 0;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return 0;
}
