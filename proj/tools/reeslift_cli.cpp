// Batch verification front end: dispatches one named check suite and emits
// a machine-readable report.
//
//   reeslift --check lift --n 3 --t 2
//   reeslift --check all --json --out report.json

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "reeslift/runner.hpp"

namespace {

constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reeslift: exact verification suites for determinantal thickenings"};
    app.set_version_flag("--version", std::string(reeslift::kToolVersion));

    reeslift::CheckRequest request;
    std::string check;
    std::string out_path;
    bool as_json = false;
    bool as_text = false;

    std::string joined;
    for (const auto& name : reeslift::known_checks()) {
        if (!joined.empty()) joined += "|";
        joined += name;
    }
    app.add_option("--check", check, "check suite to run (" + joined + ")")->required();
    app.add_option("--m", request.m, "row count where a rectangular shape is required "
                                     "(default n+1)");
    app.add_option("--n", request.n, "matrix size parameter n")->capture_default_str();
    app.add_option("--t", request.t, "power of the ideal (also the |s| bound for cayley)")
        ->capture_default_str();
    app.add_option("--rmax", request.r_max, "top degree for hilbert tables")
        ->capture_default_str();
    app.add_option("--seed", request.seed, "seed for randomized suites")
        ->capture_default_str();
    app.add_option("--trials", request.trials, "trial count for randomized suites")
        ->capture_default_str();
    app.add_flag("--json", as_json, "emit the JSON report (default)");
    app.add_flag("--text", as_text, "emit a human-readable report");
    app.add_option("--out", out_path, "write the report to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForVersion")
            return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }
    if (as_json && as_text) {
        std::cerr << "error: --json and --text are mutually exclusive\n";
        return kExitUsage;
    }

    request.check = check;
    reeslift::ReportEnvelope envelope;
    try {
        envelope = reeslift::run(request);
    } catch (const reeslift::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    const std::string body = as_text ? envelope.to_text() : envelope.to_json().dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitUsage;
        }
        out << body;
    }
    return envelope.exit_code();
}
