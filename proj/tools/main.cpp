#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "elkchi/jobs.hpp"

namespace {

#ifndef ELKCHI_FIXTURE_DIR
#define ELKCHI_FIXTURE_DIR "fixtures"
#endif

std::string resolve_fixture(const std::string& name) {
    namespace fs = std::filesystem;
    if (name.find('/') != std::string::npos || name.ends_with(".json")) return name;
    fs::path p = fs::path(ELKCHI_FIXTURE_DIR) / (name + ".json");
    if (fs::exists(p)) return p.string();
    fs::path local = fs::path("fixtures") / (name + ".json");
    return local.string();
}

int write_atomically(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) return 1;
        os << content;
        if (!os.flush()) return 1;
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    return ec ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"elkchi: exact local degrees and link Euler characteristics"};

    std::string job_path;
    std::string fixture;
    std::string out_path;
    std::string order;
    bool oracle = false;

    app.add_option("job", job_path, "job file (JSON)");
    app.add_option("--fixture", fixture, "run a shipped fixture by name");
    app.add_option("--out", out_path, "write the report to this path");
    app.add_option("--order", order, "debug: dump the standard basis under this order")
        ->check(CLI::IsMember({"local", "global"}));
    app.add_flag("--oracle", oracle, "cross-check degrees with the geometric oracle (n <= 3)");

    CLI11_PARSE(app, argc, argv);

    if (job_path.empty() && fixture.empty()) {
        std::cerr << "error: give a job file or --fixture NAME\n";
        return 1;
    }
    std::string path = !fixture.empty() ? resolve_fixture(fixture) : job_path;

    std::ifstream is(path, std::ios::binary);
    if (!is) {
        std::cerr << "error: cannot open " << path << "\n";
        return 1;
    }
    std::ostringstream buf;
    buf << is.rdbuf();

    elkchi::JobOptions options;
    options.oracle = oracle;
    if (!order.empty()) options.debug_order = order;

    elkchi::JobOutcome outcome = elkchi::run_job_text(buf.str(), options);
    std::string text = outcome.report.dump(2) + "\n";

    if (!out_path.empty()) {
        if (write_atomically(out_path, text) != 0) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 1;
        }
    } else {
        std::cout << text;
    }
    return outcome.exit_code;
}
