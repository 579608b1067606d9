#include "chroma_cli/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace chroma::cli {

int main_entry(int argc, char** argv) {
    CLI::App app{"chroma: color Hopf algebra toolkit"};
    JobSpec job;
    app.add_option("command", job.command, "orbit | diagram | check-datum | check-double | check-extension | aut-ext | verify | triangular")
        ->required()
        ->check(CLI::IsMember({"orbit", "diagram", "check-datum", "check-double", "check-extension", "aut-ext", "verify",
                               "triangular"}));
    app.add_option("-i,--input", job.input, "input JSON file (- for standard input)");
    app.add_option("-o,--output", job.output, "report file (default: standard output)");
    app.add_option("-f,--format", job.format, "report format")->check(CLI::IsMember({"json", "dot", "text"}));
    app.add_option("--max-nodes", job.max_nodes, "orbit node bound")->check(CLI::PositiveNumber);
    app.add_option("--root-bound", job.root_bound, "order N of the roots of unity searched by aut-ext")->check(CLI::NonNegativeNumber);
    app.add_flag("--enumerate-aut", job.enumerate_aut, "list every compatible pair of automorphisms");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    RunResult r = run(job);
    if (r.exit_code == 2) {
        std::cerr << "error: " << r.error << "\n";
        return 2;
    }
    if (job.output.empty()) std::cout << r.report;
    return r.exit_code;
}

}  // namespace chroma::cli
