#pragma once

#include <cstddef>
#include <string>

namespace chroma::cli {

struct JobSpec {
    std::string command;  // orbit | diagram | check-datum | check-double | check-extension | aut-ext | verify | triangular
    std::string input;
    std::string output;   // empty: standard output
    std::string format = "json";
    std::size_t max_nodes = 1024;
    long long root_bound = 0;  // 0: derived from the groups
    bool enumerate_aut = false;
};

struct RunResult {
    int exit_code = 0;  // 0 ok, 1 some check failed, 2 bad input
    std::string report;
    std::string error;
};

// Runs a job on the text of its input file.
RunResult run_text(const JobSpec& job, const std::string& input_text);
// Reads job.input, runs, and writes the report to job.output when set.
RunResult run(const JobSpec& job);

int main_entry(int argc, char** argv);

}  // namespace chroma::cli
