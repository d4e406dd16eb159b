#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latq/ring.hpp"

namespace latq {

// One experiment invocation; mirrors the CLI flags (and the JSON config).
struct ExperimentSpec {
    std::string kind;  // reduce|smp|bounds|stats-norms|stats-defect|stats-list|
                       // stats-mults|mimo-ser|mimo-rate
    Domain domain = Domain::Complex;
    std::vector<RingId> rings;  // empty: default set for the domain/kind
    int k_min = 2;
    int k_max = 4;
    int n_rx = 0;  // 0: equal to K
    int trials = 10000;
    double delta = 1.0;
    std::uint64_t seed = 1;
    double q = 0.99;
    std::vector<double> snr_db;
    std::string constellation = "AG";
    std::string criterion = "mmse";
    int symbols_per_channel = 1000;
    std::string family;  // bounds subcommand family
    std::string in_path;
    std::string out_path;  // empty: stdout
};

// Runs the experiment and writes its output (CSV or JSON).  Identical spec
// and seed produce byte-identical output.  Returns a process exit code.
int run(const ExperimentSpec& spec);

// Output document without the file write (used by tests).
std::string run_to_string(const ExperimentSpec& spec);

}  // namespace latq
