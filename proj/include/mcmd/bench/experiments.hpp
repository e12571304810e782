#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "mcmd/acquisition.hpp"
#include "mcmd/bayesopt.hpp"

namespace mcmd::bench {

struct MethodSpec {
    AcquisitionKind kind = AcquisitionKind::Thompson;
    double kappa = 2.0;
    double xi = 0.1;

    std::string label() const { return acquisition_name(kind); }
};

struct GpParams {
    double signal_variance = 1.0;
    std::vector<double> length_scales{0.5};
    double noise_std = 0.3;
    double prior_mean = 0.0;
};

struct McmdParams {
    int n_particles = 2000;
    int n_challengers = 1;
    double alpha = 0.5;
    int rounds = 10;
    std::vector<double> kde_length_scales;   // empty: 2% of each domain edge
};

struct DemoParams {
    int n_measurements = 20;
    int grid_size = 512;
    long brute_samples = 100000;
    int demo_particles = 10000;   // the demo runs at n_p = 10^4 by default
};

// Everything a run needs; serializable to/from JSON so result files are
// self-describing.
struct ExperimentConfig {
    std::string experiment;   // mcmd-demo | regret-1d | regret-branin | oracle-check
    std::vector<std::uint64_t> seeds{1};
    std::uint64_t fixture_seed = 1;
    int n_iters = 50;
    std::vector<MethodSpec> methods;
    GpParams gp;
    McmdParams mcmd;
    std::string objective;    // example-1d | branin | constant
    std::string out_dir = "out";
    int threads = 0;          // 0: hardware concurrency
    DemoParams demo;
    bool inject_corruption = false;   // oracle-check negative path

    void validate() const;
};

ExperimentConfig default_config(const std::string& experiment);
ExperimentConfig config_from_json_file(const std::filesystem::path& path);
std::string config_to_json(const ExperimentConfig& cfg);

// Dotted-path override, value parsed as JSON with a string fallback,
// e.g. "mcmd.n_particles=500" or "seeds=[1,2,3]".
void apply_override(ExperimentConfig& cfg, const std::string& key_value);

// Each returns a process exit status: 0 on success.
int cmd_mcmd_demo(const ExperimentConfig& cfg);
int cmd_regret(const ExperimentConfig& cfg);
int cmd_oracle_check(const ExperimentConfig& cfg);

// Shared with tests: one full optimization run for a (method, seed) job.
RunTrace run_regret_job(const ExperimentConfig& cfg, const MethodSpec& method,
                        std::uint64_t seed);

} // namespace mcmd::bench
