// Copyright 2026 The decohere Authors

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// decohere: command-line driver for collisional-dephasing experiments.
//
//   decohere single --config <path>
//   decohere sweep  --config <path> [--out <path>]
//   decohere verify [--max-n <int>] [--seed <int>]
//
// Exit codes: 0 success, 1 verification failure, 2 usage or config error.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "decohere/experiment.hpp"
#include "decohere/properties.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

decohere::ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw decohere::ConfigError(path, "cannot open config file");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return decohere::parse_config(ss.str());
    } catch (const decohere::ConfigError &e) {
        throw decohere::ConfigError(e.where().empty() ? path : path + ": " + e.where(), e.detail());
    }
}

int run_single(const std::string &config_path) {
    const auto cfg = load_config(config_path);
    decohere::write_csv(std::cout, decohere::cmd_single(cfg));
    return kExitOk;
}

int run_sweep(const std::string &config_path, const std::string &out_path) {
    const auto cfg = load_config(config_path);
    // Evaluate before opening the output so a failed run leaves no partial file.
    std::ostringstream buf;
    decohere::cmd_sweep(cfg, buf);
    if (out_path.empty()) {
        std::cout << buf.str();
        return kExitOk;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "decohere: cannot write " << out_path << '\n';
        return kExitUsage;
    }
    out << buf.str();
    out.flush();
    if (!out) {
        std::cerr << "decohere: write to " << out_path << " failed\n";
        return kExitUsage;
    }
    return kExitOk;
}

int run_verify(int max_n, std::uint64_t seed) {
    if (max_n < 2 || max_n > decohere::default_config().max_qubits - 1) {
        std::cerr << "decohere verify: --max-n must lie in [2, "
                  << decohere::default_config().max_qubits - 1 << "]\n";
        return kExitUsage;
    }
    const auto start = std::chrono::steady_clock::now();
    const auto results = decohere::run_property_suite({max_n, seed});
    bool all = true;
    for (const auto &r : results) {
        all = all && r.passed();
        std::printf("%s  %-52s worst=%.3e tol=%.0e cases=%zu\n", r.passed() ? "PASS" : "FAIL",
                    r.name.c_str(), r.worst, r.tolerance, r.cases);
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::printf("%s: %zu properties, max_n=%d, seed=%llu, %.2fs\n", all ? "OK" : "FAILED",
                results.size(), max_n, static_cast<unsigned long long>(seed), elapsed.count());
    return all ? kExitOk : kExitFailure;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Collisional dephasing and partial-transpose negativity of multiqubit states"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    int max_n = 5;
    std::uint64_t seed = 1;

    auto *single = app.add_subcommand("single", "Evaluate one configuration and print CSV");
    single->add_option("--config", config_path, "JSON experiment file")->required();

    auto *sweep = app.add_subcommand("sweep", "Evaluate a parameter sweep and emit CSV");
    sweep->add_option("--config", config_path, "JSON experiment file")->required();
    sweep->add_option("--out", out_path, "CSV output path (default: stdout)");

    auto *verify = app.add_subcommand("verify", "Run the randomized invariant suite");
    verify->add_option("--max-n", max_n, "Largest register size")->capture_default_str();
    verify->add_option("--seed", seed, "Sampler seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*single) {
            return run_single(config_path);
        }
        if (*sweep) {
            return run_sweep(config_path, out_path);
        }
        return run_verify(max_n, seed);
    } catch (const decohere::ConfigError &e) {
        std::cerr << "decohere: config error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const decohere::Error &e) {
        std::cerr << "decohere: " << e.what() << '\n';
        return kExitUsage;
    }
}
