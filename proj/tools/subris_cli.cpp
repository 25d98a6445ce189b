// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// subris: command-line front end for the subarray RIS simulator.
//
//   subris validate  [--dump-realization FILE]
//   subris eta
//   subris sweep-k   [--k-grid 0,1,10] [--samples S] [--threads T]
//   subris sweep-q   [--l0-grid 1,2,4] [--draws D]
//   subris sweep-n   [--n-grid 16,64] [--l0-set 2,4] [--draws D]
//   subris oracle    [--levels G]
//
// Every subcommand accepts --config FILE, --seed, --out FILE and per-field
// overrides (--M, --Nx, --Lx, --K, --theta-a1, ...).

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subris/subris.hpp"

namespace {

struct Overrides {
    std::optional<int> M, Nx, Ny, Lx, Ly, L0;
    std::optional<double> d1, d2, K, K1, K2, P;
    std::optional<double> theta_d1, theta_a1, phi_a1, theta_d2, phi_d2;
};

struct CommonOptions {
    std::string config_path;
    std::uint64_t seed = 1;
    std::size_t samples = 10000;
    unsigned threads = 0;
    std::string out_path;
    Overrides overrides;
    subris::PowerConstants power;
};

template <typename T>
void apply(const std::optional<T>& value, T& target) {
    if (value) {
        target = *value;
    }
}

subris::ValidatedConfig build_config(const CommonOptions& opts) {
    subris::SystemConfig cfg = opts.config_path.empty() ? subris::SystemConfig{}
                                                        : subris::load_config_file(opts.config_path);
    const Overrides& o = opts.overrides;
    apply(o.M, cfg.M);
    apply(o.Nx, cfg.Nx);
    apply(o.Ny, cfg.Ny);
    apply(o.L0, cfg.Lx);
    apply(o.L0, cfg.Ly);
    apply(o.Lx, cfg.Lx);
    apply(o.Ly, cfg.Ly);
    apply(o.d1, cfg.d1_over_lambda);
    apply(o.d2, cfg.d2_over_lambda);
    apply(o.K, cfg.K1);
    apply(o.K, cfg.K2);
    apply(o.K1, cfg.K1);
    apply(o.K2, cfg.K2);
    apply(o.P, cfg.P);
    apply(o.theta_d1, cfg.angles.theta_d1);
    apply(o.theta_a1, cfg.angles.theta_a1);
    apply(o.phi_a1, cfg.angles.phi_a1);
    apply(o.theta_d2, cfg.angles.theta_d2);
    apply(o.phi_d2, cfg.angles.phi_d2);
    return subris::validate_config(cfg);
}

// Writes to --out when given, stdout otherwise.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw std::runtime_error("cannot open output file " + path);
            }
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::vector<int> common_divisors(std::size_t a, std::size_t b) {
    std::vector<int> out;
    const std::size_t g = std::gcd(a, b);
    for (std::size_t d = 1; d <= g; ++d) {
        if (g % d == 0) {
            out.push_back(static_cast<int>(d));
        }
    }
    return out;
}

void add_common_options(CLI::App& app, CommonOptions& opts) {
    app.add_option("--config", opts.config_path, "JSON config file")->check(CLI::ExistingFile);
    app.add_option("--seed", opts.seed, "Master random seed");
    app.add_option("--samples", opts.samples, "Monte Carlo samples per point (0 disables)");
    app.add_option("--threads", opts.threads, "Worker threads (0 = all cores)");
    app.add_option("--out", opts.out_path, "Output file (default: stdout)");

    Overrides& o = opts.overrides;
    app.add_option("--M", o.M, "BS antennas");
    app.add_option("--Nx", o.Nx, "RIS rows");
    app.add_option("--Ny", o.Ny, "RIS columns");
    app.add_option("--Lx", o.Lx, "Subarray rows");
    app.add_option("--Ly", o.Ly, "Subarray columns");
    app.add_option("--L0", o.L0, "Square subarray size (sets Lx and Ly)");
    app.add_option("--d1", o.d1, "BS antenna spacing / wavelength");
    app.add_option("--d2", o.d2, "RIS element spacing / wavelength");
    app.add_option("--K", o.K, "Rician factor for both links (linear, 'inf' allowed)");
    app.add_option("--K1", o.K1, "BS-RIS Rician factor");
    app.add_option("--K2", o.K2, "RIS-user Rician factor");
    app.add_option("--P", o.P, "Transmit SNR (linear)");
    app.add_option("--theta-d1", o.theta_d1, "AoD at BS [rad]");
    app.add_option("--theta-a1", o.theta_a1, "Elevation AoA at RIS [rad]");
    app.add_option("--phi-a1", o.phi_a1, "Azimuth AoA at RIS [rad]");
    app.add_option("--theta-d2", o.theta_d2, "Elevation AoD at RIS [rad]");
    app.add_option("--phi-d2", o.phi_d2, "Azimuth AoD at RIS [rad]");

    app.add_option("--p-rest", opts.power.P_rest, "Non-RIS system power [W]");
    app.add_option("--p-ct", opts.power.P_ct, "RIS control board power [W]");
    app.add_option("--p-d", opts.power.P_d, "Power per driving circuit [W]");
    app.add_option("--p-dy", opts.power.P_dy, "RIS dynamic power [W]");
}

int run_validate(const CommonOptions& opts, const std::string& dump_path) {
    const subris::ValidatedConfig cfg = build_config(opts);
    Output out(opts.out_path);
    auto& os = out.stream();
    os << "valid\n"
       << "M=" << cfg.M() << "\n"
       << "N=" << cfg.N() << " (" << cfg.Nx() << "x" << cfg.Ny() << ")\n"
       << "L=" << cfg.L() << " (" << cfg.Lx() << "x" << cfg.Ly() << ")\n"
       << "Q=" << cfg.Q() << " (" << cfg.Qx() << "x" << cfg.Qy() << ")\n";
    if (!dump_path.empty()) {
        std::ofstream dump(dump_path);
        if (!dump) {
            throw std::runtime_error("cannot open " + dump_path);
        }
        subris::SampleStream stream(subris::derive_seed(opts.seed, 0));
        subris::write_realization_csv(dump, subris::sample_channels(cfg, stream));
    }
    return 0;
}

int run_eta(const CommonOptions& opts) {
    const subris::ValidatedConfig cfg = build_config(opts);
    const subris::PhaseGeometry geo = subris::phase_geometry(cfg);
    Output out(opts.out_path);
    auto& os = out.stream();
    os << std::setprecision(10);
    os << "p1 " << geo.p1 << "\n"
       << "p2 " << geo.p2 << "\n"
       << "eta " << geo.eta << "\n"
       << "neg_log2_eta " << (geo.eta > 0.0 ? 0.0 - std::log2(geo.eta) : std::numeric_limits<double>::infinity()) << "\n";
    return 0;
}

int run_oracle(const CommonOptions& opts, std::size_t levels) {
    const subris::ValidatedConfig cfg = build_config(opts);
    const subris::OracleResult oracle = subris::brute_force_phase_oracle(cfg, levels);
    const double closed_form = subris::los_array_gain(cfg, subris::optimal_phases(cfg));
    const double slack = subris::grid_resolution_slack(cfg, levels);
    Output out(opts.out_path);
    auto& os = out.stream();
    os << std::setprecision(12);
    os << "grid_levels " << levels << "\n"
       << "evaluated " << oracle.evaluated << "\n"
       << "oracle_gain " << oracle.best_gain << "\n"
       << "closed_form_gain " << closed_form << "\n"
       << "eta_N2_M " << subris::eta(cfg) * static_cast<double>(cfg.N() * cfg.N() * cfg.M()) << "\n"
       << "slack " << slack << "\n"
       << "oracle_phases";
    for (double p : oracle.best_phases.phases()) {
        os << ' ' << p;
    }
    os << "\n"
       << "closed_form_wins " << (oracle.best_gain <= closed_form + slack ? "yes" : "no") << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subarray-based RIS spectral/energy efficiency simulator"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonOptions opts;
    add_common_options(app, opts);

    std::string dump_path;
    auto* validate = app.add_subcommand("validate", "Validate a config and print derived sizes");
    validate->add_option("--dump-realization", dump_path, "Write one seeded channel realization as CSV");

    auto* eta = app.add_subcommand("eta", "Print p1, p2, eta and -log2(eta)");

    std::vector<double> k_grid{0, 1, 2, 5, 10, 20, 50, 100};
    auto* sweep_k = app.add_subcommand("sweep-k", "Ergodic SE versus Rician factor");
    sweep_k->add_option("--k-grid", k_grid, "Rician factors")->delimiter(',');

    std::vector<int> l0_grid;
    std::size_t draws = 100;
    auto* sweep_q = app.add_subcommand("sweep-q", "Regional SE/EE versus subarray count");
    sweep_q->add_option("--l0-grid", l0_grid, "Square subarray sizes (default: all common divisors)")->delimiter(',');
    sweep_q->add_option("--draws", draws, "Random angle draws");

    std::vector<int> n_grid{16, 64, 256, 1024, 4096};
    std::vector<int> l0_set{2, 4};
    auto* sweep_n = app.add_subcommand("sweep-n", "Regional EE versus RIS size");
    sweep_n->add_option("--n-grid", n_grid, "RIS sizes (perfect squares)")->delimiter(',');
    sweep_n->add_option("--l0-set", l0_set, "Subarray sizes")->delimiter(',');
    sweep_n->add_option("--draws", draws, "Random angle draws");

    std::size_t levels = 16;
    auto* oracle = app.add_subcommand("oracle", "Exhaustive phase-grid search (Q <= 4)");
    oracle->add_option("--levels", levels, "Phase levels per subarray");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) {
            return run_validate(opts, dump_path);
        }
        if (*eta) {
            return run_eta(opts);
        }
        if (*oracle) {
            return run_oracle(opts, levels);
        }

        const subris::ValidatedConfig cfg = build_config(opts);
        std::vector<subris::SweepRow> rows;
        if (*sweep_k) {
            rows = subris::sweep_rician(cfg, k_grid, {opts.samples, opts.seed, opts.threads});
        } else if (*sweep_q) {
            if (l0_grid.empty()) {
                l0_grid = common_divisors(cfg.Nx(), cfg.Ny());
            }
            rows = subris::sweep_subarray_count(cfg, l0_grid, {draws, opts.seed}, opts.power);
        } else if (*sweep_n) {
            rows = subris::sweep_ris_size(cfg, n_grid, l0_set, {draws, opts.seed}, opts.power);
        }
        Output out(opts.out_path);
        subris::write_sweep_csv(out.stream(), std::move(rows));
    } catch (const subris::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
