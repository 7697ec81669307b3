// Copyright 2026 The ddsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ddsynth/cli.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "ddsynth/fixtures.hpp"
#include "ddsynth/hamiltonian.hpp"
#include "ddsynth/linear_system.hpp"
#include "ddsynth/lp_solver.hpp"
#include "ddsynth/scheme.hpp"
#include "ddsynth/simulator.hpp"
#include "ddsynth/verifier.hpp"

namespace ddsynth::cli {

namespace {

namespace fs = std::filesystem;

class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw InputError("cannot write " + path.string());
    }
}

HamiltonianSpec load_hamiltonian(const std::string &path, HamiltonianRole role) {
    const std::string text = read_file(path);
    try {
        HamiltonianSpec h = parse_hamiltonian(text, role);
        const auto report = check_hermitian(h);
        if (!report.hermitian) {
            throw InputError(path + ": " + report.message);
        }
        return h;
    } catch (const ParseError &e) {
        throw InputError(path + ":" + std::to_string(e.line()) + ": " + e.what());
    }
}

DecouplingScheme load_scheme(const std::string &path) {
    const std::string text = read_file(path);
    try {
        return parse_scheme(text);
    } catch (const ParseError &e) {
        throw InputError(path + ":" + std::to_string(e.line()) + ": " + e.what());
    }
}

std::uint64_t parse_count(std::string_view text) {
    std::uint64_t value = 0;
    const auto *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw std::invalid_argument("bad repetition count '" + std::string(text) + "'");
    }
    return value;
}

struct SolveOptions {
    std::string hamiltonian;
    std::string target;
    std::string method = "lp";
    std::int64_t max_denominator = kDefaultMaxDenominator;
    std::string ordering = "lexicographic";
    std::string output;
    std::string dump_system;
    bool verbose = false;
};

int cmd_solve(const SolveOptions &opt, std::ostream &out, std::ostream &err) {
    const HamiltonianSpec h = load_hamiltonian(opt.hamiltonian, HamiltonianRole::System);
    const HamiltonianSpec target = load_hamiltonian(opt.target, HamiltonianRole::Target);
    const OrderingPolicy policy = parse_ordering_policy(opt.ordering);

    RatioVector rv;
    try {
        rv = target_ratio_vector(h, target);
    } catch (const UnreachableTargetError &e) {
        err << "unsolvable: " << e.what() << "\n";
        return kUnsolvable;
    }
    if (!opt.dump_system.empty()) {
        write_file(opt.dump_system, dump_system_csv(rv));
    }

    SolutionVector e;
    if (opt.method == "lp") {
        try {
            const ScalingResult result = minimize_scaling_detailed(rv, LpOptions{.record_pivots = opt.verbose});
            if (opt.verbose) {
                for (const auto &line : result.pivot_log) {
                    err << line << "\n";
                }
                err << "simplex iterations: " << result.iterations << "\n";
            }
            e = result.solution;
        } catch (const InfeasibleError &ex) {
            err << "unsolvable: " << ex.what() << "\n";
            return kUnsolvable;
        }
    } else if (opt.method == "particular") {
        e = shift_nonnegative(particular_solution(rv));
    } else {
        throw InputError("unknown method '" + opt.method + "'");
    }

    const CountVector counts = rationalize(e, opt.max_denominator);
    const DecouplingScheme scheme = materialize(counts, policy);
    const AverageReport report = check_decoupling(h, target, scheme);

    if (opt.output.empty()) {
        out << serialize_scheme(scheme);
    } else {
        write_file(opt.output, serialize_scheme(scheme));
    }
    std::ostream &summary = opt.output.empty() ? err : out;
    summary << "D = " << to_fraction_string(counts.scaling) << "\n";
    summary << "m = " << counts.length << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", counts.rounding_error);
    summary << "rounding error = " << buf << "\n";
    std::snprintf(buf, sizeof buf, "%.3g", std::max(report.max_deviation, report.max_env_residual));
    summary << "check = " << (report.pass ? "pass" : "fail") << " (max deviation " << buf << ")\n";
    if (!report.pass && counts.rounding_error > 0.0) {
        err << "note: rounded counts miss the target; a larger --max-denominator gives a longer, closer scheme\n";
    }
    if (opt.verbose) {
        err << render_report_table(report);
    }
    return kPass;
}

struct VerifyOptions {
    std::string hamiltonian;
    std::string target;
    std::string scheme;
    std::optional<double> tolerance;
    bool csv = false;
};

int cmd_verify(const VerifyOptions &opt, std::ostream &out) {
    const HamiltonianSpec h = load_hamiltonian(opt.hamiltonian, HamiltonianRole::System);
    const HamiltonianSpec target = load_hamiltonian(opt.target, HamiltonianRole::Target);
    const DecouplingScheme scheme = load_scheme(opt.scheme);
    if (scheme.dim != h.dim() || scheme.num_sites != h.num_sites() || target.dim() != h.dim() ||
        target.num_sites() != h.num_sites()) {
        throw InputError("H, target and scheme have different shapes");
    }
    if (opt.tolerance && !(*opt.tolerance >= 0.0)) {
        throw InputError("tolerance must be non-negative");
    }
    const AverageReport report = check_decoupling(h, target, scheme, opt.tolerance);
    out << (opt.csv ? render_report_csv(report) : render_report_table(report));
    return report.pass ? kPass : kVerifyFailed;
}

struct SimulateOptions {
    std::string example = "swap";
    std::string hamiltonian;
    std::string target;
    std::string scheme = "eq17";
    std::string lambdas = "0.5";
    std::string ns = "1..10";
    int fock = kDefaultFockDim;
    double tau = kDefaultGateTime;
    bool no_decoupling = false;
    bool serial = false;
    std::string output;
};

int cmd_simulate(const SimulateOptions &opt, std::ostream &out) {
    SweepGrid grid;
    try {
        grid.lambdas = parse_lambda_list(opt.lambdas);
        grid.ns = parse_n_range(opt.ns);
    } catch (const std::invalid_argument &e) {
        throw InputError(e.what());
    }
    if (opt.fock < 2) {
        throw InputError("--fock must be at least 2");
    }
    if (!(opt.tau > 0.0) || !std::isfinite(opt.tau)) {
        throw InputError("--tau must be positive");
    }
    grid.parallel = !opt.serial;
    grid.base.fock_dim = opt.fock;
    grid.base.tau = opt.tau;
    grid.base.use_decoupling = !opt.no_decoupling;

    const bool generic = !opt.hamiltonian.empty() || !opt.target.empty();
    if (generic) {
        if (opt.hamiltonian.empty() || opt.target.empty()) {
            throw InputError("--hamiltonian and --target go together");
        }
        auto h = std::make_shared<HamiltonianSpec>(load_hamiltonian(opt.hamiltonian, HamiltonianRole::System));
        auto target = std::make_shared<HamiltonianSpec>(load_hamiltonian(opt.target, HamiltonianRole::Target));
        grid.model = [h, target](double lambda) { return build_generic_model(*h, *target, lambda); };
        const auto dim = static_cast<Eigen::Index>(basis_size(h->dim(), h->num_sites()));
        DenseVector psi = DenseVector::Zero(static_cast<Eigen::Index>(std::llround(std::sqrt(double(dim)))));
        psi(0) = 1.0;
        grid.base.initial_state = psi;
    } else if (opt.example != "swap") {
        throw InputError("unknown example '" + opt.example + "' (only 'swap' has a simulation model)");
    }

    if (grid.base.use_decoupling) {
        if (const Fixture *f = find_fixture(opt.scheme)) {
            grid.base.scheme = parse_scheme(f->scheme);
            grid.base.scheme_id = f->scheme_id;
        } else {
            grid.base.scheme = load_scheme(opt.scheme);
            grid.base.scheme_id = fs::path(opt.scheme).stem().string();
        }
        const auto sys = grid.base.scheme->num_sites;
        const bool fits = generic ? true : (grid.base.scheme->dim == 2 && sys == 2);
        if (!fits) {
            throw InputError("scheme does not act on the two-qubit model");
        }
    }

    const std::string csv = render_sweep_csv(sweep(grid));
    if (opt.output.empty()) {
        out << csv;
    } else {
        write_file(opt.output, csv);
    }
    return kPass;
}

int cmd_examples(const std::string &output_dir, std::ostream &out) {
    if (!output_dir.empty()) {
        fs::create_directories(output_dir);
    }
    for (const auto &f : reference_fixtures()) {
        out << f.name << " (" << f.scheme_id << "): " << f.description << "\n";
        if (output_dir.empty()) {
            continue;
        }
        const fs::path dir(output_dir);
        write_file(dir / (f.name + ".ham"), f.hamiltonian);
        write_file(dir / (f.name + ".target"), f.target);
        write_file(dir / (f.name + ".scheme"), f.scheme);
    }
    return kPass;
}

}  // namespace

std::vector<std::uint64_t> parse_n_range(const std::string &text) {
    std::vector<std::uint64_t> values;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const std::uint64_t lo = parse_count(std::string_view(text).substr(0, dots));
        const std::uint64_t hi = parse_count(std::string_view(text).substr(dots + 2));
        if (lo > hi) {
            throw std::invalid_argument("reversed range '" + text + "'");
        }
        if (hi - lo > 100000) {
            throw std::invalid_argument("range '" + text + "' is too large");
        }
        for (std::uint64_t n = std::max<std::uint64_t>(lo, 1); n <= hi && hi > 0; ++n) {
            values.push_back(n);
        }
        return values;
    }
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const std::uint64_t n = parse_count(item);
        if (n > 0) {
            values.push_back(n);
        }
    }
    return values;
}

std::vector<double> parse_lambda_list(const std::string &text) {
    std::vector<double> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        double v = 0.0;
        const auto *end = item.data() + item.size();
        auto [ptr, ec] = std::from_chars(item.data(), end, v);
        if (item.empty() || ec != std::errc() || ptr != end || !std::isfinite(v) || v < 0.0) {
            throw std::invalid_argument("bad coupling strength '" + item + "'");
        }
        values.push_back(v);
    }
    return values;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Dynamical-decoupling scheme compiler and verifier", "ddsynth"};
    app.require_subcommand(1);

    SolveOptions solve;
    auto *solve_cmd = app.add_subcommand("solve", "Construct a scheme for H and a target");
    solve_cmd->add_option("hamiltonian", solve.hamiltonian, "Hamiltonian file")->required();
    solve_cmd->add_option("target", solve.target, "Target Hamiltonian file")->required();
    solve_cmd->add_option("--method", solve.method, "lp or particular")
        ->check(CLI::IsMember({"lp", "particular"}));
    solve_cmd->add_option("--max-denominator", solve.max_denominator, "Bound on rounded denominators")
        ->check(CLI::PositiveNumber);
    solve_cmd->add_option("--ordering", solve.ordering, "lexicographic or paper")
        ->check(CLI::IsMember({"lexicographic", "paper"}));
    solve_cmd->add_option("-o,--output", solve.output, "Scheme file (default: standard output)");
    solve_cmd->add_option("--dump-system", solve.dump_system, "Write the system matrix rows as CSV");
    solve_cmd->add_flag("-v,--verbose", solve.verbose, "Print simplex pivots and the check table");

    VerifyOptions verify;
    auto *verify_cmd = app.add_subcommand("verify", "Check a scheme against H and a target");
    verify_cmd->add_option("hamiltonian", verify.hamiltonian, "Hamiltonian file")->required();
    verify_cmd->add_option("target", verify.target, "Target Hamiltonian file")->required();
    verify_cmd->add_option("scheme", verify.scheme, "Scheme file")->required();
    verify_cmd->add_option("--tolerance", verify.tolerance, "Allowed deviation (default 0 exact, 1e-9 floating)");
    verify_cmd->add_flag("--csv", verify.csv, "CSV report");

    SimulateOptions simulate;
    auto *simulate_cmd = app.add_subcommand("simulate", "Fidelity sweep of pulsed evolution");
    simulate_cmd->add_option("--example", simulate.example, "Bundled model (swap)");
    simulate_cmd->add_option("--hamiltonian", simulate.hamiltonian, "Model Hamiltonian file");
    simulate_cmd->add_option("--target", simulate.target, "Ideal Hamiltonian file");
    simulate_cmd->add_option("--scheme", simulate.scheme, "eq14, eq17 or a scheme file");
    simulate_cmd->add_option("--lambda", simulate.lambdas, "Comma-separated coupling strengths");
    simulate_cmd->add_option("--n", simulate.ns, "Repetitions, a..b or a comma list");
    simulate_cmd->add_option("--fock", simulate.fock, "Oscillator truncation");
    simulate_cmd->add_option("--tau", simulate.tau, "Gate time");
    simulate_cmd->add_flag("--no-decoupling", simulate.no_decoupling, "Free evolution baseline");
    simulate_cmd->add_flag("--serial", simulate.serial, "Evaluate grid points on one thread");
    simulate_cmd->add_option("-o,--output", simulate.output, "CSV file (default: standard output)");

    std::string examples_dir;
    auto *examples_cmd = app.add_subcommand("examples", "List or export the bundled reference problems");
    examples_cmd->add_option("--output-dir", examples_dir, "Directory for .ham, .target and .scheme files");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError &e) {
        err << e.what() << "\n";
        return kInputError;
    }

    try {
        if (*solve_cmd) {
            return cmd_solve(solve, out, err);
        }
        if (*verify_cmd) {
            return cmd_verify(verify, out);
        }
        if (*simulate_cmd) {
            return cmd_simulate(simulate, out);
        }
        return cmd_examples(examples_dir, out);
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace ddsynth::cli
