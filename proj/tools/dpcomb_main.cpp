#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dpcomb/comb.hpp"
#include "dpcomb/spectrum.hpp"
#include "dpcomb/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct CliOptions {
    dpcomb::SweepConfig sweep;
    std::string mode = "ideal";
    double epsilon = -1.0;
    std::string out = "-";
    std::string potential_path;
    bool stamp = false;
    std::optional<int> min_n;
    std::string verify_level = "fast";
};

int write_table(const dpcomb::SpectrumTable& table, const std::string& out, bool stamp) {
    if (out == "-" || out.empty()) {
        dpcomb::write_csv(std::cout, table, stamp);
        return std::cout ? kExitOk : kExitIo;
    }
    std::ofstream file(out);
    if (!file) {
        std::cerr << "error: cannot open '" << out << "' for writing\n";
        return kExitIo;
    }
    dpcomb::write_csv(file, table, stamp);
    file.flush();
    if (!file) {
        std::cerr << "error: writing '" << out << "' failed\n";
        return kExitIo;
    }
    return kExitOk;
}

int run_spectrum(CliOptions& opt) {
    if (opt.mode == "ideal")
        opt.sweep.mode = dpcomb::SweepMode::ideal;
    else if (opt.mode == "regularized")
        opt.sweep.mode = dpcomb::SweepMode::regularized;
    else if (opt.mode == "oracle")
        opt.sweep.mode = dpcomb::SweepMode::oracle;
    else
        throw std::invalid_argument("unknown mode '" + opt.mode + "'");
    if (opt.epsilon >= 0.0) opt.sweep.epsilon = opt.epsilon;
    if (!opt.potential_path.empty()) {
        std::ifstream file(opt.potential_path);
        if (!file) {
            std::cerr << "error: cannot read potential file '" << opt.potential_path << "'\n";
            return kExitIo;
        }
        opt.sweep.potential = dpcomb::load_potential(file);
    }
    return write_table(dpcomb::compute_spectrum(opt.sweep), opt.out, opt.stamp);
}

int run_resonances(const CliOptions& opt) {
    const dpcomb::ResonanceSet set = dpcomb::resonances(opt.sweep.theta, opt.sweep.n);
    if (opt.sweep.n < 2) {
        std::cout << "no resonances: a single interaction has frequency-independent "
                     "transmission\n";
        return kExitOk;
    }
    std::printf("%4s  %22s  %14s\n", "j", "k_j", "T(k_j)");
    for (std::size_t j = 0; j < set.points.size(); ++j) {
        const double t = dpcomb::transmission_closed_form(set.theta, set.points[j], set.n);
        std::printf("%4zu  %22.16f  %14.9f\n", j + 1, set.points[j], t);
    }
    return kExitOk;
}

int run_envelope(const CliOptions& opt) {
    const auto table = dpcomb::compute_envelope_table(opt.sweep.theta, opt.sweep.k_points,
                                                      opt.min_n, opt.sweep.threads);
    return write_table(table, opt.out, opt.stamp);
}

int run_verify(const CliOptions& opt) {
    if (opt.verify_level != "fast" && opt.verify_level != "full")
        throw std::invalid_argument("verify level must be 'fast' or 'full'");
    const auto results = dpcomb::run_verification(opt.verify_level == "full");
    bool all_ok = true;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << ": " << r.detail << "\n";
        all_ok = all_ok && r.passed;
    }
    std::cout << (all_ok ? "verification passed" : "verification FAILED") << " ("
              << results.size() << " checks)\n";
    return all_ok ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Transmission through combs of scale-invariant point interactions"};
    app.require_subcommand(1);
    CliOptions opt;
    opt.sweep.k_max = std::numbers::pi;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--threads", opt.sweep.threads,
                        "worker threads (default: DPCOMB_THREADS, then hardware)");
        cmd->add_flag("--stamp", opt.stamp, "add a timestamp line to the CSV header");
        cmd->add_option("--out", opt.out, "output file ('-' = stdout)");
    };

    CLI::App* spectrum = app.add_subcommand("spectrum", "transmission over a frequency grid");
    spectrum->add_option("--theta", opt.sweep.theta, "interface contrast")->required();
    spectrum->add_option("--n", opt.sweep.n, "number of interactions")->required();
    spectrum->add_option("--k-min", opt.sweep.k_min, "grid start (default 0)");
    spectrum->add_option("--k-max", opt.sweep.k_max, "grid end (default pi)");
    spectrum->add_option("--points", opt.sweep.k_points, "grid size (default 2001)");
    spectrum->add_option("--mode", opt.mode, "ideal | regularized | oracle");
    spectrum->add_option("--epsilon", opt.epsilon, "dipole width (regularized/oracle modes)");
    spectrum->add_option("--spacing", opt.sweep.spacing, "distance between interactions");
    spectrum->add_flag("--refine", opt.sweep.refine, "add 50 points per resonance neighborhood");
    spectrum->add_flag("--alt", opt.sweep.alt, "add an independently computed T_alt column");
    spectrum->add_option("--potential", opt.potential_path,
                         "half-bound-state sample file for the dipole modes");
    add_common(spectrum);

    CLI::App* resonances = app.add_subcommand("resonances", "closed-form resonance table");
    resonances->add_option("--theta", opt.sweep.theta, "interface contrast")->required();
    resonances->add_option("--n", opt.sweep.n, "number of interactions")->required();

    CLI::App* envelope = app.add_subcommand("envelope", "lower envelope of all spectra");
    envelope->add_option("--theta", opt.sweep.theta, "interface contrast")->required();
    envelope->add_option("--points", opt.sweep.k_points, "grid size (default 2001)");
    envelope->add_option("--min-n", [&](const CLI::results_t& res) {
        opt.min_n = std::stoi(res[0]);
        return true;
    }, "add a min over n <= N column");
    add_common(envelope);

    CLI::App* verify = app.add_subcommand("verify", "cross-path consistency checks");
    verify->add_option("--level", opt.verify_level, "fast | full");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (spectrum->parsed()) return run_spectrum(opt);
        if (resonances->parsed()) return run_resonances(opt);
        if (envelope->parsed()) return run_envelope(opt);
        if (verify->parsed()) return run_verify(opt);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
