#include "dpcomb/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <iostream>
#include <istream>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "dpcomb/comb.hpp"
#include "dpcomb/oracle.hpp"

namespace dpcomb {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr const char* kToolVersion = "1.0.0";

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double clamp_probability(double t) {
    if (t > 1.0) {
        if (t > 1.0 + 1e-9)
            throw std::runtime_error("spectrum: transmission exceeds 1 beyond rounding, aborting");
        std::cerr << "warning: transmission " << fmt17(t) << " marginally above 1, clamped\n";
        return 1.0;
    }
    return t;
}

std::vector<double> make_grid(const SweepConfig& config) {
    const double k_max = config.k_max > config.k_min ? config.k_max : kPi;
    std::vector<double> grid(config.k_points);
    for (int i = 0; i < config.k_points; ++i)
        grid[i] = config.k_min + (k_max - config.k_min) * i / (config.k_points - 1);
    if (!config.refine) return grid;

    // 50 extra points around each ideal resonance: the exact closed-form k_j
    // plus 49 evenly spread neighbors within two grid steps.  Peaks are far
    // narrower than any reasonable uniform grid, so without the exact point
    // the unit maxima are invisible in the output.
    const ResonanceSet set = resonances(config.theta, config.n);
    const double step = (k_max - config.k_min) / (config.k_points - 1);
    for (double kj_unit : set.points) {
        const double kj = kj_unit / config.spacing;
        grid.push_back(kj);
        for (int m = 0; m < 51; ++m) {
            if (m == 25) continue;  // center already added exactly
            grid.push_back(kj + (m - 25) * (2.0 * step / 25.0));
        }
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    grid.erase(std::remove_if(grid.begin(), grid.end(),
                              [&](double k) { return k < config.k_min || k > k_max; }),
               grid.end());
    return grid;
}

}  // namespace

const char* to_string(SweepMode mode) noexcept {
    switch (mode) {
        case SweepMode::ideal: return "ideal";
        case SweepMode::regularized: return "regularized";
        case SweepMode::oracle: return "oracle";
    }
    return "?";
}

void SweepConfig::validate() const {
    if (theta == 0.0 || !std::isfinite(theta))
        throw std::domain_error("sweep: theta must be finite and nonzero");
    if (n < 1) throw std::invalid_argument("sweep: n must be positive");
    if (k_points < 2) throw std::invalid_argument("sweep: need at least 2 k-points");
    const double hi = k_max > k_min ? k_max : kPi;
    if (!(k_min < hi)) throw std::invalid_argument("sweep: k_min must be below k_max");
    if (!(spacing > 0.0)) throw std::invalid_argument("sweep: spacing must be positive");
    if (mode != SweepMode::ideal && !epsilon)
        throw std::invalid_argument("sweep: epsilon required for regularized and oracle modes");
    if (mode == SweepMode::ideal && epsilon)
        throw std::invalid_argument("sweep: epsilon is meaningless in ideal mode");
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("DPCOMB_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? int(hw) : 1;
}

void parallel_for_index(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    const int workers = std::min<std::size_t>(resolve_threads(threads), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto drain = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(drain);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

SpectrumTable compute_spectrum(const SweepConfig& config) {
    config.validate();
    const std::vector<double> grid = make_grid(config);

    std::optional<ResonantPotential> pot;
    if (config.mode != SweepMode::ideal)
        pot = config.potential ? *config.potential : example_potential(config.theta);

    SpectrumTable table;
    table.has_alt = config.alt;
    table.rows.resize(grid.size());
    // The secondary column is always the nearest independent path: matrix
    // products for ideal sweeps, the ideal closed form for regularized ones,
    // and the analytic dipole model for oracle ones.  At k = 0 the dipole
    // modes' plane-wave basis degenerates; the transmission limit there is the
    // analytic dipole value, which all paths share.
    parallel_for_index(grid.size(), config.threads, [&](std::size_t i) {
        const double k = grid[i];
        SpectrumRow row;
        row.k = k;
        switch (config.mode) {
            case SweepMode::ideal:
                row.T = transmission_closed_form(config.theta, k * config.spacing, config.n);
                if (config.alt) {
                    const CombSpec spec(config.n, Contrast(config.theta), config.spacing);
                    row.T_alt = amplitudes_from_matrix(comb_matrix(spec, k)).transmission();
                }
                break;
            case SweepMode::regularized: {
                const DipoleArraySpec spec(*pot, config.n, *config.epsilon, config.spacing);
                row.T = regularized_transmission(spec, k);
                if (config.alt)
                    row.T_alt = transmission_closed_form(pot->theta(), k * config.spacing, config.n);
                break;
            }
            case SweepMode::oracle: {
                const DipoleArraySpec spec(*pot, config.n, *config.epsilon, config.spacing);
                row.T = k == 0.0 ? regularized_transmission(spec, 0.0)
                                 : array_transmission_numeric(spec, k);
                if (config.alt) row.T_alt = regularized_transmission(spec, k);
                break;
            }
        }
        table.rows[i] = row;
    });
    for (auto& row : table.rows) {
        row.T = clamp_probability(row.T);
        if (row.T_alt) row.T_alt = clamp_probability(*row.T_alt);
    }

    table.metadata = {{"tool", "dpcomb spectrum"},
                      {"version", kToolVersion},
                      {"theta", fmt17(config.theta)},
                      {"n", std::to_string(config.n)},
                      {"mode", to_string(config.mode)}};
    if (config.epsilon) table.metadata.emplace_back("epsilon", fmt17(*config.epsilon));
    table.metadata.emplace_back("spacing", fmt17(config.spacing));
    table.metadata.emplace_back("points", std::to_string(grid.size()));
    return table;
}

SpectrumTable compute_envelope_table(double theta, int k_points, std::optional<int> min_n,
                                     int threads) {
    if (k_points < 2) throw std::invalid_argument("envelope: need at least 2 k-points");
    const double th = canonical_theta(theta);
    SpectrumTable table;
    table.has_alt = min_n.has_value();
    table.rows.resize(k_points);
    parallel_for_index(k_points, threads, [&](std::size_t i) {
        const double k = kPi * double(i) / (k_points - 1);
        SpectrumRow row;
        row.k = k;
        row.T = envelope(th, k);
        if (min_n) {
            double best = 1.0;
            for (int n = 1; n <= *min_n; ++n)
                best = std::min(best, transmission_closed_form(th, k, n));
            row.T_alt = best;
        }
        table.rows[i] = row;
    });
    table.metadata = {{"tool", "dpcomb envelope"},
                      {"version", kToolVersion},
                      {"theta", fmt17(th)},
                      {"mode", "envelope"},
                      {"points", std::to_string(k_points)}};
    if (min_n) table.metadata.emplace_back("min_n", std::to_string(*min_n));
    return table;
}

void write_csv(std::ostream& out, const SpectrumTable& table, bool stamp) {
    for (const auto& [key, value] : table.metadata) out << "# " << key << "=" << value << "\n";
    if (stamp) {
        char buf[64];
        const std::time_t now = std::time(nullptr);
        std::tm tm{};
        gmtime_r(&now, &tm);
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        out << "# generated=" << buf << "\n";
    }
    out << (table.has_alt ? "k,T,T_alt" : "k,T") << "\n";
    for (const auto& row : table.rows) {
        out << fmt17(row.k) << "," << fmt17(row.T);
        if (table.has_alt) out << "," << fmt17(row.T_alt.value_or(0.0));
        out << "\n";
    }
}

SpectrumTable read_csv(std::istream& in) {
    SpectrumTable table;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (eq != std::string::npos && line.size() > 2)
                table.metadata.emplace_back(line.substr(2, eq - 2), line.substr(eq + 1));
            continue;
        }
        if (!header_seen) {
            if (line != "k,T" && line != "k,T,T_alt")
                throw std::runtime_error("read_csv: unexpected column header '" + line + "'");
            table.has_alt = line == "k,T,T_alt";
            header_seen = true;
            continue;
        }
        std::istringstream row(line);
        std::string cell;
        SpectrumRow r;
        if (!std::getline(row, cell, ',')) throw std::runtime_error("read_csv: short row");
        r.k = std::strtod(cell.c_str(), nullptr);
        if (!std::getline(row, cell, ',')) throw std::runtime_error("read_csv: short row");
        r.T = std::strtod(cell.c_str(), nullptr);
        if (table.has_alt) {
            if (!std::getline(row, cell, ',')) throw std::runtime_error("read_csv: short row");
            r.T_alt = std::strtod(cell.c_str(), nullptr);
        }
        table.rows.push_back(r);
    }
    if (!header_seen) throw std::runtime_error("read_csv: no column header found");
    return table;
}

int count_peaks(const std::vector<SpectrumRow>& rows, double threshold) {
    int peaks = 0;
    bool above = false;
    for (const auto& row : rows) {
        const bool now = row.T >= threshold;
        if (now && !above) ++peaks;
        above = now;
    }
    return peaks;
}

}  // namespace dpcomb
