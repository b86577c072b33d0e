#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dpcomb/regularized.hpp"

namespace dpcomb {

enum class SweepMode { ideal, regularized, oracle };

const char* to_string(SweepMode mode) noexcept;

/// One k-sweep request.  epsilon is required exactly when the mode is not
/// ideal; a custom potential overrides the built-in family for the dipole
/// modes.  threads = 0 means the DPCOMB_THREADS environment variable, then
/// hardware parallelism.
struct SweepConfig {
    double theta = 0.5;
    int n = 1;
    double k_min = 0.0;
    double k_max = 0.0;  // defaults to pi when <= k_min
    int k_points = 2001;
    SweepMode mode = SweepMode::ideal;
    std::optional<double> epsilon;
    double spacing = 1.0;
    int threads = 0;
    bool refine = false;  // 50 extra points per resonance neighborhood
    bool alt = false;     // add a second, independently computed column
    std::optional<ResonantPotential> potential;

    void validate() const;
};

struct SpectrumRow {
    double k = 0.0;
    double T = 0.0;
    std::optional<double> T_alt;
};

/// Computed sweep plus the metadata that goes into the CSV header.
struct SpectrumTable {
    std::vector<std::pair<std::string, std::string>> metadata;
    bool has_alt = false;
    std::vector<SpectrumRow> rows;
};

/// Evaluates the configured mode over the k-grid.  Work is partitioned over a
/// worker pool; the rows come back sorted by k regardless of completion order.
SpectrumTable compute_spectrum(const SweepConfig& config);

/// Envelope table: T column holds zeta_theta(k); with min_n set, T_alt holds
/// min over 1 <= n <= min_n of T_n(theta, k).
SpectrumTable compute_envelope_table(double theta, int k_points, std::optional<int> min_n,
                                     int threads = 0);

/// CSV with '#'-prefixed key=value header lines and a "k,T" or "k,T,T_alt"
/// column header; 17 significant digits, so values round-trip exactly.  The
/// body is byte-deterministic; stamp adds a timestamp comment line.
void write_csv(std::ostream& out, const SpectrumTable& table, bool stamp = false);

/// Parses what write_csv produced.
SpectrumTable read_csv(std::istream& in);

/// Number of maximal runs of consecutive rows with T >= threshold.
int count_peaks(const std::vector<SpectrumRow>& rows, double threshold);

/// Resolves a thread-count request: explicit value, else DPCOMB_THREADS, else
/// hardware concurrency.
int resolve_threads(int requested);

/// Runs fn(i) for i in [0, count) on the resolved number of worker threads.
void parallel_for_index(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace dpcomb
