#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sgpi/estimation.hpp"
#include "sgpi/signed_graph.hpp"
#include "sgpi/ssbm.hpp"

namespace sgpi {

/// How the solver's edge weight is chosen per run. Exact derives it from
/// the true rates, Estimated from graph moments; either falls back to the
/// fixed value (default 1.0) when the derived weight is undefined or not
/// strictly positive.
struct XiChoice {
    enum class Mode { exact, estimated, fixed };
    Mode mode = Mode::exact;
    double value = 1.0;

    /// Parses "exact", "estimated", or a positive number. Throws
    /// std::invalid_argument otherwise.
    static XiChoice parse(const std::string& text);
};

struct SweepRange {
    std::string param;  // alpha_plus | beta_plus | alpha_minus | beta_minus
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    std::vector<double> values() const;
};

/// Two-parameter grid sweep: sweep1 is the outer loop, sweep2 the inner.
/// Trial seeds derive deterministically from (base_seed, grid index, trial
/// index); results are independent of worker scheduling.
struct SweepSpec {
    NodeId n = 300;
    int trials = 40;
    double alpha_plus = 16.0;
    double beta_plus = 9.0;
    double alpha_minus = 1.0;
    double beta_minus = 1.0;
    SweepRange sweep1;
    SweepRange sweep2;
    std::uint64_t base_seed = 0;
    XiChoice xi{};
    int threads = 0;  // 0 = hardware concurrency

    void validate() const;
};

struct SweepRow {
    double alpha_plus = 0.0;
    double beta_plus = 0.0;
    double alpha_minus = 0.0;
    double beta_minus = 0.0;
    NodeId n = 0;
    int trials = 0;
    double recovery_ratio = 0.0;
    double mean_error_rate = 0.0;
    double mean_pi_iters = 0.0;
    double mean_gpi_iters = 0.0;
    double mean_runtime_ms = 0.0;
    double it_gap = 0.0;
    bool valid = false;  // grid point had admissible probabilities
};

/// One row per grid point, ordered by grid index. Invalid grid points keep
/// their row with status=invalid and empty metric columns; the run
/// continues. Throws std::invalid_argument when the spec itself is bad.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// CSV with header; metric columns are blank on invalid rows. The timing
/// column is the only non-reproducible one; with_timing=false leaves it
/// empty so output is byte-deterministic.
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out,
                     bool with_timing = true);

struct BenchRow {
    NodeId n = 0;
    int trials = 0;
    double total_solve_ms = 0.0;
    double total_estimate_ms = 0.0;
    double total_with_gen_ms = 0.0;  // solve + estimate + generation
    double mean_gpi_iters = 0.0;
};

/// Timing sweep over graph sizes at fixed rates (rates.n is ignored).
/// Each trial estimates the weight from the sampled graph and solves with
/// it; solve and estimate phases are timed separately, generation only
/// enters the with-generation column. Throws std::invalid_argument for
/// trials < 1 or invalid parameters at some n.
std::vector<BenchRow> run_bench(const std::vector<NodeId>& n_list,
                                const SsbmParams& rates, int trials,
                                std::uint64_t seed);

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out);

struct SolveFileReport {
    NodeId n = 0;
    std::optional<EstimatedParams> estimated;  // set in estimated mode
    bool xi_fallback = false;  // weight was undefined or <= 0; used value
    double xi_used = 1.0;
    std::vector<int> labels;
    NodeId community_pos = 0;
    NodeId community_neg = 0;
    int pi_iters = 0;
    int gpi_iters = 0;
    bool converged = false;
    double objective = 0.0;
};

/// Loads an edge list, picks the weight per xi (exact mode is not available
/// for files and throws), solves, and reports sizes plus the penalized
/// objective of the output labeling.
SolveFileReport run_solve_file(const std::string& path, const XiChoice& xi,
                               bool one_based, std::uint64_t seed);

}  // namespace sgpi
