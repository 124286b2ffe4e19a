#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "sgpi/signed_graph.hpp"

namespace sgpi {

/// Raised when W y is exactly the zero vector during power iterations
/// (degenerate operator, e.g. an empty graph).
class DegenerateOperatorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Matrix-free W = A+ - xi A- - rho E with rho = (2 N+ - 2 xi N-)/n^2.
/// Holds a reference to the graph; immutable and safe for concurrent reads.
class WOperator {
public:
    /// Throws std::invalid_argument for xi <= 0.
    WOperator(const SignedGraph& graph, double xi);

    const SignedGraph& graph() const noexcept { return *graph_; }
    double xi() const noexcept { return xi_; }
    double rho() const noexcept { return rho_; }
    NodeId size() const noexcept { return graph_->node_count(); }

    /// W v = A+ v - xi A- v - rho (1'v) 1 in O(nnz + n) arithmetic; never
    /// materializes an n x n matrix. Throws on dimension mismatch.
    std::vector<double> apply(std::span<const double> v) const;

private:
    const SignedGraph* graph_;
    double xi_;
    double rho_;
};

/// Default cap for both stages: max(10, ceil(3 log n / max(1, log log n))).
int default_iteration_cap(NodeId n);

struct SolverConfig {
    double xi = 1.0;
    int t1_max = 1;
    int t2_max = 1;
    std::uint64_t seed = 0;

    static SolverConfig defaults(double xi, NodeId n, std::uint64_t seed) {
        const int cap = default_iteration_cap(n);
        return SolverConfig{xi, cap, cap, seed};
    }
};

struct PowerStageResult {
    std::vector<double> y;  // unit vector
    int iters = 0;
};

/// Power iterations y_t = W y_{t-1} / ||W y_{t-1}|| from a seeded uniform
/// start on the unit sphere, for up to t1_max steps, stopping early once
/// min(||y_t - y_{t-1}||, ||y_t + y_{t-1}||) <= 1e-8. Throws
/// DegenerateOperatorError if W y is exactly zero.
PowerStageResult power_stage(const WOperator& w, int t1_max,
                             std::uint64_t seed);

/// Same iteration from an explicit start vector (normalized internally).
PowerStageResult power_stage(const WOperator& w, int t1_max,
                             std::span<const double> y0);

/// Entrywise sign with ties at zero mapped to +1.
std::vector<int> sign_project(std::span<const double> v);

struct GpiStageResult {
    std::vector<int> labels;
    int iters = 0;
    bool converged = false;
};

/// Generalized power iterations x_t = sign(W x_{t-1}) until a fixed point
/// (converged) or t2_max steps.
GpiStageResult gpi_stage(const WOperator& w, std::span<const int> x0,
                         int t2_max);

struct RecoveryResult {
    std::vector<int> labels;
    int pi_iters = 0;
    int gpi_iters = 0;
    bool converged = false;
    double objective = 0.0;  // labels' W labels
};

/// Full two-stage run: power iterations, sign projection of the scaled
/// iterate, then generalized power iterations.
RecoveryResult solve(const SignedGraph& graph, const SolverConfig& config);

}  // namespace sgpi
