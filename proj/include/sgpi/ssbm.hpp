#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sgpi/signed_graph.hpp"

namespace sgpi {

/// Two equal communities over n nodes; pair signs drawn in the logarithmic
/// regime with p+- = alpha+- log(n)/n within communities and
/// q+- = beta+- log(n)/n across.
struct SsbmParams {
    NodeId n = 0;
    double alpha_plus = 0.0;
    double beta_plus = 0.0;
    double alpha_minus = 0.0;
    double beta_minus = 0.0;

    double p_plus() const;
    double p_minus() const;
    double q_plus() const;
    double q_minus() const;

    /// Throws std::invalid_argument unless n is even and >= 4, all four
    /// rates are strictly positive, each derived probability lies in (0, 1],
    /// and p+ + p- <= 1, q+ + q- <= 1. The ordering alpha+ > beta+,
    /// beta- > alpha- is deliberately not enforced: parameter sweeps cross
    /// the diagonal.
    void validate() const;

    /// True when the canonical ordering alpha+ > beta+ and beta- > alpha-
    /// holds; callers may warn when it does not.
    bool assumption_ordering_holds() const;
};

/// Planted labels: first n/2 nodes +1, rest -1.
struct GroundTruth {
    std::vector<int> labels;
};

/// Samples a graph in the logarithmic regime. Identical (params, seed)
/// reproduce identical graphs bit for bit: each unordered pair {i, j} draws
/// one uniform keyed by (seed, i, j) and thresholds cumulatively in the
/// order positive, negative, absent.
std::pair<SignedGraph, GroundTruth> sample(const SsbmParams& params,
                                           std::uint64_t seed);

/// Same sampler with the four probabilities given directly; boundary values
/// 0 and 1 are allowed, making deterministic fixtures expressible.
std::pair<SignedGraph, GroundTruth> sample_raw(NodeId n, double p_plus,
                                               double p_minus, double q_plus,
                                               double q_minus,
                                               std::uint64_t seed);

/// (sqrt(a+) - sqrt(b+))^2 + (sqrt(a-) - sqrt(b-))^2 - 2. Exact recovery is
/// information-theoretically possible iff the result is >= 0. Pure formula
/// in the four rates; n plays no role.
double it_gap(const SsbmParams& params);

}  // namespace sgpi
