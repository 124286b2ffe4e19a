#pragma once

#include <span>
#include <vector>

#include "sgpi/signed_graph.hpp"
#include "sgpi/ssbm.hpp"

namespace sgpi {

/// Recovery quality up to global sign.
struct RecoveryMetrics {
    bool exact = false;
    NodeId misclassified = 0;  // min over both global signs
    double error_rate = 0.0;   // misclassified / n, always <= 0.5
};

/// Throws std::invalid_argument on length mismatch.
RecoveryMetrics compare(std::span<const int> labels, const GroundTruth& truth);

/// labels' (A+ - xi A- - rho E) labels, computed matrix-free as
/// (x'A+x) - xi (x'A-x) - rho (1'x)^2 with rho = (2N+ - 2 xi N-)/n^2.
/// Throws std::invalid_argument for xi <= 0 or a length mismatch.
double objective(const SignedGraph& g, double xi, std::span<const int> labels);

/// Exhaustive maximizer of x' (mu A+ - nu A-) x over balanced x in {+-1}^n
/// with 1'x = 0. Returns the canonical representative: first entry +1, ties
/// broken by the lexicographically smallest vector (+1 ordered before -1).
/// Throws std::invalid_argument for odd n or n > 20.
std::vector<int> brute_force_mle(const SignedGraph& g, double mu, double nu);

}  // namespace sgpi
