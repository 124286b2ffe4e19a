#include "sgpi/evaluation.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgpi {

RecoveryMetrics compare(std::span<const int> labels,
                        const GroundTruth& truth) {
    if (labels.size() != truth.labels.size())
        throw std::invalid_argument("compare: label length mismatch");
    const NodeId n = static_cast<NodeId>(labels.size());
    NodeId differ = 0;
    for (NodeId i = 0; i < n; ++i)
        if (labels[i] != truth.labels[i]) ++differ;
    RecoveryMetrics m;
    m.misclassified = std::min(differ, static_cast<NodeId>(n - differ));
    m.exact = m.misclassified == 0;
    m.error_rate = static_cast<double>(m.misclassified) / n;
    return m;
}

namespace {

// x'A x over one sign's adjacency; every edge contributes twice.
double quad_form(const SignedGraph& g, std::span<const int> x, bool positive) {
    double total = 0.0;
    for (NodeId i = 0; i < g.node_count(); ++i) {
        long long row = 0;
        auto nb = positive ? g.pos_neighbors(i) : g.neg_neighbors(i);
        for (const NodeId j : nb) row += x[j];
        total += static_cast<double>(x[i]) * static_cast<double>(row);
    }
    return total;
}

}  // namespace

double objective(const SignedGraph& g, double xi, std::span<const int> labels) {
    if (!(xi > 0.0)) throw std::invalid_argument("objective: xi must be > 0");
    const NodeId n = g.node_count();
    if (std::ssize(labels) != n)
        throw std::invalid_argument("objective: label length mismatch");
    long long ones = 0;
    for (const int x : labels) {
        if (x != 1 && x != -1)
            throw std::invalid_argument("objective: labels must be +-1");
        ones += x;
    }
    const double rho =
        (2.0 * static_cast<double>(g.pos_edge_count()) -
         2.0 * xi * static_cast<double>(g.neg_edge_count())) /
        (static_cast<double>(n) * static_cast<double>(n));
    return quad_form(g, labels, true) - xi * quad_form(g, labels, false) -
           rho * static_cast<double>(ones) * static_cast<double>(ones);
}

namespace {

// +1 sorts before -1, so the all-plus prefix is the smallest vector.
bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

}  // namespace

std::vector<int> brute_force_mle(const SignedGraph& g, double mu, double nu) {
    const NodeId n = g.node_count();
    if (n % 2 != 0)
        throw std::invalid_argument("brute_force_mle: n must be even");
    if (n > 20)
        throw std::invalid_argument(
            "brute_force_mle: n > 20 exceeds the enumeration cap");

    std::vector<int> x(static_cast<std::size_t>(n));
    std::vector<int> best;
    double best_value = 0.0;
    const unsigned bits = static_cast<unsigned>(n - 1);
    const int want = n / 2 - 1;
    // x[0] is pinned to +1, killing the global sign; masks pick the
    // remaining +1 positions
    for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
        if (std::popcount(mask) != want) continue;
        x[0] = 1;
        for (unsigned k = 0; k < bits; ++k)
            x[k + 1] = (mask >> k) & 1u ? 1 : -1;
        const double value =
            mu * quad_form(g, x, true) - nu * quad_form(g, x, false);
        if (best.empty() || value > best_value ||
            (value == best_value && lex_less(x, best))) {
            best = x;
            best_value = value;
        }
    }
    return best;
}

}  // namespace sgpi
