#include "sgpi/solver.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sgpi/evaluation.hpp"
#include "sgpi/rng.hpp"

namespace sgpi {

namespace {
constexpr double kPiStopTolerance = 1e-8;
}

WOperator::WOperator(const SignedGraph& graph, double xi)
    : graph_(&graph), xi_(xi) {
    if (!(xi > 0.0)) throw std::invalid_argument("WOperator: xi must be > 0");
    const double n = static_cast<double>(graph.node_count());
    rho_ = (2.0 * static_cast<double>(graph.pos_edge_count()) -
            2.0 * xi * static_cast<double>(graph.neg_edge_count())) /
           (n * n);
}

std::vector<double> WOperator::apply(std::span<const double> v) const {
    const NodeId n = size();
    if (std::ssize(v) != n)
        throw std::invalid_argument("WOperator::apply: vector length " +
                                    std::to_string(v.size()) +
                                    " does not match n = " + std::to_string(n));
    double total = 0.0;
    for (const double x : v) total += x;
    const double penalty = rho_ * total;
    std::vector<double> out(static_cast<std::size_t>(n));
    for (NodeId i = 0; i < n; ++i) {
        double pos = 0.0;
        for (const NodeId j : graph_->pos_neighbors(i)) pos += v[j];
        double neg = 0.0;
        for (const NodeId j : graph_->neg_neighbors(i)) neg += v[j];
        out[i] = pos - xi_ * neg - penalty;
    }
    return out;
}

int default_iteration_cap(NodeId n) {
    const double log_n = std::log(static_cast<double>(std::max<NodeId>(n, 2)));
    const double denom = std::max(1.0, std::log(log_n));
    return std::max(10, static_cast<int>(std::ceil(3.0 * log_n / denom)));
}

namespace {

double norm2(std::span<const double> v) {
    double s = 0.0;
    for (const double x : v) s += x * x;
    return std::sqrt(s);
}

PowerStageResult run_power(const WOperator& w, int t1_max,
                           std::vector<double> y) {
    if (t1_max < 1)
        throw std::invalid_argument("power_stage: t1_max must be >= 1");
    const double ny = norm2(y);
    if (ny == 0.0)
        throw std::invalid_argument("power_stage: start vector is zero");
    for (double& x : y) x /= ny;

    PowerStageResult result;
    for (int t = 1; t <= t1_max; ++t) {
        std::vector<double> z = w.apply(y);
        const double nz = norm2(z);
        if (nz == 0.0)
            throw DegenerateOperatorError(
                "power_stage: W y vanished exactly; operator is degenerate");
        double down = 0.0, up = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            z[i] /= nz;
            const double d = z[i] - y[i];
            const double s = z[i] + y[i];
            down += d * d;
            up += s * s;
        }
        y.swap(z);
        result.iters = t;
        if (std::min(std::sqrt(down), std::sqrt(up)) <= kPiStopTolerance)
            break;
    }
    result.y = std::move(y);
    return result;
}

}  // namespace

PowerStageResult power_stage(const WOperator& w, int t1_max,
                             std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<double> y0(static_cast<std::size_t>(w.size()));
    for (double& x : y0) x = rng.next_gaussian();
    return run_power(w, t1_max, std::move(y0));
}

PowerStageResult power_stage(const WOperator& w, int t1_max,
                             std::span<const double> y0) {
    if (std::ssize(y0) != w.size())
        throw std::invalid_argument("power_stage: start vector length mismatch");
    return run_power(w, t1_max, std::vector<double>(y0.begin(), y0.end()));
}

std::vector<int> sign_project(std::span<const double> v) {
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] >= 0.0 ? 1 : -1;
    return out;
}

GpiStageResult gpi_stage(const WOperator& w, std::span<const int> x0,
                         int t2_max) {
    if (t2_max < 1)
        throw std::invalid_argument("gpi_stage: t2_max must be >= 1");
    if (std::ssize(x0) != w.size())
        throw std::invalid_argument("gpi_stage: start vector length mismatch");
    std::vector<double> cur(x0.begin(), x0.end());
    GpiStageResult result;
    for (int t = 1; t <= t2_max; ++t) {
        const std::vector<double> z = w.apply(cur);
        bool fixed = true;
        for (std::size_t i = 0; i < z.size(); ++i) {
            const double next = z[i] >= 0.0 ? 1.0 : -1.0;
            if (next != cur[i]) fixed = false;
            cur[i] = next;
        }
        result.iters = t;
        if (fixed) {
            result.converged = true;
            break;
        }
    }
    result.labels.resize(cur.size());
    for (std::size_t i = 0; i < cur.size(); ++i)
        result.labels[i] = cur[i] > 0.0 ? 1 : -1;
    return result;
}

RecoveryResult solve(const SignedGraph& graph, const SolverConfig& config) {
    if (config.t1_max < 1 || config.t2_max < 1)
        throw std::invalid_argument("solve: iteration caps must be >= 1");
    const WOperator w(graph, config.xi);
    PowerStageResult pi = power_stage(w, config.t1_max, config.seed);
    const std::vector<int> x0 = sign_project(pi.y);
    GpiStageResult gpi = gpi_stage(w, x0, config.t2_max);

    RecoveryResult result;
    result.labels = std::move(gpi.labels);
    result.pi_iters = pi.iters;
    result.gpi_iters = gpi.iters;
    result.converged = gpi.converged;
    result.objective = objective(graph, config.xi, result.labels);
    return result;
}

}  // namespace sgpi
