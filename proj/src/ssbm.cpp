#include "sgpi/ssbm.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sgpi/rng.hpp"

namespace sgpi {

double SsbmParams::p_plus() const { return alpha_plus * std::log(n) / n; }
double SsbmParams::p_minus() const { return alpha_minus * std::log(n) / n; }
double SsbmParams::q_plus() const { return beta_plus * std::log(n) / n; }
double SsbmParams::q_minus() const { return beta_minus * std::log(n) / n; }

void SsbmParams::validate() const {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("SsbmParams: n must be even and >= 4");
    if (!(alpha_plus > 0.0) || !(beta_plus > 0.0) || !(alpha_minus > 0.0) ||
        !(beta_minus > 0.0))
        throw std::invalid_argument(
            "SsbmParams: all four rates must be strictly positive");
    const double probs[4] = {p_plus(), p_minus(), q_plus(), q_minus()};
    for (const double p : probs)
        if (!(p > 0.0) || p > 1.0)
            throw std::invalid_argument(
                "SsbmParams: derived probability outside (0, 1]");
    if (p_plus() + p_minus() > 1.0 || q_plus() + q_minus() > 1.0)
        throw std::invalid_argument(
            "SsbmParams: within- or across-community probabilities sum past 1");
}

bool SsbmParams::assumption_ordering_holds() const {
    return alpha_plus > beta_plus && beta_minus > alpha_minus;
}

namespace {

std::pair<SignedGraph, GroundTruth> sample_impl(NodeId n, double p_plus,
                                                double p_minus, double q_plus,
                                                double q_minus,
                                                std::uint64_t seed) {
    const NodeId half = n / 2;
    std::vector<SignedEdge> edges;
    const double density = std::min(
        1.0, (p_plus + p_minus + q_plus + q_minus) / 2.0);
    edges.reserve(static_cast<std::size_t>(
        density * 0.5 * static_cast<double>(n) * static_cast<double>(n) / 2.0 +
        64.0));

    const double within_neg = p_plus + p_minus;
    const double across_neg = q_plus + q_minus;
    for (NodeId i = 0; i < n; ++i) {
        // pairs {i, j} with j > i; same community iff both sides of half
        const NodeId same_end = i < half ? half : n;
        for (NodeId j = i + 1; j < same_end; ++j) {
            const double u = pair_uniform(seed, static_cast<std::uint64_t>(i),
                                          static_cast<std::uint64_t>(j));
            if (u < p_plus)
                edges.push_back({i, j, +1});
            else if (u < within_neg)
                edges.push_back({i, j, -1});
        }
        if (i < half) {
            for (NodeId j = half; j < n; ++j) {
                const double u =
                    pair_uniform(seed, static_cast<std::uint64_t>(i),
                                 static_cast<std::uint64_t>(j));
                if (u < q_plus)
                    edges.push_back({i, j, +1});
                else if (u < across_neg)
                    edges.push_back({i, j, -1});
            }
        }
    }

    GroundTruth truth;
    truth.labels.assign(static_cast<std::size_t>(n), -1);
    for (NodeId i = 0; i < half; ++i) truth.labels[i] = +1;
    return {SignedGraph(n, edges), std::move(truth)};
}

}  // namespace

std::pair<SignedGraph, GroundTruth> sample(const SsbmParams& params,
                                           std::uint64_t seed) {
    params.validate();
    return sample_impl(params.n, params.p_plus(), params.p_minus(),
                       params.q_plus(), params.q_minus(), seed);
}

std::pair<SignedGraph, GroundTruth> sample_raw(NodeId n, double p_plus,
                                               double p_minus, double q_plus,
                                               double q_minus,
                                               std::uint64_t seed) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("sample_raw: n must be even and >= 4");
    const double probs[4] = {p_plus, p_minus, q_plus, q_minus};
    for (const double p : probs)
        if (!(p >= 0.0) || p > 1.0)
            throw std::invalid_argument(
                "sample_raw: probability outside [0, 1]");
    if (p_plus + p_minus > 1.0 || q_plus + q_minus > 1.0)
        throw std::invalid_argument(
            "sample_raw: pair probabilities sum past 1");
    return sample_impl(n, p_plus, p_minus, q_plus, q_minus, seed);
}

double it_gap(const SsbmParams& params) {
    const double dp = std::sqrt(params.alpha_plus) - std::sqrt(params.beta_plus);
    const double dm =
        std::sqrt(params.alpha_minus) - std::sqrt(params.beta_minus);
    return dp * dp + dm * dm - 2.0;
}

}  // namespace sgpi
