#include "sgpi/estimation.hpp"

#include <cmath>
#include <stdexcept>

namespace sgpi {

std::pair<double, double> solve_cubic_system(double c_edges,
                                             double d_triangles, NodeId n) {
    if (n < 2) throw std::invalid_argument("solve_cubic_system: need n >= 2");
    const double log_n = std::log(static_cast<double>(n));
    const double nd = static_cast<double>(n);
    const double radicand =
        6.0 * d_triangles - 8.0 * c_edges * c_edges * c_edges / (nd * nd * nd);
    // signed real cube root: negative radicands arise whenever the second
    // rate dominates the first
    const double x = (2.0 * c_edges / nd + std::cbrt(radicand)) / log_n;
    const double y = 4.0 * c_edges / (nd * log_n) - x;
    return {x, y};
}

EstimatedParams estimate_params(const GraphMoments& m, NodeId n) {
    EstimatedParams est;
    const auto [ap, bp] = solve_cubic_system(static_cast<double>(m.n_pos),
                                             static_cast<double>(m.t_pos), n);
    const auto [am, bm] = solve_cubic_system(static_cast<double>(m.n_neg),
                                             static_cast<double>(m.t_neg), n);
    est.alpha_hat_plus = ap;
    est.beta_hat_plus = bp;
    est.alpha_hat_minus = am;
    est.beta_hat_minus = bm;
    const bool all_positive = ap > 0.0 && bp > 0.0 && am > 0.0 && bm > 0.0;
    if (all_positive && ap != bp)
        est.xi_hat = std::log(bm / am) / std::log(ap / bp);
    est.plausible = all_positive && ap > bp && bm > am;
    return est;
}

double xi_exact(const SsbmParams& params) {
    if (!(params.alpha_plus > 0.0) || !(params.beta_plus > 0.0) ||
        !(params.alpha_minus > 0.0) || !(params.beta_minus > 0.0))
        throw std::invalid_argument("xi_exact: rates must be positive");
    if (params.alpha_plus == params.beta_plus)
        throw std::invalid_argument(
            "xi_exact: alpha+ = beta+ makes the denominator zero");
    return std::log(params.beta_minus / params.alpha_minus) /
           std::log(params.alpha_plus / params.beta_plus);
}

MleWeights mle_weights(const SsbmParams& params, NodeId n) {
    if (n < 2) throw std::invalid_argument("mle_weights: need n >= 2");
    const double log_n = std::log(static_cast<double>(n));
    const double alpha_sum = params.alpha_plus + params.alpha_minus;
    const double beta_sum = params.beta_plus + params.beta_minus;
    const double rem_alpha = static_cast<double>(n) - alpha_sum * log_n;
    const double rem_beta = static_cast<double>(n) - beta_sum * log_n;
    if (!(params.alpha_plus > 0.0) || !(params.beta_plus > 0.0) ||
        !(params.alpha_minus > 0.0) || !(params.beta_minus > 0.0) ||
        !(rem_alpha > 0.0) || !(rem_beta > 0.0))
        throw std::invalid_argument(
            "mle_weights: non-positive logarithm argument");
    MleWeights w;
    const double correction = std::log(rem_beta / rem_alpha);
    w.mu_n = std::log(params.alpha_plus / params.beta_plus) + correction;
    w.nu_n = std::log(params.beta_minus / params.alpha_minus) - correction;
    return w;
}

}  // namespace sgpi
