#pragma once

#include <optional>
#include <utility>

#include "sgpi/signed_graph.hpp"
#include "sgpi/ssbm.hpp"

namespace sgpi {

/// Connectivity rates recovered from edge/triangle moments. xi_hat is set
/// iff all four estimates are strictly positive and alpha_hat_plus differs
/// from beta_hat_plus; plausible additionally requires the canonical
/// ordering alpha+ > beta+, beta- > alpha-.
struct EstimatedParams {
    double alpha_hat_plus = 0.0;
    double beta_hat_plus = 0.0;
    double alpha_hat_minus = 0.0;
    double beta_hat_minus = 0.0;
    std::optional<double> xi_hat;
    bool plausible = false;
};

struct MleWeights {
    double mu_n = 0.0;
    double nu_n = 0.0;
};

/// Unique real root of  a(x + y) = C,  b(x^3 + 3 x y^2) = D  with
/// a = n log(n)/4 and b = log(n)^3/24:
///   x = (2C/n + cbrt(6D - 8C^3/n^3)) / log(n),   y = 4C/(n log n) - x,
/// using the signed real cube root. Throws std::invalid_argument for n < 2.
std::pair<double, double> solve_cubic_system(double c_edges,
                                             double d_triangles, NodeId n);

/// Moment inversion for both subgraphs plus the weight ratio
/// xi_hat = log(beta-_hat/alpha-_hat) / log(alpha+_hat/beta+_hat).
/// Never throws for n >= 2; implausible estimates are reported through the
/// flag and an unset xi_hat.
EstimatedParams estimate_params(const GraphMoments& m, NodeId n);

/// log(beta-/alpha-) / log(alpha+/beta+), the limit of nu_n/mu_n.
/// Throws std::invalid_argument when alpha+ = beta+ or a rate is not
/// strictly positive.
double xi_exact(const SsbmParams& params);

/// The likelihood weights
///   mu_n = log(a+/b+) + log((n - (b+ + b-) log n) / (n - (a+ + a-) log n))
///   nu_n = log(b-/a-) + log((n - (a+ + a-) log n) / (n - (b+ + b-) log n)).
/// Throws std::invalid_argument when any log argument is not positive.
MleWeights mle_weights(const SsbmParams& params, NodeId n);

}  // namespace sgpi
