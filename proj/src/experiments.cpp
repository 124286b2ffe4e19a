#include "sgpi/experiments.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "sgpi/evaluation.hpp"
#include "sgpi/rng.hpp"
#include "sgpi/solver.hpp"

namespace sgpi {

XiChoice XiChoice::parse(const std::string& text) {
    if (text == "exact") return {Mode::exact, 1.0};
    if (text == "estimated") return {Mode::estimated, 1.0};
    double value = 0.0;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), last, value);
    if (ec != std::errc() || ptr != last || !(value > 0.0))
        throw std::invalid_argument(
            "xi must be 'exact', 'estimated', or a positive number, got '" +
            text + "'");
    return {Mode::fixed, value};
}

std::vector<double> SweepRange::values() const {
    std::vector<double> out;
    const double span = stop - start;
    const int count = 1 + static_cast<int>(std::floor(span / step + 1e-9));
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) out.push_back(start + k * step);
    return out;
}

namespace {

bool known_param(const std::string& name) {
    return name == "alpha_plus" || name == "beta_plus" ||
           name == "alpha_minus" || name == "beta_minus";
}

void set_param(SsbmParams& p, const std::string& name, double value) {
    if (name == "alpha_plus")
        p.alpha_plus = value;
    else if (name == "beta_plus")
        p.beta_plus = value;
    else if (name == "alpha_minus")
        p.alpha_minus = value;
    else if (name == "beta_minus")
        p.beta_minus = value;
}

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

// Picks the solver weight per mode; falls back to the fixed value when the
// derived weight is undefined or not strictly positive.
double choose_xi(const XiChoice& xi, const SsbmParams& params,
                 const SignedGraph& graph, bool* fell_back) {
    if (fell_back) *fell_back = false;
    switch (xi.mode) {
        case XiChoice::Mode::fixed:
            return xi.value;
        case XiChoice::Mode::exact: {
            if (params.alpha_plus != params.beta_plus) {
                const double exact = xi_exact(params);
                if (exact > 0.0) return exact;
            }
            if (fell_back) *fell_back = true;
            return xi.value;
        }
        case XiChoice::Mode::estimated: {
            const EstimatedParams est =
                estimate_params(count_moments(graph), graph.node_count());
            if (est.xi_hat && *est.xi_hat > 0.0) return *est.xi_hat;
            if (fell_back) *fell_back = true;
            return xi.value;
        }
    }
    return xi.value;
}

struct TrialOutcome {
    bool exact = false;
    double error_rate = 0.0;
    int pi_iters = 0;
    int gpi_iters = 0;
    double runtime_ms = 0.0;
    bool failed = false;  // degenerate operator; counts as non-recovery
};

TrialOutcome run_trial(const SsbmParams& params, const XiChoice& xi,
                       std::uint64_t trial_seed) {
    TrialOutcome out;
    auto [graph, truth] = sample(params, trial_seed);
    const double t0 = now_ms();
    try {
        const double xi_value = choose_xi(xi, params, graph, nullptr);
        const SolverConfig config =
            SolverConfig::defaults(xi_value, params.n, trial_seed);
        const RecoveryResult res = solve(graph, config);
        out.pi_iters = res.pi_iters;
        out.gpi_iters = res.gpi_iters;
        const RecoveryMetrics metrics = compare(res.labels, truth);
        out.exact = metrics.exact;
        out.error_rate = metrics.error_rate;
    } catch (const DegenerateOperatorError&) {
        out.failed = true;
        out.error_rate = 0.5;
    }
    out.runtime_ms = now_ms() - t0;
    return out;
}

}  // namespace

void SweepSpec::validate() const {
    if (trials < 1) throw std::invalid_argument("sweep: trials must be >= 1");
    for (const SweepRange* r : {&sweep1, &sweep2}) {
        if (!known_param(r->param))
            throw std::invalid_argument("sweep: unknown parameter '" +
                                        r->param + "'");
        if (!(r->step > 0.0))
            throw std::invalid_argument("sweep: step must be > 0");
        if (r->stop < r->start)
            throw std::invalid_argument("sweep: empty range for '" + r->param +
                                        "'");
    }
    if (sweep1.param == sweep2.param)
        throw std::invalid_argument("sweep: the two swept parameters must differ");
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    spec.validate();
    const std::vector<double> vals1 = spec.sweep1.values();
    const std::vector<double> vals2 = spec.sweep2.values();
    const std::size_t grid_count = vals1.size() * vals2.size();

    std::vector<SsbmParams> grid(grid_count);
    std::vector<bool> grid_valid(grid_count, false);
    std::vector<SweepRow> rows(grid_count);
    for (std::size_t g = 0; g < grid_count; ++g) {
        SsbmParams p{spec.n, spec.alpha_plus, spec.beta_plus, spec.alpha_minus,
                     spec.beta_minus};
        set_param(p, spec.sweep1.param, vals1[g / vals2.size()]);
        set_param(p, spec.sweep2.param, vals2[g % vals2.size()]);
        grid[g] = p;
        SweepRow& row = rows[g];
        row.alpha_plus = p.alpha_plus;
        row.beta_plus = p.beta_plus;
        row.alpha_minus = p.alpha_minus;
        row.beta_minus = p.beta_minus;
        row.n = spec.n;
        row.trials = spec.trials;
        row.it_gap = it_gap(p);
        try {
            p.validate();
            grid_valid[g] = true;
        } catch (const std::invalid_argument&) {
            grid_valid[g] = false;
        }
        row.valid = grid_valid[g];
    }

    const std::size_t trials = static_cast<std::size_t>(spec.trials);
    std::vector<TrialOutcome> outcomes(grid_count * trials);
    std::atomic<std::size_t> next{0};
    const std::size_t total = grid_count * trials;
    auto worker = [&] {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= total) return;
            const std::size_t g = idx / trials;
            const std::size_t t = idx % trials;
            if (!grid_valid[g]) continue;
            const std::uint64_t seed = derive_key(spec.base_seed, g, t);
            outcomes[idx] = run_trial(grid[g], spec.xi, seed);
        }
    };

    unsigned thread_count = spec.threads > 0
                                ? static_cast<unsigned>(spec.threads)
                                : std::thread::hardware_concurrency();
    thread_count = std::max(1u, std::min<unsigned>(thread_count, total));
    if (thread_count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (unsigned i = 0; i < thread_count; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    for (std::size_t g = 0; g < grid_count; ++g) {
        if (!grid_valid[g]) continue;
        SweepRow& row = rows[g];
        double exact = 0.0, err = 0.0, pi = 0.0, gpi = 0.0, ms = 0.0;
        for (std::size_t t = 0; t < trials; ++t) {
            const TrialOutcome& o = outcomes[g * trials + t];
            exact += o.exact ? 1.0 : 0.0;
            err += o.error_rate;
            pi += o.pi_iters;
            gpi += o.gpi_iters;
            ms += o.runtime_ms;
        }
        const double denom = static_cast<double>(trials);
        row.recovery_ratio = exact / denom;
        row.mean_error_rate = err / denom;
        row.mean_pi_iters = pi / denom;
        row.mean_gpi_iters = gpi / denom;
        row.mean_runtime_ms = ms / denom;
    }
    return rows;
}

namespace {

std::string fmt(double v, const char* spec_str) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec_str, v);
    return buf;
}

}  // namespace

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out,
                     bool with_timing) {
    out << "alpha_plus,beta_plus,alpha_minus,beta_minus,n,trials,"
           "recovery_ratio,mean_error_rate,mean_pi_iters,mean_gpi_iters,"
           "mean_runtime_ms,it_gap,status\n";
    for (const SweepRow& r : rows) {
        out << fmt(r.alpha_plus, "%.6g") << ',' << fmt(r.beta_plus, "%.6g")
            << ',' << fmt(r.alpha_minus, "%.6g") << ','
            << fmt(r.beta_minus, "%.6g") << ',' << r.n << ',' << r.trials
            << ',';
        if (r.valid) {
            out << fmt(r.recovery_ratio, "%.6f") << ','
                << fmt(r.mean_error_rate, "%.6f") << ','
                << fmt(r.mean_pi_iters, "%.3f") << ','
                << fmt(r.mean_gpi_iters, "%.3f") << ',';
            if (with_timing) out << fmt(r.mean_runtime_ms, "%.3f");
            out << ',' << fmt(r.it_gap, "%.6g") << ",ok\n";
        } else {
            out << ",,,,," << fmt(r.it_gap, "%.6g") << ",invalid\n";
        }
    }
}

std::vector<BenchRow> run_bench(const std::vector<NodeId>& n_list,
                                const SsbmParams& rates, int trials,
                                std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("bench: trials must be >= 1");
    if (n_list.empty())
        throw std::invalid_argument("bench: need at least one n");
    std::vector<BenchRow> rows;
    rows.reserve(n_list.size());
    for (std::size_t k = 0; k < n_list.size(); ++k) {
        SsbmParams params = rates;
        params.n = n_list[k];
        params.validate();
        BenchRow row;
        row.n = params.n;
        row.trials = trials;
        double gpi_total = 0.0;
        for (int t = 0; t < trials; ++t) {
            const std::uint64_t trial_seed =
                derive_key(seed, k, static_cast<std::uint64_t>(t));
            const double t_gen0 = now_ms();
            auto [graph, truth] = sample(params, trial_seed);
            const double t_gen1 = now_ms();

            const double t_est0 = now_ms();
            const EstimatedParams est =
                estimate_params(count_moments(graph), params.n);
            const double xi_value =
                est.xi_hat && *est.xi_hat > 0.0 ? *est.xi_hat : 1.0;
            const double t_est1 = now_ms();

            const double t_solve0 = now_ms();
            const RecoveryResult res = solve(
                graph, SolverConfig::defaults(xi_value, params.n, trial_seed));
            const double t_solve1 = now_ms();

            row.total_estimate_ms += t_est1 - t_est0;
            row.total_solve_ms += t_solve1 - t_solve0;
            row.total_with_gen_ms +=
                (t_gen1 - t_gen0) + (t_est1 - t_est0) + (t_solve1 - t_solve0);
            gpi_total += res.gpi_iters;
        }
        row.mean_gpi_iters = gpi_total / trials;
        rows.push_back(row);
    }
    return rows;
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
    out << "n,trials,total_solve_ms,total_estimate_ms,total_with_gen_ms,"
           "mean_gpi_iters\n";
    for (const BenchRow& r : rows) {
        out << r.n << ',' << r.trials << ',' << fmt(r.total_solve_ms, "%.3f")
            << ',' << fmt(r.total_estimate_ms, "%.3f") << ','
            << fmt(r.total_with_gen_ms, "%.3f") << ','
            << fmt(r.mean_gpi_iters, "%.3f") << '\n';
    }
}

SolveFileReport run_solve_file(const std::string& path, const XiChoice& xi,
                               bool one_based, std::uint64_t seed) {
    if (xi.mode == XiChoice::Mode::exact)
        throw std::invalid_argument(
            "solve-file: exact xi needs true parameters; use 'estimated' or a "
            "fixed value");
    const SignedGraph graph = load_edge_list(path, one_based);

    SolveFileReport report;
    report.n = graph.node_count();
    double xi_value = xi.value;
    if (xi.mode == XiChoice::Mode::estimated) {
        const EstimatedParams est =
            estimate_params(count_moments(graph), graph.node_count());
        report.estimated = est;
        if (est.xi_hat && *est.xi_hat > 0.0) {
            xi_value = *est.xi_hat;
        } else {
            report.xi_fallback = true;
        }
    }
    report.xi_used = xi_value;

    const RecoveryResult res = solve(
        graph, SolverConfig::defaults(xi_value, graph.node_count(), seed));
    report.labels = res.labels;
    for (const int x : res.labels)
        (x > 0 ? report.community_pos : report.community_neg) += 1;
    report.pi_iters = res.pi_iters;
    report.gpi_iters = res.gpi_iters;
    report.converged = res.converged;
    report.objective = res.objective;
    return report;
}

}  // namespace sgpi
