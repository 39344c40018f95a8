#include "qcert/analytics.hpp"

#include <cmath>

#include "qcert/errors.hpp"

namespace qcert {

namespace {
void check_params(const QueueParams& p) {
    if (!(p.mu > 0.0)) throw InvalidParameterError("service rate mu must be positive");
    if (p.lambda < 0.0) throw InvalidParameterError("arrival rate lambda must be nonnegative");
}

void check_stable(const QueueParams& p, const char* which) {
    if (p.lambda >= p.mu)
        throw UnstableQueueError(std::string(which) + " queue unstable: rho >= 1");
}
}  // namespace

AnalyticResult mm1_metrics(const QueueParams& p) {
    check_params(p);
    check_stable(p, "m/m/1");
    const double gap = p.mu - p.lambda;
    AnalyticResult r;
    r.mean_sojourn = 1.0 / gap;
    r.var_sojourn = r.mean_sojourn * r.mean_sojourn;
    r.std_sojourn = r.mean_sojourn;
    r.mean_wait = r.mean_sojourn - 1.0 / p.mu;
    r.utilization = p.rho();
    return r;
}

IntservSplit intserv_split(const PartitionSpec& spec) {
    check_params(spec.total);
    if (spec.reserved_lambda < 0.0 || spec.reserved_lambda > spec.total.lambda)
        throw InvalidPartitionError("reserved lambda must lie in [0, total lambda]");
    if (!(spec.reserved_mu > 0.0) || !(spec.reserved_mu < spec.total.mu))
        throw InvalidPartitionError("reserved mu must lie strictly inside (0, total mu)");

    IntservSplit out;
    out.reserved_params = spec.reserved();
    out.best_effort_params = spec.best_effort();
    out.reserved = mm1_metrics(out.reserved_params);      // throws if reserved unstable
    out.best_effort = mm1_metrics(out.best_effort_params);
    // Both sub-queues stable implies the unsplit queue is stable.
    out.baseline = mm1_metrics(spec.total);
    out.delay_increase = out.best_effort.mean_sojourn - out.baseline.mean_sojourn;
    out.var_increase = out.best_effort.var_sojourn - out.baseline.var_sojourn;
    return out;
}

PriorityMeans priority_mm1_means(const PriorityParams& p) {
    if (!(p.mu > 0.0)) throw InvalidParameterError("service rate mu must be positive");
    if (p.lambda_hi < 0.0 || p.lambda_lo < 0.0)
        throw InvalidParameterError("arrival rates must be nonnegative");
    const double lambda = p.lambda_hi + p.lambda_lo;
    check_stable({lambda, p.mu}, "priority");

    const double service = 1.0 / p.mu;
    const double rho_hi = p.lambda_hi / p.mu;
    const double rho = lambda / p.mu;

    PriorityMeans out;
    if (p.policy == PriorityPolicy::NonPreemptive) {
        // Mean residual work seen by an arrival: sum of lambda_k E[S^2]/2.
        const double w0 = lambda / (p.mu * p.mu);
        out.wait_hi = w0 / (1.0 - rho_hi);
        out.wait_lo = w0 / ((1.0 - rho_hi) * (1.0 - rho));
        out.sojourn_hi = out.wait_hi + service;
        out.sojourn_lo = out.wait_lo + service;
    } else {
        // Preemptive-resume: the high class sees a system of its own.
        const double r_hi = p.lambda_hi / (p.mu * p.mu);
        const double r_all = lambda / (p.mu * p.mu);
        out.sojourn_hi = service + r_hi / (1.0 - rho_hi);
        out.sojourn_lo = service / (1.0 - rho_hi) + r_all / ((1.0 - rho_hi) * (1.0 - rho));
        out.wait_hi = out.sojourn_hi - service;
        out.wait_lo = out.sojourn_lo - service;
    }
    out.fifo_wait = lambda > 0.0 ? mm1_metrics({lambda, p.mu}).mean_wait : 0.0;
    return out;
}

BlockingResult mm1k_blocking(const QueueParams& p, int capacity) {
    check_params(p);
    if (capacity < 1) throw InvalidParameterError("capacity must be at least 1");

    BlockingResult out;
    if (p.lambda == 0.0) {
        out.blocking_prob = 0.0;
        out.delivered_mean_sojourn = 1.0 / p.mu;
        return out;
    }

    const double rho = p.rho();
    const int k = capacity;
    double p_block;
    double mean_in_system;
    if (rho == 1.0) {
        p_block = 1.0 / (k + 1.0);
        mean_in_system = k / 2.0;
    } else {
        const double rk = std::pow(rho, k);
        const double norm = 1.0 - rho * rk;  // 1 - rho^(k+1)
        p_block = rk * (1.0 - rho) / norm;
        mean_in_system = rho * (1.0 - (k + 1.0) * rk + k * rho * rk) / ((1.0 - rho) * norm);
    }
    out.blocking_prob = p_block;
    const double lambda_eff = p.lambda * (1.0 - p_block);
    out.delivered_mean_sojourn = mean_in_system / lambda_eff;
    return out;
}

std::vector<ReservationSweepPoint> reservation_variance_sweep(const QueueParams& total,
                                                              double reserved_lambda,
                                                              std::span<const double> mu1_grid) {
    check_params(total);
    std::vector<ReservationSweepPoint> out;
    out.reserve(mu1_grid.size());
    for (double mu1 : mu1_grid) {
        ReservationSweepPoint point;
        point.mu1 = mu1;
        PartitionSpec spec{total, reserved_lambda, mu1};
        try {
            IntservSplit split = intserv_split(spec);
            point.rho1 = split.reserved_params.rho();
            point.best_effort_var = split.best_effort.var_sojourn;
            point.feasible = true;
        } catch (const InvalidPartitionError& e) {
            point.note = e.what();
        } catch (const UnstableQueueError& e) {
            point.note = e.what();
        }
        out.push_back(std::move(point));
    }
    return out;
}

}  // namespace qcert
