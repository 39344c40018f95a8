#pragma once

#include <span>
#include <string>
#include <vector>

namespace qcert {

// ---------------------------------------------------------------------------
// Closed-form results for M/M/1 variants. All functions are pure and reject
// unstable parameter sets instead of returning infinities.
// ---------------------------------------------------------------------------

struct QueueParams {
    double lambda = 0.0;  // arrival rate
    double mu = 1.0;      // service rate
    double rho() const { return lambda / mu; }
};

struct AnalyticResult {
    double mean_sojourn = 0.0;
    double var_sojourn = 0.0;
    double std_sojourn = 0.0;
    double mean_wait = 0.0;
    double utilization = 0.0;
};

// Static capacity split: reserved sub-queue (lambda1, mu1) carved out of the
// total, remainder served best-effort at mu - mu1.
struct PartitionSpec {
    QueueParams total;
    double reserved_lambda = 0.0;
    double reserved_mu = 0.0;

    QueueParams reserved() const { return {reserved_lambda, reserved_mu}; }
    QueueParams best_effort() const {
        return {total.lambda - reserved_lambda, total.mu - reserved_mu};
    }
};

enum class PriorityPolicy { NonPreemptive, PreemptiveResume };

struct PriorityParams {
    double lambda_hi = 0.0;
    double lambda_lo = 0.0;
    double mu = 1.0;
    PriorityPolicy policy = PriorityPolicy::NonPreemptive;
};

// Sojourn of a stable M/M/1 is exponential with rate mu - lambda.
AnalyticResult mm1_metrics(const QueueParams& p);

struct IntservSplit {
    AnalyticResult reserved;
    AnalyticResult best_effort;
    AnalyticResult baseline;  // the unsplit queue
    double delay_increase = 0.0;
    double var_increase = 0.0;
    QueueParams reserved_params;
    QueueParams best_effort_params;
};

IntservSplit intserv_split(const PartitionSpec& spec);

struct PriorityMeans {
    double wait_hi = 0.0;
    double wait_lo = 0.0;
    double sojourn_hi = 0.0;
    double sojourn_lo = 0.0;
    double fifo_wait = 0.0;  // single-queue baseline at the same total load
};

// Class mean waits for the two-class priority M/M/1 with identical
// exponential service. Per-class delay variances are intentionally left to
// the simulator.
PriorityMeans priority_mm1_means(const PriorityParams& p);

struct BlockingResult {
    double blocking_prob = 0.0;
    double delivered_mean_sojourn = 0.0;
};

// M/M/1/K loss system; capacity counts the packet in service plus waiting
// room. Always stable, so any rho is accepted.
BlockingResult mm1k_blocking(const QueueParams& p, int capacity);

struct ReservationSweepPoint {
    double mu1 = 0.0;
    double rho1 = 0.0;
    double best_effort_var = 0.0;
    bool feasible = false;
    std::string note;  // why the point was skipped
};

// Best-effort delay variance as the reserved service rate grows. Infeasible
// grid points are flagged and skipped, not fatal.
std::vector<ReservationSweepPoint> reservation_variance_sweep(const QueueParams& total,
                                                              double reserved_lambda,
                                                              std::span<const double> mu1_grid);

}  // namespace qcert
