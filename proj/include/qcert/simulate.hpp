#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qcert/trace.hpp"

namespace qcert {

// One generated arrival: everything the schedulers need. Service demand is
// sampled at arrival time and fixed, so replays and discipline comparisons
// never re-draw randomness.
struct Job {
    std::int64_t packet_id = 0;
    int class_id = 0;
    Tier tier = Tier::Default;
    double arrival = 0.0;
    double service_demand = 0.0;
};

// Poisson arrivals and service demands for every class, merged into one
// sequence ordered by (arrival, class_id). Draws come from per-(class,
// purpose) substreams of the scenario seed, so changing the discipline or
// sweeping a capacity split leaves this sequence untouched.
std::vector<Job> generate_jobs(const Scenario& scenario);

// Deterministic discipline scheduling over a fixed job sequence (sorted by
// arrival). Equal-timestamp events process departures before arrivals;
// remaining ties follow job order. Fills start/departure/delivered.
std::vector<PacketRecord> run_schedule(const Discipline& discipline, std::span<const Job> jobs);

// Schedule + bookkeeping (wait/delay, warmup flags, per-class counts,
// saturation warning) for an explicit job list. simulate() and replay() are
// thin wrappers; tests use it directly with crafted jobs.
PacketTrace make_trace(const Scenario& scenario, std::span<const Job> jobs);

PacketTrace simulate(const Scenario& scenario);

std::vector<Job> jobs_from_trace(const PacketTrace& trace);

// Re-executes the discipline over the recorded arrivals and demands with one
// packet removed. Original packet ids are preserved in the result.
PacketTrace replay(const PacketTrace& trace, std::int64_t exclude_packet_id);

}  // namespace qcert
