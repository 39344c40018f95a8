#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qcert/scenario.hpp"
#include "qcert/stats.hpp"

namespace qcert {

// One packet's lifecycle. For blocked packets delivered is false and
// start/departure/wait/delay are unset (NaN). Under preemptive-resume
// departure can exceed start + service_demand; everywhere else they agree.
struct PacketRecord {
    std::int64_t packet_id = 0;
    int class_id = 0;
    Tier tier = Tier::Default;
    double arrival = 0.0;
    double service_demand = 0.0;
    double start = 0.0;
    double departure = 0.0;
    double wait = 0.0;
    double delay = 0.0;
    bool delivered = false;
    bool warmup = false;  // arrival < scenario warmup; kept but excluded from stats
};

struct ClassCounts {
    int class_id = 0;
    std::int64_t generated = 0;
    std::int64_t admitted = 0;
    std::int64_t blocked = 0;
};

struct PacketTrace {
    Scenario scenario;
    std::vector<PacketRecord> records;      // index == packet_id
    std::vector<ClassCounts> class_counts;  // ordered by class_id
    bool saturation_warning = false;
};

// Post-warmup delivered-packet delay statistics for one class. Blocked
// packets are counted separately, never mixed into the delay sample.
struct ClassSummary {
    int class_id = 0;
    Tier tier = Tier::Default;
    bool empty = true;  // no post-warmup delivered packets
    SampleStats delay;
    double p50 = 0.0;
    double p95 = 0.0;
    double p99 = 0.0;
    std::int64_t blocked = 0;  // post-warmup blocked arrivals
};

std::vector<ClassSummary> summarize(const PacketTrace& trace);

inline constexpr char kTraceCsvHeader[] =
    "packet_id,class_id,tier,arrival,service_demand,start,departure,wait,delay,delivered,"
    "warmup_flag";

void write_trace_csv(const PacketTrace& trace, std::ostream& out);

}  // namespace qcert
