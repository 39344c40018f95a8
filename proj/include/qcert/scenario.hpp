#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcert/analytics.hpp"
#include "qcert/distribution.hpp"

namespace qcert {

// QoS tier a class is mapped to. Which tiers matter depends on discipline:
// partitioned isolates Reserved from everything else; priority serves
// HighPriority before everything else.
enum class Tier { Reserved, BestEffort, HighPriority, LowPriority, Default };

std::string_view to_string(Tier tier);
std::optional<Tier> tier_from_string(std::string_view name);

struct TrafficClassSpec {
    int class_id = 0;
    double lambda = 0.0;
    ServiceDistribution service = ServiceDistribution::exponential(1.0);
    Tier tier = Tier::Default;
};

struct Discipline {
    enum class Kind { Fifo, Partitioned, Priority, Blocking };

    Kind kind = Kind::Fifo;
    double reserved_mu = 0.0;                                  // Partitioned
    PriorityPolicy policy = PriorityPolicy::NonPreemptive;     // Priority
    int capacity = 1;                                          // Blocking

    static Discipline fifo() { return {}; }
    static Discipline partitioned(double reserved_mu) {
        Discipline d;
        d.kind = Kind::Partitioned;
        d.reserved_mu = reserved_mu;
        return d;
    }
    static Discipline priority(PriorityPolicy policy) {
        Discipline d;
        d.kind = Kind::Priority;
        d.policy = policy;
        return d;
    }
    static Discipline blocking(int capacity) {
        Discipline d;
        d.kind = Kind::Blocking;
        d.capacity = capacity;
        return d;
    }
};

std::string_view to_string(Discipline::Kind kind);

// Full experiment description. Service demands are literal service times, so
// the per-class service rates realize the server speed; `mu` is the nominal
// total rate the analytic counterparts use.
struct Scenario {
    std::vector<TrafficClassSpec> classes;
    Discipline discipline;
    double mu = 1.0;
    double horizon = 0.0;
    double warmup = 0.0;
    std::uint64_t seed = 1;
    double value_of_time = 1.0;

    void validate() const;  // throws InvalidScenarioError

    double total_lambda() const;
    // Offered load (sum of lambda * mean service) for the classes a server
    // sees. For single-server disciplines pass Tier::Default twice.
    double offered_load() const;
    double offered_load_reserved() const;
    double offered_load_unreserved() const;
    bool saturated() const;  // any serving entity with offered load >= 1
};

}  // namespace qcert
