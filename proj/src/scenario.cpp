#include "qcert/scenario.hpp"

#include <set>

#include "qcert/errors.hpp"

namespace qcert {

std::string_view to_string(Tier tier) {
    switch (tier) {
        case Tier::Reserved: return "reserved";
        case Tier::BestEffort: return "best_effort";
        case Tier::HighPriority: return "high_priority";
        case Tier::LowPriority: return "low_priority";
        case Tier::Default: return "default";
    }
    return "default";
}

std::optional<Tier> tier_from_string(std::string_view name) {
    if (name == "reserved") return Tier::Reserved;
    if (name == "best_effort") return Tier::BestEffort;
    if (name == "high_priority") return Tier::HighPriority;
    if (name == "low_priority") return Tier::LowPriority;
    if (name == "default") return Tier::Default;
    return std::nullopt;
}

std::string_view to_string(Discipline::Kind kind) {
    switch (kind) {
        case Discipline::Kind::Fifo: return "fifo";
        case Discipline::Kind::Partitioned: return "partitioned";
        case Discipline::Kind::Priority: return "priority";
        case Discipline::Kind::Blocking: return "blocking";
    }
    return "fifo";
}

void Scenario::validate() const {
    if (!(mu > 0.0)) throw InvalidScenarioError("mu must be positive");
    if (!(horizon > 0.0)) throw InvalidScenarioError("horizon must be positive");
    if (warmup < 0.0 || warmup >= horizon)
        throw InvalidScenarioError("warmup must satisfy 0 <= warmup < horizon");
    if (!(value_of_time > 0.0)) throw InvalidScenarioError("value_of_time must be positive");
    if (classes.empty()) throw InvalidScenarioError("at least one traffic class is required");

    std::set<int> ids;
    for (const auto& cls : classes) {
        if (cls.class_id < 0) throw InvalidScenarioError("class ids must be nonnegative");
        if (!ids.insert(cls.class_id).second)
            throw InvalidScenarioError("duplicate class id " + std::to_string(cls.class_id));
        if (cls.lambda < 0.0) throw InvalidScenarioError("class lambda must be nonnegative");
    }

    switch (discipline.kind) {
        case Discipline::Kind::Fifo:
        case Discipline::Kind::Priority:
            // Priority with a single tier present degenerates to FIFO; allowed.
            break;
        case Discipline::Kind::Partitioned: {
            if (!(discipline.reserved_mu > 0.0) || !(discipline.reserved_mu < mu))
                throw InvalidScenarioError("partitioned requires 0 < reserved_mu < mu");
            bool has_reserved = false;
            for (const auto& cls : classes) has_reserved |= cls.tier == Tier::Reserved;
            if (!has_reserved)
                throw InvalidScenarioError("partitioned requires at least one reserved-tier class");
            break;
        }
        case Discipline::Kind::Blocking:
            if (discipline.capacity < 1)
                throw InvalidScenarioError("blocking capacity must be at least 1");
            break;
    }
}

double Scenario::total_lambda() const {
    double sum = 0.0;
    for (const auto& cls : classes) sum += cls.lambda;
    return sum;
}

double Scenario::offered_load() const {
    double load = 0.0;
    for (const auto& cls : classes) load += cls.lambda * cls.service.mean();
    return load;
}

double Scenario::offered_load_reserved() const {
    double load = 0.0;
    for (const auto& cls : classes)
        if (cls.tier == Tier::Reserved) load += cls.lambda * cls.service.mean();
    return load;
}

double Scenario::offered_load_unreserved() const {
    double load = 0.0;
    for (const auto& cls : classes)
        if (cls.tier != Tier::Reserved) load += cls.lambda * cls.service.mean();
    return load;
}

bool Scenario::saturated() const {
    if (discipline.kind == Discipline::Kind::Partitioned)
        return offered_load_reserved() >= 1.0 || offered_load_unreserved() >= 1.0;
    return offered_load() >= 1.0;
}

}  // namespace qcert
