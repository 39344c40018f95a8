#pragma once

#include <span>
#include <string>
#include <vector>

#include "qcert/rng.hpp"

namespace qcert {

// Service-time distribution of one traffic class. Exponential covers the
// Markovian model; the hyperexponential mixture gives service CoV > 1 for
// heavy-tail experiments.
class ServiceDistribution {
public:
    enum class Kind { Exponential, Hyperexponential };

    static ServiceDistribution exponential(double rate);
    static ServiceDistribution hyperexponential(std::vector<double> rates,
                                                std::vector<double> probs);

    Kind kind() const { return kind_; }
    std::span<const double> rates() const { return rates_; }
    std::span<const double> probs() const { return probs_; }

    double mean() const;
    double second_moment() const;
    double variance() const;
    double cov() const;  // std/mean; 1 for exponential

    double sample(RandomStream& stream) const;

    // Round-trips through the scenario-file syntax.
    std::string describe() const;

private:
    ServiceDistribution(Kind kind, std::vector<double> rates, std::vector<double> probs);

    Kind kind_;
    std::vector<double> rates_;
    std::vector<double> probs_;
};

}  // namespace qcert
