#include "qcert/distribution.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

#include "qcert/errors.hpp"

namespace qcert {

namespace {
std::string format_rate(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}
}  // namespace

ServiceDistribution::ServiceDistribution(Kind kind, std::vector<double> rates,
                                         std::vector<double> probs)
    : kind_(kind), rates_(std::move(rates)), probs_(std::move(probs)) {
    if (rates_.empty()) throw InvalidParameterError("service distribution needs at least one rate");
    for (double r : rates_) {
        if (!(r > 0.0)) throw InvalidParameterError("service rate must be positive");
    }
    if (kind_ == Kind::Hyperexponential) {
        if (probs_.size() != rates_.size())
            throw InvalidParameterError("hyperexponential needs one probability per rate");
        double sum = 0.0;
        for (double p : probs_) {
            if (!(p >= 0.0)) throw InvalidParameterError("mix probability must be nonnegative");
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-9)
            throw InvalidParameterError("mix probabilities must sum to 1");
    }
}

ServiceDistribution ServiceDistribution::exponential(double rate) {
    return ServiceDistribution(Kind::Exponential, {rate}, {});
}

ServiceDistribution ServiceDistribution::hyperexponential(std::vector<double> rates,
                                                          std::vector<double> probs) {
    return ServiceDistribution(Kind::Hyperexponential, std::move(rates), std::move(probs));
}

double ServiceDistribution::mean() const {
    if (kind_ == Kind::Exponential) return 1.0 / rates_[0];
    double m = 0.0;
    for (std::size_t i = 0; i < rates_.size(); ++i) m += probs_[i] / rates_[i];
    return m;
}

double ServiceDistribution::second_moment() const {
    if (kind_ == Kind::Exponential) return 2.0 / (rates_[0] * rates_[0]);
    double m2 = 0.0;
    for (std::size_t i = 0; i < rates_.size(); ++i) m2 += probs_[i] * 2.0 / (rates_[i] * rates_[i]);
    return m2;
}

double ServiceDistribution::variance() const {
    const double m = mean();
    return second_moment() - m * m;
}

double ServiceDistribution::cov() const { return std::sqrt(variance()) / mean(); }

double ServiceDistribution::sample(RandomStream& stream) const {
    if (kind_ == Kind::Exponential) return stream.unit_exponential() / rates_[0];
    // Branch draw first, then the value draw, so the stream layout is fixed.
    const std::size_t branch = stream.categorical(probs_);
    return stream.unit_exponential() / rates_[branch];
}

std::string ServiceDistribution::describe() const {
    if (kind_ == Kind::Exponential) return "exponential(" + format_rate(rates_[0]) + ")";
    std::string out = "hyperexponential(";
    for (std::size_t i = 0; i < rates_.size(); ++i) {
        if (i) out += ":";
        out += format_rate(rates_[i]);
    }
    out += ", ";
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        if (i) out += ":";
        out += format_rate(probs_[i]);
    }
    out += ")";
    return out;
}

}  // namespace qcert
