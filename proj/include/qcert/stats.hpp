#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace qcert {

struct SampleStats {
    std::size_t n = 0;
    double mean = 0.0;
    double variance = 0.0;  // unbiased (n-1); 0 when n < 2
    double stddev = 0.0;
    std::optional<double> cov;  // std/mean; empty when n == 0 or mean == 0
};

// Shifted two-pass moments. Shifting by the first sample keeps constant data
// at variance exactly 0.0, which downstream checks rely on.
inline SampleStats compute_stats(std::span<const double> xs) {
    SampleStats s;
    s.n = xs.size();
    if (s.n == 0) return s;
    const double shift = xs[0];
    double acc = 0.0;
    for (double x : xs) acc += x - shift;
    const double dmean = acc / static_cast<double>(s.n);
    s.mean = shift + dmean;
    if (s.n >= 2) {
        double ss = 0.0;
        for (double x : xs) {
            const double d = (x - shift) - dmean;
            ss += d * d;
        }
        s.variance = ss / static_cast<double>(s.n - 1);
        s.stddev = std::sqrt(s.variance);
    }
    if (s.mean != 0.0) s.cov = s.stddev / s.mean;
    return s;
}

// Nearest-rank quantile on an already sorted sample: value at rank ceil(p*n).
inline double nearest_rank_quantile(std::span<const double> sorted, double p) {
    if (sorted.empty()) return 0.0;
    const double n = static_cast<double>(sorted.size());
    std::size_t rank = static_cast<std::size_t>(std::ceil(p * n));
    if (rank < 1) rank = 1;
    if (rank > sorted.size()) rank = sorted.size();
    return sorted[rank - 1];
}

}  // namespace qcert
