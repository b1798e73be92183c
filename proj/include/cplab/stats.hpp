// Estimation helpers: Wilson score intervals for probabilities, t-intervals
// for means, and the two-sample Kolmogorov-Smirnov statistic.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace cplab {

inline constexpr double kZ95 = 1.959963984540054; // two-sided 95% normal quantile

struct ProbEstimate {
    double estimate = 0.0;      // successes / reps
    double ci_halfwidth = 0.0;  // Wilson 95% half-width
    uint64_t successes = 0;
    uint64_t reps = 0;
};

inline ProbEstimate wilson_estimate(uint64_t successes, uint64_t reps) {
    if (reps == 0) throw std::invalid_argument("wilson_estimate: reps must be positive");
    const double n = static_cast<double>(reps);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = kZ95 * kZ95;
    const double denom = 1.0 + z2 / n;
    const double halfwidth =
        kZ95 * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    return {phat, halfwidth, successes, reps};
}

struct MeanEstimate {
    double mean = 0.0;
    double stddev = 0.0;
    double ci_halfwidth = 0.0; // 95% t-interval
    uint64_t n = 0;
};

// 97.5% Student-t quantile via the Cornish-Fisher expansion in 1/df.
inline double t_quantile_975(uint64_t df) {
    if (df == 0) return std::numeric_limits<double>::infinity();
    const double z = kZ95, d = static_cast<double>(df);
    const double z3 = z * z * z, z5 = z3 * z * z;
    return z + (z3 + z) / (4.0 * d) + (5.0 * z5 + 16.0 * z3 + 3.0 * z) / (96.0 * d * d);
}

class RunningStats {
public:
    void add(double x) {
        ++n_;
        double d = x - mean_;
        mean_ += d / static_cast<double>(n_);
        m2_ += d * (x - mean_);
    }
    void merge(const RunningStats& o) {
        if (o.n_ == 0) return;
        if (n_ == 0) { *this = o; return; }
        double na = static_cast<double>(n_), nb = static_cast<double>(o.n_);
        double d = o.mean_ - mean_;
        double nt = na + nb;
        m2_ += o.m2_ + d * d * na * nb / nt;
        mean_ += d * nb / nt;
        n_ += o.n_;
    }
    uint64_t count() const { return n_; }
    double mean() const { return mean_; }
    double variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }
    MeanEstimate estimate() const {
        double sd = std::sqrt(variance());
        double hw = n_ > 1 ? t_quantile_975(n_ - 1) * sd / std::sqrt(static_cast<double>(n_))
                           : std::numeric_limits<double>::infinity();
        return {mean_, sd, hw, n_};
    }

private:
    uint64_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

// Two-sample KS statistic sup_x |F1(x) - F2(x)|; inputs need not be sorted.
inline double ks_statistic(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_statistic: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    size_t i = 0, j = 0;
    double d = 0.0;
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    while (i < a.size() && j < b.size()) {
        double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

// Asymptotic two-sample KS critical value at significance alpha in {0.05, 0.01}.
inline double ks_critical(double alpha, size_t n, size_t m) {
    double c;
    if (alpha == 0.01) c = 1.62762;
    else if (alpha == 0.05) c = 1.35810;
    else throw std::invalid_argument("ks_critical: unsupported alpha");
    return c * std::sqrt((static_cast<double>(n) + static_cast<double>(m)) /
                         (static_cast<double>(n) * static_cast<double>(m)));
}

} // namespace cplab
