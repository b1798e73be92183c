// Parametric degree / offspring distributions with exact tail formulas.
//
//   det:d      point mass at d
//   geom:p     P(d = k) = (1-p)^(k-1) p on {1, 2, ...}
//   plaw:a     P(d >= m) = 3^a m^-a for m >= 3, a > 2
//   sexp:b     P(d >= m) = exp(-m^(1/b) + 3^(1/b)) for m >= 3, b > 1
//   sgeom:q    P(d = k) = (1-q)^k q on {0, 1, ...}   (offspring only)
#pragma once

#include <cstdint>
#include <string>

#include "cplab/rng.hpp"

namespace cplab {

class DegreeDistribution {
public:
    enum class Family { Deterministic, Geometric, PowerLawTail, StretchedExpTail, ShiftedGeometric };

    static DegreeDistribution deterministic(uint64_t d);
    static DegreeDistribution geometric(double p);
    static DegreeDistribution power_law_tail(double a);
    static DegreeDistribution stretched_exp_tail(double b);
    static DegreeDistribution shifted_geometric(double q);

    Family family() const { return family_; }
    double param() const { return param_; }

    // P(d >= m); equals 1 below the support minimum.
    double tail(uint64_t m) const;
    double pmf(uint64_t k) const { return tail(k) - tail(k + 1); }
    uint64_t min_support() const;

    // Inverse-tail sampling: the largest integer m with tail(m) >= u for a
    // uniform u in (0, 1].
    uint64_t sample(Rng& rng) const;

    double mean() const;
    // nu = E[d(d-1)] / E[d]; finite second moment is guaranteed by the
    // construction-time parameter checks.
    double size_biased_mean() const;

    std::string to_string() const;
    static DegreeDistribution parse(const std::string& spec);

private:
    DegreeDistribution(Family f, double p) : family_(f), param_(p) {}
    Family family_;
    double param_;
};

// Offspring distributions share the same families plus sgeom.
using OffspringDistribution = DegreeDistribution;

inline uint64_t sample_degree(const DegreeDistribution& dist, Rng& rng) {
    return dist.sample(rng);
}
inline double size_biased_mean(const DegreeDistribution& dist) {
    return dist.size_biased_mean();
}

} // namespace cplab
