#include "cplab/degree_dist.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cplab {

namespace {

// sum_{m >= start} m^-s for s > 1, by direct summation up to a cutoff plus
// the Euler-Maclaurin remainder.  Relative error well below 1e-12.
double zeta_tail(double s, uint64_t start) {
    const uint64_t cutoff = start + 20000;
    double acc = 0.0;
    for (uint64_t m = start; m < cutoff; ++m) acc += std::pow(static_cast<double>(m), -s);
    const double M = static_cast<double>(cutoff);
    // integral + boundary + first two Bernoulli corrections
    double rem = std::pow(M, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(M, -s) +
                 s / 12.0 * std::pow(M, -s - 1.0) -
                 s * (s + 1.0) * (s + 2.0) / 720.0 * std::pow(M, -s - 3.0);
    return acc + rem;
}

// sum_{m >= 3} f-weighted tails for the stretched-exponential family, summed
// until the terms are negligible.
double stretched_sum(double b, bool weight_m_minus1) {
    const double shift = std::pow(3.0, 1.0 / b);
    double acc = 0.0;
    for (uint64_t m = 3;; ++m) {
        double t = std::exp(-std::pow(static_cast<double>(m), 1.0 / b) + shift);
        double term = weight_m_minus1 ? (static_cast<double>(m) - 1.0) * t : t;
        acc += term;
        if (term < 1e-16 * (acc + 1e-300) && m > 10) break;
        if (m > 100000000ULL)
            throw std::runtime_error("stretched_sum: series did not converge");
    }
    return acc;
}

} // namespace

DegreeDistribution DegreeDistribution::deterministic(uint64_t d) {
    return {Family::Deterministic, static_cast<double>(d)};
}

DegreeDistribution DegreeDistribution::geometric(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("geometric: p must lie in (0,1)");
    return {Family::Geometric, p};
}

DegreeDistribution DegreeDistribution::power_law_tail(double a) {
    if (!(a > 2.0))
        throw std::invalid_argument("power_law_tail: a must exceed 2 (finite second moment)");
    return {Family::PowerLawTail, a};
}

DegreeDistribution DegreeDistribution::stretched_exp_tail(double b) {
    if (!(b > 1.0))
        throw std::invalid_argument("stretched_exp_tail: b must exceed 1");
    return {Family::StretchedExpTail, b};
}

DegreeDistribution DegreeDistribution::shifted_geometric(double q) {
    if (!(q > 0.0 && q < 1.0))
        throw std::invalid_argument("shifted_geometric: q must lie in (0,1)");
    return {Family::ShiftedGeometric, q};
}

uint64_t DegreeDistribution::min_support() const {
    switch (family_) {
        case Family::Deterministic: return static_cast<uint64_t>(param_);
        case Family::Geometric: return 1;
        case Family::PowerLawTail:
        case Family::StretchedExpTail: return 3;
        case Family::ShiftedGeometric: return 0;
    }
    return 0;
}

double DegreeDistribution::tail(uint64_t m) const {
    switch (family_) {
        case Family::Deterministic:
            return static_cast<double>(m) <= param_ ? 1.0 : 0.0;
        case Family::Geometric:
            if (m <= 1) return 1.0;
            return std::pow(1.0 - param_, static_cast<double>(m - 1));
        case Family::PowerLawTail:
            if (m <= 3) return 1.0;
            return std::pow(3.0 / static_cast<double>(m), param_);
        case Family::StretchedExpTail: {
            if (m <= 3) return 1.0;
            double inv_b = 1.0 / param_;
            return std::exp(-std::pow(static_cast<double>(m), inv_b) + std::pow(3.0, inv_b));
        }
        case Family::ShiftedGeometric:
            return std::pow(1.0 - param_, static_cast<double>(m));
    }
    return 0.0;
}

uint64_t DegreeDistribution::sample(Rng& rng) const {
    const double u = rng.uniform_open01();
    switch (family_) {
        case Family::Deterministic:
            return static_cast<uint64_t>(param_);
        case Family::Geometric: {
            // largest m with (1-p)^(m-1) >= u
            double m = 1.0 + std::log(u) / std::log(1.0 - param_);
            uint64_t k = m < 1.0 ? 1 : static_cast<uint64_t>(m);
            return k < 1 ? 1 : k;
        }
        case Family::PowerLawTail: {
            // largest m with (3/m)^a >= u  <=>  m <= 3 u^(-1/a)
            double m = 3.0 * std::pow(u, -1.0 / param_);
            uint64_t k = static_cast<uint64_t>(m);
            return k < 3 ? 3 : k;
        }
        case Family::StretchedExpTail: {
            double inv_b = 1.0 / param_;
            double x = std::pow(3.0, inv_b) - std::log(u);
            uint64_t k = static_cast<uint64_t>(std::pow(x, param_));
            return k < 3 ? 3 : k;
        }
        case Family::ShiftedGeometric: {
            // largest m with (1-q)^m >= u
            double m = std::log(u) / std::log(1.0 - param_);
            return m < 0.0 ? 0 : static_cast<uint64_t>(m);
        }
    }
    return 0;
}

double DegreeDistribution::mean() const {
    switch (family_) {
        case Family::Deterministic: return param_;
        case Family::Geometric: return 1.0 / param_;
        case Family::PowerLawTail:
            // E d = sum_{m>=1} P(d >= m) = 2 + 3^a sum_{m>=3} m^-a
            return 2.0 + std::pow(3.0, param_) * zeta_tail(param_, 3);
        case Family::StretchedExpTail:
            return 2.0 + stretched_sum(param_, false);
        case Family::ShiftedGeometric: return (1.0 - param_) / param_;
    }
    return 0.0;
}

double DegreeDistribution::size_biased_mean() const {
    // E[d(d-1)] = 2 sum_{m>=1} (m-1) P(d >= m)
    switch (family_) {
        case Family::Deterministic:
            if (param_ == 0.0) throw std::domain_error("size_biased_mean: zero mean degree");
            return param_ - 1.0;
        case Family::Geometric:
            // E[d(d-1)] = 2(1-p)/p^2, E d = 1/p
            return 2.0 * (1.0 - param_) / param_;
        case Family::PowerLawTail: {
            double a = param_;
            double second = 2.0 * (1.0 + std::pow(3.0, a) * (zeta_tail(a - 1.0, 3) - zeta_tail(a, 3)));
            return second / mean();
        }
        case Family::StretchedExpTail: {
            double second = 2.0 * (1.0 + stretched_sum(param_, true));
            return second / mean();
        }
        case Family::ShiftedGeometric:
            // E[d(d-1)] = 2(1-q)^2/q^2, E d = (1-q)/q
            return 2.0 * (1.0 - param_) / param_;
    }
    return 0.0;
}

std::string DegreeDistribution::to_string() const {
    char buf[64];
    switch (family_) {
        case Family::Deterministic:
            std::snprintf(buf, sizeof buf, "det:d=%llu",
                          static_cast<unsigned long long>(param_));
            break;
        case Family::Geometric: std::snprintf(buf, sizeof buf, "geom:p=%g", param_); break;
        case Family::PowerLawTail: std::snprintf(buf, sizeof buf, "plaw:a=%g", param_); break;
        case Family::StretchedExpTail: std::snprintf(buf, sizeof buf, "sexp:b=%g", param_); break;
        case Family::ShiftedGeometric: std::snprintf(buf, sizeof buf, "sgeom:q=%g", param_); break;
    }
    return buf;
}

DegreeDistribution DegreeDistribution::parse(const std::string& spec) {
    auto colon = spec.find(':');
    auto eq = spec.find('=');
    if (colon == std::string::npos || eq == std::string::npos || eq < colon)
        throw std::invalid_argument("degree distribution spec must look like 'geom:p=0.5'");
    const std::string fam = spec.substr(0, colon);
    const std::string key = spec.substr(colon + 1, eq - colon - 1);
    double val;
    try {
        size_t used = 0;
        val = std::stod(spec.substr(eq + 1), &used);
        if (used != spec.size() - eq - 1) throw std::invalid_argument("trailing chars");
    } catch (const std::exception&) {
        throw std::invalid_argument("degree distribution spec: bad numeric value in '" + spec + "'");
    }
    if (fam == "det" && key == "d") return deterministic(static_cast<uint64_t>(val));
    if (fam == "geom" && key == "p") return geometric(val);
    if (fam == "plaw" && key == "a") return power_law_tail(val);
    if (fam == "sexp" && key == "b") return stretched_exp_tail(val);
    if (fam == "sgeom" && key == "q") return shifted_geometric(val);
    throw std::invalid_argument("unknown degree distribution spec '" + spec + "'");
}

} // namespace cplab
