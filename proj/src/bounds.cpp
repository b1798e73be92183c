#include "cplab/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cplab {

double exit_bound(double a, double b, double lambda) {
    if (!(b < a)) throw std::invalid_argument("exit_bound: requires b < a");
    if (!(lambda > 0.0)) throw std::invalid_argument("exit_bound: lambda must be positive");
    return std::pow(1.0 + lambda / 2.0, b - a);
}

LifeBound life_bound(double k, double lambda, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 0.5))
        throw std::invalid_argument("life_bound: requires 0 < epsilon < 1/2");
    if (!(lambda >= 0.0) || !(k >= 1.0))
        throw std::invalid_argument("life_bound: requires lambda >= 0 and k >= 1");
    LifeBound r;
    r.L = lambda * k / (1.0 + 2.0 * lambda);
    r.b = epsilon * r.L;
    r.survival_horizon = std::pow(1.0 + lambda / 2.0, r.L * (1.0 - 2.0 * epsilon)) /
                         ((2.0 + lambda) * 2.0 * k);
    r.fail_prob = (3.0 + lambda) * std::pow(1.0 + lambda / 2.0, -epsilon * r.L);
    r.vacuous = r.fail_prob >= 1.0;
    return r;
}

double return_bound(double lambda, double L, double b) {
    if (!(b < L)) throw std::invalid_argument("return_bound: requires b < L");
    return (2.0 + lambda) * std::pow(1.0 + lambda / 2.0, b - L);
}

IgniteBounds ignite_bounds(double k, double lambda) {
    if (!(k >= 1.0) || !(lambda > 0.0))
        throw std::invalid_argument("ignite_bounds: requires k >= 1 and lambda > 0");
    IgniteBounds r;
    const double k13 = std::pow(k, -1.0 / 3.0);
    r.K = lambda * std::pow(k, 1.0 / 3.0);
    r.fail_reach_K = 2.0 * lambda * k13;
    r.fail_reach_L = k13;
    r.mean_time_to_L = 2.0 / lambda;
    r.fail_reach_K_vacuous = r.fail_reach_K >= 1.0;
    r.fail_reach_L_vacuous = r.fail_reach_L >= 1.0;
    return r;
}

GoodBound good_bound(double k, double lambda) {
    if (!(k >= 1.0) || !(lambda > 0.0))
        throw std::invalid_argument("good_bound: requires k >= 1 and lambda > 0");
    GoodBound r;
    r.prob = 1.0 - (2.0 + 2.0 * lambda) * std::pow(k, -1.0 / 3.0);
    r.vacuous = r.prob <= 0.0;
    return r;
}

double survival_ub(double n, double lambda, double epsilon) {
    if (!(n >= 2.0)) throw std::invalid_argument("survival_ub: requires n >= 2");
    if (epsilon < 0.0) throw std::invalid_argument("survival_ub: epsilon must be nonnegative");
    return std::log(n) * std::exp((1.0 + epsilon) * lambda * lambda * n);
}

double transfer_bound(uint64_t r, double lambda, double epsilon) {
    if (r < 1) throw std::invalid_argument("transfer_bound: r must be at least 1");
    if (!(epsilon >= 0.0 && epsilon < 1.0))
        throw std::invalid_argument("transfer_bound: requires 0 <= epsilon < 1");
    const double lhat = (1.0 - epsilon) * lambda / (lambda + 1.0);
    return std::pow(lhat, static_cast<double>(r));
}

double infect_bound(uint64_t r, uint64_t m, double lambda, double epsilon) {
    if (m == 0) return 1.0; // no attempts
    const double lr = transfer_bound(r, lambda, epsilon);
    // (1 - x)^m evaluated stably in log space
    return std::exp(static_cast<double>(m) * std::log1p(-lr));
}

double gamma_factor(double lambda, double r_over_k, double epsilon) {
    if (!(r_over_k > 0.0)) throw std::invalid_argument("gamma_factor: r/k must be positive");
    if (!(epsilon >= 0.0 && epsilon < 0.5))
        throw std::invalid_argument("gamma_factor: requires 0 <= epsilon < 1/2");
    if (!(lambda > 0.0)) return 0.0;
    const double lhat = (1.0 - epsilon) * lambda / (lambda + 1.0);
    const double exponent = (1.0 - 2.0 * epsilon) * lambda / (1.0 + 2.0 * lambda);
    return std::pow(lhat, r_over_k) * std::pow(1.0 + lambda / 2.0, exponent);
}

SuffResult suff_condition(double lambda, double p, double epsilon) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("suff_condition: requires 0 < p < 1");
    if (!(lambda > 0.0)) throw std::invalid_argument("suff_condition: lambda must be positive");
    SuffResult r;
    r.r_over_k = std::log1p(-p) / std::log(p);
    r.value = gamma_factor(lambda, r.r_over_k, epsilon);
    r.holds = r.value > 1.0;
    return r;
}

Lambda2Result lambda2_upper(double p, double epsilon, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("lambda2_upper: tol must be positive");
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("lambda2_upper: requires 0 < p < 1");
    Lambda2Result r;
    double lo = 1e-6, hi = 2.0;
    if (!suff_condition(hi, p, epsilon).holds) {
        // Condition fails on the whole bracket: fall back to the generic
        // cap (any tree with offspring >= 1 contains a copy of the line).
        r.value = 2.0;
        r.capped = true;
        r.uncapped = std::numeric_limits<double>::infinity();
        return r;
    }
    if (suff_condition(lo, p, epsilon).holds) {
        r.value = lo;
        r.uncapped = lo;
        return r;
    }
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (suff_condition(mid, p, epsilon).holds) hi = mid;
        else lo = mid;
    }
    r.uncapped = 0.5 * (lo + hi);
    r.value = std::min(2.0, r.uncapped);
    r.capped = r.uncapped >= 2.0;
    return r;
}

double lambda1_upper(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("lambda1_upper: requires 0 < p < 1");
    return p / (1.0 - p);
}

Life2Bound life2_bound(double k, double lambda, double epsilon) {
    if (!(lambda > 0.0) || !(k >= 1.0))
        throw std::invalid_argument("life2_bound: requires lambda > 0 and k >= 1");
    if (!(lambda / (1.0 + 2.0 * lambda) < epsilon))
        throw std::invalid_argument(
            "life2_bound: requires lambda/(1+2 lambda) < epsilon "
            "(small-lambda supermartingale hypothesis)");
    if (!(epsilon < 0.25))
        throw std::invalid_argument("life2_bound: requires epsilon < 1/4");
    Life2Bound r;
    const double l2k = lambda * lambda * k;
    r.survival_horizon = std::exp((1.0 - 4.0 * epsilon) * l2k / 4.0);
    r.fail_prob = 4.0 * std::exp(-(1.0 - 3.0 * epsilon) * l2k / 4.0);
    r.vacuous = r.fail_prob >= 1.0;
    return r;
}

Ignite2Bounds ignite2_bounds(double k, double lambda, double epsilon) {
    if (!(k > 1.0) || !(lambda > 0.0))
        throw std::invalid_argument("ignite2_bounds: requires k > 1 and lambda > 0");
    if (!(epsilon > 0.0)) throw std::invalid_argument("ignite2_bounds: epsilon must be positive");
    Ignite2Bounds r;
    const double slk = std::sqrt(std::log(k));
    r.K = lambda * k / slk;
    r.fail_reach_K = 5.0 / slk;
    r.fail_reach_L = std::exp(-lambda * lambda * k / (2.0 * slk));
    r.mean_time = 2.0 / epsilon;
    r.fail_reach_K_vacuous = r.fail_reach_K >= 1.0;
    r.fail_reach_L_vacuous = r.fail_reach_L >= 1.0;
    return r;
}

PushBounds push_bounds(double n, double nu, double lambda) {
    if (!(lambda > 0.0 && lambda < 2.0))
        throw std::invalid_argument("push_bounds: requires 0 < lambda < 2");
    if (!(nu > 0.0)) throw std::invalid_argument("push_bounds: nu must be positive");
    if (!(n >= 2.0)) throw std::invalid_argument("push_bounds: requires n >= 2");
    PushBounds r;
    const double c = std::log(2.0 / lambda);
    r.kappa = std::pow(n, 3.0 * nu * c);
    r.xfer_prob = 1.0 - std::exp(-std::pow(n, nu * c));
    return r;
}

Schedule schedule_lambda(double n, ScheduleFamily family, double a_or_b, double eta) {
    if (!(n >= 2.0)) throw std::invalid_argument("schedule_lambda: requires n >= 2");
    Schedule s;
    switch (family) {
        case ScheduleFamily::PowerLaw: {
            if (!(eta > 0.0 && eta < 0.5))
                throw std::invalid_argument("schedule_lambda: powerlaw requires 0 < eta < 1/2");
            const double a = a_or_b;
            if (!(a > 2.0)) throw std::invalid_argument("schedule_lambda: requires a > 2");
            s.lambda = std::pow(n, -(1.0 - 2.0 * eta) / (2.0 * a));
            s.star_threshold = std::pow(n, (1.0 - eta) / a);
            break;
        }
        case ScheduleFamily::Stretched: {
            const double b = a_or_b;
            if (!(b > 1.0)) throw std::invalid_argument("schedule_lambda: requires b > 1");
            if (!(eta > 0.0 && eta <= 1.0))
                throw std::invalid_argument("schedule_lambda: stretched requires 0 < eta <= 1");
            const double ln = std::log(n);
            s.lambda = std::pow(ln, (1.0 - eta) * (1.0 - b) / 2.0);
            s.star_threshold = std::pow(eta, b) * std::pow(ln, b);
            break;
        }
        case ScheduleFamily::WangPowerLaw: {
            const double a = a_or_b;
            if (!(a > 2.0)) throw std::invalid_argument("schedule_lambda: requires a > 2");
            s.lambda = std::pow(n, -1.0 / (2.0 * a));
            s.star_threshold = std::pow(n, 1.0 / a); // top-degree scale
            break;
        }
        case ScheduleFamily::WangStretched: {
            const double b = a_or_b;
            if (!(b > 1.0)) throw std::invalid_argument("schedule_lambda: requires b > 1");
            const double ln = std::log(n);
            s.lambda = std::pow(ln, -b / 2.0);
            s.star_threshold = std::pow(ln, b);
            break;
        }
    }
    return s;
}

std::vector<ExponentRow> critical_exponent_curves(const std::vector<double>& alphas) {
    std::vector<ExponentRow> rows;
    rows.reserve(alphas.size());
    for (double alpha : alphas) {
        if (!(alpha > 2.0 && alpha <= 4.5))
            throw std::invalid_argument("critical_exponent_curves: alpha grid must lie in (2, 4.5]");
        ExponentRow r;
        r.alpha = alpha;
        if (alpha < 3.0) r.beta_meanfield = 1.0 / (3.0 - alpha);
        else if (alpha == 3.0) r.beta_meanfield = std::numeric_limits<double>::infinity();
        else if (alpha <= 4.0) r.beta_meanfield = 1.0 / (alpha - 3.0);
        else r.beta_meanfield = 1.0;
        r.beta_rigorous = alpha <= 2.5 ? 1.0 / (3.0 - alpha) : 2.0 * alpha - 3.0;
        rows.push_back(r);
    }
    return rows;
}

std::vector<CurvePoint> lambda_curve(double p_min, double p_max, double step, double epsilon,
                                     double tol) {
    if (!(step > 0.0)) throw std::invalid_argument("lambda_curve: step must be positive");
    std::vector<CurvePoint> pts;
    for (int i = 0;; ++i) {
        double p = p_min + step * i;
        if (p > p_max + 1e-12) break;
        Lambda2Result l2 = lambda2_upper(p, epsilon, tol);
        pts.push_back({p, l2.value, lambda1_upper(p), l2.capped});
    }
    return pts;
}

} // namespace cplab
