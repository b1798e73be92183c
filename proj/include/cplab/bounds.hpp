// Closed-form persistence / hitting bounds for the star chain, the
// threshold conditions for geometric-offspring trees, and the scheduled
// infection rates for configuration-model families.  All logarithms are
// natural.  Probability bounds keep their raw value; a vacuous flag marks
// bounds that carry no information (raw >= 1 for an upper bound on a
// probability, <= 0 for a lower bound).
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cplab {

struct BoundReport {
    std::string name;
    std::map<std::string, double> inputs;
    std::vector<std::pair<std::string, double>> values;
    bool vacuous = false;
};

// (1 + lambda/2)^(b-a), the chance of sliding from a down to b before
// reaching the cap; requires b < a.
double exit_bound(double a, double b, double lambda);

struct LifeBound {
    double L = 0.0;
    double b = 0.0;                // eps * L
    double survival_horizon = 0.0; // S
    double fail_prob = 0.0;        // raw (3+lambda)(1+lambda/2)^(-eps L)
    bool vacuous = false;
};
// Survival horizon S = (1+lambda/2)^(L(1-2 eps)) / (2k(2+lambda)) with
// failure probability (3+lambda)(1+lambda/2)^(-eps L); FixedP L.
// Requires 0 < eps < 1/2.
LifeBound life_bound(double k, double lambda, double epsilon);

// (2+lambda)(1+lambda/2)^(b-L): dip below b before returning to L.
double return_bound(double lambda, double L, double b);

struct IgniteBounds {
    double K = 0.0;                 // lambda k^(1/3)
    double fail_reach_K = 0.0;      // P(extinct before K)    <= 2 lambda k^(-1/3)
    double fail_reach_L = 0.0;      // P(extinct before L | K) <= k^(-1/3)
    double mean_time_to_L = 0.0;    // E[T_L | success]        <= 2/lambda
    bool fail_reach_K_vacuous = false;
    bool fail_reach_L_vacuous = false;
};
IgniteBounds ignite_bounds(double k, double lambda);

struct GoodBound {
    double prob = 0.0; // lower bound 1 - (2+2 lambda) k^(-1/3)
    bool vacuous = false;
};
GoodBound good_bound(double k, double lambda);

// (log n) exp((1+eps) lambda^2 n): mean time to extinction from the
// quasi-stationary leaf count.  Requires n >= 2, eps >= 0.
double survival_ub(double n, double lambda, double epsilon);

// lambda_hat^r with lambda_hat = (1-eps) lambda/(1+lambda): relay success
// along a path of length r.
double transfer_bound(uint64_t r, double lambda, double epsilon);

// (1 - lambda_hat^r)^m: no transfer in m attempts (m = 0 gives 1).
double infect_bound(uint64_t r, uint64_t m, double lambda, double epsilon);

// Gamma = ((1-eps) lambda/(1+lambda))^(r/k) (1+lambda/2)^((1-2 eps) lambda/(1+2 lambda)).
double gamma_factor(double lambda, double r_over_k, double epsilon);

struct SuffResult {
    double value = 0.0;
    double r_over_k = 0.0;
    bool holds = false; // value > 1
};
// Threshold condition for geometric(p) offspring: gamma_factor evaluated at
// r/k = log(1-p)/log(p).
SuffResult suff_condition(double lambda, double p, double epsilon);

struct Lambda2Result {
    double value = 0.0;
    bool capped = false;    // the generic cap at 2 engaged
    double uncapped = 0.0;  // bisection crossing when found, else +inf
};
// Smallest lambda satisfying suff_condition, capped at 2; bisection on
// [1e-6, 2] to tolerance tol (monotone condition value in lambda).
Lambda2Result lambda2_upper(double p, double epsilon, double tol);

// p/(1-p): global-survival threshold bound for geometric(p) offspring.
double lambda1_upper(double p);

struct Life2Bound {
    double survival_horizon = 0.0; // exp((1-4 eps) lambda^2 k / 4)
    double fail_prob = 0.0;        // 4 exp(-(1-3 eps) lambda^2 k / 4)
    bool vacuous = false;
};
// Small-lambda persistence horizon; requires lambda/(1+2 lambda) < eps < 1/4.
Life2Bound life2_bound(double k, double lambda, double epsilon);

struct Ignite2Bounds {
    double K = 0.0;              // lambda k / sqrt(log k)
    double fail_reach_K = 0.0;   // <= 5/sqrt(log k)
    double fail_reach_L = 0.0;   // <= exp(-lambda^2 k / (2 sqrt(log k)))
    double mean_time = 0.0;      // <= 2/eps
    bool fail_reach_K_vacuous = false;
    bool fail_reach_L_vacuous = false;
};
Ignite2Bounds ignite2_bounds(double k, double lambda, double epsilon);

struct PushBounds {
    double kappa = 0.0;     // n^(3 nu log(2/lambda))
    double xfer_prob = 0.0; // >= 1 - exp(-n^(nu log(2/lambda)))
};
// Requires lambda < 2 and nu > 0.
PushBounds push_bounds(double n, double nu, double lambda);

enum class ScheduleFamily { PowerLaw, Stretched, WangPowerLaw, WangStretched };

struct Schedule {
    double lambda = 0.0;
    double star_threshold = 0.0; // degree above which a vertex counts as a star
};
// Scheduled infection rate lambda(n) per family:
//   PowerLaw(a, eta):   n^(-(1-2 eta)/(2a)),  star threshold n^((1-eta)/a)
//   Stretched(b, eta):  (log n)^((1-eta)(1-b)/2),  threshold eta^b (log n)^b
//   WangPowerLaw(a):    n^(-1/(2a))        (1/Lambda prediction)
//   WangStretched(b):   (log n)^(-b/2)
Schedule schedule_lambda(double n, ScheduleFamily family, double a_or_b, double eta);

struct ExponentRow {
    double alpha = 0.0;
    double beta_meanfield = 0.0;
    double beta_rigorous = 0.0;
};
// Equilibrium-density exponents: mean-field beta vs the rigorous exponent
// (1/(3-alpha) up to 5/2, then 2 alpha - 3).  Grid values in (2, 4.5].
std::vector<ExponentRow> critical_exponent_curves(const std::vector<double>& alphas);

struct CurvePoint {
    double p = 0.0;
    double lambda2 = 0.0;
    double lambda1 = 0.0;
    bool capped = false;
};
std::vector<CurvePoint> lambda_curve(double p_min, double p_max, double step, double epsilon,
                                     double tol);

} // namespace cplab
