// The reduced discrete-time chain on the number of infected star leaves,
// observed while the center is infected.  One step:
//
//     y -> y - 1                  with prob  p k / D
//     y -> min(y + 1, floor(L))   with prob  lambda (1-p) k / D
//     y -> max(y - N, 0)          with prob  1 / D
//
// where N is shifted-geometric, P(N = j) = (1/(1+lambda))^j lambda/(1+lambda),
// L = p k and D = p k + lambda (1-p) k + 1.  Two parameterizations:
// FixedP uses p = lambda/(1+2 lambda); SmallLambda uses
// p = (1-eps) lambda/(1+lambda), valid when lambda/(1+2 lambda) < eps.
#pragma once

#include <cstdint>

#include "cplab/rng.hpp"
#include "cplab/stats.hpp"

namespace cplab {

enum class ChainMode { FixedP, SmallLambda };

struct ChainParams {
    double lambda = 0.0;
    uint64_t k = 0;
    ChainMode mode = ChainMode::FixedP;
    double epsilon = 0.0; // SmallLambda only

    double p = 0.0;
    double L = 0.0;          // p k
    int64_t L_floor = 0;     // jump cap; thresholds compare on integers
    double D = 0.0;          // p k + lambda (1-p) k + 1
    double theta_star = 0.0; // exp(theta_star) = 1/(1 + lambda/2)
};

ChainParams make_params(double lambda, uint64_t k);
// Rejects epsilon <= lambda/(1+2 lambda) (the small-lambda drift hypothesis).
ChainParams make_params_small_lambda(double lambda, uint64_t k, double epsilon);

// P(N = j) = (1/(1+lambda))^j * lambda/(1+lambda), j >= 0, by inversion.
uint64_t sample_N(double lambda, Rng& rng);

struct YState {
    int64_t y = 0;
};

YState step_Y(YState state, const ChainParams& params, Rng& rng);

// Exact one-step drift E[exp(theta Y') - exp(theta y) | y] at interior y
// (0 < y < L, cap and truncation not binding), with the geometric series
// summed in closed form: the bracket term is (e^-theta - 1)/(1+lambda-e^-theta).
// Requires e^-theta < 1 + lambda (else the series diverges).
double exact_drift(double theta, int64_t y, const ChainParams& params);

// Exact absorption probability of {y <= b} before {y >= L_int} from a, by a
// dense first-passage solve over the interior states.  Degenerate starts
// return the absorbed value (a <= b -> 1, a >= L_int -> 0).  N-jumps that
// overshoot below b are absorbed at the lower boundary.
double hitting_prob_exact(const ChainParams& params, int64_t a, int64_t b, int64_t L_int,
                          size_t state_cap = 10000);

ProbEstimate hitting_prob_mc(const ChainParams& params, int64_t a, int64_t b, int64_t L_int,
                             uint64_t reps, Rng& rng);

// Start at floor(L); estimate P(reach <= b before returning to floor(L)
// after first leaving it downward).
ProbEstimate return_prob_mc(const ChainParams& params, int64_t b, uint64_t reps, Rng& rng);

// Exact value of the return probability via first-jump decomposition over
// hitting_prob_exact.
double return_prob_exact(const ChainParams& params, int64_t b);

} // namespace cplab
