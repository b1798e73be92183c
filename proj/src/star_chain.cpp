#include "cplab/star_chain.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cplab/linalg.hpp"

namespace cplab {

namespace {

ChainParams finish_params(double lambda, uint64_t k, ChainMode mode, double epsilon,
                          double p) {
    ChainParams c;
    c.lambda = lambda;
    c.k = k;
    c.mode = mode;
    c.epsilon = epsilon;
    c.p = p;
    c.L = p * static_cast<double>(k);
    c.L_floor = static_cast<int64_t>(std::floor(c.L));
    c.D = c.L + lambda * (1.0 - p) * static_cast<double>(k) + 1.0;
    c.theta_star = -std::log1p(lambda / 2.0);
    return c;
}

} // namespace

ChainParams make_params(double lambda, uint64_t k) {
    if (!(lambda > 0.0)) throw std::invalid_argument("make_params: lambda must be positive");
    if (k < 1) throw std::invalid_argument("make_params: k must be at least 1");
    return finish_params(lambda, k, ChainMode::FixedP, 0.0, lambda / (1.0 + 2.0 * lambda));
}

ChainParams make_params_small_lambda(double lambda, uint64_t k, double epsilon) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("make_params_small_lambda: lambda must be positive");
    if (k < 1) throw std::invalid_argument("make_params_small_lambda: k must be at least 1");
    if (!(lambda / (1.0 + 2.0 * lambda) < epsilon))
        throw std::invalid_argument(
            "make_params_small_lambda: requires lambda/(1+2 lambda) < epsilon "
            "(small-lambda supermartingale hypothesis)");
    return finish_params(lambda, k, ChainMode::SmallLambda, epsilon,
                         (1.0 - epsilon) * lambda / (1.0 + lambda));
}

uint64_t sample_N(double lambda, Rng& rng) {
    if (!(lambda > 0.0)) throw std::invalid_argument("sample_N: lambda must be positive");
    // P(N >= j) = (1+lambda)^-j; inversion on a uniform u in (0,1]
    const double u = rng.uniform_open01();
    double j = -std::log(u) / std::log1p(lambda);
    return j < 0.0 ? 0 : static_cast<uint64_t>(j);
}

YState step_Y(YState state, const ChainParams& c, Rng& rng) {
    const double u = rng.uniform01() * c.D;
    const double down = c.p * static_cast<double>(c.k);
    const double up = c.lambda * (1.0 - c.p) * static_cast<double>(c.k);
    int64_t y = state.y;
    if (u < down) {
        y = y > 0 ? y - 1 : 0;
    } else if (u < down + up) {
        y = std::min<int64_t>(y + 1, c.L_floor);
    } else {
        auto n = static_cast<int64_t>(sample_N(c.lambda, rng));
        y = y > n ? y - n : 0;
    }
    return {y};
}

double exact_drift(double theta, int64_t y, const ChainParams& c) {
    const double em = std::exp(-theta);
    if (!(em < 1.0 + c.lambda))
        throw std::invalid_argument("exact_drift: requires exp(-theta) < 1 + lambda");
    const double ey = std::exp(theta * static_cast<double>(y));
    const double k = static_cast<double>(c.k);
    const double up = (std::exp(theta) - 1.0) * c.lambda * (1.0 - c.p) * k;
    const double down = (em - 1.0) * c.p * k;
    const double bracket = (em - 1.0) / (1.0 + c.lambda - em);
    return ey * (up + down + bracket) / c.D;
}

namespace {

// Interior linear system for P(hit <= b before >= L_int).  States y in
// (b, L_int); N-jump mass that lands at or below b goes to the right-hand
// side, the j = 0 mass is a self-transition.
std::vector<double> hitting_system(const ChainParams& c, int64_t b, int64_t L_int) {
    const auto m = static_cast<size_t>(L_int - b - 1);
    const double down = c.p * static_cast<double>(c.k);
    const double up = c.lambda * (1.0 - c.p) * static_cast<double>(c.k);
    const double q = 1.0 / (1.0 + c.lambda); // P(N >= j) = q^j
    DenseMatrix a(m, m);
    std::vector<double> rhs(m, 0.0);
    auto col = [&](int64_t y) { return static_cast<size_t>(y - b - 1); };
    for (int64_t y = b + 1; y < L_int; ++y) {
        const size_t row = col(y);
        a(row, row) += 1.0;
        // down jump
        if (y - 1 <= b) rhs[row] += down / c.D;
        else a(row, col(y - 1)) -= down / c.D;
        // up jump; y + 1 <= L_int <= floor(L), so the cap cannot bind first
        if (y + 1 < L_int) a(row, col(y + 1)) -= up / c.D;
        // N jumps: P(N = j) = q^j (1 - q)
        for (int64_t j = 0; j < y - b; ++j)
            a(row, col(y - j)) -= std::pow(q, static_cast<double>(j)) * (1.0 - q) / c.D;
        rhs[row] += std::pow(q, static_cast<double>(y - b)) / c.D; // tail lands <= b
    }
    return solve_dense(a, rhs, 1e-12);
}

} // namespace

double hitting_prob_exact(const ChainParams& c, int64_t a, int64_t b, int64_t L_int,
                          size_t state_cap) {
    if (b < 0) throw std::invalid_argument("hitting_prob_exact: b must be nonnegative");
    if (L_int > c.L_floor)
        throw std::invalid_argument("hitting_prob_exact: L_int exceeds floor(L)");
    if (L_int <= b) throw std::invalid_argument("hitting_prob_exact: L_int must exceed b");
    if (a <= b) return 1.0;
    if (a >= L_int) return 0.0;
    const auto m = static_cast<size_t>(L_int - b - 1);
    if (m > state_cap)
        throw std::invalid_argument("hitting_prob_exact: interior exceeds the dense-solve cap");
    return hitting_system(c, b, L_int)[static_cast<size_t>(a - b - 1)];
}

ProbEstimate hitting_prob_mc(const ChainParams& c, int64_t a, int64_t b, int64_t L_int,
                             uint64_t reps, Rng& rng) {
    if (reps == 0) throw std::invalid_argument("hitting_prob_mc: reps must be positive");
    if (b < 0 || L_int > c.L_floor || L_int <= b + 1)
        throw std::invalid_argument("hitting_prob_mc: no interior states between b and L_int");
    if (!(a > b && a < L_int))
        throw std::invalid_argument("hitting_prob_mc: start must lie strictly between b and L_int");
    uint64_t hits = 0;
    for (uint64_t rep = 0; rep < reps; ++rep) {
        YState s{a};
        while (s.y > b && s.y < L_int) s = step_Y(s, c, rng);
        if (s.y <= b) ++hits;
    }
    return wilson_estimate(hits, reps);
}

ProbEstimate return_prob_mc(const ChainParams& c, int64_t b, uint64_t reps, Rng& rng) {
    if (reps == 0) throw std::invalid_argument("return_prob_mc: reps must be positive");
    if (b < 0 || b >= c.L_floor)
        throw std::invalid_argument("return_prob_mc: requires 0 <= b < floor(L)");
    uint64_t dips = 0;
    for (uint64_t rep = 0; rep < reps; ++rep) {
        YState s{c.L_floor};
        while (s.y == c.L_floor) s = step_Y(s, c, rng); // wait for the first real descent
        while (s.y > b && s.y < c.L_floor) s = step_Y(s, c, rng);
        if (s.y <= b) ++dips;
    }
    return wilson_estimate(dips, reps);
}

double return_prob_exact(const ChainParams& c, int64_t b) {
    if (b < 0 || b >= c.L_floor)
        throw std::invalid_argument("return_prob_exact: requires 0 <= b < floor(L)");
    const int64_t L = c.L_floor;
    const double down = c.p * static_cast<double>(c.k);
    const double q = 1.0 / (1.0 + c.lambda);
    std::vector<double> h; // h[y-b-1] = P_y(hit <= b before >= L)
    if (L - b - 1 > 0) h = hitting_system(c, b, L);
    auto hval = [&](int64_t y) { return y <= b ? 1.0 : h[static_cast<size_t>(y - b - 1)]; };

    // First effective jump from L: down with weight p k, N-jump j >= 1 with
    // weight P(N = j); N = 0 restarts and contributes the recursion term.
    double num = down * hval(L - 1);
    for (int64_t j = 1; j < L - b; ++j)
        num += std::pow(q, static_cast<double>(j)) * (1.0 - q) * hval(L - j);
    num += std::pow(q, static_cast<double>(L - b)); // overshoot tail
    const double den = down + 1.0 - (1.0 - q);      // D-weights: pk + 1 - P(N=0)
    return num / den;
}

} // namespace cplab
