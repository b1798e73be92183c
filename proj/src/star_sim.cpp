#include "cplab/star_sim.hpp"

#include <stdexcept>

#include "cplab/linalg.hpp"

namespace cplab {

StarProcess::StarProcess(uint64_t k, double lambda, StarState init)
    : k_(k), lambda_(lambda), s_(init) {
    if (k == 0) throw std::invalid_argument("star process: k must be at least 1");
    if (lambda < 0.0) throw std::invalid_argument("star process: lambda must be nonnegative");
    if (init.leaves > k) throw std::invalid_argument("star process: leaf count exceeds k");
}

double StarProcess::total_rate() const {
    const auto i = static_cast<double>(s_.leaves);
    if (s_.center) return lambda_ * static_cast<double>(k_ - s_.leaves) + i + 1.0;
    return lambda_ * i + i;
}

bool StarProcess::step(Rng& rng) {
    if (s_.absorbed()) return false;
    const double rate = total_rate();
    t_ += rng.exponential(rate);
    ++n_events_;
    const double u = rng.uniform01() * rate;
    const auto i = static_cast<double>(s_.leaves);
    if (s_.center) {
        const double up = lambda_ * static_cast<double>(k_ - s_.leaves);
        if (u < up) {
            ++s_.leaves;
        } else if (u < up + i) {
            --s_.leaves;
        } else {
            s_.center = false;
        }
    } else {
        const double reinfect = lambda_ * i;
        if (u < reinfect) {
            s_.center = true;
        } else {
            --s_.leaves;
        }
    }
    return true;
}

SimOutcome simulate_star(uint64_t k, double lambda, StarState init, const StopCondition& stop,
                         Rng& rng) {
    if (stop.vertex)
        throw std::invalid_argument("simulate_star: vertex stop condition not supported");
    StarProcess sp(k, lambda, init);

    auto pending = [&](uint64_t count) {
        if (stop.on_extinction && count > 0) return true;
        if (stop.count_at_least && count < *stop.count_at_least) return true;
        if (stop.count_at_most && count > *stop.count_at_most) return true;
        return false;
    };
    auto check_state = [&](uint64_t count) -> std::optional<StopReason> {
        if (stop.count_at_least && count >= *stop.count_at_least)
            return StopReason::CountAtLeast;
        if (stop.count_at_most && count <= *stop.count_at_most) return StopReason::CountAtMost;
        if (count == 0) return StopReason::Extinction;
        return std::nullopt;
    };
    auto finish = [&](StopReason r, double t, uint64_t count, uint64_t events) {
        SimOutcome out;
        out.stop_reason = r;
        out.stop_time = t;
        out.n_events = events;
        out.final_infected = count;
        out.censored = r == StopReason::TimeHorizon && pending(count);
        return out;
    };

    if (auto r = check_state(sp.state().total()))
        return finish(*r, 0.0, sp.state().total(), 0);
    if (stop.horizon && *stop.horizon == 0.0)
        return finish(StopReason::TimeHorizon, 0.0, sp.state().total(), 0);

    while (true) {
        uint64_t count_before = sp.state().total();
        if (!sp.step(rng))
            return finish(StopReason::Extinction, sp.time(), 0, sp.n_events());
        if (stop.horizon && sp.time() > *stop.horizon)
            return finish(StopReason::TimeHorizon, *stop.horizon, count_before,
                          sp.n_events() - 1);
        if (auto r = check_state(sp.state().total()))
            return finish(*r, sp.time(), sp.state().total(), sp.n_events());
    }
}

double exact_star_mean_extinction(uint64_t k, double lambda, StarState init, uint64_t k_cap) {
    if (k == 0) throw std::invalid_argument("exact_star_mean_extinction: k must be at least 1");
    if (k > k_cap)
        throw std::invalid_argument(
            "exact_star_mean_extinction: k above the dense-solve cap");
    if (lambda < 0.0) throw std::invalid_argument("exact_star_mean_extinction: lambda < 0");
    if (init.leaves > k)
        throw std::invalid_argument("exact_star_mean_extinction: leaf count exceeds k");
    if (init.absorbed()) return 0.0;

    // Unknowns: E[T_(0,0)] from every transient state (i,j) != (0,0),
    // indexed as 2i + j - 1.
    auto idx = [](uint64_t i, int j) { return 2 * i + static_cast<uint64_t>(j) - 1; };
    const size_t n = 2 * (k + 1) - 1;
    DenseMatrix a(n, n);
    std::vector<double> b(n, 0.0);

    for (uint64_t i = 0; i <= k; ++i) {
        for (int j = 0; j <= 1; ++j) {
            if (i == 0 && j == 0) continue;
            const size_t row = idx(i, j);
            double rate_sum = 0.0;
            struct T { uint64_t i; int j; double r; };
            T out[3];
            int nt = 0;
            if (j == 1) {
                if (i < k) out[nt++] = {i + 1, 1, lambda * static_cast<double>(k - i)};
                if (i > 0) out[nt++] = {i - 1, 1, static_cast<double>(i)};
                out[nt++] = {i, 0, 1.0};
            } else {
                out[nt++] = {i, 1, lambda * static_cast<double>(i)};
                out[nt++] = {i - 1, 0, static_cast<double>(i)};
            }
            for (int t = 0; t < nt; ++t) rate_sum += out[t].r;
            a(row, row) = 1.0;
            b[row] = 1.0 / rate_sum;
            for (int t = 0; t < nt; ++t) {
                if (out[t].i == 0 && out[t].j == 0) continue;
                a(row, idx(out[t].i, out[t].j)) -= out[t].r / rate_sum;
            }
        }
    }
    std::vector<double> x = solve_dense(a, b, 1e-10);
    return x[idx(init.leaves, init.center ? 1 : 0)];
}

} // namespace cplab
