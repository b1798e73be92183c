#include "cplab/contact_process.hpp"

#include <algorithm>
#include <cmath>

namespace cplab {

const char* to_string(StopReason r) {
    switch (r) {
        case StopReason::Extinction: return "extinction";
        case StopReason::TimeHorizon: return "time_horizon";
        case StopReason::VertexInfected: return "vertex_infected";
        case StopReason::CountAtLeast: return "count_at_least";
        case StopReason::CountAtMost: return "count_at_most";
    }
    return "?";
}

StopCondition StopCondition::also(const StopCondition& o) const {
    StopCondition s = *this;
    s.on_extinction = s.on_extinction || o.on_extinction;
    auto merge = [](auto& dst, const auto& src, const char* what) {
        if (src) {
            if (dst) throw std::invalid_argument(std::string("StopCondition: duplicate ") + what);
            dst = src;
        }
    };
    merge(s.horizon, o.horizon, "horizon");
    merge(s.vertex, o.vertex, "vertex");
    merge(s.count_at_least, o.count_at_least, "count_at_least");
    merge(s.count_at_most, o.count_at_most, "count_at_most");
    return s;
}

StopCondition first_of(std::initializer_list<StopCondition> conds) {
    StopCondition s;
    for (const auto& c : conds) s = s.also(c);
    return s;
}

ContactProcess::ContactProcess(const Graph& g, double lambda) : g_(g), lambda_(lambda) {
    if (lambda < 0.0) throw std::invalid_argument("contact process: lambda must be nonnegative");
    const size_t n = g.n_vertices();
    infected_.assign(n, 0);
    pos_in_list_.assign(n, UINT32_MAX);
    slots_.reset(n);
}

int64_t ContactProcess::count_susceptible_slots(uint32_t v) const {
    int64_t s = 0;
    for (uint32_t w : g_.adjacency[v])
        if (w != v && !infected_[w]) ++s;
    return s;
}

void ContactProcess::infect(uint32_t v) {
    infected_[v] = 1;
    pos_in_list_[v] = static_cast<uint32_t>(infected_list_.size());
    infected_list_.push_back(v);
    slots_.set(v, count_susceptible_slots(v));
    for (uint32_t w : g_.adjacency[v])
        if (w != v && infected_[w]) slots_.add(w, -1);
}

void ContactProcess::recover(uint32_t v) {
    infected_[v] = 0;
    uint32_t pos = pos_in_list_[v];
    uint32_t back = infected_list_.back();
    infected_list_[pos] = back;
    pos_in_list_[back] = pos;
    infected_list_.pop_back();
    pos_in_list_[v] = UINT32_MAX;
    slots_.set(v, 0);
    for (uint32_t w : g_.adjacency[v])
        if (w != v && infected_[w]) slots_.add(w, +1);
}

void ContactProcess::reset(const std::vector<uint32_t>& init) {
    std::fill(infected_.begin(), infected_.end(), 0);
    std::fill(pos_in_list_.begin(), pos_in_list_.end(), UINT32_MAX);
    infected_list_.clear();
    slots_.reset(g_.n_vertices());
    time_ = 0.0;
    n_events_ = 0;
    last_infected_ = UINT32_MAX;
    for (uint32_t v : init) {
        if (v >= g_.n_vertices())
            throw std::invalid_argument("contact process: initial vertex out of range");
        if (!infected_[v]) infect(v);
    }
}

double ContactProcess::total_rate() const {
    return static_cast<double>(infected_list_.size()) +
           lambda_ * static_cast<double>(slots_.total());
}

void ContactProcess::audit() const {
    int64_t total = 0;
    for (uint32_t v = 0; v < g_.n_vertices(); ++v) {
        int64_t expect = infected_[v] ? count_susceptible_slots(v) : 0;
        if (slots_.value(v) != expect)
            throw std::logic_error("contact process: slot count drifted");
        total += expect;
    }
    if (total != slots_.total())
        throw std::logic_error("contact process: total slot count drifted");
}

bool ContactProcess::step(Rng& rng) {
    last_infected_ = UINT32_MAX;
    const auto n_inf = static_cast<double>(infected_list_.size());
    if (infected_list_.empty()) return false;
    const int64_t slot_total = slots_.total();
    const double rate = n_inf + lambda_ * static_cast<double>(slot_total);
    time_ += rng.exponential(rate);
    ++n_events_;

    const double u = rng.uniform01() * rate;
    if (u < n_inf || slot_total == 0) {
        recover(infected_list_[rng.below(infected_list_.size())]);
    } else {
        // Uniform infected->susceptible slot: Fenwick search picks the
        // source, then the offset selects among its susceptible slots.
        int64_t target_slot = static_cast<int64_t>(rng.below(static_cast<uint64_t>(slot_total)));
        int64_t before = 0;
        auto v = static_cast<uint32_t>(slots_.find(target_slot, before));
        int64_t offset = target_slot - before;
        uint32_t chosen = UINT32_MAX;
        for (uint32_t w : g_.adjacency[v]) {
            if (w == v || infected_[w]) continue;
            if (offset == 0) {
                chosen = w;
                break;
            }
            --offset;
        }
        if (chosen == UINT32_MAX) throw std::logic_error("contact process: slot scan failed");
        infect(chosen);
        last_infected_ = chosen;
    }
    if ((n_events_ & 0xFFFF) == 0) audit();
    return true;
}

namespace {

struct StopEval {
    const StopCondition& stop;

    bool pending_other(const ContactProcess& cp, uint32_t target_hit) const {
        if (stop.on_extinction && cp.infected_count() > 0) return true;
        if (stop.vertex && target_hit == 0) return true;
        if (stop.count_at_least && cp.infected_count() < *stop.count_at_least) return true;
        if (stop.count_at_most && cp.infected_count() > *stop.count_at_most) return true;
        return false;
    }
};

} // namespace

SimOutcome simulate(const Graph& g, double lambda, const std::vector<uint32_t>& init,
                    const StopCondition& stop, Rng& rng,
                    std::vector<TrajectorySample>* trajectory, double traj_dt) {
    if (stop.vertex && *stop.vertex >= g.n_vertices())
        throw std::invalid_argument("simulate: stop vertex out of range");
    ContactProcess cp(g, lambda);
    cp.reset(init);

    uint32_t target_hit = 0; // 1 once stop.vertex has been infected
    if (stop.vertex && cp.is_infected(*stop.vertex)) target_hit = 1;

    double next_sample = 0.0;
    auto emit_samples_until = [&](double t, uint64_t count) {
        if (!trajectory || traj_dt <= 0.0) return;
        while (next_sample <= t) {
            trajectory->push_back({next_sample, count});
            next_sample += traj_dt;
        }
    };

    auto finish = [&](StopReason r, double t) {
        emit_samples_until(t, cp.infected_count());
        SimOutcome out;
        out.stop_reason = r;
        out.stop_time = t;
        out.n_events = cp.n_events();
        out.final_infected = cp.infected_count();
        out.censored =
            r == StopReason::TimeHorizon && StopEval{stop}.pending_other(cp, target_hit);
        return out;
    };

    // Conditions already satisfied at time zero resolve immediately.
    auto check_state = [&]() -> std::optional<StopReason> {
        if (stop.vertex && target_hit) return StopReason::VertexInfected;
        if (stop.count_at_least && cp.infected_count() >= *stop.count_at_least)
            return StopReason::CountAtLeast;
        if (stop.count_at_most && cp.infected_count() <= *stop.count_at_most)
            return StopReason::CountAtMost;
        if (cp.infected_count() == 0) return StopReason::Extinction;
        return std::nullopt;
    };

    if (auto r = check_state()) return finish(*r, 0.0);
    if (stop.horizon && *stop.horizon == 0.0) return finish(StopReason::TimeHorizon, 0.0);

    while (true) {
        uint64_t count_before = cp.infected_count();
        if (!cp.step(rng)) return finish(StopReason::Extinction, cp.time());
        if (stop.horizon && cp.time() > *stop.horizon) {
            // The event lies beyond the horizon: the run stops at the
            // horizon in the pre-event state.
            emit_samples_until(*stop.horizon, count_before);
            SimOutcome out;
            out.stop_reason = StopReason::TimeHorizon;
            out.stop_time = *stop.horizon;
            out.n_events = cp.n_events() - 1;
            out.final_infected = count_before;
            bool pending = false;
            if (stop.on_extinction && count_before > 0) pending = true;
            if (stop.vertex && !target_hit) pending = true;
            if (stop.count_at_least && count_before < *stop.count_at_least) pending = true;
            if (stop.count_at_most && count_before > *stop.count_at_most) pending = true;
            out.censored = pending;
            return out;
        }
        emit_samples_until(cp.time(), count_before);
        if (stop.vertex && cp.last_infected() == *stop.vertex) target_hit = 1;
        if (auto r = check_state()) return finish(*r, cp.time());
    }
}

SimOutcome first_infection_time_of(const Graph& g, double lambda,
                                   const std::vector<uint32_t>& init, uint32_t target,
                                   double horizon, Rng& rng) {
    for (uint32_t v : init)
        if (v == target)
            throw std::invalid_argument("first_infection_time_of: target initially infected");
    return simulate(g, lambda, init,
                    first_of({StopCondition::vertex_infected(target),
                              StopCondition::time_horizon(horizon)}),
                    rng);
}

} // namespace cplab
