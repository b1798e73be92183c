// Exact event-driven simulation of the contact process (SIS dynamics):
// infected vertices recover at rate 1 and push infection across each
// incident edge slot at rate lambda.  Self-loops carry no infection
// pressure; parallel edges multiply the rate.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cplab/fenwick.hpp"
#include "cplab/graph.hpp"
#include "cplab/rng.hpp"

namespace cplab {

enum class StopReason { Extinction, TimeHorizon, VertexInfected, CountAtLeast, CountAtMost };

const char* to_string(StopReason r);

// Flattened first-of stop condition: the run ends on whichever requested
// trigger fires first.  Extinction always ends a run (the state is
// absorbing); on_extinction records whether it was a *requested* trigger,
// which feeds the censoring flag.
struct StopCondition {
    bool on_extinction = false;
    std::optional<double> horizon;
    std::optional<uint32_t> vertex;
    std::optional<uint64_t> count_at_least;
    std::optional<uint64_t> count_at_most;

    static StopCondition extinction() {
        StopCondition s;
        s.on_extinction = true;
        return s;
    }
    static StopCondition time_horizon(double t) {
        if (t < 0.0) throw std::invalid_argument("time_horizon: T must be nonnegative");
        StopCondition s;
        s.horizon = t;
        return s;
    }
    static StopCondition vertex_infected(uint32_t v) {
        StopCondition s;
        s.vertex = v;
        return s;
    }
    static StopCondition count_at_least(uint64_t m) {
        StopCondition s;
        s.count_at_least = m;
        return s;
    }
    static StopCondition count_at_most(uint64_t m) {
        StopCondition s;
        s.count_at_most = m;
        return s;
    }
    // Merge: fires when any member fires.  Duplicate triggers rejected.
    StopCondition also(const StopCondition& o) const;
};

StopCondition first_of(std::initializer_list<StopCondition> conds);

struct SimOutcome {
    StopReason stop_reason = StopReason::Extinction;
    double stop_time = 0.0;
    uint64_t n_events = 0;
    uint64_t final_infected = 0;
    // Horizon fired while another requested trigger was still pending.
    bool censored = false;

    bool operator==(const SimOutcome&) const = default;
};

struct TrajectorySample {
    double time;
    uint64_t infected;
};

// Incremental event engine.  Aggregate-rate Gillespie: per infected vertex
// v we maintain its count of susceptible neighbor slots in a Fenwick tree,
// so the next infection slot is sampled exactly and updates cost
// O(deg log n).  Integer slot bookkeeping is audited against a from-scratch
// recount every 2^16 events.
class ContactProcess {
public:
    ContactProcess(const Graph& g, double lambda);

    void reset(const std::vector<uint32_t>& init);

    // Advances one event; returns false if the state is extinct (no event
    // possible).  last_infected() reports the vertex infected by the event,
    // or UINT32_MAX for a recovery.
    bool step(Rng& rng);

    double time() const { return time_; }
    uint64_t infected_count() const { return infected_list_.size(); }
    bool is_infected(uint32_t v) const { return infected_[v] != 0; }
    uint32_t last_infected() const { return last_infected_; }
    uint64_t n_events() const { return n_events_; }
    double total_rate() const;
    const Graph& graph() const { return g_; }

    // From-scratch recount of the susceptible-slot table; throws
    // std::logic_error on any drift.
    void audit() const;

private:
    void infect(uint32_t v);
    void recover(uint32_t v);
    int64_t count_susceptible_slots(uint32_t v) const;

    const Graph& g_;
    double lambda_;
    std::vector<uint8_t> infected_;
    std::vector<uint32_t> infected_list_;
    std::vector<uint32_t> pos_in_list_;
    FenwickTree slots_; // susceptible-slot count per infected vertex
    double time_ = 0.0;
    uint64_t n_events_ = 0;
    uint32_t last_infected_ = UINT32_MAX;
};

// Runs the process from the given infected set until the stop condition
// fires.  Optionally records (time, infected count) every traj_dt time
// units.  Rejects lambda < 0.
SimOutcome simulate(const Graph& g, double lambda, const std::vector<uint32_t>& init,
                    const StopCondition& stop, Rng& rng,
                    std::vector<TrajectorySample>* trajectory = nullptr, double traj_dt = 0.0);

// Stop at the first infection of target (must not be initially infected) or
// at the horizon, whichever comes first; extinction ends the run uncensored.
SimOutcome first_infection_time_of(const Graph& g, double lambda,
                                   const std::vector<uint32_t>& init, uint32_t target,
                                   double horizon, Rng& rng);

} // namespace cplab
