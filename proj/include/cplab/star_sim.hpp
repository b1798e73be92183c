// Reduced continuous-time chain for the contact process on a star: the
// state is (infected leaf count, center indicator), a 2(k+1)-state CTMC
// distributionally identical to the full simulation on the star graph.
#pragma once

#include <cstdint>

#include "cplab/contact_process.hpp"
#include "cplab/rng.hpp"

namespace cplab {

struct StarState {
    uint64_t leaves = 0; // infected leaf count, 0..k
    bool center = false;

    uint64_t total() const { return leaves + (center ? 1 : 0); }
    bool absorbed() const { return leaves == 0 && !center; }
};

// One-event stepper.  From (i,1): i -> i+1 at rate lambda (k-i),
// i -> i-1 at rate i, center heals at rate 1.  From (i,0): center is
// reinfected at rate lambda i, i -> i-1 at rate i.
class StarProcess {
public:
    StarProcess(uint64_t k, double lambda, StarState init);

    bool step(Rng& rng); // false once absorbed at (0,0)

    const StarState& state() const { return s_; }
    double time() const { return t_; }
    uint64_t n_events() const { return n_events_; }
    uint64_t k() const { return k_; }
    double total_rate() const;

private:
    uint64_t k_;
    double lambda_;
    StarState s_;
    double t_ = 0.0;
    uint64_t n_events_ = 0;
};

// Counterpart of simulate() on generate_star(k); stop-condition counts refer
// to the total number of infected vertices (leaves + center).  Vertex
// triggers are not meaningful here and are rejected.
SimOutcome simulate_star(uint64_t k, double lambda, StarState init, const StopCondition& stop,
                         Rng& rng);

// Mean extinction time of the star chain by a dense first-passage solve
// over the 2(k+1)-state system; exact up to solver tolerance 1e-10.
// k above the cap is rejected (the dense solve is meant for oracle scale).
double exact_star_mean_extinction(uint64_t k, double lambda, StarState init,
                                  uint64_t k_cap = 200);

} // namespace cplab
