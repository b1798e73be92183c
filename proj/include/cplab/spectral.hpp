// Adjacency spectral radius by shifted power iteration.
#pragma once

#include <cstddef>

#include "cplab/graph.hpp"

namespace cplab {

struct EigenEstimate {
    double value = 0.0;     // Rayleigh quotient of the last iterate
    size_t iterations = 0;
    bool converged = false; // relative residual reached tol
};

// Largest adjacency eigenvalue.  Iterates on A + I (the shift removes the
// +/-Lambda oscillation on bipartite graphs such as stars) starting from the
// degree vector; converged when ||A x - r x|| <= tol * r with x normalized.
// A self-loop contributes 2 to its diagonal entry.
EigenEstimate max_eigenvalue(const Graph& g, double tol = 1e-10, size_t max_iters = 100000);

} // namespace cplab
