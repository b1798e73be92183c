#include "cplab/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cplab {

namespace {

// y = A x with loop entries counted twice on the diagonal.
void apply_adjacency(const Graph& g, const std::vector<double>& x, std::vector<double>& y) {
    const size_t n = g.n_vertices();
    for (size_t v = 0; v < n; ++v) {
        double s = 0.0;
        for (uint32_t w : g.adjacency[v]) s += x[w];
        s += static_cast<double>(g.self_loops_at(static_cast<uint32_t>(v))) * x[v];
        y[v] = s;
    }
}

} // namespace

EigenEstimate max_eigenvalue(const Graph& g, double tol, size_t max_iters) {
    if (!(tol > 0.0)) throw std::invalid_argument("max_eigenvalue: tol must be positive");
    const size_t n = g.n_vertices();
    if (n == 0) throw std::invalid_argument("max_eigenvalue: empty graph");
    if (g.degree_sum() == 0) return {0.0, 0, true};

    std::vector<double> x(n), ax(n);
    for (size_t v = 0; v < n; ++v) x[v] = static_cast<double>(g.degrees[v]);

    EigenEstimate est;
    for (size_t it = 1; it <= max_iters; ++it) {
        apply_adjacency(g, x, ax);
        // Rayleigh quotient and residual for A itself
        double xx = 0.0, xax = 0.0;
        for (size_t v = 0; v < n; ++v) {
            xx += x[v] * x[v];
            xax += x[v] * ax[v];
        }
        double rho = xax / xx;
        double res2 = 0.0;
        for (size_t v = 0; v < n; ++v) {
            double r = ax[v] - rho * x[v];
            res2 += r * r;
        }
        est.value = rho;
        est.iterations = it;
        if (std::sqrt(res2 / xx) <= tol * std::fabs(rho)) {
            est.converged = true;
            return est;
        }
        // next iterate: (A + I) x, normalized
        double norm = 0.0;
        for (size_t v = 0; v < n; ++v) {
            x[v] += ax[v];
            norm += x[v] * x[v];
        }
        norm = std::sqrt(norm);
        if (norm == 0.0) throw std::runtime_error("max_eigenvalue: iterate vanished");
        for (size_t v = 0; v < n; ++v) x[v] /= norm;
    }
    return est; // converged = false; carries the last Rayleigh quotient
}

} // namespace cplab
