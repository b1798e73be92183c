#include "cplab/linalg.hpp"

#include <algorithm>

namespace cplab {

namespace {

// LU factorization with partial pivoting; returns false on singularity.
bool lu_factor(DenseMatrix& lu, std::vector<size_t>& perm) {
    const size_t n = lu.rows();
    perm.resize(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        double best = std::fabs(lu(c, c));
        for (size_t r = c + 1; r < n; ++r) {
            double v = std::fabs(lu(r, c));
            if (v > best) { best = v; piv = r; }
        }
        if (best == 0.0) return false;
        if (piv != c) {
            std::swap(perm[piv], perm[c]);
            for (size_t j = 0; j < n; ++j) std::swap(lu(piv, j), lu(c, j));
        }
        for (size_t r = c + 1; r < n; ++r) {
            double f = lu(r, c) / lu(c, c);
            lu(r, c) = f;
            if (f == 0.0) continue;
            for (size_t j = c + 1; j < n; ++j) lu(r, j) -= f * lu(c, j);
        }
    }
    return true;
}

std::vector<double> lu_solve(const DenseMatrix& lu, const std::vector<size_t>& perm,
                             const std::vector<double>& b) {
    const size_t n = lu.rows();
    std::vector<double> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[perm[i]];
    for (size_t i = 1; i < n; ++i)
        for (size_t j = 0; j < i; ++j) x[i] -= lu(i, j) * x[j];
    for (size_t i = n; i-- > 0;) {
        for (size_t j = i + 1; j < n; ++j) x[i] -= lu(i, j) * x[j];
        x[i] /= lu(i, i);
    }
    return x;
}

} // namespace

std::vector<double> solve_dense(const DenseMatrix& a, const std::vector<double>& b,
                                double tol) {
    const size_t n = a.rows();
    if (a.cols() != n || b.size() != n)
        throw std::invalid_argument("solve_dense: dimension mismatch");
    DenseMatrix lu = a;
    std::vector<size_t> perm;
    if (!lu_factor(lu, perm))
        throw std::runtime_error("solve_dense: singular matrix");
    std::vector<double> x = lu_solve(lu, perm, b);

    auto residual = [&](const std::vector<double>& xs) {
        std::vector<double> r(n);
        for (size_t i = 0; i < n; ++i) {
            double s = -b[i];
            for (size_t j = 0; j < n; ++j) s += a(i, j) * xs[j];
            r[i] = s;
        }
        return r;
    };

    // One refinement step, then the residual check.
    std::vector<double> r = residual(x);
    std::vector<double> dx = lu_solve(lu, perm, r);
    for (size_t i = 0; i < n; ++i) x[i] -= dx[i];
    r = residual(x);

    double rinf = 0.0, xinf = 0.0, binf = 0.0, ainf = 0.0;
    for (size_t i = 0; i < n; ++i) {
        rinf = std::max(rinf, std::fabs(r[i]));
        xinf = std::max(xinf, std::fabs(x[i]));
        binf = std::max(binf, std::fabs(b[i]));
        double row = 0.0;
        for (size_t j = 0; j < n; ++j) row += std::fabs(a(i, j));
        ainf = std::max(ainf, row);
    }
    if (rinf > tol * (ainf * xinf + binf))
        throw std::runtime_error("solve_dense: residual above tolerance");
    return x;
}

} // namespace cplab
