// Small dense linear solver for the first-passage oracles.  Partial-pivot
// LU with one step of iterative refinement; the systems here are a few
// hundred unknowns at most.
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace cplab {

class DenseMatrix {
public:
    DenseMatrix(size_t n, size_t m) : rows_(n), cols_(m), a_(n * m, 0.0) {}
    double& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    double operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

private:
    size_t rows_, cols_;
    std::vector<double> a_;
};

// Solves A x = b in place of a copy; checks the scaled residual
// ||Ax-b||_inf <= tol * (||A||_inf ||x||_inf + ||b||_inf).
std::vector<double> solve_dense(const DenseMatrix& a, const std::vector<double>& b,
                                double tol = 1e-10);

} // namespace cplab
