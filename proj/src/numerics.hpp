#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace geocenter::num {

// Gaussian elimination with partial pivoting; returns false when singular.
bool solve_linear(std::vector<std::vector<double>> a, std::vector<double> b,
                  std::vector<double>* x);

// Damped Newton with a finite-difference Jacobian for small square systems.
// Returns true when the scaled max-norm residual drops below `tol`.
bool newton_solve(const std::function<std::vector<double>(const std::vector<double>&)>& residual,
                  std::vector<double>* x, double tol = 1e-12, int max_iter = 80);

// Maximum of a unimodal function on [lo, hi] by golden-section search.
double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                          double* arg, int iters = 80);

// All roots of f on [lo, hi] found by an n-point scan plus bisection.
std::vector<double> scan_roots(const std::function<double(double)>& f, double lo, double hi,
                               int samples = 65);

} // namespace geocenter::num
