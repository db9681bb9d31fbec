#include "numerics.hpp"

#include <algorithm>

namespace geocenter::num {

bool solve_linear(std::vector<std::vector<double>> a, std::vector<double> b,
                  std::vector<double>* x) {
    const int n = static_cast<int>(a.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-14) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (int r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    x->assign(n, 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double acc = b[r];
        for (int c = r + 1; c < n; ++c) acc -= a[r][c] * (*x)[c];
        (*x)[r] = acc / a[r][r];
    }
    return true;
}

namespace {

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

} // namespace

bool newton_solve(const std::function<std::vector<double>(const std::vector<double>&)>& residual,
                  std::vector<double>* x, double tol, int max_iter) {
    const int n = static_cast<int>(x->size());
    std::vector<double> f = residual(*x);
    if (static_cast<int>(f.size()) != n) return false;
    for (int it = 0; it < max_iter; ++it) {
        const double fn = max_abs(f);
        if (!std::isfinite(fn)) return false;
        if (fn < tol) return true;
        // Finite-difference Jacobian, column by column.
        std::vector<std::vector<double>> jac(n, std::vector<double>(n, 0.0));
        for (int c = 0; c < n; ++c) {
            const double h = 1e-7 * (1.0 + std::abs((*x)[c]));
            std::vector<double> xp = *x;
            xp[c] += h;
            const std::vector<double> fp = residual(xp);
            for (int r = 0; r < n; ++r) jac[r][c] = (fp[r] - f[r]) / h;
        }
        std::vector<double> rhs(n);
        for (int r = 0; r < n; ++r) rhs[r] = -f[r];
        std::vector<double> step;
        if (!solve_linear(jac, rhs, &step)) return false;
        // Backtracking line search on the residual norm.
        double lambda = 1.0;
        bool accepted = false;
        for (int ls = 0; ls < 30; ++ls) {
            std::vector<double> xn = *x;
            for (int c = 0; c < n; ++c) xn[c] += lambda * step[c];
            std::vector<double> fnw = residual(xn);
            if (std::isfinite(max_abs(fnw)) && max_abs(fnw) < fn) {
                *x = std::move(xn);
                f = std::move(fnw);
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        if (!accepted) return max_abs(f) < tol;
    }
    return max_abs(f) < tol;
}

double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                          double* arg, int iters) {
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters && b - a > 1e-14 * (1.0 + std::abs(a)); ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        }
    }
    const double xm = 0.5 * (a + b);
    if (arg) *arg = xm;
    return f(xm);
}

std::vector<double> scan_roots(const std::function<double(double)>& f, double lo, double hi,
                               int samples) {
    std::vector<double> roots;
    double prev_x = lo, prev_f = f(lo);
    for (int i = 1; i < samples; ++i) {
        const double x = lo + (hi - lo) * i / (samples - 1);
        const double fx = f(x);
        if (prev_f == 0.0) roots.push_back(prev_x);
        if ((prev_f < 0.0 && fx > 0.0) || (prev_f > 0.0 && fx < 0.0)) {
            double a = prev_x, b = x, fa = prev_f;
            for (int it = 0; it < 80; ++it) {
                const double m = 0.5 * (a + b);
                const double fm = f(m);
                if ((fa < 0.0) == (fm < 0.0)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        prev_x = x;
        prev_f = fx;
    }
    if (prev_f == 0.0) roots.push_back(prev_x);
    return roots;
}

} // namespace geocenter::num
