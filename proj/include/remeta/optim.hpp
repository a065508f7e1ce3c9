#ifndef REMETA_OPTIM_HPP
#define REMETA_OPTIM_HPP

#include <functional>
#include <vector>

namespace remeta {

struct ScalarMax {
  double x = 0.0;
  double f = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Maximize f on [lo, hi] with Brent's parabolic/golden hybrid.
ScalarMax brent_maximize(const std::function<double(double)>& f, double lo, double hi,
                         double xtol = 1e-10, int max_iter = 200);

// Root of f on [lo, hi] by bisection; requires a sign change.
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double xtol = 1e-10, int max_iter = 200);

struct SimplexMax {
  std::vector<double> x;
  double f = 0.0;
  int evaluations = 0;
  bool converged = false;
};

// Maximize f by Nelder-Mead starting at x0 with per-coordinate initial steps.
SimplexMax nelder_mead_maximize(const std::function<double(const std::vector<double>&)>& f,
                                std::vector<double> x0, std::vector<double> step,
                                double ftol = 1e-10, int max_eval = 4000);

// Central-difference Hessian of f at x.
std::vector<std::vector<double>> numeric_hessian(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& x, double h = 1e-4);

// Newton ascent for a smooth unimodal scalar function given value/grad/curv.
// Returns the located maximum; used for quadrature re-centering.
double newton_maximize_1d(const std::function<void(double, double&, double&)>& grad_curv,
                          double x0, int max_iter = 60, double tol = 1e-11);

}  // namespace remeta

#endif  // REMETA_OPTIM_HPP
