#include "remeta/optim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace remeta {

ScalarMax brent_maximize(const std::function<double(double)>& f, double lo, double hi,
                         double xtol, int max_iter) {
  // Classic Brent minimization applied to -f.
  auto g = [&f](double x) { return -f(x); };
  const double golden = 0.3819660112501051;
  double a = lo, b = hi;
  double x = a + golden * (b - a);
  double w = x, v = x;
  double fx = g(x), fw = fx, fv = fx;
  double d = 0.0, e = 0.0;
  ScalarMax out;
  for (int iter = 0; iter < max_iter; ++iter) {
    double m = 0.5 * (a + b);
    double tol1 = xtol * std::fabs(x) + 1e-14;
    double tol2 = 2.0 * tol1;
    if (std::fabs(x - m) <= tol2 - 0.5 * (b - a)) {
      out.converged = true;
      out.iterations = iter;
      break;
    }
    double p = 0.0, q = 0.0, r = 0.0;
    bool use_golden = true;
    if (std::fabs(e) > tol1) {
      r = (x - w) * (fx - fv);
      q = (x - v) * (fx - fw);
      p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::fabs(q);
      double e_old = e;
      e = d;
      if (std::fabs(p) < std::fabs(0.5 * q * e_old) && p > q * (a - x) && p < q * (b - x)) {
        d = p / q;
        double u = x + d;
        if (u - a < tol2 || b - u < tol2) d = (x < m) ? tol1 : -tol1;
        use_golden = false;
      }
    }
    if (use_golden) {
      e = (x < m) ? b - x : a - x;
      d = golden * e;
    }
    double u = (std::fabs(d) >= tol1) ? x + d : x + ((d > 0.0) ? tol1 : -tol1);
    double fu = g(u);
    if (fu <= fx) {
      if (u < x) b = x; else a = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
    out.iterations = iter + 1;
  }
  // Endpoints can beat the interior when the maximum sits on the boundary.
  double flo = f(lo), fhi = f(hi), fi = -fx;
  out.x = x;
  out.f = fi;
  if (flo >= out.f) { out.x = lo; out.f = flo; }
  if (fhi > out.f) { out.x = hi; out.f = fhi; }
  return out;
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double xtol, int max_iter) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw std::invalid_argument("bisect_root: no sign change on interval");
  for (int i = 0; i < max_iter && (hi - lo) > xtol; ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

SimplexMax nelder_mead_maximize(const std::function<double(const std::vector<double>&)>& f,
                                std::vector<double> x0, std::vector<double> step,
                                double ftol, int max_eval) {
  const std::size_t n = x0.size();
  auto g = [&f](const std::vector<double>& x) { return -f(x); };
  std::vector<std::vector<double>> pts(n + 1, x0);
  std::vector<double> fv(n + 1);
  int evals = 0;
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step[i];
  for (std::size_t i = 0; i <= n; ++i) { fv[i] = g(pts[i]); ++evals; }

  SimplexMax out;
  while (evals < max_eval) {
    // Order: pts[order[0]] best (smallest g).
    std::vector<std::size_t> order(n + 1);
    for (std::size_t i = 0; i <= n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&fv](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    double fbest = fv[order[0]], fworst = fv[order[n]];
    if (std::fabs(fworst - fbest) <= ftol * (std::fabs(fbest) + std::fabs(fworst)) + 1e-14) {
      out.converged = true;
      break;
    }
    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) centroid[j] += pts[order[i]][j];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    auto blend = [&centroid, n](const std::vector<double>& p, double coef) {
      std::vector<double> q(n);
      for (std::size_t j = 0; j < n; ++j) q[j] = centroid[j] + coef * (p[j] - centroid[j]);
      return q;
    };
    const auto& worst = pts[order[n]];
    std::vector<double> xr = blend(worst, -1.0);
    double fr = g(xr); ++evals;
    if (fr < fv[order[0]]) {
      std::vector<double> xe = blend(worst, -2.0);
      double fe = g(xe); ++evals;
      if (fe < fr) { pts[order[n]] = xe; fv[order[n]] = fe; }
      else { pts[order[n]] = xr; fv[order[n]] = fr; }
    } else if (fr < fv[order[n - 1]]) {
      pts[order[n]] = xr; fv[order[n]] = fr;
    } else {
      std::vector<double> xc = blend(worst, 0.5);
      double fc = g(xc); ++evals;
      if (fc < fv[order[n]]) {
        pts[order[n]] = xc; fv[order[n]] = fc;
      } else {
        // Shrink toward the best point.
        for (std::size_t i = 1; i <= n; ++i) {
          auto& p = pts[order[i]];
          for (std::size_t j = 0; j < n; ++j)
            p[j] = pts[order[0]][j] + 0.5 * (p[j] - pts[order[0]][j]);
          fv[order[i]] = g(p); ++evals;
        }
      }
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i <= n; ++i)
    if (fv[i] < fv[best]) best = i;
  out.x = pts[best];
  out.f = -fv[best];
  out.evaluations = evals;
  return out;
}

std::vector<std::vector<double>> numeric_hessian(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& x, double h) {
  const std::size_t n = x.size();
  std::vector<std::vector<double>> hess(n, std::vector<double>(n, 0.0));
  double f0 = f(x);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    hess[i][i] = (f(xp) - 2.0 * f0 + f(xm)) / (h * h);
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<double> xpp = x, xpm = x, xmp = x, xmm = x;
      xpp[i] += h; xpp[j] += h;
      xpm[i] += h; xpm[j] -= h;
      xmp[i] -= h; xmp[j] += h;
      xmm[i] -= h; xmm[j] -= h;
      double v = (f(xpp) - f(xpm) - f(xmp) + f(xmm)) / (4.0 * h * h);
      hess[i][j] = v;
      hess[j][i] = v;
    }
  }
  return hess;
}

double newton_maximize_1d(const std::function<void(double, double&, double&)>& grad_curv,
                          double x0, int max_iter, double tol) {
  double x = x0;
  for (int i = 0; i < max_iter; ++i) {
    double g = 0.0, h = 0.0;
    grad_curv(x, g, h);
    if (!(h < 0.0)) h = -1.0;  // force descent curvature if the surface is flat
    double step = -g / h;
    if (std::fabs(step) > 5.0) step = (step > 0.0) ? 5.0 : -5.0;
    x += step;
    if (std::fabs(step) < tol) break;
  }
  return x;
}

}  // namespace remeta
