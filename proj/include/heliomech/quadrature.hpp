#ifndef HELIOMECH_QUADRATURE_HPP
#define HELIOMECH_QUADRATURE_HPP

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

// Adaptive 1D quadrature built on a fixed-order Gauss-Legendre rule with
// interval bisection.  All overlap and enthalpy integrals in this project are
// smooth, so a 15-point panel with recursive refinement converges fast.

namespace heliomech {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;  // achieved error estimate
  bool converged = true;
  int panels = 0;
};

namespace detail {

// Nodes/weights for n-point Gauss-Legendre on [-1, 1], Newton iteration on
// the Legendre recurrence (same construction as the classic gauleg routine).
template <int N>
struct GaussLegendreRule {
  std::array<double, N> x{};
  std::array<double, N> w{};

  GaussLegendreRule() {
    const int m = (N + 1) / 2;
    for (int i = 0; i < m; ++i) {
      double z = std::cos(M_PI * (i + 0.75) / (N + 0.5));
      double pp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p1 = 1.0, p2 = 0.0;
        for (int j = 0; j < N; ++j) {
          const double p3 = p2;
          p2 = p1;
          p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
        }
        pp = N * (z * p1 - p2) / (z * z - 1.0);
        const double z1 = z;
        z = z1 - p1 / pp;
        if (std::abs(z - z1) < 1e-15) break;
      }
      x[i] = -z;
      x[N - 1 - i] = z;
      w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
      w[N - 1 - i] = w[i];
    }
  }
};

inline double gl15(const std::function<double(double)>& f, double a, double b) {
  static const GaussLegendreRule<15> rule;
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < 15; ++i) sum += rule.w[i] * f(mid + half * rule.x[i]);
  return half * sum;
}

inline void adapt(const std::function<double(double)>& f, double a, double b,
                  double whole, double tol, int depth, QuadratureResult& out) {
  const double mid = 0.5 * (a + b);
  const double left = gl15(f, a, mid);
  const double right = gl15(f, mid, b);
  const double err = std::abs(left + right - whole);
  if (err < tol || depth >= 40) {
    out.value += left + right;
    out.abs_error += err;
    out.panels += 2;
    if (err >= tol) out.converged = false;
    return;
  }
  adapt(f, a, mid, left, 0.5 * tol, depth + 1, out);
  adapt(f, mid, b, right, 0.5 * tol, depth + 1, out);
}

}  // namespace detail

// Integrate f over [a, b] to absolute tolerance abs_tol.
inline QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                           double a, double b,
                                           double abs_tol = 1e-12) {
  QuadratureResult out;
  if (a == b) return out;
  const double whole = detail::gl15(f, a, b);
  detail::adapt(f, a, b, whole, abs_tol, 0, out);
  return out;
}

inline double integrate(const std::function<double(double)>& f, double a,
                        double b, double abs_tol = 1e-12) {
  const QuadratureResult r = integrate_adaptive(f, a, b, abs_tol);
  if (!r.converged)
    throw std::runtime_error("quadrature did not converge; achieved error " +
                             std::to_string(r.abs_error));
  return r.value;
}

// Tolerance scaled by an L1 estimate of the integrand, so the same relative
// accuracy is reached whether profiles are O(1) or O(1/sqrt(V)) in SI.
inline double integrate_relative(const std::function<double(double)>& f,
                                 double a, double b, double rel_tol = 1e-12) {
  const double scale =
      detail::gl15([&](double z) { return std::abs(f(z)); }, a, b);
  const double abs_tol = rel_tol * (scale > 0.0 ? scale : 1.0);
  return integrate(f, a, b, abs_tol);
}

}  // namespace heliomech

#endif
