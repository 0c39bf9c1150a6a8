#pragma once

// Quasi-Newton minimization with a strong-Wolfe line search.

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include <Eigen/Dense>

namespace pickwin::optim {

struct BfgsOptions {
  int max_iterations = 500;
  // Stop when max|g| <= gradient_tolerance * max(1, |f|).
  double gradient_tolerance = 1e-6;
  // Stop when successive values differ by <= function_tolerance * max(1, |f|).
  double function_tolerance = 1e-12;
  double wolfe_c1 = 1e-4;
  double wolfe_c2 = 0.9;
  int max_line_search_steps = 40;
};

enum class BfgsStatus { gradient_converged, function_converged, max_iterations, line_search_failed };

inline const char* to_string(BfgsStatus s) {
  switch (s) {
    case BfgsStatus::gradient_converged: return "gradient_converged";
    case BfgsStatus::function_converged: return "function_converged";
    case BfgsStatus::max_iterations: return "max_iterations";
    case BfgsStatus::line_search_failed: return "line_search_failed";
  }
  return "unknown";
}

struct BfgsResult {
  Eigen::VectorXd x;
  double value = std::numeric_limits<double>::infinity();
  Eigen::VectorXd gradient;
  int iterations = 0;
  int evaluations = 0;
  BfgsStatus status = BfgsStatus::max_iterations;
};

namespace detail {

// Minimizer of the cubic through (a, fa, ga) and (b, fb, gb), or the midpoint
// when the interpolant is unusable.
inline double cubic_step(double a, double fa, double ga, double b, double fb, double gb) {
  const double mid = 0.5 * (a + b);
  if (!std::isfinite(fb) || !std::isfinite(gb)) return mid;
  const double d1 = ga + gb - 3.0 * (fa - fb) / (a - b);
  const double disc = d1 * d1 - ga * gb;
  if (disc < 0.0) return mid;
  const double d2 = std::copysign(std::sqrt(disc), b - a);
  const double t = b - (b - a) * (gb + d2 - d1) / (gb - ga + 2.0 * d2);
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  const double margin = 0.1 * (hi - lo);
  if (!std::isfinite(t) || t < lo + margin || t > hi - margin) return mid;
  return t;
}

struct LinePoint {
  double step = 0.0;
  double value = 0.0;
  double slope = 0.0;
  Eigen::VectorXd gradient;
};

}  // namespace detail

/// Minimizes `objective(x, grad) -> value`. Non-finite values are treated as
/// an infinitely bad point and the line search backs off from them.
template <typename Objective>
BfgsResult bfgs_minimize(Objective&& objective, Eigen::VectorXd x0, const BfgsOptions& opt = {}) {
  const Eigen::Index n = x0.size();
  BfgsResult out;
  out.x = std::move(x0);
  out.gradient = Eigen::VectorXd::Zero(n);
  out.value = objective(out.x, out.gradient);
  out.evaluations = 1;
  if (!std::isfinite(out.value) || !out.gradient.allFinite()) {
    out.status = BfgsStatus::line_search_failed;
    return out;
  }

  Eigen::MatrixXd inv_hessian = Eigen::MatrixXd::Identity(n, n);
  bool scaled = false;
  Eigen::VectorXd trial_x(n), trial_g(n);
  bool retried_after_reset = false;

  auto converged_gradient = [&](double f, const Eigen::VectorXd& g) {
    return g.lpNorm<Eigen::Infinity>() <= opt.gradient_tolerance * std::max(1.0, std::abs(f));
  };

  for (int iter = 0; iter < opt.max_iterations; ++iter) {
    if (converged_gradient(out.value, out.gradient)) {
      out.status = BfgsStatus::gradient_converged;
      return out;
    }
    Eigen::VectorXd direction = -inv_hessian * out.gradient;
    double slope0 = direction.dot(out.gradient);
    if (!(slope0 < 0.0)) {
      inv_hessian.setIdentity();
      scaled = false;
      direction = -out.gradient;
      slope0 = direction.dot(out.gradient);
    }

    double step = 1.0;
    if (!scaled) step = std::min(1.0, 1.0 / std::max(1e-12, out.gradient.lpNorm<Eigen::Infinity>()));

    auto evaluate = [&](double a) {
      trial_x = out.x + a * direction;
      const double f = objective(trial_x, trial_g);
      ++out.evaluations;
      detail::LinePoint p{a, f, trial_g.dot(direction), trial_g};
      if (!std::isfinite(p.value) || !trial_g.allFinite()) {
        p.value = std::numeric_limits<double>::infinity();
        p.slope = std::numeric_limits<double>::quiet_NaN();
      }
      return p;
    };

    const detail::LinePoint origin{0.0, out.value, slope0, out.gradient};
    detail::LinePoint prev = origin;
    detail::LinePoint accepted;
    bool found = false;

    // Bracketing phase; zoom once the interval [lo, hi] holds a Wolfe point.
    auto zoom = [&](detail::LinePoint lo, detail::LinePoint hi) {
      for (int k = 0; k < opt.max_line_search_steps; ++k) {
        const double a = detail::cubic_step(lo.step, lo.value, lo.slope, hi.step, hi.value, hi.slope);
        const auto p = evaluate(a);
        if (p.value > origin.value + opt.wolfe_c1 * a * slope0 || p.value >= lo.value) {
          hi = p;
        } else {
          if (std::abs(p.slope) <= -opt.wolfe_c2 * slope0) {
            accepted = p;
            return true;
          }
          if (p.slope * (hi.step - lo.step) >= 0.0) hi = lo;
          lo = p;
        }
        if (std::abs(hi.step - lo.step) < 1e-16 * std::max(1.0, std::abs(lo.step))) break;
      }
      // Accept any sufficient-decrease point rather than discarding progress.
      if (lo.step > 0.0 && lo.value < origin.value) {
        accepted = lo;
        return true;
      }
      return false;
    };

    for (int k = 0; k < opt.max_line_search_steps; ++k) {
      auto p = evaluate(step);
      if (p.value > origin.value + opt.wolfe_c1 * step * slope0 ||
          (k > 0 && p.value >= prev.value)) {
        found = zoom(prev, p);
        break;
      }
      if (std::abs(p.slope) <= -opt.wolfe_c2 * slope0) {
        accepted = p;
        found = true;
        break;
      }
      if (p.slope >= 0.0) {
        found = zoom(p, prev);
        break;
      }
      prev = p;
      step *= 2.0;
    }

    if (!found) {
      if (retried_after_reset) {
        out.status = BfgsStatus::line_search_failed;
        out.iterations = iter;
        return out;
      }
      retried_after_reset = true;
      inv_hessian.setIdentity();
      scaled = false;
      --iter;
      continue;
    }
    retried_after_reset = false;

    const Eigen::VectorXd s = accepted.step * direction;
    const Eigen::VectorXd y = accepted.gradient - out.gradient;
    const double f_old = out.value;
    const double f_new = accepted.value;
    out.x += s;
    out.value = f_new;
    out.gradient = accepted.gradient;
    out.iterations = iter + 1;

    const double sy = s.dot(y);
    if (sy > 1e-10 * s.norm() * y.norm()) {
      if (!scaled) {
        inv_hessian *= sy / y.squaredNorm();
        scaled = true;
      }
      const double rho = 1.0 / sy;
      const Eigen::VectorXd hy = inv_hessian * y;
      inv_hessian += (rho * rho * y.dot(hy) + rho) * (s * s.transpose()) -
                     rho * (hy * s.transpose() + s * hy.transpose());
    }

    if (std::abs(f_old - f_new) <= opt.function_tolerance * std::max(1.0, std::abs(f_new))) {
      out.status = converged_gradient(out.value, out.gradient) ? BfgsStatus::gradient_converged
                                                               : BfgsStatus::function_converged;
      return out;
    }
  }
  out.iterations = opt.max_iterations;
  out.status = converged_gradient(out.value, out.gradient) ? BfgsStatus::gradient_converged
                                                           : BfgsStatus::max_iterations;
  return out;
}

}  // namespace pickwin::optim
