#pragma once

// Matrix completion by iterated soft-thresholded SVD.

#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pickwin/feature_matrix.hpp"

namespace pickwin {

struct SoftImputeOptions {
  // Shrinkage; defaults to the largest singular value of the zero-filled
  // matrix divided by 100.
  std::optional<double> lambda;
  double tolerance = 1e-3;
  int max_iterations = 1000;
};

struct SoftImputeResult {
  FeatureMatrix matrix;            // complete
  double lambda = 0.0;
  int iterations = 0;
  bool converged = true;
  std::vector<double> objective;   // 0.5 |P_obs(X - Z)|^2 + lambda |Z|_* per iteration
};

inline SoftImputeResult soft_impute(const FeatureMatrix& input, const SoftImputeOptions& opt = {}) {
  input.validate();
  const Eigen::Index rows = input.values.rows();
  const Eigen::Index cols = input.values.cols();
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (!input.mask.row(r).any()) {
      throw std::invalid_argument("feature '" + input.feature_names[static_cast<std::size_t>(r)] +
                                  "' has no observed value");
    }
  }
  for (Eigen::Index c = 0; c < cols; ++c) {
    if (!input.mask.col(c).any()) {
      throw std::invalid_argument("company '" + input.company_ids[static_cast<std::size_t>(c)] +
                                  "' has no observed feature");
    }
  }

  SoftImputeResult out;
  out.matrix = input;
  if (input.complete()) return out;

  const Eigen::MatrixXd observed = input.mask.select(input.values, Eigen::MatrixXd::Zero(rows, cols));
  out.lambda = opt.lambda ? *opt.lambda
                          : Eigen::JacobiSVD<Eigen::MatrixXd>(observed).singularValues()(0) / 100.0;
  const auto missing = !input.mask;

  Eigen::MatrixXd z = Eigen::MatrixXd::Zero(rows, cols);
  out.converged = false;
  for (int iter = 0; iter < opt.max_iterations; ++iter) {
    const Eigen::MatrixXd filled = input.mask.select(input.values, z);
    Eigen::BDCSVD<Eigen::MatrixXd> svd(filled, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd shrunk = (svd.singularValues().array() - out.lambda).max(0.0).matrix();
    const Eigen::MatrixXd next = svd.matrixU() * shrunk.asDiagonal() * svd.matrixV().transpose();

    const double resid = input.mask.select(input.values - next, Eigen::MatrixXd::Zero(rows, cols)).squaredNorm();
    out.objective.push_back(0.5 * resid + out.lambda * shrunk.sum());

    const double change = missing.select(next - z, Eigen::MatrixXd::Zero(rows, cols)).squaredNorm();
    const double scale = missing.select(z, Eigen::MatrixXd::Zero(rows, cols)).squaredNorm();
    z = next;
    out.iterations = iter + 1;
    if (scale > 0.0 && change / scale < opt.tolerance * opt.tolerance) {
      out.converged = true;
      break;
    }
    if (scale == 0.0 && change == 0.0) {
      out.converged = true;
      break;
    }
  }
  out.matrix.values = input.mask.select(input.values, z);
  out.matrix.mask.setConstant(true);
  return out;
}

/// Imputes each group of company columns on its own, so no group sees
/// another's values. Groups must partition the columns.
inline FeatureMatrix soft_impute_partitioned(const FeatureMatrix& input,
                                             const std::vector<std::vector<std::size_t>>& groups,
                                             const SoftImputeOptions& opt = {}) {
  std::vector<char> seen(input.num_companies(), 0);
  FeatureMatrix out = input;
  for (const auto& g : groups) {
    for (auto c : g) {
      if (c >= seen.size() || seen[c]) throw std::invalid_argument("column groups must partition the companies");
      seen[c] = 1;
    }
    const auto part = soft_impute(input.select_companies(g), opt).matrix;
    for (std::size_t j = 0; j < g.size(); ++j) {
      out.values.col(static_cast<Eigen::Index>(g[j])) = part.values.col(static_cast<Eigen::Index>(j));
    }
  }
  for (char s : seen) {
    if (!s) throw std::invalid_argument("column groups must partition the companies");
  }
  out.mask.setConstant(true);
  return out;
}

}  // namespace pickwin
