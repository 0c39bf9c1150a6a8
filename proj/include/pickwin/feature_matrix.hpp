#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace pickwin {

/// Features x companies. Missing cells are flagged in `mask`; their value slot
/// is ignored.
struct FeatureMatrix {
  using Mask = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

  Eigen::MatrixXd values;
  Mask mask;
  std::vector<std::string> feature_names;
  std::vector<std::string> company_ids;

  FeatureMatrix() = default;

  FeatureMatrix(std::vector<std::string> names, std::vector<std::string> ids)
      : values(Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(names.size()),
                                     static_cast<Eigen::Index>(ids.size()))),
        mask(Mask::Constant(static_cast<Eigen::Index>(names.size()),
                            static_cast<Eigen::Index>(ids.size()), false)),
        feature_names(std::move(names)),
        company_ids(std::move(ids)) {}

  std::size_t num_features() const { return feature_names.size(); }
  std::size_t num_companies() const { return company_ids.size(); }

  void set(std::size_t feature, std::size_t company, double value) {
    values(static_cast<Eigen::Index>(feature), static_cast<Eigen::Index>(company)) = value;
    mask(static_cast<Eigen::Index>(feature), static_cast<Eigen::Index>(company)) = true;
  }

  bool observed(std::size_t feature, std::size_t company) const {
    return mask(static_cast<Eigen::Index>(feature), static_cast<Eigen::Index>(company));
  }

  bool complete() const { return mask.all(); }

  void validate() const {
    if (values.rows() != static_cast<Eigen::Index>(feature_names.size()) ||
        values.cols() != static_cast<Eigen::Index>(company_ids.size()) ||
        mask.rows() != values.rows() || mask.cols() != values.cols()) {
      throw std::invalid_argument("feature matrix dimensions are inconsistent");
    }
  }

  /// Copy of company column `company`; requires it to be fully observed.
  std::vector<double> column(std::size_t company) const {
    const auto c = static_cast<Eigen::Index>(company);
    if (!mask.col(c).all()) {
      throw std::invalid_argument("company " + company_ids[company] + " has missing features");
    }
    std::vector<double> out(num_features());
    for (Eigen::Index r = 0; r < values.rows(); ++r) out[static_cast<std::size_t>(r)] = values(r, c);
    return out;
  }

  /// Subset of company columns, in the given order.
  FeatureMatrix select_companies(std::span<const std::size_t> columns) const {
    std::vector<std::string> ids;
    ids.reserve(columns.size());
    for (auto c : columns) ids.push_back(company_ids.at(c));
    FeatureMatrix out(feature_names, std::move(ids));
    for (std::size_t j = 0; j < columns.size(); ++j) {
      out.values.col(static_cast<Eigen::Index>(j)) = values.col(static_cast<Eigen::Index>(columns[j]));
      out.mask.col(static_cast<Eigen::Index>(j)) = mask.col(static_cast<Eigen::Index>(columns[j]));
    }
    return out;
  }
};

}  // namespace pickwin
