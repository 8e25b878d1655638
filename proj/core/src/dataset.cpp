#include "ovb/dataset.hpp"

#include <algorithm>

#include "ovb/error.hpp"

namespace ovb {

namespace {
[[noreturn]] void fail(const std::string& op, const std::string& detail,
                       const std::string& variable = "") {
  throw Error(ErrorKind::data, "dataset", op, detail, variable);
}
}  // namespace

void Dataset::add_column(const std::string& name, Eigen::VectorXd values) {
  if (name.empty()) fail("add_column", "column name must be nonempty");
  if (columns_.count(name))
    fail("add_column", "duplicate column name", name);
  if (n_rows_ == 0) {
    n_rows_ = values.size();
  } else if (values.size() != n_rows_) {
    fail("add_column",
         "column length " + std::to_string(values.size()) +
             " does not match table length " + std::to_string(n_rows_),
         name);
  }
  columns_.emplace(name, std::move(values));
  order_.push_back(name);
}

void Dataset::set_weights(Eigen::VectorXd weights) {
  if (weights.size() != n_rows_)
    fail("set_weights", "weight vector length " +
                            std::to_string(weights.size()) +
                            " does not match table length " +
                            std::to_string(n_rows_));
  long positive = 0;
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    if (!(weights[i] >= 0.0))
      fail("set_weights",
           "weight at row " + std::to_string(i) + " is negative or NaN");
    if (weights[i] > 0.0) ++positive;
  }
  if (positive < 2)
    fail("set_weights", "fewer than two rows carry positive weight");
  weights_ = std::move(weights);
}

void Dataset::set_group(const std::string& group,
                        const std::vector<std::string>& columns) {
  if (columns.empty()) fail("set_group", "group spans no columns", group);
  if (groups_.count(group)) fail("set_group", "duplicate group name", group);
  if (columns_.count(group) && !(columns.size() == 1 && columns[0] == group))
    fail("set_group", "group name collides with an existing column", group);
  for (const auto& col : columns) {
    if (!columns_.count(col)) fail("set_group", "unknown column", col);
    auto owner = column_group_.find(col);
    if (owner != column_group_.end())
      fail("set_group",
           "column already belongs to group '" + owner->second + "'", col);
  }
  for (const auto& col : columns) column_group_[col] = group;
  groups_.emplace(group, columns);
  group_order_.push_back(group);
}

const Eigen::VectorXd& Dataset::weights() const {
  if (weights_.size() == n_rows_ && n_rows_ > 0) return weights_;
  if (unit_weights_.size() != n_rows_)
    unit_weights_ = Eigen::VectorXd::Ones(n_rows_);
  return unit_weights_;
}

bool Dataset::has_column(const std::string& name) const {
  return columns_.count(name) > 0;
}

const Eigen::VectorXd& Dataset::column(const std::string& name) const {
  auto it = columns_.find(name);
  if (it == columns_.end()) fail("column", "unknown column", name);
  return it->second;
}

bool Dataset::has_group(const std::string& name) const {
  return groups_.count(name) > 0 || columns_.count(name) > 0;
}

std::vector<std::string> Dataset::group_columns(const std::string& name) const {
  auto it = groups_.find(name);
  if (it != groups_.end()) return it->second;
  if (columns_.count(name)) return {name};
  fail("group_columns", "unknown covariate group", name);
}

long Dataset::n_positive_weight() const {
  const Eigen::VectorXd& w = weights();
  return static_cast<long>((w.array() > 0.0).count());
}

ModelSpec ModelSpec::without_covariate(const std::string& group) const {
  ModelSpec out = *this;
  out.covariates.erase(
      std::remove(out.covariates.begin(), out.covariates.end(), group),
      out.covariates.end());
  return out;
}

}  // namespace ovb
