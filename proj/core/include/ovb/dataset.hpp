#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

namespace ovb {

/// Column-oriented numeric table with per-row quadratic weights and named
/// covariate groups (a multi-level categorical occupies one group spanning
/// several indicator columns).
///
/// Columns are immutable once added; fitted objects reference the Dataset
/// by value semantics and are safe for concurrent reads.
class Dataset {
 public:
  Dataset() = default;

  /// Adds a named column. The first column fixes the row count.
  void add_column(const std::string& name, Eigen::VectorXd values);

  /// Per-row nonnegative weights; at least two must be strictly positive.
  /// Defaults to all ones.
  void set_weights(Eigen::VectorXd weights);

  /// Declares `group` to span `columns`. A design column may belong to at
  /// most one group; ungrouped columns act as singleton groups under their
  /// own name.
  void set_group(const std::string& group,
                 const std::vector<std::string>& columns);

  Eigen::Index n_rows() const noexcept { return n_rows_; }
  const Eigen::VectorXd& weights() const;

  bool has_column(const std::string& name) const;
  const Eigen::VectorXd& column(const std::string& name) const;

  /// True if `name` is an explicit group or an existing (ungrouped) column.
  bool has_group(const std::string& name) const;

  /// Columns spanned by `name`: an explicit group's columns, else the
  /// singleton {name} when such a column exists. Errors otherwise.
  std::vector<std::string> group_columns(const std::string& name) const;

  /// Column names in insertion order.
  const std::vector<std::string>& column_names() const noexcept {
    return order_;
  }

  /// Explicit group names in declaration order.
  const std::vector<std::string>& group_names() const noexcept {
    return group_order_;
  }

  long n_positive_weight() const;

 private:
  Eigen::Index n_rows_ = 0;
  std::vector<std::string> order_;
  std::map<std::string, Eigen::VectorXd> columns_;
  std::vector<std::string> group_order_;
  std::map<std::string, std::vector<std::string>> groups_;
  std::map<std::string, std::string> column_group_;  // column -> owning group
  Eigen::VectorXd weights_;                          // empty means all ones
  mutable Eigen::VectorXd unit_weights_;             // lazily sized
};

/// Regression specification: outcome ~ intercept + covariate groups
/// + treatment (+ treatment-interaction columns).
///
/// `treatment` may be empty for auxiliary regressions that have no
/// designated treatment column. `interactions` name product columns
/// (treatment x covariate) fitted alongside the treatment; they are not
/// part of the covariate block.
struct ModelSpec {
  std::string outcome;
  std::string treatment;
  std::vector<std::string> covariates;  // group names
  std::vector<std::string> interactions;
  bool intercept = true;

  ModelSpec with_covariate(const std::string& group) const {
    ModelSpec out = *this;
    out.covariates.push_back(group);
    return out;
  }
  ModelSpec without_covariate(const std::string& group) const;
};

}  // namespace ovb
