#pragma once

#include <Eigen/Dense>
#include <limits>
#include <string>
#include <vector>

#include "ovb/dataset.hpp"

namespace ovb {

/// Weighted least-squares fit. Coefficients of rank-deficient (aliased)
/// columns are NaN and flagged rather than silently zeroed; vcov covers the
/// identified subspace only.
struct FitResult {
  std::vector<std::string> column_names;  // design columns, in fit order
  Eigen::VectorXd coefficients;
  Eigen::VectorXd se;
  Eigen::MatrixXd vcov;  // sigma^2 (X'WX)^-1 on identified columns, NaN rows elsewhere
  std::vector<char> aliased;

  long df = 0;            // n_effective - rank(design)
  long rank = 0;
  long n_effective = 0;   // rows with positive weight
  double r_squared = 0.0;
  double rss = 0.0;       // weighted residual sum of squares
  double weight_sum = 0.0;

  Eigen::VectorXd residuals;  // all rows, zero-weight rows included
  Eigen::VectorXd fitted;

  /// Residual SDs under the sum-of-weights-normalized inner product:
  /// sigma_y_given_zx = sqrt(rss / weight_sum); sigma_z_given_x is the
  /// residual SD of the treatment column on the remaining design (NaN when
  /// no treatment is designated).
  double sigma_y_given_zx = 0.0;
  double sigma_z_given_x = std::numeric_limits<double>::quiet_NaN();

  std::string treatment;  // designated treatment column, may be empty

  int index_of(const std::string& column) const;
  double coefficient(const std::string& column) const;
  double se_of(const std::string& column) const;
  double t_of(const std::string& column) const;
  bool is_aliased(const std::string& column) const;

  double treatment_coefficient() const { return coefficient(treatment); }
  double treatment_se() const { return se_of(treatment); }
};

/// Exact-refit decomposition of the change in the treatment coefficient
/// when a covariate group moves in or out of the regression. Satisfies
/// b_hat - beta_hat = b_star * delta_hat up to floating-point error; the
/// rank-1 surrogate is used when the group spans several columns.
struct OmissionDecomposition {
  double b_hat = 0.0;      // treatment coefficient without the group
  double beta_hat = 0.0;   // treatment coefficient with the group
  double delta_hat = 0.0;  // coefficient on the group (rank-1 effective)
  double b_star = 0.0;     // coefficient of treatment in group ~ treatment + rest
  double rho = 0.0;        // partial correlation of outcome and group
  double t_w = 0.0;        // treatment confounding (signed when rank 1)
  double f_w = 0.0;        // ANOVA F of the group in the treatment regression
  int k = 1;               // rank contributed by the group
  double se_b = 0.0;       // treatment SE without the group
  double se_beta = 0.0;    // treatment SE with the group
  long df = 0;             // residual df of the fit without the group
};

/// Fits outcome ~ intercept + covariates + treatment (+ interactions) by
/// weighted least squares via column-pivoted QR. Errors when the designated
/// treatment column is collinear with the covariates or when no residual
/// degrees of freedom remain.
FitResult fit_wls(const Dataset& data, const ModelSpec& spec);

/// target minus its weighted projection onto the span of `given` (plus an
/// intercept unless suppressed). Result is weighted-orthogonal to every
/// design column of `given`.
Eigen::VectorXd residualize(const Dataset& data, const std::string& target,
                            const std::vector<std::string>& given,
                            bool intercept = true);

/// Vector-input overload used when the target is a constructed column.
Eigen::VectorXd residualize(const Dataset& data, const Eigen::VectorXd& target,
                            const std::vector<std::string>& given,
                            bool intercept = true);

/// Partial correlation of `y` and the group `w` given the `given` groups.
/// Signed for single-column w; the nonnegative multiple correlation of the
/// rank-1 surrogate otherwise. Errors when either residual SD vanishes.
double partial_corr(const Dataset& data, const std::string& y,
                    const std::string& w,
                    const std::vector<std::string>& given,
                    bool intercept = true);

/// ANOVA F statistic comparing nested fits on identical rows and weights;
/// k is the rank added by the larger model.
double anova_f(const FitResult& fit_small, const FitResult& fit_big, int k);

/// Exact refit decomposition of omitting covariate group `w` from `spec`
/// extended with it. This is the oracle the closed-form adjustments are
/// tested against.
OmissionDecomposition decompose_omission(const Dataset& data,
                                         const ModelSpec& spec,
                                         const std::string& w);

}  // namespace ovb
