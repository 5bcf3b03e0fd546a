#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "gxmr/types.hpp"

namespace gxmr {

// ---------------------------------------------------------------------------
// DesignMatrix — labeled column block with a leading intercept column.
// ---------------------------------------------------------------------------
class DesignMatrix {
public:
    // Starts with the intercept column (all ones).
    static DesignMatrix with_intercept(Eigen::Index n_rows);

    // Appends a named column; throws DimensionMismatchError on a length
    // mismatch and ConfigError on a duplicate label.
    void add(const std::string& label, const Eigen::VectorXd& column);

    Eigen::Index n_rows() const { return mat_.rows(); }
    Eigen::Index n_cols() const { return mat_.cols(); }
    const Eigen::MatrixXd& matrix() const { return mat_; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Index of a labeled column; throws ConfigError if absent.
    Eigen::Index index_of(const std::string& label) const;

private:
    Eigen::MatrixXd mat_;
    std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// FitResult — one fitted regression: coefficients in declared column order
// (intercept first), model-based coefficient covariance, and diagnostics.
// ---------------------------------------------------------------------------
struct FitResult {
    Eigen::VectorXd coef;
    Eigen::MatrixXd cov;
    Eigen::VectorXd se;
    bool converged = false;
    int n_iter = 0;
    double deviance_or_rss = 0.0;
    std::vector<std::string> column_names;
};

// Ordinary least squares through a column-scaled pivoted QR (no normal
// equations). cov = s^2 (X'X)^-1 with s^2 = RSS / (n - p).
// Throws RankDeficientError when the scaled design has condition number
// above ~1e12, DimensionMismatchError on shape errors.
FitResult fit_ols(const DesignMatrix& design, const Eigen::VectorXd& response);

// Bernoulli logistic regression via iteratively reweighted least squares
// (Newton-Raphson on the score), zero start, step-halving when a step
// increases the deviance. Converges when the relative deviance change drops
// below 1e-8 or the score infinity-norm below 1e-8; at most 100 iterations
// and 30 halvings per step. cov is the inverse Fisher information at the
// final coefficients.
// Throws SingleClassResponseError, RankDeficientError, DidNotConvergeError,
// SeparationSuspectedError (any |coef| > 15 or any se > 1e3 at exit).
FitResult fit_logistic(const DesignMatrix& design, const Eigen::VectorXd& response);

// Standard normal CDF.
double normal_cdf(double z);

// Two-sided Wald p-value 2(1 - Phi(|coef/se|)); throws NonPositiveSEError.
double wald_p(double coef, double se);

}  // namespace gxmr
