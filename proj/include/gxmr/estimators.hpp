#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "gxmr/dataset.hpp"
#include "gxmr/regress.hpp"
#include "gxmr/types.hpp"

namespace gxmr {

// ---------------------------------------------------------------------------
// FirstStage — the exposure regressed on (1, G_IV, Z), plus the
// instrument-only variant that reuses the same fitted slope.
// ---------------------------------------------------------------------------
struct FirstStage {
    double alpha0 = 0.0;
    double alpha1 = 0.0;   // instrument coefficient
    double alpha_z = 0.0;
    Eigen::VectorXd xhat;     // alpha0 + alpha1*g_iv + alpha_z*z
    Eigen::VectorXd resid;    // x - xhat
    Eigen::VectorXd xhat_a;   // alpha1*g_iv
    Eigen::VectorXd resid_a;  // x - xhat_a
};

// OLS of x on (1, g_iv, z). Requires d.n > 3; propagates RankDeficientError.
FirstStage first_stage(const Dataset& d);

// ---------------------------------------------------------------------------
// EstimateRow — one method's (b1, b2, b3), their standard errors, and the
// two-sided Wald p-value for the interaction null. A failed fit keeps the
// method tag, carries the error message, and leaves the numbers NaN.
// ---------------------------------------------------------------------------
struct EstimateRow {
    Method method = Method::Naive;
    double b1 = 0.0, b2 = 0.0, b3 = 0.0;
    double se1 = 0.0, se2 = 0.0, se3 = 0.0;
    double p3 = 0.0;
    FitResult full_fit;
    std::optional<std::string> error;

    bool ok() const { return !error.has_value(); }

    // `method,b1,se1,b2,se2,b3,se3,p3,converged`
    std::string to_csv_line() const;
};

inline const char* estimate_csv_header() {
    return "method,b1,se1,b2,se2,b3,se3,p3,converged";
}

// Second-stage regressor set for one method, intercept first; the exposure
// column (x, xhat or xhat_a), then g, the product column xg, z, and the
// method-specific extras (zg, first-stage residual).
DesignMatrix second_stage_design(Method method, const Dataset& d, const FirstStage& fs);

// Runs the first stage (skipped for Naive), builds the design, fits OLS or
// logistic per family, and extracts the three target coefficients. Fitter
// errors are rethrown tagged with the method name.
EstimateRow estimate(Method method, const Dataset& d, OutcomeFamily family);

// As estimate(), but with a precomputed first stage shared across methods.
EstimateRow estimate_with_first_stage(Method method, const Dataset& d, OutcomeFamily family,
                                      const FirstStage& fs);

// All six methods on one dataset, one shared first stage, fixed order
// (naive, 2sps, 2sps_adj, 2sps_a, 2sps_adj_a, 2sri). Per-method errors are
// recorded in-row and do not abort the batch.
std::vector<EstimateRow> run_all_methods(const Dataset& d, OutcomeFamily family);

// Subset variant preserving the canonical order of `methods`.
std::vector<EstimateRow> run_methods(const Dataset& d, OutcomeFamily family,
                                     const std::vector<Method>& methods);

}  // namespace gxmr
