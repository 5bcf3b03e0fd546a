#include "gxmr/estimators.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace gxmr {

namespace {

// Fixed positions shared by every second-stage design:
// 0 intercept, 1 exposure column, 2 g, 3 xg product.
constexpr Eigen::Index kExposureCol = 1;
constexpr Eigen::Index kGCol = 2;
constexpr Eigen::Index kProductCol = 3;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

FirstStage first_stage(const Dataset& d) {
    if (d.n <= 3) {
        throw DimensionMismatchError("first stage needs more than 3 observations, got " +
                                     std::to_string(d.n));
    }
    DesignMatrix design = DesignMatrix::with_intercept(d.n);
    design.add("g_iv", d.g_iv);
    design.add("z", d.z);
    FitResult fit = fit_ols(design, d.x);

    FirstStage fs;
    fs.alpha0 = fit.coef[0];
    fs.alpha1 = fit.coef[1];
    fs.alpha_z = fit.coef[2];
    fs.xhat = fs.alpha0 + (fs.alpha1 * d.g_iv.array() + fs.alpha_z * d.z.array());
    fs.resid = d.x - fs.xhat;
    fs.xhat_a = fs.alpha1 * d.g_iv;
    fs.resid_a = d.x - fs.xhat_a;
    return fs;
}

DesignMatrix second_stage_design(Method method, const Dataset& d, const FirstStage& fs) {
    DesignMatrix design = DesignMatrix::with_intercept(d.n);
    switch (method) {
        case Method::Naive:
            design.add("x", d.x);
            design.add("g", d.g);
            design.add("xg", d.x.cwiseProduct(d.g));
            design.add("z", d.z);
            break;
        case Method::TwoSPS:
            design.add("xhat", fs.xhat);
            design.add("g", d.g);
            design.add("xg", fs.xhat.cwiseProduct(d.g));
            design.add("z", d.z);
            break;
        case Method::TwoSPSAdj:
            design.add("xhat", fs.xhat);
            design.add("g", d.g);
            design.add("xg", fs.xhat.cwiseProduct(d.g));
            design.add("z", d.z);
            design.add("resid", fs.resid);
            break;
        case Method::TwoSPSA:
            design.add("xhat_a", fs.xhat_a);
            design.add("g", d.g);
            design.add("xg", fs.xhat_a.cwiseProduct(d.g));
            design.add("z", d.z);
            design.add("zg", d.z.cwiseProduct(d.g));
            break;
        case Method::TwoSPSAdjA:
            design.add("xhat_a", fs.xhat_a);
            design.add("g", d.g);
            design.add("xg", fs.xhat_a.cwiseProduct(d.g));
            design.add("z", d.z);
            design.add("zg", d.z.cwiseProduct(d.g));
            design.add("resid_a", fs.resid_a);
            break;
        case Method::TwoSRI:
            design.add("x", d.x);
            design.add("g", d.g);
            design.add("xg", d.x.cwiseProduct(d.g));
            design.add("z", d.z);
            design.add("resid", fs.resid);
            break;
    }
    return design;
}

EstimateRow estimate_with_first_stage(Method method, const Dataset& d, OutcomeFamily family,
                                      const FirstStage& fs) {
    EstimateRow row;
    row.method = method;
    try {
        DesignMatrix design = second_stage_design(method, d, fs);
        FitResult fit = family == OutcomeFamily::Linear ? fit_ols(design, d.y)
                                                        : fit_logistic(design, d.y);
        row.b1 = fit.coef[kExposureCol];
        row.b2 = fit.coef[kGCol];
        row.b3 = fit.coef[kProductCol];
        row.se1 = fit.se[kExposureCol];
        row.se2 = fit.se[kGCol];
        row.se3 = fit.se[kProductCol];
        row.p3 = wald_p(row.b3, row.se3);
        row.full_fit = std::move(fit);
    } catch (const Error& e) {
        constexpr double nan = std::numeric_limits<double>::quiet_NaN();
        row.b1 = row.b2 = row.b3 = nan;
        row.se1 = row.se2 = row.se3 = nan;
        row.p3 = nan;
        row.error = to_string(method) + ": " + e.what();
    }
    return row;
}

EstimateRow estimate(Method method, const Dataset& d, OutcomeFamily family) {
    if (method == Method::Naive) {
        // The naive estimator ignores the instrument entirely; no first stage.
        FirstStage unused;
        return estimate_with_first_stage(method, d, family, unused);
    }
    FirstStage fs = first_stage(d);
    return estimate_with_first_stage(method, d, family, fs);
}

std::vector<EstimateRow> run_methods(const Dataset& d, OutcomeFamily family,
                                     const std::vector<Method>& methods) {
    bool needs_first_stage = false;
    for (Method m : methods) needs_first_stage |= (m != Method::Naive);

    FirstStage fs;
    std::optional<std::string> fs_error;
    if (needs_first_stage) {
        try {
            fs = first_stage(d);
        } catch (const Error& e) {
            fs_error = e.what();
        }
    }

    std::vector<EstimateRow> rows;
    rows.reserve(methods.size());
    for (Method m : methods) {
        if (m != Method::Naive && fs_error) {
            EstimateRow row;
            row.method = m;
            constexpr double nan = std::numeric_limits<double>::quiet_NaN();
            row.b1 = row.b2 = row.b3 = nan;
            row.se1 = row.se2 = row.se3 = nan;
            row.p3 = nan;
            row.error = to_string(m) + ": first stage: " + *fs_error;
            rows.push_back(std::move(row));
            continue;
        }
        rows.push_back(estimate_with_first_stage(m, d, family, fs));
    }
    return rows;
}

std::vector<EstimateRow> run_all_methods(const Dataset& d, OutcomeFamily family) {
    std::vector<Method> all(std::begin(kAllMethods), std::end(kAllMethods));
    return run_methods(d, family, all);
}

std::string EstimateRow::to_csv_line() const {
    std::string out = to_string(method);
    for (double v : {b1, se1, b2, se2, b3, se3, p3}) {
        out += ',';
        out += fmt(v);
    }
    out += ',';
    out += ok() && full_fit.converged ? '1' : '0';
    return out;
}

}  // namespace gxmr
