#include "gxmr/regress.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gxmr {

namespace {

constexpr double kRankThreshold = 1e-12;   // pivot ratio ~ condition bound 1e12
constexpr double kDevTol = 1e-8;           // relative deviance change
constexpr double kScoreTol = 1e-8;         // score infinity norm
constexpr int kMaxIter = 100;
constexpr int kMaxHalvings = 30;
constexpr double kSeparationCoef = 15.0;   // fitted probabilities saturate past e^15
constexpr double kSeparationSE = 1e3;

// Column 2-norms, used to equilibrate the design before factorization.
Eigen::VectorXd column_scales(const Eigen::MatrixXd& x) {
    Eigen::VectorXd d = x.colwise().norm();
    for (Eigen::Index j = 0; j < d.size(); ++j) {
        if (!(d[j] > 0.0)) d[j] = 1.0;  // all-zero column; QR flags it as rank deficient
    }
    return d;
}

// (A'A)^-1 from a pivoted QR of A. A must have full column rank.
Eigen::MatrixXd gram_inverse(const Eigen::ColPivHouseholderQR<Eigen::MatrixXd>& qr) {
    const Eigen::Index p = qr.cols();
    Eigen::MatrixXd r = qr.matrixR().topLeftCorner(p, p).triangularView<Eigen::Upper>();
    Eigen::MatrixXd rinv = r.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(p, p));
    Eigen::MatrixXd m = rinv * rinv.transpose();
    const auto& perm = qr.colsPermutation();
    return perm * m * perm.transpose();
}

double logit_deviance(const Eigen::VectorXd& eta, const Eigen::VectorXd& y) {
    // 2 * sum[ log(1 + exp(eta)) - y * eta ], evaluated stably.
    double dev = 0.0;
    for (Eigen::Index i = 0; i < eta.size(); ++i) {
        const double e = eta[i];
        const double log1pe = e > 0.0 ? e + std::log1p(std::exp(-e)) : std::log1p(std::exp(e));
        dev += log1pe - y[i] * e;
    }
    return 2.0 * dev;
}

}  // namespace

// ---------------------------------------------------------------------------
// DesignMatrix
// ---------------------------------------------------------------------------

DesignMatrix DesignMatrix::with_intercept(Eigen::Index n_rows) {
    DesignMatrix d;
    d.mat_ = Eigen::MatrixXd::Ones(n_rows, 1);
    d.labels_ = {"intercept"};
    return d;
}

void DesignMatrix::add(const std::string& label, const Eigen::VectorXd& column) {
    if (column.size() != mat_.rows()) {
        throw DimensionMismatchError("column '" + label + "' has " +
                                     std::to_string(column.size()) + " rows, design has " +
                                     std::to_string(mat_.rows()));
    }
    for (const auto& l : labels_) {
        if (l == label) throw ConfigError("duplicate design column label '" + label + "'");
    }
    mat_.conservativeResize(Eigen::NoChange, mat_.cols() + 1);
    mat_.col(mat_.cols() - 1) = column;
    labels_.push_back(label);
}

Eigen::Index DesignMatrix::index_of(const std::string& label) const {
    for (std::size_t j = 0; j < labels_.size(); ++j) {
        if (labels_[j] == label) return static_cast<Eigen::Index>(j);
    }
    throw ConfigError("no design column labeled '" + label + "'");
}

// ---------------------------------------------------------------------------
// OLS
// ---------------------------------------------------------------------------

FitResult fit_ols(const DesignMatrix& design, const Eigen::VectorXd& response) {
    const Eigen::MatrixXd& x = design.matrix();
    const Eigen::Index n = x.rows();
    const Eigen::Index p = x.cols();
    if (response.size() != n) {
        throw DimensionMismatchError("response length " + std::to_string(response.size()) +
                                     " != design rows " + std::to_string(n));
    }
    if (n <= p) {
        throw DimensionMismatchError("need n_rows > n_columns, got " + std::to_string(n) +
                                     " x " + std::to_string(p));
    }

    const Eigen::VectorXd d = column_scales(x);
    Eigen::MatrixXd xs = x * d.cwiseInverse().asDiagonal();

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(xs);
    qr.setThreshold(kRankThreshold);
    if (qr.rank() < p) {
        throw RankDeficientError("design is rank deficient (rank " +
                                 std::to_string(qr.rank()) + " of " + std::to_string(p) + ")");
    }

    Eigen::VectorXd coef_scaled = qr.solve(response);
    Eigen::VectorXd coef = coef_scaled.cwiseQuotient(d);

    Eigen::VectorXd resid = response - x * coef;
    const double rss = resid.squaredNorm();
    const double s2 = rss / static_cast<double>(n - p);

    Eigen::MatrixXd gram_inv_scaled = gram_inverse(qr);
    Eigen::MatrixXd cov =
        s2 * (d.cwiseInverse().asDiagonal() * gram_inv_scaled * d.cwiseInverse().asDiagonal());
    cov = 0.5 * (cov + cov.transpose()).eval();  // symmetrize roundoff

    FitResult out;
    out.coef = std::move(coef);
    out.cov = std::move(cov);
    out.se = out.cov.diagonal().cwiseMax(0.0).cwiseSqrt();
    out.converged = true;
    out.n_iter = 1;
    out.deviance_or_rss = rss;
    out.column_names = design.labels();
    return out;
}

// ---------------------------------------------------------------------------
// Logistic IRLS
// ---------------------------------------------------------------------------

FitResult fit_logistic(const DesignMatrix& design, const Eigen::VectorXd& response) {
    const Eigen::MatrixXd& x = design.matrix();
    const Eigen::Index n = x.rows();
    const Eigen::Index p = x.cols();
    if (response.size() != n) {
        throw DimensionMismatchError("response length " + std::to_string(response.size()) +
                                     " != design rows " + std::to_string(n));
    }
    if (n <= p) {
        throw DimensionMismatchError("need n_rows > n_columns, got " + std::to_string(n) +
                                     " x " + std::to_string(p));
    }
    bool has_zero = false, has_one = false;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (response[i] == 0.0) has_zero = true;
        else if (response[i] == 1.0) has_one = true;
        else throw MalformedInputError("logistic response must be 0/1");
    }
    if (!has_zero || !has_one) {
        throw SingleClassResponseError("response contains a single class");
    }

    const Eigen::VectorXd d = column_scales(x);
    Eigen::MatrixXd xs = x * d.cwiseInverse().asDiagonal();
    {
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(xs);
        qr.setThreshold(kRankThreshold);
        if (qr.rank() < p) {
            throw RankDeficientError("design is rank deficient (rank " +
                                     std::to_string(qr.rank()) + " of " + std::to_string(p) + ")");
        }
    }

    Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
    Eigen::VectorXd eta = Eigen::VectorXd::Zero(n);
    double dev = logit_deviance(eta, response);

    bool converged = false;
    int iter = 0;
    Eigen::VectorXd mu(n), w(n);
    for (; iter < kMaxIter; ++iter) {
        mu = (1.0 + (-eta.array()).exp()).inverse();
        w = (mu.array() * (1.0 - mu.array())).max(1e-10);

        Eigen::VectorXd score = x.transpose() * (response - mu);
        if (score.lpNorm<Eigen::Infinity>() < kScoreTol) {
            converged = true;
            break;
        }

        // Newton step: solve the weighted least-squares system by QR of
        // sqrt(W) X rather than forming X'WX.
        Eigen::VectorXd sw = w.cwiseSqrt();
        Eigen::MatrixXd a = sw.asDiagonal() * x;
        Eigen::VectorXd b = (response - mu).cwiseQuotient(sw);
        Eigen::VectorXd delta = a.householderQr().solve(b);

        double step = 1.0;
        Eigen::VectorXd beta_new, eta_new;
        double dev_new = 0.0;
        int halvings = 0;
        for (;; ++halvings) {
            beta_new = beta + step * delta;
            eta_new = x * beta_new;
            dev_new = logit_deviance(eta_new, response);
            if (dev_new <= dev + 1e-12 || halvings >= kMaxHalvings) break;
            step *= 0.5;
        }
        if (halvings >= kMaxHalvings && dev_new > dev + 1e-12) {
            break;  // halving budget exhausted; resolved below
        }

        beta = std::move(beta_new);
        eta = std::move(eta_new);
        const double rel_change = std::abs(dev - dev_new) / (std::abs(dev_new) + 1.0);
        dev = dev_new;
        if (rel_change < kDevTol) {
            converged = true;
            ++iter;
            break;
        }
    }

    // Inverse Fisher information recomputed at the final coefficients.
    mu = (1.0 + (-eta.array()).exp()).inverse();
    w = (mu.array() * (1.0 - mu.array())).max(1e-10);
    Eigen::MatrixXd info = x.transpose() * w.asDiagonal() * x;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(info);
    Eigen::MatrixXd cov = ldlt.solve(Eigen::MatrixXd::Identity(p, p));
    cov = 0.5 * (cov + cov.transpose()).eval();
    Eigen::VectorXd se = cov.diagonal().cwiseMax(0.0).cwiseSqrt();

    if (beta.cwiseAbs().maxCoeff() > kSeparationCoef || se.maxCoeff() > kSeparationSE) {
        throw SeparationSuspectedError("quasi-complete separation suspected (max |coef| = " +
                                       std::to_string(beta.cwiseAbs().maxCoeff()) + ")");
    }
    if (!converged) {
        throw DidNotConvergeError("IRLS exhausted its iteration budget (" +
                                  std::to_string(kMaxIter) + " iterations)");
    }

    FitResult out;
    out.coef = std::move(beta);
    out.cov = std::move(cov);
    out.se = std::move(se);
    out.converged = true;
    out.n_iter = iter;
    out.deviance_or_rss = dev;
    out.column_names = design.labels();
    return out;
}

// ---------------------------------------------------------------------------
// Wald
// ---------------------------------------------------------------------------

double normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

double wald_p(double coef, double se) {
    if (!(se > 0.0)) throw NonPositiveSEError("standard error must be positive");
    const double z = std::abs(coef / se);
    return std::erfc(z / std::numbers::sqrt2);
}

}  // namespace gxmr
