#include "gxmr/simgen.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace gxmr {

namespace {

constexpr Eigen::Index kBatchRows = 50000;     // case-control population batch
constexpr std::int64_t kPopulationCap = 100000000;  // QuotaUnreachable past this

Eigen::VectorXd draw_normals(RngStream& rng, Eigen::Index n, double sd = 1.0) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = sd * rng.normal();
    return v;
}

// Standard deviation about the mean, divisor n-1. The exposure itself is
// divided by this without centering.
double sample_sd(const Eigen::VectorXd& v) {
    const double mean = v.mean();
    return std::sqrt((v.array() - mean).square().sum() / static_cast<double>(v.size() - 1));
}

double expit(double t) { return 1.0 / (1.0 + std::exp(-t)); }

}  // namespace

Eigen::VectorXd gen_g(RngStream& rng, Eigen::Index n, const Eigen::VectorXd& g_iv,
                      GDependence dependence, double g_maf) {
    if (dependence == GDependence::Dependent && g_iv.size() != n) {
        throw DimensionMismatchError("dependent G sampler needs g_iv of length n");
    }
    Eigen::VectorXd g(n);
    if (dependence == GDependence::Independent) {
        for (Eigen::Index i = 0; i < n; ++i) g[i] = rng.binomial2(g_maf);
    } else {
        for (Eigen::Index i = 0; i < n; ++i) {
            const double p = g_iv[i] > 0.0 ? 2.0 * g_maf : g_maf;
            g[i] = rng.binomial2(p);
        }
    }
    return g;
}

ExposureDraw gen_exposure(RngStream& rng, Eigen::Index n, const ParamSet& p) {
    ExposureDraw d;
    d.g_iv = draw_normals(rng, n);
    d.z = draw_normals(rng, n);
    d.u = draw_normals(rng, n, std::sqrt(p.sigma_u2));
    Eigen::VectorXd eps_x = draw_normals(rng, n, std::sqrt(p.sigma_eps_x2));
    d.x_raw = (p.gamma0 + p.gamma_iv * d.g_iv.array() + p.gamma_z * d.z.array() +
               p.gamma_u * d.u.array() + eps_x.array())
                  .matrix();
    return d;
}

Dataset gen_linear(RngStream& rng, const ParamSet& p) {
    if (p.outcome_family != OutcomeFamily::Linear) {
        throw ConfigError("gen_linear called with a logistic parameter set");
    }
    const Eigen::Index n = static_cast<Eigen::Index>(p.n_obs);
    ExposureDraw e = gen_exposure(rng, n, p);
    Eigen::VectorXd g = gen_g(rng, n, e.g_iv, p.g_dependence, p.g_maf);

    Dataset d;
    d.n = n;
    d.x_scale = 1.0;
    if (p.standardize_x && n > 1) {
        d.x_scale = sample_sd(e.x_raw);
        d.x = e.x_raw / d.x_scale;
    } else {
        d.x = e.x_raw;
    }

    Eigen::VectorXd eps_y = draw_normals(rng, n, std::sqrt(p.sigma_y2));
    d.y = (p.beta0 + p.beta1 * d.x.array() + p.beta2 * g.array() +
           p.beta3 * d.x.array() * g.array() + p.beta_z * e.z.array() +
           p.beta_u * e.u.array() + eps_y.array())
              .matrix();
    d.g = std::move(g);
    d.z = std::move(e.z);
    d.g_iv = std::move(e.g_iv);
    d.u_hidden = std::move(e.u);
    return d;
}

std::pair<Dataset, double> gen_logistic_casecontrol(RngStream& rng, const ParamSet& p) {
    if (p.outcome_family != OutcomeFamily::Logistic) {
        throw ConfigError("gen_logistic_casecontrol called with a linear parameter set");
    }
    const std::int64_t want_cases = p.n_cases;
    const std::int64_t want_controls = p.n_controls;
    const Eigen::Index total = static_cast<Eigen::Index>(want_cases + want_controls);

    std::vector<double> ry, rx, rg, rz, rgiv, ru;
    ry.reserve(total);
    rx.reserve(total);
    rg.reserve(total);
    rz.reserve(total);
    rgiv.reserve(total);
    ru.reserve(total);

    std::int64_t got_cases = 0, got_controls = 0;
    std::int64_t drawn = 0, drawn_cases = 0;
    double sum_x = 0.0, sumsq_x = 0.0;

    while (got_cases < want_cases || got_controls < want_controls) {
        if (drawn >= kPopulationCap) {
            throw QuotaUnreachableError(
                "case-control quota not met after " + std::to_string(drawn) +
                " population draws (cases " + std::to_string(got_cases) + "/" +
                std::to_string(want_cases) + ", controls " + std::to_string(got_controls) +
                "/" + std::to_string(want_controls) + ")");
        }
        ExposureDraw e = gen_exposure(rng, kBatchRows, p);
        Eigen::VectorXd g = gen_g(rng, kBatchRows, e.g_iv, p.g_dependence, p.g_maf);

        Eigen::VectorXd x = e.x_raw;
        if (p.standardize_x) x /= sample_sd(e.x_raw);

        Eigen::VectorXd eta = (p.beta0 + p.beta1 * x.array() + p.beta2 * g.array() +
                               p.beta3 * x.array() * g.array() + p.beta_z * e.z.array() +
                               p.beta_u * e.u.array())
                                  .matrix();

        drawn += kBatchRows;
        sum_x += e.x_raw.sum();
        sumsq_x += e.x_raw.squaredNorm();
        for (Eigen::Index i = 0; i < kBatchRows; ++i) {
            const bool case_i = rng.bernoulli(expit(eta[i]));
            drawn_cases += case_i;
            const bool keep = case_i ? got_cases < want_cases : got_controls < want_controls;
            if (!keep) continue;
            (case_i ? got_cases : got_controls) += 1;
            ry.push_back(case_i ? 1.0 : 0.0);
            rx.push_back(x[i]);
            rg.push_back(g[i]);
            rz.push_back(e.z[i]);
            rgiv.push_back(e.g_iv[i]);
            ru.push_back(e.u[i]);
        }
    }

    Dataset d;
    d.n = total;
    auto to_vec = [](const std::vector<double>& v) {
        return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()))
            .eval();
    };
    d.y = to_vec(ry);
    d.x = to_vec(rx);
    d.g = to_vec(rg);
    d.z = to_vec(rz);
    d.g_iv = to_vec(rgiv);
    d.u_hidden = to_vec(ru);
    // Pooled population SD; each batch used its own (the two agree to ~0.3%
    // at the 50k batch size).
    const double nd = static_cast<double>(drawn);
    d.x_scale = p.standardize_x
                    ? std::sqrt((sumsq_x - sum_x * sum_x / nd) / (nd - 1.0))
                    : 1.0;
    const double prevalence = static_cast<double>(drawn_cases) / nd;
    return {std::move(d), prevalence};
}

Dataset gen_dataset(RngStream& rng, const ParamSet& p, double* prevalence_out) {
    if (p.outcome_family == OutcomeFamily::Linear) {
        if (prevalence_out) *prevalence_out = std::numeric_limits<double>::quiet_NaN();
        return gen_linear(rng, p);
    }
    auto [d, prev] = gen_logistic_casecontrol(rng, p);
    if (prevalence_out) *prevalence_out = prev;
    return d;
}

}  // namespace gxmr
