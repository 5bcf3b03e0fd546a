#pragma once

#include <Eigen/Dense>
#include <utility>

#include "gxmr/dataset.hpp"
#include "gxmr/param_set.hpp"
#include "gxmr/rng.hpp"

namespace gxmr {

// Latent exposure-model draws, one row per observation, all on the raw scale.
struct ExposureDraw {
    Eigen::VectorXd x_raw;
    Eigen::VectorXd z;
    Eigen::VectorXd g_iv;
    Eigen::VectorXd u;
};

// G sampler. Independent: Bin(2, g_maf) i.i.d. Dependent: per-row
// Bin(2, g_maf + g_maf * 1{g_iv > 0}).
Eigen::VectorXd gen_g(RngStream& rng, Eigen::Index n, const Eigen::VectorXd& g_iv,
                      GDependence dependence, double g_maf);

// x_raw = gamma0 + gamma_iv*g_iv + gamma_z*z + gamma_u*u + eps_x with
// G_IV, Z standard normal and U, eps_x scaled by the configured variances.
ExposureDraw gen_exposure(RngStream& rng, Eigen::Index n, const ParamSet& p);

// Continuous-outcome sample of p.n_obs rows. The exposure is divided by its
// sample standard deviation (no centering) when standardize_x is set; a
// single-row sample skips standardization.
Dataset gen_linear(RngStream& rng, const ParamSet& p);

// Case-control sample: population batches are drawn from the exposure model
// plus Bernoulli(logit^-1) outcomes until both quotas fill. Each batch is
// standardized by its own population standard deviation. Returns the retained
// dataset (cases first by draw order is NOT guaranteed; rows keep draw order)
// and the population prevalence over every draw made.
// Throws QuotaUnreachableError past a 1e8-row population cap.
std::pair<Dataset, double> gen_logistic_casecontrol(RngStream& rng, const ParamSet& p);

// Dispatches on p.outcome_family; prevalence is 1-valued only for logistic.
Dataset gen_dataset(RngStream& rng, const ParamSet& p, double* prevalence_out = nullptr);

}  // namespace gxmr
