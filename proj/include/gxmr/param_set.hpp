#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "gxmr/types.hpp"

namespace gxmr {

// ---------------------------------------------------------------------------
// ParamSet — every parameter of the outcome and exposure models plus the
// distributional settings. The single source of truth for one scenario.
// Immutable by convention after validate(); safe to share across threads.
// ---------------------------------------------------------------------------
struct ParamSet {
    // Outcome model: y = beta0 + beta1*x + beta2*g + beta3*x*g
    //                    + beta_z*z + beta_u*u + eps_y
    double beta0 = 0.0;
    double beta1 = 1.0;
    double beta2 = 0.5;
    double beta3 = 0.5;
    double beta_z = 0.5;
    double beta_u = 0.0;

    // Exposure model: x = gamma0 + gamma_iv*g_iv + gamma_z*z + gamma_u*u + eps_x
    double gamma0 = 0.0;
    double gamma_iv = 0.5;
    double gamma_z = 0.5;
    double gamma_u = 0.0;

    double sigma_u2 = 1.0;      // Var(U)
    double sigma_eps_x2 = 1.0;  // Var(eps_x)
    double sigma_y2 = 1.0;      // Var(eps_y), linear family only

    OutcomeFamily outcome_family = OutcomeFamily::Linear;
    GDependence g_dependence = GDependence::Independent;
    double g_maf = 0.3;  // Bin(2, g_maf) for the independent sampler

    std::int64_t n_obs = 10000;    // linear-family sample size
    std::int64_t n_cases = 5000;   // logistic quota
    std::int64_t n_controls = 5000;

    bool standardize_x = true;

    // Throws ConfigError on violated invariants (non-positive variances,
    // g_maf outside (0,1), counts < 1, non-finite coefficients).
    void validate() const;

    bool operator==(const ParamSet&) const = default;
};

// ---------------------------------------------------------------------------
// Setting — one of the eight simulation settings. Rows I/II are linear,
// III/IV logistic; A means beta3 = 0.5, B means beta3 = 0; I/III sample G
// independently of G_IV, II/IV dependently.
// ---------------------------------------------------------------------------
enum class SettingId { IA, IB, IIA, IIB, IIIA, IIIB, IVA, IVB };

inline constexpr SettingId kAllSettings[] = {
    SettingId::IA,   SettingId::IB,   SettingId::IIA, SettingId::IIB,
    SettingId::IIIA, SettingId::IIIB, SettingId::IVA, SettingId::IVB,
};

struct Setting {
    SettingId id;

    OutcomeFamily outcome_family() const;
    double beta3() const;
    GDependence g_dependence() const;
};

std::string to_string(SettingId id);
SettingId setting_from_string(const std::string& s);

// Populates the full ParamSet for one cell of the simulation grid:
// linear family uses (beta0, beta1, beta2, beta_z) = (0, 1, 0.5, 0.5),
// logistic swaps beta0 for log(0.01/0.99); always gamma0 = 0,
// gamma_iv = gamma_z = 0.5, sigma_u2 = sigma_eps_x2 = 1, g_maf = 0.3.
ParamSet setting_to_params(Setting setting, double gamma_u, double beta_u);

}  // namespace gxmr
