#include "gxmr/param_set.hpp"

#include <cmath>

namespace gxmr {

void ParamSet::validate() const {
    auto finite = [](double v) { return std::isfinite(v); };
    if (!finite(beta0) || !finite(beta1) || !finite(beta2) || !finite(beta3) ||
        !finite(beta_z) || !finite(beta_u) || !finite(gamma0) || !finite(gamma_iv) ||
        !finite(gamma_z) || !finite(gamma_u)) {
        throw ConfigError("non-finite regression coefficient in parameter set");
    }
    if (!(sigma_u2 > 0.0) || !(sigma_eps_x2 > 0.0) || !(sigma_y2 > 0.0)) {
        throw ConfigError("sigma_u2, sigma_eps_x2 and sigma_y2 must be strictly positive");
    }
    if (!(g_maf > 0.0 && g_maf < 1.0)) {
        throw ConfigError("g_maf must lie in (0, 1)");
    }
    if (n_obs < 1 || n_cases < 1 || n_controls < 1) {
        throw ConfigError("n_obs, n_cases and n_controls must all be >= 1");
    }
}

OutcomeFamily Setting::outcome_family() const {
    switch (id) {
        case SettingId::IA:
        case SettingId::IB:
        case SettingId::IIA:
        case SettingId::IIB:
            return OutcomeFamily::Linear;
        default:
            return OutcomeFamily::Logistic;
    }
}

double Setting::beta3() const {
    switch (id) {
        case SettingId::IA:
        case SettingId::IIA:
        case SettingId::IIIA:
        case SettingId::IVA:
            return 0.5;
        default:
            return 0.0;
    }
}

GDependence Setting::g_dependence() const {
    switch (id) {
        case SettingId::IA:
        case SettingId::IB:
        case SettingId::IIIA:
        case SettingId::IIIB:
            return GDependence::Independent;
        default:
            return GDependence::Dependent;
    }
}

std::string to_string(SettingId id) {
    switch (id) {
        case SettingId::IA:   return "IA";
        case SettingId::IB:   return "IB";
        case SettingId::IIA:  return "IIA";
        case SettingId::IIB:  return "IIB";
        case SettingId::IIIA: return "IIIA";
        case SettingId::IIIB: return "IIIB";
        case SettingId::IVA:  return "IVA";
        case SettingId::IVB:  return "IVB";
    }
    return "?";
}

SettingId setting_from_string(const std::string& s) {
    std::string v;
    v.reserve(s.size());
    for (char c : s) {
        if (c == '.' || c == '_' || c == ' ') continue;  // accept "I.A" style too
        v.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    for (SettingId id : kAllSettings) {
        if (to_string(id) == v) return id;
    }
    throw ConfigError("unknown setting '" + s + "' (expected IA|IB|IIA|IIB|IIIA|IIIB|IVA|IVB)");
}

ParamSet setting_to_params(Setting setting, double gamma_u, double beta_u) {
    ParamSet p;
    p.outcome_family = setting.outcome_family();
    p.beta0 = p.outcome_family == OutcomeFamily::Linear ? 0.0 : std::log(0.01 / 0.99);
    p.beta1 = 1.0;
    p.beta2 = 0.5;
    p.beta3 = setting.beta3();
    p.beta_z = 0.5;
    p.beta_u = beta_u;
    p.gamma0 = 0.0;
    p.gamma_iv = 0.5;
    p.gamma_z = 0.5;
    p.gamma_u = gamma_u;
    p.sigma_u2 = 1.0;
    p.sigma_eps_x2 = 1.0;
    p.sigma_y2 = 1.0;
    p.g_dependence = setting.g_dependence();
    p.g_maf = 0.3;
    p.n_obs = 10000;
    p.n_cases = 5000;
    p.n_controls = 5000;
    p.standardize_x = true;
    p.validate();
    return p;
}

}  // namespace gxmr
