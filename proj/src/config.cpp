#include "gxmr/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gxmr {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    std::size_t b = s.find_last_not_of(" \t\r");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': cannot parse '" + v + "' as a number");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Config
// ---------------------------------------------------------------------------

Config Config::parse_string(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(lineno) +
                              ": expected 'key = value', got '" + line + "'");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        }
        for (const auto& [k, v] : cfg.entries_) {
            if (k == key) throw ConfigError("duplicate key '" + key + "'");
        }
        cfg.entries_.emplace_back(key, value);
    }
    cfg.consumed_.assign(cfg.entries_.size(), false);
    return cfg;
}

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str());
}

bool Config::has(const std::string& key) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const auto& e) { return e.first == key; });
}

std::string Config::raw(const std::string& key) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].first == key) {
            consumed_[i] = true;
            return entries_[i].second;
        }
    }
    throw ConfigError("missing key '" + key + "'");
}

std::optional<double> Config::get_double(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return parse_double(key, raw(key));
}

std::optional<std::int64_t> Config::get_int(const std::string& key) {
    if (!has(key)) return std::nullopt;
    const std::string v = raw(key);
    std::int64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        throw ConfigError("key '" + key + "': cannot parse '" + v + "' as an integer");
    }
    return out;
}

std::optional<bool> Config::get_bool(const std::string& key) {
    if (!has(key)) return std::nullopt;
    std::string v = raw(key);
    std::transform(v.begin(), v.end(), v.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (v == "true" || v == "on" || v == "1") return true;
    if (v == "false" || v == "off" || v == "0") return false;
    throw ConfigError("key '" + key + "': cannot parse '" + v + "' as a boolean");
}

std::optional<std::string> Config::get_string(const std::string& key) {
    if (!has(key)) return std::nullopt;
    std::string v = raw(key);
    if (v.size() >= 2 && v.front() == '"' && v.back() == '"') {
        v = v.substr(1, v.size() - 2);
    }
    return v;
}

std::optional<std::vector<std::string>> Config::get_string_list(const std::string& key) {
    if (!has(key)) return std::nullopt;
    std::string v = raw(key);
    if (v.size() >= 2 && v.front() == '[' && v.back() == ']') {
        v = v.substr(1, v.size() - 2);
    }
    std::vector<std::string> items;
    std::istringstream in(v);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

std::optional<std::vector<double>> Config::get_double_list(const std::string& key) {
    auto items = get_string_list(key);
    if (!items) return std::nullopt;
    std::vector<double> out;
    out.reserve(items->size());
    for (const auto& s : *items) out.push_back(parse_double(key, s));
    return out;
}

void Config::reject_unknown() const {
    std::string unknown;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!consumed_[i]) {
            if (!unknown.empty()) unknown += ", ";
            unknown += "'" + entries_[i].first + "'";
        }
    }
    if (!unknown.empty()) throw ConfigError("unknown config key(s): " + unknown);
}

// ---------------------------------------------------------------------------
// ParamSet schema
// ---------------------------------------------------------------------------

const std::vector<std::pair<std::string, std::string>>& param_schema() {
    static const std::vector<std::pair<std::string, std::string>> schema = {
        {"setting", "scenario shortcut IA|IB|IIA|IIB|IIIA|IIIB|IVA|IVB; expands to the full grid-cell parameters"},
        {"beta0", "outcome intercept"},
        {"beta1", "exposure main effect"},
        {"beta2", "G main effect"},
        {"beta3", "GxE interaction effect"},
        {"beta_z", "measured-confounder effect on the outcome"},
        {"beta_u", "unmeasured-confounder effect on the outcome"},
        {"gamma0", "exposure intercept"},
        {"gamma_iv", "instrument effect on the exposure"},
        {"gamma_z", "Z effect on the exposure"},
        {"gamma_u", "U effect on the exposure"},
        {"sigma_u2", "variance of U (> 0)"},
        {"sigma_eps_x2", "variance of the exposure error (> 0)"},
        {"sigma_y2", "variance of the linear-model outcome error (> 0)"},
        {"outcome_family", "linear | logistic"},
        {"g_dependence", "independent | dependent (G on the instrument)"},
        {"g_maf", "binomial probability for G, in (0,1)"},
        {"n_obs", "linear-family sample size (>= 1)"},
        {"n_cases", "logistic case quota (>= 1)"},
        {"n_controls", "logistic control quota (>= 1)"},
        {"standardize_x", "scale the exposure to unit variance (true|false)"},
    };
    return schema;
}

const std::vector<std::pair<std::string, std::string>>& experiment_schema() {
    static const std::vector<std::pair<std::string, std::string>> schema = {
        {"setting", "scenario IA|IB|IIA|IIB|IIIA|IIIB|IVA|IVB (required)"},
        {"gamma_u_grid", "comma-separated gamma_u values (default 0, 0.5, 1, 2, 4)"},
        {"beta_u_grid", "comma-separated beta_u values (default 0, 1.5, 3)"},
        {"n_reps", "Monte Carlo replicates per grid cell (default 500)"},
        {"alpha", "test level for the interaction null (default 0.05)"},
        {"methods", "comma-separated subset of naive, 2sps, 2sps_adj, 2sps_a, 2sps_adj_a, 2sri (default all)"},
    };
    return schema;
}

namespace {

// Dispatch for one explicit ParamSet key; returns false if the key is not a
// ParamSet field.
bool set_param_field(ParamSet& p, const std::string& key, const std::string& value) {
    auto num = [&] { return parse_double(key, value); };
    if (key == "beta0") { p.beta0 = num(); return true; }
    if (key == "beta1") { p.beta1 = num(); return true; }
    if (key == "beta2") { p.beta2 = num(); return true; }
    if (key == "beta3") { p.beta3 = num(); return true; }
    if (key == "beta_z") { p.beta_z = num(); return true; }
    if (key == "beta_u") { p.beta_u = num(); return true; }
    if (key == "gamma0") { p.gamma0 = num(); return true; }
    if (key == "gamma_iv") { p.gamma_iv = num(); return true; }
    if (key == "gamma_z") { p.gamma_z = num(); return true; }
    if (key == "gamma_u") { p.gamma_u = num(); return true; }
    if (key == "sigma_u2") { p.sigma_u2 = num(); return true; }
    if (key == "sigma_eps_x2") { p.sigma_eps_x2 = num(); return true; }
    if (key == "sigma_y2") { p.sigma_y2 = num(); return true; }
    if (key == "g_maf") { p.g_maf = num(); return true; }
    if (key == "outcome_family") { p.outcome_family = outcome_family_from_string(value); return true; }
    if (key == "g_dependence") { p.g_dependence = g_dependence_from_string(value); return true; }
    if (key == "n_obs" || key == "n_cases" || key == "n_controls") {
        double d = num();
        if (d < 1 || d != std::floor(d)) {
            throw ConfigError("key '" + key + "' must be a positive integer");
        }
        auto n = static_cast<std::int64_t>(d);
        if (key == "n_obs") p.n_obs = n;
        else if (key == "n_cases") p.n_cases = n;
        else p.n_controls = n;
        return true;
    }
    if (key == "standardize_x") {
        std::string v = value;
        std::transform(v.begin(), v.end(), v.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (v == "true" || v == "on" || v == "1") p.standardize_x = true;
        else if (v == "false" || v == "off" || v == "0") p.standardize_x = false;
        else throw ConfigError("key 'standardize_x': cannot parse '" + value + "' as a boolean");
        return true;
    }
    return false;
}

}  // namespace

void apply_param_key(ParamSet& p, const std::string& key, const std::string& value) {
    if (!set_param_field(p, key, value)) {
        throw ConfigError("unknown parameter key '" + key + "'");
    }
}

ParamSet load_params(Config& cfg) {
    ParamSet p;
    const bool via_setting = cfg.has("setting");
    if (via_setting) {
        Setting setting{setting_from_string(*cfg.get_string("setting"))};
        double gu = cfg.get_double("gamma_u").value_or(0.0);
        double bu = cfg.get_double("beta_u").value_or(0.0);
        p = setting_to_params(setting, gu, bu);
    }
    for (const auto& [key, value] : cfg.entries()) {
        if (key == "setting") continue;
        if (via_setting && (key == "gamma_u" || key == "beta_u")) continue;
        if (set_param_field(p, key, value)) {
            (void)cfg.get_string(key);  // mark consumed
        }
    }
    cfg.reject_unknown();
    p.validate();
    return p;
}

ParamSet load_params_file(const std::string& path) {
    Config cfg = Config::parse_file(path);
    return load_params(cfg);
}

std::string save_params(const ParamSet& p) {
    std::ostringstream out;
    out << "beta0 = " << fmt_double(p.beta0) << "\n";
    out << "beta1 = " << fmt_double(p.beta1) << "\n";
    out << "beta2 = " << fmt_double(p.beta2) << "\n";
    out << "beta3 = " << fmt_double(p.beta3) << "\n";
    out << "beta_z = " << fmt_double(p.beta_z) << "\n";
    out << "beta_u = " << fmt_double(p.beta_u) << "\n";
    out << "gamma0 = " << fmt_double(p.gamma0) << "\n";
    out << "gamma_iv = " << fmt_double(p.gamma_iv) << "\n";
    out << "gamma_z = " << fmt_double(p.gamma_z) << "\n";
    out << "gamma_u = " << fmt_double(p.gamma_u) << "\n";
    out << "sigma_u2 = " << fmt_double(p.sigma_u2) << "\n";
    out << "sigma_eps_x2 = " << fmt_double(p.sigma_eps_x2) << "\n";
    out << "sigma_y2 = " << fmt_double(p.sigma_y2) << "\n";
    out << "outcome_family = " << to_string(p.outcome_family) << "\n";
    out << "g_dependence = " << to_string(p.g_dependence) << "\n";
    out << "g_maf = " << fmt_double(p.g_maf) << "\n";
    out << "n_obs = " << p.n_obs << "\n";
    out << "n_cases = " << p.n_cases << "\n";
    out << "n_controls = " << p.n_controls << "\n";
    out << "standardize_x = " << (p.standardize_x ? "true" : "false") << "\n";
    return out.str();
}

}  // namespace gxmr
