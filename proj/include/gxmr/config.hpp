#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gxmr/param_set.hpp"
#include "gxmr/types.hpp"

namespace gxmr {

// ---------------------------------------------------------------------------
// Flat key-value config files:  `key = value`, one key per line, '#' starts
// a comment, keys are lower_snake_case. List values are comma-separated
// (surrounding [ ] brackets allowed). Unknown keys are hard errors so typos
// in Greek-letter parameters cannot silently pass.
// ---------------------------------------------------------------------------
class Config {
public:
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text);

    bool has(const std::string& key) const;

    // Typed getters; each marks the key consumed. Throw ConfigError on a
    // malformed value; the optional forms return nullopt for absent keys.
    std::optional<double> get_double(const std::string& key);
    std::optional<std::int64_t> get_int(const std::string& key);
    std::optional<bool> get_bool(const std::string& key);
    std::optional<std::string> get_string(const std::string& key);
    std::optional<std::vector<double>> get_double_list(const std::string& key);
    std::optional<std::vector<std::string>> get_string_list(const std::string& key);

    // Throws ConfigError listing any key never consumed by a getter.
    void reject_unknown() const;

    const std::vector<std::pair<std::string, std::string>>& entries() const {
        return entries_;
    }

private:
    std::string raw(const std::string& key);

    std::vector<std::pair<std::string, std::string>> entries_;
    std::vector<bool> consumed_;
};

// ---------------------------------------------------------------------------
// ParamSet <-> config
// ---------------------------------------------------------------------------

// Reads a scenario config. Accepts either a fully explicit ParamSet (one key
// per field), or a `setting = <id>` shortcut with `gamma_u`/`beta_u` that is
// expanded through setting_to_params; explicit keys then override the
// expansion. Validates before returning.
ParamSet load_params(Config& cfg);
ParamSet load_params_file(const std::string& path);

// One key per field, canonical order; parsing the output reproduces the
// input exactly.
std::string save_params(const ParamSet& p);

// Applies a single `key = value` override onto an existing ParamSet.
// Used for experiment-config overrides; rejects unknown keys.
void apply_param_key(ParamSet& p, const std::string& key, const std::string& value);

// Documented schema: (key, description) pairs for every accepted scenario
// key. Single source of truth for the parser, `--help`, and the README.
const std::vector<std::pair<std::string, std::string>>& param_schema();

// Same for experiment-level keys (grids, replication, methods).
const std::vector<std::pair<std::string, std::string>>& experiment_schema();

}  // namespace gxmr
