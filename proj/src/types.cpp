#include "gxmr/types.hpp"

#include <algorithm>
#include <cctype>

namespace gxmr {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

}  // namespace

std::string to_string(OutcomeFamily f) {
    return f == OutcomeFamily::Linear ? "linear" : "logistic";
}

std::string to_string(GDependence d) {
    return d == GDependence::Independent ? "independent" : "dependent";
}

std::string to_string(Method m) {
    switch (m) {
        case Method::Naive:      return "naive";
        case Method::TwoSPS:     return "2sps";
        case Method::TwoSPSAdj:  return "2sps_adj";
        case Method::TwoSPSA:    return "2sps_a";
        case Method::TwoSPSAdjA: return "2sps_adj_a";
        case Method::TwoSRI:     return "2sri";
    }
    return "?";
}

OutcomeFamily outcome_family_from_string(const std::string& s) {
    const std::string v = lower(s);
    if (v == "linear") return OutcomeFamily::Linear;
    if (v == "logistic") return OutcomeFamily::Logistic;
    throw ConfigError("unknown outcome family '" + s + "' (expected linear|logistic)");
}

GDependence g_dependence_from_string(const std::string& s) {
    const std::string v = lower(s);
    if (v == "independent") return GDependence::Independent;
    if (v == "dependent") return GDependence::Dependent;
    throw ConfigError("unknown G dependence '" + s + "' (expected independent|dependent)");
}

Method method_from_string(const std::string& s) {
    const std::string v = lower(s);
    if (v == "naive") return Method::Naive;
    if (v == "2sps") return Method::TwoSPS;
    if (v == "2sps_adj" || v == "2spsadj") return Method::TwoSPSAdj;
    if (v == "2sps_a" || v == "2spsa") return Method::TwoSPSA;
    if (v == "2sps_adj_a" || v == "2spsadj-a" || v == "2spsadja") return Method::TwoSPSAdjA;
    if (v == "2sri") return Method::TwoSRI;
    throw ConfigError("unknown method '" + s +
                      "' (expected naive|2sps|2sps_adj|2sps_a|2sps_adj_a|2sri)");
}

}  // namespace gxmr
