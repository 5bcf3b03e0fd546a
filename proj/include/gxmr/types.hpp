#pragma once

#include <stdexcept>
#include <string>

namespace gxmr {

// ---------------------------------------------------------------------------
// Error hierarchy. Fitters and generators throw; the harness catches
// per-replicate and records instead of aborting a batch.
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionMismatchError : public Error {
public:
    explicit DimensionMismatchError(const std::string& msg) : Error(msg) {}
};

class RankDeficientError : public Error {
public:
    explicit RankDeficientError(const std::string& msg) : Error(msg) {}
};

class SingleClassResponseError : public Error {
public:
    explicit SingleClassResponseError(const std::string& msg) : Error(msg) {}
};

class DidNotConvergeError : public Error {
public:
    explicit DidNotConvergeError(const std::string& msg) : Error(msg) {}
};

// Quasi-complete separation: unbounded likelihood, coefficients drift to
// +-inf. Detected at exit by |coef| or SE magnitude.
class SeparationSuspectedError : public Error {
public:
    explicit SeparationSuspectedError(const std::string& msg) : Error(msg) {}
};

class NonPositiveSEError : public Error {
public:
    explicit NonPositiveSEError(const std::string& msg) : Error(msg) {}
};

class QuotaUnreachableError : public Error {
public:
    explicit QuotaUnreachableError(const std::string& msg) : Error(msg) {}
};

class AllFitsFailedError : public Error {
public:
    explicit AllFitsFailedError(const std::string& msg) : Error(msg) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

class MalformedInputError : public Error {
public:
    explicit MalformedInputError(const std::string& msg) : Error(msg) {}
};

// ---------------------------------------------------------------------------
// Core enums
// ---------------------------------------------------------------------------

enum class OutcomeFamily { Linear, Logistic };

enum class GDependence { Independent, Dependent };

// The six estimators, in the fixed reporting order.
enum class Method {
    Naive,
    TwoSPS,
    TwoSPSAdj,
    TwoSPSA,
    TwoSPSAdjA,
    TwoSRI,
};

inline constexpr Method kAllMethods[] = {
    Method::Naive,    Method::TwoSPS,     Method::TwoSPSAdj,
    Method::TwoSPSA,  Method::TwoSPSAdjA, Method::TwoSRI,
};

inline constexpr int kNumMethods = 6;

std::string to_string(OutcomeFamily f);
std::string to_string(GDependence d);
std::string to_string(Method m);

OutcomeFamily outcome_family_from_string(const std::string& s);
GDependence g_dependence_from_string(const std::string& s);
Method method_from_string(const std::string& s);

}  // namespace gxmr
