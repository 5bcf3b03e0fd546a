#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>

namespace gxmr {

// ---------------------------------------------------------------------------
// Dataset — one column-oriented sample of (Y, X, G, Z, G_IV). The hidden
// confounder column is retained for oracle checks only and never enters an
// estimator design. x_scale records the divisor applied when standardizing
// the exposure (1 when none); for case-control sampling it is the pooled
// standard deviation over all population draws.
// ---------------------------------------------------------------------------
struct Dataset {
    Eigen::VectorXd y;
    Eigen::VectorXd x;
    Eigen::VectorXd g;     // 0/1/2 copies
    Eigen::VectorXd z;
    Eigen::VectorXd g_iv;
    std::optional<Eigen::VectorXd> u_hidden;
    Eigen::Index n = 0;
    double x_scale = 1.0;

    // Throws MalformedInputError on length mismatches, g outside {0,1,2},
    // or a non-0/1 logistic response.
    void validate(bool binary_y) const;
};

// CSV with header y,x,g,z,g_iv[,u]; 17 significant digits, LF endings.
// The hidden column is written only when present and include_u is set.
void write_dataset_csv(const Dataset& d, const std::string& path, bool include_u = true);
std::string dataset_to_csv(const Dataset& d, bool include_u = true);

Dataset read_dataset_csv(const std::string& path);
Dataset dataset_from_csv(const std::string& text);

}  // namespace gxmr
