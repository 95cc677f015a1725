#pragma once

#include <vector>

#include "minforest/oracle.hpp"

namespace minforest {

/// Per-level data of the characteristic polynomial det(lambda*I + L) of the
/// row Laplacian built from rates a_ij = exp(-w_ij / epsilon): its
/// coefficient c_l equals the sum of exp(-weight/epsilon) over all spanning
/// forests with l trees.
struct CoefficientLevel {
    int l = 0;
    long long forest_count = 0;      // |F^l|
    bool positive = false;           // c_l > 0, i.e. some l-forest exists
    double log_coefficient = 0;      // ln c_l (meaningful when positive)
    double exponent_estimate = 0;    // -epsilon * ln c_l
    ExtRational min_weight;          // reference minimum for the level
    double gap_bound = 0;            // epsilon * ln |F^l| >= |estimate - minimum|
};

struct CoefficientProfile {
    double epsilon = 0;
    std::vector<CoefficientLevel> levels;  // l = 0..N
};

/// Exact-histogram evaluation of every c_l in log-space, anchored at the
/// level minimum so a lone minimizer reproduces it without rounding.
CoefficientProfile coefficient_profile(const ForestAtlas& atlas, double epsilon);

struct MatrixForestCheck {
    double max_relative_deviation = 0;
    bool ill_conditioned = false;  // flagged, not failed
};

/// Compares det(lambda*I + L) against the forest-sum polynomial at the given
/// (positive) sample points; deviation is relative to the larger magnitude.
MatrixForestCheck verify_matrix_forest(const ForestAtlas& atlas, double epsilon,
                                       const std::vector<double>& lambdas);

}  // namespace minforest
