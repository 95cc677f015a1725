#include "minforest/markov.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "minforest/errors.hpp"

namespace minforest {

namespace {

Eigen::MatrixXd laplacian(const WeightedDigraph& graph, double epsilon) {
    const int n = graph.vertex_count();
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
    for (const Arc& a : graph.arcs()) {
        double rate = std::exp(-a.weight.to_double() / epsilon);
        l(a.from, a.to) -= rate;
        l(a.from, a.from) += rate;
    }
    return l;
}

}  // namespace

CoefficientProfile coefficient_profile(const ForestAtlas& atlas, double epsilon) {
    if (!(epsilon > 0)) throw DomainError("coefficient_profile: epsilon must be positive");
    const int n = atlas.graph->vertex_count();
    CoefficientProfile profile;
    profile.epsilon = epsilon;
    for (int l = 0; l <= n; ++l) {
        CoefficientLevel level;
        level.l = l;
        level.forest_count = atlas.forest_count[static_cast<std::size_t>(l)];
        level.min_weight = atlas.profile.min_weight[static_cast<std::size_t>(l)];
        level.positive = level.forest_count > 0;
        if (level.positive) {
            // c_l = exp(-phi/eps) * sum_w count(w) * exp(-(w - phi)/eps),
            // summed over the level's weight histogram. The anchor term
            // contributes exactly exp(0), so a unique minimizer gives
            // exponent_estimate == phi with no rounding residue.
            const Rational& phi = level.min_weight.finite();
            double sum = 0;
            for (const auto& [w, count] : atlas.histogram[static_cast<std::size_t>(l)]) {
                double excess = (w - phi).to_double();
                sum += static_cast<double>(count) * std::exp(-excess / epsilon);
            }
            level.log_coefficient = -phi.to_double() / epsilon + std::log(sum);
            level.exponent_estimate = phi.to_double() - epsilon * std::log(sum);
            level.gap_bound = epsilon * std::log(static_cast<double>(level.forest_count));
        }
        profile.levels.push_back(level);
    }
    return profile;
}

MatrixForestCheck verify_matrix_forest(const ForestAtlas& atlas, double epsilon,
                                       const std::vector<double>& lambdas) {
    if (!(epsilon > 0)) throw DomainError("verify_matrix_forest: epsilon must be positive");
    const int n = atlas.graph->vertex_count();
    Eigen::MatrixXd l = laplacian(*atlas.graph, epsilon);
    MatrixForestCheck check;
    for (double lambda : lambdas) {
        if (!(lambda > 0)) throw DomainError("verify_matrix_forest: sample points must be positive");
        Eigen::MatrixXd m = lambda * Eigen::MatrixXd::Identity(n, n) + l;
        double det = m.determinant();
        double poly = 0;
        double largest_term = 0;
        for (int k = 0; k <= n; ++k) {
            double c = 0;
            for (const auto& [w, count] : atlas.histogram[static_cast<std::size_t>(k)])
                c += static_cast<double>(count) * std::exp(-w.to_double() / epsilon);
            double term = c * std::pow(lambda, k);
            poly += term;
            largest_term = std::max(largest_term, term);
        }
        double scale = std::max(std::abs(det), std::abs(poly));
        double dev = scale > 0 ? std::abs(det - poly) / scale : std::abs(det - poly);
        check.max_relative_deviation = std::max(check.max_relative_deviation, dev);
        // Both sides are positive sums for lambda > 0; flag the comparison
        // once the result is dwarfed by its largest term.
        if (poly > 0 && largest_term / poly > 1e12) check.ill_conditioned = true;
    }
    return check;
}

}  // namespace minforest
