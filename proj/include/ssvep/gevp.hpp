#pragma once

#include <Eigen/Dense>

namespace ssvep {

/// Symmetric-definite pencil A w = rho (B + ridge*I) w. A must be
/// symmetric, B symmetric positive-semidefinite; the ridge keeps the
/// Cholesky factorization alive when B is rank-deficient.
struct GevpProblem {
    Eigen::MatrixXd A;
    Eigen::MatrixXd B;
    double ridge = 1e-8;
};

struct GevpSolution {
    double eigenvalue = 0.0;
    Eigen::VectorXd eigenvector;  // normalized so w' (B + ridge I) w = 1
};

/// Largest-eigenvalue pair of the pencil. B + ridge*I is Cholesky-factored,
/// the pencil reduced to a standard symmetric eigenproblem, and solved
/// densely. The eigenvector sign is fixed so its largest-magnitude entry is
/// positive; the residual ||A w - rho (B + ridge I) w|| is checked against
/// 1e-8 * ||A||_F * ||w||.
GevpSolution solve_gevp_top(const GevpProblem& p);

/// All eigenvalues of the pencil, ascending. Intended for small problems
/// and property checks.
Eigen::VectorXd gevp_eigenvalues(const GevpProblem& p);

inline constexpr double kDefaultRidge = 1e-8;

}  // namespace ssvep
