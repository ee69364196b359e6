#include "lde/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace lde::ent {

namespace {

constexpr double kHalfOvershoot = 1e-9;

double clamp_x(double x) {
    double ax = std::abs(x);
    if (ax > 0.5 + kHalfOvershoot) {
        throw std::invalid_argument("|x| exceeds 1/2 beyond numerical tolerance");
    }
    return std::min(ax, 0.5);
}

}  // namespace

double concurrence_from_x(double x) {
    double ax = clamp_x(x);
    return 2.0 * std::max(0.0, ax * ax + ax - 0.25);
}

double saturation_concurrence(double lambda) {
    if (!(lambda > 0.0 && lambda <= 1.0)) {
        throw std::invalid_argument("saturation_concurrence requires 0 < lambda <= 1");
    }
    double l2 = lambda * lambda;
    return 2.0 * std::max(0.0, 0.5 - l2 + 0.25 * l2 * l2);
}

Fidelity fidelity_from_x(double x) {
    double ax = clamp_x(x);
    double full = 0.25 + ax + ax * ax;
    return {full, (2.0 * full + 1.0) / 3.0};
}

double concurrence_from_fidelity(double fidelity) {
    return 2.0 * std::max(0.0, 1.5 * fidelity - 1.0);
}

double wootters_concurrence(const Eigen::Matrix4cd& rho) {
    constexpr double tol = 1e-9;
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) {
        throw std::invalid_argument("wootters_concurrence: state not Hermitian");
    }
    if (std::abs(rho.trace().real() - 1.0) > tol || std::abs(rho.trace().imag()) > tol) {
        throw std::invalid_argument("wootters_concurrence: state not unit trace");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> herm(rho, Eigen::EigenvaluesOnly);
    if (herm.eigenvalues().minCoeff() < -tol) {
        throw std::invalid_argument("wootters_concurrence: state not positive semidefinite");
    }

    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();  // sigma_y x sigma_y
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;

    Eigen::Matrix4cd r = rho * yy * rho.conjugate() * yy;
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(r, false);
    std::array<double, 4> lams{};
    for (int i = 0; i < 4; ++i) {
        lams[i] = std::sqrt(std::max(0.0, solver.eigenvalues()[i].real()));
    }
    std::sort(lams.begin(), lams.end(), std::greater<>());
    return std::max(0.0, lams[0] - lams[1] - lams[2] - lams[3]);
}

Eigen::Matrix4d two_site_reduced_from_x(double x) {
    if (std::abs(x) > 0.5 + kHalfOvershoot) {
        throw std::invalid_argument("two_site_reduced_from_x requires |x| <= 1/2");
    }
    double xs = std::clamp(x, -0.5, 0.5);
    double x2 = xs * xs;
    Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
    // (sx sx + sy sy)/2 swaps |01> and |10>; sz sz = diag(1,-1,-1,1).
    rho(0, 0) = 0.25 - x2;
    rho(3, 3) = 0.25 - x2;
    rho(1, 1) = 0.25 + x2;
    rho(2, 2) = 0.25 + x2;
    rho(1, 2) = xs;
    rho(2, 1) = xs;
    return rho;
}

double log_negativity(const Eigen::MatrixXcd& rho, int dim_a, int dim_b) {
    if (dim_a <= 0 || dim_b <= 0 || rho.rows() != dim_a * dim_b || rho.cols() != rho.rows()) {
        throw std::invalid_argument("log_negativity: dimensions do not match the state");
    }
    Eigen::MatrixXcd pt(rho.rows(), rho.cols());
    for (int a = 0; a < dim_a; ++a)
        for (int b = 0; b < dim_b; ++b)
            for (int a2 = 0; a2 < dim_a; ++a2)
                for (int b2 = 0; b2 < dim_b; ++b2)
                    pt(a * dim_b + b, a2 * dim_b + b2) = rho(a * dim_b + b2, a2 * dim_b + b);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(pt, Eigen::EigenvaluesOnly);
    double trace_norm = solver.eigenvalues().cwiseAbs().sum();
    return std::log2(std::max(trace_norm, 1.0));
}

}  // namespace lde::ent
