#pragma once

#include <Eigen/Dense>
#include <vector>

namespace lde {

/// Symmetric tridiagonal matrix stored as diagonal + subdiagonal.
struct Tridiagonal {
    std::vector<double> diag;  // size n
    std::vector<double> off;   // size n-1, off[i] couples i and i+1

    int size() const { return static_cast<int>(diag.size()); }
    Eigen::MatrixXd dense() const;
};

struct TridiagEigen {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXd vectors;  // column k belongs to values[k]
};

/// Full eigendecomposition of a symmetric tridiagonal matrix by the
/// implicit-shift QL algorithm with accumulated plane rotations.
///
/// Eigenvalues are returned in ascending order; each eigenvector is
/// normalized and its first component of magnitude above 1e-12 times the
/// column max is made positive, so the output is deterministic.
/// Throws std::runtime_error if a sub-block fails to converge.
TridiagEigen eigh_tridiagonal(const Tridiagonal& m);

}  // namespace lde
