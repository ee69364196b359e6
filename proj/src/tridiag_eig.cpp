#include "lde/tridiag_eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lde {

Eigen::MatrixXd Tridiagonal::dense() const {
    const int n = size();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = diag[i];
    for (int i = 0; i + 1 < n; ++i) {
        m(i, i + 1) = off[i];
        m(i + 1, i) = off[i];
    }
    return m;
}

namespace {

[[noreturn]] void fail_convergence(const Tridiagonal& m, int block) {
    double dmax = 0.0, emax = 0.0;
    for (double v : m.diag) dmax = std::max(dmax, std::abs(v));
    for (double v : m.off) emax = std::max(emax, std::abs(v));
    std::ostringstream msg;
    msg << "tridiagonal QL failed to converge: n=" << m.size() << " block=" << block
        << " max|diag|=" << dmax << " max|off|=" << emax;
    throw std::runtime_error(msg.str());
}

// Implicit-shift QL sweep over [l, m]; d holds diagonal, e subdiagonal with
// e[i] coupling i and i+1, z accumulates the rotations column-wise.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, Eigen::MatrixXd& z,
                 const Tridiagonal& input) {
    const int n = static_cast<int>(d.size());
    const double eps = std::numeric_limits<double>::epsilon();
    constexpr int kMaxSweeps = 60;

    for (int l = 0; l < n; ++l) {
        int sweeps = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double scale = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * scale) break;
            }
            if (m == l) break;
            if (++sweeps > kMaxSweeps) fail_convergence(input, l);

            // Wilkinson-style shift from the leading 2x2.
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;

            int i = m - 1;
            for (; i >= l; --i) {
                double f = s * e[i];
                double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {  // split: annihilated off-diagonal mid-sweep
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for (int k = 0; k < n; ++k) {
                    f = z(k, i + 1);
                    z(k, i + 1) = s * z(k, i) + c * f;
                    z(k, i) = c * z(k, i) - s * f;
                }
            }
            if (r == 0.0 && i >= l) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (m != l);
    }
}

}  // namespace

TridiagEigen eigh_tridiagonal(const Tridiagonal& m) {
    const int n = m.size();
    if (n <= 0) throw std::invalid_argument("eigh_tridiagonal: empty matrix");
    if (static_cast<int>(m.off.size()) != n - 1)
        throw std::invalid_argument("eigh_tridiagonal: off-diagonal size mismatch");

    std::vector<double> d = m.diag;
    std::vector<double> e = m.off;
    e.push_back(0.0);
    Eigen::MatrixXd z = Eigen::MatrixXd::Identity(n, n);

    if (n > 1) ql_implicit(d, e, z, m);

    // Ascending order with the permutation applied to the columns.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });

    TridiagEigen out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (int k = 0; k < n; ++k) {
        out.values[k] = d[order[k]];
        out.vectors.col(k) = z.col(order[k]);
    }

    // Deterministic sign: first component above threshold made positive.
    for (int k = 0; k < n; ++k) {
        auto col = out.vectors.col(k);
        double cmax = col.cwiseAbs().maxCoeff();
        for (int i = 0; i < n; ++i) {
            if (std::abs(col(i)) > 1e-12 * cmax) {
                if (col(i) < 0.0) out.vectors.col(k) = -col;
                break;
            }
        }
    }
    return out;
}

}  // namespace lde
