#pragma once

#include <Eigen/Dense>

namespace shadowgauge::detail {

/// Generalized cross product of the n-1 columns of `sub` (n x (n-1)): the
/// vector of signed maximal minors. It is orthogonal to every column and its
/// norm is sqrt(det(sub^T sub)).
inline Eigen::VectorXd cofactor_normal(const Eigen::MatrixXd& sub)
{
    const auto n = sub.rows();
    Eigen::VectorXd w(n);
    if (n == 2) {
        w << sub(1, 0), -sub(0, 0);
        return w;
    }
    Eigen::MatrixXd minor(n - 1, n - 1);
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
            if (r != k)
                minor.row(rr++) = sub.row(r);
        }
        const double det = minor.determinant();
        w[k] = (k % 2 == 0) ? det : -det;
    }
    return w;
}

} // namespace shadowgauge::detail
