#include "shadowgauge/generate.hpp"

#include <Eigen/Dense>

#include "shadowgauge/error.hpp"
#include "shadowgauge/random.hpp"

namespace shadowgauge {

Zonotope random_zonotope(int dim, std::size_t generators, std::uint64_t seed, std::uint64_t index)
{
    if (dim < 2)
        throw Error(Errc::invalid_argument, "random_zonotope needs dim >= 2");
    if (generators > default_generator_cap)
        throw Error(Errc::generator_cap_exceeded,
                    std::to_string(generators) + " generators exceed the cap of " +
                        std::to_string(default_generator_cap));
    if (static_cast<int>(generators) < dim)
        throw Error(Errc::invalid_argument, "random_zonotope needs at least dim generators");

    const CounterRng rng(seed, 0x1000 + index);
    const auto m = static_cast<Eigen::Index>(generators);
    std::uint64_t counter = 0;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Matrix g(dim, m);
        for (Eigen::Index j = 0; j < m; ++j) {
            const double length = 0.5 + rng.uniform(counter++);
            g.col(j) = rng.on_sphere(counter++, dim) * length;
        }
        Eigen::JacobiSVD<Matrix> svd(g);
        const auto& sv = svd.singularValues();
        if (sv[sv.size() - 1] >= 0.05 * sv[0])
            return Zonotope(std::move(g));
    }
    throw Error(Errc::degenerate_body, "random_zonotope: could not draw a well-conditioned zonotope");
}

Matrix random_orthogonal(int dim, std::uint64_t seed)
{
    const CounterRng rng(seed, 0x0a);
    Matrix a(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            a(i, j) = rng.normal(static_cast<std::uint64_t>(i * dim + j));
    Eigen::HouseholderQR<Matrix> qr(a);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
        if (r(i, i) < 0.0)
            q.col(i) = -q.col(i);
    }
    return q;
}

} // namespace shadowgauge
