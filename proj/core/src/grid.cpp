#include "inls/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace inls {

std::shared_ptr<const RadialGrid> RadialGrid::make(int N, int J, double r_max) {
    if (N < 2) throw std::invalid_argument("RadialGrid: dimension must be >= 2");
    if (J < 8) throw std::invalid_argument("RadialGrid: need at least 8 points");
    if (!(r_max > 0.0)) throw std::invalid_argument("RadialGrid: r_max must be positive");
    auto g = std::make_shared<RadialGrid>();
    g->dim = N;
    g->points = J;
    g->r_max = r_max;
    g->h = r_max / J;
    g->sphere_measure = 2.0 * std::pow(std::numbers::pi, N / 2.0) / std::tgamma(N / 2.0);
    g->r.resize(J);
    for (int j = 0; j < J; ++j) g->r[j] = (j + 0.5) * g->h;
    return g;
}

bool RadialField::finite() const {
    for (const auto& v : values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

void require_same_grid(const RadialField& a, const RadialField& b) {
    if (!a.grid || !b.grid || !a.grid->same_as(*b.grid))
        throw std::invalid_argument("fields live on different grids");
}

std::vector<std::complex<double>> radial_derivative(const RadialField& u) {
    const int J = u.grid->points;
    const double h = u.grid->h;
    std::vector<std::complex<double>> d(J);
    if (J < 2) return d;
    d[0] = (u.values[1] - u.values[0]) / h;
    for (int j = 1; j < J - 1; ++j) d[j] = (u.values[j + 1] - u.values[j - 1]) / (2.0 * h);
    d[J - 1] = (u.values[J - 1] - u.values[J - 2]) / h;
    return d;
}

}  // namespace inls
