#include "inls/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace inls {

std::vector<double> singular_cell_moments(const RadialGrid& g, double b) {
    const double e = g.dim - b;  // exponent of the antiderivative r^{N-b}/(N-b)
    std::vector<double> m(g.points);
    double lo = 0.0;
    for (int j = 0; j < g.points; ++j) {
        const double up = std::pow((j + 1) * g.h, e);
        m[j] = (up - lo) / e;
        lo = up;
    }
    return m;
}

double mass_norm2(const RadialField& u) {
    const auto& g = *u.grid;
    double s = 0.0;
    for (int j = 0; j < g.points; ++j) {
        const double w = std::pow(g.r[j], g.dim - 1);
        s += w * std::norm(u.values[j]);
    }
    return g.sphere_measure * g.h * s;
}

double kinetic_norm2(const RadialField& u) {
    // forward differences at the flux radii jh; homogeneous Dirichlet ghost
    // beyond r_max keeps this the quadratic form of the discrete Laplacian
    const auto& g = *u.grid;
    const int J = g.points;
    double s = 0.0;
    for (int j = 0; j + 1 < J; ++j) {
        const double rm = (j + 1) * g.h;
        s += std::pow(rm, g.dim - 1) * std::norm((u.values[j + 1] - u.values[j]) / g.h);
    }
    s += std::pow(J * g.h, g.dim - 1) * std::norm(u.values[J - 1] / g.h);
    return g.sphere_measure * g.h * s;
}

double lp_norm(const RadialField& u, double p) {
    const auto& g = *u.grid;
    double s = 0.0;
    for (int j = 0; j < g.points; ++j)
        s += std::pow(g.r[j], g.dim - 1) * std::pow(std::abs(u.values[j]), p);
    return std::pow(g.sphere_measure * g.h * s, 1.0 / p);
}

double h1_norm(const RadialField& u) {
    return std::sqrt(mass_norm2(u) + kinetic_norm2(u));
}

double radial_sup_ratio(const RadialField& u) {
    const auto& g = *u.grid;
    const double h1 = h1_norm(u);
    if (!(h1 > 0.0)) throw std::invalid_argument("radial_sup_ratio: zero field");
    double m = 0.0;
    for (int j = 0; j < g.points; ++j)
        m = std::max(m, std::pow(g.r[j], (g.dim - 1) / 2.0) * std::abs(u.values[j]));
    return m / h1;
}

Functionals functionals(const RadialField& u, const PhysParams& p) {
    const auto& g = *u.grid;
    if (g.dim != p.N) throw std::invalid_argument("functionals: grid dimension differs from params");
    Functionals f;
    f.mass = mass_norm2(u);
    f.kinetic = kinetic_norm2(u);
    const auto moments = singular_cell_moments(g, p.b);
    double pot = 0.0, s4 = 0.0;
    for (int j = 0; j < g.points; ++j) {
        const double au = std::abs(u.values[j]);
        pot += moments[j] * std::pow(au, p.alpha + 2.0);
        s4 += std::pow(g.r[j], g.dim - 1) * au * au * au * au;
    }
    f.potential = g.sphere_measure * pot;
    f.l4 = g.sphere_measure * g.h * s4;
    f.energy = 0.5 * f.kinetic + p.kappa() * f.potential / (p.alpha + 2.0);
    f.lp_scatter = lp_norm(u, p.alpha + 2.0 + p.b / (p.N - 1));
    return f;
}

}  // namespace inls
