#ifndef INLS_FUNCTIONALS_HPP
#define INLS_FUNCTIONALS_HPP

#include "inls/grid.hpp"
#include "inls/params.hpp"

namespace inls {

/// The static functionals tracked along every run.
struct Functionals {
    double mass = 0.0;       ///< ||u||_{L^2}^2
    double kinetic = 0.0;    ///< ||grad u||_{L^2}^2 (forward differences)
    double potential = 0.0;  ///< int |x|^{-b} |u|^{alpha+2}
    double energy = 0.0;     ///< kinetic/2 + kappa potential/(alpha+2)
    double lp_scatter = 0.0; ///< ||u||_{L^{alpha+2+b/(N-1)}}
    double l4 = 0.0;         ///< int |u|^4 dx
};

Functionals functionals(const RadialField& u, const PhysParams& p);

/// Cell integrals of r^{N-1-b} over [jh, (j+1)h]; the singular weight is
/// integrated exactly, node values carry the smooth factor.
std::vector<double> singular_cell_moments(const RadialGrid& g, double b);

double mass_norm2(const RadialField& u);
double kinetic_norm2(const RadialField& u);
double lp_norm(const RadialField& u, double p);
/// Discrete H^1 norm sqrt(mass + kinetic).
double h1_norm(const RadialField& u);

/// max_j r_j^{(N-1)/2} |u_j| / ||u||_{H^1}; throws on the zero field.
double radial_sup_ratio(const RadialField& u);

}  // namespace inls

#endif
