#ifndef INLS_WEIGHTS_HPP
#define INLS_WEIGHTS_HPP

#include <optional>
#include <string>

#include "inls/grid.hpp"

namespace inls {

/// Virial weight phi_R(r) = R^2 phi(r/R): r^2 inside R, constant 2R^2
/// beyond 2R, a fixed degree-7 polynomial junction on (R, 2R) matching
/// value and first three derivatives at both ends. Tables hold radial
/// derivatives up to fourth order plus the derived Laplacians.
struct VirialWeight {
    double R = 0.0;
    GridPtr grid;
    std::vector<double> phi;    ///< phi_R
    std::vector<double> dphi;   ///< phi_R'
    std::vector<double> d2phi;  ///< phi_R''
    std::vector<double> d3phi;
    std::vector<double> d4phi;
    std::vector<double> lap;    ///< Delta phi_R
    std::vector<double> bilap;  ///< Delta^2 phi_R
};

/// Smooth radial cutoff chi_R(x) = chi(|x|/R): 1 inside R/2, 0 outside R.
struct Cutoff {
    double R = 0.0;
    GridPtr grid;
    std::vector<double> chi;
    std::vector<double> lap;    ///< Delta chi_R
    double sup_lap = 0.0;       ///< recorded sup |Delta chi_R|
};

/// The junction polynomial on [1,2] and its derivatives (exact integer
/// coefficients, so the weight is reproducible bit for bit).
namespace blend {
double phi(double rho);
double phi_d(double rho, int order);   // order = 1..4
/// Septic smoothstep: 0 -> 1 on [0,1] with three vanishing derivatives
/// at both ends.
double smoothstep7(double x);
double smoothstep7_d(double x, int order);
}

/// Throws std::invalid_argument when R < 4h (junction unresolvable) and
/// std::logic_error if the constructed tables violate the weight
/// constraints (a contract bug, not an input error).
VirialWeight make_weight_phi(double R, GridPtr grid);

/// First violated constraint of the feasible suite (phi' >= 0, phi'' <= 2,
/// 2N - Delta phi >= 0, core/tail shape, derivative sup bounds), or empty.
std::optional<std::string> weight_violation(const VirialWeight& w);

Cutoff make_cutoff_chi(double R, GridPtr grid);

/// Pointwise chi_R * u.
RadialField apply_cutoff(const RadialField& u, const Cutoff& c);

/// M_phi = 2 int grad(phi) . Im(conj(u) grad u).
double virial_moment(const RadialField& u, const VirialWeight& w);

}  // namespace inls

#endif
