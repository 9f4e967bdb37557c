#ifndef INLS_GROUNDSTATE_HPP
#define INLS_GROUNDSTATE_HPP

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "inls/functionals.hpp"
#include "inls/grid.hpp"
#include "inls/params.hpp"

namespace inls {

/// Outcome of integrating one shot outward.
enum class ShotClass { crosses_zero, grows, decays };

/// Two-term expansion of Q near the origin regularizing the r^{-b} forcing:
///   Q(r) = a + a r^2/(2N) - a^{alpha+1} r^{2-b} / ((2-b)(N-b)).
/// Returns (Q, Q'). Throws for r <= 0 or a <= 0.
std::pair<double, double> local_series(double a, double r, const PhysParams& p);

/// Integrate Q'' + (N-1)Q'/r = Q - r^{-b}|Q|^alpha Q outward from the series
/// start with fixed-step classical RK4 and classify the shot. Overflow is
/// treated as growth.
ShotClass shoot(double a, const PhysParams& p, double r_max = 20.0, double step = 1e-4);

/// Raised when the amplitude scan finds no bracket or a solve cannot finish.
struct SolveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Fine-mesh shooting output at the converged amplitude, valid up to the
/// radius where roundoff peels the trajectory off the separatrix.
struct ShootingResult {
    double amplitude = 0.0;
    double tol = 0.0;
    std::vector<double> r, q, dq;
    double trust_radius = 0.0;
};

ShootingResult shoot_ground_state(const PhysParams& p, double tol, double r0);

/// The computed ground state with its variational quantities. Norms are
/// grid quadratures of module field; the fine mesh stays available for
/// high-accuracy post-checks and resampling onto other grids.
struct GroundStateProfile {
    PhysParams params;
    double amplitude = 0.0;
    double tol = 0.0;
    GridPtr grid;
    std::vector<double> samples;     ///< Q at the grid nodes
    double trust_radius = 0.0;
    std::shared_ptr<const ShootingResult> shooting;  ///< may be null for cache loads

    double massQ = 0.0;
    double kineticQ = 0.0;
    double potentialQ = 0.0;
    double c_opt = 0.0;
    std::optional<double> threshold_energy;    ///< E(Q) M(Q)^{sigma_c}
    std::optional<double> threshold_gradient;  ///< ||grad Q|| ||Q||^{sigma_c}

    /// Q (or scale*Q) as a complex field on the profile grid.
    RadialField field(double scale = 1.0) const;
};

GroundStateProfile profile_from_shooting(std::shared_ptr<const ShootingResult> s,
                                         const PhysParams& p, GridPtr grid, double tol);

/// Bisect the amplitude between a grows and a crosses_zero witness, then
/// resample onto `grid`, extending by the far-field decay
/// r^{-(N-1)/2} e^{-r} beyond the trusted radius.
GroundStateProfile solve_ground_state(const PhysParams& p, GridPtr grid, double tol = 1e-12);

/// Relative Pohozaev residuals (res1 against the kinetic ratio, res2
/// against the potential ratio).
std::pair<double, double> pohozaev_report(const GroundStateProfile& q);

struct GNConstant {
    double direct = 0.0;
    double closed = 0.0;
    double rel_diff = 0.0;
};
/// The sharp Gagliardo-Nirenberg constant through both printed routes.
GNConstant gn_constant(const GroundStateProfile& q);

/// (E(Q) M(Q)^{sigma_c}, ||grad Q|| ||Q||^{sigma_c}); throws for defocusing
/// parameters and at the mass-critical degeneracy.
std::pair<double, double> threshold_quantities(const GroundStateProfile& q);

/// Write-once ground-state cache: in-process memoization plus csv files
/// named gs_N<k>_b<val>_alpha<val>.csv keyed by (N, b, alpha, grid, tol).
class GroundStateCache {
public:
    /// INLS_CACHE_DIR when set, otherwise ./inls_cache.
    static std::filesystem::path default_dir();

    GroundStateCache() : GroundStateCache(default_dir()) {}
    explicit GroundStateCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    std::shared_ptr<const GroundStateProfile> get(const PhysParams& p, GridPtr grid,
                                                  double tol = 1e-12);

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
    std::mutex mu_;
    std::map<std::string, std::shared_ptr<const GroundStateProfile>> profiles_;
    std::map<std::string, std::shared_ptr<const ShootingResult>> shots_;
};

}  // namespace inls

#endif
