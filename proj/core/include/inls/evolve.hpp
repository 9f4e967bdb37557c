#ifndef INLS_EVOLVE_HPP
#define INLS_EVOLVE_HPP

#include <functional>
#include <memory>

#include "inls/functionals.hpp"
#include "inls/grid.hpp"
#include "inls/params.hpp"

namespace inls {

/// Time-stepping plan. The skip flags are test modes that disable one
/// Strang substep.
struct Schedule {
    double dt = 1e-3;
    double t_final = 1.0;
    int record_every = 10;
    double blowup_gradient_factor = 100.0;
    std::vector<double> snapshot_times;  ///< sorted, may be empty
    bool skip_kinetic = false;
    bool skip_nonlinear = false;

    void validate() const;
};

enum class Outcome { completed, blowup_detected, nan_abort };
const char* outcome_name(Outcome o);

/// One diagnostic record. evolve fills time, functionals and the Morawetz
/// accumulators; the observer may attach the remaining columns.
struct Record {
    double t = 0.0;
    Functionals f;
    double morawetz_A = 0.0;  ///< running int_0^t potential ds
    double morawetz_B = 0.0;  ///< running int_0^t ||u||_{scatter}^p ds
    double threshold_lhs = 0.0;
    double virial_M = 0.0;
    double virial_rhs = 0.0;
    std::vector<double> truncated_lhs;    ///< per monitored cutoff radius
    std::vector<double> truncated_delta;  ///< per monitored cutoff radius
};

struct TrajectorySnapshot {
    double t = 0.0;
    RadialField u;
};

struct Trajectory {
    PhysParams params;
    Schedule schedule;
    std::vector<Record> records;
    std::vector<TrajectorySnapshot> snapshots;
    Outcome outcome = Outcome::completed;
};

using Observer = std::function<void(const RadialField&, Record&)>;

/// Strang splitting: exact nonlinear phase rotation, Crank-Nicolson
/// conservative radial Laplacian, second nonlinear half step. The kinetic
/// solve reuses one Thomas factorization per (grid, dt).
class StrangStepper {
public:
    StrangStepper(GridPtr grid, const PhysParams& p, double dt);

    void step(RadialField& u) const;
    void nonlinear_half_step(RadialField& u) const;
    void kinetic_step(RadialField& u) const;

    double dt() const { return dt_; }

private:
    GridPtr grid_;
    PhysParams params_;
    double dt_;
    int int_alpha_ = 0;                 // unrolled |u|^alpha when alpha is a small integer
    std::vector<double> ghat_;          // cell-averaged |x|^{-b}
    std::vector<double> lap_sub_, lap_dia_, lap_sup_;   // rows of L_h
    std::vector<std::complex<double>> thomas_sup_;      // precomputed elimination
    std::vector<std::complex<double>> thomas_den_;
    mutable std::vector<std::complex<double>> rhs_, work_;
};

/// Single convenience step (constructs a stepper; prefer StrangStepper in
/// loops).
RadialField strang_step(const RadialField& u, double dt, const PhysParams& p);

/// March to t_final, recording every record_every steps, stopping on
/// kinetic growth past the blow-up factor or on non-finite values.
Trajectory evolve(const RadialField& u0, const Schedule& schedule, const PhysParams& p,
                  const Observer& observer = {});

/// Kinetic-only propagation over time t (either sign); used as e^{it Lap}.
RadialField free_propagate(const RadialField& u, double t, const Schedule& schedule);

}  // namespace inls

#endif
