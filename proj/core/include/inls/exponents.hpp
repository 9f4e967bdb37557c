#ifndef INLS_EXPONENTS_HPP
#define INLS_EXPONENTS_HPP

#include <optional>
#include <string_view>

#include <boost/rational.hpp>

#include "inls/params.hpp"

namespace inls {

/// A Lebesgue-type exponent in (0, inf]. Infinity is a distinct state,
/// never a sentinel float.
class Exponent {
public:
    static Exponent infinite() { return Exponent(0.0, true); }
    static Exponent finite(double v) { return Exponent(v, false); }

    bool is_infinite() const { return inf_; }
    /// Finite value; throws std::logic_error when infinite.
    double value() const {
        if (inf_) throw std::logic_error("Exponent: value() on infinite exponent");
        return v_;
    }

private:
    Exponent(double v, bool inf) : v_(v), inf_(inf) {}
    double v_;
    bool inf_;
};

/// Scaling-critical indices and Morawetz growth exponents of one equation
/// instance.
struct ExponentBundle {
    double gamma_c = 0.0;                ///< N/2 - (2-b)/alpha
    std::optional<double> sigma_c;       ///< (1-gamma_c)/gamma_c; empty at gamma_c == 0
    Exponent two_star = Exponent::infinite();  ///< energy-critical power bound
    double two_lower_star = 0.0;         ///< mass-critical power (4-2b)/N
    double gamma_b = 0.0;                ///< (alpha-2+b)/(alpha+2+b)
    double beta1 = 0.0;                  ///< max{1/3, 2/((N-1)alpha+2+2b)}
    double beta2 = 0.0;                  ///< max{(2+b)/6, (2+b)/((N-1)alpha+2+2b)}
};

ExponentBundle critical_exponents(const PhysParams& p);

/// Where the parameters sit relative to the local theory and the two
/// scattering theorems.
enum class Regime {
    scattering_scope_2d,
    scattering_scope_appendix,
    intercritical_only,
    mass_critical,
    mass_subcritical,
    out_of_scope,
};

Regime classify_regime(const PhysParams& p);
std::string_view regime_name(Regime r);

// ---- exact rational layer -------------------------------------------------

using Rat = boost::rational<long long>;

/// gamma_c as an exact rational for rational (b, alpha).
Rat gamma_c_rat(int N, const Rat& b, const Rat& alpha);

/// sigma_c computed from the second printed form
/// (4-2b-(N-2)alpha)/(N alpha-4+2b); empty when the denominator vanishes.
std::optional<Rat> sigma_c_rat(int N, const Rat& b, const Rat& alpha);

/// One component of a Schroedinger-admissible pair: a rational in [2, inf)
/// or the infinity marker.
struct PairExponent {
    static PairExponent infinite() { return PairExponent{Rat(0), true}; }
    static PairExponent finite(long long num, long long den = 1) {
        return PairExponent{Rat(num, den), false};
    }
    static PairExponent finite(const Rat& v) { return PairExponent{v, false}; }

    Rat value;
    bool inf = false;
};

/// Exact test of 2/q + N/r = N/2 with the (2, inf, 2) exclusion.
/// Throws std::invalid_argument when q or r lies below 2.
bool is_admissible_pair(const PairExponent& q, const PairExponent& r, int N);

// ---- Hoelder feasibility solvers ------------------------------------------

struct AppendixExponents {
    double a1 = 0.0, b1 = 0.0, a2 = 0.0, b2 = 0.0;
};

/// Witnesses for the nonlinear-estimate exponent systems. The theta/eta/
/// epsilon/ratio fields belong to the 2D lemma; tau and the region reports
/// to the appendix variant.
struct FeasibilityReport {
    bool feasible = false;
    double theta = 0.0;
    double eta = 0.0;
    double epsilon = 0.0;
    double ratio = 0.0;      ///< alpha*theta/(alpha+2+b), reported without any bound
    double tau = 0.0;        ///< N=3 appendix auxiliary exponent
    AppendixExponents limit_ball, limit_complement;   ///< eps -> 0 limits
    AppendixExponents ball, complement;               ///< at the returned eps
};

/// theta in the eps -> 0 limit: (alpha+2+b)(2-b-eta)/(4 alpha).
double lemma31_theta0(double b, double alpha, double eta);
/// theta at finite eps: (2-b-eta-2 alpha eps) / (4 alpha/(alpha+2+b) - 2 alpha eps).
double lemma31_theta(double b, double alpha, double eta, double eps);

/// Search (eta, eps) with theta in (0,1) and alpha*theta > 1. Infeasible
/// exactly outside the scope 0 < b < 1, alpha > 2-b.
FeasibilityReport lemma31_feasible(double b, double alpha);

enum class AppendixRegion { ball, complement };

/// eps -> 0 limits of a1, b1, a2, b2 at given (eta, tau) on one region.
AppendixExponents appendix_limit_exponents(const PhysParams& p, double eta, double tau,
                                           AppendixRegion region);
/// The same four exponents at finite eps.
AppendixExponents appendix_exponents_at(const PhysParams& p, double eta, double tau,
                                        double eps, AppendixRegion region);

/// Witnesses for the appendix lemma; throws std::invalid_argument outside
/// the appendix scattering scope.
FeasibilityReport appendix_feasible(const PhysParams& p);

}  // namespace inls

#endif
