#include "inls/exponents.hpp"

#include <algorithm>
#include <cmath>

namespace inls {

ExponentBundle critical_exponents(const PhysParams& p) {
    p.validate();
    ExponentBundle e;
    const double N = p.N, b = p.b, a = p.alpha;
    e.gamma_c = N / 2.0 - (2.0 - b) / a;
    if (e.gamma_c != 0.0) e.sigma_c = (1.0 - e.gamma_c) / e.gamma_c;
    e.two_star = p.N >= 3 ? Exponent::finite((4.0 - 2.0 * b) / (N - 2.0)) : Exponent::infinite();
    e.two_lower_star = (4.0 - 2.0 * b) / N;
    e.gamma_b = (a - 2.0 + b) / (a + 2.0 + b);
    const double m = (N - 1.0) * a + 2.0 + 2.0 * b;
    e.beta1 = std::max(1.0 / 3.0, 2.0 / m);
    e.beta2 = std::max((2.0 + b) / 6.0, (2.0 + b) / m);
    return e;
}

Regime classify_regime(const PhysParams& p) {
    p.validate();
    const double b = p.b, a = p.alpha;
    const double two_ls = (4.0 - 2.0 * b) / p.N;

    // local well-posedness table (Guzman / Dinh); outside it nothing below applies
    bool lwp = false;
    if (p.N >= 4) {
        lwp = a < (4.0 - 2.0 * b) / (p.N - 2.0);
    } else if (p.N == 3) {
        if (b < 1.0)
            lwp = a < (4.0 - 2.0 * b);
        else if (b < 1.5)
            lwp = a < (6.0 - 4.0 * b) / (2.0 * b - 1.0);
    } else {  // N == 2, two_star = infinity
        lwp = b < 1.0;
    }
    if (!lwp) return Regime::out_of_scope;

    if (a < two_ls) return Regime::mass_subcritical;
    if (a == two_ls) return Regime::mass_critical;

    if (p.N == 2) return Regime::scattering_scope_2d;  // b < 1 and a > 2-b = 2_* here
    if (p.N >= 4) return Regime::scattering_scope_appendix;
    // N == 3
    if (b < 1.25 && a < 3.0 - 2.0 * b) return Regime::scattering_scope_appendix;
    return Regime::intercritical_only;
}

std::string_view regime_name(Regime r) {
    switch (r) {
        case Regime::scattering_scope_2d: return "scattering_scope_2d";
        case Regime::scattering_scope_appendix: return "scattering_scope_appendix";
        case Regime::intercritical_only: return "intercritical_only";
        case Regime::mass_critical: return "mass_critical";
        case Regime::mass_subcritical: return "mass_subcritical";
        case Regime::out_of_scope: return "out_of_scope";
    }
    return "unknown";
}

Rat gamma_c_rat(int N, const Rat& b, const Rat& alpha) {
    return Rat(N, 2) - (Rat(2) - b) / alpha;
}

std::optional<Rat> sigma_c_rat(int N, const Rat& b, const Rat& alpha) {
    const Rat den = Rat(N) * alpha - Rat(4) + Rat(2) * b;
    if (den == Rat(0)) return std::nullopt;
    const Rat num = Rat(4) - Rat(2) * b - Rat(N - 2) * alpha;
    return num / den;
}

bool is_admissible_pair(const PairExponent& q, const PairExponent& r, int N) {
    auto check_range = [](const PairExponent& x, const char* name) {
        if (!x.inf && x.value < Rat(2))
            throw std::invalid_argument(std::string("is_admissible_pair: ") + name + " below 2");
    };
    check_range(q, "q");
    check_range(r, "r");
    if (N == 2 && !q.inf && q.value == Rat(2) && r.inf) return false;
    Rat lhs(0);
    if (!q.inf) lhs += Rat(2) / q.value;
    if (!r.inf) lhs += Rat(N) / r.value;
    return lhs == Rat(N, 2);
}

// ---- Lemma 3.1 ------------------------------------------------------------

double lemma31_theta0(double b, double alpha, double eta) {
    return (alpha + 2.0 + b) * (2.0 - b - eta) / (4.0 * alpha);
}

double lemma31_theta(double b, double alpha, double eta, double eps) {
    return (2.0 - b - eta - 2.0 * alpha * eps) /
           (4.0 * alpha / (alpha + 2.0 + b) - 2.0 * alpha * eps);
}

namespace {

constexpr double kMargin = 1e-6;

// eta schedule: 1e-1, 1e-2, 1e-3, then keep descending; the proofs only
// need "eta > 0 small", and points near the scope corner need eta below
// their distance to the boundary.
template <typename Pred>
double find_eta(const Pred& ok) {
    for (double eta : {1e-1, 1e-2, 1e-3}) {
        if (ok(eta)) return eta;
    }
    for (double eta = 1e-4; eta > 1e-13; eta /= 10.0) {
        if (ok(eta)) return eta;
    }
    return 0.0;
}

}  // namespace

FeasibilityReport lemma31_feasible(double b, double alpha) {
    FeasibilityReport rep;
    if (!(b > 0.0 && b < 1.0) || !(alpha > 2.0 - b)) return rep;  // out of scope

    auto eta_ok = [&](double eta) {
        const double th = lemma31_theta0(b, alpha, eta);
        return th > kMargin && th < 1.0 - kMargin && alpha * th > 1.0 + kMargin;
    };
    const double eta = find_eta(eta_ok);
    if (eta == 0.0) return rep;

    double eps = 1e-3;
    auto eps_ok = [&](double e) {
        const double th = lemma31_theta(b, alpha, eta, e);
        return th > kMargin && th < 1.0 - kMargin && alpha * th > 1.0 + kMargin;
    };
    while (!eps_ok(eps) && eps > 1e-15) eps /= 2.0;
    if (!eps_ok(eps)) return rep;

    rep.feasible = true;
    rep.eta = eta;
    rep.epsilon = eps;
    rep.theta = lemma31_theta(b, alpha, eta, eps);
    rep.ratio = alpha * rep.theta / (alpha + 2.0 + b);
    return rep;
}

// ---- Appendix lemma --------------------------------------------------------

namespace {

double weight_exponent_1(const PhysParams& p, double eta, AppendixRegion reg) {
    // N/gamma for the |x|^{-b} estimate
    return p.b + (reg == AppendixRegion::ball ? eta : -eta);
}

double weight_exponent_2(const PhysParams& p, double eta, AppendixRegion reg) {
    // N/gamma for the |x|^{-b-1} estimate
    return p.b + 1.0 + (reg == AppendixRegion::ball ? eta : -eta);
}

}  // namespace

AppendixExponents appendix_limit_exponents(const PhysParams& p, double eta, double tau,
                                           AppendixRegion region) {
    const double N = p.N, a = p.alpha;
    const double g1 = weight_exponent_1(p, eta, region);
    const double g2 = weight_exponent_2(p, eta, region);
    AppendixExponents e;
    e.a1 = (N + 2.0) / 2.0 - g1 - (N - 2.0) * (a + 1.0) / 2.0;
    e.b1 = g1 - (N + 2.0) / 2.0 + (N * a + N - 2.0) / 2.0;
    if (p.N >= 4) {
        e.a2 = (N + 2.0) / 2.0 - g2 + 1.0 - (N - 2.0) * (a + 1.0) / 2.0;
        e.b2 = g2 - (N + 2.0) / 2.0 - 1.0 + (N * a + N - 2.0) / 2.0;
    } else {  // N == 3
        e.a2 = 2.5 - g2 - (a + tau) / 2.0;
        e.b2 = g2 - 2.5 + (3.0 * a + tau) / 2.0;
    }
    return e;
}

AppendixExponents appendix_exponents_at(const PhysParams& p, double eta, double tau,
                                        double eps, AppendixRegion region) {
    const double N = p.N, a = p.alpha;
    const double g1 = weight_exponent_1(p, eta, region);
    const double g2 = weight_exponent_2(p, eta, region);
    const double den = 2.0 * (2.0 + eps);
    AppendixExponents e;
    const double brA = 2.0 * (N - 2.0) * (a + 1.0) + eps * (N + 1.0 + (N - 2.0) * a);
    const double brB = 2.0 * (N * a + N - 2.0) + N * a * eps;
    e.a1 = (N + 2.0) / 2.0 - g1 - brA / den;
    e.b1 = g1 - (N + 2.0) / 2.0 + brB / den;
    if (p.N >= 4) {
        e.a2 = (N + 2.0) / 2.0 - g2 + 1.0 - brA / den;
        e.b2 = g2 - (N + 2.0) / 2.0 - 1.0 + brB / den;
    } else {  // N == 3
        e.a2 = 2.5 - g2 - (2.0 * (a + tau) + eps * (3.0 * tau + 3.0 - (2.0 - a))) / den;
        e.b2 = g2 - 2.5 + (2.0 * (3.0 * a + tau) + eps * (3.0 * tau + 3.0 - 3.0 * (2.0 - a))) / den;
    }
    return e;
}

FeasibilityReport appendix_feasible(const PhysParams& p) {
    if (classify_regime(p) != Regime::scattering_scope_appendix)
        throw std::invalid_argument("appendix_feasible: parameters outside the appendix scope");

    FeasibilityReport rep;
    rep.tau = p.N == 3 ? std::min(0.5 * (3.0 - 2.0 * p.b - p.alpha), 0.1) : 0.0;

    auto all_positive = [](const AppendixExponents& e, double margin) {
        return e.a1 > margin && e.b1 > margin && e.a2 > margin && e.b2 > margin;
    };
    auto eta_ok = [&](double eta) {
        return all_positive(appendix_limit_exponents(p, eta, rep.tau, AppendixRegion::ball), kMargin) &&
               all_positive(appendix_limit_exponents(p, eta, rep.tau, AppendixRegion::complement), kMargin);
    };
    const double eta = find_eta(eta_ok);
    if (eta == 0.0) return rep;
    rep.eta = eta;
    rep.limit_ball = appendix_limit_exponents(p, eta, rep.tau, AppendixRegion::ball);
    rep.limit_complement = appendix_limit_exponents(p, eta, rep.tau, AppendixRegion::complement);

    // eps |-> a_i(eps), b_i(eps) are decreasing, so halving terminates
    double eps = 1e-3;
    auto eps_ok = [&](double e) {
        return all_positive(appendix_exponents_at(p, eta, rep.tau, e, AppendixRegion::ball), kMargin) &&
               all_positive(appendix_exponents_at(p, eta, rep.tau, e, AppendixRegion::complement), kMargin);
    };
    while (!eps_ok(eps) && eps > 1e-15) eps /= 2.0;
    if (!eps_ok(eps)) return rep;
    rep.epsilon = eps;
    rep.ball = appendix_exponents_at(p, eta, rep.tau, eps, AppendixRegion::ball);
    rep.complement = appendix_exponents_at(p, eta, rep.tau, eps, AppendixRegion::complement);
    rep.feasible = true;
    return rep;
}

}  // namespace inls
