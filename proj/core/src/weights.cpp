#include "inls/weights.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace inls {

namespace blend {

namespace {
// unique degree-7 polynomial with phi(1)=1, phi'(1)=2, phi''(1)=2, phi'''(1)=0,
// phi(2)=2, phi'(2)=phi''(2)=phi'''(2)=0
constexpr std::array<double, 8> kPhi = {-62.0, 320.0, -688.0, 800.0, -540.0, 212.0, -45.0, 4.0};

double horner(const double* c, int n, double x) {
    double s = 0.0;
    for (int k = n - 1; k >= 0; --k) s = s * x + c[k];
    return s;
}

std::array<double, 8> derive(const std::array<double, 8>& c) {
    std::array<double, 8> d{};
    for (int k = 1; k < 8; ++k) d[k - 1] = k * c[k];
    return d;
}

const std::array<double, 8> kPhi1 = derive(kPhi);
const std::array<double, 8> kPhi2 = derive(kPhi1);
const std::array<double, 8> kPhi3 = derive(kPhi2);
const std::array<double, 8> kPhi4 = derive(kPhi3);
}  // namespace

double phi(double rho) { return horner(kPhi.data(), 8, rho); }

double phi_d(double rho, int order) {
    switch (order) {
        case 1: return horner(kPhi1.data(), 7, rho);
        case 2: return horner(kPhi2.data(), 6, rho);
        case 3: return horner(kPhi3.data(), 5, rho);
        case 4: return horner(kPhi4.data(), 4, rho);
        default: throw std::invalid_argument("blend::phi_d: order must be 1..4");
    }
}

double smoothstep7(double x) {
    // 35x^4 - 84x^5 + 70x^6 - 20x^7
    const double x2 = x * x;
    return x2 * x2 * (35.0 + x * (-84.0 + x * (70.0 - 20.0 * x)));
}

double smoothstep7_d(double x, int order) {
    switch (order) {
        case 1: return x * x * x * (140.0 + x * (-420.0 + x * (420.0 - 140.0 * x)));
        case 2: return x * x * (420.0 + x * (-1680.0 + x * (2100.0 - 840.0 * x)));
        default: throw std::invalid_argument("blend::smoothstep7_d: order must be 1..2");
    }
}

}  // namespace blend

namespace {

struct PhiDerivs {
    double v, d1, d2, d3, d4;
};

// derivatives of phi_R(r) = R^2 phi(r/R)
PhiDerivs phi_at(double r, double R) {
    const double rho = r / R;
    if (rho <= 1.0) return {r * r, 2.0 * r, 2.0, 0.0, 0.0};
    if (rho >= 2.0) return {2.0 * R * R, 0.0, 0.0, 0.0, 0.0};
    return {R * R * blend::phi(rho), R * blend::phi_d(rho, 1), blend::phi_d(rho, 2),
            blend::phi_d(rho, 3) / R, blend::phi_d(rho, 4) / (R * R)};
}

double laplacian_of(const PhiDerivs& d, double r, int N) {
    return d.d2 + (N - 1) * d.d1 / r;
}

double bilaplacian_of(const PhiDerivs& d, double r, int N) {
    return d.d4 + 2.0 * (N - 1) * d.d3 / r +
           (N - 1) * (N - 3) * (d.d2 / (r * r) - d.d1 / (r * r * r));
}

constexpr double kTol = 1e-12;
// derivative sup constant of the fixed junction: |phi^(k)| <= kSup R^{2-k}
constexpr double kSup = 361.0;

}  // namespace

VirialWeight make_weight_phi(double R, GridPtr grid) {
    if (!(R >= 4.0 * grid->h))
        throw std::invalid_argument("make_weight_phi: need R >= 4h to resolve the junction");
    VirialWeight w;
    w.R = R;
    w.grid = grid;
    const int J = grid->points;
    const int N = grid->dim;
    w.phi.resize(J);
    w.dphi.resize(J);
    w.d2phi.resize(J);
    w.d3phi.resize(J);
    w.d4phi.resize(J);
    w.lap.resize(J);
    w.bilap.resize(J);
    for (int j = 0; j < J; ++j) {
        const double r = grid->r[j];
        const PhiDerivs d = phi_at(r, R);
        w.phi[j] = d.v;
        w.dphi[j] = d.d1;
        w.d2phi[j] = d.d2;
        w.d3phi[j] = d.d3;
        w.d4phi[j] = d.d4;
        w.lap[j] = laplacian_of(d, r, N);
        w.bilap[j] = bilaplacian_of(d, r, N);
    }
    // constraint verification on a dense rho sample at construction
    for (int k = 0; k <= 1000; ++k) {
        const double rho = 1.0 + k / 1000.0;
        const double d1 = blend::phi_d(rho, 1);
        const double d2 = blend::phi_d(rho, 2);
        if (d1 < -kTol || d2 > 2.0 + kTol || d2 + (N - 1) * d1 / rho > 2.0 * N + kTol)
            throw std::logic_error("make_weight_phi: junction violates the weight constraints");
    }
    if (auto bad = weight_violation(w))
        throw std::logic_error("make_weight_phi: " + *bad);
    return w;
}

std::optional<std::string> weight_violation(const VirialWeight& w) {
    const auto& g = *w.grid;
    const double R = w.R, R2 = R * R;
    for (int j = 0; j < g.points; ++j) {
        const double r = g.r[j];
        if (w.dphi[j] < -kTol * R) return "phi' < 0 at r=" + std::to_string(r);
        if (w.d2phi[j] > 2.0 + kTol) return "phi'' > 2 at r=" + std::to_string(r);
        if (2.0 * g.dim - w.lap[j] < -kTol) return "2N - lap(phi) < 0 at r=" + std::to_string(r);
        if (r <= R && std::abs(w.phi[j] - r * r) > kTol * R2)
            return "phi != r^2 inside R at r=" + std::to_string(r);
        if (r >= 2.0 * R && std::abs(w.phi[j] - 2.0 * R2) > kTol * R2)
            return "phi != 2R^2 beyond 2R at r=" + std::to_string(r);
        if (std::abs(w.phi[j]) > kSup * R2 || std::abs(w.dphi[j]) > kSup * R ||
            std::abs(w.d2phi[j]) > kSup || std::abs(w.d3phi[j]) > kSup / R ||
            std::abs(w.d4phi[j]) > kSup / R2)
            return "derivative sup bound exceeded at r=" + std::to_string(r);
    }
    return std::nullopt;
}

Cutoff make_cutoff_chi(double R, GridPtr grid) {
    if (!(R >= 4.0 * grid->h))
        throw std::invalid_argument("make_cutoff_chi: need R >= 4h to resolve the junction");
    Cutoff c;
    c.R = R;
    c.grid = grid;
    const int J = grid->points;
    const int N = grid->dim;
    c.chi.resize(J);
    c.lap.resize(J);
    for (int j = 0; j < J; ++j) {
        const double rho = grid->r[j] / R;
        if (rho <= 0.5) {
            c.chi[j] = 1.0;
            c.lap[j] = 0.0;
        } else if (rho >= 1.0) {
            c.chi[j] = 0.0;
            c.lap[j] = 0.0;
        } else {
            const double x = 2.0 * rho - 1.0;
            c.chi[j] = 1.0 - blend::smoothstep7(x);
            const double d1 = -2.0 * blend::smoothstep7_d(x, 1) / R;
            const double d2 = -4.0 * blend::smoothstep7_d(x, 2) / (R * R);
            c.lap[j] = d2 + (N - 1) * d1 / grid->r[j];
        }
        c.sup_lap = std::max(c.sup_lap, std::abs(c.lap[j]));
    }
    return c;
}

RadialField apply_cutoff(const RadialField& u, const Cutoff& c) {
    if (!u.grid->same_as(*c.grid))
        throw std::invalid_argument("apply_cutoff: grid mismatch");
    RadialField v(u.grid);
    for (int j = 0; j < u.grid->points; ++j) v.values[j] = c.chi[j] * u.values[j];
    return v;
}

double virial_moment(const RadialField& u, const VirialWeight& w) {
    if (!u.grid->same_as(*w.grid))
        throw std::invalid_argument("virial_moment: grid mismatch");
    const auto& g = *u.grid;
    const auto du = radial_derivative(u);
    double s = 0.0;
    for (int j = 0; j < g.points; ++j) {
        const double im = std::imag(std::conj(u.values[j]) * du[j]);
        s += std::pow(g.r[j], g.dim - 1) * w.dphi[j] * im;
    }
    return 2.0 * g.sphere_measure * g.h * s;
}

}  // namespace inls
