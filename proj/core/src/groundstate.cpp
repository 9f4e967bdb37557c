#include "inls/groundstate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>

#include <nlohmann/json.hpp>

#include "inls/io.hpp"

namespace inls {

namespace {

// |q|^alpha with small integer powers unrolled; pow dominates the shot cost
struct PowAlpha {
    explicit PowAlpha(double alpha) : alpha_(alpha) {
        const long long k = std::llround(alpha);
        int_ = k >= 1 && k <= 8 && std::abs(alpha - double(k)) < 1e-12 ? int(k) : 0;
    }
    double operator()(double aq) const {
        if (int_ == 0) return std::pow(aq, alpha_);
        double s = aq;
        for (int i = 1; i < int_; ++i) s *= aq;
        return s;
    }
    double alpha_;
    int int_ = 0;
};

// r^{-b} at the RK4 stage radii r0 + k step/2
struct SingularTable {
    SingularTable(double r0, double step, int nsteps, double b) : r0_(r0), half_(step / 2.0) {
        inv_.resize(2 * nsteps + 1);
        for (size_t k = 0; k < inv_.size(); ++k) inv_[k] = std::pow(r0 + k * half_, -b);
    }
    double r0_, half_;
    std::vector<double> inv_;
};

struct OdeState {
    double q, p;
};

// Q'' + (N-1) Q'/r = Q - r^{-b} |Q|^alpha Q
inline OdeState rhs(double r, double invb, const OdeState& s, double N1, const PowAlpha& pw) {
    return {s.p, s.q - invb * pw(std::abs(s.q)) * s.q - N1 * s.p / r};
}

inline OdeState rk4_step(double r, const OdeState& s, double h, const double* invb, double N1,
                         const PowAlpha& pw) {
    // invb[0], invb[1], invb[2] hold r^{-b} at r, r+h/2, r+h
    const OdeState k1 = rhs(r, invb[0], s, N1, pw);
    const OdeState k2 = rhs(r + h / 2, invb[1], {s.q + h / 2 * k1.q, s.p + h / 2 * k1.p}, N1, pw);
    const OdeState k3 = rhs(r + h / 2, invb[1], {s.q + h / 2 * k2.q, s.p + h / 2 * k2.p}, N1, pw);
    const OdeState k4 = rhs(r + h, invb[2], {s.q + h * k3.q, s.p + h * k3.p}, N1, pw);
    return {s.q + h / 6 * (k1.q + 2 * k2.q + 2 * k3.q + k4.q),
            s.p + h / 6 * (k1.p + 2 * k2.p + 2 * k3.p + k4.p)};
}

enum class Side { below, above, separatrix };

// Bisection event classifier: the first sign event decides the side. The
// turn-up (P > 0 while Q > 0) marks amplitudes below the ground state; a
// zero crossing marks amplitudes above. The 1.5a growth criterion of the
// public classifier is too slow near the separatrix because sub-critical
// shots get trapped oscillating around the slowly growing center ~ r^{b/2}.
Side classify_side(double a, const PhysParams& p, const SingularTable& tab, int nsteps,
                   double step) {
    const PowAlpha pw(p.alpha);
    const double N1 = p.N - 1.0;
    OdeState s;
    {
        const auto [q0, p0] = local_series(a, tab.r0_, p);
        s = {q0, p0};
    }
    if (s.p > 0.0) return Side::below;
    double r = tab.r0_;
    for (int i = 0; i < nsteps; ++i) {
        const OdeState next = rk4_step(r, s, step, &tab.inv_[2 * i], N1, pw);
        r += step;
        if (!std::isfinite(next.q) || !std::isfinite(next.p))
            return s.p < 0.0 ? Side::above : Side::below;
        s = next;
        if (s.q <= 0.0) return Side::above;
        if (s.p > 0.0) return Side::below;
    }
    return Side::separatrix;
}

void validate_groundstate_params(const PhysParams& p) {
    if (p.N < 2) throw std::invalid_argument("ground state: N must be >= 2");
    if (!(p.b >= 0.0 && p.b < 2.0 && p.b < p.N))
        throw std::invalid_argument("ground state: need 0 <= b < min(2, N)");
    if (!(p.alpha > 0.0)) throw std::invalid_argument("ground state: alpha must be positive");
    if (p.N >= 3 && !(p.alpha < (4.0 - 2.0 * p.b) / (p.N - 2)))
        throw std::invalid_argument("ground state: alpha must lie below the energy-critical power");
}

constexpr double kShootDomain = 40.0;  // classification domain; peel-off detection needs ~log(a/eps)
constexpr double kShootStep = 1e-4;

}  // namespace

std::pair<double, double> local_series(double a, double r, const PhysParams& p) {
    if (!(r > 0.0)) throw std::invalid_argument("local_series: r must be positive");
    if (!(a > 0.0)) throw std::invalid_argument("local_series: amplitude must be positive");
    const double N = p.N, b = p.b;
    const double c1 = a / (2.0 * N);
    const double c2 = std::pow(a, p.alpha + 1.0) / ((2.0 - b) * (N - b));
    const double q = a + c1 * r * r - c2 * std::pow(r, 2.0 - b);
    const double dq = a * r / N - std::pow(a, p.alpha + 1.0) * std::pow(r, 1.0 - b) / (N - b);
    return {q, dq};
}

ShotClass shoot(double a, const PhysParams& p, double r_max, double step) {
    if (!(a > 0.0)) throw std::invalid_argument("shoot: amplitude must be positive");
    if (!(step > 0.0) || !(r_max > 0.0)) throw std::invalid_argument("shoot: bad domain");
    validate_groundstate_params(p);
    const double r0 = 1e-4 * std::min(r_max, 20.0);
    const int nsteps = int(std::ceil((r_max - r0) / step));
    const SingularTable tab(r0, step, nsteps, p.b);
    const PowAlpha pw(p.alpha);
    const double N1 = p.N - 1.0;
    auto [q0, p0] = local_series(a, r0, p);
    OdeState s{q0, p0};
    double r = r0;
    for (int i = 0; i < nsteps; ++i) {
        const OdeState next = rk4_step(r, s, step, &tab.inv_[2 * i], N1, pw);
        r += step;
        if (!std::isfinite(next.q) || !std::isfinite(next.p)) return ShotClass::grows;
        s = next;
        if (s.q <= 0.0 && s.p < 0.0) return ShotClass::crosses_zero;
        if (s.p > 0.0 && s.q > 1.5 * a) return ShotClass::grows;
    }
    if (std::abs(s.q) < 1e-8 && std::abs(s.p + s.q) < 1e-6) return ShotClass::decays;
    // end of domain without a definite event: a turned-up shot will grow,
    // a still-falling one is heading to zero
    return s.p > 0.0 ? ShotClass::grows : ShotClass::decays;
}

ShootingResult shoot_ground_state(const PhysParams& p, double tol, double r0) {
    validate_groundstate_params(p);
    if (!(tol >= 1e-15)) throw std::invalid_argument("shoot_ground_state: tol below 1e-15");
    const int nsteps = int(std::ceil((kShootDomain - r0) / kShootStep));
    const SingularTable tab(r0, kShootStep, nsteps, p.b);

    double lo = 0.0, hi = 0.0;
    double last_below = 0.0;
    for (int k = -10; k <= 10; ++k) {
        const double a = std::ldexp(1.0, k);
        const Side side = classify_side(a, p, tab, nsteps, kShootStep);
        if (side == Side::below) {
            last_below = a;
        } else if (side == Side::above) {
            if (last_below == 0.0) break;
            lo = last_below;
            hi = a;
            break;
        }
    }
    if (hi == 0.0)
        throw SolveError("ground state: no amplitude bracket found in [2^-10, 2^10]");

    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // double resolution exhausted
        const Side side = classify_side(mid, p, tab, nsteps, kShootStep);
        if (side == Side::above)
            hi = mid;
        else if (side == Side::below)
            lo = mid;
        else
            break;  // mid rides the separatrix to the domain end
    }

    ShootingResult out;
    out.amplitude = 0.5 * (lo + hi);
    out.tol = tol;
    out.r.reserve(nsteps + 1);
    out.q.reserve(nsteps + 1);
    out.dq.reserve(nsteps + 1);
    const PowAlpha pw(p.alpha);
    const double N1 = p.N - 1.0;
    auto [q0, p0] = local_series(out.amplitude, r0, p);
    OdeState s{q0, p0};
    double r = r0;
    out.r.push_back(r);
    out.q.push_back(s.q);
    out.dq.push_back(s.p);
    for (int i = 0; i < nsteps; ++i) {
        const OdeState next = rk4_step(r, s, kShootStep, &tab.inv_[2 * i], N1, pw);
        r += kShootStep;
        if (!std::isfinite(next.q) || next.q <= 0.0 || next.p > 0.0) break;
        s = next;
        out.r.push_back(r);
        out.q.push_back(s.q);
        out.dq.push_back(s.p);
    }
    out.trust_radius = out.r.back();
    return out;
}

namespace {

double sample_profile(const ShootingResult& s, const PhysParams& p, double r) {
    if (r <= s.r.front()) return local_series(s.amplitude, r, p).first;
    if (r > s.trust_radius) {
        const double q_tr = s.q.back(), r_tr = s.trust_radius;
        return q_tr * std::pow(r / r_tr, -(p.N - 1) / 2.0) * std::exp(-(r - r_tr));
    }
    const double step = s.r[1] - s.r[0];
    size_t i = size_t((r - s.r.front()) / step);
    i = std::min(i, s.r.size() - 2);
    const double t = (r - s.r[i]) / step;
    const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
    const double h10 = t * (1 - t) * (1 - t);
    const double h01 = t * t * (3 - 2 * t);
    const double h11 = t * t * (t - 1);
    return h00 * s.q[i] + h10 * step * s.dq[i] + h01 * s.q[i + 1] + h11 * step * s.dq[i + 1];
}

void fill_variational(GroundStateProfile& g) {
    const PhysParams& p = g.params;
    const RadialField f = g.field();
    const Functionals fn = functionals(f, p);
    g.massQ = fn.mass;
    g.kineticQ = fn.kinetic;
    g.potentialQ = fn.potential;
    const double N = p.N, b = p.b, a = p.alpha;
    const double e_mass = (4.0 - 2.0 * b - (N - 2.0) * a) / 4.0;
    const double e_kin = (N * a + 2.0 * b) / 4.0;
    g.c_opt = g.potentialQ / (std::pow(g.massQ, e_mass) * std::pow(g.kineticQ, e_kin));
    const double den = N * a - 4.0 + 2.0 * b;
    if (den != 0.0) {
        const double sigma = (4.0 - 2.0 * b - (N - 2.0) * a) / den;
        const double energy = 0.5 * g.kineticQ - g.potentialQ / (a + 2.0);
        g.threshold_energy = energy * std::pow(g.massQ, sigma);
        g.threshold_gradient = std::sqrt(g.kineticQ) * std::pow(g.massQ, sigma / 2.0);
    }
}

}  // namespace

RadialField GroundStateProfile::field(double scale) const {
    RadialField f(grid);
    for (int j = 0; j < grid->points; ++j) f.values[j] = scale * samples[j];
    return f;
}

GroundStateProfile profile_from_shooting(std::shared_ptr<const ShootingResult> s,
                                         const PhysParams& p, GridPtr grid, double tol) {
    GroundStateProfile g;
    g.params = p;
    g.amplitude = s->amplitude;
    g.tol = tol;
    g.grid = grid;
    g.trust_radius = s->trust_radius;
    g.shooting = s;
    g.samples.resize(grid->points);
    for (int j = 0; j < grid->points; ++j) g.samples[j] = sample_profile(*s, p, grid->r[j]);
    fill_variational(g);
    return g;
}

GroundStateProfile solve_ground_state(const PhysParams& p, GridPtr grid, double tol) {
    const double r0 = 1e-4 * std::min(grid->r_max, 20.0);
    auto s = std::make_shared<ShootingResult>(shoot_ground_state(p, tol, r0));
    return profile_from_shooting(std::move(s), p, std::move(grid), tol);
}

std::pair<double, double> pohozaev_report(const GroundStateProfile& g) {
    const double N = g.params.N, b = g.params.b, a = g.params.alpha;
    const double num = 4.0 - 2.0 * b - (N - 2.0) * a;
    const double c1 = num / (N * a + 2.0 * b);
    const double c2 = num / (2.0 * (a + 2.0));
    return {std::abs(g.massQ - c1 * g.kineticQ) / g.massQ,
            std::abs(g.massQ - c2 * g.potentialQ) / g.massQ};
}

GNConstant gn_constant(const GroundStateProfile& g) {
    const double N = g.params.N, b = g.params.b, a = g.params.alpha;
    GNConstant c;
    c.direct = g.c_opt;
    // closed form with the sigma_c exponent combined algebraically, so the
    // mass-critical degeneracy stays finite
    c.closed = (2.0 * (a + 2.0) / (N * a + 2.0 * b)) *
               std::pow(g.kineticQ, -(N * a - 4.0 + 2.0 * b) / 4.0) *
               std::pow(g.massQ, -(4.0 - 2.0 * b - (N - 2.0) * a) / 4.0);
    c.rel_diff = std::abs(c.direct - c.closed) / c.closed;
    return c;
}

std::pair<double, double> threshold_quantities(const GroundStateProfile& g) {
    if (g.params.sign != Sign::focusing)
        throw std::invalid_argument("threshold_quantities: thresholds are focusing-only");
    if (!g.threshold_energy || !g.threshold_gradient)
        throw std::invalid_argument("threshold_quantities: sigma_c undefined at these parameters");
    return {*g.threshold_energy, *g.threshold_gradient};
}

// ---- cache -----------------------------------------------------------------

std::filesystem::path GroundStateCache::default_dir() {
    if (const char* env = std::getenv("INLS_CACHE_DIR")) return env;
    return "inls_cache";
}

namespace {

std::string cache_file_name(const PhysParams& p) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "gs_N%d_b%g_alpha%g.csv", p.N, p.b, p.alpha);
    return buf;
}

std::string profile_key(const PhysParams& p, const RadialGrid& g, double tol) {
    char buf[192];
    std::snprintf(buf, sizeof buf, "%d|%.17g|%.17g|%d|%d|%.17g|%.17g", p.N, p.b, p.alpha,
                  g.dim, g.points, g.r_max, tol);
    return buf;
}

std::string shot_key(const PhysParams& p, double tol, double r0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d|%.17g|%.17g|%.17g|%.17g", p.N, p.b, p.alpha, tol, r0);
    return buf;
}

void save_profile(const std::filesystem::path& dir, const GroundStateProfile& g) {
    std::filesystem::create_directories(dir);
    nlohmann::json meta{
        {"N", g.params.N},
        {"b", g.params.b},
        {"alpha", g.params.alpha},
        {"grid_points", g.grid->points},
        {"grid_r_max", g.grid->r_max},
        {"tol", g.tol},
        {"amplitude", g.amplitude},
        {"trust_radius", g.trust_radius},
        {"massQ", g.massQ},
        {"kineticQ", g.kineticQ},
        {"potentialQ", g.potentialQ},
        {"c_opt", g.c_opt},
    };
    if (g.threshold_energy) meta["threshold_energy"] = *g.threshold_energy;
    if (g.threshold_gradient) meta["threshold_gradient"] = *g.threshold_gradient;

    const auto path = dir / cache_file_name(g.params);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        out << "# " << meta.dump() << "\n";
        out << "r,Q\n";
        for (int j = 0; j < g.grid->points; ++j)
            out << fmt17(g.grid->r[j]) << ',' << fmt17(g.samples[j]) << "\n";
    }
    std::filesystem::rename(tmp, path);
}

std::shared_ptr<GroundStateProfile> load_profile(const std::filesystem::path& dir,
                                                 const PhysParams& p, const GridPtr& grid,
                                                 double tol) {
    std::ifstream in(dir / cache_file_name(p));
    if (!in) return nullptr;
    std::string line;
    if (!std::getline(in, line) || line.rfind("# ", 0) != 0) return nullptr;
    nlohmann::json meta = nlohmann::json::parse(line.substr(2), nullptr, false);
    if (meta.is_discarded()) return nullptr;
    auto want = [&meta](const char* key, double v) {
        return meta.contains(key) && meta[key].get<double>() == v;
    };
    if (!(want("N", p.N) && want("b", p.b) && want("alpha", p.alpha) &&
          want("grid_points", grid->points) && want("grid_r_max", grid->r_max) &&
          want("tol", tol)))
        return nullptr;
    std::getline(in, line);  // column header
    auto g = std::make_shared<GroundStateProfile>();
    g->params = p;
    g->tol = tol;
    g->grid = grid;
    g->amplitude = meta["amplitude"].get<double>();
    g->trust_radius = meta["trust_radius"].get<double>();
    g->samples.reserve(grid->points);
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        if (comma == std::string::npos) return nullptr;
        g->samples.push_back(std::strtod(line.c_str() + comma + 1, nullptr));
    }
    if (int(g->samples.size()) != grid->points) return nullptr;
    fill_variational(*g);
    return g;
}

}  // namespace

std::shared_ptr<const GroundStateProfile> GroundStateCache::get(const PhysParams& p, GridPtr grid,
                                                                double tol) {
    const std::string key = profile_key(p, *grid, tol);
    std::unique_lock lock(mu_);
    if (auto it = profiles_.find(key); it != profiles_.end()) return it->second;

    if (auto loaded = load_profile(dir_, p, grid, tol)) {
        profiles_[key] = loaded;
        return loaded;
    }

    const double r0 = 1e-4 * std::min(grid->r_max, 20.0);
    const std::string skey = shot_key(p, tol, r0);
    std::shared_ptr<const ShootingResult> shot;
    if (auto it = shots_.find(skey); it != shots_.end()) {
        shot = it->second;
    } else {
        lock.unlock();
        auto fresh = std::make_shared<ShootingResult>(shoot_ground_state(p, tol, r0));
        lock.lock();
        auto [it2, inserted] = shots_.emplace(skey, std::move(fresh));
        shot = it2->second;  // first writer wins on a race
    }
    auto prof = std::make_shared<GroundStateProfile>(profile_from_shooting(shot, p, grid, tol));
    profiles_[key] = prof;
    save_profile(dir_, *prof);
    return prof;
}

}  // namespace inls
