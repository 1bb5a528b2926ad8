#include "c2r/koch.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "c2r/rng.hpp"

namespace c2r::koch {

namespace {

double minmod(double a, double b) {
    if (a * b <= 0.0) return 0.0;
    return (std::fabs(a) < std::fabs(b)) ? a : b;
}

inline int wrap(int i, int n) { return (i % n + n) % n; }

} // namespace

double KochParams::c_ref() const { return std::sqrt(gamma * p_ref / rho_ref); }

double KochParams::p_crit() const {
    return p_ref * beta_inj * std::pow(2.0 / (gamma + 1.0), gamma / (gamma - 1.0));
}

void KochParams::validate() const {
    if (!(gamma > 1.0)) throw ConfigError("koch.gamma: must be > 1");
    if (m_x < 4) throw ConfigError("koch.m_x: must be >= 4");
    if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("koch.cfl: must be in (0, 1]");
    if (!(p_ref > 0.0)) throw ConfigError("koch.p_ref: must be > 0");
    if (!(rho_ref > 0.0)) throw ConfigError("koch.rho_ref: must be > 0");
    if (!(T_ref > 0.0)) throw ConfigError("koch.T_ref: must be > 0");
    if (!(R > 0.0)) throw ConfigError("koch.R: must be > 0");
    if (Da < 0.0) throw ConfigError("koch.Da: must be >= 0");
    if (h_v < 0.0) throw ConfigError("koch.h_v: must be >= 0");
    if (E_a < 0.0) throw ConfigError("koch.E_a: must be >= 0");
    if (T_ign < 0.0) throw ConfigError("koch.T_ign: must be >= 0");
    if (!(L_dom > 0.0)) throw ConfigError("koch.L_dom: must be > 0");
    if (!(t_final > 0.0)) throw ConfigError("koch.t_final: must be > 0");
    if (AR < 0.0) throw ConfigError("koch.AR: must be >= 0");
    if (s < 0.0) throw ConfigError("koch.s: must be >= 0");
    if (beta_inj < 0.0) throw ConfigError("koch.beta_inj: must be >= 0");
}

PrimState to_primitive(const KochState& state, const KochParams& params) {
    const int n = state.size();
    PrimState prim;
    prim.rho.resize(n);
    prim.u.resize(n);
    prim.p.resize(n);
    prim.T.resize(n);
    prim.z.resize(n);
    const double gm1 = params.gamma - 1.0;
    for (int i = 0; i < n; ++i) {
        const double rho = state.rho[i];
        if (!(rho > 0.0))
            throw SolverError("koch: nonpositive density at cell " + std::to_string(i), i);
        const double u = state.rho_u[i] / rho;
        const double p = gm1 * (state.E[i] - 0.5 * rho * u * u);
        if (!(p > 0.0))
            throw SolverError("koch: nonpositive pressure at cell " + std::to_string(i), i);
        prim.rho[i] = rho;
        prim.u[i] = u;
        prim.p[i] = p;
        prim.T[i] = p / (rho * params.R);
        prim.z[i] = state.rho_z[i] / rho;
    }
    return prim;
}

KochState to_conserved(const PrimState& prim, const KochParams& params, double t) {
    const int n = prim.size();
    KochState state;
    state.rho = prim.rho;
    state.rho_u.resize(n);
    state.E.resize(n);
    state.rho_z.resize(n);
    state.t = t;
    const double gm1 = params.gamma - 1.0;
    for (int i = 0; i < n; ++i) {
        state.rho_u[i] = prim.rho[i] * prim.u[i];
        state.E[i] = prim.p[i] / gm1 + 0.5 * prim.rho[i] * prim.u[i] * prim.u[i];
        state.rho_z[i] = prim.rho[i] * prim.z[i];
    }
    return state;
}

KochState init_state(const KochParams& params, std::uint64_t seed, int ignition_kernels) {
    params.validate();
    if (ignition_kernels < 1 || ignition_kernels > params.m_x / 4)
        throw ConfigError("koch.ignition_kernels: must be in [1, m_x/4], got " +
                          std::to_string(ignition_kernels));

    const int n = params.m_x;
    const double dx = params.dx();
    const double width = params.L_dom / 40.0;
    Rng rng(seed);

    PrimState prim;
    prim.rho.assign(n, params.rho_ref);
    prim.u.assign(n, 0.0);
    prim.z.assign(n, 0.0);
    prim.T.resize(n);
    prim.p.resize(n);

    for (int i = 0; i < n; ++i) {
        const double x = (i + 0.5) * dx;
        double T = params.T_ref;
        for (int k = 0; k < ignition_kernels; ++k) {
            const double xc = (k + 0.5) * params.L_dom / ignition_kernels;
            // nearest periodic image
            double d = std::fabs(x - xc);
            d = std::min(d, params.L_dom - d);
            T += (2.0 * params.T_ign - params.T_ref) * std::exp(-0.5 * d * d / (width * width));
        }
        // small seeded perturbation so symmetric kernel layouts can relax
        // into the natural wave count
        T *= 1.0 + 1e-3 * rng.uniform(-1.0, 1.0);
        prim.T[i] = T;
        prim.p[i] = prim.rho[i] * params.R * T;
    }
    return to_conserved(prim, params, 0.0);
}

Flux4 euler_flux(const PrimCell& w, double gamma) {
    const double E = w.p / (gamma - 1.0) + 0.5 * w.rho * w.u * w.u;
    return {w.rho * w.u, w.rho * w.u * w.u + w.p, (E + w.p) * w.u, w.rho * w.z * w.u};
}

Flux4 hllc_flux(const PrimCell& left, const PrimCell& right, double gamma, int cell) {
    if (!(left.rho > 0.0 && left.p > 0.0 && right.rho > 0.0 && right.p > 0.0))
        throw SolverError("hllc_flux: nonphysical input state at cell " + std::to_string(cell),
                          cell);

    const double cL = std::sqrt(gamma * left.p / left.rho);
    const double cR = std::sqrt(gamma * right.p / right.rho);

    const double sL = std::min(left.u - cL, right.u - cR);
    const double sR = std::max(left.u + cL, right.u + cR);

    if (sL >= 0.0) return euler_flux(left, gamma);
    if (sR <= 0.0) return euler_flux(right, gamma);

    const double num = right.p - left.p + left.rho * left.u * (sL - left.u) -
                       right.rho * right.u * (sR - right.u);
    const double den = left.rho * (sL - left.u) - right.rho * (sR - right.u);
    const double sStar = num / den;

    const auto star_flux = [&](const PrimCell& w, double sK) {
        const double EK = w.p / (gamma - 1.0) + 0.5 * w.rho * w.u * w.u;
        const double coef = w.rho * (sK - w.u) / (sK - sStar);
        const double e_star =
            EK / w.rho + (sStar - w.u) * (sStar + w.p / (w.rho * (sK - w.u)));
        const double uStar[4] = {coef, coef * sStar, coef * e_star, coef * w.z};
        const Flux4 f = euler_flux(w, gamma);
        const double uK[4] = {w.rho, w.rho * w.u, EK, w.rho * w.z};
        const double fv[4] = {f.rho, f.rho_u, f.E, f.rho_z};
        Flux4 out;
        out.rho = fv[0] + sK * (uStar[0] - uK[0]);
        out.rho_u = fv[1] + sK * (uStar[1] - uK[1]);
        out.E = fv[2] + sK * (uStar[2] - uK[2]);
        out.rho_z = fv[3] + sK * (uStar[3] - uK[3]);
        return out;
    };

    if (sStar >= 0.0) return star_flux(left, sL);
    return star_flux(right, sR);
}

SourceRates source_terms(const PrimState& prim, const KochParams& params) {
    const int n = prim.size();
    SourceRates rates;
    rates.d_rho.assign(n, 0.0);
    rates.d_rho_u.assign(n, 0.0);
    rates.d_E.assign(n, 0.0);
    rates.d_rho_z.assign(n, 0.0);

    const double p_crit = params.p_crit();
    const double c_ref = params.c_ref();
    const double e_inj = params.R * params.T_ref / (params.gamma - 1.0);
    const double T_gate = 1.01 * params.T_ign;

    for (int i = 0; i < n; ++i) {
        // choked injection: mass and internal energy at u=0, T=T_ref, z=0
        if (prim.p[i] < p_crit) {
            const double mdot =
                params.AR * params.rho_ref * c_ref * (1.0 - prim.p[i] / p_crit);
            rates.d_rho[i] += mdot;
            rates.d_E[i] += mdot * e_inj;
        }
        // mixing relaxes z toward 1 at rate s
        rates.d_rho_z[i] += prim.rho[i] * params.s * (1.0 - prim.z[i]);
        // Arrhenius reaction above the ignition gate
        if (prim.T[i] > T_gate) {
            const double omega =
                params.Da * prim.rho[i] * prim.z[i] * std::exp(-params.E_a / prim.T[i]);
            rates.d_rho_z[i] -= omega;
            rates.d_E[i] += params.h_v * omega;
        }
    }
    return rates;
}

double cfl_dt(const KochState& state, const KochParams& params) {
    const PrimState prim = to_primitive(state, params);
    double max_speed = 0.0;
    for (int i = 0; i < prim.size(); ++i) {
        const double c = std::sqrt(params.gamma * prim.p[i] / prim.rho[i]);
        max_speed = std::max(max_speed, std::fabs(prim.u[i]) + c);
    }
    const double dt = params.cfl * params.dx() / max_speed;
    if (dt < 1e-12)
        throw SolverError("koch: dt underflow (max wavespeed " + std::to_string(max_speed) + ")");
    return dt;
}

namespace {

/// Spatial flux divergence -dF/dx with minmod-limited MUSCL reconstruction.
void flux_divergence(const KochState& state, const KochParams& params,
                     std::vector<double> rhs[4]) {
    const int n = state.size();
    const double dx = params.dx();
    const PrimState prim = to_primitive(state, params);

    // limited slopes of the primitive variables
    static thread_local std::vector<double> s_rho, s_u, s_p, s_z;
    s_rho.assign(n, 0.0);
    s_u.assign(n, 0.0);
    s_p.assign(n, 0.0);
    s_z.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        const int im = wrap(i - 1, n), ip = wrap(i + 1, n);
        s_rho[i] = minmod(prim.rho[i] - prim.rho[im], prim.rho[ip] - prim.rho[i]);
        s_u[i] = minmod(prim.u[i] - prim.u[im], prim.u[ip] - prim.u[i]);
        s_p[i] = minmod(prim.p[i] - prim.p[im], prim.p[ip] - prim.p[i]);
        s_z[i] = minmod(prim.z[i] - prim.z[im], prim.z[ip] - prim.z[i]);
    }

    const auto face_state = [&](int i, double side) {
        PrimCell w;
        w.rho = prim.rho[i] + side * 0.5 * s_rho[i];
        w.u = prim.u[i] + side * 0.5 * s_u[i];
        w.p = prim.p[i] + side * 0.5 * s_p[i];
        w.z = prim.z[i] + side * 0.5 * s_z[i];
        // fall back to first order where reconstruction loses positivity
        if (!(w.rho > 0.0) || !(w.p > 0.0)) w = {prim.rho[i], prim.u[i], prim.p[i], prim.z[i]};
        return w;
    };

    // flux[i] is the interface between cells i and i+1
    static thread_local std::vector<Flux4> flux;
    flux.resize(n);
    for (int i = 0; i < n; ++i) {
        const int ip = wrap(i + 1, n);
        flux[i] = hllc_flux(face_state(i, +1.0), face_state(ip, -1.0), params.gamma, i);
    }

    for (int c = 0; c < 4; ++c) rhs[c].assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        const int im = wrap(i - 1, n);
        rhs[0][i] = -(flux[i].rho - flux[im].rho) / dx;
        rhs[1][i] = -(flux[i].rho_u - flux[im].rho_u) / dx;
        rhs[2][i] = -(flux[i].E - flux[im].E) / dx;
        rhs[3][i] = -(flux[i].rho_z - flux[im].rho_z) / dx;
    }
}

void axpy_state(KochState& out, const KochState& a, double coef_a, const KochState& b,
                double coef_b, const std::vector<double> rhs[4], double dt) {
    const int n = a.size();
    out.rho.resize(n);
    out.rho_u.resize(n);
    out.E.resize(n);
    out.rho_z.resize(n);
    for (int i = 0; i < n; ++i) {
        out.rho[i] = coef_a * a.rho[i] + coef_b * (b.rho[i] + dt * rhs[0][i]);
        out.rho_u[i] = coef_a * a.rho_u[i] + coef_b * (b.rho_u[i] + dt * rhs[1][i]);
        out.E[i] = coef_a * a.E[i] + coef_b * (b.E[i] + dt * rhs[2][i]);
        out.rho_z[i] = coef_a * a.rho_z[i] + coef_b * (b.rho_z[i] + dt * rhs[3][i]);
    }
}

} // namespace

void transport_substep(KochState& state, const KochParams& params, double dt) {
    std::vector<double> rhs[4];
    // SSP-RK2: U1 = U + dt*L(U); U2 = 1/2 U + 1/2 (U1 + dt*L(U1))
    KochState u1;
    flux_divergence(state, params, rhs);
    axpy_state(u1, state, 0.0, state, 1.0, rhs, dt);
    u1.t = state.t;
    flux_divergence(u1, params, rhs);
    KochState u2;
    axpy_state(u2, state, 0.5, u1, 0.5, rhs, dt);
    u2.t = state.t;
    state.rho = std::move(u2.rho);
    state.rho_u = std::move(u2.rho_u);
    state.E = std::move(u2.E);
    state.rho_z = std::move(u2.rho_z);
}

void source_substep(KochState& state, const KochParams& params, double dt) {
    const int n = state.size();
    // Heun: k1 at U, k2 at U + dt*k1, U += dt/2 (k1 + k2)
    const SourceRates k1 = source_terms(to_primitive(state, params), params);
    KochState mid = state;
    for (int i = 0; i < n; ++i) {
        mid.rho[i] += dt * k1.d_rho[i];
        mid.rho_u[i] += dt * k1.d_rho_u[i];
        mid.E[i] += dt * k1.d_E[i];
        mid.rho_z[i] += dt * k1.d_rho_z[i];
    }
    const SourceRates k2 = source_terms(to_primitive(mid, params), params);
    for (int i = 0; i < n; ++i) {
        state.rho[i] += 0.5 * dt * (k1.d_rho[i] + k2.d_rho[i]);
        state.rho_u[i] += 0.5 * dt * (k1.d_rho_u[i] + k2.d_rho_u[i]);
        state.E[i] += 0.5 * dt * (k1.d_E[i] + k2.d_E[i]);
        state.rho_z[i] += 0.5 * dt * (k1.d_rho_z[i] + k2.d_rho_z[i]);
        // clamp tiny integration overshoots of z in [0, 1]
        state.rho_z[i] = std::clamp(state.rho_z[i], 0.0, state.rho[i]);
    }
}

double step(KochState& state, const KochParams& params, double dt_cap) {
    double dt = cfl_dt(state, params);
    if (dt_cap > 0.0) dt = std::min(dt, dt_cap);
    transport_substep(state, params, dt);
    source_substep(state, params, dt);
    state.t += dt;
    return dt;
}

FieldSeries run(const KochParams& params, const RunOptions& opts) {
    params.validate();
    if (!(opts.snap_dt > 0.0)) throw ConfigError("koch.snap_dt: must be > 0");

    KochState state = init_state(params, opts.seed, opts.ignition_kernels);
    const int n_snaps = static_cast<int>(std::floor(params.t_final / opts.snap_dt)) + 1;
    FieldSeries out(params.m_x, n_snaps, params.dx(), opts.snap_dt, params.L_dom, "T");

    const auto record = [&](int snap) {
        const PrimState prim = to_primitive(state, params);
        std::copy(prim.T.begin(), prim.T.end(), out.snapshot(snap));
    };

    record(0);
    int next_snap = 1;
    while (next_snap < n_snaps) {
        const double t_target = next_snap * opts.snap_dt;
        step(state, params, t_target - state.t);
        if (state.t >= t_target - 1e-12) {
            state.t = t_target;  // squash roundoff drift in the snapshot clock
            record(next_snap);
            ++next_snap;
        }
    }
    return out;
}

namespace {

/// Peak positions on a circular signal: local maxima above the height
/// threshold with sufficient topographic prominence.
int count_peaks(const double* x, int n, double height, double min_prominence) {
    int count = 0;
    for (int i = 0; i < n; ++i) {
        const double xi = x[i];
        if (xi < height) continue;
        if (!(xi > x[wrap(i - 1, n)] && xi >= x[wrap(i + 1, n)])) continue;

        // prominence: lowest point on each side before reaching higher ground
        double left_min = xi, right_min = xi;
        for (int kk = 1; kk < n; ++kk) {
            const double v = x[wrap(i - kk, n)];
            if (v > xi) break;
            left_min = std::min(left_min, v);
        }
        for (int kk = 1; kk < n; ++kk) {
            const double v = x[wrap(i + kk, n)];
            if (v > xi) break;
            right_min = std::min(right_min, v);
        }
        const double prominence = xi - std::max(left_min, right_min);
        if (prominence >= min_prominence) ++count;
    }
    return count;
}

} // namespace

WaveCount count_waves(const FieldSeries& series, int first, int last) {
    if (first < 0 || last > series.m || first >= last)
        throw ConfigError("count_waves: empty or out-of-range window");

    std::map<int, int> histogram;
    std::vector<double> max_series;
    max_series.reserve(last - first);

    for (int t = first; t < last; ++t) {
        const double* snap = series.snapshot(t);
        const double lo = *std::min_element(snap, snap + series.n);
        const double hi = *std::max_element(snap, snap + series.n);
        const double range = hi - lo;
        max_series.push_back(hi);
        if (range <= 0.0) {
            histogram[0]++;
            continue;
        }
        const int peaks =
            count_peaks(snap, series.n, lo + 0.5 * range, 0.25 * range);
        histogram[peaks]++;
    }

    // modal count; ties resolved toward the smaller count for determinism
    int best_count = 0, best_freq = -1;
    for (const auto& [count, freq] : histogram) {
        if (freq > best_freq) {
            best_freq = freq;
            best_count = count;
        }
    }

    double mean = 0.0;
    for (double v : max_series) mean += v;
    mean /= static_cast<double>(max_series.size());
    double var = 0.0;
    for (double v : max_series) var += (v - mean) * (v - mean);
    var /= static_cast<double>(max_series.size());
    const double rel_std = (mean != 0.0) ? std::sqrt(var) / std::fabs(mean) : 0.0;

    WaveCount wc;
    wc.waves = best_count;
    wc.regime = (rel_std > 0.2) ? Regime::pulsing : Regime::steady;
    wc.label = (wc.regime == Regime::pulsing) ? "pulsing"
                                              : "steady-" + std::to_string(best_count);
    return wc;
}

} // namespace c2r::koch
