#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "c2r/errors.hpp"
#include "c2r/field.hpp"

namespace c2r::koch {

/// Parameters of the 1D reactive Euler RDE model. Defaults reproduce the
/// three co-rotating-wave configuration.
struct KochParams {
    double gamma = 1.29;     ///< specific-heat ratio
    double p_ref = 1.0;
    double rho_ref = 1.0;
    double T_ref = 1.0;
    double R = 1.0;          ///< gas constant
    double AR = 0.2;         ///< injector area ratio
    double s = 0.07;         ///< mixing parameter
    double beta_inj = 14.286;///< injection back-pressure ratio
    double Da = 289.0;       ///< Damkoehler number
    double T_ign = 5.8;      ///< ignition temperature
    double h_v = 24.6;       ///< heat release
    double E_a = 11.5;       ///< activation energy
    double L_dom = 24.0;     ///< domain length
    int m_x = 100;           ///< grid cells
    double t_final = 180.0;
    double cfl = 0.1;

    double dx() const { return L_dom / m_x; }
    /// Reference sound speed sqrt(gamma * p_ref / rho_ref).
    double c_ref() const;
    /// Choked-injection critical pressure p_ref * beta * (2/(gamma+1))^(gamma/(gamma-1)).
    double p_crit() const;

    void validate() const;  ///< throws ConfigError naming the bad field
};

/// Conserved variables (density, momentum, total energy, mixture-fraction
/// density) on the periodic grid, plus current time.
struct KochState {
    std::vector<double> rho;
    std::vector<double> rho_u;
    std::vector<double> E;
    std::vector<double> rho_z;
    double t = 0.0;

    int size() const { return static_cast<int>(rho.size()); }
};

/// Primitive variables per cell, derived through the gamma-law EOS.
struct PrimState {
    std::vector<double> rho;
    std::vector<double> u;
    std::vector<double> p;
    std::vector<double> T;
    std::vector<double> z;

    int size() const { return static_cast<int>(rho.size()); }
};

/// Single-cell primitive values (HLLC interface states).
struct PrimCell {
    double rho, u, p, z;
};

/// Per-cell source rates for the conserved variables.
struct SourceRates {
    std::vector<double> d_rho;
    std::vector<double> d_rho_u;
    std::vector<double> d_E;
    std::vector<double> d_rho_z;
};

PrimState to_primitive(const KochState& state, const KochParams& params);
KochState to_conserved(const PrimState& prim, const KochParams& params, double t);

/// Quiescent base state with `ignition_kernels` Gaussian hot spots
/// (T peak 2*T_ign, width L/40) equally spaced, plus a seeded 1e-3
/// relative temperature perturbation that breaks the kernel symmetry.
KochState init_state(const KochParams& params, std::uint64_t seed, int ignition_kernels);

/// HLLC numerical flux for (rho, rho*u, E, rho*z); z rides the contact wave.
/// Returns {f_rho, f_rho_u, f_E, f_rho_z}.
struct Flux4 {
    double rho, rho_u, E, rho_z;
};
Flux4 hllc_flux(const PrimCell& left, const PrimCell& right, double gamma, int cell = -1);

/// Exact analytic Euler flux F(U) of a single state (consistency reference).
Flux4 euler_flux(const PrimCell& w, double gamma);

/// Injection + mixing + reaction rates at the given primitive state.
SourceRates source_terms(const PrimState& prim, const KochParams& params);

/// CFL timestep for the current state.
double cfl_dt(const KochState& state, const KochParams& params);

/// Second-order MUSCL/HLLC transport update over dt (SSP-RK2, minmod
/// slopes on primitives, periodic BCs). Conservative by construction.
void transport_substep(KochState& state, const KochParams& params, double dt);

/// Heun (RK2) integration of source_terms over dt.
void source_substep(KochState& state, const KochParams& params, double dt);

/// One split step (transport then sources); returns the dt used.
/// If dt_cap > 0 the CFL step is additionally capped (used to land
/// exactly on snapshot times).
double step(KochState& state, const KochParams& params, double dt_cap = 0.0);

struct RunOptions {
    double snap_dt = 0.018;      ///< snapshot interval in solver time units
    int ignition_kernels = 4;
    std::uint64_t seed = 1;
};

/// Integrates to t_final recording temperature snapshots every snap_dt.
FieldSeries run(const KochParams& params, const RunOptions& opts);

enum class Regime { steady, pulsing };

struct WaveCount {
    int waves = 0;
    Regime regime = Regime::steady;
    std::string label;  ///< "steady-N" or "pulsing"
};

/// Counts rotating waves over a snapshot window [first, last).
/// Peaks above min + 0.5*range with prominence >= 0.25*range, modal count
/// across the window; "pulsing" when the spatial-max time series has
/// relative std > 0.2.
WaveCount count_waves(const FieldSeries& series, int first, int last);

} // namespace c2r::koch
