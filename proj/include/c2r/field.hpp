#pragma once

#include <string>
#include <vector>

#include "c2r/errors.hpp"

namespace c2r {

/// Spatio-temporal scalar field u(x,t): n spatial points by m snapshots.
/// Snapshot-major storage: column t occupies data[t*n .. t*n+n).
/// Periodic in space by convention.
struct FieldSeries {
    int n = 0;                 ///< spatial points
    int m = 0;                 ///< snapshots
    double dx = 1.0;           ///< grid spacing
    double dt = 1.0;           ///< snapshot interval
    double domain_length = 1.0;
    std::string label;
    std::vector<double> data;  ///< size n*m, snapshot-major

    FieldSeries() = default;
    FieldSeries(int n_, int m_, double dx_, double dt_, double lx, std::string lbl = {})
        : n(n_), m(m_), dx(dx_), dt(dt_), domain_length(lx), label(std::move(lbl)),
          data(static_cast<std::size_t>(n_) * m_, 0.0) {}

    double& at(int i, int t) { return data[static_cast<std::size_t>(t) * n + i]; }
    double at(int i, int t) const { return data[static_cast<std::size_t>(t) * n + i]; }

    double* snapshot(int t) { return data.data() + static_cast<std::size_t>(t) * n; }
    const double* snapshot(int t) const { return data.data() + static_cast<std::size_t>(t) * n; }

    /// Checks the structural invariants (n >= 4, m >= 2, finite entries).
    void validate() const;
};

/// Sparse sensor measurements: p rows of the source field over m snapshots.
/// Snapshot-major like FieldSeries (column t is the p-vector at time t).
struct SensorTrace {
    int p = 0;
    int m = 0;
    int source_n = 0;
    std::vector<int> sensor_indices;  ///< strictly increasing, unique, in [0, source_n)
    std::vector<double> data;         ///< size p*m, snapshot-major

    double& at(int j, int t) { return data[static_cast<std::size_t>(t) * p + j]; }
    double at(int j, int t) const { return data[static_cast<std::size_t>(t) * p + j]; }

    double* snapshot(int t) { return data.data() + static_cast<std::size_t>(t) * p; }
    const double* snapshot(int t) const { return data.data() + static_cast<std::size_t>(t) * p; }

    void validate() const;
};

} // namespace c2r
