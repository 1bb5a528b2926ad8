#include "c2r/field.hpp"

#include <cmath>

namespace c2r {

void FieldSeries::validate() const {
    if (n < 4) throw ConfigError("FieldSeries.n: must be >= 4, got " + std::to_string(n));
    if (m < 2) throw ConfigError("FieldSeries.m: must be >= 2, got " + std::to_string(m));
    if (data.size() != static_cast<std::size_t>(n) * m)
        throw ConfigError("FieldSeries.data: size mismatch");
    for (double v : data)
        if (!std::isfinite(v)) throw ConfigError("FieldSeries.data: non-finite entry");
}

void SensorTrace::validate() const {
    if (p < 1 || p > source_n)
        throw ConfigError("SensorTrace.p: must be in [1, source_n]");
    if (static_cast<int>(sensor_indices.size()) != p)
        throw ConfigError("SensorTrace.sensor_indices: size mismatch");
    int prev = -1;
    for (int idx : sensor_indices) {
        if (idx <= prev || idx < 0 || idx >= source_n)
            throw ConfigError("SensorTrace.sensor_indices: must be strictly increasing and in [0, n)");
        prev = idx;
    }
    if (data.size() != static_cast<std::size_t>(p) * m)
        throw ConfigError("SensorTrace.data: size mismatch");
}

} // namespace c2r
