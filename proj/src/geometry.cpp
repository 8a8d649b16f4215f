#include "sweepw/geometry.hpp"

#include <cmath>
#include <string>

#include "sweepw/errors.hpp"

namespace sweepw {

namespace {

double checked_magnitude(double v, const char* unit) {
    if (!std::isfinite(v) || v < 0.0) {
        throw ConfigError("distance in " + std::string(unit) + " must be finite and non-negative");
    }
    return v;
}

}  // namespace

DistanceM::DistanceM(double v) : value(checked_magnitude(v, "metres")) {}

DistanceKm::DistanceKm(double v) : value(checked_magnitude(v, "kilometres")) {}

DistanceM km_to_m(DistanceKm d) {
    return DistanceM(d.value * 1000.0);
}

DistanceKm m_to_km(DistanceM d) {
    return DistanceKm(d.value / 1000.0);
}

DistanceKm distance_to_horizon_km(double altitude_m) {
    if (!std::isfinite(altitude_m) || altitude_m <= 0.0) {
        throw ConfigError("altitude must be a positive number of metres");
    }
    return DistanceKm(3.83 * std::sqrt(altitude_m));
}

double slant_range_m(double effective_altitude_m, double lateral_m) {
    if (!std::isfinite(effective_altitude_m) || effective_altitude_m < 0.0) {
        throw ConfigError("effective altitude must be finite and non-negative");
    }
    if (!std::isfinite(lateral_m) || lateral_m < 0.0) {
        throw ConfigError("lateral distance must be finite and non-negative");
    }
    return std::sqrt(effective_altitude_m * effective_altitude_m + lateral_m * lateral_m);
}

void ModelConstants::validate() const {
    if (altitudes_m.empty()) {
        throw ConfigError("altitude list must not be empty");
    }
    int prev_alt = 0;
    for (int alt : altitudes_m) {
        if (alt <= prev_alt) {
            throw ConfigError("altitudes must be positive and strictly increasing");
        }
        prev_alt = alt;
    }
    if (visibilities_km.empty()) {
        throw ConfigError("visibility list must not be empty");
    }
    double prev_vis = 0.0;
    for (double vis : visibilities_km) {
        if (!std::isfinite(vis) || vis <= prev_vis) {
            throw ConfigError("visibilities must be positive and strictly increasing");
        }
        prev_vis = vis;
    }
    if (sea_length_m < 1) {
        throw ConfigError("sea length must be at least one metre");
    }
    if (!std::isfinite(unlimited_visibility_km) || unlimited_visibility_km <= 0.0) {
        throw ConfigError("unlimited-visibility threshold must be positive");
    }
}

}  // namespace sweepw
