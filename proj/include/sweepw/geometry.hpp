#pragma once

#include <vector>

namespace sweepw {

// Visibilities at or above this value impose no range gate.
inline constexpr double kUnlimitedVisibilityKm = 37.0;

// Non-negative distance in metres.
struct DistanceM {
    double value = 0.0;

    DistanceM() = default;
    explicit DistanceM(double v);  // rejects negative or non-finite magnitudes

    bool operator==(const DistanceM&) const = default;
};

// Non-negative distance in kilometres.
struct DistanceKm {
    double value = 0.0;

    DistanceKm() = default;
    explicit DistanceKm(double v);

    bool operator==(const DistanceKm&) const = default;
};

DistanceM km_to_m(DistanceKm d);
DistanceKm m_to_km(DistanceM d);

// Sight distance over the curved earth from a given altitude,
// 3.83 * sqrt(altitude in metres), in kilometres.
DistanceKm distance_to_horizon_km(double altitude_m);

// Straight-line eye-to-object distance when the object sits lateral_m off
// the track and the eye is effective_altitude_m above it.
double slant_range_m(double effective_altitude_m, double lateral_m);

// Fixed model parameters. Defaults are the helicopter-at-sea setup: three
// search altitudes, six visibility bands, and a 54200 m sea length.
struct ModelConstants {
    std::vector<int> altitudes_m{150, 300, 600};
    std::vector<double> visibilities_km{1.9, 5.6, 9.3, 18.5, 27.8, 37.0};
    int sea_length_m = 54200;
    double unlimited_visibility_km = kUnlimitedVisibilityKm;

    void validate() const;  // throws ConfigError

    bool operator==(const ModelConstants&) const = default;
};

}  // namespace sweepw
