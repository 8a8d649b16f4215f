#include "sweepw/sensor.hpp"

#include <cmath>

#include "sweepw/errors.hpp"
#include "sweepw/geometry.hpp"

namespace sweepw {

double angular_resolution_rad(const HumanEyeConfig& cfg) {
    if (!std::isfinite(cfg.wavelength_m) || cfg.wavelength_m <= 0.0) {
        throw ConfigError("wavelength must be positive");
    }
    if (!std::isfinite(cfg.pupil_diameter_m) || cfg.pupil_diameter_m <= 0.0) {
        throw ConfigError("pupil diameter must be positive");
    }
    return 1.22 * cfg.wavelength_m / cfg.pupil_diameter_m;
}

double min_resolvable_size_m(double theta_rad, double effective_altitude_m, double lateral_m) {
    if (!std::isfinite(theta_rad) || theta_rad <= 0.0) {
        throw ConfigError("angular resolution must be positive");
    }
    return theta_rad * slant_range_m(effective_altitude_m, lateral_m);
}

bool eye_detect(const HumanEyeConfig& cfg, double effective_altitude_m, double object_size_m,
                double lateral_m) {
    if (!std::isfinite(object_size_m) || object_size_m <= 0.0) {
        throw ConfigError("object size must be positive");
    }
    const double theta = angular_resolution_rad(cfg);
    return object_size_m >= min_resolvable_size_m(theta, effective_altitude_m, lateral_m);
}

HumanEyeSensor::HumanEyeSensor(HumanEyeConfig cfg)
    : cfg_(cfg), theta_rad_(angular_resolution_rad(cfg)) {}

bool HumanEyeSensor::detect(double effective_altitude_m, double object_size_m,
                            double lateral_m) const {
    if (!std::isfinite(object_size_m) || object_size_m <= 0.0) {
        throw ConfigError("object size must be positive");
    }
    return object_size_m >= min_resolvable_size_m(theta_rad_, effective_altitude_m, lateral_m);
}

}  // namespace sweepw
