#pragma once

namespace sweepw {

// Parameters of the diffraction-limited eye. Defaults: peak photopic
// wavelength (550 nm) and a daylight pupil (5 mm); both configurable.
struct HumanEyeConfig {
    double wavelength_m = 550e-9;
    double pupil_diameter_m = 5e-3;

    bool operator==(const HumanEyeConfig&) const = default;
};

// Diffraction-limited angular resolution, 1.22 * lambda / D, in radians.
double angular_resolution_rad(const HumanEyeConfig& cfg);

// Smallest object size resolvable at the given geometry: theta times the
// slant distance from eye to object.
double min_resolvable_size_m(double theta_rad, double effective_altitude_m, double lateral_m);

// True iff the object is at least as large as the resolvable minimum;
// the comparison is inclusive.
bool eye_detect(const HumanEyeConfig& cfg, double effective_altitude_m, double object_size_m,
                double lateral_m);

// Detection capability. Implementations must be deterministic: identical
// inputs always yield the same verdict.
class Sensor {
public:
    virtual ~Sensor() = default;

    virtual bool detect(double effective_altitude_m, double object_size_m,
                        double lateral_m) const = 0;
};

class HumanEyeSensor final : public Sensor {
public:
    explicit HumanEyeSensor(HumanEyeConfig cfg = {});

    bool detect(double effective_altitude_m, double object_size_m,
                double lateral_m) const override;

    const HumanEyeConfig& config() const { return cfg_; }

private:
    HumanEyeConfig cfg_;
    double theta_rad_;  // cached; the config is immutable after construction
};

}  // namespace sweepw
