#pragma once

#include <array>
#include <string>
#include <vector>

#include "core/types.hpp"

namespace qst {

// QuadStretcher device constants. Defaults are the published hardware limits:
// +/-11.0 mm tactor travel, 206 mm/s max tactor speed, 6.8 N max force, and
// the 8.6 mm comfortable-output clamp.
struct QuadDeviceParams {
    double max_travel_mm = 11.0;
    double comfort_limit_mm = 8.6;
    double max_speed_mm_s = 206.0;
    double max_force_n = 6.8;
    // Control-signal-to-skin-displacement slopes per tactor, indexed by
    // tactor_index(side, pos). Contraction slopes apply to negative signals,
    // expansion slopes to positive ones; expansion is always the smaller of
    // the two (the flexible rack bends when pushing tactors apart).
    std::array<double, kTactorCount> skin_ratio_contraction{};
    std::array<double, kTactorCount> skin_ratio_expansion{};
};

struct TensionKnot {
    double contraction_mm = 0.0;
    double tension_n = 0.0;
};

// Squeezer (tension-band baseline) constants. The tension curve is a monotone
// lookup table mapping string contraction to band tension; the default table
// is a synthetic stiffening curve, not measured data, and is meant to be
// replaced by a device-specific calibration table from config.
struct SqueezerParams {
    int tactor_count = 6;
    double max_string_tension_n = 88.29;  // 9 kg wire rating at g = 9.81
    std::vector<TensionKnot> tension_curve;
    double tactor_force_factor = 0.87;
    double pid_rate_hz = 1000.0;
    int encoder_bits = 12;
    double pulley_radius_mm = 5.0;
    double max_pulley_speed_rad_s = 20.0;
};

struct PidGains {
    double kp = 0.0;
    double ki = 0.0;
    double kd = 0.0;
};

QuadDeviceParams default_quad_params();
SqueezerParams default_squeezer_params();
PidGains default_squeezer_gains();

double skin_ratio(const QuadDeviceParams& p, Side side, TactorPos pos, StretchType type);

struct ValidationIssue {
    std::string name;     // the violated invariant, e.g. "comfort_limit <= max_travel"
    std::string message;  // what was found
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool valid() const { return issues.empty(); }
    std::string to_string() const;
};

// Checks every declared invariant and reports all violations; never throws.
ValidationReport validate_params(const QuadDeviceParams& p);
ValidationReport validate_params(const SqueezerParams& p);
ValidationReport validate_gains(const PidGains& g);

}  // namespace qst
