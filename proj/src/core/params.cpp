#include "core/params.hpp"

#include <cmath>
#include <sstream>

namespace qst {

QuadDeviceParams default_quad_params() {
    QuadDeviceParams p;
    // Regression slopes between control signal and mean skin displacement.
    // Only the reported extremes and the means are known per direction:
    // contraction ranged 0.78 (Vp) to 0.95 (Dd) with mean 0.84, expansion
    // 0.55 (Dd) to 0.70 (Rp) with mean 0.62. Unreported tactors default to
    // the means and are overridable from config.
    p.skin_ratio_contraction.fill(0.84);
    p.skin_ratio_expansion.fill(0.62);
    p.skin_ratio_contraction[tactor_index(Side::Dorsal, TactorPos::Distal)] = 0.95;
    p.skin_ratio_contraction[tactor_index(Side::Ventral, TactorPos::Proximal)] = 0.78;
    p.skin_ratio_expansion[tactor_index(Side::Dorsal, TactorPos::Distal)] = 0.55;
    p.skin_ratio_expansion[tactor_index(Side::Right, TactorPos::Proximal)] = 0.70;
    return p;
}

SqueezerParams default_squeezer_params() {
    SqueezerParams p;
    // Synthetic stiffening curve: quadratic from (0 mm, 0 N) up to (16 mm,
    // 40 N). Placeholder shape only; replace with a measured table.
    for (int i = 0; i <= 8; ++i) {
        double c = 2.0 * i;
        p.tension_curve.push_back({c, 40.0 * (c / 16.0) * (c / 16.0)});
    }
    return p;
}

PidGains default_squeezer_gains() { return {4.0, 0.5, 0.0}; }

double skin_ratio(const QuadDeviceParams& p, Side side, TactorPos pos, StretchType type) {
    int i = tactor_index(side, pos);
    return type == StretchType::Contraction ? p.skin_ratio_contraction[i]
                                            : p.skin_ratio_expansion[i];
}

std::string ValidationReport::to_string() const {
    if (issues.empty()) return "valid";
    std::ostringstream os;
    for (size_t i = 0; i < issues.size(); ++i) {
        if (i) os << "; ";
        os << issues[i].name << ": " << issues[i].message;
    }
    return os.str();
}

namespace {

void check(ValidationReport& r, bool ok, const std::string& name, const std::string& message) {
    if (!ok) r.issues.push_back({name, message});
}

std::string num(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

ValidationReport validate_params(const QuadDeviceParams& p) {
    ValidationReport r;
    check(r, p.max_travel_mm > 0.0, "max_travel > 0", "max_travel = " + num(p.max_travel_mm));
    check(r, p.comfort_limit_mm > 0.0, "comfort_limit > 0",
          "comfort_limit = " + num(p.comfort_limit_mm));
    check(r, p.comfort_limit_mm <= p.max_travel_mm, "comfort_limit <= max_travel",
          num(p.comfort_limit_mm) + " > " + num(p.max_travel_mm));
    check(r, p.max_speed_mm_s > 0.0, "max_speed > 0", "max_speed = " + num(p.max_speed_mm_s));
    check(r, p.max_force_n > 0.0, "max_force > 0", "max_force = " + num(p.max_force_n));
    for (Side s : kSides) {
        for (TactorPos pos : {TactorPos::Distal, TactorPos::Proximal}) {
            int i = tactor_index(s, pos);
            double con = p.skin_ratio_contraction[i];
            double exp = p.skin_ratio_expansion[i];
            std::string label = tactor_label(s, pos);
            check(r, con > 0.0 && con <= 1.0, "skin ratio in (0,1]",
                  label + " contraction slope = " + num(con));
            check(r, exp > 0.0 && exp <= 1.0, "skin ratio in (0,1]",
                  label + " expansion slope = " + num(exp));
            check(r, exp < con, "expansion < contraction",
                  label + ": expansion " + num(exp) + " vs contraction " + num(con));
        }
    }
    return r;
}

ValidationReport validate_params(const SqueezerParams& p) {
    ValidationReport r;
    check(r, p.tactor_count >= 1, "tactor_count >= 1", "tactor_count = " + num(p.tactor_count));
    check(r, p.max_string_tension_n > 0.0, "max_string_tension > 0",
          "max_string_tension = " + num(p.max_string_tension_n));
    check(r, p.tactor_force_factor > 0.0 && p.tactor_force_factor < 1.0,
          "tactor_force_factor in (0,1)", "factor = " + num(p.tactor_force_factor));
    check(r, p.pid_rate_hz > 0.0, "pid_rate > 0", "pid_rate = " + num(p.pid_rate_hz));
    check(r, p.encoder_bits >= 1 && p.encoder_bits <= 30, "encoder_bits in [1,30]",
          "encoder_bits = " + num(p.encoder_bits));
    check(r, p.pulley_radius_mm > 0.0, "pulley_radius > 0",
          "pulley_radius = " + num(p.pulley_radius_mm));
    check(r, p.max_pulley_speed_rad_s > 0.0, "max_pulley_speed > 0",
          "max_pulley_speed = " + num(p.max_pulley_speed_rad_s));
    check(r, !p.tension_curve.empty(), "tension_curve non-empty", "no knots configured");
    if (!p.tension_curve.empty()) {
        check(r,
              p.tension_curve.front().contraction_mm == 0.0 &&
                  p.tension_curve.front().tension_n == 0.0,
              "tension_curve passes through (0,0)",
              "first knot = (" + num(p.tension_curve.front().contraction_mm) + ", " +
                  num(p.tension_curve.front().tension_n) + ")");
        for (size_t i = 1; i < p.tension_curve.size(); ++i) {
            check(r, p.tension_curve[i].contraction_mm > p.tension_curve[i - 1].contraction_mm,
                  "tension_curve contraction knots strictly increasing",
                  "knot " + num(double(i)) + " at " + num(p.tension_curve[i].contraction_mm));
            check(r, p.tension_curve[i].tension_n >= p.tension_curve[i - 1].tension_n,
                  "tension_curve non-decreasing",
                  "knot " + num(double(i)) + " tension " + num(p.tension_curve[i].tension_n));
        }
    }
    return r;
}

ValidationReport validate_gains(const PidGains& g) {
    ValidationReport r;
    check(r, std::isfinite(g.kp) && std::isfinite(g.ki) && std::isfinite(g.kd),
          "gains finite", "kp/ki/kd must be finite");
    check(r, g.kp > 0.0, "kp > 0", "kp = " + num(g.kp));
    return r;
}

}  // namespace qst
