#include "core/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "core/error.hpp"

namespace qst {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool valid_key(const std::string& k) {
    if (k.empty()) return false;
    for (char c : k) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && c != '_' && c != '-')
            return false;
    }
    return true;
}

// Tension-curve knot keys are an indexed family; files may declare more knots
// than the default table has.
bool tension_knot_key(const std::string& k) {
    const std::string prefix = "squeezer.tension_curve.";
    if (k.rfind(prefix, 0) != 0) return false;
    size_t dot = k.find('.', prefix.size());
    if (dot == std::string::npos || dot == prefix.size()) return false;
    for (size_t i = prefix.size(); i < dot; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(k[i]))) return false;
    }
    std::string field = k.substr(dot + 1);
    return field == "contraction_mm" || field == "tension_n";
}

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

Config Config::defaults() {
    Config cfg;
    auto& v = cfg.values_;

    QuadDeviceParams q = default_quad_params();
    v["quad.max_travel_mm"] = q.max_travel_mm;
    v["quad.comfort_limit_mm"] = q.comfort_limit_mm;
    v["quad.max_speed_mm_s"] = q.max_speed_mm_s;
    v["quad.max_force_n"] = q.max_force_n;
    for (Side s : kSides) {
        for (TactorPos p : {TactorPos::Distal, TactorPos::Proximal}) {
            std::string label = tactor_label(s, p);
            v["quad.skin_ratio.contraction." + label] = q.skin_ratio_contraction[tactor_index(s, p)];
            v["quad.skin_ratio.expansion." + label] = q.skin_ratio_expansion[tactor_index(s, p)];
        }
    }
    v["quad.left_arm_mirroring"] = 0.0;  // reserved, must stay 0

    SqueezerParams sq = default_squeezer_params();
    v["squeezer.tactor_count"] = sq.tactor_count;
    v["squeezer.max_string_tension_n"] = sq.max_string_tension_n;
    v["squeezer.tactor_force_factor"] = sq.tactor_force_factor;
    v["squeezer.pid_rate_hz"] = sq.pid_rate_hz;
    v["squeezer.encoder_bits"] = sq.encoder_bits;
    v["squeezer.pulley_radius_mm"] = sq.pulley_radius_mm;
    v["squeezer.max_pulley_speed_rad_s"] = sq.max_pulley_speed_rad_s;
    v["squeezer.tension_curve.knots"] = static_cast<double>(sq.tension_curve.size());
    for (size_t i = 0; i < sq.tension_curve.size(); ++i) {
        std::string base = "squeezer.tension_curve." + std::to_string(i);
        v[base + ".contraction_mm"] = sq.tension_curve[i].contraction_mm;
        v[base + ".tension_n"] = sq.tension_curve[i].tension_n;
    }
    PidGains g = default_squeezer_gains();
    v["squeezer.pid.kp"] = g.kp;
    v["squeezer.pid.ki"] = g.ki;
    v["squeezer.pid.kd"] = g.kd;
    v["squeezer.calibration.min_mm"] = 0.0;
    v["squeezer.calibration.max_mm"] = 10.0;

    v["sim.quad_rate_hz"] = 100.0;

    v["wire.pinion_radius_mm"] = 7.1;
    v["wire.pwm_freq_hz"] = 50.0;

    v["scenario.push_button.aux_full_range"] = 1.0;
    v["scenario.rotate_knob.aux_full_range"] = 3.141592653589793;  // rad, half turn
    v["scenario.trigger_sprayer.aux_full_range"] = 1.0;
    v["scenario.pull_rubber_band.neutral_x_m"] = 0.4;
    v["scenario.pull_rubber_band.neutral_y_m"] = 0.0;
    v["scenario.pull_rubber_band.neutral_z_m"] = 0.0;
    v["scenario.pull_rubber_band.max_pull_length_m"] = 0.4;
    v["scenario.hook_fishing_rod.rod_tip_x_m"] = 0.9;
    v["scenario.hook_fishing_rod.rod_tip_y_m"] = 0.0;
    v["scenario.hook_fishing_rod.rod_tip_z_m"] = 0.3;
    v["scenario.hook_fishing_rod.fish_x_m"] = 1.5;
    v["scenario.hook_fishing_rod.fish_y_m"] = 0.0;
    v["scenario.hook_fishing_rod.fish_z_m"] = -0.7;
    v["scenario.hook_fishing_rod.max_speed_m_s"] = 2.0;
    v["scenario.hook_fishing_rod.vertical_speed_only"] = 0.0;
    v["scenario.swing_tennis_racket.max_speed_m_s"] = 3.0;
    v["scenario.swing_tennis_racket.lever_length_m"] = 0.5;

    v["observer.jnd.reference_mm"] = 4.3;
    v["observer.jnd.weber_k"] = 0.31;
    v["observer.jnd.sigma_mm"] = 0.75;  // Monte-Carlo calibrated, see tests
    v["observer.confusion.channel_sigma_mm"] = 2.0;
    v["observer.confusion.amplitude_mm"] = 8.6;

    v["staircase.max_trials"] = 10000.0;
    v["staircase.delta_floor_mm"] = 0.01;

    return cfg;
}

Config Config::parse(const std::string& text, const std::string& source_name) {
    Config cfg = defaults();
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::map<std::string, int> seen;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash_pos = line.find('#');
        if (hash_pos != std::string::npos) line = line.substr(0, hash_pos);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        std::string where = source_name + ":" + std::to_string(lineno);
        if (eq == std::string::npos)
            raise(ErrorCode::Parse, where + ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (!valid_key(key)) raise(ErrorCode::Parse, where + ": bad key '" + key + "'");
        if (!cfg.values_.count(key) && !tension_knot_key(key))
            raise(ErrorCode::Parse, where + ": unknown key '" + key + "'");
        if (seen.count(key))
            raise(ErrorCode::Parse, where + ": duplicate key '" + key + "' (first at line " +
                                        std::to_string(seen[key]) + ")");
        seen[key] = lineno;
        char* end = nullptr;
        double d = std::strtod(val.c_str(), &end);
        if (val.empty() || end != val.c_str() + val.size() || !std::isfinite(d))
            raise(ErrorCode::Parse, where + ": '" + val + "' is not a finite decimal number");
        cfg.values_[key] = d;
    }
    // A file may resize the tension curve; drop default knot keys beyond the
    // declared count so the schema stays consistent.
    int knots = cfg.get_int("squeezer.tension_curve.knots");
    for (int i = knots;; ++i) {
        std::string base = "squeezer.tension_curve." + std::to_string(i);
        if (!cfg.values_.count(base + ".contraction_mm")) break;
        cfg.values_.erase(base + ".contraction_mm");
        cfg.values_.erase(base + ".tension_n");
    }
    return cfg;
}

Config Config::load_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) raise(ErrorCode::Io, "cannot open config file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse(ss.str(), path);
}

double Config::get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) raise(ErrorCode::InvalidArgument, "unknown config key: " + key);
    return it->second;
}

int Config::get_int(const std::string& key) const {
    double v = get(key);
    double r = std::round(v);
    if (std::abs(v - r) > 1e-9)
        raise(ErrorCode::InvalidArgument, "config key " + key + " must be an integer, got " +
                                              format_value(v));
    return static_cast<int>(r);
}

bool Config::get_flag(const std::string& key) const { return get(key) != 0.0; }

void Config::set(const std::string& key, double value) {
    if (!valid_key(key)) raise(ErrorCode::InvalidArgument, "bad config key: " + key);
    values_[key] = value;
}

std::string Config::serialize() const {
    std::ostringstream os;
    for (const auto& [k, v] : values_) os << k << " = " << format_value(v) << "\n";
    return os.str();
}

void Config::save_file(const std::string& path) const {
    std::ofstream f(path);
    if (!f) raise(ErrorCode::Io, "cannot write config file: " + path);
    f << serialize();
}

std::string Config::hash() const {
    uint64_t h = fnv1a64(serialize());
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ValidationReport Config::validate() const {
    ValidationReport r = validate_params(quad_params_from_config(*this));
    ValidationReport rs = validate_params(squeezer_params_from_config(*this));
    ValidationReport rg = validate_gains(squeezer_gains_from_config(*this));
    r.issues.insert(r.issues.end(), rs.issues.begin(), rs.issues.end());
    r.issues.insert(r.issues.end(), rg.issues.begin(), rg.issues.end());
    if (get("quad.left_arm_mirroring") != 0.0)
        r.issues.push_back({"left_arm_mirroring == 0", "left-arm mirroring is reserved"});
    double cal_min = get("squeezer.calibration.min_mm");
    double cal_max = get("squeezer.calibration.max_mm");
    if (!(cal_min >= 0.0 && cal_min < cal_max))
        r.issues.push_back({"0 <= calibration min < max",
                            "min = " + format_value(cal_min) + ", max = " + format_value(cal_max)});
    return r;
}

QuadDeviceParams quad_params_from_config(const Config& cfg) {
    QuadDeviceParams p;
    p.max_travel_mm = cfg.get("quad.max_travel_mm");
    p.comfort_limit_mm = cfg.get("quad.comfort_limit_mm");
    p.max_speed_mm_s = cfg.get("quad.max_speed_mm_s");
    p.max_force_n = cfg.get("quad.max_force_n");
    for (Side s : kSides) {
        for (TactorPos pos : {TactorPos::Distal, TactorPos::Proximal}) {
            std::string label = tactor_label(s, pos);
            p.skin_ratio_contraction[tactor_index(s, pos)] =
                cfg.get("quad.skin_ratio.contraction." + label);
            p.skin_ratio_expansion[tactor_index(s, pos)] =
                cfg.get("quad.skin_ratio.expansion." + label);
        }
    }
    return p;
}

SqueezerParams squeezer_params_from_config(const Config& cfg) {
    SqueezerParams p;
    p.tactor_count = cfg.get_int("squeezer.tactor_count");
    p.max_string_tension_n = cfg.get("squeezer.max_string_tension_n");
    p.tactor_force_factor = cfg.get("squeezer.tactor_force_factor");
    p.pid_rate_hz = cfg.get("squeezer.pid_rate_hz");
    p.encoder_bits = cfg.get_int("squeezer.encoder_bits");
    p.pulley_radius_mm = cfg.get("squeezer.pulley_radius_mm");
    p.max_pulley_speed_rad_s = cfg.get("squeezer.max_pulley_speed_rad_s");
    p.tension_curve.clear();
    int knots = cfg.get_int("squeezer.tension_curve.knots");
    for (int i = 0; i < knots; ++i) {
        std::string base = "squeezer.tension_curve." + std::to_string(i);
        p.tension_curve.push_back(
            {cfg.get(base + ".contraction_mm"), cfg.get(base + ".tension_n")});
    }
    return p;
}

PidGains squeezer_gains_from_config(const Config& cfg) {
    return {cfg.get("squeezer.pid.kp"), cfg.get("squeezer.pid.ki"), cfg.get("squeezer.pid.kd")};
}

}  // namespace qst
