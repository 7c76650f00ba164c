#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include "core/error.hpp"

namespace qst {

// Stretch unit sides around the forearm. The D, R, V, L ordering is canonical
// and is used everywhere signals are serialized (frames, wire payloads, CSV).
enum class Side : int { Dorsal = 0, Right = 1, Ventral = 2, Left = 3 };

inline constexpr int kSideCount = 4;
inline constexpr std::array<Side, 4> kSides = {Side::Dorsal, Side::Right, Side::Ventral,
                                               Side::Left};

const char* side_name(Side s);
char side_letter(Side s);
Side side_from_name(const std::string& name);

enum class StretchType : int { Contraction = 0, Expansion = 1 };

const char* stretch_type_name(StretchType t);
StretchType stretch_type_from_name(const std::string& name);

// Each stretch unit drives a pair of counteracting tactors; skin ratios are
// resolved per tactor (side x distal/proximal).
enum class TactorPos : int { Distal = 0, Proximal = 1 };

inline constexpr int kTactorCount = 8;

inline constexpr int tactor_index(Side s, TactorPos p) {
    return static_cast<int>(s) * 2 + static_cast<int>(p);
}

// Two-letter tactor label, e.g. "Dd" = dorsal distal, "Vp" = ventral proximal.
std::string tactor_label(Side s, TactorPos p);

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double k) const { return {x * k, y * k, z * k}; }
};

// 3-DoF force in the user frame: +x away from the chest, +y to the user's
// right, +z up. Components are dimensionless, pre-normalized so that the
// Euclidean norm never exceeds 1.
struct ForceVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

// Clamps a force into the unit ball. Idempotent; vectors already inside pass
// through unchanged. Non-finite components are an input error.
ForceVector normalize(const ForceVector& f);

// One command to the four stretch units: the tactor displacement under no
// load, in mm, signed (negative = contraction, positive = expansion).
struct StretchFrame {
    std::array<double, 4> signals_mm{};  // indexed by Side, D,R,V,L order
    double timestamp_s = 0.0;

    double& operator[](Side s) { return signals_mm[static_cast<size_t>(s)]; }
    double operator[](Side s) const { return signals_mm[static_cast<size_t>(s)]; }
};

struct SqueezeCommand {
    double contraction_mm = 0.0;
    double timestamp_s = 0.0;
};

}  // namespace qst
