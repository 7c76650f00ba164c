#include "core/types.hpp"

namespace qst {

const char* side_name(Side s) {
    switch (s) {
        case Side::Dorsal: return "dorsal";
        case Side::Right: return "right";
        case Side::Ventral: return "ventral";
        case Side::Left: return "left";
    }
    raise(ErrorCode::InvalidArgument, "invalid Side value");
}

char side_letter(Side s) {
    switch (s) {
        case Side::Dorsal: return 'D';
        case Side::Right: return 'R';
        case Side::Ventral: return 'V';
        case Side::Left: return 'L';
    }
    raise(ErrorCode::InvalidArgument, "invalid Side value");
}

Side side_from_name(const std::string& name) {
    for (Side s : kSides) {
        if (name == side_name(s)) return s;
    }
    raise(ErrorCode::InvalidArgument, "unknown side name: " + name);
}

const char* stretch_type_name(StretchType t) {
    return t == StretchType::Contraction ? "contraction" : "expansion";
}

StretchType stretch_type_from_name(const std::string& name) {
    if (name == "contraction") return StretchType::Contraction;
    if (name == "expansion") return StretchType::Expansion;
    raise(ErrorCode::InvalidArgument, "unknown stretch type: " + name);
}

std::string tactor_label(Side s, TactorPos p) {
    std::string label(1, side_letter(s));
    label += (p == TactorPos::Distal) ? 'd' : 'p';
    return label;
}

ForceVector normalize(const ForceVector& f) {
    if (!f.finite()) raise(ErrorCode::InvalidArgument, "force vector has non-finite component");
    double n = f.norm();
    if (n <= 1.0) return f;
    return {f.x / n, f.y / n, f.z / n};
}

}  // namespace qst
