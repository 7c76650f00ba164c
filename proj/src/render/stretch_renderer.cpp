#include "render/stretch_renderer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qst {

const char* scheme_name(RenderScheme1D s) {
    return s == RenderScheme1D::AllContract ? "all_contract" : "all_expand";
}

const char* scheme_name(RenderScheme3D s) {
    return s == RenderScheme3D::ContractTowardsForce ? "contract_towards_force"
                                                     : "contract_away_from_force";
}

StretchFrame render_1dof(double value, RenderScheme1D scheme, const QuadDeviceParams& params,
                         double timestamp_s) {
    if (!std::isfinite(value) || value < 0.0 || value > 1.0)
        raise(ErrorCode::Range, "render_1dof value must be in [0,1], got " + std::to_string(value));
    double sign = (scheme == RenderScheme1D::AllContract) ? -1.0 : 1.0;
    StretchFrame f;
    f.timestamp_s = timestamp_s;
    f.signals_mm.fill(sign * value * params.comfort_limit_mm);
    return f;
}

StretchFrame render_3dof_unclamped(const ForceVector& force, RenderScheme3D scheme,
                                   const QuadDeviceParams& params, double timestamp_s) {
    if (!force.finite())
        raise(ErrorCode::InvalidArgument, "render_3dof force has non-finite component");
    if (force.norm() > 1.0 + 1e-9)
        raise(ErrorCode::Range,
              "render_3dof force norm must be <= 1, got " + std::to_string(force.norm()));

    double limit = params.comfort_limit_mm;
    double dir = (scheme == RenderScheme3D::ContractTowardsForce) ? 1.0 : -1.0;
    double all = -std::abs(force.x) * limit;

    StretchFrame f;
    f.timestamp_s = timestamp_s;
    f[Side::Dorsal] = all + dir * (-force.z) * limit;
    f[Side::Ventral] = all + dir * (+force.z) * limit;
    f[Side::Right] = all + dir * (-force.y) * limit;
    f[Side::Left] = all + dir * (+force.y) * limit;
    return f;
}

StretchFrame render_3dof(const ForceVector& force, RenderScheme3D scheme,
                         const QuadDeviceParams& params, double timestamp_s) {
    return clamp_frame(render_3dof_unclamped(force, scheme, params, timestamp_s), params);
}

StretchFrame clamp_frame(const StretchFrame& frame, const QuadDeviceParams& params) {
    double limit = params.comfort_limit_mm;
    StretchFrame out = frame;
    for (double& s : out.signals_mm) {
        s = std::clamp(s, -limit, limit);
        s += 0.0;  // fold -0.0 into +0.0 so serialized traces stay canonical
    }
    return out;
}

}  // namespace qst
