#pragma once

#include "core/params.hpp"
#include "core/types.hpp"

namespace qst {

// 1-DoF schemes: drive all four stretch units with the same signal, either
// contracting or expanding.
enum class RenderScheme1D : int { AllContract = 0, AllExpand = 1 };

// 3-DoF schemes: the unit on the side the force points toward contracts and
// the opposite unit expands (ContractTowardsForce), or the mirror image.
enum class RenderScheme3D : int { ContractTowardsForce = 0, ContractAwayFromForce = 1 };

const char* scheme_name(RenderScheme1D s);
const char* scheme_name(RenderScheme3D s);

// Maps a unit-interval interaction value onto all four units. value 0.4 under
// AllContract gives -3.44 mm everywhere (40% of the 8.6 mm comfort limit).
StretchFrame render_1dof(double value, RenderScheme1D scheme, const QuadDeviceParams& params,
                         double timestamp_s = 0.0);

// Maps a force vector (norm <= 1) onto the four units. Three additive layers:
//   x (non-directional): -|x| * limit on every side, both signs alike;
//   y (horizontal):      contract the Left unit for force toward the user's
//                        left (y < 0), expand Right, mirrored for y > 0;
//   z (vertical):        contract Ventral for downward force (z < 0), expand
//                        Dorsal, mirrored for z > 0.
// ContractAwayFromForce negates the y- and z-layer signs only. Layer sums are
// clamped to +/- comfort limit afterwards.
StretchFrame render_3dof(const ForceVector& force, RenderScheme3D scheme,
                         const QuadDeviceParams& params, double timestamp_s = 0.0);

// Pre-clamp layer sum; exposed so properties of the additive combination can
// be checked without the saturation.
StretchFrame render_3dof_unclamped(const ForceVector& force, RenderScheme3D scheme,
                                   const QuadDeviceParams& params, double timestamp_s = 0.0);

// Saturates every signal into [-comfort_limit, +comfort_limit].
StretchFrame clamp_frame(const StretchFrame& frame, const QuadDeviceParams& params);

}  // namespace qst
