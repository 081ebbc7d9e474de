#pragma once

#include <array>
#include <span>

#include "branewalk/spinor_field.hpp"

namespace branewalk {

enum class ShiftDirection { Forward, Adjoint };

// Sampling convention shared by the engine and the dense oracle: after a
// shift, component s at site k holds the old component s at site
// k + offset[s] along the axis (periodic wrap). Mass therefore moves by
// -offset[s].
//
//   forward S^axis on a 2-spinor:      offsets (+1, -1)
//   forward block shift on a 4-spinor: offsets (+1, -1, -1, +1)
// The adjoint negates every offset.
std::array<int, 4> shift_offsets(int spin_dim, ShiftDirection direction);

// dst <- gather of src along axis. dst must be compatible with src and must
// not alias it.
void gather_shift(const SpinorField& src, SpinorField& dst, Axis axis, std::span<const int> offsets);

// Spin-dependent translation of a 2-spinor field along X or Y (or Z on a 3D
// lattice). Throws std::invalid_argument for an axis the lattice lacks.
SpinorField shift_2d(const SpinorField& field, Axis axis, ShiftDirection direction = ShiftDirection::Forward);

// diag(S^axis, S^axis^dagger) on a 4-spinor field.
SpinorField shift_3d_block(const SpinorField& field, Axis axis,
                           ShiftDirection direction = ShiftDirection::Forward);

}  // namespace branewalk
