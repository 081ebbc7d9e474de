#include "branewalk/shifts.hpp"

#include <stdexcept>
#include <string>

namespace branewalk {

std::array<int, 4> shift_offsets(int spin_dim, ShiftDirection direction) {
  std::array<int, 4> off{};
  if (spin_dim == 2) {
    off = {+1, -1, 0, 0};
  } else if (spin_dim == 4) {
    off = {+1, -1, -1, +1};
  } else {
    throw std::invalid_argument("spin_dim must be 2 or 4");
  }
  if (direction == ShiftDirection::Adjoint)
    for (auto& o : off) o = -o;
  return off;
}

void gather_shift(const SpinorField& src, SpinorField& dst, Axis axis, std::span<const int> offsets) {
  const auto& g = src.geometry();
  if (!g.has_axis(axis)) {
    throw std::invalid_argument("cannot shift along " + std::string(axis_name(axis)) + " on a " +
                                std::to_string(g.dims()) + "-axis lattice");
  }
  if (!src.compatible_with(dst)) throw std::invalid_argument("shift target does not match the source field");
  const int sd = src.spin_dim();
  if (static_cast<int>(offsets.size()) < sd) throw std::invalid_argument("need one offset per spin component");

  const std::size_t nx = g.size(Axis::X);
  const std::size_t ny = g.dims() > 1 ? g.size(Axis::Y) : 1;
  const std::size_t nz = g.dims() > 2 ? g.size(Axis::Z) : 1;
  const std::size_t len = g.size(axis);
  const std::size_t stride = g.stride(axis);
  const int a = axis_index(axis);

  const Amplitude* in = src.amplitudes().data();
  Amplitude* out = dst.amplitudes().data();
  const auto n_lines = static_cast<std::ptrdiff_t>(nz * ny);

#if defined(BRANEWALK_HAVE_OPENMP)
#pragma omp parallel for schedule(static)
#endif
  for (std::ptrdiff_t line = 0; line < n_lines; ++line) {
    const std::size_t r = static_cast<std::size_t>(line) / ny;
    const std::size_t q = static_cast<std::size_t>(line) % ny;
    const std::size_t base = (r * ny + q) * nx;
    const std::size_t along_line[3] = {0, q, r};
    for (std::size_t p = 0; p < nx; ++p) {
      const std::size_t site = base + p;
      const std::size_t k = a == 0 ? p : along_line[a];
      for (int s = 0; s < sd; ++s) {
        const std::size_t kk = wrap_index(static_cast<std::ptrdiff_t>(k) + offsets[s], len);
        const std::size_t from = site + kk * stride - k * stride;
        out[site * sd + s] = in[from * sd + s];
      }
    }
  }
}

SpinorField shift_2d(const SpinorField& field, Axis axis, ShiftDirection direction) {
  if (field.spin_dim() != 2) throw std::invalid_argument("shift_2d needs a 2-component field");
  SpinorField out(field.geometry(), 2);
  const auto off = shift_offsets(2, direction);
  gather_shift(field, out, axis, off);
  return out;
}

SpinorField shift_3d_block(const SpinorField& field, Axis axis, ShiftDirection direction) {
  if (field.spin_dim() != 4) throw std::invalid_argument("shift_3d_block needs a 4-component field");
  SpinorField out(field.geometry(), 4);
  const auto off = shift_offsets(4, direction);
  gather_shift(field, out, axis, off);
  return out;
}

}  // namespace branewalk
