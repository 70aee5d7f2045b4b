#pragma once

#include <string>

#include "aaee/dynamics.hpp"

namespace aaee {

/// Deterministic binary snapshot, little-endian:
///   magic "AAE2" | version u32 = 1 | nx u32 | ny u32 | lx f64 | ly f64 |
///   t f64 | component count u32 | flags u8 | components.
/// Components are nx*ny f64 arrays, row-major (x fastest), in fixed order
/// u1, u2, F11, F12, F22 and, when flags bit 0 is set, xi1, xi2.
/// Loop markers are not part of the snapshot format.
void write_snapshot(const SimState& state, const std::string& path);

/// Reads a snapshot; throws io_error on magic/version mismatch and reports
/// the byte offset for truncated files.
SimState read_snapshot(const std::string& path);

}  // namespace aaee
