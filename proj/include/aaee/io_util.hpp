#pragma once

#include <string>

#include "aaee/diagnostics.hpp"

namespace aaee {

/// Appends one CSV row (creating the header line on first write):
///   t,energy,detF_min,detF_max,div_norm,enstrophy,circulation,kelvin_residual
/// Values use 17 significant digits, absent optionals leave empty cells,
/// lines end with LF.
void append_diagnostics_row(const DiagnosticsRecord& record, const std::string& path);

/// Binary PGM (P5, 8-bit) with linear min-max normalization; a constant
/// field maps to mid-gray 128.
void emit_field_image(const ScalarField& f, const std::string& path);

}  // namespace aaee
