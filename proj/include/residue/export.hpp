#pragma once

#include <string>

namespace residue {

/// Real number as written to CSV/JSON exports: 12 significant digits, `%g`
/// style, so identical inputs always produce identical bytes.
std::string format_real(double v);

}  // namespace residue
