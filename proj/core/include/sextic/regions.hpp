#pragma once

#include <string>

#include "sextic/report.hpp"

namespace sextic {

/// Plot of the cohomology nonvanishing regions on the lattice square
/// [-bound, bound]^2, one color (or character) per region label, with the
/// four boundary lines x1+x2+1=0, x1=-2, x2=-2, x1+x2+3=0 drawn and labeled.
/// Formats: Svg or Ascii.  bound must be at most 100.
std::string render_regions(long long bound, Format f);

}  // namespace sextic
