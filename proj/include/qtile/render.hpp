#pragma once

#include <string>

#include "qtile/lattice.hpp"

namespace qtile {

struct SvgOptions {
  double scale = 24.0;  ///< pixels per unit-triangle side
  bool paths = false;   ///< overlay the lozenge paths as polylines
};

/// One <svg> root. Lozenges are emitted sorted by their up triangle,
/// horizontal ones shaded; the axis is a dotted line. The empty region
/// yields an empty root element.
std::string render_svg(const LozengeTiling& t, const SvgOptions& opt = {});

/// Text picture, one line per lozenge path after a header line. Each
/// lozenge of a path is three characters:
///   "___"  horizontal, off the axis
///   "_|_"  horizontal, on the axis
///   " \ "  right lozenge (the path steps down one level)
/// The header reads "H(r,c,n) pi=<pile>". The empty region gives "".
std::string render_ascii(const LozengeTiling& t);

}  // namespace qtile
