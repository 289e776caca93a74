#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "antichain/surface.hpp"

namespace antichain {

// Surface descriptor: "key=value" lines. Recognised keys:
//   family     hyperplane | lpsphere | linear | tabulated | staircase
//   n          dimension (hyperplane, lpsphere, tabulated)
//   p          exponent (lpsphere)
//   gradient   comma-separated slopes (linear)
//   intercept  constant term (linear, default 0)
//   box        lo:hi per axis, comma-separated; repeat for several boxes
//              (linear, default the whole unit cube)
//   nodes      grid points per axis (tabulated)
//   values     comma-separated samples, row-major; may repeat to continue
//   depth      refinement depth (staircase)
// Blank lines and '#' comments are ignored.
MonotoneGraphSurface parse_surface(std::istream& in);
MonotoneGraphSurface parse_surface(const std::string& text);
std::string format_surface(const MonotoneGraphSurface& surface);

MonotoneGraphSurface read_surface_file(const std::filesystem::path& path);

}  // namespace antichain
