#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "antichain/lattice.hpp"

namespace antichain {

// Text format: a header line "dim=<n>" followed by one point per line as
// comma-separated integers. Blank lines and lines starting with '#' are
// ignored on input. Output is canonical (points sorted, no comments).
LatticePointSet parse_point_set(std::istream& in);
LatticePointSet parse_point_set(const std::string& text);
std::string format_point_set(const LatticePointSet& set);

LatticePointSet read_point_set_file(const std::filesystem::path& path);
void write_point_set_file(const std::filesystem::path& path, const LatticePointSet& set);

}  // namespace antichain
