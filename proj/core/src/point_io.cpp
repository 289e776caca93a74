#include "antichain/point_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

#include "antichain/error.hpp"

namespace antichain {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

Coord parse_coord(std::string_view token, std::size_t line_no) {
  token = trim(token);
  Coord value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("line " + std::to_string(line_no) + ": invalid integer '" +
                     std::string(token) + "'");
  }
  return value;
}

}  // namespace

LatticePointSet parse_point_set(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::size_t dim = 0;
  std::vector<LatticePoint> points;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (dim == 0) {
      if (line.substr(0, 4) != "dim=") {
        throw ParseError("line " + std::to_string(line_no) + ": expected header 'dim=<n>'");
      }
      const Coord d = parse_coord(line.substr(4), line_no);
      if (d < 1) throw ParseError("dimension must be positive");
      dim = static_cast<std::size_t>(d);
      continue;
    }
    std::vector<Coord> coords;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      coords.push_back(parse_coord(line.substr(start, comma - start), line_no));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (coords.size() != dim) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(dim) +
                       " coordinates, got " + std::to_string(coords.size()));
    }
    points.emplace_back(std::move(coords));
  }
  if (dim == 0) throw ParseError("missing 'dim=<n>' header");
  try {
    return LatticePointSet(dim, std::move(points));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

LatticePointSet parse_point_set(const std::string& text) {
  std::istringstream in(text);
  return parse_point_set(in);
}

std::string format_point_set(const LatticePointSet& set) {
  std::ostringstream os;
  os << "dim=" << set.dim() << '\n';
  for (const auto& p : set) {
    for (std::size_t i = 0; i < p.dim(); ++i) {
      if (i) os << ',';
      os << p[i];
    }
    os << '\n';
  }
  return os.str();
}

LatticePointSet read_point_set_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open point file " + path.string());
  return parse_point_set(in);
}

void write_point_set_file(const std::filesystem::path& path, const LatticePointSet& set) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write point file " + path.string());
  out << format_point_set(set);
}

}  // namespace antichain
