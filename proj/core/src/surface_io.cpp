#include "antichain/surface_io.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <string_view>

#include "antichain/error.hpp"

namespace antichain {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(std::string_view(s).substr(start, pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

double to_double(const std::string& key, const std::string& token) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError("surface descriptor: invalid number '" + token + "' for key '" + key + "'");
  }
}

std::size_t to_count(const std::string& key, const std::string& token) {
  const double v = to_double(key, token);
  if (v < 0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
    throw ParseError("surface descriptor: key '" + key + "' needs a non-negative integer");
  }
  return static_cast<std::size_t>(v);
}

std::vector<double> to_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  for (const auto& token : split(value, ',')) {
    if (!token.empty()) out.push_back(to_double(key, token));
  }
  return out;
}

AxisBox to_box(const std::string& value) {
  AxisBox box;
  for (const auto& range : split(value, ',')) {
    const auto ends = split(range, ':');
    if (ends.size() != 2) throw ParseError("surface descriptor: box ranges are written lo:hi");
    box.lo.push_back(to_double("box", ends[0]));
    box.hi.push_back(to_double("box", ends[1]));
  }
  return box;
}

std::string join(const std::vector<double>& values) {
  std::ostringstream os;
  os << std::setprecision(17);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  return os.str();
}

}  // namespace

MonotoneGraphSurface parse_surface(std::istream& in) {
  std::map<std::string, std::string> scalars;
  std::vector<AxisBox> boxes;
  std::vector<double> values;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("surface descriptor line " + std::to_string(line_no) + ": expected key=value");
    }
    const auto key = trim(std::string_view(line).substr(0, eq));
    const auto value = trim(std::string_view(line).substr(eq + 1));
    if (key == "box") {
      boxes.push_back(to_box(value));
    } else if (key == "values") {
      const auto more = to_list(key, value);
      values.insert(values.end(), more.begin(), more.end());
    } else if (key == "family" || key == "n" || key == "p" || key == "gradient" ||
               key == "intercept" || key == "nodes" || key == "depth") {
      if (!scalars.emplace(key, value).second) {
        throw ParseError("surface descriptor: key '" + key + "' given twice");
      }
    } else {
      throw ParseError("surface descriptor: unknown key '" + key + "'");
    }
  }
  auto require = [&](const std::string& key) -> const std::string& {
    const auto it = scalars.find(key);
    if (it == scalars.end()) throw ParseError("surface descriptor: missing key '" + key + "'");
    return it->second;
  };

  try {
    const auto& family = require("family");
    if (family == "hyperplane") {
      return MonotoneGraphSurface::hyperplane(to_count("n", require("n")));
    }
    if (family == "lpsphere") {
      return MonotoneGraphSurface::lp_sphere(to_count("n", require("n")), to_double("p", require("p")));
    }
    if (family == "linear") {
      auto gradient = to_list("gradient", require("gradient"));
      const double intercept = scalars.count("intercept") ? to_double("intercept", scalars["intercept"]) : 0.0;
      if (boxes.empty()) {
        boxes.push_back(AxisBox{std::vector<double>(gradient.size(), 0.0),
                                std::vector<double>(gradient.size(), 1.0)});
      }
      return MonotoneGraphSurface::linear(std::move(gradient), std::move(boxes), intercept);
    }
    if (family == "tabulated") {
      return MonotoneGraphSurface::tabulated(to_count("n", require("n")),
                                             to_count("nodes", require("nodes")), std::move(values));
    }
    if (family == "staircase") {
      return MonotoneGraphSurface::staircase(static_cast<int>(to_count("depth", require("depth"))));
    }
    throw ParseError("surface descriptor: unknown family '" + family + "'");
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("surface descriptor: ") + e.what());
  }
}

MonotoneGraphSurface parse_surface(const std::string& text) {
  std::istringstream in(text);
  return parse_surface(in);
}

std::string format_surface(const MonotoneGraphSurface& surface) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "family=" << surface.family_name() << '\n';
  if (const auto* s = surface.as<HyperplaneSurface>()) {
    os << "n=" << s->n << '\n';
  } else if (const auto* s = surface.as<LpSphereSurface>()) {
    os << "n=" << s->n << '\n' << "p=" << s->p << '\n';
  } else if (const auto* s = surface.as<LinearGraphSurface>()) {
    os << "gradient=" << join(s->gradient) << '\n' << "intercept=" << s->intercept << '\n';
    for (const auto& box : s->base) {
      os << "box=";
      for (std::size_t j = 0; j < box.lo.size(); ++j) {
        if (j) os << ',';
        os << box.lo[j] << ':' << box.hi[j];
      }
      os << '\n';
    }
  } else if (const auto* s = surface.as<TabulatedSurface>()) {
    os << "n=" << s->dim() << '\n' << "nodes=" << s->nodes() << '\n';
    os << "values=" << join(s->values()) << '\n';
  } else if (const auto* s = surface.as<StaircaseSurface>()) {
    os << "depth=" << s->depth << '\n';
  }
  return os.str();
}

MonotoneGraphSurface read_surface_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open surface file " + path.string());
  return parse_surface(in);
}

}  // namespace antichain
