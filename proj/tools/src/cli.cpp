#include "antichain_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "antichain/continuous.hpp"
#include "antichain/error.hpp"
#include "antichain/extremal.hpp"
#include "antichain/grid.hpp"
#include "antichain/lattice.hpp"
#include "antichain/partition.hpp"
#include "antichain/point_io.hpp"
#include "antichain/surface_io.hpp"

namespace antichain::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Report {
  Json body = Json::object();
  std::string table;  // array member written as CSV rows; empty writes the scalars
  int exit_code = kExitOk;
};

template <typename T>
const T& need(const std::optional<T>& value, const char* flag) {
  if (!value) throw UsageError(std::string("missing required option ") + flag);
  return *value;
}

Json point_json(const LatticePoint& p) {
  Json a = Json::array();
  for (auto v : p.coords()) a.push_back(v);
  return a;
}

Json set_json(const LatticePointSet& s) {
  Json a = Json::array();
  for (const auto& p : s) a.push_back(point_json(p));
  return a;
}

Json real_json(const RealPoint& p) {
  Json a = Json::array();
  for (double v : p.coords()) a.push_back(v);
  return a;
}

Json estimate_json(const MeasureEstimate& e) {
  return Json{{"value", e.value},
              {"errorBound", e.error_bound},
              {"method", to_string(e.method)},
              {"oneSidedUpper", e.one_sided_upper},
              {"converged", e.converged}};
}

std::size_t need_dim(const ExperimentConfig& cfg, std::size_t minimum) {
  const auto n = need(cfg.n, "--n");
  if (n < minimum) throw UsageError("--n must be at least " + std::to_string(minimum));
  return n;
}

std::int64_t positive(const std::optional<std::int64_t>& v, const char* flag) {
  const auto value = need(v, flag);
  if (value < 1) throw UsageError(std::string(flag) + " must be positive");
  return value;
}

// --m, or every entry of --m-list.
std::vector<std::int64_t> resolutions(const ExperimentConfig& cfg) {
  std::vector<std::int64_t> out = cfg.m_list;
  if (out.empty()) out.push_back(need(cfg.m, "--m or --m-list"));
  for (auto m : out) {
    if (m < 1) throw UsageError("grid sizes must be positive");
  }
  return out;
}

OrderMode order_mode(const ExperimentConfig& cfg) {
  if (cfg.order == "strict") return OrderMode::StrictProduct;
  if (cfg.order == "strong") return OrderMode::StrongAll;
  throw UsageError("--order must be strict or strong");
}

MeasureOptions measure_options(const ExperimentConfig& cfg) {
  MeasureOptions o;
  o.abs_tol = cfg.tol;
  o.threads = cfg.threads;
  return o;
}

LatticePointSet load_points(const ExperimentConfig& cfg) {
  return read_point_set_file(need(cfg.points, "--points"));
}

// Descriptor built from flags for named families, otherwise a descriptor file.
MonotoneGraphSurface load_surface(const ExperimentConfig& cfg) {
  const auto& name = need(cfg.surface, "--surface");
  try {
    if (name == "hyperplane") return MonotoneGraphSurface::hyperplane(need_dim(cfg, 2));
    if (name == "lpsphere") return MonotoneGraphSurface::lp_sphere(need_dim(cfg, 2), need(cfg.p, "--p"));
    if (name == "staircase") return MonotoneGraphSurface::staircase(need(cfg.depth, "--depth"));
    if (name == "linear") {
      if (cfg.gradient.empty()) throw UsageError("missing required option --gradient");
      const std::size_t d = cfg.gradient.size();
      return MonotoneGraphSurface::linear(
          cfg.gradient, {AxisBox{std::vector<double>(d, 0.0), std::vector<double>(d, 1.0)}},
          cfg.intercept.value_or(0.0));
    }
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  if (!std::filesystem::exists(name)) {
    throw UsageError("--surface must name a family (hyperplane, lpsphere, staircase, linear) or a descriptor file");
  }
  return read_surface_file(name);
}

// Text file with a "dim=<n>" header and one comma-separated real point per line.
RealPointSet load_real_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open point file " + path);
  std::string line;
  std::optional<RealPointSet> set;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!set) {
      if (line.compare(first, 4, "dim=") != 0) throw ParseError(path + ": expected a dim=<n> header");
      set.emplace(static_cast<std::size_t>(std::stoul(line.substr(first + 4))));
      continue;
    }
    std::vector<double> coords;
    std::stringstream ss(line);
    std::string token;
    while (std::getline(ss, token, ',')) {
      try {
        coords.push_back(std::stod(token));
      } catch (const std::exception&) {
        throw ParseError(path + " line " + std::to_string(line_no) + ": invalid number '" + token + "'");
      }
    }
    if (coords.size() != set->dim()) {
      throw ParseError(path + " line " + std::to_string(line_no) + ": wrong number of coordinates");
    }
    set->push_back(RealPoint(std::move(coords)));
  }
  if (!set) throw ParseError(path + ": missing dim=<n> header");
  return std::move(*set);
}

SetSampler load_sampler(const ExperimentConfig& cfg) {
  if (cfg.points && cfg.surface) throw UsageError("give either --points or --surface, not both");
  if (cfg.points) return load_real_points(*cfg.points);
  return load_surface(cfg);
}

Report cmd_check(const ExperimentConfig& cfg) {
  const auto set = load_points(cfg);
  const auto cls = classify(set);
  Report r;
  r.body = {{"dim", set.dim()},
            {"size", set.size()},
            {"isAntichain", cls.is_antichain},
            {"isWeakAntichain", cls.is_weak_antichain}};
  if (auto v = find_violation(set, OrderMode::StrictProduct)) {
    r.body["comparablePair"] = Json::array({point_json(v->first), point_json(v->second)});
  }
  if (auto v = find_violation(set, OrderMode::StrongAll)) {
    r.body["strongPair"] = Json::array({point_json(v->first), point_json(v->second)});
  }
  return r;
}

Report cmd_partition(const ExperimentConfig& cfg) {
  const auto set = load_points(cfg);
  const auto cert = greedy_partition(set);
  const auto defect = certificate_defect(cert);
  Report r;
  r.body = {{"size", set.size()}, {"sound", !defect}};
  if (defect) r.body["defect"] = *defect;
  Json parts = Json::array();
  for (std::size_t i = 0; i < cert.parts.size(); ++i) {
    parts.push_back({{"axis", i + 1},
                     {"size", cert.parts[i].size()},
                     {"projectionSize", cert.part_projection_sizes[i]},
                     {"points", set_json(cert.parts[i])}});
  }
  r.body["parts"] = std::move(parts);
  r.table = "parts";
  if (defect) r.exit_code = kExitVerification;
  return r;
}

Report cmd_gap(const ExperimentConfig& cfg) {
  const auto g = projection_gap(load_points(cfg));
  Report r;
  r.body = {{"size", g.set_size}, {"projections", g.projection_sizes}, {"gap", g.gap}};
  return r;
}

Report cmd_gap_scan(const ExperimentConfig& cfg) {
  const auto n = need_dim(cfg, 1);
  const auto k = positive(cfg.k, "--k");
  GapScanOptions opts;
  opts.threads = cfg.threads;
  if (cfg.budget) opts.budget = *cfg.budget;
  auto row = [&](std::int64_t m) {
    if (m < 1) throw UsageError("--m must be positive");
    const auto res = exhaustive_gap_scan(n, k, static_cast<std::size_t>(m), opts);
    return Json{{"n", n},
                {"k", k},
                {"m", m},
                {"minGap", res.min_gap},
                {"weakAntichains", res.weak_antichains},
                {"witness", set_json(res.witness)}};
  };
  Report r;
  if (cfg.m_list.empty()) {
    r.body = row(need(cfg.m, "--m or --m-list"));
    return r;
  }
  Json rows = Json::array();
  for (auto m : cfg.m_list) rows.push_back(row(m));
  r.body = {{"n", n}, {"k", k}, {"rows", std::move(rows)}};
  r.table = "rows";
  return r;
}

Report cmd_width(const ExperimentConfig& cfg) {
  const auto n = need_dim(cfg, 1);
  const auto mode = order_mode(cfg);
  auto row = [&](std::int64_t m) {
    const GridPoset poset{n, m, mode};
    const auto res = cfg.budget ? max_antichain(poset, *cfg.budget) : max_antichain(poset);
    const auto construction = extremal_construction(poset);
    return Json{{"n", n},
                {"m", m},
                {"order", cfg.order},
                {"width", res.width},
                {"method", to_string(res.method)},
                {"constructionSize", construction.width},
                {"witness", set_json(res.witness)}};
  };
  const auto ms = resolutions(cfg);
  Report r;
  if (ms.size() == 1 && cfg.m_list.empty()) {
    r.body = row(ms.front());
    return r;
  }
  Json rows = Json::array();
  for (auto m : ms) rows.push_back(row(m));
  r.body = {{"n", n}, {"order", cfg.order}, {"rows", std::move(rows)}};
  r.table = "rows";
  return r;
}

Report cmd_layer(const ExperimentConfig& cfg) {
  const auto n = need_dim(cfg, 1);
  const auto ms = resolutions(cfg);
  Report r;
  if (cfg.m_list.empty()) {
    const auto m = ms.front();
    const auto level = cfg.level.value_or(middle_level(n, m));
    r.body = {{"n", n},
              {"m", m},
              {"level", level},
              {"size", layer_size(n, m, level)},
              {"points", set_json(layer_construct(n, m, level))}};
    return r;
  }
  Json rows = Json::array();
  for (auto m : ms) {
    const auto level = cfg.level.value_or(middle_level(n, m));
    rows.push_back({{"n", n}, {"m", m}, {"level", level}, {"size", layer_size(n, m, level)}});
  }
  r.body = {{"n", n}, {"rows", std::move(rows)}};
  r.table = "rows";
  return r;
}

Report cmd_wn(const ExperimentConfig& cfg) {
  const auto n = need_dim(cfg, 1);
  const auto ms = resolutions(cfg);
  Report r;
  if (cfg.m_list.empty()) {
    const auto set = wn_construct(n, ms.front());
    r.body = {{"n", n},
              {"m", ms.front()},
              {"size", set.size()},
              {"formula", max_weak_antichain_size(n, ms.front())},
              {"points", set_json(set)}};
    return r;
  }
  Json rows = Json::array();
  for (auto m : ms) {
    rows.push_back({{"n", n}, {"m", m}, {"size", max_weak_antichain_size(n, m)}});
  }
  r.body = {{"n", n}, {"rows", std::move(rows)}};
  r.table = "rows";
  return r;
}

Json cover_row(const SetSampler& sampler, std::int64_t m, const ExperimentConfig& cfg) {
  const auto cover = cfg.budget ? grid_cover(sampler, m, *cfg.budget) : grid_cover(sampler, m);
  const auto bound = covering_bound(cover);
  Json row{{"m", m},
           {"count", cover.count()},
           {"exact", cover.exact},
           {"bound", bound.value},
           {"method", to_string(bound.method)},
           {"volumeRatio", volume_ratio(cover)}};
  if (cover.dim >= 2) {
    const auto chain = chained_covering_bound(cover);
    row["projectionSum"] = chain.projection_sum;
    row["chainedBound"] = chain.chained_bound;
    row["dnBound"] = chain.dn_bound;
    row["chainHolds"] = chain.chain_holds;
    row["dnHolds"] = chain.dn_holds;
  }
  return row;
}

Report cmd_cover(const ExperimentConfig& cfg) {
  const auto sampler = load_sampler(cfg);
  const auto ms = resolutions(cfg);
  Report r;
  if (cfg.m_list.empty()) {
    r.body = cover_row(sampler, ms.front(), cfg);
    return r;
  }
  Json rows = Json::array();
  for (auto m : ms) rows.push_back(cover_row(sampler, m, cfg));
  r.body = {{"dim", sampler_dim(sampler)}, {"rows", std::move(rows)}};
  if (ms.size() >= 2) {
    const auto fit = box_dimension(sampler, ms);
    r.body["boxDimension"] = fit.dimension;
    r.body["fitResidual"] = fit.residual;
  }
  r.table = "rows";
  return r;
}

Report cmd_measure(const ExperimentConfig& cfg) {
  const auto surface = load_surface(cfg);
  Report r;
  r.body = {{"family", surface.family_name()}, {"n", surface.dim()}};
  MeasureEstimate e;
  if (cfg.axis) {
    if (*cfg.axis < 1 || *cfg.axis > surface.dim()) throw UsageError("--axis must lie in [1, n]");
    r.body["axis"] = *cfg.axis;
    e = projection_measure(surface, *cfg.axis - 1, measure_options(cfg));
  } else {
    e = surface_measure(surface, measure_options(cfg));
  }
  const Json estimate = estimate_json(e);
  for (const auto& [key, value] : estimate.items()) r.body[key] = value;
  return r;
}

Report cmd_verify(const ExperimentConfig& cfg) {
  const auto surface = load_surface(cfg);
  const auto rep = verify_projection_inequality(surface, measure_options(cfg));
  Report r;
  Json projections = Json::array();
  for (std::size_t i = 0; i < rep.projections.size(); ++i) {
    Json p = estimate_json(rep.projections[i]);
    p["axis"] = i + 1;
    projections.push_back(std::move(p));
  }
  r.body = {{"family", surface.family_name()},
            {"n", surface.dim()},
            {"left", rep.left},
            {"right", rep.right},
            {"tolerance", rep.tolerance},
            {"passes", rep.passes},
            {"withinN", rep.within_n},
            {"surface", estimate_json(rep.surface)},
            {"projections", std::move(projections)}};
  if (!rep.passes) r.exit_code = kExitVerification;
  return r;
}

Report cmd_skew2d(const ExperimentConfig& cfg) {
  const auto surface = load_surface(cfg);
  if (surface.dim() != 2) throw UsageError("skew2d needs a planar surface (n = 2)");
  const auto rep = skew_measures_2d(surface, 1e-4, measure_options(cfg));
  Report r;
  r.body = {{"family", surface.family_name()},
            {"surfaceValue", rep.surface.value},
            {"deltaSum", rep.delta_sum},
            {"crossing", rep.crossing},
            {"tolerance", rep.tolerance},
            {"passes", rep.passes},
            {"surface", estimate_json(rep.surface)},
            {"delta1", estimate_json(rep.delta1)},
            {"delta2", estimate_json(rep.delta2)}};
  if (!rep.passes) r.exit_code = kExitVerification;
  return r;
}

Report cmd_shear(const ExperimentConfig& cfg) {
  const auto n = need_dim(cfg, 1);
  const auto eps = need(cfg.epsilon, "--epsilon");
  std::optional<ShearParams> params;
  try {
    params.emplace(n, eps);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  if (cfg.x.empty() && cfg.pairs == 0) throw UsageError("shear needs --x or --pairs");
  Report r;
  r.body = {{"n", n}, {"epsilon", eps}, {"lipschitz", params->lipschitz()}};
  if (!cfg.x.empty()) {
    if (cfg.x.size() != n) throw UsageError("--x must have n coordinates");
    const RealPoint x(cfg.x);
    const auto image = cfg.inverse ? shear_inverse(x, *params) : shear(x, *params);
    const double scale = 1.0 - static_cast<double>(n) * eps;
    const double identity = cfg.inverse ? x.sum() - scale * image.sum() : image.sum() - scale * x.sum();
    r.body["inverse"] = cfg.inverse;
    r.body["x"] = real_json(x);
    r.body["image"] = real_json(image);
    r.body["identityError"] = std::fabs(identity);
  }
  if (cfg.pairs > 0) {
    const auto check = lipschitz_sample_check(*params, params->lipschitz(), cfg.pairs, cfg.seed);
    r.body["pairs"] = cfg.pairs;
    r.body["ratios"] = check.ratios;
    r.body["maxRatio"] = check.max_ratio;
    r.body["withinBound"] = check.within_bound;
    if (!check.within_bound) r.exit_code = kExitVerification;
  }
  return r;
}

Report cmd_slab(const ExperimentConfig& cfg) {
  const auto n = need_dim(cfg, 1);
  const auto c = need(cfg.c, "--c");
  if (!(c >= 0.0 && c <= static_cast<double>(n))) throw UsageError("--c must lie in [0, n]");
  Report r;
  r.body = {{"n", n}, {"c", c}, {"volume", slab_volume(n, c)}};
  return r;
}

Report cmd_staircase(const ExperimentConfig& cfg) {
  const auto depth = need(cfg.depth, "--depth");
  if (depth < 0) throw UsageError("--depth must be non-negative");
  if (cfg.vertices && depth > 24) throw UsageError("--vertices is limited to depth 24");
  const auto stair = singular_staircase(depth, cfg.vertices || depth <= 24);
  Report r;
  r.body = {{"depth", depth}, {"length", stair.length}, {"closedForm", staircase_length(depth)}};
  Json rows = Json::array();
  for (int k = 0; k <= depth; ++k) rows.push_back({{"depth", k}, {"length", staircase_length(k)}});
  r.body["rows"] = std::move(rows);
  if (cfg.vertices) {
    Json v = Json::array();
    for (const auto& p : stair.vertices) v.push_back(real_json(p));
    r.body["vertices"] = std::move(v);
  }
  r.table = "rows";
  return r;
}

Report cmd_p_sweep(const ExperimentConfig& cfg) {
  const auto n = cfg.n.value_or(2);
  if (n < 2) throw UsageError("--n must be at least 2");
  std::vector<double> ps = cfg.p_list;
  if (ps.empty()) ps = {2, 4, 8, 16, 32, 64};
  for (double p : ps) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw UsageError("every p must be at least 1");
  }
  const auto opts = measure_options(cfg);
  Json rows = Json::array();
  bool increasing = true;
  bool within_n = true;
  double previous = -1.0;
  for (double p : ps) {
    const auto e = surface_measure(MonotoneGraphSurface::lp_sphere(n, p), opts);
    increasing = increasing && e.value > previous;
    within_n = within_n && e.value <= static_cast<double>(n) + e.error_bound;
    previous = e.value;
    rows.push_back({{"p", p},
                    {"value", e.value},
                    {"errorBound", e.error_bound},
                    {"method", to_string(e.method)},
                    {"converged", e.converged}});
  }
  Report r;
  r.body = {{"n", n}, {"increasing", increasing}, {"withinN", within_n}, {"rows", std::move(rows)}};
  r.table = "rows";
  if (!within_n) r.exit_code = kExitVerification;
  return r;
}

const std::map<std::string, std::function<Report(const ExperimentConfig&)>>& commands() {
  static const std::map<std::string, std::function<Report(const ExperimentConfig&)>> table = {
      {"check", cmd_check},         {"partition", cmd_partition}, {"gap", cmd_gap},
      {"gap-scan", cmd_gap_scan},   {"width", cmd_width},         {"layer", cmd_layer},
      {"wn", cmd_wn},               {"cover", cmd_cover},         {"measure", cmd_measure},
      {"verify", cmd_verify},       {"skew2d", cmd_skew2d},       {"shear", cmd_shear},
      {"slab", cmd_slab},           {"staircase", cmd_staircase}, {"p-sweep", cmd_p_sweep},
  };
  return table;
}

std::string csv_cell(const Json& v) {
  if (v.is_null()) return {};
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) {
      if (ch == '"') quoted += '"';
      quoted += ch;
    }
    return quoted + "\"";
  }
  return v.dump();
}

void write_csv(const Report& r, std::ostream& os) {
  std::vector<Json> rows;
  if (!r.table.empty()) {
    for (const auto& row : r.body.at(r.table)) rows.push_back(row);
  } else {
    rows.push_back(r.body);
  }
  std::vector<std::string> header;
  for (const auto& row : rows) {
    for (const auto& [key, value] : row.items()) {
      if (value.is_structured()) continue;
      if (std::find(header.begin(), header.end(), key) == header.end()) header.push_back(key);
    }
  }
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      os << (i ? "," : "");
      if (row.contains(header[i])) os << csv_cell(row[header[i]]);
    }
    os << '\n';
  }
}

void emit(const Report& r, const ExperimentConfig& cfg, std::ostream& out) {
  std::ofstream file;
  if (cfg.out) {
    file.open(*cfg.out, std::ios::binary);
    if (!file) throw Error("cannot write " + *cfg.out);
  }
  std::ostream& os = cfg.out ? static_cast<std::ostream&>(file) : out;
  if (cfg.format == "csv") {
    write_csv(r, os);
  } else {
    os << r.body.dump(2) << '\n';
  }
}

void add_common(CLI::App* sub, ExperimentConfig& cfg) {
  sub->add_option("--out", cfg.out, "Write the report to this file");
  sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--threads", cfg.threads, "Worker threads (0 = automatic)")->envname("ANTICHAIN_THREADS");
  sub->add_option("--budget", cfg.budget, "Work budget for exponential computations");
  sub->add_option("--seed", cfg.seed, "Random seed");
  sub->add_option("--tol", cfg.tol, "Absolute quadrature tolerance")->check(CLI::NonNegativeNumber);
}

}  // namespace

ParseResult parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ExperimentConfig cfg;
  CLI::App app{"Antichain projection experiments", "antichain"};
  app.require_subcommand(1);

  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    add_common(s, cfg);
    return s;
  };
  auto add_n = [&](CLI::App* s) { s->add_option("--n", cfg.n, "Dimension"); };
  auto add_m = [&](CLI::App* s) {
    s->add_option("--m", cfg.m, "Grid side");
    s->add_option("--m-list", cfg.m_list, "Comma-separated grid sides")->delimiter(',');
  };
  auto add_surface = [&](CLI::App* s) {
    s->add_option("--surface", cfg.surface, "Family name or surface descriptor file");
    s->add_option("--p", cfg.p, "Exponent of the lp sphere");
    s->add_option("--depth", cfg.depth, "Staircase depth");
    s->add_option("--gradient", cfg.gradient, "Gradient of a linear graph")->delimiter(',');
    s->add_option("--intercept", cfg.intercept, "Intercept of a linear graph");
    add_n(s);
  };

  for (const char* name : {"check", "partition", "gap"}) {
    sub(name, name == std::string("check")       ? "Classify a point set"
              : name == std::string("partition") ? "Greedy partition certificate"
                                                 : "Projection gap of a point set")
        ->add_option("--points", cfg.points, "Point-set file")
        ->required();
  }
  {
    auto* s = sub("gap-scan", "Minimum gap over all weak antichains of a given size");
    add_n(s);
    s->add_option("--k", cfg.k, "Box side");
    add_m(s);
  }
  {
    auto* s = sub("width", "Width of the grid poset");
    add_n(s);
    add_m(s);
    s->add_option("--order", cfg.order, "strict or strong")->check(CLI::IsMember({"strict", "strong"}));
  }
  {
    auto* s = sub("layer", "Layer of the grid by coordinate sum");
    add_n(s);
    add_m(s);
    s->add_option("--level", cfg.level, "Coordinate sum (default: middle level)");
  }
  {
    auto* s = sub("wn", "Points with a zero coordinate");
    add_n(s);
    add_m(s);
  }
  {
    auto* s = sub("cover", "Grid cubes meeting a set");
    add_surface(s);
    add_m(s);
    s->add_option("--points", cfg.points, "Real point file");
  }
  {
    auto* s = sub("measure", "Surface or projection measure");
    add_surface(s);
    s->add_option("--axis", cfg.axis, "Measure the projection deleting this axis (1-based)");
  }
  add_surface(sub("verify", "Check the projection inequality"));
  add_surface(sub("skew2d", "Skewed projection measures of a planar graph"));
  {
    auto* s = sub("shear", "Shear map and its inverse");
    add_n(s);
    s->add_option("--epsilon", cfg.epsilon, "Shear parameter in (0, 1/(2n))");
    s->add_option("--x", cfg.x, "Point to map")->delimiter(',');
    s->add_flag("--inverse", cfg.inverse, "Apply the inverse map");
    s->add_option("--pairs", cfg.pairs, "Random pairs for the Lipschitz check");
  }
  {
    auto* s = sub("slab", "Volume of the central slab");
    add_n(s);
    s->add_option("--c", cfg.c, "Slab width");
  }
  {
    auto* s = sub("staircase", "Singular staircase polyline");
    s->add_option("--depth", cfg.depth, "Iteration depth");
    s->add_flag("--vertices", cfg.vertices, "Include the polyline vertices");
  }
  {
    auto* s = sub("p-sweep", "Measures of lp spheres over a list of p");
    add_n(s);
    s->add_option("--p-list", cfg.p_list, "Comma-separated exponents")->delimiter(',');
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return {std::nullopt, kExitOk};
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return {std::nullopt, kExitOk};
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    err << "run with --help for usage\n";
    return {std::nullopt, kExitUsage};
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  return {std::move(cfg), kExitOk};
}

int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  const auto it = commands().find(config.subcommand);
  if (it == commands().end()) {
    err << "error: unknown subcommand '" << config.subcommand << "'\n";
    return kExitUsage;
  }
  try {
    if (config.format != "json" && config.format != "csv") throw UsageError("--format must be json or csv");
    const Report report = it->second(config);
    emit(report, config, out);
    return report.exit_code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitOperation;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto parsed = parse_args(args, out, err);
  if (!parsed.config) return parsed.exit_code;
  return run(*parsed.config, out, err);
}

}  // namespace antichain::cli
