#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "antichain/error.hpp"
#include "antichain/surface.hpp"
#include "antichain/surface_io.hpp"

using namespace antichain;

namespace {

std::vector<double> v(std::initializer_list<double> x) { return x; }

}  // namespace

TEST(Surface, Heights) {
  const auto h = MonotoneGraphSurface::hyperplane(3);
  EXPECT_DOUBLE_EQ(h.height(v({0.5, 0.25})), 0.75);
  const auto s = MonotoneGraphSurface::lp_sphere(2, 2.0);
  EXPECT_NEAR(s.height(v({0.6})), 0.8, 1e-15);
  const auto l = MonotoneGraphSurface::linear({-0.5}, {AxisBox{{0.0}, {1.0}}}, 0.75);
  EXPECT_DOUBLE_EQ(l.height(v({0.5})), 0.5);
  const auto c = MonotoneGraphSurface::staircase(1);
  EXPECT_DOUBLE_EQ(c.height(v({0.5})), 0.5);
  EXPECT_DOUBLE_EQ(c.height(v({0.0})), 1.0);
  EXPECT_DOUBLE_EQ(c.height(v({1.0})), 0.0);
}

TEST(Surface, LpExtensionIsContinuousAndDecreasing) {
  const auto s = MonotoneGraphSurface::lp_sphere(3, 3.0);
  EXPECT_LT(s.height(v({1.0, 0.5})), 0.0);
  EXPECT_FALSE(s.in_base(v({1.0, 0.5})));
  EXPECT_TRUE(s.in_base(v({0.5, 0.5})));
  EXPECT_GT(s.height(v({0.5, 0.5})), s.height(v({0.6, 0.5})));
}

TEST(Surface, Validation) {
  EXPECT_THROW(MonotoneGraphSurface::hyperplane(1), InvalidArgument);
  EXPECT_THROW(MonotoneGraphSurface::lp_sphere(2, 0.5), InvalidArgument);
  EXPECT_THROW(MonotoneGraphSurface::staircase(-1), InvalidArgument);
  EXPECT_THROW(MonotoneGraphSurface::linear({1.0}, {AxisBox{{0.5}, {0.2}}}), InvalidArgument);
  EXPECT_THROW(MonotoneGraphSurface::linear({1.0}, {AxisBox{{0.0}, {0.6}}, AxisBox{{0.5}, {1.0}}}),
               InvalidArgument);
  EXPECT_NO_THROW(MonotoneGraphSurface::linear({1.0}, {AxisBox{{0.0}, {0.5}}, AxisBox{{0.5}, {1.0}}}));
  EXPECT_THROW(MonotoneGraphSurface::tabulated(2, 3, {1.0, 0.5}), InvalidArgument);
  EXPECT_THROW(MonotoneGraphSurface::tabulated(2, 3, {0.2, 0.5, 0.1}), InvalidArgument);
  EXPECT_THROW(MonotoneGraphSurface::tabulated(2, 2, {1.5, 0.0}), InvalidArgument);
  EXPECT_THROW(MonotoneGraphSurface::hyperplane(3).height(v({0.5})), DimensionMismatch);
}

TEST(Tabulated, RejectsIncreaseAlongEitherAxis) {
  EXPECT_NO_THROW(MonotoneGraphSurface::tabulated(3, 2, {1.0, 0.5, 0.5, 0.0}));
  EXPECT_THROW(MonotoneGraphSurface::tabulated(3, 2, {1.0, 0.5, 0.5, 0.6}), InvalidArgument);
  EXPECT_THROW(MonotoneGraphSurface::tabulated(3, 2, {0.5, 1.0, 0.5, 0.0}), InvalidArgument);
  EXPECT_THROW(MonotoneGraphSurface::tabulated(3, 2, {0.5, 0.5, 1.0, 0.0}), InvalidArgument);
}

TEST(Tabulated, InterpolatesAndDifferentiates) {
  const auto s = MonotoneGraphSurface::tabulated(3, 2, {1.0, 0.5, 0.5, 0.0});
  EXPECT_DOUBLE_EQ(s.height(v({0.5, 0.5})), 0.5);
  EXPECT_DOUBLE_EQ(s.height(v({1.0, 0.0})), 0.5);
  const auto g = s.height_gradient(v({0.3, 0.7}));
  EXPECT_NEAR(g[0], -0.5, 1e-15);
  EXPECT_NEAR(g[1], -0.5, 1e-15);
}

TEST(Tabulated, GradientMatchesFiniteDifferences) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  const auto s = MonotoneGraphSurface::tabulated(3, 3, {1.0, 0.9, 0.4, 0.8, 0.6, 0.3, 0.5, 0.2, 0.0});
  for (int i = 0; i < 100; ++i) {
    const double x = u(rng);
    const double y = u(rng);
    const double h = 1e-7;
    const auto g = s.height_gradient(v({x, y}));
    if (std::fabs(x - 0.5) < 2e-7 || std::fabs(y - 0.5) < 2e-7) continue;
    EXPECT_NEAR(g[0], (s.height(v({x + h, y})) - s.height(v({x - h, y}))) / (2 * h), 1e-6);
    EXPECT_NEAR(g[1], (s.height(v({x, y + h})) - s.height(v({x, y - h}))) / (2 * h), 1e-6);
  }
}

TEST(Cantor, ApproximationValues) {
  EXPECT_DOUBLE_EQ(cantor_approximation(0.5, 3), 0.5);
  EXPECT_DOUBLE_EQ(cantor_approximation(0.25, 0), 0.25);
  EXPECT_DOUBLE_EQ(cantor_approximation(1.0 / 6.0, 1), 0.25);
  EXPECT_DOUBLE_EQ(cantor_approximation(2.0 / 9.0 - 1e-3, 2), 0.25);
  EXPECT_DOUBLE_EQ(cantor_approximation(1.0, 10), 1.0);
}

TEST(Cantor, SlopeOnSurvivingIntervals) {
  const auto s = MonotoneGraphSurface::staircase(2);
  EXPECT_DOUBLE_EQ(s.height_gradient(v({0.02}))[0], -2.25);
  EXPECT_DOUBLE_EQ(s.height_gradient(v({0.5}))[0], 0.0);
}

TEST(SurfaceIo, ParseFamilies) {
  EXPECT_EQ(parse_surface("family=hyperplane\nn=4\n").dim(), 4u);
  const auto lp = parse_surface("# sphere\nfamily=lpsphere\nn=2\np=3.5\n");
  EXPECT_DOUBLE_EQ(lp.as<LpSphereSurface>()->p, 3.5);
  const auto lin = parse_surface("family=linear\ngradient=-0.5,-0.25\nintercept=0.9\nbox=0:0.5,0:1\nbox=0.5:1,0:1\n");
  ASSERT_NE(lin.as<LinearGraphSurface>(), nullptr);
  EXPECT_EQ(lin.as<LinearGraphSurface>()->base.size(), 2u);
  const auto lin_default = parse_surface("family=linear\ngradient=-1\n");
  EXPECT_DOUBLE_EQ(lin_default.as<LinearGraphSurface>()->base[0].hi[0], 1.0);
  const auto tab = parse_surface("family=tabulated\nn=3\nnodes=2\nvalues=1,0.5\nvalues=0.5,0\n");
  EXPECT_EQ(tab.as<TabulatedSurface>()->values().size(), 4u);
  EXPECT_EQ(parse_surface("family=staircase\ndepth=5\n").as<StaircaseSurface>()->depth, 5);
}

TEST(SurfaceIo, Errors) {
  EXPECT_THROW(parse_surface("n=2\n"), ParseError);
  EXPECT_THROW(parse_surface("family=cone\n"), ParseError);
  EXPECT_THROW(parse_surface("family=hyperplane\nn=2\ncolor=red\n"), ParseError);
  EXPECT_THROW(parse_surface("family=hyperplane\nn=two\n"), ParseError);
  EXPECT_THROW(parse_surface("family=hyperplane\nn=2\nn=3\n"), ParseError);
  EXPECT_THROW(parse_surface("family=lpsphere\nn=2\np=0.5\n"), ParseError);
  EXPECT_THROW(parse_surface("family=linear\ngradient=1\nbox=0-1\n"), ParseError);
  EXPECT_THROW(parse_surface("family hyperplane\n"), ParseError);
  EXPECT_THROW(read_surface_file("/nonexistent/surface.txt"), ParseError);
}

TEST(SurfaceIo, RoundTrip) {
  const std::vector<MonotoneGraphSurface> surfaces = {
      MonotoneGraphSurface::hyperplane(3),
      MonotoneGraphSurface::lp_sphere(2, 1.0 / 3.0 + 2.0),
      MonotoneGraphSurface::linear({-0.1, -0.7}, {AxisBox{{0.0, 0.1}, {0.3, 0.9}}}, 0.123456789),
      MonotoneGraphSurface::tabulated(2, 4, {1.0, 0.7, 0.2, 0.1}),
      MonotoneGraphSurface::staircase(7),
  };
  for (const auto& s : surfaces) {
    const auto text = format_surface(s);
    EXPECT_EQ(format_surface(parse_surface(text)), text);
  }
}
