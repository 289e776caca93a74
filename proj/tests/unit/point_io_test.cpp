#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "antichain/error.hpp"
#include "antichain/point_io.hpp"

using namespace antichain;

TEST(PointIo, ParsesHeaderCommentsAndBlankLines) {
  const auto s = parse_point_set("dim=2\n# comment\n\n1,0\n 0 , 1 \n");
  EXPECT_EQ(s, LatticePointSet(2, {LatticePoint{0, 1}, LatticePoint{1, 0}}));
}

TEST(PointIo, FormatIsCanonical) {
  const LatticePointSet s(2, {LatticePoint{1, 0}, LatticePoint{0, -1}});
  EXPECT_EQ(format_point_set(s), "dim=2\n0,-1\n1,0\n");
}

TEST(PointIo, EmptySet) {
  const auto s = parse_point_set("dim=3\n");
  EXPECT_EQ(s.dim(), 3u);
  EXPECT_TRUE(s.empty());
  EXPECT_EQ(parse_point_set(format_point_set(s)), s);
}

TEST(PointIo, Errors) {
  EXPECT_THROW(parse_point_set("0,1\n"), ParseError);
  EXPECT_THROW(parse_point_set("dim=2\n0,1,2\n"), ParseError);
  EXPECT_THROW(parse_point_set("dim=2\n0,x\n"), ParseError);
  EXPECT_THROW(parse_point_set("dim=2\n0,1\n0,1\n"), ParseError);
  EXPECT_THROW(parse_point_set("dim=0\n"), ParseError);
  EXPECT_THROW(parse_point_set(""), ParseError);
  EXPECT_THROW(read_point_set_file("/nonexistent/points.txt"), ParseError);
}

TEST(PointIo, RoundTripOnRandomSets) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Coord> coord(-50, 50);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 4;
    std::vector<LatticePoint> pts;
    for (int i = 0; i < 20; ++i) {
      std::vector<Coord> c(n);
      for (auto& v : c) v = coord(rng);
      pts.emplace_back(c);
    }
    const auto s = LatticePointSet::from_unsorted(n, pts);
    const auto text = format_point_set(s);
    EXPECT_EQ(parse_point_set(text), s);
    EXPECT_EQ(format_point_set(parse_point_set(text)), text);
  }
}

TEST(PointIo, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "antichain_point_io_test.txt";
  const LatticePointSet s(3, {LatticePoint{0, 1, 2}, LatticePoint{2, 1, 0}});
  write_point_set_file(path, s);
  EXPECT_EQ(read_point_set_file(path), s);
  std::filesystem::remove(path);
}
