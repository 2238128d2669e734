#include "arcfilt/dual_graph.hpp"

#include <random>

#include "arcfilt/errors.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace arcfilt;

namespace {

int vertexDegree(const DualGraph& g, int v) {
  int d = 0;
  for (auto [i, j] : g.edges())
    if (i == v || j == v) ++d;
  return d;
}

}  // namespace

TEST_CASE("buildAde produces the Dynkin shapes") {
  DualGraph a1 = buildAde(AdeFamily::A, 1);
  CHECK(a1.vertexCount() == 1);
  CHECK(a1.edges().empty());
  CHECK(a1.vertices()[0].selfIntersection == -2);

  DualGraph d4 = buildAde(AdeFamily::D, 4);
  CHECK(d4.vertexCount() == 4);
  CHECK(d4.edges().size() == 3);
  CHECK(vertexDegree(d4, 0) == 3);  // the branch vertex comes first
  for (int v = 1; v < 4; ++v) CHECK(vertexDegree(d4, v) == 1);

  DualGraph e6 = buildAde(AdeFamily::E, 6);
  CHECK(e6.vertexCount() == 6);
  CHECK(e6.edges().size() == 5);
  CHECK(vertexDegree(e6, 2) == 3);  // branch attached to the middle of the 5-chain
  CHECK(vertexDegree(e6, 5) == 1);

  for (const auto& g : {a1, d4, e6}) {
    for (const auto& v : g.vertices()) {
      CHECK(v.selfIntersection == -2);
      CHECK(v.genus == 0);
    }
  }
}

TEST_CASE("buildAde rejects out-of-range indices") {
  CHECK_THROWS_AS(buildAde(AdeFamily::A, 0), InvalidParameterError);
  CHECK_THROWS_AS(buildAde(AdeFamily::D, 3), InvalidParameterError);
  CHECK_THROWS_AS(buildAde(AdeFamily::E, 5), InvalidParameterError);
  CHECK_THROWS_AS(buildAde(AdeFamily::E, 9), InvalidParameterError);
}

TEST_CASE("parseDualGraph reads the line format") {
  DualGraph g = parseDualGraph("vertex a self=-2\nvertex b self=-2\nedge a b\n");
  CHECK(g.vertexCount() == 2);
  CHECK(g.edges().size() == 1);
  CHECK(g.matrix().at(0, 1) == 1);

  // comments, blank lines, genus
  DualGraph h = parseDualGraph("# a lone curve\n\nvertex a self=-3 genus=1\n");
  CHECK(h.vertices()[0].genus == 1);
}

TEST_CASE("parseDualGraph reports distinct failures") {
  CHECK_THROWS_WITH_AS(parseDualGraph("vertex a self=-2\nedge a b\n"),
                       doctest::Contains("unknown vertex 'b'"), ParseError);
  CHECK_THROWS_WITH_AS(parseDualGraph("vertex a self=0\n"),
                       doctest::Contains("negative definite"), ParseError);
  CHECK_THROWS_WITH_AS(parseDualGraph("vertex a\n"), doctest::Contains("self-intersection"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parseDualGraph("vertex a self=x\n"), doctest::Contains("integer"),
                       ParseError);
  CHECK_THROWS_AS(parseDualGraph("vertex a self=-2\nvertex b self=-2\n"), ParseError);
  CHECK_THROWS_AS(parseDualGraph("vertex a self=-2\nvertex a self=-2\n"), ParseError);
  CHECK_THROWS_AS(parseDualGraph("vertex a self=-2\nedge a a\n"), ParseError);
  CHECK_THROWS_AS(parseDualGraph("vertex a self=-2 genus=-1\n"), ParseError);
  CHECK_THROWS_AS(parseDualGraph("blargh a b\n"), ParseError);
  CHECK_THROWS_AS(parseDualGraph(""), ParseError);
}

TEST_CASE("duplicate edge lines accumulate multiplicity") {
  DualGraph g = parseDualGraph(
      "vertex a self=-3\nvertex b self=-3\nedge a b\nedge b a\n");
  CHECK(g.edges().size() == 2);
  CHECK(g.matrix().at(0, 1) == 2);
  CHECK(isNegativeDefinite(g.matrix()));  // minors -3, +5
}

TEST_CASE("a (-1)-vertex is accepted with a warning") {
  DualGraph g = parseDualGraph("vertex a self=-1\n");
  REQUIRE(g.warnings().size() == 1);
  CHECK(g.warnings()[0].find("-1") != std::string::npos);
}

TEST_CASE("intersectionMatrix matches the definition") {
  DualGraph a2 = buildAde(AdeFamily::A, 2);
  CHECK(a2.matrix().at(0, 0) == -2);
  CHECK(a2.matrix().at(0, 1) == 1);
  CHECK(a2.matrix().at(1, 0) == 1);
  CHECK(a2.matrix().at(1, 1) == -2);

  CHECK(buildAde(AdeFamily::A, 1).matrix().at(0, 0) == -2);

  DualGraph d4 = buildAde(AdeFamily::D, 4);
  for (int j = 1; j < 4; ++j) CHECK(d4.matrix().at(0, j) == 1);
  for (int i = 0; i < 4; ++i) CHECK(d4.matrix().at(i, i) == -2);
}

TEST_CASE("isNegativeDefinite uses exact leading minors") {
  CHECK(isNegativeDefinite(IntersectionMatrix::fromRows({{-2, 1}, {1, -2}})));
  CHECK_FALSE(isNegativeDefinite(IntersectionMatrix::fromRows({{-2, 2}, {2, -2}})));
  CHECK_FALSE(isNegativeDefinite(IntersectionMatrix::fromRows({{0}})));
  CHECK_FALSE(isNegativeDefinite(IntersectionMatrix::fromRows({{2}})));
  // zero leading minor but nonzero determinant
  CHECK_FALSE(isNegativeDefinite(IntersectionMatrix::fromRows({{0, 1}, {1, 0}})));
  CHECK_THROWS_AS(isNegativeDefinite(IntersectionMatrix::fromRows({{0, 1}, {2, 0}})),
                  InvalidParameterError);
}

TEST_CASE("every ADE intersection matrix up to k=12 is negative definite") {
  for (int k = 1; k <= 12; ++k) CHECK(isNegativeDefinite(buildAde(AdeFamily::A, k).matrix()));
  for (int k = 4; k <= 12; ++k) CHECK(isNegativeDefinite(buildAde(AdeFamily::D, k).matrix()));
  for (int k = 6; k <= 8; ++k) CHECK(isNegativeDefinite(buildAde(AdeFamily::E, k).matrix()));
}

TEST_CASE("canonicalDegree follows adjunction") {
  for (long long d : canonicalDegree(buildAde(AdeFamily::E, 7))) CHECK(d == 0);
  CHECK(canonicalDegree(parseDualGraph("vertex a self=-3\n"))[0] == 1);
  CHECK(canonicalDegree(parseDualGraph("vertex a self=-2 genus=1\n"))[0] == 2);
}

TEST_CASE("canonicalDegree vanishes exactly on (-2)-curve trees") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    DualGraph g = testing::randomTreeGraph(rng);
    bool allMinusTwo = true;
    for (const auto& v : g.vertices())
      allMinusTwo = allMinusTwo && v.selfIntersection == -2 && v.genus == 0;
    bool zeroDegree = true;
    for (long long d : canonicalDegree(g)) zeroDegree = zeroDegree && d == 0;
    CHECK(zeroDegree == allMinusTwo);
  }
}

TEST_CASE("render/parse round trip") {
  std::mt19937 rng(7);
  std::vector<DualGraph> samples = {buildAde(AdeFamily::A, 5), buildAde(AdeFamily::D, 6),
                                    buildAde(AdeFamily::E, 8),
                                    parseDualGraph("vertex a self=-3 genus=2\nvertex b "
                                                   "self=-3\nedge a b\nedge a b\n")};
  for (int trial = 0; trial < 30; ++trial) samples.push_back(testing::randomTreeGraph(rng));
  for (const auto& g : samples) {
    DualGraph back = parseDualGraph(renderDualGraph(g), g.label());
    CHECK(back == g);
  }
}
