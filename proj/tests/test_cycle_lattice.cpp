#include "arcfilt/cycle_lattice.hpp"

#include <algorithm>
#include <random>

#include "arcfilt/errors.hpp"
#include "arcfilt/verify.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace arcfilt;

namespace {

std::vector<DualGraph> adeSamples() {
  std::vector<DualGraph> graphs;
  for (int k = 1; k <= 6; ++k) graphs.push_back(buildAde(AdeFamily::A, k));
  for (int k = 4; k <= 6; ++k) graphs.push_back(buildAde(AdeFamily::D, k));
  graphs.push_back(buildAde(AdeFamily::E, 6));
  graphs.push_back(buildAde(AdeFamily::E, 8));
  return graphs;
}

}  // namespace

TEST_CASE("pairing basics") {
  DualGraph d4 = buildAde(AdeFamily::D, 4);
  Cycle e0{1, 0, 0, 0};
  CHECK(pairing(e0, e0, d4) == -2);
  CHECK(pairing(Cycle{0, 0, 0, 0}, Cycle{2, 1, 1, 1}, d4) == 0);
  CHECK(pairing(Cycle{2, 1, 1, 1}, Cycle{2, 1, 1, 1}, d4) == -2);
  CHECK_THROWS_AS(pairing(Cycle{1, 0}, e0, d4), InvalidParameterError);
}

TEST_CASE("pairing is symmetric and bilinear") {
  std::mt19937 rng(11);
  for (const auto& g : adeSamples()) {
    for (int trial = 0; trial < 20; ++trial) {
      Cycle y = testing::randomCycle(rng, g.vertexCount(), 5);
      Cycle z = testing::randomCycle(rng, g.vertexCount(), 5);
      Cycle w = testing::randomCycle(rng, g.vertexCount(), 5);
      CHECK(pairing(y, z, g) == pairing(z, y, g));
      Cycle yw(y.size());
      for (size_t i = 0; i < y.size(); ++i) yw[i] = y[i] + w[i];
      CHECK(pairing(yw, z, g) == pairing(y, z, g) + pairing(w, z, g));
    }
  }
}

TEST_CASE("antiNefClosure on the worked examples") {
  DualGraph a1 = buildAde(AdeFamily::A, 1);
  for (long long v = 0; v <= 5; ++v) CHECK(antiNefClosure(Cycle{v}, a1) == Cycle{v});

  DualGraph d4 = buildAde(AdeFamily::D, 4);
  CHECK(antiNefClosure(Cycle{1, 1, 1, 1}, d4) == Cycle{2, 1, 1, 1});

  DualGraph a3 = buildAde(AdeFamily::A, 3);
  CHECK(antiNefClosure(Cycle{1, 0, 0}, a3) == Cycle{1, 1, 1});
}

TEST_CASE("closure is expanding, idempotent and monotone") {
  std::mt19937 rng(23);
  for (const auto& g : adeSamples()) {
    for (int trial = 0; trial < 25; ++trial) {
      Cycle y = testing::randomCycle(rng, g.vertexCount(), 4);
      Cycle closed = antiNefClosure(y, g);
      for (size_t i = 0; i < y.size(); ++i) CHECK(closed[i] >= y[i]);
      CHECK(antiNefClosure(closed, g) == closed);

      Cycle larger = y;
      for (auto& c : larger) c += rng() % 3;
      Cycle closedLarger = antiNefClosure(larger, g);
      for (size_t i = 0; i < y.size(); ++i) CHECK(closedLarger[i] >= closed[i]);
    }
  }
}

TEST_CASE("closure does not depend on the sweep order") {
  std::mt19937 rng(37);
  for (const auto& g : adeSamples()) {
    for (int trial = 0; trial < 8; ++trial) {
      Cycle y = testing::randomCycle(rng, g.vertexCount(), 3);
      Cycle reference = antiNefClosure(y, g);
      for (int order = 0; order < 100; ++order) {
        std::mt19937 pickRng(order * 7919 + trial);
        auto chooser = [&pickRng](const std::vector<int>& violating) {
          return static_cast<int>(pickRng() % violating.size());
        };
        CHECK(antiNefClosure(y, g, chooser) == reference);
      }
    }
  }
}

TEST_CASE("closure agrees with the independent oracles") {
  // Entries <= 2 here; the acceptance suite sweeps entries <= 3 on all
  // graphs with at most 8 vertices.
  for (const auto& g : adeSamples()) {
    const int r = g.vertexCount();
    if (r > 6) continue;
    Cycle v(r, 0);
    for (;;) {
      Cycle closure = antiNefClosure(v, g);
      CHECK(closure == verify::fixedPointMinimalAntiNef(v, g));
      if (r <= 4) CHECK(verify::certifyUniqueInBox(v, g, closure));
      int axis = 0;
      while (axis < r && v[axis] == 2) {
        v[axis] = 0;
        ++axis;
      }
      if (axis == r) break;
      ++v[axis];
    }
  }
}

TEST_CASE("fundamental cycles") {
  for (int k = 1; k <= 8; ++k)
    CHECK(fundamentalCycle(buildAde(AdeFamily::A, k)) == Cycle(k, 1));

  CHECK(fundamentalCycle(buildAde(AdeFamily::D, 4)) == Cycle{2, 1, 1, 1});

  Cycle e8 = fundamentalCycle(buildAde(AdeFamily::E, 8));
  std::sort(e8.begin(), e8.end());
  CHECK(e8 == Cycle{2, 2, 3, 3, 4, 4, 5, 6});
}

TEST_CASE("Artin rationality criterion") {
  for (const auto& g : adeSamples()) CHECK(isRational(g));
  CHECK(isRational(parseDualGraph("vertex a self=-3\n")));
  CHECK_FALSE(isRational(parseDualGraph("vertex a self=-2 genus=1\n")));
}

TEST_CASE("codimension values on A1 and D4") {
  DualGraph a1 = buildAde(AdeFamily::A, 1);
  for (long long n = 0; n <= 10; ++n) CHECK(codimension(Cycle{n}, a1) == n * n);

  DualGraph d4 = buildAde(AdeFamily::D, 4);
  CHECK(codimension(Cycle{1, 1, 1, 1}, d4) == 1);
  CHECK(codimension(Cycle{2, 2, 2, 2}, d4) == 3);
  CHECK(codimension(Cycle{3, 3, 3, 3}, d4) == 7);
}

TEST_CASE("codimension is monotone with h(0)=0 and h(1)=1") {
  std::mt19937 rng(41);
  for (const auto& g : adeSamples()) {
    const int r = g.vertexCount();
    CHECK(codimension(Cycle(r, 0), g) == 0);
    CHECK(codimension(Cycle(r, 1), g) == 1);
    for (int trial = 0; trial < 15; ++trial) {
      Cycle v = testing::randomCycle(rng, r, 4);
      Cycle w = v;
      for (auto& c : w) c += rng() % 3;
      CHECK(codimension(v, g) <= codimension(w, g));
    }
  }
}

TEST_CASE("codimension refuses non-rational graphs") {
  DualGraph genusOne = parseDualGraph("vertex a self=-2 genus=1\n");
  CHECK_THROWS_AS(codimension(Cycle{1}, genusOne), UnsupportedInputError);
  CHECK_THROWS_AS(codimension(Cycle{1, 2}, buildAde(AdeFamily::A, 1)), InvalidParameterError);
  CHECK_THROWS_AS(codimension(Cycle{-1}, buildAde(AdeFamily::A, 1)), InvalidParameterError);
}
