#include "arcfilt/poincare.hpp"

#include "arcfilt/errors.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace arcfilt;

TEST_CASE("arcSeries reproduces the du Val table entries") {
  CHECK(renderCoefficients(arcSeries(buildAde(AdeFamily::A, 1), 4)) == "1 3 5 7 9");
  CHECK(renderCoefficients(arcSeries(buildAde(AdeFamily::D, 4), 4)) == "1 2 4 5 7");

  UniSeries e8 = arcSeries(buildAde(AdeFamily::E, 8), 1);
  CHECK(e8.at(0) == 1);
  CHECK(e8.at(1) == 0);
  // consistent with every fundamental-cycle coefficient of E8 being >= 2
  for (long long c : fundamentalCycle(buildAde(AdeFamily::E, 8))) CHECK(c >= 2);
}

TEST_CASE("arcSeries matches every closed form to order 40") {
  std::vector<std::pair<AdeFamily, int>> table;
  for (int k = 1; k <= 10; ++k) table.emplace_back(AdeFamily::A, k);
  for (int k = 4; k <= 10; ++k) table.emplace_back(AdeFamily::D, k);
  for (int k = 6; k <= 8; ++k) table.emplace_back(AdeFamily::E, k);

  for (auto [family, k] : table) {
    DualGraph g = buildAde(family, k);
    UniSeries series = arcSeries(g, 40);
    CHECK(series == expandRational(adeClosedForm(family, k), 40));
    CHECK(series.at(0) == 1);
    for (int i = 0; i <= 40; ++i) CHECK(series.at(i) >= 0);
  }
}

TEST_CASE("arcSeries preconditions") {
  CHECK_THROWS_AS(arcSeries(buildAde(AdeFamily::A, 1), -1), InvalidParameterError);
  CHECK_THROWS_AS(arcSeries(parseDualGraph("vertex a self=-2 genus=1\n"), 4),
                  UnsupportedInputError);
}

TEST_CASE("adeClosedForm table entries") {
  CHECK(renderRationalForm(adeClosedForm(AdeFamily::A, 7)) == "(1-t^2)/((1-t)^3)");
  CHECK(renderRationalForm(adeClosedForm(AdeFamily::D, 5)) == "(1-t^4)/((1-t)^2(1-t^3))");
  CHECK(renderRationalForm(adeClosedForm(AdeFamily::D, 4)) == "(1-t^3)/((1-t)^2(1-t^2))");
  CHECK(renderRationalForm(adeClosedForm(AdeFamily::E, 6)) == "(1-t^4)/((1-t)(1-t^2)^2)");
  CHECK(renderRationalForm(adeClosedForm(AdeFamily::E, 7)) ==
        "(1-t^6)/((1-t)(1-t^2)(1-t^4))");
  CHECK(renderRationalForm(adeClosedForm(AdeFamily::E, 8)) == "(1-t^6)/((1-t^2)^2(1-t^3))");
  CHECK_THROWS_AS(adeClosedForm(AdeFamily::D, 3), InvalidParameterError);
  CHECK_THROWS_AS(adeClosedForm(AdeFamily::E, 9), InvalidParameterError);
}

TEST_CASE("multiPoincare collapses to the arc series for one vertex") {
  DualGraph a1 = buildAde(AdeFamily::A, 1);
  MultiSeries p = multiPoincare(a1, 4);
  UniSeries diag = reduceToMin(p);  // reduction is the identity for r=1
  CHECK(renderCoefficients(diag) == "1 3 5 7 9");
}

TEST_CASE("multiPoincare constant term is 1") {
  for (auto g : {buildAde(AdeFamily::A, 2), buildAde(AdeFamily::A, 3),
                 buildAde(AdeFamily::D, 4)}) {
    MultiSeries p = multiPoincare(g, 3);
    std::vector<int> origin(g.vertexCount(), 0);
    CHECK(p.coefficient(origin) == 1);
  }
}

TEST_CASE("multiPoincare resource and validity gates") {
  CHECK_THROWS_AS(multiPoincare(buildAde(AdeFamily::E, 6), 3), ResourceLimitError);
  MultiLimits loosened;
  loosened.maxVars = 6;
  CHECK(multiPoincare(buildAde(AdeFamily::E, 6), 2, loosened).varCount() == 6);

  CHECK_THROWS_AS(multiPoincare(buildAde(AdeFamily::A, 2), 0), InvalidParameterError);
  CHECK_THROWS_AS(multiPoincare(parseDualGraph("vertex a self=-2 genus=1\n"), 3),
                  UnsupportedInputError);

  MultiLimits tiny;
  tiny.maxGridCells = 10;
  CHECK_THROWS_AS(multiPoincare(buildAde(AdeFamily::D, 4), 5, tiny), ResourceLimitError);
}

TEST_CASE("reduction identity holds with a stabilization certificate") {
  for (auto [family, k, order] :
       {std::tuple{AdeFamily::A, 1, 8}, {AdeFamily::A, 2, 8}, {AdeFamily::A, 3, 6},
        {AdeFamily::D, 4, 6}}) {
    DualGraph g = buildAde(family, k);
    ReductionCheck check = checkReductionIdentity(g, order);
    CHECK(check.match);
    CHECK(check.stabilizedBox > order);
    CHECK(check.reduced == check.arc);
  }
}

TEST_CASE("reduction check reports an inconclusive ceiling distinctly") {
  StabilizationOptions cramped;
  cramped.ceiling = 7;  // first comparison box would be 10
  CHECK_THROWS_AS(checkReductionIdentity(buildAde(AdeFamily::D, 4), 6, cramped),
                  InconclusiveError);
}

TEST_CASE("double suspension series") {
  RationalForm n1 = doubleSuspensionSeries(1);
  for (int k = 1; k <= 10; ++k) CHECK(ratEqual(n1, adeClosedForm(AdeFamily::A, k)));

  CHECK(renderRationalForm(doubleSuspensionSeries(2)) == "(1-t^2)/((1-t)^4)");

  auto dp = degreeAndPole(doubleSuspensionSeries(3));
  CHECK(dp.first == -3);
  CHECK(dp.second == 4);
  CHECK_FALSE(degreePoleCheck(doubleSuspensionSeries(3)));

  CHECK_THROWS_AS(doubleSuspensionSeries(0), InvalidParameterError);
}

TEST_CASE("degreePoleCheck singles out the du Val shape") {
  CHECK(degreePoleCheck(adeClosedForm(AdeFamily::E, 6)));
  CHECK_FALSE(degreePoleCheck(RationalForm::fromProduct({{1, -1}})));
  for (int k = 1; k <= 10; ++k) CHECK(degreePoleCheck(adeClosedForm(AdeFamily::A, k)));
  for (int k = 4; k <= 10; ++k) CHECK(degreePoleCheck(adeClosedForm(AdeFamily::D, k)));
  for (int k = 6; k <= 8; ++k) CHECK(degreePoleCheck(adeClosedForm(AdeFamily::E, k)));
}

TEST_CASE("quasihomogeneous correspondences") {
  auto results = correspondenceCheck();
  REQUIRE(results.size() == 5);
  for (const auto& [label, pass] : results) {
    INFO(label);
    CHECK(pass);
  }

  CHECK(ratEqual(adeClosedForm(AdeFamily::E, 8), quasihomogeneousSeries({2, 2, 3}, 6)));
  CHECK(ratEqual(adeClosedForm(AdeFamily::D, 5), quasihomogeneousSeries({1, 3, 1}, 4)));
  CHECK(ratEqual(adeClosedForm(AdeFamily::A, 4), quasihomogeneousSeries({1, 1, 1}, 2)));
}

TEST_CASE("every ADE closed form is a certified cyclotomic product") {
  for (int k = 1; k <= 10; ++k)
    CHECK(cyclotomicProductForm(adeClosedForm(AdeFamily::A, k), 40).has_value());
  for (int k = 4; k <= 10; ++k)
    CHECK(cyclotomicProductForm(adeClosedForm(AdeFamily::D, k), 40).has_value());
  for (int k = 6; k <= 8; ++k)
    CHECK(cyclotomicProductForm(adeClosedForm(AdeFamily::E, k), 40).has_value());
}
