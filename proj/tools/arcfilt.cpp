// arcfilt - arc filtration Poincare series for rational surface
// singularities (from resolution dual graphs) and monomial curve germs
// (from numerical semigroups), with built-in verification suites.
//
// Output is line-oriented `key: value` text.  Exit codes: 0 success,
// 1 verification mismatch, 2 invalid input or inconclusive run.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arcfilt/errors.hpp"
#include "arcfilt/poincare.hpp"
#include "arcfilt/semigroup.hpp"
#include "arcfilt/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;

void report(const std::string& key, const std::string& value) {
  std::cout << key << ": " << value << "\n";
}

void reportBool(const std::string& key, bool value) { report(key, value ? "true" : "false"); }

struct MultiOptions {
  bool enabled = false;
  int box = 0;  // 0 means: use the order
  int maxVars = 4;
};

// Runs the box-stabilized reduction and prints its certificate.  Returns
// false on a mismatch.
bool reportReduction(const arcfilt::DualGraph& graph, int order, const MultiOptions& multi) {
  arcfilt::StabilizationOptions options;
  options.limits.maxVars = multi.maxVars;
  options.startBox = multi.box;
  if (const char* env = std::getenv("ARCFILT_MAX_BOX")) {
    int ceiling = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::string_view(env).size(), ceiling);
    if (ec != std::errc() || *ptr != '\0' || ceiling < 1)
      throw arcfilt::InvalidParameterError("ARCFILT_MAX_BOX must be a positive integer");
    options.ceiling = ceiling;
  }
  arcfilt::ReductionCheck check = arcfilt::checkReductionIdentity(graph, order, options);
  report("reduced_coeffs", renderCoefficients(check.reduced));
  report("stabilized_box", std::to_string(check.stabilizedBox));
  reportBool("match", check.match);
  return check.match;
}

std::pair<arcfilt::AdeFamily, int> parseAdeName(const std::string& name) {
  if (name.size() < 2)
    throw arcfilt::InvalidParameterError("expected a family letter followed by an index, e.g. A3");
  arcfilt::AdeFamily family = arcfilt::adeFamilyFromChar(name[0]);
  int k = 0;
  auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), k);
  if (ec != std::errc() || ptr != name.data() + name.size())
    throw arcfilt::InvalidParameterError("bad index in '" + name + "'");
  return {family, k};
}

int runAde(const std::string& name, int order, bool closedForm, const MultiOptions& multi) {
  auto [family, k] = parseAdeName(name);
  arcfilt::DualGraph graph = arcfilt::buildAde(family, k);

  arcfilt::ArcSeriesResult result{arcfilt::arcSeries(graph, order), std::nullopt, graph.label()};
  if (closedForm) result.closedForm = arcfilt::adeClosedForm(family, k);

  report("arc_series_coeffs", renderCoefficients(result.series));
  bool ok = true;
  if (result.closedForm) {
    report("closed_form", renderRationalForm(*result.closedForm));
    bool matches = expandRational(*result.closedForm, order) == result.series;
    reportBool("match", matches);
    ok = ok && matches;
  }
  if (multi.enabled) ok = reportReduction(graph, order, multi) && ok;
  return ok ? kExitOk : kExitMismatch;
}

int runGraph(const std::string& path, int order, const MultiOptions& multi) {
  std::ifstream in(path);
  if (!in) throw arcfilt::ParseError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  arcfilt::DualGraph graph = arcfilt::parseDualGraph(buffer.str(), path);

  for (const std::string& w : graph.warnings()) report("warning", w);

  bool rational = arcfilt::isRational(graph);
  reportBool("rational", rational);
  if (!rational) {
    std::cerr << "error: series are only defined for rational singularities\n";
    return kExitInvalid;
  }

  report("arc_series_coeffs", renderCoefficients(arcfilt::arcSeries(graph, order)));
  bool ok = true;
  if (multi.enabled) ok = reportReduction(graph, order, multi);
  return ok ? kExitOk : kExitMismatch;
}

int runCurve(const std::string& generatorList, int order) {
  std::vector<long long> generators;
  std::stringstream stream(generatorList);
  std::string item;
  while (std::getline(stream, item, ',')) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size())
      throw arcfilt::ParseError("bad generator '" + item + "'");
    generators.push_back(value);
  }
  if (generators.empty()) throw arcfilt::ParseError("empty generator list");

  arcfilt::CurveSeries curve = arcfilt::curveArcSeries(generators, order);
  report("arc_series_coeffs", renderCoefficients(curve.series));
  report("closed_form", renderRationalForm(curve.closedForm));

  // Certifying a finite product needs roughly twice the conductor; past the
  // cap the quadratic peel would be too slow to be worth it.
  long long productOrder = std::max<long long>(2 * curve.semigroup.conductor + 10, 40);
  if (productOrder > 10'000) {
    report("product_form", "skipped (conductor too large for certification)");
  } else {
    auto product =
        arcfilt::cyclotomicProductForm(curve.closedForm, static_cast<int>(productOrder));
    report("product_form", product ? arcfilt::renderProduct(*product) : "none");
  }
  return kExitOk;
}

int runVerify(const std::string& suite) {
  report("suite", suite);
  auto results = arcfilt::verify::runSuite(suite);
  bool allPass = true;
  for (const auto& check : results) {
    report("check", check.label);
    reportBool("match", check.pass);
    allPass = allPass && check.pass;
  }
  report("result", allPass ? "pass" : "fail");
  return allPass ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "arc filtration Poincare series of normal surface singularities and "
      "monomial curves"};
  app.require_subcommand(1);

  std::string adeName;
  std::string graphPath;
  std::string generatorList;
  std::string suite = "all";
  int order = 20;
  bool closedForm = false;
  MultiOptions multi;

  auto addSeriesOptions = [&](CLI::App* cmd) {
    cmd->add_option("--order", order, "truncation order of the printed series")
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--multi", multi.enabled,
                  "also compute the multivariate series, reduce it and compare");
    cmd->add_option("--box", multi.box, "starting exponent box for --multi")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-vars", multi.maxVars,
                    "vertex-count gate for the multivariate series (default 4)")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* ade = app.add_subcommand("ade", "du Val singularity by name, e.g. A1, D4, E8");
  ade->add_option("name", adeName, "family letter and index")->required();
  ade->add_flag("--closed-form", closedForm, "print the closed form and check it");
  addSeriesOptions(ade);

  CLI::App* graph = app.add_subcommand("graph", "resolution dual graph from a file");
  graph->add_option("file", graphPath, "graph description file")->required();
  addSeriesOptions(graph);

  CLI::App* curve = app.add_subcommand("curve", "monomial curve from semigroup generators");
  curve->add_option("generators", generatorList, "comma-separated positive integers")
      ->required();
  curve->add_option("--order", order, "truncation order of the printed series")
      ->check(CLI::NonNegativeNumber);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite,
                     "one of: ade, reduction, curves, degpole, correspondence, all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (app.got_subcommand(ade)) return runAde(adeName, order, closedForm, multi);
    if (app.got_subcommand(graph)) return runGraph(graphPath, order, multi);
    if (app.got_subcommand(curve)) return runCurve(generatorList, order);
    if (app.got_subcommand(verify)) return runVerify(suite);
  } catch (const arcfilt::InconclusiveError& e) {
    std::cerr << "error: inconclusive: " << e.what()
              << " (raise ARCFILT_MAX_BOX to allow larger boxes)\n";
    return kExitInvalid;
  } catch (const arcfilt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
