// Command-line front end: reads a JSON polygon document from --file or stdin
// and runs one subcommand.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hypoly/cli.hpp"

namespace {

std::string read_input(const std::string &path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream f(path);
  if (!f) {
    throw hypoly::document_error("cannot read " + path);
  }
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Areas, cycles and maximal polygons in the hyperbolic plane"};
  app.require_subcommand(1);
  app.fallthrough();

  hypoly::cli::Options opt;
  std::string file;
  std::uint64_t seed = 0;
  double tol = 0.0;

  app.add_option("--file", file, "JSON document (default: stdin)");
  app.add_flag("--json", opt.json, "Also print a JSON result line");
  app.add_option("--precision", opt.precision, "Decimals in human-readable output")->check(CLI::Range(0, 17));
  auto *seed_opt = app.add_option("--seed", seed, "Random seed");
  auto *tol_opt = app.add_option("--tol", tol, "Cocyclicity tolerance")->check(CLI::PositiveNumber);

  auto *area = app.add_subcommand("area", "Signed area by the fan sum with the curve-integral check");
  auto *classify = app.add_subcommand("classify", "Circum-cycle type from sides or three vertices");
  auto *cocyclic = app.add_subcommand("cocyclic", "Ptolemy relations of four vertices");
  auto *maximize = app.add_subcommand("maximize", "Maximal-area polygon with the given sides");
  maximize->add_option("--svg", opt.svg, "Write a Klein-disk figure to this path");
  maximize->add_flag("--verify", opt.verify, "Cross-check with numerical maximization");
  maximize->add_option("--restarts", opt.restarts, "Restarts of the numerical maximization")
      ->check(CLI::PositiveNumber);
  auto *selftest = app.add_subcommand("selftest", "Randomized identity suites");
  selftest->add_option("--count", opt.count, "Samples per suite")->check(CLI::PositiveNumber);
  selftest->add_option("--perturb", opt.perturb, "Relative error injected into the checks (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hypoly::cli::kMalformed;
  }
  if (*seed_opt) {
    opt.seed = seed;
  }
  if (*tol_opt) {
    opt.tol = tol;
  }

  if (*selftest) {
    return hypoly::cli::guarded([&] { return hypoly::cli::cmd_selftest(opt, std::cout); }, std::cerr);
  }
  return hypoly::cli::guarded(
      [&] {
        const hypoly::PolygonDocument doc = hypoly::parse_document(read_input(file));
        if (*area) {
          return hypoly::cli::cmd_area(doc, opt, std::cout);
        }
        if (*classify) {
          return hypoly::cli::cmd_classify(doc, opt, std::cout);
        }
        if (*cocyclic) {
          return hypoly::cli::cmd_cocyclic(doc, opt, std::cout);
        }
        return hypoly::cli::cmd_maximize(doc, opt, std::cout);
      },
      std::cerr);
}
