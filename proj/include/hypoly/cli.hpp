#pragma once

// Subcommands of the command-line tool. Each one reads a parsed document,
// writes line-oriented "key: value" output and returns the process exit code.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypoly/area.hpp"
#include "hypoly/cocyclic.hpp"
#include "hypoly/construct.hpp"
#include "hypoly/document.hpp"
#include "hypoly/errors.hpp"
#include "hypoly/maximize.hpp"
#include "hypoly/selftest.hpp"
#include "hypoly/svg.hpp"

namespace hypoly::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kMalformed = 2, kDegenerate = 3 };

struct Options {
  bool json = false;
  std::optional<std::string> svg;
  bool verify = false;
  std::optional<std::uint64_t> seed;
  std::size_t restarts = 16;
  std::optional<double> tol;
  int precision = 6;
  std::size_t count = 10000;
  double perturb = 0.0;
};

/// Largest |area difference| accepted between the two maximization routes.
inline constexpr double kVerifyTolerance = 1e-4;
inline constexpr double kDefaultCocyclicTolerance = 1e-9;

class Printer {
 public:
  Printer(std::ostream &os, int precision) : os_(os), precision_(precision) {}

  std::string num(double v) const {
    std::ostringstream s;
    s << std::fixed << std::setprecision(precision_) << v;
    std::string out = s.str();
    if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) {
      out.erase(0, 1);
    }
    return out;
  }

  static std::string sci(double v) {
    std::ostringstream s;
    s << std::scientific << std::setprecision(3) << v;
    return s.str();
  }

  std::string point(const KleinPoint &p) const { return "(" + num(p.xi) + ", " + num(p.eta) + ")"; }

  void kv(const std::string &key, const std::string &value) const { os_ << key << ": " << value << '\n'; }
  void kv(const std::string &key, double value) const { kv(key, num(value)); }
  void flag(const std::string &key, bool value) const { kv(key, value ? "true" : "false"); }

  void list(const std::string &key, const std::vector<double> &values) const {
    std::string s;
    for (double v : values) {
      s += (s.empty() ? "" : " ") + num(v);
    }
    kv(key, s);
  }

  void points(const std::string &key, const std::vector<KleinPoint> &pts) const {
    std::string s;
    for (const auto &p : pts) {
      s += (s.empty() ? "" : " ") + point(p);
    }
    kv(key, s);
  }

  std::ostream &stream() const { return os_; }

 private:
  std::ostream &os_;
  int precision_;
};

namespace detail {

inline SideLengths document_sides(const PolygonDocument &doc) {
  if (!doc.sides) {
    throw document_error("this command needs 'sides'");
  }
  try {
    return doc.side_lengths();
  } catch (const domain_error &e) {
    throw document_error(e.what());
  }
}

inline Polygon document_polygon(const PolygonDocument &doc, std::size_t required = 0) {
  if (!doc.vertices) {
    throw document_error("this command needs 'vertices'");
  }
  if (required != 0 && doc.vertices->size() != required) {
    throw document_error("this command needs exactly " + std::to_string(required) + " vertices");
  }
  try {
    return doc.polygon();
  } catch (const domain_error &e) {
    throw document_error(e.what());
  }
}

inline void emit_json(std::ostream &os, const nlohmann::json &j) { os << j.dump() << '\n'; }

}  // namespace detail

/// Signed area by the fan sum, its terms, and the curve-integral cross-check.
inline int cmd_area(const PolygonDocument &doc, const Options &opt, std::ostream &out) {
  const Polygon poly = detail::document_polygon(doc);
  const Printer pr(out, opt.precision);
  const HPoint origin = doc.origin ? lift(*doc.origin) : poly.point(0);
  const std::vector<double> terms = fan_terms(poly, origin);
  double area = 0.0;
  for (double t : terms) {
    area += t;
  }
  const double omega = omega_integral(poly);
  pr.kv("vertices", std::to_string(poly.size()));
  pr.kv("origin", doc.origin ? pr.point(*doc.origin) : std::string("vertex 1"));
  pr.kv("area", area);
  pr.list("fan_terms", terms);
  pr.kv("omega_integral", omega);
  pr.kv("omega_difference", Printer::sci(std::abs(area - omega)));
  if (opt.json) {
    nlohmann::json j = to_json(doc);
    j["area"] = area;
    j["fan_terms"] = terms;
    j["omega_integral"] = omega;
    detail::emit_json(out, j);
  }
  return kOk;
}

/// Circum-cycle type from side lengths or from three vertices.
inline int cmd_classify(const PolygonDocument &doc, const Options &opt, std::ostream &out) {
  const Printer pr(out, opt.precision);
  nlohmann::json j = to_json(doc);
  CycleType type{};
  if (doc.sides) {
    const SideLengths sides = detail::document_sides(doc);
    type = classify_sides(sides);
    const double gap = chord_gap(sides);
    pr.kv("s_gap", gap);
    j["s_gap"] = gap;
    if (sides.size() == 3) {
      const auto t = classify_triple(std::sinh(sides[0] / 2), std::sinh(sides[1] / 2), std::sinh(sides[2] / 2));
      pr.kv("delta", t.delta);
      j["delta"] = t.delta;
    }
  } else {
    const Polygon poly = detail::document_polygon(doc, 3);
    const TripleDelta t = triple_delta(poly.point(0), poly.point(1), poly.point(2));
    type = t.type;
    pr.kv("delta", t.delta);
    j["delta"] = t.delta;
  }
  pr.kv("type", std::string(to_string(type)));
  if (opt.json) {
    j["type"] = std::string(to_string(type));
    detail::emit_json(out, j);
  }
  return kOk;
}

/// Ptolemy deltas, the 17-identity residual and the cocyclicity verdict.
inline int cmd_cocyclic(const PolygonDocument &doc, const Options &opt, std::ostream &out) {
  const Polygon poly = detail::document_polygon(doc, 4);
  const Printer pr(out, opt.precision);
  const HPoint &a = poly.point(0);
  const HPoint &b = poly.point(1);
  const HPoint &c = poly.point(2);
  const HPoint &e = poly.point(3);
  const double tol = opt.tol.value_or(doc.tolerance.value_or(kDefaultCocyclicTolerance));
  const bool cocyclic = is_cocyclic(a, b, c, e, tol);
  const PtolemyDeltas d = ptolemy_deltas(a, b, c, e);
  const double seventeen = seventeen_residual(a, b, c, e);
  const double bracket = quad_bracket(a, b, c, e);
  pr.kv("delta1", d.d1);
  pr.kv("delta2", d.d2);
  pr.kv("delta3", d.d3);
  pr.kv("seventeen_residual", Printer::sci(seventeen));
  pr.kv("quad_bracket", bracket);
  pr.kv("tolerance", Printer::sci(tol));
  pr.flag("cocyclic", cocyclic);
  if (opt.json) {
    nlohmann::json j = to_json(doc);
    j["deltas"] = {d.d1, d.d2, d.d3};
    j["seventeen_residual"] = seventeen;
    j["quad_bracket"] = bracket;
    j["cocyclic"] = cocyclic;
    detail::emit_json(out, j);
  }
  return kOk;
}

/// Constructive maximum, optionally cross-checked by numerical maximization.
inline int cmd_maximize(const PolygonDocument &doc, const Options &opt, std::ostream &out) {
  const SideLengths sides = detail::document_sides(doc);
  const Printer pr(out, opt.precision);
  const MaxResult r = verdict(sides);
  pr.kv("sides", std::to_string(sides.size()));
  pr.kv("verdict", std::string(to_string(r.verdict)));
  pr.kv("area", r.area);
  nlohmann::json j = to_json(document_from_vertices(r.polygon.vertices()));
  j["input_sides"] = sides.lengths;
  if (r.diagnostics.cycle) {
    const Cycle &cy = *r.diagnostics.cycle;
    pr.kv("cycle", std::string(to_string(cy.type)));
    j["cycle"] = std::string(to_string(cy.type));
    if (cy.type == CycleType::DistanceCircle) {
      pr.kv("radius", cy.gauge);
      pr.kv("rho", cy.rho());
      j["radius"] = cy.gauge;
    } else if (cy.type == CycleType::DistanceLine) {
      pr.kv("offset", cy.gauge);
      pr.kv("cosh_offset", cy.cosh_offset());
      j["offset"] = cy.gauge;
    }
  }
  pr.flag("oriented_convex", r.diagnostics.convexity.ok);
  pr.kv("worst_bracket", Printer::sci(r.diagnostics.convexity.worst_bracket));
  pr.kv("cocyclic_residual", Printer::sci(r.diagnostics.cocyclic_residual));
  pr.kv("closure_defect", Printer::sci(r.diagnostics.closure_defect));
  pr.points("vertices", r.polygon.vertices());
  j["area"] = r.area;
  j["verdict"] = std::string(to_string(r.verdict));

  int code = kOk;
  if (opt.verify) {
    const std::uint64_t seed = opt.seed.value_or(doc.seed.value_or(0));
    const MaxResult m = maximize_area(sides, opt.restarts, seed);
    const double diff = std::abs(m.area - r.area);
    const bool agree = diff < kVerifyTolerance && m.verdict == r.verdict;
    pr.kv("verify_area", m.area);
    pr.kv("verify_verdict", std::string(to_string(m.verdict)));
    pr.kv("verify_difference", Printer::sci(diff));
    pr.flag("verify_oriented_convex", m.diagnostics.convexity.ok);
    pr.kv("verify_cocyclic_residual", Printer::sci(m.diagnostics.cocyclic_residual));
    pr.flag("verify_agreement", agree);
    j["verify_area"] = m.area;
    j["verify_agreement"] = agree;
    if (!agree) {
      code = kFailure;
    }
  }
  if (opt.svg) {
    std::ofstream f(*opt.svg);
    if (!f) {
      throw std::runtime_error("cannot open " + *opt.svg + " for writing");
    }
    if (r.verdict == Verdict::CocyclicConvex) {
      const CocyclicConstruction c = cocyclic_construction(sides);
      write_svg(f, c.polygon, CycleTrace{c.cycle, c.params});
    } else {
      write_svg(f, r.polygon);
    }
    pr.kv("svg", *opt.svg);
  }
  if (opt.json) {
    detail::emit_json(out, j);
  }
  return code;
}

/// Runs every identity suite; exit 1 if any fails, printing its witness.
inline int cmd_selftest(const Options &opt, std::ostream &out) {
  const Printer pr(out, opt.precision);
  SelftestOptions so;
  so.seed = opt.seed.value_or(1);
  so.count = opt.count;
  so.perturb = opt.perturb;
  const auto start = std::chrono::steady_clock::now();
  const std::vector<SuiteReport> reports = run_selftest(so);
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  pr.kv("seed", std::to_string(so.seed));
  pr.kv("count", std::to_string(so.count));
  pr.kv("perturb", Printer::sci(so.perturb));
  bool all = true;
  for (const auto &r : reports) {
    pr.kv(r.name, std::string(r.passed ? "pass" : "FAIL") + " (worst " + Printer::sci(r.worst) + ", tolerance " +
                      Printer::sci(r.tolerance) + ", samples " + std::to_string(r.samples) + ")");
    if (!r.passed) {
      all = false;
      pr.kv(r.name + ".witness", r.witness ? r.witness->dump() : "{}");
    }
  }
  pr.kv("status", all ? "pass" : "FAIL");
  pr.kv("runtime_ms", std::to_string(static_cast<long long>(std::llround(elapsed))));
  return all ? kOk : kFailure;
}

/// Maps library exceptions onto exit codes and reports them on `err`.
inline int guarded(const std::function<int()> &body, std::ostream &err) {
  try {
    return body();
  } catch (const document_error &e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kMalformed;
  } catch (const geometry_error &e) {
    err << "error: degenerate geometry: " << e.what() << '\n';
    return kDegenerate;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kMalformed;
  }
}

}  // namespace hypoly::cli
