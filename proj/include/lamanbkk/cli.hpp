#pragma once

// Graph files, reports and the command-line front end.
//
// Graph file format (line oriented, '#' starts a comment):
//   n <vertex count>
//   e <i> <j> [length]     length as an integer, p/q or a decimal
// Missing lengths are filled deterministically: Henneberg I graphs get the
// tight lengths of their decomposition, other graphs get 1, 2, 3, ... by the
// position of the edge in the file.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lamanbkk/embedding.hpp"
#include "lamanbkk/errors.hpp"
#include "lamanbkk/graph.hpp"
#include "lamanbkk/mixed_volume.hpp"
#include "lamanbkk/poly_system.hpp"
#include "lamanbkk/rational.hpp"

namespace lamanbkk {

using Json = nlohmann::ordered_json;

struct GraphFile {
  Framework framework;
  std::vector<Edge> file_order;  // edges as they appear in the file
  std::vector<bool> length_given;
};

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

inline int parse_int(const std::string& s, std::size_t line) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw InputError("line " + std::to_string(line) + ": expected an integer, got '" + s + "'");
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw InputError("line " + std::to_string(line) + ": integer out of range");
  return static_cast<int>(v);
}

// Default lengths for a graph without (some) lengths.
inline std::map<Edge, Rational> default_lengths(const Graph& g, const std::vector<Edge>& file_order) {
  std::map<Edge, Rational> out;
  if (g.vertex_count() >= 3 && check_laman(g).laman) {
    std::optional<Edge> base;
    if (g.has_edge(1, 2)) base = Edge(1, 2);
    HennebergDecomposition dec = henneberg_decompose(g, base);
    if (dec.sequence.only_step_one()) {
      Framework tight = tight_lengths(dec.sequence);
      for (const auto& [e, len] : tight.lengths()) out[Edge(dec.relabel[e.u], dec.relabel[e.v])] = len;
      return out;
    }
  }
  for (std::size_t i = 0; i < file_order.size(); ++i) out[file_order[i]] = Rational(static_cast<long>(i + 1));
  return out;
}

}  // namespace detail

/// Parses the graph file format; errors carry the offending line number.
inline GraphFile parse_graph_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::optional<int> n;
  std::vector<Edge> order;
  std::map<Edge, std::optional<Rational>> given;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tok = detail::tokens(line);
    if (tok.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (tok[0] == "n") {
      if (n) throw InputError(where + "vertex count given twice");
      if (tok.size() != 2) throw InputError(where + "expected 'n <count>'");
      n = detail::parse_int(tok[1], line_no);
      if (*n < 1) throw InputError(where + "vertex count must be positive");
    } else if (tok[0] == "e") {
      if (tok.size() != 3 && tok.size() != 4) throw InputError(where + "expected 'e <i> <j> [length]'");
      int a = detail::parse_int(tok[1], line_no);
      int b = detail::parse_int(tok[2], line_no);
      if (a == b) throw InputError(where + "loop at vertex " + std::to_string(a));
      if (n && (a < 1 || b < 1 || a > *n || b > *n)) throw InputError(where + "vertex out of range");
      if (a < 1 || b < 1) throw InputError(where + "vertex labels start at 1");
      Edge e(a, b);
      if (given.count(e)) throw InputError(where + "duplicate edge " + to_string(e));
      std::optional<Rational> len;
      if (tok.size() == 4) {
        try {
          len = parse_rational(tok[3]);
        } catch (const InputError& err) {
          throw InputError(where + err.what());
        }
        if (*len <= 0) throw InputError(where + "non-positive length for edge " + to_string(e));
      }
      order.push_back(e);
      given[e] = len;
    } else {
      throw InputError(where + "unknown directive '" + tok[0] + "'");
    }
  }
  if (!n) {
    int max_label = 0;
    for (const auto& e : order) max_label = std::max(max_label, e.v);
    if (max_label == 0) throw InputError("graph file declares no vertices");
    n = max_label;
  }
  for (const auto& e : order)
    if (e.v > *n) throw InputError("edge " + to_string(e) + " exceeds the vertex count");

  Graph g(*n, order);
  GraphFile out;
  out.file_order = order;
  std::map<Edge, Rational> lengths;
  bool missing = false;
  for (const auto& e : order) {
    out.length_given.push_back(given[e].has_value());
    if (given[e])
      lengths[e] = *given[e];
    else
      missing = true;
  }
  if (missing) {
    auto defaults = detail::default_lengths(g, order);
    for (const auto& e : order)
      if (!given[e]) lengths[e] = defaults.at(e);
  }
  out.framework = Framework(std::move(g), std::move(lengths));
  return out;
}

inline GraphFile load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph_file(buf.str());
}

// ---------------------------------------------------------------------------
// Report

struct MVSummary {
  Rational value;
  std::string method;
  std::optional<std::uint64_t> seed;
};

struct Report {
  int vertices = 0;
  std::size_t edges = 0;
  bool laman = false;
  std::optional<HennebergClass> henneberg_class;
  std::optional<Integer> bezout_soe, bezout_subsoe;
  std::optional<MVSummary> mv_soe, mv_subsoe;
  std::optional<Integer> borcea_streinu_bound;
  std::optional<Integer> embedding_count;
  std::optional<bool> witness_degenerate;
  std::vector<std::pair<std::string, double>> timings;  // seconds, filled on request
};

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer power_of_two(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

struct ReportOptions {
  std::uint64_t seed = 0;
  EnumerationOptions enumeration;
  bool timings = false;
};

/// Checks the invariants every emitted report must satisfy.
inline void validate_report(const Report& r) {
  auto fail = [](const std::string& what) { throw InternalError("report self-check failed: " + what); };
  if (r.mv_soe && r.bezout_soe && r.mv_soe->value > Rational(*r.bezout_soe)) fail("mv_soe exceeds bezout_soe");
  if (r.mv_subsoe && r.bezout_subsoe && r.mv_subsoe->value > Rational(*r.bezout_subsoe))
    fail("mv_subsoe exceeds bezout_subsoe");
  if (r.henneberg_class == HennebergClass::HennebergI && r.embedding_count &&
      *r.embedding_count != power_of_two(static_cast<unsigned long>(r.vertices - 2)))
    fail("tight Henneberg I embedding count differs from 2^(n-2)");
  if (r.henneberg_class == HennebergClass::HennebergI && r.mv_subsoe && r.embedding_count &&
      Rational(*r.embedding_count) > r.mv_subsoe->value)
    fail("embedding count exceeds mv_subsoe");
}

inline Report build_report(const Framework& input, const ReportOptions& options) {
  using Clock = std::chrono::steady_clock;
  Report r;
  const Graph& g0 = input.graph();
  r.vertices = g0.vertex_count();
  r.edges = g0.edge_count();
  auto timed = [&](const std::string& name, auto&& fn) {
    auto t0 = Clock::now();
    fn();
    if (options.timings) r.timings.emplace_back(name, std::chrono::duration<double>(Clock::now() - t0).count());
  };
  timed("laman", [&] { r.laman = r.vertices >= 2 && check_laman(g0).laman; });
  if (!r.laman) {
    validate_report(r);
    return r;
  }
  const Framework f = g0.has_edge(1, 2)
                          ? input
                          : input.relabeled(detail::base_first_permutation(r.vertices, g0.edges().front()));
  const Graph& g = f.graph();
  const int n = r.vertices;
  r.borcea_streinu_bound = n >= 2 ? binomial(2 * static_cast<unsigned long>(n) - 4, static_cast<unsigned long>(n) - 2)
                                  : Integer(1);
  if (n < 3) {
    validate_report(r);
    return r;
  }
  HennebergDecomposition dec;
  timed("henneberg", [&] {
    dec = henneberg_decompose(g, Edge(1, 2));
    r.henneberg_class = dec.sequence.only_step_one() ? HennebergClass::HennebergI : HennebergClass::HennebergII;
  });
  const Constants consts = Constants::defaults(f.length({1, 2}));
  r.bezout_soe = bezout(build_soe(f, consts));
  r.bezout_subsoe = bezout(build_subsoe(f, consts));
  timed("mv_soe", [&] { r.mv_soe = MVSummary{certify_general_bound(g).value, to_string(MVMethod::Certificate), {}}; });
  timed("mv_subsoe", [&] {
    GraphMVOptions o;
    o.form = SystemForm::SubSoE;
    o.seed = options.seed;
    o.enumeration = options.enumeration;
    MVResult res = mv_for_graph(f, o);
    r.mv_subsoe = MVSummary{res.value, to_string(res.method), options.seed};
  });
  timed("witness", [&] { r.witness_degenerate = witness_check(f, consts); });
  if (r.henneberg_class == HennebergClass::HennebergI) {
    timed("embeddings", [&] {
      Framework tight = tight_lengths(dec.sequence);
      r.embedding_count = Integer(static_cast<unsigned long>(enumerate_h1(tight, dec.sequence).size()));
    });
  }
  validate_report(r);
  return r;
}

inline Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

inline Json rational_json(const Rational& v) {
  if (v.get_den() == 1) return integer_json(v.get_num());
  return Json(v.get_str());
}

inline Json to_json(const Report& r) {
  Json j;
  j["graph"] = {{"vertices", r.vertices}, {"edges", r.edges}};
  j["laman"] = r.laman;
  j["class"] = r.henneberg_class ? Json(to_string(*r.henneberg_class)) : Json(nullptr);
  j["bezout_soe"] = r.bezout_soe ? integer_json(*r.bezout_soe) : Json(nullptr);
  j["bezout_subsoe"] = r.bezout_subsoe ? integer_json(*r.bezout_subsoe) : Json(nullptr);
  auto mv = [](const std::optional<MVSummary>& m) {
    if (!m) return Json(nullptr);
    Json o;
    o["value"] = rational_json(m->value);
    o["method"] = m->method;
    o["seed"] = m->seed ? Json(*m->seed) : Json(nullptr);
    return o;
  };
  j["mv_soe"] = mv(r.mv_soe);
  j["mv_subsoe"] = mv(r.mv_subsoe);
  j["borcea_streinu_bound"] = r.borcea_streinu_bound ? integer_json(*r.borcea_streinu_bound) : Json(nullptr);
  j["embedding_count"] = r.embedding_count ? integer_json(*r.embedding_count) : Json(nullptr);
  j["witness_degenerate"] = r.witness_degenerate ? Json(*r.witness_degenerate) : Json(nullptr);
  if (!r.timings.empty()) {
    Json t = Json::object();
    for (const auto& [name, secs] : r.timings) t[name] = secs;
    j["timings"] = t;
  }
  return j;
}

// ---------------------------------------------------------------------------
// Command line

namespace detail {

inline std::string json_scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Flattens a JSON object into "key: value" lines.
inline void write_text(std::ostream& out, const Json& j, const std::string& prefix = "") {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      write_text(out, value, name);
    } else if (value.is_array() && !value.empty() && (value.front().is_object() || value.front().is_array())) {
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (value[i].is_object())
          write_text(out, value[i], name + "[" + std::to_string(i) + "]");
        else
          out << name << "[" << i << "]: " << value[i].dump() << "\n";
      }
    } else if (value.is_array()) {
      out << name << ":";
      for (const auto& x : value) out << " " << json_scalar_text(x);
      out << "\n";
    } else {
      out << name << ": " << json_scalar_text(value) << "\n";
    }
  }
}

inline Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

inline Json step_json(const HennebergStep& step) {
  if (const auto* s1 = std::get_if<StepI>(&step)) return {{"type", "I"}, {"a", s1->a}, {"b", s1->b}};
  const auto& s2 = std::get<StepII>(step);
  return {{"type", "II"}, {"a", s2.a}, {"b", s2.b}, {"c", s2.c}, {"removed", edge_json(s2.removed)}};
}

inline Json cell_json(const MixedCellRecord& rec) {
  Json edges = Json::array();
  for (std::size_t i = 0; i < rec.cell.edges.size(); ++i) {
    Json a = Json::array(), b = Json::array();
    for (const auto& x : rec.cell.edges[i].first) a.push_back(rational_json(x));
    for (const auto& x : rec.cell.edges[i].second) b.push_back(rational_json(x));
    edges.push_back({{"polytope", rec.polytope[i] + 1}, {"from", a}, {"to", b}});
  }
  return {{"det", rational_json(rec.det)}, {"edges", edges}};
}

inline std::string format_real(long double x) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(12) << x;
  std::string out = s.str();
  return out == "-0.000000000000" ? "0.000000000000" : out;
}

inline SystemForm parse_form(const std::string& s) {
  if (s == "soe") return SystemForm::SoE;
  if (s == "subsoe") return SystemForm::SubSoE;
  throw InputError("unknown form '" + s + "' (expected soe or subsoe)");
}

inline Framework with_base_12(const Framework& f) {
  const Graph& g = f.graph();
  if (g.has_edge(1, 2)) return f;
  if (g.edge_count() == 0) throw InputError("graph has no edges");
  return f.relabeled(base_first_permutation(g.vertex_count(), g.edges().front()));
}

inline void require_laman(const Graph& g) {
  if (g.vertex_count() < 2 || !check_laman(g).laman) throw InputError("graph is not a Laman graph");
}

}  // namespace detail

/// Runs the command line with `args` (args[0] is the program name).
/// Returns 0 on success, 1 on input errors, 2 on capability, time-out,
/// retry or internal errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounds on the number of embeddings of Laman graph frameworks"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  std::string form = "subsoe";
  std::string format = "json";
  unsigned threads = 1;
  double timeout = 0;
  std::string path;
  bool tight = false;
  bool no_separation = false;
  bool timings = false;
  bool with_cells = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("graph", path, "graph file")->required();
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_engine = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "lifting seed");
    sub->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--timeout", timeout, "time budget in seconds (0 = none)")->check(CLI::NonNegativeNumber);
  };
  auto* check = app.add_subcommand("check", "Laman test by the pebble game");
  auto* henneberg = app.add_subcommand("henneberg", "Henneberg decomposition and class");
  auto* orient = app.add_subcommand("orient", "orientation with in-degree 2 away from the base edge");
  auto* system = app.add_subcommand("system", "polynomial system of the framework");
  auto* mv = app.add_subcommand("mv", "mixed volume of the system by cell enumeration");
  auto* certify = app.add_subcommand("certify", "certified mixed volume 4^(n-2) of the sphere system");
  auto* oracle = app.add_subcommand("oracle", "pebble game against the subset oracle");
  auto* embed = app.add_subcommand("embed", "real embeddings of a Henneberg I framework");
  auto* report = app.add_subcommand("report", "combined report");
  for (auto* sub : {check, henneberg, orient, system, mv, certify, oracle, embed, report}) add_common(sub);
  for (auto* sub : {system, mv}) sub->add_option("--form", form, "soe or subsoe")->check(CLI::IsMember({"soe", "subsoe"}));
  for (auto* sub : {mv, report}) add_engine(sub);
  mv->add_flag("--no-separation", no_separation, "enumerate without splitting into blocks");
  mv->add_flag("--cells", with_cells, "list the mixed cells");
  certify->add_flag("--cells", with_cells, "list the certificate cell");
  embed->add_flag("--tight", tight, "use lengths with the maximal number of embeddings");
  report->add_flag("--timings", timings, "include wall-clock timings");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  }

  EnumerationOptions engine;
  engine.threads = threads;
  if (timeout > 0)
    engine.deadline = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(timeout));

  try {
    GraphFile file = load_graph_file(path);
    const Framework& f = file.framework;
    const Graph& g = f.graph();
    Json j;
    if (check->parsed()) {
      LamanCheck c = check_laman(g);
      j["laman"] = c.laman;
      j["vertices"] = g.vertex_count();
      j["edges"] = g.edge_count();
      j["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
    } else if (henneberg->parsed()) {
      detail::require_laman(g);
      HennebergDecomposition dec = henneberg_decompose(g, g.has_edge(1, 2) ? std::optional<Edge>(Edge(1, 2)) : std::nullopt);
      j["class"] = to_string(dec.sequence.only_step_one() ? HennebergClass::HennebergI : HennebergClass::HennebergII);
      Json steps = Json::array();
      for (const auto& s : dec.sequence.steps) steps.push_back(detail::step_json(s));
      j["steps"] = steps;
      j["relabel"] = std::vector<int>(dec.relabel.begin() + 1, dec.relabel.end());
    } else if (orient->parsed()) {
      detail::require_laman(g);
      Edge base = g.has_edge(1, 2) ? Edge(1, 2) : g.edges().front();
      Orientation o = orient_two_in(g, base);
      j["base"] = detail::edge_json(o.base);
      Json arcs = Json::array();
      for (const auto& [e, th] : o.direction) arcs.push_back(Json::array({th.first, th.second}));
      j["arcs"] = arcs;
    } else if (system->parsed()) {
      detail::require_laman(g);
      Framework fb = detail::with_base_12(f);
      Constants c = Constants::defaults(fb.length({1, 2}));
      PolySystem sys = detail::parse_form(form) == SystemForm::SoE ? build_soe(fb, c) : build_subsoe(fb, c);
      j["form"] = to_string(sys.form);
      j["variables"] = sys.variables;
      Json polys = Json::array();
      for (const auto& p : sys.polys) polys.push_back(to_string(p, sys.variables));
      j["polynomials"] = polys;
      j["bezout"] = integer_json(bezout(sys));
    } else if (mv->parsed()) {
      detail::require_laman(g);
      GraphMVOptions o;
      o.form = detail::parse_form(form);
      o.seed = seed;
      o.use_separation = !no_separation;
      o.enumeration = engine;
      MVResult r = mv_for_graph(f, o);
      j["form"] = form;
      j["value"] = rational_json(r.value);
      j["method"] = to_string(r.method);
      j["seed"] = seed;
      if (r.method == MVMethod::SeparationEnumeration) {
        Json blocks = Json::array();
        for (const auto& b : r.blocks) {
          Json bj;
          std::vector<std::size_t> coords, polys;
          for (auto c : b.coordinates) coords.push_back(c + 1);
          for (auto p : b.polytopes) polys.push_back(p + 1);
          bj["coordinates"] = coords;
          bj["polytopes"] = polys;
          bj["value"] = rational_json(b.value);
          bj["lifting_seed"] = b.lifting_seed;
          if (with_cells) {
            Json cells = Json::array();
            for (const auto& c : b.cells) cells.push_back(detail::cell_json(c));
            bj["cells"] = cells;
          }
          blocks.push_back(bj);
        }
        j["blocks"] = blocks;
      } else {
        j["lifting_seed"] = r.lifting_seed;
        j["cell_count"] = r.cells.size();
        if (with_cells) {
          Json cells = Json::array();
          for (const auto& c : r.cells) cells.push_back(detail::cell_json(c));
          j["cells"] = cells;
        }
      }
    } else if (certify->parsed()) {
      detail::require_laman(g);
      MVResult r = certify_general_bound(g);
      j["value"] = rational_json(r.value);
      j["method"] = to_string(r.method);
      j["bezout_soe"] = integer_json(bezout(build_soe(detail::with_base_12(f), Constants::defaults(detail::with_base_12(f).length({1, 2})))));
      if (with_cells) j["cell"] = detail::cell_json(r.cells.front());
    } else if (oracle->parsed()) {
      bool pebble = check_laman(g).laman;
      bool brute = laman_oracle(g);
      j["pebble_game"] = pebble;
      j["subset_oracle"] = brute;
      j["agree"] = pebble == brute;
      if (pebble && 2 * g.vertex_count() <= static_cast<int>(kMaxVolumeDim)) {
        Framework fb = detail::with_base_12(f);
        auto polys = newton_polytopes(build_soe(fb, Constants::defaults(fb.length({1, 2}))));
        j["mv_soe_inclusion_exclusion"] = rational_json(mv_inclusion_exclusion(polys));
      }
      if (pebble != brute) throw InternalError("pebble game and subset oracle disagree");
    } else if (embed->parsed()) {
      detail::require_laman(g);
      HennebergDecomposition dec = henneberg_decompose(g, g.has_edge(1, 2) ? std::optional<Edge>(Edge(1, 2)) : std::nullopt);
      if (!dec.sequence.only_step_one()) throw InputError("embed needs a Henneberg I graph");
      Framework local = tight ? tight_lengths(dec.sequence) : f.relabeled(dec.from_original());
      auto embeddings = enumerate_h1(local, dec.sequence);
      j["lengths"] = tight ? "tight" : "file";
      j["embedding_count"] = embeddings.size();
      j["bound"] = integer_json(power_of_two(static_cast<unsigned long>(g.vertex_count() - 2)));
      long double worst = 0;
      Json list = Json::array();
      for (const auto& e : embeddings) {
        worst = std::max(worst, e.residual);
        Json pts = Json::array();
        std::vector<std::array<long double, 2>> orig(e.points.size());
        for (std::size_t k = 0; k < e.points.size(); ++k) orig[dec.relabel[k + 1] - 1] = e.points[k];
        for (const auto& p : orig) pts.push_back(Json::array({detail::format_real(p[0]), detail::format_real(p[1])}));
        list.push_back({{"branch", e.branch}, {"tangent", e.tangent}, {"points", pts}});
      }
      std::ostringstream res;
      res << std::scientific << std::setprecision(3) << static_cast<double>(worst);
      j["max_residual"] = res.str();
      j["embeddings"] = list;
    } else if (report->parsed()) {
      ReportOptions o;
      o.seed = seed;
      o.enumeration = engine;
      o.timings = timings;
      j = to_json(build_report(f, o));
    }
    if (format == "json")
      out << j.dump(2) << "\n";
    else
      detail::write_text(out, j);
    return 0;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  } catch (const NonGenericLifting& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapabilityError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace lamanbkk
