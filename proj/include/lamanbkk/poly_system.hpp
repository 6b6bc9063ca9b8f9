#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lamanbkk/errors.hpp"
#include "lamanbkk/graph.hpp"
#include "lamanbkk/polytope.hpp"
#include "lamanbkk/rational.hpp"

namespace lamanbkk {

/// Pinning constants of the embedding systems: x1 = c1, y1 = c2,
/// x2 = l12 - c1, y2 = c3.
struct Constants {
  Rational c1 = 1, c2 = 2, c3 = 3;
  Rational l12 = 1;

  void validate() const {
    if (c1 == 0 || c2 == 0 || c3 == 0) throw InputError("pinning constants must be non-zero");
    if (c1 == l12) throw InputError("c1 must differ from l12");
    if (l12 <= 0) throw InputError("l12 must be positive");
  }

  /// c = (1, 2, 3), except c1 = 2 when l12 = 1.
  static Constants defaults(const Rational& l12) {
    Constants c;
    c.l12 = l12;
    if (l12 == 1) c.c1 = 2;
    return c;
  }
};

using Exponent = std::vector<int>;

class Polynomial {
 public:
  explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }

  void add_term(Exponent exp, const Rational& coeff) {
    if (exp.size() != num_vars_) throw InputError("exponent has wrong length");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(exp), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial operator-(const Polynomial& other) const {
    Polynomial r = *this;
    for (const auto& [e, c] : other.terms_) r.add_term(e, -c);
    return r;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  std::vector<QVector> support() const {
    std::vector<QVector> pts;
    for (const auto& [e, c] : terms_) {
      QVector p(num_vars_);
      for (std::size_t i = 0; i < num_vars_; ++i) p[i] = e[i];
      pts.push_back(std::move(p));
    }
    return pts;
  }

  bool is_zero() const { return terms_.empty(); }

 private:
  std::size_t num_vars_;
  std::map<Exponent, Rational> terms_;
};

enum class SystemForm { SoE, SubSoE, FaceSystem, Custom };

inline std::string to_string(SystemForm f) {
  switch (f) {
    case SystemForm::SoE: return "soe";
    case SystemForm::SubSoE: return "subsoe";
    case SystemForm::FaceSystem: return "face";
    case SystemForm::Custom: return "custom";
  }
  return "custom";
}

struct PolySystem {
  std::vector<std::string> variables;
  std::vector<Polynomial> polys;
  SystemForm form = SystemForm::Custom;
  // Edge modelled by each polynomial (SoE/SubSoE edge equations), for reporting.
  std::vector<std::string> labels;
};

/// Exact complex rational a + b i.
struct GaussianRational {
  Rational re, im;

  GaussianRational(Rational r = 0, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
  bool is_zero() const { return re == 0 && im == 0; }
};

inline std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return z.re.get_str();
  return z.re.get_str() + (z.im < 0 ? "-" : "+") + Rational(abs(z.im)).get_str() + "i";
}

namespace detail {

inline std::size_t xvar(int v) { return 2 * static_cast<std::size_t>(v - 1); }
inline std::size_t yvar(int v) { return 2 * static_cast<std::size_t>(v - 1) + 1; }

inline std::vector<std::string> xy_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) {
    names.push_back("x" + std::to_string(i));
    names.push_back("y" + std::to_string(i));
  }
  return names;
}

inline Exponent monomial(std::size_t nvars, std::initializer_list<std::pair<std::size_t, int>> powers) {
  Exponent e(nvars, 0);
  for (auto [var, p] : powers) e[var] += p;
  return e;
}

inline void pinning(PolySystem& sys, const Constants& c) {
  const std::size_t nv = sys.variables.size();
  const std::pair<std::size_t, Rational> pins[4] = {
      {xvar(1), c.c1}, {yvar(1), c.c2}, {xvar(2), c.l12 - c.c1}, {yvar(2), c.c3}};
  const char* names[4] = {"pin x1", "pin y1", "pin x2", "pin y2"};
  for (int k = 0; k < 4; ++k) {
    Polynomial h(nv);
    h.add_term(monomial(nv, {{pins[k].first, 1}}), 1);
    h.add_term(Exponent(nv, 0), -pins[k].second);
    sys.polys.push_back(std::move(h));
    sys.labels.push_back(names[k]);
  }
}

// Edges of E minus {1,2} in the order dictated by the two-in orientation:
// the two incoming edges of vertex i fill slots 2i-1 and 2i.
inline std::vector<Edge> ordered_edges(const Framework& f) {
  const Graph& g = f.graph();
  if (!check_laman(g).laman) throw InputError("the embedding systems need a Laman graph");
  if (!g.has_edge(1, 2)) throw InputError("the embedding systems need an edge between vertices 1 and 2");
  Orientation o = orient_two_in(g, Edge(1, 2));
  std::vector<Edge> out;
  for (int v = 3; v <= g.vertex_count(); ++v) {
    auto in = o.incoming(v);
    if (in.size() != 2) throw InternalError("orientation lacks two incoming edges");
    out.insert(out.end(), in.begin(), in.end());
  }
  return out;
}

}  // namespace detail

/// Edge-length system in (x1,y1,...,xn,yn): four pinning equations, then
/// (xi-xj)^2 + (yi-yj)^2 - l^2 per edge other than {1,2}, ordered so that
/// equations 2i-1 and 2i model the incoming edges of vertex i.
inline PolySystem build_soe(const Framework& f, const Constants& consts) {
  consts.validate();
  if (consts.l12 != f.length({1, 2})) throw InputError("constants l12 does not match the framework");
  const int n = f.graph().vertex_count();
  PolySystem sys;
  sys.form = SystemForm::SoE;
  sys.variables = detail::xy_names(n);
  const std::size_t nv = sys.variables.size();
  detail::pinning(sys, consts);
  for (const Edge& e : detail::ordered_edges(f)) {
    using detail::monomial, detail::xvar, detail::yvar;
    Polynomial h(nv);
    for (auto var : {xvar, yvar}) {
      std::size_t a = var(e.u), b = var(e.v);
      h.add_term(monomial(nv, {{a, 2}}), 1);
      h.add_term(monomial(nv, {{a, 1}, {b, 1}}), -2);
      h.add_term(monomial(nv, {{b, 2}}), 1);
    }
    const Rational& l = f.length(e);
    h.add_term(Exponent(nv, 0), -l * l);
    sys.polys.push_back(std::move(h));
    sys.labels.push_back("edge " + to_string(e));
  }
  return sys;
}

/// Substituted system in (x1,y1,...,xn,yn,s1,...,sn): pinning, then
/// si + sj - 2 xi xj - 2 yi yj - l^2 per edge other than {1,2}, then
/// si - xi^2 - yi^2 per vertex.
inline PolySystem build_subsoe(const Framework& f, const Constants& consts) {
  consts.validate();
  if (consts.l12 != f.length({1, 2})) throw InputError("constants l12 does not match the framework");
  const int n = f.graph().vertex_count();
  PolySystem sys;
  sys.form = SystemForm::SubSoE;
  sys.variables = detail::xy_names(n);
  for (int i = 1; i <= n; ++i) sys.variables.push_back("s" + std::to_string(i));
  const std::size_t nv = sys.variables.size();
  auto svar = [&](int v) { return 2 * static_cast<std::size_t>(n) + static_cast<std::size_t>(v - 1); };
  detail::pinning(sys, consts);
  using detail::monomial, detail::xvar, detail::yvar;
  for (const Edge& e : detail::ordered_edges(f)) {
    Polynomial h(nv);
    h.add_term(monomial(nv, {{svar(e.u), 1}}), 1);
    h.add_term(monomial(nv, {{svar(e.v), 1}}), 1);
    h.add_term(monomial(nv, {{xvar(e.u), 1}, {xvar(e.v), 1}}), -2);
    h.add_term(monomial(nv, {{yvar(e.u), 1}, {yvar(e.v), 1}}), -2);
    const Rational& l = f.length(e);
    h.add_term(Exponent(nv, 0), -l * l);
    sys.polys.push_back(std::move(h));
    sys.labels.push_back("edge " + to_string(e));
  }
  for (int i = 1; i <= n; ++i) {
    Polynomial h(nv);
    h.add_term(monomial(nv, {{svar(i), 1}}), 1);
    h.add_term(monomial(nv, {{xvar(i), 2}}), -1);
    h.add_term(monomial(nv, {{yvar(i), 2}}), -1);
    sys.polys.push_back(std::move(h));
    sys.labels.push_back("circle " + std::to_string(i));
  }
  return sys;
}

inline std::vector<RationalPolytope> newton_polytopes(const PolySystem& sys) {
  std::vector<RationalPolytope> out;
  out.reserve(sys.polys.size());
  for (const auto& p : sys.polys) {
    if (p.is_zero()) throw InputError("the zero polynomial has no Newton polytope");
    out.push_back(hull_vertices(p.support()));
  }
  return out;
}

/// Keeps, in every polynomial, the terms whose exponents minimise <w, .>.
inline PolySystem face_system(const PolySystem& sys, const QVector& w) {
  if (w.size() != sys.variables.size()) throw InputError("face direction has wrong length");
  if (std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 0; }))
    throw InputError("face direction must be non-zero");
  PolySystem out;
  out.variables = sys.variables;
  out.form = SystemForm::FaceSystem;
  out.labels = sys.labels;
  for (const auto& p : sys.polys) {
    Polynomial face(p.num_vars());
    std::optional<Rational> best;
    for (const auto& [e, c] : p.terms()) {
      Rational val = 0;
      for (std::size_t i = 0; i < e.size(); ++i) val += w[i] * e[i];
      if (!best || val < *best) best = val;
    }
    for (const auto& [e, c] : p.terms()) {
      Rational val = 0;
      for (std::size_t i = 0; i < e.size(); ++i) val += w[i] * e[i];
      if (val == *best) face.add_term(e, c);
    }
    out.polys.push_back(std::move(face));
  }
  return out;
}

inline GaussianRational evaluate(const Polynomial& p, const std::vector<GaussianRational>& point) {
  if (point.size() != p.num_vars()) throw InputError("evaluation point has wrong length");
  GaussianRational sum;
  for (const auto& [e, c] : p.terms()) {
    GaussianRational term(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term = term * point[i];
    sum = sum + term;
  }
  return sum;
}

inline std::vector<GaussianRational> evaluate(const PolySystem& sys, const std::vector<GaussianRational>& point) {
  if (point.size() != sys.variables.size()) throw InputError("evaluation point has wrong length");
  std::vector<GaussianRational> out;
  out.reserve(sys.polys.size());
  for (const auto& p : sys.polys) out.push_back(evaluate(p, point));
  return out;
}

/// Direction (0,0,0,0,-1,...,-1) for an SoE over n vertices.
inline QVector degeneracy_direction(int n) {
  QVector w(2 * static_cast<std::size_t>(n), -1);
  for (int i = 0; i < 4; ++i) w[i] = 0;
  return w;
}

/// Point (c1, c2, l12 - c1, c3, 1, i, 1, i, ...).
inline std::vector<GaussianRational> degeneracy_witness(int n, const Constants& c) {
  std::vector<GaussianRational> pt{GaussianRational(c.c1), GaussianRational(c.c2), GaussianRational(Rational(c.l12 - c.c1)),
                                  GaussianRational(c.c3)};
  for (int v = 3; v <= n; ++v) {
    pt.emplace_back(1, 0);
    pt.emplace_back(0, 1);
  }
  return pt;
}

/// True iff the SoE face system along the degeneracy direction vanishes at the
/// witness point, i.e. the mixed volume of the SoE over-counts.
inline bool witness_check(const Framework& f, const Constants& consts) {
  const int n = f.graph().vertex_count();
  PolySystem face = face_system(build_soe(f, consts), degeneracy_direction(n));
  for (const auto& v : evaluate(face, degeneracy_witness(n, consts)))
    if (!v.is_zero()) return false;
  return true;
}

/// Product of total degrees.
inline Integer bezout(const PolySystem& sys) {
  Integer b = 1;
  for (const auto& p : sys.polys) b *= p.total_degree();
  return b;
}

inline std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  // Highest degree first, then lexicographically descending exponent.
  std::vector<std::pair<Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int x : a.first) da += x;
    for (int x : b.first) db += x;
    if (da != db) return da > db;
    return a.first > b.first;
  });
  bool first = true;
  for (const auto& [e, c] : terms) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    Rational mag = abs(c);
    std::string coeff = (mag == 1 && !mono.empty()) ? "" : mag.get_str();
    std::string body = coeff.empty() ? mono : (mono.empty() ? coeff : coeff + "*" + mono);
    if (first)
      out += (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace lamanbkk
