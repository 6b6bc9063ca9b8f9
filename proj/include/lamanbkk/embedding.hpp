#pragma once

// Real planar embeddings of Henneberg I frameworks. Vertices are placed in
// construction order: v1 at the origin, v2 at (l12, 0), every later vertex
// on the intersection of two circles around already placed vertices.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "lamanbkk/errors.hpp"
#include "lamanbkk/graph.hpp"
#include "lamanbkk/rational.hpp"

namespace lamanbkk {

template <class Real = long double>
struct Embedding {
  std::vector<std::array<Real, 2>> points;  // points[v - 1]
  Real residual = 0;                       // max relative edge-length error
  bool tangent = false;                    // some intersection was a tangency
  std::vector<int> branch;                 // +1 / -1 per placed vertex, 0 for a tangency
};

template <class Real>
Real to_real(const Rational& r) {
  const mpz_class& num = r.get_num();
  const mpz_class& den = r.get_den();
  if (num.fits_slong_p() && den.fits_slong_p()) return Real(num.get_si()) / Real(den.get_si());
  return Real(r.get_d());
}

inline constexpr long double kTangencyTolerance = 1e-12L;

/// Lengths with exactly 2^(n-2) real embeddings: (l12, l13, l23) = (3, 4, 5),
/// and each new vertex gets lengths S + 1 and S + 2, S being the sum of all
/// lengths assigned before it.
inline Framework tight_lengths(const HennebergSequence& seq) {
  if (!seq.only_step_one()) throw InputError("tight_lengths needs a Henneberg I sequence");
  Graph g = henneberg_apply(seq);
  std::map<Edge, Rational> lengths{{{1, 2}, 3}, {{1, 3}, 4}, {{2, 3}, 5}};
  Rational sum = 12;
  int v = 4;
  for (const auto& step : seq.steps) {
    const auto& s = std::get<StepI>(step);
    lengths[Edge(s.a, v)] = sum + 1;
    lengths[Edge(s.b, v)] = sum + 2;
    sum += 2 * sum + 3;
    ++v;
  }
  return Framework(std::move(g), std::move(lengths));
}

namespace detail {

template <class Real>
struct Intersection {
  std::vector<std::array<Real, 2>> points;  // 0, 1 (tangent) or 2 (+ side first)
  bool tangent = false;
};

// Circles around p with radius r1 and around q with radius r2. The first of
// two points lies to the left of the direction p -> q.
template <class Real>
Intersection<Real> circle_intersection(const std::array<Real, 2>& p, Real r1, const std::array<Real, 2>& q, Real r2) {
  Intersection<Real> out;
  const Real dx = q[0] - p[0];
  const Real dy = q[1] - p[1];
  const Real d2 = dx * dx + dy * dy;
  if (d2 == 0) {
    if (r1 == r2) throw DegenerateInput("coincident circle centres with equal radii");
    return out;
  }
  const Real d = std::sqrt(d2);
  const Real a = (d2 + r1 * r1 - r2 * r2) / (2 * d);
  const Real h2 = r1 * r1 - a * a;
  const Real ux = dx / d;
  const Real uy = dy / d;
  const std::array<Real, 2> foot{p[0] + a * ux, p[1] + a * uy};
  if (std::abs(h2) <= Real(kTangencyTolerance)) {
    out.points.push_back(foot);
    out.tangent = true;
    return out;
  }
  if (h2 < 0) return out;
  const Real h = std::sqrt(h2);
  out.points.push_back({foot[0] - h * uy, foot[1] + h * ux});
  out.points.push_back({foot[0] + h * uy, foot[1] - h * ux});
  return out;
}

template <class Real>
Real residual(const Framework& f, const std::vector<std::array<Real, 2>>& pts) {
  Real worst = 0;
  for (const auto& [e, len] : f.lengths()) {
    const auto& a = pts[e.u - 1];
    const auto& b = pts[e.v - 1];
    const Real l = to_real<Real>(len);
    const Real dist = std::hypot(a[0] - b[0], a[1] - b[1]);
    worst = std::max(worst, std::abs(dist - l) / l);
  }
  return worst;
}

}  // namespace detail

/// Every real embedding of a Henneberg I framework, vertex labels following
/// the sequence. Mirror images across the v1v2 axis are reported separately.
/// Output is ordered by the branch sign vector (+1 before -1).
template <class Real = long double>
std::vector<Embedding<Real>> enumerate_h1(const Framework& f, const HennebergSequence& seq) {
  if (!seq.only_step_one()) throw InputError("enumerate_h1 needs a Henneberg I sequence");
  if (!(henneberg_apply(seq) == f.graph())) throw InputError("framework graph does not match the Henneberg sequence");
  const Real l12 = to_real<Real>(f.length({1, 2}));
  const Real l13 = to_real<Real>(f.length({1, 3}));
  const Real l23 = to_real<Real>(f.length({2, 3}));
  if (!(l12 < l13 + l23 && l13 < l12 + l23 && l23 < l12 + l13))
    throw InputError("base triangle lengths violate the strict triangle inequality");

  struct Placement {
    int a, b;
    Real ra, rb;
  };
  std::vector<Placement> plan{{1, 2, l13, l23}};
  int v = 4;
  for (const auto& step : seq.steps) {
    const auto& s = std::get<StepI>(step);
    plan.push_back({s.a, s.b, to_real<Real>(f.length({s.a, v})), to_real<Real>(f.length({s.b, v}))});
    ++v;
  }

  const int n = f.graph().vertex_count();
  std::vector<Embedding<Real>> out;
  Embedding<Real> current;
  current.points.assign(static_cast<std::size_t>(n), {Real(0), Real(0)});
  current.points[1] = {l12, Real(0)};

  auto place = [&](auto&& self, std::size_t i) -> void {
    if (i == plan.size()) {
      Embedding<Real> e = current;
      e.residual = detail::residual(f, e.points);
      out.push_back(std::move(e));
      return;
    }
    const auto& pl = plan[i];
    auto hits = detail::circle_intersection(current.points[pl.a - 1], pl.ra, current.points[pl.b - 1], pl.rb);
    const bool saved_tangent = current.tangent;
    for (std::size_t h = 0; h < hits.points.size(); ++h) {
      current.points[i + 2] = hits.points[h];
      current.branch.push_back(hits.tangent ? 0 : (h == 0 ? 1 : -1));
      current.tangent = saved_tangent || hits.tangent;
      self(self, i + 1);
      current.branch.pop_back();
    }
    current.tangent = saved_tangent;
  };
  place(place, 0);
  return out;
}

/// True iff every edge length matches within relative tolerance `tol`.
template <class Real>
bool verify_embedding(const Framework& f, const Embedding<Real>& e, const Rational& tol) {
  if (e.points.size() != static_cast<std::size_t>(f.graph().vertex_count())) return false;
  return detail::residual(f, e.points) <= to_real<Real>(tol);
}

/// Mirror image across the x-axis.
template <class Real>
Embedding<Real> reflect(const Embedding<Real>& e) {
  Embedding<Real> r = e;
  for (auto& p : r.points) p[1] = -p[1];
  for (auto& b : r.branch) b = -b;
  return r;
}

}  // namespace lamanbkk
