#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "lamanbkk/errors.hpp"
#include "lamanbkk/rational.hpp"
#include "lamanbkk/rational_lp.hpp"

namespace lamanbkk {

/// Convex hull of a finite set of rational points, stored by its vertices.
/// Edge queries are certified by LP on first use and memoised; copies share
/// the memo table.
class RationalPolytope {
 public:
  RationalPolytope() : cache_(std::make_shared<EdgeCache>()) {}

  /// `vertices` must already be the extreme points (see hull_vertices).
  RationalPolytope(std::size_t dim, std::vector<QVector> vertices)
      : dim_(dim), vertices_(std::move(vertices)), cache_(std::make_shared<EdgeCache>()) {
    for (const auto& v : vertices_)
      if (v.size() != dim_) throw InputError("vertex dimension mismatch");
  }

  std::size_t dim() const { return dim_; }
  const std::vector<QVector>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }

  std::optional<std::size_t> index_of(const QVector& p) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), p);
    if (it == vertices_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  bool contains_vertex(const QVector& p) const { return index_of(p).has_value(); }

  /// True iff vertices i and j span an edge.
  bool is_edge_index(std::size_t i, std::size_t j) const;

  /// All edges as index pairs (i < j), in lexicographic order.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const;

 private:
  struct EdgeCache {
    std::mutex mutex;
    std::map<std::pair<std::size_t, std::size_t>, bool> known;
    std::optional<std::vector<std::pair<std::size_t, std::size_t>>> all;
  };

  std::size_t dim_ = 0;
  std::vector<QVector> vertices_;
  std::shared_ptr<EdgeCache> cache_;
};

/// Pair of vertex indices per polytope; `first - second` is the edge vector.
struct CellEdge {
  QVector first;
  QVector second;
  std::size_t first_index = 0;
  std::size_t second_index = 0;
};

/// One edge from each of k polytopes in R^k.
struct EdgeCell {
  std::vector<CellEdge> edges;
};

namespace detail {

// Coordinates in which the points are not all equal.
inline std::vector<std::size_t> varying_coordinates(const std::vector<QVector>& pts) {
  std::vector<std::size_t> out;
  if (pts.empty()) return out;
  for (std::size_t d = 0; d < pts.front().size(); ++d)
    for (const auto& p : pts)
      if (p[d] != pts.front()[d]) {
        out.push_back(d);
        break;
      }
  return out;
}

// LP: is p a convex combination of `others`? Only the coordinates in
// `coords` are constrained; the rest must be constant over all points.
inline bool in_convex_hull(const QVector& p, const std::vector<const QVector*>& others,
                           const std::vector<std::size_t>& coords) {
  if (others.empty()) return false;
  const std::size_t m = others.size();
  LinearProgram lp(m);
  for (std::size_t j = 0; j < m; ++j) lp.lower[j] = Rational(0);
  for (std::size_t d : coords) {
    QVector row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = (*others[j])[d];
    lp.add(std::move(row), Relation::Equal, p[d]);
  }
  lp.add(QVector(m, 1), Relation::Equal, 1);
  return solve(lp, {.certificates = false}).status == LPStatus::Optimal;
}

// Margin LP: exists c with <c,a> = <c,b> and <c, v - a> >= t for every other
// vertex v, maximising t <= 1. The pair is an edge iff the optimum is positive.
inline bool edge_by_lp(const std::vector<QVector>& verts, std::size_t a, std::size_t b) {
  if (verts.size() == 2) return true;
  const auto coords = varying_coordinates(verts);
  const std::size_t k = coords.size();
  auto restrict = [&](const QVector& x) {
    QVector r(k + 1);
    for (std::size_t i = 0; i < k; ++i) r[i] = x[coords[i]];
    return r;
  };
  LinearProgram lp(k + 1);
  lp.objective[k] = 1;
  lp.upper[k] = Rational(1);
  lp.add(restrict(verts[a] - verts[b]), Relation::Equal, 0);
  for (std::size_t v = 0; v < verts.size(); ++v) {
    if (v == a || v == b) continue;
    QVector row = restrict(verts[v] - verts[a]);
    row[k] = -1;
    lp.add(std::move(row), Relation::GreaterEqual, 0);
  }
  LPOutcome out = solve(lp, {.certificates = false});
  return out.status == LPStatus::Optimal && out.value > 0;
}

}  // namespace detail

inline bool RationalPolytope::is_edge_index(std::size_t i, std::size_t j) const {
  if (i == j || i >= vertices_.size() || j >= vertices_.size()) throw InputError("edge query needs two distinct vertices");
  auto key = std::minmax(i, j);
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->known.find(key); it != cache_->known.end()) return it->second;
  }
  bool result = detail::edge_by_lp(vertices_, key.first, key.second);
  std::lock_guard lock(cache_->mutex);
  cache_->known[key] = result;
  return result;
}

inline const std::vector<std::pair<std::size_t, std::size_t>>& RationalPolytope::edges() const {
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->all) return *cache_->all;
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (std::size_t j = i + 1; j < vertices_.size(); ++j)
      if (is_edge_index(i, j)) out.emplace_back(i, j);
  std::lock_guard lock(cache_->mutex);
  if (!cache_->all) cache_->all = std::move(out);
  return *cache_->all;
}

/// Keeps exactly the extreme points: p survives iff it is not a convex
/// combination of the remaining distinct points.
inline RationalPolytope hull_vertices(const std::vector<QVector>& points) {
  if (points.empty()) throw InputError("hull_vertices needs at least one point");
  const std::size_t dim = points.front().size();
  for (const auto& p : points)
    if (p.size() != dim) throw InputError("hull_vertices: dimension mismatch");
  std::vector<QVector> uniq = points;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  const auto coords = detail::varying_coordinates(uniq);
  // A unique minimiser or maximiser of a coordinate is a vertex without LP.
  std::vector<bool> extreme(uniq.size(), false);
  for (std::size_t d : coords) {
    std::size_t lo = 0, hi = 0, lo_count = 0, hi_count = 0;
    for (std::size_t i = 0; i < uniq.size(); ++i) {
      const int cl = cmp(uniq[i][d], uniq[lo][d]);
      if (cl < 0) lo = i, lo_count = 1;
      else if (cl == 0) ++lo_count;
      const int ch = cmp(uniq[i][d], uniq[hi][d]);
      if (ch > 0) hi = i, hi_count = 1;
      else if (ch == 0) ++hi_count;
    }
    if (lo_count == 1) extreme[lo] = true;
    if (hi_count == 1) extreme[hi] = true;
  }
  std::vector<QVector> verts;
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    if (extreme[i]) {
      verts.push_back(uniq[i]);
      continue;
    }
    std::vector<const QVector*> others;
    for (std::size_t j = 0; j < uniq.size(); ++j)
      if (j != i) others.push_back(&uniq[j]);
    if (!detail::in_convex_hull(uniq[i], others, coords)) verts.push_back(uniq[i]);
  }
  return RationalPolytope(dim, std::move(verts));
}

inline bool is_edge(const RationalPolytope& p, const QVector& a, const QVector& b) {
  auto ia = p.index_of(a), ib = p.index_of(b);
  if (!ia || !ib) throw InputError("is_edge: point is not a vertex of the polytope");
  if (*ia == *ib) throw InputError("is_edge: endpoints coincide");
  return p.is_edge_index(*ia, *ib);
}

inline RationalPolytope minkowski_sum(const RationalPolytope& p, const RationalPolytope& q) {
  if (p.dim() != q.dim()) throw InputError("minkowski_sum: dimension mismatch");
  std::vector<QVector> pts;
  pts.reserve(p.vertex_count() * q.vertex_count());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) pts.push_back(a + b);
  return hull_vertices(pts);
}

/// Determinant of the matrix whose columns are the cell's edge vectors.
inline Rational edge_matrix_det(const EdgeCell& cell) {
  const std::size_t k = cell.edges.size();
  QMatrix m(k, QVector(k));
  for (std::size_t c = 0; c < k; ++c) {
    if (cell.edges[c].first.size() != k) throw InputError("edge cell is not square");
    QVector e = cell.edges[c].first - cell.edges[c].second;
    for (std::size_t r = 0; r < k; ++r) m[r][c] = e[r];
  }
  return determinant(std::move(m));
}

// ---------------------------------------------------------------------------
// Exact volume

inline constexpr std::size_t kMaxVolumeDim = 6;

namespace detail {

struct Facet {
  std::vector<std::size_t> ids;  // d point indices
  QVector normal;                // outward
  Rational offset;               // <normal, x> <= offset inside
};

// Normal of the hyperplane through d points in R^d (nullspace of differences).
inline QVector hyperplane_normal(const std::vector<const QVector*>& pts) {
  const std::size_t d = pts.front()->size();
  QMatrix m;
  for (std::size_t i = 1; i < pts.size(); ++i) m.push_back(*pts[i] - *pts[0]);
  // Row-reduce to find a nullspace vector.
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < d && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < d; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::size_t free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  QVector n(d);
  n[free_col] = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i) n[pivot_col[i]] = -m[i][free_col];
  return n;
}

inline Rational simplex_volume(const std::vector<const QVector*>& pts) {
  const std::size_t d = pts.front()->size();
  QMatrix m(d, QVector(d));
  for (std::size_t i = 1; i <= d; ++i) {
    QVector diff = *pts[i] - *pts[0];
    for (std::size_t j = 0; j < d; ++j) m[i - 1][j] = diff[j];
  }
  Rational det = determinant(std::move(m));
  if (det < 0) det = -det;
  Integer fact = 1;
  for (std::size_t i = 2; i <= d; ++i) fact *= static_cast<unsigned long>(i);
  return det / Rational(fact);
}

}  // namespace detail

/// Exact d-volume of conv(points) in R^d via a placing triangulation
/// (beneath-beyond): each point beyond the current hull is coned over the
/// visible boundary facets. Returns 0 when the points are not full-dimensional.
inline Rational hull_volume(const std::vector<QVector>& points) {
  if (points.empty()) return 0;
  const std::size_t d = points.front().size();
  if (d > kMaxVolumeDim) throw CapabilityError("exact volume is limited to dimension <= 6");
  std::vector<QVector> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (d == 0) return 1;
  if (d == 1) {
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
    return (*hi)[0] - (*lo)[0];
  }
  // Initial simplex: greedily add affinely independent points.
  std::vector<std::size_t> simplex{0};
  QMatrix diffs;
  for (std::size_t i = 1; i < pts.size() && simplex.size() < d + 1; ++i) {
    diffs.push_back(pts[i] - pts[0]);
    if (rank(diffs) == diffs.size())
      simplex.push_back(i);
    else
      diffs.pop_back();
  }
  if (simplex.size() < d + 1) return 0;

  QVector centre(d);
  for (std::size_t id : simplex)
    for (std::size_t j = 0; j < d; ++j) centre[j] += pts[id][j];
  for (auto& c : centre) c /= static_cast<long>(d + 1);

  auto make_facet = [&](std::vector<std::size_t> ids) {
    std::vector<const QVector*> p;
    for (std::size_t id : ids) p.push_back(&pts[id]);
    detail::Facet f;
    f.normal = detail::hyperplane_normal(p);
    f.offset = dot(f.normal, pts[ids[0]]);
    if (dot(f.normal, centre) > f.offset) {
      for (auto& x : f.normal) x = -x;
      f.offset = -f.offset;
    }
    std::sort(ids.begin(), ids.end());
    f.ids = std::move(ids);
    return f;
  };

  std::vector<detail::Facet> facets;
  for (std::size_t skip = 0; skip <= d; ++skip) {
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i <= d; ++i)
      if (i != skip) ids.push_back(simplex[i]);
    facets.push_back(make_facet(ids));
  }
  std::vector<const QVector*> sp;
  for (std::size_t id : simplex) sp.push_back(&pts[id]);
  Rational volume = detail::simplex_volume(sp);

  std::vector<bool> used(pts.size(), false);
  for (std::size_t id : simplex) used[id] = true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (used[i]) continue;
    const QVector& p = pts[i];
    std::vector<bool> visible(facets.size(), false);
    bool any = false;
    for (std::size_t f = 0; f < facets.size(); ++f)
      if (dot(facets[f].normal, p) > facets[f].offset) visible[f] = any = true;
    if (!any) continue;
    // Horizon ridges appear in exactly one visible facet and one hidden facet.
    std::map<std::vector<std::size_t>, int> ridge_count;
    std::vector<detail::Facet> kept;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (!visible[f]) {
        kept.push_back(std::move(facets[f]));
        continue;
      }
      std::vector<const QVector*> cone{&p};
      for (std::size_t id : facets[f].ids) cone.push_back(&pts[id]);
      volume += detail::simplex_volume(cone);
      for (std::size_t skip = 0; skip < d; ++skip) {
        std::vector<std::size_t> ridge;
        for (std::size_t t = 0; t < d; ++t)
          if (t != skip) ridge.push_back(facets[f].ids[t]);
        ++ridge_count[ridge];
      }
    }
    for (const auto& [ridge, count] : ridge_count) {
      if (count != 1) continue;
      auto ids = ridge;
      ids.push_back(i);
      kept.push_back(make_facet(std::move(ids)));
    }
    facets = std::move(kept);
  }
  return volume;
}

inline Rational volume_exact(const RationalPolytope& p) { return hull_volume(p.vertices()); }

}  // namespace lamanbkk
