#pragma once

// Mixed volumes by mixed-cell enumeration.
//
// Each polytope P_j gets a linear lifting vector mu_j. A choice of one edge
// [a_j, b_j] per polytope is a mixed cell of the induced coherent subdivision
// iff some alpha in Q^k makes every chosen edge the face of P_j minimising
// <alpha + mu_j, .>. Cells are found by depth-first branch-and-prune over
// edge choices, pruning with the LP restricted to the polytopes chosen so
// far. The fully mixed volume is the sum of |det E| over the cells, E being
// the matrix of edge vectors.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lamanbkk/errors.hpp"
#include "lamanbkk/graph.hpp"
#include "lamanbkk/poly_system.hpp"
#include "lamanbkk/polytope.hpp"
#include "lamanbkk/rational.hpp"
#include "lamanbkk/rational_lp.hpp"

namespace lamanbkk {

struct Lifting {
  std::vector<QVector> vectors;  // one per polytope, length = ambient dimension
};

enum class CellStatus { Strict, Tie, No };

struct MixedCellRecord {
  EdgeCell cell;
  std::vector<std::size_t> polytope;  // polytope index of each cell edge
  Rational det;
  bool strict = true;
};

enum class MVMethod { Enumeration, SeparationEnumeration, Certificate, InclusionExclusion };

inline std::string to_string(MVMethod m) {
  switch (m) {
    case MVMethod::Enumeration: return "enumeration";
    case MVMethod::SeparationEnumeration: return "separation+enumeration";
    case MVMethod::Certificate: return "certificate";
    case MVMethod::InclusionExclusion: return "inclusion_exclusion";
  }
  return "enumeration";
}

/// One factor of a separated mixed volume.
struct BlockResult {
  std::vector<std::size_t> coordinates;  // ambient coordinates of the block
  std::vector<std::size_t> polytopes;    // indices into the input list
  Rational value;
  std::vector<MixedCellRecord> cells;
  std::uint64_t lifting_seed = 0;
};

struct MVResult {
  Rational value;
  std::vector<MixedCellRecord> cells;  // Enumeration and Certificate
  std::uint64_t lifting_seed = 0;
  MVMethod method = MVMethod::Enumeration;
  std::vector<BlockResult> blocks;  // SeparationEnumeration
};

/// Raised when a complete edge choice ties under the lifting (non-generic).
class NonGenericLifting : public Error {
 public:
  NonGenericLifting(const std::string& what, std::vector<EdgeCell> cells) : Error(what), cells_(std::move(cells)) {}
  const std::vector<EdgeCell>& cells() const { return cells_; }

 private:
  std::vector<EdgeCell> cells_;
};

struct EnumerationOptions {
  unsigned threads = 1;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

inline constexpr int kLiftingRetries = 32;

/// Seeded pseudorandom lifting with entries p/q, 0 <= p < 2^20, 1 <= q <= 2^10.
inline Lifting random_lifting(const std::vector<RationalPolytope>& polytopes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(0, (1L << 20) - 1);
  std::uniform_int_distribution<long> den(1, 1L << 10);
  Lifting lift;
  for (const auto& p : polytopes) {
    QVector mu(p.dim());
    for (auto& x : mu) {
      long a = num(rng);
      long b = den(rng);
      x = Rational(a, b);
      x.canonicalize();
    }
    lift.vectors.push_back(std::move(mu));
  }
  return lift;
}

/// Evaluates the mixed-cell criterion in closed form: with E the edge
/// matrix (columns t_j - l_j), the cell is mixed iff E is non-singular and
///   (<mu_1 - mu_i, e_1>, ..., <mu_k - mu_i, e_k>) E^{-1} (l_i - v) >= 0
/// for every polytope i and every vertex v of P_i off the chosen edge.
inline CellStatus is_mixed_cell(const EdgeCell& cell, const std::vector<RationalPolytope>& polytopes,
                                const Lifting& lifting) {
  const std::size_t k = polytopes.size();
  if (cell.edges.size() != k || lifting.vectors.size() != k) throw InputError("is_mixed_cell: size mismatch");
  QMatrix et(k, QVector(k));  // E transposed: row j = e_j
  std::vector<QVector> e(k);
  for (std::size_t j = 0; j < k; ++j) {
    e[j] = cell.edges[j].first - cell.edges[j].second;
    et[j] = e[j];
  }
  const auto et_inv = inverse(et);
  if (!et_inv) return CellStatus::No;
  QVector own(k);
  for (std::size_t j = 0; j < k; ++j) own[j] = dot(lifting.vectors[j], e[j]);
  bool tie = false;
  for (std::size_t i = 0; i < k; ++i) {
    // Row vector r with r_j = <mu_j - mu_i, e_j>; w E = r, i.e. w^T = E^-T r^T.
    QVector r(k);
    for (std::size_t j = 0; j < k; ++j) r[j] = own[j] - dot(lifting.vectors[i], e[j]);
    const QVector w = multiply(*et_inv, r);
    for (const auto& v : polytopes[i].vertices()) {
      if (v == cell.edges[i].first || v == cell.edges[i].second) continue;
      Rational val = dot(w, cell.edges[i].second - v);
      if (val < 0) return CellStatus::No;
      if (val == 0) tie = true;
    }
  }
  return tie ? CellStatus::Tie : CellStatus::Strict;
}

namespace detail {

class CellEnumerator {
 public:
  CellEnumerator(const std::vector<RationalPolytope>& polytopes, const Lifting& lifting,
                 const EnumerationOptions& options)
      : polys_(polytopes), lift_(lifting), options_(options), k_(polytopes.size()) {
    if (k_ == 0) return;
    for (const auto& p : polys_)
      if (p.dim() != k_) throw InputError("enumerate_mixed_cells needs k polytopes in R^k");
    if (lift_.vectors.size() != k_) throw InputError("lifting has the wrong number of vectors");
    for (const auto& mu : lift_.vectors)
      if (mu.size() != k_) throw InputError("lifting vector has the wrong length");
    edges_.resize(k_);
    for (std::size_t j = 0; j < k_; ++j) edges_[j] = polys_[j].edges();
    order_.resize(k_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return edges_[a].size() < edges_[b].size(); });
    build_pair_table();
  }

  std::vector<MixedCellRecord> run() {
    if (k_ == 0) return {};
    for (const auto& e : edges_)
      if (e.empty()) return {};
    // Tasks: feasible prefixes, deepened until there are enough to balance
    // the workers. Task order (and so output order) does not depend on timing.
    const unsigned threads = std::max(1u, options_.threads);
    std::vector<std::vector<std::size_t>> tasks{{}};
    while (threads > 1 && tasks.size() < 16 * threads && tasks.front().size() + 1 < k_) {
      std::vector<std::vector<std::size_t>> deeper;
      for (auto& t : tasks) {
        for (std::size_t e : candidates(t)) {
          t.push_back(e);
          if (t.size() <= 2 || prefix_feasible(chosen_edges(t))) deeper.push_back(t);
          t.pop_back();
        }
      }
      tasks = std::move(deeper);
      if (tasks.empty()) return {};
    }
    std::vector<std::vector<MixedCellRecord>> found(tasks.size());
    std::vector<std::vector<EdgeCell>> ties(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      for (;;) {
        std::size_t t = next.fetch_add(1);
        if (t >= tasks.size()) return;
        try {
          auto choice = tasks[t];
          dfs(choice, found[t], ties[t]);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = tasks.size();
          return;
        }
      }
    };
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<EdgeCell> all_ties;
    for (auto& t : ties) all_ties.insert(all_ties.end(), t.begin(), t.end());
    if (!all_ties.empty())
      throw NonGenericLifting("lifting is not generic: " + std::to_string(all_ties.size()) + " tied cell(s)",
                              std::move(all_ties));
    std::vector<MixedCellRecord> cells;
    for (auto& f : found)
      for (auto& c : f) cells.push_back(std::move(c));
    std::sort(cells.begin(), cells.end(), [](const MixedCellRecord& a, const MixedCellRecord& b) {
      auto key = [](const MixedCellRecord& r) {
        std::vector<std::size_t> v;
        for (const auto& e : r.cell.edges) {
          v.push_back(e.first_index);
          v.push_back(e.second_index);
        }
        return v;
      };
      return key(a) < key(b);
    });
    return cells;
  }

 private:
  using EdgeIdx = std::pair<std::size_t, std::size_t>;

  // choice[l] is the edge index chosen for polytope order_[l].
  void check_deadline() const {
    if (options_.deadline && std::chrono::steady_clock::now() > *options_.deadline)
      throw TimeoutError("mixed volume enumeration exceeded its time budget");
  }

  // The equalities <alpha + mu_j, a_j - b_j> = 0 of the chosen edges are
  // solved for alpha = alpha0 + N beta; the LP then runs over beta only.
  struct Reduced {
    std::vector<QVector> rows;  // coefficient rows in beta
    QVector rhs;                // rows * beta >= rhs (- t with a margin)
    std::size_t free = 0;
  };

  Reduced reduce(const std::vector<std::pair<std::size_t, EdgeIdx>>& chosen) const {
    const std::size_t m = chosen.size();
    QMatrix a(m);
    QVector b(m);
    for (std::size_t r = 0; r < m; ++r) {
      const auto& [j, e] = chosen[r];
      const auto& verts = polys_[j].vertices();
      a[r] = verts[e.first] - verts[e.second];
      b[r] = -dot(lift_.vectors[j], a[r]);
    }
    // Reduced row echelon form.
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < k_ && row < m; ++c) {
      std::size_t p = row;
      while (p < m && a[p][c] == 0) ++p;
      if (p == m) continue;
      std::swap(a[p], a[row]);
      std::swap(b[p], b[row]);
      Rational inv = 1 / a[row][c];
      for (std::size_t cc = c; cc < k_; ++cc) a[row][cc] *= inv;
      b[row] *= inv;
      for (std::size_t r = 0; r < m; ++r) {
        if (r == row || a[r][c] == 0) continue;
        Rational f = a[r][c];
        for (std::size_t cc = c; cc < k_; ++cc) a[r][cc] -= f * a[row][cc];
        b[r] -= f * b[row];
      }
      pivots.push_back(c);
      ++row;
    }
    if (row != m) throw InternalError("dependent edge directions reached the LP");
    std::vector<bool> is_pivot(k_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    QVector alpha0(k_);
    for (std::size_t r = 0; r < m; ++r) alpha0[pivots[r]] = b[r];
    std::vector<QVector> basis;  // columns of N
    for (std::size_t f = 0; f < k_; ++f) {
      if (is_pivot[f]) continue;
      QVector col(k_);
      col[f] = 1;
      for (std::size_t r = 0; r < m; ++r) col[pivots[r]] = -a[r][f];
      basis.push_back(std::move(col));
    }
    Reduced out;
    out.free = basis.size();
    for (const auto& [j, e] : chosen) {
      const auto& verts = polys_[j].vertices();
      const QVector& mu = lift_.vectors[j];
      for (std::size_t v = 0; v < verts.size(); ++v) {
        if (v == e.first || v == e.second) continue;
        QVector d = verts[v] - verts[e.first];
        QVector coef(out.free);
        for (std::size_t q = 0; q < out.free; ++q) coef[q] = dot(d, basis[q]);
        out.rows.push_back(std::move(coef));
        out.rhs.push_back(-dot(d, mu) - dot(d, alpha0));
      }
    }
    return out;
  }

  bool prefix_feasible(const std::vector<std::pair<std::size_t, EdgeIdx>>& chosen) const {
    Reduced red = reduce(chosen);
    if (red.free == 0)
      return std::all_of(red.rhs.begin(), red.rhs.end(), [](const Rational& r) { return r <= 0; });
    LinearProgram lp(red.free);
    for (std::size_t i = 0; i < red.rows.size(); ++i)
      lp.add(std::move(red.rows[i]), Relation::GreaterEqual, red.rhs[i]);
    return solve(lp, {.certificates = false}).status == LPStatus::Optimal;
  }

  // Optimal margin t <= 1 of a complete choice: <alpha + mu_j, v - a_j> >= t.
  std::optional<Rational> margin(const std::vector<std::pair<std::size_t, EdgeIdx>>& chosen) const {
    Reduced red = reduce(chosen);
    const std::size_t nv = red.free + 1;
    LinearProgram lp(nv);
    lp.objective[red.free] = 1;
    lp.upper[red.free] = Rational(1);
    for (std::size_t i = 0; i < red.rows.size(); ++i) {
      QVector row = std::move(red.rows[i]);
      row.push_back(-1);
      lp.add(std::move(row), Relation::GreaterEqual, red.rhs[i]);
    }
    LPOutcome out = solve(lp, {.certificates = false});
    if (out.status != LPStatus::Optimal) return std::nullopt;
    return out.value;
  }

  void build_pair_table() {
    // compatible_[a][b][ea * |E_b| + eb] for a < b in polytope index space.
    pair_.assign(k_, std::vector<std::vector<char>>(k_));
    for (std::size_t a = 0; a < k_; ++a)
      for (std::size_t b = a + 1; b < k_; ++b) {
        auto& table = pair_[a][b];
        table.assign(edges_[a].size() * edges_[b].size(), 0);
        for (std::size_t ea = 0; ea < edges_[a].size(); ++ea)
          for (std::size_t eb = 0; eb < edges_[b].size(); ++eb) {
            check_deadline();
            if (!independent(a, ea, b, eb)) continue;
            table[ea * edges_[b].size() + eb] =
                prefix_feasible({{a, edges_[a][ea]}, {b, edges_[b][eb]}}) ? 1 : 0;
          }
      }
  }

  QVector edge_vector(std::size_t j, std::size_t e) const {
    const auto& verts = polys_[j].vertices();
    return verts[edges_[j][e].first] - verts[edges_[j][e].second];
  }

  bool independent(std::size_t a, std::size_t ea, std::size_t b, std::size_t eb) const {
    return rank({edge_vector(a, ea), edge_vector(b, eb)}) == 2;
  }

  bool pair_ok(std::size_t a, std::size_t ea, std::size_t b, std::size_t eb) const {
    if (a > b) {
      std::swap(a, b);
      std::swap(ea, eb);
    }
    return pair_[a][b][ea * edges_[b].size() + eb] != 0;
  }

  std::vector<std::pair<std::size_t, EdgeIdx>> chosen_edges(const std::vector<std::size_t>& choice) const {
    std::vector<std::pair<std::size_t, EdgeIdx>> out;
    for (std::size_t l = 0; l < choice.size(); ++l) out.emplace_back(order_[l], edges_[order_[l]][choice[l]]);
    return out;
  }

  // Candidate edges for the next level that pass the pairwise table and keep
  // the chosen edge vectors linearly independent.
  std::vector<std::size_t> candidates(const std::vector<std::size_t>& choice) const {
    const std::size_t level = choice.size();
    const std::size_t j = order_[level];
    QMatrix basis;
    for (std::size_t l = 0; l < level; ++l) basis.push_back(edge_vector(order_[l], choice[l]));
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < edges_[j].size(); ++e) {
      bool ok = true;
      for (std::size_t l = 0; l < level && ok; ++l) ok = pair_ok(order_[l], choice[l], j, e);
      if (!ok) continue;
      basis.push_back(edge_vector(j, e));
      ok = rank(basis) == basis.size();
      basis.pop_back();
      if (ok) out.push_back(e);
    }
    return out;
  }

  void dfs(std::vector<std::size_t>& choice, std::vector<MixedCellRecord>& found, std::vector<EdgeCell>& ties) const {
    check_deadline();
    if (choice.size() == k_) {
      emit(choice, found, ties);
      return;
    }
    for (std::size_t e : candidates(choice)) {
      choice.push_back(e);
      // Pairs were already certified; deeper prefixes need the LP. The last
      // level is decided by the margin LP in emit().
      if (choice.size() == k_ || choice.size() <= 2 || prefix_feasible(chosen_edges(choice))) dfs(choice, found, ties);
      choice.pop_back();
    }
  }

  void emit(const std::vector<std::size_t>& choice, std::vector<MixedCellRecord>& found,
            std::vector<EdgeCell>& ties) const {
    auto chosen = chosen_edges(choice);
    std::sort(chosen.begin(), chosen.end());
    MixedCellRecord rec;
    for (const auto& [j, e] : chosen) {
      const auto& verts = polys_[j].vertices();
      rec.cell.edges.push_back({verts[e.first], verts[e.second], e.first, e.second});
      rec.polytope.push_back(j);
    }
    rec.det = edge_matrix_det(rec.cell);
    if (rec.det == 0) return;
    auto m = margin(chosen);
    if (!m || *m < 0) return;
    if (*m == 0) {
      ties.push_back(rec.cell);
      return;
    }
    if (is_mixed_cell(rec.cell, polys_, lift_) != CellStatus::Strict)
      throw InternalError("enumerated cell fails the closed-form mixed-cell criterion");
    rec.strict = true;
    found.push_back(std::move(rec));
  }

  const std::vector<RationalPolytope>& polys_;
  const Lifting& lift_;
  EnumerationOptions options_;
  std::size_t k_;
  std::vector<std::vector<EdgeIdx>> edges_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::vector<char>>> pair_;
};

}  // namespace detail

/// Exact set of mixed cells of the subdivision induced by `lifting`.
/// Throws NonGenericLifting when a complete choice ties.
inline std::vector<MixedCellRecord> enumerate_mixed_cells(const std::vector<RationalPolytope>& polytopes,
                                                          const Lifting& lifting,
                                                          const EnumerationOptions& options = {}) {
  detail::CellEnumerator en(polytopes, lifting, options);
  return en.run();
}

inline Rational sum_abs_det(const std::vector<MixedCellRecord>& cells) {
  Rational s = 0;
  for (const auto& c : cells) s += abs(c.det);
  return s;
}

/// MV_k(P_1, d_1; ...; P_r, d_r) by replicating each polytope d_i times and
/// enumerating mixed cells, re-seeding on non-generic liftings.
inline MVResult mixed_volume(const std::vector<RationalPolytope>& polytopes, const std::vector<int>& multiplicities,
                             std::uint64_t seed, const EnumerationOptions& options = {}) {
  if (multiplicities.size() != polytopes.size()) throw InputError("one multiplicity per polytope is required");
  std::vector<RationalPolytope> replicated;
  for (std::size_t i = 0; i < polytopes.size(); ++i) {
    if (multiplicities[i] < 0) throw InputError("negative multiplicity");
    for (int c = 0; c < multiplicities[i]; ++c) replicated.push_back(polytopes[i]);
  }
  for (const auto& p : replicated)
    if (p.dim() != replicated.size()) throw InputError("multiplicities must sum to the ambient dimension");
  MVResult result;
  result.method = MVMethod::Enumeration;
  if (replicated.empty()) {
    result.value = 1;
    result.lifting_seed = seed;
    return result;
  }
  std::vector<EdgeCell> offending;
  for (int attempt = 0; attempt < kLiftingRetries; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    try {
      result.cells = enumerate_mixed_cells(replicated, random_lifting(replicated, s), options);
      result.value = sum_abs_det(result.cells);
      result.lifting_seed = s;
      return result;
    } catch (const NonGenericLifting& e) {
      offending.insert(offending.end(), e.cells().begin(), e.cells().end());
    }
  }
  throw NonGenericLifting("no generic lifting found after " + std::to_string(kLiftingRetries) + " seeds",
                          std::move(offending));
}

inline MVResult mixed_volume(const std::vector<RationalPolytope>& polytopes, std::uint64_t seed,
                             const EnumerationOptions& options = {}) {
  return mixed_volume(polytopes, std::vector<int>(polytopes.size(), 1), seed, options);
}

// ---------------------------------------------------------------------------
// Separation into coordinate blocks

struct SeparationBlock {
  std::vector<std::size_t> coordinates;  // ambient coordinates kept, ascending
  std::vector<std::size_t> polytopes;    // indices into the input list
  std::vector<RationalPolytope> projected;
};

struct Separation {
  bool zero = false;  // some polytope set spans too few directions: MV = 0
  std::vector<SeparationBlock> blocks;
};

namespace detail {

// Coordinates in which the polytope is not constant.
inline std::vector<bool> used_coordinates(const RationalPolytope& p, const std::vector<std::size_t>& coords) {
  std::vector<bool> used(coords.size(), false);
  const auto& v = p.vertices();
  for (std::size_t c = 0; c < coords.size(); ++c)
    for (std::size_t i = 1; i < v.size() && !used[c]; ++i)
      if (v[i][coords[c]] != v[0][coords[c]]) used[c] = true;
  return used;
}

inline RationalPolytope project(const RationalPolytope& p, const std::vector<std::size_t>& coords) {
  std::vector<QVector> pts;
  for (const auto& v : p.vertices()) {
    QVector q;
    for (std::size_t c : coords) q.push_back(v[c]);
    pts.push_back(std::move(q));
  }
  return hull_vertices(pts);
}

inline void split_recursive(const std::vector<RationalPolytope>& all, std::vector<std::size_t> polys,
                            std::vector<std::size_t> coords, Separation& out) {
  const std::size_t m = polys.size();
  if (m != coords.size()) throw InputError("separation needs as many polytopes as coordinates");
  std::vector<std::vector<bool>> used(m);
  for (std::size_t i = 0; i < m; ++i) used[i] = used_coordinates(all[polys[i]], coords);

  // Perfect matching polytope -> coordinate by augmenting paths.
  std::vector<int> match_coord(m, -1), match_poly(m, -1);
  std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t p, std::vector<bool>& seen) {
    for (std::size_t c = 0; c < m; ++c) {
      if (!used[p][c] || seen[c]) continue;
      seen[c] = true;
      if (match_poly[c] < 0 || augment(static_cast<std::size_t>(match_poly[c]), seen)) {
        match_poly[c] = static_cast<int>(p);
        match_coord[p] = static_cast<int>(c);
        return true;
      }
    }
    return false;
  };
  for (std::size_t p = 0; p < m; ++p) {
    std::vector<bool> seen(m, false);
    if (!augment(p, seen)) {
      out.zero = true;
      return;
    }
  }

  // p -> q when p uses the coordinate matched to q. A sink strongly
  // connected component is a polytope set living in its own coordinates.
  std::vector<std::vector<std::size_t>> succ(m);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t c = 0; c < m; ++c)
      if (used[p][c] && static_cast<std::size_t>(match_poly[c]) != p) succ[p].push_back(match_poly[c]);

  // Tarjan.
  std::vector<int> index(m, -1), low(m, 0), comp(m, -1);
  std::vector<bool> on_stack(m, false);
  std::vector<std::size_t> stack;
  int counter = 0, ncomp = 0;
  std::function<void(std::size_t)> strong = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w : succ[v]) {
      if (index[w] < 0) {
        strong(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      for (;;) {
        std::size_t w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = ncomp;
        if (w == v) break;
      }
      ++ncomp;
    }
  };
  for (std::size_t v = 0; v < m; ++v)
    if (index[v] < 0) strong(v);

  if (ncomp == 1) {
    SeparationBlock b;
    b.coordinates = coords;
    b.polytopes = polys;
    for (std::size_t p : polys) b.projected.push_back(project(all[p], coords));
    out.blocks.push_back(std::move(b));
    return;
  }
  std::vector<bool> is_sink(ncomp, true);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q : succ[p])
      if (comp[p] != comp[q]) is_sink[comp[p]] = false;
  int sink = -1;
  for (std::size_t p = 0; p < m && sink < 0; ++p)
    if (is_sink[comp[p]]) sink = comp[p];

  std::vector<std::size_t> inner_polys, inner_coords, rest_polys, rest_coords;
  std::vector<bool> coord_inner(m, false);
  for (std::size_t p = 0; p < m; ++p) {
    if (comp[p] == sink) {
      inner_polys.push_back(polys[p]);
      coord_inner[match_coord[p]] = true;
    } else {
      rest_polys.push_back(polys[p]);
    }
  }
  for (std::size_t c = 0; c < m; ++c) (coord_inner[c] ? inner_coords : rest_coords).push_back(coords[c]);
  split_recursive(all, inner_polys, inner_coords, out);
  if (out.zero) return;
  split_recursive(all, rest_polys, rest_coords, out);
}

}  // namespace detail

/// Splits k polytopes in R^k into blocks such that MV is the product of the
/// block mixed volumes: a polytope set confined to its own coordinate
/// subspace (up to translation) is separated, the rest is projected away
/// from those coordinates, and both parts are split again.
inline Separation separation_split(const std::vector<RationalPolytope>& polytopes) {
  Separation out;
  if (polytopes.empty()) return out;
  const std::size_t k = polytopes.front().dim();
  if (polytopes.size() != k) throw InputError("separation_split needs k polytopes in R^k");
  std::vector<std::size_t> polys(k), coords(k);
  std::iota(polys.begin(), polys.end(), 0);
  std::iota(coords.begin(), coords.end(), 0);
  detail::split_recursive(polytopes, polys, coords, out);
  if (out.zero) out.blocks.clear();
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const SeparationBlock& a, const SeparationBlock& b) { return a.coordinates < b.coordinates; });
  return out;
}

/// Mixed volume through separation_split with one enumeration per block.
inline MVResult mixed_volume_separated(const std::vector<RationalPolytope>& polytopes, std::uint64_t seed,
                                       const EnumerationOptions& options = {}) {
  MVResult result;
  result.method = MVMethod::SeparationEnumeration;
  result.lifting_seed = seed;
  Separation sep = separation_split(polytopes);
  if (sep.zero) {
    result.value = 0;
    return result;
  }
  result.value = 1;
  for (auto& block : sep.blocks) {
    MVResult part = mixed_volume(block.projected, seed, options);
    BlockResult br;
    br.coordinates = block.coordinates;
    br.polytopes = block.polytopes;
    br.value = part.value;
    br.cells = std::move(part.cells);
    br.lifting_seed = part.lifting_seed;
    result.value *= br.value;
    result.blocks.push_back(std::move(br));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Inclusion-exclusion oracle

/// MV_k(P_1..P_k) = sum over non-empty S of (-1)^(k-|S|) vol_k(sum_{i in S} P_i).
inline Rational mv_inclusion_exclusion(const std::vector<RationalPolytope>& polytopes) {
  const std::size_t k = polytopes.size();
  if (k == 0) return 1;
  if (k > kMaxVolumeDim) throw CapabilityError("inclusion-exclusion oracle is limited to dimension <= 6");
  for (const auto& p : polytopes)
    if (p.dim() != k) throw InputError("mv_inclusion_exclusion needs k polytopes in R^k");
  Rational total = 0;
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::vector<QVector> sum{QVector(k)};
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask >> i & 1u)) continue;
      std::vector<QVector> next;
      next.reserve(sum.size() * polytopes[i].vertex_count());
      for (const auto& a : sum)
        for (const auto& b : polytopes[i].vertices()) next.push_back(a + b);
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      sum = std::move(next);
    }
    Rational vol = hull_volume(sum);
    if ((k - static_cast<std::size_t>(__builtin_popcount(mask))) % 2 == 0)
      total += vol;
    else
      total -= vol;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Coherent subdivision in the plane

struct SubdivisionCell {
  std::vector<std::vector<std::size_t>> faces;  // vertex indices per polytope
  std::vector<int> type;                        // face dimensions
  Rational area;
};

/// All cells of the coherent subdivision of P_1 + ... + P_r in R^2 induced by
/// linear liftings: a face choice (F_i) is a cell iff some alpha makes each
/// F_i exactly the minimiser of <alpha + mu_i, .> over P_i, with the face
/// dimensions summing to 2.
inline std::vector<SubdivisionCell> coherent_subdivision_2d(const std::vector<RationalPolytope>& polytopes,
                                                            const Lifting& lifting) {
  for (const auto& p : polytopes)
    if (p.dim() != 2) throw InputError("coherent_subdivision_2d works in the plane");
  struct Face {
    std::vector<std::size_t> ids;
    int dim;
  };
  std::vector<std::vector<Face>> faces(polytopes.size());
  for (std::size_t i = 0; i < polytopes.size(); ++i) {
    const auto& p = polytopes[i];
    for (std::size_t v = 0; v < p.vertex_count(); ++v) faces[i].push_back({{v}, 0});
    for (auto [a, b] : p.edges()) faces[i].push_back({{a, b}, 1});
    QMatrix diffs;
    for (const auto& v : p.vertices()) diffs.push_back(v - p.vertices()[0]);
    if (rank(diffs) == 2) {
      std::vector<std::size_t> all(p.vertex_count());
      std::iota(all.begin(), all.end(), 0);
      faces[i].push_back({all, 2});
    }
  }
  std::vector<SubdivisionCell> cells;
  std::vector<std::size_t> pick(polytopes.size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int dim_sum) {
    if (dim_sum > 2) return;
    if (i == polytopes.size()) {
      if (dim_sum != 2) return;
      LinearProgram lp(3);
      lp.objective[2] = 1;
      lp.upper[2] = Rational(1);
      for (std::size_t j = 0; j < polytopes.size(); ++j) {
        const auto& verts = polytopes[j].vertices();
        const auto& face = faces[j][pick[j]].ids;
        const QVector& mu = lifting.vectors[j];
        const QVector& anchor = verts[face[0]];
        for (std::size_t v = 0; v < verts.size(); ++v) {
          QVector d = verts[v] - anchor;
          Rational rhs = -dot(mu, d);
          bool in_face = std::find(face.begin(), face.end(), v) != face.end();
          QVector row{d[0], d[1], in_face ? Rational(0) : Rational(-1)};
          if (in_face) {
            if (v != face[0]) lp.add(std::move(row), Relation::Equal, rhs);
          } else {
            lp.add(std::move(row), Relation::GreaterEqual, rhs);
          }
        }
      }
      LPOutcome out = solve(lp, {.certificates = false});
      if (out.status != LPStatus::Optimal || out.value <= 0) return;
      SubdivisionCell cell;
      std::vector<QVector> sum{QVector(2)};
      for (std::size_t j = 0; j < polytopes.size(); ++j) {
        const auto& face = faces[j][pick[j]];
        cell.faces.push_back(face.ids);
        cell.type.push_back(face.dim);
        std::vector<QVector> next;
        for (const auto& a : sum)
          for (std::size_t v : face.ids) next.push_back(a + polytopes[j].vertices()[v]);
        sum = std::move(next);
      }
      cell.area = hull_volume(sum);
      cells.push_back(std::move(cell));
      return;
    }
    for (std::size_t f = 0; f < faces[i].size(); ++f) {
      pick[i] = f;
      rec(i + 1, dim_sum + faces[i][f].dim);
    }
  };
  rec(0, 0);
  return cells;
}

// ---------------------------------------------------------------------------
// Graph-level entry points

namespace detail {

inline Framework unit_framework(const Graph& g) {
  std::map<Edge, Rational> lengths;
  for (const auto& e : g.edges()) lengths[e] = 1;
  return Framework(g, std::move(lengths));
}

// Permutation (perm[old] = new) moving `base` to the labels {1,2}.
inline std::vector<int> base_first_permutation(int n, const Edge& base) {
  std::vector<int> perm(n + 1);
  std::iota(perm.begin(), perm.end(), 0);
  auto swap_labels = [&](int a, int b) {
    for (int v = 1; v <= n; ++v) {
      if (perm[v] == a)
        perm[v] = b;
      else if (perm[v] == b)
        perm[v] = a;
    }
  };
  swap_labels(perm[base.u], 1);
  swap_labels(perm[base.v], 2);
  return perm;
}

inline Graph with_base_first(const Graph& g, const Edge& base) {
  return g.relabeled(base_first_permutation(g.vertex_count(), base));
}

}  // namespace detail

/// Certifies that the mixed volume of the SoE equals 4^(n-2): the cell
/// [xi_1,0]+...+[xi_4,0]+[2 xi_5,0]+...+[2 xi_2n,0] is verified to be a mixed
/// cell of volume 2^(2n-4) under mu_j = M*1 - (M-1)*xi_j with M = 4n, which
/// meets the Bezout bound from below.
inline MVResult certify_general_bound(const Graph& graph) {
  if (!check_laman(graph).laman) throw InputError("certify_general_bound needs a Laman graph");
  const Graph g = graph.has_edge(1, 2) ? graph : detail::with_base_first(graph, graph.edges().front());
  const int n = g.vertex_count();
  const std::size_t k = 2 * static_cast<std::size_t>(n);
  Framework f = detail::unit_framework(g);
  PolySystem soe = build_soe(f, Constants::defaults(f.length({1, 2})));
  std::vector<RationalPolytope> polys = newton_polytopes(soe);

  const Rational big = 4 * n;
  Lifting lift;
  for (std::size_t j = 0; j < k; ++j) {
    QVector mu(k, big);
    mu[j] = 1;
    lift.vectors.push_back(std::move(mu));
  }
  MixedCellRecord rec;
  for (std::size_t j = 0; j < k; ++j) {
    QVector tip = unit_vector(k, j, j < 4 ? 1 : 2);
    QVector origin(k);
    auto ti = polys[j].index_of(tip);
    auto oi = polys[j].index_of(origin);
    if (!ti || !oi) throw InternalError("Newton polytope " + std::to_string(j + 1) + " lacks the certificate edge");
    if (!polys[j].is_edge_index(*ti, *oi))
      throw InternalError("certificate segment is not an edge of Newton polytope " + std::to_string(j + 1));
    rec.cell.edges.push_back({tip, origin, *ti, *oi});
    rec.polytope.push_back(j);
  }
  rec.det = edge_matrix_det(rec.cell);
  if (is_mixed_cell(rec.cell, polys, lift) != CellStatus::Strict)
    throw InternalError("certificate cell is not a strict mixed cell");
  Integer expected = 1;
  for (int i = 0; i < n - 2; ++i) expected *= 4;
  if (abs(rec.det) != Rational(expected) || bezout(soe) != expected)
    throw InternalError("certificate volume does not meet the Bezout bound");
  MVResult result;
  result.method = MVMethod::Certificate;
  result.value = abs(rec.det);
  result.cells.push_back(std::move(rec));
  return result;
}

struct GraphMVOptions {
  SystemForm form = SystemForm::SubSoE;
  std::uint64_t seed = 0;
  bool use_separation = true;
  EnumerationOptions enumeration;
};

/// Build system -> Newton polytopes -> (separation) -> enumeration. A graph
/// without the edge {1,2} is relabeled so that its first edge becomes {1,2}.
inline MVResult mv_for_graph(const Framework& input, const GraphMVOptions& options) {
  const Graph& g = input.graph();
  const Framework f = g.has_edge(1, 2)
                          ? input
                          : input.relabeled(detail::base_first_permutation(g.vertex_count(), g.edges().front()));
  const Constants consts = Constants::defaults(f.length({1, 2}));
  PolySystem sys;
  if (options.form == SystemForm::SoE)
    sys = build_soe(f, consts);
  else if (options.form == SystemForm::SubSoE)
    sys = build_subsoe(f, consts);
  else
    throw InputError("mv_for_graph supports the soe and subsoe forms");
  auto polys = newton_polytopes(sys);
  if (options.use_separation) return mixed_volume_separated(polys, options.seed, options.enumeration);
  return mixed_volume(polys, options.seed, options.enumeration);
}

}  // namespace lamanbkk
