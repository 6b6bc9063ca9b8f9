#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "lamanbkk/errors.hpp"
#include "lamanbkk/rational.hpp"

namespace lamanbkk {

/// Unordered vertex pair, stored with u < v. Vertices are labelled 1..n.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

  bool has(int w) const { return u == w || v == w; }
  int other(int w) const { return u == w ? v : u; }
  auto operator<=>(const Edge&) const = default;
};

inline std::string to_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

class Graph {
 public:
  Graph() = default;

  /// Throws InputError on out-of-range labels, loops or duplicate edges.
  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw InputError("negative vertex count");
    for (const auto& e : edges_) {
      if (e.u < 1 || e.v > n_) throw InputError("edge " + to_string(e) + " has a label outside 1.." + std::to_string(n_));
      if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto it = std::adjacent_find(edges_.begin(), edges_.end()); it != edges_.end())
      throw InputError("duplicate edge " + to_string(*it));
    adjacency_.assign(n_ + 1, {});
    for (const auto& e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& a : adjacency_) std::sort(a.begin(), a.end());
  }

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }
  int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }

  bool has_edge(int a, int b) const {
    if (a < 1 || a > n_) return false;
    const auto& adj = adjacency_[a];
    return std::binary_search(adj.begin(), adj.end(), b);
  }
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  /// Edges with both endpoints in `subset`.
  std::size_t spanned_edges(const std::vector<int>& subset) const {
    std::vector<bool> in(n_ + 1, false);
    for (int v : subset) in.at(v) = true;
    std::size_t count = 0;
    for (const auto& e : edges_)
      if (in[e.u] && in[e.v]) ++count;
    return count;
  }

  /// Graph with vertex `v` renamed to `perm[v]` (perm is 1-based, perm[0] unused).
  Graph relabeled(const std::vector<int>& perm) const {
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.emplace_back(perm.at(e.u), perm.at(e.v));
    return Graph(n_, std::move(out));
  }

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// A graph with a positive rational length on every edge.
class Framework {
 public:
  Framework() = default;
  Framework(Graph graph, std::map<Edge, Rational> lengths) : graph_(std::move(graph)), lengths_(std::move(lengths)) {
    if (lengths_.size() != graph_.edge_count()) throw InputError("framework needs exactly one length per edge");
    for (const auto& e : graph_.edges()) {
      auto it = lengths_.find(e);
      if (it == lengths_.end()) throw InputError("edge " + to_string(e) + " has no length");
      if (it->second <= 0) throw InputError("edge " + to_string(e) + " has a non-positive length");
    }
  }

  const Graph& graph() const { return graph_; }
  const std::map<Edge, Rational>& lengths() const { return lengths_; }
  const Rational& length(const Edge& e) const {
    auto it = lengths_.find(e);
    if (it == lengths_.end()) throw InputError("no edge " + to_string(e));
    return it->second;
  }

  /// Vertex v becomes perm[v]; lengths travel with their edges.
  Framework relabeled(const std::vector<int>& perm) const {
    std::map<Edge, Rational> out;
    for (const auto& [e, len] : lengths_) out[Edge(perm.at(e.u), perm.at(e.v))] = len;
    return Framework(graph_.relabeled(perm), std::move(out));
  }

 private:
  Graph graph_;
  std::map<Edge, Rational> lengths_;
};

// ---------------------------------------------------------------------------
// Laman property

struct LamanCheck {
  bool laman = false;
  // A vertex subset of size k spanning more than 2k-3 edges, when the answer
  // is negative for that reason (absent when only the edge count is short).
  std::optional<std::vector<int>> witness;
};

namespace detail {

// (2,3)-pebble game: each vertex holds two pebbles; an edge is independent
// when four pebbles can be gathered on its endpoints.
class PebbleGame {
 public:
  explicit PebbleGame(int n) : pebbles_(n + 1, 2), out_(n + 1) {}

  // Returns nullopt when the edge was accepted, otherwise a vertex set that
  // the edge over-fills: everything reachable from the endpoint that could
  // not get a pebble (without passing the other endpoint), plus that endpoint.
  std::optional<std::vector<int>> add_edge(int u, int v) {
    while (pebbles_[u] + pebbles_[v] < 4) {
      int target = pebbles_[u] < 2 ? u : v;
      int blocked = target == u ? v : u;
      if (!fetch_pebble(target, blocked)) {
        std::vector<bool> seen(pebbles_.size(), false);
        std::vector<int> stack{target}, reached{blocked};
        seen[target] = seen[blocked] = true;
        while (!stack.empty()) {
          int w = stack.back();
          stack.pop_back();
          reached.push_back(w);
          for (int x : out_[w])
            if (!seen[x]) {
              seen[x] = true;
              stack.push_back(x);
            }
        }
        std::sort(reached.begin(), reached.end());
        return reached;
      }
    }
    // Cover the edge with a pebble from u and orient it u -> v.
    --pebbles_[u];
    out_[u].push_back(v);
    return std::nullopt;
  }

 private:
  bool fetch_pebble(int target, int blocked) {
    std::vector<int> parent(pebbles_.size(), -1);
    std::vector<bool> seen(pebbles_.size(), false);
    seen[target] = seen[blocked] = true;
    std::vector<int> stack{target};
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      for (int x : out_[w]) {
        if (seen[x]) continue;
        seen[x] = true;
        parent[x] = w;
        if (pebbles_[x] > 0) {
          // Reverse the path target -> ... -> x.
          --pebbles_[x];
          ++pebbles_[target];
          for (int c = x; c != target; c = parent[c]) reverse_edge(parent[c], c);
          return true;
        }
        stack.push_back(x);
      }
    }
    return false;
  }

  void reverse_edge(int from, int to) {
    auto& out = out_[from];
    out.erase(std::find(out.begin(), out.end(), to));
    out_[to].push_back(from);
  }

  std::vector<int> pebbles_;
  std::vector<std::vector<int>> out_;
};

}  // namespace detail

/// Decides the Laman property with the (2,3)-pebble game.
inline LamanCheck check_laman(const Graph& g) {
  const int n = g.vertex_count();
  const long long target = 2LL * n - 3;
  if (n < 2) return {false, std::nullopt};
  if (static_cast<long long>(g.edge_count()) > target) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    return {false, all};
  }
  detail::PebbleGame game(n);
  for (const auto& e : g.edges()) {
    if (auto reached = game.add_edge(e.u, e.v)) {
      if (g.spanned_edges(*reached) <= 2 * reached->size() - 3)
        throw InternalError("pebble game produced a non-violating witness");
      return {false, reached};
    }
  }
  return {static_cast<long long>(g.edge_count()) == target, std::nullopt};
}

/// Brute-force subset scan of the Laman definition; independent of the pebble game.
inline bool laman_oracle(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 12) throw CapabilityError("laman_oracle is limited to n <= 12");
  if (n < 2 || static_cast<long long>(g.edge_count()) != 2LL * n - 3) return false;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int k = __builtin_popcount(mask);
    if (k < 2) continue;
    int spanned = 0;
    for (const auto& e : g.edges())
      if ((mask >> (e.u - 1) & 1u) && (mask >> (e.v - 1) & 1u)) ++spanned;
    if (spanned > 2 * k - 3) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Henneberg sequences

struct StepI {
  int a = 0, b = 0;
  bool operator==(const StepI&) const = default;
};

struct StepII {
  int a = 0, b = 0, c = 0;
  Edge removed;
  bool operator==(const StepII&) const = default;
};

using HennebergStep = std::variant<StepI, StepII>;

/// Starts from the triangle on 1,2,3; step t (0-based) creates vertex t+4.
struct HennebergSequence {
  std::vector<HennebergStep> steps;

  int vertex_count() const { return 3 + static_cast<int>(steps.size()); }
  bool only_step_one() const {
    return std::all_of(steps.begin(), steps.end(), [](const auto& s) { return std::holds_alternative<StepI>(s); });
  }
};

inline Graph triangle_graph() { return Graph(3, {{1, 2}, {1, 3}, {2, 3}}); }

namespace detail {

inline void apply_step(int new_vertex, const HennebergStep& step, std::set<Edge>& edges) {
  auto exists = [&](int v) { return v >= 1 && v < new_vertex; };
  if (const auto* s1 = std::get_if<StepI>(&step)) {
    if (!exists(s1->a) || !exists(s1->b)) throw SequenceError("step I references a missing vertex");
    if (s1->a == s1->b) throw SequenceError("step I needs two distinct vertices");
    edges.insert({s1->a, new_vertex});
    edges.insert({s1->b, new_vertex});
    return;
  }
  const auto& s2 = std::get<StepII>(step);
  if (!exists(s2.a) || !exists(s2.b) || !exists(s2.c)) throw SequenceError("step II references a missing vertex");
  if (s2.a == s2.b || s2.a == s2.c || s2.b == s2.c) throw SequenceError("step II needs three distinct vertices");
  const Edge r = s2.removed;
  auto among = [&](int v) { return v == s2.a || v == s2.b || v == s2.c; };
  if (!among(r.u) || !among(r.v)) throw SequenceError("step II removes an edge outside its three vertices");
  if (!edges.erase(r)) throw SequenceError("step II removes missing edge " + to_string(r));
  edges.insert({s2.a, new_vertex});
  edges.insert({s2.b, new_vertex});
  edges.insert({s2.c, new_vertex});
}

}  // namespace detail

/// Replays a sequence. `prefixes`, when given, receives every intermediate graph.
inline Graph henneberg_apply(const HennebergSequence& seq, std::vector<Graph>* prefixes = nullptr) {
  std::set<Edge> edges{{1, 2}, {1, 3}, {2, 3}};
  if (prefixes) prefixes->push_back(triangle_graph());
  int v = 4;
  for (const auto& step : seq.steps) {
    detail::apply_step(v, step, edges);
    if (prefixes) prefixes->emplace_back(v, std::vector<Edge>(edges.begin(), edges.end()));
    ++v;
  }
  return Graph(v - 1, std::vector<Edge>(edges.begin(), edges.end()));
}

struct HennebergDecomposition {
  HennebergSequence sequence;
  // relabel[k] is the original label of vertex k of the replayed graph.
  std::vector<int> relabel;

  /// Maps replayed labels back; henneberg_apply(sequence) relabeled this way equals the input graph.
  std::vector<int> to_original() const { return relabel; }
  std::vector<int> from_original() const {
    std::vector<int> inv(relabel.size(), 0);
    for (std::size_t k = 1; k < relabel.size(); ++k) inv[relabel[k]] = static_cast<int>(k);
    return inv;
  }
};

namespace detail {

struct ReverseStep {
  int vertex;            // removed vertex (original label)
  std::vector<int> nbrs; // its neighbours at removal time
  std::optional<Edge> inserted;
};

class Decomposer {
 public:
  Decomposer(const Graph& g, std::vector<int> keep, bool only_step_one)
      : n_(g.vertex_count()), keep_(std::move(keep)), only_step_one_(only_step_one) {
    adj_.assign(n_ + 1, {});
    for (const auto& e : g.edges()) {
      adj_[e.u].insert(e.v);
      adj_[e.v].insert(e.u);
    }
    active_.assign(n_ + 1, true);
    active_[0] = false;
  }

  std::optional<std::vector<ReverseStep>> run() {
    std::vector<ReverseStep> trail;
    if (search(n_, trail)) return trail;
    return std::nullopt;
  }

 private:
  std::string state_key() const {
    std::string key;
    for (int v = 1; v <= n_; ++v) {
      if (!active_[v]) continue;
      for (int w : adj_[v])
        if (w > v) key += std::to_string(v) + ',' + std::to_string(w) + ';';
    }
    return key;
  }

  bool kept(int v) const { return std::find(keep_.begin(), keep_.end(), v) != keep_.end(); }

  Graph current_graph(std::vector<int>& labels) const {
    labels.clear();
    std::vector<int> index(n_ + 1, 0);
    for (int v = 1; v <= n_; ++v)
      if (active_[v]) {
        labels.push_back(v);
        index[v] = static_cast<int>(labels.size());
      }
    std::vector<Edge> edges;
    for (int v : labels)
      for (int w : adj_[v])
        if (w > v) edges.emplace_back(index[v], index[w]);
    return Graph(static_cast<int>(labels.size()), std::move(edges));
  }

  void remove_vertex(int w) {
    for (int x : adj_[w]) adj_[x].erase(w);
    active_[w] = false;
  }
  void restore_vertex(int w) {
    for (int x : adj_[w]) adj_[x].insert(w);
    active_[w] = true;
  }

  bool search(int remaining, std::vector<ReverseStep>& trail) {
    if (remaining == 3) return true;  // three vertices of a Laman graph form a triangle
    std::string key = state_key();
    if (failed_.count(key)) return false;
    for (int deg : {2, 3}) {
      if (deg == 3 && only_step_one_) break;
      for (int w = 1; w <= n_; ++w) {
        if (!active_[w] || kept(w) || static_cast<int>(adj_[w].size()) != deg) continue;
        std::vector<int> nbrs(adj_[w].begin(), adj_[w].end());
        if (deg == 2) {
          remove_vertex(w);
          trail.push_back({w, nbrs, std::nullopt});
          if (search(remaining - 1, trail)) return true;
          trail.pop_back();
          restore_vertex(w);
          continue;
        }
        for (int i = 0; i < 3; ++i)
          for (int j = i + 1; j < 3; ++j) {
            int a = nbrs[i], b = nbrs[j];
            if (adj_[a].count(b)) continue;
            remove_vertex(w);
            adj_[a].insert(b);
            adj_[b].insert(a);
            std::vector<int> labels;
            bool ok = check_laman(current_graph(labels)).laman;
            if (ok) {
              trail.push_back({w, nbrs, Edge(a, b)});
              if (search(remaining - 1, trail)) return true;
              trail.pop_back();
            }
            adj_[a].erase(b);
            adj_[b].erase(a);
            restore_vertex(w);
          }
      }
    }
    failed_.insert(std::move(key));
    return false;
  }

  int n_;
  std::vector<int> keep_;
  bool only_step_one_;
  std::vector<std::set<int>> adj_;
  std::vector<bool> active_;
  std::unordered_set<std::string> failed_;
};

inline HennebergDecomposition assemble(const Graph& g, const std::vector<ReverseStep>& trail,
                                       const std::optional<Edge>& base) {
  const int n = g.vertex_count();
  std::vector<bool> removed(n + 1, false);
  for (const auto& r : trail) removed[r.vertex] = true;
  std::vector<int> tri;
  for (int v = 1; v <= n; ++v)
    if (!removed[v]) tri.push_back(v);
  if (base) {
    std::vector<int> ordered{base->u, base->v};
    for (int v : tri)
      if (!base->has(v)) ordered.push_back(v);
    tri = ordered;
  }
  HennebergDecomposition d;
  d.relabel.assign(n + 1, 0);
  std::vector<int> label(n + 1, 0);
  for (int k = 0; k < 3; ++k) {
    d.relabel[k + 1] = tri[k];
    label[tri[k]] = k + 1;
  }
  int next = 4;
  for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
    d.relabel[next] = it->vertex;
    label[it->vertex] = next;
    const auto& nb = it->nbrs;
    if (!it->inserted) {
      d.sequence.steps.push_back(StepI{label[nb[0]], label[nb[1]]});
    } else {
      d.sequence.steps.push_back(
          StepII{label[nb[0]], label[nb[1]], label[nb[2]], Edge(label[it->inserted->u], label[it->inserted->v])});
    }
    ++next;
  }
  return d;
}

}  // namespace detail

/// Reverse-step decomposition by backtracking. When `base` is given its
/// endpoints are never removed and become vertices 1 and 2 of the sequence.
/// Henneberg I graphs decompose into step I only whenever that is possible
/// with the requested base.
inline HennebergDecomposition henneberg_decompose(const Graph& g, std::optional<Edge> base = std::nullopt) {
  if (!check_laman(g).laman) throw InputError("henneberg_decompose needs a Laman graph");
  if (base && !g.has_edge(*base)) throw InputError("base " + to_string(*base) + " is not an edge");
  std::vector<int> keep;
  if (base) keep = {base->u, base->v};
  for (bool only_one : {true, false}) {
    detail::Decomposer dec(g, keep, only_one);
    if (auto trail = dec.run()) return detail::assemble(g, *trail, base);
  }
  throw InternalError("no Henneberg sequence found for a Laman graph");
}

enum class HennebergClass { HennebergI, HennebergII };

inline std::string to_string(HennebergClass c) { return c == HennebergClass::HennebergI ? "HennebergI" : "HennebergII"; }

/// HennebergI iff some order of degree-2 removals reaches the triangle.
inline HennebergClass classify(const Graph& g) {
  if (!check_laman(g).laman) throw InputError("classify needs a Laman graph");
  detail::Decomposer dec(g, {}, true);
  return dec.run() ? HennebergClass::HennebergI : HennebergClass::HennebergII;
}

// ---------------------------------------------------------------------------
// Two-in-degree orientation

struct Orientation {
  Edge base;
  std::map<Edge, std::pair<int, int>> direction;  // edge -> (tail, head)

  int in_degree(int v) const {
    int d = 0;
    for (const auto& [e, th] : direction)
      if (th.second == v) ++d;
    return d;
  }
  std::vector<Edge> incoming(int v) const {
    std::vector<Edge> in;
    for (const auto& [e, th] : direction)
      if (th.second == v) in.push_back(e);
    return in;
  }
};

/// Orients every edge except `base` so that base endpoints have in-degree 0
/// and every other vertex in-degree 2, by replaying a Henneberg sequence:
/// step I points both new edges at the new vertex; step II keeps the deleted
/// edge's head s, points the new edge to s at s and the other two at the new vertex.
inline Orientation orient_two_in(const Graph& g, const Edge& base) {
  if (!g.has_edge(base)) throw InputError("base " + to_string(base) + " is not an edge");
  HennebergDecomposition dec = henneberg_decompose(g, base);
  std::map<Edge, std::pair<int, int>> dir;  // replayed labels
  dir[{1, 3}] = {1, 3};
  dir[{2, 3}] = {2, 3};
  int v = 4;
  for (const auto& step : dec.sequence.steps) {
    if (const auto* s1 = std::get_if<StepI>(&step)) {
      dir[{s1->a, v}] = {s1->a, v};
      dir[{s1->b, v}] = {s1->b, v};
    } else {
      const auto& s2 = std::get<StepII>(step);
      auto it = dir.find(s2.removed);
      if (it == dir.end()) throw InternalError("step II removes the base edge");
      const int s = it->second.second;
      dir.erase(it);
      for (int w : {s2.a, s2.b, s2.c}) {
        if (w == s)
          dir[{v, w}] = {v, w};
        else
          dir[{w, v}] = {w, v};
      }
    }
    ++v;
  }
  Orientation o;
  o.base = base;
  const auto& orig = dec.relabel;
  for (const auto& [e, th] : dir) o.direction[Edge(orig[e.u], orig[e.v])] = {orig[th.first], orig[th.second]};
  return o;
}

// ---------------------------------------------------------------------------
// Isomorphism and named graphs

namespace detail {

// Coarsest equitable refinement of a vertex colouring (colours 0..k-1). New
// colours are ranks of (colour, sorted neighbour colours), so the result does
// not depend on the labelling.
inline std::vector<int> refine_colouring(const Graph& g, std::vector<int> colour) {
  const int n = g.vertex_count();
  int classes = colour.empty() ? 0 : *std::max_element(colour.begin() + 1, colour.end()) + 1;
  std::vector<std::pair<std::vector<int>, int>> sig(n);
  for (;;) {
    for (int v = 1; v <= n; ++v) {
      auto& s = sig[v - 1];
      s.second = v;
      s.first.clear();
      for (int w : g.neighbors(v)) s.first.push_back(colour[w]);
      std::sort(s.first.begin(), s.first.end());
      s.first.insert(s.first.begin(), colour[v]);
    }
    std::sort(sig.begin(), sig.end());
    std::vector<int> next(n + 1, 0);
    int c = -1;
    for (int i = 0; i < n; ++i) {
      if (i == 0 || sig[i].first != sig[i - 1].first) ++c;
      next[sig[i].second] = c;
    }
    colour = std::move(next);
    if (c + 1 == classes) return colour;
    classes = c + 1;
  }
}

inline void canonical_search(const Graph& g, std::vector<int> colour, std::optional<std::vector<Edge>>& best) {
  const int n = g.vertex_count();
  colour = refine_colouring(g, std::move(colour));
  std::vector<int> size(n, 0);
  for (int v = 1; v <= n; ++v) ++size[colour[v]];
  int target = -1;
  for (int c = 0; c < n; ++c)
    if (size[c] > 1) {
      target = c;
      break;
    }
  if (target < 0) {
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const auto& e : g.edges()) edges.emplace_back(colour[e.u] + 1, colour[e.v] + 1);
    std::sort(edges.begin(), edges.end());
    if (!best || edges < *best) best = std::move(edges);
    return;
  }
  // Individualise each member of the first non-singleton cell in turn.
  for (int v = 1; v <= n; ++v) {
    if (colour[v] != target) continue;
    std::vector<int> split = colour;
    for (int u = 1; u <= n; ++u)
      if (split[u] > target || (split[u] == target && u != v)) ++split[u];
    canonical_search(g, std::move(split), best);
  }
}

}  // namespace detail

/// Canonical edge list: the lexicographically smallest relabelling reached by
/// colour refinement and individualisation. Isomorphic graphs, and only
/// those, share a canonical form.
inline std::vector<Edge> canonical_form(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {};
  std::optional<std::vector<Edge>> best;
  detail::canonical_search(g, std::vector<int>(n + 1, 0), best);
  return *best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

/// Complete bipartite K3,3 with parts {1,3,5} and {2,4,6}; contains edge 1-2.
inline Graph k33_graph() {
  std::vector<Edge> e;
  for (int a : {1, 3, 5})
    for (int b : {2, 4, 6}) e.emplace_back(a, b);
  return Graph(6, e);
}

/// The triangular prism (Desargues framework): triangles 123 and 456 joined by 14, 25, 36.
inline Graph desargues_graph() {
  return Graph(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {1, 4}, {2, 5}, {3, 6}});
}

/// Non-isomorphic Laman graphs on n vertices, by exhaustive edge-subset scan (n <= 7).
inline std::vector<Graph> laman_catalog(int n) {
  if (n < 2 || n > 7) throw CapabilityError("laman_catalog supports 2 <= n <= 7");
  std::vector<Edge> all;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) all.emplace_back(a, b);
  const int m = 2 * n - 3;
  std::vector<Graph> out;
  std::set<std::vector<Edge>> seen;
  std::vector<int> pick(m);
  std::function<void(int, int)> rec = [&](int idx, int start) {
    if (idx == m) {
      std::vector<Edge> edges;
      for (int p : pick) edges.push_back(all[p]);
      Graph g(n, edges);
      if (!check_laman(g).laman) return;
      auto canon = canonical_form(g);
      if (seen.insert(canon).second) out.push_back(Graph(n, canon));
      return;
    }
    for (int i = start; i <= static_cast<int>(all.size()) - (m - idx); ++i) {
      pick[idx] = i;
      rec(idx + 1, i + 1);
    }
  };
  rec(0, 0);
  return out;
}

/// Non-isomorphic Laman graphs on n vertices, grown from the triangle by all
/// Henneberg I and II steps and deduplicated by canonical form.
inline std::vector<Graph> laman_graphs(int n) {
  if (n < 2) throw InputError("laman_graphs needs n >= 2");
  if (n == 2) return {Graph(2, {{1, 2}})};
  std::vector<Graph> level{Graph(3, canonical_form(triangle_graph()))};
  for (int m = 4; m <= n; ++m) {
    std::set<std::vector<Edge>> seen;
    std::vector<Graph> next;
    auto offer = [&](std::vector<Edge> edges) {
      auto canon = canonical_form(Graph(m, std::move(edges)));
      if (seen.insert(canon).second) next.emplace_back(m, std::move(canon));
    };
    for (const auto& g : level) {
      for (int a = 1; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
          auto edges = g.edges();
          edges.emplace_back(a, m);
          edges.emplace_back(b, m);
          offer(std::move(edges));
        }
      for (const auto& removed : g.edges())
        for (int c = 1; c < m; ++c) {
          if (removed.has(c)) continue;
          std::vector<Edge> edges;
          for (const auto& e : g.edges())
            if (e != removed) edges.push_back(e);
          for (int w : {removed.u, removed.v, c}) edges.emplace_back(w, m);
          offer(std::move(edges));
        }
    }
    level = std::move(next);
  }
  return level;
}

/// Random Henneberg sequence producing n vertices. Step II is chosen with
/// probability `step_two_probability` whenever it is applicable.
template <class Rng>
HennebergSequence random_henneberg_sequence(int n, Rng& rng, double step_two_probability = 0.0) {
  if (n < 3) throw InputError("a Henneberg sequence has at least 3 vertices");
  HennebergSequence seq;
  std::set<Edge> edges{{1, 2}, {1, 3}, {2, 3}};
  std::bernoulli_distribution use_two(step_two_probability);
  for (int v = 4; v <= n; ++v) {
    std::uniform_int_distribution<int> pick(1, v - 1);
    if (use_two(rng)) {
      std::vector<Edge> pool(edges.begin(), edges.end());
      Edge r = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
      int c;
      do c = pick(rng);
      while (c == r.u || c == r.v);
      StepII s{r.u, r.v, c, r};
      detail::apply_step(v, s, edges);
      seq.steps.push_back(s);
    } else {
      int a = pick(rng), b;
      do b = pick(rng);
      while (b == a);
      StepI s{a, b};
      detail::apply_step(v, s, edges);
      seq.steps.push_back(s);
    }
  }
  return seq;
}

}  // namespace lamanbkk
