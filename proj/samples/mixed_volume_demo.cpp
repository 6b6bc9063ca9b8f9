// Mixed volume of a square and a triangle, then the sphere and substituted
// systems of K3,3.

#include <iostream>

#include "lamanbkk/mixed_volume.hpp"

using namespace lamanbkk;

int main() {
  RationalPolytope p = hull_vertices({{0, 0}, {3, 0}, {0, 2}, {3, 2}});
  RationalPolytope q = hull_vertices({{1, 0}, {0, Rational(3, 2)}, {3, 3}});
  MVResult pq = mixed_volume({p, q}, 1);
  std::cout << "MV(P, Q) = " << pq.value << " from " << pq.cells.size() << " mixed cells\n";
  for (const auto& cell : pq.cells) {
    std::cout << "  cell:";
    for (const auto& e : cell.cell.edges)
      std::cout << " [(" << e.first[0] << "," << e.first[1] << ")-(" << e.second[0] << "," << e.second[1] << ")]";
    std::cout << " |det| = " << abs(cell.det) << "\n";
  }

  Graph g = k33_graph();
  std::map<Edge, Rational> lengths;
  for (const auto& e : g.edges()) lengths[e] = 1;
  Framework f(g, lengths);
  std::cout << "K3,3 sphere system: " << certify_general_bound(g).value << " (certified)\n";

  GraphMVOptions options;
  options.seed = 7;
  MVResult sub = mv_for_graph(f, options);
  std::cout << "K3,3 substituted system: " << sub.value << "\n";
  for (const auto& b : sub.blocks)
    if (b.coordinates.size() > 1) std::cout << "  block of dimension " << b.coordinates.size() << ": " << b.value << "\n";
}
