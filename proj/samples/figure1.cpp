// Walks through B(2,3): the eccentricity gap at 011, a minimum 1-identifying
// code, and a DOT rendering with 011 highlighted.

#include <iostream>

#include "dbic/dbic.hpp"

int main() {
  const auto g = dbic::DeBruijnGraph::build(2, 3);
  const dbic::VertexId x = g.parse_vertex("011");

  const auto ecc = dbic::eccentricity(g, x);
  const auto [radius, diameter] = dbic::radius_diameter(g);
  std::cout << "ecc(011) = " << ecc.eccentricity << ", radius " << radius << ", diameter "
            << diameter << "\n";

  const auto best = dbic::min_code(g, 1);
  std::cout << "minimum 1-identifying code (" << best.code.size()
            << (best.optimal ? ", optimal" : ", not proven optimal") << "): "
            << dbic::vertex_list_json(g, best.code).dump() << "\n\n";

  dbic::VertexSet highlight(g.vertex_count());
  highlight.insert(x);
  std::cout << dbic::export_dot(g, highlight);
}
