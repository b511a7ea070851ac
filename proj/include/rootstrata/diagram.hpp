#ifndef ROOTSTRATA_DIAGRAM_HPP
#define ROOTSTRATA_DIAGRAM_HPP

#include <vector>

#include "rootstrata/root_system.hpp"
#include "rootstrata/types.hpp"

namespace rootstrata {

/// One irreducible component of a (generalized) Dynkin diagram.
/// vertices[k] is the input vertex playing the role of Bourbaki node k+1 of
/// the canonical (family, rank) diagram.
struct DiagramComponent {
  Family family;
  int rank;
  std::vector<int> vertices;
};

using DiagramComponents = std::vector<DiagramComponent>;

/// Classify the diagram given by a Cartan matrix (pairings (x_i, x_j^vee))
/// and the squared norms of its vertices. Components are ordered by their
/// smallest vertex index. Throws if any component is not of finite type.
DiagramComponents classify_cartan(const std::vector<std::vector<int>>& cartan,
                                  const std::vector<Rational>& norms);

/// Classify the subdiagram of Pi induced by a set of simple-root indices.
/// Vertex indices in the result refer to the ambient numbering.
DiagramComponents classify_subdiagram(const RootSystem& rs, const std::vector<int>& subset);

/// Order of the Weyl group: product of the classical orders over components.
BigInt weyl_order(const DiagramComponents& components);
BigInt weyl_order(Family f, int rank);

}  // namespace rootstrata

#endif
