#ifndef ROOTSTRATA_PARABOLIC_HPP
#define ROOTSTRATA_PARABOLIC_HPP

#include <vector>

#include "rootstrata/diagram.hpp"
#include "rootstrata/root_system.hpp"

namespace rootstrata {

/// The standard parabolic subsystem generated by a subset of the simple
/// roots, possibly reducible, kept in ambient coordinates. Weights and
/// coweights here are the ones of the subsystem (wall-restricted), not
/// projections of ambient ones.
class Parabolic {
 public:
  Parabolic(const RootSystem& rs, std::vector<int> vertices);

  const RootSystem& ambient() const { return *rs_; }
  const std::vector<int>& vertices() const { return vertices_; }
  const DiagramComponents& components() const { return components_; }
  int rank() const { return static_cast<int>(vertices_.size()); }

  /// Roots supported on the vertex set, sorted by (height, lex).
  const std::vector<RootVec>& roots() const { return roots_; }

  /// Coweight of an ambient vertex v within the subsystem: pairs to
  /// delta_{vu} against the subsystem simple roots, lies in their span.
  RationalVec coweight(int v) const;
  /// Weight of v within the subsystem (unit pairing with the coroot of v,
  /// zero on the other subsystem coroots).
  RationalVec weight(int v) const;
  /// Coordinate of v in the highest root of its component.
  int mark(int v) const;
  /// Facet normal o_v = coweight(v) / mark(v).
  RationalVec face_normal(int v) const;

  /// Extremal singleton vertices per component (ambient ids): the vertices
  /// whose removal keeps the component's extended diagram connected.
  const std::vector<std::vector<int>>& extremal_singletons() const { return extremal_singletons_; }

  int component_of(int v) const;
  /// Bourbaki position (0-based) of v inside its component.
  int position_in_component(int v) const;

  bool is_dominant(const RationalVec& x) const;

  /// min { r : x in r * (root polytope of the subsystem) } for dominant x.
  /// By the facet description this is the sum over components of the largest
  /// pairing of x against the component's extremal facet normals.
  Rational min_dilation(const RationalVec& x) const;

 private:
  const RootSystem* rs_;
  std::vector<int> vertices_;
  DiagramComponents components_;
  std::vector<RootVec> roots_;
  RationalMatrix coweight_rows_;  // row k: coweight of vertices_[k], ambient coords
  RationalMatrix weight_rows_;    // row k: weight of vertices_[k], ambient coords
  std::vector<int> marks_;        // per position in vertices_
  std::vector<std::vector<int>> extremal_singletons_;
  std::vector<int> vertex_pos_;   // ambient id -> position in vertices_, or -1
  std::vector<int> vertex_comp_;  // ambient id -> component index, or -1
  std::vector<int> comp_pos_;     // ambient id -> Bourbaki position in component, or -1
};

}  // namespace rootstrata

#endif
