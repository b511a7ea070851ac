#ifndef ROOTSTRATA_POLYTOPE_HPP
#define ROOTSTRATA_POLYTOPE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "rootstrata/parabolic.hpp"
#include "rootstrata/root_system.hpp"

namespace rootstrata {

/// A standard parabolic face of a root polytope.
///
/// subsets holds one entry per component of the ambient (sub)system: the
/// extremal subset cutting the component face, or an empty entry for the
/// empty face of that component (product faces only). For a face of an
/// irreducible system there is a single entry; the whole-polytope sentinel
/// standard_face(rs, {}) carries the empty subset together with
/// dimension == rank.
struct FaceDescriptor {
  std::vector<std::vector<int>> subsets;
  RationalVec functional;        // (x, functional) <= 1 on the polytope, = 1 exactly on the face
  std::vector<RootVec> vertices; // roots on the face, sorted by (height, lex)
  RationalVec barycenter;
  int dimension;                 // affine dimension of the vertex set; -1 when empty
};

/// I is extremal when the extended Dynkin diagram minus I stays connected.
bool is_extremal(const RootSystem& rs, const std::vector<int>& I);

/// All extremal subsets of size <= max_size, ordered by (size, lex).
std::vector<std::vector<int>> extremal_subsets(const RootSystem& rs, int max_size);

/// Face of the full root polytope cut by I: the roots whose I-coordinates
/// equal the marks. Defined for every I; for extremal I the dimension is
/// rank - |I|.
FaceDescriptor standard_face(const RootSystem& rs, const std::vector<int>& I);

/// Face of one irreducible component of a parabolic subsystem.
FaceDescriptor component_face(const Parabolic& sub, int comp, const std::vector<int>& I);

/// Product face across the components of a possibly reducible subsystem;
/// faces[c] is the component face or nullopt for the empty face. At least
/// one entry must be a nonempty face.
FaceDescriptor face_product(const Parabolic& sub, const std::vector<std::optional<FaceDescriptor>>& faces);

/// Membership of a dominant point in r times the root polytope, decided by
/// the facet functionals (one extremal root per component).
bool dominant_membership(const Parabolic& sub, const RationalVec& x, const Rational& r);

/// Orthogonal projection onto the wall spanned by the simple roots other
/// than alpha_i.
RationalVec project_to_wall(const RootSystem& rs, int i, const RationalVec& v);

/// Orthogonal projection onto the span of a set of simple roots, computed by
/// solving the Gram system (independent of the coweight route).
RationalVec project_to_span(const RootSystem& rs, const std::vector<int>& T, const RationalVec& v);

/// Coefficients (alpha_i, eps^vee) over the neighbours eps of alpha_i. The
/// projection of alpha_i equals the same combination of the wall-restricted
/// fundamental weights.
std::vector<std::pair<int, int>> projected_alpha_weights(const RootSystem& rs, int i);

/// c_i[X_n]: the largest pairing of the i-th fundamental weight against the
/// extremal facet normals, computed from the inverse Cartan matrix and the
/// marks of the canonical system. i is 1-based as in the usual tables.
Rational c_constant(Family family, int n, int i);

/// Least dilation factor r with the projection of the level-1 stratum of
/// alpha_i inside r times the root polytope of the wall subsystem, by the
/// closed formula over the neighbours of alpha_i.
Rational r_alpha(const RootSystem& rs, int i);

/// Independent oracle for the least dilation at level k: project the maximum
/// of the level stratum, move it into the dominant chamber of the wall
/// subsystem, and take the facet-functional maximum.
Rational min_dilation_oracle(const RootSystem& rs, int i, int k);

/// Upper bound for levels k >= 2 obtained inside the subsystem generated by
/// {min} u (Pi minus alpha_i), restricted to the component of the minimum.
Rational min_dilation_subsystem_route(const RootSystem& rs, int i, int k);

/// Brute-force check that the W-orbit of the face of I contains exactly one
/// face with dominant barycenter, and that the stabilizer of that face is
/// the parabolic on the simple roots orthogonal to the barycenter.
bool standard_face_orbit_check(const RootSystem& rs, const std::vector<int>& I, size_t group_bound = 1000000);

/// Dimension of the projected level-k stratum polytope: total rank of the
/// wall components not orthogonal to a maximal-length stratum root.
int projection_dimension(const RootSystem& rs, int i, int k);

}  // namespace rootstrata

#endif
