#ifndef ROOTSTRATA_ROOT_SYSTEM_HPP
#define ROOTSTRATA_ROOT_SYSTEM_HPP

#include <map>
#include <vector>

#include "rootstrata/linalg.hpp"
#include "rootstrata/types.hpp"

namespace rootstrata {

/// An irreducible crystallographic root system with exact Cartan data,
/// normalized so that long roots have squared norm 2.
///
/// Simple roots are numbered 0..rank-1 following the Bourbaki plates.
/// Immutable after construction; safe to share across threads.
class RootSystem {
 public:
  explicit RootSystem(RootSystemSpec spec);

  const RootSystemSpec& spec() const { return spec_; }
  int rank() const { return rank_; }
  int lacing() const { return lacing_; }

  /// cartan()[i][j] = (alpha_i, alpha_j^vee)
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  /// form()[i][j] = (alpha_i, alpha_j)
  const RationalMatrix& form() const { return form_; }
  /// Inverse of the form; row i holds the coweight of alpha_i.
  const RationalMatrix& form_inverse() const { return form_inverse_; }
  /// Inverse of the Cartan matrix; row i holds the weight omega_i.
  const RationalMatrix& cartan_inverse() const { return cartan_inverse_; }

  /// Positive roots ordered by (height, lexicographic on coefficients).
  const std::vector<RootVec>& positive_roots() const { return positive_roots_; }
  /// All roots: the positive roots followed by their negatives, same order.
  const std::vector<RootVec>& roots() const { return roots_; }
  const RootVec& highest_root() const { return highest_root_; }
  const std::vector<int>& marks() const { return marks_; }

  bool is_root(const RootVec& v) const;
  /// Index into roots(), or -1.
  int root_index(const RootVec& v) const;

  RootVec simple_root(int i) const;
  Rational norm2(const RootVec& v) const;
  bool is_long(const RootVec& v) const { return norm2(v) == 2; }
  bool is_short(const RootVec& v) const { return !is_long(v); }

  /// (v, alpha_i^vee), integer for integer v.
  int cartan_pairing(const RootVec& v, int i) const;
  Rational cartan_pairing(const RationalVec& v, int i) const;
  /// (a, b) under the invariant form.
  Rational pairing(const RationalVec& a, const RationalVec& b) const;
  Rational pairing(const RootVec& a, const RationalVec& b) const;
  /// (x, y^vee) = 2(x,y)/(y,y); integral whenever x, y are roots.
  int coroot_pairing(const RootVec& x, const RootVec& y) const;

  /// Simple reflection s_i acting on coefficient vectors.
  RootVec reflect(int i, const RootVec& v) const;
  RationalVec reflect(int i, const RationalVec& v) const;

  std::vector<int> support(const RootVec& v) const;

 private:
  RootSystemSpec spec_;
  int rank_;
  int lacing_;
  std::vector<std::vector<int>> cartan_;
  RationalMatrix form_;
  RationalMatrix form_inverse_;
  RationalMatrix cartan_inverse_;
  std::vector<RootVec> positive_roots_;
  std::vector<RootVec> roots_;
  RootVec highest_root_;
  std::vector<int> marks_;
  std::map<RootVec, int> root_index_;
  std::map<RootVec, bool> long_flag_;
};

RootSystem build_root_system(RootSystemSpec spec);

/// Shared cache of canonical systems, keyed by spec. Thread-safe.
const RootSystem& canonical_system(RootSystemSpec spec);
const RootSystem& canonical_system(Family f, int rank);

/// Cartan matrix of the canonical (family, rank) system, without building it.
std::vector<std::vector<int>> canonical_cartan(Family f, int rank);

/// Exact inverse of the Cartan matrix; entry (i,j) = (omega_i, coweight_j).
RationalMatrix inverse_cartan(const RootSystem& rs);

/// Fundamental coweight of alpha_i: (coweight, alpha_j) = delta_ij.
RationalVec coweight(const RootSystem& rs, int i);
/// Fundamental weight of alpha_i: (weight, alpha_j^vee) = delta_ij.
RationalVec weight(const RootSystem& rs, int i);

/// beta <= gamma in the root poset (gamma - beta has nonnegative coordinates).
bool root_poset_leq(const RootSystem& rs, const RootVec& beta, const RootVec& gamma);

/// Adjacency lists of the extended Dynkin diagram. Vertices 0..rank-1 are the
/// simple roots; vertex rank is the affine node, adjacent to exactly the
/// simple roots not orthogonal to the highest root.
std::vector<std::vector<int>> extended_diagram_vertices(const RootSystem& rs);

}  // namespace rootstrata

#endif
