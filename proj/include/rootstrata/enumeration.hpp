#ifndef ROOTSTRATA_ENUMERATION_HPP
#define ROOTSTRATA_ENUMERATION_HPP

#include <optional>
#include <vector>

#include "rootstrata/root_system.hpp"

namespace rootstrata {

/// An ordering of the simple roots of one fixed length class such that
/// removing them one by one keeps the remaining diagram irreducible. Each
/// removed root is then a leaf of the current diagram; neighbor[i] is its
/// unique neighbor there (absent when the diagram has shrunk to a point).
struct PeelingSequence {
  bool long_class;
  std::vector<int> order;
  std::vector<std::optional<int>> neighbor;
};

/// Number of roots in the level-1 stratum of alpha_i with the same length as
/// alpha_i, by the parabolic order ratio.
BigInt level1_same_length_count(const RootSystem& rs, int i);

/// Same count by direct enumeration; the oracle side of the identity.
BigInt level1_same_length_brute(const RootSystem& rs, int i);

/// Number of positive roots of the same length as the leaf alpha_i whose
/// support contains alpha_i. Proved for classical leaves; `diagnostic`
/// evaluates the formula outside that gate.
BigInt leaf_support_count(const RootSystem& rs, int i, bool diagnostic = false);
BigInt leaf_support_brute(const RootSystem& rs, int i);

/// h(Phi) * n - h(wall) * (n-1) == 2 |W_alpha| / |W_{N~[alpha]}| for a leaf of
/// an A- or D-type system. Coxeter numbers are taken as |roots| / rank.
bool coxeter_identity_check(const RootSystem& rs, int i);

bool is_leaf(const RootSystem& rs, int i);

std::vector<PeelingSequence> valid_peeling_sequences(const RootSystem& rs, bool long_class);

/// Sum over the peeling steps of the parabolic order ratios; equals the
/// number of positive roots of the peeled length class for classical types.
BigInt iterando_sum(const RootSystem& rs, const PeelingSequence& seq, bool diagnostic = false);

}  // namespace rootstrata

#endif
