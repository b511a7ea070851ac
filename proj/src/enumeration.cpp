#include "rootstrata/enumeration.hpp"

#include <algorithm>
#include <stdexcept>

#include "rootstrata/diagram.hpp"

namespace rootstrata {

namespace {

BigInt exact_ratio(const BigInt& num, const BigInt& den) {
  if (num % den != 0) throw std::logic_error("enumeration: parabolic order ratio not integral");
  return num / den;
}

std::vector<int> neighbors_within(const RootSystem& rs, int v, const std::vector<bool>& present) {
  std::vector<int> out;
  for (int u = 0; u < rs.rank(); ++u) {
    if (u != v && present[u] && rs.cartan()[v][u] != 0) out.push_back(u);
  }
  return out;
}

BigInt order_ratio_at(const RootSystem& rs, int i) {
  std::vector<int> wall, far;
  for (int v = 0; v < rs.rank(); ++v) {
    if (v == i) continue;
    wall.push_back(v);
    if (rs.cartan()[i][v] == 0) far.push_back(v);
  }
  return exact_ratio(weyl_order(classify_subdiagram(rs, wall)),
                     weyl_order(classify_subdiagram(rs, far)));
}

}  // namespace

BigInt level1_same_length_count(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank()) throw std::invalid_argument("level1_same_length_count: bad index");
  return order_ratio_at(rs, i);
}

BigInt level1_same_length_brute(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank()) throw std::invalid_argument("level1_same_length_brute: bad index");
  Rational target = rs.norm2(rs.simple_root(i));
  long count = 0;
  for (const RootVec& gamma : rs.roots()) {
    if (gamma[i] == 1 && rs.norm2(gamma) == target) ++count;
  }
  return count;
}

bool is_leaf(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank()) throw std::invalid_argument("is_leaf: bad index");
  int degree = 0;
  for (int v = 0; v < rs.rank(); ++v) {
    if (v != i && rs.cartan()[i][v] != 0) ++degree;
  }
  return degree <= 1;
}

BigInt leaf_support_count(const RootSystem& rs, int i, bool diagnostic) {
  if (i < 0 || i >= rs.rank()) throw std::invalid_argument("leaf_support_count: bad index");
  if (!diagnostic) {
    Family f = rs.spec().family;
    if (f != Family::A && f != Family::B && f != Family::C && f != Family::D) {
      throw std::invalid_argument("leaf_support_count: proved for classical types only");
    }
    if (!is_leaf(rs, i)) throw std::invalid_argument("leaf_support_count: alpha_i is not a leaf");
  }
  return order_ratio_at(rs, i);
}

BigInt leaf_support_brute(const RootSystem& rs, int i) {
  Rational target = rs.norm2(rs.simple_root(i));
  long count = 0;
  for (const RootVec& gamma : rs.positive_roots()) {
    if (gamma[i] != 0 && rs.norm2(gamma) == target) ++count;
  }
  return count;
}

bool coxeter_identity_check(const RootSystem& rs, int i) {
  Family f = rs.spec().family;
  if (f != Family::A && f != Family::D) {
    throw std::invalid_argument("coxeter_identity_check: type must be A or D");
  }
  if (!is_leaf(rs, i)) throw std::invalid_argument("coxeter_identity_check: alpha_i is not a leaf");
  const int n = rs.rank();
  BigInt h = BigInt(static_cast<long>(rs.roots().size())) / n;
  std::vector<int> wall;
  for (int v = 0; v < n; ++v) {
    if (v != i) wall.push_back(v);
  }
  DiagramComponents comps = classify_subdiagram(rs, wall);
  BigInt wall_roots = 0;
  if (!comps.empty()) {
    if (comps.size() != 1) throw std::logic_error("coxeter_identity_check: wall not irreducible");
    wall_roots = static_cast<long>(canonical_system(comps[0].family, comps[0].rank).roots().size());
  }
  BigInt lhs = h * n - wall_roots;  // h_wall * (n-1) = |wall roots|
  BigInt rhs = 2 * order_ratio_at(rs, i);
  return lhs == rhs;
}

std::vector<PeelingSequence> valid_peeling_sequences(const RootSystem& rs, bool long_class) {
  std::vector<int> targets;
  for (int v = 0; v < rs.rank(); ++v) {
    if (rs.is_long(rs.simple_root(v)) == long_class) targets.push_back(v);
  }
  std::vector<PeelingSequence> out;
  std::vector<bool> present(rs.rank(), true);
  PeelingSequence cur;
  cur.long_class = long_class;

  // Removing a leaf of a connected diagram keeps it connected, so the
  // irreducibility condition is exactly the leaf condition at each step.
  auto dfs = [&](auto&& self) -> void {
    if (cur.order.size() == targets.size()) {
      out.push_back(cur);
      return;
    }
    for (int t : targets) {
      if (!present[t]) continue;
      auto nb = neighbors_within(rs, t, present);
      if (nb.size() > 1) continue;
      present[t] = false;
      cur.order.push_back(t);
      cur.neighbor.push_back(nb.empty() ? std::optional<int>() : std::optional<int>(nb[0]));
      self(self);
      cur.neighbor.pop_back();
      cur.order.pop_back();
      present[t] = true;
    }
  };
  dfs(dfs);
  return out;
}

BigInt iterando_sum(const RootSystem& rs, const PeelingSequence& seq, bool diagnostic) {
  if (!diagnostic) {
    Family f = rs.spec().family;
    if (f != Family::A && f != Family::B && f != Family::C && f != Family::D) {
      throw std::invalid_argument("iterando_sum: proved for classical types only");
    }
  }
  std::vector<int> expected;
  for (int v = 0; v < rs.rank(); ++v) {
    if (rs.is_long(rs.simple_root(v)) == seq.long_class) expected.push_back(v);
  }
  {
    std::vector<int> sorted = seq.order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != expected) {
      throw std::invalid_argument("iterando_sum: order must cover the simple roots of the length class");
    }
  }

  std::vector<bool> present(rs.rank(), true);
  BigInt total = 0;
  for (int eps : seq.order) {
    auto nb = neighbors_within(rs, eps, present);
    if (nb.size() > 1) throw std::invalid_argument("iterando_sum: removal order violates the leaf condition");
    std::vector<int> without_eps, without_closed;
    for (int v = 0; v < rs.rank(); ++v) {
      if (!present[v] || v == eps) continue;
      without_eps.push_back(v);
      if (nb.empty() || v != nb[0]) without_closed.push_back(v);
    }
    total += exact_ratio(weyl_order(classify_subdiagram(rs, without_eps)),
                         weyl_order(classify_subdiagram(rs, without_closed)));
    present[eps] = false;
  }
  return total;
}

}  // namespace rootstrata
