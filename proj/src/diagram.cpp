#include "rootstrata/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootstrata {

namespace {

int edge_mult(const std::vector<std::vector<int>>& a, int i, int j) {
  return a[i][j] * a[j][i];
}

// Walks the path component starting from endpoint `from`; returns all vertices in order.
std::vector<int> walk_path(const std::vector<std::vector<int>>& adj, int from) {
  std::vector<int> order{from};
  int prev = -1, cur = from;
  for (;;) {
    int next = -1;
    for (int v : adj[cur]) {
      if (v != prev) {
        next = v;
        break;
      }
    }
    if (next < 0) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

DiagramComponent classify_component(const std::vector<std::vector<int>>& a,
                                    const std::vector<Rational>& norms,
                                    const std::vector<int>& comp) {
  const int m = static_cast<int>(comp.size());
  if (m == 1) return {Family::A, 1, comp};

  // Local adjacency on positions 0..m-1.
  std::vector<std::vector<int>> adj(m);
  int doubles = 0, triples = 0;
  std::pair<int, int> laced_edge{-1, -1};
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      int mult = edge_mult(a, comp[i], comp[j]);
      if (mult == 0) continue;
      adj[i].push_back(j);
      adj[j].push_back(i);
      if (mult == 2) {
        ++doubles;
        laced_edge = {i, j};
      } else if (mult == 3) {
        ++triples;
        laced_edge = {i, j};
      } else if (mult != 1) {
        throw std::invalid_argument("classify: edge multiplicity out of range");
      }
    }
  }

  auto leaves = [&]() {
    std::vector<int> l;
    for (int i = 0; i < m; ++i) {
      if (adj[i].size() == 1) l.push_back(i);
    }
    return l;
  };
  auto is_path = [&]() {
    for (int i = 0; i < m; ++i) {
      if (adj[i].size() > 2) return false;
    }
    return leaves().size() == 2;
  };
  auto to_ambient = [&](const std::vector<int>& order) {
    std::vector<int> v(order.size());
    for (size_t k = 0; k < order.size(); ++k) v[k] = comp[order[k]];
    return v;
  };

  if (triples > 0) {
    if (m != 2 || triples != 1) throw std::invalid_argument("classify: bad triple edge");
    int s = norms[comp[0]] < norms[comp[1]] ? 0 : 1;  // G2 lists the short root first
    return {Family::G, 2, to_ambient({s, 1 - s})};
  }

  if (doubles > 0) {
    if (doubles != 1 || !is_path()) throw std::invalid_argument("classify: bad double edge");
    auto [u, w] = laced_edge;
    if (norms[comp[u]] < norms[comp[w]]) std::swap(u, w);  // u long, w short
    if (m == 2) return {Family::B, 2, to_ambient({u, w})};
    bool w_leaf = adj[w].size() == 1;
    bool u_leaf = adj[u].size() == 1;
    if (w_leaf && !u_leaf) {
      // Long chain ending in the short leaf.
      auto ends = leaves();
      int start = ends[0] == w ? ends[1] : ends[0];
      return {Family::B, m, to_ambient(walk_path(adj, start))};
    }
    if (u_leaf && !w_leaf) {
      // Short chain ending in the long leaf.
      auto ends = leaves();
      int start = ends[0] == u ? ends[1] : ends[0];
      return {Family::C, m, to_ambient(walk_path(adj, start))};
    }
    if (!u_leaf && !w_leaf && m == 4) {
      // Two long then two short: start from the long end.
      auto ends = leaves();
      int start = norms[comp[ends[0]]] > norms[comp[ends[1]]] ? ends[0] : ends[1];
      return {Family::F, 4, to_ambient(walk_path(adj, start))};
    }
    throw std::invalid_argument("classify: doubly laced diagram of unknown shape");
  }

  // Simply laced.
  if (is_path()) {
    auto ends = leaves();
    int start = std::min(comp[ends[0]], comp[ends[1]]) == comp[ends[0]] ? ends[0] : ends[1];
    return {Family::A, m, to_ambient(walk_path(adj, start))};
  }

  int tri = -1;
  for (int i = 0; i < m; ++i) {
    if (adj[i].size() == 3) {
      if (tri >= 0) throw std::invalid_argument("classify: two branch nodes");
      tri = i;
    } else if (adj[i].size() > 3) {
      throw std::invalid_argument("classify: vertex of degree > 3");
    }
  }
  if (tri < 0) throw std::invalid_argument("classify: cyclic diagram");

  // Three arms walked outward from the branch node.
  std::vector<std::vector<int>> arms;
  for (int first : adj[tri]) {
    std::vector<int> arm{first};
    int prev = tri, cur = first;
    for (;;) {
      int next = -1;
      for (int v : adj[cur]) {
        if (v != prev) next = v;
      }
      if (next < 0) break;
      arm.push_back(next);
      prev = cur;
      cur = next;
    }
    arms.push_back(std::move(arm));
  }
  std::sort(arms.begin(), arms.end(), [&](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return comp[x.front()] < comp[y.front()];
  });
  const size_t a1 = arms[0].size(), a2 = arms[1].size(), a3 = arms[2].size();

  if (a1 == 1 && a2 == 1) {
    // Fork at the end of a chain.
    std::vector<int> order;
    const auto& chain = arms[2];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) order.push_back(*it);
    order.push_back(tri);
    int x = arms[0][0], y = arms[1][0];
    if (comp[x] > comp[y]) std::swap(x, y);
    order.push_back(x);
    order.push_back(y);
    return {Family::D, m, to_ambient(order)};
  }
  if (a1 == 1 && a2 == 2 && a3 >= 2 && a3 <= 4) {
    const int n = m;  // 6, 7 or 8
    std::vector<int> order(n);
    order[1] = arms[0][0];
    order[2] = arms[1][0];
    order[0] = arms[1][1];
    order[3] = tri;
    for (size_t k = 0; k < a3; ++k) order[4 + k] = arms[2][k];
    return {Family::E, n, to_ambient(order)};
  }
  throw std::invalid_argument("classify: branched diagram of unknown shape");
}

}  // namespace

DiagramComponents classify_cartan(const std::vector<std::vector<int>>& cartan,
                                  const std::vector<Rational>& norms) {
  const int n = static_cast<int>(cartan.size());
  for (int i = 0; i < n; ++i) {
    if (cartan[i][i] != 2) throw std::invalid_argument("classify: diagonal entry != 2");
    for (int j = 0; j < n; ++j) {
      if (i != j && cartan[i][j] > 0) throw std::invalid_argument("classify: positive off-diagonal");
      if (i != j && (cartan[i][j] == 0) != (cartan[j][i] == 0)) {
        throw std::invalid_argument("classify: asymmetric zero pattern");
      }
    }
  }

  std::vector<int> comp_id(n, -1);
  DiagramComponents out;
  std::vector<std::vector<int>> groups;
  for (int i = 0; i < n; ++i) {
    if (comp_id[i] >= 0) continue;
    std::vector<int> stack{i}, members;
    comp_id[i] = static_cast<int>(groups.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int u = 0; u < n; ++u) {
        if (u != v && cartan[v][u] != 0 && comp_id[u] < 0) {
          comp_id[u] = comp_id[i];
          stack.push_back(u);
        }
      }
    }
    std::sort(members.begin(), members.end());
    groups.push_back(std::move(members));
  }

  for (const auto& g : groups) out.push_back(classify_component(cartan, norms, g));

  // The induced Cartan matrix under the mapping must equal the canonical one.
  for (const DiagramComponent& c : out) {
    auto canon = canonical_cartan(c.family, c.rank);
    for (int i = 0; i < c.rank; ++i) {
      for (int j = 0; j < c.rank; ++j) {
        if (cartan[c.vertices[i]][c.vertices[j]] != canon[i][j]) {
          throw std::logic_error("classify: mapping does not reproduce canonical Cartan matrix");
        }
      }
    }
  }
  return out;
}

DiagramComponents classify_subdiagram(const RootSystem& rs, const std::vector<int>& subset) {
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int v : s) {
    if (v < 0 || v >= rs.rank()) throw std::invalid_argument("classify_subdiagram: index out of range");
  }
  const int m = static_cast<int>(s.size());
  std::vector<std::vector<int>> sub(m, std::vector<int>(m));
  std::vector<Rational> norms(m);
  for (int i = 0; i < m; ++i) {
    norms[i] = rs.form()[s[i]][s[i]];
    for (int j = 0; j < m; ++j) sub[i][j] = rs.cartan()[s[i]][s[j]];
  }
  DiagramComponents comps = classify_cartan(sub, norms);
  for (DiagramComponent& c : comps) {
    for (int& v : c.vertices) v = s[v];
  }
  return comps;
}

BigInt weyl_order(Family f, int rank) {
  auto factorial = [](int k) {
    BigInt r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
  };
  switch (f) {
    case Family::A: return factorial(rank + 1);
    case Family::B:
    case Family::C: return factorial(rank) << rank;
    case Family::D: return factorial(rank) << (rank - 1);
    case Family::E:
      if (rank == 6) return 51840;
      if (rank == 7) return 2903040;
      return 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  throw std::invalid_argument("weyl_order: bad family");
}

BigInt weyl_order(const DiagramComponents& components) {
  BigInt r = 1;
  for (const DiagramComponent& c : components) r *= weyl_order(c.family, c.rank);
  return r;
}

}  // namespace rootstrata
