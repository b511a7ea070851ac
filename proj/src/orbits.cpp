#include "rootstrata/orbits.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

#include "rootstrata/diagram.hpp"
#include "rootstrata/strata.hpp"

namespace rootstrata {

size_t default_orbit_bound() {
  static size_t bound = [] {
    if (const char* env = std::getenv("ROOTSTRATA_ORBIT_BOUND")) {
      long v = std::atol(env);
      if (v > 0) return static_cast<size_t>(v);
    }
    return static_cast<size_t>(10000000);
  }();
  return bound;
}

RationalVec reflect(const RootSystem& rs, int i, const RationalVec& v) { return rs.reflect(i, v); }

OrbitReport orbit(const RootSystem& rs, const std::vector<int>& generators, const RationalVec& seed,
                  size_t bound) {
  if (bound == 0) bound = default_orbit_bound();
  for (int g : generators) {
    if (g < 0 || g >= rs.rank()) throw std::invalid_argument("orbit: generator index out of range");
  }
  OrbitReport rep;
  rep.generators = generators;
  rep.seed = seed;

  std::set<RationalVec> seen{seed};
  std::vector<RationalVec> stack{seed};
  while (!stack.empty()) {
    RationalVec v = std::move(stack.back());
    stack.pop_back();
    for (int g : rep.generators) {
      RationalVec w = rs.reflect(g, v);
      if (seen.insert(w).second) {
        if (seen.size() > bound) throw std::runtime_error("orbit: size exceeds bound");
        stack.push_back(std::move(w));
      }
    }
  }
  rep.elements.assign(seen.begin(), seen.end());
  rep.dominant = dominant_representative(rs, generators, seed);
  return rep;
}

RationalVec dominant_representative(const RootSystem& rs, const std::vector<int>& generators,
                                    const RationalVec& v) {
  RationalVec w = v;
  // Each step strictly shrinks the set of parabolic positive roots with
  // negative pairing, so |Phi^+| bounds the loop.
  size_t guard = rs.positive_roots().size() + 1;
  for (;;) {
    int neg = -1;
    for (int g : generators) {
      if (rs.cartan_pairing(w, g) < 0) {
        neg = g;
        break;
      }
    }
    if (neg < 0) return w;
    w = rs.reflect(neg, w);
    if (guard-- == 0) throw std::logic_error("dominant_representative: no convergence");
  }
}

std::pair<int, int> oshima_check(const RootSystem& rs, const std::vector<int>& S, const RootVec& beta) {
  Stratum st = stratum(rs, S, beta);
  if (!st.nontrivial) throw std::invalid_argument("oshima_check: S does not meet the support of beta");

  std::vector<int> gens;
  for (int i = 0; i < rs.rank(); ++i) {
    if (!std::binary_search(st.S.begin(), st.S.end(), i)) gens.push_back(i);
  }

  std::map<RootVec, int> pos;
  for (size_t k = 0; k < st.roots.size(); ++k) pos[st.roots[k]] = static_cast<int>(k);

  // Partition the stratum under the generator reflections; they fix every
  // S-coordinate, so the stratum is stable.
  std::vector<int> comp(st.roots.size(), -1);
  int orbits = 0;
  for (size_t k = 0; k < st.roots.size(); ++k) {
    if (comp[k] >= 0) continue;
    comp[k] = orbits;
    std::vector<int> stack{static_cast<int>(k)};
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int g : gens) {
        RootVec w = rs.reflect(g, st.roots[cur]);
        auto it = pos.find(w);
        if (it == pos.end()) throw std::logic_error("oshima_check: reflection left the stratum");
        if (comp[it->second] < 0) {
          comp[it->second] = orbits;
          stack.push_back(it->second);
        }
      }
    }
    ++orbits;
  }

  int lengths = st.lengths_present == LengthProfile::Mixed ? 2 : 1;
  return {orbits, lengths};
}

BigInt stabilizer_order(const RootSystem& rs, const std::vector<int>& generators, const RationalVec& v) {
  RationalVec w = dominant_representative(rs, generators, v);
  std::vector<int> orthogonal;
  for (int g : generators) {
    if (rs.cartan_pairing(w, g) == 0) orthogonal.push_back(g);
  }
  return weyl_order(classify_subdiagram(rs, orthogonal));
}

std::vector<std::vector<int>> brute_force_group(const RootSystem& rs, const std::vector<int>& generators,
                                                size_t bound) {
  const size_t nroots = rs.roots().size();
  std::vector<std::vector<int>> gen_perm;
  for (int g : generators) {
    std::vector<int> p(nroots);
    for (size_t k = 0; k < nroots; ++k) {
      int idx = rs.root_index(rs.reflect(g, rs.roots()[k]));
      if (idx < 0) throw std::logic_error("brute_force_group: reflection produced a non-root");
      p[k] = idx;
    }
    gen_perm.push_back(std::move(p));
  }

  std::vector<int> id(nroots);
  for (size_t k = 0; k < nroots; ++k) id[k] = static_cast<int>(k);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> stack{id};
  while (!stack.empty()) {
    std::vector<int> cur = std::move(stack.back());
    stack.pop_back();
    for (const auto& g : gen_perm) {
      std::vector<int> nxt(nroots);
      for (size_t k = 0; k < nroots; ++k) nxt[k] = g[cur[k]];
      if (seen.insert(nxt).second) {
        if (seen.size() > bound) throw std::runtime_error("brute_force_group: order exceeds bound");
        stack.push_back(std::move(nxt));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace rootstrata
