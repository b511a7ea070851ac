#include "rootstrata/strata.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootstrata {

namespace {

std::vector<int> normalize_subset(const RootSystem& rs, const std::vector<int>& S) {
  std::vector<int> s = S;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int v : s) {
    if (v < 0 || v >= rs.rank()) throw std::invalid_argument("stratum: S index out of range");
  }
  return s;
}

bool leq_coords(const RootVec& a, const RootVec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (b[i] < a[i]) return false;
  }
  return true;
}

void sort_by_height_lex(std::vector<RootVec>& v) {
  std::sort(v.begin(), v.end(), [](const RootVec& a, const RootVec& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
}

bool meets_support(const std::vector<int>& S, const RootVec& beta) {
  for (int i : S) {
    if (beta[i] != 0) return true;
  }
  return false;
}

}  // namespace

const char* to_string(LengthProfile p) {
  switch (p) {
    case LengthProfile::ShortOnly: return "short-only";
    case LengthProfile::LongOnly: return "long-only";
    case LengthProfile::Mixed: return "mixed";
  }
  return "?";
}

Stratum stratum(const RootSystem& rs, const std::vector<int>& S, const RootVec& beta) {
  if (!rs.is_root(beta)) throw std::invalid_argument("stratum: beta is not a root");
  Stratum st;
  st.S = normalize_subset(rs, S);
  for (int i : st.S) st.level.emplace_back(i, beta[i]);
  st.nontrivial = meets_support(st.S, beta);

  for (const RootVec& gamma : rs.roots()) {
    bool in = true;
    for (int i : st.S) {
      if (gamma[i] != beta[i]) {
        in = false;
        break;
      }
    }
    if (in) st.roots.push_back(gamma);
  }
  sort_by_height_lex(st.roots);

  bool any_long = false, any_short = false;
  for (const RootVec& gamma : st.roots) {
    (rs.is_long(gamma) ? any_long : any_short) = true;
  }
  st.lengths_present = any_long && any_short ? LengthProfile::Mixed
                       : any_long           ? LengthProfile::LongOnly
                                            : LengthProfile::ShortOnly;

  if (st.nontrivial) {
    // Direct scan in coordinate order; existence and uniqueness come with the
    // interval structure of the stratum and are re-checked here.
    for (const RootVec& cand : st.roots) {
      bool is_min = true, is_max = true;
      for (const RootVec& other : st.roots) {
        if (!leq_coords(cand, other)) is_min = false;
        if (!leq_coords(other, cand)) is_max = false;
      }
      if (is_min) st.min_root = cand;
      if (is_max) st.max_root = cand;
    }
    if (!st.min_root || !st.max_root) {
      throw std::logic_error("stratum: no coordinate-order minimum/maximum found");
    }
    if (st.lengths_present == LengthProfile::Mixed) {
      std::optional<RootVec> top_short;
      int count_maximal_short = 0;
      for (const RootVec& cand : st.roots) {
        if (rs.is_long(cand)) continue;
        bool maximal = true;
        for (const RootVec& other : st.roots) {
          if (rs.is_long(other) || other == cand) continue;
          if (leq_coords(cand, other)) maximal = false;
        }
        if (maximal) {
          ++count_maximal_short;
          top_short = cand;
        }
      }
      if (count_maximal_short != 1) {
        throw std::logic_error("stratum: maximal short root not unique");
      }
      st.max_short = top_short;
    }
  }
  return st;
}

std::vector<RootVec> z_stratum(const RootSystem& rs, const std::vector<int>& S, const RootVec& beta) {
  if (!rs.is_root(beta)) throw std::invalid_argument("z_stratum: beta is not a root");
  std::vector<int> s = normalize_subset(rs, S);
  std::vector<RootVec> out;
  for (const RootVec& gamma : rs.roots()) {
    // Need one integer k with gamma_i = k * beta_i for all i in S.
    bool ok = true;
    bool k_fixed = false;
    // k is determined by any i with beta_i != 0; coordinates with beta_i = 0
    // force gamma_i = 0.
    long num = 0, den = 1;
    for (int i : s) {
      if (beta[i] == 0) {
        if (gamma[i] != 0) {
          ok = false;
          break;
        }
      } else if (!k_fixed) {
        if (gamma[i] % beta[i] != 0) {
          ok = false;
          break;
        }
        num = gamma[i] / beta[i];
        den = 1;
        k_fixed = true;
      } else {
        if (gamma[i] != num * beta[i]) {
          ok = false;
          break;
        }
      }
    }
    (void)den;
    if (ok) out.push_back(gamma);
  }
  sort_by_height_lex(out);
  return out;
}

SubsystemBasis z_stratum_basis(const RootSystem& rs, const std::vector<int>& S, const RootVec& beta,
                               BasisSide side) {
  std::vector<int> s = normalize_subset(rs, S);
  if (!meets_support(s, beta)) {
    throw std::invalid_argument("z_stratum_basis: S does not meet the support of beta");
  }
  Stratum st = stratum(rs, s, beta);
  SubsystemBasis b;
  if (side == BasisSide::Min) {
    b.gamma = *st.min_root;
  } else {
    b.gamma = *st.max_root;
    for (int& c : b.gamma) c = -c;
  }
  for (int i = 0; i < rs.rank(); ++i) {
    if (!std::binary_search(s.begin(), s.end(), i)) b.rest.push_back(i);
  }
  b.basis.push_back(b.gamma);
  for (int i : b.rest) b.basis.push_back(rs.simple_root(i));

  const int m = static_cast<int>(b.basis.size());
  std::vector<std::vector<int>> cartan(m, std::vector<int>(m));
  std::vector<Rational> norms(m);
  for (int i = 0; i < m; ++i) {
    norms[i] = rs.norm2(b.basis[i]);
    for (int j = 0; j < m; ++j) cartan[i][j] = rs.coroot_pairing(b.basis[i], b.basis[j]);
  }
  b.components = classify_cartan(cartan, norms);
  return b;
}

std::vector<RootVec> dominant_in_stratum(const RootSystem& rs, const std::vector<int>& S,
                                         const RootVec& beta) {
  std::vector<int> s = normalize_subset(rs, S);
  if (!meets_support(s, beta)) {
    throw std::invalid_argument("dominant_in_stratum: S does not meet the support of beta");
  }
  Stratum st = stratum(rs, s, beta);
  std::vector<RootVec> rest_dominant;
  for (const RootVec& gamma : st.roots) {
    bool dom = true;
    for (int i = 0; i < rs.rank(); ++i) {
      if (std::binary_search(s.begin(), s.end(), i)) continue;
      if (rs.cartan_pairing(gamma, i) < 0) {
        dom = false;
        break;
      }
    }
    if (dom) rest_dominant.push_back(gamma);
  }
  int longs = 0, shorts = 0;
  for (const RootVec& g : rest_dominant) (rs.is_long(g) ? longs : shorts)++;
  bool has_long = false, has_short = false;
  for (const RootVec& g : st.roots) (rs.is_long(g) ? has_long : has_short) = true;
  if (longs != (has_long ? 1 : 0) || shorts != (has_short ? 1 : 0)) {
    throw std::logic_error("dominant_in_stratum: dominant representative not unique per length");
  }
  // Maximal length first; the first entry equals max_root.
  std::sort(rest_dominant.begin(), rest_dominant.end(), [&](const RootVec& a, const RootVec& b) {
    return rs.norm2(a) > rs.norm2(b);
  });
  if (rest_dominant.front() != *st.max_root) {
    throw std::logic_error("dominant_in_stratum: maximal-length dominant root is not max_root");
  }
  return rest_dominant;
}

LengthProfile length_profile(const RootSystem& rs, const std::vector<int>& S, const RootVec& beta) {
  SubsystemBasis b = z_stratum_basis(rs, S, beta, BasisSide::Min);
  if (rs.is_short(b.gamma)) return LengthProfile::ShortOnly;
  // gamma sits at basis position 0; find its component.
  for (const DiagramComponent& c : b.components) {
    bool contains_gamma = false;
    bool has_short = false;
    for (int pos : c.vertices) {
      if (pos == 0) contains_gamma = true;
      if (rs.is_short(b.basis[pos])) has_short = true;
    }
    if (contains_gamma) return has_short ? LengthProfile::Mixed : LengthProfile::LongOnly;
  }
  throw std::logic_error("length_profile: min root not found in any component");
}

bool lacing_criterion(const RootSystem& rs, const std::vector<int>& S, const RootVec& beta) {
  std::vector<int> s = normalize_subset(rs, S);
  if (!meets_support(s, beta)) {
    throw std::invalid_argument("lacing_criterion: S does not meet the support of beta");
  }
  if (!rs.is_root(beta)) throw std::invalid_argument("lacing_criterion: beta is not a root");
  for (int i : s) {
    if (rs.is_short(rs.simple_root(i)) && beta[i] % rs.lacing() != 0) return false;
  }
  return true;
}

int short_witness(const RootSystem& rs, const RootVec& mu) {
  if (rs.lacing() == 1) throw std::invalid_argument("short_witness: system is simply laced");
  if (!rs.is_root(mu) || !rs.is_short(mu) || height(mu) <= 0) {
    throw std::invalid_argument("short_witness: mu must be a short positive root");
  }
  for (int i = 0; i < rs.rank(); ++i) {
    if (mu[i] == 0) throw std::invalid_argument("short_witness: mu must have full support");
  }
  for (int i = 0; i < rs.rank(); ++i) {
    if (!rs.is_short(rs.simple_root(i))) continue;
    if (mu[i] % rs.lacing() == 0) continue;
    RootVec up = mu;
    up[i] += 1;
    if (rs.is_root(up)) return i;
  }
  throw std::logic_error("short_witness: no witness found for " + to_string(mu));
}

Stratum level_stratum(const RootSystem& rs, int i, int k) {
  if (i < 0 || i >= rs.rank()) throw std::invalid_argument("level_stratum: index out of range");
  int m = rs.marks()[i];
  if (k < -m || k > m) {
    throw std::invalid_argument("level_stratum: |k| exceeds the mark of alpha_" + std::to_string(i + 1));
  }
  if (k == 0) {
    // Parabolic level; any root with zero i-th coordinate works as beta proxy.
    Stratum st;
    st.S = {i};
    st.level = {{i, 0}};
    st.nontrivial = false;
    for (const RootVec& gamma : rs.roots()) {
      if (gamma[i] == 0) st.roots.push_back(gamma);
    }
    sort_by_height_lex(st.roots);
    bool any_long = false, any_short = false;
    for (const RootVec& gamma : st.roots) (rs.is_long(gamma) ? any_long : any_short) = true;
    st.lengths_present = any_long && any_short ? LengthProfile::Mixed
                         : any_long           ? LengthProfile::LongOnly
                                              : LengthProfile::ShortOnly;
    return st;
  }
  RootVec beta;
  for (const RootVec& gamma : rs.roots()) {
    if (gamma[i] == k) {
      beta = gamma;
      break;
    }
  }
  if (beta.empty()) throw std::logic_error("level_stratum: empty level within mark bound");
  return stratum(rs, {i}, beta);
}

}  // namespace rootstrata
