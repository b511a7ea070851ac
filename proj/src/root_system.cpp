#include "rootstrata/root_system.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

namespace rootstrata {

namespace {

struct CartanSeed {
  std::vector<std::vector<int>> cartan;
  std::vector<Rational> norms;  // (alpha_i, alpha_i)
  int lacing;
};

// Bourbaki plate numbering for every family.
CartanSeed cartan_seed(const RootSystemSpec& spec) {
  const int n = spec.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto single = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  std::vector<Rational> norms(n, Rational(2));
  int lacing = 1;

  switch (spec.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) single(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 2 < n; ++i) single(i, i + 1);
      a[n - 2][n - 1] = -2;
      a[n - 1][n - 2] = -1;
      norms[n - 1] = 1;
      lacing = 2;
      break;
    case Family::C:
      for (int i = 0; i + 2 < n; ++i) single(i, i + 1);
      a[n - 2][n - 1] = -1;
      a[n - 1][n - 2] = -2;
      for (int i = 0; i + 1 < n; ++i) norms[i] = 1;
      lacing = 2;
      break;
    case Family::D:
      for (int i = 0; i + 3 < n; ++i) single(i, i + 1);
      single(n - 3, n - 2);
      single(n - 3, n - 1);
      break;
    case Family::E:
      single(0, 2);
      single(2, 3);
      single(3, 4);
      single(4, 5);
      if (n >= 7) single(5, 6);
      if (n >= 8) single(6, 7);
      single(1, 3);
      break;
    case Family::F:
      single(0, 1);
      a[1][2] = -2;
      a[2][1] = -1;
      single(2, 3);
      norms[2] = norms[3] = 1;
      lacing = 2;
      break;
    case Family::G:
      a[0][1] = -1;
      a[1][0] = -3;
      norms[0] = Rational(2, 3);
      lacing = 3;
      break;
  }
  return {std::move(a), std::move(norms), lacing};
}

}  // namespace

RootSystem::RootSystem(RootSystemSpec spec) : spec_(spec), rank_(spec.rank) {
  CartanSeed seed = cartan_seed(spec_);
  cartan_ = std::move(seed.cartan);
  lacing_ = seed.lacing;

  form_.assign(rank_, RationalVec(rank_, Rational(0)));
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) form_[i][j] = Rational(cartan_[i][j]) * seed.norms[j] / 2;
  }
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) {
      if (form_[i][j] != form_[j][i]) throw std::logic_error("cartan seed: asymmetric form");
    }
  }
  form_inverse_ = invert(form_);
  {
    RationalMatrix a(rank_, RationalVec(rank_));
    for (int i = 0; i < rank_; ++i) {
      for (int j = 0; j < rank_; ++j) a[i][j] = cartan_[i][j];
    }
    cartan_inverse_ = invert(a);
  }

  // Positive roots by closure under root strings from the simple roots:
  // gamma + alpha_i is a root iff p - (gamma, alpha_i^vee) > 0, where p is the
  // largest integer with gamma - p*alpha_i a root.
  std::set<RootVec> known;
  std::vector<RootVec> frontier;
  for (int i = 0; i < rank_; ++i) {
    RootVec e(rank_, 0);
    e[i] = 1;
    known.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<RootVec> next;
    for (const RootVec& gamma : frontier) {
      for (int i = 0; i < rank_; ++i) {
        int p = 0;
        RootVec down = gamma;
        for (;;) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        int pair = 0;
        for (int j = 0; j < rank_; ++j) pair += gamma[j] * cartan_[j][i];
        if (p - pair > 0) {
          RootVec up = gamma;
          up[i] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }

  positive_roots_.assign(known.begin(), known.end());
  std::sort(positive_roots_.begin(), positive_roots_.end(), [](const RootVec& a, const RootVec& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  int top = height(positive_roots_.back());
  int at_top = 0;
  for (const RootVec& r : positive_roots_) {
    if (height(r) == top) ++at_top;
  }
  if (at_top != 1) throw std::logic_error("root generation: highest root not unique");
  highest_root_ = positive_roots_.back();
  marks_ = highest_root_;

  roots_ = positive_roots_;
  for (const RootVec& r : positive_roots_) {
    RootVec neg(rank_);
    for (int i = 0; i < rank_; ++i) neg[i] = -r[i];
    roots_.push_back(neg);
  }
  for (size_t k = 0; k < roots_.size(); ++k) root_index_[roots_[k]] = static_cast<int>(k);

  for (const RootVec& r : roots_) {
    Rational n2 = norm2(r);
    if (n2 != 2 && n2 != Rational(2) / lacing_) {
      throw std::logic_error("root generation: unexpected root length in " + spec_.name());
    }
    long_flag_[r] = (n2 == 2);
  }
}

bool RootSystem::is_root(const RootVec& v) const { return root_index_.count(v) > 0; }

int RootSystem::root_index(const RootVec& v) const {
  auto it = root_index_.find(v);
  return it == root_index_.end() ? -1 : it->second;
}

RootVec RootSystem::simple_root(int i) const {
  if (i < 0 || i >= rank_) throw std::invalid_argument("simple root index out of range");
  RootVec e(rank_, 0);
  e[i] = 1;
  return e;
}

Rational RootSystem::norm2(const RootVec& v) const {
  auto it = long_flag_.find(v);
  if (it != long_flag_.end()) return it->second ? Rational(2) : Rational(2) / lacing_;
  Rational s(0);
  for (int i = 0; i < rank_; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (v[j] == 0) continue;
      s += Rational(v[i] * v[j]) * form_[i][j];
    }
  }
  return s;
}

int RootSystem::cartan_pairing(const RootVec& v, int i) const {
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += v[j] * cartan_[j][i];
  return s;
}

Rational RootSystem::cartan_pairing(const RationalVec& v, int i) const {
  Rational s(0);
  for (int j = 0; j < rank_; ++j) s += v[j] * cartan_[j][i];
  return s;
}

Rational RootSystem::pairing(const RationalVec& a, const RationalVec& b) const {
  Rational s(0);
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (b[j] == 0) continue;
      s += a[i] * b[j] * form_[i][j];
    }
  }
  return s;
}

Rational RootSystem::pairing(const RootVec& a, const RationalVec& b) const {
  return pairing(to_rational(a), b);
}

int RootSystem::coroot_pairing(const RootVec& x, const RootVec& y) const {
  Rational v = 2 * pairing(to_rational(x), to_rational(y)) / norm2(y);
  if (v.get_den() != 1) throw std::invalid_argument("coroot_pairing: non-integral pairing");
  long r = v.get_num().get_si();
  return static_cast<int>(r);
}

RootVec RootSystem::reflect(int i, const RootVec& v) const {
  if (i < 0 || i >= rank_) throw std::invalid_argument("reflect: index out of range");
  RootVec r = v;
  r[i] -= cartan_pairing(v, i);
  return r;
}

RationalVec RootSystem::reflect(int i, const RationalVec& v) const {
  if (i < 0 || i >= rank_) throw std::invalid_argument("reflect: index out of range");
  RationalVec r = v;
  r[i] -= cartan_pairing(v, i);
  return r;
}

std::vector<int> RootSystem::support(const RootVec& v) const {
  std::vector<int> s;
  for (int i = 0; i < rank_; ++i) {
    if (v[i] != 0) s.push_back(i);
  }
  return s;
}

RootSystem build_root_system(RootSystemSpec spec) { return RootSystem(spec); }

const RootSystem& canonical_system(RootSystemSpec spec) {
  static std::mutex mu;
  static std::map<RootSystemSpec, std::unique_ptr<const RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(spec);
  if (it == cache.end()) {
    it = cache.emplace(spec, std::make_unique<const RootSystem>(spec)).first;
  }
  return *it->second;
}

const RootSystem& canonical_system(Family f, int rank) {
  return canonical_system(RootSystemSpec(f, rank));
}

std::vector<std::vector<int>> canonical_cartan(Family f, int rank) {
  return cartan_seed(RootSystemSpec(f, rank)).cartan;
}

RationalMatrix inverse_cartan(const RootSystem& rs) { return rs.cartan_inverse(); }

RationalVec coweight(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank()) throw std::invalid_argument("coweight: index out of range");
  return rs.form_inverse()[i];
}

RationalVec weight(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank()) throw std::invalid_argument("weight: index out of range");
  return rs.cartan_inverse()[i];
}

bool root_poset_leq(const RootSystem& rs, const RootVec& beta, const RootVec& gamma) {
  if (!rs.is_root(beta) || !rs.is_root(gamma)) {
    throw std::invalid_argument("root_poset_leq: non-root input");
  }
  for (int i = 0; i < rs.rank(); ++i) {
    if (gamma[i] < beta[i]) return false;
  }
  return true;
}

std::vector<std::vector<int>> extended_diagram_vertices(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<std::vector<int>> adj(n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rs.cartan()[i][j] != 0) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  // The affine node is adjacent to the simple roots not orthogonal to theta.
  for (int i = 0; i < n; ++i) {
    if (rs.cartan_pairing(rs.highest_root(), i) != 0) {
      adj[n].push_back(i);
      adj[i].push_back(n);
    }
  }
  return adj;
}

}  // namespace rootstrata
