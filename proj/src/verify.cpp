#include "rootstrata/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rootstrata/enumeration.hpp"
#include "rootstrata/orbits.hpp"
#include "rootstrata/polytope.hpp"
#include "rootstrata/simplex.hpp"
#include "rootstrata/strata.hpp"

namespace rootstrata {

namespace {

struct SBPair {
  std::vector<int> S;
  RootVec beta;
};

uint64_t name_seed(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

bool meets_support(const std::vector<int>& S, const RootVec& beta) {
  for (int i : S) {
    if (beta[i] != 0) return true;
  }
  return false;
}

std::vector<int> mask_to_subset(unsigned mask, int n) {
  std::vector<int> s;
  for (int i = 0; i < n; ++i) {
    if (mask & (1u << i)) s.push_back(i);
  }
  return s;
}

// Every (S, beta) with S nonempty of size <= max_size and beta a positive
// root whose support meets S.
std::vector<SBPair> bounded_pairs(const RootSystem& rs, int max_size) {
  std::vector<SBPair> out;
  const int n = rs.rank();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) > max_size) continue;
    std::vector<int> S = mask_to_subset(mask, n);
    for (const RootVec& beta : rs.positive_roots()) {
      if (meets_support(S, beta)) out.push_back({S, beta});
    }
  }
  return out;
}

std::vector<SBPair> exhaustive_pairs(const RootSystem& rs) { return bounded_pairs(rs, rs.rank()); }

std::vector<SBPair> sampled_pairs(const RootSystem& rs, size_t count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = rs.rank();
  std::vector<SBPair> out;
  while (out.size() < count) {
    unsigned mask = 1u + static_cast<unsigned>(rng() % ((1u << n) - 1));
    std::vector<int> S = mask_to_subset(mask, n);
    std::vector<const RootVec*> candidates;
    for (const RootVec& beta : rs.positive_roots()) {
      if (meets_support(S, beta)) candidates.push_back(&beta);
    }
    if (candidates.empty()) continue;
    out.push_back({S, *candidates[rng() % candidates.size()]});
  }
  return out;
}

std::vector<SBPair> coverage_pairs(const RootSystem& rs, int exhaustive_rank, size_t samples,
                                   const std::string& tag) {
  if (rs.rank() <= exhaustive_rank) return exhaustive_pairs(rs);
  std::vector<SBPair> out = bounded_pairs(rs, 2);
  auto extra = sampled_pairs(rs, samples, name_seed(tag + rs.spec().name()));
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

int classical_coxeter_number(const RootSystemSpec& s) {
  switch (s.family) {
    case Family::A: return s.rank + 1;
    case Family::B:
    case Family::C: return 2 * s.rank;
    case Family::D: return 2 * s.rank - 2;
    case Family::E: return s.rank == 6 ? 12 : s.rank == 7 ? 18 : 30;
    case Family::F: return 12;
    case Family::G: return 6;
  }
  return 0;
}

CheckResult result(std::string name, bool pass, std::string detail) {
  return {std::move(name), pass, std::move(detail)};
}

std::string fail_at(const std::vector<int>& S, const RootVec& beta) {
  std::string s = "S={";
  for (size_t i = 0; i < S.size(); ++i) s += (i ? "," : "") + std::to_string(S[i] + 1);
  return s + "} beta=" + to_string(beta);
}

// Membership test independent of the closure generator: reflect towards a
// simple root, strictly reducing height.
bool is_root_by_descent(const RootSystem& rs, RootVec v) {
  bool nonneg = true, nonpos = true;
  for (int c : v) {
    if (c > 0) nonpos = false;
    if (c < 0) nonneg = false;
  }
  if (!nonneg && !nonpos) return false;
  if (nonpos) {
    for (int& c : v) c = -c;
  }
  for (int guard = 0; guard < 1000; ++guard) {
    int nonzero = 0, last = -1;
    for (int i = 0; i < rs.rank(); ++i) {
      if (v[i] != 0) {
        ++nonzero;
        last = i;
      }
    }
    if (nonzero == 1 && v[last] == 1) return true;
    int drop = -1;
    for (int i = 0; i < rs.rank(); ++i) {
      if (rs.cartan_pairing(v, i) > 0) {
        drop = i;
        break;
      }
    }
    if (drop < 0) return false;
    v = rs.reflect(drop, v);
    for (int c : v) {
      if (c < 0) return false;
    }
  }
  return false;
}

// Integer coordinates of a subsystem root in the basis {gamma} u (Pi \ S);
// nullopt when inconsistent. The S-coordinates pin the gamma-coefficient.
std::optional<std::vector<int>> basis_coordinates(const std::vector<int>& S, const RootVec& gamma,
                                                  const RootVec& v) {
  int pivot = -1;
  for (int s : S) {
    if (gamma[s] != 0) {
      pivot = s;
      break;
    }
  }
  if (pivot < 0 || v[pivot] % gamma[pivot] != 0) return std::nullopt;
  int a = v[pivot] / gamma[pivot];
  std::vector<int> coords{a};
  for (int s : S) {
    if (v[s] != a * gamma[s]) return std::nullopt;
  }
  for (size_t j = 0; j < v.size(); ++j) {
    if (std::binary_search(S.begin(), S.end(), static_cast<int>(j))) continue;
    coords.push_back(v[j] - a * gamma[j]);
  }
  return coords;
}

// ---------------------------------------------------------------------------
// Per-system checks
// ---------------------------------------------------------------------------

CheckResult check_core(const RootSystemSpec& spec) {
  const RootSystem& rs = canonical_system(spec);
  const int n = rs.rank();
  long issues = 0;
  std::string note;

  if (static_cast<int>(rs.roots().size()) != n * classical_coxeter_number(spec)) {
    ++issues;
    note = "root count != rank * coxeter number";
  }
  for (int i = 0; i < n && !issues; ++i) {
    for (int j = 0; j < n; ++j) {
      int a = rs.cartan()[i][j];
      if (i == j && a != 2) ++issues;
      if (i != j && (a > 0 || a < -3)) ++issues;
      int prod = rs.cartan()[i][j] * rs.cartan()[j][i];
      if (i != j && prod != 0 && prod != 1 && prod != 2 && prod != 3) ++issues;
      if (rs.form()[i][j] != rs.form()[j][i]) ++issues;
    }
  }
  for (const RootVec& r : rs.positive_roots()) {
    RootVec neg = r;
    for (int& c : neg) c = -c;
    if (!rs.is_root(neg)) ++issues;
    // connected support
    auto sup = rs.support(r);
    std::set<int> seen{sup[0]};
    std::vector<int> stack{sup[0]};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : sup) {
        if (!seen.count(u) && rs.cartan()[v][u] != 0) {
          seen.insert(u);
          stack.push_back(u);
        }
      }
    }
    if (seen.size() != sup.size()) {
      ++issues;
      note = "disconnected support at " + to_string(r);
    }
    if (!root_poset_leq(rs, r, rs.highest_root())) {
      ++issues;
      note = "highest root is not the poset maximum";
    }
    // long iff every short simple coordinate divisible by the lacing number
    bool divisible = true;
    for (int i = 0; i < n; ++i) {
      if (rs.is_short(rs.simple_root(i)) && r[i] % rs.lacing() != 0) divisible = false;
    }
    if (divisible != rs.is_long(r)) {
      ++issues;
      note = "length/divisibility mismatch at " + to_string(r);
    }
  }
  {
    RootVec sum(n, 1);
    if (!rs.is_root(sum)) {
      ++issues;
      note = "sum of simple roots is not a root";
    }
  }
  // dual-basis identities
  for (int i = 0; i < n && !issues; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational cw = rs.pairing(coweight(rs, i), to_rational(rs.simple_root(j)));
      if (cw != (i == j ? 1 : 0)) ++issues;
      Rational w = rs.cartan_pairing(weight(rs, i), j);
      if (w != (i == j ? 1 : 0)) ++issues;
    }
  }
  {
    RationalMatrix a(n, RationalVec(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = rs.cartan()[i][j];
    }
    if (matmul(rs.cartan_inverse(), a) != identity_matrix(n)) {
      ++issues;
      note = "inverse Cartan identity failed";
    }
  }
  if (n <= 4) {
    // Closure-generated set == bounded integer vectors of root norm passing
    // the reflection-descent membership test.
    std::set<RootVec> brute;
    RootVec v(n, 0);
    const auto& m = rs.marks();
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == n) {
        bool zero = std::all_of(v.begin(), v.end(), [](int c) { return c == 0; });
        if (zero) return;
        Rational n2 = rs.norm2(v);
        if (n2 != 2 && n2 != Rational(2) / rs.lacing()) return;
        if (is_root_by_descent(rs, v)) brute.insert(v);
        return;
      }
      for (int c = -m[pos]; c <= m[pos]; ++c) {
        v[pos] = c;
        self(self, pos + 1);
      }
      v[pos] = 0;
    };
    rec(rec, 0);
    std::set<RootVec> generated(rs.roots().begin(), rs.roots().end());
    if (brute != generated) {
      ++issues;
      note = "closure set differs from brute-force set";
    }
  }
  std::string detail = "roots=" + std::to_string(rs.roots().size());
  if (issues) detail += " issues=" + std::to_string(issues) + " " + note;
  return result("core.invariants[" + spec.name() + "]", issues == 0, detail);
}

CheckResult check_interval_bases(const RootSystemSpec& spec) {
  const RootSystem& rs = canonical_system(spec);
  auto pairs = coverage_pairs(rs, 6, 1000, "interval");
  long failures = 0;
  std::string first;
  for (const SBPair& p : pairs) {
    Stratum st = stratum(rs, p.S, p.beta);
    if (!st.min_root || !st.max_root || rs.norm2(*st.min_root) != rs.norm2(*st.max_root)) {
      if (!failures++) first = fail_at(p.S, p.beta) + " min/max";
      continue;
    }
    size_t interval = 0;
    for (const RootVec& gamma : rs.roots()) {
      bool in = true;
      for (int i = 0; i < rs.rank(); ++i) {
        if (gamma[i] < (*st.min_root)[i] || gamma[i] > (*st.max_root)[i]) {
          in = false;
          break;
        }
      }
      if (in) ++interval;
    }
    if (interval != st.roots.size()) {
      if (!failures++) first = fail_at(p.S, p.beta) + " interval";
      continue;
    }
    auto zroots = z_stratum(rs, p.S, p.beta);
    for (BasisSide side : {BasisSide::Min, BasisSide::Max}) {
      SubsystemBasis basis = z_stratum_basis(rs, p.S, p.beta, side);
      for (const RootVec& gamma : zroots) {
        auto coords = basis_coordinates(st.S, basis.gamma, gamma);
        bool ok = coords.has_value();
        if (ok) {
          bool nonneg = true, nonpos = true;
          for (int c : *coords) {
            if (c > 0) nonpos = false;
            if (c < 0) nonneg = false;
          }
          ok = nonneg || nonpos;
        }
        if (!ok) {
          if (!failures++) first = fail_at(p.S, p.beta) + " basis sign";
          break;
        }
      }
    }
  }
  std::string detail = "pairs=" + std::to_string(pairs.size());
  if (failures) detail += " failures=" + std::to_string(failures) + " first: " + first;
  return result("strata.interval_bases[" + spec.name() + "]", failures == 0, detail);
}

CheckResult check_oshima(const RootSystemSpec& spec) {
  const RootSystem& rs = canonical_system(spec);
  auto pairs = coverage_pairs(rs, 6, 1000, "oshima");
  long failures = 0;
  std::string first;
  for (const SBPair& p : pairs) {
    auto [orbits, lengths] = oshima_check(rs, p.S, p.beta);
    if (orbits != lengths) {
      if (!failures++) {
        first = fail_at(p.S, p.beta) + " orbits=" + std::to_string(orbits) +
                " lengths=" + std::to_string(lengths);
      }
    }
  }
  std::string detail = "pairs=" + std::to_string(pairs.size());
  if (failures) detail += " failures=" + std::to_string(failures) + " first: " + first;
  return result("orbits.oshima[" + spec.name() + "]", failures == 0, detail);
}

CheckResult check_profiles(const RootSystemSpec& spec) {
  const RootSystem& rs = canonical_system(spec);
  auto pairs = rs.rank() <= 4 ? exhaustive_pairs(rs)
                              : sampled_pairs(rs, 1000, name_seed("profiles" + spec.name()));
  long failures = 0;
  std::string first;
  for (const SBPair& p : pairs) {
    Stratum st = stratum(rs, p.S, p.beta);
    LengthProfile structural = length_profile(rs, p.S, p.beta);
    bool lacing_ok = lacing_criterion(rs, p.S, p.beta) == (st.lengths_present != LengthProfile::ShortOnly);
    if (structural != st.lengths_present || !lacing_ok) {
      if (!failures++) {
        first = fail_at(p.S, p.beta) + " scan=" + to_string(st.lengths_present) +
                " structural=" + to_string(structural);
      }
    }
  }
  std::string detail = "pairs=" + std::to_string(pairs.size());
  if (failures) detail += " failures=" + std::to_string(failures) + " first: " + first;
  return result("strata.profiles[" + spec.name() + "]", failures == 0, detail);
}

CheckResult check_dominant_reps(const RootSystemSpec& spec) {
  const RootSystem& rs = canonical_system(spec);
  auto pairs = rs.rank() <= 4 ? exhaustive_pairs(rs)
                              : sampled_pairs(rs, 300, name_seed("domreps" + spec.name()));
  long failures = 0;
  long mixed = 0, sigma_dominant = 0;
  std::string first;
  for (const SBPair& p : pairs) {
    Stratum st = stratum(rs, p.S, p.beta);
    std::vector<RootVec> reps;
    try {
      reps = dominant_in_stratum(rs, p.S, p.beta);
    } catch (const std::exception& e) {
      if (!failures++) first = fail_at(p.S, p.beta) + " " + e.what();
      continue;
    }
    size_t expected = st.lengths_present == LengthProfile::Mixed ? 2 : 1;
    bool ok = reps.size() == expected && reps.front() == *st.max_root;
    if (ok && st.lengths_present == LengthProfile::Mixed) {
      ++mixed;
      ok = st.max_short && reps.back() == *st.max_short;
      if (ok) ++sigma_dominant;
    }
    if (!ok && !failures++) first = fail_at(p.S, p.beta) + " dominant reps";
  }
  std::string detail = "pairs=" + std::to_string(pairs.size()) + " mixed=" + std::to_string(mixed) +
                       " sigma_dominant=" + std::to_string(sigma_dominant);
  if (failures) detail += " failures=" + std::to_string(failures) + " first: " + first;
  return result("strata.dominant_reps[" + spec.name() + "]", failures == 0, detail);
}

CheckResult check_duality(const RootSystemSpec& spec) {
  const RootSystem& rs = canonical_system(spec);
  std::string name = "strata.duality[" + spec.name() + "]";
  if (rs.lacing() == 1) return result(name, true, "simply laced, nothing to check");

  RootSystemSpec dual_spec = spec;
  if (spec.family == Family::B && spec.rank >= 3) dual_spec = RootSystemSpec(Family::C, spec.rank);
  else if (spec.family == Family::C) dual_spec = RootSystemSpec(Family::B, spec.rank);
  const RootSystem& dual = canonical_system(dual_spec);

  // Index map onto the Bourbaki numbering of the dual system.
  std::vector<int> iota(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) iota[i] = i;
  if (spec.family == Family::B && spec.rank == 2) iota = {1, 0};
  if (spec.family == Family::F) iota = {3, 2, 1, 0};
  if (spec.family == Family::G) iota = {1, 0};

  auto coroot_coords = [&](const RootVec& gamma) {
    RootVec d(rs.rank(), 0);
    for (int i = 0; i < rs.rank(); ++i) {
      Rational c = Rational(gamma[i]) * rs.form()[i][i] / rs.norm2(gamma);
      if (c.get_den() != 1) throw std::logic_error("coroot coordinates not integral");
      d[iota[i]] = static_cast<int>(c.get_num().get_si());
    }
    return d;
  };

  auto pairs = rs.rank() <= 4 ? exhaustive_pairs(rs)
                              : sampled_pairs(rs, 300, name_seed("duality" + spec.name()));
  long failures = 0, checked = 0;
  std::string first;
  for (const SBPair& p : pairs) {
    Stratum st = stratum(rs, p.S, p.beta);
    RootVec beta_s;
    for (const RootVec& g : st.roots) {
      if (rs.is_short(g)) {
        beta_s = g;
        break;
      }
    }
    if (beta_s.empty()) continue;
    ++checked;
    std::vector<int> S_dual;
    for (int i : st.S) S_dual.push_back(iota[i]);
    Stratum dual_st = stratum(dual, S_dual, coroot_coords(beta_s));
    std::set<RootVec> expected;
    for (const RootVec& g : st.roots) {
      if (rs.is_short(g)) expected.insert(coroot_coords(g));
    }
    std::set<RootVec> got;
    for (const RootVec& g : dual_st.roots) {
      if (dual.is_long(g)) got.insert(g);
    }
    if (expected != got) {
      if (!failures++) first = fail_at(p.S, p.beta);
    }
  }
  std::string detail = "pairs_with_short=" + std::to_string(checked);
  if (failures) detail += " failures=" + std::to_string(failures) + " first: " + first;
  return result(name, failures == 0, detail);
}

CheckResult check_witness(const RootSystemSpec& spec) {
  const RootSystem& rs = canonical_system(spec);
  std::string name = "strata.short_witness[" + spec.name() + "]";
  if (rs.lacing() == 1) return result(name, true, "simply laced, nothing to check");
  long found = 0, failures = 0;
  std::string first;
  for (const RootVec& mu : rs.positive_roots()) {
    if (!rs.is_short(mu)) continue;
    bool full = true;
    for (int c : mu) {
      if (c == 0) full = false;
    }
    if (!full) continue;
    try {
      int g = short_witness(rs, mu);
      RootVec up = mu;
      up[g] += 1;
      if (!rs.is_root(up) || mu[g] % rs.lacing() == 0 || !rs.is_short(rs.simple_root(g))) {
        throw std::logic_error("witness does not satisfy the contract");
      }
      ++found;
    } catch (const std::exception& e) {
      if (!failures++) first = to_string(mu) + " " + e.what();
    }
  }
  std::string detail = "full_support_short_roots=" + std::to_string(found);
  if (failures) detail += " failures=" + std::to_string(failures) + " first: " + first;
  return result(name, failures == 0, detail);
}

CheckResult check_projection_lemmas(const RootSystemSpec& spec) {
  const RootSystem& rs = canonical_system(spec);
  auto pairs = rs.rank() <= 3 ? exhaustive_pairs(rs)
                              : sampled_pairs(rs, 200, name_seed("projlem" + spec.name()));
  std::mt19937_64 rng(name_seed("projword" + spec.name()));
  long failures = 0;
  std::string first;
  for (const SBPair& p : pairs) {
    Stratum st = stratum(rs, p.S, p.beta);
    std::vector<int> rest;
    for (int i = 0; i < rs.rank(); ++i) {
      if (!std::binary_search(st.S.begin(), st.S.end(), i)) rest.push_back(i);
    }
    RationalVec beta_perp =
        sub(to_rational(p.beta), project_to_span(rs, rest, to_rational(p.beta)));
    bool ok = true;
    for (const RootVec& gamma : st.roots) {
      RationalVec proj = project_to_span(rs, rest, to_rational(gamma));
      if (sub(to_rational(gamma), proj) != beta_perp) {
        ok = false;
        break;
      }
    }
    // pi_A commutes with the parabolic action
    if (ok && !rest.empty() && !st.roots.empty()) {
      for (int trial = 0; trial < 5 && ok; ++trial) {
        const RootVec& gamma = st.roots[rng() % st.roots.size()];
        RationalVec lhs = to_rational(gamma), rhs = project_to_span(rs, rest, to_rational(gamma));
        for (int step = 0; step < 6; ++step) {
          int g = rest[rng() % rest.size()];
          lhs = rs.reflect(g, lhs);
          rhs = rs.reflect(g, rhs);
        }
        if (project_to_span(rs, rest, lhs) != rhs) ok = false;
      }
    }
    // the wall projector and the Gram projector agree in codimension one
    if (ok && st.S.size() == 1) {
      RationalVec a = project_to_wall(rs, st.S[0], to_rational(p.beta));
      if (a != project_to_span(rs, rest, to_rational(p.beta))) ok = false;
    }
    if (!ok && !failures++) first = fail_at(p.S, p.beta);
  }
  std::string detail = "pairs=" + std::to_string(pairs.size());
  if (failures) detail += " failures=" + std::to_string(failures) + " first: " + first;
  return result("orbits.projection_lemmas[" + spec.name() + "]", failures == 0, detail);
}

CheckResult check_stabilizer(const RootSystemSpec& spec) {
  const RootSystem& rs = canonical_system(spec);
  std::mt19937_64 rng(name_seed("stab" + spec.name()));
  std::vector<std::vector<int>> gen_sets;
  std::vector<int> all;
  for (int i = 0; i < rs.rank(); ++i) all.push_back(i);
  gen_sets.push_back(all);
  for (int t = 0; t < 2 && rs.rank() >= 2; ++t) {
    unsigned mask = 1u + static_cast<unsigned>(rng() % ((1u << rs.rank()) - 1));
    gen_sets.push_back(mask_to_subset(mask, rs.rank()));
  }
  std::vector<RationalVec> seeds;
  for (int i = 0; i < rs.rank(); ++i) seeds.push_back(to_rational(rs.simple_root(i)));
  seeds.push_back(to_rational(rs.highest_root()));
  if (rs.rank() <= 6) {
    for (int i = 0; i < rs.rank(); ++i) seeds.push_back(coweight(rs, i));
  }
  long failures = 0, cases = 0;
  std::string first;
  for (const auto& gens : gen_sets) {
    BigInt group = weyl_order(classify_subdiagram(rs, gens));
    for (const RationalVec& seed : seeds) {
      ++cases;
      OrbitReport rep = orbit(rs, gens, seed);
      BigInt stab = stabilizer_order(rs, gens, seed);
      if (BigInt(static_cast<unsigned long>(rep.orbit_size())) * stab != group) {
        if (!failures++) first = "seed=" + to_string(seed);
      }
    }
  }
  std::string detail = "cases=" + std::to_string(cases);
  if (failures) detail += " failures=" + std::to_string(failures) + " first: " + first;
  return result("orbits.orbit_stabilizer[" + spec.name() + "]", failures == 0, detail);
}

CheckResult check_face_certificates(const RootSystemSpec& spec) {
  const RootSystem& rs = canonical_system(spec);
  long failures = 0, faces = 0;
  std::string first;
  for (const auto& I : extremal_subsets(rs, 2)) {
    if (I.empty()) continue;
    ++faces;
    FaceDescriptor f = standard_face(rs, I);
    bool ok = f.dimension == rs.rank() - static_cast<int>(I.size()) && !f.vertices.empty();
    std::set<RootVec> vertex_set(f.vertices.begin(), f.vertices.end());
    for (const RootVec& gamma : rs.roots()) {
      Rational val = rs.pairing(gamma, f.functional);
      if (val > 1) ok = false;
      if ((val == 1) != (vertex_set.count(gamma) > 0)) ok = false;
    }
    for (int v = 0; v < rs.rank(); ++v) {
      if (rs.cartan_pairing(f.barycenter, v) < 0) ok = false;
    }
    if (!ok && !failures++) {
      first = "I={";
      for (size_t i = 0; i < I.size(); ++i) first += (i ? "," : "") + std::to_string(I[i] + 1);
      first += "}";
    }
  }
  if (spec.family == Family::A) {
    long singles = 0;
    for (const auto& I : extremal_subsets(rs, 1)) {
      if (I.size() == 1) ++singles;
    }
    if (singles != rs.rank()) ++failures;
  }
  std::string detail = "faces=" + std::to_string(faces);
  if (failures) detail += " failures=" + std::to_string(failures) + " first: " + first;
  return result("polytope.face_certificates[" + spec.name() + "]", failures == 0, detail);
}

CheckResult check_face_products(const RootSystemSpec& spec) {
  const RootSystem& rs = canonical_system(spec);
  std::string name = "polytope.face_products[" + spec.name() + "]";
  long failures = 0, products = 0;
  std::string first;
  for (int i = 0; i < rs.rank(); ++i) {
    std::vector<int> wall;
    for (int v = 0; v < rs.rank(); ++v) {
      if (v != i) wall.push_back(v);
    }
    Parabolic sub(rs, wall);
    const size_t k = sub.components().size();
    if (k < 2) continue;

    std::vector<std::vector<std::optional<FaceDescriptor>>> picks;
    std::vector<std::optional<FaceDescriptor>> all_faces(k);
    for (size_t c = 0; c < k; ++c) {
      all_faces[c] = component_face(sub, static_cast<int>(c), {sub.extremal_singletons()[c].front()});
    }
    picks.push_back(all_faces);
    auto one_empty = all_faces;
    one_empty[k - 1] = std::nullopt;
    picks.push_back(one_empty);

    for (const auto& faces : picks) {
      ++products;
      FaceDescriptor f = face_product(sub, faces);
      bool ok = sub.is_dominant(f.barycenter);
      int expected_dim = static_cast<int>(k) - 1;
      for (size_t c = 0; c < k; ++c) expected_dim += faces[c] ? (*faces[c]).dimension : -1;
      if (f.dimension != expected_dim) ok = false;
      std::set<RootVec> vertex_set(f.vertices.begin(), f.vertices.end());
      for (const RootVec& gamma : sub.roots()) {
        Rational val = rs.pairing(gamma, f.functional);
        if (val > 1) ok = false;
        if ((val == 1) != (vertex_set.count(gamma) > 0)) ok = false;
      }
      if (!ok && !failures++) first = "wall of alpha_" + std::to_string(i + 1);
    }
  }
  std::string detail = "products=" + std::to_string(products);
  if (failures) detail += " failures=" + std::to_string(failures) + " first: " + first;
  return result(name, failures == 0, detail);
}

CheckResult check_hp(const RootSystemSpec& spec) {
  const RootSystem& rs = canonical_system(spec);
  long failures = 0;
  std::string first;
  for (int i = 0; i < rs.rank(); ++i) {
    Rational r = r_alpha(rs, i);
    bool ok = r >= 0 && r < 2;
    if (rs.rank() <= 6 && ok) ok = (min_dilation_oracle(rs, i, 1) == r);
    // The projection of alpha_i expands over the wall weights of its
    // neighbours with the Cartan coefficients.
    if (ok) {
      std::vector<int> wall;
      for (int v = 0; v < rs.rank(); ++v) {
        if (v != i) wall.push_back(v);
      }
      if (!wall.empty()) {
        Parabolic sub(rs, wall);
        RationalVec expanded = zero_vec(rs.rank());
        for (auto [e, coeff] : projected_alpha_weights(rs, i)) {
          expanded = add(expanded, scale(sub.weight(e), coeff));
        }
        RationalVec projected = project_to_wall(rs, i, to_rational(rs.simple_root(i)));
        if (expanded != projected) ok = false;
        if (project_to_span(rs, wall, to_rational(rs.simple_root(i))) != projected) ok = false;
      }
    }
    // level symmetry and the subsystem route for higher levels
    for (int k = 1; k <= rs.marks()[i] && ok; ++k) {
      Rational up = min_dilation_oracle(rs, i, k);
      if (min_dilation_oracle(rs, i, -k) != up) ok = false;
      if (k == 1 && rs.rank() <= 6 && up != r) ok = false;
      if (k >= 2 && up > min_dilation_subsystem_route(rs, i, k)) ok = false;
    }
    // alpha and the level-1 maximum share the maximal stratum length
    if (ok) {
      Stratum st = level_stratum(rs, i, 1);
      Rational top = rs.norm2(rs.simple_root(i));
      if (rs.norm2(*st.max_root) != top) ok = false;
      for (const RootVec& g : st.roots) {
        if (rs.norm2(g) > top) ok = false;
      }
    }
    if (!ok && !failures++) first = "alpha_" + std::to_string(i + 1) + " r=" + to_string(r);
  }
  std::string detail = "simple_roots=" + std::to_string(rs.rank());
  if (failures) detail += " failures=" + std::to_string(failures) + " first: " + first;
  return result("polytope.hp_dilation[" + spec.name() + "]", failures == 0, detail);
}

CheckResult check_projection_dim(const RootSystemSpec& spec) {
  const RootSystem& rs = canonical_system(spec);
  long failures = 0;
  std::string first;
  for (int i = 0; i < rs.rank(); ++i) {
    for (int k = 1; k <= rs.marks()[i]; ++k) {
      int dim = projection_dimension(rs, i, k);
      bool ok = (k != 1) || dim == rs.rank() - 1;
      // affine span of the stratum
      Stratum st = level_stratum(rs, i, k);
      RationalMatrix diffs;
      for (const RootVec& g : st.roots) {
        RootVec d = g;
        for (int c = 0; c < rs.rank(); ++c) d[c] -= st.roots.front()[c];
        diffs.push_back(to_rational(d));
      }
      if (matrix_rank(diffs) != dim) ok = false;
      // orthogonality to wall components is constant on the maximal length class
      std::vector<int> wall;
      for (int v = 0; v < rs.rank(); ++v) {
        if (v != i) wall.push_back(v);
      }
      Parabolic sub(rs, wall);
      Rational top = rs.norm2(*st.max_root);
      for (const DiagramComponent& c : sub.components()) {
        int status = -1;
        for (const RootVec& g : st.roots) {
          if (rs.norm2(g) != top) continue;
          bool orth = true;
          for (int v : c.vertices) {
            if (rs.cartan_pairing(g, v) != 0) orth = false;
          }
          if (status < 0) status = orth ? 1 : 0;
          else if (status != (orth ? 1 : 0)) ok = false;
        }
      }
      if (!ok && !failures++) {
        first = "alpha_" + std::to_string(i + 1) + " k=" + std::to_string(k);
      }
    }
  }
  std::string detail = "levels checked";
  if (failures) detail += " failures=" + std::to_string(failures) + " first: " + first;
  return result("polytope.projection_dimension[" + spec.name() + "]", failures == 0, detail);
}

CheckResult check_wall_weights(const RootSystemSpec& spec) {
  const RootSystem& rs = canonical_system(spec);
  long failures = 0;
  int max_support = 0;
  std::string first;
  for (int i = 0; i < rs.rank(); ++i) {
    for (int k = 2; k <= rs.marks()[i]; ++k) {
      Stratum st = level_stratum(rs, i, k);
      int nonzero = 0;
      for (int e = 0; e < rs.rank(); ++e) {
        if (e != i && rs.cartan_pairing(*st.min_root, e) != 0) ++nonzero;
      }
      max_support = std::max(max_support, nonzero);
      if (nonzero > 2 && !failures++) {
        first = "alpha_" + std::to_string(i + 1) + " k=" + std::to_string(k) + " support=" +
                std::to_string(nonzero);
      }
    }
  }
  std::string detail = "max_wall_weight_support=" + std::to_string(max_support);
  if (failures) detail += " first: " + first;
  return result("polytope.wall_weight_support[" + spec.name() + "]", failures == 0, detail);
}

CheckResult check_enumeration(const RootSystemSpec& spec) {
  const RootSystem& rs = canonical_system(spec);
  long failures = 0;
  std::string first;
  for (int i = 0; i < rs.rank(); ++i) {
    if (level1_same_length_count(rs, i) != level1_same_length_brute(rs, i)) {
      if (!failures++) first = "level1 at alpha_" + std::to_string(i + 1);
    }
  }
  Family f = spec.family;
  bool classical = f == Family::A || f == Family::B || f == Family::C || f == Family::D;
  if (classical) {
    for (int i = 0; i < rs.rank(); ++i) {
      if (!is_leaf(rs, i)) continue;
      if (leaf_support_count(rs, i) != leaf_support_brute(rs, i)) {
        if (!failures++) first = "leaf count at alpha_" + std::to_string(i + 1);
      }
      if ((f == Family::A || f == Family::D) && !coxeter_identity_check(rs, i)) {
        if (!failures++) first = "coxeter identity at alpha_" + std::to_string(i + 1);
      }
    }
    for (bool long_class : {false, true}) {
      auto seqs = valid_peeling_sequences(rs, long_class);
      BigInt expect = 0;
      for (const RootVec& g : rs.positive_roots()) {
        if (rs.is_long(g) == long_class) ++expect;
      }
      if (seqs.empty()) {
        if (!failures++) first = "no peeling sequence";
        continue;
      }
      for (const PeelingSequence& s : seqs) {
        if (iterando_sum(rs, s) != expect) {
          if (!failures++) first = "peeling sum mismatch";
          break;
        }
      }
      if (rs.lacing() > 1 && seqs.size() != 1) {
        if (!failures++) first = "peeling sequence not unique";
      }
    }
  }
  std::string detail = "rank=" + std::to_string(rs.rank());
  if (failures) detail += " failures=" + std::to_string(failures) + " first: " + first;
  return result("enumeration.counts[" + spec.name() + "]", failures == 0, detail);
}

// ---------------------------------------------------------------------------
// Global checks
// ---------------------------------------------------------------------------

CheckResult check_c_constants() {
  long failures = 0;
  std::string first;
  auto expect = [&](Family f, int n, int i, Rational want) {
    want.canonicalize();
    Rational got = c_constant(f, n, i);
    if (got != want && !failures++) {
      first = std::string(1, static_cast<char>(f)) + std::to_string(n) + " i=" + std::to_string(i) +
              " got " + to_string(got) + " want " + to_string(want);
    }
  };
  for (int n = 1; n <= 8; ++n) {
    for (int i = 1; i <= n; ++i) expect(Family::A, n, i, Rational(i * (n + 1 - i), n + 1));
  }
  for (int n = 2; n <= 8; ++n) {
    expect(Family::B, n, 1, 1);
    expect(Family::B, n, n, Rational(n, 4));
  }
  for (int n = 3; n <= 8; ++n) {
    expect(Family::C, n, 1, Rational(1, 2));
    expect(Family::C, n, n, Rational(n, 2));
  }
  for (int n = 4; n <= 8; ++n) {
    expect(Family::D, n, 1, 1);
    expect(Family::D, n, n, Rational(n, 4));
  }
  expect(Family::E, 6, 6, Rational(4, 3));
  expect(Family::E, 7, 7, Rational(3, 2));
  std::string detail = "table reproduced";
  if (failures) detail = "failures=" + std::to_string(failures) + " first: " + first;
  return result("polytope.c_constants", failures == 0, detail);
}

CheckResult check_g2_table() {
  const RootSystem& g2 = canonical_system(Family::G, 2);
  int alpha = g2.marks()[0] == 3 ? 0 : 1;  // the mark-3 simple root
  long failures = 0;
  std::string got;

  auto type_of = [&](int k) -> std::string {
    if (k == 0) {
      DiagramComponents c = classify_subdiagram(g2, {1 - alpha});
      std::string s;
      for (const auto& comp : c) s += std::string(1, static_cast<char>(comp.family)) + std::to_string(comp.rank);
      return s;
    }
    RootVec beta;
    for (const RootVec& g : g2.positive_roots()) {
      if (g[alpha] == k) beta = g;
    }
    SubsystemBasis b = z_stratum_basis(g2, {alpha}, beta, BasisSide::Min);
    std::string s;
    for (size_t c = 0; c < b.components.size(); ++c) {
      if (c) s += "x";
      s += std::string(1, static_cast<char>(b.components[c].family)) + std::to_string(b.components[c].rank);
    }
    return s;
  };

  const char* want[4] = {"A1", "G2", "A1xA1", "A2"};
  for (int k = 0; k <= 3; ++k) {
    std::string t = type_of(k);
    got += (k ? " " : "") + t;
    if (t != want[k]) ++failures;
  }
  return result("strata.g2_level_types", failures == 0, "k=0..3 -> " + got);
}

CheckResult check_e6_diagnostic() {
  const RootSystem& e6 = canonical_system(Family::E, 6);
  auto seqs = valid_peeling_sequences(e6, true);
  std::set<std::string> sums;
  long failures = 0;
  for (const PeelingSequence& s : seqs) {
    BigInt v = iterando_sum(e6, s, true);
    sums.insert(v.get_str());
    bool starts_at_branch_leaf = s.order.front() == 1;  // the leaf adjacent to the branch node
    if (starts_at_branch_leaf && v != 35) ++failures;
    if (!starts_at_branch_leaf && v != 36) ++failures;
  }
  std::string detail = "sequences=" + std::to_string(seqs.size()) + " sums={";
  bool first_item = true;
  for (const auto& s : sums) {
    detail += (first_item ? "" : ",") + s;
    first_item = false;
  }
  detail += "}";
  bool pass = failures == 0 && sums.size() == 2 && sums.count("35") && sums.count("36");
  return result("enumeration.e6_peeling_diagnostic", pass, detail);
}

// ---------------------------------------------------------------------------
// Deep (rank <= 4) oracles
// ---------------------------------------------------------------------------

CheckResult check_group_oracle(const RootSystemSpec& spec) {
  const RootSystem& rs = canonical_system(spec);
  long failures = 0;
  std::string first;
  std::vector<int> all;
  for (int i = 0; i < rs.rank(); ++i) all.push_back(i);
  auto group = brute_force_group(rs, all);
  if (BigInt(static_cast<unsigned long>(group.size())) != weyl_order(classify_subdiagram(rs, all))) {
    ++failures;
    first = "group order";
  }
  for (unsigned mask = 1; mask < (1u << rs.rank()); ++mask) {
    std::vector<int> gens = mask_to_subset(mask, rs.rank());
    auto sub = brute_force_group(rs, gens);
    if (BigInt(static_cast<unsigned long>(sub.size())) != weyl_order(classify_subdiagram(rs, gens))) {
      if (!failures++) first = "subgroup order";
    }
  }
  // orbit and stabilizer against the permutation model, seeded at each root
  for (size_t idx = 0; idx < rs.roots().size(); idx += 3) {
    std::set<int> perm_orbit;
    size_t perm_stab = 0;
    for (const auto& g : group) {
      perm_orbit.insert(g[idx]);
      if (g[idx] == static_cast<int>(idx)) ++perm_stab;
    }
    OrbitReport rep = orbit(rs, all, to_rational(rs.roots()[idx]));
    BigInt stab = stabilizer_order(rs, all, to_rational(rs.roots()[idx]));
    if (rep.orbit_size() != perm_orbit.size() ||
        stab != BigInt(static_cast<unsigned long>(perm_stab))) {
      if (!failures++) first = "orbit/stabilizer at root " + std::to_string(idx);
    }
  }
  std::string detail = "group=" + std::to_string(group.size());
  if (failures) detail += " failures=" + std::to_string(failures) + " first: " + first;
  return result("deep.group_oracle[" + spec.name() + "]", failures == 0, detail);
}

CheckResult check_face_orbits(const RootSystemSpec& spec) {
  const RootSystem& rs = canonical_system(spec);
  long failures = 0, faces = 0;
  for (const auto& I : extremal_subsets(rs, 2)) {
    if (I.empty()) continue;
    ++faces;
    if (!standard_face_orbit_check(rs, I)) ++failures;
  }
  std::string detail = "faces=" + std::to_string(faces);
  if (failures) detail += " failures=" + std::to_string(failures);
  return result("deep.face_orbits[" + spec.name() + "]", failures == 0, detail);
}

CheckResult check_hull_orbit(const RootSystemSpec& spec) {
  const RootSystem& rs = canonical_system(spec);
  long failures = 0, checked = 0;
  std::string first;
  for (const SBPair& p : exhaustive_pairs(rs)) {
    Stratum st = stratum(rs, p.S, p.beta);
    if (st.lengths_present != LengthProfile::Mixed) continue;
    ++checked;
    std::vector<int> gens;
    for (int i = 0; i < rs.rank(); ++i) {
      if (!std::binary_search(st.S.begin(), st.S.end(), i)) gens.push_back(i);
    }
    OrbitReport rep = orbit(rs, gens, to_rational(*st.max_root));
    bool ok = true;
    for (const RootVec& g : st.roots) {
      if (rs.is_long(g)) continue;
      if (!in_convex_hull(rep.elements, to_rational(g))) ok = false;
    }
    if (!ok && !failures++) first = fail_at(p.S, p.beta);
  }
  std::string detail = "mixed_strata=" + std::to_string(checked);
  if (failures) detail += " failures=" + std::to_string(failures) + " first: " + first;
  return result("deep.hull_orbit[" + spec.name() + "]", failures == 0, detail);
}

CheckResult check_dilation_lp(const RootSystemSpec& spec) {
  const RootSystem& rs = canonical_system(spec);
  long failures = 0, cases = 0;
  std::string first;
  for (int i = 0; i < rs.rank(); ++i) {
    std::vector<int> wall;
    for (int v = 0; v < rs.rank(); ++v) {
      if (v != i) wall.push_back(v);
    }
    Parabolic sub(rs, wall);
    std::vector<RationalVec> vertices;
    for (const RootVec& g : sub.roots()) vertices.push_back(to_rational(g));
    for (int k = 1; k <= rs.marks()[i]; ++k) {
      ++cases;
      Stratum st = level_stratum(rs, i, k);
      RationalVec x = dominant_representative(
          rs, wall, project_to_wall(rs, i, to_rational(*st.max_root)));
      Rational by_facets = min_dilation_oracle(rs, i, k);
      bool zero = std::all_of(x.begin(), x.end(), [](const Rational& c) { return c == 0; });
      Rational by_lp = zero ? Rational(0) : min_dilation_lp(vertices, x);
      if (by_facets != by_lp) {
        if (!failures++) {
          first = "alpha_" + std::to_string(i + 1) + " k=" + std::to_string(k) + " facets=" +
                  to_string(by_facets) + " lp=" + to_string(by_lp);
        }
      }
    }
  }
  std::string detail = "cases=" + std::to_string(cases);
  if (failures) detail += " failures=" + std::to_string(failures) + " first: " + first;
  return result("deep.dilation_lp[" + spec.name() + "]", failures == 0, detail);
}

CheckResult check_weyl_orbit_d5() {
  const RootSystem& d5 = canonical_system(Family::D, 5);
  std::vector<int> all{0, 1, 2, 3, 4};
  RationalVec rho = zero_vec(5);
  for (int i = 0; i < 5; ++i) rho = add(rho, coweight(d5, i));
  OrbitReport rep = orbit(d5, all, rho);
  bool pass = rep.orbit_size() == 1920 && weyl_order(Family::D, 5) == 1920;
  return result("deep.weyl_order_orbit[D5]", pass, "orbit=" + std::to_string(rep.orbit_size()));
}

}  // namespace

std::vector<RootSystemSpec> systems_up_to(int max_rank) {
  std::vector<RootSystemSpec> out;
  for (int n = 1; n <= max_rank; ++n) out.emplace_back(Family::A, n);
  for (int n = 2; n <= max_rank; ++n) out.emplace_back(Family::B, n);
  for (int n = 3; n <= max_rank; ++n) out.emplace_back(Family::C, n);
  for (int n = 4; n <= max_rank; ++n) out.emplace_back(Family::D, n);
  for (int n = 6; n <= std::min(max_rank, 8); ++n) out.emplace_back(Family::E, n);
  if (max_rank >= 4) out.emplace_back(Family::F, 4);
  if (max_rank >= 2) out.emplace_back(Family::G, 2);
  return out;
}

std::vector<VerifyTask> build_verify_tasks(const VerifyOptions& opt) {
  if (opt.max_rank < 1 || opt.max_rank > 8) {
    throw std::invalid_argument("verify: max rank must be between 1 and 8");
  }
  std::vector<VerifyTask> tasks;
  auto add = [&tasks](std::string name, std::function<CheckResult()> fn) {
    tasks.push_back({std::move(name), std::move(fn)});
  };

  for (const RootSystemSpec& s : systems_up_to(opt.max_rank)) {
    add("core.invariants[" + s.name() + "]", [s] { return check_core(s); });
    add("strata.interval_bases[" + s.name() + "]", [s] { return check_interval_bases(s); });
    add("orbits.oshima[" + s.name() + "]", [s] { return check_oshima(s); });
    add("strata.profiles[" + s.name() + "]", [s] { return check_profiles(s); });
    add("strata.dominant_reps[" + s.name() + "]", [s] { return check_dominant_reps(s); });
    add("strata.duality[" + s.name() + "]", [s] { return check_duality(s); });
    add("strata.short_witness[" + s.name() + "]", [s] { return check_witness(s); });
    add("orbits.projection_lemmas[" + s.name() + "]", [s] { return check_projection_lemmas(s); });
    add("orbits.orbit_stabilizer[" + s.name() + "]", [s] { return check_stabilizer(s); });
    add("polytope.face_certificates[" + s.name() + "]", [s] { return check_face_certificates(s); });
    add("polytope.face_products[" + s.name() + "]", [s] { return check_face_products(s); });
    add("polytope.hp_dilation[" + s.name() + "]", [s] { return check_hp(s); });
    add("polytope.projection_dimension[" + s.name() + "]", [s] { return check_projection_dim(s); });
    add("polytope.wall_weight_support[" + s.name() + "]", [s] { return check_wall_weights(s); });
    add("enumeration.counts[" + s.name() + "]", [s] { return check_enumeration(s); });
  }
  add("polytope.c_constants", [] { return check_c_constants(); });
  if (opt.max_rank >= 2) add("strata.g2_level_types", [] { return check_g2_table(); });
  if (opt.max_rank >= 6) add("enumeration.e6_peeling_diagnostic", [] { return check_e6_diagnostic(); });

  if (opt.deep) {
    for (const RootSystemSpec& s : systems_up_to(std::min(opt.max_rank, 4))) {
      add("deep.group_oracle[" + s.name() + "]", [s] { return check_group_oracle(s); });
      add("deep.face_orbits[" + s.name() + "]", [s] { return check_face_orbits(s); });
      add("deep.hull_orbit[" + s.name() + "]", [s] { return check_hull_orbit(s); });
      add("deep.dilation_lp[" + s.name() + "]", [s] { return check_dilation_lp(s); });
    }
    if (opt.max_rank >= 5) add("deep.weyl_order_orbit[D5]", [] { return check_weyl_orbit_d5(); });
  }
  return tasks;
}

namespace {

CheckResult run_one(const VerifyTask& task) {
  try {
    return task.fn();
  } catch (const std::exception& e) {
    return {task.name, false, std::string("exception: ") + e.what()};
  }
}

VerifyReport collect(std::vector<CheckResult> results) {
  VerifyReport rep;
  rep.checks = std::move(results);
  for (const CheckResult& c : rep.checks) (c.pass ? rep.passed : rep.failed)++;
  return rep;
}

}  // namespace

VerifyReport run_tasks_serial(const std::vector<VerifyTask>& tasks) {
  std::vector<CheckResult> results(tasks.size());
  for (size_t i = 0; i < tasks.size(); ++i) results[i] = run_one(tasks[i]);
  return collect(std::move(results));
}

VerifyReport run_tasks_parallel(const std::vector<VerifyTask>& tasks) {
  std::vector<CheckResult> results(tasks.size());
  const int n = static_cast<int>(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) results[i] = run_one(tasks[i]);
  return collect(std::move(results));
}

VerifyReport run_verify(const VerifyOptions& opt) {
  auto tasks = build_verify_tasks(opt);
  return opt.parallel ? run_tasks_parallel(tasks) : run_tasks_serial(tasks);
}

Json verify_report_json(const VerifyOptions& opt, const VerifyReport& rep) {
  Json j;
  j["suite"] = "verify";
  j["max_rank"] = opt.max_rank;
  j["deep"] = opt.deep;
  Json checks = Json::array();
  for (const CheckResult& c : rep.checks) {
    Json e;
    e["name"] = c.name;
    e["status"] = c.pass ? "pass" : "fail";
    e["detail"] = c.detail;
    checks.push_back(e);
  }
  j["checks"] = checks;
  j["totals"] = {{"pass", rep.passed}, {"fail", rep.failed}};
  return j;
}

}  // namespace rootstrata
