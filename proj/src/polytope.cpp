#include "rootstrata/polytope.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rootstrata/orbits.hpp"
#include "rootstrata/strata.hpp"

namespace rootstrata {

namespace {

std::vector<int> normalize(const RootSystem& rs, std::vector<int> I) {
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  for (int v : I) {
    if (v < 0 || v >= rs.rank()) throw std::invalid_argument("face: index out of range");
  }
  return I;
}

void sort_roots(std::vector<RootVec>& v) {
  std::sort(v.begin(), v.end(), [](const RootVec& a, const RootVec& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
}

RationalVec barycenter_of(const std::vector<RootVec>& vertices, int rank) {
  RationalVec b = zero_vec(rank);
  for (const RootVec& v : vertices) {
    for (int i = 0; i < rank; ++i) b[i] += v[i];
  }
  if (!vertices.empty()) b = scale(b, Rational(1, static_cast<long>(vertices.size())));
  return b;
}

int affine_dimension(const std::vector<RootVec>& vertices, int rank) {
  if (vertices.empty()) return -1;
  // Faces avoid the origin, so the affine dimension is the linear rank of
  // the vertex set minus one.
  RationalMatrix m;
  for (const RootVec& v : vertices) m.push_back(to_rational(v));
  (void)rank;
  return matrix_rank(m) - 1;
}

}  // namespace

bool is_extremal(const RootSystem& rs, const std::vector<int>& I) {
  std::vector<int> drop = normalize(rs, I);
  auto adj = extended_diagram_vertices(rs);
  const int n = rs.rank();
  std::vector<bool> removed(n + 1, false);
  for (int v : drop) removed[v] = true;
  std::vector<bool> seen(n + 1, false);
  std::vector<int> stack{n};
  seen[n] = true;
  int visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj[v]) {
      if (removed[u] || seen[u]) continue;
      seen[u] = true;
      ++visited;
      stack.push_back(u);
    }
  }
  return visited == n + 1 - static_cast<int>(drop.size());
}

std::vector<std::vector<int>> extremal_subsets(const RootSystem& rs, int max_size) {
  std::vector<std::vector<int>> out;
  const int n = rs.rank();
  std::vector<std::vector<int>> by_size(std::max(0, max_size) + 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size > max_size) continue;
    std::vector<int> I;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) I.push_back(i);
    }
    if (is_extremal(rs, I)) {
      out.push_back(std::move(I));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

FaceDescriptor standard_face(const RootSystem& rs, const std::vector<int>& I) {
  std::vector<int> sub = normalize(rs, I);
  FaceDescriptor f;
  f.subsets = {sub};
  f.functional = zero_vec(rs.rank());
  if (sub.empty()) {
    f.vertices = rs.roots();
    sort_roots(f.vertices);
    f.barycenter = zero_vec(rs.rank());
    f.dimension = rs.rank();
    return f;
  }
  for (int v : sub) {
    f.functional = add(f.functional, scale(coweight(rs, v), Rational(1, rs.marks()[v])));
  }
  f.functional = scale(f.functional, Rational(1, static_cast<long>(sub.size())));
  for (const RootVec& gamma : rs.roots()) {
    bool on = true;
    for (int v : sub) {
      if (gamma[v] != rs.marks()[v]) {
        on = false;
        break;
      }
    }
    if (on) f.vertices.push_back(gamma);
  }
  sort_roots(f.vertices);
  f.barycenter = barycenter_of(f.vertices, rs.rank());
  f.dimension = affine_dimension(f.vertices, rs.rank());
  return f;
}

FaceDescriptor component_face(const Parabolic& sub, int comp, const std::vector<int>& I) {
  if (comp < 0 || comp >= static_cast<int>(sub.components().size())) {
    throw std::invalid_argument("component_face: component index out of range");
  }
  std::vector<int> ids = normalize(sub.ambient(), I);
  if (ids.empty()) throw std::invalid_argument("component_face: empty subset");
  for (int v : ids) {
    if (sub.component_of(v) != comp) {
      throw std::invalid_argument("component_face: vertex outside the component");
    }
  }
  const DiagramComponent& c = sub.components()[comp];
  FaceDescriptor f;
  f.subsets = {ids};
  f.functional = zero_vec(sub.ambient().rank());
  for (int v : ids) f.functional = add(f.functional, sub.face_normal(v));
  f.functional = scale(f.functional, Rational(1, static_cast<long>(ids.size())));
  for (const RootVec& gamma : sub.roots()) {
    bool in_comp = false;
    for (int v : c.vertices) {
      if (gamma[v] != 0) in_comp = true;
    }
    if (!in_comp) continue;
    bool on = true;
    for (int v : ids) {
      if (gamma[v] != sub.mark(v)) {
        on = false;
        break;
      }
    }
    if (on) f.vertices.push_back(gamma);
  }
  sort_roots(f.vertices);
  f.barycenter = barycenter_of(f.vertices, sub.ambient().rank());
  f.dimension = affine_dimension(f.vertices, sub.ambient().rank());
  return f;
}

FaceDescriptor face_product(const Parabolic& sub, const std::vector<std::optional<FaceDescriptor>>& faces) {
  const size_t k = sub.components().size();
  if (faces.size() != k) {
    throw std::invalid_argument("face_product: one face entry per component required");
  }
  FaceDescriptor f;
  f.functional = zero_vec(sub.ambient().rank());
  int nonempty = 0;
  int dim = static_cast<int>(k) - 1;
  for (size_t c = 0; c < k; ++c) {
    if (!faces[c]) {
      f.subsets.push_back({});
      dim += -1;
      continue;
    }
    const FaceDescriptor& fc = *faces[c];
    if (fc.subsets.size() != 1 || fc.subsets[0].empty()) {
      throw std::invalid_argument("face_product: component entries must be proper component faces");
    }
    for (int v : fc.subsets[0]) {
      if (sub.component_of(v) != static_cast<int>(c)) {
        throw std::invalid_argument("face_product: face attached to the wrong component");
      }
    }
    ++nonempty;
    f.subsets.push_back(fc.subsets[0]);
    f.functional = add(f.functional, fc.functional);
    f.vertices.insert(f.vertices.end(), fc.vertices.begin(), fc.vertices.end());
    dim += fc.dimension;
  }
  if (nonempty == 0) throw std::invalid_argument("face_product: at least one nonempty face required");
  sort_roots(f.vertices);
  f.barycenter = barycenter_of(f.vertices, sub.ambient().rank());
  f.dimension = dim;
  return f;
}

bool dominant_membership(const Parabolic& sub, const RationalVec& x, const Rational& r) {
  if (!sub.is_dominant(x)) throw std::invalid_argument("dominant_membership: x not dominant");
  return sub.min_dilation(x) <= r;
}

RationalVec project_to_wall(const RootSystem& rs, int i, const RationalVec& v) {
  if (i < 0 || i >= rs.rank()) throw std::invalid_argument("project_to_wall: index out of range");
  RationalVec cw = coweight(rs, i);
  Rational level = v[i];  // (v, coweight_i) is the i-th coordinate
  return sub(v, scale(cw, level / rs.form_inverse()[i][i]));
}

RationalVec project_to_span(const RootSystem& rs, const std::vector<int>& T, const RationalVec& v) {
  std::vector<int> t = normalize(rs, T);
  if (t.empty()) return zero_vec(rs.rank());
  const int m = static_cast<int>(t.size());
  RationalMatrix gram(m, RationalVec(m));
  RationalVec rhs(m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) gram[a][b] = rs.form()[t[a]][t[b]];
    rhs[a] = rs.pairing(v, to_rational(rs.simple_root(t[a])));
  }
  RationalVec coeff = solve(std::move(gram), std::move(rhs));
  RationalVec out = zero_vec(rs.rank());
  for (int a = 0; a < m; ++a) out[t[a]] = coeff[a];
  return out;
}

std::vector<std::pair<int, int>> projected_alpha_weights(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank()) throw std::invalid_argument("projected_alpha_weights: index out of range");
  std::vector<std::pair<int, int>> out;
  for (int e = 0; e < rs.rank(); ++e) {
    if (e != i && rs.cartan()[i][e] != 0) out.emplace_back(e, rs.cartan()[i][e]);
  }
  return out;
}

Rational c_constant(Family family, int n, int i) {
  const RootSystem& rs = canonical_system(family, n);
  if (i < 1 || i > n) throw std::invalid_argument("c_constant: index out of range");
  Parabolic whole(rs, [&] {
    std::vector<int> all(n);
    for (int k = 0; k < n; ++k) all[k] = k;
    return all;
  }());
  const auto& extremal = whole.extremal_singletons()[0];
  Rational best;
  bool first = true;
  for (int j : extremal) {
    Rational val = rs.cartan_inverse()[i - 1][j] / rs.marks()[j];
    if (first || val > best) {
      best = val;
      first = false;
    }
  }
  if (first) throw std::logic_error("c_constant: no extremal vertex");
  return best;
}

Rational r_alpha(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank()) throw std::invalid_argument("r_alpha: index out of range");
  std::vector<int> rest;
  for (int v = 0; v < rs.rank(); ++v) {
    if (v != i) rest.push_back(v);
  }
  Parabolic wall(rs, rest);
  Rational total(0);
  for (auto [e, coeff] : projected_alpha_weights(rs, i)) {
    const DiagramComponent& comp = wall.components()[wall.component_of(e)];
    Rational c = c_constant(comp.family, comp.rank, wall.position_in_component(e) + 1);
    total += Rational(-coeff) * c;
  }
  return total;
}

Rational min_dilation_oracle(const RootSystem& rs, int i, int k) {
  if (k == 0) throw std::invalid_argument("min_dilation_oracle: k must be nonzero");
  Stratum st = level_stratum(rs, i, k);  // validates |k| <= mark
  std::vector<int> rest;
  for (int v = 0; v < rs.rank(); ++v) {
    if (v != i) rest.push_back(v);
  }
  RationalVec projected = project_to_wall(rs, i, to_rational(*st.max_root));
  RationalVec dom = dominant_representative(rs, rest, projected);
  return Parabolic(rs, rest).min_dilation(dom);
}

Rational min_dilation_subsystem_route(const RootSystem& rs, int i, int k) {
  if (k < 2) throw std::invalid_argument("min_dilation_subsystem_route: k must be at least 2");
  Stratum st = level_stratum(rs, i, k);
  SubsystemBasis basis = z_stratum_basis(rs, {i}, *st.min_root, BasisSide::Min);
  // The minimum sits at basis position 0; work inside its component.
  for (const DiagramComponent& c : basis.components) {
    auto it = std::find(c.vertices.begin(), c.vertices.end(), 0);
    if (it == c.vertices.end()) continue;
    int pos = static_cast<int>(it - c.vertices.begin());
    return r_alpha(canonical_system(c.family, c.rank), pos);
  }
  throw std::logic_error("min_dilation_subsystem_route: minimum not in any component");
}

bool standard_face_orbit_check(const RootSystem& rs, const std::vector<int>& I, size_t group_bound) {
  FaceDescriptor face = standard_face(rs, I);
  std::vector<int> all;
  for (int v = 0; v < rs.rank(); ++v) all.push_back(v);
  auto group = brute_force_group(rs, all, group_bound);

  std::vector<int> vertex_ids;
  for (const RootVec& v : face.vertices) vertex_ids.push_back(rs.root_index(v));
  std::sort(vertex_ids.begin(), vertex_ids.end());

  std::set<std::vector<int>> orbit;
  size_t stabilizer = 0;
  int dominant_members = 0;
  for (const auto& perm : group) {
    std::vector<int> image;
    for (int id : vertex_ids) image.push_back(perm[id]);
    std::sort(image.begin(), image.end());
    if (image == vertex_ids) ++stabilizer;
    if (!orbit.insert(image).second) continue;
    RationalVec b = zero_vec(rs.rank());
    for (int id : image) b = add(b, to_rational(rs.roots()[id]));
    bool dominant = true;
    for (int v = 0; v < rs.rank(); ++v) {
      if (rs.cartan_pairing(b, v) < 0) dominant = false;
    }
    if (dominant) ++dominant_members;
  }
  if (dominant_members != 1) return false;

  // The stabilizer of the standard face is the parabolic on the simple roots
  // orthogonal to its barycenter.
  std::vector<int> orth;
  for (int v = 0; v < rs.rank(); ++v) {
    if (rs.cartan_pairing(face.barycenter, v) == 0) orth.push_back(v);
  }
  BigInt expected = weyl_order(classify_subdiagram(rs, orth));
  if (BigInt(static_cast<unsigned long>(stabilizer)) != expected) return false;
  // Orbit-stabilizer consistency.
  return orbit.size() * stabilizer == group.size();
}

int projection_dimension(const RootSystem& rs, int i, int k) {
  if (k < 1) throw std::invalid_argument("projection_dimension: k must be positive");
  Stratum st = level_stratum(rs, i, k);  // validates k <= mark
  std::vector<int> rest;
  for (int v = 0; v < rs.rank(); ++v) {
    if (v != i) rest.push_back(v);
  }
  Parabolic wall(rs, rest);
  const RootVec& gamma = *st.max_root;
  int dim = 0;
  for (const DiagramComponent& c : wall.components()) {
    bool orthogonal = true;
    for (int v : c.vertices) {
      if (rs.cartan_pairing(gamma, v) != 0) orthogonal = false;
    }
    if (!orthogonal) dim += c.rank;
  }
  return dim;
}

}  // namespace rootstrata
