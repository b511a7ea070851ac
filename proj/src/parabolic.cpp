#include "rootstrata/parabolic.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootstrata {

namespace {

// Extremal singleton positions (0-based) of the canonical (family, rank)
// system: vertices whose removal keeps the extended diagram connected.
std::vector<int> canonical_extremal_singletons(Family f, int rank) {
  const RootSystem& rs = canonical_system(f, rank);
  auto adj = extended_diagram_vertices(rs);
  const int n = rs.rank();
  std::vector<int> out;
  for (int drop = 0; drop < n; ++drop) {
    std::vector<bool> seen(n + 1, false);
    std::vector<int> stack{n};  // start from the affine node, never dropped
    seen[n] = true;
    int visited = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj[v]) {
        if (u == drop || seen[u]) continue;
        seen[u] = true;
        ++visited;
        stack.push_back(u);
      }
    }
    if (visited == n) out.push_back(drop);
  }
  return out;
}

}  // namespace

Parabolic::Parabolic(const RootSystem& rs, std::vector<int> vertices) : rs_(&rs) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (int v : vertices) {
    if (v < 0 || v >= rs.rank()) throw std::invalid_argument("Parabolic: vertex out of range");
  }
  vertices_ = std::move(vertices);
  components_ = classify_subdiagram(rs, vertices_);

  for (const RootVec& gamma : rs.roots()) {
    bool in = true;
    for (int i = 0; i < rs.rank(); ++i) {
      if (gamma[i] != 0 && !std::binary_search(vertices_.begin(), vertices_.end(), i)) {
        in = false;
        break;
      }
    }
    if (in) roots_.push_back(gamma);
  }
  std::sort(roots_.begin(), roots_.end(), [](const RootVec& a, const RootVec& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  const int m = rank();
  vertex_pos_.assign(rs.rank(), -1);
  vertex_comp_.assign(rs.rank(), -1);
  comp_pos_.assign(rs.rank(), -1);
  for (int k = 0; k < m; ++k) vertex_pos_[vertices_[k]] = k;
  for (size_t c = 0; c < components_.size(); ++c) {
    for (size_t p = 0; p < components_[c].vertices.size(); ++p) {
      vertex_comp_[components_[c].vertices[p]] = static_cast<int>(c);
      comp_pos_[components_[c].vertices[p]] = static_cast<int>(p);
    }
  }

  if (m > 0) {
    // Coweights: inverse of the restricted form, expanded to ambient coords.
    RationalMatrix sub(m, RationalVec(m));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) sub[i][j] = rs.form()[vertices_[i]][vertices_[j]];
    }
    RationalMatrix inv = invert(sub);
    coweight_rows_.assign(m, zero_vec(rs.rank()));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) coweight_rows_[i][vertices_[j]] = inv[i][j];
    }
    // Weights: inverse of the restricted Cartan matrix.
    RationalMatrix subc(m, RationalVec(m));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) subc[i][j] = rs.cartan()[vertices_[i]][vertices_[j]];
    }
    RationalMatrix invc = invert(subc);
    weight_rows_.assign(m, zero_vec(rs.rank()));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) weight_rows_[i][vertices_[j]] = invc[i][j];
    }
  }

  marks_.assign(m, 0);
  extremal_singletons_.resize(components_.size());
  for (size_t c = 0; c < components_.size(); ++c) {
    const DiagramComponent& comp = components_[c];
    const RootSystem& canon = canonical_system(comp.family, comp.rank);
    for (int p = 0; p < comp.rank; ++p) {
      marks_[vertex_pos_[comp.vertices[p]]] = canon.marks()[p];
    }
    for (int p : canonical_extremal_singletons(comp.family, comp.rank)) {
      extremal_singletons_[c].push_back(comp.vertices[p]);
    }
    std::sort(extremal_singletons_[c].begin(), extremal_singletons_[c].end());
  }
}

RationalVec Parabolic::coweight(int v) const {
  if (v < 0 || v >= rs_->rank() || vertex_pos_[v] < 0) {
    throw std::invalid_argument("Parabolic::coweight: vertex not in subsystem");
  }
  return coweight_rows_[vertex_pos_[v]];
}

RationalVec Parabolic::weight(int v) const {
  if (v < 0 || v >= rs_->rank() || vertex_pos_[v] < 0) {
    throw std::invalid_argument("Parabolic::weight: vertex not in subsystem");
  }
  return weight_rows_[vertex_pos_[v]];
}

int Parabolic::mark(int v) const {
  if (v < 0 || v >= rs_->rank() || vertex_pos_[v] < 0) {
    throw std::invalid_argument("Parabolic::mark: vertex not in subsystem");
  }
  return marks_[vertex_pos_[v]];
}

RationalVec Parabolic::face_normal(int v) const {
  return scale(coweight(v), Rational(1) / mark(v));
}

int Parabolic::component_of(int v) const {
  if (v < 0 || v >= rs_->rank() || vertex_comp_[v] < 0) {
    throw std::invalid_argument("Parabolic::component_of: vertex not in subsystem");
  }
  return vertex_comp_[v];
}

int Parabolic::position_in_component(int v) const {
  if (v < 0 || v >= rs_->rank() || comp_pos_[v] < 0) {
    throw std::invalid_argument("Parabolic::position_in_component: vertex not in subsystem");
  }
  return comp_pos_[v];
}

bool Parabolic::is_dominant(const RationalVec& x) const {
  for (int v : vertices_) {
    if (rs_->cartan_pairing(x, v) < 0) return false;
  }
  return true;
}

Rational Parabolic::min_dilation(const RationalVec& x) const {
  if (!is_dominant(x)) throw std::invalid_argument("Parabolic::min_dilation: x not dominant");
  Rational total(0);
  for (size_t c = 0; c < components_.size(); ++c) {
    Rational best(0);
    bool first = true;
    for (int v : extremal_singletons_[c]) {
      Rational val = rs_->pairing(x, face_normal(v));
      if (first || val > best) {
        best = val;
        first = false;
      }
    }
    total += best;
  }
  return total;
}

}  // namespace rootstrata
