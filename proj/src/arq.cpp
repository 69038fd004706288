#include "quivkit/arq.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>

namespace quivkit {

Root gamma_root(const Quiver& quiver, Vertex i) {
  Root r(quiver.rank(), 0);
  for (Vertex j = 0; j < quiver.rank(); ++j) {
    if (quiver.has_path(j, i)) r[j] = 1;
  }
  return r;
}

bool has_path_repetition(const CartanDatum& datum, ARVertex from, ARVertex to) {
  if (to.p < from.p) return false;
  std::set<Vertex> layer{from.i};
  for (int p = from.p; p < to.p; ++p) {
    std::set<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : datum.neighbors(v)) next.insert(w);
    }
    if (next.empty()) return false;
    layer = std::move(next);
  }
  return layer.count(to.i) > 0;
}

ARQuiver::ARQuiver(const Quiver& quiver, const RootSystem& roots,
                   HeightFunction xi)
    : quiver_(quiver), roots_(roots), xi_(std::move(xi)) {
  if (!quiver_.is_height_function(xi_)) {
    throw std::invalid_argument("not a height function for this quiver");
  }
  const int n = quiver_.rank();
  const int total = roots_.num_positive();
  tau_ = roots_.element(coxeter_element(quiver_));
  tau_inv_ = roots_.inverse(tau_);

  seed_.resize(n);
  for (Vertex i = 0; i < n; ++i) {
    seed_[i] = roots_.positive_index(gamma_root(quiver_, i));
    if (seed_[i] < 0) throw std::logic_error("gamma_i is not a positive root");
  }

  // Walk each seed along its tau-orbit in both directions for as long as the
  // walk stays in R+ x {0}.
  phi_.assign(total, ARVertex{-1, 0});
  auto assign = [&](int root, ARVertex v) {
    if (phi_[root].i >= 0 && phi_[root] != v) {
      throw std::logic_error("phi assigns two vertices to one root");
    }
    if (auto it = inverse_.find(v); it != inverse_.end() && it->second != root) {
      throw std::logic_error("phi assigns one vertex to two roots");
    }
    phi_[root] = v;
    inverse_[v] = root;
  };
  for (Vertex i = 0; i < n; ++i) {
    for (bool forward : {true, false}) {
      int root = seed_[i], k = 0;
      ARVertex v{i, xi_[i]};
      assign(root, v);
      for (int guard = 0; guard <= 2 * total; ++guard) {
        step(&root, &k, &v, forward);
        if (k != 0) break;
        assign(root, v);
      }
    }
  }
  for (int r = 0; r < total; ++r) {
    if (phi_[r].i < 0) {
      throw std::logic_error("phi leaves a positive root unassigned");
    }
    vertices_.push_back(phi_[r]);
  }
  std::sort(vertices_.begin(), vertices_.end());
  min_p_ = max_p_ = vertices_.front().p;
  for (const auto& v : vertices_) {
    min_p_ = std::min(min_p_, v.p);
    max_p_ = std::max(max_p_, v.p);
  }

  // Transitive closure, processing vertices from large p to small p.
  const int m = static_cast<int>(vertices_.size());
  std::map<ARVertex, int> pos;
  for (int a = 0; a < m; ++a) pos[vertices_[a]] = a;
  std::vector<int> order(m);
  for (int a = 0; a < m; ++a) order[a] = a;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return vertices_[a].p > vertices_[b].p;
  });
  reach_.assign(m, std::vector<bool>(m, false));
  for (int a : order) {
    reach_[a][a] = true;
    for (const auto& w : successors(vertices_[a])) {
      const int b = pos.at(w);
      for (int c = 0; c < m; ++c) {
        if (reach_[b][c]) reach_[a][c] = true;
      }
    }
  }
}

void ARQuiver::step(int* root, int* k, ARVertex* v, bool forward) const {
  const int image = forward ? tau_[*root] : tau_inv_[*root];
  if (roots_.is_positive_index(image)) {
    *root = image;
  } else {
    *root = roots_.negate_index(image);
    *k += forward ? -1 : 1;
  }
  v->p += forward ? -2 : 2;
}

bool ARQuiver::in_i_hat(ARVertex v) const {
  if (v.i < 0 || v.i >= quiver_.rank()) return false;
  return ((v.p - xi_[v.i]) % 2 + 2) % 2 == 0;
}

ARVertex ARQuiver::phi(int root, int k) const {
  if (root < 0 || root >= roots_.num_positive()) {
    throw std::invalid_argument("phi: not a positive root");
  }
  if (k == 0) return phi_[root];
  // M[2] = tau^{-h} M stays in the row of M; M[1] lives in the row of i*.
  const Vertex row = phi_[root].i;
  const Vertex target_row = k % 2 == 0 ? row : roots_.star(row);
  const int bound = roots_.coxeter_number() * (std::abs(k) + 2);
  for (bool forward : {k < 0, k > 0}) {
    int r = seed_[target_row], kk = 0;
    ARVertex v{target_row, xi_[target_row]};
    for (int guard = 0; guard <= bound; ++guard) {
      if (r == root && kk == k) return v;
      step(&r, &kk, &v, forward);
    }
  }
  throw std::logic_error("phi: orbit walk did not reach (root, k)");
}

std::pair<int, int> ARQuiver::phi_inverse(ARVertex v) const {
  if (!in_i_hat(v)) {
    throw std::invalid_argument("phi_inverse: vertex violates the parity rule");
  }
  int steps = (xi_[v.i] - v.p) / 2;
  int root = seed_[v.i], k = 0;
  ARVertex cur{v.i, xi_[v.i]};
  const bool forward = steps > 0;
  for (int s = std::abs(steps); s > 0; --s) step(&root, &k, &cur, forward);
  return {root, k};
}

int ARQuiver::root_at(ARVertex v) const {
  auto it = inverse_.find(v);
  return it == inverse_.end() ? -1 : it->second;
}

std::vector<ARVertex> ARQuiver::successors(ARVertex v) const {
  std::vector<ARVertex> out;
  for (Vertex j : quiver_.datum().neighbors(v.i)) {
    ARVertex w{j, v.p + 1};
    if (contains(w)) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<ARVertex, ARVertex>> ARQuiver::arrows() const {
  std::vector<std::pair<ARVertex, ARVertex>> out;
  for (const auto& v : vertices_) {
    for (const auto& w : successors(v)) out.emplace_back(v, w);
  }
  return out;
}

std::vector<ARVertex> ARQuiver::j_hat_q() const {
  std::vector<ARVertex> out;
  for (Vertex i = 0; i < quiver_.rank(); ++i) {
    for (int p = min_p_; p <= max_p_; ++p) {
      if (contains({i, p - 1}) && contains({i, p + 1})) out.push_back({i, p});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool ARQuiver::has_path(ARVertex from, ARVertex to) const {
  auto a = std::lower_bound(vertices_.begin(), vertices_.end(), from);
  auto b = std::lower_bound(vertices_.begin(), vertices_.end(), to);
  if (a == vertices_.end() || *a != from || b == vertices_.end() || *b != to) {
    throw std::invalid_argument("has_path: vertex not in Gamma_Q");
  }
  return reach_[a - vertices_.begin()][b - vertices_.begin()];
}

}  // namespace quivkit
