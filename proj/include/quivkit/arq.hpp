#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "quivkit/quiver.hpp"
#include "quivkit/rootsys.hpp"

namespace quivkit {

// A vertex (i, p) of I x Z.
struct ARVertex {
  Vertex i = 0;
  int p = 0;

  friend auto operator<=>(const ARVertex&, const ARVertex&) = default;
};

// (i, p) -> (i, p - 2 * steps).
inline ARVertex translate(ARVertex v, int steps) { return {v.i, v.p - 2 * steps}; }

// gamma_i: the sum of alpha_j over the vertices j with a path j -> i in Q.
Root gamma_root(const Quiver& quiver, Vertex i);

// Directed reachability in the repetition quiver, whose arrows are
// (i, p) -> (j, p + 1) for j adjacent to i. Searched lazily.
bool has_path_repetition(const CartanDatum& datum, ARVertex from, ARVertex to);

// The finite AR quiver Gamma_Q inside the repetition quiver, together with
// the bijection phi : R+ x Z -> I-hat built from the seeds
// phi(gamma_i, 0) = (i, xi_i) and translation by the Coxeter element.
//
// The table for R+ x {0} is computed once at construction; the object is
// immutable afterwards.
class ARQuiver {
 public:
  ARQuiver(const Quiver& quiver, const RootSystem& roots, HeightFunction xi);

  const Quiver& quiver() const { return quiver_; }
  const RootSystem& roots() const { return roots_; }
  const HeightFunction& height() const { return xi_; }
  const RootSystem::Perm& coxeter_perm() const { return tau_; }

  // p - xi_i even.
  bool in_i_hat(ARVertex v) const;

  // phi on R+ x {0}; root given by its positive index.
  ARVertex phi(int root) const { return phi_.at(root); }
  // phi on R+ x Z.
  ARVertex phi(int root, int k) const;
  // Inverse of phi on I-hat; throws std::invalid_argument on parity violation.
  std::pair<int, int> phi_inverse(ARVertex v) const;
  // Inverse restricted to Gamma_Q: positive root index or -1.
  int root_at(ARVertex v) const;

  bool contains(ARVertex v) const { return root_at(v) >= 0; }
  // Vertices of Gamma_Q, sorted.
  const std::vector<ARVertex>& vertices() const { return vertices_; }
  // Arrows (i,p) -> (j,p+1) between vertices of Gamma_Q, sorted.
  std::vector<std::pair<ARVertex, ARVertex>> arrows() const;
  std::vector<ARVertex> successors(ARVertex v) const;

  // (i, p) with (i, p-1), (i, p+1) both in Gamma_Q.
  std::vector<ARVertex> j_hat_q() const;

  // Directed reachability inside Gamma_Q (v == w counts).
  bool has_path(ARVertex from, ARVertex to) const;

  int min_p() const { return min_p_; }
  int max_p() const { return max_p_; }

 private:
  // One step of rule (b). forward == true applies tau, else tau^{-1}.
  void step(int* root, int* k, ARVertex* v, bool forward) const;

  Quiver quiver_;
  RootSystem roots_;
  HeightFunction xi_;
  RootSystem::Perm tau_;
  RootSystem::Perm tau_inv_;
  std::vector<int> seed_;  // seed_[i] = positive index of gamma_i
  std::vector<ARVertex> phi_;
  std::map<ARVertex, int> inverse_;
  std::vector<ARVertex> vertices_;
  std::vector<std::vector<bool>> reach_;  // transitive closure on vertices_
  int min_p_ = 0;
  int max_p_ = 0;
};

}  // namespace quivkit
