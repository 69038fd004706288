#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace quivkit {

// Vertices are 0-based everywhere inside the library. Anything that talks to
// a human (CLI, JSON, DOT) prints them 1-based.
using Vertex = int;

// A root-lattice element written in the simple-root basis.
using Root = std::vector<int>;

enum class Basis { kAlpha, kOmega };

// An element of the weight lattice together with the basis its coordinates
// refer to.
struct WeightVector {
  Basis basis = Basis::kAlpha;
  std::vector<std::int64_t> coords;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

// Simply-laced Dynkin datum. The vertex numbering follows Bourbaki:
//   A_n: 1 - 2 - ... - n
//   D_n: 1 - ... - (n-2), with n-1 and n both attached to n-2
//   E_n: 1 - 3 - 4 - ... - n, with 2 attached to 4
class CartanDatum {
 public:
  // "A3", "D4", "E8", ... Throws std::invalid_argument on anything else.
  static CartanDatum from_label(std::string_view label);

  // Validates that the graph is a simply-laced Dynkin diagram and recovers
  // its type label. Throws std::invalid_argument otherwise.
  static CartanDatum from_adjacency(const std::vector<std::vector<int>>& adj);

  const std::string& label() const { return label_; }
  int rank() const { return static_cast<int>(adjacency_.size()); }
  bool adjacent(Vertex i, Vertex j) const { return adjacency_[i][j] != 0; }
  const std::vector<Vertex>& neighbors(Vertex i) const { return neighbors_[i]; }
  int cartan(Vertex i, Vertex j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }

  // Undirected edges (i, j) with i < j, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const CartanDatum& a, const CartanDatum& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  CartanDatum(std::string label, std::vector<std::vector<int>> adj);

  std::string label_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Vertex>> neighbors_;
};

// The standard list of types of rank <= max_rank, in the order
// A1..A_max, D4..D_max, E6..E8 (restricted to max_rank).
std::vector<std::string> ade_labels(int max_rank);

// Weight-lattice arithmetic. Coordinates in the alpha basis convert to the
// omega basis through the Cartan matrix; the reverse conversion fails (returns
// false) if the weight is not in the root lattice.
WeightVector to_omega(const CartanDatum& datum, const WeightVector& w);
bool to_alpha(const CartanDatum& datum, const WeightVector& w,
              WeightVector* out);

// lambda(h_i): the i-th omega coordinate.
std::int64_t pairing(const CartanDatum& datum, const WeightVector& w, Vertex i);

// s_i(lambda) = lambda - lambda(h_i) alpha_i, returned in the input's basis.
WeightVector simple_reflection(const CartanDatum& datum, Vertex i,
                               const WeightVector& w);

// lambda <= mu iff mu - lambda has nonnegative integer alpha-coordinates.
bool dominance_leq(const CartanDatum& datum, const WeightVector& lambda,
                   const WeightVector& mu);

// Reflection of a root written in alpha coordinates.
Root reflect_root(const CartanDatum& datum, Vertex i, const Root& root);

int height(const Root& root);
bool is_nonnegative(const Root& root);

using WeylWord = std::vector<Vertex>;

// Finite root system with the Weyl group acting on it by permutations.
//
// All roots are indexed: positive roots occupy [0, N) in lexicographic order
// of their alpha coordinates; the negative of positive root k has index N + k.
// A Weyl group element is stored as the permutation it induces on these 2N
// indices, which makes equality of group elements a vector comparison.
class RootSystem {
 public:
  using Perm = std::vector<int>;

  explicit RootSystem(CartanDatum datum);

  const CartanDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank(); }
  int num_positive() const { return static_cast<int>(positive_.size()); }

  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& root(int index) const;
  Root root_vector(int index) const;  // signed alpha coordinates

  // Index of a root (positive or negative); -1 if not a root.
  int index_of(const Root& root) const;
  int positive_index(const Root& root) const;  // -1 unless a positive root
  int simple_root_index(Vertex i) const { return simple_index_[i]; }
  bool is_positive_index(int index) const { return index < num_positive(); }
  int negate_index(int index) const;

  const Perm& simple_reflection_perm(Vertex i) const { return reflections_[i]; }
  Perm identity() const;
  Perm compose(const Perm& a, const Perm& b) const;  // a after b
  Perm inverse(const Perm& a) const;
  // The element s_{w[0]} s_{w[1]} ... as a permutation of roots.
  Perm element(const WeylWord& word) const;

  // Number of positive roots sent to negative roots.
  int inversions(const Perm& w) const;
  bool is_reduced(const WeylWord& word) const;
  int order(const Perm& w) const;

  WeylWord longest_element() const;  // a reduced word for w_0
  const Perm& longest_perm() const { return w0_; }
  int coxeter_number() const { return coxeter_number_; }
  // i -> i*, defined by alpha_{i*} = -w_0 alpha_i.
  Vertex star(Vertex i) const { return star_[i]; }

 private:
  CartanDatum datum_;
  std::vector<Root> positive_;
  std::map<Root, int> index_;
  std::vector<int> simple_index_;
  std::vector<Perm> reflections_;
  WeylWord w0_word_;
  Perm w0_;
  int coxeter_number_ = 0;
  std::vector<Vertex> star_;
};

std::string root_to_string(const Root& root);

}  // namespace quivkit
