#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quivkit/rootsys.hpp"

namespace quivkit {

using Arrow = std::pair<Vertex, Vertex>;  // (source, target)

// Height function: xi[j] == xi[i] - 1 for every arrow i -> j.
using HeightFunction = std::vector<int>;

// An orientation of a Dynkin diagram.
class Quiver {
 public:
  // Every edge oriented from the smaller to the larger vertex.
  static Quiver standard(const CartanDatum& datum);
  // Throws std::invalid_argument unless the arrows orient each edge exactly
  // once and nothing else.
  static Quiver from_arrows(const CartanDatum& datum, std::vector<Arrow> arrows);
  // All 2^(n-1) orientations, enumerated by the bits of the sorted edge list.
  static std::vector<Quiver> all_orientations(const CartanDatum& datum);

  const CartanDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank(); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  bool has_arrow(Vertex i, Vertex j) const { return dir_[i][j] != 0; }

  std::vector<Vertex> sources() const;
  std::vector<Vertex> sinks() const;
  bool is_source(Vertex i) const;
  bool is_sink(Vertex i) const;

  // Flips every arrow incident to i.
  Quiver reflected(Vertex i) const;

  // Topological order (a < b whenever i_a -> i_b); ties broken by the
  // smallest vertex.
  std::vector<Vertex> adapted_numbering() const;

  // Canonical height function, normalized so that min xi = 0.
  HeightFunction height_function() const;
  bool is_height_function(const HeightFunction& xi) const;

  // Whether there is a directed path from j to i (j == i counts).
  bool has_path(Vertex from, Vertex to) const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.datum_ == b.datum_ && a.arrows_ == b.arrows_;
  }

 private:
  Quiver(CartanDatum datum, std::vector<Arrow> arrows);

  CartanDatum datum_;
  std::vector<Arrow> arrows_;  // sorted
  std::vector<std::vector<int>> dir_;
};

// The Coxeter element s_{i_1} ... s_{i_n} for the adapted numbering.
WeylWord coxeter_element(const Quiver& quiver);
WeylWord coxeter_element(const Quiver& quiver,
                         const std::vector<Vertex>& numbering);

// A reduced word for w_0 adapted to Q together with the root sequence
// gamma_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}), as positive-root indices.
struct AdaptedWord {
  WeylWord word;
  std::vector<int> gammas;
};

// Greedy source peeling: take the smallest source, reflect, repeat. Throws
// std::logic_error if a gamma repeats or leaves R+.
AdaptedWord adapted_w0(const Quiver& quiver, const RootSystem& roots);

// Checks the source condition at every step of the word.
bool is_adapted(const Quiver& quiver, const WeylWord& word);

// "1>2,3>2" in 1-based labels. Empty string means no arrows (A1).
Quiver parse_orientation(const CartanDatum& datum, const std::string& spec);
std::string orientation_string(const Quiver& quiver);

}  // namespace quivkit
