#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "quivkit/arq.hpp"
#include "quivkit/rootsys.hpp"

namespace quivkit {

// Finite integer combination of basis symbols indexed by (i, p). Zero
// coefficients are never stored, so == is equality of lattice elements.
class LatticeElement {
 public:
  using Map = std::map<ARVertex, std::int64_t>;

  LatticeElement() = default;
  explicit LatticeElement(Map coeffs);

  static LatticeElement basis(Vertex i, int p, std::int64_t c = 1);

  const Map& coeffs() const { return coeffs_; }
  std::int64_t operator[](ARVertex v) const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_nonnegative() const;
  void add(ARVertex v, std::int64_t c);

  LatticeElement& operator+=(const LatticeElement& o);
  LatticeElement& operator-=(const LatticeElement& o);
  LatticeElement operator*(std::int64_t c) const;
  friend LatticeElement operator+(LatticeElement a, const LatticeElement& b) {
    return a += b;
  }
  friend LatticeElement operator-(LatticeElement a, const LatticeElement& b) {
    return a -= b;
  }
  friend bool operator==(const LatticeElement&, const LatticeElement&) = default;
  friend auto operator<=>(const LatticeElement& a, const LatticeElement& b) {
    return a.coeffs_ <=> b.coeffs_;
  }

 private:
  Map coeffs_;
};

// An l-weight: coefficients on the fundamental l-weights varpi_{i,p}.
struct LWeight : LatticeElement {
  using LatticeElement::LatticeElement;
  LWeight(const LatticeElement& e) : LatticeElement(e) {}  // NOLINT
};

// Coefficients on the l-roots alpha_{i,p}.
struct LRootCombination : LatticeElement {
  using LatticeElement::LatticeElement;
  LRootCombination(const LatticeElement& e) : LatticeElement(e) {}  // NOLINT
};

inline LWeight fundamental_lweight(Vertex i, int p) {
  return LWeight(LatticeElement::basis(i, p));
}

// alpha_{i,p} = varpi_{i,p+1} + varpi_{i,p-1} - sum_{j ~ i} varpi_{j,p}.
LWeight l_root(const CartanDatum& datum, Vertex i, int p);

// Sum of n_{i,p} alpha_{i,p}, written back in the varpi basis.
LWeight expand(const CartanDatum& datum, const LRootCombination& nu);

// varpi_{i,p} -> varpi_i, in the omega basis.
WeightVector cl(const CartanDatum& datum, const LWeight& lambda);

// varpi_{phi(alpha)} -> alpha. Throws std::invalid_argument when the support
// leaves Gamma_Q.
Root deg(const ARQuiver& arq, const LWeight& lambda);

// Unique expansion of nu in l-roots, by a unitriangular scan in increasing p.
// Returns nullopt when nu is not in the l-root lattice.
std::optional<LRootCombination> solve_l_roots(const CartanDatum& datum,
                                              const LWeight& nu);

// mu <= lambda in the l-dominance order: returns the expansion of
// lambda - mu when all its coefficients are nonnegative, nullopt otherwise.
std::optional<LRootCombination> l_dominance_leq(const CartanDatum& datum,
                                                const LWeight& mu,
                                                const LWeight& lambda);

bool in_i_hat_z(const HeightFunction& xi, ARVertex v);
// Support of nu inside J-hat_Q.
bool in_lq_q(const ARQuiver& arq, const LRootCombination& nu);
bool in_lp_q(const ARQuiver& arq, const LWeight& lambda);

// Decides lQ_Q == lP_Q cap lQ exactly over the window of l-roots that can
// occur in an expansion of an element of lP_Q (p strictly between the
// extreme p values of Gamma_Q). Returns true when the lattices agree.
bool lrootq_window_check(const ARQuiver& arq);

// (-)^*: varpi_{i,p} -> varpi_{i*, p-h}; and the left dual *(-) with p+h.
LWeight dual_right(const RootSystem& roots, const LWeight& lambda);
LWeight dual_left(const RootSystem& roots, const LWeight& lambda);

// The finite set lP+_{Q,beta} of l-dominant l-weights of degree beta,
// enumerated vertex by vertex over Gamma_Q. Sorted.
std::vector<LWeight> dominant_lweights_of_degree(const ARQuiver& arq,
                                                 const Root& beta);

}  // namespace quivkit
