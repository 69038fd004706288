#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quivkit/linalg.hpp"
#include "quivkit/poly.hpp"
#include "quivkit/quiver.hpp"
#include "quivkit/rootsys.hpp"

namespace quivkit {

// A sequence of vertices with multiplicities beta.
using Idem = std::vector<Vertex>;
// A permutation of {0, .., d-1} in one-line notation: k -> perm[k].
using SymPerm = std::vector<int>;

// The basis element x^mono tau_perm e(idem). idem is the idempotent on the
// right; tau_perm is the product along the canonical reduced word.
struct KlrTerm {
  Idem idem;
  SymPerm perm;
  Exponents mono;

  friend auto operator<=>(const KlrTerm&, const KlrTerm&) = default;
};

using KlrTerms = std::map<KlrTerm, Rational>;

// An element of H_Q(beta) in normal form. No zero coefficients are stored.
class KlrElement {
 public:
  KlrElement() = default;
  explicit KlrElement(Root beta) : beta_(std::move(beta)) {}
  KlrElement(Root beta, KlrTerms terms);

  const Root& beta() const { return beta_; }
  const KlrTerms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const KlrTerm& t, const Rational& c);

  KlrElement& operator+=(const KlrElement& o);
  KlrElement& operator-=(const KlrElement& o);
  KlrElement operator*(const Rational& c) const;
  friend KlrElement operator+(KlrElement a, const KlrElement& b) { return a += b; }
  friend KlrElement operator-(KlrElement a, const KlrElement& b) { return a -= b; }
  friend bool operator==(const KlrElement&, const KlrElement&) = default;

 private:
  void check_beta(const KlrElement& o) const;

  Root beta_;
  KlrTerms terms_;
};

// Permutation helpers on S_d. Letters k act on positions k, k+1 (0-based).
SymPerm perm_identity(int d);
SymPerm perm_compose(const SymPerm& a, const SymPerm& b);  // a after b
SymPerm perm_inverse(const SymPerm& a);
SymPerm perm_of_word(int d, const std::vector<int>& word);  // s_{w0} s_{w1} ...
int perm_length(const SymPerm& a);
// The lexicographically smallest reduced word.
std::vector<int> canonical_word(const SymPerm& a);
// sigma . i = (i_{sigma^{-1}(1)}, ...).
Idem act(const SymPerm& sigma, const Idem& i);

// The quiver Hecke algebra H_Q(beta) with a rewriting engine for products.
//
// Normal form is x^a tau_sigma e(i) with the canonical reduced word for
// sigma. Products are computed by pushing tau letters leftwards through
// normal-form terms. The partial results (tau_k times a basis element, and the
// correction terms between two reduced words) are memoized; the memo is
// guarded by a mutex, so one algebra may be shared across threads.
class KlrAlgebra {
 public:
  KlrAlgebra(const Quiver& quiver, Root beta);
  ~KlrAlgebra();
  KlrAlgebra(KlrAlgebra&&) noexcept;
  KlrAlgebra& operator=(KlrAlgebra&&) noexcept;

  const Quiver& quiver() const { return quiver_; }
  const Root& beta() const { return beta_; }
  int size() const { return d_; }
  // I^beta, sorted.
  const std::vector<Idem>& idempotents() const { return idems_; }

  // The four cases of tau_k^2 e(i), as a polynomial in x_k, x_{k+1}.
  Polynomial tau_square(const Idem& i, int k) const;
  // c(i) in (t_{k+1} t_k t_{k+1} - t_k t_{k+1} t_k) e(i) = c(i) e(i).
  int braid_constant(const Idem& i, int k) const;
  // -a_{i_k, i_{k+1}}.
  int tau_degree(const Idem& i, int k) const;

  KlrElement zero() const { return KlrElement(beta_); }
  KlrElement one() const;
  // Generators; out-of-range indices throw std::out_of_range.
  KlrElement e(const Idem& i) const;
  KlrElement x(int k) const;
  KlrElement tau(int k) const;
  KlrElement basis(const KlrTerm& t) const;
  // sum_i f e(i).
  KlrElement polynomial(const Polynomial& f) const;

  // Throws std::invalid_argument on a beta mismatch.
  KlrElement multiply(const KlrElement& u, const KlrElement& v) const;

  int term_degree(const KlrTerm& t) const;
  // nullopt for the zero element and for inhomogeneous elements.
  std::optional<int> degree(const KlrElement& u) const;

  // Graded dimension in degree k: by counting PBW words, and as the rank of
  // the normal forms of the products tau_sigma * x^a e(i).
  long graded_dim_pbw(int k) const;
  long graded_dim_span(int k) const;

  bool is_central(const KlrElement& u) const;

  // fs[i] is a polynomial in d_i variables, symmetric; the image is
  // (1 / prod d_i!) sum_sigma sigma(f_1 ... f_n e(1^{d_1} ... n^{d_n})).
  // Throws std::invalid_argument on non-symmetric or mis-sized input.
  KlrElement center_embed(const std::vector<Polynomial>& fs) const;

  // The anti-involution reversing products and fixing every generator.
  KlrElement anti_involution(const KlrElement& u) const;

 private:
  struct Cache;

  KlrTerms leftmul_tau(int k, const KlrTerms& y) const;
  KlrTerms tau_times(int k, const SymPerm& pi, const Idem& l) const;
  KlrTerms rewrite(const std::vector<int>& word, const Idem& l) const;
  std::vector<int> cached_canonical(const SymPerm& p) const;
  int tau_degree_of(const SymPerm& sigma, const Idem& i) const;

  Quiver quiver_;
  Root beta_;
  int d_ = 0;
  std::vector<Idem> idems_;
  std::unique_ptr<Cache> cache_;
};

// e_m = tau_{w_0} x_2 x_3^2 ... x_m^{m-1} in H(m alpha_i). Throws
// std::invalid_argument unless beta is a multiple of a simple root.
KlrElement nilhecke_em(const KlrAlgebra& algebra);

// dim (M o N) = binom(d + d', d) dim M dim N.
Integer induct_dim(const Integer& dim_m, const Integer& dim_n, int d, int dp);

// Bookkeeping for a product of m_k copies of modules of dimension dims[k] and
// heights heights[k]: returns the product dimension divided by prod m_k!,
// or nullopt if that division is not exact.
std::optional<Integer> stdh_ledger(const std::vector<int>& mults,
                                   const std::vector<int>& heights,
                                   const std::vector<Integer>& dims);

// A vector of the polynomial representation: one polynomial per idempotent.
using PolyVector = std::map<Idem, Polynomial>;

// The faithful action of H_Q(beta) on the sum of Q[x_1..x_d] e(i): x_k
// multiplies, e(i) projects, tau_k acts by a Demazure operator on equal
// letters and by (correction) * swap on distinct letters. The constructor
// checks every defining relation on monomials of low degree and throws
// std::logic_error naming the first relation that fails.
class PolynomialRepresentation {
 public:
  explicit PolynomialRepresentation(const KlrAlgebra& algebra,
                                    int check_degree = 2);

  PolyVector act_e(const Idem& i, const PolyVector& v) const;
  PolyVector act_x(int k, const PolyVector& v) const;
  PolyVector act_tau(int k, const PolyVector& v) const;
  PolyVector apply(const KlrElement& u, const PolyVector& v) const;

  PolyVector single(const Idem& i, const Polynomial& f) const;

 private:
  void check_relations(int max_degree) const;

  const KlrAlgebra* algebra_;
  int d_;
};

bool poly_vector_equal(const PolyVector& a, const PolyVector& b);

// Plain text: one "coeff*x..*t..*e(..)" per term in canonical order,
// joined with " + ". 1-based labels.
std::string klr_to_string(const KlrElement& u);

}  // namespace quivkit
