#pragma once

#include <map>
#include <string>
#include <vector>

#include "quivkit/linalg.hpp"

namespace quivkit {

using Exponents = std::vector<int>;

// Sparse polynomial in x_0 .. x_{n-1} with rational coefficients. Zero
// coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial monomial(const Exponents& a, const Rational& c = 1);
  static Polynomial variable(int nvars, int k);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Exponents& a, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  // x_k <-> x_{k+1}.
  Polynomial swapped(int k) const;
  // (s_k f - f) / (x_k - x_{k+1}); always a polynomial.
  Polynomial demazure(int k) const;
  // f(x_{s(0)}, ..., x_{s(n-1)}) for a permutation s in one-line notation.
  Polynomial permuted(const std::vector<int>& s) const;
  // Invariant under all permutations of the variables in [lo, hi).
  bool is_symmetric_in(int lo, int hi) const;

  // "3/2*x1^2*x3 - x2", 1-based variable names.
  std::string to_string() const;

 private:
  int nvars_;
  Terms terms_;
};

// (s_k f - f) / (x_k - x_{k+1}) on a single monomial.
Polynomial demazure_monomial(const Exponents& a, int k);

// All exponent vectors of total degree m in n variables, sorted.
std::vector<Exponents> monomials_of_degree(int n, int m);

}  // namespace quivkit
