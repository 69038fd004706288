#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quivkit/arq.hpp"
#include "quivkit/linalg.hpp"
#include "quivkit/lweight.hpp"
#include "quivkit/quiver.hpp"
#include "quivkit/rootsys.hpp"

namespace quivkit {

// A representation of a quiver: one vector space per vertex and, for every
// arrow i -> j, a dims[j] x dims[i] matrix.
class QuiverRep {
 public:
  QuiverRep() = default;
  // Zero maps of the right shapes.
  QuiverRep(const Quiver& quiver, std::vector<int> dims);
  // Trusts the caller on shapes.
  static QuiverRep from_parts(std::vector<int> dims, std::map<Arrow, Matrix> maps);

  const std::vector<int>& dims() const { return dims_; }
  const std::map<Arrow, Matrix>& maps() const { return maps_; }
  const Matrix& map(Arrow a) const { return maps_.at(a); }
  // Throws std::invalid_argument if the shape is wrong or a is not an arrow.
  void set_map(Arrow a, Matrix m);

  int total_dim() const;

 private:
  std::vector<int> dims_;
  std::map<Arrow, Matrix> maps_;
};

QuiverRep simple_rep(const Quiver& quiver, Vertex i);

// BGP reflection at a sink i of `quiver`; the result is a representation of
// quiver.reflected(i). V'_i is the kernel of the sum of the incoming maps.
QuiverRep reflect_at_sink(const Quiver& quiver, const QuiverRep& rep, Vertex i);

// M(alpha) for the positive root with the given index, built from a simple by
// sink reflections along the adapted source-peeling word.
QuiverRep indecomposable(const Quiver& quiver, const RootSystem& roots,
                         int root_index);

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b);

// dim Hom(M, N): the solution space of f_j B_a = B'_a f_i, found by RREF.
int hom_dim(const Quiver& quiver, const QuiverRep& m, const QuiverRep& n);

// <a, b> = sum a_i b_i - sum_{i -> j} a_i b_j.
int euler_form(const Quiver& quiver, const Root& a, const Root& b);

// dim Ext^1(M, N) as the cokernel of the same linear map, with its rank taken
// by fraction-free elimination. Hom - Ext^1 = <dim M, dim N> is therefore a
// check that the two eliminations agree, not a definition.
int ext1_dim(const Quiver& quiver, const QuiverRep& m, const QuiverRep& n);

// dim E_beta = sum_{i -> j} beta_i beta_j.
int rep_space_dim(const Quiver& quiver, const Root& beta);

// Multiplicities indexed by positive-root index.
struct KostantPartition {
  std::vector<int> mult;
  Root beta;

  friend auto operator<=>(const KostantPartition&,
                          const KostantPartition&) = default;
};

// Every Kostant partition of beta, sorted.
std::vector<KostantPartition> enumerate_kp(const RootSystem& roots,
                                           const Root& beta);

// M(m) as an explicit representation.
QuiverRep direct_sum(const Quiver& quiver, const RootSystem& roots,
                     const KostantPartition& m);

// The R+ x R+ table of dim Hom(M(a), M(b)), computed once per quiver.
// Everything the degeneration order needs follows from it by additivity.
class HomTable {
 public:
  HomTable(const Quiver& quiver, const RootSystem& roots);

  const Quiver& quiver() const { return quiver_; }
  const RootSystem& roots() const { return roots_; }
  const QuiverRep& module(int root) const { return modules_.at(root); }
  int hom(int a, int b) const { return table_[a][b]; }

  int hom(const KostantPartition& m, const KostantPartition& n) const;
  // gamma -> dim Hom(M(gamma), M(m)).
  std::vector<int> hom_vector(const KostantPartition& m) const;

  // m <= n iff the orbit of n lies in the closure of the orbit of m, decided
  // by dim Hom(X, M(m)) <= dim Hom(X, M(n)) for every indecomposable X.
  // Throws std::invalid_argument on a beta mismatch.
  bool kp_leq(const KostantPartition& m, const KostantPartition& n) const;

  int orbit_dim(const KostantPartition& m) const;
  int self_ext(const KostantPartition& m) const;

 private:
  Quiver quiver_;
  RootSystem roots_;
  std::vector<QuiverRep> modules_;
  std::vector<std::vector<int>> table_;
};

// f(m) = sum m_alpha varpi_{phi(alpha)}.
LWeight f_bijection(const ARQuiver& arq, const KostantPartition& m);
// Throws std::invalid_argument unless lambda is l-dominant with support in
// Gamma_Q.
KostantPartition f_inverse(const ARQuiver& arq, const LWeight& lambda);

// Cover relations of a finite poset given by its order relation, as index
// pairs (lower, upper), sorted.
std::vector<std::pair<int, int>> hasse_covers(
    const std::vector<std::vector<bool>>& leq);

}  // namespace quivkit
