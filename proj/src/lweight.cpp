#include "quivkit/lweight.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "quivkit/linalg.hpp"

namespace quivkit {

LatticeElement::LatticeElement(Map coeffs) {
  for (auto& [v, c] : coeffs) {
    if (c != 0) coeffs_.emplace(v, c);
  }
}

LatticeElement LatticeElement::basis(Vertex i, int p, std::int64_t c) {
  LatticeElement e;
  e.add({i, p}, c);
  return e;
}

std::int64_t LatticeElement::operator[](ARVertex v) const {
  auto it = coeffs_.find(v);
  return it == coeffs_.end() ? 0 : it->second;
}

bool LatticeElement::is_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const auto& kv) { return kv.second >= 0; });
}

void LatticeElement::add(ARVertex v, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(v, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LatticeElement& LatticeElement::operator+=(const LatticeElement& o) {
  for (const auto& [v, c] : o.coeffs_) add(v, c);
  return *this;
}

LatticeElement& LatticeElement::operator-=(const LatticeElement& o) {
  for (const auto& [v, c] : o.coeffs_) add(v, -c);
  return *this;
}

LatticeElement LatticeElement::operator*(std::int64_t c) const {
  LatticeElement out;
  if (c == 0) return out;
  for (const auto& [v, x] : coeffs_) out.coeffs_.emplace(v, x * c);
  return out;
}

LWeight l_root(const CartanDatum& datum, Vertex i, int p) {
  LWeight out;
  out.add({i, p + 1}, 1);
  out.add({i, p - 1}, 1);
  for (Vertex j : datum.neighbors(i)) out.add({j, p}, -1);
  return out;
}

LWeight expand(const CartanDatum& datum, const LRootCombination& nu) {
  LWeight out;
  for (const auto& [v, n] : nu.coeffs()) out += l_root(datum, v.i, v.p) * n;
  return out;
}

WeightVector cl(const CartanDatum& datum, const LWeight& lambda) {
  WeightVector out{Basis::kOmega, std::vector<std::int64_t>(datum.rank(), 0)};
  for (const auto& [v, c] : lambda.coeffs()) out.coords.at(v.i) += c;
  return out;
}

Root deg(const ARQuiver& arq, const LWeight& lambda) {
  Root out(arq.quiver().rank(), 0);
  for (const auto& [v, c] : lambda.coeffs()) {
    const int r = arq.root_at(v);
    if (r < 0) {
      throw std::invalid_argument("deg: l-weight support leaves Gamma_Q");
    }
    const Root& alpha = arq.roots().root(r);
    for (std::size_t j = 0; j < out.size(); ++j) {
      out[j] += static_cast<int>(c) * alpha[j];
    }
  }
  return out;
}

std::optional<LRootCombination> solve_l_roots(const CartanDatum& datum,
                                              const LWeight& nu) {
  LRootCombination result;
  if (nu.is_zero()) return result;
  int max_p = nu.coeffs().begin()->first.p;
  for (const auto& [v, c] : nu.coeffs()) max_p = std::max(max_p, v.p);

  LWeight residual = nu;
  while (!residual.is_zero()) {
    int p0 = residual.coeffs().begin()->first.p;
    for (const auto& [v, c] : residual.coeffs()) p0 = std::min(p0, v.p);
    // alpha_{i,p0+1} reaches up to p0 + 2; nothing beyond max_p may be used.
    if (p0 + 2 > max_p) return std::nullopt;
    std::vector<std::pair<Vertex, std::int64_t>> row;
    for (const auto& [v, c] : residual.coeffs()) {
      if (v.p == p0) row.emplace_back(v.i, c);
    }
    for (auto [i, c] : row) {
      result.add({i, p0 + 1}, c);
      residual -= l_root(datum, i, p0 + 1) * c;
    }
  }
  return result;
}

std::optional<LRootCombination> l_dominance_leq(const CartanDatum& datum,
                                                const LWeight& mu,
                                                const LWeight& lambda) {
  auto nu = solve_l_roots(datum, lambda - mu);
  if (!nu || !nu->is_nonnegative()) return std::nullopt;
  return nu;
}

bool in_i_hat_z(const HeightFunction& xi, ARVertex v) {
  return ((v.p - xi.at(v.i)) % 2 + 2) % 2 == 0;
}

bool in_lq_q(const ARQuiver& arq, const LRootCombination& nu) {
  for (const auto& [v, c] : nu.coeffs()) {
    if (!arq.contains({v.i, v.p - 1}) || !arq.contains({v.i, v.p + 1})) {
      return false;
    }
  }
  return true;
}

bool in_lp_q(const ARQuiver& arq, const LWeight& lambda) {
  for (const auto& [v, c] : lambda.coeffs()) {
    if (!arq.contains(v)) return false;
  }
  return true;
}

bool lrootq_window_check(const ARQuiver& arq) {
  const CartanDatum& datum = arq.quiver().datum();
  const int n = datum.rank();
  const int lo = arq.min_p(), hi = arq.max_p();

  std::vector<ARVertex> unknowns;
  for (int p = lo + 1; p <= hi - 1; ++p) {
    for (Vertex i = 0; i < n; ++i) unknowns.push_back({i, p});
  }
  std::vector<ARVertex> rows;
  for (int p = lo; p <= hi; ++p) {
    for (Vertex i = 0; i < n; ++i) {
      if (!arq.contains({i, p})) rows.push_back({i, p});
    }
  }
  std::map<ARVertex, std::size_t> row_of;
  for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;

  // Column v holds alpha_v restricted to the coordinates outside I-hat_Q.
  Matrix a(rows.size(), unknowns.size());
  for (std::size_t c = 0; c < unknowns.size(); ++c) {
    const auto& u = unknowns[c];
    const LWeight alpha = l_root(datum, u.i, u.p);
    for (const auto& [v, x] : alpha.coeffs()) {
      auto it = row_of.find(v);
      if (it != row_of.end()) a(it->second, c) = static_cast<long>(x);
    }
  }

  // lP_Q cap lQ corresponds to the kernel of a; lQ_Q to the coordinate
  // subspace on J-hat_Q. They agree iff the J-hat_Q columns vanish and the
  // kernel has exactly that dimension.
  const auto jq = arq.j_hat_q();
  const std::set<ARVertex> jq_set(jq.begin(), jq.end());
  for (std::size_t c = 0; c < unknowns.size(); ++c) {
    if (!jq_set.count(unknowns[c])) continue;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (a(r, c) != 0) return false;
    }
  }
  return rank(a) == unknowns.size() - jq.size();
}

LWeight dual_right(const RootSystem& roots, const LWeight& lambda) {
  LWeight out;
  const int h = roots.coxeter_number();
  for (const auto& [v, c] : lambda.coeffs()) out.add({roots.star(v.i), v.p - h}, c);
  return out;
}

LWeight dual_left(const RootSystem& roots, const LWeight& lambda) {
  LWeight out;
  const int h = roots.coxeter_number();
  for (const auto& [v, c] : lambda.coeffs()) out.add({roots.star(v.i), v.p + h}, c);
  return out;
}

std::vector<LWeight> dominant_lweights_of_degree(const ARQuiver& arq,
                                                 const Root& beta) {
  const auto& verts = arq.vertices();
  std::vector<Root> degs;
  for (const auto& v : verts) degs.push_back(arq.roots().root(arq.root_at(v)));

  std::vector<LWeight> out;
  LWeight current;
  Root remaining = beta;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (std::all_of(remaining.begin(), remaining.end(),
                    [](int c) { return c == 0; })) {
      out.push_back(current);
      return;
    }
    if (k == verts.size()) return;
    rec(k + 1);
    int taken = 0;
    for (;;) {
      bool fits = true;
      for (std::size_t j = 0; j < remaining.size(); ++j) {
        if (degs[k][j] > remaining[j]) fits = false;
      }
      if (!fits) break;
      for (std::size_t j = 0; j < remaining.size(); ++j) remaining[j] -= degs[k][j];
      current.add(verts[k], 1);
      ++taken;
      rec(k + 1);
    }
    for (std::size_t j = 0; j < remaining.size(); ++j) {
      remaining[j] += taken * degs[k][j];
    }
    current.add(verts[k], -taken);
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace quivkit
