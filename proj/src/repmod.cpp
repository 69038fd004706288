#include "quivkit/repmod.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace quivkit {

QuiverRep::QuiverRep(const Quiver& quiver, std::vector<int> dims)
    : dims_(std::move(dims)) {
  if (static_cast<int>(dims_.size()) != quiver.rank()) {
    throw std::invalid_argument("QuiverRep: dimension vector has wrong length");
  }
  for (int d : dims_) {
    if (d < 0) throw std::invalid_argument("QuiverRep: negative dimension");
  }
  for (auto [i, j] : quiver.arrows()) {
    maps_.emplace(Arrow{i, j}, Matrix(dims_[j], dims_[i]));
  }
}

void QuiverRep::set_map(Arrow a, Matrix m) {
  auto it = maps_.find(a);
  if (it == maps_.end()) throw std::invalid_argument("set_map: not an arrow");
  if (m.rows() != static_cast<std::size_t>(dims_[a.second]) ||
      m.cols() != static_cast<std::size_t>(dims_[a.first])) {
    throw std::invalid_argument("set_map: shape does not match dimensions");
  }
  it->second = std::move(m);
}

QuiverRep QuiverRep::from_parts(std::vector<int> dims,
                                std::map<Arrow, Matrix> maps) {
  QuiverRep out;
  out.dims_ = std::move(dims);
  out.maps_ = std::move(maps);
  return out;
}

int QuiverRep::total_dim() const {
  return std::accumulate(dims_.begin(), dims_.end(), 0);
}

QuiverRep simple_rep(const Quiver& quiver, Vertex i) {
  std::vector<int> dims(quiver.rank(), 0);
  dims.at(i) = 1;
  return QuiverRep(quiver, dims);
}

QuiverRep reflect_at_sink(const Quiver& quiver, const QuiverRep& rep, Vertex i) {
  if (!quiver.is_sink(i)) throw std::invalid_argument("reflect_at_sink: not a sink");
  std::vector<Vertex> in;
  for (auto [s, t] : quiver.arrows()) {
    if (t == i) in.push_back(s);
  }
  const auto& d = rep.dims();
  std::size_t width = 0;
  for (Vertex j : in) width += d[j];
  Matrix sum(d[i], width);
  std::size_t off = 0;
  for (Vertex j : in) {
    const Matrix& b = rep.map({j, i});
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) sum(r, off + c) = b(r, c);
    }
    off += d[j];
  }
  const Matrix k = kernel(sum);

  const Quiver reflected = quiver.reflected(i);
  std::vector<int> dims = d;
  dims[i] = static_cast<int>(k.cols());
  QuiverRep out(reflected, dims);
  for (auto [s, t] : quiver.arrows()) {
    if (t != i) out.set_map({s, t}, rep.map({s, t}));
  }
  off = 0;
  for (Vertex j : in) {
    Matrix block(d[j], k.cols());
    for (int r = 0; r < d[j]; ++r) {
      for (std::size_t c = 0; c < k.cols(); ++c) block(r, c) = k(off + r, c);
    }
    out.set_map({i, j}, std::move(block));
    off += d[j];
  }
  return out;
}

QuiverRep indecomposable(const Quiver& quiver, const RootSystem& roots,
                         int root_index) {
  if (root_index < 0 || root_index >= roots.num_positive()) {
    throw std::invalid_argument("indecomposable: not a positive root");
  }
  const AdaptedWord aw = adapted_w0(quiver, roots);
  const auto pos = std::find(aw.gammas.begin(), aw.gammas.end(), root_index);
  const std::size_t k = pos - aw.gammas.begin();

  std::vector<Quiver> chain{quiver};
  for (std::size_t t = 0; t < k; ++t) {
    chain.push_back(chain.back().reflected(aw.word[t]));
  }
  QuiverRep rep = simple_rep(chain[k], aw.word[k]);
  for (std::size_t t = k; t-- > 0;) {
    rep = reflect_at_sink(chain[t + 1], rep, aw.word[t]);
  }
  const Root& alpha = roots.root(root_index);
  if (rep.dims() != std::vector<int>(alpha.begin(), alpha.end())) {
    throw std::logic_error("indecomposable: dimension vector mismatch");
  }
  return rep;
}

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b) {
  if (a.dims().size() != b.dims().size()) {
    throw std::invalid_argument("direct_sum: different quivers");
  }
  std::vector<int> dims(a.dims().size());
  for (std::size_t i = 0; i < dims.size(); ++i) dims[i] = a.dims()[i] + b.dims()[i];
  std::map<Arrow, Matrix> maps;
  for (const auto& [arrow, m] : a.maps()) {
    maps[arrow] = quivkit::direct_sum(m, b.map(arrow));
  }
  return QuiverRep::from_parts(std::move(dims), std::move(maps));
}

namespace {

// The map (f_i) -> (f_j B_a - B'_a f_i) from sum_i Hom(M_i, N_i) to
// sum_{a : i -> j} Hom(M_i, N_j). Its kernel is Hom(M, N) and its cokernel
// is Ext^1(M, N).
Matrix ringel_map(const Quiver& quiver, const QuiverRep& m, const QuiverRep& n) {
  const auto& dm = m.dims();
  const auto& dn = n.dims();
  const int rank_q = quiver.rank();
  std::vector<std::size_t> off(rank_q + 1, 0);
  for (int i = 0; i < rank_q; ++i) off[i + 1] = off[i] + dn[i] * dm[i];
  std::size_t eqs = 0;
  for (auto [i, j] : quiver.arrows()) eqs += dn[j] * dm[i];
  Matrix sys(eqs, off[rank_q]);
  std::size_t row = 0;
  auto var = [&](Vertex v, int r, int c) { return off[v] + r * dm[v] + c; };
  for (auto [i, j] : quiver.arrows()) {
    const Matrix& b = m.map({i, j});
    const Matrix& bp = n.map({i, j});
    for (int r = 0; r < dn[j]; ++r) {
      for (int c = 0; c < dm[i]; ++c, ++row) {
        for (int k = 0; k < dm[j]; ++k) {
          if (b(k, c) != 0) sys(row, var(j, r, k)) += b(k, c);
        }
        for (int k = 0; k < dn[i]; ++k) {
          if (bp(r, k) != 0) sys(row, var(i, k, c)) -= bp(r, k);
        }
      }
    }
  }
  return sys;
}

}  // namespace

int hom_dim(const Quiver& quiver, const QuiverRep& m, const QuiverRep& n) {
  const Matrix sys = ringel_map(quiver, m, n);
  if (sys.cols() == 0) return 0;
  return static_cast<int>(kernel(sys).cols());
}

int euler_form(const Quiver& quiver, const Root& a, const Root& b) {
  int out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  for (auto [i, j] : quiver.arrows()) out -= a[i] * b[j];
  return out;
}

int ext1_dim(const Quiver& quiver, const QuiverRep& m, const QuiverRep& n) {
  const Matrix sys = ringel_map(quiver, m, n);
  return static_cast<int>(sys.rows() - rank(sys));
}

int rep_space_dim(const Quiver& quiver, const Root& beta) {
  int out = 0;
  for (auto [i, j] : quiver.arrows()) out += beta[i] * beta[j];
  return out;
}

std::vector<KostantPartition> enumerate_kp(const RootSystem& roots,
                                           const Root& beta) {
  const int total = roots.num_positive();
  std::vector<KostantPartition> out;
  KostantPartition cur{std::vector<int>(total, 0), beta};
  Root remaining = beta;
  std::function<void(int)> rec = [&](int k) {
    if (std::all_of(remaining.begin(), remaining.end(),
                    [](int c) { return c == 0; })) {
      out.push_back(cur);
      return;
    }
    if (k == total) return;
    const Root& alpha = roots.root(k);
    rec(k + 1);
    int taken = 0;
    for (;;) {
      bool fits = true;
      for (std::size_t j = 0; j < remaining.size(); ++j) {
        if (alpha[j] > remaining[j]) fits = false;
      }
      if (!fits) break;
      for (std::size_t j = 0; j < remaining.size(); ++j) remaining[j] -= alpha[j];
      ++cur.mult[k];
      ++taken;
      rec(k + 1);
    }
    for (std::size_t j = 0; j < remaining.size(); ++j) {
      remaining[j] += taken * alpha[j];
    }
    cur.mult[k] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

QuiverRep direct_sum(const Quiver& quiver, const RootSystem& roots,
                     const KostantPartition& m) {
  QuiverRep out(quiver, std::vector<int>(quiver.rank(), 0));
  for (int a = 0; a < roots.num_positive(); ++a) {
    if (m.mult[a] == 0) continue;
    const QuiverRep ind = indecomposable(quiver, roots, a);
    for (int c = 0; c < m.mult[a]; ++c) out = direct_sum(out, ind);
  }
  return out;
}

HomTable::HomTable(const Quiver& quiver, const RootSystem& roots)
    : quiver_(quiver), roots_(roots) {
  const int total = roots_.num_positive();
  for (int a = 0; a < total; ++a) {
    modules_.push_back(indecomposable(quiver_, roots_, a));
  }
  table_.assign(total, std::vector<int>(total, 0));
  for (int a = 0; a < total; ++a) {
    for (int b = 0; b < total; ++b) {
      table_[a][b] = hom_dim(quiver_, modules_[a], modules_[b]);
    }
  }
}

int HomTable::hom(const KostantPartition& m, const KostantPartition& n) const {
  int out = 0;
  for (std::size_t a = 0; a < m.mult.size(); ++a) {
    if (m.mult[a] == 0) continue;
    for (std::size_t b = 0; b < n.mult.size(); ++b) {
      out += m.mult[a] * n.mult[b] * table_[a][b];
    }
  }
  return out;
}

std::vector<int> HomTable::hom_vector(const KostantPartition& m) const {
  const int total = roots_.num_positive();
  std::vector<int> out(total, 0);
  for (int g = 0; g < total; ++g) {
    for (int a = 0; a < total; ++a) out[g] += m.mult[a] * table_[g][a];
  }
  return out;
}

bool HomTable::kp_leq(const KostantPartition& m,
                      const KostantPartition& n) const {
  if (m.beta != n.beta) throw std::invalid_argument("kp_leq: beta mismatch");
  const auto hm = hom_vector(m);
  const auto hn = hom_vector(n);
  for (std::size_t g = 0; g < hm.size(); ++g) {
    if (hm[g] > hn[g]) return false;
  }
  return true;
}

int HomTable::orbit_dim(const KostantPartition& m) const {
  int sq = 0;
  for (int d : m.beta) sq += d * d;
  return sq - hom(m, m);
}

int HomTable::self_ext(const KostantPartition& m) const {
  return hom(m, m) - euler_form(quiver_, m.beta, m.beta);
}

LWeight f_bijection(const ARQuiver& arq, const KostantPartition& m) {
  LWeight out;
  for (std::size_t a = 0; a < m.mult.size(); ++a) {
    if (m.mult[a] != 0) out.add(arq.phi(static_cast<int>(a)), m.mult[a]);
  }
  return out;
}

KostantPartition f_inverse(const ARQuiver& arq, const LWeight& lambda) {
  const RootSystem& roots = arq.roots();
  KostantPartition m{std::vector<int>(roots.num_positive(), 0),
                     Root(roots.rank(), 0)};
  for (const auto& [v, c] : lambda.coeffs()) {
    const int a = arq.root_at(v);
    if (a < 0) throw std::invalid_argument("f_inverse: support leaves Gamma_Q");
    if (c < 0) throw std::invalid_argument("f_inverse: negative coefficient");
    m.mult[a] = static_cast<int>(c);
    const Root& alpha = roots.root(a);
    for (int j = 0; j < roots.rank(); ++j) m.beta[j] += static_cast<int>(c) * alpha[j];
  }
  return m;
}

std::vector<std::pair<int, int>> hasse_covers(
    const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(leq.size());
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b || !leq[a][b]) continue;
      bool cover = true;
      for (int c = 0; c < n && cover; ++c) {
        if (c != a && c != b && leq[a][c] && leq[c][b]) cover = false;
      }
      if (cover) out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace quivkit
