#include "quivkit/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace quivkit {

namespace {

std::vector<std::vector<int>> empty_graph(int n) {
  return std::vector<std::vector<int>>(n, std::vector<int>(n, 0));
}

void connect(std::vector<std::vector<int>>& adj, int a, int b) {
  adj[a][b] = adj[b][a] = 1;
}

// Recognizes a simply-laced Dynkin diagram; returns its label or throws.
std::string classify(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) throw std::invalid_argument("empty Dynkin diagram");
  int edges = 0;
  std::vector<int> degree(n, 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(adj[i].size()) != n) {
      throw std::invalid_argument("adjacency matrix is not square");
    }
    if (adj[i][i] != 0) throw std::invalid_argument("self-loop in diagram");
    for (int j = 0; j < n; ++j) {
      if (adj[i][j] != adj[j][i]) {
        throw std::invalid_argument("adjacency matrix is not symmetric");
      }
      if (adj[i][j] != 0 && adj[i][j] != 1) {
        throw std::invalid_argument("multiple edges are not simply-laced");
      }
      if (adj[i][j]) ++degree[i];
    }
    edges += degree[i];
  }
  edges /= 2;

  // Connected tree check.
  std::vector<bool> seen(n, false);
  std::deque<int> queue{0};
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w = 0; w < n; ++w) {
      if (adj[v][w] && !seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  if (reached != n || edges != n - 1) {
    throw std::invalid_argument("diagram is not a tree");
  }

  std::vector<int> branch;
  for (int i = 0; i < n; ++i) {
    if (degree[i] > 3) throw std::invalid_argument("vertex of degree > 3");
    if (degree[i] == 3) branch.push_back(i);
  }
  if (branch.empty()) return "A" + std::to_string(n);
  if (branch.size() > 1) {
    throw std::invalid_argument("more than one branch vertex: not ADE");
  }

  const int center = branch.front();
  std::vector<int> arms;
  for (int start = 0; start < n; ++start) {
    if (!adj[center][start]) continue;
    int len = 1, prev = center, cur = start;
    for (;;) {
      int next = -1;
      for (int w = 0; w < n; ++w) {
        if (adj[cur][w] && w != prev) next = w;
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
    return "E" + std::to_string(n);
  }
  throw std::invalid_argument("tree is not a simply-laced Dynkin diagram");
}

}  // namespace

CartanDatum::CartanDatum(std::string label, std::vector<std::vector<int>> adj)
    : label_(std::move(label)), adjacency_(std::move(adj)) {
  const int n = rank();
  cartan_.assign(n, std::vector<int>(n, 0));
  neighbors_.assign(n, {});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        cartan_[i][j] = 2;
      } else if (adjacency_[i][j]) {
        cartan_[i][j] = -1;
        neighbors_[i].push_back(j);
      }
    }
  }
}

CartanDatum CartanDatum::from_label(std::string_view label) {
  if (label.size() < 2) {
    throw std::invalid_argument("bad Dynkin type label: " + std::string(label));
  }
  const char family = label[0];
  int n = 0;
  for (char c : label.substr(1)) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("bad Dynkin type label: " +
                                  std::string(label));
    }
    n = n * 10 + (c - '0');
    if (n > 64) throw std::invalid_argument("rank too large");
  }
  auto adj = empty_graph(n);
  switch (family) {
    case 'A':
      if (n < 1) break;
      for (int i = 0; i + 1 < n; ++i) connect(adj, i, i + 1);
      return CartanDatum(std::string(label), std::move(adj));
    case 'D':
      if (n < 4) break;
      for (int i = 0; i + 1 < n - 1; ++i) connect(adj, i, i + 1);
      connect(adj, n - 3, n - 1);
      return CartanDatum(std::string(label), std::move(adj));
    case 'E':
      if (n < 6 || n > 8) break;
      connect(adj, 0, 2);
      connect(adj, 1, 3);
      for (int i = 2; i + 1 < n; ++i) connect(adj, i, i + 1);
      return CartanDatum(std::string(label), std::move(adj));
    default:
      break;
  }
  throw std::invalid_argument("not a simply-laced Dynkin type: " +
                              std::string(label));
}

CartanDatum CartanDatum::from_adjacency(
    const std::vector<std::vector<int>>& adj) {
  return CartanDatum(classify(adj), adj);
}

std::vector<std::pair<Vertex, Vertex>> CartanDatum::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (int i = 0; i < rank(); ++i) {
    for (int j = i + 1; j < rank(); ++j) {
      if (adjacency_[i][j]) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::string> ade_labels(int max_rank) {
  std::vector<std::string> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back("A" + std::to_string(n));
  for (int n = 4; n <= max_rank; ++n) out.push_back("D" + std::to_string(n));
  for (int n = 6; n <= std::min(max_rank, 8); ++n) {
    out.push_back("E" + std::to_string(n));
  }
  return out;
}

WeightVector to_omega(const CartanDatum& datum, const WeightVector& w) {
  if (w.basis == Basis::kOmega) return w;
  const int n = datum.rank();
  WeightVector out{Basis::kOmega, std::vector<std::int64_t>(n, 0)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.coords[j] += w.coords[i] * datum.cartan(i, j);
  }
  return out;
}

bool to_alpha(const CartanDatum& datum, const WeightVector& w,
              WeightVector* out) {
  if (w.basis == Basis::kAlpha) {
    *out = w;
    return true;
  }
  // Solve c^T A = w over the rationals by exact Gaussian elimination on the
  // (symmetric) Cartan matrix.
  const int n = datum.rank();
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = datum.cartan(i, j);
    a[i][n] = w.coords[i];
  }
  // Fraction-free forward elimination; the Cartan matrix is positive definite
  // so no pivot vanishes.
  std::int64_t prev = 1;
  for (int k = 0; k < n; ++k) {
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c <= n; ++c) {
        a[r][c] = (a[k][k] * a[r][c] - a[r][k] * a[k][c]) / prev;
      }
      a[r][k] = 0;
    }
    prev = a[k][k];
  }
  // Back substitution with divisibility checks; x_k = num_k / a[k][k] after
  // clearing the already solved variables.
  std::vector<std::int64_t> x(n, 0);
  for (int k = n - 1; k >= 0; --k) {
    std::int64_t rhs = a[k][n];
    for (int c = k + 1; c < n; ++c) rhs -= a[k][c] * x[c];
    if (rhs % a[k][k] != 0) return false;
    x[k] = rhs / a[k][k];
  }
  *out = WeightVector{Basis::kAlpha, std::move(x)};
  return true;
}

std::int64_t pairing(const CartanDatum& datum, const WeightVector& w,
                     Vertex i) {
  if (w.basis == Basis::kOmega) return w.coords[i];
  std::int64_t s = 0;
  for (int j = 0; j < datum.rank(); ++j) s += w.coords[j] * datum.cartan(j, i);
  return s;
}

WeightVector simple_reflection(const CartanDatum& datum, Vertex i,
                               const WeightVector& w) {
  if (i < 0 || i >= datum.rank()) {
    throw std::out_of_range("simple_reflection: vertex out of range");
  }
  const std::int64_t c = pairing(datum, w, i);
  WeightVector out = w;
  if (w.basis == Basis::kAlpha) {
    out.coords[i] -= c;
  } else {
    for (int j = 0; j < datum.rank(); ++j) out.coords[j] -= c * datum.cartan(i, j);
  }
  return out;
}

bool dominance_leq(const CartanDatum& datum, const WeightVector& lambda,
                   const WeightVector& mu) {
  WeightVector a = to_omega(datum, lambda);
  WeightVector b = to_omega(datum, mu);
  WeightVector diff{Basis::kOmega, b.coords};
  for (int i = 0; i < datum.rank(); ++i) diff.coords[i] -= a.coords[i];
  WeightVector alpha;
  if (!to_alpha(datum, diff, &alpha)) return false;
  return std::all_of(alpha.coords.begin(), alpha.coords.end(),
                     [](std::int64_t c) { return c >= 0; });
}

Root reflect_root(const CartanDatum& datum, Vertex i, const Root& root) {
  int c = 0;
  for (int j = 0; j < datum.rank(); ++j) c += root[j] * datum.cartan(j, i);
  Root out = root;
  out[i] -= c;
  return out;
}

int height(const Root& root) {
  return std::accumulate(root.begin(), root.end(), 0);
}

bool is_nonnegative(const Root& root) {
  return std::all_of(root.begin(), root.end(), [](int c) { return c >= 0; });
}

std::string root_to_string(const Root& root) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < root.size(); ++i) {
    if (i) os << ',';
    os << root[i];
  }
  os << ')';
  return os.str();
}

RootSystem::RootSystem(CartanDatum datum) : datum_(std::move(datum)) {
  const int n = datum_.rank();

  // Breadth-first closure of the simple roots under all simple reflections.
  std::set<Root> all;
  std::deque<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    if (all.insert(r).second) queue.push_back(r);
  }
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Root s = reflect_root(datum_, i, r);
      if (all.insert(s).second) queue.push_back(std::move(s));
    }
  }
  for (const auto& r : all) {
    if (is_nonnegative(r)) positive_.push_back(r);
  }
  // std::set iterates lexicographically already.
  const int npos = num_positive();
  if (static_cast<int>(all.size()) != 2 * npos) {
    throw std::logic_error("root closure is not symmetric under negation");
  }
  for (int k = 0; k < npos; ++k) {
    index_[positive_[k]] = k;
    Root neg = positive_[k];
    for (auto& c : neg) c = -c;
    index_[neg] = npos + k;
  }
  simple_index_.resize(n);
  for (int i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    simple_index_[i] = index_.at(r);
  }

  reflections_.assign(n, Perm(2 * npos));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < 2 * npos; ++k) {
      reflections_[i][k] = index_.at(reflect_root(datum_, i, root_vector(k)));
    }
  }

  // w_0: extend on the right by any s_i that increases the length.
  Perm w = identity();
  for (;;) {
    int next = -1;
    for (int i = 0; i < n; ++i) {
      if (is_positive_index(w[simple_index_[i]])) {
        next = i;
        break;
      }
    }
    if (next < 0) break;
    w0_word_.push_back(next);
    w = compose(w, reflections_[next]);
  }
  w0_ = w;

  Perm coxeter = identity();
  for (int i = 0; i < n; ++i) coxeter = compose(coxeter, reflections_[i]);
  coxeter_number_ = order(coxeter);

  star_.resize(n);
  for (int i = 0; i < n; ++i) {
    const int image = negate_index(w0_[simple_index_[i]]);
    int found = -1;
    for (int j = 0; j < n; ++j) {
      if (simple_index_[j] == image) found = j;
    }
    if (found < 0) throw std::logic_error("-w0 does not permute simple roots");
    star_[i] = found;
  }
}

const Root& RootSystem::root(int index) const {
  if (index < 0 || index >= num_positive()) {
    throw std::out_of_range("root(): index is not a positive root");
  }
  return positive_[index];
}

Root RootSystem::root_vector(int index) const {
  const int npos = num_positive();
  if (index < npos) return positive_.at(index);
  Root r = positive_.at(index - npos);
  for (auto& c : r) c = -c;
  return r;
}

int RootSystem::index_of(const Root& root) const {
  auto it = index_.find(root);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::positive_index(const Root& root) const {
  int k = index_of(root);
  return (k >= 0 && k < num_positive()) ? k : -1;
}

int RootSystem::negate_index(int index) const {
  const int npos = num_positive();
  return index < npos ? index + npos : index - npos;
}

RootSystem::Perm RootSystem::identity() const {
  Perm p(2 * num_positive());
  std::iota(p.begin(), p.end(), 0);
  return p;
}

RootSystem::Perm RootSystem::compose(const Perm& a, const Perm& b) const {
  Perm out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[b[k]];
  return out;
}

RootSystem::Perm RootSystem::inverse(const Perm& a) const {
  Perm out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[a[k]] = static_cast<int>(k);
  return out;
}

RootSystem::Perm RootSystem::element(const WeylWord& word) const {
  Perm w = identity();
  for (Vertex i : word) {
    if (i < 0 || i >= rank()) throw std::out_of_range("Weyl word letter");
    w = compose(w, reflections_[i]);
  }
  return w;
}

int RootSystem::inversions(const Perm& w) const {
  int count = 0;
  for (int k = 0; k < num_positive(); ++k) {
    if (!is_positive_index(w[k])) ++count;
  }
  return count;
}

bool RootSystem::is_reduced(const WeylWord& word) const {
  return inversions(element(word)) == static_cast<int>(word.size());
}

int RootSystem::order(const Perm& w) const {
  const Perm id = identity();
  Perm p = w;
  int k = 1;
  while (p != id) {
    p = compose(w, p);
    ++k;
  }
  return k;
}

WeylWord RootSystem::longest_element() const { return w0_word_; }

}  // namespace quivkit
