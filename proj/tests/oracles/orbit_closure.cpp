#include "orbit_closure.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace quivkit::oracle {
namespace {

struct Entry {
  Arrow arrow;
  int row, col;
};

}  // namespace

OrbitClosureResult orbit_closure_check(const HomTable& table, const Root& beta) {
  const Quiver& q = table.quiver();
  const RootSystem& roots = table.roots();
  const auto kp = enumerate_kp(roots, beta);
  std::map<std::vector<int>, int> class_of;
  for (std::size_t k = 0; k < kp.size(); ++k) class_of[table.hom_vector(kp[k])] = static_cast<int>(k);

  std::vector<Entry> entries;
  for (auto a : q.arrows()) {
    for (int r = 0; r < beta[a.second]; ++r) {
      for (int c = 0; c < beta[a.first]; ++c) entries.push_back({a, r, c});
    }
  }
  const int n = static_cast<int>(entries.size());
  if (n > 8) throw std::invalid_argument("orbit_closure_check: E_beta too large");

  // Classify every grid point by its hom vector against the indecomposables.
  const std::vector<int> values{-1, 0, 1, 2};
  long total = 1;
  for (int k = 0; k < n; ++k) total *= static_cast<long>(values.size());
  std::vector<int> point_class(total);
  std::vector<int> digits(n);
  auto decode = [&](long code) {
    for (int k = 0; k < n; ++k) {
      digits[k] = static_cast<int>(code % 4);
      code /= 4;
    }
  };
  OrbitClosureResult out;
  out.partitions = static_cast<int>(kp.size());
  out.grid_points = total;
  std::set<int> hit;
  for (long code = 0; code < total; ++code) {
    decode(code);
    QuiverRep rep(q, beta);
    std::map<Arrow, Matrix> maps;
    for (auto a : q.arrows()) maps.emplace(a, Matrix(beta[a.second], beta[a.first]));
    for (int k = 0; k < n; ++k) {
      maps.at(entries[k].arrow)(entries[k].row, entries[k].col) = values[digits[k]];
    }
    for (auto& [a, m] : maps) rep.set_map(a, m);
    std::vector<int> hv;
    for (int g = 0; g < roots.num_positive(); ++g) hv.push_back(hom_dim(q, table.module(g), rep));
    auto it = class_of.find(hv);
    if (it == class_of.end()) throw std::logic_error("grid point with no matching partition");
    point_class[code] = it->second;
    hit.insert(it->second);
  }
  out.orbits_hit = static_cast<int>(hit.size());

  // Sign patterns of the exponents over all weight choices in {0, .., ht-1}.
  std::vector<std::pair<Vertex, int>> basis;
  for (Vertex v = 0; v < q.rank(); ++v) {
    for (int r = 0; r < beta[v]; ++r) basis.emplace_back(v, r);
  }
  const int levels = std::max<int>(1, static_cast<int>(basis.size()));
  std::set<std::vector<int>> patterns;
  std::map<std::pair<Vertex, int>, int> weight;
  std::vector<int> w(basis.size(), 0);
  for (;;) {
    for (std::size_t b = 0; b < basis.size(); ++b) weight[basis[b]] = w[b];
    std::vector<int> sign(n);
    for (int k = 0; k < n; ++k) {
      const auto& e = entries[k];
      const int x = weight[{e.arrow.second, e.row}] - weight[{e.arrow.first, e.col}];
      sign[k] = (x > 0) - (x < 0);
    }
    patterns.insert(sign);
    std::size_t b = 0;
    while (b < w.size() && ++w[b] == levels) w[b++] = 0;
    if (b == w.size()) break;
  }

  const std::size_t m = kp.size();
  std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a) reach[a][a] = true;
  for (long code = 0; code < total; ++code) {
    decode(code);
    for (const auto& sign : patterns) {
      long limit = 0, scale = 1;
      bool exists = true;
      for (int k = 0; k < n; ++k) {
        const bool nonzero = values[digits[k]] != 0;
        if (nonzero && sign[k] < 0) {
          exists = false;
          break;
        }
        const int d = (nonzero && sign[k] > 0) ? 1 : digits[k];  // 1 encodes the value 0
        limit += d * scale;
        scale *= 4;
      }
      if (!exists) continue;
      const int from = point_class[code], to = point_class[limit];
      if (!reach[from][to]) {
        reach[from][to] = true;
        ++out.edges;
      }
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (reach[a][k] && reach[k][b]) reach[a][b] = true;
      }
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    if (!hit.count(static_cast<int>(a))) out.mismatches.push_back("orbit " + std::to_string(a) + " has no grid point");
    for (std::size_t b = 0; b < m; ++b) {
      if (reach[a][b] != table.kp_leq(kp[a], kp[b])) {
        out.mismatches.push_back("pair (" + std::to_string(a) + "," + std::to_string(b) + "): closure " +
                                 (reach[a][b] ? "yes" : "no") + ", hom order " +
                                 (reach[a][b] ? "no" : "yes"));
      }
    }
  }
  out.agree = out.mismatches.empty();
  return out;
}

}  // namespace quivkit::oracle
