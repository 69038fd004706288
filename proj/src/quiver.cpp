#include "quivkit/quiver.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace quivkit {

Quiver::Quiver(CartanDatum datum, std::vector<Arrow> arrows)
    : datum_(std::move(datum)), arrows_(std::move(arrows)) {
  std::sort(arrows_.begin(), arrows_.end());
  const int n = datum_.rank();
  dir_.assign(n, std::vector<int>(n, 0));
  for (auto [s, t] : arrows_) dir_[s][t] = 1;
}

Quiver Quiver::standard(const CartanDatum& datum) {
  return Quiver(datum, datum.edges());
}

Quiver Quiver::from_arrows(const CartanDatum& datum, std::vector<Arrow> arrows) {
  const int n = datum.rank();
  std::set<std::pair<Vertex, Vertex>> covered;
  for (auto [s, t] : arrows) {
    if (s < 0 || t < 0 || s >= n || t >= n) {
      throw std::invalid_argument("arrow endpoint out of range");
    }
    if (!datum.adjacent(s, t)) {
      throw std::invalid_argument("arrow between non-adjacent vertices");
    }
    if (!covered.insert({std::min(s, t), std::max(s, t)}).second) {
      throw std::invalid_argument("edge oriented more than once");
    }
  }
  if (covered.size() != datum.edges().size()) {
    throw std::invalid_argument("orientation leaves an edge without an arrow");
  }
  return Quiver(datum, std::move(arrows));
}

std::vector<Quiver> Quiver::all_orientations(const CartanDatum& datum) {
  const auto edges = datum.edges();
  std::vector<Quiver> out;
  const unsigned total = 1u << edges.size();
  for (unsigned mask = 0; mask < total; ++mask) {
    std::vector<Arrow> arrows;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [a, b] = edges[e];
      if (mask & (1u << e)) {
        arrows.emplace_back(b, a);
      } else {
        arrows.emplace_back(a, b);
      }
    }
    out.push_back(Quiver(datum, std::move(arrows)));
  }
  return out;
}

bool Quiver::is_source(Vertex i) const {
  for (int j = 0; j < rank(); ++j) {
    if (dir_[j][i]) return false;
  }
  return true;
}

bool Quiver::is_sink(Vertex i) const {
  for (int j = 0; j < rank(); ++j) {
    if (dir_[i][j]) return false;
  }
  return true;
}

std::vector<Vertex> Quiver::sources() const {
  std::vector<Vertex> out;
  for (int i = 0; i < rank(); ++i) {
    if (is_source(i)) out.push_back(i);
  }
  return out;
}

std::vector<Vertex> Quiver::sinks() const {
  std::vector<Vertex> out;
  for (int i = 0; i < rank(); ++i) {
    if (is_sink(i)) out.push_back(i);
  }
  return out;
}

Quiver Quiver::reflected(Vertex i) const {
  if (i < 0 || i >= rank()) throw std::out_of_range("reflect: vertex");
  std::vector<Arrow> arrows;
  for (auto [s, t] : arrows_) {
    if (s == i || t == i) {
      arrows.emplace_back(t, s);
    } else {
      arrows.emplace_back(s, t);
    }
  }
  return Quiver(datum_, std::move(arrows));
}

std::vector<Vertex> Quiver::adapted_numbering() const {
  const int n = rank();
  std::vector<int> indegree(n, 0);
  for (auto [s, t] : arrows_) ++indegree[t];
  std::set<Vertex> ready;
  for (int i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.insert(i);
  }
  std::vector<Vertex> order;
  while (!ready.empty()) {
    Vertex v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (int w = 0; w < n; ++w) {
      if (dir_[v][w] && --indegree[w] == 0) ready.insert(w);
    }
  }
  return order;
}

HeightFunction Quiver::height_function() const {
  const int n = rank();
  HeightFunction xi(n, 0);
  std::vector<bool> seen(n, false);
  std::deque<Vertex> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : datum_.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      xi[w] = dir_[v][w] ? xi[v] - 1 : xi[v] + 1;
      queue.push_back(w);
    }
  }
  const int lo = *std::min_element(xi.begin(), xi.end());
  for (auto& x : xi) x -= lo;
  return xi;
}

bool Quiver::is_height_function(const HeightFunction& xi) const {
  if (static_cast<int>(xi.size()) != rank()) return false;
  for (auto [s, t] : arrows_) {
    if (xi[t] != xi[s] - 1) return false;
  }
  return true;
}

bool Quiver::has_path(Vertex from, Vertex to) const {
  std::vector<bool> seen(rank(), false);
  std::deque<Vertex> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (v == to) return true;
    for (Vertex w = 0; w < rank(); ++w) {
      if (dir_[v][w] && !seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return false;
}

WeylWord coxeter_element(const Quiver& quiver,
                         const std::vector<Vertex>& numbering) {
  for (std::size_t a = 0; a < numbering.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (quiver.has_arrow(numbering[a], numbering[b])) {
        throw std::invalid_argument("numbering is not adapted to the quiver");
      }
    }
  }
  return numbering;
}

WeylWord coxeter_element(const Quiver& quiver) {
  return quiver.adapted_numbering();
}

AdaptedWord adapted_w0(const Quiver& quiver, const RootSystem& roots) {
  const int total = roots.num_positive();
  AdaptedWord out;
  Quiver current = quiver;
  RootSystem::Perm prefix = roots.identity();
  std::vector<bool> used(total, false);
  for (int k = 0; k < total; ++k) {
    // A source whose gamma is still positive keeps the word reduced.
    Vertex i = -1;
    int gamma = -1;
    for (Vertex s : current.sources()) {
      gamma = prefix[roots.simple_root_index(s)];
      if (roots.is_positive_index(gamma)) {
        i = s;
        break;
      }
    }
    if (i < 0 || used[gamma]) {
      throw std::logic_error("adapted_w0: gamma sequence is not a permutation");
    }
    used[gamma] = true;
    out.word.push_back(i);
    out.gammas.push_back(gamma);
    prefix = roots.compose(prefix, roots.simple_reflection_perm(i));
    current = current.reflected(i);
  }
  return out;
}

bool is_adapted(const Quiver& quiver, const WeylWord& word) {
  Quiver current = quiver;
  for (Vertex i : word) {
    if (i < 0 || i >= quiver.rank() || !current.is_source(i)) return false;
    current = current.reflected(i);
  }
  return true;
}

Quiver parse_orientation(const CartanDatum& datum, const std::string& spec) {
  std::vector<Arrow> arrows;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    const auto gt = item.find('>');
    const auto lt = item.find('<');
    std::size_t pos = gt != std::string::npos ? gt : lt;
    if (pos == std::string::npos || pos == 0 || pos + 1 >= item.size()) {
      throw std::invalid_argument("bad arrow '" + item + "' (expected i>j)");
    }
    int a = 0, b = 0;
    try {
      a = std::stoi(item.substr(0, pos));
      b = std::stoi(item.substr(pos + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad arrow '" + item + "'");
    }
    if (gt == std::string::npos) std::swap(a, b);
    arrows.emplace_back(a - 1, b - 1);
  }
  return Quiver::from_arrows(datum, std::move(arrows));
}

std::string orientation_string(const Quiver& quiver) {
  std::ostringstream os;
  bool first = true;
  for (auto [s, t] : quiver.arrows()) {
    if (!first) os << ',';
    first = false;
    os << s + 1 << '>' << t + 1;
  }
  return os.str();
}

}  // namespace quivkit
