#include "quivkit/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace quivkit {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) throw std::invalid_argument("empty entry in list '" + std::string(text) + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) {
      throw std::invalid_argument("not an integer: '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

LWeight parse_lweight(std::string_view text) {
  LWeight out;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto v = parse_int_list(item);
    if (v.size() != 2 && v.size() != 3) {
      throw std::invalid_argument("l-weight entry '" + item + "' is not i,p[,c]");
    }
    out.add({v[0] - 1, v[1]}, v.size() == 3 ? v[2] : 1);
  }
  return out;
}

Json weight_json(const WeightVector& w) {
  return Json{{"basis", w.basis == Basis::kAlpha ? "alpha" : "omega"},
              {"coords", w.coords}};
}

Json lweight_json(const LWeight& lambda) {
  Json out = Json::array();
  for (const auto& [v, c] : lambda.coeffs()) out.push_back({v.i + 1, v.p, c});
  return out;
}

Json lroots_json(const LRootCombination& nu) {
  Json out = Json::array();
  for (const auto& [v, c] : nu.coeffs()) out.push_back({v.i + 1, v.p, c});
  return out;
}

Json kp_json(const RootSystem& roots, const KostantPartition& m) {
  std::vector<std::pair<Root, int>> parts;
  for (std::size_t a = 0; a < m.mult.size(); ++a) {
    if (m.mult[a] != 0) parts.emplace_back(roots.root(static_cast<int>(a)), m.mult[a]);
  }
  std::sort(parts.begin(), parts.end());
  Json out = Json::array();
  for (const auto& [r, c] : parts) out.push_back({r, c});
  return out;
}

std::string kp_string(const RootSystem& roots, const KostantPartition& m) {
  std::string s = "{";
  bool first = true;
  for (std::size_t a = 0; a < m.mult.size(); ++a) {
    if (m.mult[a] == 0) continue;
    if (!first) s += ", ";
    first = false;
    s += root_to_string(roots.root(static_cast<int>(a)));
    if (m.mult[a] > 1) s += "^" + std::to_string(m.mult[a]);
  }
  return s + "}";
}

namespace {

std::string vertex_id(ARVertex v) {
  return std::to_string(v.i + 1) + "," + std::to_string(v.p);
}

}  // namespace

Json quiver_json(const ARQuiver& arq) {
  const Quiver& q = arq.quiver();
  const RootSystem& roots = arq.roots();
  Json out;
  out["type"] = q.datum().label();
  out["rank"] = q.rank();
  out["orientation"] = orientation_string(q);
  Json arrows = Json::array();
  for (auto [s, t] : q.arrows()) arrows.push_back({s + 1, t + 1});
  out["arrows"] = arrows;
  out["height"] = arq.height();
  out["coxeter_number"] = roots.coxeter_number();
  Json phi = Json::array();
  for (int a = 0; a < roots.num_positive(); ++a) {
    const ARVertex v = arq.phi(a);
    phi.push_back({{"root", roots.root(a)}, {"i", v.i + 1}, {"p", v.p}});
  }
  out["phi"] = phi;
  Json verts = Json::array();
  for (const auto& v : arq.vertices()) {
    verts.push_back({{"i", v.i + 1}, {"p", v.p}, {"dim", roots.root(arq.root_at(v))}});
  }
  Json gq_arrows = Json::array();
  for (const auto& [v, w] : arq.arrows()) {
    gq_arrows.push_back({{v.i + 1, v.p}, {w.i + 1, w.p}});
  }
  out["gamma_q"] = {{"vertices", verts}, {"arrows", gq_arrows}};
  Json jq = Json::array();
  for (const auto& v : arq.j_hat_q()) jq.push_back({v.i + 1, v.p});
  out["j_hat_q"] = jq;
  return out;
}

std::string gamma_q_dot(const ARQuiver& arq) {
  const RootSystem& roots = arq.roots();
  std::ostringstream os;
  os << "digraph gamma_q {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (const auto& v : arq.vertices()) {
    os << "  \"" << vertex_id(v) << "\" [label=\"(" << vertex_id(v) << ")\\n"
       << root_to_string(roots.root(arq.root_at(v))) << "\"];\n";
  }
  for (const auto& [v, w] : arq.arrows()) {
    os << "  \"" << vertex_id(v) << "\" -> \"" << vertex_id(w) << "\";\n";
  }
  os << "}\n";
  return os.str();
}

std::string hasse_dot(const std::string& name, const std::vector<std::string>& labels,
                      const std::vector<std::pair<int, int>>& covers) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=plaintext];\n";
  for (std::size_t k = 0; k < labels.size(); ++k) {
    os << "  n" << k << " [label=\"" << labels[k] << "\"];\n";
  }
  for (auto [a, b] : covers) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

Json klr_json(const KlrAlgebra& algebra, const KlrElement& u) {
  Json out;
  out["beta"] = u.beta();
  Json terms = Json::array();
  for (const auto& [t, c] : u.terms()) {
    std::vector<int> idem, word;
    for (Vertex v : t.idem) idem.push_back(v + 1);
    for (int k : canonical_word(t.perm)) word.push_back(k + 1);
    terms.push_back({{"coeff", c.get_str()}, {"x", t.mono}, {"tau", word}, {"e", idem}});
  }
  out["terms"] = terms;
  const auto deg = algebra.degree(u);
  out["degree"] = deg ? Json(*deg) : Json(nullptr);
  out["text"] = klr_to_string(u);
  return out;
}

Json f_compat_json(const RootSystem& roots, const FCompatReport& report) {
  Json out;
  out["beta"] = report.beta;
  out["beta_reflected"] = report.beta_reflected;
  out["vertex"] = report.i + 1;
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"m", kp_json(roots, e.m)},
                       {"s_i_m", kp_json(roots, e.reflected)},
                       {"f", lweight_json(e.lhs)},
                       {"f_reflected", lweight_json(e.rhs)},
                       {"pass", e.pass}});
  }
  out["entries"] = entries;
  out["pass"] = report.all_pass();
  return out;
}

}  // namespace quivkit
