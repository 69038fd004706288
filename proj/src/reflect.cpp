#include "quivkit/reflect.hpp"

#include <algorithm>
#include <stdexcept>

namespace quivkit {

HeightFunction reflected_height(const Quiver& quiver, const HeightFunction& xi,
                                Vertex i) {
  if (i < 0 || i >= quiver.rank() || !quiver.is_sink(i)) {
    throw std::invalid_argument("reflected_height: vertex is not a sink");
  }
  HeightFunction out = xi;
  out[i] += 2;
  return out;
}

KostantPartition s_i_on_kp(const RootSystem& roots, const KostantPartition& m,
                           Vertex i) {
  const int simple = roots.simple_root_index(i);
  if (m.mult.at(simple) != 0) {
    throw std::invalid_argument("s_i_on_kp: partition uses alpha_i");
  }
  const CartanDatum& datum = roots.datum();
  KostantPartition out{std::vector<int>(m.mult.size(), 0),
                       reflect_root(datum, i, m.beta)};
  for (std::size_t a = 0; a < m.mult.size(); ++a) {
    if (m.mult[a] == 0) continue;
    const int b = roots.positive_index(
        reflect_root(datum, i, roots.root(static_cast<int>(a))));
    if (b < 0) throw std::logic_error("s_i_on_kp: s_i alpha left R+");
    out.mult[b] = m.mult[a];
  }
  return out;
}

TruncatedKp truncated_kp(const HomTable& table, const Root& beta, Vertex i,
                         Side side) {
  const Quiver& q = table.quiver();
  const bool ok = side == Side::kSink ? q.is_sink(i) : q.is_source(i);
  if (!ok) throw std::invalid_argument("truncated_kp: vertex on the wrong side");
  const int simple = table.roots().simple_root_index(i);
  const auto all = enumerate_kp(table.roots(), beta);
  TruncatedKp out;
  for (const auto& m : all) {
    if (m.mult[simple] == 0) out.partitions.push_back(m);
  }
  out.lower_set = true;
  for (const auto& upper : out.partitions) {
    for (const auto& m : all) {
      if (m.mult[simple] != 0 && table.kp_leq(m, upper)) out.lower_set = false;
    }
  }
  return out;
}

bool FCompatReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const FCompatEntry& e) { return e.pass; });
}

FCompatReport check_f_compat(const ARQuiver& arq, const Root& beta, Vertex i) {
  const Quiver& q = arq.quiver();
  const RootSystem& roots = arq.roots();
  const HeightFunction xi2 = reflected_height(q, arq.height(), i);
  const Root beta2 = reflect_root(q.datum(), i, beta);
  if (!is_nonnegative(beta2)) {
    throw std::invalid_argument("check_f_compat: s_i beta is not in Q+");
  }
  const ARQuiver arq2(q.reflected(i), roots, xi2);

  FCompatReport report{beta, beta2, i, {}};
  const int simple = roots.simple_root_index(i);
  for (const auto& m : enumerate_kp(roots, beta)) {
    if (m.mult[simple] != 0) continue;
    FCompatEntry e;
    e.m = m;
    e.reflected = s_i_on_kp(roots, m, i);
    e.lhs = f_bijection(arq, m);
    e.rhs = f_bijection(arq2, e.reflected);
    e.pass = e.lhs == e.rhs;
    report.entries.push_back(std::move(e));
  }
  return report;
}

bool phi_compat(const ARQuiver& arq, Vertex i) {
  const Quiver& q = arq.quiver();
  const RootSystem& roots = arq.roots();
  const ARQuiver arq2(q.reflected(i), roots, reflected_height(q, arq.height(), i));
  for (int a = 0; a < roots.num_positive(); ++a) {
    if (a == roots.simple_root_index(i)) continue;
    const int b = roots.positive_index(reflect_root(q.datum(), i, roots.root(a)));
    if (b < 0 || arq.phi(a) != arq2.phi(b)) return false;
  }
  return true;
}

}  // namespace quivkit
