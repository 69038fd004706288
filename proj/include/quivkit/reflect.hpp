#pragma once

#include <vector>

#include "quivkit/arq.hpp"
#include "quivkit/lweight.hpp"
#include "quivkit/quiver.hpp"
#include "quivkit/repmod.hpp"

namespace quivkit {

// xi'_i = xi_i + 2 at a sink i, xi'_j = xi_j otherwise. The result is a height
// function for quiver.reflected(i). Throws std::invalid_argument if i is not a
// sink.
HeightFunction reflected_height(const Quiver& quiver, const HeightFunction& xi,
                                Vertex i);

// (s_i m)_{s_i alpha} = m_alpha. Throws std::invalid_argument when m uses the
// simple root alpha_i.
KostantPartition s_i_on_kp(const RootSystem& roots, const KostantPartition& m,
                           Vertex i);

enum class Side { kSink, kSource };

struct TruncatedKp {
  std::vector<KostantPartition> partitions;  // sorted
  bool lower_set = false;
};

// The partitions of beta not using alpha_i, for a sink (or source) i of
// table.quiver(), together with the lower-set check against kp_leq.
// Throws std::invalid_argument if i is not on the requested side.
TruncatedKp truncated_kp(const HomTable& table, const Root& beta, Vertex i,
                         Side side);

struct FCompatEntry {
  KostantPartition m;
  KostantPartition reflected;
  LWeight lhs;  // f(m) for (Q, xi)
  LWeight rhs;  // f'(s_i m) for (s_i Q, xi')
  bool pass = false;
};

struct FCompatReport {
  Root beta;
  Root beta_reflected;
  Vertex i = 0;
  std::vector<FCompatEntry> entries;
  bool all_pass() const;
};

// f(m) == f'(s_i m) for every m in the truncated set of beta. Throws
// std::invalid_argument unless i is a sink of arq.quiver() and s_i beta is
// nonnegative.
FCompatReport check_f_compat(const ARQuiver& arq, const Root& beta, Vertex i);

// phi(alpha) == phi'(s_i alpha) for every positive alpha other than alpha_i.
bool phi_compat(const ARQuiver& arq, Vertex i);

}  // namespace quivkit
