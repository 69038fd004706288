#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "quivkit/arq.hpp"
#include "quivkit/klr.hpp"
#include "quivkit/lweight.hpp"
#include "quivkit/reflect.hpp"
#include "quivkit/repmod.hpp"

namespace quivkit {

using Json = nlohmann::ordered_json;

// "1,0,-2" -> {1, 0, -2}. Throws std::invalid_argument.
std::vector<int> parse_int_list(std::string_view text);

// "i,p,c;i,p,c" with 1-based i; a missing c means 1.
LWeight parse_lweight(std::string_view text);

Json weight_json(const WeightVector& w);
// Sorted [i, p, c] triples, 1-based i.
Json lweight_json(const LWeight& lambda);
Json lroots_json(const LRootCombination& nu);
// Sorted [[alpha coords], mult] pairs.
Json kp_json(const RootSystem& roots, const KostantPartition& m);
std::string kp_string(const RootSystem& roots, const KostantPartition& m);

// Type, orientation, height, Gamma_Q and the phi table.
Json quiver_json(const ARQuiver& arq);
// Gamma_Q with (i, p) and dimension-vector labels.
std::string gamma_q_dot(const ARQuiver& arq);

// A Hasse diagram with the given node labels and cover pairs.
std::string hasse_dot(const std::string& name, const std::vector<std::string>& labels,
                      const std::vector<std::pair<int, int>>& covers);

Json klr_json(const KlrAlgebra& algebra, const KlrElement& u);
Json f_compat_json(const RootSystem& roots, const FCompatReport& report);

}  // namespace quivkit
