#include "quivkit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "quivkit/arq.hpp"
#include "quivkit/klr.hpp"
#include "quivkit/lweight.hpp"
#include "quivkit/reflect.hpp"
#include "quivkit/repmod.hpp"

namespace quivkit {

bool SuiteReport::pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& f) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t k = 0; k < n; ++k) f(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < n; k = next++) f(k);
    });
  }
}

std::vector<Root> betas_up_to(int rank, int max_height) {
  std::vector<Root> out;
  Root cur(rank, 0);
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v == rank) {
      if (left < max_height) out.push_back(cur);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      cur[v] = c;
      rec(v + 1, left - c);
    }
    cur[v] = 0;
  };
  rec(0, max_height);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Quiver> suite_quivers(const VerifyOptions& o, int default_max_rank,
                                  int default_all_max_rank) {
  std::vector<std::string> types = o.types;
  const int max_rank = o.max_rank >= 0 ? o.max_rank : default_max_rank;
  const int all_rank = o.all_orientations
                           ? max_rank
                           : (o.all_orientations_max_rank >= 0 ? o.all_orientations_max_rank
                                                               : default_all_max_rank);
  if (o.orientation && types.size() != 1) {
    throw std::invalid_argument("--orientation needs exactly one --type");
  }
  if (types.empty()) types = ade_labels(max_rank);
  std::vector<Quiver> out;
  for (const auto& label : types) {
    const CartanDatum datum = CartanDatum::from_label(label);
    if (o.orientation) {
      out.push_back(parse_orientation(datum, *o.orientation));
    } else if (datum.rank() <= all_rank) {
      for (auto& q : Quiver::all_orientations(datum)) out.push_back(std::move(q));
    } else {
      out.push_back(Quiver::standard(datum));
    }
  }
  if (o.beta) {
    const int n = static_cast<int>(o.beta->size());
    std::erase_if(out, [n](const Quiver& q) { return q.rank() != n; });
    if (out.empty()) throw std::invalid_argument("no requested type has rank " + std::to_string(n));
  }
  return out;
}

namespace {

std::string quiver_name(const Quiver& q) {
  return q.datum().label() + " [" + orientation_string(q) + "]";
}

std::vector<Root> suite_betas(const VerifyOptions& o, int rank, int default_height) {
  if (o.beta) {
    if (static_cast<int>(o.beta->size()) != rank) {
      throw std::invalid_argument("--beta has the wrong length for this type");
    }
    return {*o.beta};
  }
  return betas_up_to(rank, o.max_height >= 0 ? o.max_height : default_height);
}

struct Ctx {
  std::vector<std::string> errors;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok && errors.size() < 5) errors.push_back(what);
    if (!ok && errors.size() == 5) errors.push_back("...");
  }
  CaseResult result(std::string name) const {
    CaseResult r{std::move(name), errors.empty(), ""};
    std::vector<std::string> parts = errors.empty() ? notes : errors;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k) r.detail += "; ";
      r.detail += parts[k];
    }
    return r;
  }
};

std::string vstr(ARVertex v) {
  return "(" + std::to_string(v.i + 1) + "," + std::to_string(v.p) + ")";
}

// ---- Gamma_Q suites -------------------------------------------------------

CaseResult phi_case(const Quiver& q) {
  Ctx ctx;
  const RootSystem roots(q.datum());
  const ARQuiver arq(q, roots, q.height_function());
  const int n = roots.num_positive();
  ctx.require(static_cast<int>(arq.vertices().size()) == n, "vertex count != |R+|");
  std::set<ARVertex> seen;
  for (int a = 0; a < n; ++a) {
    const ARVertex v = arq.phi(a);
    ctx.require(arq.in_i_hat(v), "phi leaves I-hat at " + vstr(v));
    ctx.require(seen.insert(v).second, "phi not injective at " + vstr(v));
    ctx.require(arq.phi_inverse(v) == std::make_pair(a, 0),
                "phi_inverse does not round-trip at " + vstr(v));
    for (int k : {-2, -1, 1, 2}) {
      const ARVertex w = arq.phi(a, k);
      ctx.require(!arq.contains(w), "phi(alpha, k != 0) lands in Gamma_Q");
      ctx.require(arq.phi_inverse(w) == std::make_pair(a, k),
                  "phi_inverse does not round-trip off Gamma_Q at " + vstr(w));
    }
  }
  ctx.notes.push_back(std::to_string(n) + " roots");
  return ctx.result(quiver_name(q));
}

CaseResult mesh_case(const Quiver& q) {
  Ctx ctx;
  const RootSystem roots(q.datum());
  const ARQuiver arq(q, roots, q.height_function());
  const auto jq = arq.j_hat_q();
  for (const auto& v : jq) {
    Root lhs(q.rank(), 0), rhs(q.rank(), 0);
    for (int s : {-1, 1}) {
      const Root& r = roots.root(arq.root_at({v.i, v.p + s}));
      for (int j = 0; j < q.rank(); ++j) lhs[j] += r[j];
    }
    for (Vertex j : q.datum().neighbors(v.i)) {
      const int a = arq.root_at({j, v.p});
      if (a < 0) continue;
      for (int t = 0; t < q.rank(); ++t) rhs[t] += roots.root(a)[t];
    }
    ctx.require(lhs == rhs, "mesh fails at " + vstr(v));
  }
  ctx.require(static_cast<int>(jq.size()) == roots.num_positive() - q.rank(),
              "|J-hat_Q| != |R+| - n");
  ctx.notes.push_back(std::to_string(jq.size()) + " meshes");
  return ctx.result(quiver_name(q));
}

CaseResult bedard_case(const Quiver& q) {
  Ctx ctx;
  const RootSystem roots(q.datum());
  const ARQuiver arq(q, roots, q.height_function());
  const AdaptedWord aw = adapted_w0(q, roots);
  ctx.require(is_adapted(q, aw.word), "word is not adapted");
  ctx.require(roots.is_reduced(aw.word) &&
                  static_cast<int>(aw.word.size()) == roots.num_positive(),
              "word is not a reduced word for w0");
  const int n = static_cast<int>(aw.gammas.size());
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      ctx.require(!arq.has_path(arq.phi(aw.gammas[j]), arq.phi(aw.gammas[k])),
                  "path from phi(gamma_" + std::to_string(j + 1) + ") to phi(gamma_" +
                      std::to_string(k + 1) + ")");
    }
  }
  ctx.notes.push_back(std::to_string(n * (n - 1) / 2) + " pairs");
  return ctx.result(quiver_name(q));
}

CaseResult window_case(const Quiver& q) {
  Ctx ctx;
  const RootSystem roots(q.datum());
  const ARQuiver arq(q, roots, q.height_function());
  ctx.require(lrootq_window_check(arq), "lQ_Q != lP_Q cap lQ on the window");
  ctx.notes.push_back("window p in [" + std::to_string(arq.min_p()) + "," +
                      std::to_string(arq.max_p()) + "]");
  return ctx.result(quiver_name(q));
}

CaseResult deg_case(const Quiver& q) {
  Ctx ctx;
  const RootSystem roots(q.datum());
  const ARQuiver arq(q, roots, q.height_function());
  const Root zero(q.rank(), 0);
  for (const auto& v : arq.j_hat_q()) {
    const LWeight alpha = l_root(q.datum(), v.i, v.p);
    if (!in_lp_q(arq, alpha)) {
      ctx.require(false, "alpha" + vstr(v) + " leaves Gamma_Q");
      continue;
    }
    ctx.require(deg(arq, alpha) == zero, "deg alpha" + vstr(v) + " != 0");
  }
  ctx.notes.push_back(std::to_string(arq.j_hat_q().size()) + " l-roots");
  return ctx.result(quiver_name(q));
}

// ---- Kostant partitions and f ---------------------------------------------

CaseResult f_order_case(const Quiver& q, const std::vector<Root>& betas) {
  Ctx ctx;
  const RootSystem roots(q.datum());
  const ARQuiver arq(q, roots, q.height_function());
  const HomTable table(q, roots);
  const auto jq = arq.j_hat_q();
  const std::set<ARVertex> jq_set(jq.begin(), jq.end());
  long comparable = 0, converse_fail = 0, partitions = 0;
  for (const auto& beta : betas) {
    const std::string tag = " at beta=" + root_to_string(beta);
    const auto kp = enumerate_kp(roots, beta);
    const auto lp = dominant_lweights_of_degree(arq, beta);
    partitions += static_cast<long>(kp.size());
    ctx.require(kp.size() == lp.size(), "|KP| != |lP+|" + tag);
    std::vector<LWeight> images;
    for (const auto& m : kp) {
      const LWeight f = f_bijection(arq, m);
      ctx.require(deg(arq, f) == beta, "deg f(m) != beta" + tag);
      ctx.require(f_inverse(arq, f) == m, "f_inverse does not round-trip" + tag);
      images.push_back(f);
    }
    std::vector<LWeight> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    ctx.require(sorted == lp, "f(KP) != lP+" + tag);

    const std::size_t n = kp.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) leq[a][b] = table.kp_leq(kp[a], kp[b]);
    }
    std::size_t minima = 0, min_index = 0;
    for (std::size_t a = 0; a < n; ++a) {
      ctx.require(leq[a][a], "kp_leq not reflexive" + tag);
      bool is_min = true;
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b && leq[a][b] && leq[b][a]) ctx.require(false, "kp_leq not antisymmetric" + tag);
        if (!leq[a][b]) is_min = false;
        for (std::size_t c = 0; c < n && leq[a][b]; ++c) {
          if (leq[b][c] && !leq[a][c]) ctx.require(false, "kp_leq not transitive" + tag);
        }
        const auto nu = l_dominance_leq(q.datum(), images[a], images[b]);
        if (nu && a != b) {
          for (const auto& [v, c] : nu->coeffs()) {
            if (!jq_set.count(v)) ctx.require(false, "l-root support leaves J-hat_Q" + tag);
          }
          if (expand(q.datum(), *nu) != images[b] - images[a]) {
            ctx.require(false, "l-root expansion does not re-expand" + tag);
          }
          if (l_dominance_leq(q.datum(), images[b], images[a])) {
            ctx.require(false, "l-dominance not antisymmetric" + tag);
          }
        }
        if (leq[a][b]) {
          ++comparable;
          ctx.require(nu.has_value(), "f does not preserve the order" + tag);
        } else if (nu) {
          ++converse_fail;
        }
      }
      if (is_min) {
        ++minima;
        min_index = a;
      }
    }
    ctx.require(minima == 1, "kp_leq has no unique minimum" + tag);
    if (minima == 1) {
      ctx.require(table.self_ext(kp[min_index]) == 0, "minimum has self-extensions" + tag);
    }
    for (auto [a, b] : hasse_covers(leq)) {
      ctx.require(table.orbit_dim(kp[a]) > table.orbit_dim(kp[b]),
                  "orbit_dim not decreasing along a cover" + tag);
    }
  }
  ctx.notes.push_back(std::to_string(betas.size()) + " betas, " + std::to_string(partitions) +
                      " partitions, " + std::to_string(comparable) + " comparable pairs");
  ctx.notes.push_back(converse_fail == 0
                          ? "converse holds (f is an order isomorphism here)"
                          : "converse fails on " + std::to_string(converse_fail) + " pairs");
  return ctx.result(quiver_name(q));
}

CaseResult euler_case(const Quiver& q, const std::vector<Root>& betas) {
  Ctx ctx;
  const RootSystem roots(q.datum());
  const ARQuiver arq(q, roots, q.height_function());
  const HomTable table(q, roots);
  const int n = roots.num_positive();
  for (int a = 0; a < n; ++a) {
    ctx.require(table.hom(a, a) == 1, "End(M(alpha)) != k for " + root_to_string(roots.root(a)));
    for (int b = 0; b < n; ++b) {
      const int ext = ext1_dim(q, table.module(a), table.module(b));
      ctx.require(ext >= 0, "negative ext1");
      ctx.require(table.hom(a, b) - ext == euler_form(q, roots.root(a), roots.root(b)),
                  "hom - ext1 != euler form");
    }
  }
  // Almost split sequences seen through Hom(X, -).
  for (const auto& v : arq.j_hat_q()) {
    const int left = arq.root_at({v.i, v.p - 1});
    const int right = arq.root_at({v.i, v.p + 1});
    for (int x = 0; x < n; ++x) {
      int total = table.hom(x, left) + table.hom(x, right);
      for (Vertex j : q.datum().neighbors(v.i)) {
        const int mid = arq.root_at({j, v.p});
        if (mid >= 0) total -= table.hom(x, mid);
      }
      ctx.require(total == (x == right ? 1 : 0), "Hom(X, -) not exact on the mesh at " + vstr(v));
    }
  }
  for (const auto& beta : betas) {
    const auto kp = enumerate_kp(roots, beta);
    int minima = 0;
    for (const auto& m : kp) {
      bool is_min = true;
      for (const auto& other : kp) {
        if (!table.kp_leq(m, other)) {
          is_min = false;
          break;
        }
      }
      if (!is_min) continue;
      ++minima;
      const QuiverRep rep = direct_sum(q, roots, m);
      ctx.require(ext1_dim(q, rep, rep) == 0,
                  "the minimum of KP(" + root_to_string(beta) + ") has self-extensions");
      ctx.require(hom_dim(q, rep, rep) == table.hom(m, m), "hom not additive");
    }
    ctx.require(minima == 1, "no unique minimum in KP(" + root_to_string(beta) + ")");
  }
  ctx.notes.push_back(std::to_string(n * n) + " pairs, " + std::to_string(betas.size()) + " betas");
  return ctx.result(quiver_name(q));
}

CaseResult reflect_case(const Quiver& q, const std::vector<Root>& betas) {
  Ctx ctx;
  const RootSystem roots(q.datum());
  const ARQuiver arq(q, roots, q.height_function());
  const HomTable table(q, roots);
  long checked = 0;
  for (Vertex i : q.sinks()) {
    const std::string at = " at sink " + std::to_string(i + 1);
    ctx.require(phi_compat(arq, i), "phi(alpha) != phi'(s_i alpha)" + at);
    const Quiver q2 = q.reflected(i);
    const HomTable table2(q2, roots);
    for (const auto& beta : betas) {
      const Root beta2 = reflect_root(q.datum(), i, beta);
      const std::string tag = at + ", beta=" + root_to_string(beta);
      const TruncatedKp low = truncated_kp(table, beta, i, Side::kSink);
      ctx.require(low.lower_set, "iKP(beta) is not a lower set" + tag);
      if (!is_nonnegative(beta2)) {
        ctx.require(low.partitions.empty(), "iKP nonempty with s_i beta outside Q+" + tag);
        continue;
      }
      const FCompatReport report = check_f_compat(arq, beta, i);
      ctx.require(report.all_pass(), "f(m) != f'(s_i m)" + tag);
      checked += static_cast<long>(report.entries.size());
      const TruncatedKp up = truncated_kp(table2, beta2, i, Side::kSource);
      ctx.require(up.lower_set, "iKP(beta') is not a lower set" + tag);
      std::vector<KostantPartition> images;
      for (const auto& m : low.partitions) images.push_back(s_i_on_kp(roots, m, i));
      std::vector<KostantPartition> sorted = images;
      std::sort(sorted.begin(), sorted.end());
      ctx.require(sorted == up.partitions, "s_i does not biject the truncated sets" + tag);
      for (std::size_t a = 0; a < images.size(); ++a) {
        for (std::size_t b = 0; b < images.size(); ++b) {
          if (table.kp_leq(low.partitions[a], low.partitions[b]) !=
              table2.kp_leq(images[a], images[b])) {
            ctx.require(false, "s_i is not an order isomorphism" + tag);
          }
        }
      }
    }
  }
  ctx.notes.push_back(std::to_string(checked) + " partitions compared");
  return ctx.result(quiver_name(q));
}

// ---- KLR ------------------------------------------------------------------

std::string beta_name(const Quiver& q, const Root& beta) {
  return q.datum().label() + " beta=" + root_to_string(beta);
}

KlrElement random_element(const KlrAlgebra& alg, std::mt19937_64& rng) {
  std::vector<KlrElement> gens;
  for (const auto& i : alg.idempotents()) gens.push_back(alg.e(i));
  for (int k = 0; k < alg.size(); ++k) gens.push_back(alg.x(k));
  for (int k = 0; k + 1 < alg.size(); ++k) gens.push_back(alg.tau(k));
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> len(1, 3), summands(1, 2), coeff(-2, 2);
  KlrElement out = alg.zero();
  for (int s = summands(rng); s > 0; --s) {
    KlrElement prod = gens[pick(rng)];
    for (int l = len(rng) - 1; l > 0; --l) prod = alg.multiply(prod, gens[pick(rng)]);
    int c = coeff(rng);
    if (c == 0) c = 1;
    out += prod * c;
  }
  return out;
}

CaseResult klr_assoc_case(const Quiver& q, const Root& beta, int samples, std::uint64_t seed) {
  Ctx ctx;
  const KlrAlgebra alg(q, beta);
  const PolynomialRepresentation rep(alg);
  std::seed_seq seq{seed, static_cast<std::uint64_t>(q.rank()),
                    static_cast<std::uint64_t>(std::hash<std::string>{}(root_to_string(beta)))};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::size_t> pick_idem(0, alg.idempotents().size() - 1);
  std::uniform_int_distribution<int> pick_var(0, std::max(0, alg.size() - 1));
  for (int s = 0; s < samples; ++s) {
    const KlrElement a = random_element(alg, rng);
    const KlrElement b = random_element(alg, rng);
    const KlrElement c = random_element(alg, rng);
    const KlrElement ab = alg.multiply(a, b);
    ctx.require(alg.multiply(ab, c) == alg.multiply(a, alg.multiply(b, c)),
                "associativity fails on sample " + std::to_string(s));
    // The polynomial representation as an independent oracle.
    Exponents mono(alg.size(), 0);
    if (alg.size() > 0) ++mono[pick_var(rng)];
    const PolyVector v = rep.single(alg.idempotents()[pick_idem(rng)], Polynomial::monomial(mono));
    ctx.require(poly_vector_equal(rep.apply(ab, v), rep.apply(a, rep.apply(b, v))),
                "engine disagrees with the polynomial representation on sample " +
                    std::to_string(s));
  }
  ctx.notes.push_back(std::to_string(samples) + " triples");
  return ctx.result(beta_name(q, beta));
}

CaseResult klr_dims_case(const Quiver& q, const Root& beta, int max_degree) {
  Ctx ctx;
  const KlrAlgebra alg(q, beta);
  long total = 0;
  for (int k = -max_degree; k <= max_degree; ++k) {
    const long pbw = alg.graded_dim_pbw(k);
    const long span = alg.graded_dim_span(k);
    total += pbw;
    ctx.require(pbw == span, "degree " + std::to_string(k) + ": PBW count " +
                                 std::to_string(pbw) + " != span " + std::to_string(span));
  }
  ctx.notes.push_back("total " + std::to_string(total) + " in |deg| <= " +
                      std::to_string(max_degree));
  return ctx.result(beta_name(q, beta));
}

// Coefficient of q^k in Sym(q) [m]!_{q^2} [m]!_{q^-2}.
long nilhecke_poincare(int m, int k) {
  // [m]! in t = q^2 as a coefficient list.
  std::vector<long> fact{1};
  for (int j = 1; j <= m; ++j) {
    std::vector<long> next(fact.size() + j - 1, 0);
    for (std::size_t a = 0; a < fact.size(); ++a) {
      for (int b = 0; b < j; ++b) next[a + b] += fact[a];
    }
    fact = next;
  }
  if (k % 2 != 0) return 0;
  const int half = k / 2;
  // partitions[n] = number of partitions of n into parts <= m.
  const int top = half + static_cast<int>(fact.size());
  std::vector<long> parts(std::max(top, 0) + 1, 0);
  if (!parts.empty()) parts[0] = 1;
  for (int j = 1; j <= m; ++j) {
    for (std::size_t n = j; n < parts.size(); ++n) parts[n] += parts[n - j];
  }
  long total = 0;
  for (std::size_t a = 0; a < fact.size(); ++a) {
    for (std::size_t b = 0; b < fact.size(); ++b) {
      const long n = half - static_cast<long>(a) + static_cast<long>(b);
      if (n >= 0 && n < static_cast<long>(parts.size())) total += fact[a] * fact[b] * parts[n];
    }
  }
  return total;
}

long partitions_at_most(int n, int parts) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int j = 1; j <= parts; ++j) {
    for (int s = j; s <= n; ++s) p[s] += p[s - j];
  }
  return p[n];
}

CaseResult nilhecke_case(int m, int max_degree) {
  Ctx ctx;
  const CartanDatum a1 = CartanDatum::from_label("A1");
  const Quiver q = Quiver::standard(a1);
  const KlrAlgebra alg(q, {m});
  const PolynomialRepresentation rep(alg);
  const KlrElement em = nilhecke_em(alg);
  const KlrElement sq = alg.multiply(em, em);
  ctx.require(sq == em, "e_m^2 != e_m in the engine");
  ctx.require(alg.degree(em) == 0, "e_m is not of degree 0");
  const Idem& i = alg.idempotents().front();
  const int top = m * (m - 1) / 2 + 2;
  for (int deg = 0; deg <= top; ++deg) {
    for (const auto& a : monomials_of_degree(m, deg)) {
      const PolyVector v = rep.single(i, Polynomial::monomial(a));
      const PolyVector once = rep.apply(em, v);
      const PolyVector twice = rep.apply(em, once);
      ctx.require(poly_vector_equal(twice, once), "e_m^2 != e_m on the polynomial representation");
      ctx.require(poly_vector_equal(rep.apply(sq, v), twice),
                  "engine and polynomial representation disagree on e_m^2");
    }
  }
  // e_m NH e_m is spanned by e_m x^a e_m and should be Sym_m.
  for (int k = 0; k <= max_degree; k += 2) {
    std::map<KlrTerm, KlrTerms> pivots;
    for (const auto& a : monomials_of_degree(m, k / 2)) {
      const KlrElement y = alg.multiply(alg.multiply(em, alg.basis({i, perm_identity(m), a})), em);
      KlrTerms v = y.terms();
      while (!v.empty()) {
        const auto lead = v.rbegin()->first;
        auto p = pivots.find(lead);
        if (p == pivots.end()) {
          KlrTerms normalized;
          const Rational inv = Rational(1) / v.rbegin()->second;
          for (const auto& [t, c] : v) normalized.emplace(t, c * inv);
          pivots.emplace(lead, std::move(normalized));
          break;
        }
        const Rational f = v.rbegin()->second;
        for (const auto& [t, c] : p->second) {
          auto [it, inserted] = v.emplace(t, -f * c);
          if (!inserted) {
            it->second -= f * c;
            if (it->second == 0) v.erase(it);
          }
        }
      }
    }
    ctx.require(static_cast<long>(pivots.size()) == partitions_at_most(k / 2, m),
                "corner e_m NH e_m has the wrong dimension in degree " + std::to_string(k));
  }
  for (int k = -m * (m - 1); k <= max_degree; ++k) {
    ctx.require(alg.graded_dim_pbw(k) == nilhecke_poincare(m, k),
                "graded dimension differs from Sym(q)[m]!_{q^2}[m]!_{q^-2} in degree " +
                    std::to_string(k));
  }
  ctx.notes.push_back(std::to_string(em.terms().size()) + " terms in e_m");
  return ctx.result("NH_" + std::to_string(m));
}

Polynomial elementary(int nvars, int r) {
  Polynomial out(nvars);
  std::vector<bool> mask(nvars, false);
  std::fill(mask.begin(), mask.begin() + r, true);
  do {
    Exponents a(nvars, 0);
    for (int k = 0; k < nvars; ++k) a[k] = mask[k] ? 1 : 0;
    out.add(a, 1);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

CaseResult center_case(const Quiver& q, const Root& beta) {
  Ctx ctx;
  const KlrAlgebra alg(q, beta);
  const int n = q.rank();
  std::vector<int> r(n, 0);
  int images = 0;
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      std::vector<Polynomial> fs;
      for (int u = 0; u < n; ++u) fs.push_back(elementary(beta[u], r[u]));
      ctx.require(alg.is_central(alg.center_embed(fs)), "center_embed image is not central");
      ++images;
      return;
    }
    for (r[v] = 0; r[v] <= beta[v]; ++r[v]) rec(v + 1);
  };
  rec(0);
  ctx.require(alg.is_central(alg.one()), "the unit is not central");
  if (alg.size() >= 2) {
    ctx.require(!alg.is_central(alg.x(0)), "x_1 is central");
    Polynomial sum(alg.size());
    for (int k = 0; k < alg.size(); ++k) sum += Polynomial::variable(alg.size(), k);
    ctx.require(alg.is_central(alg.polynomial(sum)), "x_1 + ... + x_d is not central");
  }
  ctx.notes.push_back(std::to_string(images) + " images");
  return ctx.result(beta_name(q, beta));
}

struct Task {
  std::string name;
  std::function<CaseResult()> run;
};

std::vector<Task> build_tasks(const std::string& suite, const VerifyOptions& o) {
  std::vector<Task> tasks;
  auto per_quiver = [&](int max_rank, int all_rank, auto fn) {
    for (const auto& q : suite_quivers(o, max_rank, all_rank)) {
      tasks.push_back({quiver_name(q), [q, fn] { return fn(q); }});
    }
  };
  if (suite == "phi-bijection") {
    per_quiver(8, 5, phi_case);
  } else if (suite == "mesh") {
    per_quiver(8, 5, mesh_case);
  } else if (suite == "bedard") {
    per_quiver(8, 5, bedard_case);
  } else if (suite == "lrootQ-window") {
    per_quiver(8, 5, window_case);
  } else if (suite == "deg-lroot") {
    per_quiver(8, 5, deg_case);
  } else if (suite == "f-order" || suite == "euler" || suite == "reflect-compat") {
    const int height = suite == "reflect-compat" ? 5 : 6;
    for (const auto& q : suite_quivers(o, 4, 4)) {
      const auto betas = suite_betas(o, q.rank(), height);
      if (suite == "f-order") {
        tasks.push_back({quiver_name(q), [q, betas] { return f_order_case(q, betas); }});
      } else if (suite == "euler") {
        tasks.push_back({quiver_name(q), [q, betas] { return euler_case(q, betas); }});
      } else {
        tasks.push_back({quiver_name(q), [q, betas] { return reflect_case(q, betas); }});
      }
    }
  } else if (suite == "klr-assoc" || suite == "klr-dims" || suite == "center") {
    VerifyOptions local = o;
    if (local.types.empty() && !o.beta) local.types = {"A3", "D4"};
    const int height = suite == "center" ? 3 : 4;
    for (const auto& q : suite_quivers(local, 8, -1)) {
      for (const auto& beta : suite_betas(o, q.rank(), height)) {
        if (suite == "klr-assoc") {
          const int samples = o.samples;
          const std::uint64_t seed = o.seed;
          tasks.push_back({beta_name(q, beta), [q, beta, samples, seed] {
                             return klr_assoc_case(q, beta, samples, seed);
                           }});
        } else if (suite == "klr-dims") {
          const int deg = o.max_degree;
          tasks.push_back({beta_name(q, beta), [q, beta, deg] { return klr_dims_case(q, beta, deg); }});
        } else {
          tasks.push_back({beta_name(q, beta), [q, beta] { return center_case(q, beta); }});
        }
      }
    }
  } else if (suite == "nilhecke") {
    for (int m = 1; m <= o.max_m; ++m) {
      const int deg = o.max_degree;
      tasks.push_back({"NH_" + std::to_string(m), [m, deg] { return nilhecke_case(m, deg); }});
    }
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  return tasks;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"bedard",       "center",    "deg-lroot", "euler",         "f-order",
          "klr-assoc",    "klr-dims",  "lrootQ-window", "mesh",      "nilhecke",
          "phi-bijection", "reflect-compat"};
}

SuiteReport run_suite(const std::string& suite, const VerifyOptions& options) {
  const auto tasks = build_tasks(suite, options);
  SuiteReport report{suite, std::vector<CaseResult>(tasks.size())};
  parallel_for(tasks.size(), options.threads, [&](std::size_t k) {
    try {
      report.cases[k] = tasks[k].run();
    } catch (const std::exception& e) {
      report.cases[k] = {tasks[k].name, false,
                         std::string("exception: ") + e.what()};
    }
  });
  std::stable_sort(report.cases.begin(), report.cases.end(),
                   [](const CaseResult& a, const CaseResult& b) { return a.name < b.name; });
  return report;
}

Json report_json(const SuiteReport& report) {
  Json cases = Json::array();
  for (const auto& c : report.cases) {
    cases.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return Json{{"suite", report.suite}, {"pass", report.pass()}, {"cases", cases}};
}

std::string report_text(const SuiteReport& report) {
  std::ostringstream os;
  int failed = 0;
  for (const auto& c : report.cases) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << '\n';
    if (!c.pass) ++failed;
  }
  os << report.suite << ": " << report.cases.size() - failed << "/" << report.cases.size()
     << " cases pass\n";
  return os.str();
}

}  // namespace quivkit
