// quivkit: command-line front end. See README.md for the flag reference.

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quivkit/arq.hpp"
#include "quivkit/klr.hpp"
#include "quivkit/klr_parse.hpp"
#include "quivkit/lweight.hpp"
#include "quivkit/reflect.hpp"
#include "quivkit/repmod.hpp"
#include "quivkit/serialize.hpp"
#include "quivkit/verify.hpp"

namespace {

using namespace quivkit;

enum ExitCode { kOk = 0, kFail = 1, kUsage = 2 };

struct Common {
  std::string type = "A3";
  std::string orientation;
  std::string height;
  bool json = false;
  bool dot = false;
};

struct Instance {
  Quiver quiver;
  RootSystem roots;
  ARQuiver arq;
};

Instance make_instance(const Common& c) {
  const CartanDatum datum = CartanDatum::from_label(c.type);
  Quiver q = c.orientation.empty() ? Quiver::standard(datum) : parse_orientation(datum, c.orientation);
  HeightFunction xi = q.height_function();
  if (!c.height.empty()) {
    xi = parse_int_list(c.height);
    if (static_cast<int>(xi.size()) != q.rank() || !q.is_height_function(xi)) {
      throw std::invalid_argument("--height is not a height function for this orientation");
    }
  }
  RootSystem roots(datum);
  ARQuiver arq(q, roots, xi);
  return {std::move(q), std::move(roots), std::move(arq)};
}

Root parse_beta(const std::string& text, int rank) {
  Root beta = parse_int_list(text);
  if (static_cast<int>(beta.size()) != rank) {
    throw std::invalid_argument("--beta needs " + std::to_string(rank) + " coordinates");
  }
  if (!is_nonnegative(beta) || height(beta) == 0) {
    throw std::invalid_argument("--beta must be a nonzero element of Q+");
  }
  return beta;
}

std::string vertex_string(ARVertex v) {
  return "(" + std::to_string(v.i + 1) + "," + std::to_string(v.p) + ")";
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_quiver(const Common& c) {
  const Instance in = make_instance(c);
  if (c.dot) {
    std::cout << gamma_q_dot(in.arq);
  } else if (c.json) {
    print(quiver_json(in.arq));
  } else {
    std::cout << in.quiver.datum().label() << " [" << orientation_string(in.quiver) << "]\n";
    std::cout << "height";
    for (int h : in.arq.height()) std::cout << ' ' << h;
    std::cout << "\n";
    for (const auto& v : in.arq.vertices()) {
      std::cout << vertex_string(v) << "  " << root_to_string(in.roots.root(in.arq.root_at(v)))
                << '\n';
    }
  }
  return kOk;
}

int cmd_phi(const Common& c, const std::string& root_text, int k, const std::string& vertex_text) {
  const Instance in = make_instance(c);
  Json out = Json::array();
  std::ostringstream text;
  auto emit = [&](int a, int kk, ARVertex v) {
    out.push_back({{"root", in.roots.root(a)}, {"k", kk}, {"vertex", {v.i + 1, v.p}}});
    text << root_to_string(in.roots.root(a)) << " k=" << kk << "  " << vertex_string(v) << '\n';
  };
  if (!vertex_text.empty()) {
    const auto iv = parse_int_list(vertex_text);
    if (iv.size() != 2 || iv[0] < 1 || iv[0] > in.quiver.rank()) {
      throw std::invalid_argument("--vertex expects i,p with 1 <= i <= rank");
    }
    const ARVertex v{iv[0] - 1, iv[1]};
    if (!in.arq.in_i_hat(v)) throw std::invalid_argument("vertex is not in I-hat");
    const auto [a, kk] = in.arq.phi_inverse(v);
    emit(a, kk, v);
  } else if (!root_text.empty()) {
    const int a = in.roots.positive_index(parse_int_list(root_text));
    if (a < 0) throw std::invalid_argument("--root is not a positive root");
    emit(a, k, in.arq.phi(a, k));
  } else {
    for (int a = 0; a < in.roots.num_positive(); ++a) emit(a, 0, in.arq.phi(a));
  }
  if (c.json) {
    print(out);
  } else {
    std::cout << text.str();
  }
  return kOk;
}

int cmd_kp(const Common& c, const std::string& beta_text) {
  const Instance in = make_instance(c);
  const Root beta = parse_beta(beta_text, in.quiver.rank());
  const HomTable table(in.quiver, in.roots);
  const auto kp = enumerate_kp(in.roots, beta);
  const std::size_t n = kp.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<LWeight> images;
  for (const auto& m : kp) images.push_back(f_bijection(in.arq, m));
  long comparable = 0, preserved = 0, dominance = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      leq[a][b] = table.kp_leq(kp[a], kp[b]);
      const bool dom = l_dominance_leq(in.quiver.datum(), images[a], images[b]).has_value();
      if (a == b) continue;
      comparable += leq[a][b];
      preserved += leq[a][b] && dom;
      dominance += dom;
    }
  }
  const auto covers = hasse_covers(leq);
  if (c.dot) {
    std::vector<std::string> labels;
    for (const auto& m : kp) labels.push_back(kp_string(in.roots, m));
    std::cout << hasse_dot("KP", labels, covers);
    return kOk;
  }
  const auto lp = dominant_lweights_of_degree(in.arq, beta);
  if (c.json) {
    Json out;
    out["type"] = in.quiver.datum().label();
    out["orientation"] = orientation_string(in.quiver);
    out["beta"] = beta;
    Json parts = Json::array();
    for (std::size_t a = 0; a < n; ++a) {
      parts.push_back({{"index", a + 1},
                       {"partition", kp_json(in.roots, kp[a])},
                       {"f", lweight_json(images[a])},
                       {"orbit_codim", rep_space_dim(in.quiver, beta) - table.orbit_dim(kp[a])}});
    }
    out["partitions"] = parts;
    Json edges = Json::array();
    for (auto [a, b] : covers) edges.push_back({a + 1, b + 1});
    out["hasse"] = edges;
    out["lp_count"] = lp.size();
    out["order"] = {{"comparable_pairs", comparable},
                    {"preserved", preserved},
                    {"dominance_pairs", dominance},
                    {"order_preserving", comparable == preserved},
                    {"order_reflecting", dominance == preserved}};
    print(out);
    return kOk;
  }
  std::cout << "KP(" << root_to_string(beta) << "): " << n << " partitions, |lP+| = " << lp.size()
            << '\n';
  for (std::size_t a = 0; a < n; ++a) {
    std::cout << a + 1 << "  " << kp_string(in.roots, kp[a]) << "  f = " << lweight_json(images[a]).dump()
              << '\n';
  }
  for (auto [a, b] : covers) std::cout << a + 1 << " < " << b + 1 << '\n';
  std::cout << "order preserving: " << (comparable == preserved ? "yes" : "no") << " (" << preserved
            << "/" << comparable << "), converse: " << (dominance == preserved ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_lorder(const Common& c, const std::string& mu_text, const std::string& lambda_text) {
  const CartanDatum datum = CartanDatum::from_label(c.type);
  const LWeight mu = parse_lweight(mu_text);
  const LWeight lambda = parse_lweight(lambda_text);
  const auto nu = l_dominance_leq(datum, mu, lambda);
  if (c.json) {
    Json out{{"leq", nu.has_value()}};
    if (nu) out["l_roots"] = lroots_json(*nu);
    print(out);
  } else if (nu) {
    std::cout << "mu <= lambda: lambda - mu = " << lroots_json(*nu).dump() << '\n';
  } else {
    std::cout << "mu is not <= lambda\n";
  }
  return kOk;
}

int cmd_klr(const Common& c, const std::string& beta_text, const std::string& expr) {
  const CartanDatum datum = CartanDatum::from_label(c.type);
  const Quiver q = c.orientation.empty() ? Quiver::standard(datum) : parse_orientation(datum, c.orientation);
  const KlrAlgebra alg(q, parse_beta(beta_text, q.rank()));
  const KlrElement u = parse_klr_expression(alg, expr);
  if (c.json) {
    print(klr_json(alg, u));
  } else {
    const auto d = alg.degree(u);
    std::cout << klr_to_string(u) << "\ndegree " << (d ? std::to_string(*d) : "none") << '\n';
  }
  return kOk;
}

int cmd_reflect(const Common& c, const std::string& beta_text, int vertex) {
  const Instance in = make_instance(c);
  const Root beta = parse_beta(beta_text, in.quiver.rank());
  if (vertex < 1 || vertex > in.quiver.rank()) throw std::invalid_argument("--vertex out of range");
  if (!in.quiver.is_sink(vertex - 1)) throw std::invalid_argument("--vertex must be a sink");
  const FCompatReport report = check_f_compat(in.arq, beta, vertex - 1);
  if (c.json) {
    print(f_compat_json(in.roots, report));
  } else {
    for (const auto& e : report.entries) {
      std::cout << (e.pass ? "PASS " : "FAIL ") << kp_string(in.roots, e.m) << " -> "
                << kp_string(in.roots, e.reflected) << '\n';
    }
    std::cout << report.entries.size() << " partitions in iKP(" << root_to_string(beta) << ")\n";
  }
  return report.all_pass() ? kOk : kFail;
}

int cmd_verify(const Common& c, const std::string& suite, VerifyOptions o, const std::string& beta_text,
               bool type_given) {
  if (type_given) o.types = {c.type};
  if (!c.orientation.empty()) o.orientation = c.orientation;
  if (!beta_text.empty()) o.beta = parse_int_list(beta_text);
  std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  bool pass = true;
  Json all = Json::array();
  for (const auto& name : names) {
    const SuiteReport report = run_suite(name, o);
    pass = pass && report.pass();
    if (c.json) {
      all.push_back(report_json(report));
    } else {
      std::cout << report_text(report);
    }
  }
  if (c.json) print(names.size() == 1 ? all[0] : all);
  return pass ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for Dynkin quivers, their AR quivers and quiver Hecke algebras"};
  app.set_config("--config", "", "TOML file with defaults for the shared options");
  app.require_subcommand(1);

  Common c;
  CLI::Option* type_opt = app.add_option("--type", c.type, "ADE type, e.g. A3, D4, E6")->capture_default_str();
  app.add_option("--orientation", c.orientation, "arrows as \"1>2,3>2\" (default: i>i+1 chain)");
  app.add_option("--height", c.height, "height function as a comma list");
  app.add_flag("--json", c.json, "JSON output");
  app.add_flag("--dot", c.dot, "DOT output");
  VerifyOptions vo;
  app.add_option("--seed", vo.seed, "RNG seed for randomized suites")->capture_default_str();
  app.add_option("--samples", vo.samples, "random samples per case")->capture_default_str();

  std::string beta, root, vertex_text, expr, mu, lambda, suite;
  int k = 0, vertex = 0;

  auto* quiver = app.add_subcommand("quiver", "the quiver, Gamma_Q and the phi table");
  auto* phi = app.add_subcommand("phi", "phi and its inverse");
  phi->add_option("--root", root, "a positive root as alpha coordinates");
  phi->add_option("--k", k, "the Z/2 x Z index")->capture_default_str();
  phi->add_option("--vertex", vertex_text, "i,p: print phi^{-1}(i,p)");
  auto* kp = app.add_subcommand("kp", "Kostant partitions, Hasse diagram and f");
  kp->add_option("--beta", beta, "alpha coordinates")->required();
  auto* lorder = app.add_subcommand("lorder", "compare two l-weights");
  lorder->add_option("--mu", mu, "\"i,p[,c];...\"")->required();
  lorder->add_option("--lambda", lambda, "\"i,p[,c];...\"")->required();
  auto* klr = app.add_subcommand("klr", "normal form of a KLR expression");
  klr->add_option("--beta", beta, "alpha coordinates")->required();
  klr->add_option("--expr", expr, "e.g. \"t1*t1*e(1,2)\"")->required();
  auto* reflect = app.add_subcommand("reflect", "f(m) against f'(s_i m) at a sink");
  reflect->add_option("--beta", beta, "alpha coordinates")->required();
  reflect->add_option("--vertex", vertex, "a sink i (1-based)")->required();
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("suite", suite, "suite name or 'all'")->required()->check(CLI::IsMember(choices));
  verify->add_option("--beta", beta, "restrict to one beta");
  verify->add_flag("--all-orientations", vo.all_orientations, "every orientation of every type");
  verify->add_option("--max-rank", vo.max_rank, "largest rank when no --type is given");
  verify->add_option("--max-height", vo.max_height, "largest ht beta");
  verify->add_option("--max-degree", vo.max_degree, "largest |degree| for graded dimensions")->capture_default_str();
  verify->add_option("--max-m", vo.max_m, "largest m for nilhecke")->capture_default_str();
  verify->add_option("--threads", vo.threads, "worker threads (0: hardware)")->capture_default_str();
  for (auto* sub : {quiver, phi, kp, lorder, klr, reflect, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (c.json && c.dot) {
    std::cerr << "--json and --dot are exclusive\n";
    return kUsage;
  }

  try {
    if (*quiver) return cmd_quiver(c);
    if (*phi) return cmd_phi(c, root, k, vertex_text);
    if (*kp) return cmd_kp(c, beta);
    if (*lorder) return cmd_lorder(c, mu, lambda);
    if (*klr) return cmd_klr(c, beta, expr);
    if (*reflect) return cmd_reflect(c, beta, vertex);
    if (*verify) return cmd_verify(c, suite, vo, beta, type_opt->count() > 0);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
