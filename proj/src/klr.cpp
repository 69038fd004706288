#include "quivkit/klr.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace quivkit {

namespace {

void add_term(KlrTerms& out, const KlrTerm& t, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = out.emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
}

void add_scaled(KlrTerms& out, const KlrTerms& y, const Rational& c) {
  if (c == 0) return;
  for (const auto& [t, x] : y) add_term(out, t, x * c);
}

KlrTerms mul_mono(const Exponents& a, const KlrTerms& y) {
  KlrTerms out;
  for (const auto& [t, c] : y) {
    KlrTerm s = t;
    for (std::size_t k = 0; k < a.size(); ++k) s.mono[k] += a[k];
    out.emplace(std::move(s), c);
  }
  return out;
}

KlrTerms mul_poly(const Polynomial& f, const KlrTerms& y) {
  KlrTerms out;
  for (const auto& [a, c] : f.terms()) add_scaled(out, mul_mono(a, y), c);
  return out;
}

SymPerm left_swap(const SymPerm& p, int k) {
  SymPerm out = p;
  for (auto& v : out) {
    if (v == k) {
      v = k + 1;
    } else if (v == k + 1) {
      v = k;
    }
  }
  return out;
}

Idem swap_letters(Idem i, int k) {
  std::swap(i[k], i[k + 1]);
  return i;
}

std::vector<SymPerm> all_perms(int d) {
  std::vector<SymPerm> out;
  SymPerm p = perm_identity(d);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string idem_string(const Idem& i) {
  std::string s = "e(";
  for (std::size_t k = 0; k < i.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(i[k] + 1);
  }
  return s + ")";
}

}  // namespace

KlrElement::KlrElement(Root beta, KlrTerms terms) : beta_(std::move(beta)) {
  for (auto& [t, c] : terms) {
    if (c != 0) terms_.emplace(t, c);
  }
}

void KlrElement::add(const KlrTerm& t, const Rational& c) { add_term(terms_, t, c); }

void KlrElement::check_beta(const KlrElement& o) const {
  if (beta_ != o.beta_) throw std::invalid_argument("KLR: beta mismatch");
}

KlrElement& KlrElement::operator+=(const KlrElement& o) {
  check_beta(o);
  add_scaled(terms_, o.terms_, 1);
  return *this;
}

KlrElement& KlrElement::operator-=(const KlrElement& o) {
  check_beta(o);
  add_scaled(terms_, o.terms_, -1);
  return *this;
}

KlrElement KlrElement::operator*(const Rational& c) const {
  KlrElement out(beta_);
  add_scaled(out.terms_, terms_, c);
  return out;
}

SymPerm perm_identity(int d) {
  SymPerm p(d);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

SymPerm perm_compose(const SymPerm& a, const SymPerm& b) {
  SymPerm out(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) out[k] = a[b[k]];
  return out;
}

SymPerm perm_inverse(const SymPerm& a) {
  SymPerm out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[a[k]] = static_cast<int>(k);
  return out;
}

SymPerm perm_of_word(int d, const std::vector<int>& word) {
  SymPerm p = perm_identity(d);
  for (auto it = word.rbegin(); it != word.rend(); ++it) p = left_swap(p, *it);
  return p;
}

int perm_length(const SymPerm& a) {
  int n = 0;
  for (std::size_t p = 0; p < a.size(); ++p) {
    for (std::size_t q = p + 1; q < a.size(); ++q) {
      if (a[p] > a[q]) ++n;
    }
  }
  return n;
}

std::vector<int> canonical_word(const SymPerm& a) {
  std::vector<int> word;
  SymPerm p = a;
  const int d = static_cast<int>(p.size());
  for (;;) {
    const SymPerm inv = perm_inverse(p);
    int k = 0;
    while (k + 1 < d && inv[k] < inv[k + 1]) ++k;
    if (k + 1 >= d) break;
    word.push_back(k);
    p = left_swap(p, k);
  }
  return word;
}

Idem act(const SymPerm& sigma, const Idem& i) {
  Idem out(i.size());
  for (std::size_t p = 0; p < i.size(); ++p) out[sigma[p]] = i[p];
  return out;
}

struct KlrAlgebra::Cache {
  std::mutex mu;
  std::map<std::tuple<int, SymPerm, Idem>, KlrTerms> tau_times;
  std::map<std::pair<std::vector<int>, Idem>, KlrTerms> rewrite;
  std::map<SymPerm, std::vector<int>> canonical;
};

KlrAlgebra::KlrAlgebra(const Quiver& quiver, Root beta)
    : quiver_(quiver), beta_(std::move(beta)), cache_(std::make_unique<Cache>()) {
  if (static_cast<int>(beta_.size()) != quiver_.rank() || !is_nonnegative(beta_)) {
    throw std::invalid_argument("KLR: beta must be a nonnegative vector of rank length");
  }
  Idem base;
  for (int i = 0; i < quiver_.rank(); ++i) base.insert(base.end(), beta_[i], i);
  d_ = static_cast<int>(base.size());
  do {
    idems_.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
}

KlrAlgebra::~KlrAlgebra() = default;
KlrAlgebra::KlrAlgebra(KlrAlgebra&&) noexcept = default;
KlrAlgebra& KlrAlgebra::operator=(KlrAlgebra&&) noexcept = default;

Polynomial KlrAlgebra::tau_square(const Idem& i, int k) const {
  const Vertex a = i[k], b = i[k + 1];
  if (a == b) return Polynomial(d_);
  if (quiver_.has_arrow(b, a)) {
    return Polynomial::variable(d_, k) - Polynomial::variable(d_, k + 1);
  }
  if (quiver_.has_arrow(a, b)) {
    return Polynomial::variable(d_, k + 1) - Polynomial::variable(d_, k);
  }
  return Polynomial::constant(d_, 1);
}

int KlrAlgebra::braid_constant(const Idem& i, int k) const {
  if (i[k] != i[k + 2]) return 0;
  if (quiver_.has_arrow(i[k + 1], i[k])) return 1;
  if (quiver_.has_arrow(i[k], i[k + 1])) return -1;
  return 0;
}

int KlrAlgebra::tau_degree(const Idem& i, int k) const {
  return -quiver_.datum().cartan(i[k], i[k + 1]);
}

int KlrAlgebra::tau_degree_of(const SymPerm& sigma, const Idem& i) const {
  const auto word = cached_canonical(sigma);
  Idem cur = i;
  int deg = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    deg += tau_degree(cur, *it);
    cur = swap_letters(cur, *it);
  }
  return deg;
}

KlrElement KlrAlgebra::one() const {
  KlrElement out(beta_);
  for (const auto& i : idems_) out.add({i, perm_identity(d_), Exponents(d_, 0)}, 1);
  return out;
}

KlrElement KlrAlgebra::e(const Idem& i) const {
  if (!std::binary_search(idems_.begin(), idems_.end(), i)) {
    throw std::out_of_range("e(i): sequence not in I^beta");
  }
  return basis({i, perm_identity(d_), Exponents(d_, 0)});
}

KlrElement KlrAlgebra::x(int k) const {
  if (k < 0 || k >= d_) throw std::out_of_range("x_k: index out of range");
  KlrElement out(beta_);
  Exponents a(d_, 0);
  a[k] = 1;
  for (const auto& i : idems_) out.add({i, perm_identity(d_), a}, 1);
  return out;
}

KlrElement KlrAlgebra::tau(int k) const {
  if (k < 0 || k + 1 >= d_) throw std::out_of_range("tau_k: index out of range");
  KlrElement out(beta_);
  const SymPerm s = left_swap(perm_identity(d_), k);
  for (const auto& i : idems_) out.add({i, s, Exponents(d_, 0)}, 1);
  return out;
}

KlrElement KlrAlgebra::basis(const KlrTerm& t) const {
  KlrElement out(beta_);
  out.add(t, 1);
  return out;
}

KlrElement KlrAlgebra::polynomial(const Polynomial& f) const {
  if (f.nvars() != d_) throw std::invalid_argument("polynomial: wrong variable count");
  KlrElement out(beta_);
  for (const auto& i : idems_) {
    for (const auto& [a, c] : f.terms()) out.add({i, perm_identity(d_), a}, c);
  }
  return out;
}

std::vector<int> KlrAlgebra::cached_canonical(const SymPerm& p) const {
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->canonical.find(p);
    if (it != cache_->canonical.end()) return it->second;
  }
  auto word = canonical_word(p);
  std::lock_guard lock(cache_->mu);
  cache_->canonical.emplace(p, word);
  return word;
}

KlrTerms KlrAlgebra::leftmul_tau(int k, const KlrTerms& y) const {
  KlrTerms out;
  for (const auto& [t, c] : y) {
    Exponents sb = t.mono;
    std::swap(sb[k], sb[k + 1]);
    add_scaled(out, mul_mono(sb, tau_times(k, t.perm, t.idem)), c);
    const Idem left = act(t.perm, t.idem);
    if (left[k] == left[k + 1]) {
      const Polynomial dm = demazure_monomial(t.mono, k);
      for (const auto& [m, c2] : dm.terms()) {
        add_term(out, {t.idem, t.perm, m}, c * c2);
      }
    }
  }
  return out;
}

// tau_k tau_pi e(l) in normal form.
KlrTerms KlrAlgebra::tau_times(int k, const SymPerm& pi, const Idem& l) const {
  auto key = std::make_tuple(k, pi, l);
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->tau_times.find(key);
    if (it != cache_->tau_times.end()) return it->second;
  }
  const SymPerm sk_pi = left_swap(pi, k);
  const Exponents zero(d_, 0);
  KlrTerms out;
  if (perm_length(sk_pi) > perm_length(pi)) {
    std::vector<int> word{k};
    const auto tail = cached_canonical(pi);
    word.insert(word.end(), tail.begin(), tail.end());
    out = rewrite(word, l);
    add_term(out, {l, sk_pi, zero}, 1);
  } else {
    // pi = s_k v: tau_pi = tau_k tau_v - corr, so tau_k tau_pi is
    // tau_k^2 tau_v - tau_k corr.
    std::vector<int> word{k};
    const auto v = cached_canonical(sk_pi);
    word.insert(word.end(), v.begin(), v.end());
    const Polynomial q = tau_square(act(sk_pi, l), k);
    KlrTerms base;
    base.emplace(KlrTerm{l, sk_pi, zero}, 1);
    out = mul_poly(q, base);
    add_scaled(out, leftmul_tau(k, rewrite(word, l)), -1);
  }
  std::lock_guard lock(cache_->mu);
  cache_->tau_times.emplace(std::move(key), out);
  return out;
}

// corr with tau_word e(l) = tau_{can sigma} e(l) + corr, for a reduced word.
KlrTerms KlrAlgebra::rewrite(const std::vector<int>& word, const Idem& l) const {
  const SymPerm sigma = perm_of_word(d_, word);
  const auto can = cached_canonical(sigma);
  if (word == can) return {};
  auto key = std::make_pair(word, l);
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->rewrite.find(key);
    if (it != cache_->rewrite.end()) return it->second;
  }
  const int a = can.front(), b = word.front();
  const std::vector<int> rest(word.begin() + 1, word.end());
  KlrTerms out;
  if (a == b) {
    out = leftmul_tau(a, rewrite(rest, l));
  } else {
    KlrTerms diff = rewrite(rest, l);
    std::vector<int> w2, w3;
    SymPerm r_perm;
    if (std::abs(a - b) >= 2) {
      r_perm = left_swap(left_swap(sigma, b), a);
      const auto r = cached_canonical(r_perm);
      w2 = {a};
      w3 = {a, b};
      w2.insert(w2.end(), r.begin(), r.end());
      w3.insert(w3.end(), r.begin(), r.end());
    } else {
      r_perm = left_swap(left_swap(left_swap(sigma, a), b), a);
      const auto r = cached_canonical(r_perm);
      w2 = {a, b};
      w3 = {a, b, a};
      w2.insert(w2.end(), r.begin(), r.end());
      w3.insert(w3.end(), r.begin(), r.end());
    }
    add_scaled(diff, rewrite(w2, l), -1);
    out = leftmul_tau(b, diff);
    add_scaled(out, rewrite(w3, l), 1);
    if (std::abs(a - b) == 1) {
      const int k = std::min(a, b);
      const int c = braid_constant(act(r_perm, l), k);
      const int sign = b == k + 1 ? 1 : -1;
      add_term(out, {l, r_perm, Exponents(d_, 0)}, sign * c);
    }
  }
  std::lock_guard lock(cache_->mu);
  cache_->rewrite.emplace(std::move(key), out);
  return out;
}

KlrElement KlrAlgebra::multiply(const KlrElement& u, const KlrElement& v) const {
  if (u.beta() != beta_ || v.beta() != beta_) {
    throw std::invalid_argument("KLR multiply: beta mismatch");
  }
  std::map<Idem, KlrTerms> by_left;
  for (const auto& [t, c] : v.terms()) by_left[act(t.perm, t.idem)].emplace(t, c);

  std::map<std::pair<SymPerm, Idem>, std::vector<std::pair<Exponents, Rational>>>
      groups;
  for (const auto& [t, c] : u.terms()) groups[{t.perm, t.idem}].emplace_back(t.mono, c);

  KlrTerms out;
  for (const auto& [key, monos] : groups) {
    auto it = by_left.find(key.second);
    if (it == by_left.end()) continue;
    KlrTerms y = it->second;
    const auto word = cached_canonical(key.first);
    for (auto w = word.rbegin(); w != word.rend(); ++w) y = leftmul_tau(*w, y);
    for (const auto& [a, c] : monos) add_scaled(out, mul_mono(a, y), c);
  }
  return KlrElement(beta_, std::move(out));
}

int KlrAlgebra::term_degree(const KlrTerm& t) const {
  const int xdeg = std::accumulate(t.mono.begin(), t.mono.end(), 0);
  return 2 * xdeg + tau_degree_of(t.perm, t.idem);
}

std::optional<int> KlrAlgebra::degree(const KlrElement& u) const {
  std::optional<int> deg;
  for (const auto& [t, c] : u.terms()) {
    const int dt = term_degree(t);
    if (deg && *deg != dt) return std::nullopt;
    deg = dt;
  }
  return deg;
}

long KlrAlgebra::graded_dim_pbw(int k) const {
  long total = 0;
  const auto perms = all_perms(d_);
  for (const auto& i : idems_) {
    for (const auto& sigma : perms) {
      const int rem = k - tau_degree_of(sigma, i);
      if (rem < 0 || rem % 2 != 0) continue;
      total += static_cast<long>(monomials_of_degree(d_, rem / 2).size());
    }
  }
  return total;
}

long KlrAlgebra::graded_dim_span(int k) const {
  long total = 0;
  const auto perms = all_perms(d_);
  for (const auto& i : idems_) {
    std::map<KlrTerm, KlrTerms> pivots;  // keyed by the largest term
    for (const auto& sigma : perms) {
      const int rem = k - tau_degree_of(sigma, i);
      if (rem < 0 || rem % 2 != 0) continue;
      const auto word = cached_canonical(sigma);
      for (const auto& a : monomials_of_degree(d_, rem / 2)) {
        KlrTerms y;
        y.emplace(KlrTerm{i, perm_identity(d_), a}, 1);
        for (auto w = word.rbegin(); w != word.rend(); ++w) y = leftmul_tau(*w, y);
        while (!y.empty()) {
          const auto lead = y.rbegin()->first;
          auto p = pivots.find(lead);
          if (p == pivots.end()) {
            const Rational inv = 1 / y.rbegin()->second;
            KlrTerms normalized;
            add_scaled(normalized, y, inv);
            pivots.emplace(lead, std::move(normalized));
            break;
          }
          add_scaled(y, p->second, -y.rbegin()->second);
        }
      }
    }
    total += static_cast<long>(pivots.size());
  }
  return total;
}

bool KlrAlgebra::is_central(const KlrElement& u) const {
  std::vector<KlrElement> gens;
  for (const auto& i : idems_) gens.push_back(e(i));
  for (int k = 0; k < d_; ++k) gens.push_back(x(k));
  for (int k = 0; k + 1 < d_; ++k) gens.push_back(tau(k));
  for (const auto& g : gens) {
    if (!(multiply(u, g) == multiply(g, u))) return false;
  }
  return true;
}

KlrElement KlrAlgebra::center_embed(const std::vector<Polynomial>& fs) const {
  if (static_cast<int>(fs.size()) != quiver_.rank()) {
    throw std::invalid_argument("center_embed: one polynomial per vertex expected");
  }
  Polynomial product = Polynomial::constant(d_, 1);
  Integer denom = 1;
  int offset = 0;
  for (int v = 0; v < quiver_.rank(); ++v) {
    const Polynomial& f = fs[v];
    if (f.nvars() != beta_[v]) {
      throw std::invalid_argument("center_embed: polynomial has wrong variable count");
    }
    if (!f.is_symmetric_in(0, f.nvars())) {
      throw std::invalid_argument("center_embed: input is not symmetric");
    }
    Polynomial lifted(d_);
    for (const auto& [a, c] : f.terms()) {
      Exponents b(d_, 0);
      std::copy(a.begin(), a.end(), b.begin() + offset);
      lifted.add(b, c);
    }
    product = product * lifted;
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), beta_[v]);
    denom *= fact;
    offset += beta_[v];
  }
  const Rational scale = Rational(1) / Rational(denom);
  const Idem& base = idems_.front();
  KlrElement out(beta_);
  for (const auto& sigma : all_perms(d_)) {
    const Idem target = act(sigma, base);
    const Polynomial moved = product.permuted(sigma);
    for (const auto& [a, c] : moved.terms()) {
      out.add({target, perm_identity(d_), a}, c * scale);
    }
  }
  return out;
}

KlrElement KlrAlgebra::anti_involution(const KlrElement& u) const {
  KlrTerms out;
  for (const auto& [t, c] : u.terms()) {
    KlrTerms y;
    for (const auto& i : idems_) y.emplace(KlrTerm{i, perm_identity(d_), t.mono}, 1);
    for (int letter : cached_canonical(t.perm)) y = leftmul_tau(letter, y);
    for (const auto& [s, x] : y) {
      if (act(s.perm, s.idem) == t.idem) add_term(out, s, x * c);
    }
  }
  return KlrElement(beta_, std::move(out));
}

KlrElement nilhecke_em(const KlrAlgebra& algebra) {
  const Root& beta = algebra.beta();
  const int support = static_cast<int>(
      std::count_if(beta.begin(), beta.end(), [](int c) { return c != 0; }));
  if (support != 1) {
    throw std::invalid_argument("nilhecke_em: beta must be m alpha_i");
  }
  const int m = algebra.size();
  const Idem& i = algebra.idempotents().front();
  SymPerm w0(m);
  for (int k = 0; k < m; ++k) w0[k] = m - 1 - k;
  Exponents delta(m);
  std::iota(delta.begin(), delta.end(), 0);
  return algebra.multiply(algebra.basis({i, w0, Exponents(m, 0)}),
                          algebra.basis({i, perm_identity(m), delta}));
}

Integer induct_dim(const Integer& dim_m, const Integer& dim_n, int d, int dp) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), d + dp, d);
  return b * dim_m * dim_n;
}

std::optional<Integer> stdh_ledger(const std::vector<int>& mults,
                                   const std::vector<int>& heights,
                                   const std::vector<Integer>& dims) {
  if (mults.size() != heights.size() || mults.size() != dims.size()) {
    throw std::invalid_argument("stdh_ledger: length mismatch");
  }
  Integer total = 1, sym = 1;
  int size = 0;
  for (std::size_t k = 0; k < mults.size(); ++k) {
    for (int c = 0; c < mults[k]; ++c) {
      total = induct_dim(total, dims[k], size, heights[k]);
      size += heights[k];
    }
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), mults[k]);
    sym *= fact;
  }
  if (total % sym != 0) return std::nullopt;
  return Integer(total / sym);
}

PolynomialRepresentation::PolynomialRepresentation(const KlrAlgebra& algebra,
                                                   int check_degree)
    : algebra_(&algebra), d_(algebra.size()) {
  check_relations(check_degree);
}

namespace {

void add_poly(PolyVector& v, const Idem& i, const Polynomial& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = v.emplace(i, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) v.erase(it);
  }
}

PolyVector combine(const PolyVector& a, const PolyVector& b, const Rational& cb) {
  PolyVector out = a;
  for (const auto& [i, f] : b) add_poly(out, i, f * cb);
  return out;
}

}  // namespace

bool poly_vector_equal(const PolyVector& a, const PolyVector& b) {
  return combine(a, b, -1).empty();
}

PolyVector PolynomialRepresentation::single(const Idem& i, const Polynomial& f) const {
  PolyVector v;
  add_poly(v, i, f);
  return v;
}

PolyVector PolynomialRepresentation::act_e(const Idem& i, const PolyVector& v) const {
  PolyVector out;
  auto it = v.find(i);
  if (it != v.end()) add_poly(out, i, it->second);
  return out;
}

PolyVector PolynomialRepresentation::act_x(int k, const PolyVector& v) const {
  PolyVector out;
  const Polynomial xk = Polynomial::variable(d_, k);
  for (const auto& [i, f] : v) add_poly(out, i, xk * f);
  return out;
}

PolyVector PolynomialRepresentation::act_tau(int k, const PolyVector& v) const {
  PolyVector out;
  const Quiver& q = algebra_->quiver();
  for (const auto& [i, f] : v) {
    if (i[k] == i[k + 1]) {
      add_poly(out, i, f.demazure(k));
      continue;
    }
    Polynomial moved = f.swapped(k);
    if (q.has_arrow(i[k + 1], i[k])) {
      moved = (Polynomial::variable(d_, k + 1) - Polynomial::variable(d_, k)) * moved;
    }
    add_poly(out, swap_letters(i, k), moved);
  }
  return out;
}

PolyVector PolynomialRepresentation::apply(const KlrElement& u,
                                           const PolyVector& v) const {
  PolyVector out;
  for (const auto& [t, c] : u.terms()) {
    PolyVector w = act_e(t.idem, v);
    const auto word = canonical_word(t.perm);
    for (auto it = word.rbegin(); it != word.rend(); ++it) w = act_tau(*it, w);
    const Polynomial mono = Polynomial::monomial(t.mono, c);
    for (const auto& [i, f] : w) add_poly(out, i, mono * f);
  }
  return out;
}

void PolynomialRepresentation::check_relations(int max_degree) const {
  const KlrAlgebra& alg = *algebra_;
  auto fail = [&](const std::string& rel, const Idem& i) {
    throw std::logic_error("polynomial representation violates " + rel +
                           " at " + idem_string(i));
  };
  std::vector<Exponents> monos;
  for (int m = 0; m <= max_degree; ++m) {
    for (auto& a : monomials_of_degree(d_, m)) monos.push_back(std::move(a));
  }
  for (const auto& i : alg.idempotents()) {
    for (const auto& a : monos) {
      const PolyVector base = single(i, Polynomial::monomial(a));
      for (const auto& j : alg.idempotents()) {
        const PolyVector pj = act_e(j, base);
        if (!poly_vector_equal(pj, j == i ? base : PolyVector{})) {
          fail("e(i) e(j) = delta e(i)", i);
        }
      }
      for (int k = 0; k + 1 < d_; ++k) {
        const PolyVector tb = act_tau(k, base);
        for (const auto& [j, f] : tb) {
          if (j != swap_letters(i, k)) fail("tau_k e(i) = e(s_k i) tau_k", i);
        }
        if (!poly_vector_equal(act_tau(k, tb),
                               single(i, alg.tau_square(i, k) * Polynomial::monomial(a)))) {
          fail("tau_k^2 e(i)", i);
        }
        for (int l = 0; l < d_; ++l) {
          const int sl = l == k ? k + 1 : (l == k + 1 ? k : l);
          const PolyVector lhs =
              combine(act_tau(k, act_x(l, base)), act_x(sl, tb), -1);
          PolyVector rhs;
          if (i[k] == i[k + 1] && l == k) rhs = combine({}, base, -1);
          if (i[k] == i[k + 1] && l == k + 1) rhs = base;
          if (!poly_vector_equal(lhs, rhs)) fail("(tau_k x_l - x_{s_k l} tau_k) e(i)", i);
        }
        for (int l = k + 2; l + 1 < d_; ++l) {
          if (!poly_vector_equal(act_tau(k, act_tau(l, base)),
                                 act_tau(l, act_tau(k, base)))) {
            fail("tau_k tau_l = tau_l tau_k", i);
          }
        }
        if (k + 2 < d_) {
          const PolyVector lhs =
              combine(act_tau(k + 1, act_tau(k, act_tau(k + 1, base))),
                      act_tau(k, act_tau(k + 1, act_tau(k, base))), -1);
          const PolyVector rhs = combine({}, base, alg.braid_constant(i, k));
          if (!poly_vector_equal(lhs, rhs)) fail("braid relation", i);
        }
      }
    }
  }
}

std::string klr_to_string(const KlrElement& u) {
  if (u.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : u.terms()) {
    std::vector<std::string> parts;
    for (std::size_t k = 0; k < t.mono.size(); ++k) {
      if (t.mono[k] == 0) continue;
      std::string s = "x" + std::to_string(k + 1);
      if (t.mono[k] > 1) s += "^" + std::to_string(t.mono[k]);
      parts.push_back(s);
    }
    for (int letter : canonical_word(t.perm)) {
      parts.push_back("t" + std::to_string(letter + 1));
    }
    parts.push_back(idem_string(t.idem));
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << mag.get_str() << '*';
    for (std::size_t p = 0; p < parts.size(); ++p) {
      if (p) os << '*';
      os << parts[p];
    }
  }
  return os.str();
}

}  // namespace quivkit
