#include "quivkit/poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace quivkit {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::monomial(const Exponents& a, const Rational& c) {
  Polynomial p(static_cast<int>(a.size()));
  p.add(a, c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int k) {
  if (k < 0 || k >= nvars) throw std::out_of_range("variable index");
  Exponents a(nvars, 0);
  a[k] = 1;
  return monomial(a);
}

void Polynomial::add(const Exponents& a, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [a, c] : o.terms_) add(a, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [a, c] : o.terms_) add(a, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out(nvars_);
  for (const auto& [a, c] : terms_) {
    for (const auto& [b, d] : o.terms_) {
      Exponents s = a;
      for (int k = 0; k < nvars_; ++k) s[k] += b[k];
      out.add(s, c * d);
    }
  }
  return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial out(nvars_);
  if (c == 0) return out;
  for (const auto& [a, x] : terms_) out.terms_.emplace(a, x * c);
  return out;
}

Polynomial Polynomial::swapped(int k) const {
  Polynomial out(nvars_);
  for (const auto& [a, c] : terms_) {
    Exponents b = a;
    std::swap(b[k], b[k + 1]);
    out.terms_.emplace(std::move(b), c);
  }
  return out;
}

Polynomial demazure_monomial(const Exponents& a, int k) {
  Polynomial out(static_cast<int>(a.size()));
  const int p = a[k], q = a[k + 1];
  if (p == q) return out;
  // x_k^p x_{k+1}^q: factor out (x_k x_{k+1})^min, leaving a complete
  // homogeneous sum in two variables.
  const int lo = std::min(p, q), gap = std::abs(p - q);
  const Rational sign = p > q ? -1 : 1;
  Exponents b = a;
  for (int s = 0; s < gap; ++s) {
    b[k] = lo + s;
    b[k + 1] = lo + gap - 1 - s;
    out.add(b, sign);
  }
  return out;
}

Polynomial Polynomial::demazure(int k) const {
  Polynomial out(nvars_);
  for (const auto& [a, c] : terms_) out += demazure_monomial(a, k) * c;
  return out;
}

Polynomial Polynomial::permuted(const std::vector<int>& s) const {
  // x_p -> x_{s(p)} moves the exponent of position p to position s(p).
  Polynomial out(nvars_);
  for (const auto& [a, c] : terms_) {
    Exponents b(nvars_, 0);
    for (int p = 0; p < nvars_; ++p) b[s[p]] = a[p];
    out.add(b, c);
  }
  return out;
}

bool Polynomial::is_symmetric_in(int lo, int hi) const {
  for (int k = lo; k + 1 < hi; ++k) {
    if (!(swapped(k) == *this)) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (int k = 0; k < nvars_; ++k) {
      if (a[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(k + 1);
      if (a[k] > 1) mono += "^" + std::to_string(a[k]);
    }
    if (mono.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag.get_str() << '*' << mono;
    }
  }
  return os.str();
}

std::vector<Exponents> monomials_of_degree(int n, int m) {
  std::vector<Exponents> out;
  if (n == 0) {
    if (m == 0) out.emplace_back();
    return out;
  }
  Exponents a(n, 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == n - 1) {
      a[k] = left;
      out.push_back(a);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      a[k] = e;
      rec(k + 1, left - e);
    }
  };
  rec(0, m);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace quivkit
