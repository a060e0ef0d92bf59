#include "gaudin/ratfun.hpp"

#include <algorithm>
#include <sstream>

namespace gaudin {

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

UPoly UPoly::operator-() const {
  UPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(c));
}

UPoly operator*(const Rational& s, const UPoly& a) {
  if (s == 0) return UPoly();
  UPoly out = a;
  for (auto& c : out.c_) c *= s;
  return out;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = c_;
  const int dd = d.degree();
  if (degree() < dd) return {UPoly(), *this};
  std::vector<Rational> quo(static_cast<std::size_t>(degree() - dd + 1));
  for (int k = degree(); k >= dd; --k) {
    const Rational f = rem[static_cast<std::size_t>(k)] / d.leading();
    quo[static_cast<std::size_t>(k - dd)] = f;
    if (f == 0) continue;
    for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k - dd + i)] -= f * d.c_[static_cast<std::size_t>(i)];
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  const Rational inv = 1 / leading();
  return inv * *this;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rational> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(c));
}

Rational UPoly::evaluate(const Rational& x) const {
  Rational v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

UPoly UPoly::shifted(const Rational& x0) const {
  // Repeated synthetic division (Taylor shift).
  std::vector<Rational> c = c_;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += x0 * c[j];
  }
  return UPoly(std::move(c));
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (k == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ---------------------------------------------------------------- RatFun

RatFun::RatFun(UPoly num, UPoly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = UPoly();
    den_ = UPoly(Rational(1));
    return;
  }
  if (den.degree() > 0 && num.degree() >= 0) {
    UPoly g = gcd(num, den);
    if (g.degree() > 0) {
      num = num.divmod(g).first;
      den = den.divmod(g).first;
    }
  }
  const Rational lead = den.leading();
  num_ = (1 / lead) * num;
  den_ = (1 / lead) * den;
}

RatFun RatFun::pole(const Rational& p, int order) {
  UPoly den(Rational(1));
  for (int i = 0; i < order; ++i) den = den * UPoly::linear_factor(p);
  return RatFun(UPoly(Rational(1)), std::move(den), Canonical{});
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun();
  if (a.is_polynomial() && b.is_polynomial()) return RatFun(a.num_ * b.num_, UPoly(Rational(1)), RatFun::Canonical{});
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw std::domain_error("rational function division by zero");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::derivative() const {
  if (is_polynomial()) return RatFun(num_.derivative(), den_, Canonical{});
  return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RatFun::evaluate(const Rational& x) const {
  const Rational d = den_.evaluate(x);
  if (d == 0) throw PoleError(x, "evaluation at pole z = " + x.get_str() + " of " + to_string());
  return num_.evaluate(x) / d;
}

int RatFun::pole_order(const Rational& p) const {
  int order = 0;
  UPoly d = den_;
  const UPoly f = UPoly::linear_factor(p);
  while (d.degree() > 0) {
    auto [q, r] = d.divmod(f);
    if (!r.is_zero()) break;
    d = std::move(q);
    ++order;
  }
  return order;
}

Rational RatFun::laurent_coefficient(const Rational& p, int n) const {
  if (is_zero()) return 0;
  const int m = pole_order(p);
  const int index = n + m;  // coefficient index in the Taylor series of (z−p)^m f
  if (index < 0) return 0;
  UPoly d = den_;
  const UPoly f = UPoly::linear_factor(p);
  for (int i = 0; i < m; ++i) d = d.divmod(f).first;
  const UPoly ns = num_.shifted(p);
  const UPoly ds = d.shifted(p);
  // power-series division ns / ds up to t^index
  std::vector<Rational> q(static_cast<std::size_t>(index) + 1);
  const Rational d0 = ds.coefficient(0);
  for (int k = 0; k <= index; ++k) {
    Rational acc = ns.coefficient(k);
    for (int j = 1; j <= k && j <= ds.degree(); ++j) acc -= ds.coefficient(j) * q[static_cast<std::size_t>(k - j)];
    q[static_cast<std::size_t>(k)] = acc / d0;
  }
  return q.back();
}

std::string RatFun::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Rational residue(const RatFun& f, const Rational& p, int order) { return f.laurent_coefficient(p, -1 - order); }

}  // namespace gaudin
