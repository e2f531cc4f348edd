#include "superlsa/ratfun.hpp"

#include <algorithm>

namespace superlsa {

bool integer_kth_root(const Integer& x, unsigned k, Integer& out) {
  if (k == 0) return false;
  if (k == 1) { out = x; return true; }
  if (x == 0) { out = 0; return true; }
  if (x < 0) {
    if (k % 2 == 0) return false;
    Integer r;
    if (!integer_kth_root(-x, k, r)) return false;
    out = -r;
    return true;
  }
  Integer lo = 1, hi = 1;
  while (boost::multiprecision::pow(hi, k) < x) hi <<= 1;
  while (lo < hi) {
    Integer mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, k) < x) lo = mid + 1; else hi = mid;
  }
  if (boost::multiprecision::pow(lo, k) != x) return false;
  out = lo;
  return true;
}

bool rational_kth_root(const Rational& q, unsigned k, Rational& out) {
  Integer n, d;
  if (!integer_kth_root(rat_num(q), k, n)) return false;
  if (!integer_kth_root(rat_den(q), k, d)) return false;
  out = Rational(n) / Rational(d);
  return true;
}

std::string rational_to_string(const Rational& q) {
  std::string s = rat_num(q).str();
  if (rat_den(q) != 1) s += "/" + rat_den(q).str();
  return s;
}

UnivariatePoly::UnivariatePoly(Rational c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

UnivariatePoly::UnivariatePoly(std::vector<Rational> cs) : coeffs_(std::move(cs)) { trim(); }

UnivariatePoly UnivariatePoly::variable() {
  return UnivariatePoly(std::vector<Rational>{Rational(0), Rational(1)});
}

const Rational& UnivariatePoly::leading() const {
  static const Rational zero(0);
  return coeffs_.empty() ? zero : coeffs_.back();
}

Rational UnivariatePoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

void UnivariatePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UnivariatePoly UnivariatePoly::operator+(const UnivariatePoly& o) const {
  std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::operator-(const UnivariatePoly& o) const {
  std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
  return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::operator*(const UnivariatePoly& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return {};
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::operator-() const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c = -c;
  return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  std::vector<Rational> out = coeffs_;
  for (auto& x : out) x *= c;
  return UnivariatePoly(std::move(out));
}

void UnivariatePoly::divmod(const UnivariatePoly& a, const UnivariatePoly& b,
                            UnivariatePoly& q, UnivariatePoly& r) {
  if (b.is_zero()) throw DivisionByZero();
  std::vector<Rational> rem = a.coeffs_;
  int db = b.degree();
  std::vector<Rational> quo;
  if (a.degree() >= db) quo.assign(a.degree() - db + 1, Rational(0));
  for (int d = a.degree(); d >= db; --d) {
    if (rem.size() < static_cast<std::size_t>(d + 1) || rem[d] == 0) continue;
    Rational f = rem[d] / b.leading();
    quo[d - db] = f;
    for (int i = 0; i <= db; ++i) rem[d - db + i] -= f * b.coeffs_[i];
  }
  q = UnivariatePoly(std::move(quo));
  r = UnivariatePoly(std::move(rem));
}

UnivariatePoly UnivariatePoly::gcd(UnivariatePoly a, UnivariatePoly b) {
  while (!b.is_zero()) {
    UnivariatePoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

UnivariatePoly UnivariatePoly::monic() const {
  if (is_zero()) return {};
  return scaled(Rational(1) / leading());
}

Rational UnivariatePoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(int(i));
  return UnivariatePoly(std::move(out));
}

bool UnivariatePoly::kth_root(const UnivariatePoly& p, unsigned k, UnivariatePoly& out) {
  if (k == 0) return false;
  if (k == 1) { out = p; return true; }
  if (p.is_zero()) { out = {}; return true; }
  if (p.degree() % static_cast<int>(k) != 0) return false;
  int d = p.degree() / static_cast<int>(k);
  Rational lead_root;
  if (!rational_kth_root(p.leading(), k, lead_root)) return false;
  std::vector<Rational> q(d + 1, Rational(0));
  q[d] = lead_root;
  // peel coefficients top-down; each unknown enters linearly through the
  // leading term of the k-th power
  Rational pivot = Rational(int(k));
  for (unsigned i = 0; i + 2 <= k; ++i) pivot *= lead_root;
  for (int j = d - 1; j >= 0; --j) {
    UnivariatePoly cur(q);
    UnivariatePoly pw(Rational(1));
    for (unsigned i = 0; i < k; ++i) pw = pw * cur;
    int t = (static_cast<int>(k) - 1) * d + j;
    Rational delta = p.coeff(t) - pw.coeff(t);
    q[j] = delta / pivot;
  }
  UnivariatePoly cand(q);
  UnivariatePoly pw(Rational(1));
  for (unsigned i = 0; i < k; ++i) pw = pw * cand;
  if (!(pw == p)) return false;
  out = cand;
  return true;
}

RatFun::RatFun(Rational q) : num_(std::move(q)), den_(Rational(1)) {}

RatFun::RatFun(UnivariatePoly num, UnivariatePoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

RatFun RatFun::parameter() { return RatFun(UnivariatePoly::variable(), UnivariatePoly(Rational(1))); }

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = UnivariatePoly(Rational(1));
    return;
  }
  UnivariatePoly g = UnivariatePoly::gcd(num_, den_);
  if (g.degree() > 0) {
    UnivariatePoly q, r;
    UnivariatePoly::divmod(num_, g, q, r);
    num_ = q;
    UnivariatePoly::divmod(den_, g, q, r);
    den_ = q;
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    den_ = den_.scaled(Rational(1) / lead);
    num_ = num_.scaled(Rational(1) / lead);
  }
}

bool RatFun::is_one() const {
  return den_.degree() == 0 && num_.degree() == 0 && num_.coeff(0) == 1;
}

bool RatFun::is_rational() const { return den_.degree() == 0 && num_.degree() <= 0; }

Rational RatFun::to_rational() const {
  if (!is_rational()) throw std::logic_error("scalar is not a plain rational");
  return num_.is_zero() ? Rational(0) : num_.coeff(0);
}

RatFun RatFun::operator+(const RatFun& o) const {
  return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
  return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const { return RatFun(num_ * o.num_, den_ * o.den_); }

RatFun RatFun::operator/(const RatFun& o) const {
  if (o.is_zero()) throw DivisionByZero();
  return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return RatFun(den_, num_);
}

Rational RatFun::eval(const Rational& q) const {
  Rational d = den_.eval(q);
  if (d == 0) throw EvaluationPole();
  return num_.eval(q) / d;
}

bool RatFun::kth_root(unsigned k, RatFun& out) const {
  UnivariatePoly rn, rd;
  if (!UnivariatePoly::kth_root(num_, k, rn)) return false;
  if (!UnivariatePoly::kth_root(den_, k, rd)) return false;
  out = RatFun(rn, rd);
  return true;
}

int RatFun::compare(const RatFun& x, const RatFun& y) {
  auto cmp_poly = [](const UnivariatePoly& p, const UnivariatePoly& q) {
    if (p.degree() != q.degree()) return p.degree() < q.degree() ? -1 : 1;
    for (int i = p.degree(); i >= 0; --i) {
      if (p.coeff(i) != q.coeff(i)) return p.coeff(i) < q.coeff(i) ? -1 : 1;
    }
    return 0;
  };
  if (int c = cmp_poly(x.num_, y.num_)) return c;
  return cmp_poly(x.den_, y.den_);
}

}  // namespace superlsa
