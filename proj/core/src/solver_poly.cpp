#include "superlsa/solver_poly.hpp"

#include <algorithm>

namespace superlsa {

int monomial_degree(const Monomial& m) {
  int d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

SolverPoly SolverPoly::constant(const RatFun& c) {
  SolverPoly p;
  if (!c.is_zero()) p.terms_.emplace(Monomial{}, c);
  return p;
}

SolverPoly SolverPoly::variable(int v) {
  SolverPoly p;
  p.terms_.emplace(Monomial{{v, 1}}, RatFun(1));
  return p;
}

bool SolverPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

RatFun SolverPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? RatFun(0) : it->second;
}

void SolverPoly::add_term(Monomial m, const RatFun& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

SolverPoly SolverPoly::operator+(const SolverPoly& o) const {
  SolverPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

SolverPoly SolverPoly::operator-(const SolverPoly& o) const {
  SolverPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

SolverPoly SolverPoly::operator-() const { return scaled(RatFun(-1)); }

SolverPoly SolverPoly::scaled(const RatFun& k) const {
  SolverPoly r;
  if (k.is_zero()) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * k);
  return r;
}

namespace {

Monomial merge_monomials(const Monomial& x, const Monomial& y) {
  Monomial out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].first == y[j].first) {
      out.emplace_back(x[i].first, x[i].second + y[j].second);
      ++i;
      ++j;
    } else if (x[i].first < y[j].first) {
      out.push_back(x[i++]);
    } else {
      out.push_back(y[j++]);
    }
  }
  for (; i < x.size(); ++i) out.push_back(x[i]);
  for (; j < y.size(); ++j) out.push_back(y[j]);
  return out;
}

}  // namespace

SolverPoly SolverPoly::operator*(const SolverPoly& o) const {
  SolverPoly r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(merge_monomials(m1, m2), c1 * c2);
  return r;
}

int SolverPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
  return d;
}

int SolverPoly::degree_in(int v) const {
  int d = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& [vv, e] : m)
      if (vv == v) d = std::max(d, e);
  return d;
}

std::vector<int> SolverPoly::variables() const {
  std::vector<int> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool SolverPoly::has_variable(int v) const {
  for (const auto& [m, c] : terms_)
    for (const auto& [vv, e] : m)
      if (vv == v) return true;
  return false;
}

SolverPoly SolverPoly::coefficient_of(int v) const {
  SolverPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial rest;
    bool linear = false;
    for (const auto& [vv, e] : m) {
      if (vv == v) {
        if (e == 1) linear = true;
      } else {
        rest.emplace_back(vv, e);
      }
    }
    if (linear) r.add_term(std::move(rest), c);
  }
  return r;
}

SolverPoly SolverPoly::coefficient_of_power(int v, int k) const {
  SolverPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial rest;
    int got = 0;
    for (const auto& [vv, e] : m) {
      if (vv == v)
        got = e;
      else
        rest.emplace_back(vv, e);
    }
    if (got == k) r.add_term(std::move(rest), c);
  }
  return r;
}

SolverPoly SolverPoly::drop_terms_with(int v) const {
  SolverPoly r;
  for (const auto& [m, c] : terms_) {
    bool has = false;
    for (const auto& [vv, e] : m)
      if (vv == v) has = true;
    if (!has) r.terms_.emplace(m, c);
  }
  return r;
}

SolverPoly SolverPoly::substituted(int v, const SolverPoly& value) const {
  SolverPoly out;
  for (const auto& [m, c] : terms_) {
    int e = 0;
    Monomial rest;
    for (const auto& [vv, ee] : m) {
      if (vv == v)
        e = ee;
      else
        rest.emplace_back(vv, ee);
    }
    if (e == 0) {
      out.add_term(std::move(rest), c);
      continue;
    }
    SolverPoly term;
    term.add_term(std::move(rest), c);
    for (int k = 0; k < e; ++k) term = term * value;
    out = out + term;
  }
  return out;
}

RatFun SolverPoly::evaluated(const std::vector<RatFun>& values) const {
  RatFun total(0);
  for (const auto& [m, c] : terms_) {
    RatFun t = c;
    for (const auto& [v, e] : m)
      for (int k = 0; k < e; ++k) t = t * values.at(v);
    total = total + t;
  }
  return total;
}

std::string SolverPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  // highest graded-lex monomial first reads like handwritten algebra
  std::vector<std::pair<std::pair<int, Monomial>, const RatFun*>> order;
  order.reserve(terms_.size());
  for (const auto& [m, c] : terms_) order.push_back({{monomial_degree(m), m}, &c});
  std::sort(order.begin(), order.end(),
            [](const auto& x, const auto& y) { return y.first < x.first; });
  std::string out;
  bool first = true;
  for (const auto& [key, cp] : order) {
    const Monomial& m = key.second;
    std::string cs = scalar_to_string(*cp);
    bool negated = false;
    if (!cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos) {
      negated = true;
      cs = cs.substr(1);
    }
    std::string mono;
    for (const auto& [v, e] : m) {
      if (!mono.empty()) mono += "*";
      mono += names.at(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    std::string body;
    if (mono.empty())
      body = cs;
    else if (cs == "1")
      body = mono;
    else if (cs.find_first_of("+-*/^") != std::string::npos)
      body = "(" + cs + ")*" + mono;
    else
      body = cs + "*" + mono;
    if (first) {
      out += negated ? "-" + body : body;
      first = false;
    } else {
      out += negated ? " - " + body : " + " + body;
    }
  }
  return out;
}

int SolverPoly::compare(const SolverPoly& x, const SolverPoly& y) {
  auto ix = x.terms_.begin(), iy = y.terms_.begin();
  for (; ix != x.terms_.end() && iy != y.terms_.end(); ++ix, ++iy) {
    if (ix->first != iy->first) return ix->first < iy->first ? -1 : 1;
    int c = RatFun::compare(ix->second, iy->second);
    if (c != 0) return c;
  }
  if (ix != x.terms_.end()) return 1;
  if (iy != y.terms_.end()) return -1;
  return 0;
}

bool SolverPoly::selection_less(const SolverPoly& x, const SolverPoly& y,
                                bool term_count_tiebreak) {
  int dx = x.total_degree(), dy = y.total_degree();
  if (dx != dy) return dx < dy;
  if (term_count_tiebreak && x.terms_.size() != y.terms_.size())
    return x.terms_.size() < y.terms_.size();
  auto graded = [](const SolverPoly& p) {
    std::vector<std::pair<int, Monomial>> ms;
    ms.reserve(p.terms_.size());
    for (const auto& [m, c] : p.terms_) ms.push_back({monomial_degree(m), m});
    std::sort(ms.begin(), ms.end());
    return ms;
  };
  auto mx = graded(x), my = graded(y);
  if (mx != my) return mx < my;
  for (std::size_t i = 0; i < mx.size(); ++i) {
    int c = RatFun::compare(x.terms_.at(mx[i].second), y.terms_.at(my[i].second));
    if (c != 0) return c < 0;
  }
  return false;
}

namespace {

// quotient monomial num / den, or false when den does not divide num
bool divide_monomial(const Monomial& num, const Monomial& den, Monomial& out) {
  out.clear();
  std::size_t i = 0;
  for (const auto& [v, e] : num) {
    if (i < den.size() && den[i].first < v) return false;
    if (i < den.size() && den[i].first == v) {
      if (den[i].second > e) return false;
      if (e > den[i].second) out.emplace_back(v, e - den[i].second);
      ++i;
    } else {
      out.emplace_back(v, e);
    }
  }
  return i == den.size();
}

}  // namespace

std::optional<SolverPoly> exact_division(const SolverPoly& b, const SolverPoly& a) {
  auto lead = [](const SolverPoly& p) {
    auto best = p.terms().begin();
    for (auto it = p.terms().begin(); it != p.terms().end(); ++it) {
      auto key = std::make_pair(monomial_degree(it->first), it->first);
      auto bkey = std::make_pair(monomial_degree(best->first), best->first);
      if (bkey < key) best = it;
    }
    return best;
  };
  if (a.is_zero()) return std::nullopt;
  auto la = lead(a);
  Monomial la_mono = la->first;
  RatFun la_coeff = la->second;
  SolverPoly q, r = b;
  while (!r.is_zero()) {
    auto lr = lead(r);
    Monomial qm;
    if (!divide_monomial(lr->first, la_mono, qm)) return std::nullopt;
    RatFun qc = lr->second / la_coeff;
    SolverPoly qt;
    qt.add_term(std::move(qm), qc);
    q = q + qt;
    r = r - qt * a;
  }
  return q;
}

namespace {

// scale so the graded-lex greatest monomial has coefficient 1
SolverPoly normalized(const SolverPoly& p) {
  const RatFun* lead = nullptr;
  std::pair<int, Monomial> best;
  for (const auto& [m, c] : p.terms()) {
    auto key = std::make_pair(monomial_degree(m), m);
    if (!lead || best < key) {
      best = key;
      lead = &c;
    }
  }
  if (!lead || lead->is_one()) return p;
  return p.scaled(lead->inverse());
}

// univariate view: coefficients of v^0..v^deg with everything else constant
bool univariate_coeffs(const SolverPoly& p, int v, std::vector<RatFun>& out) {
  out.assign(p.degree_in(v) + 1, RatFun(0));
  for (const auto& [m, c] : p.terms()) {
    int e = 0;
    for (const auto& [vv, ee] : m) {
      if (vv == v)
        e = ee;
      else
        return false;  // mixed term: not univariate
    }
    out[e] = out[e] + c;
  }
  while (out.size() > 1 && out.back().is_zero()) out.pop_back();
  return true;
}

bool univariate_affine_factors(const SolverPoly& p, int v, std::vector<SolverPoly>& out) {
  std::vector<RatFun> c;
  if (!univariate_coeffs(p, v, c)) return false;
  std::size_t low = 0;
  while (low < c.size() && c[low].is_zero()) ++low;
  for (std::size_t k = 0; k < low; ++k) out.push_back(SolverPoly::variable(v));
  c.erase(c.begin(), c.begin() + low);
  int d = static_cast<int>(c.size()) - 1;
  if (d <= 0) return true;  // constant remainder carries no root
  if (d == 1) {
    out.push_back(normalized(SolverPoly::variable(v).scaled(c[1]) +
                             SolverPoly::constant(c[0])));
    return true;
  }
  if (d == 2) {
    RatFun disc = c[1] * c[1] - RatFun(4) * c[2] * c[0];
    RatFun root;
    if (!disc.kth_root(2, root)) return false;
    RatFun half = RatFun(1) / (RatFun(2) * c[2]);
    RatFun r1 = (-c[1] + root) * half;
    RatFun r2 = (-c[1] - root) * half;
    out.push_back(SolverPoly::variable(v) - SolverPoly::constant(r1));
    out.push_back(SolverPoly::variable(v) - SolverPoly::constant(r2));
    return true;
  }
  // only perfect powers of a single affine survive at higher degree
  RatFun shift = c[d - 1] / (RatFun(d) * c[d]);
  SolverPoly base = SolverPoly::variable(v) + SolverPoly::constant(shift);
  SolverPoly pow = SolverPoly::constant(c[d]);
  for (int k = 0; k < d; ++k) pow = pow * base;
  SolverPoly whole;
  for (int k = 0; k <= d; ++k) {
    SolverPoly t = SolverPoly::constant(c[k]);
    for (int e = 0; e < k; ++e) t = t * SolverPoly::variable(v);
    whole = whole + t;
  }
  if (!(pow == whole)) return false;
  for (int k = 0; k < d; ++k) out.push_back(base);
  return true;
}

// graded-lex greatest monomial, for the square-root recursion below
const Monomial* graded_lead(const SolverPoly& p) {
  const Monomial* best = nullptr;
  int bd = -1;
  for (const auto& [m, c] : p.terms()) {
    int d = monomial_degree(m);
    if (best == nullptr || d > bd || (d == bd && m > *best)) {
      best = &m;
      bd = d;
    }
  }
  return best;
}

// polynomial square root over the coefficient field, leading-term descent
bool poly_sqrt(const SolverPoly& p, SolverPoly& out) {
  if (p.is_zero()) {
    out = SolverPoly();
    return true;
  }
  const Monomial* lm = graded_lead(p);
  Monomial half;
  for (const auto& [v, e] : *lm) {
    if (e % 2 != 0) return false;
    half.emplace_back(v, e / 2);
  }
  RatFun lc;
  if (!p.terms().at(*lm).kth_root(2, lc)) return false;
  SolverPoly s;
  s.add_term(Monomial(half), lc);
  SolverPoly lead_term = s;
  for (;;) {
    SolverPoly r = p - s * s;
    if (r.is_zero()) {
      out = s;
      return true;
    }
    // each round cancels the current lead and only introduces strictly
    // smaller monomials, so the graded-lex lead descends and the loop ends
    const Monomial* lr = graded_lead(r);
    Monomial q;
    if (!divide_monomial(*lr, half, q)) return false;
    SolverPoly t;
    t.add_term(std::move(q), r.terms().at(*lr) / (RatFun(2) * lc));
    s = s + t;
  }
}

bool affine_pieces(const SolverPoly& p, std::vector<SolverPoly>& out) {
  std::vector<int> vs = p.variables();
  if (vs.empty()) return true;  // constant factor, dropped
  if (p.total_degree() == 1) {
    out.push_back(normalized(p));
    return true;
  }
  if (vs.size() == 1) return univariate_affine_factors(p, vs[0], out);
  for (int v : vs) {
    if (p.degree_in(v) != 1) continue;
    SolverPoly a = p.coefficient_of(v);
    SolverPoly b = p.drop_terms_with(v);
    auto q = exact_division(b, a);
    if (q && q->total_degree() <= 1) {
      out.push_back(SolverPoly::variable(v) + *q);
      return affine_pieces(a, out);
    }
  }
  int d = p.total_degree();
  // scalar multiple of a power of one affine form
  for (int v : vs) {
    if (p.degree_in(v) != d) continue;
    SolverPoly cd = p.coefficient_of_power(v, d);
    if (!cd.is_constant()) continue;
    SolverPoly shift = p.coefficient_of_power(v, d - 1).scaled(
        (RatFun(d) * cd.constant_term()).inverse());
    if (shift.total_degree() > 1) continue;
    SolverPoly base = SolverPoly::variable(v) + shift;
    SolverPoly pow = cd;
    for (int k = 0; k < d; ++k) pow = pow * base;
    if (pow == p) {
      out.push_back(base);
      return true;
    }
  }
  // quadratic in one unknown with scalar lead: split via the discriminant's
  // polynomial square root and recurse on both cofactors
  for (int v : vs) {
    if (p.degree_in(v) != 2) continue;
    SolverPoly a2 = p.coefficient_of_power(v, 2);
    if (!a2.is_constant()) continue;
    SolverPoly b1 = p.coefficient_of_power(v, 1);
    SolverPoly c0 = p.coefficient_of_power(v, 0);
    SolverPoly disc = b1 * b1 - a2 * c0 * SolverPoly::constant(RatFun(4));
    SolverPoly s;
    if (!poly_sqrt(disc, s)) continue;
    RatFun inv2a = (RatFun(2) * a2.constant_term()).inverse();
    SolverPoly f1 = SolverPoly::variable(v) + (b1 + s).scaled(inv2a);
    SolverPoly f2 = SolverPoly::variable(v) + (b1 - s).scaled(inv2a);
    std::vector<SolverPoly> sub;
    if (affine_pieces(f1, sub) && affine_pieces(f2, sub)) {
      out.insert(out.end(), sub.begin(), sub.end());
      return true;
    }
  }
  return false;
}

}  // namespace

bool affine_factorization(const SolverPoly& p, std::vector<SolverPoly>& out) {
  out.clear();
  if (p.is_zero()) return false;
  SolverPoly work = p;
  // peel monomial content one variable power at a time
  for (;;) {
    std::vector<int> vs = work.variables();
    int content = -1;
    for (int v : vs) {
      bool everywhere = true;
      for (const auto& [m, c] : work.terms()) {
        bool has = false;
        for (const auto& [vv, e] : m)
          if (vv == v) has = true;
        if (!has) {
          everywhere = false;
          break;
        }
      }
      if (everywhere) {
        content = v;
        break;
      }
    }
    if (content < 0) break;
    out.push_back(SolverPoly::variable(content));
    SolverPoly reduced;
    for (const auto& [m, c] : work.terms()) {
      Monomial mm;
      for (const auto& [vv, e] : m) {
        if (vv == content) {
          if (e > 1) mm.emplace_back(vv, e - 1);
        } else {
          mm.emplace_back(vv, e);
        }
      }
      reduced.add_term(std::move(mm), c);
    }
    work = std::move(reduced);
  }
  if (!affine_pieces(work, out)) {
    out.clear();
    return false;
  }
  return !out.empty();
}

}  // namespace superlsa
