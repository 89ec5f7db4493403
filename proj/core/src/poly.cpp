#include "bruhat/poly.hpp"

#include <cassert>
#include <cctype>
#include <random>
#include <sstream>
#include <stdexcept>

namespace bruhat {

VarNames VarNames::xs(int n, int start) {
  VarNames v;
  for (int i = 0; i < n; ++i) v.names.push_back("x" + std::to_string(start + i));
  return v;
}

Poly poly_from_map(std::map<Monomial, Rat, MonomialOrder>&& m) {
  Poly p;
  p.terms_.reserve(m.size());
  for (auto& [mon, c] : m)
    if (!is_zero(c)) p.terms_.push_back({mon, c});
  return p;
}

Rat Poly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  return terms_[0].second;
}

int32_t Poly::total_degree() const {
  int32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

int32_t Poly::deg_in(int var) const {
  int32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.deg(var));
  return d;
}

int Poly::max_var() const {
  int v = 0;
  for (const auto& [m, c] : terms_) v = std::max(v, m.max_var());
  return v;
}

Rat Poly::coeff_of(const Monomial& m) const {
  for (const auto& [mm, c] : terms_)
    if (mm == m) return c;
  return Rat(0);
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  MonomialOrder lt;
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].first == o.terms_[j].first) {
      Rat c = terms_[i].second + o.terms_[j].second;
      if (!bruhat::is_zero(c)) r.terms_.push_back({terms_[i].first, c});
      ++i, ++j;
    } else if (lt(terms_[i].first, o.terms_[j].first)) {
      r.terms_.push_back(terms_[i++]);
    } else {
      r.terms_.push_back(o.terms_[j++]);
    }
  }
  while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
  while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::map<Monomial, Rat, MonomialOrder> acc;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma * mb;
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(std::move(m), ca * cb);
      else
        it->second += ca * cb;
    }
  return poly_from_map(std::move(acc));
}

Poly Poly::operator*(const Rat& c) const {
  if (bruhat::is_zero(c)) return Poly();
  Poly r = *this;
  for (auto& [m, cc] : r.terms_) cc *= c;
  return r;
}

Poly Poly::operator/(const Rat& c) const {
  if (bruhat::is_zero(c)) throw std::domain_error("Poly: divide by zero scalar");
  return *this * (Rat(1) / c);
}

Poly Poly::pow(int k) const {
  Poly r(Rat(1));
  Poly b = *this;
  while (k > 0) {
    if (k & 1) r *= b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

Poly Poly::derivative(int var) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    int32_t k = m.deg(var);
    if (k == 0) continue;
    Monomial mm = m;
    mm.e[var] -= 1;
    mm.trim();
    r += Poly::monomial_term(mm, c * Rat(k));
  }
  return r;
}

Rat Poly::eval_rat(std::span<const Rat> args) const {
  Rat acc(0);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < (int)m.e.size(); ++i)
      for (int32_t k = 0; k < m.e[i]; ++k) t *= args[i];
    acc += t;
  }
  return acc;
}

double Poly::eval_double(std::span<const double> args) const {
  double acc = 0;
  for (const auto& [m, c] : terms_) {
    double t = to_double(c);
    for (int i = 0; i < (int)m.e.size(); ++i)
      for (int32_t k = 0; k < m.e[i]; ++k) t *= args[i];
    acc += t;
  }
  return acc;
}

Poly Poly::substitute(std::span<const Poly> subs) const {
  Poly acc;
  for (const auto& [m, c] : terms_) {
    Poly t(c);
    for (int i = 0; i < (int)m.e.size(); ++i)
      if (m.e[i] > 0) t *= subs[i].pow(m.e[i]);
    acc += t;
  }
  return acc;
}

Rat Poly::content() const {
  if (terms_.empty()) return Rat(1);
  mpz_class g = 0, l = 1;
  for (const auto& [m, c] : terms_) {
    mpz_class gg;
    mpz_gcd(gg.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    g = gg;
    mpz_class ll;
    mpz_lcm(ll.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    l = ll;
  }
  Rat c(g, l);
  c.canonicalize();
  if (sgn(leading_coeff()) < 0) c = -c;
  return c;
}

Poly Poly::primitive() const {
  if (terms_.empty()) return *this;
  return *this / content();
}

std::string Poly::to_string(const VarNames& vars) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = c;
    if (first) {
      if (sgn(a) < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    bool coeff_one = (a == 1);
    if (!coeff_one || m.is_one()) os << rat_to_string(a);
    bool need_star = !coeff_one && !m.is_one();
    bool first_var = true;
    for (int i = 0; i < (int)m.e.size(); ++i) {
      if (m.e[i] == 0) continue;
      if (need_star || !first_var) os << "*";
      need_star = false;
      first_var = false;
      os << vars.at(i);
      if (m.e[i] > 1) os << "^" << m.e[i];
    }
    first = false;
  }
  return os.str();
}

namespace {

// Minimal recursive-descent parser: +, -, *, ^, parentheses, rationals, names.
struct Parser {
  const std::string& s;
  const VarNames& vars;
  size_t pos = 0;
  bool ok = true;

  Parser(const std::string& str, const VarNames& v) : s(str), vars(v) {}

  void skip() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  Poly expr() {
    skip();
    bool neg = false;
    while (true) {
      if (eat('-')) neg = !neg;
      else if (eat('+')) continue;
      else break;
    }
    Poly acc = term();
    if (neg) acc = -acc;
    while (ok) {
      skip();
      if (pos >= s.size()) break;
      if (s[pos] == '+') {
        ++pos;
        acc += term();
      } else if (s[pos] == '-') {
        ++pos;
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }
  Poly term() {
    Poly acc = factor();
    while (ok) {
      skip();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        acc *= factor();
      } else if (pos < s.size() && (std::isalpha((unsigned char)s[pos]) || s[pos] == '(')) {
        acc *= factor();  // implicit product, e.g. "2x1"
      } else {
        break;
      }
    }
    return acc;
  }
  Poly factor() {
    Poly base = atom();
    skip();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      skip();
      size_t start = pos;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
      if (start == pos) {
        ok = false;
        return Poly();
      }
      base = base.pow(std::stoi(s.substr(start, pos - start)));
    }
    return base;
  }
  Poly atom() {
    skip();
    if (pos >= s.size()) {
      ok = false;
      return Poly();
    }
    if (s[pos] == '(') {
      ++pos;
      Poly p = expr();
      if (!eat(')')) ok = false;
      return p;
    }
    if (std::isdigit((unsigned char)s[pos])) {
      size_t start = pos;
      while (pos < s.size() && (std::isdigit((unsigned char)s[pos]) || s[pos] == '/')) ++pos;
      auto q = rat_parse(s.substr(start, pos - start));
      if (!q) {
        ok = false;
        return Poly();
      }
      return Poly(*q);
    }
    if (std::isalpha((unsigned char)s[pos])) {
      size_t start = pos;
      while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
      int idx = vars.index_of(s.substr(start, pos - start));
      if (idx < 0) {
        ok = false;
        return Poly();
      }
      return Poly::var(idx);
    }
    ok = false;
    return Poly();
  }
};

}  // namespace

std::optional<Poly> Poly::parse(const std::string& text, const VarNames& vars) {
  Parser p(text, vars);
  Poly r = p.expr();
  p.skip();
  if (!p.ok || p.pos != text.size()) return std::nullopt;
  return r;
}

std::optional<Poly> Poly::divided_by(const Poly& o) const {
  if (o.is_zero()) return std::nullopt;
  Poly rem = *this, quot;
  MonomialOrder lt;
  (void)lt;
  while (!rem.is_zero()) {
    const Monomial& lm = rem.leading_monomial();
    if (!o.leading_monomial().divides(lm)) return std::nullopt;
    Monomial q = lm.divide(o.leading_monomial());
    Rat qc = rem.leading_coeff() / o.leading_coeff();
    Poly qt = Poly::monomial_term(q, qc);
    quot += qt;
    rem -= qt * o;
  }
  return quot;
}

std::vector<Poly> univar_coeffs(const Poly& p, int var) {
  std::vector<Poly> cs((size_t)p.deg_in(var) + 1);
  for (const auto& [m, c] : p.terms()) {
    int32_t k = m.deg(var);
    Monomial mm = m;
    if (var < (int)mm.e.size()) {
      mm.e[var] = 0;
      mm.trim();
    }
    cs[k] += Poly::monomial_term(mm, c);
  }
  return cs;
}

Poly from_univar_coeffs(const std::vector<Poly>& cs, int var) {
  Poly r;
  for (size_t k = 0; k < cs.size(); ++k)
    r += cs[k] * Poly::monomial_term(Monomial::var(var, (int32_t)k), Rat(1));
  return r;
}

namespace {

// Content of p with respect to `var`: gcd of the coefficient polynomials.
Poly content_in(const Poly& p, int var) {
  auto cs = univar_coeffs(p, var);
  Poly g;
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : Poly::gcd(g, c);
    if (g.is_constant()) break;
  }
  return g.is_zero() ? Poly(Rat(1)) : g;
}

// Pseudo-remainder of a by b in `var` (deg_a >= deg_b >= 1 in var).
Poly prem(const Poly& a, const Poly& b, int var) {
  auto bc = univar_coeffs(b, var);
  int db = (int)bc.size() - 1;
  Poly blead = bc[db];
  Poly rem = a;
  int da = rem.deg_in(var);
  int steps = da - db + 1;
  for (int s = 0; s < steps && !rem.is_zero(); ++s) {
    int d = rem.deg_in(var);
    if (d < db) break;
    auto rc = univar_coeffs(rem, var);
    Poly rlead = rc[d];
    // rem = blead*rem - rlead * x^(d-db) * b
    rem = blead * rem - rlead * Poly::monomial_term(Monomial::var(var, d - db), Rat(1)) * b;
  }
  return rem;
}

std::vector<int> support_vars(const Poly& p) {
  std::vector<int> out;
  int mv = p.max_var();
  for (int i = 0; i < mv; ++i)
    if (p.deg_in(i) > 0) out.push_back(i);
  return out;
}

// Degree of gcd(a, b) in `var` after evaluating all other variables at random
// points; -1 on degenerate evaluation (leading coefficient vanished).
int probe_gcd_degree(const Poly& a, const Poly& b, int var, std::mt19937_64& rng) {
  int mv = std::max(a.max_var(), b.max_var());
  std::vector<Rat> pt(mv);
  std::uniform_int_distribution<int> dist(2, 997);
  for (int i = 0; i < mv; ++i) pt[i] = Rat(dist(rng));
  auto univ_eval = [&](const Poly& p) {
    std::vector<Rat> cs((size_t)p.deg_in(var) + 1, Rat(0));
    for (const auto& [m, c] : p.terms()) {
      Rat t = c;
      for (int i = 0; i < (int)m.e.size(); ++i) {
        if (i == var) continue;
        for (int32_t k = 0; k < m.e[i]; ++k) t *= pt[i];
      }
      cs[m.deg(var)] += t;
    }
    return cs;
  };
  auto ua = univ_eval(a), ub = univ_eval(b);
  if (is_zero(ua.back()) || is_zero(ub.back())) return -1;
  // univariate gcd degree by Euclid
  auto deg = [](const std::vector<Rat>& v) {
    int d = (int)v.size() - 1;
    while (d >= 0 && is_zero(v[d])) --d;
    return d;
  };
  auto r0 = ua, r1 = ub;
  while (true) {
    int d1 = deg(r1);
    if (d1 < 0) return deg(r0);
    int d0 = deg(r0);
    if (d0 < d1) {
      std::swap(r0, r1);
      continue;
    }
    // r0 -= (lead0/lead1) x^(d0-d1) r1
    Rat f = r0[d0] / r1[d1];
    for (int i = 0; i <= d1; ++i) r0[i + d0 - d1] -= f * r1[i];
    r0[d0] = Rat(0);
  }
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return Poly(Rat(1));

  auto va = support_vars(a), vb = support_vars(b);
  std::vector<int> common;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
  if (common.empty()) return Poly(Rat(1));

  // main variable: smallest max degree across both
  int var = common[0];
  int best = std::max((int)a.deg_in(var), (int)b.deg_in(var));
  for (int v : common) {
    int d = std::max((int)a.deg_in(v), (int)b.deg_in(v));
    if (d < best) {
      best = d;
      var = v;
    }
  }

  Poly ca = content_in(a, var), cb = content_in(b, var);
  Poly cg = Poly::gcd(ca, cb);
  Poly pa = *a.divided_by(ca), pb = *b.divided_by(cb);

  static thread_local std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  int probe1 = probe_gcd_degree(pa, pb, var, rng);
  if (probe1 == 0) {
    int probe2 = probe_gcd_degree(pa, pb, var, rng);
    if (probe2 == 0) return cg.primitive();
  }

  // primitive PRS
  Poly r0 = pa, r1 = pb;
  if (r0.deg_in(var) < r1.deg_in(var)) std::swap(r0, r1);
  while (true) {
    if (r1.is_zero()) break;
    if (r1.deg_in(var) == 0) return cg.primitive();
    Poly r2 = prem(r0, r1, var);
    if (!r2.is_zero()) {
      Poly c2 = content_in(r2, var);
      r2 = *r2.divided_by(c2);
      r2 = r2.primitive();
    }
    r0 = r1;
    r1 = r2;
  }
  Poly g = (cg * r0).primitive();
  // prem-based PRS can pick up extraneous content; verify divisibility
  if (!a.divided_by(g) || !b.divided_by(g)) {
    Poly cr = content_in(r0, var);
    r0 = *r0.divided_by(cr);
    g = (cg * r0).primitive();
  }
  return g;
}

}  // namespace bruhat
