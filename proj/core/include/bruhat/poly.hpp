#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bruhat/rational.hpp"

namespace bruhat {

// Exponent vector with trailing zeros trimmed. Term order is graded lex,
// largest first in the term list, which fixes the canonical text form.
struct Monomial {
  std::vector<int32_t> e;

  Monomial() = default;
  explicit Monomial(std::vector<int32_t> exps) : e(std::move(exps)) { trim(); }
  static Monomial var(int i, int32_t k = 1) {
    Monomial m;
    if (k != 0) {
      m.e.assign(i + 1, 0);
      m.e[i] = k;
    }
    return m;
  }

  void trim() {
    while (!e.empty() && e.back() == 0) e.pop_back();
  }
  bool is_one() const { return e.empty(); }
  int32_t deg(int i) const { return i < (int)e.size() ? e[i] : 0; }
  int32_t total_degree() const {
    int32_t d = 0;
    for (auto v : e) d += v;
    return d;
  }
  int max_var() const { return (int)e.size(); }  // vars used are < max_var()

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    r.e.resize(std::max(e.size(), o.e.size()), 0);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i];
    for (size_t i = 0; i < o.e.size(); ++i) r.e[i] += o.e[i];
    return r;
  }
  bool divides(const Monomial& o) const {
    if (e.size() > o.e.size()) return false;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  Monomial divide(const Monomial& o) const {  // *this / o, assumes o.divides(*this)
    Monomial r;
    r.e = e;
    for (size_t i = 0; i < o.e.size(); ++i) r.e[i] -= o.e[i];
    r.trim();
    return r;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
};

// "Larger" terms print first: higher total degree, then lex on exponents.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    size_t n = std::max(a.e.size(), b.e.size());
    for (size_t i = 0; i < n; ++i) {
      int32_t ea = a.deg((int)i), eb = b.deg((int)i);
      if (ea != eb) return ea > eb;
    }
    return false;
  }
};

// Names used when printing / parsing polynomials.
struct VarNames {
  std::vector<std::string> names;
  const std::string& at(int i) const { return names.at(i); }
  int index_of(const std::string& s) const {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return (int)i;
    return -1;
  }
  static VarNames xs(int n, int start = 1);  // x<start>, ..., x<start+n-1>
};

class Poly {
 public:
  using Term = std::pair<Monomial, Rat>;

  Poly() = default;
  Poly(const Rat& c) {
    if (!bruhat::is_zero(c)) terms_.push_back({Monomial{}, c});
  }
  Poly(long c) : Poly(Rat(c)) {}
  static Poly var(int i) { return monomial_term(Monomial::var(i), Rat(1)); }
  static Poly monomial_term(Monomial m, Rat c) {
    Poly p;
    if (!bruhat::is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  Rat constant_value() const;  // requires is_constant()
  int32_t total_degree() const;
  int32_t deg_in(int var) const;
  int max_var() const;
  size_t num_terms() const { return terms_.size(); }
  const Rat& leading_coeff() const { return terms_.front().second; }
  const Monomial& leading_monomial() const { return terms_.front().first; }
  Rat coeff_of(const Monomial& m) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly operator*(const Rat& c) const;
  Poly operator/(const Rat& c) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(int k) const;
  Poly derivative(int var) const;

  // Substitute values for all variables; R needs +, *, and construction from Rat.
  template <class R>
  R eval(std::span<const R> args) const {
    R acc = R(Rat(0));
    for (const auto& [m, c] : terms_) {
      R t = R(c);
      for (int i = 0; i < (int)m.e.size(); ++i) {
        for (int32_t k = 0; k < m.e[i]; ++k) t = t * args[i];
      }
      acc = acc + t;
    }
    return acc;
  }
  Rat eval_rat(std::span<const Rat> args) const;
  double eval_double(std::span<const double> args) const;
  // Substitute variable i -> subs[i] (polynomials).
  Poly substitute(std::span<const Poly> subs) const;

  // Integer-primitive associate: divides out rational content, leading coeff > 0.
  Rat content() const;  // such that (*this)/content() has coprime integer coeffs, positive lead
  Poly primitive() const;

  std::string to_string(const VarNames& vars) const;
  static std::optional<Poly> parse(const std::string& text, const VarNames& vars);

  // Exact division; nullopt if o does not divide *this.
  std::optional<Poly> divided_by(const Poly& o) const;

  static Poly gcd(const Poly& a, const Poly& b);

 private:
  std::vector<Term> terms_;  // sorted by MonomialOrder, no zero coefficients
  friend Poly poly_from_map(std::map<Monomial, Rat, MonomialOrder>&& m);
};

Poly poly_from_map(std::map<Monomial, Rat, MonomialOrder>&& m);

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

// Univariate view of p in variable `var`: coefficient polys, index = power.
std::vector<Poly> univar_coeffs(const Poly& p, int var);
Poly from_univar_coeffs(const std::vector<Poly>& cs, int var);

}  // namespace bruhat
