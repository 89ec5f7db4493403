#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "bruhat/rational.hpp"

namespace bruhat {

// Univariate polynomial in the flow parameter c, dense coefficient list.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Rat& c) {
    if (!bruhat::is_zero(c)) cs_.push_back(c);
  }
  static UniPoly c_var() { return UniPoly(std::vector<Rat>{Rat(0), Rat(1)}); }
  explicit UniPoly(std::vector<Rat> cs) : cs_(std::move(cs)) { trim(); }

  const std::vector<Rat>& coeffs() const { return cs_; }
  bool is_zero() const { return cs_.empty(); }
  int degree() const { return (int)cs_.size() - 1; }
  Rat coeff(int k) const { return k < (int)cs_.size() ? cs_[k] : Rat(0); }

  UniPoly operator+(const UniPoly& o) const {
    std::vector<Rat> r(std::max(cs_.size(), o.cs_.size()), Rat(0));
    for (size_t i = 0; i < cs_.size(); ++i) r[i] += cs_[i];
    for (size_t i = 0; i < o.cs_.size(); ++i) r[i] += o.cs_[i];
    return UniPoly(std::move(r));
  }
  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& c : r.cs_) c = -c;
    return r;
  }
  UniPoly operator-(const UniPoly& o) const { return *this + (-o); }
  UniPoly operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rat> r(cs_.size() + o.cs_.size() - 1, Rat(0));
    for (size_t i = 0; i < cs_.size(); ++i)
      for (size_t j = 0; j < o.cs_.size(); ++j) r[i + j] += cs_[i] * o.cs_[j];
    return UniPoly(std::move(r));
  }
  UniPoly operator*(const Rat& c) const {
    UniPoly r = *this;
    for (auto& x : r.cs_) x *= c;
    r.trim();
    return r;
  }
  bool operator==(const UniPoly& o) const { return cs_ == o.cs_; }

  UniPoly derivative() const {
    if (cs_.size() <= 1) return UniPoly();
    std::vector<Rat> r(cs_.size() - 1);
    for (size_t i = 1; i < cs_.size(); ++i) r[i - 1] = cs_[i] * Rat((long)i);
    return UniPoly(std::move(r));
  }
  UniPoly antiderivative() const {  // constant of integration 0
    if (is_zero()) return UniPoly();
    std::vector<Rat> r(cs_.size() + 1, Rat(0));
    for (size_t i = 0; i < cs_.size(); ++i) r[i + 1] = cs_[i] / Rat((long)(i + 1));
    return UniPoly(std::move(r));
  }
  Rat eval(const Rat& c) const {
    Rat acc(0);
    for (size_t i = cs_.size(); i-- > 0;) acc = acc * c + cs_[i];
    return acc;
  }
  double eval_double(double c) const {
    double acc = 0;
    for (size_t i = cs_.size(); i-- > 0;) acc = acc * c + to_double(cs_[i]);
    return acc;
  }
  std::string to_string(const std::string& var = "c") const;

 private:
  void trim() {
    while (!cs_.empty() && bruhat::is_zero(cs_.back())) cs_.pop_back();
  }
  std::vector<Rat> cs_;
};

// Finite sum q_k(c) e^{a_k c} with exact rational exponents a_k.
class QuasiPoly {
 public:
  QuasiPoly() = default;
  QuasiPoly(const Rat& c) {
    if (!bruhat::is_zero(c)) terms_[Rat(0)] = UniPoly(c);
  }
  QuasiPoly(const UniPoly& p) {
    if (!p.is_zero()) terms_[Rat(0)] = p;
  }
  static QuasiPoly exponential(const Rat& a, const UniPoly& coeff = UniPoly(Rat(1))) {
    QuasiPoly q;
    if (!coeff.is_zero()) q.terms_[a] = coeff;
    return q;
  }

  const std::map<Rat, UniPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_polynomial() const {
    return terms_.empty() || (terms_.size() == 1 && bruhat::is_zero(terms_.begin()->first));
  }
  UniPoly polynomial_part() const {
    auto it = terms_.find(Rat(0));
    return it == terms_.end() ? UniPoly() : it->second;
  }
  // Value at c = 0 (all exponentials are 1 there).
  Rat value_at_zero() const {
    Rat acc(0);
    for (const auto& [a, p] : terms_) acc += p.coeff(0);
    return acc;
  }

  QuasiPoly operator+(const QuasiPoly& o) const {
    QuasiPoly r = *this;
    for (const auto& [a, p] : o.terms_) r.add_term(a, p);
    return r;
  }
  QuasiPoly operator-() const {
    QuasiPoly r = *this;
    for (auto& [a, p] : r.terms_) p = -p;
    return r;
  }
  QuasiPoly operator-(const QuasiPoly& o) const { return *this + (-o); }
  QuasiPoly operator*(const QuasiPoly& o) const {
    QuasiPoly r;
    for (const auto& [a, p] : terms_)
      for (const auto& [b, q] : o.terms_) r.add_term(a + b, p * q);
    return r;
  }
  QuasiPoly operator*(const Rat& c) const {
    QuasiPoly r;
    for (const auto& [a, p] : terms_) r.add_term(a, p * c);
    return r;
  }
  QuasiPoly& operator+=(const QuasiPoly& o) { return *this = *this + o; }
  QuasiPoly& operator*=(const QuasiPoly& o) { return *this = *this * o; }
  bool operator==(const QuasiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const QuasiPoly& o) const { return !(*this == o); }

  QuasiPoly derivative() const {
    QuasiPoly r;
    for (const auto& [a, p] : terms_) {
      r.add_term(a, p.derivative() + p * a);
    }
    return r;
  }

  double eval_double(double c) const {
    double acc = 0;
    for (const auto& [a, p] : terms_) acc += p.eval_double(c) * std::exp(to_double(a) * c);
    return acc;
  }

  std::string to_string(const std::string& var = "c") const;

 private:
  void add_term(const Rat& a, const UniPoly& p) {
    if (p.is_zero()) return;
    auto it = terms_.find(a);
    if (it == terms_.end()) {
      terms_[a] = p;
    } else {
      it->second = it->second + p;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  std::map<Rat, UniPoly> terms_;
};

inline QuasiPoly operator*(const Rat& c, const QuasiPoly& q) { return q * c; }

// F with F(0) = 0 and F'(c) = q(c) e^{shift c}.
QuasiPoly qp_integrate(const QuasiPoly& q, const Rat& shift);

}  // namespace bruhat
