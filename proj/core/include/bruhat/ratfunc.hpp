#pragma once

#include <stdexcept>

#include "bruhat/poly.hpp"

namespace bruhat {

// Reduced fraction of polynomials; denominator integer-primitive with
// positive leading coefficient.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rat(1)) {}
  RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}
  RatFunc(const Poly& p) : num_(p), den_(Rat(1)) {}
  RatFunc(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    num_ = std::move(num);
    den_ = std::move(den);
    reduce();
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  Poly as_polynomial() const {  // requires is_polynomial()
    return num_ / den_.constant_value();
  }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  RatFunc operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
  RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
  RatFunc operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  bool operator==(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc derivative(int var) const {
    return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
  }

  Rat eval_rat(std::span<const Rat> args) const {
    Rat d = den_.eval_rat(args);
    if (bruhat::is_zero(d)) throw std::domain_error("RatFunc: pole at evaluation point");
    return num_.eval_rat(args) / d;
  }

  std::string to_string(const VarNames& vars) const {
    if (is_polynomial()) return as_polynomial().to_string(vars);
    return "(" + num_.to_string(vars) + ")/(" + den_.to_string(vars) + ")";
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = Poly(Rat(1));
      return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *num_.divided_by(g);
      den_ = *den_.divided_by(g);
    }
    Rat c = den_.content();
    num_ = num_ / c;
    den_ = den_ / c;
  }

  Poly num_, den_;
};

}  // namespace bruhat
