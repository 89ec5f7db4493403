#include "bruhat/quasipoly.hpp"

#include <sstream>

namespace bruhat {

std::string UniPoly::to_string(const std::string& var) const {
  if (cs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = cs_.size(); i-- > 0;) {
    if (bruhat::is_zero(cs_[i])) continue;
    Rat a = cs_[i];
    if (first) {
      if (sgn(a) < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    if (a != 1 || i == 0) os << rat_to_string(a);
    if (i >= 1) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::string QuasiPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [a, p] = *it;
    if (!first) os << " + ";
    first = false;
    bool need_paren = p.coeffs().size() > 1 || !bruhat::is_zero(a);
    if (bruhat::is_zero(a)) {
      os << p.to_string(var);
    } else {
      if (need_paren) os << "(";
      os << p.to_string(var);
      if (need_paren) os << ")";
      os << "*exp(" << rat_to_string(a) << "*" << var << ")";
    }
  }
  return os.str();
}

QuasiPoly qp_integrate(const QuasiPoly& q, const Rat& shift) {
  QuasiPoly F;
  for (const auto& [a0, p] : q.terms()) {
    Rat a = a0 + shift;
    if (is_zero(a)) {
      F += QuasiPoly(p.antiderivative());
      continue;
    }
    // integral of p(c) e^{a c} = e^{a c} r(c) - r(0), r = sum (-1)^k p^(k) / a^{k+1}
    UniPoly r;
    UniPoly d = p;
    Rat inv_a = Rat(1) / a;
    Rat f = inv_a;
    int sign = 1;
    while (!d.is_zero()) {
      r = r + d * (sign > 0 ? f : -f);
      d = d.derivative();
      f *= inv_a;
      sign = -sign;
    }
    F += QuasiPoly::exponential(a, r);
    F += QuasiPoly(UniPoly(-r.coeff(0)));
  }
  return F;
}

}  // namespace bruhat
