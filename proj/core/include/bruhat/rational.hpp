#pragma once

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace bruhat {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

inline double to_double(const Rat& q) { return q.get_d(); }

// Canonical "p/q" (or "p" for integers).
inline std::string rat_to_string(const Rat& q) {
  std::string s = q.get_num().get_str();
  if (q.get_den() != 1) s += "/" + q.get_den().get_str();
  return s;
}

// Accepts "p", "-p/q", with optional surrounding whitespace.
inline std::optional<Rat> rat_parse(const std::string& text) {
  size_t b = text.find_first_not_of(" \t");
  size_t e = text.find_last_not_of(" \t");
  if (b == std::string::npos) return std::nullopt;
  std::string s = text.substr(b, e - b + 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

inline Rat rat_parse_or_throw(const std::string& text) {
  auto q = rat_parse(text);
  if (!q) throw std::invalid_argument("bad rational: '" + text + "'");
  return *q;
}

}  // namespace bruhat
