#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bruhat/poly.hpp"
#include "bruhat/rootdata.hpp"

namespace bruhat {

// Antisymmetric table of coordinate brackets {x_i, x_j} plus per-coordinate
// T-weights. Entries stored for i < j only (0-based).
struct BracketTable {
  int n = 0;
  std::vector<std::string> var_names;
  std::vector<Weight> weights;
  std::map<std::pair<int, int>, Poly> entries;

  std::string type_label;
  WeylWord word;
  Rat form_scale = Rat(1);
  std::string method;

  VarNames names() const {
    VarNames v;
    v.names = var_names;
    return v;
  }
  const Poly& stored_entry(int i, int j) const;  // i < j
  Poly bracket_of_vars(int i, int j) const;      // any order, antisymmetric
  bool operator==(const BracketTable& o) const {
    return n == o.n && entries == o.entries;
  }

  std::string to_json() const;
  static BracketTable from_json(const std::string& text);
};

// Biderivation extension of the table to arbitrary polynomials.
Poly poisson_bracket(const Poly& f, const Poly& g, const BracketTable& bt);

struct JacobiReport {
  bool ok = true;
  int i = -1, j = -1, k = -1;  // first violating triple (0-based) when !ok
  Poly violation;
};
JacobiReport jacobi_check(const BracketTable& bt);

Weight monomial_weight(const Monomial& m, std::span<const Weight> wts, int rank);
// weight if f is T-homogeneous, nullopt otherwise
std::optional<Weight> poly_weight(const Poly& f, std::span<const Weight> wts, int rank);
// every monomial of entry(i,j) has weight w_i + w_j
bool weight_homogeneous(const BracketTable& bt);

// --- exact black-box interpolation -------------------------------------------

struct InterpolateOptions {
  int initial_bound = 1;
  int max_bound = 8;
  int verify_points = 5;
  unsigned seed = 12345;
};

// Reconstructs the polynomial computed by an exact evaluator of total degree
// <= some bound, doubling the bound until verification at random points
// succeeds. Throws std::runtime_error for non-polynomial evaluators.
Poly interpolate_poly(const std::function<Rat(std::span<const Rat>)>& evaluator, int nvars,
                      const InterpolateOptions& opts = {});

// Lower-set interpolation core, exposed for batch callers.
// exponents: all m with |m| <= degree_bound, graded-lex ascending;
// node(m) = (grid[0][m_0], ..., grid[n-1][m_{n-1}]).
std::vector<std::vector<int32_t>> lower_set(int nvars, int degree_bound);
Poly newton_interpolate(const std::vector<std::vector<int32_t>>& exps,
                        const std::vector<std::vector<Rat>>& grid,
                        const std::function<Rat(size_t)>& value_of_node);

}  // namespace bruhat
