#pragma once

#include <optional>
#include <vector>

#include "bruhat/bracket_table.hpp"
#include "bruhat/cells.hpp"
#include "bruhat/quasipoly.hpp"

namespace bruhat {

// Re-ordering of the coordinates under which the Hamiltonian y is triangular:
// {y, x~_j} = kappa_j x~_j y + f_j with f_j in the earlier coordinates only.
struct TriangularOrder {
  std::vector<int> order;   // 0-based coordinate indices
  std::vector<Rat> kappa;   // by order position
  std::vector<Poly> f;      // by order position, in original variable indices
};

std::optional<TriangularOrder> find_triangular_order(
    const Poly& y, const BracketTable& bt,
    const std::vector<int>* preferred_order = nullptr);

struct FlowCurve {
  std::vector<QuasiPoly> coords;  // by original coordinate index
  std::vector<Rat> base;
  Rat y0 = Rat(0);
  std::optional<QuasiPoly> inv_g;  // localized 1/g coordinate, when tracked
};

// Closed-form integral curve of H_y through p (y0 = y(p)).
FlowCurve solve_cascade(const TriangularOrder& ord, std::span<const Rat> p, const Rat& y0);

// Appends 1/g(gamma(c)) = e^{-kappa y0 c}/g(p); requires {y,g} = kappa y g.
FlowCurve localized_flow(const FlowCurve& curve, const Poly& g, const Rat& kappa,
                         std::span<const Rat> p);

// Flow of an interval minor y^lambda_{[i,j]} on O^u from a rational point.
FlowCurve flow_interval_minor(const CellSpec& spec, const BracketTable& bt,
                              const IntervalMinor& y, std::span<const Rat> p);

// Flow of a torus-dressed Hamiltonian on T x O^u. Torus point given by its
// fundamental character values (all nonzero). Returns curves for
// (x_1..x_n, xi_1..xi_r) in that variable order.
struct DressedFlow {
  FlowCurve curve;      // length n + r
  int n = 0, r = 0;
  QuasiPoly xi0;        // auxiliary coordinate, xi0 * xi1 * ... * xir = 1
};
DressedFlow flow_dressed(const CellSpec& spec, const BracketTable& base,
                         const TorusDressed& y, std::span<const Rat> xpoint,
                         std::span<const Rat> torus_point);

// d/dc gamma_j(c) == {y, x_j}(gamma(c)) as exact quasi-polynomial identities.
bool flow_satisfies_field(const FlowCurve& curve, const Poly& y, const BracketTable& bt);
// y(gamma(c)) == y0 exactly.
bool hamiltonian_constant(const FlowCurve& curve, const Poly& y, const Rat& y0);

struct NumericCheckResult {
  double max_deviation = 0;      // closed form vs adaptive RK
  double max_drift = 0;          // |y(gamma(c)) - y0| along the closed form
  double reached_c = 0;          // last c integrated (for failure reports)
  bool integrator_ok = true;
};
NumericCheckResult numeric_check(const FlowCurve& curve, const BracketTable& bt, const Poly& y,
                                 double tmin = -2, double tmax = 2, double tol = 1e-10,
                                 int samples = 17);

// Adaptive RK integration of xdot = {y, x} from p0 to time c (for tests).
std::vector<double> integrate_hamiltonian(const BracketTable& bt, const Poly& y,
                                          std::vector<double> p0, double c, double tol = 1e-12);

}  // namespace bruhat
