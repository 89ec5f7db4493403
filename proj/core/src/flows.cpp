#include "bruhat/flows.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace bruhat {

namespace {

// kappa and f with {y, x_k} = kappa x_k y + f and supp(f) within `placed`;
// nullopt if no rational kappa works.
std::optional<std::pair<Rat, Poly>> triangular_step(const Poly& y, int k,
                                                    const std::set<int>& placed,
                                                    const BracketTable& bt) {
  Poly P = poisson_bracket(y, Poly::var(k), bt);
  Poly Q = Poly::var(k) * y;
  auto supported = [&](const Poly& f) {
    for (const auto& [m, c] : f.terms())
      for (int i = 0; i < (int)m.e.size(); ++i)
        if (m.e[i] != 0 && !placed.count(i)) return false;
    return true;
  };
  if (supported(P)) return std::make_pair(Rat(0), P);
  if (Q.is_zero()) return std::nullopt;
  // every term of Q contains the unplaced x_k, so kappa is forced by matching
  // Q's leading monomial inside P
  Rat kappa = P.coeff_of(Q.leading_monomial()) / Q.leading_coeff();
  Poly f = P - Q * kappa;
  if (!supported(f)) return std::nullopt;
  return std::make_pair(kappa, f);
}

}  // namespace

std::optional<TriangularOrder> find_triangular_order(const Poly& y, const BracketTable& bt,
                                                     const std::vector<int>* preferred_order) {
  const int n = bt.n;
  if (preferred_order) {
    TriangularOrder ord;
    std::set<int> placed;
    bool ok = true;
    for (int k : *preferred_order) {
      auto step = triangular_step(y, k, placed, bt);
      if (!step) {
        ok = false;
        break;
      }
      ord.order.push_back(k);
      ord.kappa.push_back(step->first);
      ord.f.push_back(step->second);
      placed.insert(k);
    }
    if (ok && (int)ord.order.size() == n) return ord;
  }
  TriangularOrder ord;
  std::set<int> placed;
  for (int step = 0; step < n; ++step) {
    bool advanced = false;
    for (int k = 0; k < n && !advanced; ++k) {
      if (placed.count(k)) continue;
      auto s = triangular_step(y, k, placed, bt);
      if (!s) continue;
      ord.order.push_back(k);
      ord.kappa.push_back(s->first);
      ord.f.push_back(s->second);
      placed.insert(k);
      advanced = true;
    }
    if (!advanced) return std::nullopt;
  }
  return ord;
}

FlowCurve solve_cascade(const TriangularOrder& ord, std::span<const Rat> p, const Rat& y0) {
  const int n = (int)ord.order.size();
  FlowCurve out;
  out.base.assign(p.begin(), p.end());
  out.y0 = y0;
  out.coords.assign(n, QuasiPoly());
  for (int pos = 0; pos < n; ++pos) {
    int k = ord.order[pos];
    Rat rate = ord.kappa[pos] * y0;
    // x_k(c) = e^{rate c} ( p_k + int_0^c e^{-rate s} f(curves(s)) ds )
    QuasiPoly inner(p[k]);
    if (!ord.f[pos].is_zero()) {
      QuasiPoly f_eval = ord.f[pos].eval<QuasiPoly>(out.coords);
      inner = inner + qp_integrate(f_eval, -rate);
    }
    out.coords[k] = QuasiPoly::exponential(rate) * inner;
  }
  return out;
}

FlowCurve localized_flow(const FlowCurve& curve, const Poly& g, const Rat& kappa,
                         std::span<const Rat> p) {
  Rat gp = g.eval_rat(p);
  if (is_zero(gp)) throw std::domain_error("localized_flow: g vanishes at the base point");
  FlowCurve out = curve;
  out.inv_g = QuasiPoly::exponential(-kappa * curve.y0) * (Rat(1) / gp);
  return out;
}

FlowCurve flow_interval_minor(const CellSpec& spec, const BracketTable& bt,
                              const IntervalMinor& y, std::span<const Rat> p) {
  const int n = bt.n;
  // the shuffle from the completeness proof: x_i..x_j, x_{j+1}..x_n, x_{i-1}..x_1
  std::vector<int> preferred;
  for (int k = y.i; k <= y.j; ++k) preferred.push_back(k - 1);
  for (int k = y.j + 1; k <= n; ++k) preferred.push_back(k - 1);
  for (int k = y.i - 1; k >= 1; --k) preferred.push_back(k - 1);
  auto ord = find_triangular_order(y.poly, bt, &preferred);
  if (!ord) throw std::runtime_error("flow_interval_minor: no triangular order found");
  return solve_cascade(*ord, p, y.poly.eval_rat(p));
}

DressedFlow flow_dressed(const CellSpec& spec, const BracketTable& base, const TorusDressed& y,
                         std::span<const Rat> xpoint, std::span<const Rat> torus_point) {
  const RootData& rd = spec.rd;
  const int n = base.n, r = rd.rank();
  // extended table on (x, xi_1..xi_r, xi_0); xi_0 = (xi_1...xi_r)^{-1}
  BracketTable ext = torus_extension(base, rd);
  ext.n = n + r + 1;
  ext.var_names.push_back("xi0");
  Weight sum_omega = Weight::zero(r);
  for (int k = 0; k < r; ++k) sum_omega = sum_omega + Weight::fundamental(r, k);
  ext.weights.push_back(-sum_omega);
  for (int j = 0; j < n; ++j) {
    // {xi0, x_j} = +<sum omega, lambda_j> xi0 x_j, stored as {x_j, xi0}
    Rat c = -rd.pairing(sum_omega, base.weights[j]);
    ext.entries[{j, n + r}] =
        Poly::monomial_term(Monomial::var(j) * Monomial::var(n + r), c);
  }
  for (int k = 0; k < r; ++k) ext.entries[{n + k, n + r}] = Poly();

  // y as a polynomial: negative torus exponents via xi0 * prod_{l != k} xi_l
  Poly ypoly = y.body;
  for (int k = 0; k < r; ++k) {
    long e = y.texp[k];
    if (e >= 0) {
      ypoly = ypoly * Poly::monomial_term(Monomial::var(n + k, (int32_t)e), Rat(1));
    } else {
      Monomial m = Monomial::var(n + r, (int32_t)(-e));
      for (int l = 0; l < r; ++l)
        if (l != k) m = m * Monomial::var(n + l, (int32_t)(-e));
      ypoly = ypoly * Poly::monomial_term(m, Rat(1));
    }
  }

  std::vector<Rat> pt(xpoint.begin(), xpoint.end());
  Rat prod(1);
  for (int k = 0; k < r; ++k) {
    if (is_zero(torus_point[k])) throw std::domain_error("flow_dressed: torus point not in T");
    pt.push_back(torus_point[k]);
    prod *= torus_point[k];
  }
  pt.push_back(Rat(1) / prod);

  // torus coordinates are log-canonical with y, so place them first
  std::vector<int> preferred;
  for (int k = 0; k <= r; ++k) preferred.push_back(n + k);
  for (int j = 0; j < n; ++j) preferred.push_back(j);
  auto ord = find_triangular_order(ypoly, ext, &preferred);
  if (!ord) ord = find_triangular_order(ypoly, ext);
  if (!ord) throw std::runtime_error("flow_dressed: no triangular order found");
  FlowCurve full = solve_cascade(*ord, pt, ypoly.eval_rat(pt));

  DressedFlow out;
  out.n = n;
  out.r = r;
  out.xi0 = full.coords[n + r];
  out.curve.base.assign(pt.begin(), pt.end() - 1);
  out.curve.y0 = full.y0;
  out.curve.coords.assign(full.coords.begin(), full.coords.end() - 1);
  // the Casimir xi0 xi1...xir must stay 1
  QuasiPoly cas = out.xi0;
  for (int k = 0; k < r; ++k) cas = cas * full.coords[n + k];
  if (!(cas == QuasiPoly(Rat(1))))
    throw std::logic_error("flow_dressed: Casimir xi0*...*xir drifted");
  return out;
}

bool flow_satisfies_field(const FlowCurve& curve, const Poly& y, const BracketTable& bt) {
  for (int j = 0; j < (int)curve.coords.size(); ++j) {
    Poly hj = poisson_bracket(y, Poly::var(j), bt);
    QuasiPoly rhs = hj.eval<QuasiPoly>(curve.coords);
    if (!(curve.coords[j].derivative() == rhs)) return false;
  }
  return true;
}

bool hamiltonian_constant(const FlowCurve& curve, const Poly& y, const Rat& y0) {
  QuasiPoly val = y.eval<QuasiPoly>(curve.coords);
  return val == QuasiPoly(y0);
}

namespace {

// Dormand-Prince 5(4) with adaptive step.
struct Dopri {
  static constexpr double c2 = 1. / 5, c3 = 3. / 10, c4 = 4. / 5, c5 = 8. / 9;
  template <class F>
  static bool integrate(const F& field, std::vector<double>& x, double t0, double t1,
                        double tol, double* reached) {
    double t = t0;
    double h = (t1 > t0 ? 1 : -1) * std::max(1e-4, std::abs(t1 - t0) / 64);
    int n = (int)x.size();
    std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), xt(n), x5(n), x4(n);
    int guard = 0;
    while ((t1 - t) * (t1 > t0 ? 1 : -1) > 1e-15) {
      if (++guard > 200000) {
        *reached = t;
        return false;
      }
      if ((t1 > t0 && t + h > t1) || (t1 < t0 && t + h < t1)) h = t1 - t;
      field(x, k1);
      for (int i = 0; i < n; ++i) xt[i] = x[i] + h * (k1[i] / 5);
      field(xt, k2);
      for (int i = 0; i < n; ++i) xt[i] = x[i] + h * (3 * k1[i] / 40 + 9 * k2[i] / 40);
      field(xt, k3);
      for (int i = 0; i < n; ++i)
        xt[i] = x[i] + h * (44 * k1[i] / 45 - 56 * k2[i] / 15 + 32 * k3[i] / 9);
      field(xt, k4);
      for (int i = 0; i < n; ++i)
        xt[i] = x[i] + h * (19372 * k1[i] / 6561 - 25360 * k2[i] / 2187 + 64448 * k3[i] / 6561 -
                            212 * k4[i] / 729);
      field(xt, k5);
      for (int i = 0; i < n; ++i)
        xt[i] = x[i] + h * (9017 * k1[i] / 3168 - 355 * k2[i] / 33 + 46732 * k3[i] / 5247 +
                            49 * k4[i] / 176 - 5103 * k5[i] / 18656);
      field(xt, k6);
      for (int i = 0; i < n; ++i)
        x5[i] = x[i] + h * (35 * k1[i] / 384 + 500 * k3[i] / 1113 + 125 * k4[i] / 192 -
                            2187 * k5[i] / 6784 + 11 * k6[i] / 84);
      field(x5, k7);
      for (int i = 0; i < n; ++i)
        x4[i] = x[i] + h * (5179 * k1[i] / 57600 + 7571 * k3[i] / 16695 + 393 * k4[i] / 640 -
                            92097 * k5[i] / 339200 + 187 * k6[i] / 2100 + k7[i] / 40);
      double err = 0, scale = 0;
      for (int i = 0; i < n; ++i) {
        err = std::max(err, std::abs(x5[i] - x4[i]));
        scale = std::max(scale, std::abs(x5[i]));
      }
      double target = tol * std::max(1.0, scale);
      if (err <= target || std::abs(h) < 1e-13) {
        t += h;
        x = x5;
      }
      double f = err > 0 ? 0.9 * std::pow(target / err, 0.2) : 2.0;
      h *= std::clamp(f, 0.2, 5.0);
      if (std::abs(h) < 1e-14) {
        *reached = t;
        return false;
      }
    }
    *reached = t;
    return true;
  }
};

}  // namespace

std::vector<double> integrate_hamiltonian(const BracketTable& bt, const Poly& y,
                                          std::vector<double> p0, double c, double tol) {
  std::vector<Poly> H(bt.n);
  for (int j = 0; j < bt.n; ++j) H[j] = poisson_bracket(y, Poly::var(j), bt);
  auto field = [&](const std::vector<double>& x, std::vector<double>& dx) {
    for (int j = 0; j < bt.n; ++j) dx[j] = H[j].eval_double(x);
  };
  double reached;
  if (!Dopri::integrate(field, p0, 0, c, tol, &reached))
    throw std::runtime_error("integrate_hamiltonian: stiff integration failed at c = " +
                             std::to_string(reached));
  return p0;
}

NumericCheckResult numeric_check(const FlowCurve& curve, const BracketTable& bt, const Poly& y,
                                 double tmin, double tmax, double tol, int samples) {
  NumericCheckResult out;
  std::vector<Poly> H(bt.n);
  for (int j = 0; j < bt.n; ++j) H[j] = poisson_bracket(y, Poly::var(j), bt);
  auto field = [&](const std::vector<double>& x, std::vector<double>& dx) {
    for (int j = 0; j < bt.n; ++j) dx[j] = H[j].eval_double(x);
  };
  std::vector<double> p0(bt.n);
  for (int j = 0; j < bt.n; ++j) p0[j] = to_double(curve.base[j]);
  double y0 = to_double(curve.y0);

  for (int dir = 0; dir < 2; ++dir) {
    double end = dir == 0 ? tmax : tmin;
    std::vector<double> x = p0;
    double prev_c = 0;
    for (int s = 1; s <= samples; ++s) {
      double c = end * s / samples;
      double reached;
      if (!Dopri::integrate(field, x, prev_c, c, tol, &reached)) {
        out.integrator_ok = false;
        out.reached_c = reached;
        return out;
      }
      prev_c = c;
      out.reached_c = c;
      std::vector<double> closed(bt.n);
      for (int j = 0; j < bt.n; ++j) closed[j] = curve.coords[j].eval_double(c);
      for (int j = 0; j < bt.n; ++j)
        out.max_deviation = std::max(out.max_deviation, std::abs(closed[j] - x[j]));
      out.max_drift = std::max(out.max_drift, std::abs(y.eval_double(closed) - y0));
    }
  }
  return out;
}

}  // namespace bruhat
