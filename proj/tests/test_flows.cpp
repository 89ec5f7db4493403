#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bruhat/flows.hpp"
#include "fixtures.hpp"

using namespace bruhat;

namespace {

Poly parse(const std::string& s, int nvars = 8) {
  auto p = Poly::parse(s, VarNames::xs(nvars));
  REQUIRE(p.has_value());
  return *p;
}

QuasiPoly qexp(const Rat& a) { return QuasiPoly::exponential(a); }
QuasiPoly qconst(const Rat& c) { return QuasiPoly(c); }
QuasiPoly qc() { return QuasiPoly(UniPoly::c_var()); }

std::vector<Rat> random_point(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  std::vector<Rat> x(n);
  for (int i = 0; i < n; ++i) {
    int a = num(rng);
    if (a == 0) a = 1;
    x[i] = rat(a, den(rng));
  }
  return x;
}

}  // namespace

TEST_CASE("triangular order for the A1 doubled-word Hamiltonian") {
  RootData rd = RootData::simple("A1", fixtures::a1_scale());
  auto sys = build_doubled_system(rd, WeylWord({1, 1}));
  BracketTable bt = compute_bracket_table(sys.spec, {});
  auto ord = find_triangular_order(sys.ys[0].poly, bt);
  REQUIRE(ord.has_value());
  // paper's order (x2, x3, x4, x1) with kappa (-1, 1, 0, 0), f (0, 0, -x2, x3)
  CHECK(ord->order == std::vector<int>{1, 2, 3, 0});
  CHECK(ord->kappa == std::vector<Rat>{Rat(-1), Rat(1), Rat(0), Rat(0)});
  CHECK(ord->f[0].is_zero());
  CHECK(ord->f[1].is_zero());
  CHECK(ord->f[2] == parse("-x2", 4));
  CHECK(ord->f[3] == parse("x3", 4));
}

TEST_CASE("log-canonical Hamiltonians order trivially") {
  RootData rd = RootData::simple("A1", fixtures::a1_scale());
  auto sys = build_doubled_system(rd, WeylWord({1, 1}));
  BracketTable bt = compute_bracket_table(sys.spec, {});
  // y_2 = y^{omega}_{[1,4]} is log-canonical with every coordinate
  auto ord = find_triangular_order(sys.ys[1].poly, bt);
  REQUIRE(ord.has_value());
  for (const auto& f : ord->f) CHECK(f.is_zero());
}

TEST_CASE("A1 doubled n=2 flows match gamma_1 and gamma_2") {
  RootData rd = RootData::simple("A1", fixtures::a1_scale());
  auto sys = build_doubled_system(rd, WeylWord({1, 1}));
  BracketTable bt = compute_bracket_table(sys.spec, {});

  SUBCASE("gamma_1, y_1 != 0 branch") {
    std::vector<Rat> p = {Rat(2), Rat(3), Rat(1), Rat(5)};  // y1 = 3*1-1 = 2
    Rat y1(2);
    FlowCurve cur = flow_interval_minor(sys.spec, bt, sys.ys[0], p);
    CHECK(cur.y0 == y1);
    // (x1 + x3(e^{c y1}-1)/y1, e^{-c y1} x2, e^{c y1} x3, x4 + x2(e^{-c y1}-1)/y1)
    CHECK(cur.coords[0] ==
          qconst(p[0]) + (qexp(y1) - qconst(Rat(1))) * (p[2] / y1));
    CHECK(cur.coords[1] == qexp(-y1) * p[1]);
    CHECK(cur.coords[2] == qexp(y1) * p[2]);
    CHECK(cur.coords[3] ==
          qconst(p[3]) + (qexp(-y1) - qconst(Rat(1))) * (p[1] / y1));
    CHECK(flow_satisfies_field(cur, sys.ys[0].poly, bt));
    CHECK(hamiltonian_constant(cur, sys.ys[0].poly, cur.y0));
  }
  SUBCASE("gamma_1, y_1 = 0 branch is polynomial") {
    std::vector<Rat> p = {Rat(2), Rat(3), rat(1, 3), Rat(5)};  // y1 = 0
    FlowCurve cur = flow_interval_minor(sys.spec, bt, sys.ys[0], p);
    CHECK(cur.y0 == Rat(0));
    CHECK(cur.coords[0] == qconst(p[0]) + qc() * p[2]);  // x1 + c x3
    CHECK(cur.coords[1] == qconst(p[1]));
    CHECK(cur.coords[2] == qconst(p[2]));
    CHECK(cur.coords[3] == qconst(p[3]) - qc() * p[1]);  // x4 - c x2
    CHECK(flow_satisfies_field(cur, sys.ys[0].poly, bt));
    CHECK(hamiltonian_constant(cur, sys.ys[0].poly, Rat(0)));
  }
  SUBCASE("gamma_2 is a pure exponential flow") {
    std::vector<Rat> p = {Rat(1), Rat(2), Rat(3), Rat(4)};
    Rat y2 = sys.ys[1].poly.eval_rat(p);
    FlowCurve cur = flow_interval_minor(sys.spec, bt, sys.ys[1], p);
    CHECK(cur.coords[0] == qexp(-y2) * p[0]);
    CHECK(cur.coords[1] == qexp(y2) * p[1]);
    CHECK(cur.coords[2] == qexp(-y2) * p[2]);
    CHECK(cur.coords[3] == qexp(y2) * p[3]);
    CHECK(flow_satisfies_field(cur, sys.ys[1].poly, bt));
  }
}

TEST_CASE("G2 flows match the printed formulas") {
  RootData rd = RootData::simple("G2");
  auto sys = build_doubled_system(rd, WeylWord({2, 1, 2}));
  BracketTable bt = compute_bracket_table(sys.spec, {});

  SUBCASE("phi_1 with y_1 != 0") {
    std::vector<Rat> p = {Rat(1), Rat(2), Rat(1), Rat(2), Rat(1), Rat(3)};  // y1 = 1
    Rat y1 = sys.ys[0].poly.eval_rat(p);
    REQUIRE(y1 == Rat(1));
    FlowCurve cur = flow_interval_minor(sys.spec, bt, sys.ys[0], p);
    // x1 + x2^3 x4 (e^{6 c y1} - 1)/y1
    QuasiPoly expect0 = qconst(p[0]) + (qexp(Rat(6) * y1) - qconst(Rat(1))) *
                                           (p[1] * p[1] * p[1] * p[3] / y1);
    CHECK(cur.coords[0] == expect0);
    CHECK(cur.coords[1] == qconst(p[1]));
    CHECK(cur.coords[2] == qexp(Rat(-6) * y1) * p[2]);
    CHECK(cur.coords[3] == qexp(Rat(6) * y1) * p[3]);
    CHECK(cur.coords[4] == qconst(p[4]));
    // x6 + x3 x5^3 (e^{-6 c y1} - 1)/y1
    QuasiPoly expect5 = qconst(p[5]) + (qexp(Rat(-6) * y1) - qconst(Rat(1))) *
                                           (p[2] * p[4] * p[4] * p[4] / y1);
    CHECK(cur.coords[5] == expect5);
    CHECK(flow_satisfies_field(cur, sys.ys[0].poly, bt));
    CHECK(hamiltonian_constant(cur, sys.ys[0].poly, cur.y0));
  }
  SUBCASE("phi_1 with y_1 = 0") {
    std::vector<Rat> p = {Rat(1), Rat(2), Rat(1), Rat(1), Rat(1), Rat(3)};  // x3x4 = 1
    FlowCurve cur = flow_interval_minor(sys.spec, bt, sys.ys[0], p);
    CHECK(cur.coords[0] == qconst(p[0]) + qc() * (Rat(6) * p[1] * p[1] * p[1] * p[3]));
    CHECK(cur.coords[5] == qconst(p[5]) - qc() * (Rat(6) * p[2] * p[4] * p[4] * p[4]));
    CHECK(flow_satisfies_field(cur, sys.ys[0].poly, bt));
  }
  SUBCASE("phi_2: exponents (-2, -6, 6, 2) y_2 on (x2, x3, x4, x5)") {
    std::vector<Rat> p = {Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6)};
    Rat y2 = sys.ys[1].poly.eval_rat(p);
    FlowCurve cur = flow_interval_minor(sys.spec, bt, sys.ys[1], p);
    CHECK(cur.coords[0] == qconst(p[0]));
    CHECK(cur.coords[1] == qexp(Rat(-2) * y2) * p[1]);
    CHECK(cur.coords[2] == qexp(Rat(-6) * y2) * p[2]);
    CHECK(cur.coords[3] == qexp(Rat(6) * y2) * p[3]);
    CHECK(cur.coords[4] == qexp(Rat(2) * y2) * p[4]);
    CHECK(cur.coords[5] == qconst(p[5]));
  }
  SUBCASE("phi_3: exponents (-6, -6, -12, 12, 6, 6) y_3") {
    std::vector<Rat> p = {Rat(1), Rat(1), Rat(2), Rat(1), Rat(1), Rat(2)};
    Rat y3 = sys.ys[2].poly.eval_rat(p);
    REQUIRE(!is_zero(y3));
    FlowCurve cur = flow_interval_minor(sys.spec, bt, sys.ys[2], p);
    std::vector<Rat> ex = {Rat(-6), Rat(-6), Rat(-12), Rat(12), Rat(6), Rat(6)};
    for (int j = 0; j < 6; ++j) CHECK(cur.coords[j] == qexp(ex[j] * y3) * p[j]);
  }
}

TEST_CASE("A2 dressed flows phi_1, phi_3, phi_5") {
  RootData rd = RootData::simple("A2");
  auto sys = build_doubled_system(rd, WeylWord({1, 2, 1}));
  BracketTable bt = compute_bracket_table(sys.spec, {});
  // KZ Hamiltonians M1 = b, M3 = a, M5 = a b^{-1} (x3 x4 - 1)
  TorusDressed M1{{0, 1}, Poly(Rat(1))};
  TorusDressed M3{{1, 0}, Poly(Rat(1))};
  TorusDressed M5{{1, -1}, parse("x3*x4 - 1", 6)};

  std::vector<Rat> x = {Rat(2), Rat(3), Rat(1), Rat(4), Rat(2), Rat(5)};
  std::vector<Rat> t = {Rat(3), Rat(2)};  // (a, b)

  SUBCASE("phi_1: only x2, x3 (damped) and x4, x5 (amplified) move") {
    DressedFlow fl = flow_dressed(sys.spec, bt, M1, x, t);
    Rat m = Rat(2);  // M1 = b
    CHECK(fl.curve.y0 == m);
    CHECK(fl.curve.coords[0] == qconst(x[0]));
    CHECK(fl.curve.coords[1] == qexp(-m) * x[1]);
    CHECK(fl.curve.coords[2] == qexp(-m) * x[2]);
    CHECK(fl.curve.coords[3] == qexp(m) * x[3]);
    CHECK(fl.curve.coords[4] == qexp(m) * x[4]);
    CHECK(fl.curve.coords[5] == qconst(x[5]));
    CHECK(fl.curve.coords[6] == qconst(t[0]));  // a fixed
    CHECK(fl.curve.coords[7] == qconst(t[1]));  // b fixed
  }
  SUBCASE("phi_3: x1, x2 damped; x5, x6 amplified") {
    DressedFlow fl = flow_dressed(sys.spec, bt, M3, x, t);
    Rat m = Rat(3);  // M3 = a
    CHECK(fl.curve.coords[0] == qexp(-m) * x[0]);
    CHECK(fl.curve.coords[1] == qexp(-m) * x[1]);
    CHECK(fl.curve.coords[2] == qconst(x[2]));
    CHECK(fl.curve.coords[3] == qconst(x[3]));
    CHECK(fl.curve.coords[4] == qexp(m) * x[4]);
    CHECK(fl.curve.coords[5] == qexp(m) * x[5]);
  }
  SUBCASE("phi_5 with M5 != 0: the two cascade coordinates") {
    // M5(p) = a b^{-1} (x3 x4 - 1) = 3/2 * 3
    Rat m = t[0] / t[1] * (x[2] * x[3] - 1);
    DressedFlow fl = flow_dressed(sys.spec, bt, M5, x, t);
    CHECK(fl.curve.y0 == m);
    Rat ab = t[0] / t[1];
    // x1 e^{-cM5} + a b^{-1} x2 x4 (e^{cM5} - e^{-cM5})/M5
    QuasiPoly e1 = qexp(-m) * x[0] + (qexp(m) - qexp(-m)) * (ab * x[1] * x[3] / m);
    CHECK(fl.curve.coords[0] == e1);
    CHECK(fl.curve.coords[1] == qconst(x[1]));
    CHECK(fl.curve.coords[2] == qexp(-m) * x[2]);
    CHECK(fl.curve.coords[3] == qexp(m) * x[3]);
    CHECK(fl.curve.coords[4] == qconst(x[4]));
    QuasiPoly e6 = qexp(m) * x[5] + (qexp(-m) - qexp(m)) * (ab * x[2] * x[4] / m);
    CHECK(fl.curve.coords[5] == e6);
    CHECK(fl.curve.coords[6] == qconst(t[0]));
    CHECK(fl.curve.coords[7] == qconst(t[1]));
  }
  SUBCASE("phi_5 with M5 = 0 is polynomial") {
    std::vector<Rat> x0 = {Rat(2), Rat(3), Rat(1), Rat(1), Rat(2), Rat(5)};  // x3x4 = 1
    DressedFlow fl = flow_dressed(sys.spec, bt, M5, x0, t);
    Rat ab = t[0] / t[1];
    CHECK(fl.curve.coords[0] == qconst(x0[0]) + qc() * (Rat(2) * ab * x0[1] * x0[3]));
    CHECK(fl.curve.coords[5] == qconst(x0[5]) - qc() * (Rat(2) * ab * x0[2] * x0[4]));
  }
}

TEST_CASE("flow identities for random interval minors") {
  std::mt19937_64 rng(61);
  std::vector<CellSpec> specs = {fixtures::a1_chain(4),
                                 CellSpec::make("A2", WeylWord({1, 2, 1, 1, 2, 1}))};
  for (const auto& spec : specs) {
    BracketTable bt = compute_bracket_table(spec, {});
    int n = spec.dim();
    std::uniform_int_distribution<int> co(0, 2), idx(1, n);
    for (int t = 0; t < 8; ++t) {
      int i = idx(rng), j = idx(rng);
      if (i > j) std::swap(i, j);
      Weight lam = Weight::zero(spec.rd.rank());
      for (int k = 0; k < spec.rd.rank(); ++k) lam.c[k] = Rat(co(rng));
      IntervalMinor y = y_interval(spec, lam, i, j);
      auto p = random_point(n, rng);
      FlowCurve cur = flow_interval_minor(spec, bt, y, p);
      CHECK(flow_satisfies_field(cur, y.poly, bt));
      CHECK(hamiltonian_constant(cur, y.poly, cur.y0));
      // evaluation at c = 0 recovers the base point
      for (int v = 0; v < n; ++v) CHECK(cur.coords[v].value_at_zero() == p[v]);
    }
  }
}

TEST_CASE("numeric cross-check of closed forms") {
  RootData rd = RootData::simple("A2");
  auto sys = build_doubled_system(rd, WeylWord({1, 2, 1}));
  BracketTable bt = compute_bracket_table(sys.spec, {});
  std::mt19937_64 rng(67);
  for (int t = 0; t < 3; ++t) {
    auto p = random_point(6, rng);
    FlowCurve cur = flow_interval_minor(sys.spec, bt, sys.ys[0], p);
    auto res = numeric_check(cur, bt, sys.ys[0].poly);
    CHECK(res.integrator_ok);
    CHECK(res.max_deviation < 1e-8);
    CHECK(res.max_drift < 1e-8);
  }
  SUBCASE("constant Hamiltonian has zero deviation") {
    FlowCurve cur;
    cur.base = {Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6)};
    for (const auto& b : cur.base) cur.coords.push_back(QuasiPoly(b));
    cur.y0 = Rat(7);
    auto res = numeric_check(cur, bt, Poly(Rat(7)));
    CHECK(res.max_deviation == 0.0);
  }
}

TEST_CASE("localized flows track 1/g") {
  RootData rd = RootData::simple("A1", fixtures::a1_scale());
  auto sys = build_doubled_system(rd, WeylWord({1, 1}));
  BracketTable bt = compute_bracket_table(sys.spec, {});
  std::vector<Rat> p = {Rat(2), Rat(3), Rat(1), Rat(5)};
  FlowCurve cur = flow_interval_minor(sys.spec, bt, sys.ys[0], p);
  // g = product of the full-interval minors; {y, g} = kappa y g by co-y-f
  Poly g = y_full(sys.spec, Weight::fundamental(1, 0));
  auto lc = check_log_canonical_pair(sys.ys[0].poly, g, bt);
  REQUIRE(lc.is_log_canonical);
  FlowCurve loc = localized_flow(cur, g, lc.coefficient, p);
  REQUIRE(loc.inv_g.has_value());
  // 1/g along the curve equals the tracked exponential
  QuasiPoly along = g.eval<QuasiPoly>(loc.coords);
  CHECK(along * *loc.inv_g == QuasiPoly(Rat(1)));
  CHECK_THROWS_AS(localized_flow(cur, Poly::var(0) - Poly(p[0]), Rat(0), p),
                  std::domain_error);

  SUBCASE("kappa = 0 keeps 1/g constant") {
    FlowCurve c2 = flow_interval_minor(sys.spec, bt, sys.ys[1], p);
    auto lc2 = check_log_canonical_pair(sys.ys[1].poly, sys.ys[0].poly, bt);
    REQUIRE(lc2.is_log_canonical);
    REQUIRE(lc2.coefficient == Rat(0));
    FlowCurve loc2 = localized_flow(c2, sys.ys[0].poly, lc2.coefficient, p);
    CHECK(*loc2.inv_g == QuasiPoly(Rat(1) / sys.ys[0].poly.eval_rat(p)));
  }
}

TEST_CASE("commuting flows compose in either order") {
  RootData rd = RootData::simple("A1", fixtures::a1_scale());
  auto sys = build_doubled_system(rd, WeylWord({1, 1}));
  BracketTable bt = compute_bracket_table(sys.spec, {});

  SUBCASE("exact composition on the polynomial branch") {
    // both Hamiltonians vanish at p: flows are polynomial with rational values
    // y1 = x2x3 - 1, y2 = E_4; pick x2x3 = 1 and E_4 = 0
    std::vector<Rat> p = {Rat(1), Rat(2), rat(1, 2), Rat(-2)};
    REQUIRE(sys.ys[0].poly.eval_rat(p) == Rat(0));
    REQUIRE(sys.ys[1].poly.eval_rat(p) == Rat(0));
    Rat c1(5, 3), c2(-7, 2);
    auto flow_then = [&](const IntervalMinor& first, const Rat& cf,
                         const IntervalMinor& second, const Rat& cs) {
      FlowCurve f1 = flow_interval_minor(sys.spec, bt, first, p);
      std::vector<Rat> mid(4);
      for (int j = 0; j < 4; ++j) {
        REQUIRE(f1.coords[j].is_polynomial());
        mid[j] = f1.coords[j].polynomial_part().eval(cf);
      }
      FlowCurve f2 = flow_interval_minor(sys.spec, bt, second, mid);
      std::vector<Rat> out(4);
      for (int j = 0; j < 4; ++j) {
        REQUIRE(f2.coords[j].is_polynomial());
        out[j] = f2.coords[j].polynomial_part().eval(cs);
      }
      return out;
    };
    auto ab = flow_then(sys.ys[0], c1, sys.ys[1], c2);
    auto ba = flow_then(sys.ys[1], c2, sys.ys[0], c1);
    CHECK(ab == ba);
  }
  SUBCASE("numeric composition at a generic point") {
    std::vector<Rat> p = {Rat(2), Rat(3), Rat(1), Rat(5)};
    double c1 = 0.7, c2 = -0.4;
    std::vector<double> pd(4);
    for (int j = 0; j < 4; ++j) pd[j] = to_double(p[j]);
    auto a = integrate_hamiltonian(bt, sys.ys[0].poly, pd, c1);
    a = integrate_hamiltonian(bt, sys.ys[1].poly, a, c2);
    auto b = integrate_hamiltonian(bt, sys.ys[1].poly, pd, c2);
    b = integrate_hamiltonian(bt, sys.ys[0].poly, b, c1);
    for (int j = 0; j < 4; ++j) CHECK(std::abs(a[j] - b[j]) < 1e-8);
  }
}
