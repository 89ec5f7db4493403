#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bruhat/bracket_table.hpp"
#include "bruhat/poly.hpp"
#include "bruhat/quasipoly.hpp"
#include "bruhat/ratfunc.hpp"

using namespace bruhat;

namespace {

Poly parse(const std::string& s, int nvars = 6) {
  auto p = Poly::parse(s, VarNames::xs(nvars));
  REQUIRE(p.has_value());
  return *p;
}

Poly random_poly(std::mt19937_64& rng, int nvars, int maxdeg, int terms) {
  std::uniform_int_distribution<int> coeff(-5, 5), deg(0, maxdeg);
  Poly p;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    m.e.resize(nvars);
    for (int v = 0; v < nvars; ++v) m.e[v] = deg(rng) % 2 ? deg(rng) : 0;
    m.trim();
    p += Poly::monomial_term(m, Rat(coeff(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic and canonical text form") {
  VarNames vars = VarNames::xs(4);
  Poly x1 = Poly::var(0), x2 = Poly::var(1), x3 = Poly::var(2);
  Poly p = x1 * x3 - Rat(2) * x2;
  CHECK(p.to_string(vars) == "x1*x3 - 2*x2");
  CHECK(parse("x1*x3 - 2*x2", 4) == p);
  CHECK(parse("(x1 + x2)^2", 4) == x1 * x1 + Rat(2) * x1 * x2 + x2 * x2);
  CHECK((x1 - x1).is_zero());
  std::vector<Rat> pt = {Rat(1), Rat(2), Rat(3), Rat(0)};
  CHECK(p.eval_rat(pt) == Rat(-1));
  CHECK(p.derivative(0) == x3);
  CHECK(Poly(Rat(0)).to_string(vars) == "0");
  // structural equality is canonical-form equality
  CHECK(parse("x2*x1") == parse("x1*x2"));
}

TEST_CASE("exact division and gcd") {
  Poly x1 = Poly::var(0), x2 = Poly::var(1);
  Poly a = (x1 + x2) * (x1 - x2);
  CHECK(*a.divided_by(x1 + x2) == x1 - x2);
  CHECK(!a.divided_by(x1 + Poly(Rat(1))).has_value());
  Poly g = Poly::gcd(a, (x1 + x2) * x1);
  CHECK(a.divided_by(g).has_value());
  CHECK(g.total_degree() == 1);
  CHECK(Poly::gcd(x1 * x2, x1 * x1) == x1);
  CHECK(Poly::gcd(x1, x2).is_constant());
  Poly h = Poly::gcd((x1 + x2) * Rat(4), (x1 + x2) * Rat(6));
  CHECK(h == x1 + x2);
}

TEST_CASE("rational functions stay reduced") {
  Poly x1 = Poly::var(0), x2 = Poly::var(1);
  RatFunc f(x1 * x2 - Poly(Rat(1)), x1);
  RatFunc g(x1, Poly(Rat(1)));
  RatFunc s = f * g;
  CHECK(s.is_polynomial());
  CHECK(s.as_polynomial() == x1 * x2 - Poly(Rat(1)));
  RatFunc q = RatFunc(x1 * x1 - x2 * x2, x1 - x2);
  CHECK(q.is_polynomial());
  CHECK(q.as_polynomial() == x1 + x2);
  RatFunc d = RatFunc(Poly(Rat(1)), x1).derivative(0);
  CHECK(d == RatFunc(Poly(Rat(-1)), x1 * x1));
  CHECK_THROWS_AS(RatFunc(x1, Poly()), std::domain_error);
}

TEST_CASE("quasi-polynomial ring operations") {
  QuasiPoly e_c = QuasiPoly::exponential(Rat(1));
  QuasiPoly e_mc = QuasiPoly::exponential(Rat(-1));
  CHECK(e_c * e_mc == QuasiPoly(Rat(1)));

  // d/dc (c e^{2c}) = (1 + 2c) e^{2c}
  QuasiPoly ce2c = QuasiPoly::exponential(Rat(2), UniPoly::c_var());
  QuasiPoly expect =
      QuasiPoly::exponential(Rat(2), UniPoly(std::vector<Rat>{Rat(1), Rat(2)}));
  CHECK(ce2c.derivative() == expect);

  // (e^c + 1)^2 = e^{2c} + 2 e^c + 1
  QuasiPoly s = e_c + QuasiPoly(Rat(1));
  CHECK(s * s == QuasiPoly::exponential(Rat(2)) + e_c * Rat(2) + QuasiPoly(Rat(1)));

  CHECK(ce2c.value_at_zero() == Rat(0));
  CHECK(s.value_at_zero() == Rat(2));
}

TEST_CASE("quasi-polynomial integration") {
  // int_0^c e^{a s} ds = (e^{ac} - 1)/a
  Rat a(3, 2);
  QuasiPoly F = qp_integrate(QuasiPoly(Rat(1)), a);
  QuasiPoly expect = QuasiPoly::exponential(a) * (Rat(1) / a) + QuasiPoly(-Rat(1) / a);
  CHECK(F == expect);
  CHECK(F.value_at_zero() == Rat(0));

  // int_0^c 1 ds = c
  CHECK(qp_integrate(QuasiPoly(Rat(1)), Rat(0)) == QuasiPoly(UniPoly::c_var()));

  // resonant case raises the polynomial degree: int c e^{-c} * e^{c}
  QuasiPoly ce_minus = QuasiPoly::exponential(Rat(-1), UniPoly::c_var());
  QuasiPoly G = qp_integrate(ce_minus, Rat(1));
  CHECK(G == QuasiPoly(UniPoly(std::vector<Rat>{Rat(0), Rat(0), Rat(1, 2)})));

  // F' = integrand exactly
  QuasiPoly q = QuasiPoly::exponential(Rat(2, 3), UniPoly(std::vector<Rat>{Rat(1), Rat(4)})) +
                QuasiPoly(UniPoly::c_var());
  Rat shift(-5, 7);
  QuasiPoly Fq = qp_integrate(q, shift);
  CHECK(Fq.derivative() == q * QuasiPoly::exponential(shift));
  CHECK(Fq.value_at_zero() == Rat(0));
}

TEST_CASE("poisson bracket over an explicit table") {
  // A1 word (s,s): {x1,x2} = x1x2 - 1
  BracketTable bt;
  bt.n = 2;
  bt.var_names = {"x1", "x2"};
  bt.weights = {Weight(std::vector<Rat>{Rat(2)}), Weight(std::vector<Rat>{Rat(-2)})};
  bt.entries[{0, 1}] = parse("x1*x2 - 1", 2);
  Poly x1 = Poly::var(0), x2 = Poly::var(1);
  CHECK(poisson_bracket(x1, x1, bt).is_zero());
  CHECK(poisson_bracket(x1, x2, bt) == parse("x1*x2 - 1", 2));
  CHECK(poisson_bracket(x2, x1, bt) == -parse("x1*x2 - 1", 2));
  CHECK_THROWS_AS(poisson_bracket(Poly::var(5), x1, bt), std::domain_error);

  SUBCASE("antisymmetry and Leibniz on random polynomials") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 10; ++t) {
      Poly f = random_poly(rng, 2, 2, 3), g = random_poly(rng, 2, 2, 3),
           h = random_poly(rng, 2, 2, 3);
      CHECK(poisson_bracket(f, g, bt) == -poisson_bracket(g, f, bt));
      CHECK(poisson_bracket(f * g, h, bt) ==
            f * poisson_bracket(g, h, bt) + g * poisson_bracket(f, h, bt));
    }
  }
}

TEST_CASE("A1 cascade bracket example: {x2x3 - 1, x1} = x3 on word (s,s,s,s)") {
  BracketTable bt;
  bt.n = 4;
  bt.var_names = VarNames::xs(4).names;
  for (int i = 0; i < 4; ++i)
    bt.weights.push_back(Weight(std::vector<Rat>{Rat((i % 2 == 0) ? 2 : -2)}));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (j == i + 1)
        bt.entries[{i, j}] = Poly::var(i) * Poly::var(j) - Poly(Rat(1));
      else
        bt.entries[{i, j}] = Poly::var(i) * Poly::var(j) * Rat((j - i + 1) % 2 ? -1 : 1);
    }
  Poly y1 = Poly::var(1) * Poly::var(2) - Poly(Rat(1));
  CHECK(poisson_bracket(y1, Poly::var(0), bt) == Poly::var(2));
  CHECK(jacobi_check(bt).ok);
}

TEST_CASE("jacobi check") {
  BracketTable bt;
  bt.n = 2;
  bt.var_names = {"x1", "x2"};
  bt.weights = {Weight(std::vector<Rat>{Rat(1)}), Weight(std::vector<Rat>{Rat(1)})};
  bt.entries[{0, 1}] = Poly::var(0);
  CHECK(jacobi_check(bt).ok);  // n = 2: vacuously true

  // A1 word (s,s,s) with the sign of {x1,x3} flipped is no longer Poisson
  BracketTable bad;
  bad.n = 3;
  bad.var_names = VarNames::xs(3).names;
  for (int i = 0; i < 3; ++i) bad.weights.push_back(Weight(std::vector<Rat>{Rat(1)}));
  bad.entries[{0, 1}] = parse("x1*x2 - 1", 3);
  bad.entries[{1, 2}] = parse("x2*x3 - 1", 3);
  bad.entries[{0, 2}] = parse("x1*x3", 3);  // correct value is -x1*x3
  auto rep = jacobi_check(bad);
  CHECK(!rep.ok);
  CHECK(rep.i == 0);
  CHECK(rep.j == 1);
  CHECK(rep.k == 2);
  bad.entries[{0, 2}] = parse("-x1*x3", 3);
  CHECK(jacobi_check(bad).ok);
}

TEST_CASE("interpolation of exact black-box evaluators") {
  InterpolateOptions opts;
  SUBCASE("constant") {
    Poly p = interpolate_poly([](std::span<const Rat>) { return Rat(7, 3); }, 3, opts);
    CHECK(p == Poly(Rat(7, 3)));
  }
  SUBCASE("product minus one") {
    Poly p = interpolate_poly(
        [](std::span<const Rat> x) { return Rat(x[0] * x[1] - 1); }, 2, opts);
    CHECK(p == Poly::var(0) * Poly::var(1) - Poly(Rat(1)));
  }
  SUBCASE("G2-style degree-3 entry") {
    auto eval = [](std::span<const Rat> x) {
      return Rat(Rat(-6) * x[1] * x[1] * x[1] - Rat(3) * x[0] * x[2]);
    };
    Poly p = interpolate_poly(eval, 3, opts);
    CHECK(p == parse("-6x2^3 - 3x1*x3", 3));
  }
  SUBCASE("non-polynomial evaluator rejected") {
    auto eval = [](std::span<const Rat> x) { return Rat(Rat(1) / (x[0] + 1000000007)); };
    CHECK_THROWS_AS(interpolate_poly(eval, 1, opts), std::runtime_error);
  }
}

TEST_CASE("weight homogeneity bookkeeping") {
  BracketTable bt;
  bt.n = 2;
  bt.var_names = {"x1", "x2"};
  bt.weights = {Weight(std::vector<Rat>{Rat(2)}), Weight(std::vector<Rat>{Rat(-2)})};
  bt.entries[{0, 1}] = parse("x1*x2 - 1", 2);
  CHECK(weight_homogeneous(bt));
  bt.entries[{0, 1}] = parse("x1*x2 - x1", 2);
  CHECK(!weight_homogeneous(bt));
}

TEST_CASE("bracket table json round trip") {
  BracketTable bt;
  bt.n = 2;
  bt.type_label = "A1";
  bt.word = WeylWord({1, 1});
  bt.form_scale = Rat(1, 2);
  bt.method = "interp";
  bt.var_names = {"x1", "x2"};
  bt.weights = {Weight(std::vector<Rat>{Rat(2)}), Weight(std::vector<Rat>{Rat(-2)})};
  bt.entries[{0, 1}] = parse("x1*x2 - 1", 2);
  BracketTable rt = BracketTable::from_json(bt.to_json());
  CHECK(rt == bt);
  CHECK(rt.form_scale == bt.form_scale);
  CHECK(rt.to_json() == bt.to_json());
}
