#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bruhat/rootdata.hpp"

using namespace bruhat;

namespace {

Weight fw(const RootData& rd, int i) { return Weight::fundamental(rd.rank(), i); }

Weight random_weight(const RootData& rd, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  Weight w = Weight::zero(rd.rank());
  for (int i = 0; i < rd.rank(); ++i) w.c[i] = Rat(d(rng));
  return w;
}

WeylWord random_word(const RootData& rd, std::mt19937_64& rng, int len) {
  std::uniform_int_distribution<int> d(1, rd.rank());
  WeylWord w;
  for (int i = 0; i < len; ++i) w.letters.push_back(d(rng));
  return w;
}

}  // namespace

TEST_CASE("pairing fixtures") {
  RootData g2 = RootData::simple("G2");
  Weight a1 = g2.simple_root(0), a2 = g2.simple_root(1);
  CHECK(g2.pairing(a2, a2) == Rat(6));
  CHECK(g2.pairing(a1, a1) == Rat(2));
  CHECK(g2.pairing(a2, a2) == Rat(3) * g2.pairing(a1, a1));
  CHECK(g2.pairing(a1, a2) == Rat(-3));

  // A1 with <alpha, alpha> = 1: <omega, omega> = 1/4
  RootData a1rd = RootData::simple("A1", Rat(1, 2));
  CHECK(a1rd.pairing(a1rd.simple_root(0), a1rd.simple_root(0)) == Rat(1));
  CHECK(a1rd.pairing(fw(a1rd, 0), fw(a1rd, 0)) == Rat(1, 4));

  // bilinearity with zero
  RootData a2rd = RootData::simple("A2");
  CHECK(a2rd.pairing(fw(a2rd, 0), Weight::zero(2)) == Rat(0));

  SUBCASE("symmetry at random weights") {
    std::mt19937_64 rng(11);
    for (const auto& rd : {g2, a2rd}) {
      for (int t = 0; t < 10; ++t) {
        Weight a = random_weight(rd, rng), b = random_weight(rd, rng);
        CHECK(rd.pairing(a, b) == rd.pairing(b, a));
      }
    }
  }
}

TEST_CASE("weyl action") {
  RootData a2 = RootData::simple("A2");
  Weight om1 = fw(a2, 0);
  CHECK(a2.weyl_act(WeylWord(), om1) == om1);  // e
  CHECK(a2.weyl_act(WeylWord({1}), om1) == om1 - a2.simple_root(0));

  SUBCASE("prefix weights of the A2 doubled word match the printed list") {
    WeylWord w({1, 2, 1, 1, 2, 1});
    auto wts = a2.coord_weights(w);
    Weight al1 = a2.simple_root(0), al2 = a2.simple_root(1);
    REQUIRE(wts.size() == 6);
    CHECK(wts[0] == al1);
    CHECK(wts[1] == al1 + al2);
    CHECK(wts[2] == al2);
    CHECK(wts[3] == -al2);
    CHECK(wts[4] == -(al1 + al2));
    CHECK(wts[5] == -al1);
  }

  SUBCASE("G2 word (2,1,...): weight(x_2) = s_2(alpha_1) = alpha_1 + alpha_2") {
    RootData g2 = RootData::simple("G2");
    auto wts = g2.coord_weights(WeylWord({2, 1}));
    CHECK(wts[1] == g2.simple_root(0) + g2.simple_root(1));
  }

  SUBCASE("action property and pairing invariance at random words") {
    std::mt19937_64 rng(5);
    for (const auto& label : {std::string("A2"), std::string("G2"), std::string("A3")}) {
      RootData rd = RootData::simple(label);
      for (int t = 0; t < 8; ++t) {
        WeylWord v = random_word(rd, rng, 3), w = random_word(rd, rng, 4);
        Weight lam = random_weight(rd, rng), mu = random_weight(rd, rng);
        CHECK(rd.weyl_act(v.concat(w), lam) == rd.weyl_act(v, rd.weyl_act(w, lam)));
        CHECK(rd.pairing(rd.weyl_act(w, lam), rd.weyl_act(w, mu)) == rd.pairing(lam, mu));
      }
    }
  }
}

TEST_CASE("word reduction and comparison") {
  RootData a2 = RootData::simple("A2");
  CHECK(a2.reduced_word(WeylWord({1, 1})).length() == 0);
  CHECK(a2.same_element(WeylWord({1, 2, 1}), WeylWord({2, 1, 2})));
  CHECK(a2.length(WeylWord({1, 2, 1, 1, 2, 1})) == 0);  // w0^2 = e
  CHECK(a2.length(WeylWord({1, 2})) == 2);
  CHECK(a2.is_reduced(WeylWord({1, 2, 1})));
  CHECK(!a2.is_reduced(WeylWord({1, 1, 2})));
  CHECK_THROWS_AS(a2.reduced_word(WeylWord({3})), std::out_of_range);

  RootData g2 = RootData::simple("G2");
  CHECK(g2.length(WeylWord({1, 2, 1, 2, 1, 2})) == 6);       // w0 of G2
  CHECK(g2.same_element(WeylWord({1, 2, 1, 2, 1, 2}), WeylWord({2, 1, 2, 1, 2, 1})));
  CHECK(g2.length(WeylWord({1, 2, 1, 2, 1, 2, 1})) == 5);

  SUBCASE("reduced word is a valid rewriting at random words") {
    std::mt19937_64 rng(17);
    for (const auto& label : {std::string("A3"), std::string("G2")}) {
      RootData rd = RootData::simple(label);
      for (int t = 0; t < 10; ++t) {
        WeylWord w = random_word(rd, rng, 7);
        WeylWord r = rd.reduced_word(w);
        CHECK(rd.same_element(w, r));
        CHECK(rd.is_reduced(r));
      }
    }
  }
}

TEST_CASE("leaf dimensions") {
  RootData a1 = RootData::simple("A1");
  auto d1 = a1.leaf_dimension(WeylWord({1}));
  CHECK(d1.leaf_stabilizer_dim == 1);  // rank(1 - s) = 1
  CHECK(d1.symplectic_leaf_dim == 2);

  RootData a2 = RootData::simple("A2");
  auto d2 = a2.leaf_dimension(WeylWord({1, 2}));
  CHECK(d2.leaf_stabilizer_dim == 2);  // Coxeter element fixes nothing
  CHECK(d2.symplectic_leaf_dim == 4);

  SUBCASE("doubled words always give 2 l(u)") {
    std::mt19937_64 rng(23);
    for (const auto& label : {std::string("A2"), std::string("G2"), std::string("A4")}) {
      RootData rd = RootData::simple(label);
      for (int t = 0; t < 6; ++t) {
        WeylWord u = random_word(rd, rng, 1 + (int)(rng() % 4));
        WeylWord doubled = u.reversed().concat(u);
        auto d = rd.leaf_dimension(doubled);
        CHECK(d.leaf_stabilizer_dim == 0);
        CHECK(d.symplectic_leaf_dim == 2 * u.length());
      }
    }
  }
}

TEST_CASE("drinfeld lagrangian data") {
  RootData a1 = RootData::simple("A1");
  // w = e: l_x = {(2z, 0)}: p2 = 0
  auto le = a1.lagrangian_data(WeylWord());
  CHECK(le.p1_rank == 1);
  CHECK(le.p2_rank == 0);
  // w = s: l_x = {(0, -2z)}: p1 = 0
  auto ls = a1.lagrangian_data(WeylWord({1}));
  CHECK(ls.p1_rank == 0);
  CHECK(ls.p2_rank == 1);

  SUBCASE("l_x is lagrangian for the split form on t + t") {
    std::mt19937_64 rng(29);
    for (const auto& label : {std::string("A2"), std::string("G2"), std::string("A3")}) {
      RootData rd = RootData::simple(label);
      int r = rd.rank();
      MatQ gram = rd.coroot_gram();
      auto form = [&](const std::vector<Rat>& u, const std::vector<Rat>& v) {
        // <(z1,z2),(z1',z2')> = <z1,z2'> + <z1',z2>
        Rat acc(0);
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) {
            acc += u[i] * gram.at(i, j) * v[r + j];
            acc += v[i] * gram.at(i, j) * u[r + j];
          }
        return acc;
      };
      for (int t = 0; t < 5; ++t) {
        WeylWord w = random_word(rd, rng, 4);
        auto L = rd.lagrangian_data(w);
        REQUIRE((int)L.basis.size() == r);  // dim l_x = r always
        for (const auto& u : L.basis)
          for (const auto& v : L.basis) CHECK(form(u, v) == Rat(0));
      }
    }
  }
}

TEST_CASE("root data json") {
  RootData g2 = RootData::simple("G2", Rat(2));
  std::string j = g2.to_json();
  CHECK(j.find("\"type\":\"G2\"") != std::string::npos);
  CHECK(j.find("\"form_scale\":\"2\"") != std::string::npos);
  CHECK_THROWS(RootData::simple("B2"));
  CHECK_THROWS(RootData::simple("A9"));
}

TEST_CASE("positive roots") {
  CHECK(RootData::simple("A2").positive_roots().size() == 3);
  CHECK(RootData::simple("A3").positive_roots().size() == 6);
  RootData g2 = RootData::simple("G2");
  auto pos = g2.positive_roots();
  CHECK(pos.size() == 6);
  int shorts = 0, longs = 0;
  for (const auto& b : pos) {
    Rat l = g2.root_length_sq(b);
    if (l == Rat(2)) ++shorts;
    if (l == Rat(6)) ++longs;
  }
  CHECK(shorts == 3);
  CHECK(longs == 3);
}
