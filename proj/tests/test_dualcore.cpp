#include <random>

#include "doctest.h"
#include "markoff/dual.hpp"

using namespace markoff;

namespace {

Rational rnd_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 6);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

ShadowTriple root_triple(const Rational& al, const Rational& be,
                         const Rational& ga) {
  return {{1, al}, {1, be}, {1, ga}};
}

// Independent route: evaluate both sides of the equation in the dual
// algebra itself.
bool equation_via_dual_algebra(const ShadowTriple& t, const Sigma& sigma) {
  DualRational lhs = dual_add(dual_mul(t.first, t.first),
                              dual_add(dual_mul(t.second, t.second),
                                       dual_mul(t.third, t.third)));
  DualRational three_minus{3, -sigma.value};
  DualRational rhs =
      dual_mul(three_minus, dual_mul(t.first, dual_mul(t.second, t.third)));
  return lhs == rhs;
}

}  // namespace

TEST_CASE("dual addition") {
  CHECK(dual_add({1, 0}, {0, 1}) == DualRational{1, 1});
  CHECK(dual_add({1, 2}, {1, 2}) == DualRational{2, 4});
  CHECK(dual_add({Rational(1, 2), Rational(-1, 3)},
                 {Rational(1, 2), Rational(1, 3)}) == DualRational{1, 0});
}

TEST_CASE("dual multiplication drops eps^2") {
  CHECK(dual_mul({1, 1}, {1, 1}) == DualRational{1, 2});
  CHECK(dual_mul({2, 3}, {0, 0}) == DualRational{0, 0});
  CHECK(dual_mul({1, 2}, {3, 4}) == DualRational{3, 10});
}

TEST_CASE("shadow equation at given triples") {
  CHECK(check_shadow_equation(root_triple(0, 0, 1), Sigma{1}));
  // node [1, 1, 1, 0, 2, 2] of the (0:0:1) tree
  CHECK(check_shadow_equation({{1, 1}, {1, 0}, {2, 2}}, Sigma{1}));
  CHECK_FALSE(check_shadow_equation(root_triple(0, 0, 1), Sigma{0}));
}

TEST_CASE("shadow equation splits into body and shadow identities") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    ShadowTriple t{{rnd_rational(rng), rnd_rational(rng)},
                   {rnd_rational(rng), rnd_rational(rng)},
                   {rnd_rational(rng), rnd_rational(rng)}};
    Sigma sigma{rnd_rational(rng)};
    CHECK(check_shadow_equation(t, sigma) ==
          equation_via_dual_algebra(t, sigma));
  }
}

TEST_CASE("classical mutation") {
  IntegerTriple t{1, 1, 1};
  CHECK(classical_mutate(t, 3) == IntegerTriple{1, 1, 2});
  CHECK(classical_mutate({1, 1, 2}, 2) == IntegerTriple{1, 5, 2});
  CHECK(classical_mutate(classical_mutate({1, 1, 2}, 3), 3) ==
        IntegerTriple{1, 1, 2});
  CHECK_THROWS_AS(classical_mutate({0, 1, 1}, 1), std::domain_error);
  CHECK_THROWS_AS(classical_mutate({3, 1, 1}, 1), std::domain_error);
}

TEST_CASE("mutate_at goldens") {
  ShadowTriple t = root_triple(0, 0, 1);
  ShadowTriple out = mutate_at(t, 1);
  CHECK(out == ShadowTriple{{2, 2}, {1, 0}, {1, 1}});

  ShadowTriple doubled = mutate_at(root_triple(1, 1, 1), 1);
  CHECK(doubled == ShadowTriple{{2, 2}, {1, 1}, {1, 1}});

  CHECK_THROWS_AS(mutate_at({{0, 1}, {1, 0}, {1, 1}}, 1), std::domain_error);
}

TEST_CASE("mutations are involutions") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    ShadowTriple t{{rnd_rational(rng), rnd_rational(rng)},
                   {rnd_rational(rng), rnd_rational(rng)},
                   {rnd_rational(rng), rnd_rational(rng)}};
    for (int slot = 1; slot <= 3; ++slot) {
      const DualRational& entry =
          slot == 1 ? t.first : slot == 2 ? t.second : t.third;
      if (entry.body == 0) continue;
      CHECK(mutate_at(mutate_at(t, slot), slot) == t);
    }
  }
}

TEST_CASE("mutation preserves the shadow equation") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> slot_dist(1, 3);
  std::uniform_int_distribution<int> len_dist(0, 12);
  for (int trial = 0; trial < 100; ++trial) {
    Rational al = rnd_rational(rng), be = rnd_rational(rng),
             ga = rnd_rational(rng);
    Sigma sigma = sigma_of_root(al, be, ga);
    ShadowTriple t = root_triple(al, be, ga);
    REQUIRE(check_shadow_equation(t, sigma));
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) {
      t = mutate_at(t, slot_dist(rng));
      CHECK(check_shadow_equation(t, sigma));
    }
  }
}

TEST_CASE("integer roots stay integral under mutation words") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> shadow(-4, 4);
  std::uniform_int_distribution<int> slot_dist(1, 3);
  for (int trial = 0; trial < 40; ++trial) {
    ShadowTriple t = root_triple(shadow(rng), shadow(rng), shadow(rng));
    int prev_slot = 0;
    for (int i = 0; i < 15; ++i) {
      int slot = slot_dist(rng);
      if (slot == prev_slot) slot = slot % 3 + 1;  // avoid undoing the move
      prev_slot = slot;
      t = mutate_at(t, slot);
      for (const DualRational* d : {&t.first, &t.second, &t.third}) {
        CHECK(is_integer(d->body));
        CHECK(is_integer(d->shadow));
        CHECK(d->body > 0);
      }
    }
  }
}

TEST_CASE("sigma of root") {
  CHECK(sigma_of_root(0, 0, 1).value == 1);
  CHECK(sigma_of_root(1, 1, 1).value == 3);
  CHECK(sigma_of_root(Rational(1, 2), 0, 1).value == Rational(3, 2));
}
