#include <random>

#include "doctest.h"
#include "markoff/linearity.hpp"
#include "markoff/treewalk.hpp"

using namespace markoff;

namespace {

Rational rnd_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-8, 8);
  std::uniform_int_distribution<int> den(1, 5);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

ShadowVector shadow_of(const SixTuple& s) {
  return {s.alpha, s.beta, s.gamma};
}

// Visits every word of length <= depth, checking matrix against path at
// each node for all the given vectors.
void check_agreement(const TransferMatrix& M,
                     const std::vector<ShadowVector>& vectors,
                     const std::vector<SixTuple>& states, int depth_left) {
  for (size_t i = 0; i < vectors.size(); ++i)
    CHECK(apply(M, vectors[i]) == shadow_of(states[i]));
  CHECK(det(M) != 0);
  if (depth_left == 0) return;
  for (Move mv : {Move::Left, Move::Right}) {
    TransferMatrix step =
        move_matrix(mv, states[0].a, states[0].b, states[0].c);
    TransferMatrix next;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Rational sum = 0;
        for (int k = 0; k < 3; ++k) sum += step.m[i][k] * M.m[k][j];
        next.m[i][j] = sum;
      }
    std::vector<SixTuple> moved;
    moved.reserve(states.size());
    for (const SixTuple& s : states) moved.push_back(apply_move(s, mv));
    check_agreement(next, vectors, moved, depth_left - 1);
  }
}

}  // namespace

TEST_CASE("bare right move matrix at unit bodies") {
  TransferMatrix M = move_matrix(Move::Right, 1, 1, 1);
  CHECK(M.m[0] == std::array<Rational, 3>{0, 0, 1});
  CHECK(M.m[1] == std::array<Rational, 3>{0, 1, 0});
  CHECK(M.m[2] == std::array<Rational, 3>{-2, 2, 2});
}

TEST_CASE("prefix matrix sends (0,0,1) to the printed node shadows") {
  ShadowVector v = shadow_at({}, {0, 0, 1});
  CHECK(v == ShadowVector{1, 2, 10});
}

TEST_CASE("unit root shadows reproduce the classical bodies") {
  // the double-tree lemma, restated linearly
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 40; ++trial) {
    MovePath word;
    int len = trial % 7;
    for (int i = 0; i < len; ++i)
      word.push_back(coin(rng) ? Move::Left : Move::Right);
    ShadowVector v = shadow_at(word, {1, 1, 1});
    SixTuple node = path(1, 1, 1, word).back();
    CHECK(v.alpha == node.a);
    CHECK(v.beta == node.b);
    CHECK(v.gamma == node.c);
  }
}

TEST_CASE("shadow_at goldens") {
  CHECK(shadow_at(parse_move_path("l"), {0, 2, 1}).gamma == 42);
  // the 16 sits at the prefix node of the (0:2:1) tree
  CHECK(shadow_at({}, {0, 2, 1}) == ShadowVector{1, 6, 16});
  CHECK(shadow_at(parse_move_path("rlr"), {0, 0, 0}) ==
        ShadowVector{0, 0, 0});
}

TEST_CASE("matrix agrees with path walking") {
  std::mt19937 rng(37);
  std::vector<ShadowVector> vectors;
  for (int i = 0; i < 8; ++i)
    vectors.push_back({rnd_rational(rng), rnd_rational(rng),
                       rnd_rational(rng)});
  std::vector<SixTuple> states;
  for (const ShadowVector& v : vectors)
    states.push_back(path(v.alpha, v.beta, v.gamma, {}).back());
  check_agreement(transfer_matrix({}), vectors, states, 6);
}

TEST_CASE("barycenter checks") {
  CHECK(barycenter_check({0, 0, 1}, {1, 1, 1}, Rational(1, 2), Rational(1, 2),
                         parse_move_path("rl")));
  CHECK(barycenter_check({2, 3, 5}, {2, 3, 5}, Rational(7, 3), Rational(-4, 3),
                         parse_move_path("lr")));
  CHECK(barycenter_check({1, 0, 2}, {0, 2, 1}, Rational(1, 3), Rational(2, 3),
                         parse_move_path("llrr")));
  CHECK_THROWS_AS(barycenter_check({0, 0, 1}, {1, 1, 1}, Rational(1, 2),
                                   Rational(1, 3), {}),
                  std::invalid_argument);
}

TEST_CASE("nonnegative images combine to nonnegative images") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> lam_num(0, 10);
  for (int trial = 0; trial < 50; ++trial) {
    MovePath word;
    for (int i = 0; i < trial % 8; ++i)
      word.push_back(coin(rng) ? Move::Left : Move::Right);
    TransferMatrix M = transfer_matrix(word);
    ShadowVector v1{1, 1, 1};  // inside the conjectured region
    ShadowVector v2{Rational(1, 2), Rational(1, 2), 1};
    ShadowVector i1 = apply(M, v1), i2 = apply(M, v2);
    REQUIRE(i1.alpha >= 0);
    REQUIRE(i2.alpha >= 0);
    Rational lam(lam_num(rng), 10);
    lam.canonicalize();
    Rational mu = 1 - lam;
    ShadowVector combined = apply(M, add(scale(lam, v1), scale(mu, v2)));
    CHECK(combined.alpha >= 0);
    CHECK(combined.beta >= 0);
    CHECK(combined.gamma >= 0);
  }
}

TEST_CASE("matrix csv dump") {
  TransferMatrix M = transfer_matrix({});
  CHECK(matrix_csv(M) == "0,0,1\n-2,2,2\n-8,3,10\n");
}
