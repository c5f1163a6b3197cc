#include "markoff/linearity.hpp"

#include <sstream>
#include <stdexcept>

namespace markoff {

ShadowVector add(const ShadowVector& x, const ShadowVector& y) {
  return {x.alpha + y.alpha, x.beta + y.beta, x.gamma + y.gamma};
}

ShadowVector scale(const Rational& k, const ShadowVector& v) {
  return {k * v.alpha, k * v.beta, k * v.gamma};
}

ShadowVector apply(const TransferMatrix& M, const ShadowVector& v) {
  // explicit return type: gmpxx expression templates must not outlive the
  // full expression they reference
  auto row = [&](int i) -> Rational {
    return M.m[i][0] * v.alpha + M.m[i][1] * v.beta + M.m[i][2] * v.gamma;
  };
  return {row(0), row(1), row(2)};
}

Rational det(const TransferMatrix& M) {
  const auto& m = M.m;
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

TransferMatrix move_matrix(Move mv, const Rational& a, const Rational& b,
                           const Rational& c) {
  TransferMatrix M;
  if (mv == Move::Left) {
    if (b == 0) throw std::domain_error("left move with zero b body");
    Rational cp = (a * a + c * c) / b;
    M.m = {{{1, 0, 0}, {0, 0, 1}, {2 * a / b, -cp / b, 2 * c / b}}};
  } else {
    if (a == 0) throw std::domain_error("right move with zero a body");
    Rational cp = (b * b + c * c) / a;
    M.m = {{{0, 0, 1}, {0, 1, 0}, {-cp / a, 2 * b / a, 2 * c / a}}};
  }
  return M;
}

namespace {

TransferMatrix multiply(const TransferMatrix& x, const TransferMatrix& y) {
  TransferMatrix out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rational sum = 0;
      for (int k = 0; k < 3; ++k) sum += x.m[i][k] * y.m[k][j];
      out.m[i][j] = sum;
    }
  return out;
}

struct ClassicalBodies {
  Rational a = 1, b = 1, c = 1;

  void step(Move mv) {
    if (mv == Move::Left) {
      Rational cp = (a * a + c * c) / b;
      b = c;
      c = cp;
    } else {
      Rational cp = (b * b + c * c) / a;
      a = c;
      c = cp;
    }
  }
};

TransferMatrix identity_matrix() {
  TransferMatrix M;
  M.m = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  return M;
}

}  // namespace

TransferMatrix transfer_matrix(const MovePath& word) {
  ClassicalBodies bodies;
  TransferMatrix M = identity_matrix();
  MovePath full;
  full.reserve(word.size() + 2);
  full.push_back(Move::Right);
  full.push_back(Move::Left);
  full.insert(full.end(), word.begin(), word.end());
  for (Move mv : full) {
    M = multiply(move_matrix(mv, bodies.a, bodies.b, bodies.c), M);
    bodies.step(mv);
  }
  M.word = word;
  return M;
}

ShadowVector shadow_at(const MovePath& word, const ShadowVector& v) {
  return apply(transfer_matrix(word), v);
}

bool barycenter_check(const ShadowVector& v1, const ShadowVector& v2,
                      const Rational& lam, const Rational& mu,
                      const MovePath& word) {
  if (lam + mu != 1)
    throw std::invalid_argument("barycenter weights must sum to 1");
  ShadowVector combined = shadow_at(word, add(scale(lam, v1), scale(mu, v2)));
  ShadowVector split =
      add(scale(lam, shadow_at(word, v1)), scale(mu, shadow_at(word, v2)));
  return combined == split;
}

std::string matrix_csv(const TransferMatrix& M) {
  std::ostringstream os;
  for (int i = 0; i < 3; ++i) {
    os << M.m[i][0] << "," << M.m[i][1] << "," << M.m[i][2] << "\n";
  }
  return os.str();
}

}  // namespace markoff
