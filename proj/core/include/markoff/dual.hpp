#ifndef MARKOFF_DUAL_HPP
#define MARKOFF_DUAL_HPP

#include <cstdint>

#include "markoff/rational.hpp"

namespace markoff {

// A dual number a + alpha*eps with eps^2 = 0. The rational part is the
// body, the nilpotent coefficient the shadow.
struct DualRational {
  Rational body;
  Rational shadow;

  friend bool operator==(const DualRational&, const DualRational&) = default;
};

DualRational dual_add(const DualRational& x, const DualRational& y);
DualRational dual_sub(const DualRational& x, const DualRational& y);
DualRational dual_mul(const DualRational& x, const DualRational& y);

// Ordered triple (A, B, C) of dual rationals.
struct ShadowTriple {
  DualRational first, second, third;

  friend bool operator==(const ShadowTriple&, const ShadowTriple&) = default;
};

// The deformation constant sigma; for a root (1+a*eps, 1+b*eps, 1+c*eps)
// it equals a+b+c.
struct Sigma {
  Rational value;
};

Sigma sigma_of_root(const Rational& alpha, const Rational& beta,
                    const Rational& gamma);

// True iff A^2+B^2+C^2 = (3 - sigma*eps) A B C holds exactly, i.e. the
// body identity a^2+b^2+c^2 = 3abc and the shadow identity
// 2(a*al + b*be + c*ga) = 3(al*bc + be*ac + ga*ab) - sigma*abc both hold.
bool check_shadow_equation(const ShadowTriple& t, const Sigma& sigma);

struct IntegerTriple {
  Integer a, b, c;

  friend bool operator==(const IntegerTriple&, const IntegerTriple&) = default;
};

// Classical mutation: replaces the slot entry x by (y^2+z^2)/x. Throws
// std::domain_error when the slot entry is zero or the division is not
// exact.
IntegerTriple classical_mutate(const IntegerTriple& t, int slot);

// Pure (non-permuting) mutation of one slot of a shadow triple:
//   a' = (b^2+c^2)/a,   alpha' = (-a'*alpha + 2b*beta + 2c*gamma)/a.
// Throws std::domain_error when the slot body is zero. Involutive, and
// preserves the shadow Markoff equation for any sigma.
ShadowTriple mutate_at(const ShadowTriple& t, int slot);

}  // namespace markoff

#endif
