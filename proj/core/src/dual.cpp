#include "markoff/dual.hpp"

#include <stdexcept>

namespace markoff {

DualRational dual_add(const DualRational& x, const DualRational& y) {
  return {x.body + y.body, x.shadow + y.shadow};
}

DualRational dual_sub(const DualRational& x, const DualRational& y) {
  return {x.body - y.body, x.shadow - y.shadow};
}

DualRational dual_mul(const DualRational& x, const DualRational& y) {
  // (a + al*eps)(b + be*eps) = ab + (a*be + b*al)*eps, eps^2 = 0.
  return {x.body * y.body, x.body * y.shadow + y.body * x.shadow};
}

Sigma sigma_of_root(const Rational& alpha, const Rational& beta,
                    const Rational& gamma) {
  return {alpha + beta + gamma};
}

bool check_shadow_equation(const ShadowTriple& t, const Sigma& sigma) {
  const Rational& a = t.first.body;
  const Rational& b = t.second.body;
  const Rational& c = t.third.body;
  const Rational& al = t.first.shadow;
  const Rational& be = t.second.shadow;
  const Rational& ga = t.third.shadow;

  if (a * a + b * b + c * c != 3 * a * b * c) return false;
  return 2 * (a * al + b * be + c * ga) ==
         3 * (al * b * c + be * a * c + ga * a * b) - sigma.value * a * b * c;
}

namespace {

void check_slot(int slot) {
  if (slot < 1 || slot > 3) throw std::invalid_argument("slot must be 1..3");
}

}  // namespace

IntegerTriple classical_mutate(const IntegerTriple& t, int slot) {
  check_slot(slot);
  const Integer& x = slot == 1 ? t.a : slot == 2 ? t.b : t.c;
  const Integer& y = slot == 1 ? t.b : t.a;
  const Integer& z = slot == 3 ? t.b : t.c;
  if (x == 0) throw std::domain_error("mutation slot entry is zero");
  Integer sum = y * y + z * z;
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), sum.get_mpz_t(), x.get_mpz_t());
  if (r != 0) throw std::domain_error("mutation is not integral");
  IntegerTriple out = t;
  (slot == 1 ? out.a : slot == 2 ? out.b : out.c) = q;
  return out;
}

ShadowTriple mutate_at(const ShadowTriple& t, int slot) {
  check_slot(slot);
  const DualRational& x = slot == 1 ? t.first : slot == 2 ? t.second : t.third;
  const DualRational& y = slot == 1 ? t.second : t.first;
  const DualRational& z = slot == 3 ? t.second : t.third;
  if (x.body == 0) throw std::domain_error("mutation slot body is zero");
  Rational body = (y.body * y.body + z.body * z.body) / x.body;
  Rational shadow =
      (-body * x.shadow + 2 * y.body * y.shadow + 2 * z.body * z.shadow) /
      x.body;
  ShadowTriple out = t;
  (slot == 1 ? out.first : slot == 2 ? out.second : out.third) = {body, shadow};
  return out;
}

}  // namespace markoff
