#include "markoff/sequences.hpp"

#include <array>
#include <stdexcept>

#include "markoff/treewalk.hpp"

namespace markoff {

namespace {

Integer linear_recurrence(int n, int mult) {
  if (n < 0) throw std::invalid_argument("negative sequence index");
  Integer prev = 0, cur = 1;
  for (int i = 0; i < n; ++i) {
    Integer next = mult * cur + prev;
    prev = cur;
    cur = next;
  }
  return prev;
}

}  // namespace

Integer fibonacci(int n) { return linear_recurrence(n, 1); }

Integer pell(int n) { return linear_recurrence(n, 2); }

Integer even_pell(int n) { return pell(2 * n); }

Integer double_even_fibonacci(int n) { return 2 * fibonacci(2 * n + 2); }

Integer shadow_fib_branch_reference(int n) {
  if (n < 0) throw std::invalid_argument("negative sequence index");
  static const std::array<long, 8> golden = {0, 2, 10, 38, 130, 420, 1308,
                                             3970};
  if (n < 8) return Integer(golden[n]);
  // No closed form is known; read the value off the branch itself.
  auto pairs = branch_sequence(0, 0, 1, Move::Left, n - 1);
  const Rational& shadow = pairs[n - 2].shadow;
  return shadow.get_num();
}

}  // namespace markoff
