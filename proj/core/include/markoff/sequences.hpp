#ifndef MARKOFF_SEQUENCES_HPP
#define MARKOFF_SEQUENCES_HPP

#include "markoff/rational.hpp"

namespace markoff {

// Offline oracles for the integer sequences showing up along tree
// branches. All closed-form except the Fibonacci-branch shadows, which
// have no known formula.

Integer fibonacci(int n);  // F(0)=0, F(1)=1
Integer pell(int n);       // P(0)=0, P(1)=1, P(n)=2P(n-1)+P(n-2)

// P(2n): 0, 2, 12, 70, 408, 2378, ...
Integer even_pell(int n);

// 2*F(2n+2): 2, 6, 16, 42, 110, 288, ...
Integer double_even_fibonacci(int n);

// Shadows along the Fibonacci branch of the (0:0:1) tree:
// 0, 2, 10, 38, 130, 420, 1308, 3970, ... The first eight terms are
// pinned constants; beyond that the value is read off the tree itself.
Integer shadow_fib_branch_reference(int n);

}  // namespace markoff

#endif
