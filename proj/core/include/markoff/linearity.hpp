#ifndef MARKOFF_LINEARITY_HPP
#define MARKOFF_LINEARITY_HPP

#include <array>
#include <string>

#include "markoff/rational.hpp"
#include "markoff/treewalk.hpp"

namespace markoff {

// Root shadow vector (alpha, beta, gamma), or the shadow components of a
// node in the slot order of its six-tuple.
struct ShadowVector {
  Rational alpha, beta, gamma;

  friend bool operator==(const ShadowVector&, const ShadowVector&) = default;
};

ShadowVector add(const ShadowVector& x, const ShadowVector& y);
ShadowVector scale(const Rational& k, const ShadowVector& v);

// Exact 3x3 matrix carrying a root shadow vector to the shadow components
// of the node addressed by `word` (mandatory prefix included). The shadow
// part of each move is linear, so the whole walk is one matrix.
struct TransferMatrix {
  std::array<std::array<Rational, 3>, 3> m;
  MovePath word;

  friend bool operator==(const TransferMatrix& x, const TransferMatrix& y) {
    return x.m == y.m;
  }
};

ShadowVector apply(const TransferMatrix& M, const ShadowVector& v);
Rational det(const TransferMatrix& M);

// Per-move factor at given classical bodies. Exposed for unit tests; the
// matrix for a full word is the left-to-right composition of these.
TransferMatrix move_matrix(Move m, const Rational& a, const Rational& b,
                           const Rational& c);

// M(word) including the mandatory R-then-L prefix, so that
// apply(M(word), root shadows) equals the shadows of path(...)'s last row.
TransferMatrix transfer_matrix(const MovePath& word);

ShadowVector shadow_at(const MovePath& word, const ShadowVector& v);

// Exact linearity check: shadow_at(word, lam*v1 + mu*v2) equals
// lam*shadow_at(word,v1) + mu*shadow_at(word,v2). Throws
// std::invalid_argument unless lam + mu = 1.
bool barycenter_check(const ShadowVector& v1, const ShadowVector& v2,
                      const Rational& lam, const Rational& mu,
                      const MovePath& word);

// Row-major CSV of the matrix entries, rationals as "p/q".
std::string matrix_csv(const TransferMatrix& M);

}  // namespace markoff

#endif
