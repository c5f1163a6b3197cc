#ifndef MARKOFF_TREEWALK_HPP
#define MARKOFF_TREEWALK_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "markoff/rational.hpp"

namespace markoff {

enum class Move : std::uint8_t { Left, Right };

// A word over {L, R} addressing a node of the binary tree, applied after
// the two mandatory opening moves (right, then left).
using MovePath = std::vector<Move>;

// Parses a word like "rlrlrlr" (case-insensitive). Throws
// std::invalid_argument on any other character.
MovePath parse_move_path(const std::string& word);
std::string format_move_path(const MovePath& path);

// One tree node in interleaved order [a, alpha, b, beta, c, gamma].
struct SixTuple {
  Rational a, alpha, b, beta, c, gamma;

  friend bool operator==(const SixTuple&, const SixTuple&) = default;
};

// Left move: mutation on the second element, then shifting so the new
// value lands in the (c, gamma) corner:
//   (a,b,c, al,be,ga) <- (a, c, (a^2+c^2)/b, al, ga, (-c'*be + 2a*al + 2c*ga)/b)
SixTuple sage_move_left(const SixTuple& s);

// Right move: mutation on the first element:
//   (a,b,c, al,be,ga) <- (c, b, (b^2+c^2)/a, ga, be, (-c'*al + 2b*be + 2c*ga)/a)
SixTuple sage_move_right(const SixTuple& s);

SixTuple apply_move(const SixTuple& s, Move m);

// Root tuple [1, alpha, 1, beta, 1, gamma].
SixTuple root_tuple(const Rational& alpha, const Rational& beta,
                    const Rational& gamma);

// Applies the mandatory R-then-L prefix followed by `word`, returning
// every visited tuple starting at the root. Length is |word| + 3.
std::vector<SixTuple> path(const Rational& alpha, const Rational& beta,
                           const Rational& gamma, const MovePath& word);

// Perfect binary tree of shadow triples. Either both children are set or
// neither is.
struct ShadowTree {
  SixTuple node;
  std::unique_ptr<ShadowTree> left;
  std::unique_ptr<ShadowTree> right;
};

// Builds the perfect tree of the given height, rooted at the tuple
// reached after the mandatory prefix. Height 0 is the empty tree
// (nullptr). Heights above max_tree_height are rejected.
std::unique_ptr<ShadowTree> build_tree(const Rational& alpha,
                                       const Rational& beta,
                                       const Rational& gamma, int height);

// Values grow doubly exponentially with height; this guards accidental
// blowups. CLI exposes an override.
inline constexpr int max_tree_height = 25;
std::unique_ptr<ShadowTree> build_tree_unchecked(const Rational& alpha,
                                                 const Rational& beta,
                                                 const Rational& gamma,
                                                 int height);

struct BranchPair {
  Rational body;
  Rational shadow;
};

// The growing-corner (c, gamma) values seen along a single branch: the
// tuple after the mandatory prefix, then after each of count-1 repeats of
// `direction`.
std::vector<BranchPair> branch_sequence(const Rational& alpha,
                                        const Rational& beta,
                                        const Rational& gamma, Move direction,
                                        int count);

// Sage nested-list text: "[a, alpha, b, beta, c, gamma]" per tuple,
// "[node, left, right]" per tree, "[]" for the empty tree.
std::string serialize(const SixTuple& s);
std::string serialize(const ShadowTree* tree);
std::string serialize(const std::vector<SixTuple>& rows);  // one row per line

// JSON: same nesting, every rational as a string "p/q".
std::string serialize_json(const ShadowTree* tree);
std::string serialize_json(const std::vector<SixTuple>& rows);
std::unique_ptr<ShadowTree> parse_tree_json(const std::string& text);

}  // namespace markoff

#endif
