#include "markoff/treewalk.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace markoff {

MovePath parse_move_path(const std::string& word) {
  MovePath path;
  path.reserve(word.size());
  for (char ch : word) {
    switch (ch) {
      case 'l':
      case 'L':
        path.push_back(Move::Left);
        break;
      case 'r':
      case 'R':
        path.push_back(Move::Right);
        break;
      default:
        throw std::invalid_argument(std::string("bad move character: ") + ch);
    }
  }
  return path;
}

std::string format_move_path(const MovePath& path) {
  std::string out;
  out.reserve(path.size());
  for (Move m : path) out.push_back(m == Move::Left ? 'l' : 'r');
  return out;
}

SixTuple sage_move_left(const SixTuple& s) {
  if (s.b == 0) throw std::domain_error("left move with zero b body");
  Rational c = (s.a * s.a + s.c * s.c) / s.b;
  Rational gamma = (-c * s.beta + 2 * s.a * s.alpha + 2 * s.c * s.gamma) / s.b;
  return {s.a, s.alpha, s.c, s.gamma, c, gamma};
}

SixTuple sage_move_right(const SixTuple& s) {
  if (s.a == 0) throw std::domain_error("right move with zero a body");
  Rational c = (s.b * s.b + s.c * s.c) / s.a;
  Rational gamma = (-c * s.alpha + 2 * s.b * s.beta + 2 * s.c * s.gamma) / s.a;
  return {s.c, s.gamma, s.b, s.beta, c, gamma};
}

SixTuple apply_move(const SixTuple& s, Move m) {
  return m == Move::Left ? sage_move_left(s) : sage_move_right(s);
}

SixTuple root_tuple(const Rational& alpha, const Rational& beta,
                    const Rational& gamma) {
  return {1, alpha, 1, beta, 1, gamma};
}

std::vector<SixTuple> path(const Rational& alpha, const Rational& beta,
                           const Rational& gamma, const MovePath& word) {
  std::vector<SixTuple> rows;
  rows.reserve(word.size() + 3);
  rows.push_back(root_tuple(alpha, beta, gamma));
  rows.push_back(sage_move_right(rows.back()));
  rows.push_back(sage_move_left(rows.back()));
  for (Move m : word) rows.push_back(apply_move(rows.back(), m));
  return rows;
}

namespace {

std::unique_ptr<ShadowTree> fill(const SixTuple& node, int height) {
  if (height <= 0) return nullptr;
  auto tree = std::make_unique<ShadowTree>();
  tree->node = node;
  if (height > 1) {
    tree->left = fill(sage_move_left(node), height - 1);
    tree->right = fill(sage_move_right(node), height - 1);
  }
  return tree;
}

}  // namespace

std::unique_ptr<ShadowTree> build_tree_unchecked(const Rational& alpha,
                                                 const Rational& beta,
                                                 const Rational& gamma,
                                                 int height) {
  if (height < 0) throw std::invalid_argument("negative tree height");
  if (height == 0) return nullptr;
  SixTuple start =
      sage_move_left(sage_move_right(root_tuple(alpha, beta, gamma)));
  return fill(start, height);
}

std::unique_ptr<ShadowTree> build_tree(const Rational& alpha,
                                       const Rational& beta,
                                       const Rational& gamma, int height) {
  if (height > max_tree_height)
    throw std::invalid_argument("tree height exceeds guard (" +
                                std::to_string(max_tree_height) + ")");
  return build_tree_unchecked(alpha, beta, gamma, height);
}

std::vector<BranchPair> branch_sequence(const Rational& alpha,
                                        const Rational& beta,
                                        const Rational& gamma, Move direction,
                                        int count) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  std::vector<BranchPair> out;
  out.reserve(count);
  SixTuple s = sage_move_left(sage_move_right(root_tuple(alpha, beta, gamma)));
  out.push_back({s.c, s.gamma});
  for (int i = 1; i < count; ++i) {
    s = apply_move(s, direction);
    out.push_back({s.c, s.gamma});
  }
  return out;
}

std::string serialize(const SixTuple& s) {
  std::ostringstream os;
  os << "[" << s.a << ", " << s.alpha << ", " << s.b << ", " << s.beta << ", "
     << s.c << ", " << s.gamma << "]";
  return os.str();
}

std::string serialize(const ShadowTree* tree) {
  if (!tree) return "[]";
  return "[" + serialize(tree->node) + ", " + serialize(tree->left.get()) +
         ", " + serialize(tree->right.get()) + "]";
}

std::string serialize(const std::vector<SixTuple>& rows) {
  std::string out;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) out.push_back('\n');
    out += serialize(rows[i]);
  }
  return out;
}

namespace {

using nlohmann::json;

json tuple_json(const SixTuple& s) {
  return json::array({to_string(s.a), to_string(s.alpha), to_string(s.b),
                      to_string(s.beta), to_string(s.c), to_string(s.gamma)});
}

json tree_json(const ShadowTree* tree) {
  if (!tree) return json::array();
  return json::array({tuple_json(tree->node), tree_json(tree->left.get()),
                      tree_json(tree->right.get())});
}

SixTuple tuple_from_json(const json& j) {
  if (!j.is_array() || j.size() != 6)
    throw std::invalid_argument("tuple json must be an array of 6 strings");
  return {parse_rational(j[0].get<std::string>()),
          parse_rational(j[1].get<std::string>()),
          parse_rational(j[2].get<std::string>()),
          parse_rational(j[3].get<std::string>()),
          parse_rational(j[4].get<std::string>()),
          parse_rational(j[5].get<std::string>())};
}

std::unique_ptr<ShadowTree> tree_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("tree json must be an array");
  if (j.empty()) return nullptr;
  if (j.size() != 3)
    throw std::invalid_argument("tree json node must have 3 elements");
  auto tree = std::make_unique<ShadowTree>();
  tree->node = tuple_from_json(j[0]);
  tree->left = tree_from_json(j[1]);
  tree->right = tree_from_json(j[2]);
  if (static_cast<bool>(tree->left) != static_cast<bool>(tree->right))
    throw std::invalid_argument("tree json node with a single child");
  return tree;
}

}  // namespace

std::string serialize_json(const ShadowTree* tree) {
  return tree_json(tree).dump();
}

std::string serialize_json(const std::vector<SixTuple>& rows) {
  json arr = json::array();
  for (const SixTuple& s : rows) arr.push_back(tuple_json(s));
  return arr.dump();
}

std::unique_ptr<ShadowTree> parse_tree_json(const std::string& text) {
  return tree_from_json(json::parse(text));
}

}  // namespace markoff
