// Command-line front end: tree walks, witness search, region sweeps.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "markoff/dual.hpp"
#include "markoff/linearity.hpp"
#include "markoff/positivity.hpp"
#include "markoff/rational.hpp"
#include "markoff/treewalk.hpp"

namespace {

using namespace markoff;

std::vector<Rational> parse_rational_list(const std::string& text,
                                          size_t expected) {
  std::vector<Rational> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string item = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_rational(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() != expected)
    throw std::invalid_argument("expected " + std::to_string(expected) +
                                " comma-separated rationals: " + text);
  return out;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream os(out_path);
    if (!os) throw std::runtime_error("cannot open output file: " + out_path);
    os << text;
  }
}

int default_jobs() {
  if (const char* env = std::getenv("SHADOWTREE_JOBS")) {
    int jobs = std::atoi(env);
    if (jobs >= 1) return jobs;
  }
  return 1;
}

int field_index(const std::string& name) {
  static const std::vector<std::string> names = {"a", "alpha", "b",
                                                 "beta", "c", "gamma"};
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown field: " + name);
}

Rational field_of(const SixTuple& s, int idx) {
  switch (idx) {
    case 0: return s.a;
    case 1: return s.alpha;
    case 2: return s.b;
    case 3: return s.beta;
    case 4: return s.c;
    default: return idx == 5 ? s.gamma : throw std::logic_error("field");
  }
}

std::string value_text(const Rational& value, bool approx) {
  std::string out = to_string(value);
  if (approx) out += " ~= " + approx_string(value);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact shadow Markoff trees over dual numbers"};
  app.require_subcommand(1);

  std::string root_text = "0,0,1";
  std::string word_text;
  std::string point_text;
  std::string format = "text";
  std::string out_path;
  std::string field_name;
  std::string bbox_text = "-1/2,5/2,-1/2,3";
  std::string spacing_text = "1/20";
  std::string matrix_word;
  int height = 3;
  int depth = 10;
  int max_depth = 15;
  int count = 8;
  int row = -1;
  int jobs = default_jobs();
  int height_guard = max_tree_height;
  bool approx = false;
  std::string direction = "l";

  auto* cmd_path = app.add_subcommand("path", "walk a word and list tuples");
  cmd_path->add_option("--root", root_text, "root shadows alpha,beta,gamma");
  cmd_path->add_option("--word", word_text, "word over l/r after the prefix");
  cmd_path->add_option("--row", row, "print only this row");
  cmd_path->add_option("--field", field_name, "print only this field of --row");
  cmd_path->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  cmd_path->add_flag("--approx", approx, "append a decimal approximation");

  auto* cmd_tree = app.add_subcommand("tree", "build a full tree");
  cmd_tree->add_option("--root", root_text);
  cmd_tree->add_option("--height", height);
  cmd_tree->add_option("--max-height", height_guard, "override the height guard");
  cmd_tree->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  cmd_tree->add_option("--out", out_path);

  auto* cmd_branch = app.add_subcommand("branch", "follow one branch");
  cmd_branch->add_option("--root", root_text);
  cmd_branch->add_option("--direction", direction)
      ->check(CLI::IsMember({"l", "r"}));
  cmd_branch->add_option("--count", count);

  auto* cmd_verify =
      app.add_subcommand("verify", "check the equation at every node");
  cmd_verify->add_option("--root", root_text);
  cmd_verify->add_option("--depth", depth);

  auto* cmd_witness = app.add_subcommand("witness", "search for a negative shadow");
  cmd_witness->add_option("--point", point_text, "chart point alpha,beta (gamma=1)");
  cmd_witness->add_option("--root", root_text, "root shadows, gamma > 0");
  cmd_witness->add_option("--max-depth", max_depth);
  cmd_witness->add_flag("--approx", approx);

  auto* cmd_region = app.add_subcommand("region", "classify a grid of chart points");
  cmd_region->add_option("--bbox", bbox_text, "amin,amax,bmin,bmax");
  cmd_region->add_option("--spacing", spacing_text);
  cmd_region->add_option("--depth", depth);
  cmd_region->add_option("--format", format)->check(CLI::IsMember({"csv", "svg"}));
  cmd_region->add_option("--out", out_path);
  cmd_region->add_option("--jobs", jobs);

  auto* cmd_constraints =
      app.add_subcommand("constraints", "half-planes from matrix rows");
  cmd_constraints->add_option("--depth", depth);
  cmd_constraints->add_option("--format", format)
      ->check(CLI::IsMember({"csv", "svg"}));
  cmd_constraints->add_option("--out", out_path);
  auto* opt_matrix =
      cmd_constraints->add_option("--matrix-word", matrix_word,
                                  "dump M(word) instead, row-major CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_path) {
      auto root = parse_rational_list(root_text, 3);
      auto rows = path(root[0], root[1], root[2], parse_move_path(word_text));
      if (row >= 0) {
        if (static_cast<size_t>(row) >= rows.size())
          throw std::invalid_argument("row out of range");
        if (!field_name.empty()) {
          Rational value = field_of(rows[row], field_index(field_name));
          std::cout << value_text(value, approx) << "\n";
        } else {
          std::cout << serialize(rows[row]) << "\n";
        }
      } else if (format == "json") {
        std::cout << serialize_json(rows) << "\n";
      } else {
        std::cout << serialize(rows) << "\n";
      }
    } else if (*cmd_tree) {
      auto root = parse_rational_list(root_text, 3);
      if (height > height_guard)
        throw std::invalid_argument("height exceeds guard; raise --max-height");
      auto tree = build_tree_unchecked(root[0], root[1], root[2], height);
      write_output(format == "json" ? serialize_json(tree.get())
                                    : serialize(tree.get()),
                   out_path);
    } else if (*cmd_branch) {
      auto root = parse_rational_list(root_text, 3);
      auto pairs = branch_sequence(root[0], root[1], root[2],
                                   direction == "l" ? Move::Left : Move::Right,
                                   count);
      for (const BranchPair& p : pairs)
        std::cout << p.body << " " << p.shadow << "\n";
    } else if (*cmd_verify) {
      auto root = parse_rational_list(root_text, 3);
      Sigma sigma = sigma_of_root(root[0], root[1], root[2]);
      long checked = 0;
      bool ok = true;
      SixTuple bad;
      auto check = [&](const SixTuple& s) {
        ShadowTriple t{{s.a, s.alpha}, {s.b, s.beta}, {s.c, s.gamma}};
        ++checked;
        if (!check_shadow_equation(t, sigma) && ok) {
          ok = false;
          bad = s;
        }
      };
      auto rows = path(root[0], root[1], root[2], {});
      for (const SixTuple& s : rows) check(s);
      // every word up to the requested depth
      auto rec = [&](auto&& self, const SixTuple& s, int left) -> void {
        if (left == 0) return;
        for (Move mv : {Move::Left, Move::Right}) {
          SixTuple child = apply_move(s, mv);
          check(child);
          self(self, child, left - 1);
        }
      };
      rec(rec, rows.back(), depth);
      if (ok) {
        std::cout << "ok: " << checked << " nodes satisfy the equation\n";
      } else {
        std::cout << "FAIL at " << serialize(bad) << "\n";
        return 1;
      }
    } else if (*cmd_witness) {
      ChartPoint p;
      if (!point_text.empty()) {
        auto coords = parse_rational_list(point_text, 2);
        p = {coords[0], coords[1]};
      } else {
        auto root = parse_rational_list(root_text, 3);
        if (root[2] <= 0)
          throw std::invalid_argument("--root needs gamma > 0; use --point");
        p = {root[0] / root[2], root[1] / root[2]};
      }
      auto witness = find_witness(p, max_depth);
      if (witness) {
        std::cout << "witness word=" << format_move_path(witness->word)
                  << " row=" << witness->step_index << " slot="
                  << "abc"[witness->slot] << " value="
                  << value_text(witness->value, approx) << "\n";
      } else {
        std::cout << "no witness to depth " << max_depth << "\n";
      }
    } else if (*cmd_region) {
      auto bb = parse_rational_list(bbox_text, 4);
      auto rows = grid_scan(box(bb[0], bb[1], bb[2], bb[3]),
                            parse_rational(spacing_text), depth, jobs);
      if (format == "svg") {
        auto outer = polygon_intersect(halfplanes_to_depth(std::min(depth, 8)),
                                       box(bb[0], bb[1], bb[2], bb[3]));
        write_output(grid_svg(rows, outer ? *outer : ConvexPolygon{}),
                     out_path);
      } else {
        write_output(grid_csv(rows), out_path);
      }
    } else if (*cmd_constraints) {
      if (opt_matrix->count() > 0) {
        write_output(matrix_csv(transfer_matrix(parse_move_path(matrix_word))),
                     out_path);
      } else {
        auto planes = halfplanes_to_depth(depth);
        if (format == "svg") {
          auto outer = polygon_intersect(
              planes, box(Rational(-1), Rational(3), Rational(-1), Rational(3)));
          write_output(grid_svg({}, outer ? *outer : ConvexPolygon{}), out_path);
        } else {
          write_output(halfplanes_csv(planes), out_path);
        }
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
