#include "markoff/positivity.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace markoff {

Rational evaluate(const HalfPlane& h, const ChartPoint& p) {
  return h.u * p.alpha + h.v * p.beta + h.w;
}

std::vector<HalfPlane> edge_halfplanes(const ConvexPolygon& poly) {
  std::vector<HalfPlane> out;
  const auto& v = poly.vertices;
  size_t n = v.size();
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    const ChartPoint& p = v[i];
    const ChartPoint& q = v[(i + 1) % n];
    // inward normal of the CCW edge p -> q is (-dy, dx)
    Rational uu = -(q.beta - p.beta);
    Rational vv = q.alpha - p.alpha;
    Rational w = -(uu * p.alpha + vv * p.beta);
    out.push_back({uu, vv, w});
  }
  return out;
}

bool contains(const ConvexPolygon& poly, const ChartPoint& p) {
  for (const HalfPlane& h : edge_halfplanes(poly))
    if (evaluate(h, p) < 0) return false;
  return true;
}

bool strictly_contains(const ConvexPolygon& poly, const ChartPoint& p) {
  for (const HalfPlane& h : edge_halfplanes(poly))
    if (evaluate(h, p) <= 0) return false;
  return true;
}

Rational distance_sq(const ConvexPolygon& poly, const ChartPoint& p) {
  if (contains(poly, p)) return 0;
  const auto& v = poly.vertices;
  size_t n = v.size();
  Rational best = -1;
  for (size_t i = 0; i < n; ++i) {
    const ChartPoint& a = v[i];
    const ChartPoint& b = v[(i + 1) % n];
    Rational abx = b.alpha - a.alpha, aby = b.beta - a.beta;
    Rational apx = p.alpha - a.alpha, apy = p.beta - a.beta;
    Rational len2 = abx * abx + aby * aby;
    Rational t = len2 == 0 ? Rational(0) : (apx * abx + apy * aby) / len2;
    if (t < 0) t = 0;
    if (t > 1) t = 1;
    Rational dx = apx - t * abx, dy = apy - t * aby;
    Rational d2 = dx * dx + dy * dy;
    if (best < 0 || d2 < best) best = d2;
  }
  return best;
}

ConvexPolygon box(const Rational& alpha_min, const Rational& alpha_max,
                  const Rational& beta_min, const Rational& beta_max) {
  if (alpha_min > alpha_max || beta_min > beta_max)
    throw std::invalid_argument("empty box");
  return {{{alpha_min, beta_min},
           {alpha_max, beta_min},
           {alpha_max, beta_max},
           {alpha_min, beta_max}}};
}

ConvexPolygon conjectured_quadrilateral() {
  return {{{Rational(0), Rational(0)},
           {Rational(1, 2), Rational(0)},
           {Rational(1), Rational(1)},
           {Rational(0), Rational(2)}}};
}

namespace {

// All-integer tuple for the deep walks. Bodies stay integral on the tree
// and the shadow part is linear in the root shadows, so scaling the root
// shadows by the common denominator keeps everything in mpz and avoids
// mpq canonicalization on huge values. Positivity is unaffected by the
// positive scale.
struct IntTuple {
  Integer a, alpha, b, beta, c, gamma;
};

Integer exact_div(const Integer& num, const Integer& den) {
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(),
              den.get_mpz_t());
  if (r != 0) throw std::logic_error("non-integral tree value");
  return q;
}

IntTuple int_move(const IntTuple& s, Move mv) {
  if (mv == Move::Left) {
    Integer c = exact_div(s.a * s.a + s.c * s.c, s.b);
    Integer gamma = exact_div(
        -c * s.beta + 2 * s.a * s.alpha + 2 * s.c * s.gamma, s.b);
    return {s.a, s.alpha, s.c, s.gamma, std::move(c), std::move(gamma)};
  }
  Integer c = exact_div(s.b * s.b + s.c * s.c, s.a);
  Integer gamma =
      exact_div(-c * s.alpha + 2 * s.b * s.beta + 2 * s.c * s.gamma, s.a);
  return {s.c, s.gamma, s.b, s.beta, std::move(c), std::move(gamma)};
}

int negative_slot(const IntTuple& s) {
  if (s.alpha < 0) return 0;
  if (s.beta < 0) return 1;
  if (s.gamma < 0) return 2;
  return -1;
}

const Integer& slot_value(const IntTuple& s, int slot) {
  return slot == 0 ? s.alpha : slot == 1 ? s.beta : s.gamma;
}

// Scaled integer root for chart point (alpha, beta, 1); scale is the
// common denominator.
IntTuple scaled_root(const ChartPoint& p, Integer& scale) {
  scale = lcm(p.alpha.get_den(), p.beta.get_den());
  return {1,
          p.alpha.get_num() * (scale / p.alpha.get_den()),
          1,
          p.beta.get_num() * (scale / p.beta.get_den()),
          1,
          scale};
}

bool positive_rec(const IntTuple& s, int depth_left) {
  if (negative_slot(s) >= 0) return false;
  if (depth_left == 0) return true;
  return positive_rec(int_move(s, Move::Left), depth_left - 1) &&
         positive_rec(int_move(s, Move::Right), depth_left - 1);
}

// Depth-limited search checking only nodes at the target level; children
// are visited L before R, so running levels in order reproduces a
// breadth-first scan.
std::optional<NegativityWitness> witness_at_level(const IntTuple& s,
                                                  MovePath& word,
                                                  int remaining,
                                                  const Integer& scale) {
  if (remaining == 0) {
    int slot = negative_slot(s);
    if (slot < 0) return std::nullopt;
    Rational value(slot_value(s, slot), scale);
    value.canonicalize();
    return NegativityWitness{word, static_cast<int>(word.size()) + 2, slot,
                             std::move(value)};
  }
  for (Move mv : {Move::Left, Move::Right}) {
    word.push_back(mv);
    auto found = witness_at_level(int_move(s, mv), word, remaining - 1, scale);
    word.pop_back();
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace

bool is_positive_to_depth(const ChartPoint& p, int depth) {
  if (depth < 0) throw std::invalid_argument("negative depth");
  Integer scale;
  IntTuple root = scaled_root(p, scale);
  if (negative_slot(root) >= 0) return false;
  IntTuple after_r = int_move(root, Move::Right);
  if (negative_slot(after_r) >= 0) return false;
  return positive_rec(int_move(after_r, Move::Left), depth);
}

std::optional<NegativityWitness> find_witness(const ChartPoint& p,
                                              int max_depth) {
  if (max_depth < 1) throw std::invalid_argument("max_depth must be >= 1");
  Integer scale;
  IntTuple rows[3];
  rows[0] = scaled_root(p, scale);
  rows[1] = int_move(rows[0], Move::Right);
  rows[2] = int_move(rows[1], Move::Left);
  for (int row = 0; row < 3; ++row) {
    int slot = negative_slot(rows[row]);
    if (slot >= 0) {
      Rational value(slot_value(rows[row], slot), scale);
      value.canonicalize();
      return NegativityWitness{{}, row, slot, std::move(value)};
    }
  }
  MovePath word;
  for (int level = 1; level <= max_depth; ++level) {
    auto found = witness_at_level(rows[2], word, level, scale);
    if (found) return found;
  }
  return std::nullopt;
}

namespace {

struct ProbeBest {
  bool found = false;
  MovePath word;
  int slot = 0;
  Integer value;
};

// DFS of the suffix subtree under a fixed run prefix, keeping the
// lexicographically first witness of minimal total length.
void probe_suffix(const IntTuple& s, MovePath& word, int suffix_left,
                  ProbeBest& best) {
  if (best.found && word.size() >= best.word.size()) return;
  int slot = negative_slot(s);
  if (slot >= 0) {
    best.found = true;
    best.word = word;
    best.slot = slot;
    best.value = slot_value(s, slot);
    return;
  }
  if (suffix_left == 0) return;
  for (Move mv : {Move::Left, Move::Right}) {
    word.push_back(mv);
    probe_suffix(int_move(s, mv), word, suffix_left - 1, best);
    word.pop_back();
  }
}

}  // namespace

std::optional<NegativityWitness> deep_witness_probe(const ChartPoint& p,
                                                    int max_run,
                                                    int max_suffix) {
  if (max_run < 0 || max_suffix < 0)
    throw std::invalid_argument("probe bounds must be nonnegative");
  Integer scale;
  IntTuple root = scaled_root(p, scale);
  IntTuple prefix = int_move(int_move(root, Move::Right), Move::Left);
  ProbeBest best;
  for (Move run : {Move::Left, Move::Right}) {
    IntTuple s = prefix;
    MovePath word;
    for (int j = 0; j <= max_run; ++j) {
      // an l-family candidate of equal length beats any r-family one
      if (best.found &&
          word.size() >= best.word.size() + (run == Move::Left ? 0 : 1))
        break;
      probe_suffix(s, word, max_suffix, best);
      s = int_move(s, run);
      word.push_back(run);
    }
  }
  if (!best.found) return std::nullopt;
  Rational value(best.value, scale);
  value.canonicalize();
  return NegativityWitness{best.word, static_cast<int>(best.word.size()) + 2,
                           best.slot, std::move(value)};
}

namespace {

HalfPlane normalized_row(const Rational& u, const Rational& v,
                         const Rational& w) {
  // Scale to coprime integers, keeping the inequality direction.
  Integer den = lcm(lcm(u.get_den(), v.get_den()), w.get_den());
  Integer a = u.get_num() * (den / u.get_den());
  Integer b = v.get_num() * (den / v.get_den());
  Integer c = w.get_num() * (den / w.get_den());
  Integer g = gcd(gcd(abs(a), abs(b)), abs(c));
  if (g > 1) {
    a /= g;
    b /= g;
    c /= g;
  }
  return {Rational(a), Rational(b), Rational(c)};
}

struct HalfPlaneLess {
  bool operator()(const HalfPlane& x, const HalfPlane& y) const {
    if (x.u != y.u) return x.u < y.u;
    if (x.v != y.v) return x.v < y.v;
    return x.w < y.w;
  }
};

void collect_rows(const TransferMatrix& M,
                  std::set<HalfPlane, HalfPlaneLess>& out) {
  for (int i = 0; i < 3; ++i)
    out.insert(normalized_row(M.m[i][0], M.m[i][1], M.m[i][2]));
}

void halfplane_rec(const TransferMatrix& M, const SixTuple& bodies,
                   int depth_left, std::set<HalfPlane, HalfPlaneLess>& out);

}  // namespace

std::vector<HalfPlane> halfplanes_to_depth(int depth) {
  if (depth < 0) throw std::invalid_argument("negative depth");
  std::set<HalfPlane, HalfPlaneLess> rows;
  // Prefix rows: the root shadows themselves and the node after the first
  // mandatory move.
  TransferMatrix id;
  id.m = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  collect_rows(id, rows);
  TransferMatrix after_r = move_matrix(Move::Right, 1, 1, 1);
  collect_rows(after_r, rows);

  // Walk the tree carrying the matrix; bodies ride along in a six-tuple
  // with the double-tree shadows (unused here beyond the classical part).
  struct Frame {
    TransferMatrix M;
    Rational a, b, c;
    int depth_left;
  };
  std::vector<Frame> stack;
  TransferMatrix prefix = transfer_matrix({});
  stack.push_back({prefix, 1, 2, 5, depth});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    collect_rows(f.M, rows);
    if (f.depth_left == 0) continue;
    {
      TransferMatrix step = move_matrix(Move::Left, f.a, f.b, f.c);
      TransferMatrix M;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          Rational sum = 0;
          for (int k = 0; k < 3; ++k) sum += step.m[i][k] * f.M.m[k][j];
          M.m[i][j] = sum;
        }
      Rational cp = (f.a * f.a + f.c * f.c) / f.b;
      stack.push_back({std::move(M), f.a, f.c, cp, f.depth_left - 1});
    }
    {
      TransferMatrix step = move_matrix(Move::Right, f.a, f.b, f.c);
      TransferMatrix M;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          Rational sum = 0;
          for (int k = 0; k < 3; ++k) sum += step.m[i][k] * f.M.m[k][j];
          M.m[i][j] = sum;
        }
      Rational cp = (f.b * f.b + f.c * f.c) / f.a;
      stack.push_back({std::move(M), f.c, f.b, cp, f.depth_left - 1});
    }
  }
  return {rows.begin(), rows.end()};
}

std::optional<ConvexPolygon> polygon_intersect(
    const std::vector<HalfPlane>& constraints, const ConvexPolygon& bbox) {
  if (bbox.vertices.size() < 3) throw std::invalid_argument("empty bbox");
  std::vector<ChartPoint> poly = bbox.vertices;
  for (const HalfPlane& h : constraints) {
    if (h.u == 0 && h.v == 0) {
      if (h.w >= 0) continue;  // vacuous
      return std::nullopt;     // infeasible
    }
    std::vector<ChartPoint> clipped;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
      const ChartPoint& cur = poly[i];
      const ChartPoint& nxt = poly[(i + 1) % n];
      Rational ec = evaluate(h, cur);
      Rational en = evaluate(h, nxt);
      if (ec >= 0) clipped.push_back(cur);
      if ((ec < 0) != (en < 0)) {
        Rational t = ec / (ec - en);
        clipped.push_back({cur.alpha + t * (nxt.alpha - cur.alpha),
                           cur.beta + t * (nxt.beta - cur.beta)});
      }
    }
    // drop duplicate consecutive vertices introduced by clipping
    std::vector<ChartPoint> dedup;
    for (const ChartPoint& p : clipped) {
      if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(p);
    }
    while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
    poly = std::move(dedup);
    if (poly.size() < 3) return std::nullopt;
  }
  // canonical start: lexicographically smallest vertex first
  auto smallest = std::min_element(
      poly.begin(), poly.end(), [](const ChartPoint& x, const ChartPoint& y) {
        return x.alpha != y.alpha ? x.alpha < y.alpha : x.beta < y.beta;
      });
  std::rotate(poly.begin(), smallest, poly.end());
  return ConvexPolygon{std::move(poly)};
}

std::vector<GridRow> grid_scan(const ConvexPolygon& bbox,
                               const Rational& spacing, int depth, int jobs) {
  if (spacing <= 0) throw std::invalid_argument("spacing must be positive");
  if (jobs < 1) jobs = 1;

  Rational amin = bbox.vertices[0].alpha, amax = amin;
  Rational bmin = bbox.vertices[0].beta, bmax = bmin;
  for (const ChartPoint& v : bbox.vertices) {
    amin = std::min(amin, v.alpha);
    amax = std::max(amax, v.alpha);
    bmin = std::min(bmin, v.beta);
    bmax = std::max(bmax, v.beta);
  }
  auto first_index = [&](const Rational& lo) {
    // smallest k with k*spacing >= lo
    Rational q = lo / spacing;
    Integer k;
    mpz_cdiv_q(k.get_mpz_t(), q.get_num().get_mpz_t(),
               q.get_den().get_mpz_t());
    return k;
  };
  std::vector<GridRow> rows;
  ConvexPolygon quad = conjectured_quadrilateral();
  for (Integer j = first_index(bmin); Rational(j) * spacing <= bmax; ++j) {
    Rational beta = Rational(j) * spacing;
    for (Integer i = first_index(amin); Rational(i) * spacing <= amax; ++i) {
      Rational alpha = Rational(i) * spacing;
      ChartPoint p{alpha, beta};
      if (!contains(bbox, p)) continue;
      GridRow row;
      row.point = p;
      row.inside_conjecture = contains(quad, p);
      rows.push_back(std::move(row));
    }
  }

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t idx = next.fetch_add(1);
      if (idx >= rows.size()) return;
      GridRow& row = rows[idx];
      row.positive_to_depth = is_positive_to_depth(row.point, depth);
      if (!row.positive_to_depth) {
        row.witness = find_witness(row.point, depth);
      } else {
        // points positive to this depth can still leave the region much
        // deeper; the run-plus-suffix probe reaches those witnesses
        row.witness = deep_witness_probe(row.point);
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return rows;
}

std::string grid_csv(const std::vector<GridRow>& rows) {
  std::ostringstream os;
  os << "alpha,beta,inside_conjecture,positive_to_depth,witness_word\n";
  for (const GridRow& r : rows) {
    os << r.point.alpha << "," << r.point.beta << ","
       << (r.inside_conjecture ? "true" : "false") << ","
       << (r.positive_to_depth ? "true" : "false") << ","
       << (r.witness ? format_move_path(r.witness->word) : "") << "\n";
  }
  return os.str();
}

std::string halfplanes_csv(const std::vector<HalfPlane>& planes) {
  std::ostringstream os;
  os << "u,v,w\n";
  for (const HalfPlane& h : planes)
    os << h.u << "," << h.v << "," << h.w << "\n";
  return os.str();
}

namespace {

double approx(const Rational& q) { return mpq_get_d(q.get_mpq_t()); }

}  // namespace

std::string grid_svg(const std::vector<GridRow>& rows,
                     const ConvexPolygon& outer) {
  double xmin = 1e9, xmax = -1e9, ymin = 1e9, ymax = -1e9;
  auto take = [&](double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  };
  for (const GridRow& r : rows) take(approx(r.point.alpha), approx(r.point.beta));
  for (const ChartPoint& v : outer.vertices)
    take(approx(v.alpha), approx(v.beta));
  for (const ChartPoint& v : conjectured_quadrilateral().vertices)
    take(approx(v.alpha), approx(v.beta));
  if (xmax <= xmin) xmax = xmin + 1;
  if (ymax <= ymin) ymax = ymin + 1;

  const double size = 600.0, margin = 30.0;
  auto sx = [&](double x) {
    return margin + (x - xmin) / (xmax - xmin) * (size - 2 * margin);
  };
  auto sy = [&](double y) {
    return size - margin - (y - ymin) / (ymax - ymin) * (size - 2 * margin);
  };
  auto poly_points = [&](const ConvexPolygon& poly) {
    std::ostringstream os;
    for (size_t i = 0; i < poly.vertices.size(); ++i) {
      if (i) os << " ";
      os << sx(approx(poly.vertices[i].alpha)) << ","
         << sy(approx(poly.vertices[i].beta));
    }
    return os.str();
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
     << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " " << size
     << "\">\n";
  os << "<polygon points=\"" << poly_points(outer)
     << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1.5\"/>\n";
  os << "<polygon points=\"" << poly_points(conjectured_quadrilateral())
     << "\" fill=\"#3050c0\" fill-opacity=\"0.35\" stroke=\"#3050c0\"/>\n";
  for (const GridRow& r : rows) {
    double x = sx(approx(r.point.alpha)), y = sy(approx(r.point.beta));
    if (r.positive_to_depth) {
      os << "<circle cx=\"" << x << "\" cy=\"" << y
         << "\" r=\"2.2\" fill=\"#207020\"/>\n";
    } else {
      os << "<path d=\"M" << x - 2.5 << " " << y - 2.5 << "L" << x + 2.5 << " "
         << y + 2.5 << "M" << x - 2.5 << " " << y + 2.5 << "L" << x + 2.5
         << " " << y - 2.5 << "\" stroke=\"#c03030\" stroke-width=\"1\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace markoff
