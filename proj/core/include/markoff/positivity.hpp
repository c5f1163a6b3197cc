#ifndef MARKOFF_POSITIVITY_HPP
#define MARKOFF_POSITIVITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "markoff/linearity.hpp"
#include "markoff/rational.hpp"
#include "markoff/treewalk.hpp"

namespace markoff {

// Point in the affine chart gamma = 1.
struct ChartPoint {
  Rational alpha, beta;

  friend bool operator==(const ChartPoint&, const ChartPoint&) = default;
};

// Constraint u*alpha + v*beta + w >= 0.
struct HalfPlane {
  Rational u, v, w;

  friend bool operator==(const HalfPlane&, const HalfPlane&) = default;
};

Rational evaluate(const HalfPlane& h, const ChartPoint& p);

// Counterclockwise vertex list; the closed region is the intersection of
// the edge half-planes.
struct ConvexPolygon {
  std::vector<ChartPoint> vertices;
};

std::vector<HalfPlane> edge_halfplanes(const ConvexPolygon& poly);
bool contains(const ConvexPolygon& poly, const ChartPoint& p);   // closed
bool strictly_contains(const ConvexPolygon& poly, const ChartPoint& p);

// Squared Euclidean distance from p to the closed polygon (0 inside).
Rational distance_sq(const ConvexPolygon& poly, const ChartPoint& p);

// Axis-aligned box as a polygon.
ConvexPolygon box(const Rational& alpha_min, const Rational& alpha_max,
                  const Rational& beta_min, const Rational& beta_max);

// The conjectured positivity region: vertices (0,0), (1/2,0), (1,1),
// (0,2); equivalently alpha >= 0, beta >= 0, 2a-b <= 1, a+b <= 2.
ConvexPolygon conjectured_quadrilateral();

// A node and slot at which a shadow component goes negative, certifying
// that the root lies outside the positivity region. step_index is the row
// in path(root, word) where the value sits (0..2 address the prefix rows).
struct NegativityWitness {
  MovePath word;
  int step_index = 0;
  int slot = 0;  // 0 = a-shadow, 1 = b-shadow, 2 = c-shadow
  Rational value;
};

// True iff every shadow component of every node with word length <= depth
// is >= 0 for root shadows (alpha, beta, 1), prefix rows included.
bool is_positive_to_depth(const ChartPoint& p, int depth);

// Breadth-first by word length, L before R at equal length, slots scanned
// a, b, c; the three prefix rows are checked before length-1 words.
// Returns the first strictly negative shadow, or nullopt.
std::optional<NegativityWitness> find_witness(const ChartPoint& p,
                                              int max_depth);

// Targeted search for witnesses too deep for the breadth-first scan:
// explores words of the form l^j or r^j followed by a suffix of length
// <= max_suffix, for runs j <= max_run. Near the slanted edges of the
// conjectured quadrilateral the first negative shadow appears on exactly
// such words, at depths far beyond what exhaustive search can reach.
// Deterministic: returns the minimal witness by word length, then
// l-run family before r-run family, then suffix lexicographic (L < R).
std::optional<NegativityWitness> deep_witness_probe(const ChartPoint& p,
                                                    int max_run = 64,
                                                    int max_suffix = 6);

// One half-plane per (node, slot) with word length <= depth, prefix rows
// included: the matrix row u*alpha + v*beta + w*1 >= 0 in the chart.
// Duplicates removed; rows normalized by the gcd of their entries.
std::vector<HalfPlane> halfplanes_to_depth(int depth);

// Exact clipping of bbox by each constraint in sequence. Returns nullopt
// for an empty intersection. Throws std::invalid_argument on an empty
// bbox or a vacuous constraint (u = v = 0, w < 0 is empty; u = v = 0,
// w >= 0 is skipped).
std::optional<ConvexPolygon> polygon_intersect(
    const std::vector<HalfPlane>& constraints, const ConvexPolygon& bbox);

struct GridRow {
  ChartPoint point;
  bool inside_conjecture = false;
  bool positive_to_depth = false;
  std::optional<NegativityWitness> witness;
};

// Classifies every lattice point of bbox with coordinates that are
// multiples of `spacing`. Row-major: beta ascending, then alpha
// ascending. `jobs` worker threads; output order is deterministic.
std::vector<GridRow> grid_scan(const ConvexPolygon& bbox,
                               const Rational& spacing, int depth,
                               int jobs = 1);

// CSV: header alpha,beta,inside_conjecture,positive_to_depth,witness_word
std::string grid_csv(const std::vector<GridRow>& rows);

// Draws the conjectured quadrilateral, the depth-d outer polygon, and the
// classified grid points (filled = positive, cross = witness found).
std::string grid_svg(const std::vector<GridRow>& rows,
                     const ConvexPolygon& outer);

std::string halfplanes_csv(const std::vector<HalfPlane>& planes);

}  // namespace markoff

#endif
