#pragma once

#include <cstddef>
#include <vector>

#include "wvp/arrangement.hpp"
#include "wvp/polygon.hpp"
#include "wvp/regions.hpp"
#include "wvp/wvp_simple.hpp"

namespace wvp {

/// Cut of one hole: from its vertex nearest to l along l's direction. The main
/// cut runs toward p - q, the companion cut toward q - p.
struct HoleCut {
  std::size_t hole = 0;    // index into PolygonWithHoles::holes
  std::size_t anchor = 0;  // vertex index in the hole ring
  Point2 h;                // the anchor vertex
  Point2 left;             // end of the main cut
  Point2 right;            // end of the companion cut
  Scalar height;           // |orient(p, q, h)|, proportional to the distance to l

  Segment diagonal() const { return {left, h}; }
};

/// One side of l: the free space on that side with pq on its boundary.
struct SideProblem {
  bool left = true;       // side left of p -> q
  ChordProblem base;      // outer boundary of the side, holes not yet attached
  std::vector<Ring> rings;  // base ring followed by the side's holes
  std::vector<HoleCut> cuts;  // nearest first
};

struct CutDiagonalSet {
  PolygonWithHoles polygon;
  QuerySegment pq;
  std::vector<SideProblem> sides;  // left side, then right side

  std::size_t cut_count() const;
};

/// Splits along l and builds the cuts of every hole on each side. Throws
/// UnsupportedDegeneracy when l meets a vertex, a hole has two nearest
/// vertices, two holes are equally near, or a cut ends at a vertex.
CutDiagonalSet build_cuts(const PolygonWithHoles& P, const QuerySegment& pq);

/// Side ring with every hole attached by a doubled slit: the companion cut for
/// holes with flipped[i] set (i indexes side.cuts), the main cut otherwise.
ChordProblem opened_problem(const SideProblem& side, const std::vector<bool>& flipped);

/// Part of the weak visibility polygon of the chord beyond `diagonal`. Both
/// diagonal endpoints lie on the ring; the diagonal must be a chord of it.
Region partial_wvp(const ChordProblem& problem, const Segment& diagonal);
/// The sub-ring beyond `diagonal`, away from the chord.
Ring far_ring(const ChordProblem& problem, const Segment& diagonal);

struct SeeThroughStep {
  int side = 0;                    // 0 left, 1 right
  std::vector<std::size_t> crossed;  // cut indices crossed, nearest first
  std::size_t subsegments = 0;     // visible sub-segments of the last diagonal that led here
};

struct HolesBasicResult {
  std::vector<Region> pieces;  // one per side, then one per see-through step
  std::vector<SeeThroughStep> steps;
  std::size_t h = 0;
  std::size_t h_prime = 0;        // see-through activations
  std::size_t subsegments = 0;    // visible diagonal sub-segments found
  std::size_t visible_holes = 0;  // holes whose diagonal carries a visible sub-segment
  /// (hole a, hole b): b was seen through a's diagonal.
  std::vector<std::pair<std::size_t, std::size_t>> see_through;
  bool acyclic = true;
  Region region;  // union of the pieces
};

HolesBasicResult wvp_holes_basic(const PolygonWithHoles& P, const QuerySegment& pq);

/// Critical constraint of a polygon with holes: the free segment `near`-`far`
/// on a line through two vertices with the boundary locally on one side at
/// both. A window extends it beyond `far` when the line meets pq.
struct HoleConstraint {
  std::size_t near = 0;  // global vertex indices (rings() order)
  std::size_t far = 0;
};

struct HolesPreprocessed {
  PolygonWithHoles polygon;
  std::vector<Point2> vertices;  // all ring vertices in rings() order
  std::vector<std::size_t> prev, next;  // ring neighbours, global indices
  /// Per far vertex: constraints ending there, sorted by the direction near - far.
  std::vector<std::vector<HoleConstraint>> fan;
  std::size_t constraint_count = 0;
};

HolesPreprocessed preprocess_holes(const PolygonWithHoles& P);

/// Sight line from t on pq grazing `near` (or starting at p or q) and passing
/// `far`, extended beyond `far` to the boundary.
struct Window {
  std::size_t far = 0;
  long near = -1;  // global vertex index; -1 for p, -2 for q
  Point2 t;        // on pq
  Segment segment;  // far -> boundary hit
};

/// Windows through every vertex, found by angular binary search over the fans
/// and exact filtering; per far vertex.
std::vector<std::vector<Window>> query_constraints(const HolesPreprocessed& H, const QuerySegment& pq);
/// Exhaustive scan over all vertex pairs, for testing.
std::vector<std::vector<Window>> query_constraints_naive(const HolesPreprocessed& H, const QuerySegment& pq);

struct LabeledInterval {
  Scalar t0, t1;  // parameters on pq
  long diagonal = -1;  // global cut index (CutDiagonalSet order) last crossed, -1 for direct
};

/// Parts of pq visible from vertex v, split where the crossed diagonal changes.
std::vector<LabeledInterval> sweep_visible_parts(const HolesPreprocessed& H, const CutDiagonalSet& cuts,
                                                 std::size_t v);

struct ConstraintArrangement {
  Arrangement arrangement;
  std::vector<bool> free;     // per face: inside the free space
  std::vector<bool> visible;  // per face
  std::vector<std::size_t> crossing;  // per global cut: windows crossing its diagonal
  std::size_t windows = 0;
};

struct HolesImprovedResult {
  ConstraintArrangement arrangement;
  Region region;
  std::size_t h = 0;
  std::size_t visible_holes = 0;  // diagonals labelling a visible part in some sweep
  std::size_t constraints = 0;    // windows
  std::size_t cells = 0;
  std::size_t visible_cells = 0;
  std::size_t k = 0;  // boundary complexity
};

ConstraintArrangement build_constraint_arrangement(const HolesPreprocessed& H, const CutDiagonalSet& cuts,
                                                   const std::vector<std::vector<Window>>& windows);
/// Boundary cycles of the visible free cells.
Region extract_boundary(const ConstraintArrangement& C);
HolesImprovedResult wvp_holes_improved(const HolesPreprocessed& H, const QuerySegment& pq);

}  // namespace wvp
