#pragma once

#include <cstddef>
#include <vector>

#include "wvp/polygon.hpp"
#include "wvp/spt.hpp"

namespace wvp {

/// Where an output vertex comes from.
struct VertexTag {
  enum class Kind { Vertex, OnEdge, Steiner };
  Kind kind = Kind::Steiner;
  int ring = 0;     // 0 = outer, 1.. = holes
  long index = -1;  // vertex index (Vertex) or edge index (OnEdge)

  static VertexTag vertex(int r, long i) { return {Kind::Vertex, r, i}; }
  static VertexTag on_edge(int r, long e) { return {Kind::OnEdge, r, e}; }
  static VertexTag steiner() { return {}; }
  bool operator==(const VertexTag&) const = default;
};

/// Source edge of a ring edge: (ring, edge), or edge = -1 for chords and cut
/// segments, which are not part of the input boundary.
struct EdgeRef {
  int ring = 0;
  long edge = -1;
};

struct WvpPolygon {
  Ring vertices;
  std::vector<VertexTag> tags;

  std::size_t size() const { return vertices.size(); }
};

/// A ring with a distinguished edge ring[chord] -> ring[chord + 1] carrying the
/// viewing segment. Interior on the left (counterclockwise); may be weakly simple.
struct ChordProblem {
  Ring ring;
  std::vector<VertexTag> tags;
  std::vector<EdgeRef> edge_source;  // per ring edge i -> i+1
  std::size_t chord = 0;
};

struct ChordStats {
  std::size_t cuts = 0;
  std::size_t visited = 0;     // SPT vertices reached by the two depth-first passes
  std::size_t spt_vertices = 0;  // vertices in the two trees that were built
};

/// Drops consecutive duplicates and straight vertices, then rotates to the
/// lexicographically smallest vertex sequence. Spikes (zero-angle turns) stay.
void canonicalize(WvpPolygon& W);
bool same_polygon(const WvpPolygon& a, const WvpPolygon& b);

/// Two-pass cut algorithm: depth-first over SPT(ring[chord]) cutting pockets
/// hidden behind a vertex whose two boundary neighbours lie strictly right of the
/// path's last edge, then over SPT(ring[chord+1]) rebuilt in the remainder,
/// cutting on the mirrored side.
WvpPolygon wvp_of_chord(const ChordProblem& problem, ChordStats* stats = nullptr);
/// pq is edge `edge` of P.
WvpPolygon wvp_of_chord(const SimplePolygon& P, std::size_t edge, ChordStats* stats = nullptr);

/// Chord problem of one split piece; the viewing segment pq is inserted into
/// the chord A-B. `left` selects the piece left of p->q (viewed from p first).
ChordProblem chord_problem_from_split(const SplitResult& split, bool left, const QuerySegment& pq);

/// Joins the two piece results along the chord A-B.
WvpPolygon glue_pieces(const WvpPolygon& left, const WvpPolygon& right, const Point2& A,
                       const Point2& B);

WvpPolygon wvp_of_segment(const SimplePolygon& P, const QuerySegment& pq,
                          ChordStats* stats = nullptr);

}  // namespace wvp
