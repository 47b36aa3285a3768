#pragma once

#include <cstddef>
#include <vector>

#include "wvp/arrangement.hpp"
#include "wvp/io.hpp"
#include "wvp/polygon.hpp"
#include "wvp/spt.hpp"
#include "wvp/triangulation.hpp"

namespace wvp {

/// Extension of segment v-u beyond the reflex vertex u, up to the first
/// boundary hit. Crossing it toggles the visibility of v and nothing else.
struct CriticalConstraint {
  std::size_t u = 0;  // reflex anchor
  std::size_t v = 0;  // vertex whose visibility changes
  Point2 start;       // = P[u]
  Point2 end;         // boundary hit
  std::size_t hit_edge = 0;
  int hidden_side = 0;  // sign of orient(P[v], P[u], x) for x on the side that cannot see v
};

struct VisibilityRegion {
  Ring boundary;
  Point2 rep;
  std::vector<std::size_t> visible;  // sorted vertex indices
};

/// Arc from -> to: crossing from `from` into `to` gains vertex `gained`.
struct RegionArc {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t gained = 0;
  std::size_t constraint = 0;
};

struct RegionGraph {
  std::vector<RegionArc> arcs;
  std::vector<std::vector<std::size_t>> out;  // arc ids leaving each region
  std::vector<std::vector<std::size_t>> in;   // arc ids entering each region
  std::vector<std::size_t> sinks;             // regions without entering arcs
};

struct SinkData {
  std::size_t region = 0;
  Point2 rep;
  ShortestPathTree spt;
  CriticalInfo crit;
  std::vector<std::size_t> visible;
  /// (primary vertex, child) pairs: the 1st type secondary edges.
  std::vector<std::pair<std::size_t, std::size_t>> first_type;
};

struct Decomposition {
  SimplePolygon polygon;
  std::vector<CriticalConstraint> constraints;
  Arrangement arrangement;
  std::vector<VisibilityRegion> regions;
  RegionGraph graph;
  std::vector<SinkData> sinks;
  std::vector<long> sink_index;  // per region, index into sinks or -1

  std::size_t size() const { return polygon.size(); }
};

/// Reflex vertices of a counterclockwise ring.
std::vector<bool> reflex_vertices(const Ring& ring);

std::vector<CriticalConstraint> enumerate_constraints(const SimplePolygon& P);
/// Arrangement of the carriers, regions with visibility sets and the gain graph.
Decomposition build_decomposition(const SimplePolygon& P, std::vector<CriticalConstraint> constraints);
/// Region strictly containing x. Throws OnCarrier on a carrier and
/// InvalidArgument outside the open polygon.
std::size_t locate_region(const Decomposition& D, const Point2& x);
void precompute_sinks(Decomposition& D);
/// Full preprocessing: constraints, decomposition and sink data.
Decomposition preprocess(const SimplePolygon& P);

/// Arc ids of a loss path from `region` to a sink, taking the entering arc
/// with the smallest gained vertex at each step.
std::vector<std::size_t> loss_path(const Decomposition& D, std::size_t region);

Json decomposition_to_json(const Decomposition& D);
/// Restores a saved decomposition; the arrangement is rebuilt from the carriers.
Decomposition decomposition_from_json(const Json& j);

}  // namespace wvp
