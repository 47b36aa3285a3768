#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wvp/polygon.hpp"

namespace wvp {

/// Random simple polygon on n lattice points in general position, built by
/// recursive space partitioning. Deterministic in (n, seed).
SimplePolygon random_simple_polygon(std::size_t n, std::uint64_t seed);

/// Random outer polygon plus h small convex holes, all in general position.
PolygonWithHoles random_polygon_with_holes(std::size_t outer_n, std::size_t h, std::uint64_t seed);

/// Convex k-gon with vertices exactly on a circle of radius `radius`.
SimplePolygon convex_polygon(std::size_t k, long radius = 1000);

/// Deterministic jitter of every vertex by at most `eps` (a lattice rational)
/// until the result is valid and in general position.
PolygonWithHoles perturb(const PolygonWithHoles& P, std::uint64_t seed, const Scalar& eps);

/// Interior segment whose supporting line avoids every vertex.
QuerySegment random_query(const std::vector<Ring>& rings, std::mt19937_64& rng);

// Fixed pedagogical instances (already perturbed into general position).
SimplePolygon notch_square();          // pockets hanging from the top edge
SimplePolygon two_notch_square();      // one pocket on the top, one on the bottom
SimplePolygon comb_polygon(std::size_t teeth);
SimplePolygon spiral_polygon(std::size_t turns);
/// Query room with a double-bend corridor leading to a convex chamber of
/// `chamber` vertices; the chamber is hidden from the fixed query segment.
SimplePolygon padded_fixed_k(std::size_t chamber);
QuerySegment padded_fixed_k_query();
/// Holes arranged so that the see-through recursion activates more diagonals
/// than there are holes.
PolygonWithHoles staircase_holes();
QuerySegment staircase_query();

struct CorpusEntry {
  std::string id;
  std::string family;
  PolygonWithHoles polygon;
};

std::vector<CorpusEntry> pedagogical_set();
/// `count` random simple polygons with n drawn from [n_min, n_max].
std::vector<CorpusEntry> random_simple_corpus(std::size_t count, std::size_t n_min,
                                              std::size_t n_max, std::uint64_t seed);
/// `count` random polygons with holes, h drawn from [h_min, h_max].
std::vector<CorpusEntry> random_holes_corpus(std::size_t count, std::size_t h_min,
                                             std::size_t h_max, std::size_t outer_n,
                                             std::uint64_t seed);

}  // namespace wvp
