// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "wvp/bench.hpp"
#include "wvp/generate.hpp"
#include "wvp/oracle.hpp"
#include "wvp/regions.hpp"
#include "wvp/spt.hpp"
#include "wvp/vis_decomp.hpp"
#include "wvp/wvp_holes.hpp"
#include "wvp/wvp_query.hpp"
#include "wvp/wvp_simple.hpp"

using namespace wvp;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

bool report(int id, const std::string& name, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s %d %s (%.1fs) %s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), s, o.detail.str().c_str());
  std::fflush(stdout);
  return o.pass;
}

bool member(const WvpPolygon& W, const Point2& x) {
  return point_in(std::vector<Ring>{W.vertices}, x) != Location::Outside;
}
bool member(const Region& R, const Point2& x) { return region_locate(R, x) != Location::Outside; }

// Draws queries until `want` are accepted by `accept`; rejected draws are
// degenerate (the supporting line meets a vertex) and counted.
std::vector<QuerySegment> accepted_queries(const std::vector<Ring>& rings, std::size_t want, std::uint64_t seed,
                                           const std::function<bool(const QuerySegment&)>& accept,
                                           std::size_t& rejected) {
  std::mt19937_64 rng(seed);
  std::vector<QuerySegment> out;
  for (std::size_t tries = 0; out.size() < want && tries < 20 * want; ++tries) {
    QuerySegment pq = random_query(rings, rng);
    if (accept(pq))
      out.push_back(pq);
    else
      ++rejected;
  }
  return out;
}

std::vector<CorpusEntry> simple_corpus(std::size_t nmax) {
  std::vector<CorpusEntry> out;
  for (auto& e : pedagogical_set())
    if (e.polygon.hole_count() == 0 && e.polygon.total_vertices() <= nmax) out.push_back(std::move(e));
  for (auto& e : random_simple_corpus(12, 6, nmax, 2024)) out.push_back(std::move(e));
  return out;
}

std::optional<Point2> point_in_face(const Arrangement& A, std::size_t f, std::mt19937_64& rng) {
  const auto& F = A.faces[f];
  Ring outer = A.outer_ring(f);
  std::vector<Ring> inner = A.inner_rings(f);
  std::uniform_int_distribution<long> pick(0, static_cast<long>(outer.size()) - 1), num(1, 999);
  for (int attempt = 0; attempt < 200; ++attempt) {
    Point2 x = lerp(F.rep, outer[pick(rng)], frac(num(rng), 1000));
    if (locate_in_ring(outer, x) != Location::Inside) continue;
    bool in_hole = false;
    for (const Ring& r : inner) in_hole = in_hole || locate_in_ring(r, x) != Location::Outside;
    if (!in_hole && A.edge_at(x) < 0) return x;
  }
  return std::nullopt;
}

struct HolesCase {
  CorpusEntry entry;
  QuerySegment pq;
};

std::vector<HolesCase> holes_cases() {
  std::vector<HolesCase> out;
  for (const CorpusEntry& e : random_holes_corpus(10, 1, 4, 20, 77)) {
    std::size_t rejected = 0;
    auto queries = accepted_queries(e.polygon.rings(), 10, 78, [&](const QuerySegment& pq) {
      try {
        build_cuts(e.polygon, pq);
        return true;
      } catch (const Error& err) {
        if (err.code() != ErrorCode::UnsupportedDegeneracy) throw;
        return false;
      }
    }, rejected);
    for (const QuerySegment& pq : queries) out.push_back({e, pq});
  }
  return out;
}

void criterion1(Outcome& o) {
  std::size_t polygons = 0, queries = 0, points = 0, mismatches = 0, rejected = 0;
  for (const CorpusEntry& e : random_simple_corpus(20, 6, 40, 101)) {
    const SimplePolygon& P = e.polygon.outer;
    std::vector<Ring> rings{P.vertices};
    std::vector<WvpPolygon> outputs;
    auto qs = accepted_queries(rings, 20, 102, [&](const QuerySegment& pq) {
      try {
        outputs.push_back(wvp_of_segment(P, pq));
        return true;
      } catch (const Error& err) {
        if (err.code() != ErrorCode::UnsupportedDegeneracy) throw;
        return false;
      }
    }, rejected);
    if (qs.size() < 20) o.fail(e.id + " accepted only " + std::to_string(qs.size()) + " queries");
    ++polygons;
    for (std::size_t i = 0; i < qs.size(); ++i) {
      auto pts = oracle::sample_points(rings, 200, 103 + i);
      auto bad = oracle::compare_membership(rings, qs[i], pts, [&](const Point2& x) { return member(outputs[i], x); });
      ++queries;
      points += pts.size();
      mismatches += bad.size();
      if (!bad.empty()) o.fail(e.id + " query " + std::to_string(i));
    }
  }
  o.detail << polygons << " polygons, " << queries << " queries, " << points << " points, " << mismatches
           << " mismatches, " << rejected << " degenerate draws skipped";
}

void criterion2(Outcome& o) {
  std::size_t polygons = 0, queries = 0, deviations = 0, rejected = 0;
  for (const CorpusEntry& e : simple_corpus(25)) {
    QueryStructure S = build_query_structure(e.polygon.outer);
    std::vector<WvpPolygon> ref;
    auto qs = accepted_queries(e.polygon.rings(), 100, 201, [&](const QuerySegment& pq) {
      try {
        ref.push_back(wvp_of_segment(S.polygon(), pq));
        return true;
      } catch (const Error& err) {
        if (err.code() != ErrorCode::UnsupportedDegeneracy) throw;
        return false;
      }
    }, rejected);
    if (qs.size() < 100) o.fail(e.id + " accepted only " + std::to_string(qs.size()) + " queries");
    ++polygons;
    for (std::size_t i = 0; i < qs.size(); ++i) {
      ++queries;
      if (!same_polygon(query_wvp(S, qs[i]), ref[i])) {
        ++deviations;
        o.fail(e.id + " query " + std::to_string(i));
      }
    }
  }
  o.detail << polygons << " polygons, " << queries << " queries, " << deviations << " deviations, " << rejected
           << " degenerate draws skipped";
}

bool same_tree(const ShortestPathTree& a, const ShortestPathTree& b) {
  return a.parent == b.parent && a.root_children == b.root_children && a.children == b.children &&
         a.turn == b.turn && a.edge_class == b.edge_class && a.critical_number == b.critical_number;
}

void criterion3(Outcome& o) {
  std::size_t polygons = 0, arcs = 0, reps = 0, deviations = 0;
  for (const CorpusEntry& e : simple_corpus(15)) {
    QueryStructure S = build_query_structure(e.polygon.outer);
    const Decomposition& D = S.decomposition;
    ++polygons;
    for (const RegionArc& a : D.graph.arcs) {
      ++arcs;
      std::vector<std::size_t> expect = D.regions[a.from].visible;
      bool fresh = !std::binary_search(expect.begin(), expect.end(), a.gained);
      expect.insert(std::upper_bound(expect.begin(), expect.end(), a.gained), a.gained);
      if (!fresh || expect != D.regions[a.to].visible) {
        ++deviations;
        o.fail(e.id + " arc " + std::to_string(a.from) + "->" + std::to_string(a.to));
      }
    }
    for (std::size_t r = 0; r < D.regions.size(); ++r) {
      ++reps;
      const Point2& x = D.regions[r].rep;
      bool ok = same_tree(walk_to_viewpoint(S, x).tree.materialize(), compute_spt(D.polygon, x)) &&
                visible_vertices(D.polygon, x) == D.regions[r].visible;
      if (!ok) {
        ++deviations;
        o.fail(e.id + " region " + std::to_string(r));
      }
    }
  }
  o.detail << polygons << " polygons, " << arcs << " arcs, " << reps << " representatives, " << deviations
           << " deviations";
}

void criterion4(Outcome& o) {
  for (std::size_t k : {3, 5, 8, 12, 20, 32}) {
    Decomposition D = preprocess(convex_polygon(k));
    if (D.regions.size() != 1 || D.sinks.size() != 1) o.fail("convex " + std::to_string(k));
  }
  std::vector<BenchRecord> rows;
  for (const CorpusEntry& e : simple_corpus(25)) {
    Decomposition D = preprocess(e.polygon.outer);
    BenchRecord r;
    r.id = e.id;
    r.n = D.size();
    r.regions = D.regions.size();
    r.sinks = D.sinks.size();
    rows.push_back(r);
  }
  BenchSummary s = summarize(rows);
  // Exact bounds regions <= n^3 and sinks <= n^2 are what the fit must respect.
  if (s.c_regions > 1) o.fail("regions exceed n^3");
  if (s.c_sinks > 1) o.fail("sinks exceed n^2");
  o.detail << "convex k in {3..32}: 1 region, 1 sink; " << rows.size() << " instances, c1 = " << s.c_regions
           << ", c2 = " << s.c_sinks;
}

struct HolesRun {
  HolesCase c;
  HolesBasicResult basic;
  HolesImprovedResult improved;
};

std::vector<HolesRun>& holes_runs() {
  static std::vector<HolesRun> runs = [] {
    std::vector<HolesRun> out;
    for (HolesCase& c : holes_cases()) {
      HolesRun r{c, wvp_holes_basic(c.entry.polygon, c.pq), {}};
      r.improved = wvp_holes_improved(preprocess_holes(c.entry.polygon), c.pq);
      out.push_back(std::move(r));
    }
    return out;
  }();
  return runs;
}

void criterion5(Outcome& o) {
  std::size_t instances = 0, queries = 0, points = 0, mismatches = 0, area_diffs = 0;
  std::string last;
  for (std::size_t i = 0; i < holes_runs().size(); ++i) {
    const HolesRun& r = holes_runs()[i];
    const PolygonWithHoles& P = r.c.entry.polygon;
    if (r.c.entry.id != last) {
      ++instances;
      last = r.c.entry.id;
      if (P.total_vertices() > 40) o.fail(last + " has n > 40");
    }
    ++queries;
    auto rings = P.rings();
    auto pts = oracle::sample_points(rings, 500, 500 + i);
    points += pts.size();
    auto bad_b = oracle::compare_membership(rings, r.c.pq, pts, [&](const Point2& x) { return member(r.basic.region, x); });
    auto bad_i =
        oracle::compare_membership(rings, r.c.pq, pts, [&](const Point2& x) { return member(r.improved.region, x); });
    mismatches += bad_b.size() + bad_i.size();
    if (!bad_b.empty() || !bad_i.empty()) o.fail(r.c.entry.id + " query " + std::to_string(i));
    if (region_area(r.basic.region) != region_area(r.improved.region)) {
      ++area_diffs;
      o.fail(r.c.entry.id + " area");
    }
  }
  if (instances < 10) o.fail("fewer than 10 instances");
  if (queries < 10 * instances) o.fail("fewer than 10 queries per instance");
  o.detail << instances << " instances, " << queries << " queries, " << points << " points x 2 algorithms, "
           << mismatches << " mismatches, " << area_diffs << " area differences";
}

void criterion6(Outcome& o) {
  std::vector<BenchRecord> rows;
  std::size_t max_hp = 0;
  for (const HolesRun& r : holes_runs()) {
    if (r.basic.h_prime > r.basic.h * r.basic.h) o.fail(r.c.entry.id + " h' > h^2");
    if (!r.basic.acyclic) o.fail(r.c.entry.id + " cyclic see-through graph");
    max_hp = std::max(max_hp, r.basic.h_prime);
    BenchRecord b;
    b.id = r.c.entry.id;
    b.n = r.c.entry.polygon.total_vertices();
    b.h = r.basic.h;
    b.hbar = r.basic.visible_holes;
    b.h_prime = r.basic.h_prime;
    b.constraints = r.improved.constraints;
    rows.push_back(b);
  }
  HolesBasicResult st = wvp_holes_basic(staircase_holes(), staircase_query());
  if (!(st.h_prime > st.h)) o.fail("staircase h' <= h");
  if (!st.acyclic) o.fail("staircase cyclic");
  if (st.h_prime > st.h * st.h) o.fail("staircase h' > h^2");
  BenchSummary s = summarize(rows);
  for (const BenchRecord& b : rows)
    if (static_cast<double>(b.constraints) > s.c_constraints * static_cast<double>(b.n * std::max<std::size_t>(b.hbar, 1)))
      o.fail(b.id + " constraints above fit");
  // A constant near the largest n would mean the fit is really quadratic.
  if (s.c_constraints > 40) o.fail("constraint constant above n");
  o.detail << rows.size() << " runs, max h' = " << max_hp << "; staircase h = " << st.h << ", h' = " << st.h_prime
           << "; constraints <= c * n * hbar with c = " << s.c_constraints;
}

void criterion7(Outcome& o) {
  auto rows = bench_fixed_k({8, 20, 44, 68});
  std::size_t tmin = SIZE_MAX, tmax = 0;
  std::printf("  %-10s %5s %8s %12s %4s\n", "instance", "n", "touched", "direct_work", "k");
  for (const BenchRecord& r : rows) {
    std::printf("  %-10s %5zu %8zu %12zu %4zu\n", r.id.c_str(), r.n, r.touched, r.direct_work, r.k);
    tmin = std::min(tmin, r.touched);
    tmax = std::max(tmax, r.touched);
  }
  if (rows.back().n < 4 * rows.front().n) o.fail("n grew less than 4x");
  if (tmax > 2 * tmin) o.fail("touched not within 2x");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].k != rows[0].k) o.fail("k not fixed");
    if (rows[i].direct_work <= rows[i - 1].direct_work) o.fail("direct work did not grow");
  }
  o.detail << "n " << rows.front().n << " -> " << rows.back().n << ", touched in [" << tmin << ", " << tmax
           << "], direct work " << rows.front().direct_work << " -> " << rows.back().direct_work;
}

void criterion8(Outcome& o) {
  std::mt19937_64 rng(808);
  std::size_t arrangements = 0, cells = 0, points = 0, deviations = 0;
  for (const HolesRun& r : holes_runs()) {
    const ConstraintArrangement& C = r.improved.arrangement;
    auto rings = r.c.entry.polygon.rings();
    ++arrangements;
    for (std::size_t f = 0; f < C.arrangement.faces.size(); ++f) {
      if (!C.free[f]) continue;
      ++cells;
      for (int k = 0; k < 10; ++k) {
        auto x = point_in_face(C.arrangement, f, rng);
        if (!x) {
          o.fail(r.c.entry.id + " could not sample face " + std::to_string(f));
          break;
        }
        ++points;
        if (oracle::weakly_visible(rings, *x, r.c.pq) != C.visible[f]) {
          ++deviations;
          o.fail(r.c.entry.id + " face " + std::to_string(f));
        }
      }
    }
  }
  o.detail << arrangements << " arrangements, " << cells << " cells, " << points << " points, " << deviations
           << " deviations";
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, "oracle equivalence (simple)", criterion1);
  ok &= report(2, "engine/reference equality", criterion2);
  ok &= report(3, "decomposition deltas", criterion3);
  ok &= report(4, "combinatorial bounds", criterion4);
  ok &= report(5, "holes correctness", criterion5);
  ok &= report(6, "structural bounds with holes", criterion6);
  ok &= report(7, "output-sensitivity evidence", criterion7);
  ok &= report(8, "cell uniformity", criterion8);
  return ok ? 0 : 1;
}
