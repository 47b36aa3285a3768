#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>

#include "wvp/bench.hpp"
#include "wvp/generate.hpp"
#include "wvp/io.hpp"
#include "wvp/oracle.hpp"
#include "wvp/regions.hpp"
#include "wvp/vis_decomp.hpp"
#include "wvp/wvp_holes.hpp"
#include "wvp/wvp_query.hpp"
#include "wvp/wvp_simple.hpp"

using namespace wvp;
namespace fs = std::filesystem;

namespace {

struct Common {
  std::string polygon;
  std::string seg;
  std::uint64_t seed = 1;
  std::size_t samples = 500;
  std::string svg;
  bool stats = false;
  std::string json_out;
};

void add_polygon(CLI::App* c, Common& o) { c->add_option("--polygon", o.polygon, "polygon JSON file")->required(); }
void add_seg(CLI::App* c, Common& o) { c->add_option("--seg", o.seg, "query segment \"x1 y1 x2 y2\"")->required(); }
void add_outputs(CLI::App* c, Common& o) {
  c->add_option("--svg", o.svg, "write an SVG rendering");
  c->add_flag("--stats", o.stats, "print instrumentation counters");
  c->add_option("--json-out", o.json_out, "write the result as JSON");
}

SimplePolygon require_simple(const PolygonWithHoles& P) {
  if (P.hole_count() != 0) throw Error(ErrorCode::InvalidArgument, "this command needs a polygon without holes");
  return P.outer;
}

Json wvp_to_json(const WvpPolygon& W) {
  Json j;
  j["vertices"] = ring_to_json(W.vertices);
  j["k"] = W.size();
  return j;
}

Json region_to_json(const Region& R) {
  Json cycles = Json::array();
  for (const Ring& c : R.cycles) cycles.push_back(ring_to_json(c));
  return Json{{"cycles", cycles}, {"k", region_complexity(R)}, {"area", scalar_to_json(region_area(R))}};
}

void maybe_write_json(const Common& o, const Json& j) {
  if (!o.json_out.empty()) write_file(o.json_out, j.dump(2) + "\n");
}

void maybe_write_svg(const Common& o, const PolygonWithHoles& P, const SvgOverlay& overlay) {
  if (!o.svg.empty()) write_file(o.svg, render_svg(P, overlay));
}

bool member(const WvpPolygon& W, const Point2& x) {
  return point_in(std::vector<Ring>{W.vertices}, x) != Location::Outside;
}
bool member(const Region& R, const Point2& x) { return region_locate(R, x) != Location::Outside; }

int cmd_validate(const Common& o) {
  PolygonWithHoles P = load_polygon(o.polygon);
  auto v = validate(P);
  if (!v) v = check_general_position(P);
  Json j{{"valid", !v.has_value()}, {"n", P.total_vertices()}, {"h", P.hole_count()}};
  if (v) {
    j["code"] = std::string(to_string(v->code));
    j["message"] = v->message;
    j["indices"] = v->indices;
    std::cout << "invalid " << to_string(v->code) << ": " << v->message << "\n";
  } else {
    std::cout << "valid n=" << P.total_vertices() << " h=" << P.hole_count() << "\n";
  }
  maybe_write_json(o, j);
  return v ? static_cast<int>(v->code) : 0;
}

int cmd_perturb(const Common& o, const std::string& out, const std::string& eps) {
  PolygonWithHoles P = perturb(load_polygon(o.polygon), o.seed, parse_scalar(eps));
  save_polygon(out, P);
  std::cout << "wrote " << out << "\n";
  return 0;
}

int cmd_preprocess(const Common& o, const std::string& out) {
  SimplePolygon P = require_simple(load_polygon(o.polygon));
  Decomposition D = preprocess(P);
  write_file(out, decomposition_to_json(D).dump() + "\n");
  std::cout << "regions=" << D.regions.size() << " sinks=" << D.sinks.size()
            << " constraints=" << D.constraints.size() << "\n";
  return 0;
}

int cmd_direct(const Common& o) {
  PolygonWithHoles P = load_polygon(o.polygon);
  SimplePolygon S = require_simple(P);
  QuerySegment pq = parse_segment(o.seg);
  ChordStats st;
  WvpPolygon W = wvp_of_segment(S, pq, &st);
  std::cout << "k=" << W.size() << "\n";
  if (o.stats)
    std::cout << "cuts=" << st.cuts << " visited=" << st.visited << " spt_vertices=" << st.spt_vertices << "\n";
  Json j = wvp_to_json(W);
  j["stats"] = {{"cuts", st.cuts}, {"visited", st.visited}, {"spt_vertices", st.spt_vertices}};
  maybe_write_json(o, j);
  maybe_write_svg(o, P, {{W.vertices}, {}, pq});
  return 0;
}

int cmd_query(const Common& o, const std::string& structure, const std::vector<std::string>& segs) {
  if (o.polygon.empty() == structure.empty())
    throw Error(ErrorCode::InvalidArgument, "give exactly one of --polygon and --structure");
  if (segs.empty()) throw Error(ErrorCode::InvalidArgument, "at least one --seg is required");
  QueryStructure S = structure.empty() ? build_query_structure(require_simple(load_polygon(o.polygon)))
                                       : build_query_structure(decomposition_from_json(parse_json_text(read_file(structure))));
  Json results = Json::array();
  SvgOverlay overlay;
  for (const std::string& text : segs) {
    QuerySegment pq = parse_segment(text);
    QueryStats st;
    WvpPolygon W = query_wvp(S, pq, &st);
    std::cout << "k=" << W.size() << "\n";
    if (o.stats)
      std::cout << "walk_p=" << st.walk_p << " walk_q=" << st.walk_q << " visited=" << st.visited
                << " touched=" << st.touched << " cuts=" << st.cuts << "\n";
    Json j = wvp_to_json(W);
    j["stats"] = {{"walk_p", st.walk_p}, {"walk_q", st.walk_q}, {"visited", st.visited},
                  {"touched", st.touched}, {"cuts", st.cuts}};
    results.push_back(j);
    overlay.fills.push_back(W.vertices);
    overlay.query = pq;
  }
  maybe_write_json(o, segs.size() == 1 ? results[0] : results);
  maybe_write_svg(o, PolygonWithHoles{S.polygon(), {}}, overlay);
  return 0;
}

int cmd_holes(const Common& o, const std::string& algo) {
  PolygonWithHoles P = load_polygon(o.polygon);
  QuerySegment pq = parse_segment(o.seg);
  Json j;
  std::optional<Region> shown;
  std::optional<Scalar> basic_area;
  if (algo == "basic" || algo == "both") {
    HolesBasicResult B = wvp_holes_basic(P, pq);
    basic_area = region_area(B.region);
    std::size_t k = region_complexity(B.region);
    std::cout << "basic k=" << k << " area=" << *basic_area << "\n";
    if (o.stats)
      std::cout << "basic h=" << B.h << " hbar=" << B.visible_holes << " h_prime=" << B.h_prime
                << " subsegments=" << B.subsegments << " acyclic=" << (B.acyclic ? "yes" : "no") << "\n";
    j["basic"] = region_to_json(B.region);
    j["basic"]["stats"] = {{"h", B.h}, {"hbar", B.visible_holes}, {"h_prime", B.h_prime},
                           {"subsegments", B.subsegments}, {"acyclic", B.acyclic}};
    shown = B.region;
  }
  if (algo == "improved" || algo == "both") {
    HolesImprovedResult I = wvp_holes_improved(preprocess_holes(P), pq);
    Scalar area = region_area(I.region);
    std::cout << "improved k=" << I.k << " area=" << area << "\n";
    if (o.stats)
      std::cout << "improved h=" << I.h << " hbar=" << I.visible_holes << " constraints=" << I.constraints
                << " cells=" << I.cells << " visible_cells=" << I.visible_cells << "\n";
    j["improved"] = region_to_json(I.region);
    j["improved"]["stats"] = {{"h", I.h}, {"hbar", I.visible_holes}, {"constraints", I.constraints},
                              {"cells", I.cells}, {"visible_cells", I.visible_cells}};
    if (basic_area && *basic_area != area)
      throw Error(ErrorCode::InternalInconsistency, "basic and improved areas differ");
    shown = I.region;
  }
  if (!shown) throw Error(ErrorCode::InvalidArgument, "--algo must be basic, improved or both");
  maybe_write_json(o, j);
  maybe_write_svg(o, P, {shown->cycles, {}, pq});
  return 0;
}

int cmd_oracle(const Common& o, const std::string& against) {
  PolygonWithHoles P = load_polygon(o.polygon);
  QuerySegment pq = parse_segment(o.seg);
  std::vector<Ring> rings = P.rings();
  std::function<bool(const Point2&)> claimed;
  WvpPolygon W;
  Region R;
  if (against == "direct") {
    W = wvp_of_segment(require_simple(P), pq);
    claimed = [&](const Point2& x) { return member(W, x); };
  } else if (against == "query") {
    W = query_wvp(build_query_structure(require_simple(P)), pq);
    claimed = [&](const Point2& x) { return member(W, x); };
  } else if (against == "holes-basic") {
    R = wvp_holes_basic(P, pq).region;
    claimed = [&](const Point2& x) { return member(R, x); };
  } else if (against == "holes-improved") {
    R = wvp_holes_improved(preprocess_holes(P), pq).region;
    claimed = [&](const Point2& x) { return member(R, x); };
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown --against " + against);
  }
  auto pts = oracle::sample_points(rings, o.samples, o.seed);
  auto bad = oracle::compare_membership(rings, pq, pts, claimed);
  std::cout << "samples=" << pts.size() << " mismatches=" << bad.size() << "\n";
  Json mism = Json::array();
  for (const auto& m : bad) {
    std::cout << "mismatch " << m.point << " claimed=" << m.claimed << " truth=" << m.truth << "\n";
    mism.push_back({{"point", point_to_json(m.point)}, {"claimed", m.claimed}, {"truth", m.truth}});
  }
  maybe_write_json(o, Json{{"samples", pts.size()}, {"mismatches", mism}});
  if (!bad.empty()) {
    std::cerr << "error: " << to_string(ErrorCode::InternalInconsistency) << ": oracle mismatch\n";
    return static_cast<int>(ErrorCode::InternalInconsistency);
  }
  return 0;
}

int cmd_decomp_stats(const Common& o) {
  PolygonWithHoles P = load_polygon(o.polygon);
  Decomposition D = preprocess(require_simple(P));
  std::size_t reflex = 0;
  for (bool r : reflex_vertices(D.polygon.vertices)) reflex += r;
  Json j{{"n", D.size()},
         {"reflex", reflex},
         {"constraints", D.constraints.size()},
         {"regions", D.regions.size()},
         {"arcs", D.graph.arcs.size()},
         {"sinks", D.sinks.size()}};
  std::cout << "n=" << D.size() << " reflex=" << reflex << " constraints=" << D.constraints.size()
            << " regions=" << D.regions.size() << " arcs=" << D.graph.arcs.size() << " sinks=" << D.sinks.size()
            << "\n";
  maybe_write_json(o, j);
  if (!o.svg.empty()) {
    SvgOverlay overlay;
    for (const auto& c : D.constraints) overlay.lines.push_back({c.start, c.end});
    maybe_write_svg(o, P, overlay);
  }
  return 0;
}

std::vector<CorpusEntry> generate(const std::string& kind, std::size_t count, std::size_t nmin, std::size_t nmax,
                                  std::size_t hmin, std::size_t hmax, std::uint64_t seed) {
  if (kind == "simple") return random_simple_corpus(count, nmin, nmax, seed);
  if (kind == "holes") return random_holes_corpus(count, hmin, hmax, nmax, seed);
  if (kind == "pedagogical") return pedagogical_set();
  if (kind == "staircase") return {{"staircase", "staircase", staircase_holes()}};
  if (kind == "padded") {
    std::vector<CorpusEntry> out;
    for (std::size_t c = nmin; c <= nmax; c *= 2)
      out.push_back({"padded-" + std::to_string(c), "padded", PolygonWithHoles{padded_fixed_k(c), {}}});
    return out;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown --kind " + kind);
}

int cmd_gen(const Common& o, const std::string& kind, const std::string& out_dir, std::size_t count, std::size_t nmin,
            std::size_t nmax, std::size_t hmin, std::size_t hmax) {
  fs::create_directories(out_dir);
  for (const CorpusEntry& e : generate(kind, count, nmin, nmax, hmin, hmax, o.seed)) {
    fs::path f = fs::path(out_dir) / (e.id + ".json");
    save_polygon(f.string(), e.polygon);
    std::cout << f.string() << " n=" << e.polygon.total_vertices() << " h=" << e.polygon.hole_count() << "\n";
  }
  return 0;
}

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
  std::vector<fs::path> files;
  for (const auto& f : fs::directory_iterator(dir))
    if (f.path().extension() == ".json") files.push_back(f.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const fs::path& f : files) out.push_back({f.stem().string(), "file", load_polygon(f.string())});
  return out;
}

int cmd_bench(const Common& o, const std::string& corpus_dir, std::size_t queries, const std::string& csv,
              std::size_t count) {
  std::vector<CorpusEntry> corpus;
  if (!corpus_dir.empty()) {
    corpus = load_corpus(corpus_dir);
  } else {
    for (auto& e : pedagogical_set())
      if (e.polygon.hole_count() == 0) corpus.push_back(std::move(e));
    for (auto& e : random_simple_corpus(count, 6, 25, o.seed)) corpus.push_back(std::move(e));
    for (auto& e : random_holes_corpus(count / 2 + 1, 1, 4, 14, o.seed)) corpus.push_back(std::move(e));
  }
  std::vector<CorpusEntry> simple, holes;
  for (auto& e : corpus) (e.polygon.hole_count() ? holes : simple).push_back(std::move(e));
  std::vector<BenchRecord> rows = bench_simple(simple, queries, o.seed);
  for (auto& r : bench_holes(holes, queries, o.seed)) rows.push_back(std::move(r));
  for (auto& r : bench_fixed_k({8, 16, 32})) rows.push_back(std::move(r));
  std::string text = to_csv(rows);
  if (csv.empty())
    std::cout << text;
  else
    write_file(csv, text);
  std::cout << summary_text(summarize(rows));
  return 0;
}

int cmd_svg(const Common& o, const std::string& out, const std::string& algo) {
  PolygonWithHoles P = load_polygon(o.polygon);
  SvgOverlay overlay;
  if (!o.seg.empty()) {
    QuerySegment pq = parse_segment(o.seg);
    overlay.query = pq;
    if (P.hole_count() == 0 && algo != "none") {
      overlay.fills.push_back(wvp_of_segment(P.outer, pq).vertices);
    } else if (algo == "basic") {
      overlay.fills = wvp_holes_basic(P, pq).region.cycles;
    } else if (algo == "improved") {
      overlay.fills = wvp_holes_improved(preprocess_holes(P), pq).region.cycles;
    }
  }
  write_file(out, render_svg(P, overlay));
  std::cout << "wrote " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak visibility polygons of query segments"};
  app.require_subcommand(1);
  Common o;
  std::string out, eps = "1/1000", structure, algo = "both", against = "direct", kind = "simple", corpus, csv;
  std::vector<std::string> segs;
  std::size_t count = 10, nmin = 8, nmax = 24, hmin = 1, hmax = 3, queries = 10;

  auto seeded = [&](CLI::App* c) { c->add_option("--seed", o.seed, "random seed"); };

  auto* validate_cmd = app.add_subcommand("validate", "check simplicity, orientation and general position");
  add_polygon(validate_cmd, o);
  add_outputs(validate_cmd, o);

  auto* perturb_cmd = app.add_subcommand("perturb", "seeded rational perturbation of all vertices");
  add_polygon(perturb_cmd, o);
  seeded(perturb_cmd);
  perturb_cmd->add_option("--out", out, "output polygon JSON")->required();
  perturb_cmd->add_option("--eps", eps, "maximum displacement per coordinate");

  auto* pre_cmd = app.add_subcommand("preprocess", "build the visibility decomposition");
  add_polygon(pre_cmd, o);
  pre_cmd->add_option("--out", out, "output structure JSON")->required();

  auto* direct_cmd = app.add_subcommand("wvp-direct", "weak visibility polygon by the direct algorithm");
  add_polygon(direct_cmd, o);
  add_seg(direct_cmd, o);
  add_outputs(direct_cmd, o);

  auto* query_cmd = app.add_subcommand("query", "weak visibility polygon by the query engine");
  query_cmd->add_option("--polygon", o.polygon, "polygon JSON file");
  query_cmd->add_option("--structure", structure, "structure written by preprocess");
  query_cmd->add_option("--seg", segs, "query segment, repeatable");
  add_outputs(query_cmd, o);

  auto* holes_cmd = app.add_subcommand("holes-wvp", "weak visibility polygon with holes");
  add_polygon(holes_cmd, o);
  add_seg(holes_cmd, o);
  add_outputs(holes_cmd, o);
  holes_cmd->add_option("--algo", algo, "basic, improved or both")->check(CLI::IsMember({"basic", "improved", "both"}));

  auto* oracle_cmd = app.add_subcommand("oracle-check", "compare an algorithm with brute-force visibility");
  add_polygon(oracle_cmd, o);
  add_seg(oracle_cmd, o);
  seeded(oracle_cmd);
  oracle_cmd->add_option("--samples", o.samples, "sample points");
  oracle_cmd->add_option("--json-out", o.json_out, "write mismatches as JSON");
  oracle_cmd->add_option("--against", against, "direct, query, holes-basic or holes-improved")
      ->check(CLI::IsMember({"direct", "query", "holes-basic", "holes-improved"}));

  auto* stats_cmd = app.add_subcommand("decomp-stats", "decomposition counts");
  add_polygon(stats_cmd, o);
  add_outputs(stats_cmd, o);

  auto* gen_cmd = app.add_subcommand("gen", "generate instances");
  seeded(gen_cmd);
  gen_cmd->add_option("--kind", kind, "simple, holes, pedagogical, staircase or padded")
      ->check(CLI::IsMember({"simple", "holes", "pedagogical", "staircase", "padded"}));
  gen_cmd->add_option("--out-dir", out, "output directory")->required();
  gen_cmd->add_option("--count", count, "instances");
  gen_cmd->add_option("--n-min", nmin, "minimum n (chamber size for padded)");
  gen_cmd->add_option("--n-max", nmax, "maximum n (outer n for holes)");
  gen_cmd->add_option("--h-min", hmin, "minimum hole count");
  gen_cmd->add_option("--h-max", hmax, "maximum hole count");

  auto* bench_cmd = app.add_subcommand("bench", "benchmark table and fitted constants");
  seeded(bench_cmd);
  bench_cmd->add_option("--corpus", corpus, "directory of polygon JSON files; default generates one");
  bench_cmd->add_option("--queries", queries, "queries per instance");
  bench_cmd->add_option("--count", count, "generated simple instances");
  bench_cmd->add_option("--csv", csv, "CSV output file; default stdout");

  auto* svg_cmd = app.add_subcommand("svg", "render a polygon and optionally its weak visibility polygon");
  add_polygon(svg_cmd, o);
  svg_cmd->add_option("--seg", o.seg, "query segment");
  svg_cmd->add_option("--out", out, "SVG file")->required();
  svg_cmd->add_option("--algo", algo, "holes algorithm: basic, improved or none")
      ->check(CLI::IsMember({"basic", "improved", "both", "none"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << to_string(ErrorCode::InvalidArgument) << ": " << e.what() << "\n";
    return static_cast<int>(ErrorCode::InvalidArgument);
  }

  try {
    if (*validate_cmd) return cmd_validate(o);
    if (*perturb_cmd) return cmd_perturb(o, out, eps);
    if (*pre_cmd) return cmd_preprocess(o, out);
    if (*direct_cmd) return cmd_direct(o);
    if (*query_cmd) return cmd_query(o, structure, segs);
    if (*holes_cmd) return cmd_holes(o, algo);
    if (*oracle_cmd) return cmd_oracle(o, against);
    if (*stats_cmd) return cmd_decomp_stats(o);
    if (*gen_cmd) return cmd_gen(o, kind, out, count, nmin, nmax, hmin, hmax);
    if (*bench_cmd) return cmd_bench(o, corpus, queries, csv, count);
    if (*svg_cmd) return cmd_svg(o, out, algo == "both" ? "improved" : algo);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const Json::exception& e) {
    std::cerr << "error: " << to_string(ErrorCode::ParseError) << ": " << e.what() << "\n";
    return static_cast<int>(ErrorCode::ParseError);
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << to_string(ErrorCode::InvalidArgument) << ": " << e.what() << "\n";
    return static_cast<int>(ErrorCode::InvalidArgument);
  }
  return 0;
}
