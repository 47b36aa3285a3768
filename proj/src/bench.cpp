#include "wvp/bench.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "wvp/wvp_holes.hpp"
#include "wvp/wvp_query.hpp"

namespace wvp {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

constexpr const char* kColumns[] = {"id", "family", "n", "h", "preprocess_ms", "query_ms", "direct_ms", "touched",
                                    "direct_work", "k", "walk_p", "walk_q", "regions", "sinks", "hbar", "h_prime",
                                    "constraints"};
constexpr std::size_t kColumnCount = sizeof(kColumns) / sizeof(kColumns[0]);

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  if (quoted) throw Error(ErrorCode::ParseError, "unterminated quote in CSV line");
  return out;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2) return 0;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0 || syy == 0) return 0;
  return sxy / std::sqrt(sxx * syy);
}

BenchRecord simple_query(const CorpusEntry& e, const QueryStructure& S, const QuerySegment& pq) {
  BenchRecord r;
  r.id = e.id;
  r.family = e.family;
  r.n = e.polygon.outer.size();
  r.regions = S.decomposition.regions.size();
  r.sinks = S.decomposition.sinks.size();
  r.constraints = S.decomposition.constraints.size();
  auto t = Clock::now();
  ChordStats direct;
  WvpPolygon W = wvp_of_segment(e.polygon.outer, pq, &direct);
  r.direct_ms = ms_since(t);
  r.direct_work = direct.spt_vertices;
  t = Clock::now();
  QueryStats qs;
  WvpPolygon Q = query_wvp(S, pq, &qs);
  r.query_ms = ms_since(t);
  WVP_CHECK(same_polygon(W, Q), "query engine disagrees with the direct algorithm on " + e.id);
  r.touched = qs.touched;
  r.walk_p = qs.walk_p;
  r.walk_q = qs.walk_q;
  r.k = Q.size();
  return r;
}

}  // namespace

std::string bench_csv_header() {
  std::string out;
  for (std::size_t i = 0; i < kColumnCount; ++i) out += (i ? "," : "") + std::string(kColumns[i]);
  return out;
}

std::string to_csv(const std::vector<BenchRecord>& rows) {
  std::ostringstream os;
  os << bench_csv_header() << "\n";
  os << std::setprecision(6) << std::fixed;
  for (const BenchRecord& r : rows) {
    os << quote(r.id) << ',' << quote(r.family) << ',' << r.n << ',' << r.h << ',' << r.preprocess_ms << ','
       << r.query_ms << ',' << r.direct_ms << ',' << r.touched << ',' << r.direct_work << ',' << r.k << ','
       << r.walk_p << ',' << r.walk_q << ',' << r.regions << ',' << r.sinks << ',' << r.hbar << ',' << r.h_prime
       << ',' << r.constraints << "\n";
  }
  return os.str();
}

std::vector<BenchRecord> records_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != bench_csv_header())
    throw Error(ErrorCode::ParseError, "missing or unexpected CSV header");
  std::vector<BenchRecord> out;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto f = split_csv_line(line);
    if (f.size() != kColumnCount)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected " +
                                             std::to_string(kColumnCount) + " fields");
    try {
      BenchRecord r;
      r.id = f[0];
      r.family = f[1];
      r.n = std::stoul(f[2]);
      r.h = std::stoul(f[3]);
      r.preprocess_ms = std::stod(f[4]);
      r.query_ms = std::stod(f[5]);
      r.direct_ms = std::stod(f[6]);
      r.touched = std::stoul(f[7]);
      r.direct_work = std::stoul(f[8]);
      r.k = std::stoul(f[9]);
      r.walk_p = std::stoul(f[10]);
      r.walk_q = std::stoul(f[11]);
      r.regions = std::stoul(f[12]);
      r.sinks = std::stoul(f[13]);
      r.hbar = std::stoul(f[14]);
      r.h_prime = std::stoul(f[15]);
      r.constraints = std::stoul(f[16]);
      out.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": bad number");
    }
  }
  return out;
}

std::vector<BenchRecord> bench_simple(const std::vector<CorpusEntry>& corpus, std::size_t queries,
                                      std::uint64_t seed) {
  std::vector<BenchRecord> out;
  for (const CorpusEntry& e : corpus) {
    if (e.polygon.hole_count() != 0) continue;
    auto t = Clock::now();
    QueryStructure S = build_query_structure(e.polygon.outer);
    double pre = ms_since(t);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < queries; ++i) {
      QuerySegment pq = random_query(e.polygon.rings(), rng);
      BenchRecord r = simple_query(e, S, pq);
      r.preprocess_ms = pre;
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<BenchRecord> bench_holes(const std::vector<CorpusEntry>& corpus, std::size_t queries,
                                     std::uint64_t seed) {
  std::vector<BenchRecord> out;
  for (const CorpusEntry& e : corpus) {
    auto t = Clock::now();
    HolesPreprocessed H = preprocess_holes(e.polygon);
    double pre = ms_since(t);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < queries; ++i) {
      QuerySegment pq = random_query(e.polygon.rings(), rng);
      BenchRecord r;
      r.id = e.id;
      r.family = e.family;
      r.n = e.polygon.total_vertices();
      r.h = e.polygon.hole_count();
      r.preprocess_ms = pre;
      t = Clock::now();
      HolesBasicResult B = wvp_holes_basic(e.polygon, pq);
      r.direct_ms = ms_since(t);
      t = Clock::now();
      HolesImprovedResult I = wvp_holes_improved(H, pq);
      r.query_ms = ms_since(t);
      WVP_CHECK(region_area(B.region) == region_area(I.region), "holes algorithms disagree on " + e.id);
      r.k = I.k;
      r.hbar = B.visible_holes;
      r.h_prime = B.h_prime;
      r.constraints = I.constraints;
      r.regions = I.cells;
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<BenchRecord> bench_fixed_k(const std::vector<std::size_t>& chambers) {
  std::vector<BenchRecord> out;
  for (std::size_t c : chambers) {
    CorpusEntry e{"padded-" + std::to_string(c), "padded", {}};
    e.polygon.outer = padded_fixed_k(c);
    auto t = Clock::now();
    QueryStructure S = build_query_structure(e.polygon.outer);
    double pre = ms_since(t);
    BenchRecord r = simple_query(e, S, padded_fixed_k_query());
    r.preprocess_ms = pre;
    out.push_back(std::move(r));
  }
  return out;
}

BenchSummary summarize(const std::vector<BenchRecord>& rows) {
  BenchSummary s;
  std::vector<double> touched, k, n;
  for (const BenchRecord& r : rows) {
    double dn = static_cast<double>(r.n);
    if (r.h == 0) {
      s.c_regions = std::max(s.c_regions, static_cast<double>(r.regions) / (dn * dn * dn));
      s.c_sinks = std::max(s.c_sinks, static_cast<double>(r.sinks) / (dn * dn));
      touched.push_back(static_cast<double>(r.touched));
      k.push_back(static_cast<double>(r.k));
      n.push_back(dn);
    } else {
      double hb = static_cast<double>(std::max<std::size_t>(r.hbar, 1));
      s.c_constraints = std::max(s.c_constraints, static_cast<double>(r.constraints) / (dn * hb));
    }
  }
  s.touched_k_corr = pearson(touched, k);
  s.touched_n_corr = pearson(touched, n);
  return s;
}

std::string summary_text(const BenchSummary& s) {
  std::ostringstream os;
  os << std::setprecision(4);
  os << "regions <= c1 * n^3 with c1 = " << s.c_regions << "\n";
  os << "sinks <= c2 * n^2 with c2 = " << s.c_sinks << "\n";
  os << "hole constraints <= c * n * hbar with c = " << s.c_constraints << "\n";
  os << "corr(touched, k) = " << s.touched_k_corr << ", corr(touched, n) = " << s.touched_n_corr << "\n";
  return os.str();
}

}  // namespace wvp
