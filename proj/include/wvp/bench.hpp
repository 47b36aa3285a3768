#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wvp/generate.hpp"

namespace wvp {

/// One query run. Simple-polygon rows fill the engine columns; rows for
/// polygons with holes fill h, hbar, h_prime and constraints.
struct BenchRecord {
  std::string id;
  std::string family;
  std::size_t n = 0;
  std::size_t h = 0;
  double preprocess_ms = 0;
  double query_ms = 0;
  double direct_ms = 0;
  std::size_t touched = 0;      // distinct vertices reached by the query engine
  std::size_t direct_work = 0;  // SPT vertices built by the direct algorithm
  std::size_t k = 0;            // output complexity
  std::size_t walk_p = 0;
  std::size_t walk_q = 0;
  std::size_t regions = 0;
  std::size_t sinks = 0;
  std::size_t hbar = 0;
  std::size_t h_prime = 0;
  std::size_t constraints = 0;

  bool operator==(const BenchRecord&) const = default;
};

std::string bench_csv_header();
std::string to_csv(const std::vector<BenchRecord>& rows);
/// Parses CSV written by to_csv; throws ParseError on malformed input.
std::vector<BenchRecord> records_from_csv(const std::string& text);

/// Direct algorithm and query engine on `queries` random segments per instance.
std::vector<BenchRecord> bench_simple(const std::vector<CorpusEntry>& corpus, std::size_t queries,
                                      std::uint64_t seed);
/// Basic and improved holes algorithms on `queries` random segments per instance.
std::vector<BenchRecord> bench_holes(const std::vector<CorpusEntry>& corpus, std::size_t queries,
                                     std::uint64_t seed);
/// The padded family with fixed visible part and growing hidden chamber; one
/// row per chamber size, all with the family's fixed query.
std::vector<BenchRecord> bench_fixed_k(const std::vector<std::size_t>& chambers);

struct BenchSummary {
  double c_regions = 0;      // max regions / n^3
  double c_sinks = 0;        // max sinks / n^2
  double c_constraints = 0;  // max constraints / (n * max(hbar, 1))
  double touched_k_corr = 0;  // Pearson correlation of touched with k
  double touched_n_corr = 0;  // Pearson correlation of touched with n
};

BenchSummary summarize(const std::vector<BenchRecord>& rows);
std::string summary_text(const BenchSummary& s);

}  // namespace wvp
