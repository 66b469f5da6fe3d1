#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "dtwin/twin.hpp"

namespace dtwin {

// ---------------------------------------------------------------------------
// Brute-force collision search over Frey curves y^2 = x(x - A)(x + B) with
// 1 <= A <= maxA, A = 3 mod 4, B = 16 * odd <= maxB and gcd(A, B) = 1. Pairs
// are grouped by the exact key AB(A+B); under these congruences an equal key
// forces equal minimal discriminants and conductors.

struct FreyPair {
  BigInt A, B;
};

struct PairCheck {
  std::size_t first = 0, second = 0;  // member indices
  bool j_distinct = false;
  bool verified = false;  // classify_pair ran (only for distinct j)
  bool twins = false;
  BigInt delta_min;
  BigInt conductor;
};

struct CollisionGroup {
  BigInt key;
  std::vector<FreyPair> members;  // sorted by (A, B)
  std::vector<PairCheck> checks;
};

struct SearchOptions {
  unsigned threads = 1;
  // Upper bound on (key, A, B) entries held at once; each entry is 32 bytes,
  // so peak grouping memory is about 32 * max_entries bytes. When the domain
  // is larger the enumeration runs in several hash-partitioned passes.
  std::size_t max_entries = std::size_t{1} << 22;
  bool verify = true;
  std::uint64_t factor_budget = kDefaultFactorBudget;
};

struct FreySearchResult {
  std::uint64_t admissible_pairs = 0;
  std::size_t passes = 0;
  std::size_t peak_entries = 0;
  std::vector<CollisionGroup> groups;  // sorted by key
  std::size_t pairs_verified = 0;
  std::size_t pairs_confirmed = 0;

  bool agreement() const noexcept { return pairs_verified == pairs_confirmed; }
};

// maxA and maxB must lie in [0, 2^40]; otherwise DomainError.
FreySearchResult brute_force_frey_search(std::uint64_t maxA,
                                         std::uint64_t maxB,
                                         const SearchOptions& opts = {});

// As above, restricted to an explicit list of (A, B) pairs (inadmissible
// pairs are skipped). Keys are exact big integers, so any magnitude works.
FreySearchResult frey_collisions(const std::vector<FreyPair>& domain,
                                 const SearchOptions& opts = {});

// ---------------------------------------------------------------------------
// Curve tables: one JSON object per line,
//   {"label": "11a1", "ainvs": ["0", "-1", "1", "-10", "-20"]}
// Blank lines and lines starting with '#' are skipped.

struct CurveRecord {
  std::optional<std::string> label;
  WeierstrassModel model;
  std::size_t source_line = 0;
};

// Throws ParseError carrying the 1-based line number.
std::vector<CurveRecord> parse_curve_records(std::istream& in);

struct RecordFailure {
  std::size_t source_line = 0;
  std::optional<std::string> label;
  std::string reason;
};

struct ScanPair {
  std::size_t first = 0, second = 0;  // indices into the record list
  TwinReport report;
};

struct ScanGroup {
  BigInt delta_min;
  BigInt conductor;
  std::vector<std::size_t> members;  // record indices, input order
  std::vector<ScanPair> pairs;
};

struct TwinScanReport {
  std::size_t records = 0;
  std::vector<RecordFailure> failures;
  std::vector<ScanGroup> groups;  // ordered by first member
  std::size_t twin_pairs = 0;
  std::size_t semistable_twin_pairs = 0;
  std::size_t non_isogenous_twin_pairs = 0;
};

struct ScanOptions {
  unsigned threads = 1;
  std::uint64_t factor_budget = kDefaultFactorBudget;
};

TwinScanReport scan_curve_file(const std::vector<CurveRecord>& records,
                               const ScanOptions& opts = {});

}  // namespace dtwin
