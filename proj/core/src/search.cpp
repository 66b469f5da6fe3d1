#include "dtwin/search.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>

#include "dtwin/errors.hpp"
#include "dtwin/parallel.hpp"
#include "json.hpp"

namespace dtwin {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kMaxSearchBound = std::uint64_t{1} << 40;

struct Entry {
  u128 key;
  std::uint64_t a, b;

  friend bool operator<(const Entry& x, const Entry& y) {
    if (x.key != y.key) return x.key < y.key;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
};
static_assert(sizeof(Entry) == 32);

std::uint64_t mix(u128 key) {
  std::uint64_t z = static_cast<std::uint64_t>(key) ^
                    (static_cast<std::uint64_t>(key >> 64) * 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

BigInt to_big(u128 x) {
  BigInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(x >> 64));
  BigInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(x));
  return (hi << 64) + lo;
}

BigInt to_big(std::uint64_t x) { return BigInt(static_cast<unsigned long>(x)); }

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

bool admissible(const BigInt& A, const BigInt& B) {
  if (A < 1 || B < 1) return false;
  if (BigInt(A % 4) != 3) return false;
  if (B % 16 != 0 || BigInt(B / 16) % 2 != 1) return false;
  return gcd(A, B) == 1;
}

// Verifies every distinct-j pair of every group through the twin classifier.
void verify_groups(FreySearchResult& res, const SearchOptions& opts) {
  ReductionOptions ro;
  ro.factor_budget = opts.factor_budget;
  auto checked = parallel_map(res.groups.size(), opts.threads,
                              [&](std::size_t gi) {
    const CollisionGroup& g = res.groups[gi];
    std::vector<GlobalData> data;
    std::vector<Rational> js;
    for (const auto& m : g.members) {
      const WeierstrassModel model = frey_curve(m.A, m.B);
      js.push_back(j_invariant(model));
      data.push_back(opts.verify ? global_minimal_model(model, ro)
                                 : GlobalData{});
    }
    std::vector<PairCheck> checks;
    for (std::size_t i = 0; i < g.members.size(); ++i) {
      for (std::size_t k = i + 1; k < g.members.size(); ++k) {
        PairCheck c;
        c.first = i;
        c.second = k;
        c.j_distinct = js[i] != js[k];
        if (opts.verify && c.j_distinct) {
          const TwinReport r = classify_global(data[i], data[k]);
          c.verified = true;
          c.twins = r.is_twin();
          c.delta_min = r.first.delta_min;
          c.conductor = r.first.conductor.value();
        }
        checks.push_back(std::move(c));
      }
    }
    return checks;
  });
  for (std::size_t gi = 0; gi < res.groups.size(); ++gi) {
    res.groups[gi].checks = std::move(checked[gi]);
    for (const auto& c : res.groups[gi].checks) {
      res.pairs_verified += c.verified;
      res.pairs_confirmed += c.verified && c.twins;
    }
  }
}

}  // namespace

FreySearchResult brute_force_frey_search(std::uint64_t maxA,
                                         std::uint64_t maxB,
                                         const SearchOptions& opts) {
  if (maxA > kMaxSearchBound || maxB > kMaxSearchBound)
    throw DomainError("search bounds must not exceed 2^40");
  if (opts.max_entries == 0) throw DomainError("max_entries must be positive");

  FreySearchResult res;
  const std::uint64_t countA = maxA >= 3 ? (maxA - 3) / 4 + 1 : 0;
  const std::uint64_t countB = maxB >= 16 ? (maxB / 16 + 1) / 2 : 0;
  if (countA == 0 || countB == 0) return res;

  // B = 16 * (2k + 1) for k < countB, A = 4i + 3 for i < countA.
  const std::size_t chunks =
      std::min<std::uint64_t>(countA, std::max(1u, opts.threads) * 8u);
  const u128 bound = static_cast<u128>(countA) * countB;
  const u128 first_parts = (bound + opts.max_entries - 1) / opts.max_entries;
  std::deque<std::pair<std::uint64_t, std::uint64_t>> todo;
  const auto initial =
      static_cast<std::uint64_t>(std::max<u128>(1, first_parts));
  for (std::uint64_t i = 0; i < initial; ++i) todo.emplace_back(initial, i);

  std::uint64_t admissible_total = 0;
  std::vector<CollisionGroup> groups;
  while (!todo.empty()) {
    const auto [modulus, index] = todo.front();
    todo.pop_front();
    ++res.passes;

    std::atomic<std::size_t> held{0};
    std::atomic<bool> overflow{false};
    std::atomic<std::uint64_t> seen{0};
    auto parts = parallel_map(chunks, opts.threads, [&](std::size_t c) {
      std::vector<Entry> local;
      std::uint64_t local_seen = 0;
      const std::uint64_t lo = countA * c / chunks, hi = countA * (c + 1) / chunks;
      for (std::uint64_t i = lo; i < hi && !overflow; ++i) {
        const std::uint64_t a = 4 * i + 3;
        for (std::uint64_t k = 0; k < countB; ++k) {
          const std::uint64_t b = 16 * (2 * k + 1);
          if (gcd64(a, b) != 1) continue;
          ++local_seen;
          const u128 key = static_cast<u128>(a) * b * (a + b);
          if (mix(key) % modulus != index) continue;
          if (held.fetch_add(1) + 1 > opts.max_entries) {
            overflow = true;
            break;
          }
          local.push_back({key, a, b});
        }
      }
      seen += local_seen;
      return local;
    });
    if (overflow) {
      todo.emplace_front(2 * modulus, index + modulus);
      todo.emplace_front(2 * modulus, index);
      continue;
    }
    // Every completed pass enumerates the whole domain.
    admissible_total = seen;

    std::vector<Entry> all;
    all.reserve(held);
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    res.peak_entries = std::max(res.peak_entries, all.size());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size();) {
      std::size_t j = i + 1;
      while (j < all.size() && all[j].key == all[i].key) ++j;
      if (j - i >= 2) {
        CollisionGroup g;
        g.key = to_big(all[i].key);
        for (std::size_t k = i; k < j; ++k)
          g.members.push_back({to_big(all[k].a), to_big(all[k].b)});
        groups.push_back(std::move(g));
      }
      i = j;
    }
  }
  res.admissible_pairs = admissible_total;
  std::sort(groups.begin(), groups.end(),
            [](const CollisionGroup& x, const CollisionGroup& y) {
              return x.key < y.key;
            });
  res.groups = std::move(groups);
  verify_groups(res, opts);
  return res;
}

FreySearchResult frey_collisions(const std::vector<FreyPair>& domain,
                                 const SearchOptions& opts) {
  FreySearchResult res;
  res.passes = 1;
  std::map<BigInt, std::vector<FreyPair>> by_key;
  for (const auto& pr : domain) {
    if (!admissible(pr.A, pr.B)) continue;
    ++res.admissible_pairs;
    by_key[pr.A * pr.B * (pr.A + pr.B)].push_back(pr);
  }
  res.peak_entries = res.admissible_pairs;
  for (auto& [key, members] : by_key) {
    std::sort(members.begin(), members.end(),
              [](const FreyPair& x, const FreyPair& y) {
                return x.A != y.A ? x.A < y.A : x.B < y.B;
              });
    members.erase(std::unique(members.begin(), members.end(),
                              [](const FreyPair& x, const FreyPair& y) {
                                return x.A == y.A && x.B == y.B;
                              }),
                  members.end());
    if (members.size() >= 2) res.groups.push_back({key, members, {}});
  }
  verify_groups(res, opts);
  return res;
}

// ---------------------------------------------------------------------------

namespace {

BigInt parse_integer(const nlohmann::json& v, std::size_t line) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned()
               ? BigInt(static_cast<unsigned long>(v.get<std::uint64_t>()))
               : BigInt(static_cast<long>(v.get<std::int64_t>()));
  }
  if (!v.is_string()) throw ParseError(line, "ainvs entries must be strings");
  const std::string& s = v.get_ref<const std::string&>();
  const std::size_t start = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (s.size() == start ||
      !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                   [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError(line, "'" + s + "' is not a decimal integer");
  return BigInt(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace

std::vector<CurveRecord> parse_curve_records(std::istream& in) {
  std::vector<CurveRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(lineno, std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object()) throw ParseError(lineno, "record is not an object");
    const auto it = obj.find("ainvs");
    if (it == obj.end() || !it->is_array() || it->size() != 5)
      throw ParseError(lineno, "\"ainvs\" must be an array of five integers");

    CurveRecord rec;
    rec.source_line = lineno;
    std::array<BigInt, 5> a;
    for (std::size_t i = 0; i < 5; ++i) a[i] = parse_integer((*it)[i], lineno);
    rec.model = WeierstrassModel::from_array(a);
    if (const auto lab = obj.find("label"); lab != obj.end()) {
      if (!lab->is_string()) throw ParseError(lineno, "\"label\" must be text");
      rec.label = lab->get<std::string>();
    }
    out.push_back(std::move(rec));
  }
  return out;
}

TwinScanReport scan_curve_file(const std::vector<CurveRecord>& records,
                               const ScanOptions& opts) {
  TwinScanReport rep;
  rep.records = records.size();
  ReductionOptions ro;
  ro.factor_budget = opts.factor_budget;

  struct Outcome {
    std::optional<GlobalData> data;
    std::string failure;
  };
  auto outcomes =
      parallel_map(records.size(), opts.threads, [&](std::size_t i) {
        Outcome o;
        try {
          o.data = global_minimal_model(records[i].model, ro);
        } catch (const SingularCurve&) {
          o.failure = "singular model";
        } catch (const FactorizationBudgetExceeded& e) {
          o.failure = std::string("factorization budget exceeded: ") + e.what();
        }
        return o;
      });

  std::map<std::pair<BigInt, BigInt>, std::size_t> group_of;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!outcomes[i].data) {
      rep.failures.push_back(
          {records[i].source_line, records[i].label, outcomes[i].failure});
      continue;
    }
    const GlobalData& g = *outcomes[i].data;
    const auto key = std::make_pair(g.delta_min, g.conductor.value());
    auto [it, fresh] = group_of.emplace(key, rep.groups.size());
    if (fresh) rep.groups.push_back({key.first, key.second, {}, {}});
    rep.groups[it->second].members.push_back(i);
  }
  std::erase_if(rep.groups,
                [](const ScanGroup& g) { return g.members.size() < 2; });

  for (auto& g : rep.groups) {
    for (std::size_t x = 0; x < g.members.size(); ++x) {
      for (std::size_t y = x + 1; y < g.members.size(); ++y) {
        const std::size_t i = g.members[x], k = g.members[y];
        ScanPair sp{i, k,
                    classify_global(*outcomes[i].data, *outcomes[k].data)};
        ++rep.twin_pairs;
        rep.semistable_twin_pairs += sp.report.both_semistable;
        rep.non_isogenous_twin_pairs +=
            sp.report.isogeny == IsogenyVerdict::kNonIsogenous;
        g.pairs.push_back(std::move(sp));
      }
    }
  }
  return rep;
}

}  // namespace dtwin
