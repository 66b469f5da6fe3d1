#pragma once

// JSON views of the core reports. Big integers are written as decimal strings
// and rationals as "num/den" so that no consumer truncates them.

#include "dtwin/family.hpp"
#include "dtwin/local_reduction.hpp"
#include "dtwin/search.hpp"
#include "dtwin/twin.hpp"
#include "json.hpp"

namespace dtwin::cli {

using Json = nlohmann::ordered_json;

Json to_json(const BigInt& n);
Json to_json(const Rational& q);
Json to_json(const Factorization& f);
Json to_json(const IntPoly& p);
Json to_json(const WeierstrassModel& m);
Json to_json(const CurveInvariants& inv);
Json to_json(const LocalData& d);
Json to_json(const GlobalData& g);
Json to_json(const FamilyParams& p);
Json to_json(const ConditionReport& r);
Json to_json(const SymbolicReport& r);
Json to_json(const CoprimalityReport& r);
Json to_json(const TwinReport& r);
Json to_json(const FamilyInstanceReport& r);
Json to_json(const JSample& s);
Json to_json(const FreySearchResult& r);
Json to_json(const TwinScanReport& r, const std::vector<CurveRecord>& records);

}  // namespace dtwin::cli
