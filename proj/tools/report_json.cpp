#include "report_json.hpp"

namespace dtwin::cli {

Json to_json(const BigInt& n) { return n.get_str(); }

Json to_json(const Rational& q) { return q.get_str(); }

Json to_json(const Factorization& f) {
  Json factors = Json::array();
  for (const auto& [p, e] : f.factors)
    factors.push_back(Json{{"p", to_json(p)}, {"e", e}});
  return Json{{"value", to_json(f.value())},
              {"sign", f.sign},
              {"factors", std::move(factors)},
              {"proven", f.proven},
              {"text", f.to_string()}};
}

Json to_json(const IntPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return coeffs;
}

Json to_json(const WeierstrassModel& m) {
  Json a = Json::array();
  for (const auto& c : m.ainvs()) a.push_back(to_json(c));
  return a;
}

Json to_json(const CurveInvariants& inv) {
  return Json{{"b2", to_json(inv.b2)},   {"b4", to_json(inv.b4)},
              {"b6", to_json(inv.b6)},   {"b8", to_json(inv.b8)},
              {"c4", to_json(inv.c4)},   {"c6", to_json(inv.c6)},
              {"disc", to_json(inv.disc)},
              {"j", inv.j ? to_json(*inv.j) : Json(nullptr)}};
}

Json to_json(const LocalData& d) {
  return Json{{"p", to_json(d.p)},
              {"kodaira", d.kodaira.to_string()},
              {"f_p", d.f_p},
              {"v_min", d.v_min},
              {"reduction", to_string(d.reduction)}};
}

Json to_json(const GlobalData& g) {
  Json locals = Json::array();
  for (const auto& d : g.locals) locals.push_back(to_json(d));
  return Json{{"minimal_model", to_json(g.minimal_model)},
              {"delta_min", to_json(g.delta_min)},
              {"conductor", to_json(g.conductor)},
              {"semistable", g.semistable},
              {"locals", std::move(locals)}};
}

Json to_json(const FamilyParams& p) {
  return Json{{"t", to_json(p.t)},
              {"u", to_json(p.u)},
              {"v", to_json(p.v)},
              {"A", to_json(p.A)},
              {"B", to_json(p.B)},
              {"A_prime", to_json(p.A_prime)},
              {"B_prime", to_json(p.B_prime)},
              {"w", to_json(p.w)},
              {"curve", to_json(p.curve())},
              {"curve_prime", to_json(p.curve_prime())}};
}

Json to_json(const ConditionReport& r) {
  Json conds = Json::array();
  for (const auto& c : r.conditions) {
    Json w = Json::object();
    for (const auto& x : c.witnesses) w[x.label] = to_json(x.value);
    conds.push_back(Json{{"id", c.id},
                         {"statement", c.statement},
                         {"pass", c.pass},
                         {"witness", std::move(w)}});
  }
  return Json{{"t", to_json(r.t)}, {"pass", r.ok()}, {"conditions", conds}};
}

Json to_json(const SymbolicReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{
        {"name", c.name},
        {"pass", c.pass},
        {"expanded", to_json(c.expanded)},
        {"expected", to_json(c.expected)},
        {"mismatch_index",
         c.mismatch_index ? Json(*c.mismatch_index) : Json(nullptr)}});
  }
  return Json{{"pass", r.ok()}, {"checks", std::move(checks)}};
}

Json to_json(const CoprimalityReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps)
    steps.push_back(
        Json{{"claim", s.claim}, {"pass", s.pass}, {"detail", s.detail}});
  return Json{{"t", to_json(r.t)}, {"pass", r.ok()}, {"steps", steps}};
}

Json to_json(const TwinReport& r) {
  return Json{{"first", to_json(r.first)},
              {"second", to_json(r.second)},
              {"twins", r.is_twin()},
              {"delta_min_equal", r.delta_min_equal},
              {"conductor_equal", r.conductor_equal},
              {"both_semistable", r.both_semistable},
              {"j", Json::array({to_json(r.j_first), to_json(r.j_second)})},
              {"non_isomorphic", to_string(r.non_isomorphic)},
              {"isogeny", to_string(r.isogeny)},
              {"narrative", r.narrative}};
}

Json to_json(const FamilyInstanceReport& r) {
  return Json{{"t", to_json(r.params.t)},
              {"params", to_json(r.params)},
              {"conditions", to_json(r.conditions)},
              {"delta_min", to_json(r.delta.value)},
              {"delta_min_factorization", to_json(r.delta.factorization)},
              {"twin", to_json(r.twin)}};
}

Json to_json(const JSample& s) {
  Json values = Json::array();
  for (std::size_t i = 0; i < s.t_values.size(); ++i)
    values.push_back(
        Json{{"t", to_json(s.t_values[i])}, {"j", to_json(s.j_values[i])}});
  Json coll = Json::array();
  for (const auto& [i, k] : s.collisions)
    coll.push_back(Json::array({to_json(s.t_values[i]), to_json(s.t_values[k])}));
  return Json{{"distinct", s.distinct},
              {"count", s.t_values.size()},
              {"values", std::move(values)},
              {"collisions", std::move(coll)}};
}

Json to_json(const FreySearchResult& r) {
  Json groups = Json::array();
  for (const auto& g : r.groups) {
    Json members = Json::array();
    for (const auto& m : g.members)
      members.push_back(Json{{"A", to_json(m.A)}, {"B", to_json(m.B)}});
    Json checks = Json::array();
    for (const auto& c : g.checks) {
      Json jc{{"pair", Json::array({c.first, c.second})},
              {"j_distinct", c.j_distinct},
              {"verified", c.verified},
              {"twins", c.twins}};
      if (c.verified) {
        jc["delta_min"] = to_json(c.delta_min);
        jc["conductor"] = to_json(c.conductor);
      }
      checks.push_back(std::move(jc));
    }
    groups.push_back(Json{{"key", to_json(g.key)},
                          {"members", std::move(members)},
                          {"checks", std::move(checks)}});
  }
  return Json{{"admissible_pairs", r.admissible_pairs},
              {"passes", r.passes},
              {"peak_entries", r.peak_entries},
              {"collision_groups", r.groups.size()},
              {"pairs_verified", r.pairs_verified},
              {"pairs_confirmed", r.pairs_confirmed},
              {"agreement", r.agreement()},
              {"groups", std::move(groups)}};
}

Json to_json(const TwinScanReport& r, const std::vector<CurveRecord>& records) {
  auto ref = [&](std::size_t i) {
    Json j{{"line", records[i].source_line}};
    j["label"] = records[i].label ? Json(*records[i].label) : Json(nullptr);
    j["ainvs"] = to_json(records[i].model);
    return j;
  };
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back(Json{{"line", f.source_line},
                            {"label", f.label ? Json(*f.label) : Json(nullptr)},
                            {"reason", f.reason}});
  Json groups = Json::array();
  for (const auto& g : r.groups) {
    Json members = Json::array();
    for (std::size_t i : g.members) members.push_back(ref(i));
    Json pairs = Json::array();
    for (const auto& p : g.pairs)
      pairs.push_back(Json{{"first", records[p.first].source_line},
                           {"second", records[p.second].source_line},
                           {"both_semistable", p.report.both_semistable},
                           {"non_isomorphic", to_string(p.report.non_isomorphic)},
                           {"isogeny", to_string(p.report.isogeny)},
                           {"narrative", p.report.narrative}});
    groups.push_back(Json{{"delta_min", to_json(g.delta_min)},
                          {"conductor", to_json(g.conductor)},
                          {"members", std::move(members)},
                          {"pairs", std::move(pairs)}});
  }
  return Json{{"records", r.records},
              {"failures", std::move(failures)},
              {"twin_pairs", r.twin_pairs},
              {"semistable_twin_pairs", r.semistable_twin_pairs},
              {"non_isogenous_twin_pairs", r.non_isogenous_twin_pairs},
              {"groups", std::move(groups)}};
}

}  // namespace dtwin::cli
