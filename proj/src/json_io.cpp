#include "capelli/json_io.hpp"

#include "capelli/error.hpp"

namespace capelli {

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  throw Error("BAD_REQUEST", "expected a rational as \"p/q\" or integer");
}

Json partition_to_json(const Partition& p) {
  Json arr = Json::array();
  for (long part : p.parts()) arr.push_back(part);
  return arr;
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw Error("BAD_REQUEST", "expected a partition array");
  std::vector<long> parts;
  for (const auto& x : j) parts.push_back(x.get<long>());
  return Partition(parts);
}

Json mpoly_to_json(const MPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json term;
    term["exps"] = e;
    term["coef"] = rational_to_json(c);
    terms.push_back(term);
  }
  Json out;
  out["vars"] = p.vars();
  out["terms"] = terms;
  return out;
}

MPoly mpoly_from_json(const Json& j) {
  MPoly p(j.at("vars").get<std::vector<std::string>>());
  for (const auto& term : j.at("terms"))
    p.add_term(term.at("exps").get<Exponents>(),
               rational_from_json(term.at("coef")));
  return p;
}

Json ring_spec_to_json(const RingSpec& spec) {
  Json out;
  out["kind"] = spec.kind == RingKind::SuperA ? "SUPER_A" : "Q_TYPE";
  out["m"] = spec.m;
  out["n"] = spec.n;
  if (spec.kind == RingKind::SuperA) out["theta"] = rational_to_json(spec.theta);
  return out;
}

Json weight_to_json(const Weight& w) {
  Json coeffs = Json::array();
  for (const auto& c : w.coeffs) coeffs.push_back(rational_to_json(c));
  Json out;
  out["basis"] = w.basis;
  out["coeffs"] = coeffs;
  return out;
}

Json jordan_case_to_json(const JordanCase& c) {
  Json out;
  out["case"] = case_name(c.tag());
  switch (c.tag()) {
    case CaseTag::I:
    case CaseTag::II:
    case CaseTag::III:
      out["m"] = c.m();
      out["n"] = c.n();
      break;
    case CaseTag::IV: out["t"] = rational_to_json(c.t()); break;
    case CaseTag::V: break;
    case CaseTag::VI:
    case CaseTag::VII: out["n"] = c.n(); break;
  }
  return out;
}

Json interpolation_result_to_json(const InterpolationResult& r) {
  Json out;
  out["lambda"] = partition_to_json(r.lambda);
  out["spec"] = ring_spec_to_json(r.spec);
  out["poly"] = mpoly_to_json(r.poly);
  out["verified"] = r.verified;
  return out;
}

Json capelli_report_to_json(const CapelliReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json item;
    item["mu"] = partition_to_json(c.mu);
    item["lambda"] = partition_to_json(c.lambda);
    item["expected"] = rational_to_json(c.expected);
    item["actual"] = rational_to_json(c.actual);
    item["pass"] = c.pass;
    checks.push_back(item);
  }
  Json out;
  out["case"] = r.case_desc;
  out["degree"] = r.degree;
  out["all_pass"] = r.all_pass;
  out["checks"] = checks;
  return out;
}

Json eigenvalue_table_to_json(const EigenvalueTable& t) {
  Json parts = Json::array();
  for (const auto& p : t.partitions()) parts.push_back(partition_to_json(p));
  Json entries = Json::array();
  for (const auto& mu : t.partitions())
    for (const auto& lambda : t.partitions()) {
      Json e;
      e["mu"] = partition_to_json(mu);
      e["lambda"] = partition_to_json(lambda);
      e["value"] = rational_to_json(t.at(mu, lambda));
      entries.push_back(e);
    }
  Json out;
  out["case"] = jordan_case_to_json(t.jordan_case());
  out["max_degree"] = t.max_degree();
  out["partitions"] = parts;
  out["entries"] = entries;
  return out;
}

} // namespace capelli
