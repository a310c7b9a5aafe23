#include "ringdef/json_io.hpp"

#include "ringdef/formula_text.hpp"

namespace ringdef {

namespace {

const char* strategy_name(MembershipStrategy s) {
  switch (s) {
    case MembershipStrategy::PrincipalGcd: return "principal-gcd";
    case MembershipStrategy::PolyDivision: return "poly-division";
    case MembershipStrategy::QuotientMap: return "quotient-map";
    case MembershipStrategy::FiniteScan: return "finite-scan";
  }
  return "?";
}

MembershipStrategy strategy_from(const std::string& s) {
  if (s == "principal-gcd") return MembershipStrategy::PrincipalGcd;
  if (s == "poly-division") return MembershipStrategy::PolyDivision;
  if (s == "quotient-map") return MembershipStrategy::QuotientMap;
  if (s == "finite-scan") return MembershipStrategy::FiniteScan;
  fail(ErrorCode::ParseError, "unknown membership strategy '" + s + "'");
}

Json hom_to_json(const RingHom& h) {
  Json j;
  j["source"] = h.source().to_string();
  j["target"] = h.target().to_string();
  switch (h.hom_kind()) {
    case RingHom::Kind::ReduceIntMod: j["kind"] = "reduce-int-mod"; break;
    case RingHom::Kind::ReduceZmod: j["kind"] = "reduce-zmod"; break;
    case RingHom::Kind::PolyEval:
      j["kind"] = "poly-eval";
      j["point"] = h.target().encode(h.eval_point());
      break;
    case RingHom::Kind::PolyReduceMonic: j["kind"] = "poly-reduce-monic"; break;
    case RingHom::Kind::ExtEvalModP:
      j["kind"] = "ext-eval-mod-p";
      j["point"] = h.eval_point().scalar().str();
      break;
  }
  return j;
}

RingHom hom_from_json(const Json& j) {
  std::string kind = j.at("kind");
  RingSpec src = RingSpec::parse(j.at("source").get<std::string>());
  RingSpec tgt = RingSpec::parse(j.at("target").get<std::string>());
  if (kind == "reduce-int-mod") return RingHom::reduce_int_mod(tgt.modulus());
  if (kind == "reduce-zmod") return RingHom::reduce_zmod(src, tgt.modulus());
  if (kind == "poly-eval")
    return RingHom::poly_eval(src, tgt.decode(j.at("point").get<std::string>()));
  if (kind == "poly-reduce-monic") return RingHom::poly_reduce_monic(src, tgt);
  if (kind == "ext-eval-mod-p")
    return RingHom::ext_eval_mod_p(src, tgt.modulus(),
                                   BigInt(j.at("point").get<std::string>()));
  fail(ErrorCode::ParseError, "unknown hom kind '" + kind + "'");
}

Json ideal_to_json(const Ideal& I) {
  Json j;
  j["ring"] = I.ring().to_string();
  Json gens = Json::array();
  for (const Elem& g : I.generators()) gens.push_back(I.ring().encode(g));
  j["gens"] = std::move(gens);
  j["strategy"] = strategy_name(I.strategy());
  if (I.quotient_hom()) j["hom"] = hom_to_json(*I.quotient_hom());
  return j;
}

Ideal ideal_from_json(const Json& j) {
  RingSpec ring = RingSpec::parse(j.at("ring").get<std::string>());
  std::vector<Elem> gens;
  for (const auto& g : j.at("gens")) gens.push_back(ring.decode(g.get<std::string>()));
  MembershipStrategy st = strategy_from(j.at("strategy").get<std::string>());
  if (st == MembershipStrategy::QuotientMap)
    return Ideal::kernel(ring, std::move(gens), hom_from_json(j.at("hom")));
  return Ideal::make(ring, std::move(gens), st);
}

Json target_to_json(const TargetSet& t) {
  Json j;
  switch (t.kind()) {
    case TargetSet::Kind::Nonzero: j["kind"] = "nonzero"; break;
    case TargetSet::Kind::Regular: j["kind"] = "regular"; break;
    case TargetSet::Kind::ComplementOfIdeal:
      j["kind"] = "complement-of-ideal";
      j["ideal"] = ideal_to_json(t.ideal());
      break;
    case TargetSet::Kind::MemberOfIdeal:
      j["kind"] = "member-of-ideal";
      j["ideal"] = ideal_to_json(t.ideal());
      break;
    case TargetSet::Kind::Preimage:
      j["kind"] = "preimage";
      j["hom"] = hom_to_json(t.hom());
      j["inner"] = target_to_json(t.inner());
      break;
  }
  return j;
}

TargetSet target_from_json(const Json& j) {
  std::string kind = j.at("kind");
  if (kind == "nonzero") return TargetSet::nonzero();
  if (kind == "regular") return TargetSet::regular();
  if (kind == "complement-of-ideal")
    return TargetSet::complement_of(ideal_from_json(j.at("ideal")));
  if (kind == "member-of-ideal")
    return TargetSet::member_of(ideal_from_json(j.at("ideal")));
  if (kind == "preimage")
    return TargetSet::preimage(hom_from_json(j.at("hom")),
                               target_from_json(j.at("inner")));
  fail(ErrorCode::ParseError, "unknown target kind '" + kind + "'");
}

Json provenance_to_json(const Provenance& p) {
  Json j;
  j["rule"] = p.rule;
  Json params = Json::array();
  for (const auto& [k, v] : p.params) params.push_back(Json::array({k, v}));
  j["params"] = std::move(params);
  Json kids = Json::array();
  for (const Provenance& c : p.children) kids.push_back(provenance_to_json(c));
  j["children"] = std::move(kids);
  return j;
}

Provenance provenance_from_json(const Json& j) {
  Provenance p;
  p.rule = j.at("rule").get<std::string>();
  for (const auto& kv : j.at("params"))
    p.params.emplace_back(kv.at(0).get<std::string>(), kv.at(1).get<std::string>());
  for (const auto& c : j.at("children")) p.children.push_back(provenance_from_json(c));
  return p;
}

}  // namespace

Json certificate_to_json(const Certificate& c) {
  Json j;
  j["ring"] = c.ring.to_string();
  j["free_var"] = c.free_var;
  j["target"] = target_to_json(c.target);
  j["formula"] = print_formula(c.formula, c.ring);
  j["provenance"] = provenance_to_json(c.provenance);
  Json as = Json::array();
  for (const Assumption& a : c.assumptions) {
    Json ja;
    ja["tag"] = a.tag;
    ja["text"] = a.text;
    ja["checked"] = a.checked;
    as.push_back(std::move(ja));
  }
  j["assumptions"] = std::move(as);
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.ring = RingSpec::parse(j.at("ring").get<std::string>());
  c.free_var = j.at("free_var").get<std::string>();
  c.target = target_from_json(j.at("target"));
  c.formula = parse_formula(j.at("formula").get<std::string>(), c.ring);
  c.provenance = provenance_from_json(j.at("provenance"));
  for (const auto& a : j.at("assumptions"))
    c.assumptions.push_back({a.at("tag").get<std::string>(),
                             a.at("text").get<std::string>(),
                             a.at("checked").get<bool>()});
  check_certificate(c);
  return c;
}

Json report_to_json(const Report& r, bool include_timing) {
  Json j;
  j["instance"] = r.instance;
  Json vs = Json::array();
  for (const Report::Entry& e : r.verdicts) {
    Json je;
    je["input"] = e.input;
    je["verdict"] = e.verdict == VerdictKind::True             ? "true"
                    : e.verdict == VerdictKind::FalseExhaustive ? "false-exhaustive"
                                                                : "unknown";
    if (e.verdict == VerdictKind::True) {
      Json w = Json::array();
      for (const auto& [var, enc] : e.witness) w.push_back(Json::array({var, enc}));
      je["witness"] = std::move(w);
      je["height"] = e.height;
    }
    je["target_member"] = e.target_member;
    vs.push_back(std::move(je));
  }
  j["verdicts"] = std::move(vs);
  j["falsifications"] = r.falsifications;
  j["counts"] = Json{{"true", r.true_count},
                     {"false_exhaustive", r.false_count},
                     {"unknown", r.unknown_count}};
  if (!r.phi_levels.empty() || !r.phi_global.empty()) {
    Json phi;
    Json levels = Json::array();
    for (const auto& l : r.phi_levels) {
      Json jl;
      jl["q"] = l.q;
      jl["solvable"] = l.solvable;
      jl["method"] = l.method;
      if (!l.witness.empty()) jl["witness"] = l.witness;
      levels.push_back(std::move(jl));
    }
    phi["levels"] = std::move(levels);
    phi["global"] = r.phi_global;
    j["phi"] = std::move(phi);
  }
  if (!r.conclusion.empty()) j["conclusion"] = r.conclusion;
  if (!r.assumptions_echo.empty()) {
    Json as = Json::array();
    for (const Assumption& a : r.assumptions_echo) {
      Json ja;
      ja["tag"] = a.tag;
      ja["checked"] = a.checked;
      as.push_back(std::move(ja));
    }
    j["assumptions"] = std::move(as);
  }
  j["budget"] = Json{{"heights", r.budget.to_string()},
                     {"node_limit", r.budget.node_limit}};
  j["seed"] = r.seed;
  j["pass"] = r.pass;
  if (include_timing && r.wallclock_ms >= 0) j["wallclock_ms"] = r.wallclock_ms;
  return j;
}

}  // namespace ringdef
