#include "inls/report_json.hpp"

namespace inls {

namespace {

std::string region_name(Region r) { return r == Region::Ball ? "ball" : "ball-complement"; }

Region region_from(const std::string& s) {
  if (s == "ball") return Region::Ball;
  if (s == "ball-complement") return Region::BallComplement;
  throw std::invalid_argument("unknown region '" + s + "'");
}

}  // namespace

Json to_json(const ParamSet& p) {
  Json j;
  j["N"] = p.dim;
  j["alpha"] = p.alpha.str();
  j["b"] = p.b.str();
  j["s"] = p.s.str();
  j["lambda"] = p.lambda_sign;
  if (p.theta) j["theta"] = p.theta->str();
  if (p.mu) j["mu"] = p.mu->str();
  if (p.epsilon) j["epsilon"] = p.epsilon->str();
  return j;
}

ParamSet param_set_from_json(const Json& j) {
  ParamSet p;
  p.dim = j.at("N").get<int>();
  p.alpha = Rational::parse(j.at("alpha").get<std::string>());
  p.b = Rational::parse(j.at("b").get<std::string>());
  p.s = Rational::parse(j.at("s").get<std::string>());
  p.lambda_sign = j.at("lambda").get<int>();
  if (j.contains("theta")) p.theta = Rational::parse(j.at("theta").get<std::string>());
  if (j.contains("mu")) p.mu = Rational::parse(j.at("mu").get<std::string>());
  if (j.contains("epsilon")) p.epsilon = Rational::parse(j.at("epsilon").get<std::string>());
  return p;
}

Json to_json(const LemmaReport& r) {
  Json j;
  j["lemma"] = std::string(to_string(r.lemma));
  j["params"] = to_json(r.params);
  j["s_critical"] = r.s_critical.str();

  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    Json e;
    e["name"] = p.name;
    e["q"] = p.pair.q.str();
    e["r"] = p.pair.r.str();
    e["claimed_class"] = p.claimed.str();
    e["verified"] = p.verified;
    pairs.push_back(std::move(e));
  }
  j["pairs"] = std::move(pairs);

  Json systems = Json::array();
  for (const auto& s : r.systems) {
    Json e;
    e["name"] = s.name;
    if (s.region) e["region"] = region_name(*s.region);
    Json symbols;
    for (const auto& [k, v] : s.symbols) symbols[k] = v.str();
    e["symbols"] = std::move(symbols);
    if (!s.note.empty()) e["note"] = s.note;
    systems.push_back(std::move(e));
  }
  j["systems"] = std::move(systems);

  Json identities = Json::array();
  for (const auto& i : r.identities) {
    Json e;
    e["desc"] = i.desc;
    e["lhs"] = i.lhs.str();
    e["rhs"] = i.rhs.str();
    e["pass"] = i.pass;
    identities.push_back(std::move(e));
  }
  j["identities"] = std::move(identities);

  Json signs = Json::array();
  for (const auto& s : r.signs) {
    Json e;
    e["expr"] = s.desc;
    e["value"] = s.value.str();
    e["required"] = s.required_sign > 0 ? "positive" : "negative";
    e["pass"] = s.pass;
    signs.push_back(std::move(e));
  }
  j["signs"] = std::move(signs);

  j["theta"] = Json{{"t1", r.theta1.str()}, {"t2", r.theta2.str()}};
  if (!r.corollary_terms.empty()) j["corollary_terms"] = r.corollary_terms;
  j["pass"] = r.pass();
  return j;
}

LemmaReport lemma_report_from_json(const Json& j) {
  LemmaReport r;
  auto id = lemma_from_string(j.at("lemma").get<std::string>());
  if (!id) throw std::invalid_argument("unknown lemma name");
  r.lemma = *id;
  r.params = param_set_from_json(j.at("params"));
  r.s_critical = Rational::parse(j.at("s_critical").get<std::string>());

  for (const auto& e : j.at("pairs")) {
    PairCheck p;
    p.name = e.at("name").get<std::string>();
    p.pair.q = Rational::parse(e.at("q").get<std::string>());
    p.pair.r = Rational::parse(e.at("r").get<std::string>());
    p.claimed = PairClass::parse(e.at("claimed_class").get<std::string>());
    p.verified = e.at("verified").get<bool>();
    const Rational reg = p.claimed.kind == AdmissibleKind::L2 ? Rational(0) : p.claimed.s;
    p.actual = classify_pair(p.pair, r.params.dim, reg, r.params.eps());
    if (p.verified != (p.actual == p.claimed))
      throw std::invalid_argument("pair " + p.name + " does not re-validate");
    r.pairs.push_back(std::move(p));
  }
  for (const auto& e : j.at("systems")) {
    ExponentSystem s;
    s.name = e.at("name").get<std::string>();
    if (e.contains("region")) s.region = region_from(e.at("region").get<std::string>());
    for (const auto& [k, v] : e.at("symbols").items())
      s.symbols.emplace_back(k, Rational::parse(v.get<std::string>()));
    if (e.contains("note")) s.note = e.at("note").get<std::string>();
    r.systems.push_back(std::move(s));
  }
  for (const auto& e : j.at("identities")) {
    IdentityCheck i;
    i.desc = e.at("desc").get<std::string>();
    i.lhs = Rational::parse(e.at("lhs").get<std::string>());
    i.rhs = Rational::parse(e.at("rhs").get<std::string>());
    i.pass = e.at("pass").get<bool>();
    if (i.pass != (i.lhs == i.rhs))
      throw std::invalid_argument("identity '" + i.desc + "' does not re-validate");
    r.identities.push_back(std::move(i));
  }
  for (const auto& e : j.at("signs")) {
    SignCheck s;
    s.desc = e.at("expr").get<std::string>();
    s.value = Rational::parse(e.at("value").get<std::string>());
    s.required_sign = e.at("required").get<std::string>() == "positive" ? +1 : -1;
    s.pass = e.at("pass").get<bool>();
    const bool recheck =
        s.required_sign > 0 ? s.value > Rational(0) : s.value < Rational(0);
    if (s.pass != recheck)
      throw std::invalid_argument("sign '" + s.desc + "' does not re-validate");
    r.signs.push_back(std::move(s));
  }
  r.theta1 = Rational::parse(j.at("theta").at("t1").get<std::string>());
  r.theta2 = Rational::parse(j.at("theta").at("t2").get<std::string>());
  if (j.contains("corollary_terms"))
    r.corollary_terms = j.at("corollary_terms").get<std::vector<std::string>>();
  return r;
}

}  // namespace inls
