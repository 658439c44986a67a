#include "borwein/json_io.hpp"

#include "borwein/errors.hpp"

namespace borwein {

namespace {

mpz_class parse_coeff(const Json& j) {
  if (!j.is_string()) throw ParseError("coefficient must be a decimal string");
  mpz_class c;
  if (c.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad coefficient");
  return c;
}

Sign parse_sign(const std::string& s) {
  if (s == "nonneg") return Sign::nonneg;
  if (s == "nonpos") return Sign::nonpos;
  throw ParseError("expected sign must be nonneg or nonpos");
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field ") + key);
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad field ") + key + ": " + e.what());
  }
}

}  // namespace

Json to_json(const LaurentPoly& f) {
  const std::vector<Var> vars = f.vars().list();
  Json names = Json::array();
  for (Var v : vars) names.push_back(std::string(1, var_name(v)));
  Json terms = Json::array();
  for (const auto& t : f.terms()) {
    Json e = Json::array();
    for (Var v : vars) e.push_back(exp_of(t.exps, v));
    terms.push_back(Json::array({e, t.coeff.get_str()}));
  }
  return {{"vars", names}, {"terms", terms}};
}

LaurentPoly laurent_from_json(const Json& j) {
  const auto names = field<std::vector<std::string>>(j, "vars");
  std::vector<Var> vars;
  VarSet set;
  for (const auto& n : names) {
    const auto v = n.size() == 1 ? var_from_name(n[0]) : std::nullopt;
    if (!v) throw ParseError("unknown variable " + n);
    if (set.contains(*v)) throw ParseError("duplicate variable " + n);
    set.insert(*v);
    vars.push_back(*v);
  }
  const Json& terms = j.at("terms");
  if (!terms.is_array()) throw ParseError("terms must be an array");
  std::vector<Term> out;
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_array() || t[0].size() != vars.size()) {
      throw ParseError("each term must be [[exponents], \"coeff\"]");
    }
    Term term;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (!t[0][i].is_number_integer()) throw ParseError("exponents must be integers");
      exp_of(term.exps, vars[i]) = t[0][i].get<std::int32_t>();
    }
    term.coeff = parse_coeff(t[1]);
    out.push_back(std::move(term));
  }
  return LaurentPoly::from_terms(set, std::move(out));
}

Json to_json(const ProductSpec& spec) {
  Json factors = Json::array();
  for (const auto& f : spec.factors) factors.push_back({f.p_exp, f.q_exp});
  return {{"provenance", {{"family", spec.provenance.family}, {"params", spec.provenance.params}}},
          {"factors", factors}};
}

ProductSpec spec_from_json(const Json& j) {
  ProductSpec spec;
  const Json& prov = j.contains("provenance") ? j.at("provenance") : Json::object();
  if (prov.contains("family")) spec.provenance.family = field<std::string>(prov, "family");
  if (prov.contains("params")) {
    spec.provenance.params = field<std::map<std::string, std::int64_t>>(prov, "params");
  }
  for (const auto& f : field<std::vector<std::vector<std::int32_t>>>(j, "factors")) {
    if (f.size() != 2) throw ParseError("each factor must be [alpha, beta]");
    spec.factors.push_back({f[0], f[1]});
  }
  return spec;
}

Json to_json(const PGradedSeries& s) {
  Json slices = Json::array();
  for (const auto& f : s.slices()) slices.push_back(to_json(f.with_vars(VarSet{Var::q})));
  return {{"kmax", s.kmax()}, {"slices", slices}};
}

PGradedSeries series_from_json(const Json& j) {
  const auto kmax = field<std::int64_t>(j, "kmax");
  const Json& slices = j.at("slices");
  if (!slices.is_array() || static_cast<std::int64_t>(slices.size()) != kmax + 1) {
    throw ParseError("slices must hold kmax + 1 entries");
  }
  std::vector<LaurentPoly> out;
  for (const auto& s : slices) out.push_back(laurent_from_json(s));
  return PGradedSeries(kmax, std::move(out));
}

Json to_json(const std::vector<Violation>& v) {
  Json out = Json::array();
  for (const auto& x : v) {
    out.push_back({{"k", x.k}, {"M", x.M}, {"coeff", x.coeff.get_str()},
                   {"expected", to_string(x.expected)}});
  }
  return out;
}

std::vector<Violation> violations_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("violations must be an array");
  std::vector<Violation> out;
  for (const auto& x : j) {
    out.push_back({field<std::int64_t>(x, "k"), field<std::int64_t>(x, "M"), parse_coeff(x.at("coeff")),
                   parse_sign(field<std::string>(x, "expected"))});
  }
  return out;
}

Json to_json(const VerificationReport& r) {
  Json witness = Json::object();
  for (const auto& [k, v] : r.witness) witness[k] = v;
  return {{"identity", r.identity},
          {"mode", r.mode},
          {"params", r.params},
          {"status", r.pass ? "pass" : "fail"},
          {"checks", r.checks},
          {"discarded", r.discarded},
          {"witness", witness}};
}

Json to_json(const CounterexampleReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.pattern_steps) steps.push_back({{"n", s.n}, {"coeff", s.coeff.get_str()}});
  return {
      {"refinement",
       {{"product", "(q,q^2;q^3)_1 (pq,pq^2;q^3)_40"},
        {"k", 40},
        {"violations", to_json(r.refinement_violations)},
        {"reproduced", r.refinement_reproduced()}}},
      {"pattern",
       {{"product", "conj3 m1=4 m2=0 K=3, n1=n2=n"},
        {"k", 18},
        {"M", 26},
        {"predicted", to_string(r.predicted)},
        {"steps", steps},
        {"stable_coeff", r.stable_coeff ? Json(r.stable_coeff->get_str()) : Json(nullptr)},
        {"reproduced", r.pattern_reproduced()}}},
      {"control",
       {{"product", "conj1 m=1 n=10"},
        {"kmax", 4},
        {"violations", to_json(r.control_violations)},
        {"clean", r.control_violations.empty()}}}};
}

}  // namespace borwein
