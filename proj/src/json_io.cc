// Copyright 2026 The rcurve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rcurve/json_io.h"

#include <initializer_list>
#include <string>

namespace rcurve {
namespace {

std::string_view PairCaseName(PairCase k) {
  switch (k) {
    case PairCase::kSphereLine: return "SphereLine";
    case PairCase::kTorusLine: return "TorusLine";
    case PairCase::kTorusNull: return "TorusNull";
    case PairCase::kOneSidedCrosscaps: return "OneSidedCrosscaps";
    case PairCase::kOneSidedGenus: return "OneSidedGenus";
    case PairCase::kFiberCrosscaps: return "FiberCrosscaps";
    case PairCase::kFiberGenus: return "FiberGenus";
    case PairCase::kSeparatingCrosscaps: return "SeparatingCrosscaps";
    case PairCase::kSeparatingGenus: return "SeparatingGenus";
  }
  return "?";
}

template <typename E, typename NameFn>
E EnumFromName(const Json& j, std::initializer_list<E> all, NameFn name) {
  const std::string text = j.get<std::string>();
  for (E e : all) {
    if (name(e) == text) return e;
  }
  throw Error(ErrorCode::kParse, "unknown name '" + text + "'");
}

[[noreturn]] void Bad(const std::string& what) { throw Error(ErrorCode::kParse, what); }

int ParseBound(const std::string& text, const std::string& prefix) {
  if (text.rfind(prefix, 0) != 0) Bad("bad constraint '" + text + "'");
  try {
    size_t used = 0;
    const std::string rest = text.substr(prefix.size());
    const int n = std::stoi(rest, &used);
    if (used != rest.size()) Bad("bad constraint '" + text + "'");
    return n;
  } catch (const std::logic_error&) {
    Bad("bad constraint '" + text + "'");
  }
}

}  // namespace

void to_json(Json& j, const PairWord& w) { j = FormatPairWord(w); }
void from_json(const Json& j, PairWord& w) { w = ParsePairWord(j.get<std::string>()); }

void to_json(Json& j, const CaseLabel& c) {
  j = Json{{"kind", PairCaseName(c.kind)}, {"r", c.r},   {"g", c.g},
           {"r1", c.r1},                   {"r2", c.r2}, {"template", c.Template()}};
}

void to_json(Json& j, const DivClass& c) { j = c.coords; }
void from_json(const Json& j, DivClass& c) { c.coords = j.get<std::vector<Rational>>(); }

void to_json(Json& j, const CobleResult& r) {
  j = Json{{"csq", r.csq},
           {"k_coeff", r.k_coeff},
           {"verdict", CobleVerdictName(r.verdict)},
           {"identity_holds", r.identity_holds},
           {"p_a", r.p_a},
           {"nodes", r.nodes},
           {"real_nodes", r.real_nodes}};
}

void to_json(Json& j, const TowerResult& r) {
  Json cycle = Json::array();
  for (const NamedCurve& c : r.cycle) {
    cycle.push_back({{"name", c.name}, {"class", c.cls}, {"self_intersection", c.self_intersection}});
  }
  j = Json{{"cycle", cycle},
           {"minus_one_count", r.minus_one_count},
           {"last_exceptional_unique", r.last_exceptional_unique}};
}

void to_json(Json& j, const P1xP1Parity& r) {
  j = Json{{"p_a", r.p_a}, {"real_singularity_forced", r.real_singularity_forced}};
}

void to_json(Json& j, const Dp2Result& r) {
  j = Json{{"self_pairing", r.self_pairing}, {"p_a", r.p_a}, {"forced", r.forced_real_singular}};
}

void to_json(Json& j, const MinusTwoSolution& s) {
  j = Json{{"a", s.a}, {"b", s.b}, {"d", s.d}, {"c_dot_c_plus_k", s.c_dot_c_plus_k}};
}

void from_json(const Json& j, MinusTwoSolution& s) {
  s.a = j.at("a").get<int>();
  s.b = j.at("b").get<int>();
  s.d = j.at("d").get<int>();
  s.c_dot_c_plus_k = j.value("c_dot_c_plus_k", 0LL);
}

void to_json(Json& j, const Step& s) { j = s.ToString(); }
void from_json(const Json& j, Step& s) { s = ParseStep(j.get<std::string>()); }
void to_json(Json& j, const EndStateKind& k) { j = k.ToString(); }
void from_json(const Json& j, EndStateKind& k) { k = ParseEndStateKind(j.get<std::string>()); }

void to_json(Json& j, const TraceEntry& e) {
  j = Json{{"step", e.step}, {"csq", e.csq}, {"pair", e.pair}};
}

void from_json(const Json& j, TraceEntry& e) {
  e.step = j.at("step").get<std::string>();
  e.csq = j.at("csq").get<long long>();
  e.pair = j.at("pair").get<TopPair>();
}

void to_json(Json& j, const MinusTwoReport& r) {
  Json cases = Json::array();
  for (const SurfaceCase& c : r.cases) cases.push_back({{"name", c.name}, {"rational", c.rational}});
  j = Json{{"cases", cases}, {"solutions", r.solutions}, {"irreducible", r.irreducible}};
}

void to_json(Json& j, const ContractedSurface& c) {
  j = Json{{"real_locus", c.real_locus}};
  if (c.lattice) j["lattice"] = *c.lattice;
}

void to_json(Json& j, const ParamFamily& f) {
  if (f.kind == ParamFamily::Kind::kSingle) {
    j = Json{{"pair", f.Template()}};
  } else {
    j = Json{{"family", f.Template()}, {"constraint", f.Constraint()}};
  }
}

void from_json(const Json& j, ParamFamily& f) {
  if (j.contains("pair")) {
    f = ParamFamily::Single(Normalize(ParsePairWord(j.at("pair").get<std::string>())));
    return;
  }
  const std::string fam = j.at("family").get<std::string>();
  const std::string con = j.at("constraint").get<std::string>();
  if (fam == "r1*RP2 + S2L + r2*RP2") {
    f = ParamFamily::Separating(ParseBound(con, "r1+r2>="));
    return;
  }
  const std::string suffix = " + r*RP2";
  if (fam.size() <= suffix.size() || fam.substr(fam.size() - suffix.size()) != suffix) {
    Bad("unknown family '" + fam + "'");
  }
  const PairWord base = ParsePairWord(fam.substr(0, fam.size() - suffix.size()));
  if (base.rp2l_count != 0 || !base.summands.empty()) Bad("family base must be a single token");
  f = ParamFamily::Crosscaps(base.base, ParseBound(con, "r>="));
}

void to_json(Json& j, const TableRow& r) {
  Json e = r.label;
  try {
    size_t used = 0;
    const int n = std::stoi(r.label, &used);
    if (used == r.label.size()) e = n;
  } catch (const std::logic_error&) {
  }
  j = Json{{"e", e}, {"families", r.families}};
}

void from_json(const Json& j, TableRow& r) {
  const Json& e = j.at("e");
  r.label = e.is_number_integer() ? std::to_string(e.get<int>()) : e.get<std::string>();
  r.families = j.at("families").get<std::vector<ParamFamily>>();
}

void to_json(Json& j, const TypeTable& t) { j = Json{{"rows", t.rows}}; }
void from_json(const Json& j, TypeTable& t) { t.rows = j.at("rows").get<std::vector<TableRow>>(); }

void to_json(Json& j, const ConstructionPlan& p) {
  if (p.kind == ConstructionPlan::Kind::kMmp) {
    j = Json{{"kind", "mmp"}, {"target", p.target}, {"end_state", *p.end_state}, {"steps", p.steps}};
  } else {
    j = Json{{"kind", "double_equator"},
             {"target", p.target},
             {"g", p.g},
             {"extra_crosscaps", p.extra_crosscaps}};
  }
}

void from_json(const Json& j, ConstructionPlan& p) {
  const std::string kind = j.at("kind").get<std::string>();
  p.target = j.at("target").get<TopPair>();
  if (kind == "mmp") {
    p.kind = ConstructionPlan::Kind::kMmp;
    p.end_state = j.at("end_state").get<EndStateKind>();
    p.steps = j.at("steps").get<std::vector<Step>>();
  } else if (kind == "double_equator") {
    p.kind = ConstructionPlan::Kind::kDoubleEquator;
    p.g = j.at("g").get<int>();
    p.extra_crosscaps = j.at("extra_crosscaps").get<int>();
  } else {
    Bad("unknown plan kind '" + kind + "'");
  }
}

void to_json(Json& j, const Verdict& v) {
  j = Json{{"verdict", ApproximabilityName(v.kind)}};
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.witness) j["witness"] = *v.witness;
}

void to_json(Json& j, const IdentityCheck& c) {
  j = Json{{"line", c.line}, {"r", c.r}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds}};
}

void to_json(Json& j, const Discrepancy& d) {
  j = Json{{"line", d.line},
           {"lhs", d.lhs},
           {"rhs", d.rhs},
           {"substitute_line", d.substitute_line},
           {"substitute", d.substitute},
           {"substitute_holds", d.substitute_holds}};
}

void to_json(Json& j, const DiffeoTableReport& r) {
  j = Json{{"checks", r.checks}, {"discrepancies", r.discrepancies}};
}


void from_json(const Json& j, CaseLabel& out) {
  using K = PairCase;
  out.kind = EnumFromName(j.at("kind"),
                          {K::kSphereLine, K::kTorusLine, K::kTorusNull, K::kOneSidedCrosscaps,
                           K::kOneSidedGenus, K::kFiberCrosscaps, K::kFiberGenus,
                           K::kSeparatingCrosscaps, K::kSeparatingGenus},
                          PairCaseName);
  out.r = j.at("r").get<int>();
  out.g = j.at("g").get<int>();
  out.r1 = j.at("r1").get<int>();
  out.r2 = j.at("r2").get<int>();
}

void from_json(const Json& j, CobleResult& out) {
  out.csq = j.at("csq").get<long long>();
  out.k_coeff = j.at("k_coeff").get<Rational>();
  out.verdict = EnumFromName(
      j.at("verdict"), {CobleVerdict::kAntiAmpleish, CobleVerdict::kTrivial, CobleVerdict::kAmple},
      CobleVerdictName);
  out.identity_holds = j.at("identity_holds").get<bool>();
  out.p_a = j.at("p_a").get<long long>();
  out.nodes = j.at("nodes").get<int>();
  out.real_nodes = j.at("real_nodes").get<int>();
}

void from_json(const Json& j, TowerResult& out) {
  out.cycle.clear();
  for (const Json& c : j.at("cycle")) {
    out.cycle.push_back({c.at("name").get<std::string>(), c.at("class").get<DivClass>(),
                         c.at("self_intersection").get<long long>()});
  }
  out.minus_one_count = j.at("minus_one_count").get<int>();
  out.last_exceptional_unique = j.at("last_exceptional_unique").get<bool>();
}

void from_json(const Json& j, P1xP1Parity& out) {
  out.p_a = j.at("p_a").get<long long>();
  out.real_singularity_forced = j.at("real_singularity_forced").get<bool>();
}

void from_json(const Json& j, Dp2Result& out) {
  out.self_pairing = j.at("self_pairing").get<long long>();
  out.p_a = j.at("p_a").get<long long>();
  out.forced_real_singular = j.at("forced").get<bool>();
}

void from_json(const Json& j, MinusTwoReport& out) {
  out.cases.clear();
  for (const Json& c : j.at("cases")) {
    out.cases.push_back({c.at("name").get<std::string>(), c.at("rational").get<bool>()});
  }
  out.solutions = j.at("solutions").get<std::vector<MinusTwoSolution>>();
  out.irreducible = j.at("irreducible").get<std::vector<MinusTwoSolution>>();
}

void from_json(const Json& j, ContractedSurface& out) {
  out.real_locus = j.at("real_locus").get<ClosedSurface>();
  out.lattice.reset();
  if (j.contains("lattice")) out.lattice = j.at("lattice").get<PicLattice>();
}

void from_json(const Json& j, Verdict& out) {
  using A = Approximability;
  out.kind = EnumFromName(j.at("verdict"), {A::kApproximable, A::kNotApproximable, A::kNotRealizable},
                          ApproximabilityName);
  out.reason = j.value("reason", "");
  out.witness.reset();
  if (j.contains("witness")) out.witness = j.at("witness").get<ConstructionPlan>();
}

void from_json(const Json& j, IdentityCheck& out) {
  out.line = j.at("line").get<std::string>();
  out.r = j.at("r").get<int>();
  out.lhs = j.at("lhs").get<TopPair>();
  out.rhs = j.at("rhs").get<TopPair>();
  out.holds = j.at("holds").get<bool>();
}

void from_json(const Json& j, Discrepancy& out) {
  out.line = j.at("line").get<std::string>();
  out.lhs = j.at("lhs").get<TopPair>();
  out.rhs = j.at("rhs").get<TopPair>();
  out.substitute_line = j.at("substitute_line").get<std::string>();
  out.substitute = j.at("substitute").get<TopPair>();
  out.substitute_holds = j.at("substitute_holds").get<bool>();
}

void from_json(const Json& j, DiffeoTableReport& out) {
  out.checks = j.at("checks").get<std::vector<IdentityCheck>>();
  out.discrepancies = j.at("discrepancies").get<std::vector<Discrepancy>>();
}

}  // namespace rcurve

namespace nlohmann {

void adl_serializer<rcurve::Rational>::to_json(json& j, const rcurve::Rational& q) {
  if (q.denominator() == 1) {
    j = q.numerator();
  } else {
    j = rcurve::RationalToString(q);
  }
}

rcurve::Rational adl_serializer<rcurve::Rational>::from_json(const json& j) {
  using rcurve::Rational;
  if (j.is_number_integer()) return Rational(j.get<long long>());
  const std::string s = j.get<std::string>();
  const size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(std::stoll(s));
    } else {
      return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }
  } catch (const std::exception&) {
    throw rcurve::Error(rcurve::ErrorCode::kParse, "bad rational '" + s + "'");
  }
}


rcurve::ClosedSurface adl_serializer<rcurve::ClosedSurface>::from_json(const json& j) {
  return rcurve::ParseClosedSurface(j.get<std::string>());
}

void adl_serializer<rcurve::ClosedSurface>::to_json(json& j, const rcurve::ClosedSurface& s) {
  j = s.ToString();
}

rcurve::TopPair adl_serializer<rcurve::TopPair>::from_json(const json& j) {
  using rcurve::ClosedSurface;
  const std::string v = j.at("variant").get<std::string>();
  if (v == "Separating") {
    return rcurve::TopPair::MakeSeparating(j.at("first").get<ClosedSurface>(),
                                           j.at("second").get<ClosedSurface>());
  }
  if (v == "OneSided") return rcurve::TopPair::MakeOneSided(j.at("cap").get<ClosedSurface>());
  if (v == "NonSepTwoSided") {
    return rcurve::TopPair::MakeNonSepTwoSided(j.at("cap").get<ClosedSurface>(),
                                               j.at("total_orientable").get<bool>());
  }
  throw rcurve::Error(rcurve::ErrorCode::kParse, "unknown pair variant '" + v + "'");
}

void adl_serializer<rcurve::TopPair>::to_json(json& j, const rcurve::TopPair& p) {
  j = json{{"variant", p.VariantName()}, {"name", p.ToString()}};
  if (p.is_separating()) {
    j["first"] = p.separating().first;
    j["second"] = p.separating().second;
  } else if (p.is_one_sided()) {
    j["cap"] = p.one_sided().cap;
  } else {
    j["cap"] = p.nonsep().cap;
    j["total_orientable"] = p.nonsep().total_orientable;
  }
}

rcurve::PicLattice adl_serializer<rcurve::PicLattice>::from_json(const json& j) {
  using namespace rcurve;
  PicLattice lat(ParseSurfaceBase(j.at("base").get<std::string>()));
  DivClass unused = lat.Zero();
  for (const json& e : j.at("exceptionals")) {
    const bool on = e.at("on_curve").get<bool>();
    const int mult = e.value("multiplicity", on ? 1 : 0);
    const bool tracked = e.value("tracked", true);
    Center c = ConjPairCenter{on};
    if (e.at("real").get<bool>()) {
      const std::string side = e.value("side", "Any");
      Side s = Side::kAny;
      if (side == "L" || side == "Left") {
        s = Side::kLeft;
      } else if (side == "R" || side == "Right") {
        s = Side::kRight;
      } else if (side != "Any") {
        throw Error(ErrorCode::kParse, "unknown side '" + side + "'");
      }
      c = RealCenter{on, s};
    }
    unused.coords.resize(lat.rank());
    std::tie(lat, unused) = lat.BlowUp(c, unused, mult, tracked);
  }
  if (j.contains("gram") && j.at("gram").get<std::vector<std::vector<long long>>>() != lat.gram()) {
    throw Error(ErrorCode::kParse, "gram matrix does not match the blow-up record");
  }
  return lat;
}

void adl_serializer<rcurve::PicLattice>::to_json(json& j, const rcurve::PicLattice& l) {
  json ex = json::array();
  for (const rcurve::Exceptional& e : l.exceptionals()) {
    ex.push_back({{"real", e.real},
                  {"on_curve", e.on_curve},
                  {"side", rcurve::SideName(e.side)},
                  {"multiplicity", e.multiplicity},
                  {"tracked", e.tracked}});
  }
  j = json{{"base", l.base().ToString()},
           {"exceptionals", ex},
           {"gram", l.gram()},
           {"canonical", l.CanonicalClass()}};
}

}  // namespace nlohmann
