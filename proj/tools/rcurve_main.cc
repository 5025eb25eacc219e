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

// Command-line front end for the rcurve library.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rcurve/cellsurf.h"
#include "rcurve/enumerate.h"
#include "rcurve/error.h"
#include "rcurve/json_io.h"
#include "rcurve/mmp.h"
#include "rcurve/pairalg.h"
#include "rcurve/piclattice.h"

namespace {

using rcurve::ErrorCode;
using rcurve::Json;

std::string g_format = "json";

void RenderText(const Json& j, const std::string& path, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) RenderText(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (size_t i = 0; i < j.size(); ++i) RenderText(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << (path.empty() ? "value" : path) << ": " << (j.is_string() ? j.get<std::string>() : j.dump())
        << '\n';
  }
}

void Emit(const Json& j) {
  if (g_format == "text") {
    RenderText(j, "", std::cout);
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

std::string ReadInput(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw rcurve::Error(ErrorCode::kParse, "cannot read '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

std::vector<std::string> SplitCsv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

long long ParseInteger(const std::string& s) {
  try {
    size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw rcurve::Error(ErrorCode::kParse, "bad integer '" + s + "'");
}

rcurve::Center ParseCenter(const std::string& s) {
  if (s == "R") return rcurve::RealCenter{false, rcurve::Side::kAny};
  if (s == "R*") return rcurve::RealCenter{true, rcurve::Side::kAny};
  if (s == "C") return rcurve::ConjPairCenter{false};
  if (s == "C*") return rcurve::ConjPairCenter{true};
  throw rcurve::Error(ErrorCode::kParse, "unknown blow-up '" + s + "'");
}

// --class "d:m1,m2" ; base coordinates before ':', exceptional
// multiplicities after it.
struct ClassSpec {
  std::vector<long long> base;
  std::optional<std::vector<long long>> mults;
};

ClassSpec ParseClassSpec(const std::string& text) {
  ClassSpec spec;
  const size_t colon = text.find(':');
  for (const std::string& s : SplitCsv(text.substr(0, colon))) spec.base.push_back(ParseInteger(s));
  if (colon != std::string::npos) {
    spec.mults.emplace();
    for (const std::string& s : SplitCsv(text.substr(colon + 1))) {
      spec.mults->push_back(ParseInteger(s));
    }
  }
  return spec;
}

Json LatticeReport(const std::string& base, const std::string& cls, const std::string& blowups) {
  rcurve::PicLattice lat(rcurve::ParseSurfaceBase(base));
  const ClassSpec spec = ParseClassSpec(cls);
  if (static_cast<int>(spec.base.size()) != lat.rank()) {
    throw rcurve::Error(ErrorCode::kDimensionMismatch,
                        "base class needs " + std::to_string(lat.rank()) + " coordinates");
  }
  rcurve::DivClass c = rcurve::DivClass::Integral(spec.base);
  for (const std::string& b : SplitCsv(blowups)) std::tie(lat, c) = lat.BlowUp(ParseCenter(b), c);
  if (spec.mults) {
    if (static_cast<int>(spec.base.size() + spec.mults->size()) != lat.rank()) {
      throw rcurve::Error(ErrorCode::kDimensionMismatch,
                          "class has " + std::to_string(spec.base.size() + spec.mults->size()) +
                              " coordinates, lattice rank is " + std::to_string(lat.rank()));
    }
    for (size_t i = 0; i < spec.mults->size(); ++i) {
      c.coords[lat.base_rank() + i] = -(*spec.mults)[i];
    }
  }
  return Json{{"lattice", lat},
              {"class", c},
              {"self_intersection", lat.Intersect(c, c)},
              {"canonical_class", lat.CanonicalClass()},
              {"canonical_square", lat.Intersect(lat.CanonicalClass(), lat.CanonicalClass())},
              {"c_dot_k", lat.Intersect(c, lat.CanonicalClass())},
              {"p_a", lat.ArithmeticGenus(c)},
              {"real_topology", lat.RealTopology()}};
}

std::vector<rcurve::Step> ParseSteps(const std::string& csv) {
  std::vector<rcurve::Step> out;
  for (const std::string& s : SplitCsv(csv)) out.push_back(rcurve::ParseStep(s));
  return out;
}

int Fail(ErrorCode code, const std::string& message) {
  std::cerr << Json{{"error", rcurve::ErrorCodeName(code)}, {"message", message}}.dump() << '\n';
  return code == ErrorCode::kParse ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topological types of real rational curves on real rational surfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", g_format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  // pair
  auto* pair = app.add_subcommand("pair", "Pair words and the connected-sum calculus");
  pair->require_subcommand(1);
  std::string word;
  auto* pair_normalize = pair->add_subcommand("normalize", "Normal form of a pair word");
  pair_normalize->add_option("word", word)->required();
  auto* pair_classify = pair->add_subcommand("classify", "Case of the realizability list");
  pair_classify->add_option("word", word)->required();
  auto* pair_table = pair->add_subcommand("verify-table", "Check the connected-sum identities");
  int r_max = 8;
  pair_table->add_option("--rmax", r_max)->capture_default_str();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Explicit cell complexes");
  oracle->require_subcommand(1);
  auto* oracle_realize = oracle->add_subcommand("realize", "Complex realizing a pair word");
  oracle_realize->add_option("word", word)->required();
  std::string input = "-";
  auto* oracle_canonical = oracle->add_subcommand("canonical", "Pair of a complex with a curve");
  oracle_canonical->add_option("file", input, "Complex file, '-' for stdin");
  auto* oracle_invariants = oracle->add_subcommand("invariants", "Euler characteristic etc.");
  oracle_invariants->add_option("file", input, "Complex file, '-' for stdin");
  int g = 1;
  bool resolve = false;
  auto* oracle_equator = oracle->add_subcommand("equator", "Doubled equator with 2g+1 nodes");
  oracle_equator->add_option("--g", g)->capture_default_str();
  oracle_equator->add_flag("--resolve", resolve, "Resolve all nodes");

  // lattice
  auto* lattice = app.add_subcommand("lattice", "Intersection lattice of a blow-up");
  std::string base = "P2", cls = "1", blowups;
  lattice->add_option("--base", base, "P2, Quadric, P1xP1 or Fn")->capture_default_str();
  lattice->add_option("--class", cls, "Base coordinates, then ':' and multiplicities")
      ->capture_default_str();
  lattice->add_option("--blowups", blowups, "Comma list of R, R*, C, C* (star = on-curve)");

  // mmp
  auto* mmp = app.add_subcommand("mmp", "Step calculus");
  mmp->require_subcommand(1);
  std::string end_state, steps;
  bool forward = false;
  auto* simulate = mmp->add_subcommand("simulate", "Inverse steps from an end state");
  simulate->add_option("--end-state", end_state)->required();
  simulate->add_option("--steps", steps, "Comma list of steps");
  simulate->add_flag("--forward", forward, "Also run the forward contractions");
  auto* contract = mmp->add_subcommand("contract", "Contract the curve itself");
  contract->add_option("--end-state", end_state)->required();
  contract->add_option("--steps", steps, "Comma list of steps");

  // table
  auto* table = app.add_subcommand("table", "New topological types per self-intersection");
  int e_min = -2, e_max = 8, bound = 10;
  bool golden = false;
  table->add_option("--emin", e_min)->capture_default_str();
  table->add_option("--emax", e_max)->capture_default_str();
  table->add_option("--bound", bound)->capture_default_str();
  table->add_flag("--golden", golden, "Compare with the built-in table");

  // classify, witness
  auto* classify = app.add_subcommand("classify", "Approximability of a pair");
  classify->add_option("--pair", word)->required();
  auto* witness = app.add_subcommand("witness", "Construction plan for a pair");
  std::string replay;
  witness->add_option("--pair", word);
  witness->add_option("--replay", replay, "Replay a plan from a JSON file");

  // check
  auto* check = app.add_subcommand("check", "Lattice examples");
  check->require_subcommand(1);
  int a = 1, a1 = 0, a2 = 0, d = 6, r = 3;
  std::optional<int> real_nodes;
  bool filter = false;
  auto* dp2 = check->add_subcommand("dp2", "C = -aK on a degree 2 Del Pezzo surface");
  dp2->add_option("--a", a)->capture_default_str();
  auto* p1xp1 = check->add_subcommand("p1xp1", "Parity of p_a on P1xP1");
  p1xp1->add_option("--a1", a1)->required();
  p1xp1->add_option("--a2", a2)->required();
  auto* coble = check->add_subcommand("coble", "Plane curve with its nodes blown up");
  coble->add_option("--d", d)->capture_default_str();
  coble->add_option("--real-nodes", real_nodes);
  auto* minus_two = check->add_subcommand("minus-two", "Solutions of a(ad-4b) = -2");
  minus_two->add_flag("--filter", filter, "Drop reducible solutions");
  auto* tower = check->add_subcommand("tower", "Cycle of curves over an infinitely near tower");
  tower->add_option("--r", r)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*pair_normalize) {
      Emit(rcurve::Normalize(rcurve::ParsePairWord(word)));
    } else if (*pair_classify) {
      Emit(rcurve::ClassifyCase(rcurve::Normalize(rcurve::ParsePairWord(word))));
    } else if (*pair_table) {
      Emit(rcurve::VerifyDiffeoTable(r_max));
    } else if (*oracle_realize) {
      const rcurve::Realized re = rcurve::Realize(rcurve::ParsePairWord(word));
      if (g_format == "text") {
        std::cout << rcurve::FormatComplex(re.surface, &re.curve);
      } else {
        Emit(Json{{"complex", rcurve::FormatComplex(re.surface, &re.curve)},
                  {"pair", rcurve::CanonicalPair(re.surface, re.curve)}});
      }
    } else if (*oracle_canonical) {
      const rcurve::Realized re = rcurve::ParseComplex(ReadInput(input));
      Emit(rcurve::CanonicalPair(re.surface, re.curve));
    } else if (*oracle_invariants) {
      const rcurve::Realized re = rcurve::ParseComplex(ReadInput(input));
      const rcurve::SurfaceInvariants inv = rcurve::Invariants(re.surface);
      Json j{{"vertices", inv.vertices}, {"edges", inv.edges},         {"faces", inv.faces},
             {"euler", inv.euler},       {"orientable", inv.orientable}, {"surface", inv.surface()}};
      if (!re.curve.cycle.empty()) j["crossings"] = rcurve::CrossingCount(re.surface, re.curve);
      Emit(j);
    } else if (*oracle_equator) {
      const rcurve::DoubleEquator de = rcurve::EquatorDoubleCurve(g);
      rcurve::Realized re = de.realized;
      if (resolve) re = rcurve::ResolveAllNodes(re);
      if (g_format == "text") {
        std::cout << rcurve::FormatComplex(re.surface, &re.curve);
      } else {
        Json j{{"g", g},
               {"crossings", de.crossings},
               {"equatorial_regions", de.equatorial_regions},
               {"complex", rcurve::FormatComplex(re.surface, &re.curve)}};
        if (resolve) j["pair"] = rcurve::CanonicalPair(re.surface, re.curve);
        Emit(j);
      }
    } else if (*lattice) {
      Emit(LatticeReport(base, cls, blowups));
    } else if (*simulate) {
      const rcurve::EndStateKind k = rcurve::ParseEndStateKind(end_state);
      const std::vector<rcurve::Step> parsed = ParseSteps(steps);
      Json j{{"inverse", rcurve::SimulateInverse(k, parsed)}};
      if (forward) {
        rcurve::MmpState s = rcurve::MmpState::FromEndState(k);
        for (const rcurve::Step& st : parsed) s = rcurve::ApplyInverseStep(s, st);
        j["forward"] = rcurve::RunForward(s).entries;
      }
      Emit(j);
    } else if (*contract) {
      rcurve::MmpState s = rcurve::MmpState::FromEndState(rcurve::ParseEndStateKind(end_state));
      for (const rcurve::Step& st : ParseSteps(steps)) s = rcurve::ApplyInverseStep(s, st);
      const rcurve::ContractResult res = rcurve::ContractCurve(s);
      std::visit([](const auto& v) { Emit(Json(v)); }, res);
    } else if (*table) {
      const rcurve::TypeTable t = rcurve::TheoremTable(e_min, e_max, bound);
      if (g_format == "text") {
        std::cout << t.ToString();
      } else {
        Emit(t);
      }
      if (golden && t != rcurve::GoldenTable()) {
        return Fail(ErrorCode::kTableMismatch, "table differs from the built-in table:\n" +
                                                   rcurve::GoldenTable().ToString());
      }
    } else if (*classify) {
      Emit(rcurve::ClassifyApproximable(rcurve::Normalize(rcurve::ParsePairWord(word))));
    } else if (*witness) {
      if (!replay.empty()) {
        const auto plan = rcurve::ParseJson<rcurve::ConstructionPlan>(ReadInput(replay));
        const rcurve::TopPair got = rcurve::ReplayPlan(plan);
        Emit(Json{{"target", plan.target}, {"result", got}, {"match", got == plan.target}});
        if (got != plan.target) return 1;
      } else if (!word.empty()) {
        Emit(rcurve::Witness(rcurve::Normalize(rcurve::ParsePairWord(word))));
      } else {
        return Fail(ErrorCode::kParse, "witness needs --pair or --replay");
      }
    } else if (*dp2) {
      Emit(rcurve::Dp2Check(a));
    } else if (*p1xp1) {
      Emit(rcurve::P1xP1ParityCheck(a1, a2));
    } else if (*coble) {
      Emit(rcurve::CobleExample(d, real_nodes));
    } else if (*minus_two) {
      Emit(rcurve::MinusTwoSolutions(filter));
    } else if (*tower) {
      Emit(rcurve::TowerExample(r));
    }
  } catch (const rcurve::Error& e) {
    return Fail(e.code(), e.what());
  } catch (const std::exception& e) {
    return Fail(ErrorCode::kDomain, e.what());
  }
  return 0;
}
