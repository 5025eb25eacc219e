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

#ifndef RCURVE_JSON_IO_H_
#define RCURVE_JSON_IO_H_

#include <string_view>

#include "json.hpp"
#include "rcurve/error.h"
#include "rcurve/enumerate.h"
#include "rcurve/mmp.h"
#include "rcurve/pairalg.h"
#include "rcurve/piclattice.h"

namespace rcurve {

using Json = nlohmann::json;

// from_json throws kParse on malformed input.
void to_json(Json& j, const PairWord& w);
void from_json(const Json& j, PairWord& w);
void to_json(Json& j, const CaseLabel& c);
void from_json(const Json& j, CaseLabel& out);

void to_json(Json& j, const DivClass& c);
void from_json(const Json& j, DivClass& c);
void to_json(Json& j, const CobleResult& r);
void from_json(const Json& j, CobleResult& out);
void to_json(Json& j, const TowerResult& r);
void from_json(const Json& j, TowerResult& out);
void to_json(Json& j, const P1xP1Parity& r);
void from_json(const Json& j, P1xP1Parity& out);
void to_json(Json& j, const Dp2Result& r);
void from_json(const Json& j, Dp2Result& out);
void to_json(Json& j, const MinusTwoSolution& s);
void from_json(const Json& j, MinusTwoSolution& s);

void to_json(Json& j, const Step& s);
void from_json(const Json& j, Step& s);
void to_json(Json& j, const EndStateKind& k);
void from_json(const Json& j, EndStateKind& k);
void to_json(Json& j, const TraceEntry& e);
void from_json(const Json& j, TraceEntry& e);
void to_json(Json& j, const MinusTwoReport& r);
void from_json(const Json& j, MinusTwoReport& out);
void to_json(Json& j, const ContractedSurface& c);
void from_json(const Json& j, ContractedSurface& out);

void to_json(Json& j, const ParamFamily& f);
void from_json(const Json& j, ParamFamily& f);
void to_json(Json& j, const TableRow& r);
void from_json(const Json& j, TableRow& r);
void to_json(Json& j, const TypeTable& t);
void from_json(const Json& j, TypeTable& t);
void to_json(Json& j, const ConstructionPlan& p);
void from_json(const Json& j, ConstructionPlan& p);
void to_json(Json& j, const Verdict& v);
void from_json(const Json& j, Verdict& out);

void to_json(Json& j, const IdentityCheck& c);
void from_json(const Json& j, IdentityCheck& out);
void to_json(Json& j, const Discrepancy& d);
void from_json(const Json& j, Discrepancy& out);
void to_json(Json& j, const DiffeoTableReport& r);
void from_json(const Json& j, DiffeoTableReport& out);

// Parses text and converts; JSON syntax and shape errors become kParse.
template <typename T>
T ParseJson(std::string_view text) {
  try {
    return Json::parse(text).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

}  // namespace rcurve

// Types outside this namespace or without a default constructor.
namespace nlohmann {
template <>
struct adl_serializer<rcurve::Rational> {
  static rcurve::Rational from_json(const json& j);
  static void to_json(json& j, const rcurve::Rational& q);
};
template <>
struct adl_serializer<rcurve::ClosedSurface> {
  static rcurve::ClosedSurface from_json(const json& j);
  static void to_json(json& j, const rcurve::ClosedSurface& s);
};
template <>
struct adl_serializer<rcurve::TopPair> {
  static rcurve::TopPair from_json(const json& j);
  static void to_json(json& j, const rcurve::TopPair& p);
};
template <>
struct adl_serializer<rcurve::PicLattice> {
  static rcurve::PicLattice from_json(const json& j);
  static void to_json(json& j, const rcurve::PicLattice& l);
};
}  // namespace nlohmann

#endif  // RCURVE_JSON_IO_H_
