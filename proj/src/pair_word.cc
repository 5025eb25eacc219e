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

#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>

#include "rcurve/error.h"
#include "rcurve/pairalg.h"

namespace rcurve {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void Fail(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::kParse, "cannot parse pair word '" + std::string(text) + "': " + why);
}

}  // namespace

PairWord ParsePairWord(std::string_view text) {
  PairWord w;
  std::vector<std::string_view> terms;
  std::string_view rest = text;
  while (true) {
    const size_t plus = rest.find('+');
    terms.push_back(Trim(rest.substr(0, plus)));
    if (plus == std::string_view::npos) break;
    rest.remove_prefix(plus + 1);
  }
  const std::string_view base = terms.front();
  if (base == "S2L") w.base = BaseToken::kS2L;
  else if (base == "T2L") w.base = BaseToken::kT2L;
  else if (base == "KL") w.base = BaseToken::kKL;
  else if (base == "KF") w.base = BaseToken::kKF;
  else if (base == "RP2L") w.base = BaseToken::kRP2L;
  else if (base == "T2NULL") w.base = BaseToken::kT2Null;
  else Fail(text, "unknown base '" + std::string(base) + "'");

  for (size_t i = 1; i < terms.size(); ++i) {
    std::string_view term = terms[i];
    if (term.empty()) Fail(text, "empty term");
    int count = 1;
    if (const size_t star = term.find('*'); star != std::string_view::npos) {
      const std::string_view num = Trim(term.substr(0, star));
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), count);
      if (ec != std::errc() || ptr != num.data() + num.size() || count < 0) {
        Fail(text, "bad multiplicity '" + std::string(num) + "'");
      }
      term = Trim(term.substr(star + 1));
    }
    Side side = Side::kAny;
    if (term.size() > 2 && term[1] == ':') {
      if (term[0] == 'L') side = Side::kLeft;
      else if (term[0] == 'R') side = Side::kRight;
      else Fail(text, "bad side prefix");
      term = Trim(term.substr(2));
    }
    if (term == "RP2L") {
      if (side != Side::kAny) Fail(text, "side prefix on a pair token");
      w.rp2l_count += count;
      continue;
    }
    ClosedSurface s = ClosedSurface::Sphere();
    try {
      s = ParseClosedSurface(term);
    } catch (const Error&) {
      Fail(text, "unknown token '" + std::string(term) + "'");
    }
    for (int k = 0; k < count; ++k) w.summands.push_back({s, side});
  }
  return w;
}

std::string FormatPairWord(const PairWord& w) {
  std::string out(BaseTokenName(w.base));
  if (w.rp2l_count > 0) {
    out += " + ";
    if (w.rp2l_count > 1) out += std::to_string(w.rp2l_count) + "*";
    out += "RP2L";
  }
  // Runs of identical summands are written with a multiplicity.
  for (size_t i = 0; i < w.summands.size();) {
    size_t j = i;
    while (j < w.summands.size() && w.summands[j] == w.summands[i]) ++j;
    const Summand& s = w.summands[i];
    out += " + ";
    if (j - i > 1) out += std::to_string(j - i) + "*";
    if (s.side != Side::kAny) out += std::string(SideName(s.side)) + ":";
    out += s.surface.ToString();
    i = j;
  }
  return out;
}

ClosedSurface ParseClosedSurface(std::string_view text) {
  auto fail = [&]() -> ClosedSurface {
    throw Error(ErrorCode::kParse, "unknown surface '" + std::string(text) + "'");
  };
  auto number = [&](std::string_view digits) {
    int n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || n < 0) fail();
    return n;
  };
  auto wrapped = [&](std::string_view head) -> std::optional<int> {
    if (text.size() > head.size() + 2 && text.substr(0, head.size()) == head &&
        text[head.size()] == '(' && text.back() == ')') {
      return number(text.substr(head.size() + 1, text.size() - head.size() - 2));
    }
    return std::nullopt;
  };
  if (auto g = wrapped("Or")) return ClosedSurface::Orientable(*g);
  if (auto k = wrapped("NonOr")) {
    if (*k == 0) fail();
    return ClosedSurface::NonOrientable(*k);
  }
  if (text == "S2") return ClosedSurface::Sphere();
  if (text == "K") return ClosedSurface::Klein();
  for (std::string_view unit : {std::string_view("T2"), std::string_view("RP2")}) {
    if (text.size() >= unit.size() && text.substr(text.size() - unit.size()) == unit) {
      const std::string_view count = text.substr(0, text.size() - unit.size());
      const int n = count.empty() ? 1 : number(count);
      if (n == 0) fail();
      return unit == "T2" ? ClosedSurface::Orientable(n) : ClosedSurface::NonOrientable(n);
    }
  }
  return fail();
}

}  // namespace rcurve
