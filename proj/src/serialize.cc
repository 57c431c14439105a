// Copyright 2026 The Authors.
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

#include "chow/serialize.h"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace chow {
namespace {

BigInt ParseBigInt(const nlohmann::json& j) {
  if (!j.is_string()) {
    throw std::invalid_argument("expected a decimal string");
  }
  BigInt value;
  if (value.set_str(j.get<std::string>(), 10) != 0) {
    throw std::invalid_argument("malformed integer: " + j.get<std::string>());
  }
  return value;
}

std::uint64_t ParseCount(const std::string& text) {
  std::size_t used = 0;
  const unsigned long long value = std::stoull(text, &used);
  if (used != text.size()) {
    throw std::invalid_argument("malformed count: " + text);
  }
  return value;
}

int ParseInt(const std::string& text) {
  std::size_t used = 0;
  const int value = std::stoi(text, &used);
  if (used != text.size()) {
    throw std::invalid_argument("malformed integer: " + text);
  }
  return value;
}

}  // namespace

nlohmann::json UniPolyToJson(const UniPoly& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const BigInt& c : p.coeffs()) j.push_back(c.get_str());
  return j;
}

UniPoly UniPolyFromJson(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array");
  std::vector<BigInt> coeffs;
  for (const nlohmann::json& c : j) coeffs.push_back(ParseBigInt(c));
  return UniPoly(std::move(coeffs));
}

nlohmann::json SqfMultiPolyToJson(const SqfMultiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [monomial, c] : p.terms()) {
    std::vector<int> vars;
    for (int i = 0; i <= SqfMultiPoly::kMaxVariable; ++i) {
      if ((monomial >> i) & 1) vars.push_back(i);
    }
    terms.push_back({{"vars", vars}, {"coeff", c.get_str()}});
  }
  return {{"first_var", p.first_var()},
          {"last_var", p.last_var()},
          {"terms", terms}};
}

SqfMultiPoly SqfMultiPolyFromJson(const nlohmann::json& j) {
  try {
    SqfMultiPoly p(j.at("first_var").get<int>(), j.at("last_var").get<int>());
    for (const nlohmann::json& term : j.at("terms")) {
      VarMask monomial = 0;
      for (int v : term.at("vars").get<std::vector<int>>()) {
        if (v < 0 || v > SqfMultiPoly::kMaxVariable) {
          throw std::invalid_argument("variable index out of range");
        }
        monomial |= VarMask{1} << v;
      }
      p.AddTerm(monomial, ParseBigInt(term.at("coeff")));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed polynomial: ") +
                                e.what());
  }
}

nlohmann::json MatroidToJson(const Matroid& m) {
  nlohmann::json bases = nlohmann::json::array();
  for (ElementMask b : m.bases()) bases.push_back(MaskToIndexSet(b).elements());
  return {{"n", m.ground_set_size()}, {"rank", m.rank()}, {"bases", bases}};
}

Matroid MatroidFromJson(const nlohmann::json& j) {
  int n = 0;
  int rank = 0;
  std::vector<std::vector<int>> bases;
  try {
    n = j.at("n").get<int>();
    rank = j.at("rank").get<int>();
    bases = j.at("bases").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed matroid: ") + e.what());
  }
  Matroid m = Matroid::FromBases(n, bases);
  if (m.rank() != rank) {
    throw std::invalid_argument("declared rank " + std::to_string(rank) +
                                " does not match bases of size " +
                                std::to_string(m.rank()));
  }
  return m;
}

std::string CogirthToString(int cogirth) {
  return cogirth == kInfiniteGirth ? "inf" : std::to_string(cogirth);
}

int CogirthFromString(const std::string& text) {
  return text == "inf" ? kInfiniteGirth : ParseInt(text);
}

std::string CensusToCsv(const CensusTable& table) {
  std::ostringstream out;
  out << "rank,loops,cogirth,count\n";
  for (const auto& [key, count] : table.cells) {
    out << key.rank << "," << key.loops << "," << CogirthToString(key.cogirth)
        << "," << count << "\n";
  }
  return out.str();
}

CensusTable CensusFromCsv(int n, const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != "rank,loops,cogirth,count") {
    throw std::invalid_argument("missing census CSV header");
  }
  CensusTable table;
  table.n = n;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream row(line);
    std::string field;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 4) {
      throw std::invalid_argument("census row needs 4 fields: " + line);
    }
    const CensusKey key{ParseInt(fields[0]), ParseInt(fields[1]),
                        CogirthFromString(fields[2])};
    const std::uint64_t count = ParseCount(fields[3]);
    table.cells[key] = count;
    table.total += count;
  }
  return table;
}

nlohmann::json CensusToJson(const CensusTable& table) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& [key, count] : table.cells) {
    cells.push_back({{"rank", std::to_string(key.rank)},
                     {"loops", std::to_string(key.loops)},
                     {"cogirth", CogirthToString(key.cogirth)},
                     {"count", std::to_string(count)}});
  }
  return {{"n", std::to_string(table.n)},
          {"total", std::to_string(table.total)},
          {"cells", cells}};
}

CensusTable CensusFromJson(const nlohmann::json& j) {
  try {
    CensusTable table;
    table.n = ParseInt(j.at("n").get<std::string>());
    table.total = ParseCount(j.at("total").get<std::string>());
    std::uint64_t sum = 0;
    for (const nlohmann::json& cell : j.at("cells")) {
      const CensusKey key{ParseInt(cell.at("rank").get<std::string>()),
                          ParseInt(cell.at("loops").get<std::string>()),
                          CogirthFromString(cell.at("cogirth").get<std::string>())};
      const std::uint64_t count = ParseCount(cell.at("count").get<std::string>());
      table.cells[key] = count;
      sum += count;
    }
    if (sum != table.total) {
      throw std::invalid_argument("census total does not match its cells");
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed census: ") + e.what());
  }
}

}  // namespace chow
