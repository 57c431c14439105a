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

// Machine-readable forms. Every number that can outgrow 64 bits is written
// as a decimal string.
//
//   UniPoly       ["1", "11", "1"]  (coefficient of x^i at index i)
//   SqfMultiPoly  {"first_var": 1, "last_var": 2,
//                  "terms": [{"vars": [1, 2], "coeff": "1"}, ...]}
//   Matroid       {"n": 3, "rank": 2, "bases": [[1, 2], [1, 3], [2, 3]]}
//   CensusTable   CSV "rank,loops,cogirth,count" with cogirth "inf" for the
//                 rank-0 matroid, rows sorted by (rank, loops, cogirth); the
//                 JSON mirror holds the same rows as string-valued objects.

#ifndef CHOW_SERIALIZE_H_
#define CHOW_SERIALIZE_H_

#include <string>

#include "json.hpp"

#include "chow/matroid.h"
#include "chow/poly.h"
#include "chow/schubert.h"

namespace chow {

nlohmann::json UniPolyToJson(const UniPoly& p);
// Throws std::invalid_argument on malformed input.
UniPoly UniPolyFromJson(const nlohmann::json& j);

nlohmann::json SqfMultiPolyToJson(const SqfMultiPoly& p);
SqfMultiPoly SqfMultiPolyFromJson(const nlohmann::json& j);

nlohmann::json MatroidToJson(const Matroid& m);
// Validates like Matroid::FromBases, and checks the declared rank.
Matroid MatroidFromJson(const nlohmann::json& j);

std::string CogirthToString(int cogirth);
// Accepts "inf" or a decimal integer.
int CogirthFromString(const std::string& text);

std::string CensusToCsv(const CensusTable& table);
CensusTable CensusFromCsv(int n, const std::string& csv);
nlohmann::json CensusToJson(const CensusTable& table);
CensusTable CensusFromJson(const nlohmann::json& j);

}  // namespace chow

#endif  // CHOW_SERIALIZE_H_
