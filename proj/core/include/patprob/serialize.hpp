// Copyright 2026 The patprob Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON and CSV forms of the library's values.
//
// Big integers are always written as decimal strings. Indicator bits and
// word positions use 1-based numbering in every serialized form.

#ifndef PATPROB_SERIALIZE_HPP_
#define PATPROB_SERIALIZE_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "patprob/markov.hpp"
#include "patprob/numerics.hpp"
#include "patprob/oracle.hpp"
#include "patprob/patterns.hpp"
#include "patprob/recursions.hpp"

namespace patprob {

// {"num": "<decimal>", "base": L, "den_exp": e, "approx": <double>}
nlohmann::json to_json(const ExactProb& value);
// Inverse of to_json; "approx" is ignored. Throws std::invalid_argument on
// malformed input.
ExactProb exact_prob_from_json(const nlohmann::json& j);

// {"h": "<bits>", "L": L, "n": n, "method": "...",
//  "rows": [{"k": k, "p": ExactProb, "P": ExactProb}, ...]}
nlohmann::json to_json(const ProbTable& table);
ProbTable prob_table_from_json(const nlohmann::json& j);

// Header "k,p,P,p_exact,P_exact"; decimals rounded to `digits` places and
// exact values in num/L^e form.
std::string to_csv(const ProbTable& table, int digits);

// {"s": [...], "L": L}
nlohmann::json to_json(const ChainSpec& spec);
// {"spec": ChainSpec, "rows": [[P_k(0), ..., P_k(n)], ...]}
nlohmann::json to_json(const ReachTable& table);
// {"k0": k0, "violations": [k, ...], "per_k": [...]}
nlohmann::json to_json(const ComparisonReport& report);
// {"ok": bool, "checked_entries": N, "violations": [...]}
nlohmann::json to_json(const LemmaReport& report);

// {"b": "...", "L": L, "k": k, "contains": "<int>", "first_at": ["<int>", ...]}
// first_at lists positions 1 ... k.
nlohmann::json to_json(const OccurrenceCounts& counts);
nlohmann::json to_json(const McResult& result);
nlohmann::json to_json(const CounterexampleReport& report);

}  // namespace patprob

#endif  // PATPROB_SERIALIZE_HPP_
