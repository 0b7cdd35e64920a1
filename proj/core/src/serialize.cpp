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

#include "patprob/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace patprob {

namespace {

Method method_from_string(const std::string& name) {
  for (Method m : {Method::long_recursion, Method::short_recursion,
                   Method::p_recursion, Method::markov, Method::enumeration,
                   Method::automaton}) {
    if (to_string(m) == name) return m;
  }
  throw std::invalid_argument("unknown method '" + name + "'");
}

}  // namespace

nlohmann::json to_json(const ExactProb& value) {
  return {{"num", value.num().str()},
          {"base", value.base()},
          {"den_exp", value.den_exp()},
          {"approx", value.to_double()}};
}

ExactProb exact_prob_from_json(const nlohmann::json& j) {
  try {
    const auto& num = j.at("num").get_ref<const std::string&>();
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("ExactProb JSON: num must be a decimal string");
    }
    return ExactProb::from_parts(BigInt(num), j.at("den_exp").get<std::uint64_t>(),
                                 j.at("base").get<std::uint32_t>());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("ExactProb JSON: ") + e.what());
  }
}

nlohmann::json to_json(const ProbTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t k = 0; k <= table.upto(); ++k) {
    rows.push_back({{"k", k}, {"p", to_json(table.p[k])}, {"P", to_json(table.P[k])}});
  }
  return {{"h", table.h.to_string()},
          {"L", table.alphabet_size},
          {"n", table.pattern_length()},
          {"method", std::string(to_string(table.method))},
          {"rows", std::move(rows)}};
}

ProbTable prob_table_from_json(const nlohmann::json& j) {
  try {
    ProbTable table{BifixIndicator::parse(j.at("h").get<std::string>()),
                    j.at("L").get<std::uint32_t>(),
                    method_from_string(j.at("method").get<std::string>()),
                    {},
                    {}};
    for (const auto& row : j.at("rows")) {
      if (row.at("k").get<std::size_t>() != table.p.size()) {
        throw std::invalid_argument("table JSON: rows must list k = 0, 1, ...");
      }
      table.p.push_back(exact_prob_from_json(row.at("p")));
      table.P.push_back(exact_prob_from_json(row.at("P")));
    }
    if (table.P.empty()) throw std::invalid_argument("table JSON: no rows");
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("table JSON: ") + e.what());
  }
}

std::string to_csv(const ProbTable& table, int digits) {
  std::ostringstream out;
  out << "k,p,P,p_exact,P_exact\n";
  for (std::size_t k = 0; k <= table.upto(); ++k) {
    out << k << ',' << table.p[k].to_decimal(digits) << ','
        << table.P[k].to_decimal(digits) << ',' << table.p[k].to_string() << ','
        << table.P[k].to_string() << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const ChainSpec& spec) {
  return {{"s", std::vector<std::uint32_t>(spec.s.targets().begin(),
                                           spec.s.targets().end())},
          {"L", spec.alphabet_size}};
}

nlohmann::json to_json(const ReachTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t k = 0; k <= table.upto(); ++k) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& value : table.row(k)) row.push_back(to_json(value));
    rows.push_back(std::move(row));
  }
  return {{"spec", to_json(table.spec())}, {"rows", std::move(rows)}};
}

nlohmann::json to_json(const ComparisonReport& report) {
  nlohmann::json per_k = nlohmann::json::array();
  for (const auto& verdict : report.per_k) {
    per_k.push_back({{"k", verdict.k},
                     {"P", to_json(verdict.P)},
                     {"P2", to_json(verdict.P2)},
                     {"relation", std::string(to_string(verdict.relation))},
                     {"conforms", verdict.conforms}});
  }
  return {{"k0", report.k0}, {"violations", report.violations}, {"per_k", std::move(per_k)}};
}

nlohmann::json to_json(const LemmaReport& report) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"lemma", std::string(to_string(v.lemma))},
                          {"k", v.k},
                          {"i", v.i},
                          {"detail", v.detail}});
  }
  return {{"ok", report.ok()},
          {"checked_entries", report.checked_entries},
          {"violations", std::move(violations)}};
}

nlohmann::json to_json(const OccurrenceCounts& counts) {
  nlohmann::json first_at = nlohmann::json::array();
  for (std::size_t j = 1; j < counts.first_at.size(); ++j) {
    first_at.push_back(counts.first_at[j].str());
  }
  return {{"b", counts.pattern.to_string()},
          {"L", counts.pattern.alphabet_size()},
          {"k", counts.k},
          {"contains", counts.contains.str()},
          {"first_at", std::move(first_at)}};
}

nlohmann::json to_json(const McResult& result) {
  nlohmann::json histogram = nlohmann::json::array();
  for (std::size_t j = 1; j < result.wait_histogram.size(); ++j) {
    histogram.push_back(result.wait_histogram[j]);
  }
  return {{"generator", std::string(result.generator)},
          {"seed", result.seed},
          {"trials", result.trials},
          {"k", result.k},
          {"P_hat", result.P_hat},
          {"stderr", result.standard_error},
          {"waits", {{"histogram", std::move(histogram)}, {"censored", result.censored}}},
          {"mean_censored_wait", result.mean_censored_wait},
          {"mean_stderr", result.mean_stderr}};
}

nlohmann::json to_json(const CounterexampleReport& report) {
  nlohmann::json words = nlohmann::json::array();
  for (std::size_t j = 0; j < report.words.size(); ++j) {
    words.push_back({{"b", report.words[j].to_string()},
                     {"h", report.indicators[j].to_string()},
                     {"P", to_json(report.P[j])}});
  }
  return {{"k", report.k},
          {"words", std::move(words)},
          {"indicators_as_expected", report.indicators_as_expected},
          {"indicator_sums_equal", report.indicator_sums_equal},
          {"P1_plus_P4", to_json(report.left_sum)},
          {"P2_plus_P3", to_json(report.right_sum)},
          {"probability_sums_differ", report.probability_sums_differ},
          {"reproduced", report.reproduced()}};
}

}  // namespace patprob
