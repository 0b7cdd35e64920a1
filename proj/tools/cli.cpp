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

#include "cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "patprob/markov.hpp"
#include "patprob/oracle.hpp"
#include "patprob/patterns.hpp"
#include "patprob/recursions.hpp"
#include "patprob/serialize.hpp"
#include "patprob/version.hpp"

namespace patprob::cli {

namespace {

using nlohmann::json;

// Bad arguments discovered after parsing; reported with exit code 2.
class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { json, csv, table };

const std::map<std::string, Format> kFormats = {
    {"json", Format::json}, {"csv", Format::csv}, {"table", Format::table}};

const std::map<std::string, Method> kMethods = {
    {"long", Method::long_recursion}, {"short", Method::short_recursion},
    {"P", Method::p_recursion},       {"markov", Method::markov},
    {"automaton", Method::automaton}, {"enumeration", Method::enumeration}};

void emit(std::ostream& out, const std::string& command, json params, json result) {
  const json envelope = {{"command", command},
                         {"params", std::move(params)},
                         {"result", std::move(result)},
                         {"version", kVersion}};
  out << envelope.dump(2) << '\n';
}

std::string sword_list(const SWord& s) { return "(" + s.to_string() + ")"; }

std::size_t default_K(std::size_t n, const std::optional<std::size_t>& K) {
  return K.value_or(3 * n);
}

// ---------------------------------------------------------------- bifix

struct BifixArgs {
  std::string word;
  std::uint32_t L = 2;
  Format format = Format::json;
};

int cmd_bifix(const BifixArgs& a, std::ostream& out) {
  const Word b = Word::parse(a.word, a.L);
  const BifixIndicator h = bifix_indicator(b);
  const SWord s = s_from_h(h);
  const BigInt wait = expected_wait_closed(h, a.L);
  if (a.format == Format::json) {
    emit(out, "bifix", {{"word", b.to_string()}, {"L", a.L}},
         {{"h", h.to_string()},
          {"n", b.size()},
          {"s", std::vector<std::uint32_t>(s.targets().begin(), s.targets().end())},
          {"expected_wait", wait.str()}});
  } else if (a.format == Format::csv) {
    out << "word,L,h,s,expected_wait\n"
        << b.to_string() << ',' << a.L << ',' << h.to_string() << ",\""
        << s.to_string() << "\"," << wait << '\n';
  } else {
    out << "h=" << h.to_string() << "\ns=" << sword_list(s) << "\nE=" << wait << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- prob

struct ProbArgs {
  std::optional<std::string> h;
  std::optional<std::string> word;
  std::uint32_t L = 2;
  std::optional<std::size_t> K;
  std::string method = "short";
  bool check_all = false;
  Format format = Format::json;
  int digits = 12;
};

ProbTable table_for(Method method, const BifixIndicator& h, const std::optional<Word>& b,
                    std::uint32_t L, std::size_t K, const Environment& env) {
  switch (method) {
    case Method::long_recursion:
      return p_table_long(h, L, K);
    case Method::short_recursion:
      return p_table_short(h, L, K);
    case Method::p_recursion:
      return P_table(h, L, K);
    case Method::markov:
      return chain_prob_table(h, L, K);
    case Method::automaton:
      return automaton_prob_table(*b, K);
    case Method::enumeration: {
      const OccurrenceCounts counts = enum_counts(*b, K, env.enum_budget);
      std::vector<ExactProb> p;
      for (std::size_t j = 0; j <= K; ++j) p.push_back(counts.p(j));
      return ProbTable::from_p(h, L, Method::enumeration, std::move(p));
    }
  }
  throw std::logic_error("unhandled method");
}

void write_table_text(std::ostream& out, const ProbTable& t, int digits) {
  out << "h=" << t.h.to_string() << " L=" << t.alphabet_size
      << " method=" << to_string(t.method) << '\n';
  const int width = digits + 4;
  out << std::setw(4) << "k" << "  " << std::setw(width) << "p" << "  "
      << std::setw(width) << "P" << "  P (exact)\n";
  for (std::size_t k = 0; k <= t.upto(); ++k) {
    out << std::setw(4) << k << "  " << std::setw(width) << t.p[k].to_decimal(digits)
        << "  " << std::setw(width) << t.P[k].to_decimal(digits) << "  "
        << t.P[k].to_string() << '\n';
  }
}

int cmd_prob(const ProbArgs& a, std::ostream& out, std::ostream& err,
             const Environment& env) {
  if (a.h.has_value() == a.word.has_value()) {
    throw UsageError("prob: give exactly one of --h and --word");
  }
  const Method method = kMethods.at(a.method);
  std::optional<Word> b;
  if (a.word) b = Word::parse(*a.word, a.L);
  const BifixIndicator h = b ? bifix_indicator(*b) : BifixIndicator::parse(*a.h);
  if (!b && (method == Method::automaton || method == Method::enumeration)) {
    throw UsageError("prob: method '" + a.method + "' needs --word");
  }
  const std::size_t K = default_K(h.pattern_length(), a.K);
  const ProbTable table = table_for(method, h, b, a.L, K, env);

  json params = {{"L", a.L}, {"K", K}, {"method", a.method}, {"check_all", a.check_all}};
  if (b) params["word"] = b->to_string();
  params["h"] = h.to_string();

  json agreement;
  bool all_equal = true;
  if (a.check_all) {
    std::vector<Method> methods = {Method::long_recursion, Method::short_recursion,
                                   Method::p_recursion, Method::markov};
    if (b) {
      methods.push_back(Method::automaton);
      if (checked_word_count(a.L, K) <= env.enum_budget) {
        methods.push_back(Method::enumeration);
      } else {
        err << "prob: skipping enumeration, " << a.L << "^" << K
            << " words exceed the enumeration budget\n";
      }
    }
    json checked = json::array();
    for (Method m : methods) {
      const bool equal = same_values(table_for(m, h, b, a.L, K, env), table);
      checked.push_back({{"method", std::string(to_string(m))}, {"equal", equal}});
      all_equal &= equal;
    }
    agreement = {{"all_equal", all_equal}, {"methods", std::move(checked)}};
    if (!all_equal) err << "prob: methods disagree\n";
  }

  switch (a.format) {
    case Format::json: {
      json result = to_json(table);
      if (a.check_all) result["agreement"] = agreement;
      emit(out, "prob", std::move(params), std::move(result));
      break;
    }
    case Format::csv:
      out << to_csv(table, a.digits);
      break;
    case Format::table:
      write_table_text(out, table, a.digits);
      if (a.check_all) out << (all_equal ? "all methods agree\n" : "METHODS DISAGREE\n");
      break;
  }
  return all_equal ? kOk : kVerifiedFailure;
}

// ---------------------------------------------------------------- compare

struct CompareArgs {
  std::optional<std::string> h;
  std::optional<std::string> h2;
  std::optional<std::string> s;
  std::optional<std::string> s2;
  std::uint32_t L = 2;
  std::optional<std::size_t> K;
  Format format = Format::json;
};

void write_comparison_text(std::ostream& out, const ComparisonReport& r) {
  out << "k0=" << r.k0 << '\n';
  for (const auto& v : r.per_k) {
    out << std::setw(4) << v.k << "  " << std::setw(14) << v.P.to_decimal(10) << "  "
        << std::setw(14) << v.P2.to_decimal(10) << "  " << to_string(v.relation)
        << (v.conforms ? "" : "  VIOLATION") << '\n';
  }
  out << (r.ok() ? "all verdicts conform\n" : "violations found\n");
}

int cmd_compare(const CompareArgs& a, std::ostream& out, std::ostream& err) {
  const bool by_h = a.h || a.h2;
  const bool by_s = a.s || a.s2;
  if (by_h == by_s || (by_h && !(a.h && a.h2)) || (by_s && !(a.s && a.s2))) {
    throw UsageError("compare: give either --h and --h2, or --s and --s2");
  }

  if (by_h) {
    BifixIndicator h = BifixIndicator::parse(*a.h);
    BifixIndicator h2 = BifixIndicator::parse(*a.h2);
    if (h.pattern_length() != h2.pattern_length()) {
      throw UsageError("compare: indicators have different lengths");
    }
    const Order order = compare(h, h2);
    if (order == Order::greater) std::swap(h, h2);
    if (order == Order::equal || order == Order::incomparable) {
      err << "compare: indicators " << *a.h << " and " << *a.h2 << " are "
          << to_string(order) << "; they must be strictly ordered\n";
      if (a.format == Format::json) {
        emit(out, "compare", {{"h", *a.h}, {"h2", *a.h2}, {"L", a.L}},
             {{"order", std::string(to_string(order))}});
      } else {
        out << to_string(order) << '\n';
      }
      return kIncomparable;
    }
    const std::size_t K = default_K(h.pattern_length(), a.K);
    // Smaller indicator, larger probabilities.
    const ProbTable upper = P_table(h, a.L, K);
    const ProbTable lower = P_table(h2, a.L, K);
    const ComparisonReport stated = compare_sequences(upper.P, lower.P, k0_of_pair(h, h2));
    const ComparisonReport chain =
        compare_sequences(upper.P, lower.P, chain_threshold(h, h2));
    if (a.format == Format::json) {
      json result = to_json(stated);
      result["order"] = "less";
      result["swapped"] = order == Order::greater;
      result["k0_chain"] = chain.k0;
      result["chain_violations"] = chain.violations;
      emit(out, "compare",
           {{"h", h.to_string()}, {"h2", h2.to_string()}, {"L", a.L}, {"K", K}},
           std::move(result));
    } else {
      write_comparison_text(out, stated);
      out << "k0_chain=" << chain.k0 << ' '
          << (chain.ok() ? "(conforms)" : "(violations)") << '\n';
    }
    if (!stated.ok()) {
      err << "compare: " << stated.violations.size()
          << " k values do not conform to k0=" << stated.k0
          << "; the probabilities separate at k0_chain=" << chain.k0 << '\n';
    }
    return stated.ok() ? kOk : kVerifiedFailure;
  }

  SWord s = SWord::parse(*a.s);
  SWord s2 = SWord::parse(*a.s2);
  if (s.size() != s2.size()) throw UsageError("compare: s-words have different lengths");
  const Order order = compare(s, s2);
  if (order == Order::less) std::swap(s, s2);
  if (order == Order::equal || order == Order::incomparable) {
    err << "compare: s-words " << *a.s << " and " << *a.s2 << " are " << to_string(order)
        << "; they must be strictly ordered\n";
    if (a.format == Format::json) {
      emit(out, "compare", {{"s", *a.s}, {"s2", *a.s2}, {"L", a.L}},
           {{"order", std::string(to_string(order))}});
    } else {
      out << to_string(order) << '\n';
    }
    return kIncomparable;
  }
  const std::size_t K = default_K(s.size(), a.K);
  const ComparisonReport report = compare_chains(s, s2, a.L, K);
  if (a.format == Format::json) {
    json result = to_json(report);
    result["order"] = "greater";
    result["swapped"] = order == Order::less;
    emit(out, "compare",
         {{"s", s.to_string()}, {"s2", s2.to_string()}, {"L", a.L}, {"K", K}},
         std::move(result));
  } else {
    write_comparison_text(out, report);
  }
  return report.ok() ? kOk : kVerifiedFailure;
}

// ---------------------------------------------------------------- census

struct CensusArgs {
  std::size_t n = 0;
  std::uint32_t L = 2;
  std::size_t reps = 4;
  Format format = Format::json;
};

int cmd_census(const CensusArgs& a, std::ostream& out, const Environment& env) {
  const Census classes =
      census(a.n, a.L, {.budget = env.enum_budget, .max_representatives = a.reps});
  if (a.format == Format::json) {
    json list = json::array();
    for (const auto& [h, cls] : classes) {
      json reps = json::array();
      for (const auto& w : cls.representatives) reps.push_back(w.to_string());
      list.push_back({{"h", h.to_string()},
                      {"count", cls.count},
                      {"representatives", std::move(reps)}});
    }
    emit(out, "census", {{"n", a.n}, {"L", a.L}, {"reps", a.reps}},
         {{"class_count", classes.size()}, {"classes", std::move(list)}});
  } else {
    if (a.format == Format::csv) out << "h,count,representatives\n";
    for (const auto& [h, cls] : classes) {
      std::string reps;
      for (const auto& w : cls.representatives) {
        if (!reps.empty()) reps += ' ';
        reps += w.to_string();
      }
      if (a.format == Format::csv) {
        out << h.to_string() << ',' << cls.count << ",\"" << reps << "\"\n";
      } else {
        out << h.to_string() << "  " << std::setw(10) << cls.count << "  " << reps << '\n';
      }
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- counterexample

int cmd_counterexample(Format format, std::ostream& out) {
  const CounterexampleReport report = counterexample_check();
  if (format == Format::json) {
    emit(out, "counterexample", json::object(), to_json(report));
  } else {
    for (std::size_t j = 0; j < report.words.size(); ++j) {
      out << "b" << j + 1 << "=" << report.words[j].to_string()
          << "  h=" << report.indicators[j].to_string()
          << "  P_12=" << report.P[j].to_string() << '\n';
    }
    out << "P1+P4=" << report.left_sum.to_string()
        << "  P2+P3=" << report.right_sum.to_string() << '\n'
        << (report.reproduced() ? "reproduced\n" : "NOT reproduced\n");
  }
  return report.reproduced() ? kOk : kVerifiedFailure;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string word;
  std::uint32_t L = 2;
  std::uint64_t trials = 100000;
  std::size_t k = 20;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 0;
  Format format = Format::json;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  if (a.trials == 0) throw UsageError("simulate: --trials must be at least 1");
  const Word b = Word::parse(a.word, a.L);
  const McResult r =
      monte_carlo(b, {.trials = a.trials, .k = a.k, .seed = a.seed, .workers = a.workers});
  if (a.format == Format::json) {
    emit(out, "simulate",
         {{"word", b.to_string()}, {"L", a.L}, {"trials", a.trials}, {"k", a.k},
          {"seed", a.seed}},
         to_json(r));
  } else {
    if (a.format == Format::table) {
      out << "generator=" << r.generator << " seed=" << r.seed << '\n';
    }
    out << "k,P_hat,stderr\n";
    for (std::size_t j = 0; j <= r.k; ++j) {
      out << j << ',' << r.P_hat[j] << ',' << r.standard_error[j] << '\n';
    }
    if (a.format == Format::table) {
      out << "mean_censored_wait=" << r.mean_censored_wait << " +- " << r.mean_stderr
          << '\n';
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- lemmas

struct LemmasArgs {
  std::string s;
  std::uint32_t L = 2;
  std::optional<std::size_t> K;
  Format format = Format::json;
};

int cmd_lemmas(const LemmasArgs& a, std::ostream& out) {
  const SWord s = SWord::parse(a.s);
  const std::size_t K = default_K(s.size(), a.K);
  if (K < s.size()) throw UsageError("lemmas: --K must be at least n");
  const LemmaReport report = check_lemmas(ChainSpec(s, a.L), K);
  if (a.format == Format::json) {
    emit(out, "lemmas", {{"s", s.to_string()}, {"L", a.L}, {"K", K}}, to_json(report));
  } else {
    out << "checked " << report.checked_entries << " entries, "
        << report.violations.size() << " violations\n";
    for (const auto& v : report.violations) {
      out << to_string(v.lemma) << " k=" << v.k << " i=" << v.i << ": " << v.detail << '\n';
    }
  }
  return report.ok() ? kOk : kVerifiedFailure;
}

template <typename T>
void add_format(CLI::App* cmd, T& format) {
  cmd->add_option("--format", format, "Output format: json, csv or table")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

}  // namespace

Environment Environment::from_process() {
  Environment env{kDefaultEnumBudget};
  if (const char* text = std::getenv("PATPROB_ENUM_BUDGET")) {
    try {
      std::size_t used = 0;
      const unsigned long long value = std::stoull(text, &used);
      if (used == std::string(text).size()) env.enum_budget = value;
    } catch (const std::exception&) {
      // Keep the default; a malformed variable is reported nowhere else.
    }
  }
  return env;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env) {
  CLI::App app{"Exact probabilities of finding a fixed pattern in random words",
               "patprob"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  BifixArgs bifix;
  auto* bifix_cmd = app.add_subcommand(
      "bifix", "Bifix indicator, jump word and expected waiting time of a word");
  bifix_cmd->add_option("--word", bifix.word, "Pattern, e.g. 10011 or 0,1,12")->required();
  bifix_cmd->add_option("--L", bifix.L, "Alphabet size")->check(CLI::Range(2U, 1U << 16));
  add_format(bifix_cmd, bifix.format);

  ProbArgs prob;
  auto* prob_cmd = app.add_subcommand("prob", "Table of p_k and P_k");
  prob_cmd->add_option("--h", prob.h, "Bifix indicator bits h_1...h_{n-1}");
  prob_cmd->add_option("--word", prob.word, "Pattern word");
  prob_cmd->add_option("--L", prob.L, "Alphabet size")->check(CLI::Range(2U, 1U << 16));
  prob_cmd->add_option("--K", prob.K, "Largest k (default 3n)");
  prob_cmd->add_option("--method", prob.method,
                       "long | short | P | markov | automaton | enumeration")
      ->check(CLI::IsMember({"long", "short", "P", "markov", "automaton", "enumeration"}));
  prob_cmd->add_flag("--check-all", prob.check_all,
                     "Run every applicable method and require exact agreement");
  prob_cmd->add_option("--digits", prob.digits, "Decimal places for csv/table")
      ->check(CLI::Range(1, 200));
  add_format(prob_cmd, prob.format);

  CompareArgs cmp;
  auto* compare_cmd = app.add_subcommand(
      "compare", "Compare two indicator classes or two jump-word chains");
  compare_cmd->add_option("--h", cmp.h, "First bifix indicator");
  compare_cmd->add_option("--h2", cmp.h2, "Second bifix indicator");
  compare_cmd->add_option("--s", cmp.s, "First jump word, e.g. 0,1,2");
  compare_cmd->add_option("--s2", cmp.s2, "Second jump word");
  compare_cmd->add_option("--L", cmp.L, "Alphabet size")->check(CLI::Range(2U, 1U << 16));
  compare_cmd->add_option("--K", cmp.K, "Largest k (default 3n)");
  add_format(compare_cmd, cmp.format);

  CensusArgs cen;
  auto* census_cmd = app.add_subcommand("census", "Partition all words by bifix indicator");
  census_cmd->add_option("--n", cen.n, "Word length")->required()->check(CLI::Range(2, 64));
  census_cmd->add_option("--L", cen.L, "Alphabet size")->check(CLI::Range(2U, 1U << 16));
  census_cmd->add_option("--reps", cen.reps, "Representatives kept per class");
  add_format(census_cmd, cen.format);

  Format counterexample_format = Format::json;
  auto* counterexample_cmd = app.add_subcommand(
      "counterexample", "Check that P_12 is not additive over indicator sums");
  add_format(counterexample_cmd, counterexample_format);

  SimulateArgs sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Seeded Monte Carlo estimate of P_k");
  simulate_cmd->add_option("--word", sim.word, "Pattern word")->required();
  simulate_cmd->add_option("--L", sim.L, "Alphabet size")->check(CLI::Range(2U, 1U << 16));
  simulate_cmd->add_option("--trials", sim.trials, "Number of simulated streams");
  simulate_cmd->add_option("--k", sim.k, "Horizon (stream length)");
  simulate_cmd->add_option("--seed", sim.seed, "Seed");
  simulate_cmd->add_option("--workers", sim.workers, "Threads (0 = all cores)");
  add_format(simulate_cmd, sim.format);

  LemmasArgs lem;
  auto* lemmas_cmd = app.add_subcommand("lemmas", "Check the reachability lemmas on X(s)");
  lemmas_cmd->add_option("--s", lem.s, "Jump word, e.g. 0,1,1")->required();
  lemmas_cmd->add_option("--L", lem.L, "Alphabet size")->check(CLI::Range(2U, 1U << 16));
  lemmas_cmd->add_option("--K", lem.K, "Largest k (default 3n)");
  add_format(lemmas_cmd, lem.format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "patprob: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*bifix_cmd) return cmd_bifix(bifix, out);
    if (*prob_cmd) return cmd_prob(prob, out, err, env);
    if (*compare_cmd) return cmd_compare(cmp, out, err);
    if (*census_cmd) return cmd_census(cen, out, env);
    if (*counterexample_cmd) return cmd_counterexample(counterexample_format, out);
    if (*simulate_cmd) return cmd_simulate(sim, out);
    if (*lemmas_cmd) return cmd_lemmas(lem, out);
  } catch (const UsageError& e) {
    err << "patprob: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "patprob: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "patprob: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace patprob::cli
