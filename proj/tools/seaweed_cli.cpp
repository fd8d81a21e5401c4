// Copyright 2026 The Seaweed Index Authors
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

// Command-line front end. Exit codes: 0 success or "true", 1 semantic
// negative or verification mismatch, 2 usage, parse or budget error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "seaweed/io.hpp"
#include "seaweed/seaweed.hpp"

namespace {

using namespace seaweed;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

/// Thrown for configuration mistakes detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string top;
  std::string bottom;
  std::vector<std::string> word;
  std::string from;
  Part n_max = 0;
  std::optional<std::uint64_t> t;
  std::optional<int> epsilon;
  std::string kind;
  std::string method = "generated";
  std::string format;
  std::string out;
  std::optional<Part> seaweed_window;
  std::optional<Part> parabolic_window;
  bool budget_override = false;
};

// ---------------------------------------------------------------------------
// Output

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text << std::flush;
  } else {
    write_file_atomically(opt.out, text);
  }
}

std::string require_format(const Options& opt, std::initializer_list<const char*> allowed, const char* fallback) {
  if (opt.format.empty()) return fallback;
  for (const char* f : allowed) {
    if (opt.format == f) return opt.format;
  }
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
  throw UsageError("--format " + opt.format + " is not supported here (expected one of: " + list + ")");
}

// ---------------------------------------------------------------------------
// Kind / epsilon reconciliation, done before any work starts.

TableKind resolve_kind(const Options& opt) {
  if (opt.kind.empty()) {
    if (!opt.epsilon) throw UsageError("one of --kind or --epsilon is required");
    return *opt.epsilon == 0 ? TableKind::parabolic_even : TableKind::parabolic_odd;
  }
  TableKind kind;
  try {
    kind = parse_table_kind(opt.kind);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  if (opt.epsilon) {
    if (kind == TableKind::seaweed) throw UsageError("--epsilon does not apply to --kind seaweed");
    if (*opt.epsilon != epsilon_of(kind)) {
      throw UsageError("--epsilon " + std::to_string(*opt.epsilon) + " contradicts --kind " + opt.kind);
    }
  }
  return kind;
}

Part require_n_max(const Options& opt) {
  if (opt.n_max < 1) throw UsageError("--n-max must be at least 1");
  return opt.n_max;
}

// ---------------------------------------------------------------------------
// Queries on one composition or bicomposition

/// Either a bicomposition (two arguments) or a parabolic composition (one).
struct Subject {
  std::optional<BiComposition> pair;
  std::optional<Composition> single;

  BiComposition as_pair() const { return pair ? *pair : BiComposition(*single, Composition::single(single->sum())); }
};

Subject read_subject(const Options& opt) {
  Subject s;
  Composition top = parse_composition(opt.top);
  if (opt.bottom.empty()) {
    s.single = std::move(top);
  } else {
    s.pair = BiComposition(std::move(top), parse_composition(opt.bottom));
  }
  return s;
}

int cmd_index(const Options& opt) {
  const Subject s = read_subject(opt);
  emit(opt, std::to_string(s.pair ? index_seaweed(*s.pair) : index_parabolic(*s.single)) + "\n");
  return kOk;
}

int cmd_frobenius(const Options& opt) {
  const bool yes = is_frobenius(read_subject(opt).as_pair());
  emit(opt, yes ? "frobenius\n" : "not-frobenius\n");
  return yes ? kOk : kNegative;
}

int cmd_factorize(const Options& opt) {
  const Subject s = read_subject(opt);
  if (s.pair) {
    auto w = factorize(*s.pair);
    emit(opt, w ? to_string(*w) + "\n" : "not-frobenius\n");
    return w ? kOk : kNegative;
  }
  if (s.single->sum() < 2) throw UsageError("compositions of 1 belong to neither parity class");
  auto f = factorize_p(*s.single);
  emit(opt, f ? "epsilon=" + std::to_string(f->epsilon) + " " + to_string(f->word) + "\n" : "not-frobenius\n");
  return f ? kOk : kNegative;
}

/// Inverse of factorize: "T-0 S+0" prints "1,2 3"; "epsilon=1 S~0" prints "1,2".
int cmd_evaluate(const Options& opt) {
  std::vector<std::string> tokens = opt.word;
  std::optional<int> eps;
  if (!tokens.empty() && tokens.front().rfind("epsilon=", 0) == 0) {
    const std::string v = tokens.front().substr(8);
    if (v != "0" && v != "1") throw UsageError("epsilon must be 0 or 1");
    eps = v == "0" ? 0 : 1;
    tokens.erase(tokens.begin());
  }
  if (opt.epsilon) {
    if (eps && *eps != *opt.epsilon) throw UsageError("--epsilon contradicts the word's epsilon= prefix");
    eps = opt.epsilon;
  }
  std::string text;
  for (const auto& t : tokens) text += (text.empty() ? "" : " ") + t;

  // Parabolic letters never carry a sign, seaweed letters always do.
  const bool parabolic = eps || (!opt.from.empty() && opt.from.find('|') == std::string::npos) ||
                         (text.find('+') == std::string::npos && text.find('-') == std::string::npos && text != "id" &&
                          !text.empty());
  if (parabolic) {
    const ParabolicWord w = parse_parabolic_word(text);
    Composition start = opt.from.empty() ? parabolic_seed(eps.value_or(0)) : parse_composition(opt.from);
    if (opt.from.empty() && !eps) throw UsageError("parabolic words need epsilon=<0|1> or --from");
    emit(opt, to_string(evaluate_p(w, start)) + "\n");
    return kOk;
  }
  const SeaweedWord w = parse_seaweed_word(text.empty() ? "id" : text);
  const BiComposition start = opt.from.empty() ? seed_bicomposition() : parse_bicomposition(opt.from);
  const MaybeBiComposition b = evaluate(w, start);
  if (b.is_null()) {
    emit(opt, "o\n");
    return kNegative;
  }
  emit(opt, to_string(b.value().plus()) + " " + to_string(b.value().minus()) + "\n");
  return kOk;
}

int cmd_meander(const Options& opt) {
  const RenderFormat f = require_format(opt, {"ascii", "dot"}, "ascii") == "dot" ? RenderFormat::dot : RenderFormat::ascii;
  emit(opt, render(build_meander(read_subject(opt).as_pair()), f));
  return kOk;
}

// ---------------------------------------------------------------------------
// Streams, tables, fits

int cmd_generate(const Options& opt) {
  const TableKind kind = resolve_kind(opt);
  const Part n_max = require_n_max(opt);
  require_format(opt, {"jsonl"}, "jsonl");
  std::ostringstream os;
  if (kind == TableKind::seaweed) {
    auto sink = [&](const GeneratedSeaweed& g) { os << to_json(g).dump() << '\n'; };
    if (opt.t) {
      generate_deficiency(*opt.t, n_max, sink);
    } else {
      generate_frobenius(n_max, sink);
    }
  } else {
    auto sink = [&](const GeneratedParabolic& g) { os << to_json(g).dump() << '\n'; };
    if (opt.t) {
      generate_deficiency_p(epsilon_of(kind), *opt.t, n_max, sink);
    } else {
      generate_frobenius_p(epsilon_of(kind), n_max, sink);
    }
  }
  emit(opt, os.str());
  return kOk;
}

std::string table_text(const CountTable& t, const std::string& format) {
  std::ostringstream os;
  if (format == "csv") {
    write_csv(os, t);
  } else {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [k, v] : t.entries()) rows.push_back({{"n", k.first}, {"p", k.second}, {"count", v}});
    os << nlohmann::json{{"kind", to_string(t.kind())}, {"method", to_string(t.method())}, {"entries", rows}}.dump(2)
       << '\n';
  }
  return os.str();
}

int cmd_table(const Options& opt) {
  const TableKind kind = resolve_kind(opt);
  const Part n_max = require_n_max(opt);
  const std::string format = require_format(opt, {"csv", "json"}, "csv");
  if (opt.method != "deficiency" && opt.t) throw UsageError("--t only applies to --method deficiency");
  if (opt.method == "deficiency" && !opt.t) throw UsageError("--method deficiency requires --t");
  if (opt.method == "both" && format != "csv") throw UsageError("--method both prints CSV");

  if (opt.method == "brute") {
    emit(opt, table_text(brute_table(kind, n_max, opt.budget_override), format));
  } else if (opt.method == "generated") {
    emit(opt, table_text(generated_table(kind, n_max), format));
  } else if (opt.method == "deficiency") {
    emit(opt, table_text(deficiency_table(kind, *opt.t, n_max), format));
  } else {
    const CountTable brute = brute_table(kind, n_max, opt.budget_override);
    const CountTable generated = generated_table(kind, n_max);
    const bool agree = brute.same_counts(generated);
    emit(opt, table_text(generated, "csv") + (agree ? "AGREE\n" : "DISAGREE\n"));
    return agree ? kOk : kNegative;
  }
  return kOk;
}

int cmd_fit(const Options& opt) {
  const TableKind kind = resolve_kind(opt);
  if (!opt.t) throw UsageError("fit requires --t");
  require_format(opt, {"json"}, "json");
  const Part hi = opt.n_max ? opt.n_max : (kind == TableKind::seaweed ? 40 : 30);
  const auto counts = deficiency_sequence(kind, *opt.t, 1, hi);
  auto fit = fit_polynomial(counts, 1, *opt.t);
  nlohmann::json j;
  if (fit) {
    if (kind != TableKind::seaweed) fit->epsilon = epsilon_of(kind);
    j = to_json(*fit);
    j["polynomial"] = format_polynomial(fit->coefficients);
  } else {
    j = {{"t", *opt.t}, {"status", "unstable"}, {"window", {1, hi}}};
  }
  j["kind"] = to_string(kind);
  emit(opt, j.dump(2) + "\n");
  return fit ? kOk : kNegative;
}

int cmd_verify(const Options& opt) {
  const std::string format = require_format(opt, {"ascii", "json"}, "ascii");
  VerifyOptions vo;
  if (opt.seaweed_window) vo.seaweed_n_max = *opt.seaweed_window;
  if (opt.parabolic_window) vo.parabolic_n_max = *opt.parabolic_window;
  const auto reports = verify_published_polynomials(vo);
  bool all = true;
  std::ostringstream os;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : reports) {
    all = all && r.match();
    std::vector<Rational> want;
    for (long long c : r.expected.coefficients) want.emplace_back(c);
    for (const auto& s : r.series) {
      const std::string got = s.fit ? format_polynomial(s.fit->coefficients) : "unstable";
      if (format == "json") {
        nlohmann::json row = {{"case", r.expected.name},
                              {"kind", to_string(s.kind)},
                              {"t", r.expected.t},
                              {"expected", format_polynomial(want)},
                              {"fitted", got},
                              {"match", s.match}};
        if (s.fit) row["fit"] = to_json(*s.fit);
        rows.push_back(row);
      } else {
        os << r.expected.name << "  " << to_string(s.kind) << "  t=" << r.expected.t << "  expected "
           << format_polynomial(want) << "  fitted " << got;
        if (s.fit) os << "  stable n=" << s.fit->stable_from << ".." << s.fit->window_hi;
        os << "  " << (s.match ? "match" : "MISMATCH") << '\n';
      }
    }
  }
  if (format == "json") {
    os << nlohmann::json{{"cases", rows}, {"all_match", all}}.dump(2) << '\n';
  } else {
    os << (all ? "all 9 cases match\n" : "verification FAILED\n");
  }
  emit(opt, os.str());
  return all ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius seaweed and parabolic subalgebras: index, factorization, counting"};
  app.require_subcommand(1);
  Options opt;

  auto subject = [&](CLI::App* sub) {
    sub->add_option("top", opt.top, "Composition, e.g. 2,3,2")->required();
    sub->add_option("bottom", opt.bottom, "Second composition; omit for the parabolic case (n)");
  };
  auto out = [&](CLI::App* sub) { sub->add_option("--out", opt.out, "Write output to PATH (atomically)"); };
  auto kind = [&](CLI::App* sub) {
    sub->add_option("--kind", opt.kind, "seaweed, parabolic-even or parabolic-odd")
        ->check(CLI::IsMember({"seaweed", "parabolic-even", "parabolic-odd"}));
    sub->add_option("--epsilon", opt.epsilon, "Parity class of parabolic sums")->check(CLI::IsMember({0, 1}));
  };
  auto format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "jsonl", "dot", "ascii"}));
  };

  auto* index = app.add_subcommand("index", "Print the index of a seaweed or parabolic subalgebra");
  subject(index);
  out(index);
  auto* frob = app.add_subcommand("frobenius", "Exit 0 and print frobenius iff the index is zero");
  subject(frob);
  out(frob);
  auto* fact = app.add_subcommand("factorize", "Print the word generating a Frobenius (bi)composition");
  subject(fact);
  out(fact);
  auto* eval = app.add_subcommand("evaluate", "Apply a word (as printed by factorize) to its seed");
  eval->add_option("word", opt.word, "Letters, optionally prefixed by epsilon=<0|1>")->required();
  eval->add_option("--from", opt.from, "Start value instead of the seed (a|b or a)");
  eval->add_option("--epsilon", opt.epsilon, "Parity class for parabolic words")->check(CLI::IsMember({0, 1}));
  out(eval);
  auto* mea = app.add_subcommand("meander", "Render the meander graph");
  subject(mea);
  format(mea);
  out(mea);

  auto* gen = app.add_subcommand("generate", "Stream Frobenius values with their words as JSONL");
  kind(gen);
  gen->add_option("--n-max", opt.n_max, "Largest sum")->required();
  gen->add_option("--t", opt.t, "Deficiency bound (prunes generation)");
  format(gen);
  out(gen);

  auto* tab = app.add_subcommand("table", "Count table indexed by (n, p)");
  kind(tab);
  tab->add_option("--n-max", opt.n_max, "Largest sum")->required();
  tab->add_option("--method", opt.method, "brute, generated, deficiency or both")
      ->check(CLI::IsMember({"brute", "generated", "deficiency", "both"}));
  tab->add_option("--t", opt.t, "Deficiency bound for --method deficiency");
  tab->add_flag("--budget-override", opt.budget_override, "Allow brute force beyond the default limits");
  format(tab);
  out(tab);

  auto* fit = app.add_subcommand("fit", "Fit the eventual polynomial of a deficiency sequence");
  kind(fit);
  fit->add_option("--t", opt.t, "Deficiency")->required();
  fit->add_option("--n-max", opt.n_max, "Window end (n for seaweed, half-sum for parabolic)");
  format(fit);
  out(fit);

  auto* ver = app.add_subcommand("verify", "Check the nine published polynomial identities");
  ver->add_option("--seaweed-n-max", opt.seaweed_window, "Seaweed window end (default 40)");
  ver->add_option("--parabolic-n-max", opt.parabolic_window, "Parabolic window end (default 30)");
  format(ver);
  out(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*index) return cmd_index(opt);
    if (*frob) return cmd_frobenius(opt);
    if (*fact) return cmd_factorize(opt);
    if (*eval) return cmd_evaluate(opt);
    if (*mea) return cmd_meander(opt);
    if (*gen) return cmd_generate(opt);
    if (*tab) return cmd_table(opt);
    if (*fit) return cmd_fit(opt);
    if (*ver) return cmd_verify(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {  // parse and composition errors
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNegative;
  }
  return kUsage;
}
