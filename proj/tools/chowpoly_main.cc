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

// chowpoly: Chow polynomials of uniform matroids, their brute-force
// oracles, and the Schubert matroid census.
//
// Exit status: 0 on success, 1 when a requested comparison or verification
// fails, 2 on invalid input or a resource guard.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chow/chow_forms.h"
#include "chow/combinat.h"
#include "chow/flat_lattice.h"
#include "chow/matroid.h"
#include "chow/poly.h"
#include "chow/schubert.h"
#include "chow/serialize.h"

namespace chow {
namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

using nlohmann::json;

// CHOW_MAX_N raises the oracle and census guard.
int GuardLimit() {
  if (const char* env = std::getenv("CHOW_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("CHOW_MAX_N is not an integer");
    }
  }
  return kDefaultCensusMaxN;
}

ChowKind KindOf(bool augmented) {
  return augmented ? ChowKind::kAugmented : ChowKind::kChow;
}

std::string KindName(ChowKind kind) {
  return kind == ChowKind::kChow ? "chow" : "augmented";
}

// First index where the coefficients differ, if any.
std::optional<int> FirstDifference(const UniPoly& a, const UniPoly& b) {
  const int top = std::max(a.degree(), b.degree());
  for (int i = 0; i <= top; ++i) {
    if (a.Coefficient(i) != b.Coefficient(i)) return i;
  }
  return std::nullopt;
}

struct ComputeArgs {
  int k = 0;
  int n = 0;
  std::string method = "all";
  bool augmented = false;
  bool multivariate = false;
  std::string format = "text";
};

int RunCompute(const ComputeArgs& args) {
  const ChowKind kind = KindOf(args.augmented);
  CheckUniformParameters(args.k, args.n, kind);
  std::vector<FormMethod> methods;
  if (args.method == "all") {
    methods.assign(std::begin(kAllFormMethods), std::end(kAllFormMethods));
  } else {
    methods.push_back(ParseFormMethod(args.method));
  }

  std::vector<std::pair<std::string, UniPoly>> results;
  for (FormMethod method : methods) {
    results.emplace_back(std::string(FormMethodName(method)),
                         ClosedForm(args.k, args.n, method, kind));
  }
  std::vector<std::pair<std::string, SqfMultiPoly>> multivariate;
  if (args.multivariate) {
    for (MultivariateBasis basis : kAllMultivariateBases) {
      multivariate.emplace_back(
          std::string(MultivariateBasisName(basis)),
          MultivariateClosedForm(args.k, args.n, basis, kind));
    }
  }

  bool agree = true;
  for (const auto& [name, p] : results) agree &= p == results.front().second;
  for (const auto& [name, p] : multivariate) {
    agree &= p == multivariate.front().second;
    agree &= p.Specialize() == results.front().second;
  }
  const bool comparing = results.size() + multivariate.size() > 1;

  if (args.format == "json") {
    json out = {{"k", args.k}, {"n", args.n}, {"kind", KindName(kind)}};
    for (const auto& [name, p] : results) out["methods"][name] = UniPolyToJson(p);
    for (const auto& [name, p] : multivariate) {
      out["multivariate"][name] = SqfMultiPolyToJson(p);
    }
    if (comparing) out["agree"] = agree;
    std::cout << out.dump(2) << "\n";
  } else if (args.format == "csv") {
    std::cout << "form,power,coefficient\n";
    for (const auto& [name, p] : results) {
      for (int i = 0; i <= p.degree(); ++i) {
        std::cout << name << "," << i << "," << p.Coefficient(i).get_str()
                  << "\n";
      }
    }
  } else {
    if (!comparing) {
      std::cout << results.front().second.ToString() << "\n";
    } else {
      for (const auto& [name, p] : results) {
        std::cout << name << ": " << p.ToString() << "\n";
      }
      for (const auto& [name, p] : multivariate) {
        std::cout << "multivariate " << name << ": " << p.ToString() << "\n";
      }
      std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
    }
  }
  return agree ? 0 : kExitMismatch;
}

int RunOracle(int k, int n, bool augmented, const std::string& format) {
  const ChowKind kind = KindOf(augmented);
  CheckUniformParameters(k, n, kind);
  if (n > GuardLimit()) {
    throw ResourceGuardError("oracle limited to n <= " +
                             std::to_string(GuardLimit()));
  }
  if (k == 0) throw std::domain_error("oracle requires rank >= 1");
  const UniPoly chain = ChainChow(UniformMatroid(k, n), kind);

  struct Comparison {
    std::string method;
    UniPoly closed;
    std::optional<int> difference;
  };
  std::vector<Comparison> comparisons;
  bool equal = true;
  for (FormMethod method : kAllFormMethods) {
    UniPoly closed = ClosedForm(k, n, method, kind);
    std::optional<int> diff = FirstDifference(chain, closed);
    equal &= !diff.has_value();
    comparisons.push_back({std::string(FormMethodName(method)),
                           std::move(closed), diff});
  }

  if (format == "json") {
    json out = {{"k", k},
                {"n", n},
                {"kind", KindName(kind)},
                {"chain", UniPolyToJson(chain)},
                {"equal", equal}};
    for (const Comparison& c : comparisons) {
      json entry = {{"closed", UniPolyToJson(c.closed)}};
      if (c.difference) entry["first_difference"] = *c.difference;
      out["methods"][c.method] = entry;
    }
    std::cout << out.dump(2) << "\n";
    return equal ? 0 : kExitMismatch;
  }

  std::cout << "chain: " << chain.ToString() << "\n";
  for (int i = 0; i <= chain.degree(); ++i) {
    std::cout << "x^" << i << ": " << chain.Coefficient(i).get_str() << "\n";
  }
  for (const Comparison& c : comparisons) {
    std::cout << c.method << ": ";
    if (!c.difference) {
      std::cout << "equal\n";
      continue;
    }
    const int i = *c.difference;
    std::cout << "differs at x^" << i
              << ": chain=" << chain.Coefficient(i).get_str()
              << " closed=" << c.closed.Coefficient(i).get_str() << "\n";
  }
  std::cout << (equal ? "EQUAL" : "DIFFER") << "\n";
  return equal ? 0 : kExitMismatch;
}

struct CensusVerification {
  std::vector<CountingFormulaCheck> formula;
  std::vector<SchubertExpansionReport> expansions;

  bool passed() const {
    for (const auto& c : formula) {
      if (!c.ok()) return false;
    }
    for (const auto& r : expansions) {
      if (!r.passed()) return false;
    }
    return true;
  }

  // Description of the first failing comparison.
  std::string FirstFailure() const {
    for (const auto& c : formula) {
      if (c.ok()) continue;
      return "counting formula differs at rank=" + std::to_string(c.key.rank) +
             " loops=" + std::to_string(c.key.loops) +
             " cogirth=" + CogirthToString(c.key.cogirth) +
             ": formula=" + c.formula.get_str() +
             " census=" + std::to_string(c.census);
    }
    for (const auto& r : expansions) {
      for (const auto& c : r.checks) {
        if (c.ok()) continue;
        return KindName(c.kind) + " expansion (k=" + std::to_string(r.k) +
               ") differs at x^" + std::to_string(c.degree) +
               ": polynomial=" + c.polynomial.get_str() +
               " census=" + std::to_string(c.census);
      }
    }
    return "";
  }
};

CensusVerification VerifyCensus(const CensusTable& table) {
  CensusVerification v;
  v.formula = CompareWithCountingFormula(table);
  for (int k = 1; k <= table.n; ++k) {
    v.expansions.push_back(VerifySchubertExpansion(k, table.n, table));
  }
  return v;
}

json VerificationToJson(const CensusVerification& v) {
  json formula = json::array();
  for (const auto& c : v.formula) {
    formula.push_back({{"rank", std::to_string(c.key.rank)},
                       {"loops", std::to_string(c.key.loops)},
                       {"cogirth", CogirthToString(c.key.cogirth)},
                       {"formula", c.formula.get_str()},
                       {"census", std::to_string(c.census)},
                       {"ok", c.ok()}});
  }
  json expansions = json::array();
  for (const auto& r : v.expansions) {
    json checks = json::array();
    for (const auto& c : r.checks) {
      checks.push_back({{"kind", KindName(c.kind)},
                        {"power", c.degree},
                        {"polynomial", c.polynomial.get_str()},
                        {"census", std::to_string(c.census)},
                        {"ok", c.ok()}});
    }
    expansions.push_back({{"k", r.k}, {"passed", r.passed()}, {"checks", checks}});
  }
  return {{"passed", v.passed()},
          {"counting_formula", formula},
          {"expansions", expansions}};
}

std::string CensusText(const CensusTable& table) {
  std::ostringstream out;
  out << "rank  loops  cogirth  count\n";
  for (const auto& [key, count] : table.cells) {
    out << std::setw(4) << key.rank << "  " << std::setw(5) << key.loops
        << "  " << std::setw(7) << CogirthToString(key.cogirth) << "  "
        << count << "\n";
  }
  out << "total " << table.total << "\n";
  return out.str();
}

int RunCensusCommand(int n, const std::string& format, bool verify, int jobs) {
  const CensusTable table =
      RunCensus(n, CensusOptions{.jobs = jobs, .max_n = GuardLimit()});
  std::optional<CensusVerification> verification;
  if (verify) verification = VerifyCensus(table);
  const bool passed = !verification || verification->passed();

  if (format == "json") {
    json out = {{"census", CensusToJson(table)}};
    if (verification) out["verification"] = VerificationToJson(*verification);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (format == "csv" ? CensusToCsv(table) : CensusText(table));
    if (verification) {
      // Keep stdout a clean table in CSV mode.
      std::ostream& report = format == "csv" ? std::cerr : std::cout;
      std::size_t formula_ok = 0;
      for (const auto& c : verification->formula) formula_ok += c.ok();
      report << "counting formula: " << formula_ok << "/"
             << verification->formula.size() << " cells match\n";
      for (const auto& r : verification->expansions) {
        report << "expansion k=" << r.k << ": "
               << (r.passed() ? "PASS" : "FAIL") << "\n";
      }
      if (!passed) report << "FIRST MISMATCH " << verification->FirstFailure() << "\n";
      report << (passed ? "VERIFIED" : "FAILED") << "\n";
    }
  }
  return passed ? 0 : kExitMismatch;
}

int RunSequences(int coeff, int k, int n_from, int n_to, bool augmented,
                 const std::string& format) {
  const ChowKind kind = KindOf(augmented);
  if (k > n_from) throw std::domain_error("need k <= n-from");
  std::vector<std::pair<int, BigInt>> rows;
  for (int n = n_from; n <= n_to; ++n) {
    rows.emplace_back(n, CoefficientFormula(k, n, coeff, kind));
  }
  if (format == "json") {
    json out = {{"coeff", coeff}, {"k", k}, {"kind", KindName(kind)}};
    out["rows"] = json::array();
    for (const auto& [n, value] : rows) {
      out["rows"].push_back({{"n", std::to_string(n)}, {"value", value.get_str()}});
    }
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "n,value\n";
    for (const auto& [n, value] : rows) {
      std::cout << n << "," << value.get_str() << "\n";
    }
  } else {
    for (const auto& [n, value] : rows) {
      std::cout << "n=" << n << " " << value.get_str() << "\n";
    }
  }
  return 0;
}

std::vector<int> ParseIntList(const std::string& text) {
  std::vector<int> values;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) values.push_back(std::stoi(item));
  }
  return values;
}

struct MatroidArgs {
  std::string input;
  std::string export_path;
  int uniform_k = -1;
  int uniform_n = -1;
  int schubert_n = -1;
  std::string subset;
  std::string order;
  std::string format = "text";
};

Matroid LoadMatroid(const MatroidArgs& args) {
  if (!args.input.empty()) {
    std::ifstream in(args.input);
    if (!in) throw std::invalid_argument("cannot read " + args.input);
    return MatroidFromJson(json::parse(in));
  }
  if (args.uniform_n >= 0) return UniformMatroid(args.uniform_k, args.uniform_n);
  if (args.schubert_n >= 0) {
    SchubertSpec spec{args.schubert_n, IndexSet(ParseIntList(args.subset)), {}};
    if (args.order.empty()) {
      for (int i = 1; i <= spec.n; ++i) spec.order.push_back(i);
    } else {
      spec.order = ParseIntList(args.order);
    }
    return SchubertMatroid(spec);
  }
  throw std::invalid_argument(
      "need --input, --uniform-k/--uniform-n, or --schubert-n/--subset");
}

int RunMatroid(const MatroidArgs& args) {
  const Matroid m = LoadMatroid(args);
  if (!args.export_path.empty()) {
    std::ofstream out(args.export_path);
    out << MatroidToJson(m).dump() << "\n";
  }
  const MatroidInvariants inv = ComputeInvariants(m);
  std::optional<UniPoly> chow;
  std::optional<UniPoly> augmented;
  if (inv.loops.empty() && m.rank() >= 1) {
    chow = ChainChow(m, ChowKind::kChow);
    augmented = ChainChow(m, ChowKind::kAugmented);
  }
  if (args.format == "json") {
    json out = {{"matroid", MatroidToJson(m)},
                {"loops", inv.loops.elements()},
                {"coloops", inv.coloops.elements()},
                {"girth", CogirthToString(inv.girth)},
                {"cogirth", CogirthToString(inv.cogirth)},
                {"circuits", json::array()}};
    for (ElementMask c : inv.circuits) {
      out["circuits"].push_back(MaskToIndexSet(c).elements());
    }
    if (chow) {
      out["chow"] = UniPolyToJson(*chow);
      out["augmented_chow"] = UniPolyToJson(*augmented);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << MatroidToJson(m).dump() << "\n"
            << "rank " << m.rank() << "\n"
            << "loops " << inv.loops.ToString() << "\n"
            << "coloops " << inv.coloops.ToString() << "\n"
            << "circuits " << inv.circuits.size() << "\n"
            << "girth " << CogirthToString(inv.girth) << "\n"
            << "cogirth " << CogirthToString(inv.cogirth) << "\n";
  if (chow) {
    std::cout << "chow " << chow->ToString() << "\n"
              << "augmented " << augmented->ToString() << "\n";
  }
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"Chow polynomials of uniform matroids and Schubert matroid census"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json", "csv"};

  ComputeArgs compute;
  CLI::App* compute_cmd =
      app.add_subcommand("compute", "Closed forms for U_{k,n}");
  compute_cmd->add_option("--k", compute.k, "Rank")->required();
  compute_cmd->add_option("--n", compute.n, "Ground set size")->required();
  compute_cmd
      ->add_option("--method", compute.method,
                   "all, monomial, gamma-eulerian, gamma-perm, convolution")
      ->check(CLI::IsMember(
          {"all", "monomial", "gamma-eulerian", "gamma-perm", "convolution"}));
  compute_cmd->add_flag("--augmented", compute.augmented);
  compute_cmd->add_flag("--multivariate", compute.multivariate);
  compute_cmd->add_option("--format", compute.format)
      ->check(CLI::IsMember(formats));

  int oracle_k = 0;
  int oracle_n = 0;
  bool oracle_augmented = false;
  std::string oracle_format = "text";
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "Chain-sum oracle against the closed forms");
  oracle_cmd->add_option("--k", oracle_k)->required();
  oracle_cmd->add_option("--n", oracle_n)->required();
  oracle_cmd->add_flag("--augmented", oracle_augmented);
  oracle_cmd->add_option("--format", oracle_format)
      ->check(CLI::IsMember({"text", "json"}));

  int census_n = 0;
  std::string census_format = "text";
  bool census_verify = false;
  int census_jobs = 1;
  CLI::App* census_cmd =
      app.add_subcommand("census", "Distinct Schubert matroids on {1..n}");
  census_cmd->add_option("--n", census_n)->required();
  census_cmd->add_option("--format", census_format)
      ->check(CLI::IsMember(formats));
  census_cmd->add_flag("--verify", census_verify);
  census_cmd->add_option("--jobs", census_jobs)->check(CLI::PositiveNumber);

  int seq_coeff = 1;
  int seq_k = 0;
  int seq_from = 0;
  int seq_to = 0;
  bool seq_augmented = false;
  std::string seq_format = "text";
  CLI::App* seq_cmd =
      app.add_subcommand("sequences", "Coefficient of x^1 or x^2 across n");
  seq_cmd->add_option("--coeff", seq_coeff)->check(CLI::IsMember({1, 2}));
  seq_cmd->add_option("--k", seq_k)->required();
  seq_cmd->add_option("--n-from", seq_from)->required();
  seq_cmd->add_option("--n-to", seq_to)->required();
  seq_cmd->add_flag("--augmented", seq_augmented);
  seq_cmd->add_option("--format", seq_format)->check(CLI::IsMember(formats));

  MatroidArgs matroid;
  CLI::App* matroid_cmd = app.add_subcommand(
      "matroid", "Import, build, or export a matroid and evaluate it");
  matroid_cmd->add_option("--input", matroid.input, "Matroid JSON file");
  matroid_cmd->add_option("--export", matroid.export_path, "Write matroid JSON");
  matroid_cmd->add_option("--uniform-k", matroid.uniform_k);
  matroid_cmd->add_option("--uniform-n", matroid.uniform_n);
  matroid_cmd->add_option("--schubert-n", matroid.schubert_n);
  matroid_cmd->add_option("--subset", matroid.subset, "Comma-separated I");
  matroid_cmd->add_option("--order", matroid.order,
                          "Comma-separated one-line permutation");
  matroid_cmd->add_option("--format", matroid.format)
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*compute_cmd) return RunCompute(compute);
    if (*oracle_cmd) {
      return RunOracle(oracle_k, oracle_n, oracle_augmented, oracle_format);
    }
    if (*census_cmd) {
      return RunCensusCommand(census_n, census_format, census_verify,
                              census_jobs);
    }
    if (*seq_cmd) {
      return RunSequences(seq_coeff, seq_k, seq_from, seq_to, seq_augmented,
                          seq_format);
    }
    if (*matroid_cmd) return RunMatroid(matroid);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace chow

int main(int argc, char** argv) { return chow::Main(argc, argv); }
