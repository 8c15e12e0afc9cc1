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

// Command-line front end: builds objects from input files, runs checks and
// prints a structured-text report. Exit codes: 0 pass, 1 check failure,
// 2 input error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trophom/bergman.h"
#include "trophom/error.h"
#include "trophom/hodge.h"
#include "trophom/homology.h"
#include "trophom/io.h"
#include "trophom/paper_examples.h"
#include "trophom/poset.h"
#include "trophom/report.h"
#include "trophom/shelling.h"
#include "trophom/suite.h"

#ifndef TROPHOM_GOLDEN_FILE
#define TROPHOM_GOLDEN_FILE "tests/golden/paper_examples.txt"
#endif

namespace {

using namespace trophom;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

struct LoadedMatroid {
  std::string path;
  std::string text;
  Matroid matroid;
};

LoadedMatroid Load(const std::string& path) {
  std::string text = ReadFile(path);
  try {
    return {path, text, ParseMatroid(text)};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kParse) throw;
    throw Error(ErrorCode::kParse, path + ": " + e.message());
  }
}

Weight LoadWeight(const std::string& argument, int n) {
  Weight omega(ParseRationalArgument(argument, "omega"));
  if (omega.n() != n) {
    throw Error(ErrorCode::kInvalidParameters,
                "omega has " + std::to_string(omega.n()) +
                    " entries, the ground set has " + std::to_string(n));
  }
  return omega;
}

Halfspace LoadHalfspace(const std::string& argument, int d) {
  Halfspace h = Halfspace::FromRationals(ParseRationalArgument(argument, "normal"));
  if (static_cast<int>(h.normal.size()) != d) {
    throw Error(ErrorCode::kInvalidParameters,
                "normal has " + std::to_string(h.normal.size()) +
                    " entries, the ambient lattice has rank " +
                    std::to_string(d));
  }
  return h;
}

std::string Join(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

// ---------------------------------------------------------------------------

Report MatroidCommand(const std::string& path) {
  const LoadedMatroid in = Load(path);
  const Matroid& m = in.matroid;
  Report report("matroid " + path);
  report.AddInput(path, in.text);
  CheckRecord summary{"matroid summary", "a valid loopless matroid given by its lattice of flats", true, {}};
  summary.Set("ground set size", std::to_string(m.n()));
  summary.Set("rank", std::to_string(m.rank()));
  std::vector<std::string> counts;
  for (const auto& level : m.flats_by_rank()) counts.push_back(std::to_string(level.size()));
  summary.Set("flats by rank", Join(counts));
  summary.Set("proper flats", std::to_string(m.ProperFlats().size()));
  summary.Set("mobius", ToString(Mobius(m)));
  report.Add(summary);
  if (m.rank() >= 2) {
    CheckRecord rota{"rota cross-check", "the order complex of proper flats has |mu(0,1)| spheres in dimension r-2", false, {}};
    const WedgeResult w = WedgeProfile(BuildOrderComplex(ProperLattice(m)).complex, m.rank() - 2);
    BigInt mu = abs(Mobius(m));
    rota.Set("homology", w.homology.ToString());
    rota.Set("|mu|", ToString(mu));
    rota.passed = w.passed && BigInt(w.sphere_count) == mu;
    report.Add(rota);
  }
  return report;
}

Report FilteredCommand(const std::string& path, const std::string& omega_arg,
                       const std::string& t_arg) {
  const LoadedMatroid in = Load(path);
  const Matroid& m = in.matroid;
  const Weight omega = LoadWeight(omega_arg, m.n());
  const Rational t = ParseRational(t_arg);
  Report report("filtered " + path + " --omega " + omega_arg + " --t " + t_arg);
  report.AddInput(path, in.text);

  const Poset filtered = Filtered(ProperLattice(m), omega, t);
  const OrderComplex oc = BuildOrderComplex(filtered);
  const int d = m.rank() - 2;

  CheckRecord elements{"filtered lattice", "the flats of weight above t", true, {}};
  elements.Set("omega", omega.ToString());
  elements.Set("t", ToString(t));
  elements.Set("t in admissible range", filtered.filter()->t_in_range ? "yes" : "no");
  elements.Set("weight generic on all subsets", filtered.filter()->fully_generic ? "yes" : "no");
  elements.Set("elements", filtered.ToString());
  elements.Set("maximal chains", std::to_string(oc.complex.facets().size()));
  report.Add(elements);

  CheckRecord purity{"purity", "the order complex is pure of dimension r-2", false, {}};
  purity.Set("dimension", std::to_string(oc.complex.dimension()));
  purity.Set("expected", std::to_string(d));
  purity.passed = oc.complex.IsPure() && oc.complex.dimension() == d;
  report.Add(purity);

  const WedgeResult wedge = WedgeProfile(oc.complex, d);
  CheckRecord cm{"cohen-macaulay over Z", "every link has vanishing reduced homology below its dimension", false, {}};
  const CmResult result = CmOverZ(oc.complex);
  cm.Set("verdict detail", result.ToString());
  cm.Set("links checked", std::to_string(result.faces_checked));
  cm.passed = result.passed();
  report.Add(cm);

  CheckRecord w{"wedge profile", "reduced homology is free and concentrated in degree r-2", false, {}};
  w.Set("reduced homology", wedge.homology.ToString());
  w.Set("sphere count", std::to_string(wedge.sphere_count));
  w.Set("euler characteristic consistent", EulerCheck(oc.complex, wedge.homology) ? "yes" : "no");
  w.passed = wedge.passed;
  report.Add(w);
  return report;
}

Report ShellCommand(const std::string& path, const std::string& omega_arg,
                    const std::string& t_arg) {
  const LoadedMatroid in = Load(path);
  const Matroid& m = in.matroid;
  const Weight omega = LoadWeight(omega_arg, m.n());
  const Rational t = ParseRational(t_arg);
  Report report("shell " + path + " --omega " + omega_arg + " --t " + t_arg);
  report.AddInput(path, in.text);

  if (m == Boolean(m.n())) {
    const ShellingOrder order = LexShellingBoolean(m.n(), omega, t);
    const ShellingVerdict v = VerifyShelling(order.order_complex.complex, order.facets);
    CheckRecord rec{"lexicographic shelling", "the lexicographic order of edge-label words is a shelling", v.passed, {}};
    rec.Set("facets", std::to_string(order.facets.size()));
    for (std::size_t k = 0; k < std::min<std::size_t>(5, order.facets.size()); ++k) {
      std::string chain;
      for (Subset s : order.order_complex.Labels(order.facets[k])) {
        chain += (chain.empty() ? "" : "<") + s.ToString();
      }
      rec.Set("facet " + std::to_string(k + 1), chain);
    }
    if (!v.passed) rec.Set("violating facet", std::to_string(v.violating_index));
    report.Add(rec);
    return report;
  }
  const OrderComplex oc = BuildOrderComplex(Filtered(ProperLattice(m), omega, t));
  const auto order = BruteForceShellable(oc.complex);
  CheckRecord rec{"shellable by exhaustive search", "some ordering of the facets is a shelling", order.has_value(), {}};
  rec.Set("facets", std::to_string(oc.complex.facets().size()));
  if (order) {
    std::string chains;
    for (const Face& f : *order) {
      std::string chain;
      for (Subset s : oc.Labels(f)) chain += (chain.empty() ? "" : "<") + s.ToString();
      chains += (chains.empty() ? "" : " ") + chain;
    }
    rec.Set("order", chains);
  }
  report.Add(rec);
  return report;
}

Report BergmanCommand(const std::string& path, const std::string& normal_arg,
                      const std::string& action) {
  const LoadedMatroid in = Load(path);
  const BergmanFan fan(in.matroid);
  const std::string normal_echo = normal_arg.empty() ? "" : " --normal " + normal_arg;
  Report report("bergman " + path + normal_echo + " " + action);
  report.AddInput(path, in.text);
  if (action == "balance") {
    CheckRecord rec{"balancing", "every codimension-one cone is balanced", true, {}};
    long long count = 0;
    for (const auto& chain : CodimensionOneChains(fan)) {
      ++count;
      if (!BalancingCheck(fan, chain).passed) rec.passed = false;
    }
    rec.Set("codimension-one cones", std::to_string(count));
    rec.Set("maximal cones", std::to_string(fan.MaximalCones().size()));
    const bool dims = fan.ConeDimensionsMatchChains();
    rec.Set("cone dimensions match chain lengths", dims ? "yes" : "no");
    rec.passed = rec.passed && dims;
    report.Add(rec);
    return report;
  }
  if (normal_arg.empty()) {
    throw Error(ErrorCode::kInvalidParameters, action + " requires --normal");
  }
  const Halfspace h = LoadHalfspace(normal_arg, fan.d());
  if (action == "positive") {
    const PositivePart plus = ComputePositivePart(fan, h);
    const PositivePart minus = ComputePositivePart(fan, h.Negated());
    CheckRecord rec{"positive part", "the rays split into those in the open halfspace and those in its negative", false, {}};
    rec.Set("normal", h.ToString());
    rec.Set("omega", plus.omega.ToString());
    rec.Set("positive flats", plus.poset.ToString());
    rec.Set("negative flats", minus.poset.ToString());
    std::vector<Subset> all = plus.poset.elements();
    all.insert(all.end(), minus.poset.elements().begin(), minus.poset.elements().end());
    std::sort(all.begin(), all.end(), CanonicalLess);
    rec.passed = all == fan.lattice().elements();
    report.Add(rec);
    return report;
  }
  const LefschetzResult r = LefschetzPair(fan, h);
  CheckRecord rec{"lefschetz pair", "the pair (fan, positive half) has free relative homology concentrated in degree r-2", r.passed, {}};
  rec.Set("normal", h.ToString());
  rec.Set("relative homology", r.homology.ToString());
  report.Add(rec);
  return report;
}

Report HodgeCommand(const std::string& path, int p, const std::string& region_arg,
                    const std::string& ring_arg, const std::string& normal_arg) {
  const LoadedMatroid in = Load(path);
  const Matroid& m = in.matroid;
  const BergmanFan fan(m);
  const Ring ring = ring_arg == "rat" ? Ring::kRat : Ring::kInt;
  const Region region = region_arg == "link" ? Region::kLink
                        : region_arg == "halflink" ? Region::kHalfLink
                                                   : Region::kBall;
  if (p < 0 || p > fan.d()) {
    throw Error(ErrorCode::kInvalidParameters, "p must lie in [0, " + std::to_string(fan.d()) + "]");
  }
  std::string echo = "hodge " + path + " --p " + std::to_string(p) + " --region " + region_arg + " --ring " + ring_arg;
  if (!normal_arg.empty()) echo += " --normal " + normal_arg;
  Report report(echo);
  report.AddInput(path, in.text);
  std::optional<Halfspace> h;
  if (!normal_arg.empty()) h = LoadHalfspace(normal_arg, fan.d());
  if (region == Region::kHalfLink && !h) {
    throw Error(ErrorCode::kInvalidParameters, "halflink requires --normal");
  }

  const PQComplex k = BuildPQComplex(fan, region, p, ring, h ? &*h : nullptr);
  const HomologyProfile hom = PQHomology(k);
  CheckRecord rec{"(p,q) homology", "tropical homology with F_p coefficients of the local model", true, {}};
  rec.Set("region", RegionName(region));
  rec.Set("ring", RingName(ring));
  rec.Set("cells", std::to_string(k.cells.size()));
  rec.Set("homology", hom.ToString());
  report.Add(rec);

  if (region == Region::kHalfLink) {
    CheckRecord v{"halflink vanishing", "halflink (p,q) homology vanishes for p+q <= r-3", true, {}};
    for (int q = -1; q <= m.rank() - 3 - p; ++q) {
      if (!hom.At(q).IsZero()) v.passed = false;
    }
    v.Set("degrees checked", "q=-1.." + std::to_string(m.rank() - 3 - p));
    report.Add(v);
  }
  if (region == Region::kBall) {
    const ConeIsoResult iso = ConeIsoCheck(fan, p, ring);
    CheckRecord v{"cone isomorphism", "H_{q-1}(Link; F_p) agrees with H_q(Ball, Link; F_p)", iso.passed, {}};
    v.Set("link homology", iso.link.ToString());
    v.Set("relative homology", iso.relative.ToString());
    report.Add(v);
  }
  if (h) {
    const PComparison c = HalfspacePComparison(fan, *h, p, ring);
    CheckRecord v{"halfspace framing", "F_p of the positive half equals F_p of the fan", false, {}};
    v.Set("positive rank", std::to_string(c.positive.rank()));
    v.Set("full rank", std::to_string(c.full.rank()));
    v.Set("index", c.index ? ToString(*c.index) : "infinite");
    v.passed = c.rank_equal && c.index && *c.index == 1;
    report.Add(v);
  }
  return report;
}

Report PaperExamplesCommand(const std::string& golden_path) {
  Report report = PaperExamplesReport();
  const std::string golden = ReadFile(golden_path);
  const std::vector<std::string> divergent = GoldenMismatches(report.Render(), golden);
  CheckRecord rec{"golden comparison", "every worked-example record matches the committed golden file", divergent.empty(), {}};
  rec.Set("golden file fnv1a64", Digest(golden));
  rec.Set("divergent records", divergent.empty() ? "none" : Join(divergent));
  report.Add(rec);
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homology of filtered matroid lattices and Bergman fans"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Also write the report to this file");

  std::string file, omega, t = "0", normal, region = "link", ring = "int", action;
  std::string golden = TROPHOM_GOLDEN_FILE;
  int p = 0;
  SuiteOptions suite;

  auto* matroid = app.add_subcommand("matroid", "Validate and summarize a matroid");
  matroid->add_option("file", file, "Matroid JSON file")->required();

  auto* filtered = app.add_subcommand("filtered", "Analyze the filtered lattice L^{>t}");
  filtered->add_option("file", file)->required();
  filtered->add_option("--omega", omega, "Weight: list or JSON file")->required();
  filtered->add_option("--t", t, "Threshold (rational)")->required();

  auto* shell = app.add_subcommand("shell", "Shell the filtered order complex");
  shell->add_option("file", file)->required();
  shell->add_option("--omega", omega)->required();
  shell->add_option("--t", t)->required();

  auto* bergman = app.add_subcommand("bergman", "Bergman fan checks");
  bergman->add_option("file", file)->required();
  bergman->add_option("--normal", normal, "Halfspace normal: list or JSON file");
  bergman->add_option("action", action)->required()->check(CLI::IsMember({"balance", "positive", "lefschetz"}));

  auto* hodge = app.add_subcommand("hodge", "Tropical (p,q) homology of local models");
  hodge->add_option("file", file)->required();
  hodge->add_option("--p", p)->required();
  hodge->add_option("--region", region)->required()->check(CLI::IsMember({"link", "halflink", "ball"}));
  hodge->add_option("--ring", ring)->check(CLI::IsMember({"int", "rat"}));
  hodge->add_option("--normal", normal);

  auto* paper = app.add_subcommand("paper-examples", "Reproduce the worked examples");
  paper->add_option("--golden", golden, "Golden report to compare against");

  auto* suite_cmd = app.add_subcommand("suite", "Randomized acceptance suite");
  suite_cmd->add_option("--seed", suite.seed);
  suite_cmd->add_option("--max-n", suite.max_n);
  suite_cmd->add_option("--golden", golden);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    std::optional<Report> report;
    if (*matroid) report = MatroidCommand(file);
    if (*filtered) report = FilteredCommand(file, omega, t);
    if (*shell) report = ShellCommand(file, omega, t);
    if (*bergman) report = BergmanCommand(file, normal, action);
    if (*hodge) report = HodgeCommand(file, p, region, ring, normal);
    if (*paper) report = PaperExamplesCommand(golden);
    if (*suite_cmd) {
      std::string golden_text;
      try {
        golden_text = ReadFile(golden);
      } catch (const Error&) {
        std::cerr << "warning: golden file " << golden << " not readable\n";
      }
      if (suite.max_n < 2 || suite.max_n > kSuiteMaxGroundSet) {
        throw Error(ErrorCode::kInvalidParameters,
                    "--max-n must lie in [2, " + std::to_string(kSuiteMaxGroundSet) + "]");
      }
      report = SuiteReport(suite, golden_text);
    }
    const std::string text = report->Render();
    std::cout << text;
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) throw Error(ErrorCode::kInvalidParameters, "cannot write " + out_path);
      out << text;
    }
    return report->AllPassed() ? kExitPass : kExitCheckFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
