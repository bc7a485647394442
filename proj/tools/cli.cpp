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


#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "cftutte/cloudflock.hpp"
#include "cftutte/condensation.hpp"
#include "cftutte/configuration.hpp"
#include "cftutte/errors.hpp"
#include "cftutte/io.hpp"
#include "cftutte/matroid.hpp"
#include "cftutte/oracle.hpp"
#include "cftutte/pmd.hpp"
#include "cftutte/poly.hpp"

namespace cft::cli {

namespace {

using io::Json;

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ValidationError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(file), {});
}

Json load(const std::string& path, std::istream& in) { return io::parse_json(slurp(path, in)); }

// Top-level keys one per line, values compact. Stable byte-for-byte.
void write_document(std::ostream& out, const Json& doc) {
  out << "{\n";
  std::size_t i = 0;
  for (auto it = doc.begin(); it != doc.end(); ++it, ++i) {
    out << "  " << Json(it.key()).dump() << ": " << it.value().dump() << (i + 1 < doc.size() ? ",\n" : "\n");
  }
  out << "}\n";
}

BivarPoly matroid_rgp(const Matroid& m) {
  const Stripped s = strip_loops_coloops(m);
  return loop_coloop_factor(s.loops, s.coloops) *
         rgp_from_configuration(extract_configuration(s.core.matroid));
}

void print_polynomial(std::ostream& out, const BivarPoly& s, bool as_tutte, bool json) {
  const BivarPoly shown = as_tutte ? tutte_from_rgp(s) : s;
  const Integer s11 = s.evaluate(1, 1);
  const Integer t11 = s.evaluate(2, 2);
  if (json) {
    Json doc = io::polynomial_to_json(shown);
    doc["polynomial"] = as_tutte ? "tutte" : "rank_generating";
    doc["S(1,1)"] = s11.str();
    doc["T(1,1)"] = t11.str();
    write_document(out, doc);
    return;
  }
  out << to_string(shown) << "\n";
  out << "S(1,1)=" << s11 << "\n";
  out << "T(1,1)=" << t11 << "\n";
}

struct PolyOptions {
  std::string file;
  bool as_tutte = false;
  bool check_oracle = false;
  bool json = false;
  unsigned jobs = 1;
};

int cmd_rgp(const PolyOptions& opt, Streams s) {
  const Json input = load(opt.file, s.in);
  const io::InputKind kind = io::detect_kind(input);
  if (opt.check_oracle && kind != io::InputKind::kMatroid)
    throw ValidationError("--check-oracle needs a matroid input");

  BivarPoly result;
  switch (kind) {
    case io::InputKind::kMatroid: {
      const Matroid m = io::matroid_from_json(input);
      result = matroid_rgp(m);
      if (opt.check_oracle) {
        const BivarPoly oracle = rgp_bruteforce(m, opt.jobs);
        if (oracle != result) {
          s.err << "oracle mismatch\n";
          s.err << "engine: " << to_string(opt.as_tutte ? tutte_from_rgp(result) : result) << "\n";
          s.err << "oracle: " << to_string(opt.as_tutte ? tutte_from_rgp(oracle) : oracle) << "\n";
          return kOracleMismatch;
        }
      }
      break;
    }
    case io::InputKind::kConfiguration:
      result = rgp_from_configuration(io::configuration_from_json(input));
      break;
    case io::InputKind::kCondensed:
      result = rgp_from_condensed(io::condensed_from_json(input));
      break;
    case io::InputKind::kPmd:
      result = pmd_rgp(PmdSpec::create(io::pmd_from_json(input)));
      break;
  }
  print_polynomial(s.out, result, opt.as_tutte, opt.json);
  return kOk;
}

int cmd_oracle(const PolyOptions& opt, Streams s) {
  const Matroid m = io::matroid_from_json(load(opt.file, s.in));
  print_polynomial(s.out, rgp_bruteforce(m, opt.jobs), opt.as_tutte, opt.json);
  return kOk;
}

int cmd_cyclic_flats(const std::string& file, bool json, Streams s) {
  const Matroid m = io::matroid_from_json(load(file, s.in));
  std::vector<CyclicFlatRecord> list = cyclic_flats(m);
  if (json) {
    write_document(s.out, io::matroid_to_json(Matroid::from_cyclic_flats(m.size(), list)));
    return kOk;
  }
  std::stable_sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
    return std::pair(a.rank, a.size()) < std::pair(b.rank, b.size());
  });
  for (const auto& z : list)
    s.out << set_to_string(z.set) << " size=" << z.size() << " rank=" << z.rank << "\n";
  return kOk;
}

int cmd_config(const std::string& file, Streams s) {
  const Matroid m = io::matroid_from_json(load(file, s.in));
  const Stripped stripped = strip_loops_coloops(m);
  write_document(s.out, io::configuration_to_json(extract_configuration(stripped.core.matroid)));
  return kOk;
}

// Moves generators onto the loop/coloop-free core. They must fix the
// removed elements as a set.
std::vector<Permutation> core_generators(const Minor& core, std::vector<Permutation> gens) {
  std::vector<Permutation> out;
  for (const Permutation& g : gens) {
    Permutation h;
    for (unsigned e : core.original) {
      if (e >= g.size()) throw ValidationError("generator is not a permutation of the ground set");
      ElementSet image = core.to_minor(singleton(g[e]));
      if (image == 0) throw ValidationError("generator does not preserve the set of loops and coloops");
      h.push_back(static_cast<unsigned>(std::countr_zero(image)));
    }
    out.push_back(std::move(h));
  }
  return out;
}

int cmd_condense(const std::string& file, const std::string& group_file, Streams s) {
  const Matroid m = io::matroid_from_json(load(file, s.in));
  const Stripped stripped = strip_loops_coloops(m);
  const Matroid& core = stripped.core.matroid;
  const CyclicFlatLattice lattice = cyclic_flat_lattice(core);

  Condensation c = [&] {
    if (group_file.empty()) return coarsest_condensation(lattice.config);
    std::vector<Permutation> gens = io::group_from_json(load(group_file, s.in), m.size());
    for (const Permutation& g : gens) {
      if (g.size() != m.size()) throw ValidationError("generator has the wrong length");
    }
    gens = core_generators(stripped.core, std::move(gens));
    return orbits_from_generators(lattice, core, gens);
  }();

  Json doc = io::condensed_to_json(c.condensed);
  Json members = Json::array();
  for (const auto& block : c.blocks) {
    Json sets = Json::array();
    for (std::size_t node : block) {
      Json set = Json::array();
      for (unsigned e : elements_of(stripped.core.to_source(lattice.sets[node]))) set.push_back(e);
      sets.push_back(std::move(set));
    }
    members.push_back(std::move(sets));
  }
  doc["members"] = std::move(members);
  write_document(s.out, doc);
  return kOk;
}

const char* kind_name(PmdViolation::Kind kind) {
  switch (kind) {
    case PmdViolation::Kind::kInvalidSequence: return "invalid_sequence";
    case PmdViolation::Kind::kNonIntegerCount: return "non_integer_count";
    case PmdViolation::Kind::kNegativeCoefficient: return "negative_coefficient";
    case PmdViolation::Kind::kExponentOutOfRange: return "exponent_out_of_range";
  }
  return "unknown";
}

std::string sequence_text(const std::vector<std::uint64_t>& k) {
  std::string out = "(";
  for (std::size_t i = 0; i < k.size(); ++i) out += (i ? "," : "") + std::to_string(k[i]);
  return out + ")";
}

// Returns kOk, kInvalidInput or kInfeasible for one sequence.
int report_sequence(const std::vector<std::uint64_t>& k, bool json, std::ostream& out) {
  const PmdReport report = pmd_feasibility_report(k);
  const bool invalid = !report.feasible() &&
                       report.violations.front().kind == PmdViolation::Kind::kInvalidSequence;
  if (json) {
    Json doc = io::pmd_to_json(k);
    doc["feasible"] = report.feasible();
    Json v = Json::array();
    for (const auto& x : report.violations)
      v.push_back(Json{{"kind", kind_name(x.kind)}, {"i", x.i}, {"j", x.j}, {"message", x.message}});
    doc["violations"] = std::move(v);
    doc["notes"] = report.notes;
    out << doc.dump() << "\n";
  } else {
    out << sequence_text(k) << ": " << (report.feasible() ? "feasible" : invalid ? "invalid" : "infeasible")
        << "\n";
    for (const auto& x : report.violations) {
      out << "  " << kind_name(x.kind);
      if (!invalid) out << " at (i,j)=(" << x.i << "," << x.j << ")";
      out << ": " << x.message << "\n";
    }
    for (const auto& note : report.notes) out << "  note: " << note << "\n";
  }
  if (report.feasible()) return kOk;
  return invalid ? kInvalidInput : kInfeasible;
}

int cmd_pmd_check(const std::string& file, const std::string& batch, bool json, Streams s) {
  if (file.empty() == batch.empty()) throw ValidationError("pmd-check needs exactly one of FILE or --batch");
  if (!file.empty()) return report_sequence(io::pmd_from_json(load(file, s.in)), json, s.out);

  std::istringstream lines(slurp(batch, s.in));
  std::string line;
  bool any_invalid = false;
  bool any_infeasible = false;
  while (std::getline(lines, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const int code = report_sequence(io::pmd_from_json(io::parse_json(line)), json, s.out);
    any_invalid |= code == kInvalidInput;
    any_infeasible |= code == kInfeasible;
  }
  if (any_invalid) return kInvalidInput;
  return any_infeasible ? kInfeasible : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tutte and rank generating polynomials from cyclic flats", "cftutte"};
  app.require_subcommand(1);
  Streams streams{in, out, err};

  PolyOptions rgp_opt;
  auto* rgp = app.add_subcommand("rgp", "rank generating polynomial of a matroid, configuration, "
                                        "condensed configuration or PMD sequence");
  rgp->add_option("file", rgp_opt.file, "input file, - for stdin")->required();
  rgp->add_flag("--as-tutte", rgp_opt.as_tutte, "print T(x,y) = S(x-1,y-1)");
  rgp->add_flag("--check-oracle", rgp_opt.check_oracle, "compare with subset enumeration (matroids only)");
  rgp->add_flag("--json", rgp_opt.json, "machine-readable term list");
  rgp->add_option("--jobs", rgp_opt.jobs, "oracle worker threads")->check(CLI::Range(1U, 256U));

  PolyOptions oracle_opt;
  auto* oracle = app.add_subcommand("oracle", "rank generating polynomial by subset enumeration");
  oracle->add_option("file", oracle_opt.file, "matroid file, - for stdin")->required();
  oracle->add_flag("--as-tutte", oracle_opt.as_tutte, "print T(x,y) = S(x-1,y-1)");
  oracle->add_flag("--json", oracle_opt.json, "machine-readable term list");
  oracle->add_option("--jobs", oracle_opt.jobs, "worker threads")->check(CLI::Range(1U, 256U));

  std::string cf_file;
  bool cf_json = false;
  auto* cf = app.add_subcommand("cyclic-flats", "list the cyclic flats of a matroid");
  cf->add_option("file", cf_file, "matroid file, - for stdin")->required();
  cf->add_flag("--json", cf_json, "print as a cyclic_flats matroid file");

  std::string config_file;
  auto* config = app.add_subcommand("config", "configuration of a matroid");
  config->add_option("file", config_file, "matroid file, - for stdin")->required();

  std::string condense_file;
  std::string group_file;
  auto* condense = app.add_subcommand("condense", "condensed configuration of a matroid");
  condense->add_option("file", condense_file, "matroid file, - for stdin")->required();
  condense->add_option("--group", group_file, "permutation generators; default is the coarsest condensation");

  std::string pmd_file;
  std::string batch_file;
  bool pmd_json = false;
  auto* pmd = app.add_subcommand("pmd-check", "feasibility report for a PMD cardinality sequence");
  pmd->add_option("file", pmd_file, "PMD file, - for stdin");
  pmd->add_option("--batch", batch_file, "one sequence per line");
  pmd->add_flag("--json", pmd_json, "one JSON report per sequence");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidInput;
  }

  try {
    if (*rgp) return cmd_rgp(rgp_opt, streams);
    if (*oracle) return cmd_oracle(oracle_opt, streams);
    if (*cf) return cmd_cyclic_flats(cf_file, cf_json, streams);
    if (*config) return cmd_config(config_file, streams);
    if (*condense) return cmd_condense(condense_file, group_file, streams);
    if (*pmd) return cmd_pmd_check(pmd_file, batch_file, pmd_json, streams);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

}  // namespace cft::cli
