// Copyright 2026 The carlitz-jets Authors.
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

#include "carlitz/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "carlitz/cinfty.hpp"
#include "carlitz/errors.hpp"
#include "carlitz/galois_density.hpp"
#include "carlitz/hyperderivatives.hpp"
#include "json.hpp"

namespace carlitz::cli {

namespace {

using nlohmann::ordered_json;

FqSpecPtr field_for(unsigned q) {
  std::vector<FieldConfigEntry> config;
  if (const char* path = std::getenv("CARLITZ_CONFIG"); path && *path)
    config = load_field_config(path);
  return resolve_field(q, config);
}

// Table output goes to --out when given, else to stdout.
int emit(const std::string& text, const std::string& path, std::ostream& out,
         std::ostream& err) {
  if (path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "cannot open " << path << " for writing\n";
    return kExitUsage;
  }
  file << text;
  return file ? kExitOk : kExitUsage;
}

struct TableFlags {
  unsigned q = 0;
  std::uint64_t parameter = 0;
  std::size_t n_max = 0;
  std::string mode = "both";
  std::string format = "csv";
  std::string out_path;
  std::size_t threads = 1;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t budget = kDefaultEnumerationBudget;
};

void add_table_flags(CLI::App* cmd, TableFlags& f, const char* param_flag,
                     const char* param_help) {
  cmd->add_option("--q", f.q, "field order")->required();
  cmd->add_option(param_flag, f.parameter, param_help)->required();
  cmd->add_option("--nmax", f.n_max, "largest reduction level N")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--mode", f.mode, "brute, formula or both")
      ->check(CLI::IsMember({"brute", "formula", "both"}));
  cmd->add_option("--format", f.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", f.out_path, "output file (default stdout)");
  cmd->add_option("--threads", f.threads, "enumeration workers")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "recorded in the JSON header");
  cmd->add_option("--budget", f.budget, "largest unit enumeration allowed");
}

int run_table(const TableFlags& f, Family family, std::ostream& out,
              std::ostream& err) {
  DensityProblem problem;
  problem.spec = field_for(f.q);
  problem.family = family;
  problem.parameter = f.parameter;
  problem.n_max = f.n_max;
  problem.mode = parse_mode(f.mode);
  problem.seed = f.seed;
  problem.brute.threads = f.threads;
  problem.brute.budget = f.budget;
  if (family == Family::kTensorPower && f.parameter == 0)
    throw InvalidSpec("--d must be >= 1");

  return write_table(density_table(problem), f.format, f.out_path, out, err);
}

int run_omega_verify(unsigned q, std::size_t k, std::size_t tprec,
                     std::int64_t uspan, std::ostream& out) {
  const OmegaSeries omega = compute_omega(field_for(q), tprec, uspan);
  bool all = true;
  auto report = [&](const std::string& name, bool ok) {
    out << name << ' ' << (ok ? "PASS" : "FAIL") << '\n';
    all = all && ok;
  };
  report("carlitz_equation", verify_carlitz_equation(omega));
  report("prolongation_trivialization k=" + std::to_string(k),
         verify_prolongation_trivialization(omega, k));
  for (std::size_t c = 0; c <= k; ++c)
    report("hhat_membership column=" + std::to_string(c),
           verify_hhat_membership(k, omega_jet_column(omega, k, c)));
  return all ? kExitOk : kExitFail;
}

int run_rep(unsigned q, std::size_t k, std::size_t n,
            const std::string& literal, std::ostream& out) {
  const FqSpecPtr spec = field_for(q);
  const UnitClass unit(parse_series(spec, literal, n + k));
  const JetMatrix m = galois_rep(unit, k, n);
  ordered_json doc;
  doc["q"] = q;
  doc["k"] = k;
  doc["N"] = n;
  doc["unit"] = unit.series().to_string();
  ordered_json rows = ordered_json::array();
  for (const auto& r : m.rows()) rows.push_back(r.to_string());
  doc["rows"] = rows;
  ordered_json matrix = ordered_json::array();
  for (std::size_t i = 0; i <= k; ++i) {
    ordered_json line = ordered_json::array();
    for (std::size_t c = 0; c <= k; ++c)
      line.push_back(m.entry(i, c).to_string());
    matrix.push_back(line);
  }
  doc["matrix"] = matrix;
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int run_torsion_level(unsigned p, std::size_t n, std::size_t k,
                      std::ostream& out) {
  if (!is_prime(p))
    throw InvalidCharacteristic(std::to_string(p) + " is not prime");
  ordered_json doc;
  doc["p"] = p;
  doc["n"] = n;
  doc["k"] = k;
  doc["m"] = torsion_level_m(p, n, k);
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int run_zariski(unsigned q, std::size_t k, unsigned deg, unsigned tdeg,
                std::size_t n, const ZariskiOptions& opts, std::ostream& out) {
  const RankCertificate cert =
      zariski_rank_certificate(field_for(q), k, deg, tdeg, n, opts);
  ordered_json doc;
  doc["q"] = q;
  doc["k"] = k;
  doc["deg_bound"] = deg;
  doc["tdeg_bound"] = tdeg;
  doc["N"] = n;
  doc["seed"] = opts.seed;
  doc["exhaustive"] = cert.exhaustive;
  doc["units"] = cert.units;
  doc["rows"] = cert.rows;
  doc["columns"] = cert.columns;
  doc["rank"] = cert.rank;
  doc["full_rank"] = cert.full_rank;
  out << doc.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int write_table(const ImageTable& table, const std::string& format,
                const std::string& out_path, std::ostream& out,
                std::ostream& err) {
  const std::string text = format == "json" ? to_json(table) : to_csv(table);
  if (const int rc = emit(text, out_path, out, err); rc != kExitOk) return rc;
  if (const auto bad = table.first_mismatch()) {
    err << "cross-check mismatch at N=" << *bad << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Hyperderivatives, Carlitz prolongations and image densities",
               "carlitz_cli"};
  app.require_subcommand(1);

  TableFlags density_flags;
  auto* density = app.add_subcommand(
      "density", "image orders D(N) of the k-th prolongation");
  add_table_flags(density, density_flags, "--k", "prolongation order");

  TableFlags tensor_flags;
  tensor_flags.mode = "both";
  auto* tensor =
      app.add_subcommand("tensor", "image orders of the d-th tensor power");
  add_table_flags(tensor, tensor_flags, "--d", "tensor exponent");

  unsigned oq = 0;
  std::size_t ok = 0, otprec = 0;
  std::int64_t ouprec = 0;
  auto* omega_verify = app.add_subcommand(
      "omega-verify", "functional equations of the Anderson-Thakur function");
  omega_verify->add_option("--q", oq)->required();
  omega_verify->add_option("--k", ok);
  omega_verify->add_option("--tprec", otprec)->required()->check(
      CLI::PositiveNumber);
  omega_verify->add_option("--uprec", ouprec)->required()->check(
      CLI::PositiveNumber);

  unsigned dq = 0;
  std::size_t dtprec = 0;
  std::int64_t duprec = 0;
  auto* omega_dump = app.add_subcommand(
      "omega-dump", "the Anderson-Thakur function as JSON");
  omega_dump->add_option("--q", dq)->required();
  omega_dump->add_option("--tprec", dtprec)->required()->check(
      CLI::PositiveNumber);
  omega_dump->add_option("--uprec", duprec)->required()->check(
      CLI::PositiveNumber);

  unsigned rq = 0;
  std::size_t rk = 0, rn = 0;
  std::string runit;
  auto* rep = app.add_subcommand("rep", "the jet matrix of a unit");
  rep->add_option("--q", rq)->required();
  rep->add_option("--k", rk)->required();
  rep->add_option("--n", rn)->required()->check(CLI::PositiveNumber);
  rep->add_option("--unit", runit, "series literal")->required();

  unsigned tp = 0;
  std::size_t tn = 0, tk = 0;
  auto* torsion = app.add_subcommand("torsion-level",
                                     "level m of the torsion generators");
  torsion->add_option("--p", tp)->required();
  torsion->add_option("--n", tn)->required();
  torsion->add_option("--k", tk)->required();

  unsigned zq = 0, zdeg = 0, ztdeg = 0;
  std::size_t zk = 0, zn = 0;
  ZariskiOptions zopts;
  zopts.seed = kDefaultSeed;
  auto* zariski = app.add_subcommand(
      "zariski", "rank certificate against low-degree relations");
  zariski->add_option("--q", zq)->required();
  zariski->add_option("--k", zk)->required();
  zariski->add_option("--deg", zdeg)->required();
  zariski->add_option("--tdeg", ztdeg)->required();
  zariski->add_option("--n", zn)->required()->check(CLI::PositiveNumber);
  zariski->add_option("--seed", zopts.seed);
  zariski->add_option("--samples", zopts.samples);
  zariski->add_option("--budget", zopts.budget);

  // CLI11 consumes the vector from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    for (const auto* sub : app.get_subcommands())
      err << sub->help();
    return kExitUsage;
  }

  try {
    if (*density) return run_table(density_flags, Family::kProlongation, out, err);
    if (*tensor) return run_table(tensor_flags, Family::kTensorPower, out, err);
    if (*omega_verify) return run_omega_verify(oq, ok, otprec, ouprec, out);
    if (*omega_dump) {
      out << omega_to_json(compute_omega(field_for(dq), dtprec, duprec));
      return kExitOk;
    }
    if (*rep) return run_rep(rq, rk, rn, runit, out);
    if (*torsion) return run_torsion_level(tp, tn, tk, out);
    if (*zariski) return run_zariski(zq, zk, zdeg, ztdeg, zn, zopts, out);
  } catch (const BudgetExceeded& e) {
    err << e.what() << '\n';
    return kExitBudget;
  } catch (const InsufficientPrecision& e) {
    err << e.what() << '\n';
    return kExitBudget;
  } catch (const WindowEmpty& e) {
    err << e.what() << '\n';
    return kExitBudget;
  } catch (const SegmentViolation& e) {
    err << e.what() << '\n';
    return kExitMismatch;
  } catch (const MalformedOrder& e) {
    err << e.what() << '\n';
    return kExitMismatch;
  } catch (const Error& e) {
    // Unparsable literals, non-units, unknown fields, bad characteristics.
    err << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace carlitz::cli
