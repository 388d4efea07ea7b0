// Copyright 2025-2026 The pptcone developers
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

#include "pptcone/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pptcone/catalog22.hpp"
#include "pptcone/construct.hpp"
#include "pptcone/faces.hpp"
#include "pptcone/io.hpp"
#include "pptcone/maps.hpp"
#include "pptcone/rng.hpp"
#include "pptcone/states.hpp"
#include "pptcone/subspace.hpp"
#include "pptcone/tensor.hpp"

namespace pptcone {

namespace {

using ordered_json = nlohmann::ordered_json;

// Options shared by every subcommand; --seed falls back to PPTCONE_SEED.
struct GlobalOpts {
  double tol = kDefaultTol;
  std::uint64_t seed = kDefaultSeed;
  int starts = 64;
  int max_iter = 500;
  std::string out;
};

ProductSearchOptions product_opts(const GlobalOpts& g) {
  ProductSearchOptions p;
  p.starts = g.starts;
  p.max_iter = g.max_iter;
  p.seed = g.seed;
  return p;
}

PositivitySearchOptions search_opts(const GlobalOpts& g) {
  PositivitySearchOptions p;
  p.starts = g.starts;
  p.max_iter = g.max_iter;
  p.seed = g.seed;
  return p;
}

ConstructOptions construct_opts(const GlobalOpts& g) {
  ConstructOptions c;
  c.search = search_opts(g);
  c.product = product_opts(g);
  c.feasibility.tol = g.tol;
  c.feasibility.seed = g.seed;
  c.tol = g.tol;
  return c;
}

ordered_json base_report(const std::string& command, const GlobalOpts& g) {
  ordered_json r;
  r["command"] = command;
  r["tol"] = g.tol;
  r["seed"] = g.seed;
  return r;
}

// Canonical JSON object of a matrix file, identical to the on-disk form.
ordered_json json_of_file(const MatrixFile& f) {
  return ordered_json::parse(serialize_matrix_file(f));
}

// Splices kind/m/n/data into the report so the output is itself loadable.
void merge_file(ordered_json& r, const MatrixFile& f) {
  const ordered_json j = json_of_file(f);
  for (const auto& [key, value] : j.items()) r[key] = value;
}

ordered_json json_of_vector(const Vector& v) {
  ordered_json cells = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    cells.push_back({v(i).real(), v(i).imag()});
  return cells;
}

ordered_json json_of_hit(const ProductVectorHit& hit) {
  ordered_json j;
  j["x"] = json_of_vector(hit.x);
  j["y"] = json_of_vector(hit.y);
  j["residual"] = hit.residual;
  return j;
}

void emit(const ordered_json& report, const std::string& out_path) {
  const std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
  f << text;
  if (!f) throw ContractViolation("--out: cannot write " + out_path);
}

int fail_report(const GlobalOpts& g, const std::string& command,
                const char* identifier, const std::string& message,
                int code) {
  ordered_json r = base_report(command.empty() ? "(none)" : command, g);
  ordered_json err;
  err["identifier"] = identifier;
  err["message"] = message;
  r["error"] = err;
  std::cerr << "pptcone: " << identifier << ": " << message << "\n";
  try {
    emit(r, g.out);
  } catch (const Error&) {
    std::cout << r.dump(2) << "\n";  // unwritable --out, keep the report
  }
  return code;
}

const char* verdict_name(EdgeVerdict v) {
  switch (v) {
    case EdgeVerdict::ProductFound: return "ProductFound";
    case EdgeVerdict::Edge: return "Edge";
    default: return "Inconclusive";
  }
}

const char* claim_name(EntangledClaim c) {
  switch (c) {
    case EntangledClaim::ByTheorem4: return "ByTheorem4";
    case EntangledClaim::ByEdgeCheck: return "ByEdgeCheck";
    default: return "None";
  }
}

//==========================================================================
// Subcommands

int cmd_pt(const GlobalOpts& g, const std::string& in) {
  const BipartiteMatrix a = load_matrix_file(in).as_state();
  ordered_json r = base_report("pt", g);
  merge_file(r, matrix_file_from_state(partial_transpose(a)));
  emit(r, g.out);
  return kExitTrue;
}

int cmd_check_ppt(const GlobalOpts& g, const std::string& in) {
  const BipartiteMatrix a = load_matrix_file(in).as_state();
  const ConeMembership c = in_T(a, g.tol);
  ordered_json r = base_report("check-ppt", g);
  r["in_psd"] = c.in_psd;
  r["in_pt_psd"] = c.in_pt_psd;
  r["min_eig"] = c.min_eig;
  r["min_eig_pt"] = c.min_eig_pt;
  r["in_cone"] = c.in_cone();
  emit(r, g.out);
  return c.in_cone() ? kExitTrue : kExitFalse;
}

int cmd_pairing(const GlobalOpts& g, const std::string& state_path,
                const std::string& d_path, const std::string& e_path) {
  const BipartiteMatrix a = load_matrix_file(state_path).as_state();
  const MatrixSubspace d = load_matrix_file(d_path).as_subspace();
  const MatrixSubspace e = load_matrix_file(e_path).as_subspace();
  const double value = pairing(a, map_from_subspaces(d, e), g.tol);
  ordered_json r = base_report("pairing", g);
  r["D_dim"] = d.dim();
  r["E_dim"] = e.dim();
  r["value"] = value;
  emit(r, g.out);
  return kExitTrue;
}

int cmd_face(const GlobalOpts& g, const std::string& in, bool dual) {
  const BipartiteMatrix a = load_matrix_file(in).as_state();
  const FacePair f = dual ? dual_face_of_state(a, g.tol)
                          : face_of_state(a, g.tol);
  ordered_json r = base_report(dual ? "dual-face" : "face", g);
  r["pair_kind"] = f.kind == PairKind::IntersectionPair ? "intersection"
                                                        : "decomposition";
  r["D_dim"] = f.D.dim();
  r["E_dim"] = f.E.dim();
  r["D"] = json_of_file(matrix_file_from_subspace(f.D));
  r["E"] = json_of_file(matrix_file_from_subspace(f.E));
  emit(r, g.out);
  return kExitTrue;
}

int cmd_edge(const GlobalOpts& g, const std::string& in) {
  const BipartiteMatrix a = load_matrix_file(in).as_state();
  const EdgeReport e = edge_check(a, product_opts(g));
  ordered_json r = base_report("edge", g);
  r["verdict"] = verdict_name(e.verdict);
  r["is_edge"] = e.is_edge;
  r["residual"] = e.best_hit.residual;
  r["starts"] = e.starts;
  r["threshold"] = e.threshold;
  r["found_threshold"] = e.found_threshold;
  r["best_hit"] = json_of_hit(e.best_hit);
  emit(r, g.out);
  switch (e.verdict) {
    case EdgeVerdict::Edge: return kExitTrue;
    case EdgeVerdict::ProductFound: return kExitFalse;
    default: return kExitInconclusive;
  }
}

int cmd_separable_face(const GlobalOpts& g, const std::string& d_path,
                       const std::string& e_path) {
  const MatrixSubspace d = load_matrix_file(d_path).as_subspace();
  const MatrixSubspace e = load_matrix_file(e_path).as_subspace();
  const auto hit = separable_element_in_face(d, e, product_opts(g));
  ordered_json r = base_report("separable-face", g);
  r["found"] = hit.has_value();
  if (hit) r["hit"] = json_of_hit(*hit);
  emit(r, g.out);
  return hit ? kExitTrue : kExitFalse;
}

int cmd_construct(const GlobalOpts& g, const std::string& d_path,
                  const std::string& e_path) {
  const MatrixSubspace d = load_matrix_file(d_path).as_subspace();
  const MatrixSubspace e = load_matrix_file(e_path).as_subspace();
  const ConstructionCertificate cert =
      construct_ppt_entangled(d, e, construct_opts(g));
  ordered_json r = base_report("construct", g);
  r["feasible"] = cert.feasible;
  r["claim"] = claim_name(cert.entangled_claim);
  r["interior_margin"] = cert.interior_margin.margin;
  r["margin_converged"] = cert.interior_margin.converged;
  if (cert.state)
    r["state"] = json_of_file(matrix_file_from_state(*cert.state));
  emit(r, g.out);
  if (cert.entangled_claim != EntangledClaim::None) return kExitTrue;
  return cert.feasible ? kExitInconclusive : kExitFalse;
}

int cmd_catalog22(const GlobalOpts& g, int trials) {
  const CatalogReport rep = validate_catalog(g.seed, trials);
  ordered_json r = base_report("catalog22", g);
  r["trials"] = rep.trials;
  r["checks_run"] = rep.checks_run;
  r["all_passed"] = rep.all_passed();
  r["failures"] = rep.failures;
  emit(r, g.out);
  return rep.all_passed() ? kExitTrue : kExitFalse;
}

// Replays the built-in worked example and freezes its published facts.
int cmd_verify_paper(const GlobalOpts& g) {
  const BipartiteMatrix built = reference_example();
  const BipartiteMatrix printed = reference_example_printed();
  const BipartiteDims dims{2, 2};

  ordered_json checks = ordered_json::array();
  bool ok = true;
  const auto push = [&](const char* name, bool pass, double value) {
    ordered_json c;
    c["name"] = name;
    c["pass"] = pass;
    c["value"] = value;
    checks.push_back(c);
    ok = ok && pass;
  };

  const double mismatch = (built.mat - printed.mat).norm();
  push("accumulated_matrix_matches_printed", mismatch == 0.0, mismatch);

  const double tr = built.mat.trace().real();
  push("trace_is_ten", tr == 10.0, tr);

  const int rank = range_space_info(built.mat, g.tol).rank();
  push("rank_is_three", rank == 3, static_cast<double>(rank));

  const double kernel_norm =
      (built.mat * vectorize(Matrix::Identity(2, 2))).norm();
  push("kernel_contains_identity", kernel_norm < 1e-12, kernel_norm);

  const BipartiteMatrix pt = partial_transpose(built);
  const PsdReport pr = psd_check(pt.mat, g.tol);
  push("block_transpose_strictly_positive", pr.is_psd && pr.min_eig > 1e-6,
       pr.min_eig);
  const int pt_rank = range_space_info(pt.mat, g.tol).rank();
  push("block_transpose_full_rank", pt_rank == 4,
       static_cast<double>(pt_rank));

  const MatrixSubspace none = zero_subspace(dims);
  const MatrixSubspace span_id = subspace_from_vectors(
      dims, {vectorize(Matrix::Identity(2, 2))});
  const double p_id = pairing(built, map_from_subspaces(span_id, none), g.tol);
  push("pairing_with_identity_map_is_zero", std::abs(p_id) <= 1e-9, p_id);

  Matrix corner = Matrix::Zero(2, 2);
  corner(0, 0) = 1.0;
  const MatrixSubspace span_corner =
      subspace_from_vectors(dims, {vectorize(corner)});
  const double p_corner =
      pairing(built, map_from_subspaces(span_corner, none), g.tol);
  push("pairing_with_corner_map_is_two", std::abs(p_corner - 2.0) <= 1e-9,
       p_corner);

  ordered_json r = base_report("verify-paper", g);
  r["checks"] = checks;
  r["ok"] = ok;
  emit(r, g.out);
  return ok ? kExitTrue : kExitFalse;
}

int cmd_exposedness(const GlobalOpts& g, const std::string& in, int samples) {
  const BipartiteMatrix a = load_matrix_file(in).as_state();
  const bool ok = exposedness_selftest(a, samples, g.tol, g.seed);
  ordered_json r = base_report("exposedness-test", g);
  r["samples"] = samples;
  r["ok"] = ok;
  emit(r, g.out);
  return ok ? kExitTrue : kExitFalse;
}

}  // namespace

int run_command(const std::vector<std::string>& args) {
  CLI::App app{"faces of the PPT cone and their positive-map duals"};
  app.name("pptcone");
  app.require_subcommand(0, 1);

  GlobalOpts g;
  app.add_option("--tol", g.tol, "numerical tolerance")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed for every randomized search")
      ->envname("PPTCONE_SEED")
      ->capture_default_str();
  app.add_option("--starts", g.starts,
                 "random starts on top of the deterministic ones")
      ->capture_default_str();
  app.add_option("--max-iter", g.max_iter, "iteration cap per start")
      ->capture_default_str();
  app.add_option("--out", g.out, "write the JSON report here, not stdout");

  std::string pt_in;
  auto* pt = app.add_subcommand("pt", "partial transpose of a state file");
  pt->add_option("input", pt_in, "state file")->required();

  std::string ppt_in;
  auto* ppt = app.add_subcommand(
      "check-ppt", "test a state against the PPT cone (exit 1 if outside)");
  ppt->add_option("input", ppt_in, "state file")->required();

  std::string pair_state, pair_d, pair_e;
  auto* pair = app.add_subcommand(
      "pairing", "pairing of a state with the map spanned by two subspaces");
  pair->add_option("state", pair_state, "state file")->required();
  pair->add_option("D", pair_d, "subspace file, completely positive side")
      ->required();
  pair->add_option("E", pair_e, "subspace file, completely copositive side")
      ->required();

  std::string face_in;
  auto* face = app.add_subcommand(
      "face", "minimal cone face holding a PPT state in its interior");
  face->add_option("input", face_in, "state file")->required();

  std::string dual_in;
  auto* dual = app.add_subcommand(
      "dual-face", "dual decomposition pair of a PPT state");
  dual->add_option("input", dual_in, "state file")->required();

  std::string edge_in;
  auto* edge = app.add_subcommand(
      "edge", "edge test: search for a product vector in the ranges");
  edge->add_option("input", edge_in, "state file")->required();

  std::string sep_d, sep_e;
  auto* sep = app.add_subcommand(
      "separable-face", "search a face for a separable state (exit 1: none)");
  sep->add_option("D", sep_d, "subspace file, range side")->required();
  sep->add_option("E", sep_e, "subspace file, block-transpose range side")
      ->required();

  std::string con_d, con_e;
  auto* con = app.add_subcommand(
      "construct", "build a PPT entangled state from a decomposition pair");
  con->add_option("D", con_d, "subspace file, completely positive side")
      ->required();
  con->add_option("E", con_e, "subspace file, completely copositive side")
      ->required();

  int trials = 20;
  auto* cat = app.add_subcommand(
      "catalog22", "random-instance sweep over the qubit-pair face catalog");
  cat->add_option("--trials", trials, "instances per face class")
      ->capture_default_str();

  auto* verify = app.add_subcommand(
      "verify-paper", "replay the built-in worked example and its facts");

  std::string expo_in;
  int samples = 20;
  auto* expo = app.add_subcommand(
      "exposedness-test", "re-derive a state's face from dual-pairing zeros");
  expo->add_option("input", expo_in, "state file")->required();
  expo->add_option("--samples", samples, "interior samples to test")
      ->capture_default_str();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitTrue;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitInput;
  }

  const auto parsed = app.get_subcommands();
  const std::string active = parsed.empty() ? "" : parsed.front()->get_name();
  if (parsed.empty()) {
    std::cerr << app.help();
    return kExitInput;
  }

  try {
    if (pt->parsed()) return cmd_pt(g, pt_in);
    if (ppt->parsed()) return cmd_check_ppt(g, ppt_in);
    if (pair->parsed()) return cmd_pairing(g, pair_state, pair_d, pair_e);
    if (face->parsed()) return cmd_face(g, face_in, false);
    if (dual->parsed()) return cmd_face(g, dual_in, true);
    if (edge->parsed()) return cmd_edge(g, edge_in);
    if (sep->parsed()) return cmd_separable_face(g, sep_d, sep_e);
    if (con->parsed()) return cmd_construct(g, con_d, con_e);
    if (cat->parsed()) return cmd_catalog22(g, trials);
    if (verify->parsed()) return cmd_verify_paper(g);
    if (expo->parsed()) return cmd_exposedness(g, expo_in, samples);
  } catch (const ParseError& e) {
    return fail_report(g, active, parse_status_name(e.status()), e.what(),
                       kExitInput);
  } catch (const DimensionError& e) {
    return fail_report(g, active, "DimensionError", e.what(), kExitInput);
  } catch (const ContractViolation& e) {
    return fail_report(g, active, "ContractViolation", e.what(), kExitInput);
  } catch (const ConvergenceError& e) {
    return fail_report(g, active, "ConvergenceError", e.what(),
                       kExitNumerical);
  } catch (const Error& e) {
    return fail_report(g, active, "Error", e.what(), kExitNumerical);
  }
  return kExitInput;
}

}  // namespace pptcone
