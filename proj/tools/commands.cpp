// Copyright 2026 The qunc Authors
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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <CLI11.hpp>

#include "qunc/entropy.hpp"
#include "qunc/haar.hpp"
#include "qunc/totalinfo.hpp"

namespace qunc::cli {

namespace {

std::vector<double> random_probs(std::size_t n, Rng& rng) {
  std::exponential_distribution<double> expo;
  std::vector<double> p(n);
  for (double& x : p) x = expo(rng);
  const double s = std::accumulate(p.begin(), p.end(), 0.0);
  for (double& x : p) x /= s;
  return p;
}

std::size_t uniform_index(std::size_t lo, std::size_t hi, Rng& rng) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// U diag(spectrum) U^dagger for a Haar U.
DensityOperator random_density(std::size_t n, std::size_t rank, Rng& rng) {
  std::vector<double> spectrum = random_probs(rank, rng);
  spectrum.resize(n, 0.0);
  const Matrix u = sample_haar_unitary(n, rng);
  Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(spectrum.data(), static_cast<Eigen::Index>(n));
  return DensityOperator(u * d.cast<Complex>().asDiagonal() * u.adjoint());
}

// Splits outcomes 0..n-1 into m non-empty blocks and puts a random
// distribution on each block.
std::vector<ProbDist> random_block_components(std::size_t n, std::size_t m, Rng& rng) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> cuts(n - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(m - 1);
  std::sort(cuts.begin(), cuts.end());
  cuts.insert(cuts.begin(), 0);
  cuts.push_back(n);

  std::vector<ProbDist> out;
  for (std::size_t b = 0; b < m; ++b) {
    const std::size_t size = cuts[b + 1] - cuts[b];
    const auto local = random_probs(size, rng);
    std::vector<double> p(n, 0.0);
    for (std::size_t k = 0; k < size; ++k) p[order[cuts[b] + k]] = local[k];
    out.emplace_back(std::move(p));
  }
  return out;
}

VolumePostulateFixture random_volume_fixture(std::size_t cases, Rng& rng) {
  VolumePostulateFixture fx;
  for (std::size_t c = 0; c < cases; ++c) {
    // (i) m blocks of k outcomes sharing one shape; equal and random weights.
    const std::size_t m = uniform_index(2, 4, rng);
    const std::size_t k = uniform_index(1, 3, rng);
    const auto shape = random_probs(k, rng);
    std::vector<ProbDist> blocks;
    std::vector<DensityOperator> states;
    const Matrix u = sample_haar_unitary(m * k, rng);
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<double> p(m * k, 0.0);
      std::copy(shape.begin(), shape.end(), p.begin() + static_cast<std::ptrdiff_t>(b * k));
      if (m * k >= kMinDim) {
        Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(p.data(), static_cast<Eigen::Index>(p.size()));
        states.emplace_back(u * d.cast<Complex>().asDiagonal() * u.adjoint());
      }
      blocks.emplace_back(std::move(p));
    }
    fx.classical_mixtures.push_back({blocks, Weights::equal(m)});
    fx.classical_mixtures.push_back({blocks, Weights(random_probs(m, rng))});
    fx.quantum_mixtures.push_back({states, Weights::equal(m)});

    // (ii)
    const std::size_t da = uniform_index(2, 3, rng);
    const std::size_t db = uniform_index(2, 3, rng);
    fx.product_pairs.emplace_back(random_density(da, da, rng), random_density(db, uniform_index(1, db, rng), rng));
    fx.joint_states.push_back({random_density(da * db, uniform_index(1, da * db, rng), rng), da, db});

    // (iii)
    const std::size_t n = uniform_index(2, 6, rng);
    fx.conjugations.emplace_back(random_density(n, uniform_index(1, n, rng), rng), sample_haar_unitary(n, rng));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    fx.permutations.emplace_back(ProbDist(random_probs(n, rng)), std::move(perm));
  }
  return fx;
}

double entropy_bounds_violation(double h, std::size_t n) {
  return std::max({0.0, -h, h - std::log(static_cast<double>(n))});
}

}  // namespace

Report cmd_entropy(const InputDocument& doc, std::optional<double> tol) {
  Report report("entropy");
  report.set_inputs(serialize(doc));
  const double t = tol.value_or(kAxiomTol);
  switch (doc.kind) {
    case DocumentKind::distribution: {
      const auto p = doc.as_distribution();
      const double h = shannon(p).value;
      report.add_result("dim", p.size());
      report.add_result("H", h);
      report.add_result("V", volume_classical(p).value);
      report.add_check("entropy_bounds", "residual", entropy_bounds_violation(h, p.size()), t);
      break;
    }
    case DocumentKind::density: {
      const auto rho = doc.as_density();
      const double s = von_neumann(rho).value;
      report.add_result("dim", rho.dim());
      report.add_result("S", s);
      report.add_result("V", volume_quantum(rho).value);
      report.add_result("eigenvalues", std::vector<double>(rho.eigenvalues().begin(), rho.eigenvalues().end()));
      report.add_check("entropy_bounds", "residual", entropy_bounds_violation(s, rho.dim()), t);
      break;
    }
    case DocumentKind::basis:
      throw ValidationError("entropy expects a distribution or density document, got basis");
  }
  return report;
}

Report cmd_totalinfo(const InputDocument& doc, bool with_mub, std::optional<double> tol) {
  Report report("totalinfo");
  nlohmann::json inputs = serialize(doc);
  inputs["mub"] = with_mub;
  report.set_inputs(inputs);

  const auto rho = doc.as_density();
  const std::size_t n = rho.dim();
  const double info = info_quantum(rho).value;
  report.add_result("dim", n);
  report.add_result("I_rho", info);
  report.add_result("R_rho", ipr_quantum(rho).value);
  report.add_result("purity", purity(rho));
  const double upper = (static_cast<double>(n) - 1.0) / static_cast<double>(n);
  report.add_check("info_bounds", "residual", std::max({0.0, -info, info - upper}), tol.value_or(kAxiomTol));

  if (with_mub) {
    const auto mubs = build_mub(n);
    const auto add = check_additivity(rho, mubs);
    std::vector<double> ipr;
    for (const auto& b : mubs.bases()) ipr.push_back(ipr_classical(measure(rho, b)).value);
    report.add_result("I_bases", add.per_basis);
    report.add_result("I_bases_sum", add.lhs);
    report.add_result("R_bases", ipr);
    report.add_result("mub_overlap_deviation", mubs.max_overlap_deviation());
    const double t = tol.value_or(kIdentityTol);
    report.add_check("additivity", "residual", add.residual, t);
    report.add_check("reconstruction", "residual", check_reconstruction(rho, mubs), t);
    report.add_check("ipr_relation", "residual", check_ipr_relation(rho, mubs), t);
  }
  return report;
}

Report cmd_haar_verify(const HaarVerifyOptions& opts) {
  Report report("haar-verify");
  const DensityOperator rho = opts.density ? opts.density->as_density()
                                           : DensityOperator::from_pure(PureState::basis_state(opts.dim, 0));
  const std::size_t n = rho.dim();
  const auto nd = static_cast<double>(n);

  nlohmann::json inputs{{"dim", n}, {"samples", opts.samples}, {"seed", opts.seed}, {"workers", opts.workers}};
  inputs["density"] = opts.density ? serialize(*opts.density) : nlohmann::json("pure |0><0|");
  report.set_inputs(inputs);
  report.set_note("bit_reproducible", opts.workers <= 1);

  SamplingOptions base;
  base.samples = opts.samples;
  base.workers = std::max<std::size_t>(opts.workers, 1);

  SamplingOptions s = base;
  s.seed = RngSeed{opts.seed};
  const auto avg = verify_haar_average(rho, s);
  report.add_result("I_rho", avg.lhs);
  report.add_result("avg_info", avg.estimate.mean);
  report.add_result("avg_info_std_error", avg.estimate.std_error);
  report.add_result("scaled_avg_info", avg.rhs);
  report.add_result("scaled_avg_info_std_error", avg.rhs_std_error);
  report.add_check("haar_average", "z_score", avg.z_score, kZThreshold);

  s.seed = RngSeed{opts.seed + 1};
  const auto fourth = estimate_fourth_moment(n, s);
  const double target = 2.0 / (nd * (nd + 1.0));
  report.add_result("fourth_moment", fourth.mean);
  report.add_result("fourth_moment_std_error", fourth.std_error);
  report.add_result("fourth_moment_target", target);
  report.add_check("fourth_moment", "z_score", z_score(fourth.mean, target, fourth.std_error), kZThreshold);

  s.seed = RngSeed{opts.seed + 2};
  const auto ab = estimate_alpha_beta(n, s);
  report.add_result("alpha", ab.alpha);
  report.add_result("alpha_std_error", ab.alpha_std_error);
  report.add_result("alpha_target", 1.0 / (nd + 1.0));
  report.add_result("beta", ab.beta);
  report.add_result("beta_std_error", ab.beta_std_error);
  report.add_check("alpha", "z_score", z_score(ab.alpha, 1.0 / (nd + 1.0), ab.alpha_std_error), kZThreshold);
  report.add_check("beta_equals_minus_alpha_over_n", "z_score",
                   z_score(ab.beta + ab.alpha / nd, 0.0, ab.relation_std_error), kZThreshold);
  return report;
}

Report cmd_axioms(const AxiomsOptions& opts) {
  Report report("axioms");
  nlohmann::json inputs{{"trials", opts.trials}, {"seed", opts.seed}};
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : opts.components) comps.push_back(serialize(c));
  inputs["components"] = comps;
  if (opts.weights) inputs["weights"] = *opts.weights;
  report.set_inputs(inputs);

  const double tol = opts.tol.value_or(kAxiomTol);
  Rng rng = make_stream(RngSeed{opts.seed});

  // The worked mixture example: (1/2,1/3,1/6) as an even mixture of
  // (1,0,0) and (0,2/3,1/3).
  const ProbDist worked({0.5, 1.0 / 3, 1.0 / 6});
  const std::vector<ProbDist> worked_parts{ProbDist({1, 0, 0}), ProbDist({0, 2.0 / 3, 1.0 / 3})};
  report.add_result("H_1/2,1/3,1/6", shannon(worked).value);
  report.add_result("H_1,0,0", shannon(worked_parts[0]).value);
  report.add_result("H_0,2/3,1/3", shannon(worked_parts[1]).value);
  report.add_result("H_1/2,1/2", shannon(ProbDist::uniform(2)).value);
  report.add_check("worked_example_grouping", "residual", check_grouping_mixture(worked_parts, Weights::equal(2)), tol);
  report.add_check("worked_example_faddeev", "residual", check_faddeev(worked), tol);

  double faddeev = 0.0, grouping = 0.0, recovered = 0.0, point_mass = 0.0;
  for (std::size_t t = 0; t < opts.trials; ++t) {
    const std::size_t n = 2 + t % 9;
    faddeev = std::max(faddeev, check_faddeev(ProbDist(random_probs(n + 1, rng))));

    const std::size_t outcomes = uniform_index(2, 10, rng);
    const std::size_t blocks = uniform_index(1, outcomes, rng);
    const auto parts = random_block_components(outcomes, blocks, rng);
    grouping = std::max(grouping, check_grouping_mixture(parts, Weights(random_probs(blocks, rng))));

    const ProbDist fine(random_probs(n + 1, rng));
    const auto dec = faddeev_decomposition(fine);
    const auto mixed = mix_dists(dec.components, dec.weights);
    double mismatch = 0.0;
    for (std::size_t j = 0; j < fine.size(); ++j) mismatch = std::max(mismatch, std::abs(mixed[j] - fine[j]));
    recovered = std::max({recovered, mismatch, check_grouping_mixture(dec.components, dec.weights)});

    std::vector<ProbDist> masses;
    for (std::size_t j = 0; j < outcomes; ++j) masses.push_back(ProbDist::point_mass(outcomes, j));
    point_mass = std::max(point_mass, check_grouping_mixture(masses, Weights(random_probs(outcomes, rng))));
  }
  report.add_check("faddeev_random", "residual", faddeev, tol);
  report.add_check("grouping_random", "residual", grouping, tol);
  report.add_check("faddeev_from_mixture", "residual", recovered, tol);
  report.add_check("point_mass_grouping", "residual", point_mass, tol);

  VolumePostulateTolerances vt;
  if (opts.tol) vt = {*opts.tol, *opts.tol, *opts.tol};
  const auto volume = check_volume_postulates(random_volume_fixture(std::min<std::size_t>(opts.trials, 100), rng), vt);
  report.add_check("volume_mixture", "residual", volume.mixture.residual, volume.mixture.tolerance);
  report.add_check("volume_subsystems", "residual", volume.subsystems.residual, volume.subsystems.tolerance);
  report.add_check("volume_invariance", "residual", volume.invariance.residual, volume.invariance.tolerance);

  if (!opts.components.empty()) {
    std::vector<ProbDist> parts;
    for (const auto& c : opts.components) parts.push_back(c.as_distribution());
    const Weights w = opts.weights ? Weights(*opts.weights) : Weights::equal(parts.size());
    report.add_check("user_grouping", "residual", check_grouping_mixture(parts, w), tol);
  }
  return report;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qunc: classical and quantum uncertainty measures"};
  app.require_subcommand(1);

  bool json = false;
  std::optional<double> tol;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "Machine-readable JSON report");
    sub->add_option("--tol", tol, "Override residual tolerances");
  };

  std::string file;
  auto* entropy = app.add_subcommand("entropy", "Shannon / von Neumann entropy and volume of an input");
  entropy->add_option("file", file, "distribution or density document")->required();
  add_common(entropy);

  bool mub = false;
  auto* totalinfo = app.add_subcommand("totalinfo", "Total information, inverse participation ratio, MUB identities");
  totalinfo->add_option("file", file, "density document")->required();
  totalinfo->add_flag("--mub", mub, "Check reconstruction/additivity/IPR over mutually unbiased bases");
  add_common(totalinfo);

  HaarVerifyOptions haar;
  std::string density_file;
  auto* haar_cmd = app.add_subcommand("haar-verify", "Monte Carlo check of the Haar-average identity");
  auto* dim_opt = haar_cmd->add_option("--dim", haar.dim, "Hilbert space dimension")->check(CLI::Range(2, 64));
  haar_cmd->add_option("--samples", haar.samples, "Monte Carlo samples per estimate");
  haar_cmd->add_option("--seed", haar.seed, "Master seed");
  haar_cmd->add_option("--density", density_file, "density document (default |0><0|)");
  haar_cmd->add_option("--parallel", haar.workers, "Worker threads (reports are then not bit-reproducible)")
      ->check(CLI::Range(1, 256));
  add_common(haar_cmd);

  AxiomsOptions axioms;
  std::vector<std::string> component_files;
  std::vector<double> weights;
  auto* axioms_cmd = app.add_subcommand("axioms", "Grouping axioms and volume postulates");
  axioms_cmd->add_option("--trials", axioms.trials, "Random trials per property");
  axioms_cmd->add_option("--seed", axioms.seed, "Seed for random fixtures");
  axioms_cmd->add_option("--component", component_files, "distribution document (repeatable)");
  axioms_cmd->add_option("--weights", weights, "Mixing weights for --component")->delimiter(',');
  add_common(axioms_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    std::optional<Report> report;
    if (entropy->parsed()) {
      report = cmd_entropy(load_document(file), tol);
    } else if (totalinfo->parsed()) {
      report = cmd_totalinfo(load_document(file), mub, tol);
    } else if (haar_cmd->parsed()) {
      if (!density_file.empty()) {
        haar.density = load_document(density_file);
        if (dim_opt->count() > 0 && haar.density->dim() != haar.dim) {
          throw DimensionError("--dim " + std::to_string(haar.dim) + " does not match density dimension " +
                               std::to_string(haar.density->dim()));
        }
      }
      report = cmd_haar_verify(haar);
    } else {
      axioms.tol = tol;
      for (const auto& f : component_files) axioms.components.push_back(load_document(f));
      if (!weights.empty()) axioms.weights = weights;
      report = cmd_axioms(axioms);
    }

    if (json) {
      out << report->to_json().dump(2) << "\n";
    } else {
      out << report->to_text();
    }
    return report->all_pass() ? kExitOk : kExitCheckFailed;
  } catch (const UnsupportedDimension& e) {
    err << "unsupported dimension: " << e.what() << "\n";
    return kExitUnsupportedDimension;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace qunc::cli
