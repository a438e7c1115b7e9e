// Copyright 2026 The Triality Authors
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

#include "triality/cli/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <sstream>

#include "triality/bloch.hpp"
#include "triality/channels.hpp"
#include "triality/cli/output.hpp"
#include "triality/cli/sampling.hpp"
#include "triality/measures.hpp"

namespace triality::cli {

namespace {

class Suite {
 public:
  Suite(std::string name, double tolerance) {
    result_.name = std::move(name);
    result_.tolerance = tolerance;
  }

  /// Records one comparison; `what` describes it if it fails first.
  void check(double deviation, const std::string& what) {
    ++result_.checks;
    if (!std::isfinite(deviation)) deviation = INFINITY;
    result_.worst_deviation = std::max(result_.worst_deviation, deviation);
    if (!(deviation <= result_.tolerance)) fail(what + " (deviation " + format_number(deviation) + ")");
  }

  void fail(const std::string& what) {
    if (result_.failures++ == 0) result_.first_failure = what;
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

template <class Fn>
void guarded(Suite& suite, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    suite.fail(e.what());
  }
}

struct Builder {
  std::string name;
  std::size_t dim;
  std::function<KrausChannel(double)> make;
};

std::vector<Builder> channel_builders(bool inject_fault) {
  std::vector<Builder> b{
      {"ad_qubit", 2, [](double g) { return amplitude_damping_qubit(g); }},
      {"pd_qubit", 2, [](double g) { return phase_damping_qubit(g); }},
      {"ad_qutrit_cascade", 3, [](double g) { return cascade_ad_qutrit(g, g); }},
      {"ad_qutrit_paper", 3, [](double g) { return literal_kraus_ad_qutrit(g, g); }},
      {"pd_qutrit", 3, [](double g) { return phase_damping_qutrit(g); }},
  };
  if (inject_fault) {
    b.push_back({"faulty_ad_qubit", 2, [](double g) {
                   KrausChannel good = amplitude_damping_qubit(g);
                   std::vector<ComplexMatrix> ops;
                   for (const ComplexMatrix& e : good.operators()) ops.push_back(0.999 * e);
                   return KrausChannel("faulty_ad_qubit", std::move(ops));
                 }});
  }
  return b;
}

// 101-point grid on [0, 1], endpoints first.
std::vector<double> boundary_first_grid() {
  std::vector<double> g{0.0, 1.0};
  for (int i = 1; i < 100; ++i) g.push_back(i / 100.0);
  return g;
}

std::string describe(const std::string& builder, double gamma) {
  return builder + " at gamma=" + format_number(gamma);
}

double residual_identity_gap(const DensityMatrix& rho) {
  const double n = static_cast<double>(rho.dim());
  return std::abs(entanglement2_residual(rho) - n / (n - 1.0) * (1.0 - purity(rho)));
}

}  // namespace

bool VerifyReport::passed() const noexcept {
  return !suites.empty() &&
         std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  out << "verify: seed=" << seed << " cases=" << cases << "\n";
  std::size_t failed = 0;
  for (const SuiteResult& s : suites) {
    out << (s.passed() ? "PASS  " : "FAIL  ") << s.name << "  checks=" << s.checks
        << "  failures=" << s.failures << "  worst=" << format_number(s.worst_deviation)
        << "  tol=" << format_number(s.tolerance) << "\n";
    if (!s.passed()) {
      ++failed;
      if (!s.first_failure.empty()) out << "      first failure: " << s.first_failure << "\n";
    }
  }
  out << (failed == 0 ? "all " + std::to_string(suites.size()) + " suites passed"
                      : std::to_string(failed) + " of " + std::to_string(suites.size()) +
                            " suites failed")
      << " in " << std::lround(seconds * 1000.0) << " ms\n";
  return out.str();
}

VerifyReport run_verify(const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.seed = options.seed;
  report.cases = std::max<std::size_t>(options.cases, 1);
  const std::size_t cases = report.cases;
  Rng rng(options.seed);

  const std::vector<Builder> builders = channel_builders(options.inject_fault);
  const std::vector<double> grid = boundary_first_grid();

  // Completeness of every builder over the full grid.
  {
    Suite s("cptp_completeness", kIdentityTolerance);
    for (const Builder& b : builders) {
      for (double g : grid) {
        guarded(s, [&] { s.check(validate_cptp(b.make(g)), describe(b.name, g)); });
      }
    }
    report.suites.push_back(s.take());
  }

  // Triality persistence for channel outputs, boundary states at gamma in {0,1} first.
  Suite boundary("channel_triality_boundary", kRecordSumTolerance);
  Suite persistence("channel_triality", kRecordSumTolerance);
  Suite residual("residual_identity", kIdentityTolerance);
  auto run_channel = [&](Suite& suite, const Builder& b, const DensityMatrix& rho, double g) {
    try {
      const DensityMatrix out = apply(b.make(g), rho);
      const ComplementarityTriple t = measure_triple(out);
      suite.check(std::abs(t.sum() - 1.0), describe(b.name, g));
      if (!t.in_range()) suite.fail(describe(b.name, g) + ": measure outside [0, 1]");
      residual.check(residual_identity_gap(out), describe(b.name, g));
    } catch (const std::exception& e) {
      suite.fail(describe(b.name, g) + ": " + e.what());
    }
  };
  for (const Builder& b : builders) {
    for (const DensityMatrix& rho : boundary_states(b.dim)) {
      for (double g : {0.0, 1.0}) run_channel(boundary, b, rho, g);
    }
  }
  // At most 1000 random states per dimension, each over the full grid.
  const std::size_t channel_states = std::min<std::size_t>(cases, 1000);
  for (std::size_t dim : {std::size_t{2}, std::size_t{3}}) {
    for (std::size_t k = 0; k < channel_states; ++k) {
      const DensityMatrix rho = random_density_matrix(rng, dim);
      for (const Builder& b : builders) {
        if (b.dim != dim) continue;
        for (double g : grid) run_channel(persistence, b, rho, g);
      }
    }
  }
  report.suites.push_back(boundary.take());
  report.suites.push_back(persistence.take());

  // Closed forms against the Kraus-numeric pipeline.
  {
    Suite s("closed_form_agreement", kIdentityTolerance);
    auto compare = [&](const std::string& name, const ComplementarityTriple& cf,
                       const DensityMatrix& out, double g) {
      const ComplementarityTriple num = measure_triple(out);
      s.check(std::max({std::abs(cf.v2 - num.v2), std::abs(cf.p2 - num.p2),
                        std::abs(cf.e2 - num.e2)}),
              describe(name, g));
    };
    for (std::size_t k = 0; k < cases; ++k) guarded(s, [&] {
      const DensityMatrix q2 = random_density_matrix(rng, 2);
      const DensityMatrix q3 = random_density_matrix(rng, 3);
      for (int i = 0; i <= 10; ++i) {
        const double g = i / 10.0;
        compare("ad_qubit", predict_ad_qubit(q2, g), apply(amplitude_damping_qubit(g), q2), g);
        compare("pd_qubit", predict_pd_qubit(q2, g), apply(phase_damping_qubit(g), q2), g);
        compare("pd_qutrit", predict_pd_qutrit(q3, g), apply(phase_damping_qutrit(g), q3), g);
      }
    });
    report.suites.push_back(s.take());
  }

  // Channel structure: dephasing keeps populations, decay scales coherences,
  // the cascade equals its two sequential steps.
  {
    Suite s("channel_structure", 1e-13);
    Suite dephasing("dephasing_populations", 1e-14);
    for (std::size_t k = 0; k < cases; ++k) guarded(s, [&] {
      const DensityMatrix q2 = random_density_matrix(rng, 2);
      const DensityMatrix q3 = random_density_matrix(rng, 3);
      const double g1 = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      const double g2 = std::uniform_real_distribution<double>(0.0, 1.0)(rng);

      const DensityMatrix pd2 = apply(phase_damping_qubit(g1), q2);
      const DensityMatrix pd3 = apply(phase_damping_qutrit(g1), q3);
      double diag = 0.0;
      for (std::size_t i = 0; i < 2; ++i) diag = std::max(diag, std::abs(pd2(i, i) - q2(i, i)));
      for (std::size_t i = 0; i < 3; ++i) diag = std::max(diag, std::abs(pd3(i, i) - q3(i, i)));
      dephasing.check(diag, "dephasing populations");

      const DensityMatrix ad2 = apply(amplitude_damping_qubit(g1), q2);
      s.check(std::abs(std::abs(ad2(0, 1)) - std::sqrt(1.0 - g1) * std::abs(q2(0, 1))),
              "qubit decay coherence scaling");

      const DensityMatrix cascade = apply(cascade_ad_qutrit(g1, g2), q3);
      const double f[3] = {1.0, std::sqrt(1.0 - g1), std::sqrt(1.0 - g2)};
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
          s.check(std::abs(cascade(i, j) - f[i] * f[j] * q3(i, j)), "cascade coherence scaling");
        }
      }
      const KrausChannel sequential = compose(qutrit_decay_step(DecayStep::kUpper, g2),
                                              qutrit_decay_step(DecayStep::kLower, g1));
      s.check(max_abs_diff(apply(sequential, q3).matrix(), cascade.matrix()),
              "cascade vs sequential decay steps");
    });
    report.suites.push_back(s.take());
    report.suites.push_back(dephasing.take());
  }

  // Pure system-detector construction.
  {
    Suite sum("pure_composite_triality", kRecordSumTolerance);
    Suite pairwise("pairwise_vs_residual", kRecordSumTolerance);
    Suite trace("partial_trace_oracle", kIdentityTolerance);
    std::uniform_int_distribution<std::size_t> det_dim(1, 4);
    for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
      for (std::size_t k = 0; k < cases; ++k) guarded(sum, [&] {
        const PureState psi = random_pure_state(rng, n);
        const std::vector<PureState> dets = random_detectors(rng, n, det_dim(rng));
        const DetectorGram gram = gram_from_detector_states(dets);
        const ComplementarityTriple t = triality_triple(psi, gram);
        sum.check(std::abs(t.sum() - 1.0), "n=" + std::to_string(n));
        const DensityMatrix reduced = reduced_density(psi, gram);
        pairwise.check(std::abs(t.e2 - entanglement2_residual(reduced)), "n=" + std::to_string(n));
        const DensityMatrix traced = partial_trace_detector(composite_state(psi, dets), n, dets[0].dim());
        trace.check(max_abs_diff(traced.matrix(), reduced.matrix()), "n=" + std::to_string(n));
        residual.check(residual_identity_gap(reduced), "reduced state n=" + std::to_string(n));
      });
    }
    report.suites.push_back(sum.take());
    report.suites.push_back(pairwise.take());
    report.suites.push_back(trace.take());
  }

  // Pauli and Gell-Mann coordinates.
  {
    Suite rep("representation_agreement", kIdentityTolerance);
    Suite trip("coordinate_round_trip", 1e-13);
    for (std::size_t k = 0; k < cases; ++k) guarded(rep, [&] {
      const DensityMatrix q2 = random_density_matrix(rng, 2);
      const BlochVector b = pauli_decompose(q2);
      rep.check(std::abs(visibility2(q2) - 4.0 * (b.rho1 * b.rho1 + b.rho2 * b.rho2)), "qubit V^2");
      rep.check(std::abs(predictability2(q2) - 4.0 * b.rho3 * b.rho3), "qubit P^2");
      trip.check(max_abs_diff(pauli_reconstruct(b).matrix(), q2.matrix()), "Pauli round trip");

      const DensityMatrix q3 = random_density_matrix(rng, 3);
      const GellMannVector s = gellmann_decompose(q3);
      const double v2 = s[1] * s[1] + s[2] * s[2] + s[4] * s[4] + s[5] * s[5] + s[6] * s[6] + s[7] * s[7];
      rep.check(std::abs(visibility2(q3) - v2), "qutrit V^2");
      rep.check(std::abs(predictability2(q3) - (s[3] * s[3] + s[8] * s[8])), "qutrit P^2");
      trip.check(max_abs_diff(gellmann_reconstruct(s).matrix(), q3.matrix()), "Gell-Mann round trip");
      residual.check(residual_identity_gap(q2), "random qubit");
      residual.check(residual_identity_gap(q3), "random qutrit");
    });
    report.suites.push_back(rep.take());
    report.suites.push_back(trip.take());
  }
  report.suites.push_back(residual.take());

  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace triality::cli
