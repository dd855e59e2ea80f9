#include <doctest.h>

#include <cmath>

#include "clonekit/cvclone.hpp"
#include "clonekit/registry.hpp"

using namespace clonekit;

TEST_CASE("asymmetric Gaussian fidelities and the uncertainty floor") {
  auto [fa0, fb0] = cv_asym_fidelities(0.0);
  CHECK(fa0 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(fb0 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));

  auto [fa1, fb1] = cv_asym_fidelities(1.0);
  CHECK(fa1 == doctest::Approx(2.0 / (2.0 + std::exp(2.0))).epsilon(1e-14));
  CHECK(fb1 == doctest::Approx(2.0 / (2.0 + std::exp(-2.0))).epsilon(1e-14));

  for (double gamma : {-1.2, -0.3, 0.0, 0.4, 2.0}) {
    const GaussianCloneParams p = cv_params_for_gamma(gamma);
    CHECK(p.nbar_A * p.nbar_B == doctest::Approx(0.25).epsilon(1e-12));
    // F = 1/(1 + nbar) recovers the displayed pair
    auto [fa, fb] = cv_asym_fidelities(gamma);
    CHECK(fidelity_from_nbar(p.nbar_A) == doctest::Approx(fa).epsilon(1e-12));
    CHECK(fidelity_from_nbar(p.nbar_B) == doctest::Approx(fb).epsilon(1e-12));
  }
}

TEST_CASE("N->M Gaussian fidelity") {
  CHECK(cv_nm_fidelity(1, 2) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(cv_nm_fidelity(2, 3) == doctest::Approx(6.0 / 7.0).epsilon(1e-14));
  // measurement limit N/(N+1)
  for (int N = 1; N <= 4; ++N)
    CHECK(std::abs(cv_nm_fidelity(N, 2000000) - N / (N + 1.0)) < 1e-5);
  // information spreading: monotone decreasing in M
  for (int N = 1; N <= 5; ++N)
    for (int M = N; M < 20; ++M)
      CHECK(cv_nm_fidelity(N, M) > cv_nm_fidelity(N, M + 1));
  CHECK_THROWS_AS(cv_nm_fidelity(3, 2), std::invalid_argument);

  // unity-mean-gain bookkeeping: G = M/N and noise (G-1)/M per clone
  const GaussianCloneParams p = cv_params_for(2, 5);
  CHECK(p.G == doctest::Approx(2.5));
  CHECK(fidelity_from_nbar((p.G - 1.0) / p.M) == doctest::Approx(cv_nm_fidelity(2, 5)));
  CHECK(p.nbar_A == doctest::Approx(cv_added_noise(2, 5)));
}

TEST_CASE("Q-function fidelity identity") {
  const double pi = 3.14159265358979323846;
  for (double nbar : {0.0, 0.25, 0.5, 1.0, 3.0}) {
    const cplx alpha(0.7, -1.1);
    CHECK(pi * q_function(alpha, alpha, nbar) ==
          doctest::Approx(fidelity_from_nbar(nbar)).epsilon(1e-12));
  }
}

TEST_CASE("measurement-feedforward scheme moments") {
  const FeedforwardMoments m = feedforward_clone_moments();
  CHECK(m.mean_gain_A == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.mean_gain_B == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.added_x_A == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(m.added_p_A == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(m.added_x_B == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(m.added_p_B == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(m.fidelity == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("finite-width prior") {
  const double th = finite_width_threshold();
  CHECK(th == doctest::Approx(0.5 * (1.0 + std::sqrt(2.0))));

  // the two branch formulas agree at the threshold, and the gain reaches 1
  const double above = (4.0 * th + 2.0) / (6.0 * th + 1.0);
  const double below = 1.0 / (1.0 + (3.0 - 2.0 * std::sqrt(2.0)) * th);
  CHECK(above == doctest::Approx(below).epsilon(1e-12));
  CHECK(finite_width_fidelity(th).gain == doctest::Approx(1.0).epsilon(1e-12));

  // narrow prior clones perfectly; wide prior recovers the covariant cloner
  CHECK(finite_width_fidelity(1e-9).fidelity == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(finite_width_fidelity(10.0).fidelity == doctest::Approx(42.0 / 61.0).epsilon(1e-12));
  CHECK(std::abs(finite_width_fidelity(1e6).fidelity - 2.0 / 3.0) < 1e-5);

  // monotone decreasing in sigma^2
  double prev = 1.1;
  for (double s2 = 0.05; s2 < 12.0; s2 *= 1.4) {
    const double f = finite_width_fidelity(s2).fidelity;
    CHECK(f < prev);
    prev = f;
  }

  // the optimal gain maximizes the mean fidelity over G >= 1
  for (double s2 : {0.4, 1.0, th + 0.2, 3.0}) {
    const FiniteWidthResult r = finite_width_fidelity(s2);
    CHECK(r.fidelity ==
          doctest::Approx(finite_width_mean_fidelity(s2, r.gain)).epsilon(1e-12));
    for (double g : {1.0, 1.1, 1.5, 2.5})
      CHECK(finite_width_mean_fidelity(s2, g) <= r.fidelity + 1e-12);
  }
  CHECK_THROWS_AS(finite_width_fidelity(0.0), std::invalid_argument);
}

TEST_CASE("conjugate-input cloning") {
  CHECK(conjugate_input_gain(1, 0, 2) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(conjugate_input_gain(1, 1, 2) == doctest::Approx(9.0 / 8.0).epsilon(1e-12));
  CHECK(conjugate_input_fidelity(1, 1, 2) == doctest::Approx(16.0 / 17.0).epsilon(1e-12));

  // the balanced gain stays on the gain equation
  for (int N : {1, 2, 3})
    for (int M : {N + 1, 2 * N + 1, 4 * N}) {
      const double G = conjugate_input_gain(N, N, M);
      CHECK(std::sqrt(G * N) + std::sqrt((G - 1.0) * N) ==
            doctest::Approx(std::sqrt(static_cast<double>(M))).epsilon(1e-12));
      CHECK(conjugate_input_fidelity(N, N, M) ==
            doctest::Approx(balanced_conjugate_fidelity(N, M)).epsilon(1e-12));
    }

  // M -> infinity limit 4N/(4N+1)
  for (int N : {1, 2, 5})
    CHECK(std::abs(balanced_conjugate_fidelity(N, 2000000) - 4.0 * N / (4.0 * N + 1.0)) < 1e-5);

  CHECK(balanced_conjugate_fidelity(1, 2) ==
        doctest::Approx(eval_formula("cv-conj-balanced", {{"N", 1}, {"M", 2}})).epsilon(1e-14));
}

TEST_CASE("shot-noise convention adapters") {
  // sigma_A sigma_B = 1/2 in the half-unit convention is nbar product 1/4
  const GaussianCloneParams p = cv_params_for_gamma(0.7);
  CHECK(std::sqrt(p.nbar_A * p.nbar_B) == doctest::Approx(0.5).epsilon(1e-12));
  // expressed with vacuum variance 1, the added-variance product is 1
  CHECK(to_unit_vacuum(p.nbar_A) * to_unit_vacuum(p.nbar_B) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(to_half_vacuum(to_unit_vacuum(0.37)) == doctest::Approx(0.37).epsilon(1e-15));
}
