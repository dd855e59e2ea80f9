#include <doctest.h>

#include <cmath>

#include "clonekit/cloners.hpp"
#include "clonekit/objectives.hpp"
#include "clonekit/sdp.hpp"

using namespace clonekit;

namespace {

// random trace-preserving Choi from a random isometry-like Kraus set
Mat random_tp_choi(int d_in, int d_out, Rng& rng) {
  const int kraus = 2;
  std::vector<Mat> K(kraus, Mat(d_out, d_in));
  Mat gram = Mat::Zero(d_in, d_in);
  for (auto& k : K) {
    for (int i = 0; i < d_out; ++i)
      for (int j = 0; j < d_in; ++j) k(i, j) = cplx(rng.gauss(), rng.gauss());
    gram += k.adjoint() * k;
  }
  // normalize: K -> K gram^{-1/2}
  Eigen::SelfAdjointEigenSolver<Mat> es(gram);
  Mat inv_sqrt = es.operatorInverseSqrt();
  Mat S = Mat::Zero(static_cast<long long>(d_in) * d_out, static_cast<long long>(d_in) * d_out);
  for (auto& k : K) {
    Mat kn = k * inv_sqrt;
    Vec vec(static_cast<long long>(d_in) * d_out);
    for (int i = 0; i < d_in; ++i)
      for (int a = 0; a < d_out; ++a) vec(static_cast<long long>(i) * d_out + a) = kn(a, i);
    S += vec * vec.adjoint();
  }
  return S;
}

}  // namespace

TEST_CASE("solver recovers the closed-form optima") {
  struct Case {
    RObjective r;
    double expected;
  };
  std::vector<Case> cases;
  cases.push_back({r_universal(2, CloneSide::sym), 5.0 / 6.0});
  cases.push_back({r_phase(2, CloneSide::sym), 0.5 + 1.0 / std::sqrt(8.0)});
  cases.push_back({r_unot(1), 2.0 / 3.0});
  for (auto& c : cases) {
    const SdpSolution s = solve({c.r}, 1e-8);
    CHECK(s.converged);
    CHECK(s.certified);
    CHECK(s.value == doctest::Approx(c.expected).epsilon(1e-6));
    CHECK(s.residuals.worst() < 1e-7);
  }
}

TEST_CASE("certificate accepts the analytic universal Choi") {
  const RObjective R = r_universal(2, CloneSide::sym);
  SdpSolution sol;
  sol.S = heisenberg_choi(universal_ansatz(2, universal_symmetric_fidelity(2)));
  sol.value = (sol.S.S * R.R).trace().real();
  check_certificate(sol, R, 1e-8);
  CHECK(sol.certified);
  CHECK(sol.residuals.complementarity < 1e-9);
  CHECK(sol.residuals.dual < 1e-9);
  CHECK(std::abs(sol.residuals.gap) < 1e-9);
}

TEST_CASE("certificate rejects a random feasible point") {
  Rng rng(3);
  const RObjective R = r_universal(2, CloneSide::sym);
  SdpSolution sol;
  sol.S = ChoiOperator{2, 4, random_tp_choi(2, 4, rng)};
  sol.value = (sol.S.S * R.R).trace().real();
  check_certificate(sol, R, 1e-8);
  CHECK_FALSE(sol.certified);
  CHECK(sol.residuals.gap > 1e-3);  // strictly suboptimal
  CHECK(sol.value < 5.0 / 6.0);
}

TEST_CASE("eigenvalue bound") {
  CHECK(eig_bound(r_sc_qubit_1M(2)) == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
  CHECK(eig_bound(r_global_qubit_1M(2)) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  // the bound is a valid relaxation for every solved problem
  for (int d : {2, 3}) {
    const RObjective r = r_universal(d, CloneSide::sym);
    const SdpSolution s = solve({r}, 1e-8);
    CHECK(eig_bound(r) >= s.value - 1e-8);
  }
}

TEST_CASE("orthopair: eigenvalue bound is loose, certificate closes the gap") {
  const RObjective r = r_orthopair(2);
  const double bound = eig_bound(r);
  const SdpSolution s = solve({r}, 1e-8);
  CHECK(s.converged);
  CHECK(s.certified);
  CHECK(s.value == doctest::Approx(orthopair_fidelity(2)).epsilon(1e-6));
  // the naive spectral bound overshoots and cannot be saturated here
  CHECK(bound > s.value + 1e-3);
}

TEST_CASE("twirling a feasible point never lowers the mean fidelity") {
  Rng rng(8);
  for (int d : {2, 3}) {
    const RObjective rp = r_phase(d, CloneSide::sym);
    const RObjective rf = r_fourier(d, CloneSide::sym);
    for (int trial = 0; trial < 10; ++trial) {
      const Mat S = random_tp_choi(d, d * d, rng);
      const Mat St = wh_twirl_12(S, d);
      CHECK((St * rp.R).trace().real() >= (S * rp.R).trace().real() - 1e-10);
      CHECK((St * rf.R).trace().real() >= (S * rf.R).trace().real() - 1e-10);
      // the twirl stays feasible
      CHECK(min_eigenvalue(St) > -1e-10);
      CHECK((partial_trace(St, {d, d * d}, {0}) - Mat::Identity(d, d)).cwiseAbs().maxCoeff() <
            1e-10);
    }
  }
}

TEST_CASE("covariant solutions commute with the group after one projection") {
  for (int d : {2, 3}) {
    auto twirl = [d](const Mat& s) { return wh_twirl_12(s, d); };
    const SdpSolution s = solve({r_universal(d, CloneSide::sym)}, 1e-8, 50000, 0, twirl);
    CHECK(s.certified);
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n) {
        const Mat e = error_operator({m, n, d});
        const Mat g = kron(e.conjugate(), kron(e, e));
        CHECK((g * s.S.S - s.S.S * g).cwiseAbs().maxCoeff() < 1e-7);
      }
  }
}

TEST_CASE("deterministic solves") {
  const RObjective r = r_universal(2, CloneSide::sym);
  const SdpSolution a = solve({r}, 1e-9);
  const SdpSolution b = solve({r}, 1e-9);
  CHECK(a.value == b.value);
  CHECK((a.S.S - b.S.S).cwiseAbs().maxCoeff() == 0.0);
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("asymmetry trade-off matches the family parametrizations") {
  const std::vector<double> grid{0.2, 0.35, 0.5, 0.65, 0.8};
  for (int d : {2, 3}) {
    const auto uni = asym_tradeoff(HeisenbergFamily::universal, d, grid, 1e-8);
    for (const auto& pt : uni) {
      CHECK(pt.certified);
      CHECK(heisenberg_tradeoff_FB(HeisenbergFamily::universal, d, pt.FA) ==
            doctest::Approx(pt.FB).epsilon(1e-5));
    }
  }
  CHECK_THROWS_AS(asym_tradeoff(HeisenbergFamily::universal, 2, {0.0}, 1e-7),
                  std::invalid_argument);
}
