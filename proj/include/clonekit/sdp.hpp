#pragma once

#include <functional>

#include "clonekit/cloners.hpp"
#include "clonekit/objectives.hpp"

namespace clonekit {

// max Tr[S R] over S >= 0 with Tr_out S = I_in.
struct SdpProblem {
  RObjective R;
};

struct SdpResiduals {
  double trace = 0.0;            // ||Tr_out S - I||_max
  double psd = 0.0;              // max(0, -min eig S)
  double complementarity = 0.0;  // ||(R - lambda (x) I) S||_max
  double dual = 0.0;             // max(0, -min eig (lambda (x) I - R))
  double gap = 0.0;              // Tr lambda' - Tr[S R], lambda' dual-feasible

  double worst() const;
};

struct SdpSolution {
  ChoiOperator S;
  double value = 0.0;
  Mat lambda;           // Tr_out[S R], Hermitized
  SdpResiduals residuals;
  int iterations = 0;
  bool converged = false;
  bool certified = false;
  double upper_bound = 0.0;  // Tr of the dual-feasible shift of lambda
};

// Splitting iteration alternating the PSD-cone projection and the affine
// projection onto {Tr_out S = I}; `polish` (e.g. a commutant projection) is
// applied once after convergence, before certification.
SdpSolution solve(const SdpProblem& problem, double tol = 1e-7, int max_iter = 50000,
                  uint64_t seed = 0,
                  const std::function<Mat(const Mat&)>& polish = {});

// Certificate per the extremal conditions (R - lambda (x) I) S = 0 and
// lambda (x) I - R >= 0; fills residuals/upper_bound/certified of `sol`.
void check_certificate(SdpSolution& sol, const RObjective& R, double tol);

// F <= d_in * max eig R.
double eig_bound(const RObjective& R);

// Exact average over the discrete Weyl-Heisenberg group acting as
// E* (x) E (x) E on in (x) A (x) B; maps any feasible S to the commutant
// without changing Tr[S R] for WH-covariant R.
Mat wh_twirl_12(const Mat& S, int d);

// Affine projection onto {Tr_out S = I_in}.
Mat project_trace_preserving(const Mat& S, int d_in, int d_out);

struct TradeoffPoint {
  double p = 0.5;
  double FA = 0.0;
  double FB = 0.0;
  bool certified = false;
};

// SDP sweep of the asymmetry mixture p F_A + (1-p) F_B for one of the three
// Heisenberg families.
std::vector<TradeoffPoint> asym_tradeoff(HeisenbergFamily family, int d,
                                         const std::vector<double>& p_grid, double tol = 1e-7);

}  // namespace clonekit
