#include "clonekit/sdp.hpp"

#include <algorithm>
#include <cmath>

namespace clonekit {

namespace {

Mat psd_projection(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (h + h.adjoint()));
  const Eigen::VectorXd ev = es.eigenvalues();
  Mat out = Mat::Zero(h.rows(), h.cols());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) <= 0.0) continue;
    out += ev(i) * es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
  }
  return out;
}

Mat trace_out(const Mat& S, int d_in, int d_out) {
  Mat t = Mat::Zero(d_in, d_in);
  for (int i = 0; i < d_in; ++i)
    for (int j = 0; j < d_in; ++j)
      t(i, j) = S.block(static_cast<long long>(i) * d_out, static_cast<long long>(j) * d_out,
                        d_out, d_out)
                    .trace();
  return t;
}

Mat kron_with_identity(const Mat& w, int d_out) {
  const int d_in = static_cast<int>(w.rows());
  Mat out = Mat::Zero(static_cast<long long>(d_in) * d_out, static_cast<long long>(d_in) * d_out);
  for (int i = 0; i < d_in; ++i)
    for (int j = 0; j < d_in; ++j)
      for (int a = 0; a < d_out; ++a)
        out(static_cast<long long>(i) * d_out + a, static_cast<long long>(j) * d_out + a) = w(i, j);
  return out;
}

}  // namespace

double SdpResiduals::worst() const {
  return std::max({trace, psd, complementarity, dual, std::abs(gap)});
}

Mat project_trace_preserving(const Mat& S, int d_in, int d_out) {
  const Mat defect = trace_out(S, d_in, d_out) - Mat::Identity(d_in, d_in);
  return S - kron_with_identity(defect / d_out, d_out);
}

Mat wh_twirl_12(const Mat& S, int d) {
  const long long n = static_cast<long long>(d) * d * d;
  if (S.rows() != n) throw std::invalid_argument("wh_twirl_12: size mismatch");
  Mat acc = Mat::Zero(n, n);
  for (int m = 0; m < d; ++m)
    for (int nn = 0; nn < d; ++nn) {
      const Mat e = error_operator({m, nn, d});
      const Mat g = kron(e.conjugate(), kron(e, e));
      acc += g * S * g.adjoint();
    }
  return acc / static_cast<double>(d * d);
}

double eig_bound(const RObjective& R) {
  return R.d_in * max_eigenvalue(R.R);
}

void check_certificate(SdpSolution& sol, const RObjective& R, double tol) {
  const int d_in = R.d_in, d_out = R.d_out;
  const Mat& S = sol.S.S;

  sol.residuals.trace =
      (trace_out(S, d_in, d_out) - Mat::Identity(d_in, d_in)).cwiseAbs().maxCoeff();
  sol.residuals.psd = std::max(0.0, -min_eigenvalue(S));

  // lambda = Tr_out[S R], Hermitized
  const Mat SR = S * R.R;
  Mat lambda = trace_out(SR, d_in, d_out);
  lambda = 0.5 * (lambda + lambda.adjoint()).eval();
  sol.lambda = lambda;

  const Mat lam_I = kron_with_identity(lambda, d_out);
  sol.residuals.complementarity = ((R.R - lam_I) * S).cwiseAbs().maxCoeff();
  const double dual_min = min_eigenvalue(lam_I - R.R);
  sol.residuals.dual = std::max(0.0, -dual_min);

  // shifting lambda by the dual violation gives a rigorous upper bound
  const double shift = std::max(0.0, -dual_min);
  sol.upper_bound = lambda.trace().real() + shift * d_in;
  sol.residuals.gap = sol.upper_bound - sol.value;

  sol.certified = sol.residuals.trace < tol && sol.residuals.psd < tol &&
                  sol.residuals.complementarity < tol && sol.residuals.dual < tol &&
                  std::abs(sol.residuals.gap) < tol;
}

SdpSolution solve(const SdpProblem& problem, double tol, int max_iter, uint64_t seed,
                  const std::function<Mat(const Mat&)>& polish) {
  const RObjective& R = problem.R;
  const int d_in = R.d_in, d_out = R.d_out;
  const long long n = static_cast<long long>(d_in) * d_out;
  if (R.R.rows() != n) throw std::invalid_argument("solve: objective size mismatch");
  check_cap(n);

  // ADMM on  min -<R,X> + i_{TP}(X) + i_{PSD}(Z),  X = Z, scaled dual U.
  double rho = std::max(1e-3, max_eigenvalue(R.R));
  const double alpha = 1.7;  // over-relaxation

  Mat Z = Mat::Identity(n, n) / d_out;  // maximally mixed channel, feasible
  if (seed != 0) {
    Rng rng(seed);
    Mat g(n, n);
    for (long long i = 0; i < n; ++i)
      for (long long j = 0; j < n; ++j) g(i, j) = cplx(rng.gauss(), rng.gauss());
    Z += 1e-3 * (g * g.adjoint()) / static_cast<double>(n);
    Z = project_trace_preserving(Z, d_in, d_out);
  }
  Mat U = Mat::Zero(n, n);
  Mat X = Z;

  SdpSolution sol;
  int it = 0;
  for (; it < max_iter; ++it) {
    X = project_trace_preserving(Z - U + R.R / rho, d_in, d_out);
    const Mat Xr = alpha * X + (1.0 - alpha) * Z;
    const Mat Z_prev = Z;
    Z = psd_projection(Xr + U);
    U += Xr - Z;

    if (it % 25 == 0 || it == max_iter - 1) {
      const double r_primal = (X - Z).cwiseAbs().maxCoeff();
      const double r_dual = rho * (Z - Z_prev).cwiseAbs().maxCoeff();
      if (r_primal < 0.05 * tol && r_dual < 0.05 * tol) {
        sol.converged = true;
        ++it;
        break;
      }
      // keep the residuals balanced
      if (it > 0 && it % 100 == 0) {
        if (r_primal > 10.0 * r_dual) {
          rho *= 2.0;
          U /= 2.0;
        } else if (r_dual > 10.0 * r_primal) {
          rho /= 2.0;
          U *= 2.0;
        }
      }
    }
  }
  sol.iterations = it;

  Mat S = psd_projection(project_trace_preserving(Z, d_in, d_out));
  S = project_trace_preserving(S, d_in, d_out);
  if (polish) S = project_trace_preserving(polish(S), d_in, d_out);
  sol.S = ChoiOperator{d_in, d_out, S};
  sol.value = (S * R.R).trace().real();
  check_certificate(sol, R, tol);
  return sol;
}

std::vector<TradeoffPoint> asym_tradeoff(HeisenbergFamily family, int d,
                                         const std::vector<double>& p_grid, double tol) {
  RObjective ra, rb;
  switch (family) {
    case HeisenbergFamily::universal:
      ra = r_universal(d, CloneSide::A);
      rb = r_universal(d, CloneSide::B);
      break;
    case HeisenbergFamily::fourier:
      ra = r_fourier(d, CloneSide::A);
      rb = r_fourier(d, CloneSide::B);
      break;
    case HeisenbergFamily::phase:
      ra = r_phase(d, CloneSide::A);
      rb = r_phase(d, CloneSide::B);
      break;
  }
  auto twirl = [d](const Mat& s) { return wh_twirl_12(s, d); };
  std::vector<TradeoffPoint> curve;
  for (double p : p_grid) {
    if (p <= 0.0 || p >= 1.0) throw std::invalid_argument("asym_tradeoff: p must be in (0,1)");
    SdpProblem prob{r_convex(ra, rb, p)};
    SdpSolution s = solve(prob, tol, 50000, 0, twirl);
    TradeoffPoint pt;
    pt.p = p;
    pt.FA = (s.S.S * ra.R).trace().real();
    pt.FB = (s.S.S * rb.R).trace().real();
    pt.certified = s.certified;
    curve.push_back(pt);
  }
  return curve;
}

}  // namespace clonekit
