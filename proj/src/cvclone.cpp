#include "clonekit/cvclone.hpp"

#include <cmath>

namespace clonekit {

std::pair<double, double> cv_asym_fidelities(double gamma) {
  return {2.0 / (2.0 + std::exp(2.0 * gamma)), 2.0 / (2.0 + std::exp(-2.0 * gamma))};
}

double cv_added_noise(int N, int M) {
  if (M < N || N < 1) throw std::invalid_argument("cv_added_noise: need M >= N >= 1");
  return 1.0 / N - 1.0 / M;
}

double cv_nm_fidelity(int N, int M) { return fidelity_from_nbar(cv_added_noise(N, M)); }

GaussianCloneParams cv_params_for(int N, int M) {
  if (M < N || N < 1) throw std::invalid_argument("cv_params_for: need M >= N >= 1");
  GaussianCloneParams p;
  p.N = N;
  p.M = M;
  p.gamma = 0.0;
  p.G = static_cast<double>(M) / N;
  p.t1 = 0.0;
  p.t2 = 1.0 / std::sqrt(2.0);
  p.nbar_A = p.nbar_B = cv_added_noise(N, M);
  return p;
}

GaussianCloneParams cv_params_for_gamma(double gamma) {
  GaussianCloneParams p;
  p.N = 1;
  p.M = 2;
  p.gamma = gamma;
  const double sh = std::sinh(gamma);
  p.t1 = -std::sqrt(2.0) * sh / std::sqrt(1.0 + 2.0 * sh * sh);
  p.G = 1.0 + std::cosh(2.0 * gamma);
  p.t2 = std::exp(2.0 * gamma) / std::sqrt(1.0 + std::exp(4.0 * gamma));
  p.nbar_A = 0.5 * std::exp(2.0 * gamma);
  p.nbar_B = 0.5 * std::exp(-2.0 * gamma);
  return p;
}

double q_function(const cplx& beta, const cplx& alpha, double nbar) {
  const double pi = 3.14159265358979323846;
  return std::exp(-std::norm(beta - alpha) / (1.0 + nbar)) / (pi * (1.0 + nbar));
}

double fidelity_from_nbar(double nbar) {
  if (nbar < 0.0) throw std::invalid_argument("fidelity_from_nbar: nbar >= 0");
  return 1.0 / (1.0 + nbar);
}

FeedforwardMoments feedforward_clone_moments() {
  // Modes entering the scheme: a_in, v1, v2 (measurement ancilla), v3 (final
  // splitter).  Track each output as coefficients over (a_in, v_k, v_k^dag).
  struct LinMode {
    cplx a = 0.0;          // coefficient of a_in
    cplx v[3] = {0, 0, 0};       // coefficients of v1..v3
    cplx vdag[3] = {0, 0, 0};    // coefficients of v1^dag..v3^dag
  };
  const double s = 1.0 / std::sqrt(2.0);

  // splitter: a' = (a_in + v1)/sqrt 2, tap = (a_in - v1)/sqrt 2
  LinMode a_prime;
  a_prime.a = s;
  a_prime.v[0] = s;
  LinMode tap;
  tap.a = s;
  tap.v[0] = -s;

  // eight-port measurement of lambda = tap + v2^dag, then displacement of a'
  // by lambda: a_disp = a' + tap + v2^dag = sqrt(2) a_in + v2^dag
  LinMode a_disp;
  a_disp.a = a_prime.a + tap.a;
  for (int k = 0; k < 3; ++k) {
    a_disp.v[k] = a_prime.v[k] + tap.v[k];
    a_disp.vdag[k] = a_prime.vdag[k] + tap.vdag[k];
  }
  a_disp.vdag[1] += 1.0;

  // final balanced splitter with v3
  LinMode cloneA, cloneB;
  cloneA.a = s * a_disp.a;
  cloneB.a = s * a_disp.a;
  for (int k = 0; k < 3; ++k) {
    cloneA.v[k] = s * a_disp.v[k];
    cloneB.v[k] = s * a_disp.v[k];
    cloneA.vdag[k] = s * a_disp.vdag[k];
    cloneB.vdag[k] = s * a_disp.vdag[k];
  }
  cloneA.v[2] += s;
  cloneB.v[2] -= s;

  auto added_noise = [](const LinMode& m) {
    // vacuum terms c v + d v^dag contribute |c + conj(d)|^2/2 to x and
    // |c - conj(d)|^2/2 to p (vacuum quadrature variance 1/2)
    double x = 0.0, p = 0.0;
    for (int k = 0; k < 3; ++k) {
      x += 0.5 * std::norm(m.v[k] + std::conj(m.vdag[k]));
      p += 0.5 * std::norm(m.v[k] - std::conj(m.vdag[k]));
    }
    return std::make_pair(x, p);
  };

  FeedforwardMoments out;
  out.mean_gain_A = cloneA.a.real();
  out.mean_gain_B = cloneB.a.real();
  auto [xa, pa] = added_noise(cloneA);
  auto [xb, pb] = added_noise(cloneB);
  out.added_x_A = xa;
  out.added_p_A = pa;
  out.added_x_B = xb;
  out.added_p_B = pb;
  out.fidelity = fidelity_from_nbar(0.5 * (xa + pa));
  return out;
}

double finite_width_threshold() { return 0.5 * (1.0 + std::sqrt(2.0)); }

double finite_width_mean_fidelity(double sigma2, double G) {
  if (sigma2 <= 0.0 || G < 1.0)
    throw std::invalid_argument("finite_width_mean_fidelity: sigma2 > 0, G >= 1");
  return 2.0 / (G + 1.0 + 2.0 * sigma2 * (2.0 + G - 2.0 * std::sqrt(2.0 * G)));
}

FiniteWidthResult finite_width_fidelity(double sigma2) {
  if (sigma2 <= 0.0) throw std::invalid_argument("finite_width_fidelity: sigma2 > 0");
  if (sigma2 >= finite_width_threshold()) {
    const double G = 8.0 * sigma2 * sigma2 / ((1.0 + 2.0 * sigma2) * (1.0 + 2.0 * sigma2));
    return {(4.0 * sigma2 + 2.0) / (6.0 * sigma2 + 1.0), G};
  }
  return {1.0 / (1.0 + (3.0 - 2.0 * std::sqrt(2.0)) * sigma2), 1.0};
}

double conjugate_input_gain(int N, int Nprime, int M) {
  if (M < N || N < 1 || Nprime < 0)
    throw std::invalid_argument("conjugate_input_gain: need M >= N >= 1, N' >= 0");
  if (Nprime == 0) return static_cast<double>(M) / N;
  // g^2 (N - N') - 2 sqrt(M N) g + (M + N') = 0 with g = sqrt(G)
  const double n = N, np = Nprime, m = M;
  if (N == Nprime) {
    const double g = (m + n) / (2.0 * std::sqrt(m * n));
    return g * g;
  }
  const double A = n - np, B = -2.0 * std::sqrt(m * n), C = m + np;
  const double disc = B * B - 4.0 * A * C;
  if (disc < 0.0) throw std::invalid_argument("conjugate_input_gain: no real gain");
  const double g1 = (-B + std::sqrt(disc)) / (2.0 * A);
  const double g2 = (-B - std::sqrt(disc)) / (2.0 * A);
  double G = -1.0;
  for (double g : {g1, g2}) {
    if (g < 1.0) continue;
    // the physical root satisfies the un-squared gain equation
    if (std::abs(std::sqrt(m) - g * std::sqrt(n) - std::sqrt(g * g - 1.0) * std::sqrt(np)) < 1e-9)
      G = std::max(G, g * g);
  }
  if (G < 1.0) throw std::invalid_argument("conjugate_input_gain: no root with G >= 1");
  return G;
}

double conjugate_input_fidelity(int N, int Nprime, int M) {
  const double G = conjugate_input_gain(N, Nprime, M);
  return fidelity_from_nbar((G - 1.0) / M);
}

double balanced_conjugate_fidelity(int N, int M) {
  if (M < N || N < 1) throw std::invalid_argument("balanced_conjugate_fidelity: M >= N >= 1");
  const double m = M, n = N;
  return 4.0 * m * m * n / (4.0 * m * m * n + (m - n) * (m - n));
}

double to_unit_vacuum(double value_half_convention) { return 2.0 * value_half_convention; }

double to_half_vacuum(double value_unit_convention) { return 0.5 * value_unit_convention; }

}  // namespace clonekit
