#pragma once

#include <utility>

#include "clonekit/qcore.hpp"

namespace clonekit {

// Gaussian cloning of coherent states, tracked through first and second
// moments only.  Internal convention: coherent-state quadrature variance is
// 1/2 (one shot-noise unit = 1/2), so the added thermal photon number n̄ of a
// clone equals its added quadrature variance and F = 1/(1 + n̄).

struct GaussianCloneParams {
  int N = 1;
  int M = 2;
  double gamma = 0.0;   // 1->2 asymmetry
  double G = 2.0;       // intensity gain
  double t1 = 0.0;      // first beam-splitter amplitude
  double t2 = 0.0;      // second beam-splitter amplitude
  double nbar_A = 0.5;  // added thermal photons, clone A
  double nbar_B = 0.5;
};

struct CoherentPrior {
  bool uniform = true;
  double sigma2 = 0.0;
};

// F_A = 2/(2 + e^{2 gamma}), F_B = 2/(2 + e^{-2 gamma}); the added-noise
// product n̄_A n̄_B = 1/4 is saturated.
std::pair<double, double> cv_asym_fidelities(double gamma);

double cv_nm_fidelity(int N, int M);           // MN/(MN + M - N)
double cv_added_noise(int N, int M);           // n̄ = 1/N - 1/M

GaussianCloneParams cv_params_for(int N, int M);
GaussianCloneParams cv_params_for_gamma(double gamma);

// F = pi Q(alpha) = 1/(1 + n̄) for a displaced thermal clone.
double q_function(const cplx& beta, const cplx& alpha, double nbar);
double fidelity_from_nbar(double nbar);

// Symmetric 1->2 cloning by splitting, eight-port measurement and
// feed-forward displacement; returns per-clone mean amplitude transfer
// coefficient (must be 1) and the added noise variances.
struct FeedforwardMoments {
  double mean_gain_A = 0.0;
  double mean_gain_B = 0.0;
  double added_x_A = 0.0, added_p_A = 0.0;
  double added_x_B = 0.0, added_p_B = 0.0;
  double fidelity = 0.0;
};
FeedforwardMoments feedforward_clone_moments();

// Gaussian-prior cloning: mean fidelity and the optimal gain for input
// variance sigma2; below sigma2_th = (1+sqrt(2))/2 the best gain is 1.
struct FiniteWidthResult {
  double fidelity = 0.0;
  double gain = 1.0;
};
FiniteWidthResult finite_width_fidelity(double sigma2);
double finite_width_threshold();  // (1 + sqrt 2)/2
double finite_width_mean_fidelity(double sigma2, double G);

// Conjugate-input cloning: gain solving sqrt(M) = sqrt(G N) + sqrt((G-1) N'),
// the resulting fidelity 1/(1 + (G-1)/M), and the balanced closed form.
double conjugate_input_gain(int N, int Nprime, int M);
double conjugate_input_fidelity(int N, int Nprime, int M);
double balanced_conjugate_fidelity(int N, int M);  // 4 M^2 N/(4 M^2 N + (M-N)^2)

// Shot-noise convention adapters: added-noise variance expressed with vacuum
// variance 1/2 (internal) <-> vacuum variance 1.
double to_unit_vacuum(double value_half_convention);
double to_half_vacuum(double value_unit_convention);

}  // namespace clonekit
