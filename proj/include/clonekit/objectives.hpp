#pragma once

#include "clonekit/qcore.hpp"

namespace clonekit {

enum class CloneSide { A, B, sym };

// Positive operator R whose pairing Tr[S R] with a Choi matrix S gives the
// mean fidelity of the corresponding cloning map over the family's input set.
struct RObjective {
  int d_in = 2;
  int d_out = 4;
  Mat R;
  std::string kind;
};

// Mean single-clone objectives for 1->2 cloning on in (x) A (x) B.
//
// Universal: Haar average done in closed form,
//   int psi^T (x) psi dpsi = (I + d Phi+) / (d (d+1)),
// so R_A = (I + d Phi+_{in,A} (x) I_B) / (d (d+1)).
RObjective r_universal(int d, CloneSide which);

// Phase family: average over balanced superpositions on a uniform grid of
// `grid` points per phase (exact for the trigonometric degree <= 2 of the
// integrand as soon as grid >= 3; default 4).
RObjective r_phase(int d, CloneSide which, int grid = 4);

// Fourier family: equal-weight average over the computational basis and its
// Fourier-dual basis.
RObjective r_fourier(int d, CloneSide which);

// Monte Carlo Haar average, slow cross-check for r_universal.
RObjective r_universal_mc(int d, CloneSide which, int samples, uint64_t seed);

// 1->M qubit single-clone objective on in (x) sym(M); eigenvalues lie in
// {(2M+1)/(6M), 1/3, 1/6} and the bound F <= 2 r_max = (2M+1)/(3M).
RObjective r_sc_qubit_1M(int M);

// 1->M qubit global-fidelity objective, (1/(M+2)) Pi+_{M+1}^{T1}, projected
// onto in (x) sym(M); max eigenvalue 1/(M+1).
RObjective r_global_qubit_1M(int M);

// U-NOT objective on sym(N) (x) out qubit; (N+2) R is a projector and the
// optimum is (N+1)/(N+2).
RObjective r_unot(int N);

// Orthogonal-pair objective: mean single-clone fidelity of a map
// (psi (x) psi_perp) -> sym(M), averaged exactly over SU(2).
RObjective r_orthopair(int M);

// Convex asymmetry mixture p R_A + (1-p) R_B.
RObjective r_convex(const RObjective& ra, const RObjective& rb, double p);

}  // namespace clonekit
