#pragma once

#include "clonekit/qcore.hpp"

namespace clonekit {

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

// Coefficient matrix a_{m,n} of the double-Bell ansatz; fully determines a
// Heisenberg (Weyl-Heisenberg-covariant) cloning machine.
struct AnsatzMatrix {
  int d = 2;
  Mat a;  // d x d, sum |a_{m,n}|^2 = 1

  bool is_normalized(double tol = kHermTol) const { return std::abs(a.squaredNorm() - 1.0) < tol; }
};

// Positive operator on in (x) out isomorphic to a CP map; trace preserving
// iff Tr_out S = I_in.
struct ChoiOperator {
  int d_in = 2;
  int d_out = 4;
  Mat S;

  Mat trace_out() const;                            // Tr_out S (d_in x d_in)
  bool trace_preserving(double tol = 1e-8) const;   // Tr_out S = I_in
  double psd_violation() const;                     // max(0, -min eig)
  // rho_out = Tr_in[(rho_in^T (x) I) S]
  Mat apply(const Mat& rho_in) const;
};

enum class HeisenbergFamily { universal, fourier, phase };

enum class ClonerFamily {
  universal,
  fourier,
  phase,
  pauli_custom,
  asym_universal,
  pc_qubit_nm,
  orthopair,
  unot
};

// Parameter bundle naming one machine of the catalogue; validate() checks the
// family-specific ranges and throws std::invalid_argument on violations.
struct ClonerSpec {
  ClonerFamily family = ClonerFamily::universal;
  int d = 2;
  int N = 1;
  int M = 2;
  double asymmetry = 0.0;  // F_A, theta, or p as the family dictates

  void validate() const;
};

// ---------------------------------------------------------------------------
// Double-Bell ansatz machinery
// ---------------------------------------------------------------------------

// |A> = sum a_{m,n} B_{m,n}_{in,A} (x) B_{m,-n}_{B,C}, a normalized.
KetVector heisenberg_ansatz_state(const AnsatzMatrix& a);

// Choi operator of the 1->2 machine: S = d Tr_C |A><A| on (in, A, B).
ChoiOperator heisenberg_choi(const AnsatzMatrix& a);

// b_{m,n} = (1/d) sum_{x,y} gamma^{nx-my} a_{x,y}
AnsatzMatrix fourier_dual(const AnsatzMatrix& a);

// Clone fidelities for a given input state, from the error-probability
// distribution: F(psi) = sum |a_{m,n}|^2 |<psi|E_{m,n}|psi>|^2.
double ansatz_fidelity_A(const AnsatzMatrix& a, const KetVector& psi);
double ansatz_fidelity_B(const AnsatzMatrix& a, const KetVector& psi);

// Optimal one-knob families, parametrized by the clone-A fidelity.
AnsatzMatrix universal_ansatz(int d, double F_A);
AnsatzMatrix fourier_ansatz(int d, double F_A);
AnsatzMatrix phase_ansatz(int d, double F_A);

// Symmetric points (F_A = F_B) of the three families.
double universal_symmetric_fidelity(int d);  // (d+3)/(2(d+1))
double fourier_symmetric_fidelity(int d);    // 1/2 + 1/sqrt(4d)
double phase_symmetric_fidelity(int d);      // 1/d + (d-2+sqrt(d^2+4d-4))/(4d)

// Best F_B at fixed F_A along the family (closed form for universal/fourier,
// inner 1-d maximization over the ansatz manifold for phase).
double heisenberg_tradeoff_FB(HeisenbergFamily family, int d, double F_A);

// ---------------------------------------------------------------------------
// N -> M universal cloning
// ---------------------------------------------------------------------------

// Choi operator of the optimal universal N->M cloner, in the symmetric bases
// of input (N qudits) and output (M qudits).
ChoiOperator universal_nm_choi(int d, int N, int M);

double universal_nm_fidelity(int d, int N, int M);   // single-clone closed form
double universal_nm_global_fidelity(int d, int N, int M);
double universal_shrinking_factor(int d, int N, int M);

// Isometry sym(N) -> sym(M) (x) sym(M-N) for qubits: M clones plus M-N
// anti-clones in the ancilla.
Mat universal_nm_qubit_isometry(int N, int M);

// Single-clone / anti-clone fidelities of the isometry output for input
// |N psi> with psi = |0>.
double universal_nm_qubit_clone_fidelity(int N, int M);
double universal_nm_qubit_anticlone_fidelity(int N, int M);

// ---------------------------------------------------------------------------
// Asymmetric universal 1 -> 2
// ---------------------------------------------------------------------------

// |psi> -> alpha |psi>_A |Phi+>_BC + beta |psi>_B |Phi+>_AC,
// alpha^2 + beta^2 + 2 alpha beta / d = 1.
Mat asym_universal_isometry(int d, double alpha, double beta);
std::pair<double, double> asym_universal_fidelities(int d, double alpha, double beta);
// beta for a requested F_A, plus the alpha solving the normalization.
std::pair<double, double> asym_universal_params_for_FA(int d, double F_A);

// ---------------------------------------------------------------------------
// Phase-covariant machines
// ---------------------------------------------------------------------------

enum class PcQubitVariant { ancilla, economical, asymmetric };

// 1->2 qubit phase-covariant cloner. ancilla: in -> A,B,C. economical:
// in -> A,B. asymmetric: in -> A,B with knob theta in [0, pi/2].
Mat pc_qubit_12_isometry(PcQubitVariant variant, double theta = 0.0);

// Economical N->M qubit map |N,k> -> |M,k+shift> on symmetric bases.
Mat pc_qubit_nm_map(int N, int M, int shift);
// Optimal shift(s): one for matching parity of N,M; the two extremal maps
// otherwise (mix them with any weight, the fidelity is unchanged).
std::vector<int> pc_qubit_nm_optimal_shifts(int N, int M);
double pc_qubit_nm_fidelity(int N, int M);           // closed-form sums
// Convex mixture of the two extremal maps where they exist (weight w on the
// first shift); only the two extremal maps are enumerated.
double pc_qubit_nm_mixture_fidelity(int N, int M, double w);
double pc_equatorial_fidelity_of_map(const Mat& map, int N, int M, int grid = 8);

// 1->2 phase-covariant qudit cloner (with ancilla), in -> A,B,C.
Mat pc_qudit_12_isometry(int d);
double pc_qudit_12_fidelity(int d);  // 1/4 + 1/(2d) + sqrt(d^2+4d-4)/(4d)

// ---------------------------------------------------------------------------
// Orthogonal-pair cloner and U-NOT
// ---------------------------------------------------------------------------

// Isometry (2 qubits, psi (x) psi_perp) -> sym(M) (x) sym(M), built from the
// covariant coefficients alpha_{j,M}.
Mat orthopair_cloner(int M);
double orthopair_alpha(int j, int M);
double orthopair_fidelity(int M);        // (1 + sqrt((M+2)/(3M)))/2
double orthopair_parallel_fidelity(int M);  // 2->M universal, (3M+2)/(4M)

double unot_fidelity(int N);  // (N+1)/(N+2)

}  // namespace clonekit
