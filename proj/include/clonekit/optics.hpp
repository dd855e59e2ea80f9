#pragma once

#include <map>
#include <utility>

#include "clonekit/qcore.hpp"

namespace clonekit {

// ---------------------------------------------------------------------------
// Sparse Fock states
// ---------------------------------------------------------------------------

// Sparse bosonic state: occupation tuple -> amplitude, truncated at a total
// photon number cutoff.  Post-selected states carry their success probability
// separately (returned by the operations below).
struct FockState {
  int n_modes = 0;
  int cutoff = 0;
  std::map<std::vector<int>, cplx> amps;

  double norm() const;
  FockState normalized() const;
  cplx overlap(const FockState& other) const;  // <this|other>
  int total_photons(const std::vector<int>& occ) const;

  static FockState vacuum(int n_modes, int cutoff);
  static FockState number(const std::vector<int>& occ, int cutoff);
};

FockState apply_create(const FockState& s, int mode);
FockState apply_annihilate(const FockState& s, int mode);

// Beam splitter per a_out^d = r a_in^d + t b_in^d, b_out^d = r b_in^d - t a_in^d.
struct BeamSplitter {
  int mode_a = 0;
  int mode_b = 1;
  double r = 1.0 / 1.4142135623730951;
  double t = 1.0 / 1.4142135623730951;
};

FockState apply_beam_splitter(const FockState& s, const BeamSplitter& bs);

// Keeps only occupations satisfying the predicate; returns the branch and
// its probability (squared norm).
std::pair<FockState, double> post_select(const FockState& s,
                                         const std::function<bool(const std::vector<int>&)>& keep);

// ---------------------------------------------------------------------------
// Stimulated parametric down-conversion
// ---------------------------------------------------------------------------

enum class PdcGeometry { qubit_singlet, qudit_timebin };

struct PdcParams {
  double lambda = 0.3;  // tanh(kappa t), < 1
  PdcGeometry geometry = PdcGeometry::qubit_singlet;
  int d = 2;  // local dimension for the time-bin geometry
};

// Full PDC evolution exp(lambda Bdag) (1-lambda^2)^((n_tot+pairs)/2) exp(-lambda B)
// of `input`, truncated at input.cutoff.
// Mode layout: qubit_singlet -> (aV, aH, bV, bH); qudit_timebin ->
// (a_1..a_d, b_1..b_d).
FockState pdc_evolve(const PdcParams& params, const FockState& input);

// Branch with exactly M signal photons, its probability weight, and the
// truncation deficit of the full evolved state.
struct PdcBranch {
  FockState state;       // normalized
  double probability;    // weight of the M-photon branch
  double deficit;        // 1 - total captured probability at this cutoff
};
PdcBranch pdc_output(const PdcParams& params, const FockState& input, int select_M);

// Universal-cloner branch for N input photons in one signal mode; returns the
// single-clone fidelity computed from the Fock amplitudes.
double pdc_clone_fidelity(const PdcParams& params, int N, int M);

// Single-clone fidelity of the qudit PDC cloner in exact rational arithmetic,
// reduced; equals the closed-form universal N->M fidelity.
std::pair<long long, long long> dc_qudit_fidelity_rational(int N, int M, int d);
double dc_qudit_fidelity(int N, int M, int d);
std::pair<long long, long long> universal_nm_fidelity_rational(int N, int M, int d);

// ---------------------------------------------------------------------------
// Hong-Ou-Mandel symmetrization
// ---------------------------------------------------------------------------

// Cascades M-1 beam splitters over the spatial modes of one photon each,
// post-selecting all photons bunched in spatial mode 0.  Mode layout:
// spatial (x) polarization, V before H (mode = 2*spatial + pol).
// Returns the bunched polarization state (2-mode Fock on (V,H) of mode 0,
// isomorphic to sym(M)) and the success probability.
struct HomResult {
  FockState bunched;     // normalized, modes (V, H)
  double probability;
};
HomResult hom_symmetrize(const FockState& input, int M, const std::vector<double>& T);

std::vector<double> hom_optimal_transmittances(int M);  // T_j = j/(j+1)

// 1->M universal cloning of a polarization qubit by symmetrization with
// maximally mixed blanks; also the singlet-fed 1->2 variant that leaves an
// anti-clone behind.
struct SymmetrizationCloneReport {
  double clone_fidelity = 0.0;
  double anticlone_fidelity = -1.0;  // < 0 when not applicable
  double success_probability = 0.0;
};
SymmetrizationCloneReport clone_via_symmetrization(const Eigen::Vector2cd& psi, int M);
SymmetrizationCloneReport clone_via_symmetrization_singlet(const Eigen::Vector2cd& psi);

// ---------------------------------------------------------------------------
// Asymmetric filtering / partial teleportation
// ---------------------------------------------------------------------------

// Output of the symmetric 1->2 cloner with its anti-clone, ordered (A, B, C).
KetVector symmetric_cloner_state(const Eigen::Vector2cd& psi);

// Applies Pi^- + a Pi^+ to two qubit subsystems of a multi-qubit pure state.
std::pair<KetVector, double> asym_filter(const KetVector& state, int sub1, int sub2, double a);

struct AsymmetryReport {
  double p;  // asymmetry parameter of the resulting cloner
  double FA;
  double FB;
  double probability;
};
// Filter on (B, C) of the symmetric cloner output: p = (3-a)/(3+a).
AsymmetryReport asym_filter_cloner(const Eigen::Vector2cd& psi, double a);
// Partial teleportation of |psi>_B through |Psi->_AC: p = (1-a)/(1+a).
AsymmetryReport partial_teleport_cloner(const Eigen::Vector2cd& psi, double a);

// Closed-form clone fidelities of the p-parametrized asymmetric cloner.
std::pair<double, double> asym_p_fidelities(double p);

// ---------------------------------------------------------------------------
// Orthogonal-pair cloning via PDC
// ---------------------------------------------------------------------------

struct OrthopairPdcResult {
  FockState branch;      // normalized (aV, aH, bV, bH) amplitudes
  double fidelity;       // single-clone fidelity of the M clones
  double probability;
};
OrthopairPdcResult orthopair_pdc(double lambda, int M, int cutoff_margin = 4);

double orthopair_yopt(int M);

// ---------------------------------------------------------------------------
// Phase-covariant beam-splitter cloner
// ---------------------------------------------------------------------------

struct PcBsResult {
  Mat conditional_map;   // 4 x 2, (A,B) polarization qubits <- input qubit
  double probability;    // success probability for equatorial inputs
  double fidelity;       // equatorial single-clone fidelity
};
// PBS stage followed by a polarization-independent beam splitter of
// reflectance r^2, post-selected on one photon per output arm.
PcBsResult pc_beamsplitter_cloner(double r2);

double pc_bs_optimal_r2();  // (1 + 1/sqrt(3))/2

// ---------------------------------------------------------------------------
// Amplifier fidelity
// ---------------------------------------------------------------------------

double amplifier_fidelity(double n_in, double n_out, double Q);

}  // namespace clonekit
