#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace clonekit {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Absolute tolerance for Hermiticity / PSD checks throughout the library.
inline constexpr double kHermTol = 1e-10;

// Thrown when a requested tensor-product space exceeds the configured cap.
// The cap defaults to 4096 and can be overridden with CLONEKIT_MAX_DIM.
struct SizeCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int max_dim();
void check_cap(long long dim);

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

// Pure state over an ordered list of subsystems.  Basis indexing is
// mixed-radix with the leftmost subsystem most significant; Kronecker
// products follow the same order.
struct KetVector {
  std::vector<int> dims;
  Vec amps;

  int dim() const { return static_cast<int>(amps.size()); }
  double norm() const { return amps.norm(); }
  bool is_normalized(double tol = 1e-12) const { return std::abs(norm() - 1.0) < tol; }
  KetVector normalized() const;
};

struct DensityOperator {
  std::vector<int> dims;
  Mat mat;

  int dim() const { return static_cast<int>(mat.rows()); }
  // Hermitian to 1e-12-ish, eigenvalues >= -1e-10, unit trace.
  bool is_state(double tol = kHermTol) const;
  static DensityOperator from_pure(const KetVector& psi);
};

// Label (m, n) of a generalized Bell state / error operator in dimension d.
struct BellIndex {
  int m = 0;
  int n = 0;
  int d = 2;
};

// Occupation label of a symmetric-subspace basis vector: occ[j] particles in
// local state |j>, summing to M.  For qubits this is |M,k> with k = occ[1].
struct SymBasisLabel {
  int d = 2;
  int M = 1;
  std::vector<int> occ;
};

// ---------------------------------------------------------------------------
// Elementary algebra
// ---------------------------------------------------------------------------

Mat kron(const Mat& a, const Mat& b);
KetVector tensor(const KetVector& a, const KetVector& b);
KetVector basis_ket(const std::vector<int>& dims, const std::vector<int>& idx);

long long total_dim(const std::vector<int>& dims);

// Index arithmetic for the mixed-radix convention.
long long pack_index(const std::vector<int>& dims, const std::vector<int>& idx);
std::vector<int> unpack_index(const std::vector<int>& dims, long long flat);

// Embeds an operator acting on the listed subsystems (in that order) into the
// full space, identity elsewhere.
Mat embed_op(const std::vector<int>& dims, const std::vector<int>& subs, const Mat& op);

// ---------------------------------------------------------------------------
// Bell states and Weyl-Heisenberg error operators, gamma = exp(+2*pi*i/d)
// ---------------------------------------------------------------------------

// B_{m,n} = (1/sqrt d) sum_j gamma^{nj} |j>|j+m>
KetVector bell_state(const BellIndex& idx);

// E_{m,n} = sum_j gamma^{jn} |j+m><j|
Mat error_operator(const BellIndex& idx);

// ---------------------------------------------------------------------------
// Partial operations
// ---------------------------------------------------------------------------

DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& keep);
Mat partial_trace(const Mat& op, const std::vector<int>& dims, const std::vector<int>& keep);
Mat partial_transpose(const Mat& op, const std::vector<int>& dims, int subsystem);

// ---------------------------------------------------------------------------
// Symmetric subspace
// ---------------------------------------------------------------------------

// All occupation labels of fixed (d, M), lexicographic in occ.
std::vector<SymBasisLabel> sym_basis_labels(int d, int M);
long long sym_dim(int d, int M);  // D(M,d) = C(d+M-1, M)

KetVector sym_basis_vector(const SymBasisLabel& label);

// Isometry from the symmetric basis (columns, label order) into (C^d)^{oM}.
Mat sym_isometry(int d, int M);

// Projector onto the fully symmetric subspace of M qudits; rank D(M,d).
Mat symmetric_projector(int d, int M);

// Qubit convenience: |M,k> has k particles in |1>.
int sym_qubit_index(int M, int k);

// Promotes a one-body operator h to the symmetric subspace of M qudits via
// mode-occupation algebra (no d^M embedding): sum_{p,q} h(p,q) a_p^dag a_q.
Mat sym_one_body_operator(int d, int M, const Mat& h);

// One-qudit reduced density matrix of a state given in the symmetric basis:
// rho1(i,j) = <a_j^dag a_i> / M.
Mat sym_single_particle_rdm(int d, int M, const Vec& amps);

// ---------------------------------------------------------------------------
// Fidelity and Bloch helpers
// ---------------------------------------------------------------------------

double fidelity(const DensityOperator& rho, const KetVector& psi);

Eigen::Vector3d bloch_vector(const DensityOperator& rho);
DensityOperator bloch_state(const Eigen::Vector3d& m);

// ---------------------------------------------------------------------------
// Misc numerical helpers shared by the modules
// ---------------------------------------------------------------------------

bool approx_hermitian(const Mat& a, double tol = kHermTol);
double min_eigenvalue(const Mat& hermitian);
double max_eigenvalue(const Mat& hermitian);

double binomial(int n, int k);

// Deterministic Haar-random states / unitaries for property tests.
struct Rng {
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t state;
  double gauss();
  uint64_t next();
};
KetVector random_state(int d, Rng& rng);
Mat random_unitary(int d, Rng& rng);
Mat random_density(int d, Rng& rng);

}  // namespace clonekit
