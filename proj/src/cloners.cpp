#include "clonekit/cloners.hpp"

#include <cmath>
#include <numeric>

namespace clonekit {

namespace {

constexpr double kPi = 3.14159265358979323846;

cplx root_of_unity(int d, long long k) {
  return std::polar(1.0, 2.0 * kPi * static_cast<double>(((k % d) + d) % d) / d);
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Normalized symmetric qubit state with `a` particles in spinor u and `b` in
// spinor w, u and w orthonormal.  Returned in sym_basis_labels(2, a+b) order.
Vec sym_state_of_spinors(const Eigen::Vector2cd& u, int a, const Eigen::Vector2cd& w, int b) {
  const int M = a + b;
  // polynomial in the two creation operators, coeff[q] multiplies a0^(deg-q) a1^q
  std::vector<cplx> coeff{1.0};
  auto mul = [&](const Eigen::Vector2cd& s) {
    std::vector<cplx> next(coeff.size() + 1, 0.0);
    for (size_t q = 0; q < coeff.size(); ++q) {
      next[q] += coeff[q] * s(0);
      next[q + 1] += coeff[q] * s(1);
    }
    coeff.swap(next);
  };
  for (int i = 0; i < a; ++i) mul(u);
  for (int i = 0; i < b; ++i) mul(w);
  Vec amps = Vec::Zero(M + 1);
  for (int q = 0; q <= M; ++q)
    amps(sym_qubit_index(M, q)) = coeff[q] * std::sqrt(factorial(M - q) * factorial(q));
  const double n = amps.norm();
  return amps / n;
}

Eigen::Vector2cd perp_spinor(const Eigen::Vector2cd& psi) {
  // |psi_perp> = [-conj(beta), conj(alpha)], the convention that makes the
  // covariant cloning formulas linear.
  return {-std::conj(psi(1)), std::conj(psi(0))};
}

}  // namespace

// ---------------------------------------------------------------------------
// Choi operator
// ---------------------------------------------------------------------------

void ClonerSpec::validate() const {
  if (d < 2) throw std::invalid_argument("ClonerSpec: d >= 2");
  switch (family) {
    case ClonerFamily::universal:
    case ClonerFamily::fourier:
    case ClonerFamily::phase:
      if (N != 1 && family != ClonerFamily::universal)
        throw std::invalid_argument("ClonerSpec: Heisenberg families are 1->2 machines");
      if (asymmetry != 0.0 && (asymmetry < 1.0 / d || asymmetry > 1.0))
        throw std::invalid_argument("ClonerSpec: F_A outside [1/d, 1]");
      break;
    case ClonerFamily::pauli_custom:
      break;
    case ClonerFamily::asym_universal:
      if (asymmetry < 0.0 || asymmetry > 1.0)
        throw std::invalid_argument("ClonerSpec: beta outside [0, 1]");
      break;
    case ClonerFamily::pc_qubit_nm:
      if (d != 2 || M <= N || N < 1)
        throw std::invalid_argument("ClonerSpec: pc N->M needs d = 2, M > N >= 1");
      break;
    case ClonerFamily::orthopair:
      if (M < 2) throw std::invalid_argument("ClonerSpec: orthopair needs M >= 2");
      break;
    case ClonerFamily::unot:
      if (N < 1) throw std::invalid_argument("ClonerSpec: unot needs N >= 1");
      break;
  }
  if (M < N) throw std::invalid_argument("ClonerSpec: M >= N required");
}

Mat ChoiOperator::trace_out() const {
  return partial_trace(S, {d_in, d_out}, {0});
}

bool ChoiOperator::trace_preserving(double tol) const {
  return (trace_out() - Mat::Identity(d_in, d_in)).cwiseAbs().maxCoeff() <= tol;
}

double ChoiOperator::psd_violation() const {
  return std::max(0.0, -min_eigenvalue(S));
}

Mat ChoiOperator::apply(const Mat& rho_in) const {
  if (rho_in.rows() != d_in) throw std::invalid_argument("ChoiOperator::apply: dim mismatch");
  Mat rho_out = Mat::Zero(d_out, d_out);
  for (int i = 0; i < d_in; ++i)
    for (int j = 0; j < d_in; ++j) {
      // (rho^T)_{ij} = rho_{ji}
      if (rho_in(j, i) == cplx(0.0)) continue;
      rho_out += rho_in(j, i) * S.block(static_cast<long long>(i) * d_out,
                                        static_cast<long long>(j) * d_out, d_out, d_out);
    }
  return rho_out;
}

// ---------------------------------------------------------------------------
// Double-Bell ansatz
// ---------------------------------------------------------------------------

KetVector heisenberg_ansatz_state(const AnsatzMatrix& a) {
  if (!a.is_normalized()) throw std::invalid_argument("ansatz matrix not normalized");
  const int d = a.d;
  check_cap(static_cast<long long>(d) * d * d * d);
  KetVector out{{d, d, d, d}, Vec::Zero(static_cast<long long>(d) * d * d * d)};
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) {
      if (a.a(m, n) == cplx(0.0)) continue;
      const KetVector bell_inA = bell_state({m, n, d});
      const KetVector bell_BC = bell_state({m, ((-n % d) + d) % d, d});
      out.amps += a.a(m, n) * tensor(bell_inA, bell_BC).amps;
    }
  return out;
}

ChoiOperator heisenberg_choi(const AnsatzMatrix& a) {
  const int d = a.d;
  const KetVector psi = heisenberg_ansatz_state(a);
  Mat sigma = static_cast<double>(d) * (psi.amps * psi.amps.adjoint());
  Mat S = partial_trace(sigma, {d, d, d, d}, {0, 1, 2});
  return {d, d * d, S};
}

AnsatzMatrix fourier_dual(const AnsatzMatrix& a) {
  const int d = a.d;
  Mat b = Mat::Zero(d, d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) {
      cplx s = 0.0;
      for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
          s += root_of_unity(d, static_cast<long long>(n) * x - static_cast<long long>(m) * y) *
               a.a(x, y);
      b(m, n) = s / static_cast<double>(d);
    }
  return {d, b};
}

namespace {
double ansatz_fidelity(const Mat& coeffs, const KetVector& psi) {
  const int d = static_cast<int>(coeffs.rows());
  double f = 0.0;
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) {
      const cplx ov = (psi.amps.adjoint() * error_operator({m, n, d}) * psi.amps)(0);
      f += std::norm(coeffs(m, n)) * std::norm(ov);
    }
  return f;
}
}  // namespace

double ansatz_fidelity_A(const AnsatzMatrix& a, const KetVector& psi) {
  return ansatz_fidelity(a.a, psi);
}

double ansatz_fidelity_B(const AnsatzMatrix& a, const KetVector& psi) {
  return ansatz_fidelity(fourier_dual(a).a, psi);
}

// ---------------------------------------------------------------------------
// The three one-knob families
// ---------------------------------------------------------------------------

AnsatzMatrix universal_ansatz(int d, double F_A) {
  if (F_A < 1.0 / d - 1e-12 || F_A > 1.0 + 1e-12)
    throw std::invalid_argument("universal_ansatz: F_A outside [1/d, 1]");
  const double x = std::sqrt(std::max(0.0, (1.0 - F_A) / (d * (d - 1.0))));
  const double v = std::sqrt(std::max(0.0, ((d + 1.0) * F_A - 1.0) / d));
  Mat a = Mat::Constant(d, d, x);
  a(0, 0) = v;
  return {d, a};
}

AnsatzMatrix fourier_ansatz(int d, double F_A) {
  if (F_A < 1.0 / d - 1e-12 || F_A > 1.0 + 1e-12)
    throw std::invalid_argument("fourier_ansatz: F_A outside [1/d, 1]");
  const double v = F_A;
  const double x = std::sqrt(std::max(0.0, F_A * (1.0 - F_A) / (d - 1.0)));
  const double y = (1.0 - F_A) / (d - 1.0);
  Mat a = Mat::Constant(d, d, y);
  for (int k = 1; k < d; ++k) {
    a(0, k) = x;
    a(k, 0) = x;
  }
  a(0, 0) = v;
  return {d, a};
}

namespace {
AnsatzMatrix phase_matrix(int d, double v, double x, double y) {
  Mat a = Mat::Constant(d, d, x);
  for (int n = 1; n < d; ++n) a(0, n) = y;
  a(0, 0) = v;
  return {d, a};
}

// Along the phase-family slice at fixed F_A, x and y are eliminated through
// F_A = v^2 + (d-1) x^2 and the trace-preservation condition, leaving
// F_B(v) = v'^2 + (d-1) x'^2 to maximize over v.  The derivative below
// diverges to +inf at the lower edge (y -> 0) and to -inf at the upper edge
// (x -> 0), so a sign change always brackets the interior maximum.
double phase_FB_deriv(int d, double F_A, double v) {
  const double x = std::sqrt(std::max(1e-300, (F_A - v * v) / (d - 1.0)));
  const double y = std::sqrt(std::max(1e-300, v * v - (d * F_A - 1.0) / (d - 1.0)));
  const double dx = -v / ((d - 1.0) * x);
  const double dy = v / y;
  const double vp = (v + d * (d - 1.0) * x + (d - 1.0) * y) / d;
  const double xp = (v - y) / d;
  const double dvp = (1.0 + d * (d - 1.0) * dx + (d - 1.0) * dy) / d;
  const double dxp = (1.0 - dy) / d;
  return 2.0 * vp * dvp + 2.0 * (d - 1.0) * xp * dxp;
}
}  // namespace

AnsatzMatrix phase_ansatz(int d, double F_A) {
  if (F_A < 1.0 / d - 1e-12 || F_A > 1.0 + 1e-12)
    throw std::invalid_argument("phase_ansatz: F_A outside [1/d, 1]");
  const double v_lo = std::sqrt(std::max(0.0, (d * F_A - 1.0) / (d - 1.0)));
  const double v_hi = std::sqrt(F_A);
  // bisection on dF_B/dv avoids the comparison-noise plateau of a direct
  // maximization near the optimum
  double lo = v_lo + 1e-15, hi = v_hi - 1e-15;
  if (phase_FB_deriv(d, F_A, lo) < 0.0) {
    hi = lo;  // degenerate slice, keep the edge
  } else {
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
      const double mid = 0.5 * (lo + hi);
      (phase_FB_deriv(d, F_A, mid) > 0.0 ? lo : hi) = mid;
    }
  }
  const double v = 0.5 * (lo + hi);
  const double x = std::sqrt(std::max(0.0, (F_A - v * v) / (d - 1.0)));
  const double y = std::sqrt(std::max(0.0, v * v - (d * F_A - 1.0) / (d - 1.0)));
  return phase_matrix(d, v, x, y);
}

double universal_symmetric_fidelity(int d) { return (d + 3.0) / (2.0 * (d + 1.0)); }

double fourier_symmetric_fidelity(int d) { return 0.5 + 1.0 / std::sqrt(4.0 * d); }

double phase_symmetric_fidelity(int d) {
  return 1.0 / d + (d - 2.0 + std::sqrt(d * d + 4.0 * d - 4.0)) / (4.0 * d);
}

double heisenberg_tradeoff_FB(HeisenbergFamily family, int d, double F_A) {
  switch (family) {
    case HeisenbergFamily::universal: {
      const double beta2 = d * (1.0 - F_A) / (d - 1.0);
      const double beta = std::sqrt(std::max(0.0, beta2));
      const double alpha = -beta / d + std::sqrt(beta2 / (d * d) + 1.0 - beta2);
      return 1.0 - (d - 1.0) * alpha * alpha / d;
    }
    case HeisenbergFamily::fourier: {
      AnsatzMatrix a = fourier_ansatz(d, F_A);
      return ansatz_fidelity_B(a, basis_ket({d}, {0}));
    }
    case HeisenbergFamily::phase: {
      AnsatzMatrix a = phase_ansatz(d, F_A);
      // dual-basis state ||0>> is a balanced superposition
      Vec dual0 = Vec::Constant(d, 1.0 / std::sqrt(static_cast<double>(d)));
      return ansatz_fidelity_B(a, {{d}, dual0});
    }
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// N -> M universal cloning
// ---------------------------------------------------------------------------

double universal_nm_fidelity(int d, int N, int M) {
  if (M < N || N < 1) throw std::invalid_argument("universal_nm_fidelity: need M >= N >= 1");
  return (static_cast<double>(M) * N + M + N * (d - 1.0)) / (static_cast<double>(M) * (N + d));
}

double universal_nm_global_fidelity(int d, int N, int M) {
  return static_cast<double>(sym_dim(d, N)) / static_cast<double>(sym_dim(d, M));
}

double universal_shrinking_factor(int d, int N, int M) {
  return (static_cast<double>(N) / (N + d)) * (static_cast<double>(M + d) / M);
}

ChoiOperator universal_nm_choi(int d, int N, int M) {
  if (M <= N || N < 1) throw std::invalid_argument("universal_nm_choi: need M > N >= 1");
  long long full = 1;
  for (int i = 0; i < N + M; ++i) full *= d;
  check_cap(full);

  const int Dn = static_cast<int>(sym_dim(d, N));
  const int Dm = static_cast<int>(sym_dim(d, M));
  long long blank = 1;
  for (int i = 0; i < M - N; ++i) blank *= d;

  const Mat Pn = sym_isometry(d, N);  // d^N x Dn
  const Mat Pm = sym_isometry(d, M);  // d^M x Dm
  const double c = static_cast<double>(Dn) / static_cast<double>(Dm);

  // W_k = Pm^dag (|s_k> (x) I_blank), size Dm x blank
  std::vector<Mat> W(Dn);
  for (int k = 0; k < Dn; ++k) {
    Mat sk_blank = Mat::Zero(Pm.rows(), blank);
    const Vec sk = Pn.col(k);
    for (long long r = 0; r < sk.size(); ++r) {
      if (sk(r) == cplx(0.0)) continue;
      for (long long e = 0; e < blank; ++e) sk_blank(r * blank + e, e) = sk(r);
    }
    W[k] = Pm.adjoint() * sk_blank;
  }

  Mat S = Mat::Zero(static_cast<long long>(Dn) * Dm, static_cast<long long>(Dn) * Dm);
  for (int k = 0; k < Dn; ++k)
    for (int l = 0; l < Dn; ++l)
      S.block(static_cast<long long>(k) * Dm, static_cast<long long>(l) * Dm, Dm, Dm) =
          c * (W[k] * W[l].adjoint());
  return {Dn, Dm, S};
}

namespace {
// Unnormalized image of |N, i> under (aV^dag bH^dag - aH^dag bV^dag)^(M-N),
// as amplitudes over (clone k, ancilla m) qubit sym labels.
Mat pdc_qubit_coefficients(int N, int M, int i) {
  const int L = M - N;
  Mat out = Mat::Zero(M + 1, L + 1);  // (clones H-count, ancilla H-count)
  for (int j = 0; j <= L; ++j) {
    if (i + j > M) continue;
    const double coeff = binomial(L, j) * ((j % 2) ? -1.0 : 1.0) *
                         std::sqrt(factorial(N - i + L - j) / factorial(N - i)) *
                         std::sqrt(factorial(i + j) / factorial(i)) *
                         std::sqrt(factorial(j)) * std::sqrt(factorial(L - j));
    out(i + j, L - j) += coeff;  // clones: i+j H photons, ancilla: L-j H photons
  }
  return out;
}
}  // namespace

Mat universal_nm_qubit_isometry(int N, int M) {
  if (M <= N || N < 1) throw std::invalid_argument("universal_nm_qubit_isometry: need M > N >= 1");
  const int L = M - N;
  Mat V = Mat::Zero(static_cast<long long>(M + 1) * (L + 1), N + 1);
  for (int i = 0; i <= N; ++i) {
    const Mat c = pdc_qubit_coefficients(N, M, i);
    double norm2 = c.squaredNorm();
    for (int kc = 0; kc <= M; ++kc)
      for (int ka = 0; ka <= L; ++ka) {
        const long long row =
            static_cast<long long>(sym_qubit_index(M, kc)) * (L + 1) + sym_qubit_index(L, ka);
        V(row, sym_qubit_index(N, i)) = c(kc, ka) / std::sqrt(norm2);
      }
  }
  return V;
}

double universal_nm_qubit_clone_fidelity(int N, int M) {
  const Mat c = pdc_qubit_coefficients(N, M, 0);
  double f = 0.0, n2 = 0.0;
  for (int k = 0; k <= M; ++k)
    for (int ka = 0; ka <= M - N; ++ka) {
      const double w = std::norm(c(k, ka));
      f += w * (M - k) / static_cast<double>(M);
      n2 += w;
    }
  return f / n2;
}

double universal_nm_qubit_anticlone_fidelity(int N, int M) {
  const int L = M - N;
  const Mat c = pdc_qubit_coefficients(N, M, 0);
  double f = 0.0, n2 = 0.0;
  for (int k = 0; k <= M; ++k)
    for (int ka = 0; ka <= L; ++ka) {
      const double w = std::norm(c(k, ka));
      f += w * ka / static_cast<double>(L);  // anti-clone target is |1> = psi_perp
      n2 += w;
    }
  return f / n2;
}

// ---------------------------------------------------------------------------
// Asymmetric universal 1 -> 2
// ---------------------------------------------------------------------------

Mat asym_universal_isometry(int d, double alpha, double beta) {
  if (std::abs(alpha * alpha + beta * beta + 2.0 * alpha * beta / d - 1.0) > 1e-9)
    throw std::invalid_argument("asym_universal_isometry: normalization violated");
  const double inv = 1.0 / std::sqrt(static_cast<double>(d));
  Mat V = Mat::Zero(static_cast<long long>(d) * d * d, d);
  const std::vector<int> dims{d, d, d};
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      V(pack_index(dims, {j, k, k}), j) += alpha * inv;
      V(pack_index(dims, {k, j, k}), j) += beta * inv;
    }
  return V;
}

std::pair<double, double> asym_universal_fidelities(int d, double alpha, double beta) {
  const double fa = 1.0 - (d - 1.0) * beta * beta / d;
  const double fb = 1.0 - (d - 1.0) * alpha * alpha / d;
  return {fa, fb};
}

std::pair<double, double> asym_universal_params_for_FA(int d, double F_A) {
  const double beta2 = d * (1.0 - F_A) / (d - 1.0);
  const double beta = std::sqrt(std::max(0.0, beta2));
  const double alpha = -beta / d + std::sqrt(std::max(0.0, beta2 / (d * d) + 1.0 - beta2));
  return {alpha, beta};
}

// ---------------------------------------------------------------------------
// Phase-covariant machines
// ---------------------------------------------------------------------------

Mat pc_qubit_12_isometry(PcQubitVariant variant, double theta) {
  switch (variant) {
    case PcQubitVariant::ancilla: {
      Mat V = Mat::Zero(8, 2);
      const std::vector<int> dims{2, 2, 2};
      const double s = 1.0 / std::sqrt(2.0);
      V(pack_index(dims, {0, 0, 0}), 0) = s;
      V(pack_index(dims, {0, 1, 1}), 0) = 0.5;
      V(pack_index(dims, {1, 0, 1}), 0) = 0.5;
      V(pack_index(dims, {1, 1, 1}), 1) = s;
      V(pack_index(dims, {0, 1, 0}), 1) = 0.5;
      V(pack_index(dims, {1, 0, 0}), 1) = 0.5;
      return V;
    }
    case PcQubitVariant::economical: {
      Mat V = Mat::Zero(4, 2);
      const double s = 1.0 / std::sqrt(2.0);
      V(0, 0) = 1.0;  // |00>
      V(1, 1) = s;    // |01>
      V(2, 1) = s;    // |10>
      return V;
    }
    case PcQubitVariant::asymmetric: {
      if (theta < 0.0 || theta > kPi / 2.0 + 1e-12)
        throw std::invalid_argument("pc_qubit_12_isometry: theta outside [0, pi/2]");
      Mat V = Mat::Zero(4, 2);
      V(0, 0) = 1.0;
      V(1, 1) = std::cos(theta);
      V(2, 1) = std::sin(theta);
      return V;
    }
  }
  throw std::logic_error("unreachable");
}

Mat pc_qubit_nm_map(int N, int M, int shift) {
  if (M <= N || N < 1) throw std::invalid_argument("pc_qubit_nm_map: need M > N >= 1");
  if (shift < 0 || N + shift > M) throw std::invalid_argument("pc_qubit_nm_map: invalid shift");
  Mat V = Mat::Zero(M + 1, N + 1);
  for (int k = 0; k <= N; ++k) V(sym_qubit_index(M, k + shift), sym_qubit_index(N, k)) = 1.0;
  return V;
}

std::vector<int> pc_qubit_nm_optimal_shifts(int N, int M) {
  const int diff = M - N;
  if (diff % 2 == 0) return {diff / 2};
  return {(diff - 1) / 2, (diff + 1) / 2};
}

double pc_qubit_nm_fidelity(int N, int M) {
  if (M <= N || N < 1) throw std::invalid_argument("pc_qubit_nm_fidelity: need M > N >= 1");
  const int diff = M - N;
  if (diff % 2 == 0) {
    const int L = diff / 2;
    double s = 0.0;
    for (int j = 0; j < N; ++j)
      s += std::sqrt(binomial(N, j) * binomial(N, j + 1)) *
           std::sqrt(static_cast<double>(N + L - j) * (L + j + 1));
    return 0.5 + s / (M * std::pow(2.0, N));
  }
  const int L = (diff - 1) / 2;
  double s = 0.0;
  for (int j = 0; j < N; ++j)
    s += std::sqrt(binomial(N, j) * binomial(N, j + 1)) *
         (std::sqrt(static_cast<double>(N + L - j + 1) * (L + j + 1)) +
          std::sqrt(static_cast<double>(L + j + 2) * (N + L - j)));
  return 0.5 + s / (M * std::pow(2.0, N + 1));
}

double pc_qubit_nm_mixture_fidelity(int N, int M, double w) {
  if (w < 0.0 || w > 1.0) throw std::invalid_argument("mixture weight outside [0, 1]");
  const auto shifts = pc_qubit_nm_optimal_shifts(N, M);
  const double f1 = pc_equatorial_fidelity_of_map(pc_qubit_nm_map(N, M, shifts.front()), N, M);
  const double f2 =
      pc_equatorial_fidelity_of_map(pc_qubit_nm_map(N, M, shifts.back()), N, M);
  return w * f1 + (1.0 - w) * f2;
}

double pc_equatorial_fidelity_of_map(const Mat& map, int N, int M, int grid) {
  double acc = 0.0;
  for (int g = 0; g < grid; ++g) {
    const double phi = 2.0 * kPi * g / grid;
    // |psi(phi)>^(x)N in the symmetric basis
    Vec in = Vec::Zero(N + 1);
    for (int k = 0; k <= N; ++k)
      in(sym_qubit_index(N, k)) =
          std::sqrt(binomial(N, k)) * std::polar(std::pow(2.0, -N / 2.0), phi * k);
    Vec out = map * in;
    out /= out.norm();
    const Mat rho1 = sym_single_particle_rdm(2, M, out);
    Eigen::Vector2cd psi(1.0 / std::sqrt(2.0), std::polar(1.0 / std::sqrt(2.0), phi));
    acc += (psi.adjoint() * rho1 * psi)(0).real();
  }
  return acc / grid;
}

Mat pc_qudit_12_isometry(int d) {
  if (d < 2) throw std::invalid_argument("pc_qudit_12_isometry: d >= 2");
  const double root = std::sqrt(static_cast<double>(d) * d + 4.0 * d - 4.0);
  const double alpha = std::sqrt(0.5 - (d - 2.0) / (2.0 * root));
  const double beta = std::sqrt(0.5 + (d - 2.0) / (2.0 * root));
  Mat V = Mat::Zero(static_cast<long long>(d) * d * d, d);
  const std::vector<int> dims{d, d, d};
  const double w = beta / std::sqrt(2.0 * (d - 1.0));
  for (int j = 0; j < d; ++j) {
    V(pack_index(dims, {j, j, j}), j) = alpha;
    for (int l = 0; l < d; ++l) {
      if (l == j) continue;
      V(pack_index(dims, {j, l, l}), j) += w;
      V(pack_index(dims, {l, j, l}), j) += w;
    }
  }
  return V;
}

double pc_qudit_12_fidelity(int d) {
  return 0.25 + 1.0 / (2.0 * d) + std::sqrt(static_cast<double>(d) * d + 4.0 * d - 4.0) / (4.0 * d);
}

// ---------------------------------------------------------------------------
// Orthogonal-pair cloner
// ---------------------------------------------------------------------------

double orthopair_alpha(int j, int M) {
  const double sgn = (j % 2) ? -1.0 : 1.0;
  return sgn * (1.0 / std::sqrt(2.0 * (M + 1.0)) +
                std::sqrt(3.0) * (M - 2.0 * j) /
                    std::sqrt(2.0 * M * (M + 1.0) * (M + 2.0)));
}

double orthopair_fidelity(int M) {
  return 0.5 * (1.0 + std::sqrt((M + 2.0) / (3.0 * M)));
}

double orthopair_parallel_fidelity(int M) { return (3.0 * M + 2.0) / (4.0 * M); }

Mat orthopair_cloner(int M) {
  if (M < 2) throw std::invalid_argument("orthopair_cloner: M >= 2");
  const int D = M + 1;
  // sample the covariant action on |psi, psi_perp> and solve for the linear map
  const int S = 8;
  Mat X(4, S);   // inputs
  Mat Y(static_cast<long long>(D) * D, S);  // outputs
  const double thetas[4] = {0.4, 1.1, 1.9, 2.6};
  const double phis[2] = {0.0, 1.3};
  int col = 0;
  for (double th : thetas)
    for (double ph : phis) {
      Eigen::Vector2cd psi(std::cos(th / 2), std::polar(std::sin(th / 2), ph));
      Eigen::Vector2cd perp = perp_spinor(psi);
      Vec in = Vec::Zero(4);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) in(i * 2 + j) = psi(i) * perp(j);
      Vec out = Vec::Zero(static_cast<long long>(D) * D);
      for (int j = 0; j <= M; ++j) {
        const Vec clones = sym_state_of_spinors(psi, M - j, perp, j);
        const Vec anc = sym_state_of_spinors(perp, M - j, psi, j);
        Vec prod(static_cast<long long>(D) * D);
        for (int r = 0; r < D; ++r) prod.segment(static_cast<long long>(r) * D, D) = clones(r) * anc;
        out += orthopair_alpha(j, M) * prod;
      }
      X.col(col) = in;
      Y.col(col) = out;
      ++col;
    }
  // V X = Y  =>  X^T V^T = Y^T, least squares
  Mat Vt = X.transpose().colPivHouseholderQr().solve(Y.transpose());
  Mat V = Vt.transpose();
  const double resid = (V * X - Y).cwiseAbs().maxCoeff();
  if (resid > 1e-9)
    throw std::runtime_error("orthopair_cloner: covariant form is not linear (residual " +
                             std::to_string(resid) + ")");
  return V;
}

double unot_fidelity(int N) {
  if (N < 1) throw std::invalid_argument("unot_fidelity: N >= 1");
  return (N + 1.0) / (N + 2.0);
}

}  // namespace clonekit
