#include "clonekit/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace clonekit {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

int max_dim() {
  static const int cap = [] {
    if (const char* env = std::getenv("CLONEKIT_MAX_DIM")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 4096;
  }();
  return cap;
}

void check_cap(long long dim) {
  if (dim > max_dim()) {
    throw SizeCapError("tensor space dimension " + std::to_string(dim) +
                       " exceeds cap " + std::to_string(max_dim()) +
                       " (set CLONEKIT_MAX_DIM to raise)");
  }
}

KetVector KetVector::normalized() const {
  double n = norm();
  if (n == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  return {dims, amps / n};
}

bool DensityOperator::is_state(double tol) const {
  if (!approx_hermitian(mat, tol)) return false;
  if (std::abs(mat.trace().real() - 1.0) > tol) return false;
  return min_eigenvalue(mat) > -tol;
}

DensityOperator DensityOperator::from_pure(const KetVector& psi) {
  return {psi.dims, psi.amps * psi.amps.adjoint()};
}

long long total_dim(const std::vector<int>& dims) {
  long long n = 1;
  for (int d : dims) n *= d;
  return n;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

KetVector tensor(const KetVector& a, const KetVector& b) {
  std::vector<int> dims = a.dims;
  dims.insert(dims.end(), b.dims.begin(), b.dims.end());
  check_cap(total_dim(dims));
  Vec amps(a.dim() * b.dim());
  for (int i = 0; i < a.dim(); ++i)
    amps.segment(static_cast<long long>(i) * b.dim(), b.dim()) = a.amps(i) * b.amps;
  return {dims, amps};
}

long long pack_index(const std::vector<int>& dims, const std::vector<int>& idx) {
  long long flat = 0;
  for (size_t k = 0; k < dims.size(); ++k) flat = flat * dims[k] + idx[k];
  return flat;
}

std::vector<int> unpack_index(const std::vector<int>& dims, long long flat) {
  std::vector<int> idx(dims.size());
  for (size_t k = dims.size(); k-- > 0;) {
    idx[k] = static_cast<int>(flat % dims[k]);
    flat /= dims[k];
  }
  return idx;
}

KetVector basis_ket(const std::vector<int>& dims, const std::vector<int>& idx) {
  check_cap(total_dim(dims));
  Vec amps = Vec::Zero(total_dim(dims));
  amps(pack_index(dims, idx)) = 1.0;
  return {dims, amps};
}

Mat embed_op(const std::vector<int>& dims, const std::vector<int>& subs, const Mat& op) {
  const long long n = total_dim(dims);
  check_cap(n);
  std::vector<int> sub_dims(subs.size());
  for (size_t k = 0; k < subs.size(); ++k) sub_dims[k] = dims[subs[k]];
  std::vector<int> rest;
  for (int s = 0; s < static_cast<int>(dims.size()); ++s)
    if (std::find(subs.begin(), subs.end(), s) == subs.end()) rest.push_back(s);

  Mat out = Mat::Zero(n, n);
  std::vector<int> row(dims.size()), col(dims.size());
  for (long long i = 0; i < n; ++i) {
    const std::vector<int> ri = unpack_index(dims, i);
    std::vector<int> si(subs.size());
    for (size_t k = 0; k < subs.size(); ++k) si[k] = ri[subs[k]];
    const long long oi = pack_index(sub_dims, si);
    for (long long oj = 0; oj < op.cols(); ++oj) {
      if (op(oi, oj) == cplx(0.0)) continue;
      std::vector<int> sj = unpack_index(sub_dims, oj);
      std::vector<int> rj = ri;
      for (size_t k = 0; k < subs.size(); ++k) rj[subs[k]] = sj[k];
      out(i, pack_index(dims, rj)) += op(oi, oj);
    }
  }
  return out;
}

KetVector bell_state(const BellIndex& idx) {
  const int d = idx.d;
  if (d < 2 || idx.m < 0 || idx.m >= d || idx.n < 0 || idx.n >= d)
    throw std::invalid_argument("invalid BellIndex");
  Vec amps = Vec::Zero(static_cast<long long>(d) * d);
  const double inv = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    const cplx phase = std::polar(inv, 2.0 * kPi * idx.n * j / d);
    amps(static_cast<long long>(j) * d + (j + idx.m) % d) = phase;
  }
  return {{d, d}, amps};
}

Mat error_operator(const BellIndex& idx) {
  const int d = idx.d;
  if (d < 2 || idx.m < 0 || idx.m >= d || idx.n < 0 || idx.n >= d)
    throw std::invalid_argument("invalid BellIndex");
  Mat e = Mat::Zero(d, d);
  for (int j = 0; j < d; ++j)
    e((j + idx.m) % d, j) = std::polar(1.0, 2.0 * kPi * idx.n * j / d);
  return e;
}

Mat partial_trace(const Mat& op, const std::vector<int>& dims, const std::vector<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  for (int k : keep)
    if (k < 0 || k >= static_cast<int>(dims.size()))
      throw std::invalid_argument("partial_trace: bad subsystem index");

  std::vector<int> keep_dims, trace_subs;
  for (int k : keep) keep_dims.push_back(dims[k]);
  for (int s = 0; s < static_cast<int>(dims.size()); ++s)
    if (std::find(keep.begin(), keep.end(), s) == keep.end()) trace_subs.push_back(s);

  const long long nk = total_dim(keep_dims);
  std::vector<int> tr_dims;
  for (int s : trace_subs) tr_dims.push_back(dims[s]);
  const long long nt = total_dim(tr_dims);

  Mat out = Mat::Zero(nk, nk);
  std::vector<int> full_i(dims.size()), full_j(dims.size());
  for (long long a = 0; a < nk; ++a) {
    const std::vector<int> ka = unpack_index(keep_dims, a);
    for (long long b = 0; b < nk; ++b) {
      const std::vector<int> kb = unpack_index(keep_dims, b);
      cplx sum = 0.0;
      for (long long t = 0; t < nt; ++t) {
        const std::vector<int> tt = unpack_index(tr_dims, t);
        for (size_t q = 0; q < keep.size(); ++q) {
          full_i[keep[q]] = ka[q];
          full_j[keep[q]] = kb[q];
        }
        for (size_t q = 0; q < trace_subs.size(); ++q) {
          full_i[trace_subs[q]] = tt[q];
          full_j[trace_subs[q]] = tt[q];
        }
        sum += op(pack_index(dims, full_i), pack_index(dims, full_j));
      }
      out(a, b) = sum;
    }
  }
  return out;
}

DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& keep) {
  std::vector<int> keep_dims;
  for (int k : keep) keep_dims.push_back(rho.dims.at(k));
  return {keep_dims, partial_trace(rho.mat, rho.dims, keep)};
}

Mat partial_transpose(const Mat& op, const std::vector<int>& dims, int subsystem) {
  if (subsystem < 0 || subsystem >= static_cast<int>(dims.size()))
    throw std::invalid_argument("partial_transpose: bad subsystem index");
  const long long n = total_dim(dims);
  Mat out(n, n);
  for (long long i = 0; i < n; ++i) {
    std::vector<int> ri = unpack_index(dims, i);
    for (long long j = 0; j < n; ++j) {
      std::vector<int> rj = unpack_index(dims, j);
      std::swap(ri[subsystem], rj[subsystem]);
      out(pack_index(dims, ri), pack_index(dims, rj)) = op(i, j);
      std::swap(ri[subsystem], rj[subsystem]);
    }
  }
  return out;
}

long long sym_dim(int d, int M) {
  // C(d+M-1, M)
  long long num = 1, den = 1;
  for (int i = 1; i <= M; ++i) {
    num *= d - 1 + i;
    den *= i;
    const long long g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  return num / den;
}

std::vector<SymBasisLabel> sym_basis_labels(int d, int M) {
  std::vector<SymBasisLabel> labels;
  std::vector<int> occ(d, 0);
  // lexicographic enumeration over occupation vectors
  std::function<void(int, int)> rec = [&](int slot, int left) {
    if (slot == d - 1) {
      occ[slot] = left;
      labels.push_back({d, M, occ});
      return;
    }
    for (int c = 0; c <= left; ++c) {
      occ[slot] = c;
      rec(slot + 1, left - c);
    }
  };
  rec(0, M);
  return labels;
}

KetVector sym_basis_vector(const SymBasisLabel& label) {
  const int d = label.d, M = label.M;
  if (static_cast<int>(label.occ.size()) != d)
    throw std::invalid_argument("sym_basis_vector: occ length != d");
  int sum = std::accumulate(label.occ.begin(), label.occ.end(), 0);
  if (sum != M) throw std::invalid_argument("sym_basis_vector: occupancy mismatch");
  for (int c : label.occ)
    if (c < 0) throw std::invalid_argument("sym_basis_vector: negative occupancy");

  const long long n = [&] {
    long long v = 1;
    for (int i = 0; i < M; ++i) v *= d;
    return v;
  }();
  check_cap(n);

  // sum over all distinct arrangements of the multiset, equal weight
  std::vector<int> word;
  for (int j = 0; j < d; ++j) word.insert(word.end(), label.occ[j], j);
  std::sort(word.begin(), word.end());

  std::vector<int> dims(M, d);
  Vec amps = Vec::Zero(n);
  long long count = 0;
  do {
    amps(pack_index(dims, word)) = 1.0;
    ++count;
  } while (std::next_permutation(word.begin(), word.end()));
  amps /= std::sqrt(static_cast<double>(count));
  return {dims, amps};
}

Mat sym_isometry(int d, int M) {
  const auto labels = sym_basis_labels(d, M);
  long long n = 1;
  for (int i = 0; i < M; ++i) n *= d;
  check_cap(n);
  Mat p(n, labels.size());
  for (size_t c = 0; c < labels.size(); ++c) p.col(c) = sym_basis_vector(labels[c]).amps;
  return p;
}

Mat symmetric_projector(int d, int M) {
  if (d < 2 || M < 1) throw std::invalid_argument("symmetric_projector: need d>=2, M>=1");
  Mat p = sym_isometry(d, M);
  return p * p.adjoint();
}

int sym_qubit_index(int M, int k) {
  // labels are lexicographic in occ = (M-k, k): index M-k
  if (k < 0 || k > M) throw std::invalid_argument("sym_qubit_index: k out of range");
  return M - k;
}

Mat sym_one_body_operator(int d, int M, const Mat& h) {
  const auto labels = sym_basis_labels(d, M);
  auto index_of = [&](const std::vector<int>& occ) -> int {
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i].occ == occ) return static_cast<int>(i);
    return -1;
  };
  const int D = static_cast<int>(labels.size());
  Mat out = Mat::Zero(D, D);
  for (int s = 0; s < D; ++s) {
    const auto& occ = labels[s].occ;
    for (int q = 0; q < d; ++q) {
      if (occ[q] == 0) continue;
      for (int p = 0; p < d; ++p) {
        if (h(p, q) == cplx(0.0)) continue;
        std::vector<int> occ2 = occ;
        occ2[q] -= 1;
        occ2[p] += 1;
        const int t = index_of(occ2);
        if (t < 0) continue;
        // <t| a_p^dag a_q |s> = sqrt(occ_s[q] occ_t[p])
        out(t, s) += h(p, q) * std::sqrt(static_cast<double>(occ[q]) * occ2[p]);
      }
    }
  }
  return out;
}

Mat sym_single_particle_rdm(int d, int M, const Vec& amps) {
  const auto labels = sym_basis_labels(d, M);
  if (amps.size() != static_cast<long long>(labels.size()))
    throw std::invalid_argument("sym_single_particle_rdm: amplitude count mismatch");
  // rho1(i,j) = <a_j^dag a_i>/M = <amps| N(i<-j) |amps>/M
  Mat rho = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Mat h = Mat::Zero(d, d);
      h(j, i) = 1.0;  // a_j^dag a_i
      rho(i, j) = (amps.adjoint() * sym_one_body_operator(d, M, h) * amps)(0) /
                  static_cast<double>(M);
    }
  return 0.5 * (rho + rho.adjoint().eval());
}

double fidelity(const DensityOperator& rho, const KetVector& psi) {
  if (rho.dim() != psi.dim()) throw std::invalid_argument("fidelity: dimension mismatch");
  const cplx v = psi.amps.adjoint() * rho.mat * psi.amps;
  if (std::abs(v.imag()) > 1e-12 * std::max(1.0, std::abs(v.real())) + 1e-12)
    throw std::domain_error("fidelity: <psi|rho|psi> not real; rho not Hermitian?");
  return v.real();
}

Eigen::Vector3d bloch_vector(const DensityOperator& rho) {
  if (rho.dim() != 2) throw std::invalid_argument("bloch_vector: qubit expected");
  const Mat& r = rho.mat;
  Eigen::Vector3d m;
  m(0) = 2.0 * r(1, 0).real();
  m(1) = 2.0 * r(1, 0).imag();
  m(2) = (r(0, 0) - r(1, 1)).real();
  return m;
}

DensityOperator bloch_state(const Eigen::Vector3d& m) {
  if (m.norm() > 1.0 + 1e-12) throw std::invalid_argument("bloch_state: |m| > 1");
  Mat r(2, 2);
  r(0, 0) = 0.5 * (1.0 + m(2));
  r(1, 1) = 0.5 * (1.0 - m(2));
  r(1, 0) = 0.5 * cplx(m(0), m(1));
  r(0, 1) = std::conj(r(1, 0));
  return {{2}, r};
}

bool approx_hermitian(const Mat& a, double tol) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double min_eigenvalue(const Mat& hermitian) {
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double max_eigenvalue(const Mat& hermitian) {
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

uint64_t Rng::next() {
  // splitmix64
  state += 0x9E3779B97f4A7C15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double Rng::gauss() {
  // Box-Muller on splitmix64 uniforms
  const double u1 = (next() >> 11) * 0x1.0p-53 + 0x1.0p-54;
  const double u2 = (next() >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

KetVector random_state(int d, Rng& rng) {
  Vec v(d);
  for (int i = 0; i < d; ++i) v(i) = cplx(rng.gauss(), rng.gauss());
  v /= v.norm();
  return {{d}, v};
}

Mat random_unitary(int d, Rng& rng) {
  Mat g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = cplx(rng.gauss(), rng.gauss());
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    cplx ph = r(i, i) / std::abs(r(i, i));
    q.col(i) *= ph;
  }
  return q;
}

Mat random_density(int d, Rng& rng) {
  Mat g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = cplx(rng.gauss(), rng.gauss());
  Mat rho = g * g.adjoint();
  rho /= rho.trace().real();
  return rho;
}

}  // namespace clonekit
