#include "clonekit/objectives.hpp"

#include <cmath>

namespace clonekit {

namespace {

constexpr double kPi = 3.14159265358979323846;

// |psi*><psi*| (x) |psi><psi| embedded on (in, clone) of in (x) A (x) B,
// identity on the other clone.
Mat rank_one_term(int d, const Vec& psi, CloneSide which) {
  const Vec conj_psi = psi.conjugate();
  const Mat proj_in = conj_psi * conj_psi.adjoint();
  const Mat proj_cl = psi * psi.adjoint();
  const std::vector<int> dims{d, d, d};
  const int clone = (which == CloneSide::B) ? 2 : 1;
  return embed_op(dims, {0, clone}, kron(proj_in, proj_cl));
}

}  // namespace

RObjective r_convex(const RObjective& ra, const RObjective& rb, double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("r_convex: p outside [0,1]");
  return {ra.d_in, ra.d_out, p * ra.R + (1.0 - p) * rb.R, "convex"};
}

RObjective r_universal(int d, CloneSide which) {
  check_cap(static_cast<long long>(d) * d * d);
  if (which == CloneSide::sym) {
    RObjective a = r_universal(d, CloneSide::A);
    RObjective b = r_universal(d, CloneSide::B);
    return {d, d * d, 0.5 * (a.R + b.R), "single-clone-sym"};
  }
  const std::vector<int> dims{d, d, d};
  const int clone = (which == CloneSide::B) ? 2 : 1;
  const Vec phi = bell_state({0, 0, d}).amps;  // |Phi+>
  Mat op = Mat::Identity(static_cast<long long>(d) * d * d, static_cast<long long>(d) * d * d);
  op += static_cast<double>(d) * embed_op(dims, {0, clone}, phi * phi.adjoint());
  op /= static_cast<double>(d) * (d + 1.0);
  return {d, d * d, op, which == CloneSide::B ? "single-clone-B" : "single-clone-A"};
}

RObjective r_universal_mc(int d, CloneSide which, int samples, uint64_t seed) {
  check_cap(static_cast<long long>(d) * d * d);
  if (which == CloneSide::sym) {
    RObjective a = r_universal_mc(d, CloneSide::A, samples, seed);
    RObjective b = r_universal_mc(d, CloneSide::B, samples, seed + 1);
    return {d, d * d, 0.5 * (a.R + b.R), "single-clone-sym"};
  }
  Rng rng(seed);
  Mat acc = Mat::Zero(static_cast<long long>(d) * d * d, static_cast<long long>(d) * d * d);
  for (int s = 0; s < samples; ++s) acc += rank_one_term(d, random_state(d, rng).amps, which);
  acc /= static_cast<double>(samples);
  return {d, d * d, acc, "single-clone-mc"};
}

RObjective r_phase(int d, CloneSide which, int grid) {
  check_cap(static_cast<long long>(d) * d * d);
  if (grid < 3) throw std::invalid_argument("r_phase: grid >= 3 required for exactness");
  if (which == CloneSide::sym) {
    RObjective a = r_phase(d, CloneSide::A, grid);
    RObjective b = r_phase(d, CloneSide::B, grid);
    return {d, d * d, 0.5 * (a.R + b.R), "single-clone-sym"};
  }
  const long long points = [&] {
    long long p = 1;
    for (int i = 0; i < d - 1; ++i) p *= grid;
    return p;
  }();
  Mat acc = Mat::Zero(static_cast<long long>(d) * d * d, static_cast<long long>(d) * d * d);
  const double inv = 1.0 / std::sqrt(static_cast<double>(d));
  for (long long g = 0; g < points; ++g) {
    Vec psi(d);
    psi(0) = inv;
    long long rest = g;
    for (int j = 1; j < d; ++j) {
      const int step = static_cast<int>(rest % grid);
      rest /= grid;
      psi(j) = std::polar(inv, 2.0 * kPi * step / grid);
    }
    acc += rank_one_term(d, psi, which);
  }
  acc /= static_cast<double>(points);
  return {d, d * d, acc, which == CloneSide::B ? "single-clone-B" : "single-clone-A"};
}

RObjective r_fourier(int d, CloneSide which) {
  check_cap(static_cast<long long>(d) * d * d);
  if (which == CloneSide::sym) {
    RObjective a = r_fourier(d, CloneSide::A);
    RObjective b = r_fourier(d, CloneSide::B);
    return {d, d * d, 0.5 * (a.R + b.R), "single-clone-sym"};
  }
  Mat acc = Mat::Zero(static_cast<long long>(d) * d * d, static_cast<long long>(d) * d * d);
  for (int j = 0; j < d; ++j) {
    Vec comp = Vec::Zero(d);
    comp(j) = 1.0;
    acc += rank_one_term(d, comp, which);
    Vec dual(d);
    for (int k = 0; k < d; ++k)
      dual(k) = std::polar(1.0 / std::sqrt(static_cast<double>(d)), 2.0 * kPi * j * k / d);
    acc += rank_one_term(d, dual, which);
  }
  acc /= 2.0 * d;
  return {d, d * d, acc, which == CloneSide::B ? "single-clone-B" : "single-clone-A"};
}

RObjective r_sc_qubit_1M(int M) {
  if (M < 2) throw std::invalid_argument("r_sc_qubit_1M: M >= 2");
  const int D = M + 1;
  Mat R = Mat::Zero(2LL * D, 2LL * D);
  auto at = [&](int qubit, int k) { return static_cast<long long>(qubit) * D + sym_qubit_index(M, k); };
  for (int k = 0; k <= M; ++k) {
    R(at(0, k), at(0, k)) = (2.0 * M - k) / (6.0 * M);
    R(at(1, k), at(1, k)) = (M + static_cast<double>(k)) / (6.0 * M);
  }
  for (int k = 0; k < M; ++k) {
    const double w = std::sqrt(static_cast<double>(M - k) * (k + 1)) / (6.0 * M);
    R(at(1, k + 1), at(0, k)) += w;
    R(at(0, k), at(1, k + 1)) += w;
  }
  return {2, D, R, "single-clone-sym"};
}

RObjective r_global_qubit_1M(int M) {
  if (M < 2) throw std::invalid_argument("r_global_qubit_1M: M >= 2");
  long long full = 1;
  for (int i = 0; i < M + 1; ++i) full *= 2;
  check_cap(full);
  std::vector<int> dims(M + 1, 2);
  Mat pi = symmetric_projector(2, M + 1);
  Mat rt = partial_transpose(pi, dims, 0) / (M + 2.0);
  // project the M output legs onto the symmetric basis
  Mat P = kron(Mat::Identity(2, 2), sym_isometry(2, M));
  // reorder: rt lives on qubit (x) (2^M); sym_isometry maps sym(M) -> 2^M
  Mat R = P.adjoint() * rt * P;
  return {2, M + 1, R, "global"};
}

RObjective r_unot(int N) {
  if (N < 1) throw std::invalid_argument("r_unot: N >= 1");
  long long full = 1;
  for (int i = 0; i < N + 1; ++i) full *= 2;
  check_cap(full);
  Mat u(2, 2);
  u << 0.0, 1.0, -1.0, 0.0;  // U|0> = -|1>, U|1> = |0>
  Mat un = Mat::Identity(1, 1);
  for (int i = 0; i < N; ++i) un = kron(un, u);
  Mat pi = symmetric_projector(2, N + 1);
  Mat big = kron(un, Mat::Identity(2, 2));
  Mat R_full = big * pi * big.adjoint() / (N + 2.0);
  Mat P = kron(sym_isometry(2, N), Mat::Identity(2, 2));
  return {N + 1, 2, P.adjoint() * R_full * P, "unot"};
}

RObjective r_orthopair(int M) {
  if (M < 2) throw std::invalid_argument("r_orthopair: M >= 2");
  const int D = M + 1;
  // exact SU(2) average: the integrand is a trigonometric polynomial of
  // degree <= 3 in phi and degree <= 6 in the half-angle, so an 8-point
  // phase grid with 8-node Gauss-Legendre in cos(theta) integrates exactly.
  static const double gl_x[8] = {-0.9602898564975363, -0.7966664774136267,
                                 -0.5255324099163290, -0.1834346424956498,
                                 0.1834346424956498,  0.5255324099163290,
                                 0.7966664774136267,  0.9602898564975363};
  static const double gl_w[8] = {0.1012285362903763, 0.2223810344533745,
                                 0.3137066458778873, 0.3626837833783620,
                                 0.3626837833783620, 0.3137066458778873,
                                 0.2223810344533745, 0.1012285362903763};
  Mat acc = Mat::Zero(4LL * D, 4LL * D);
  double wsum = 0.0;
  for (int it = 0; it < 8; ++it) {
    const double cth = gl_x[it];
    const double th = std::acos(cth);
    for (int ip = 0; ip < 8; ++ip) {
      const double ph = 2.0 * kPi * ip / 8.0;
      const double w = gl_w[it] / 8.0;
      Eigen::Vector2cd psi(std::cos(th / 2), std::polar(std::sin(th / 2), ph));
      Eigen::Vector2cd perp(-std::conj(psi(1)), std::conj(psi(0)));
      Vec in(4);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) in(i * 2 + j) = psi(i) * perp(j);
      const Vec in_conj = in.conjugate();
      // mean single-clone fidelity operator on sym(M): the one-body projector
      // |psi><psi| promoted to the symmetric subspace, divided by M.
      Mat proj = Mat::Zero(2, 2);
      proj(0, 0) = std::norm(psi(0));
      proj(1, 1) = std::norm(psi(1));
      proj(0, 1) = psi(0) * std::conj(psi(1));
      proj(1, 0) = psi(1) * std::conj(psi(0));
      const Mat R1 = sym_one_body_operator(2, M, proj) / static_cast<double>(M);
      acc += w * kron(in_conj * in_conj.adjoint(), R1);
      wsum += w;
    }
  }
  acc /= wsum;
  return {4, D, acc, "single-clone-sym"};
}

}  // namespace clonekit
