#include "clonekit/optics.hpp"

#include <boost/rational.hpp>

#include <cmath>
#include <functional>
#include <numeric>

namespace clonekit {

namespace {

constexpr double kPi = 3.14159265358979323846;

using Rat = boost::rational<long long>;

long long binomial_ll(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i);
    r /= i;
  }
  return r;
}

// Ladder-operator pair pattern of the active PDC Hamiltonian.
struct PairTerm {
  int signal;
  int idler;
  double sign;
};

std::vector<PairTerm> pdc_pairs(const PdcParams& p) {
  if (p.geometry == PdcGeometry::qubit_singlet) return {{0, 3, +1.0}, {1, 2, -1.0}};
  std::vector<PairTerm> terms;
  for (int j = 0; j < p.d; ++j) terms.push_back({j, p.d + j, +1.0});
  return terms;
}

int pdc_pair_count(const PdcParams& p) {
  return p.geometry == PdcGeometry::qubit_singlet ? 2 : p.d;
}

int pdc_signal_modes(const PdcParams& p) {
  return p.geometry == PdcGeometry::qubit_singlet ? 2 : p.d;
}

FockState apply_pair_raise(const FockState& s, const std::vector<PairTerm>& terms) {
  FockState out{s.n_modes, s.cutoff, {}};
  for (const auto& [occ, amp] : s.amps) {
    int total = std::accumulate(occ.begin(), occ.end(), 0);
    if (total + 2 > s.cutoff) continue;
    for (const auto& t : terms) {
      std::vector<int> o = occ;
      const double w = std::sqrt(static_cast<double>(o[t.signal] + 1) *
                                 static_cast<double>(o[t.idler] + 1));
      o[t.signal] += 1;
      o[t.idler] += 1;
      out.amps[o] += amp * t.sign * w;
    }
  }
  return out;
}

FockState apply_pair_lower(const FockState& s, const std::vector<PairTerm>& terms) {
  FockState out{s.n_modes, s.cutoff, {}};
  for (const auto& [occ, amp] : s.amps) {
    for (const auto& t : terms) {
      if (occ[t.signal] == 0 || occ[t.idler] == 0) continue;
      std::vector<int> o = occ;
      const double w =
          std::sqrt(static_cast<double>(o[t.signal]) * static_cast<double>(o[t.idler]));
      o[t.signal] -= 1;
      o[t.idler] -= 1;
      out.amps[o] += amp * t.sign * w;
    }
  }
  return out;
}

void prune(FockState& s, double eps = 1e-300) {
  for (auto it = s.amps.begin(); it != s.amps.end();) {
    if (std::abs(it->second) < eps)
      it = s.amps.erase(it);
    else
      ++it;
  }
}

// Polarization content of a 2-mode (V,H) Fock state as symmetric-basis
// amplitudes over sym_basis_labels(2, M).
Vec pol_to_sym(const std::map<std::vector<int>, cplx>& amps, int M) {
  Vec v = Vec::Zero(M + 1);
  for (const auto& [occ, amp] : amps) {
    if (occ[0] + occ[1] != M) throw std::invalid_argument("pol_to_sym: photon count mismatch");
    v(sym_qubit_index(M, occ[1])) = amp;
  }
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// FockState basics
// ---------------------------------------------------------------------------

double FockState::norm() const {
  double n2 = 0.0;
  for (const auto& [occ, amp] : amps) n2 += std::norm(amp);
  return std::sqrt(n2);
}

FockState FockState::normalized() const {
  FockState out = *this;
  const double n = norm();
  if (n == 0.0) throw std::invalid_argument("FockState: cannot normalize zero state");
  for (auto& [occ, amp] : out.amps) amp /= n;
  return out;
}

cplx FockState::overlap(const FockState& other) const {
  cplx s = 0.0;
  for (const auto& [occ, amp] : amps) {
    auto it = other.amps.find(occ);
    if (it != other.amps.end()) s += std::conj(amp) * it->second;
  }
  return s;
}

int FockState::total_photons(const std::vector<int>& occ) const {
  return std::accumulate(occ.begin(), occ.end(), 0);
}

FockState FockState::vacuum(int n_modes, int cutoff) {
  FockState s{n_modes, cutoff, {}};
  s.amps[std::vector<int>(n_modes, 0)] = 1.0;
  return s;
}

FockState FockState::number(const std::vector<int>& occ, int cutoff) {
  FockState s{static_cast<int>(occ.size()), cutoff, {}};
  s.amps[occ] = 1.0;
  return s;
}

FockState apply_create(const FockState& s, int mode) {
  FockState out{s.n_modes, s.cutoff, {}};
  for (const auto& [occ, amp] : s.amps) {
    if (s.total_photons(occ) + 1 > s.cutoff) continue;
    std::vector<int> o = occ;
    o[mode] += 1;
    out.amps[o] += amp * std::sqrt(static_cast<double>(o[mode]));
  }
  return out;
}

FockState apply_annihilate(const FockState& s, int mode) {
  FockState out{s.n_modes, s.cutoff, {}};
  for (const auto& [occ, amp] : s.amps) {
    if (occ[mode] == 0) continue;
    std::vector<int> o = occ;
    const double w = std::sqrt(static_cast<double>(o[mode]));
    o[mode] -= 1;
    out.amps[o] += amp * w;
  }
  return out;
}

FockState apply_beam_splitter(const FockState& s, const BeamSplitter& bs) {
  if (std::abs(bs.r * bs.r + bs.t * bs.t - 1.0) > 1e-12)
    throw std::invalid_argument("beam splitter: r^2 + t^2 != 1");
  FockState out{s.n_modes, s.cutoff, {}};
  for (const auto& [occ, amp] : s.amps) {
    const int m = occ[bs.mode_a];
    const int n = occ[bs.mode_b];
    // a_in^d = r a_out^d - t b_out^d ; b_in^d = t a_out^d + r b_out^d
    for (int i = 0; i <= m; ++i) {
      for (int j = 0; j <= n; ++j) {
        std::vector<int> o = occ;
        o[bs.mode_a] = i + j;
        o[bs.mode_b] = m + n - i - j;
        const double coeff =
            binomial(m, i) * std::pow(bs.r, i) * std::pow(-bs.t, m - i) * binomial(n, j) *
            std::pow(bs.t, j) * std::pow(bs.r, n - j) *
            std::sqrt(std::tgamma(i + j + 1.0) * std::tgamma(m + n - i - j + 1.0) /
                      (std::tgamma(m + 1.0) * std::tgamma(n + 1.0)));
        out.amps[o] += amp * coeff;
      }
    }
  }
  prune(out, 1e-15);
  return out;
}

std::pair<FockState, double> post_select(
    const FockState& s, const std::function<bool(const std::vector<int>&)>& keep) {
  FockState out{s.n_modes, s.cutoff, {}};
  for (const auto& [occ, amp] : s.amps)
    if (keep(occ)) out.amps[occ] = amp;
  const double p = out.norm() * out.norm();
  if (p > 0.0) out = out.normalized();
  return {out, p};
}

// ---------------------------------------------------------------------------
// PDC
// ---------------------------------------------------------------------------

FockState pdc_evolve(const PdcParams& params, const FockState& input) {
  if (params.lambda < 0.0 || params.lambda >= 1.0)
    throw std::invalid_argument("pdc_evolve: lambda must lie in [0, 1)");
  const auto terms = pdc_pairs(params);
  const int pairs = pdc_pair_count(params);
  const double lam = params.lambda;

  // exp(-lambda B): finite lowering series
  FockState acc = input;
  FockState cur = input;
  double fact = 1.0;
  for (int k = 1;; ++k) {
    cur = apply_pair_lower(cur, terms);
    prune(cur);
    if (cur.amps.empty()) break;
    fact *= k;
    const double coef = std::pow(-lam, k) / fact;
    for (const auto& [occ, amp] : cur.amps) acc.amps[occ] += coef * amp;
  }

  // (1 - lambda^2)^((n_tot + pairs)/2)
  for (auto& [occ, amp] : acc.amps) {
    const int n = std::accumulate(occ.begin(), occ.end(), 0);
    amp *= std::pow(1.0 - lam * lam, 0.5 * (n + pairs));
  }

  // exp(+lambda Bdag): raising series up to the cutoff
  FockState out = acc;
  cur = acc;
  fact = 1.0;
  for (int l = 1;; ++l) {
    cur = apply_pair_raise(cur, terms);
    prune(cur);
    if (cur.amps.empty()) break;
    fact *= l;
    const double coef = std::pow(lam, l) / fact;
    for (const auto& [occ, amp] : cur.amps) out.amps[occ] += coef * amp;
  }
  prune(out, 1e-15);
  return out;
}

PdcBranch pdc_output(const PdcParams& params, const FockState& input, int select_M) {
  const int n_signal = pdc_signal_modes(params);
  FockState evolved = pdc_evolve(params, input);
  const double captured = evolved.norm() * evolved.norm();
  auto keep = [&](const std::vector<int>& occ) {
    int s = 0;
    for (int j = 0; j < n_signal; ++j) s += occ[j];
    return s == select_M;
  };
  auto [branch, prob] = post_select(evolved, keep);
  return {branch, prob, 1.0 - captured};
}

double pdc_clone_fidelity(const PdcParams& params, int N, int M) {
  if (M < N || N < 1) throw std::invalid_argument("pdc_clone_fidelity: need M >= N >= 1");
  const int n_signal = pdc_signal_modes(params);
  const int n_modes = 2 * n_signal;
  // capture branches up to M+4 clones
  const int cutoff = 2 * (M + 4) - N;
  std::vector<int> occ(n_modes, 0);
  occ[0] = N;
  const FockState in = FockState::number(occ, cutoff);
  PdcBranch b = pdc_output(params, in, M);
  if (b.state.amps.empty()) throw std::runtime_error("pdc_clone_fidelity: empty branch (cutoff?)");
  // F = <n_signal-mode-0> / M for the branch; the target state is the input mode
  double f = 0.0;
  for (const auto& [o, amp] : b.state.amps)
    f += std::norm(amp) * o[0] / static_cast<double>(M);
  return f;
}

std::pair<long long, long long> dc_qudit_fidelity_rational(int N, int M, int d) {
  if (M <= N || N < 1 || d < 2)
    throw std::invalid_argument("dc_qudit_fidelity_rational: need M > N >= 1, d >= 2");
  Rat num(0);
  for (int m = 0; m <= M - N; ++m)
    num += Rat(binomial_ll(N + m, N) * binomial_ll(M - N + d - 2 - m, d - 2) * (N + m));
  const Rat f = num / Rat(static_cast<long long>(M) * binomial_ll(M + d - 1, N + d - 1));
  return {f.numerator(), f.denominator()};
}

double dc_qudit_fidelity(int N, int M, int d) {
  auto [num, den] = dc_qudit_fidelity_rational(N, M, d);
  return static_cast<double>(num) / static_cast<double>(den);
}

std::pair<long long, long long> universal_nm_fidelity_rational(int N, int M, int d) {
  const Rat f(static_cast<long long>(M) * (N + 1) + static_cast<long long>(d - 1) * N,
              static_cast<long long>(M) * (N + d));
  return {f.numerator(), f.denominator()};
}

// ---------------------------------------------------------------------------
// Hong-Ou-Mandel symmetrization
// ---------------------------------------------------------------------------

std::vector<double> hom_optimal_transmittances(int M) {
  std::vector<double> T;
  for (int j = 1; j < M; ++j) T.push_back(static_cast<double>(j) / (j + 1));
  return T;
}

HomResult hom_symmetrize(const FockState& input, int M, const std::vector<double>& T) {
  if (static_cast<int>(T.size()) != M - 1)
    throw std::invalid_argument("hom_symmetrize: need M-1 transmittances");
  FockState s = input;
  for (int j = 1; j < M; ++j) {
    const double t = std::sqrt(T[j - 1]);
    const double r = std::sqrt(1.0 - T[j - 1]);
    // accumulated state rides in spatial mode 0 through port b; the fresh
    // photon of spatial mode j enters port a; the bunch exits in port a
    for (int pol = 0; pol < 2; ++pol)
      s = apply_beam_splitter(s, {2 * j + pol, 0 + pol, r, t});
    // relabel so the accumulating output is spatial mode 0 again
    FockState swapped{s.n_modes, s.cutoff, {}};
    for (const auto& [occ, amp] : s.amps) {
      std::vector<int> o = occ;
      std::swap(o[0], o[2 * j]);
      std::swap(o[1], o[2 * j + 1]);
      swapped.amps[o] += amp;
    }
    s = swapped;
  }
  auto keep = [&](const std::vector<int>& occ) {
    for (int j = 1; j < M; ++j)
      if (occ[2 * j] != 0 || occ[2 * j + 1] != 0) return false;
    return true;
  };
  auto [bunched_full, prob] = post_select(s, keep);
  FockState pol{2, input.cutoff, {}};
  for (const auto& [occ, amp] : bunched_full.amps) pol.amps[{occ[0], occ[1]}] = amp;
  return {pol, prob};
}

namespace {

FockState one_photon_per_mode(const std::vector<Eigen::Vector2cd>& spinors, int cutoff) {
  const int M = static_cast<int>(spinors.size());
  FockState s = FockState::vacuum(2 * M, cutoff);
  for (int m = 0; m < M; ++m) {
    FockState next{s.n_modes, s.cutoff, {}};
    for (const auto& [occ, amp] : s.amps) {
      for (int pol = 0; pol < 2; ++pol) {
        if (spinors[m](pol) == cplx(0.0)) continue;
        std::vector<int> o = occ;
        o[2 * m + pol] += 1;
        next.amps[o] += amp * spinors[m](pol);
      }
    }
    s = next;
  }
  return s;
}

double sym_state_fidelity(const Vec& sym_amps, int M, const Eigen::Vector2cd& psi) {
  const Mat rho1 = sym_single_particle_rdm(2, M, sym_amps);
  return (psi.adjoint() * rho1 * psi)(0).real();
}

}  // namespace

SymmetrizationCloneReport clone_via_symmetrization(const Eigen::Vector2cd& psi, int M) {
  if (M < 2) throw std::invalid_argument("clone_via_symmetrization: M >= 2");
  const auto T = hom_optimal_transmittances(M);
  const Eigen::Vector2cd V(1.0, 0.0), H(0.0, 1.0);
  double joint = 0.0, fid = 0.0;
  const int branches = 1 << (M - 1);
  for (int b = 0; b < branches; ++b) {
    std::vector<Eigen::Vector2cd> spinors{psi};
    for (int m = 0; m < M - 1; ++m) spinors.push_back((b >> m) & 1 ? H : V);
    const FockState in = one_photon_per_mode(spinors, M + 4);
    const HomResult hr = hom_symmetrize(in, M, T);
    if (hr.probability <= 0.0) continue;
    const double w = hr.probability / branches;
    const Vec sym = pol_to_sym(hr.bunched.amps, M);
    fid += w * sym_state_fidelity(sym, M, psi);
    joint += w;
  }
  return {fid / joint, -1.0, joint};
}

SymmetrizationCloneReport clone_via_symmetrization_singlet(const Eigen::Vector2cd& psi) {
  // photon A = psi in spatial 0, singlet between spatial 1 (the blank) and
  // spatial 2 (kept as the anti-clone); the HOM stage acts on modes 0 and 1
  const int cutoff = 7;
  FockState s = FockState::vacuum(6, cutoff);
  FockState built{6, cutoff, {}};
  const double inv = 1.0 / std::sqrt(2.0);
  for (const auto& [occ, amp] : s.amps) {
    // |psi>_0 (x) (|V H> - |H V>)_{1,2} / sqrt(2)
    for (int pol0 = 0; pol0 < 2; ++pol0) {
      if (psi(pol0) == cplx(0.0)) continue;
      std::vector<int> o1 = occ;
      o1[0 + pol0] += 1;
      std::vector<int> a = o1;
      a[2 + 0] += 1;
      a[4 + 1] += 1;
      built.amps[a] += amp * psi(pol0) * inv;
      std::vector<int> bC = o1;
      bC[2 + 1] += 1;
      bC[4 + 0] += 1;
      built.amps[bC] -= amp * psi(pol0) * inv;
    }
  }
  // one balanced beam splitter between spatial modes 0 and 1
  for (int pol = 0; pol < 2; ++pol)
    built = apply_beam_splitter(built, {2 + pol, 0 + pol, inv, inv});
  // bunch in spatial mode 1 output (port a of the splitter), one photon in C
  auto keep = [&](const std::vector<int>& occ) {
    return occ[0] == 0 && occ[1] == 0 && occ[2] + occ[3] == 2 && occ[4] + occ[5] == 1;
  };
  auto [branch, prob] = post_select(built, keep);

  // clone fidelity: group amplitudes by the anti-clone occupation
  double fid = 0.0;
  for (int polC = 0; polC < 2; ++polC) {
    std::map<std::vector<int>, cplx> clones;
    for (const auto& [occ, amp] : branch.amps)
      if (occ[4 + polC] == 1) clones[{occ[2], occ[3]}] += amp;
    if (clones.empty()) continue;
    Vec sym = Vec::Zero(3);
    for (const auto& [occ, amp] : clones) sym(sym_qubit_index(2, occ[1])) = amp;
    const double w = sym.squaredNorm();
    if (w <= 0.0) continue;
    fid += w * sym_state_fidelity(sym / std::sqrt(w), 2, psi);
  }
  // anti-clone fidelity against psi_perp
  const Eigen::Vector2cd perp(-std::conj(psi(1)), std::conj(psi(0)));
  Mat rhoC = Mat::Zero(2, 2);
  for (const auto& [occ, amp] : branch.amps)
    for (const auto& [occ2, amp2] : branch.amps) {
      if (occ[2] != occ2[2] || occ[3] != occ2[3]) continue;
      const int p1 = occ[4] == 1 ? 0 : 1;
      const int p2 = occ2[4] == 1 ? 0 : 1;
      rhoC(p1, p2) += amp * std::conj(amp2);
    }
  const double anti = (perp.adjoint() * rhoC * perp)(0).real();
  return {fid, anti, prob};
}

// ---------------------------------------------------------------------------
// Asymmetric filtering
// ---------------------------------------------------------------------------

KetVector symmetric_cloner_state(const Eigen::Vector2cd& psi) {
  const Eigen::Vector2cd perp(-std::conj(psi(1)), std::conj(psi(0)));
  Vec amps = Vec::Zero(8);
  const std::vector<int> dims{2, 2, 2};
  auto put = [&](const Eigen::Vector2cd& a, const Eigen::Vector2cd& b, const Eigen::Vector2cd& c,
                 double w) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          amps(pack_index(dims, {i, j, k})) += w * a(i) * b(j) * c(k);
  };
  const double s = 1.0 / std::sqrt(6.0);
  put(psi, psi, perp, 2.0 * s);
  put(psi, perp, psi, -s);
  put(perp, psi, psi, -s);
  return {dims, amps};
}

std::pair<KetVector, double> asym_filter(const KetVector& state, int sub1, int sub2, double a) {
  if (a < 0.0 || a > 1.0) throw std::invalid_argument("asym_filter: a in [0,1]");
  Vec singlet(4);
  singlet << 0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0;
  Mat pim = singlet * singlet.adjoint();
  Mat filter = pim + a * (Mat::Identity(4, 4) - pim);
  Mat full = embed_op(state.dims, {sub1, sub2}, filter);
  Vec out = full * state.amps;
  const double p = out.squaredNorm();
  return {KetVector{state.dims, out / std::sqrt(p)}, p};
}

std::pair<double, double> asym_p_fidelities(double p) {
  const double den = 2.0 * (1.0 - p + p * p);
  return {1.0 - (1.0 - p) * (1.0 - p) / den, 1.0 - p * p / den};
}

namespace {
AsymmetryReport filter_report(const KetVector& filtered, double prob, double p,
                              const Eigen::Vector2cd& psi) {
  DensityOperator rho = DensityOperator::from_pure(filtered);
  KetVector psi_ket{{2}, Vec(2)};
  psi_ket.amps << psi(0), psi(1);
  const double FA = fidelity(partial_trace(rho, {0}), psi_ket);
  const double FB = fidelity(partial_trace(rho, {1}), psi_ket);
  return {p, FA, FB, prob};
}
}  // namespace

AsymmetryReport asym_filter_cloner(const Eigen::Vector2cd& psi, double a) {
  const KetVector sym = symmetric_cloner_state(psi);
  auto [filtered, prob] = asym_filter(sym, 1, 2, a);
  return filter_report(filtered, prob, (3.0 - a) / (3.0 + a), psi);
}

AsymmetryReport partial_teleport_cloner(const Eigen::Vector2cd& psi, double a) {
  // |psi>_B (x) |Psi->_AC
  Vec amps = Vec::Zero(8);
  const std::vector<int> dims{2, 2, 2};
  const double inv = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < 2; ++j) {
    if (psi(j) == cplx(0.0)) continue;
    amps(pack_index(dims, {0, j, 1})) += inv * psi(j);
    amps(pack_index(dims, {1, j, 0})) -= inv * psi(j);
  }
  KetVector in{dims, amps};
  auto [filtered, prob] = asym_filter(in, 1, 2, a);
  return filter_report(filtered, prob, (1.0 - a) / (1.0 + a), psi);
}

// ---------------------------------------------------------------------------
// Orthogonal-pair cloning via PDC
// ---------------------------------------------------------------------------

double orthopair_yopt(int M) {
  return M / 2.0 - 0.5 * std::sqrt(M * (M + 2.0) / 3.0);
}

OrthopairPdcResult orthopair_pdc(double lambda, int M, int cutoff_margin) {
  if (M < 2) throw std::invalid_argument("orthopair_pdc: M >= 2");
  const int cutoff = 2 * M + 2 * cutoff_margin;
  PdcParams params{lambda, PdcGeometry::qubit_singlet, 2};
  const FockState in = FockState::number({1, 0, 0, 1}, cutoff);
  FockState evolved = pdc_evolve(params, in);
  auto keep = [&](const std::vector<int>& occ) {
    return occ[0] + occ[1] == M && occ[2] + occ[3] == M;
  };
  auto [branch, prob] = post_select(evolved, keep);
  if (branch.amps.empty()) throw std::runtime_error("orthopair_pdc: empty branch");
  double fid = 0.0;
  for (const auto& [occ, amp] : branch.amps)
    fid += std::norm(amp) * occ[0] / static_cast<double>(M);
  return {branch, fid, prob};
}

// ---------------------------------------------------------------------------
// Phase-covariant beam-splitter cloner
// ---------------------------------------------------------------------------

double pc_bs_optimal_r2() { return 0.5 * (1.0 + 1.0 / std::sqrt(3.0)); }

PcBsResult pc_beamsplitter_cloner(double r2) {
  // r^2 = 1/2 is the degenerate edge: the |VV> branch amplitude vanishes
  if (r2 < 0.5 || r2 >= 1.0)
    throw std::invalid_argument("pc_beamsplitter_cloner: r^2 in [1/2, 1)");
  const double r = std::sqrt(r2), t = std::sqrt(1.0 - r2);

  // conditional map on basis inputs |V>, |H>; blank photon is |V>
  Mat cond = Mat::Zero(4, 2);
  double prob_v = 0.0, prob_h = 0.0;
  for (int in_pol = 0; in_pol < 2; ++in_pol) {
    // modes: (arm0 V, arm0 H, arm1 V, arm1 H); the PBS routes signal V to
    // arm 0 and signal H to arm 1, the blank V to arm 1
    const int cutoff = 4;
    std::vector<int> occ(4, 0);
    if (in_pol == 0)
      occ[0] = 1;  // signal V -> arm0 V
    else
      occ[3] = 1;  // signal H -> arm1 H
    occ[2] += 1;   // blank V -> arm1 V
    FockState s = FockState::number(occ, cutoff);
    for (int pol = 0; pol < 2; ++pol)
      s = apply_beam_splitter(s, {0 + pol, 2 + pol, r, t});
    auto keep = [](const std::vector<int>& o) {
      return o[0] + o[1] == 1 && o[2] + o[3] == 1;
    };
    auto [branch, p] = post_select(s, keep);
    (in_pol == 0 ? prob_v : prob_h) = p;
    for (const auto& [o, amp] : branch.amps) {
      const int polA = o[1] == 1 ? 1 : 0;
      const int polB = o[3] == 1 ? 1 : 0;
      cond(polA * 2 + polB, in_pol) += amp * std::sqrt(p);
    }
  }

  // equatorial fidelity and success probability
  double fid = 0.0, prob = 0.0;
  const int grid = 8;
  for (int g = 0; g < grid; ++g) {
    const double phi = 2.0 * kPi * g / grid;
    Vec in(2);
    in << 1.0 / std::sqrt(2.0), std::polar(1.0 / std::sqrt(2.0), phi);
    Vec out = cond * in;
    const double p = out.squaredNorm();
    out /= std::sqrt(p);
    DensityOperator rho{{2, 2}, out * out.adjoint()};
    KetVector psi{{2}, in};
    fid += 0.5 * (fidelity(partial_trace(rho, {0}), psi) + fidelity(partial_trace(rho, {1}), psi));
    prob += p;
  }
  return {cond, prob / grid, fid / grid};
}

// ---------------------------------------------------------------------------
// Amplifier
// ---------------------------------------------------------------------------

double amplifier_fidelity(double n_in, double n_out, double Q) {
  if (Q <= 0.0 || n_in <= 0.0 || n_out < n_in)
    throw std::invalid_argument("amplifier_fidelity: need Q > 0, n_out >= n_in > 0");
  return (Q * n_out * n_in + n_out + n_in) / (Q * n_out * n_in + 2.0 * n_out);
}

}  // namespace clonekit
