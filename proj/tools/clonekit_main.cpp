#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "clonekit/cloners.hpp"
#include "clonekit/cvclone.hpp"
#include "clonekit/objectives.hpp"
#include "clonekit/optics.hpp"
#include "clonekit/qcore.hpp"
#include "clonekit/registry.hpp"
#include "clonekit/sdp.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace clonekit;

constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;
constexpr int kExitSizeCap = 4;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// fidelity
// ---------------------------------------------------------------------------

struct FidelityRow {
  std::string family;
  int d, N, M;
  double closed_form;
  double constructed;
};

double universal_constructed(int d, int N, int M) {
  if (N == 1 && M == 2) {
    AnsatzMatrix a = universal_ansatz(d, universal_symmetric_fidelity(d));
    return ansatz_fidelity_A(a, basis_ket({d}, {0}));
  }
  ChoiOperator S = universal_nm_choi(d, N, M);
  // input |0>^N in the symmetric basis
  const auto labels = sym_basis_labels(d, N);
  Vec in = Vec::Zero(S.d_in);
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i].occ[0] == N) in(i) = 1.0;
  Mat rho_out = S.apply(in * in.adjoint());
  Mat h = Mat::Zero(d, d);
  h(0, 0) = 1.0;
  return (rho_out * sym_one_body_operator(d, M, h)).trace().real() / M;
}

double fourier_constructed(int d) {
  // machine fixed point F_B(F_A) = F_A by bisection
  double lo = 1.0 / d + 1e-9, hi = 1.0 - 1e-9;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (heisenberg_tradeoff_FB(HeisenbergFamily::fourier, d, mid) > mid)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double pc_constructed(int d, int N, int M) {
  if (d == 2) {
    const auto shifts = pc_qubit_nm_optimal_shifts(N, M);
    return pc_equatorial_fidelity_of_map(pc_qubit_nm_map(N, M, shifts.front()), N, M);
  }
  if (N != 1 || M != 2)
    throw std::invalid_argument("pc fidelity for d > 2 is implemented for N=1, M=2 only");
  const Mat V = pc_qudit_12_isometry(d);
  // average over a phase grid of balanced superpositions
  double acc = 0.0;
  const int grid = 4;
  long long points = 1;
  for (int i = 0; i < d - 1; ++i) points *= grid;
  for (long long g = 0; g < points; ++g) {
    Vec psi(d);
    psi(0) = 1.0 / std::sqrt(static_cast<double>(d));
    long long rest = g;
    for (int j = 1; j < d; ++j) {
      psi(j) = std::polar(1.0 / std::sqrt(static_cast<double>(d)),
                          2.0 * 3.14159265358979323846 * (rest % grid) / grid);
      rest /= grid;
    }
    Vec out = V * psi;
    DensityOperator rho{{d, d, d}, out * out.adjoint()};
    acc += fidelity(partial_trace(rho, {0}), KetVector{{d}, psi});
  }
  return acc / points;
}

FidelityRow fidelity_row(const std::string& family, int d, int N, int M) {
  FidelityRow row{family, d, N, M, 0.0, 0.0};
  if (family == "universal") {
    row.closed_form =
        eval_formula("univ-nm-d", {{"N", double(N)}, {"M", double(M)}, {"d", double(d)}});
    row.constructed = universal_constructed(d, N, M);
  } else if (family == "pc" || family == "phase") {
    if (d == 2) {
      const int diff = M - N;
      row.closed_form = (diff % 2 == 0)
                            ? eval_formula("pc-nm-2-even", {{"N", double(N)}, {"M", double(M)}})
                            : eval_formula("pc-nm-2-odd", {{"N", double(N)}, {"M", double(M)}});
    } else {
      row.closed_form = eval_formula("pc-12-d", {{"d", double(d)}});
    }
    row.constructed = pc_constructed(d, N, M);
  } else if (family == "fourier") {
    row.closed_form = eval_formula("fourier-12-d", {{"d", double(d)}});
    row.constructed = fourier_constructed(d);
  } else if (family == "cv") {
    row.closed_form = eval_formula("cv-nm", {{"N", double(N)}, {"M", double(M)}});
    if (N == 1 && M == 2)
      row.constructed = feedforward_clone_moments().fidelity;
    else
      row.constructed = fidelity_from_nbar((cv_params_for(N, M).G - 1.0) / M);
  } else if (family == "orthopair") {
    row.closed_form = eval_formula("orthopair-m", {{"M", double(M)}});
    row.constructed = orthopair_pdc(std::sqrt(orthopair_yopt(M) / (1.0 + orthopair_yopt(M))), M)
                          .fidelity;
  } else if (family == "unot") {
    row.closed_form = unot_fidelity(N);
    SdpProblem prob{r_unot(N)};
    SdpSolution s = solve(prob, 1e-8);
    if (!s.converged) throw std::runtime_error("unot solve did not converge");
    row.constructed = s.value;
  } else {
    throw std::invalid_argument("unknown family: " + family);
  }
  return row;
}

int cmd_fidelity(const std::string& family, int d, int N, int M, const std::string& format) {
  const FidelityRow row = fidelity_row(family, d, N, M);
  const double delta = std::abs(row.closed_form - row.constructed);
  if (format == "json") {
    json j;
    j["family"] = row.family;
    j["d"] = row.d;
    j["n"] = row.N;
    j["m"] = row.M;
    j["closed_form"] = row.closed_form;
    j["constructed"] = row.constructed;
    j["abs_delta"] = delta;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "family,d,n,m,closed_form,constructed,abs_delta\n";
    std::cout << row.family << "," << row.d << "," << row.N << "," << row.M << ","
              << fmt(row.closed_form) << "," << fmt(row.constructed) << "," << fmt(delta) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// optimize
// ---------------------------------------------------------------------------

int cmd_optimize(const std::string& family, int d, int points, const std::vector<double>& p_list,
                 double tol) {
  HeisenbergFamily fam;
  if (family == "universal")
    fam = HeisenbergFamily::universal;
  else if (family == "fourier")
    fam = HeisenbergFamily::fourier;
  else if (family == "pc" || family == "phase")
    fam = HeisenbergFamily::phase;
  else
    throw std::invalid_argument("unknown family for optimize: " + family);
  if (points < 1) throw std::invalid_argument("p-grid needs at least one point");

  std::vector<double> grid = p_list;
  if (grid.empty())
    for (int i = 1; i <= points; ++i) grid.push_back(static_cast<double>(i) / (points + 1));
  const auto curve = asym_tradeoff(fam, d, grid, tol);

  std::cout << "family,d,p,F_A,F_B,certified\n";
  bool all_ok = true;
  for (const auto& pt : curve) {
    std::cout << family << "," << d << "," << fmt(pt.p) << "," << fmt(pt.FA) << "," << fmt(pt.FB)
              << "," << (pt.certified ? "yes" : "no") << "\n";
    all_ok = all_ok && pt.certified;
  }
  return all_ok ? 0 : kExitSolver;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

json simulate_pdc(int N, int M, int d, double lambda) {
  PdcParams params{lambda, d == 2 ? PdcGeometry::qubit_singlet : PdcGeometry::qudit_timebin, d};
  const int n_signal = d;
  std::vector<int> occ(2 * n_signal, 0);
  occ[0] = N;
  const FockState in = FockState::number(occ, 2 * (M + 4) - N);
  const PdcBranch branch = pdc_output(params, in, M);
  double f = 0.0;
  for (const auto& [o, amp] : branch.state.amps)
    f += std::norm(amp) * o[0] / static_cast<double>(M);
  json j;
  j["scenario"] = "pdc";
  j["n"] = N;
  j["m"] = M;
  j["d"] = d;
  j["lambda"] = lambda;
  j["fidelity"] = f;
  j["registry_value"] =
      eval_formula("univ-nm-d", {{"N", double(N)}, {"M", double(M)}, {"d", double(d)}});
  j["abs_delta"] = std::abs(f - j["registry_value"].get<double>());
  j["branch_probability"] = branch.probability;
  j["branch_weight_lambda_power"] = 2 * (M - N);
  j["truncation_deficit"] = branch.deficit;
  return j;
}

json simulate_symmetrize(int M) {
  const Eigen::Vector2cd psi(1.0, 0.0);
  const auto rep = clone_via_symmetrization(psi, M);
  json j;
  j["scenario"] = "symmetrize";
  j["m"] = M;
  j["transmittances"] = hom_optimal_transmittances(M);
  j["success_probability"] = rep.success_probability;
  j["clone_fidelity"] = rep.clone_fidelity;
  j["registry_value"] =
      eval_formula("univ-nm-d", {{"N", 1.0}, {"M", double(M)}, {"d", 2.0}});
  j["abs_delta"] = std::abs(rep.clone_fidelity - j["registry_value"].get<double>());
  return j;
}

json simulate_filter(double a) {
  const Eigen::Vector2cd psi(std::cos(0.55), std::sin(0.55) * std::polar(1.0, 0.85));
  const auto rep = asym_filter_cloner(psi, a);
  const auto closed = asym_p_fidelities(rep.p);
  json j;
  j["scenario"] = "filter";
  j["a"] = a;
  j["p"] = rep.p;
  j["success_probability"] = rep.probability;
  j["F_A"] = rep.FA;
  j["F_B"] = rep.FB;
  j["registry_F_A"] = closed.first;
  j["registry_F_B"] = closed.second;
  j["abs_delta"] = std::max(std::abs(rep.FA - closed.first), std::abs(rep.FB - closed.second));
  return j;
}

json simulate_pc_bs(double r2) {
  const auto res = pc_beamsplitter_cloner(r2);
  json j;
  j["scenario"] = "pc-bs";
  j["r2"] = r2;
  j["fidelity"] = res.fidelity;
  j["success_probability"] = res.probability;
  j["registry_value"] = eval_formula("pc-bs-fr", {{"r2", r2}});
  j["abs_delta"] = std::abs(res.fidelity - j["registry_value"].get<double>());
  return j;
}

json simulate_orthopair(int M, double y) {
  if (y < 0.0) y = orthopair_yopt(M);
  const double lambda = std::sqrt(y / (1.0 + y));
  const auto res = orthopair_pdc(lambda, M);
  json j;
  j["scenario"] = "orthopair";
  j["m"] = M;
  j["y"] = y;
  j["lambda"] = lambda;
  j["fidelity"] = res.fidelity;
  j["success_probability"] = res.probability;
  j["registry_value"] = eval_formula("orthopair-dc", {{"M", double(M)}, {"y", y}});
  j["abs_delta"] = std::abs(res.fidelity - j["registry_value"].get<double>());
  j["registry_optimum"] = eval_formula("orthopair-m", {{"M", double(M)}});
  return j;
}

json simulate_cv_feedforward() {
  const auto m = feedforward_clone_moments();
  json j;
  j["scenario"] = "cv-feedforward";
  j["mean_gain_A"] = m.mean_gain_A;
  j["mean_gain_B"] = m.mean_gain_B;
  j["added_noise_x_A"] = m.added_x_A;
  j["added_noise_p_A"] = m.added_p_A;
  j["fidelity"] = m.fidelity;
  j["registry_value"] = eval_formula("cv-12", {});
  j["abs_delta"] = std::abs(m.fidelity - 2.0 / 3.0);
  return j;
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

int cmd_registry(const std::string& filter) {
  json out = json::array();
  for (const auto& f : registry()) {
    if (!filter.empty() && f.id.find(filter) == std::string::npos) continue;
    json e;
    e["id"] = f.id;
    e["params"] = f.params;
    e["kind"] = f.kind;
    e["citation"] = f.citation;
    if (f.conjectured) e["conjectured"] = true;
    out.push_back(e);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clonekit: optimal quantum cloning machines, SDP optimization, and optical "
               "simulation"};
  app.require_subcommand(1);

  // fidelity
  std::string family = "universal", format = "csv";
  int d = 2, N = 1, M = 2;
  auto* fid = app.add_subcommand("fidelity", "closed-form vs machine-constructed fidelity");
  fid->add_option("--family", family, "universal|pc|fourier|cv|orthopair|unot");
  fid->add_option("--d", d, "local dimension");
  fid->add_option("--n", N, "input copies");
  fid->add_option("--m", M, "output clones");
  fid->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  // optimize
  std::string opt_family = "universal";
  int opt_d = 2, opt_points = 11;
  double opt_tol = 1e-7;
  std::vector<double> opt_p;
  auto* opt = app.add_subcommand("optimize", "SDP asymmetry trade-off curve");
  opt->add_option("--family", opt_family, "universal|pc|fourier");
  opt->add_option("--d", opt_d, "local dimension");
  opt->add_option("--points", opt_points, "interior p-grid points");
  opt->add_option("--p", opt_p, "explicit asymmetry weights in (0,1), overrides --points");
  opt->add_option("--tol", opt_tol, "solver tolerance");

  // simulate
  std::string scenario;
  int sim_n = 1, sim_m = 2, sim_d = 2;
  double sim_lambda = 0.3, sim_a = 0.5, sim_r2 = 0.7886751345948129, sim_y = -1.0;
  auto* sim = app.add_subcommand("simulate", "optical / CV simulation report (JSON)");
  sim->add_option("scenario", scenario, "pdc|symmetrize|filter|pc-bs|orthopair|cv-feedforward")
      ->required();
  sim->add_option("--n", sim_n);
  sim->add_option("--m", sim_m);
  sim->add_option("--d", sim_d);
  sim->add_option("--lambda", sim_lambda);
  sim->add_option("--a", sim_a);
  sim->add_option("--r2", sim_r2);
  sim->add_option("--y", sim_y);

  // registry
  std::string reg_filter;
  auto* reg = app.add_subcommand("registry", "closed-form registry dump (JSON)");
  reg->add_option("--id", reg_filter, "substring filter");

  CLI11_PARSE(app, argc, argv);

  try {
    if (fid->parsed()) return cmd_fidelity(family, d, N, M, format);
    if (opt->parsed()) return cmd_optimize(opt_family, opt_d, opt_points, opt_p, opt_tol);
    if (sim->parsed()) {
      json j;
      if (scenario == "pdc")
        j = simulate_pdc(sim_n, sim_m, sim_d, sim_lambda);
      else if (scenario == "symmetrize")
        j = simulate_symmetrize(sim_m);
      else if (scenario == "filter")
        j = simulate_filter(sim_a);
      else if (scenario == "pc-bs")
        j = simulate_pc_bs(sim_r2);
      else if (scenario == "orthopair")
        j = simulate_orthopair(sim_m, sim_y);
      else if (scenario == "cv-feedforward")
        j = simulate_cv_feedforward();
      else
        throw std::invalid_argument("unknown scenario: " + scenario);
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (reg->parsed()) return cmd_registry(reg_filter);
  } catch (const SizeCapError& e) {
    std::cerr << "size cap: " << e.what() << "\n";
    return kExitSizeCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage/domain error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  }
  return 0;
}
