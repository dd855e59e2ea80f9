#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clonekit/cloners.hpp"
#include "clonekit/cvclone.hpp"
#include "clonekit/objectives.hpp"
#include "clonekit/optics.hpp"
#include "clonekit/qcore.hpp"
#include "clonekit/registry.hpp"
#include "clonekit/sdp.hpp"

namespace py = pybind11;
using namespace clonekit;

namespace {

RObjective objective_by_name(const std::string& family, int d) {
  if (family == "universal") return r_universal(d, CloneSide::sym);
  if (family == "phase" || family == "pc") return r_phase(d, CloneSide::sym);
  if (family == "fourier") return r_fourier(d, CloneSide::sym);
  if (family == "unot") return r_unot(d);  // d plays the role of N here
  throw std::invalid_argument("unknown objective family: " + family);
}

py::dict solve_family(const std::string& family, int d, double tol) {
  const RObjective r = objective_by_name(family, d);
  std::function<Mat(const Mat&)> polish;
  if (r.d_out == r.d_in * r.d_in) {
    const int dd = r.d_in;
    polish = [dd](const Mat& s) { return wh_twirl_12(s, dd); };
  }
  const SdpSolution s = solve({r}, tol, 50000, 0, polish);
  py::dict out;
  out["value"] = s.value;
  out["converged"] = s.converged;
  out["certified"] = s.certified;
  out["iterations"] = s.iterations;
  out["upper_bound"] = s.upper_bound;
  out["worst_residual"] = s.residuals.worst();
  out["choi"] = s.S.S;
  return out;
}

}  // namespace

PYBIND11_MODULE(_clonekit, m) {
  m.doc() = "quantum cloning machines: constructors, SDP optimization, optical simulation";

  py::register_exception<SizeCapError>(m, "SizeCapError");

  // qcore
  m.def(
      "bell_state",
      [](int mm, int nn, int d) { return bell_state({mm, nn, d}).amps; },
      py::arg("m"), py::arg("n"), py::arg("d"),
      "generalized Bell state B_{m,n} as a d^2 amplitude vector");
  m.def(
      "error_operator",
      [](int mm, int nn, int d) { return error_operator({mm, nn, d}); },
      py::arg("m"), py::arg("n"), py::arg("d"),
      "Weyl-Heisenberg error operator E_{m,n}");
  m.def(
      "partial_trace",
      [](const Mat& op, const std::vector<int>& dims, const std::vector<int>& keep) {
        return partial_trace(op, dims, keep);
      },
      py::arg("op"), py::arg("dims"), py::arg("keep"));
  m.def(
      "partial_transpose",
      [](const Mat& op, const std::vector<int>& dims, int sub) {
        return partial_transpose(op, dims, sub);
      },
      py::arg("op"), py::arg("dims"), py::arg("subsystem"));
  m.def("symmetric_projector", &symmetric_projector, py::arg("d"), py::arg("M"));
  m.def("sym_dim", &sym_dim, py::arg("d"), py::arg("M"));
  m.def(
      "fidelity",
      [](const Mat& rho, const Vec& psi, const std::vector<int>& dims) {
        return fidelity(DensityOperator{dims, rho}, KetVector{dims, psi});
      },
      py::arg("rho"), py::arg("psi"), py::arg("dims"));

  // cloners
  m.def(
      "universal_ansatz", [](int d, double fa) { return universal_ansatz(d, fa).a; },
      py::arg("d"), py::arg("F_A"));
  m.def(
      "fourier_ansatz", [](int d, double fa) { return fourier_ansatz(d, fa).a; }, py::arg("d"),
      py::arg("F_A"));
  m.def(
      "phase_ansatz", [](int d, double fa) { return phase_ansatz(d, fa).a; }, py::arg("d"),
      py::arg("F_A"));
  m.def(
      "ansatz_clone_fidelities",
      [](const Mat& a, const Vec& psi) {
        const int d = static_cast<int>(a.rows());
        AnsatzMatrix am{d, a};
        KetVector kv{{d}, psi};
        return std::make_pair(ansatz_fidelity_A(am, kv), ansatz_fidelity_B(am, kv));
      },
      py::arg("a"), py::arg("psi"),
      "clone fidelities (F_A, F_B) of a double-Bell machine for the given input state");
  m.def(
      "heisenberg_choi",
      [](const Mat& a) {
        const int d = static_cast<int>(a.rows());
        return heisenberg_choi(AnsatzMatrix{d, a}).S;
      },
      py::arg("a"));
  m.def("universal_symmetric_fidelity", &universal_symmetric_fidelity, py::arg("d"));
  m.def("phase_symmetric_fidelity", &phase_symmetric_fidelity, py::arg("d"));
  m.def("fourier_symmetric_fidelity", &fourier_symmetric_fidelity, py::arg("d"));
  m.def("universal_nm_fidelity", &universal_nm_fidelity, py::arg("d"), py::arg("N"), py::arg("M"));
  m.def(
      "universal_nm_choi",
      [](int d, int N, int M) {
        const ChoiOperator S = universal_nm_choi(d, N, M);
        return py::make_tuple(S.S, S.d_in, S.d_out);
      },
      py::arg("d"), py::arg("N"), py::arg("M"),
      "Choi matrix of the optimal N->M cloner on the symmetric bases, with its dimensions");
  m.def("universal_nm_qubit_isometry", &universal_nm_qubit_isometry, py::arg("N"), py::arg("M"));
  m.def("asym_universal_fidelities", &asym_universal_fidelities, py::arg("d"), py::arg("alpha"),
        py::arg("beta"));
  m.def("pc_qubit_nm_fidelity", &pc_qubit_nm_fidelity, py::arg("N"), py::arg("M"));
  m.def("pc_qudit_12_fidelity", &pc_qudit_12_fidelity, py::arg("d"));
  m.def("orthopair_fidelity", &orthopair_fidelity, py::arg("M"));
  m.def("unot_fidelity", &unot_fidelity, py::arg("N"));

  // sdp
  m.def("solve_cloning_sdp", &solve_family, py::arg("family"), py::arg("d"),
        py::arg("tol") = 1e-8,
        "maximize Tr[S R] over trace-preserving Choi matrices for a named objective;"
        " for family='unot' the second argument is N");

  // optics
  m.def(
      "pdc_clone_fidelity",
      [](int N, int M, int d, double lam) {
        PdcParams p{lam, d == 2 ? PdcGeometry::qubit_singlet : PdcGeometry::qudit_timebin, d};
        return pdc_clone_fidelity(p, N, M);
      },
      py::arg("N"), py::arg("M"), py::arg("d") = 2, py::arg("lam") = 0.3);
  m.def("dc_qudit_fidelity_rational", &dc_qudit_fidelity_rational, py::arg("N"), py::arg("M"),
        py::arg("d"));
  m.def("amplifier_fidelity", &amplifier_fidelity, py::arg("n_in"), py::arg("n_out"),
        py::arg("Q"));
  m.def(
      "symmetrization_clone_fidelity",
      [](int M) { return clone_via_symmetrization({1.0, 0.0}, M).clone_fidelity; }, py::arg("M"));
  m.def(
      "asym_filter_cloner",
      [](double a) {
        const auto rep = asym_filter_cloner({1.0, 0.0}, a);
        py::dict out;
        out["p"] = rep.p;
        out["F_A"] = rep.FA;
        out["F_B"] = rep.FB;
        out["probability"] = rep.probability;
        return out;
      },
      py::arg("a"));
  m.def(
      "pc_beamsplitter_cloner",
      [](double r2) {
        const auto res = pc_beamsplitter_cloner(r2);
        py::dict out;
        out["fidelity"] = res.fidelity;
        out["probability"] = res.probability;
        out["conditional_map"] = res.conditional_map;
        return out;
      },
      py::arg("r2"));
  m.def(
      "orthopair_pdc_fidelity",
      [](double lam, int M) { return orthopair_pdc(lam, M).fidelity; }, py::arg("lam"),
      py::arg("M"));
  m.def("orthopair_yopt", &orthopair_yopt, py::arg("M"));

  // cvclone
  m.def("cv_nm_fidelity", &cv_nm_fidelity, py::arg("N"), py::arg("M"));
  m.def("cv_asym_fidelities", &cv_asym_fidelities, py::arg("gamma"));
  m.def("feedforward_clone_fidelity", [] { return feedforward_clone_moments().fidelity; });
  m.def(
      "finite_width_fidelity",
      [](double s2) {
        const auto r = finite_width_fidelity(s2);
        return std::make_pair(r.fidelity, r.gain);
      },
      py::arg("sigma2"));
  m.def("balanced_conjugate_fidelity", &balanced_conjugate_fidelity, py::arg("N"), py::arg("M"));
  m.def("conjugate_input_gain", &conjugate_input_gain, py::arg("N"), py::arg("Nprime"),
        py::arg("M"));

  // registry
  m.def("registry", [] {
    py::list out;
    for (const auto& f : clonekit::registry()) {
      py::dict e;
      e["id"] = f.id;
      e["params"] = f.params;
      e["kind"] = f.kind;
      e["citation"] = f.citation;
      e["conjectured"] = f.conjectured;
      out.append(e);
    }
    return out;
  });
  m.def(
      "eval_formula",
      [](const std::string& id, const py::dict& args) {
        FormulaArgs fa;
        for (const auto& item : args)
          fa[item.first.cast<std::string>()] = item.second.cast<double>();
        return eval_formula(id, fa);
      },
      py::arg("id"), py::arg("args") = py::dict());
}
