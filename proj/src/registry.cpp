#include "clonekit/registry.hpp"

#include <cmath>
#include <stdexcept>

namespace clonekit {

namespace {

double arg(const FormulaArgs& a, const std::string& name) {
  auto it = a.find(name);
  if (it == a.end()) throw std::invalid_argument("missing formula argument: " + name);
  return it->second;
}

int iarg(const FormulaArgs& a, const std::string& name) {
  const double v = arg(a, name);
  const int i = static_cast<int>(std::llround(v));
  if (std::abs(v - i) > 1e-9) throw std::invalid_argument("integer argument expected: " + name);
  return i;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("formula domain violated: ") + what);
}

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<FidelityFormula> build() {
  std::vector<FidelityFormula> reg;
  auto add = [&](FidelityFormula f) { reg.push_back(std::move(f)); };

  // --- universal cloners ---------------------------------------------------
  add({"univ-nm-2", {"N", "M"}, "fidelity",
       "Gisin and Massar, Phys. Rev. Lett. 79, 2153 (1997)", false,
       [](const FormulaArgs& a) {
         const int N = iarg(a, "N"), M = iarg(a, "M");
         require(N >= 1 && M >= N, "M >= N >= 1");
         return (static_cast<double>(M) * (N + 1) + N) / (static_cast<double>(M) * (N + 2));
       }});
  add({"univ-n-inf-2", {"N"}, "fidelity",
       "Massar and Popescu, Phys. Rev. Lett. 74, 1259 (1995)", false,
       [](const FormulaArgs& a) {
         const int N = iarg(a, "N");
         require(N >= 1, "N >= 1");
         return (N + 1.0) / (N + 2.0);
       }});
  add({"univ-12-d", {"d"}, "fidelity",
       "Cerf, Acta Phys. Slov. 48, 115 (1998); Werner, Phys. Rev. A 58, 1827 (1998)", false,
       [](const FormulaArgs& a) {
         const int d = iarg(a, "d");
         require(d >= 2, "d >= 2");
         return (d + 3.0) / (2.0 * (d + 1.0));
       }});
  add({"univ-nm-d", {"N", "M", "d"}, "fidelity",
       "Werner, Phys. Rev. A 58, 1827 (1998); Keyl and Werner, J. Math. Phys. 40, 3283 (1999)",
       false, [](const FormulaArgs& a) {
         const int N = iarg(a, "N"), M = iarg(a, "M"), d = iarg(a, "d");
         require(N >= 1 && M >= N && d >= 2, "M >= N >= 1, d >= 2");
         return (static_cast<double>(M) * (N + 1) + (d - 1.0) * N) /
                (static_cast<double>(M) * (N + d));
       }});
  add({"univ-n-inf-d", {"N", "d"}, "fidelity",
       "Bruss, Ekert, Macchiavello, Phys. Rev. Lett. 81, 2598 (1998)", false,
       [](const FormulaArgs& a) {
         const int N = iarg(a, "N"), d = iarg(a, "d");
         require(N >= 1 && d >= 2, "N >= 1, d >= 2");
         return (N + 1.0) / (N + static_cast<double>(d));
       }});
  add({"univ-asym-fa", {"d", "beta"}, "fidelity",
       "Cerf, Phys. Rev. Lett. 84, 4497 (2000); J. Mod. Opt. 47, 187 (2000)", false,
       [](const FormulaArgs& a) {
         const int d = iarg(a, "d");
         const double beta = arg(a, "beta");
         require(d >= 2 && beta >= 0.0 && beta <= 1.0, "d >= 2, beta in [0,1]");
         return 1.0 - (d - 1.0) * beta * beta / d;
       }});
  add({"univ-asym-fb", {"d", "beta"}, "fidelity",
       "Cerf, Phys. Rev. Lett. 84, 4497 (2000); J. Mod. Opt. 47, 187 (2000)", false,
       [](const FormulaArgs& a) {
         const int d = iarg(a, "d");
         const double beta = arg(a, "beta");
         require(d >= 2 && beta >= 0.0 && beta <= 1.0, "d >= 2, beta in [0,1]");
         const double alpha =
             -beta / d + std::sqrt(beta * beta / (static_cast<double>(d) * d) + 1.0 - beta * beta);
         return 1.0 - (d - 1.0) * alpha * alpha / d;
       }});
  add({"univ-asym-norm", {"d", "alpha", "beta"}, "predicate",
       "Cerf, J. Mod. Opt. 47, 187 (2000)", false, [](const FormulaArgs& a) {
         const int d = iarg(a, "d");
         const double al = arg(a, "alpha"), be = arg(a, "beta");
         require(d >= 2, "d >= 2");
         return al * al + be * be + 2.0 * al * be / d;  // = 1 on the family
       }});
  add({"pauli-ellipsoid", {"x", "y", "z"}, "predicate",
       "Cerf, Phys. Rev. Lett. 84, 4497 (2000)", false, [](const FormulaArgs& a) {
         const double x = arg(a, "x"), y = arg(a, "y"), z = arg(a, "z");
         return x * x + y * y + z * z + x * y + x * z + y * z;  // = 1/2 on the family
       }});

  // --- phase- and Fourier-covariant cloners --------------------------------
  add({"pc-12-2", {}, "fidelity",
       "Bruss, Cinchetti, D'Ariano, Macchiavello, Phys. Rev. A 62, 012302 (2000)", false,
       [](const FormulaArgs&) { return 0.5 + 1.0 / std::sqrt(8.0); }});
  add({"pc-13-2", {}, "fidelity",
       "D'Ariano and Lo Presti, Phys. Rev. A 64, 042308 (2001)", false,
       [](const FormulaArgs&) { return 5.0 / 6.0; }});
  add({"pc-1m-2", {"M"}, "fidelity",
       "Fan, Matsumoto, Wang, Wadati, Phys. Rev. A 65, 012304 (2001)", false,
       [](const FormulaArgs& a) {
         const int M = iarg(a, "M");
         require(M >= 2, "M >= 2");
         if (M % 2 == 0) return 0.5 + std::sqrt(static_cast<double>(M) * (M + 2)) / (4.0 * M);
         return 0.5 + (M + 1.0) / (4.0 * M);
       }});
  add({"pc-nm-2-even", {"N", "M"}, "fidelity",
       "Fan et al., Phys. Rev. A 65, 012304 (2001); D'Ariano and Macchiavello, "
       "Phys. Rev. A 67, 042306 (2003)",
       false, [](const FormulaArgs& a) {
         const int N = iarg(a, "N"), M = iarg(a, "M");
         require(M > N && N >= 1 && (M - N) % 2 == 0, "M > N >= 1, matching parity");
         const int L = (M - N) / 2;
         double s = 0.0;
         for (int j = 0; j < N; ++j)
           s += std::sqrt(binom(N, j) * binom(N, j + 1)) *
                std::sqrt(static_cast<double>(N + L - j) * (L + j + 1));
         return 0.5 + s / (M * std::pow(2.0, N));
       }});
  add({"pc-nm-2-odd", {"N", "M"}, "fidelity",
       "Fan et al., Phys. Rev. A 65, 012304 (2001); fidelity of the shifted-Dicke map, "
       "known not to be optimal when the parities of N and M differ",
       true, [](const FormulaArgs& a) {
         const int N = iarg(a, "N"), M = iarg(a, "M");
         require(M > N && N >= 1 && (M - N) % 2 == 1, "M > N >= 1, opposite parity");
         const int L = (M - N - 1) / 2;
         double s = 0.0;
         for (int j = 0; j < N; ++j)
           s += std::sqrt(binom(N, j) * binom(N, j + 1)) *
                (std::sqrt(static_cast<double>(N + L - j + 1) * (L + j + 1)) +
                 std::sqrt(static_cast<double>(L + j + 2) * (N + L - j)));
         return 0.5 + s / (M * std::pow(2.0, N + 1));
       }});
  add({"pc-12-3", {}, "fidelity",
       "Cerf, Durt, Gisin, J. Mod. Opt. 49, 1355 (2002); D'Ariano and Lo Presti (2001)", false,
       [](const FormulaArgs&) { return (5.0 + std::sqrt(17.0)) / 12.0; }});
  add({"pc-12-d", {"d"}, "fidelity",
       "Fan, Imai, Matsumoto, Wang, Phys. Rev. A 67, 022317 (2003)", false,
       [](const FormulaArgs& a) {
         const int d = iarg(a, "d");
         require(d >= 2, "d >= 2");
         return 1.0 / d +
                (d - 2.0 + std::sqrt(static_cast<double>(d) * d + 4.0 * d - 4.0)) / (4.0 * d);
       }});
  add({"fourier-12-3", {}, "fidelity", "Cerf, Durt, Gisin, J. Mod. Opt. 49, 1355 (2002)", false,
       [](const FormulaArgs&) { return 0.5 + 1.0 / std::sqrt(12.0); }});
  add({"fourier-12-d", {"d"}, "fidelity",
       "Cerf, Bourennane, Karlsson, Gisin, Phys. Rev. Lett. 88, 127902 (2002)", false,
       [](const FormulaArgs& a) {
         const int d = iarg(a, "d");
         require(d >= 2, "d >= 2");
         return 0.5 + 1.0 / std::sqrt(4.0 * d);
       }});
  add({"real-12-d", {"d"}, "fidelity", "Navez and Cerf, Phys. Rev. A 68, 032313 (2003)", false,
       [](const FormulaArgs& a) {
         const int d = iarg(a, "d");
         require(d >= 2, "d >= 2");
         return 0.5 + (2.0 - d + std::sqrt(static_cast<double>(d) * d + 4.0 * d + 20.0)) /
                          (4.0 * (d + 2.0));
       }});

  // --- entanglement cloners -------------------------------------------------
  add({"entang-12-2x2", {}, "fidelity",
       "Lamoureux, Navez, Fiurasek, Cerf, Phys. Rev. A 69, 040301 (2004)", false,
       [](const FormulaArgs&) { return (5.0 + std::sqrt(13.0)) / 12.0; }});
  add({"entang-12-dxd", {"d"}, "fidelity",
       "Karpov, Navez, Cerf, Phys. Rev. A 72, 042314 (2005)", false, [](const FormulaArgs& a) {
         const int d = iarg(a, "d");
         require(d >= 2, "d >= 2");
         const double d2 = static_cast<double>(d) * d;
         const double t = (d2 - 2.0) / (d2 - 1.0);
         return 0.25 * ((d2 + 1.0) / (d2 - 1.0) + std::sqrt(1.0 + 4.0 / d2 * t * t));
       }});

  // --- highly asymmetric machines -------------------------------------------
  add({"asym-1n1-fa", {"x"}, "fidelity",
       "Iblisdir, Acin, Cerf, Filip, Fiurasek, Gisin, Phys. Rev. A 72, 042328 (2005)", false,
       [](const FormulaArgs& a) {
         const double x = arg(a, "x");
         require(x > 0.0 && x < 1.0, "x in (0,1)");
         return 1.0 - 2.0 / 3.0 * x * x;
       }});
  add({"asym-1n1-fb", {"N", "x"}, "fidelity",
       "Iblisdir, Acin, Cerf, Filip, Fiurasek, Gisin, Phys. Rev. A 72, 042328 (2005)", false,
       [](const FormulaArgs& a) {
         const int N = iarg(a, "N");
         const double x = arg(a, "x");
         require(N > 1 && x > 0.0 && x < 1.0, "N > 1, x in (0,1)");
         return 0.5 + (x * x + x * std::sqrt((1.0 - x * x) * N * (N + 2.0))) / (3.0 * N);
       }});
  add({"asym-nn1-fa", {"N", "x"}, "fidelity",
       "Iblisdir, Acin, Gisin, arXiv:quant-ph/0505152 (2005); conjectured", true,
       [](const FormulaArgs& a) {
         const int N = iarg(a, "N");
         const double x = arg(a, "x");
         require(N >= 1 && x >= 0.0 && x <= 1.0, "N >= 1, x in [0,1]");
         return 1.0 - 2.0 * x * x / (static_cast<double>(N) * (N + 2));
       }});
  add({"asym-nn1-fb", {"N", "x"}, "fidelity",
       "Iblisdir, Acin, Gisin, arXiv:quant-ph/0505152 (2005); conjectured", true,
       [](const FormulaArgs& a) {
         const int N = iarg(a, "N");
         const double x = arg(a, "x");
         require(N >= 1 && x >= 0.0 && x <= 1.0, "N >= 1, x in [0,1]");
         const double t = std::sqrt(static_cast<double>(N) / (N + 2.0)) * x -
                          std::sqrt(1.0 - x * x);
         return 1.0 - 0.5 * t * t;
       }});
  add({"tripli-fa", {"d", "alpha", "beta", "gamma"}, "fidelity",
       "Fiurasek, Filip, Cerf, Quantum Inf. Comput. 5, 583 (2005)", false,
       [](const FormulaArgs& a) {
         const int d = iarg(a, "d");
         const double be = arg(a, "beta"), ga = arg(a, "gamma");
         require(d >= 2, "d >= 2");
         return 1.0 - (d - 1.0) / d * (be * be + ga * ga + 2.0 * be * ga / (d + 1.0));
       }});
  add({"tripli-fb", {"d", "alpha", "beta", "gamma"}, "fidelity",
       "Fiurasek, Filip, Cerf, Quantum Inf. Comput. 5, 583 (2005)", false,
       [](const FormulaArgs& a) {
         const int d = iarg(a, "d");
         const double al = arg(a, "alpha"), ga = arg(a, "gamma");
         require(d >= 2, "d >= 2");
         return 1.0 - (d - 1.0) / d * (al * al + ga * ga + 2.0 * al * ga / (d + 1.0));
       }});
  add({"tripli-fc", {"d", "alpha", "beta", "gamma"}, "fidelity",
       "Fiurasek, Filip, Cerf, Quantum Inf. Comput. 5, 583 (2005)", false,
       [](const FormulaArgs& a) {
         const int d = iarg(a, "d");
         const double al = arg(a, "alpha"), be = arg(a, "beta");
         require(d >= 2, "d >= 2");
         return 1.0 - (d - 1.0) / d * (al * al + be * be + 2.0 * al * be / (d + 1.0));
       }});
  add({"tripli-norm", {"d", "alpha", "beta", "gamma"}, "predicate",
       "Fiurasek, Filip, Cerf, Quantum Inf. Comput. 5, 583 (2005)", false,
       [](const FormulaArgs& a) {
         const int d = iarg(a, "d");
         const double al = arg(a, "alpha"), be = arg(a, "beta"), ga = arg(a, "gamma");
         require(d >= 2, "d >= 2");
         return al * al + be * be + ga * ga +
                2.0 / d * (al * be + al * ga + be * ga);  // = 1 on the family
       }});

  // --- probabilistic and economical cloning ---------------------------------
  add({"prob-1to2", {"overlap"}, "probability",
       "Duan and Guo, Phys. Rev. Lett. 80, 4999 (1998)", false, [](const FormulaArgs& a) {
         const double s = arg(a, "overlap");
         require(s >= 0.0 && s <= 1.0, "overlap in [0,1]");
         return 1.0 / (1.0 + s);
       }});
  add({"pc-prob-nm-2", {"N", "M"}, "fidelity",
       "Fiurasek, Phys. Rev. A 70, 032308 (2004)", false, [](const FormulaArgs& a) {
         const int N = iarg(a, "N"), M = iarg(a, "M");
         require(M > N && N >= 1, "M > N >= 1");
         double s = 0.0;
         for (int k = 0; k <= N; ++k) s += binom(M, k + (M - N) / 2);
         return s / std::pow(2.0, M);
       }});
  add({"pc-econ-d", {"d"}, "fidelity",
       "Durt, Fiurasek, Cerf, Phys. Rev. A 72, 052322 (2005)", false,
       [](const FormulaArgs& a) {
         const int d = iarg(a, "d");
         require(d >= 2, "d >= 2");
         const double t = d - 1.0 + std::sqrt(2.0);
         return (d - 1.0 + t * t) / (2.0 * static_cast<double>(d) * d);
       }});

  // --- continuous variables --------------------------------------------------
  add({"cv-12", {}, "fidelity", "Cerf, Ipe, Rottenberg, Phys. Rev. Lett. 85, 1754 (2000)", false,
       [](const FormulaArgs&) { return 2.0 / 3.0; }});
  add({"cv-nm", {"N", "M"}, "fidelity",
       "Braunstein, Cerf, Iblisdir, van Loock, Massar, Phys. Rev. Lett. 86, 4438 (2001); "
       "Fiurasek, Phys. Rev. Lett. 86, 4942 (2001)",
       false, [](const FormulaArgs& a) {
         const int N = iarg(a, "N"), M = iarg(a, "M");
         require(M >= N && N >= 1, "M >= N >= 1");
         return static_cast<double>(M) * N / (static_cast<double>(M) * N + M - N);
       }});
  add({"cv-n-inf", {"N"}, "fidelity", "Cerf and Iblisdir, Phys. Rev. A 62, 040301 (2000)", false,
       [](const FormulaArgs& a) {
         const int N = iarg(a, "N");
         require(N >= 1, "N >= 1");
         return static_cast<double>(N) / (N + 1.0);
       }});
  add({"cv-asym-fa", {"gamma"}, "fidelity", "Fiurasek, Phys. Rev. Lett. 86, 4942 (2001)", false,
       [](const FormulaArgs& a) { return 2.0 / (2.0 + std::exp(2.0 * arg(a, "gamma"))); }});
  add({"cv-asym-fb", {"gamma"}, "fidelity", "Fiurasek, Phys. Rev. Lett. 86, 4942 (2001)", false,
       [](const FormulaArgs& a) { return 2.0 / (2.0 + std::exp(-2.0 * arg(a, "gamma"))); }});
  add({"cv-sigma-product", {"sigma_a", "sigma_b"}, "predicate",
       "Cerf, Ipe, Rottenberg, Phys. Rev. Lett. 85, 1754 (2000)", false,
       [](const FormulaArgs& a) {
         return arg(a, "sigma_a") * arg(a, "sigma_b");  // = 1/2 for optimal pairs
       }});
  add({"cv-conj-balanced", {"N", "M"}, "fidelity",
       "Cerf and Iblisdir, Phys. Rev. Lett. 87, 247903 (2001)", false,
       [](const FormulaArgs& a) {
         const int N = iarg(a, "N"), M = iarg(a, "M");
         require(M >= N && N >= 1, "M >= N >= 1");
         const double m = M, n = N;
         return 4.0 * m * m * n / (4.0 * m * m * n + (m - n) * (m - n));
       }});
  add({"cv-conj-inf", {"N"}, "fidelity",
       "Cerf and Iblisdir, Phys. Rev. Lett. 87, 247903 (2001)", false,
       [](const FormulaArgs& a) {
         const int N = iarg(a, "N");
         require(N >= 1, "N >= 1");
         return 4.0 * N / (4.0 * N + 1.0);
       }});
  add({"cv-ng-12", {}, "fidelity",
       "Cerf, Krueger, Navez, Werner, Wolf, Phys. Rev. Lett. 95, 070501 (2005)", false,
       [](const FormulaArgs&) { return 0.6826; }});

  // --- optical implementations ----------------------------------------------
  add({"amplifier", {"n_in", "n_out", "Q"}, "fidelity",
       "Fasel, Gisin, Ribordy, Scarani, Zbinden, Phys. Rev. Lett. 89, 107901 (2002)", false,
       [](const FormulaArgs& a) {
         const double ni = arg(a, "n_in"), no = arg(a, "n_out"), Q = arg(a, "Q");
         require(Q > 0.0 && ni > 0.0 && no >= ni, "Q > 0, n_out >= n_in > 0");
         return (Q * no * ni + no + ni) / (Q * no * ni + 2.0 * no);
       }});
  add({"sym-popt", {"M"}, "probability",
       "Sciarrino, Sias, Ricci, De Martini, Phys. Rev. A 70, 052305 (2004)", false,
       [](const FormulaArgs& a) {
         const int M = iarg(a, "M");
         require(M >= 2, "M >= 2");
         double f = 1.0;
         for (int i = 2; i <= M; ++i) f *= i;
         return f / std::pow(static_cast<double>(M), M);
       }});
  add({"pc-bs-fr", {"r2"}, "fidelity", "Fiurasek, Phys. Rev. A 67, 052314 (2003)", false,
       [](const FormulaArgs& a) {
         const double r2 = arg(a, "r2");
         require(r2 > 0.5 && r2 < 1.0, "r^2 in (1/2, 1)");
         const double r = std::sqrt(r2);
         return 0.5 * (1.0 + 2.0 * r * (2.0 * r2 - 1.0) * std::sqrt(1.0 - r2) /
                                 (2.0 * r2 * r2 - 2.0 * r2 + 1.0));
       }});

  // --- orthogonal-pair cloning -----------------------------------------------
  add({"orthopair-m", {"M"}, "fidelity",
       "Fiurasek, Iblisdir, Massar, Cerf, Phys. Rev. A 65, 040302 (2002)", false,
       [](const FormulaArgs& a) {
         const int M = iarg(a, "M");
         require(M >= 2, "M >= 2");
         return 0.5 * (1.0 + std::sqrt((M + 2.0) / (3.0 * M)));
       }});
  add({"orthopair-inf", {}, "fidelity",
       "Gisin and Popescu, Phys. Rev. Lett. 83, 432 (1999)", false,
       [](const FormulaArgs&) { return 0.5 * (1.0 + 1.0 / std::sqrt(3.0)); }});
  add({"orthopair-dc", {"M", "y"}, "fidelity",
       "Fiurasek, Iblisdir, Massar, Cerf, Phys. Rev. A 65, 040302 (2002)", false,
       [](const FormulaArgs& a) {
         const int M = iarg(a, "M");
         const double y = arg(a, "y");
         require(M >= 2 && y >= 0.0, "M >= 2, y >= 0");
         return (3.0 * y * y - 2.0 * y * (2.0 * M + 1.0) + 1.5 * M * (M + 1.0)) /
                (6.0 * y * y - 6.0 * M * y + M * (2.0 * M + 1.0));
       }});
  add({"orthopair-yopt", {"M"}, "parameter",
       "Fiurasek, Iblisdir, Massar, Cerf, Phys. Rev. A 65, 040302 (2002)", false,
       [](const FormulaArgs& a) {
         const int M = iarg(a, "M");
         require(M >= 2, "M >= 2");
         return M / 2.0 - 0.5 * std::sqrt(M * (M + 2.0) / 3.0);
       }});

  return reg;
}

}  // namespace

const std::vector<FidelityFormula>& registry() {
  static const std::vector<FidelityFormula> reg = build();
  return reg;
}

const FidelityFormula& formula(const std::string& id) {
  for (const auto& f : registry())
    if (f.id == id) return f;
  throw std::invalid_argument("unknown formula id: " + id);
}

double eval_formula(const std::string& id, const FormulaArgs& args) {
  const double v = formula(id).eval(args);
  return v;
}

bool ordering_chain_holds(int d) {
  if (d <= 2) throw std::invalid_argument("ordering_chain_holds: d > 2");
  const double univ = eval_formula("univ-12-d", {{"d", static_cast<double>(d)}});
  const double pc = eval_formula("pc-12-d", {{"d", static_cast<double>(d)}});
  const double real = eval_formula("real-12-d", {{"d", static_cast<double>(d)}});
  const double fourier = eval_formula("fourier-12-d", {{"d", static_cast<double>(d)}});
  return univ < pc && pc < real && real < fourier;
}

}  // namespace clonekit
