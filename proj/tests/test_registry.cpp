#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "clonekit/registry.hpp"

using namespace clonekit;

TEST_CASE("registry size, citations, and lookup") {
  CHECK(registry().size() >= 25);
  for (const auto& f : registry()) {
    CHECK(!f.citation.empty());
    CHECK(!f.id.empty());
  }
  int entang = 0;
  for (const auto& f : registry())
    if (f.id.find("entang") != std::string::npos) ++entang;
  CHECK(entang == 2);
  CHECK_THROWS_AS(formula("no-such-formula"), std::invalid_argument);
}

TEST_CASE("benchmark values") {
  CHECK(eval_formula("univ-nm-2", {{"N", 1}, {"M", 2}}) == doctest::Approx(5.0 / 6.0));
  CHECK(eval_formula("univ-nm-d", {{"N", 2}, {"M", 3}, {"d", 2}}) ==
        doctest::Approx(11.0 / 12.0));
  CHECK(eval_formula("univ-12-d", {{"d", 3}}) == doctest::Approx(0.75));
  CHECK(eval_formula("univ-n-inf-2", {{"N", 1}}) == doctest::Approx(2.0 / 3.0));
  CHECK(eval_formula("pc-12-2", {}) == doctest::Approx(0.5 + 1.0 / std::sqrt(8.0)));
  CHECK(eval_formula("pc-13-2", {}) == doctest::Approx(5.0 / 6.0));
  CHECK(eval_formula("pc-1m-2", {{"M", 3}}) == doctest::Approx(5.0 / 6.0));
  CHECK(eval_formula("fourier-12-3", {}) == doctest::Approx(0.5 + 1.0 / std::sqrt(12.0)));
  CHECK(eval_formula("pc-12-3", {}) == doctest::Approx((5.0 + std::sqrt(17.0)) / 12.0));
  CHECK(eval_formula("cv-12", {}) == doctest::Approx(2.0 / 3.0));
  CHECK(eval_formula("cv-nm", {{"N", 2}, {"M", 3}}) == doctest::Approx(6.0 / 7.0));
  CHECK(eval_formula("cv-conj-balanced", {{"N", 1}, {"M", 2}}) ==
        doctest::Approx(16.0 / 17.0));
  CHECK(eval_formula("amplifier", {{"n_in", 1}, {"n_out", 2}, {"Q", 1}}) ==
        doctest::Approx(5.0 / 6.0));
  CHECK(eval_formula("sym-popt", {{"M", 3}}) == doctest::Approx(2.0 / 9.0));
  CHECK(eval_formula("orthopair-m", {{"M", 2}}) ==
        doctest::Approx(0.5 * (1.0 + std::sqrt(2.0 / 3.0))));
  CHECK(eval_formula("prob-1to2", {{"overlap", 0.0}}) == doctest::Approx(1.0));
}

TEST_CASE("family identities from the overview") {
  // d = 2: the real, phase, and Fourier sets are unitarily equivalent
  const double pc2 = eval_formula("pc-12-d", {{"d", 2}});
  CHECK(eval_formula("real-12-d", {{"d", 2}}) == doctest::Approx(pc2).epsilon(1e-14));
  CHECK(eval_formula("fourier-12-d", {{"d", 2}}) == doctest::Approx(pc2).epsilon(1e-14));

  // real(4) coincides with the two-qubit entanglement cloner
  CHECK(eval_formula("real-12-d", {{"d", 4}}) ==
        doctest::Approx(eval_formula("entang-12-2x2", {})).epsilon(1e-14));
  // and the d x d entanglement formula reduces to it at d=2
  CHECK(eval_formula("entang-12-dxd", {{"d", 2}}) ==
        doctest::Approx(eval_formula("entang-12-2x2", {})).epsilon(1e-14));

  // ordering chain univ < pc < real < fourier for d = 3..6
  for (int d = 3; d <= 6; ++d) CHECK(ordering_chain_holds(d));
}

TEST_CASE("asymmetric-family predicates and conjectured flags") {
  // triplicator normalization predicate evaluates the constraint expression;
  // with alpha = beta = 1/2 and d = 2 the normalized gamma is (sqrt 2 - 1)/2
  const double norm = eval_formula(
      "tripli-norm",
      {{"d", 2}, {"alpha", 0.5}, {"beta", 0.5}, {"gamma", (std::sqrt(2.0) - 1.0) / 2.0}});
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-9));
  // the symmetric triplicator reproduces the 1->3 universal fidelity
  // alpha=beta=gamma: 3a^2 + 6a^2/d = 1 at d=2 -> a = 1/sqrt(6)
  const double a = 1.0 / std::sqrt(6.0);
  const double f = eval_formula("tripli-fa", {{"d", 2}, {"alpha", a}, {"beta", a}, {"gamma", a}});
  CHECK(f == doctest::Approx(eval_formula("univ-nm-2", {{"N", 1}, {"M", 3}})).epsilon(1e-12));

  CHECK(formula("asym-nn1-fa").conjectured);
  CHECK(formula("asym-nn1-fb").conjectured);
  CHECK_FALSE(formula("asym-1n1-fb").conjectured);

  // Pauli ellipsoid: the symmetric universal cloner sits on the surface
  const double x = std::sqrt(1.0 / 12.0);
  CHECK(eval_formula("pauli-ellipsoid", {{"x", x}, {"y", x}, {"z", x}}) ==
        doctest::Approx(0.5).epsilon(1e-12));
  // and so does the phase-covariant point x = y = 1/sqrt(8), z = 1/2 - 1/sqrt(8)
  const double xy = 1.0 / std::sqrt(8.0);
  CHECK(eval_formula("pauli-ellipsoid", {{"x", xy}, {"y", xy}, {"z", 0.5 - xy}}) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("domain guards refuse out-of-domain evaluation") {
  CHECK_THROWS_AS(eval_formula("cv-nm", {{"N", 3}, {"M", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(eval_formula("amplifier", {{"n_in", 1}, {"n_out", 2}, {"Q", 0.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_formula("pc-1m-2", {{"M", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(eval_formula("pc-nm-2-even", {{"N", 1}, {"M", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(eval_formula("asym-1n1-fb", {{"N", 1}, {"x", 0.5}}), std::invalid_argument);
  CHECK_THROWS_AS(eval_formula("pc-bs-fr", {{"r2", 0.4}}), std::invalid_argument);
  CHECK_THROWS_AS(eval_formula("univ-nm-2", {{"N", 1.5}, {"M", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(eval_formula("univ-nm-2", {{"N", 1}}), std::invalid_argument);
}

TEST_CASE("fidelity-kind outputs stay in [0,1] over sampled domains") {
  for (const auto& f : registry()) {
    if (f.kind != "fidelity" && f.kind != "probability") continue;
    // a handful of in-domain samples per formula
    std::vector<FormulaArgs> samples;
    FormulaArgs base;
    for (const auto& p : f.params) {
      if (p == "d") base[p] = 3;
      else if (p == "N") base[p] = 2;
      else if (p == "M") base[p] = 4;
      else if (p == "Q") base[p] = 0.9;
      else if (p == "n_in") base[p] = 1.0;
      else if (p == "n_out") base[p] = 2.0;
      else if (p == "r2") base[p] = 0.75;
      else if (p == "y") base[p] = 0.4;
      else if (p == "x") base[p] = 0.5;
      else if (p == "beta") base[p] = 0.4;
      else if (p == "gamma") base[p] = 0.25;
      else if (p == "alpha") base[p] = 0.25;
      else if (p == "overlap") base[p] = 0.3;
      else base[p] = 0.3;
    }
    double v;
    try {
      v = f.eval(base);
    } catch (const std::invalid_argument&) {
      continue;  // generic sample outside this formula's domain
    }
    CHECK(v >= 0.0);
    CHECK(v <= 1.0 + 1e-12);
  }
}
