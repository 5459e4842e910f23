#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "xyzchain/entanglement.hpp"
#include "xyzchain/linalg.hpp"
#include "xyzchain/model.hpp"
#include "xyzchain/thermal.hpp"

using namespace xyzchain;

namespace {

CMatrix bell_psi_plus() {
  CMatrix rho(4, 4);
  for (int i : {1, 2})
    for (int j : {1, 2}) rho(i, j) = 0.5;
  return rho;
}

CMatrix maximally_mixed4() {
  CMatrix rho = CMatrix::identity(4);
  rho *= Complex(0.25, 0.0);
  return rho;
}

CMatrix thermal_rho4(const ChainParams& p, double t) {
  const ThermalState ts = gibbs_state(build_hamiltonian(p), t);
  return partial_trace_pair(ts.rho, p.n_sites, {0, 1});
}

ChainParams draw_two_site(oracles::Rng& rng) {
  return ChainParams::from_j_gamma(2, rng.uniform_right(0, 3), rng.open_unit(),
                                   rng.uniform(-3, 3), rng.uniform(-4, 4),
                                   Boundary::open);
}

}  // namespace

TEST_CASE("extract_x_elements on known states") {
  const XStateElements bell = extract_x_elements(bell_psi_plus());
  CHECK(bell.u1 == 0.0);
  CHECK(bell.u2 == 0.0);
  CHECK(bell.w == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(bell.v == 0.0);
  CHECK(bell.z == doctest::Approx(0.5).epsilon(1e-15));

  const XStateElements mixed = extract_x_elements(maximally_mixed4());
  CHECK(mixed.u1 == doctest::Approx(0.25));
  CHECK(mixed.u2 == doctest::Approx(0.25));
  CHECK(mixed.w == doctest::Approx(0.25));
  CHECK(mixed.v == 0.0);
  CHECK(mixed.z == 0.0);
}

TEST_CASE("thermal states have equal central populations") {
  oracles::Rng rng(201);
  for (int i = 0; i < 30; ++i) {
    const CMatrix rho4 = thermal_rho4(draw_two_site(rng), rng.uniform_right(0, 5));
    CHECK(std::abs(rho4(1, 1).real() - rho4(2, 2).real()) < 1e-12);
    CHECK_NOTHROW(extract_x_elements(rho4));
  }
}

TEST_CASE("extract_x_elements rejects non-X and complex input") {
  CMatrix off = maximally_mixed4();
  off(0, 1) = 1e-6;
  off(1, 0) = 1e-6;
  CHECK_THROWS_WITH_AS(extract_x_elements(off), doctest::Contains("X pattern"),
                       std::runtime_error);

  CMatrix imag = maximally_mixed4();
  imag(0, 3) = Complex(0.0, 1e-6);
  imag(3, 0) = Complex(0.0, -1e-6);
  CHECK_THROWS_WITH_AS(extract_x_elements(imag), doctest::Contains("imaginary"),
                       std::runtime_error);

  CMatrix skew = maximally_mixed4();  // unequal central populations
  skew(1, 1) = 0.3;
  skew(2, 2) = 0.2;
  CHECK_THROWS_WITH_AS(extract_x_elements(skew),
                       doctest::Contains("central populations"), std::runtime_error);
}

TEST_CASE("XStateElements validation") {
  XStateElements bad;
  bad.u1 = 0.5;
  bad.u2 = 0.5;
  bad.w = 0.25;  // trace 1.5
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  XStateElements coher;  // |z| > w
  coher.u1 = coher.u2 = 0.25;
  coher.w = 0.25;
  coher.z = 0.3;
  CHECK_THROWS_AS(coher.validate(), std::invalid_argument);
}

TEST_CASE("Wootters concurrence of pure states") {
  CHECK(concurrence_wootters(bell_psi_plus()).c == doctest::Approx(1.0).epsilon(1e-12));

  CMatrix product(4, 4);
  product(0, 0) = 1.0;  // |00><00|
  CHECK(concurrence_wootters(product).c == doctest::Approx(0.0));
  CHECK(concurrence_wootters(maximally_mixed4()).c == 0.0);
}

TEST_CASE("Wootters route agrees with the thermal closed form") {
  const ChainParams p = ChainParams::from_j_gamma(2, 1.0, 0.3, 0.9, 1.1, Boundary::open);
  const double t = 0.5;
  const double c_generic = concurrence_wootters(thermal_rho4(p, t)).c;
  const double c_closed = concurrence_from_lambdas(two_qubit_thermal_lambdas(p, t)).c;
  CHECK(std::abs(c_generic - c_closed) < 1e-10);
  CHECK(c_generic == doctest::Approx(0.733625444485918).epsilon(1e-11));
}

TEST_CASE("Wootters concurrence of arbitrary (non-X) pure states") {
  // for a pure state a|00> + b|01> + c|10> + d|11>, C = 2|ad - bc|
  oracles::Rng rng(207);
  for (int rep = 0; rep < 40; ++rep) {
    Complex amp[4];
    double norm = 0.0;
    for (auto& a : amp) {
      a = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
      norm += std::norm(a);
    }
    for (auto& a : amp) a /= std::sqrt(norm);
    CMatrix rho(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) rho(i, j) = amp[i] * std::conj(amp[j]);
    const double expect = 2.0 * std::abs(amp[0] * amp[3] - amp[1] * amp[2]);
    CHECK(concurrence_wootters(rho).c == doctest::Approx(expect).epsilon(1e-10));
  }
}

TEST_CASE("X-state closed form on simple inputs") {
  XStateElements bell;
  bell.w = 0.5;
  bell.z = 0.5;
  const ConcurrenceValue cv = concurrence_x_state(bell);
  CHECK(cv.c == doctest::Approx(1.0));
  CHECK(cv.lambdas[0] == doctest::Approx(1.0));
  CHECK(cv.lambdas[1] == 0.0);

  XStateElements mixed;
  mixed.u1 = mixed.u2 = mixed.w = 0.25;
  CHECK(concurrence_x_state(mixed).c == 0.0);
}

TEST_CASE("diagonal X states are separable") {
  oracles::Rng rng(211);
  for (int i = 0; i < 50; ++i) {
    double u1 = rng.unit(), u2 = rng.unit(), w = rng.unit();
    const double norm = u1 + u2 + 2.0 * w;
    XStateElements x;
    x.u1 = u1 / norm;
    x.u2 = u2 / norm;
    x.w = w / norm;
    CHECK(concurrence_x_state(x).c == 0.0);
  }
}

TEST_CASE("thermal lambdas: frozen reference point") {
  const ChainParams p = ChainParams::from_j_gamma(2, 1.0, 0.3, 0.9, 1.1, Boundary::open);
  const ConcurrenceValue cv = concurrence_from_lambdas(two_qubit_thermal_lambdas(p, 1.0));
  // computed from the printed closed forms evaluated independently
  CHECK(cv.lambdas[0] == doctest::Approx(0.6057264445263033).epsilon(1e-12));
  CHECK(cv.lambdas[1] == doctest::Approx(0.1300430535234151).epsilon(1e-12));
  CHECK(cv.lambdas[2] == doctest::Approx(0.08197615993387362).epsilon(1e-12));
  CHECK(cv.lambdas[3] == doctest::Approx(0.06311707709693469).epsilon(1e-12));
  CHECK(cv.c == doctest::Approx(0.3305901539720799).epsilon(1e-12));
}

TEST_CASE("thermal lambdas equal the generic pipeline lambdas") {
  const ChainParams p = ChainParams::from_j_gamma(2, 1.0, 0.3, 0.9, 1.1, Boundary::open);
  const double t = 1.0;
  auto closed = two_qubit_thermal_lambdas(p, t);
  std::sort(closed.begin(), closed.end(), std::greater<>());
  const auto pipeline = concurrence_wootters(thermal_rho4(p, t)).lambdas;
  for (int k = 0; k < 4; ++k) CHECK(std::abs(closed[k] - pipeline[k]) < 1e-10);
}

TEST_CASE("thermal lambdas in the XY special case (jz = 0)") {
  const ChainParams p = ChainParams::from_j_gamma(2, 1.0, 0.3, 0.0, 1.1, Boundary::open);
  for (double t : {0.1, 0.5, 2.0}) {
    const double c_closed = concurrence_from_lambdas(two_qubit_thermal_lambdas(p, t)).c;
    const double c_generic = concurrence_wootters(thermal_rho4(p, t)).c;
    CHECK(std::abs(c_closed - c_generic) < 1e-9);
  }
}

TEST_CASE("thermal lambdas: limits and errors") {
  const ChainParams p = ChainParams::from_j_gamma(2, 1.0, 0.3, 0.9, 1.1, Boundary::open);
  const auto lam = two_qubit_thermal_lambdas(p, 1e9);
  for (double l : lam) CHECK(l == doctest::Approx(0.25).epsilon(1e-8));
  CHECK(concurrence_from_lambdas(lam).c == 0.0);

  CHECK_THROWS_AS(two_qubit_thermal_lambdas(p, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(two_qubit_thermal_lambdas(p, -1.0), std::invalid_argument);

  // eta = 0 limit: B = 0 and gamma = 0
  const ChainParams iso = ChainParams::from_j_gamma(2, 1.0, 0.0, 0.5, 0.0, Boundary::open);
  const auto lam0 = two_qubit_thermal_lambdas(iso, 0.7);
  CHECK(lam0[2] == doctest::Approx(lam0[3]).epsilon(1e-14));
}

TEST_CASE("extreme-cold closed form stays finite") {
  const ChainParams p = ChainParams::from_j_gamma(2, 1.0, 0.3, 0.9, 1.1, Boundary::open);
  const auto lam = two_qubit_thermal_lambdas(p, 1e-3);
  for (double l : lam) {
    CHECK(std::isfinite(l));
    CHECK(l >= 0.0);
  }
  const double c = concurrence_from_lambdas(lam).c;
  CHECK(c == doctest::Approx(1.0).epsilon(1e-6));  // ground state is |Psi->
}

TEST_CASE("zero-temperature concurrence: all three branches") {
  // eta < J + jz
  const ChainParams first = ChainParams::from_j_gamma(2, 1.0, 0.3, 0.0, 0.0, Boundary::open);
  CHECK(zero_t_concurrence(first) == 1.0);

  // eta > J + jz: C = K/eta
  const ChainParams third = ChainParams::from_j_gamma(2, 1.0, 0.3, 0.0, 2.0, Boundary::open);
  CHECK(zero_t_concurrence(third) == doctest::Approx(0.14834045293024462).epsilon(1e-12));
  const double c_pipeline = concurrence_wootters(thermal_rho4(third, 1e-6)).c;
  CHECK(std::abs(zero_t_concurrence(third) - c_pipeline) < 1e-4);

  // eta = J + jz: the mixture value (1 - K/eta)/2
  const double b_mid = std::sqrt(1.5 * 1.5 - 0.09);
  const ChainParams mid = ChainParams::from_j_gamma(2, 1.0, 0.3, 0.5, b_mid, Boundary::open);
  CHECK(zero_t_concurrence(mid) == doctest::Approx(0.4).epsilon(1e-12));
  const double c_mix = concurrence_wootters(thermal_rho4(mid, 0.0)).c;
  CHECK(std::abs(c_mix - 0.4) < 1e-9);
}

TEST_CASE("zero-temperature fallback outside the closed-form region") {
  // gamma < 0 leaves the stated region; the numeric path takes over
  const ChainParams p = ChainParams::from_j_gamma(2, 1.0, -0.3, 0.2, 0.5, Boundary::open);
  const double c = zero_t_concurrence(p);
  const double direct = concurrence_wootters(thermal_rho4(p, 0.0)).c;
  CHECK(c == direct);
  CHECK(c >= 0.0);
  CHECK(c <= 1.0);
}

TEST_CASE("pairwise concurrence: three-site ring") {
  // no entanglement at B = 0 for any jz on this grid
  for (int k = 0; k < 20; ++k) {
    const double jz = 1.5 * k / 19.0;
    const ChainParams p = ChainParams::from_j_gamma(3, 1.0, 0.3, jz, 0.0, Boundary::periodic);
    CHECK(pairwise_concurrence(p, 0.6, {0, 1}).c <= 1e-10);
  }

  const ChainParams p = ChainParams::from_j_gamma(3, 1.0, 0.3, 0.9, 4.0, Boundary::periodic);
  const double c01 = pairwise_concurrence(p, 0.6, {0, 1}).c;
  const double c12 = pairwise_concurrence(p, 0.6, {1, 2}).c;
  const double c20 = pairwise_concurrence(p, 0.6, {2, 0}).c;
  CHECK(c01 > 1e-3);  // entangled here
  CHECK(std::abs(c01 - c12) < 1e-10);
  CHECK(std::abs(c12 - c20) < 1e-10);

  CHECK_THROWS_AS(pairwise_concurrence(p, 0.6, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(pairwise_concurrence(p, 0.6, {0, 3}), std::invalid_argument);
}

TEST_CASE("larger rings are supported numerically") {
  const ChainParams p = ChainParams::from_j_gamma(4, 1.0, 0.3, 0.9, 1.1, Boundary::periodic);
  const double c01 = pairwise_concurrence(p, 0.4, {0, 1}).c;
  const double c12 = pairwise_concurrence(p, 0.4, {1, 2}).c;
  CHECK(std::abs(c01 - c12) < 1e-10);  // translational symmetry
  const double c02 = pairwise_concurrence(p, 0.4, {0, 2}).c;  // next-nearest
  CHECK(c02 >= 0.0);
  CHECK(c02 <= 1.0);
}

TEST_CASE("two-site pairwise concurrence equals the closed form") {
  oracles::Rng rng(223);
  for (int i = 0; i < 25; ++i) {
    const ChainParams p = draw_two_site(rng);
    const double t = rng.uniform_right(0.0, 5.0);
    const double c_pipe = pairwise_concurrence(p, t, {0, 1}).c;
    const double c_closed = concurrence_from_lambdas(two_qubit_thermal_lambdas(p, t)).c;
    CHECK(std::abs(c_pipe - c_closed) < 1e-9);
  }
}

TEST_CASE("oracle triangle: three routes agree on random draws") {
  oracles::Rng rng(227);
  double worst = 0.0;
  for (int i = 0; i < 300; ++i) {
    const ChainParams p = draw_two_site(rng);
    const double t = rng.uniform_right(0.0, 5.0);
    const CMatrix rho4 = thermal_rho4(p, t);
    const double c1 = concurrence_wootters(rho4).c;
    const double c2 = concurrence_x_state(extract_x_elements(rho4)).c;
    const double c3 = concurrence_from_lambdas(two_qubit_thermal_lambdas(p, t)).c;
    worst = std::max({worst, std::abs(c1 - c2), std::abs(c2 - c3), std::abs(c1 - c3)});
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("concurrence symmetries and the jz asymmetry witness") {
  oracles::Rng rng(229);
  for (int i = 0; i < 50; ++i) {
    const ChainParams p = draw_two_site(rng);
    const double t = rng.uniform_right(0.0, 5.0);
    const double c0 = concurrence_wootters(thermal_rho4(p, t)).c;

    ChainParams q = p;  // J -> -J at fixed gamma
    q.jx = -p.jx;
    q.jy = -p.jy;
    CHECK(std::abs(c0 - concurrence_wootters(thermal_rho4(q, t)).c) < 1e-10);

    q = p;  // gamma -> -gamma
    std::swap(q.jx, q.jy);
    CHECK(std::abs(c0 - concurrence_wootters(thermal_rho4(q, t)).c) < 1e-10);

    q = p;  // B -> -B
    q.b_field = -p.b_field;
    CHECK(std::abs(c0 - concurrence_wootters(thermal_rho4(q, t)).c) < 1e-10);
  }

  // jz -> -jz is not a symmetry; this point separates the two by ~0.6
  const ChainParams p = ChainParams::from_j_gamma(2, 1.0, 0.3, 0.9, 1.1, Boundary::open);
  ChainParams m = p;
  m.jz = -p.jz;
  const double cp = concurrence_wootters(thermal_rho4(p, 0.5)).c;
  const double cm = concurrence_wootters(thermal_rho4(m, 0.5)).c;
  CHECK(std::abs(cp - cm) > 1e-3);
}

TEST_CASE("concurrence output ranges") {
  oracles::Rng rng(233);
  for (int i = 0; i < 100; ++i) {
    const ChainParams p = draw_two_site(rng);
    const ConcurrenceValue cv = pairwise_concurrence(p, rng.uniform_right(0, 5), {0, 1});
    CHECK(cv.c >= 0.0);
    CHECK(cv.c <= 1.0);
    for (double l : cv.lambdas) CHECK(l >= 0.0);
    for (int k = 0; k < 3; ++k) CHECK(cv.lambdas[k] >= cv.lambdas[k + 1]);
  }
}

TEST_CASE("clamp policy separates roundoff from bugs") {
  const ConcurrenceValue ok = concurrence_from_lambdas({0.5, 0.25, 0.25, -5e-11});
  CHECK(ok.lambdas[3] == 0.0);
  CHECK_THROWS_AS(concurrence_from_lambdas({0.5, 0.25, 0.25, -1e-9}),
                  std::runtime_error);
}

TEST_CASE("concurrence_wootters rejects invalid density matrices") {
  CMatrix big = CMatrix::identity(4);  // trace 4
  CHECK_THROWS_AS(concurrence_wootters(big), std::invalid_argument);

  CMatrix neg = maximally_mixed4();  // indefinite, trace still 1
  neg(0, 0) = -0.25;
  neg(1, 1) = 0.75;
  CHECK_THROWS_AS(concurrence_wootters(neg), std::runtime_error);

  CMatrix rect(2, 3);
  CHECK_THROWS_AS(concurrence_wootters(rect), std::invalid_argument);
}
