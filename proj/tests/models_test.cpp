#include "test_util.hpp"

#include <gtest/gtest.h>

namespace symcon {
namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

RealVector eigenvalues(const ModelSpec& s) { return hermitian_eigensystem(build_hamiltonian(s)).values; }

const Multiplet& at_energy(const std::vector<Multiplet>& ms, double e) {
  for (const auto& m : ms)
    if (std::abs(m.energy - e) < 1e-9) return m;
  throw std::logic_error("no multiplet at energy " + std::to_string(e));
}

double line_c3(double a, double b) { return std::sqrt(3 - (3 * a * a * a * a + 2 * a * a * b * b + 2 * b * b * b * b)); }

TEST(Hamiltonian, IsotropicSpectrum) {
  const RealVector e = eigenvalues(ModelSpec::make(ModelKind::TwoSpinIsotropic, {1, 0, 0, 0}));
  EXPECT_NEAR(e(0), -0.75, 1e-14);
  for (int i = 1; i < 4; ++i) EXPECT_NEAR(e(i), 0.25, 1e-14);
}

TEST(Hamiltonian, AxialClosedForms) {
  for (int rep = 0; rep < 20; ++rep) {
    const Couplings j = rep == 0 ? Couplings{1, 1, 0, 0} : testing::random_couplings(ModelKind::TwoSpinAxial);
    const auto lv = labeled_levels(ModelSpec::make(ModelKind::TwoSpinAxial, j));
    EXPECT_NEAR(lv[0].energy, -j[0] / 4 - j[1] / 2, 1e-14);
    EXPECT_NEAR(lv[1].energy, -j[0] / 4 + j[1] / 2, 1e-14);
    EXPECT_NEAR(lv[2].energy, j[0] / 4, 1e-14);
    std::vector<double> closed = {lv[0].energy, lv[1].energy, lv[2].energy, lv[2].energy};
    std::sort(closed.begin(), closed.end());
    const RealVector e = eigenvalues(ModelSpec::make(ModelKind::TwoSpinAxial, j));
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(e(i), closed[static_cast<std::size_t>(i)], 1e-12);
  }
}

TEST(Hamiltonian, TriangleClosedForms) {
  const auto lv0 = labeled_levels(ModelSpec::make(ModelKind::TriangleThree, {1, 0, 0, 0}));
  EXPECT_NEAR(lv0[2].energy, -0.25, 1e-14);
  EXPECT_NEAR(lv0[3].energy, -0.25, 1e-14);
  for (int rep = 0; rep < 50; ++rep) {
    const Couplings j = testing::random_couplings(ModelKind::TriangleThree);
    const ModelSpec s = ModelSpec::make(ModelKind::TriangleThree, j);
    const double e3 = -(j[0] + j[1] + j[2]) / 4 + kSqrt3 * j[3] / 2;
    const double e4 = -(j[0] + j[1] + j[2]) / 4 - kSqrt3 * j[3] / 2;
    const RealVector e = eigenvalues(s);
    for (double target : {e3, e4}) {
      double best = 1e9;
      for (int i = 0; i < 8; ++i) best = std::min(best, std::abs(e(i) - target));
      EXPECT_LE(best, 1e-9);
    }
    const auto lv = labeled_levels(s);
    EXPECT_NEAR(lv[2].energy, e3, 1e-12);
    EXPECT_NEAR(lv[3].energy, e4, 1e-12);
    // Published 2x2 block.
    const double h11 = 3 * j[0] / 4, h22 = -j[0] / 4 + (j[1] + j[2]) / 2, h12 = kSqrt3 * (j[1] - j[2]) / 4;
    const double mid = (h11 + h22) / 2, rad = std::hypot((h11 - h22) / 2, h12);
    EXPECT_NEAR(std::min(lv[0].energy, lv[1].energy), mid - rad, 1e-12);
    EXPECT_NEAR(std::max(lv[0].energy, lv[1].energy), mid + rad, 1e-12);
  }
}

TEST(Hamiltonian, LineBlock) {
  for (int rep = 0; rep < 50; ++rep) {
    const Couplings j = testing::random_couplings(ModelKind::LineThree);
    const auto lv = labeled_levels(ModelSpec::make(ModelKind::LineThree, j));
    EXPECT_NEAR(lv[0].energy, j[0] / 2 + j[2] / 4, 1e-12);
    EXPECT_NEAR(lv[1].energy, -j[2] / 4 - j[3] / 2, 1e-12);
    const double h11 = -j[0] / 2 + j[2] / 4, h22 = -j[2] / 4 + j[3] / 2, h12 = j[1] / kSqrt2;
    const double mid = (h11 + h22) / 2, rad = std::hypot((h11 - h22) / 2, h12);
    EXPECT_NEAR(std::min(lv[2].energy, lv[3].energy), mid - rad, 1e-12);
    EXPECT_NEAR(std::max(lv[2].energy, lv[3].energy), mid + rad, 1e-12);
  }
}

TEST(Hamiltonian, CommutesWithGroup) {
  for (ModelKind k : kAllModels) {
    const SymmetryGroup& g = model_group(k);
    for (int rep = 0; rep < 10; ++rep) {
      const Matrix h = build_hamiltonian(ModelSpec::make(k, testing::random_couplings(k)));
      EXPECT_TRUE(is_hermitian(h, 1e-12));
      const double scale = std::max(1.0, max_abs(h));
      for (std::size_t e = 0; e < g.size(); ++e) {
        const Matrix& u = g.operator_of(e);
        const Matrix gh = g.elements()[e].antiunitary ? Matrix(u * h.conjugate()) : Matrix(u * h);
        EXPECT_LE(max_abs(gh - h * u), 1e-9 * scale) << model_name(k);
      }
      if (g.has_u1_z()) {
        const Matrix sz = total_sz(g.n_sites());
        EXPECT_LE(max_abs(sz * h - h * sz), 1e-12);
      }
    }
  }
}

TEST(ModelSpecValidation, RejectsUnusedCouplings) {
  EXPECT_THROW(ModelSpec::make(ModelKind::TwoSpinIsotropic, {1, 0.5, 0, 0}), std::invalid_argument);
  EXPECT_THROW(ModelSpec::make(ModelKind::TwoSpinAxial, {1, 1, 0, 0.1}), std::invalid_argument);
  EXPECT_THROW(ModelSpec::make(ModelKind::LineThree, {1, std::nan(""), 0, 0}), std::invalid_argument);
  ModelSpec bad = ModelSpec::make(ModelKind::TriangleThree, {1, 0, 0, 0});
  bad.site_frames[1].col(0) *= -1;  // left-handed
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  EXPECT_EQ(parse_model("line3"), ModelKind::LineThree);
  EXPECT_FALSE(parse_model("square4").has_value());
}

TEST(Diagonalize, LineGenericPairs) {
  for (int rep = 0; rep < 20; ++rep) {
    const auto ms = diagonalize(ModelSpec::make(ModelKind::LineThree, testing::random_couplings(ModelKind::LineThree)));
    ASSERT_EQ(ms.size(), 4u);
    int total = 0;
    for (const auto& m : ms) {
      EXPECT_EQ(m.degeneracy, 2);
      total += m.degeneracy;
      // time-reversed partners share concurrence
      EXPECT_NEAR(m.member_concurrences[0], m.member_concurrences[1], 1e-10);
      EXPECT_LE(std::abs(m.members[0].amplitudes().dot(m.members[1].amplitudes())), 1e-12);
    }
    EXPECT_EQ(total, 8);
  }
}

TEST(Diagonalize, MultipletDensitiesAreInvariant) {
  for (ModelKind k : kAllModels) {
    const SymmetryGroup& g = model_group(k);
    for (const auto& m : diagonalize(ModelSpec::make(k, testing::random_couplings(k)))) {
      EXPECT_NEAR(m.rho.matrix().trace().real(), 1.0, 1e-12);
      EXPECT_LE(max_abs(g.twirl_matrix(m.rho.matrix()) - m.rho.matrix()), 1e-9) << model_name(k);
    }
  }
}

TEST(Diagonalize, LineConcurrences) {
  for (int rep = 0; rep < 50; ++rep) {
    const ModelSpec s = ModelSpec::make(ModelKind::LineThree, testing::random_couplings(ModelKind::LineThree));
    const auto ms = diagonalize(s);
    const auto lv = labeled_levels(s);
    const MixingAngles a = mixing_angles(s);
    EXPECT_NEAR(at_energy(ms, lv[0].energy).concurrence, 0.0, 1e-9);
    EXPECT_NEAR(at_energy(ms, lv[1].energy).concurrence, 1.0, 1e-9);
    EXPECT_NEAR(at_energy(ms, lv[2].energy).concurrence, line_c3(a.alpha, a.beta), 1e-9);
    EXPECT_NEAR(at_energy(ms, lv[3].energy).concurrence, line_c3(a.beta, a.alpha), 1e-9);
  }
}

TEST(Diagonalize, TriangleConcurrences) {
  for (int rep = 0; rep < 50; ++rep) {
    const ModelSpec s = ModelSpec::make(ModelKind::TriangleThree, testing::random_couplings(ModelKind::TriangleThree));
    const auto ms = diagonalize(s);
    const auto lv = labeled_levels(s);
    EXPECT_NEAR(at_energy(ms, lv[2].energy).concurrence, 2 / kSqrt3, 1e-9);
    EXPECT_NEAR(at_energy(ms, lv[3].energy).concurrence, 2 / kSqrt3, 1e-9);
  }
  // J2 = J3 = J4 = 0: Psi2, Psi3 and Psi4 share E = -J1/4.
  const auto ms = diagonalize(ModelSpec::make(ModelKind::TriangleThree, {1, 0, 0, 0}));
  EXPECT_EQ(at_energy(ms, -0.25).degeneracy, 6);
}

TEST(MixingAngles, Examples) {
  const MixingAngles l0 = mixing_angles(ModelSpec::make(ModelKind::LineThree, {-1, 0, 0.4, 0.3}));
  EXPECT_NEAR(l0.alpha, 1.0, 1e-14);
  EXPECT_NEAR(l0.beta, 0.0, 1e-14);
  const MixingAngles t0 = mixing_angles(ModelSpec::make(ModelKind::TriangleThree, {0.3, 0.7, 0.7, -0.2}));
  EXPECT_NEAR(t0.alpha, 1.0, 1e-14);
  EXPECT_NEAR(t0.beta, 0.0, 1e-14);
  EXPECT_THROW(mixing_angles(ModelSpec::make(ModelKind::TwoSpinAxial, {1, 1, 0, 0})), std::invalid_argument);

  // J1=-1, J2=1: the eigenvector of the printed block, checked against the
  // concurrence of the explicitly assembled state.
  const ModelSpec s = ModelSpec::make(ModelKind::LineThree, {-1, 1, 0, 0});
  const MixingAngles m = mixing_angles(s);
  EXPECT_NEAR(m.alpha * m.alpha + m.beta * m.beta, 1.0, 1e-14);
  EXPECT_GE(m.alpha, std::abs(m.beta));
  Matrix blk(2, 2);
  blk << 0.5, 1 / kSqrt2, 1 / kSqrt2, 0.0;
  const auto es = hermitian_eigensystem(blk);
  EXPECT_NEAR(std::min(m.energy_major, m.energy_minor), es.values(0), 1e-12);
  const auto st = symmetrized_states(ModelKind::LineThree);
  const StateVector psi3{3, Vector(m.alpha * st[2].amplitudes() + m.beta * st[3].amplitudes())};
  EXPECT_NEAR(concurrence_pure(psi3), line_c3(m.alpha, m.beta), 1e-12);
  const StateVector psi4{3, Vector(m.alpha * st[3].amplitudes() - m.beta * st[2].amplitudes())};
  EXPECT_NEAR(concurrence_pure(psi4), line_c3(m.beta, m.alpha), 1e-12);
}

TEST(Thermal, Weights) {
  const ModelSpec ax = ModelSpec::make(ModelKind::TwoSpinAxial, {1, 1, 0, 0});
  const auto e = thermal_ensemble(ax, 1 / std::log(3.0));
  const auto lv = labeled_levels(ax);
  double ps = 0;
  for (std::size_t i = 0; i < e.multiplets.size(); ++i)
    if (std::abs(e.multiplets[i].energy - lv[0].energy) < 1e-9) ps = e.weights[i];
  EXPECT_NEAR(ps, 0.5, 1e-9);

  for (ModelKind k : kAllModels) {
    const auto hot = thermal_ensemble(ModelSpec::make(k, testing::random_couplings(k)), 1e6);
    const Eigen::Index d = hot.rho.dim();
    EXPECT_LE(max_abs(hot.rho.matrix() - Matrix::Identity(d, d) / static_cast<double>(d)), 1e-5);
    double s = 0;
    for (double w : hot.weights) s += w;
    EXPECT_NEAR(s, 1.0, 1e-12);
  }

  const auto cold = thermal_ensemble(ModelSpec::make(ModelKind::LineThree, {-1, 0.1, -0.5, 0}), 0.0);
  EXPECT_NEAR(cold.weights[0], 1.0, 1e-15);
  EXPECT_NEAR(cold.multiplets[0].concurrence, 0.0, 1e-9);  // |+++> ferromagnet
  EXPECT_THROW(thermal_ensemble(ax, -0.1), std::invalid_argument);
  // T = 0 with a degenerate ground level: weights follow degeneracy.
  const auto iso0 = thermal_ensemble(ModelSpec::make(ModelKind::TwoSpinIsotropic, {-1, 0, 0, 0}), 0.0);
  EXPECT_EQ(iso0.multiplets[0].degeneracy, 3);
  EXPECT_NEAR(iso0.weights[0], 1.0, 1e-15);
}

TEST(PublishedCoordinates, Examples) {
  const auto ax = diagonalize(ModelSpec::make(ModelKind::TwoSpinAxial, {1, 1, 0, 0}));
  const RealVector rs = paper_coordinates(ModelKind::TwoSpinAxial, at_energy(ax, -0.75).rho);
  EXPECT_NEAR((rs - (RealVector(3) << 0, 1, -0.5).finished()).norm(), 0, 1e-12);

  const ModelSpec ls = ModelSpec::make(ModelKind::LineThree, {-1, 0.6, 0.5, 0.2});
  const RealVector r2 = paper_coordinates(ModelKind::LineThree, at_energy(diagonalize(ls), labeled_levels(ls)[1].energy).rho);
  EXPECT_NEAR((r2 - (RealVector(5) << 0, 1, 0, 0, -0.25).finished()).norm(), 0, 1e-12);

  const ModelSpec ts = ModelSpec::make(ModelKind::TriangleThree, {1, 0.3, -0.2, 0.1});
  const RealVector r3 = paper_coordinates(ModelKind::TriangleThree, at_energy(diagonalize(ts), labeled_levels(ts)[2].energy).rho);
  EXPECT_NEAR((r3 - (RealVector(5) << 0, 1, -1.0 / 12, 1 / (4 * kSqrt3), 0).finished()).norm(), 0, 1e-12);
}

TEST(PublishedCoordinates, TablesMatchDiagonalization) {
  for (ModelKind k : {ModelKind::TwoSpinAxial, ModelKind::LineThree, ModelKind::TriangleThree})
    for (int rep = 0; rep < 30; ++rep) {
      const ModelSpec s = ModelSpec::make(k, testing::random_couplings(k));
      const auto ms = diagonalize(s);
      for (const auto& row : paper_density_tables(s)) {
        const Multiplet& m = at_energy(ms, row.energy);
        const int expected = k != ModelKind::TwoSpinAxial || row.label == "rho_t1" ? 2 : 1;
        if (m.degeneracy != expected) continue;  // accidental degeneracy
        EXPECT_LE((paper_coordinates(k, m.rho) - row.coords).norm(), 1e-9) << model_name(k) << " " << row.label;
      }
    }
}

TEST(PublishedCoordinates, LineRho4OnTheBand) {
  // On J3 = J2 - 1 (J1 = -1, J4 = 0) the minor eigenstate has alpha^2 = 2/3.
  for (double j2 : {0.3, 0.5, 0.9}) {
    const ModelSpec s = ModelSpec::make(ModelKind::LineThree, {-1, j2, j2 - 1, 0});
    const RealVector r4 = paper_coordinates(ModelKind::LineThree, at_energy(diagonalize(s), labeled_levels(s)[3].energy).rho);
    const RealVector expect = (RealVector(5) << 0, 2.0 / 3, 1.0 / 3, -1.0 / 6, 1.0 / 6).finished();
    EXPECT_LE((r4 - expect).norm(), 1e-12) << j2;
  }
}

}  // namespace
}  // namespace symcon
