#include "test_util.hpp"

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

namespace symcon {
namespace {

using testing::ket;

const double kR2 = 1.0 / std::sqrt(2.0);

StateVector bell() { return {2, Vector(ket(2, "++").amplitudes() + ket(2, "--").amplitudes())}; }
StateVector ghz3() { return {3, Vector(ket(3, "+++").amplitudes() + ket(3, "---").amplitudes())}; }

TEST(Eigensystem, PauliY) {
  Matrix sy(2, 2);
  sy << 0.0, Complex(0, -1), Complex(0, 1), 0.0;
  const auto es = hermitian_eigensystem(sy);
  EXPECT_NEAR(es.values(0), -1.0, 1e-14);
  EXPECT_NEAR(es.values(1), 1.0, 1e-14);
}

TEST(Eigensystem, DiagonalSortsAscending) {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = 3;
  m(1, 1) = 1;
  m(2, 2) = 2;
  const auto es = hermitian_eigensystem(m);
  EXPECT_DOUBLE_EQ(es.values(0), 1.0);
  EXPECT_DOUBLE_EQ(es.values(1), 2.0);
  EXPECT_DOUBLE_EQ(es.values(2), 3.0);
  EXPECT_NEAR(std::abs(es.vectors(1, 0) - 1.0), 0.0, 1e-15);
}

TEST(Eigensystem, LineBlockAtUnitCoupling) {
  // 2x2 line block at J1=-1, J2=1, J3=J4=0: [[1/2, 1/sqrt2], [1/sqrt2, 0]].
  Matrix m(2, 2);
  m << 0.5, kR2, kR2, 0.0;
  const auto es = hermitian_eigensystem(m);
  EXPECT_NEAR(es.values(0), 0.25 - std::sqrt(0.0625 + 0.5), 1e-14);
  EXPECT_NEAR(es.values(1), 0.25 + std::sqrt(0.0625 + 0.5), 1e-14);
}

TEST(Eigensystem, AgreesWithEigenOnRandomHermitian) {
  for (int n : {1, 2, 3, 5, 8, 16, 32}) {
    for (int rep = 0; rep < 5; ++rep) {
      const Matrix m = testing::random_hermitian(n);
      const auto es = hermitian_eigensystem(m);
      Eigen::SelfAdjointEigenSolver<Matrix> ref(m);
      const double scale = std::max(1.0, max_abs(m));
      for (int i = 0; i < n; ++i) EXPECT_NEAR(es.values(i), ref.eigenvalues()(i), 1e-11 * scale);
      EXPECT_LE(max_abs(m * es.vectors - es.vectors * es.values.asDiagonal()), 1e-9 * scale);
      EXPECT_LE(max_abs(es.vectors.adjoint() * es.vectors - Matrix::Identity(n, n)), 1e-12);
    }
  }
}

TEST(Eigensystem, PhaseConventionAndDeterminism) {
  const Matrix m = testing::random_hermitian(6);
  const auto a = hermitian_eigensystem(m);
  const auto b = hermitian_eigensystem(m);
  EXPECT_EQ(a.vectors, b.vectors);
  for (int j = 0; j < 6; ++j) {
    Eigen::Index at = 0;
    a.vectors.col(j).cwiseAbs().maxCoeff(&at);
    EXPECT_NEAR(a.vectors(at, j).imag(), 0.0, 1e-14);
    EXPECT_GT(a.vectors(at, j).real(), 0.0);
  }
}

TEST(Eigensystem, DegenerateSpaceIsOrthonormal) {
  const Matrix u = testing::local_unitary(3);
  Matrix d = Matrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i) d(i, i) = i < 4 ? 1.0 : 2.0;
  const Matrix m = u * d * u.adjoint();
  const auto es = hermitian_eigensystem(m);
  EXPECT_LE(max_abs(es.vectors.adjoint() * es.vectors - Matrix::Identity(8, 8)), 1e-12);
  EXPECT_NEAR(es.values(3), 1.0, 1e-12);
  EXPECT_NEAR(es.values(4), 2.0, 1e-12);
}

TEST(Eigensystem, RejectsNonHermitian) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(hermitian_eigensystem(m), std::invalid_argument);
  EXPECT_THROW(hermitian_eigensystem(Matrix::Zero(2, 3)), std::invalid_argument);
}

TEST(PsdSqrt, Examples) {
  EXPECT_LE(max_abs(psd_matrix_sqrt(Matrix::Identity(3, 3)) - Matrix::Identity(3, 3)), 1e-14);
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 4;
  d(1, 1) = 9;
  const Matrix s = psd_matrix_sqrt(d);
  EXPECT_NEAR(s(0, 0).real(), 2.0, 1e-14);
  EXPECT_NEAR(s(1, 1).real(), 3.0, 1e-14);
  for (int rep = 0; rep < 10; ++rep) {
    const Matrix a = testing::random_matrix(5);
    const Matrix p = a * a.adjoint();
    const Matrix r = psd_matrix_sqrt(p);
    EXPECT_LE(max_abs(r * r - p), 1e-9 * max_abs(p));
    EXPECT_TRUE(is_hermitian(r, 1e-12 * max_abs(r)));
  }
  Matrix neg = Matrix::Identity(2, 2);
  neg(1, 1) = -1e-6;
  EXPECT_THROW(psd_matrix_sqrt(neg), NumericalError);
}

TEST(SingularValues, MatchEigen) {
  const Matrix x = testing::random_matrix(4);
  const RealVector s = singular_values(x);
  Eigen::JacobiSVD<Matrix> svd(x);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(s(i), svd.singularValues()(i), 1e-12);
}

TEST(States, ProductStateConventions) {
  const StateVector s = product_state({{Axis::z, Sign::plus}, {Axis::z, Sign::minus}});
  EXPECT_NEAR(std::abs(s[1]), 1.0, 1e-15);  // site 1 is the most significant bit
  const StateVector y = product_state({{Axis::y, Sign::plus}});
  EXPECT_NEAR(std::abs(y[1] - Complex(0, kR2)), 0.0, 1e-15);
  const StateVector x = product_state({{Axis::x, Sign::minus}});
  EXPECT_NEAR(std::abs(x[1] + kR2), 0.0, 1e-15);
  EXPECT_NEAR(product_state({{Axis::x, Sign::plus}, {Axis::y, Sign::minus}, {Axis::z, Sign::plus}}).amplitudes().norm(), 1.0, 1e-15);
  EXPECT_EQ(product_label({{Axis::x, Sign::plus}, {Axis::z, Sign::plus}, {Axis::x, Sign::minus}}), "|++->_xzx");
}

TEST(States, ValidationErrors) {
  EXPECT_THROW(StateVector(2, Vector::Zero(4)), std::invalid_argument);
  EXPECT_THROW(StateVector(2, Vector::Ones(3)), std::invalid_argument);
  EXPECT_NEAR(StateVector(1, Vector::Ones(2)).amplitudes().norm(), 1.0, 1e-15);
  EXPECT_THROW(DensityMatrix(1, Matrix::Identity(2, 2)), std::invalid_argument);  // trace 2
  Matrix nh = Matrix::Identity(2, 2) / 2.0;
  nh(0, 1) = 0.1;
  EXPECT_THROW(DensityMatrix(1, nh), std::invalid_argument);
  Matrix neg = Matrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix(1, neg), std::invalid_argument);
  EXPECT_THROW(Bipartition(3, {}), std::invalid_argument);
  EXPECT_THROW(Bipartition(3, {0, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Bipartition(3, {0, 0}), std::invalid_argument);
  EXPECT_THROW(Bipartition(3, {3}), std::invalid_argument);
}

// Independent reduced-state oracle: explicit bit-by-bit index summation.
Matrix reduced_oracle(const Matrix& rho, int n, const std::vector<int>& keep) {
  const int nk = static_cast<int>(keep.size());
  Matrix r = Matrix::Zero(1 << nk, 1 << nk);
  for (int i = 0; i < (1 << n); ++i)
    for (int j = 0; j < (1 << n); ++j) {
      bool traced_equal = true;
      int a = 0, b = 0;
      for (int s = 0; s < n; ++s) {
        const int bi = i >> (n - 1 - s) & 1, bj = j >> (n - 1 - s) & 1;
        const auto pos = std::find(keep.begin(), keep.end(), s);
        if (pos == keep.end()) {
          traced_equal = traced_equal && bi == bj;
        } else {
          const int slot = nk - 1 - static_cast<int>(pos - keep.begin());
          a |= bi << slot;
          b |= bj << slot;
        }
      }
      if (traced_equal) r(a, b) += rho(i, j);
    }
  return r;
}

TEST(PartialTrace, Examples) {
  const DensityMatrix b = DensityMatrix::pure(bell());
  EXPECT_LE(max_abs(partial_trace(b, Bipartition(2, {0})).matrix() - Matrix::Identity(2, 2) / 2.0), 1e-15);
  const DensityMatrix pp = DensityMatrix::pure(product_state({{Axis::x, Sign::plus}, {Axis::z, Sign::plus}}));
  const Matrix r = partial_trace(pp, Bipartition(2, {1})).matrix();
  EXPECT_NEAR(r(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(r(1, 1)), 0.0, 1e-15);
  const Matrix g = partial_trace(DensityMatrix::pure(ghz3()), Bipartition(3, {0, 1})).matrix();
  Matrix expect = Matrix::Zero(4, 4);
  expect(0, 0) = expect(3, 3) = 0.5;
  EXPECT_LE(max_abs(g - expect), 1e-15);
}

TEST(PartialTrace, MatchesIndexOracle) {
  for (int n = 2; n <= 4; ++n)
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      const DensityMatrix rho = testing::random_density(n);
      const Bipartition part = Bipartition::from_mask(n, mask);
      const Matrix r = partial_trace(rho, part).matrix();
      EXPECT_LE(max_abs(r - reduced_oracle(rho.matrix(), n, part.sites())), 1e-14);
      EXPECT_NEAR(r.trace().real(), 1.0, 1e-12);
    }
}

TEST(Purity, Examples) {
  EXPECT_NEAR(purity(DensityMatrix::pure(product_state({{Axis::z, Sign::plus}}))), 1.0, 1e-15);
  EXPECT_NEAR(purity(DensityMatrix::maximally_mixed(1)), 0.5, 1e-15);
  EXPECT_NEAR(purity(partial_trace(DensityMatrix::pure(bell()), Bipartition(2, {1}))), 0.5, 1e-15);
}

TEST(Concurrence, Examples) {
  EXPECT_NEAR(concurrence_pure(bell()), 1.0, 1e-12);
  EXPECT_NEAR(concurrence_pure(ket(3, "+++")), 0.0, 1e-12);
  EXPECT_NEAR(concurrence_pure(ghz3()), std::sqrt(1.5), 1e-12);
  const StateVector psi2{3, Vector(ket(3, "--+").amplitudes() - ket(3, "+--").amplitudes())};
  EXPECT_NEAR(concurrence_pure(psi2), 1.0, 1e-12);
  EXPECT_THROW(concurrence_pure(ket(1, "+")), std::invalid_argument);
}

TEST(Concurrence, BipartiteExamples) {
  EXPECT_NEAR(concurrence_bipartite_pure(ket(2, "++")), 0.0, 1e-15);
  EXPECT_NEAR(concurrence_bipartite_pure(bell()), 1.0, 1e-15);
  EXPECT_NEAR(concurrence_bipartite_pure(StateVector(2, Vector::Constant(4, 0.5))), 0.0, 1e-15);
  EXPECT_THROW(concurrence_bipartite_pure(ket(3, "+++")), std::invalid_argument);
}

TEST(Concurrence, TwoQubitFormsAgree) {
  for (int rep = 0; rep < 50; ++rep) {
    const StateVector s = testing::random_state(2);
    const double c = concurrence_pure(s);
    EXPECT_NEAR(c, concurrence_bipartite_pure(s), 1e-10);
    EXPECT_GE(c, 0.0);
    EXPECT_LE(c, 1.0 + 1e-12);
  }
}

TEST(Concurrence, ProductStatesVanish) {
  for (int n = 2; n <= 3; ++n) {
    std::vector<LocalSpinState> one;
    for (Axis a : {Axis::x, Axis::y, Axis::z})
      for (Sign s : {Sign::plus, Sign::minus}) one.push_back({a, s});
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    for (;;) {
      std::vector<LocalSpinState> sites;
      for (auto i : idx) sites.push_back(one[i]);
      EXPECT_NEAR(concurrence_pure(product_state(sites)), 0.0, 1e-9);
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == 6) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
}

TEST(Concurrence, LocalUnitaryInvariance) {
  for (int n = 2; n <= 5; ++n)
    for (int rep = 0; rep < 5; ++rep) {
      const StateVector s = testing::random_state(n);
      const StateVector t{n, testing::local_unitary(n) * s.amplitudes()};
      EXPECT_NEAR(concurrence_pure(s), concurrence_pure(t), 1e-9);
    }
}

TEST(Concurrence, ComplementaryPuritiesEqual) {
  for (int n = 2; n <= 5; ++n) {
    const DensityMatrix rho = DensityMatrix::pure(testing::random_state(n));
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      const Bipartition a = Bipartition::from_mask(n, mask);
      EXPECT_NEAR(purity(partial_trace(rho, a)), purity(partial_trace(rho, a.complement())), 1e-10);
    }
  }
}

TEST(Concurrence, TenSites) {
  Vector v = Vector::Zero(1024);
  v(0) = v(1023) = 1.0;
  // GHZ_N: every bipartition purity is 1/2.
  const double expect = std::pow(2.0, 1.0 - 5.0) * std::sqrt(1022.0 - 1022.0 / 2.0);
  EXPECT_NEAR(concurrence_pure(StateVector(10, v)), expect, 1e-10);
}

}  // namespace
}  // namespace symcon
