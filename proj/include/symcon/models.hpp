#pragma once
// The four spin clusters: two isotropic spins, two axial spins, three spins on
// a line, three spins on a triangle with radial local axes. Hamiltonians,
// symmetry groups, multiplets and thermal ensembles.

#include "symcon/symmetry.hpp"

#include <array>
#include <map>
#include <string_view>

namespace symcon {

enum class ModelKind { TwoSpinIsotropic, TwoSpinAxial, LineThree, TriangleThree };

inline constexpr std::array<ModelKind, 4> kAllModels = {ModelKind::TwoSpinIsotropic, ModelKind::TwoSpinAxial,
                                                        ModelKind::LineThree, ModelKind::TriangleThree};

inline std::string model_name(ModelKind k) {
  switch (k) {
    case ModelKind::TwoSpinIsotropic: return "iso2";
    case ModelKind::TwoSpinAxial: return "axial2";
    case ModelKind::LineThree: return "line3";
    case ModelKind::TriangleThree: return "triangle3";
  }
  return "?";
}

inline std::optional<ModelKind> parse_model(std::string_view s) {
  for (ModelKind k : kAllModels)
    if (model_name(k) == s) return k;
  return std::nullopt;
}

inline int model_sites(ModelKind k) {
  return k == ModelKind::TwoSpinIsotropic || k == ModelKind::TwoSpinAxial ? 2 : 3;
}

// Number of couplings J1..Jn the model uses.
inline int model_coupling_count(ModelKind k) {
  switch (k) {
    case ModelKind::TwoSpinIsotropic: return 1;
    case ModelKind::TwoSpinAxial: return 2;
    default: return 4;
  }
}

using Couplings = std::array<double, 4>;  // J1..J4

inline std::vector<Frame> model_frames(ModelKind k) {
  if (k != ModelKind::TriangleThree) return std::vector<Frame>(static_cast<std::size_t>(model_sites(k)), Frame::Identity());
  // Local z axes radial in the plane; local x is the global z axis.
  const double h = std::sqrt(3.0) / 2;
  Frame f1, f2, f3;
  f1.col(0) << 0, 0, 1;
  f1.col(1) << 1, 0, 0;
  f1.col(2) << 0, 1, 0;
  f2.col(0) << 0, 0, 1;
  f2.col(1) << -0.5, h, 0;
  f2.col(2) << -h, -0.5, 0;
  f3.col(0) << 0, 0, 1;
  f3.col(1) << -0.5, -h, 0;
  f3.col(2) << h, -0.5, 0;
  return {f1, f2, f3};
}

struct ModelSpec {
  ModelKind kind = ModelKind::TwoSpinAxial;
  Couplings couplings{};
  std::vector<Frame> site_frames;

  static ModelSpec make(ModelKind kind, Couplings j) {
    ModelSpec s{kind, j, model_frames(kind)};
    s.validate();
    return s;
  }

  int n_sites() const { return model_sites(kind); }

  void validate() const {
    for (double j : couplings)
      if (!std::isfinite(j)) throw std::invalid_argument("ModelSpec: non-finite coupling");
    for (int k = model_coupling_count(kind); k < 4; ++k)
      if (couplings[static_cast<std::size_t>(k)] != 0.0)
        throw std::invalid_argument("ModelSpec: coupling J" + std::to_string(k + 1) + " is not used by model " +
                                    model_name(kind) + " and must be zero");
    if (static_cast<int>(site_frames.size()) != n_sites()) throw std::invalid_argument("ModelSpec: wrong number of site frames");
    for (const auto& f : site_frames) {
      if ((f.transpose() * f - Frame::Identity()).cwiseAbs().maxCoeff() > 1e-12 || f.determinant() < 0)
        throw std::invalid_argument("ModelSpec: site frame is not a right-handed orthonormal triad");
    }
  }
};

// --- operators --------------------------------------------------------------

// Spin-1/2 operator S_axis acting on `site` of an n-site register.
inline Matrix spin_operator(int n, int site, Axis axis) {
  Eigen::Matrix2cd s;
  const Complex i(0.0, 1.0);
  switch (axis) {
    case Axis::x: s << 0, 0.5, 0.5, 0; break;
    case Axis::y: s << 0, -0.5 * i, 0.5 * i, 0; break;
    case Axis::z: s << 0.5, 0, 0, -0.5; break;
  }
  const Eigen::Index d = Eigen::Index{1} << n;
  Matrix m = Matrix::Zero(d, d);
  const int shift = n - 1 - site;
  for (Eigen::Index b = 0; b < d; ++b) {
    const int bit = static_cast<int>(b >> shift & 1);
    for (int nb = 0; nb < 2; ++nb) {
      const Complex v = s(nb, bit);
      if (v != 0.0) m((b & ~(Eigen::Index{1} << shift)) | (Eigen::Index{nb} << shift), b) += v;
    }
  }
  return m;
}

inline Matrix total_sz(int n) {
  const Eigen::Index d = Eigen::Index{1} << n;
  Matrix m = Matrix::Zero(d, d);
  for (Eigen::Index b = 0; b < d; ++b) m(b, b) = 0.5 * twice_sz(n, b);
  return m;
}

inline Matrix build_hamiltonian(const ModelSpec& spec) {
  spec.validate();
  const int n = spec.n_sites();
  const auto& J = spec.couplings;
  const auto S = [n](int site, Axis a) { return spin_operator(n, site, a); };
  const auto zz = [&](int i, int j) { return Matrix(S(i, Axis::z) * S(j, Axis::z)); };
  const auto xy = [&](int i, int j) { return Matrix(S(i, Axis::x) * S(j, Axis::x) + S(i, Axis::y) * S(j, Axis::y)); };
  switch (spec.kind) {
    case ModelKind::TwoSpinIsotropic:
      return J[0] * (zz(0, 1) + xy(0, 1));
    case ModelKind::TwoSpinAxial:
      return J[0] * zz(0, 1) + J[1] * xy(0, 1);
    case ModelKind::LineThree:
      return J[0] * (zz(0, 1) + zz(1, 2)) + J[1] * (xy(0, 1) + xy(1, 2)) + J[2] * zz(0, 2) + J[3] * xy(0, 2);
    case ModelKind::TriangleThree: {
      Matrix h = Matrix::Zero(8, 8);
      for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{2, 0}}) {
        h += J[0] * zz(i, j) + J[1] * S(i, Axis::x) * S(j, Axis::x) + J[2] * S(i, Axis::y) * S(j, Axis::y);
        h += J[3] * (S(i, Axis::z) * S(j, Axis::y) - S(i, Axis::y) * S(j, Axis::z));
      }
      return h;
    }
  }
  return {};
}

// --- per-model symmetry context (built once, immutable) ---------------------

struct ModelContext {
  ModelKind kind;
  int n_sites;
  SymmetryGroup group;
  InvariantBasis basis;
  // Hermitian operators commuting with H, diagonalized in turn inside each
  // degenerate eigenspace to fix a canonical member basis.
  std::vector<Matrix> refiners;
};

namespace detail {

inline void add_refiner_pair(std::vector<Matrix>& out, const Matrix& u) {
  const Complex i(0.0, 1.0);
  out.push_back((u - u.adjoint()) / (2.0 * i));
  out.push_back((u + u.adjoint()) / 2.0);
}

inline ModelContext build_context(ModelKind kind) {
  const int n = model_sites(kind);
  const auto frames = model_frames(kind);
  const Eigen::Vector3d ex(1, 0, 0), ey(0, 1, 0), ez(0, 0, 1);
  const double pi = std::acos(-1.0);
  std::vector<GroupElement> gens;
  std::vector<Matrix> refiners;
  bool u1 = false;
  switch (kind) {
    case ModelKind::TwoSpinIsotropic: {
      gens = {site_permutation({1, 0}), geometric_element(rotation(ex, pi / 2), frames),
              geometric_element(rotation(ey, pi / 2), frames), geometric_element(rotation(ez, pi / 2), frames),
              time_reversal(n)};
      refiners = {total_sz(n)};
      detail::add_refiner_pair(refiners, site_permutation({1, 0}).operator_matrix());
      break;
    }
    case ModelKind::TwoSpinAxial:
    case ModelKind::LineThree: {
      std::vector<Eigen::Vector3d> pos;
      if (n == 2) pos = {ez, -ez};
      else pos = {ez, Eigen::Vector3d::Zero(), -ez};
      const GroupElement c2y = geometric_element(rotation(ey, pi), frames, pos);
      const GroupElement inv = geometric_element(-Rotation3::Identity(), frames, pos);
      gens = {c2y, inv, time_reversal(n)};
      u1 = true;
      refiners = {total_sz(n)};
      detail::add_refiner_pair(refiners, inv.operator_matrix());
      detail::add_refiner_pair(refiners, c2y.operator_matrix());
      break;
    }
    case ModelKind::TriangleThree: {
      std::vector<Eigen::Vector3d> pos;
      for (const auto& f : frames) pos.push_back(f.col(2));
      const GroupElement c3 = geometric_element(rotation(ez, 2 * pi / 3), frames, pos);
      const GroupElement c2y = geometric_element(rotation(ey, pi), frames, pos);
      Rotation3 mirror = Rotation3::Identity();
      mirror(2, 2) = -1;
      const GroupElement sh = geometric_element(mirror, frames, pos);
      gens = {c3, c2y, sh, time_reversal(n)};
      detail::add_refiner_pair(refiners, c3.operator_matrix());
      detail::add_refiner_pair(refiners, sh.operator_matrix());
      detail::add_refiner_pair(refiners, c2y.operator_matrix());
      break;
    }
  }
  SymmetryGroup group = SymmetryGroup::generate(n, gens, u1);
  InvariantBasis basis = invariant_basis(group, n);
  return {kind, n, std::move(group), std::move(basis), std::move(refiners)};
}

}  // namespace detail

// Thread-safe lazily built context per model kind.
inline const ModelContext& model_context(ModelKind kind) {
  static const ModelContext iso = detail::build_context(ModelKind::TwoSpinIsotropic);
  static const ModelContext axial = detail::build_context(ModelKind::TwoSpinAxial);
  static const ModelContext line = detail::build_context(ModelKind::LineThree);
  static const ModelContext tri = detail::build_context(ModelKind::TriangleThree);
  switch (kind) {
    case ModelKind::TwoSpinIsotropic: return iso;
    case ModelKind::TwoSpinAxial: return axial;
    case ModelKind::LineThree: return line;
    case ModelKind::TriangleThree: return tri;
  }
  throw std::invalid_argument("model_context: unknown model");
}

inline const SymmetryGroup& model_group(ModelKind kind) { return model_context(kind).group; }

// --- spectrum ---------------------------------------------------------------

struct Multiplet {
  double energy = 0.0;
  int degeneracy = 0;
  std::vector<StateVector> members;
  DensityMatrix rho;
  double concurrence = 0.0;  // mean over members
  std::vector<double> member_concurrences;
  RealVector params;  // invariant-basis coordinates of rho
};

namespace detail {

// Split the orthonormal columns of `block` into refined clusters.
inline std::vector<Matrix> refine(const Matrix& block, const std::vector<Matrix>& refiners) {
  std::vector<Matrix> clusters{block};
  for (const auto& r : refiners) {
    std::vector<Matrix> next;
    for (const auto& c : clusters) {
      if (c.cols() == 1) {
        next.push_back(c);
        continue;
      }
      Matrix m = c.adjoint() * r * c;
      m = (m + m.adjoint()) * 0.5;
      const EigenSystem es = hermitian_eigensystem(m);
      const Matrix rotated = c * es.vectors;
      Eigen::Index start = 0;
      for (Eigen::Index k = 1; k <= rotated.cols(); ++k)
        if (k == rotated.cols() || es.values(k) - es.values(k - 1) > 1e-9) {
          next.push_back(rotated.middleCols(start, k - start));
          start = k;
        }
    }
    clusters = std::move(next);
  }
  return clusters;
}

}  // namespace detail

inline std::vector<Multiplet> diagonalize(const ModelSpec& spec) {
  const ModelContext& ctx = model_context(spec.kind);
  const Matrix h = build_hamiltonian(spec);
  const EigenSystem es = hermitian_eigensystem(h);
  const Eigen::Index d = h.rows();
  const double hnorm = std::max(std::abs(es.values(0)), std::abs(es.values(d - 1)));
  const double tol = 1e-9 * std::max(1.0, hnorm);

  std::vector<Multiplet> out;
  for (Eigen::Index start = 0; start < d;) {
    Eigen::Index end = start + 1;
    while (end < d && es.values(end) - es.values(start) <= tol) ++end;
    Matrix v = es.vectors.middleCols(start, end - start);
    double e = es.values.segment(start, end - start).mean();
    Matrix canon(d, v.cols());
    Eigen::Index col = 0;
    for (const auto& c : detail::refine(v, ctx.refiners)) {
      canon.middleCols(col, c.cols()) = c;
      col += c.cols();
    }
    for (Eigen::Index j = 0; j < canon.cols(); ++j) detail::fix_phase(canon, j);

    Multiplet m;
    m.energy = e;
    m.degeneracy = static_cast<int>(canon.cols());
    Matrix rho = Matrix::Zero(d, d);
    for (Eigen::Index j = 0; j < canon.cols(); ++j) {
      m.members.emplace_back(spec.n_sites(), canon.col(j));
      const double c = concurrence_pure(m.members.back());
      m.member_concurrences.push_back(c);
      m.concurrence += c;
      rho += canon.col(j) * canon.col(j).adjoint();
    }
    m.concurrence /= m.degeneracy;
    rho /= static_cast<double>(m.degeneracy);
    m.rho = DensityMatrix(spec.n_sites(), rho, DensityMatrix::Unchecked{});
    m.params = ctx.basis.coordinates(rho);
    out.push_back(std::move(m));
    start = end;
  }
  return out;
}

// --- thermal ensembles --------------------------------------------------------

struct ThermalEnsemble {
  ModelKind kind = ModelKind::TwoSpinAxial;
  std::vector<Multiplet> multiplets;
  double temperature = 0.0;
  std::vector<double> weights;
  DensityMatrix rho;
  RealVector params;
};

inline std::vector<double> thermal_weights(const std::vector<Multiplet>& ms, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("thermal_ensemble: temperature must be >= 0");
  if (ms.empty()) throw std::invalid_argument("thermal_ensemble: no multiplets");
  double emin = ms.front().energy;
  for (const auto& m : ms) emin = std::min(emin, m.energy);
  std::vector<double> w(ms.size());
  double z = 0.0;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (t == 0.0) w[i] = ms[i].energy == emin ? ms[i].degeneracy : 0.0;
    else w[i] = ms[i].degeneracy * std::exp(-(ms[i].energy - emin) / t);
    z += w[i];
  }
  for (double& x : w) x /= z;
  return w;
}

inline ThermalEnsemble thermal_ensemble(ModelKind kind, std::vector<Multiplet> ms, double t) {
  ThermalEnsemble e;
  e.kind = kind;
  e.weights = thermal_weights(ms, t);
  e.temperature = t;
  const Eigen::Index d = ms.front().rho.dim();
  Matrix rho = Matrix::Zero(d, d);
  RealVector params = RealVector::Zero(ms.front().params.size());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    rho += e.weights[i] * ms[i].rho.matrix();
    params += e.weights[i] * ms[i].params;
  }
  e.rho = DensityMatrix(ms.front().rho.n_sites(), rho, DensityMatrix::Unchecked{});
  e.params = params;
  e.multiplets = std::move(ms);
  return e;
}

inline ThermalEnsemble thermal_ensemble(const ModelSpec& spec, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("thermal_ensemble: temperature must be >= 0");
  return thermal_ensemble(spec.kind, diagonalize(spec), t);
}

// --- symmetrized states and the published parameterization -----------------

namespace detail {

inline Vector basis_combo(int n, std::initializer_list<std::pair<const char*, double>> terms) {
  Vector v = Vector::Zero(Eigen::Index{1} << n);
  for (const auto& [bits, amp] : terms) {
    Eigen::Index b = 0;
    for (int k = 0; k < n; ++k)
      if (bits[k] == '-') b |= Eigen::Index{1} << (n - 1 - k);
    v(b) += amp;
  }
  return v;
}

}  // namespace detail

// Symmetrized three-spin states ("+" members of each time-reversed pair).
// line3: {Psi1, Psi2, Psi3(1), Psi3(2)}; triangle3: {Psi1(1), Psi1(2), Psi3, Psi4}.
inline std::vector<StateVector> symmetrized_states(ModelKind kind) {
  using detail::basis_combo;
  const double r2 = 1.0 / std::sqrt(2.0), r3 = 1.0 / std::sqrt(3.0);
  const Complex w = std::polar(1.0, 2.0 * std::acos(-1.0) / 3.0);
  switch (kind) {
    case ModelKind::LineThree:
      return {{3, basis_combo(3, {{"+++", 1}})},
              {3, basis_combo(3, {{"--+", r2}, {"+--", -r2}})},
              {3, basis_combo(3, {{"-+-", 1}})},
              {3, basis_combo(3, {{"--+", r2}, {"+--", r2}})}};
    case ModelKind::TriangleThree: {
      // Phi_a/Phi_b: C3 eigen-combinations of the one-flip states in each S_z sector.
      const auto combo = [&](const char* s0, const char* s1, const char* s2, Complex c1, Complex c2) {
        return Vector(r3 * (basis_combo(3, {{s0, 1}}) + c1 * basis_combo(3, {{s1, 1}}) + c2 * basis_combo(3, {{s2, 1}})));
      };
      const Vector phi_a_p = combo("--+", "-+-", "+--", w, w * w);
      const Vector phi_a_m = combo("++-", "+-+", "-++", w * w, w);
      const Vector phi_b_p = combo("--+", "-+-", "+--", w * w, w);
      const Vector phi_b_m = combo("++-", "+-+", "-++", w, w * w);
      const Vector psi3 = r2 * (phi_a_p - phi_b_m);
      const Vector psi4 = r2 * (phi_b_p - phi_a_m);
      return {{3, basis_combo(3, {{"+++", 1}})},
              {3, basis_combo(3, {{"+--", r3}, {"-+-", r3}, {"--+", r3}})},
              {3, psi3},
              {3, psi4}};
    }
    default:
      throw std::invalid_argument("symmetrized_states: only line3 and triangle3 have symmetrized tables");
  }
}

struct MixingAngles {
  double alpha = 1.0, beta = 0.0;
  double energy_major = 0.0;  // eigenstate alpha*first + beta*second
  double energy_minor = 0.0;  // eigenstate alpha*second - beta*first
};

// Diagonalize the 2x2 block of H on the two symmetrized states that mix.
inline MixingAngles mixing_angles(const ModelSpec& spec) {
  if (spec.kind != ModelKind::LineThree && spec.kind != ModelKind::TriangleThree)
    throw std::invalid_argument("mixing_angles: model has no mixed block");
  const auto st = symmetrized_states(spec.kind);
  const std::size_t i0 = spec.kind == ModelKind::LineThree ? 2 : 0;
  const Vector& u = st[i0].amplitudes();
  const Vector& v = st[i0 + 1].amplitudes();
  const Matrix h = build_hamiltonian(spec);
  Matrix blk(2, 2);
  blk(0, 0) = u.dot(h * u);
  blk(0, 1) = u.dot(h * v);
  blk(1, 0) = v.dot(h * u);
  blk(1, 1) = v.dot(h * v);
  const EigenSystem es = hermitian_eigensystem(blk);
  // The eigenvector whose first component dominates is the "major" state.
  const int major = std::abs(es.vectors(0, 0)) >= std::abs(es.vectors(0, 1)) ? 0 : 1;
  Complex a = es.vectors(0, major), b = es.vectors(1, major);
  const Complex ph = std::abs(a) > 0 ? std::conj(a) / std::abs(a) : 1.0;
  a *= ph;
  b *= ph;
  MixingAngles m;
  m.alpha = a.real();
  m.beta = b.real();
  m.energy_major = es.values(major);
  m.energy_minor = es.values(1 - major);
  return m;
}

struct LabeledLevel {
  std::string label;
  double energy;
};

// Energies of the published level labels, evaluated from H on the
// symmetrized states (two-spin: singlet/triplet members).
inline std::vector<LabeledLevel> labeled_levels(const ModelSpec& spec) {
  const Matrix h = build_hamiltonian(spec);
  const auto expect = [&](const Vector& v) { return v.dot(h * v).real() / v.squaredNorm(); };
  const double r2 = 1.0 / std::sqrt(2.0);
  switch (spec.kind) {
    case ModelKind::TwoSpinIsotropic:
    case ModelKind::TwoSpinAxial: {
      const double es = expect(detail::basis_combo(2, {{"+-", r2}, {"-+", -r2}}));
      const double et0 = expect(detail::basis_combo(2, {{"+-", r2}, {"-+", r2}}));
      const double et1 = expect(detail::basis_combo(2, {{"++", 1}}));
      if (spec.kind == ModelKind::TwoSpinIsotropic) return {{"E_s", es}, {"E_t", et1}};
      return {{"E_s", es}, {"E_t0", et0}, {"E_t1", et1}};
    }
    case ModelKind::LineThree: {
      const auto st = symmetrized_states(spec.kind);
      const MixingAngles m = mixing_angles(spec);
      return {{"E1", expect(st[0].amplitudes())}, {"E2", expect(st[1].amplitudes())}, {"E3", m.energy_major}, {"E4", m.energy_minor}};
    }
    case ModelKind::TriangleThree: {
      const auto st = symmetrized_states(spec.kind);
      const MixingAngles m = mixing_angles(spec);
      return {{"E1", m.energy_major}, {"E2", m.energy_minor}, {"E3", expect(st[2].amplitudes())}, {"E4", expect(st[3].amplitudes())}};
    }
  }
  return {};
}

// Literal published coordinates of a density ([a,b,c,...] with the published
// row ordering and scalings). Two-spin isotropic: [p_singlet, p_triplet].
inline RealVector paper_coordinates(ModelKind kind, const DensityMatrix& rho) {
  const auto& m = rho.matrix();
  RealVector c;
  switch (kind) {
    case ModelKind::TwoSpinIsotropic: {
      const Vector s = detail::basis_combo(2, {{"+-", 1 / std::sqrt(2.0)}, {"-+", -1 / std::sqrt(2.0)}});
      const double ps = s.dot(m * s).real();
      c.resize(2);
      c << ps, 1 - ps;
      break;
    }
    case ModelKind::TwoSpinAxial:
      c.resize(3);
      c << 2 * m(0, 0).real(), 2 * m(1, 1).real(), m(1, 2).real();
      break;
    case ModelKind::LineThree:
      c.resize(5);
      c << 2 * m(0, 0).real(), 4 * m(1, 1).real(), 2 * m(2, 2).real(), m(1, 2).real(), m(1, 4).real();
      break;
    case ModelKind::TriangleThree:
      c.resize(5);
      c << 2 * m(0, 0).real(), 6 * m(1, 1).real(), m(1, 2).real(), -m(1, 3).imag(), m(0, 3).real();
      break;
  }
  return c;
}

inline std::vector<std::string> paper_coordinate_labels(ModelKind kind) {
  switch (kind) {
    case ModelKind::TwoSpinIsotropic: return {"s", "t"};
    case ModelKind::TwoSpinAxial: return {"a", "b", "c"};
    default: return {"a", "b", "c", "d", "e"};
  }
}

struct PaperDensityRow {
  std::string label;
  double energy;
  RealVector coords;
};

// Published symbolic multiplet densities evaluated at the current couplings.
inline std::vector<PaperDensityRow> paper_density_tables(const ModelSpec& spec) {
  const auto lv = labeled_levels(spec);
  const auto vec = [](std::initializer_list<double> xs) {
    RealVector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) v(i++) = x;
    return v;
  };
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
  switch (spec.kind) {
    case ModelKind::TwoSpinAxial:
      return {{"rho_s", lv[0].energy, vec({0, 1, -0.5})},
              {"rho_t0", lv[1].energy, vec({0, 1, 0.5})},
              {"rho_t1", lv[2].energy, vec({1, 0, 0})}};
    case ModelKind::LineThree: {
      const MixingAngles m = mixing_angles(spec);
      const double a = m.alpha, b = m.beta;
      return {{"rho1", lv[0].energy, vec({1, 0, 0, 0, 0})},
              {"rho2", lv[1].energy, vec({0, 1, 0, 0, -0.25})},
              {"rho3", lv[2].energy, vec({0, b * b, a * a, a * b / (2 * s2), b * b / 4})},
              {"rho4", lv[3].energy, vec({0, a * a, b * b, -a * b / (2 * s2), a * a / 4})}};
    }
    case ModelKind::TriangleThree: {
      const MixingAngles m = mixing_angles(spec);
      const double a = m.alpha, b = m.beta;
      return {{"rho1", lv[0].energy, vec({a * a, b * b, b * b / 6, 0, a * b / (2 * s3)})},
              {"rho2", lv[1].energy, vec({b * b, a * a, a * a / 6, 0, -a * b / (2 * s3)})},
              {"rho3", lv[2].energy, vec({0, 1, -1.0 / 12, 1 / (4 * s3), 0})},
              {"rho4", lv[3].energy, vec({0, 1, -1.0 / 12, -1 / (4 * s3), 0})}};
    }
    default:
      throw std::invalid_argument("paper_density_tables: not tabulated for this model");
  }
}

}  // namespace symcon
