#pragma once
// Separable, symmetry-invariant densities: group twirls of the 6^N local-axis
// product states, deduplicated and pruned to the extreme rays of their cone.

#include "symcon/models.hpp"
#include "symcon/simplex.hpp"

#include <nlohmann/json.hpp>

namespace symcon {

struct CatalogEntry {
  RealVector coords;  // invariant-basis coordinates
  std::vector<LocalSpinState> generator;
  DensityMatrix density;
};

// 6^n tuples in lexicographic order over (x+, x-, y+, y-, z+, z-).
inline std::vector<std::vector<LocalSpinState>> enumerate_product_states(int n_sites) {
  if (n_sites < 1) throw std::invalid_argument("enumerate_product_states: n_sites must be >= 1");
  check_sites(n_sites);
  std::vector<LocalSpinState> one;
  for (Axis a : {Axis::x, Axis::y, Axis::z})
    for (Sign s : {Sign::plus, Sign::minus}) one.push_back({a, s});
  std::vector<std::vector<LocalSpinState>> out{{}};
  for (int k = 0; k < n_sites; ++k) {
    std::vector<std::vector<LocalSpinState>> next;
    next.reserve(out.size() * 6);
    for (const auto& prefix : out)
      for (const auto& s : one) {
        auto t = prefix;
        t.push_back(s);
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  return out;
}

inline bool is_conically_redundant(const RealVector& entry, const std::vector<RealVector>& others, double tol = 1e-9) {
  RealMatrix a(entry.size(), static_cast<Eigen::Index>(others.size()));
  for (std::size_t j = 0; j < others.size(); ++j) a.col(static_cast<Eigen::Index>(j)) = others[j];
  return lp_feasible(a, entry, tol);
}

namespace detail {

inline bool coords_less(const RealVector& a, const RealVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i) - 1e-12) return true;
    if (a(i) > b(i) + 1e-12) return false;
  }
  return false;
}

}  // namespace detail

// Every distinct twirl (dedup within 1e-9), sorted by coordinates; the first
// product state in enumeration order is kept as the generator.
inline std::vector<CatalogEntry> twirled_product_states(ModelKind kind) {
  const ModelContext& ctx = model_context(kind);
  std::vector<CatalogEntry> uniq;
  for (const auto& gen : enumerate_product_states(ctx.n_sites)) {
    const DensityMatrix eta = twirl(ctx.group, DensityMatrix::pure(product_state(gen)));
    RealVector c = ctx.basis.coordinates(eta.matrix());
    bool seen = false;
    for (const auto& e : uniq)
      if ((e.coords - c).norm() <= 1e-9) seen = true;
    if (!seen) uniq.push_back({std::move(c), gen, eta});
  }
  std::stable_sort(uniq.begin(), uniq.end(),
                   [](const CatalogEntry& a, const CatalogEntry& b) { return detail::coords_less(a.coords, b.coords); });
  return uniq;
}

// Greedy pruning in the given order, then a final pass confirming that no
// retained entry is a conic combination of the remaining ones.
inline std::vector<CatalogEntry> prune_redundant(std::vector<CatalogEntry> entries) {
  const auto others_of = [](const std::vector<CatalogEntry>& v, std::size_t skip) {
    std::vector<RealVector> o;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (j != skip) o.push_back(v[j].coords);
    return o;
  };
  for (std::size_t i = 0; i < entries.size();) {
    if (is_conically_redundant(entries[i].coords, others_of(entries, i))) entries.erase(entries.begin() + static_cast<std::ptrdiff_t>(i));
    else ++i;
  }
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (is_conically_redundant(entries[i].coords, others_of(entries, i)))
      throw NumericalError("prune_redundant: retained entry is redundant after pruning");
  return entries;
}

inline std::vector<CatalogEntry> build_catalog(ModelKind kind) { return prune_redundant(twirled_product_states(kind)); }

inline std::vector<CatalogEntry> build_catalog(const ModelSpec& spec) { return build_catalog(spec.kind); }

// Cached per model kind; catalogs do not depend on the couplings.
inline const std::vector<CatalogEntry>& model_catalog(ModelKind kind) {
  static const std::vector<CatalogEntry> iso = build_catalog(ModelKind::TwoSpinIsotropic);
  static const std::vector<CatalogEntry> axial = build_catalog(ModelKind::TwoSpinAxial);
  static const std::vector<CatalogEntry> line = build_catalog(ModelKind::LineThree);
  static const std::vector<CatalogEntry> tri = build_catalog(ModelKind::TriangleThree);
  switch (kind) {
    case ModelKind::TwoSpinIsotropic: return iso;
    case ModelKind::TwoSpinAxial: return axial;
    case ModelKind::LineThree: return line;
    case ModelKind::TriangleThree: return tri;
  }
  throw std::invalid_argument("model_catalog: unknown model");
}

inline nlohmann::json catalog_json(ModelKind kind, const std::vector<CatalogEntry>& entries) {
  nlohmann::json arr = nlohmann::json::array();
  int k = 0;
  for (const auto& e : entries) {
    const RealVector pc = paper_coordinates(kind, e.density);
    arr.push_back({{"label", "eta" + std::to_string(++k)},
                   {"coords", std::vector<double>(pc.data(), pc.data() + pc.size())},
                   {"basis_coords", std::vector<double>(e.coords.data(), e.coords.data() + e.coords.size())},
                   {"generator", product_label(e.generator)}});
  }
  return arr;
}

}  // namespace symcon
