#include "reeb/manifolds.hpp"

#include <algorithm>

#include "reeb/errors.hpp"

namespace reeb {

GeneratingManifold GeneratingManifold::sphere(int d) {
  GeneratingManifold m{ManifoldKind::Sphere, d, {}};
  validate(m);
  return m;
}

GeneratingManifold GeneratingManifold::connected_sum(int d, std::vector<SpherePair> summands) {
  for (auto& p : summands) {
    if (p.a > p.b) std::swap(p.a, p.b);
  }
  std::sort(summands.begin(), summands.end());
  GeneratingManifold m{ManifoldKind::ConnectedSum, d, std::move(summands)};
  validate(m);
  return m;
}

std::string GeneratingManifold::to_string() const {
  switch (kind) {
    case ManifoldKind::Point:
      return "pt";
    case ManifoldKind::Sphere:
      return "S^" + std::to_string(dim);
    case ManifoldKind::ConnectedSum:
      break;
  }
  std::string out;
  for (const auto& p : summands) {
    if (!out.empty()) out += " # ";
    out += "S^" + std::to_string(p.a) + "xS^" + std::to_string(p.b);
  }
  return out;
}

void validate(const GeneratingManifold& m) {
  const std::string name = "dimension-" + std::to_string(m.dim) + " ";
  switch (m.kind) {
    case ManifoldKind::Point:
      if (m.dim != 0) throw ValidationError("point must have dimension 0, got " + std::to_string(m.dim));
      if (!m.summands.empty()) throw ValidationError("point cannot have summands");
      return;
    case ManifoldKind::Sphere:
      if (m.dim < 1) throw ValidationError("sphere must have dimension >= 1, got " + std::to_string(m.dim));
      if (!m.summands.empty()) throw ValidationError("sphere cannot have summands");
      return;
    case ManifoldKind::ConnectedSum:
      break;
  }
  if (m.dim < 2) throw ValidationError("connected sum must have dimension >= 2, got " + std::to_string(m.dim));
  if (m.summands.empty()) throw ValidationError(name + "connected sum has no summands");
  for (std::size_t i = 0; i < m.summands.size(); ++i) {
    const auto& p = m.summands[i];
    const std::string where = "summand " + std::to_string(i) + " (" + std::to_string(p.a) + ", " +
                              std::to_string(p.b) + ")";
    if (p.a < 1 || p.b < 1) throw ValidationError(where + ": sphere factors need dimension >= 1");
    if (p.a + p.b != m.dim) {
      throw ValidationError(where + ": " + std::to_string(p.a) + " + " + std::to_string(p.b) +
                            " != " + std::to_string(m.dim));
    }
    if (p.a > p.b) throw ValidationError(where + ": pair not in canonical order a <= b");
  }
}

std::vector<std::int64_t> betti_numbers(const GeneratingManifold& m) {
  validate(m);
  std::vector<std::int64_t> b(static_cast<std::size_t>(m.dim) + 1, 0);
  b.front() += 1;
  if (m.dim > 0) b.back() += 1;
  for (const auto& p : m.summands) {
    ++b[static_cast<std::size_t>(p.a)];
    ++b[static_cast<std::size_t>(p.b)];
  }
  return b;
}

std::vector<AbelianGroup> homology(const GeneratingManifold& m) {
  std::vector<AbelianGroup> out;
  for (auto b : betti_numbers(m)) out.push_back(AbelianGroup::free(Integer(static_cast<long>(b))));
  return out;
}

ChainComplex cellular_model(const GeneratingManifold& m) {
  validate(m);
  if (m.kind != ManifoldKind::ConnectedSum) return sphere_complex(m.dim);
  if (m.summands.size() == 1) return tensor(sphere_complex(m.summands[0].a), sphere_complex(m.summands[0].b));

  // All differentials vanish in the minimal model; the tensor products only
  // determine which cells each summand brings in degrees 1..dim-1.
  std::vector<std::size_t> dims(static_cast<std::size_t>(m.dim) + 1, 0);
  dims.front() = 1;
  dims.back() = 1;
  for (const auto& p : m.summands) {
    const ChainComplex product = tensor(sphere_complex(p.a), sphere_complex(p.b));
    for (int k = 1; k < m.dim; ++k) dims[static_cast<std::size_t>(k)] += product.cells(k);
  }
  std::vector<IntMatrix> boundaries;
  for (int k = 1; k <= m.dim; ++k) {
    boundaries.emplace_back(dims[static_cast<std::size_t>(k) - 1], dims[static_cast<std::size_t>(k)]);
  }
  return ChainComplex(std::move(dims), std::move(boundaries));
}

}  // namespace reeb
