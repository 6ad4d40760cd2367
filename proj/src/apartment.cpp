#include "mustafin/apartment.hpp"

#include <algorithm>
#include <set>

#include "mustafin/errors.hpp"
#include "mustafin/hull.hpp"

namespace mustafin {

DiagonalLatticeClass DiagonalLatticeClass::from_exponents(
    std::vector<Coord> exponents) {
  if (exponents.size() < 2) {
    throw DimensionError("lattice class needs at least 2 exponents");
  }
  const Coord lo = *std::min_element(exponents.begin(), exponents.end());
  for (auto& e : exponents) e -= lo;
  return DiagonalLatticeClass(std::move(exponents));
}

TorusPoint class_to_point(const DiagonalLatticeClass& c) {
  std::vector<Coord> neg(c.exponents());
  for (auto& e : neg) e = -e;
  return TorusPoint::normalize(neg);
}

DiagonalLatticeClass point_to_class(const TorusPoint& p) {
  std::vector<Coord> e(p.coords());
  for (auto& x : e) x = -x;
  return DiagonalLatticeClass::from_exponents(std::move(e));
}

bool is_adjacent(const TorusPoint& u, const TorusPoint& v) {
  if (u.dim() != v.dim()) throw DimensionError("adjacency: dimension mismatch");
  if (u == v) throw ContractError("adjacency of a class with itself");
  Coord lo = v[0] - u[0], hi = lo;
  for (std::size_t j = 1; j < u.dim(); ++j) {
    lo = std::min(lo, v[j] - u[j]);
    hi = std::max(hi, v[j] - u[j]);
  }
  return hi - lo == 1;
}

bool is_convex_configuration(const Configuration& config) {
  const auto hull = lattice_points(config);
  const std::set<TorusPoint> own(config.points().begin(), config.points().end());
  return own == hull.points;
}

Configuration local_model_chain(std::size_t d) {
  if (d < 2) throw ContractError("local model chain needs d >= 2");
  std::vector<TorusPoint> pts;
  pts.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Coord> e(d, 0);
    std::fill(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(i), 1);
    pts.push_back(class_to_point(DiagonalLatticeClass::from_exponents(e)));
  }
  return Configuration(d, std::move(pts));
}

}  // namespace mustafin
