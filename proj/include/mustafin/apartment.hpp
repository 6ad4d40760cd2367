#pragma once

// Diagonal lattice classes of one apartment and their torus coordinates.
//
// The class of pi^{m_1} R e_1 + ... + pi^{m_d} R e_d corresponds to the torus
// point (-m_1, ..., -m_d). Exponent vectors are stored with minimum 0.

#include <vector>

#include "mustafin/tropical.hpp"

namespace mustafin {

class DiagonalLatticeClass {
 public:
  /// Shifts the exponents so the smallest is zero. Needs d >= 2.
  static DiagonalLatticeClass from_exponents(std::vector<Coord> exponents);

  const std::vector<Coord>& exponents() const { return exponents_; }
  std::size_t dim() const { return exponents_.size(); }

  bool operator==(const DiagonalLatticeClass&) const = default;

 private:
  explicit DiagonalLatticeClass(std::vector<Coord> e) : exponents_(std::move(e)) {}
  std::vector<Coord> exponents_;
};

TorusPoint class_to_point(const DiagonalLatticeClass& c);
DiagonalLatticeClass point_to_class(const TorusPoint& p);

/// Vertices of the building adjacent: the difference has spread exactly one.
/// ContractError when u == v.
bool is_adjacent(const TorusPoint& u, const TorusPoint& v);

/// Closed under pi^a L cap pi^b L'; tested as equality with the hull.
bool is_convex_configuration(const Configuration& config);

/// L_i = pi e_1 + ... + pi e_i + e_{i+1} + ... + e_d for i = 0..d-1.
Configuration local_model_chain(std::size_t d);

}  // namespace mustafin
