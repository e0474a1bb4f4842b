#pragma once

#include <cstddef>
#include <vector>

namespace geab::oracle {

enum class Spacing {
  uniform,
  /// sinh-graded on each side so the spacing is finest at the interface.
  geometric,
};

/// Strictly increasing radial nodes in zeta = r/a with one node exactly at
/// the interface zeta = 1/A.
class RadialGrid {
 public:
  /// Uniform grid on [0, zeta_max] with at least min_points nodes. The
  /// step is adjusted so the interface falls on a node and the number of
  /// intervals below the interface is even (the grid can be coarsened once).
  static RadialGrid uniform(double zeta_max, double interface_zeta, std::size_t min_points);

  /// Graded grid on [0, zeta_max] with num_points nodes; stretch > 0 sets
  /// how strongly nodes cluster at the interface.
  static RadialGrid geometric(double zeta_max, double interface_zeta, std::size_t num_points,
                              double stretch = 3.0);

  /// Arbitrary nodes. Throws InvalidArgument unless they are strictly
  /// increasing, non-negative, at least 64 of them, and one equals
  /// interface_zeta exactly.
  static RadialGrid from_nodes(std::vector<double> nodes, double interface_zeta);

  /// Grid with every interval halved. Nodes of *this are nodes of the result.
  RadialGrid refined() const;

  const std::vector<double>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  double operator[](std::size_t i) const { return nodes_[i]; }
  double zeta_min() const { return nodes_.front(); }
  double zeta_max() const { return nodes_.back(); }
  double interface_zeta() const { return nodes_[interface_index_]; }
  std::size_t interface_index() const { return interface_index_; }
  Spacing spacing() const { return spacing_; }
  /// Index of a node equal to zeta within a relative 1e-12; throws InvalidArgument if none.
  std::size_t index_of(double zeta) const;

 private:
  RadialGrid(std::vector<double> nodes, std::size_t interface_index, Spacing spacing, double stretch,
             std::size_t intervals_inside, std::size_t intervals_outside);

  std::vector<double> nodes_;
  std::size_t interface_index_ = 0;
  Spacing spacing_ = Spacing::uniform;
  double stretch_ = 0.0;
  std::size_t intervals_inside_ = 0;
  std::size_t intervals_outside_ = 0;
};

inline constexpr std::size_t min_grid_points = 64;

}  // namespace geab::oracle
