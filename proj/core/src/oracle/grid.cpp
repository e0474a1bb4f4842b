#include "geab/oracle/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "geab/errors.hpp"

namespace geab::oracle {

namespace {

void check_extent(double zeta_max, double interface_zeta) {
  if (!std::isfinite(interface_zeta) || interface_zeta <= 0.0)
    throw InvalidArgument("RadialGrid: interface must be finite and positive");
  if (!std::isfinite(zeta_max) || zeta_max <= interface_zeta)
    throw InvalidArgument("RadialGrid: zeta_max must exceed the interface");
}

std::vector<double> graded_nodes(double zeta_max, double zi, double beta, std::size_t n_in, std::size_t n_out) {
  std::vector<double> nodes(n_in + n_out + 1);
  const double sb = std::sinh(beta);
  for (std::size_t i = 0; i < n_in; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(n_in);
    nodes[i] = zi * (1.0 - std::sinh(beta * (1.0 - s)) / sb);
  }
  nodes[0] = 0.0;
  nodes[n_in] = zi;
  for (std::size_t j = 1; j <= n_out; ++j) {
    const double s = static_cast<double>(j) / static_cast<double>(n_out);
    nodes[n_in + j] = zi + (zeta_max - zi) * std::sinh(beta * s) / sb;
  }
  nodes.back() = zeta_max;
  return nodes;
}

}  // namespace

RadialGrid::RadialGrid(std::vector<double> nodes, std::size_t interface_index, Spacing spacing, double stretch,
                       std::size_t intervals_inside, std::size_t intervals_outside)
    : nodes_(std::move(nodes)),
      interface_index_(interface_index),
      spacing_(spacing),
      stretch_(stretch),
      intervals_inside_(intervals_inside),
      intervals_outside_(intervals_outside) {}

RadialGrid RadialGrid::uniform(double zeta_max, double interface_zeta, std::size_t min_points) {
  check_extent(zeta_max, interface_zeta);
  if (min_points < min_grid_points)
    throw InvalidArgument("RadialGrid: at least " + std::to_string(min_grid_points) + " points required");
  const double h_max = zeta_max / static_cast<double>(min_points - 1);
  std::size_t m = static_cast<std::size_t>(std::ceil(interface_zeta / h_max));
  m += m % 2;
  const double h = interface_zeta / static_cast<double>(m);
  auto n = static_cast<std::size_t>(std::ceil(zeta_max / h - 1e-9));
  n += n % 2;
  std::vector<double> nodes(n + 1);
  for (std::size_t i = 0; i <= n; ++i) nodes[i] = static_cast<double>(i) * h;
  nodes[m] = interface_zeta;
  return RadialGrid(std::move(nodes), m, Spacing::uniform, 0.0, m, n - m);
}

RadialGrid RadialGrid::geometric(double zeta_max, double interface_zeta, std::size_t num_points, double stretch) {
  check_extent(zeta_max, interface_zeta);
  if (num_points < min_grid_points)
    throw InvalidArgument("RadialGrid: at least " + std::to_string(min_grid_points) + " points required");
  if (!std::isfinite(stretch) || stretch <= 0.0) throw InvalidArgument("RadialGrid: stretch must be positive");
  const std::size_t total = num_points - 1;
  auto n_in = static_cast<std::size_t>(std::lround(static_cast<double>(total) * interface_zeta / zeta_max));
  n_in = std::clamp<std::size_t>(n_in, 2, total - 2);
  const std::size_t n_out = total - n_in;
  return RadialGrid(graded_nodes(zeta_max, interface_zeta, stretch, n_in, n_out), n_in, Spacing::geometric, stretch,
                    n_in, n_out);
}

RadialGrid RadialGrid::from_nodes(std::vector<double> nodes, double interface_zeta) {
  if (nodes.size() < min_grid_points)
    throw InvalidArgument("RadialGrid: at least " + std::to_string(min_grid_points) + " points required");
  if (!(nodes.front() >= 0.0)) throw InvalidArgument("RadialGrid: nodes must be non-negative");
  bool uniform = true;
  const double h0 = nodes[1] - nodes[0];
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (!(nodes[i] > nodes[i - 1]) || !std::isfinite(nodes[i]))
      throw InvalidArgument("RadialGrid: nodes must be finite and strictly increasing");
    uniform = uniform && std::abs((nodes[i] - nodes[i - 1]) - h0) <= 1e-12 * nodes[i];
  }
  const auto it = std::find(nodes.begin(), nodes.end(), interface_zeta);
  if (it == nodes.end()) throw InvalidArgument("RadialGrid: no node at the interface");
  const auto index = static_cast<std::size_t>(it - nodes.begin());
  const std::size_t n = nodes.size() - 1;
  return RadialGrid(std::move(nodes), index, uniform ? Spacing::uniform : Spacing::geometric, 0.0, index, n - index);
}

RadialGrid RadialGrid::refined() const {
  if (stretch_ > 0.0) {
    const std::size_t n_in = 2 * intervals_inside_;
    const std::size_t n_out = 2 * intervals_outside_;
    return RadialGrid(graded_nodes(zeta_max(), interface_zeta(), stretch_, n_in, n_out), n_in, spacing_, stretch_,
                      n_in, n_out);
  }
  std::vector<double> nodes(2 * nodes_.size() - 1);
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
    nodes[2 * i] = nodes_[i];
    nodes[2 * i + 1] = 0.5 * (nodes_[i] + nodes_[i + 1]);
  }
  nodes.back() = nodes_.back();
  return RadialGrid(std::move(nodes), 2 * interface_index_, spacing_, 0.0, 2 * intervals_inside_,
                    2 * intervals_outside_);
}

std::size_t RadialGrid::index_of(double zeta) const {
  const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), zeta);
  const double tol = 1e-12 * std::max(1.0, std::abs(zeta));
  if (it != nodes_.end() && std::abs(*it - zeta) <= tol) return static_cast<std::size_t>(it - nodes_.begin());
  if (it != nodes_.begin() && std::abs(*(it - 1) - zeta) <= tol)
    return static_cast<std::size_t>(it - nodes_.begin()) - 1;
  throw InvalidArgument("RadialGrid: zeta = " + std::to_string(zeta) + " is not a grid node");
}

}  // namespace geab::oracle
