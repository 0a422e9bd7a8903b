#include "heliomech/modes.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "heliomech/constants.hpp"
#include "heliomech/quadrature.hpp"

namespace heliomech {

bool ModeFunction::same_domain(const ModeFunction& other, double rel_tol) const {
  return std::abs(length - other.length) <=
         rel_tol * std::max(std::abs(length), std::abs(other.length));
}

ModeFunction box_mode(ModeKind kind, double length, double area, int index,
                      double speed) {
  if (length <= 0.0 || area <= 0.0 || speed <= 0.0)
    throw std::domain_error("box_mode: length, area, speed must be positive");
  if (index < 1) throw std::domain_error("box_mode: index must be >= 1");
  ModeFunction m;
  m.kind = kind;
  m.geometry = ModeGeometry::box;
  m.length = length;
  m.area = area;
  m.volume = area * length;
  m.index = index;
  m.frequency = index * constants::pi * speed / length;
  const double amp = std::sqrt(2.0 / (area * length));
  const double k = index * constants::pi / length;
  m.profile = [amp, k](double z) { return amp * std::sin(k * z); };
  return m;
}

ModeFunction uniform_mode(ModeKind kind, double volume, double frequency,
                          double length) {
  if (volume <= 0.0 || length <= 0.0)
    throw std::domain_error("uniform_mode: volume and length must be positive");
  ModeFunction m;
  m.kind = kind;
  m.geometry = ModeGeometry::uniform;
  m.length = length;
  m.area = volume / length;
  m.volume = volume;
  m.frequency = frequency;
  const double amp = 1.0 / std::sqrt(volume);
  m.profile = [amp](double) { return amp; };
  return m;
}

ModeFunction sampled_mode(ModeKind kind, double length, double area,
                          double frequency, std::vector<double> samples) {
  if (length <= 0.0 || area <= 0.0)
    throw std::domain_error("sampled_mode: length and area must be positive");
  if (samples.size() < 2)
    throw std::domain_error("sampled_mode: need at least two samples");
  ModeFunction m;
  m.kind = kind;
  m.geometry = ModeGeometry::sampled;
  m.length = length;
  m.area = area;
  m.volume = area * length;
  m.frequency = frequency;
  const double dz = length / static_cast<double>(samples.size() - 1);
  m.profile = [s = std::move(samples), dz, length](double z) {
    if (z <= 0.0) return s.front();
    if (z >= length) return s.back();
    const double t = z / dz;
    const auto i = static_cast<std::size_t>(t);
    const double frac = t - static_cast<double>(i);
    return s[i] * (1.0 - frac) + s[i + 1] * frac;
  };
  return m;
}

double overlap(const ModeFunction& a, const ModeFunction& b, double abs_tol) {
  if (!a.same_domain(b))
    throw std::invalid_argument("overlap: modes have mismatched domains");
  // Fast path: two constant profiles need no quadrature.
  if (a.geometry == ModeGeometry::uniform && b.geometry == ModeGeometry::uniform)
    return a.area * a.length * a.profile(0.0) * b.profile(0.0);
  // abs_tol applies to the dimensionless (area-multiplied) overlap.
  return a.area * integrate([&](double z) { return a.profile(z) * b.profile(z); },
                            0.0, a.length, abs_tol / a.area);
}

double normalization_integral(const ModeFunction& m, double abs_tol) {
  return overlap(m, m, abs_tol);
}

Eigen::MatrixXd gram_matrix(const std::vector<ModeFunction>& modes,
                            double abs_tol) {
  const auto n = static_cast<Eigen::Index>(modes.size());
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) {
      g(i, j) = overlap(modes[static_cast<std::size_t>(i)],
                        modes[static_cast<std::size_t>(j)], abs_tol);
      g(j, i) = g(i, j);
    }
  return g;
}

std::string to_string(ModeKind k) {
  return k == ModeKind::optical ? "optical" : "acoustic";
}

std::string to_string(ModeGeometry g) {
  switch (g) {
    case ModeGeometry::uniform: return "uniform";
    case ModeGeometry::box: return "box";
    case ModeGeometry::sampled: return "sampled";
  }
  return "?";
}

}  // namespace heliomech
