#ifndef HELIOMECH_MODES_HPP
#define HELIOMECH_MODES_HPP

#include <Eigen/Core>
#include <functional>
#include <string>
#include <vector>

// Normalized cavity mode functions.  Spatial structure is one dimensional
// (coordinate z along the cavity axis); transverse directions contribute a
// constant area factor.  Profiles carry units m^(-3/2) so that
// area * int |profile|^2 dz = 1.

namespace heliomech {

enum class ModeKind { optical, acoustic };
enum class ModeGeometry { uniform, box, sampled };

struct ModeFunction {
  ModeKind kind = ModeKind::optical;
  ModeGeometry geometry = ModeGeometry::uniform;
  double frequency = 0.0;  // angular, rad/s
  double volume = 0.0;     // m^3
  double length = 0.0;     // axial extent, m
  double area = 0.0;       // transverse area, m^2 (volume = area * length)
  int index = 0;           // mode label (box family: sine index n)
  std::function<double(double)> profile;  // amplitude at z in [0, length]

  bool same_domain(const ModeFunction& other, double rel_tol = 1e-12) const;
};

// Hard-wall 1D standing wave: profile = sqrt(2/(A L)) sin(n pi z / L),
// frequency = n pi speed / L.
ModeFunction box_mode(ModeKind kind, double length, double area, int index,
                      double speed);

// Constant profile 1/sqrt(V) over a box of the given axial length.
ModeFunction uniform_mode(ModeKind kind, double volume, double frequency,
                          double length = 1.0);

// Profile linearly interpolated through samples taken at uniformly spaced z
// (first sample at z=0, last at z=length); not re-normalized.
ModeFunction sampled_mode(ModeKind kind, double length, double area,
                          double frequency, std::vector<double> samples);

// area * int a(z) b(z) dz over the shared domain.
double overlap(const ModeFunction& a, const ModeFunction& b,
               double abs_tol = 1e-9);

double normalization_integral(const ModeFunction& m, double abs_tol = 1e-9);

// Pairwise overlap matrix; identity (within quadrature tolerance) for an
// orthonormal family.  Throws on domain mismatch.
Eigen::MatrixXd gram_matrix(const std::vector<ModeFunction>& modes,
                            double abs_tol = 1e-9);

std::string to_string(ModeKind k);
std::string to_string(ModeGeometry g);

}  // namespace heliomech

#endif
