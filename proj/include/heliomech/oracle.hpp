#ifndef HELIOMECH_ORACLE_HPP
#define HELIOMECH_ORACLE_HPP

#include <Eigen/Core>
#include <Eigen/Eigenvalues>
#include <array>
#include <complex>
#include <vector>

#include "heliomech/hamiltonian.hpp"

// Brute-force validation on a truncated multimode Fock basis: explicit
// Hamiltonian matrices, norm-preserving evolution, and first/second-order
// golden-rule structure checks.  Runs in dimensionless desk-scale units
// (hbar = 1, frequencies O(1-100)); the rates module owns SI numbers.

namespace heliomech {

struct FockBasis {
  int n_optical = 0;
  int n_acoustic = 0;
  std::vector<int> limits;  // per-mode max occupation, optical modes first

  // Throws std::length_error if the dimension exceeds max_dimension.
  FockBasis(std::vector<int> optical_limits, std::vector<int> acoustic_limits,
            long max_dimension = 200000);

  long dimension() const;
  // Lexicographic (mixed-radix, first mode most significant) enumeration.
  std::vector<int> occupation_of(long index) const;
  long index_of(const std::vector<int>& occupation) const;
};

// Real symmetric matrix in rad/s (hbar = 1); free terms on the diagonal,
// interaction terms off-diagonal.  Ladder factors a|n> = sqrt(n)|n-1>;
// transitions leaving the truncation are dropped.
Eigen::MatrixXd build_matrix(const std::vector<HamiltonianTerm>& terms,
                             const FockBasis& basis);

double hermiticity_residual(const Eigen::MatrixXd& h);

// Unitary-by-construction propagation through the eigendecomposition of H.
class Evolver {
 public:
  explicit Evolver(const Eigen::MatrixXd& h);
  Eigen::VectorXcd at(const Eigen::VectorXcd& psi0, double t) const;
  double matrix_norm() const { return norm_; }

 private:
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es_;
  double norm_;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXcd> states;
  double max_norm_drift = 0.0;
};

// Samples psi(k dt) for k = 0 .. floor(T/dt).  Throws std::runtime_error if
// the norm drift exceeds 1e-9 (cannot happen with the unitary propagator
// short of numerical breakdown).
Trajectory evolve(const Eigen::MatrixXd& h, const Eigen::VectorXcd& psi0,
                  double total_time, double dt);

// Desk-scale configuration for the golden-rule checks.
struct DeskConfig {
  double omega1 = 100.0;
  double omega2 = 103.0;
  double f1 = 3.0;
  double f2 = 5.0;
  double g = 0.01;
  int n1 = 1, n2 = 0, mu1 = 1, mu2 = 1;
  int extra_levels = 2;  // headroom above reachable occupations
};

struct FirstOrderCheck {
  double detuning = 0.0;         // E_f - E_i = omega2 - omega1 - f1
  double matrix_element = 0.0;   // g sqrt(mu1 n1 (n2+1))
  double window_end = 0.0;       // 0.1 / |matrix_element|
  double max_rel_deviation = 0.0;
  double probability_numeric = 0.0;    // at window_end
  double probability_perturbative = 0.0;
  long basis_dimension = 0;
};

// Two optical modes, one acoustic mode, all coupling elements equal to g.
FirstOrderCheck first_order_check(const DeskConfig& cfg, double detuning);

struct SecondOrderScanPoint {
  double delta = 0.0;          // omega2 - omega1 - f1 - f2
  double extracted_geff = 0.0; // from the least-squares slow-amplitude fit
  double predicted_geff = 0.0; // g^2 |bracket(delta)| (unit occupations)
  double rel_deviation = 0.0;
};

struct SecondOrderCheck {
  std::vector<SecondOrderScanPoint> scan;
  double interference_full_prob = 0.0;     // max transfer prob, all pathways
  double interference_control_prob = 0.0;  // single-pathway control
  double interference_ratio = 0.0;
  std::array<double, 4> pathway_geff{};    // per-pathway controls
  std::array<double, 4> pathway_weights{}; // 1/|E_j - E_i|
  bool pathway_ordering_matches = false;
  long basis_dimension = 0;
};

// Full two-mode/two-phonon configuration.  deltas are the scan
// offsets of omega2 above the two-step resonance omega1 + f1 + f2.
SecondOrderCheck second_order_check(const DeskConfig& cfg,
                                    const std::vector<double>& deltas);

}  // namespace heliomech

#endif
