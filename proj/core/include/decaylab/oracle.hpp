#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "decaylab/profiles.hpp"
#include "decaylab/survival.hpp"
#include "decaylab/tolerances.hpp"

namespace decaylab {

/// Arrowhead discretisation of H: row/column 0 is (alpha, v_1..v_N), the
/// diagonal continues with the Gauss-Legendre nodes E_i, v_i = sqrt(eta(E_i) w_i).
struct DiscretizedModel {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> couplings;
  double alpha = 0.0;
  double hbar = 1.0;
  std::vector<std::string> diagnostics;  // e.g. cutoff warnings

  int dim() const noexcept { return static_cast<int>(nodes.size()) + 1; }
};

/// n Gauss-Legendre nodes on [alpha - e_max, alpha + e_max] (full line) or
/// [0, e_max] (half line). Warns when the continuum weight outside the window
/// exceeds tol.completeness.
DiscretizedModel discretize(const Model& model, int n, double e_max, const Tolerances& tol = {});

Eigen::MatrixXd hamiltonian(const DiscretizedModel& dm);

struct EigenPairs {
  Eigen::VectorXd values;       // ascending
  Eigen::MatrixXd vectors;      // columns orthonormal
  std::vector<double> overlap;  // |<a|v_k>|^2
  double residual = 0.0;        // ||H V - V Lambda||_F, bounds the reconstruction error
};

EigenPairs diagonalize(const DiscretizedModel& dm);

/// A(t) = sum_k |<a|v_k>|^2 exp(-i lambda_k t / hbar).
AmplitudeSeries survival_discrete(const DiscretizedModel& dm, const EigenPairs& eig, const std::vector<double>& times);

/// 2 pi hbar / (median node spacing): the discrete model is quasi-periodic beyond this.
double recurrence_time(const DiscretizedModel& dm);

}  // namespace decaylab
