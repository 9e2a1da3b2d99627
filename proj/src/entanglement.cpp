#include "entdyn/entanglement.hpp"

#include <cmath>
#include <stdexcept>

#include "entdyn/amplitudes.hpp"
#include "entdyn/linalg.hpp"

namespace entdyn {

namespace {

// sigma_y (x) sigma_y in the basis |q1 q2>, q1 the most significant bit.
ComplexMatrix spin_flip() {
  ComplexMatrix y(4);
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  return y;
}

}  // namespace

double concurrence_atoms_closed(const PhysicalParams& params, double t) {
  const double beta = params.beta();
  const double c1sq = std::norm(excited_amplitude(params, t));
  const double c2sq = std::max(0.0, 1.0 - c1sq);
  return std::max(0.0, 2.0 * beta * c1sq * (params.alpha - beta * c2sq));
}

double concurrence_reservoirs_closed(const PhysicalParams& params, double t) {
  const double beta = params.beta();
  const double c1sq = std::norm(excited_amplitude(params, t));
  const double c2sq = std::max(0.0, 1.0 - c1sq);
  return std::max(0.0, 2.0 * beta * c2sq * (params.alpha - beta * c1sq));
}

double concurrence_atom_reservoir_closed(const PhysicalParams& params, double t) {
  const double beta = params.beta();
  const double c1 = std::abs(excited_amplitude(params, t));
  const double c2 = std::sqrt(std::max(0.0, 1.0 - c1 * c1));
  return 2.0 * beta * beta * c1 * c2;
}

double wootters_concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw std::invalid_argument("wootters_concurrence: expected a 4x4 matrix");
  if (rho.hermiticity_defect() > 1e-12) {
    throw std::invalid_argument("wootters_concurrence: matrix is not Hermitian");
  }
  if (rho.trace_defect() > 1e-12) {
    throw std::invalid_argument("wootters_concurrence: trace differs from 1");
  }

  const HermitianEigen eig = hermitian_eigen(rho.mat);
  ComplexMatrix sub(4);  // columns sqrt(lambda_k) u_k
  for (int k = 0; k < 4; ++k) {
    double lam = eig.values[k];
    if (lam < -1e-10) {
      throw std::invalid_argument("wootters_concurrence: matrix is not positive semidefinite");
    }
    const double root = std::sqrt(std::max(0.0, lam));
    for (int i = 0; i < 4; ++i) sub(i, k) = root * eig.vectors(i, k);
  }

  // tau_kl = v_k^T Y v_l; its singular values are sqrt(eig(rho rho~)).
  const ComplexMatrix y = spin_flip();
  ComplexMatrix tau(4);
  for (int k = 0; k < 4; ++k) {
    for (int l = 0; l < 4; ++l) {
      Complex acc{};
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) acc += sub(i, k) * y(i, j) * sub(j, l);
      tau(k, l) = acc;
    }
  }

  const std::vector<double> s = singular_values(tau);
  return std::max(0.0, s[0] - s[1] - s[2] - s[3]);
}

double concurrence_cross_pair(const PhysicalParams& params, double t) {
  return wootters_concurrence(reduced_pair(params, t, ReducedPair::AtomCrossReservoir));
}

double i_concurrence(const JointState& state, const Partition& partition) {
  if (std::abs(state.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("i_concurrence: state is not normalized");
  }
  const double p = purity(partial_trace(state, partition));
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - p)));
}

double multipartite_concurrence(const JointState& state) {
  if (std::abs(state.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("multipartite_concurrence: state is not normalized");
  }
  double purity_sum = 0.0;
  for (unsigned mask = 1; mask <= 14; ++mask) {
    purity_sum += purity(partial_trace(state, Partition::from_mask(mask)));
  }
  // N = 4: C_N = 2^{1-N/2} sqrt((2^N - 2) - sum).
  return 0.5 * std::sqrt(std::max(0.0, 14.0 - purity_sum));
}

}  // namespace entdyn
