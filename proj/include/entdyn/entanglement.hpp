// entanglement.hpp — concurrence measures: closed forms for the three
// analytic partitions, general Wootters concurrence for two-qubit mixed
// states, I-concurrence for bipartitions, multipartite concurrence C_N.
#pragma once

#include "entdyn/params.hpp"
#include "entdyn/states.hpp"

namespace entdyn {

// C_{a1a2}(t) = max{0, 2 beta |c1|^2 (alpha - beta |c2|^2)}.
double concurrence_atoms_closed(const PhysicalParams& params, double t);

// C_{r1r2}(t) = max{0, 2 beta |c2|^2 (alpha - beta |c1|^2)}.
double concurrence_reservoirs_closed(const PhysicalParams& params, double t);

// C_{a1r1}(t) = 2 beta^2 |c1| |c2|; maximum beta^2 at |c1| = 1/sqrt(2).
double concurrence_atom_reservoir_closed(const PhysicalParams& params, double t);

// Wootters concurrence of an arbitrary two-qubit density matrix:
// C = max{0, sqrt(mu1) - sqrt(mu2) - sqrt(mu3) - sqrt(mu4)} with mu_i the
// descending eigenvalues of rho (sy x sy) rho* (sy x sy). Computed as the
// singular values of the tau matrix over the subnormalized eigenvectors of
// rho, which is the same set of square roots without squaring error.
// Rejects non-Hermitian or trace-deficient input.
double wootters_concurrence(const DensityMatrix& rho);

// Wootters concurrence of the (a1, r2) reduction; no closed form is used.
double concurrence_cross_pair(const PhysicalParams& params, double t);

// I-concurrence sqrt(2 (1 - Tr rho_A^2)) of a pure state across a bipartition.
double i_concurrence(const JointState& state, const Partition& partition);

// C_N = 2^{1-N/2} sqrt((2^N - 2) - sum_S Tr rho_S^2) over all nonempty proper
// subsets S of the N = 4 qubits.
double multipartite_concurrence(const JointState& state);

}  // namespace entdyn
