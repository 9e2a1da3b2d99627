// states.hpp — joint four-qubit pure state of (a1, r1, a2, r2), partial
// traces, purities, reduced pair density matrices.
#pragma once

#include <array>
#include <complex>
#include <string>

#include "entdyn/amplitudes.hpp"
#include "entdyn/linalg.hpp"
#include "entdyn/params.hpp"

namespace entdyn {

// Bit position of each subsystem in a basis index; bit value 1 = excited /
// one-exciton. Canonical order (a1, r1, a2, r2), a1 most significant.
enum class Subsystem : unsigned {
  Atom1 = 3,
  Reservoir1 = 2,
  Atom2 = 1,
  Reservoir2 = 0,
};

// A nonempty proper subset of the four subsystems.
class Partition {
 public:
  Partition(std::initializer_list<Subsystem> subsystems);
  static Partition from_mask(unsigned mask);

  unsigned mask() const { return mask_; }
  int size() const;
  bool contains(Subsystem s) const { return (mask_ >> static_cast<unsigned>(s)) & 1u; }
  Partition complement() const;
  // Canonical label, e.g. "a1r2".
  std::string label() const;

 private:
  explicit Partition(unsigned mask);
  unsigned mask_;
};

struct JointState {
  double t = 0.0;
  // Index bits: a1 -> 8, r1 -> 4, a2 -> 2, r2 -> 1.
  std::array<std::complex<double>, 16> amp{};

  double norm() const;
};

struct DensityMatrix {
  ComplexMatrix mat;

  int dim() const { return mat.dim(); }
  double trace_defect() const;        // |Tr rho - 1|
  double hermiticity_defect() const;
  double min_eigenvalue() const;
  // Hermitian within tol, unit trace within tol, eigenvalues >= -1e-10.
  void validate(double tol = 1e-12) const;
};

// alpha|0000> + beta (c1|10> + c2|01>) (x) (c1|10> + c2|01>); normalized.
JointState build_joint_state(const PhysicalParams& params, double t);

// Reduced state over the kept subsystems, basis ordered canonically.
DensityMatrix partial_trace(const JointState& state, const Partition& keep);

// Tr(rho^2).
double purity(const DensityMatrix& rho);

enum class ReducedPair {
  Atoms,               // (a1, a2)
  Reservoirs,          // (r1, r2)
  AtomOwnReservoir,    // (a1, r1)
  AtomCrossReservoir,  // (a1, r2)
};

DensityMatrix reduced_pair(const PhysicalParams& params, double t, ReducedPair pair);

Partition pair_partition(ReducedPair pair);

}  // namespace entdyn
