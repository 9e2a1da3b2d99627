#include "entdyn/states.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace entdyn {

namespace {

constexpr unsigned kFullMask = 0xFu;

// Subsystems in canonical order, most significant first.
constexpr Subsystem kCanonicalOrder[4] = {Subsystem::Atom1, Subsystem::Reservoir1,
                                          Subsystem::Atom2, Subsystem::Reservoir2};

const char* subsystem_name(Subsystem s) {
  switch (s) {
    case Subsystem::Atom1: return "a1";
    case Subsystem::Reservoir1: return "r1";
    case Subsystem::Atom2: return "a2";
    case Subsystem::Reservoir2: return "r2";
  }
  return "?";
}

}  // namespace

Partition::Partition(unsigned mask) : mask_(mask) {
  if (mask_ == 0u || mask_ >= kFullMask) {
    throw std::invalid_argument("Partition must be a nonempty proper subset of the four subsystems");
  }
}

Partition::Partition(std::initializer_list<Subsystem> subsystems) : mask_(0u) {
  for (Subsystem s : subsystems) mask_ |= 1u << static_cast<unsigned>(s);
  if (mask_ == 0u || mask_ >= kFullMask) {
    throw std::invalid_argument("Partition must be a nonempty proper subset of the four subsystems");
  }
}

Partition Partition::from_mask(unsigned mask) { return Partition(mask); }

int Partition::size() const { return std::popcount(mask_); }

Partition Partition::complement() const { return Partition(kFullMask & ~mask_); }

std::string Partition::label() const {
  std::string s;
  for (Subsystem sub : kCanonicalOrder) {
    if (contains(sub)) s += subsystem_name(sub);
  }
  return s;
}

double JointState::norm() const {
  double n = 0.0;
  for (const auto& a : amp) n += std::norm(a);
  return std::sqrt(n);
}

double DensityMatrix::trace_defect() const { return std::abs(mat.trace() - Complex{1.0, 0.0}); }

double DensityMatrix::hermiticity_defect() const { return mat.hermiticity_defect(); }

double DensityMatrix::min_eigenvalue() const {
  return hermitian_eigen(mat).values.front();
}

void DensityMatrix::validate(double tol) const {
  const int n = dim();
  if (n != 2 && n != 4 && n != 8) {
    throw std::invalid_argument("DensityMatrix: dimension must be 2, 4 or 8");
  }
  if (hermiticity_defect() > tol) {
    throw std::invalid_argument("DensityMatrix: not Hermitian within tolerance");
  }
  if (trace_defect() > tol) {
    throw std::invalid_argument("DensityMatrix: trace differs from 1");
  }
  if (min_eigenvalue() < -1e-10) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond clamp threshold");
  }
}

JointState build_joint_state(const PhysicalParams& params, double t) {
  const AmplitudeState a = amplitudes_at(params, t);
  const double alpha = params.alpha;
  const double beta = params.beta();
  const Complex c1 = a.c1;
  const double c2 = a.c2;

  JointState state;
  state.t = t;
  state.amp[0b0000] = alpha;
  state.amp[0b1010] = beta * c1 * c1;
  state.amp[0b1001] = beta * c1 * c2;
  state.amp[0b0110] = beta * c2 * c1;
  state.amp[0b0101] = beta * c2 * c2;
  return state;
}

DensityMatrix partial_trace(const JointState& state, const Partition& keep) {
  // Kept bit positions in canonical order; the first one becomes the most
  // significant bit of the reduced index.
  int kept[4];
  int n_kept = 0;
  for (Subsystem s : kCanonicalOrder) {
    if (keep.contains(s)) kept[n_kept++] = static_cast<int>(s);
  }
  int traced[4];
  int n_traced = 0;
  for (Subsystem s : kCanonicalOrder) {
    if (!keep.contains(s)) traced[n_traced++] = static_cast<int>(s);
  }

  const int dim_keep = 1 << n_kept;
  const int dim_traced = 1 << n_traced;

  const auto embed = [&](int reduced, int env) {
    unsigned idx = 0;
    for (int b = 0; b < n_kept; ++b) {
      idx |= static_cast<unsigned>((reduced >> (n_kept - 1 - b)) & 1) << kept[b];
    }
    for (int b = 0; b < n_traced; ++b) {
      idx |= static_cast<unsigned>((env >> (n_traced - 1 - b)) & 1) << traced[b];
    }
    return idx;
  };

  DensityMatrix rho{ComplexMatrix(dim_keep)};
  for (int i = 0; i < dim_keep; ++i) {
    for (int j = 0; j < dim_keep; ++j) {
      Complex acc{};
      for (int e = 0; e < dim_traced; ++e) {
        acc += state.amp[embed(i, e)] * std::conj(state.amp[embed(j, e)]);
      }
      rho.mat(i, j) = acc;
    }
  }
  return rho;
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  const int n = rho.dim();
  double p = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p += std::norm(rho.mat(i, j));
  return p;
}

Partition pair_partition(ReducedPair pair) {
  switch (pair) {
    case ReducedPair::Atoms: return Partition{Subsystem::Atom1, Subsystem::Atom2};
    case ReducedPair::Reservoirs: return Partition{Subsystem::Reservoir1, Subsystem::Reservoir2};
    case ReducedPair::AtomOwnReservoir: return Partition{Subsystem::Atom1, Subsystem::Reservoir1};
    case ReducedPair::AtomCrossReservoir:
      return Partition{Subsystem::Atom1, Subsystem::Reservoir2};
  }
  throw std::invalid_argument("reduced_pair: invalid pair label");
}

DensityMatrix reduced_pair(const PhysicalParams& params, double t, ReducedPair pair) {
  return partial_trace(build_joint_state(params, t), pair_partition(pair));
}

}  // namespace entdyn
