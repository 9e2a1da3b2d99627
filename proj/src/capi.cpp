#include "entdyn/entdyn.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>

#include "entdyn/amplitudes.hpp"
#include "entdyn/criteria.hpp"
#include "entdyn/entanglement.hpp"
#include "entdyn/linalg.hpp"
#include "entdyn/params.hpp"
#include "entdyn/states.hpp"
#include "entdyn/verify.hpp"

struct entdyn_system {
  entdyn::PhysicalParams params;
};

namespace {

thread_local std::string g_last_error;

entdyn_status fail(entdyn_status code, const char* message) {
  g_last_error = message;
  return code;
}

// Maps C++ exceptions onto status codes: domain_error -> DOMAIN, everything
// else -> ARGUMENT.
template <typename Fn>
entdyn_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::domain_error& e) {
    return fail(ENTDYN_ERR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(ENTDYN_ERR_ARGUMENT, e.what());
  }
}

entdyn_complex to_c(std::complex<double> z) { return {z.real(), z.imag()}; }

}  // namespace

extern "C" {

const char* entdyn_version(void) { return "0.1.0"; }

const char* entdyn_status_name(entdyn_status status) {
  switch (status) {
    case ENTDYN_OK: return "ok";
    case ENTDYN_ERR_ARGUMENT: return "invalid argument";
    case ENTDYN_ERR_DOMAIN: return "domain error";
  }
  return "unknown";
}

const char* entdyn_last_error(void) { return g_last_error.c_str(); }

entdyn_status entdyn_system_create(double lambda_over_w, double alpha, entdyn_system** out) {
  return entdyn_system_create_dimensional(0.0, 1.0, lambda_over_w, alpha, out);
}

entdyn_status entdyn_system_create_dimensional(double omega0, double coupling_w, double lambda,
                                               double alpha, entdyn_system** out) {
  if (out == nullptr) return fail(ENTDYN_ERR_ARGUMENT, "output pointer is null");
  *out = nullptr;
  return guarded([&]() {
    entdyn::PhysicalParams p;
    p.omega0 = omega0;
    p.coupling = coupling_w;
    p.width = lambda;
    p.alpha = alpha;
    p.validate();
    *out = new entdyn_system{p};
    return ENTDYN_OK;
  });
}

void entdyn_system_destroy(entdyn_system* sys) { delete sys; }

entdyn_status entdyn_system_regime(const entdyn_system* sys, entdyn_regime* out) {
  if (sys == nullptr || out == nullptr) return fail(ENTDYN_ERR_ARGUMENT, "null pointer");
  return guarded([&]() {
    switch (entdyn::coupling_regime(sys->params)) {
      case entdyn::Regime::Strong: *out = ENTDYN_REGIME_STRONG; break;
      case entdyn::Regime::Weak: *out = ENTDYN_REGIME_WEAK; break;
      case entdyn::Regime::Critical: *out = ENTDYN_REGIME_CRITICAL; break;
    }
    return ENTDYN_OK;
  });
}

entdyn_status entdyn_system_beta(const entdyn_system* sys, double* out) {
  if (sys == nullptr || out == nullptr) return fail(ENTDYN_ERR_ARGUMENT, "null pointer");
  *out = sys->params.beta();
  return ENTDYN_OK;
}

entdyn_status entdyn_system_mode_splitting(const entdyn_system* sys, double* out) {
  if (sys == nullptr || out == nullptr) return fail(ENTDYN_ERR_ARGUMENT, "null pointer");
  return guarded([&]() {
    *out = sys->params.mode_splitting();
    return ENTDYN_OK;
  });
}

entdyn_status entdyn_amplitudes_at(const entdyn_system* sys, double t, entdyn_amplitudes* out) {
  if (sys == nullptr || out == nullptr) return fail(ENTDYN_ERR_ARGUMENT, "null pointer");
  return guarded([&]() {
    const entdyn::AmplitudeState s = entdyn::amplitudes_at(sys->params, t);
    out->t = s.t;
    out->c1 = to_c(s.c1);
    out->c2 = s.c2;
    out->b = to_c(s.b);
    return ENTDYN_OK;
  });
}

entdyn_status entdyn_populations_at(const entdyn_system* sys, double t, entdyn_populations* out) {
  if (sys == nullptr || out == nullptr) return fail(ENTDYN_ERR_ARGUMENT, "null pointer");
  return guarded([&]() {
    const entdyn::QuasimodePopulations q = entdyn::quasimode_populations(sys->params, t);
    out->t = q.t;
    out->pa = q.pa;
    out->pm = q.pm;
    out->pr = q.pr;
    return ENTDYN_OK;
  });
}

entdyn_status entdyn_concurrences_at(const entdyn_system* sys, double t,
                                     entdyn_concurrences* out) {
  if (sys == nullptr || out == nullptr) return fail(ENTDYN_ERR_ARGUMENT, "null pointer");
  return guarded([&]() {
    out->t = t;
    out->atoms = entdyn::concurrence_atoms_closed(sys->params, t);
    out->reservoirs = entdyn::concurrence_reservoirs_closed(sys->params, t);
    out->atom_reservoir = entdyn::concurrence_atom_reservoir_closed(sys->params, t);
    out->cross = entdyn::concurrence_cross_pair(sys->params, t);
    return ENTDYN_OK;
  });
}

entdyn_status entdyn_partitions_at(const entdyn_system* sys, double t,
                                   entdyn_partition_entanglement* out) {
  if (sys == nullptr || out == nullptr) return fail(ENTDYN_ERR_ARGUMENT, "null pointer");
  return guarded([&]() {
    using entdyn::Partition;
    using entdyn::Subsystem;
    const entdyn::JointState state = entdyn::build_joint_state(sys->params, t);
    out->t = t;
    out->pair_within = entdyn::i_concurrence(state, Partition{Subsystem::Atom1, Subsystem::Reservoir1});
    out->atom_vs_rest = entdyn::i_concurrence(state, Partition{Subsystem::Atom1});
    out->cross_pairs = entdyn::i_concurrence(state, Partition{Subsystem::Atom1, Subsystem::Reservoir2});
    out->multipartite = entdyn::multipartite_concurrence(state);
    out->atoms_vs_reservoirs = entdyn::i_concurrence(state, Partition{Subsystem::Atom1, Subsystem::Atom2});
    out->reservoir_vs_rest = entdyn::i_concurrence(state, Partition{Subsystem::Reservoir1});
    return ENTDYN_OK;
  });
}

entdyn_status entdyn_criteria_report_compute(const entdyn_system* sys,
                                             entdyn_criteria_report* out) {
  if (sys == nullptr || out == nullptr) return fail(ENTDYN_ERR_ARGUMENT, "null pointer");
  return guarded([&]() {
    const entdyn::CriteriaReport r = entdyn::criteria_report(sys->params);
    out->lambda_over_w = r.lambda_over_w;
    out->alpha = r.alpha;
    out->beta = r.beta;
    out->d_over_w = r.d_over_w;
    out->revival_threshold_n1 = r.revival_threshold_n1;
    out->esd_threshold_n1 = r.esd_threshold_n1;
    out->revival_occurs = r.revival_occurs ? 1 : 0;
    out->esd_occurs = r.esd_occurs ? 1 : 0;
    out->n_a_infinite = r.n_a.infinite ? 1 : 0;
    out->n_a = r.n_a.infinite ? -1 : r.n_a.value;
    out->n_r = r.n_r;
    out->t_r_in_inv_w = r.t_r_in_inv_w;
    switch (r.ordering) {
      case entdyn::EventOrdering::Before: out->ordering = ENTDYN_ORDERING_BEFORE; break;
      case entdyn::EventOrdering::Simultaneous: out->ordering = ENTDYN_ORDERING_SIMULTANEOUS; break;
      case entdyn::EventOrdering::After: out->ordering = ENTDYN_ORDERING_AFTER; break;
      case entdyn::EventOrdering::NotApplicable:
        out->ordering = ENTDYN_ORDERING_NOT_APPLICABLE;
        break;
    }
    out->warnings = 0;
    for (const std::string& w : r.warnings) {
      if (w.find("n_a") != std::string::npos) out->warnings |= ENTDYN_WARN_NA_NEAR_INTEGER;
      if (w.find("n_r") != std::string::npos) out->warnings |= ENTDYN_WARN_NR_NEAR_INTEGER;
    }
    return ENTDYN_OK;
  });
}

entdyn_status entdyn_integrate_pseudomode(const entdyn_system* sys, double t_end, double step,
                                          entdyn_amplitudes* buffer, size_t capacity,
                                          size_t* count) {
  if (sys == nullptr || buffer == nullptr || count == nullptr) {
    return fail(ENTDYN_ERR_ARGUMENT, "null pointer");
  }
  return guarded([&]() {
    const auto series = entdyn::integrate_pseudomode(sys->params, t_end, step);
    *count = series.size();
    if (series.size() > capacity) {
      return fail(ENTDYN_ERR_ARGUMENT, "buffer too small for the sample count");
    }
    for (size_t k = 0; k < series.size(); ++k) {
      buffer[k].t = series[k].t;
      buffer[k].c1 = to_c(series[k].c1);
      buffer[k].c2 = series[k].c2;
      buffer[k].b = to_c(series[k].b);
    }
    return ENTDYN_OK;
  });
}

entdyn_status entdyn_integrate_memory_kernel(const entdyn_system* sys, double t_end, double step,
                                             entdyn_complex* buffer, size_t capacity,
                                             size_t* count) {
  if (sys == nullptr || buffer == nullptr || count == nullptr) {
    return fail(ENTDYN_ERR_ARGUMENT, "null pointer");
  }
  return guarded([&]() {
    const auto series = entdyn::integrate_memory_kernel(sys->params, t_end, step);
    *count = series.size();
    if (series.size() > capacity) {
      return fail(ENTDYN_ERR_ARGUMENT, "buffer too small for the sample count");
    }
    for (size_t k = 0; k < series.size(); ++k) buffer[k] = to_c(series[k]);
    return ENTDYN_OK;
  });
}

entdyn_status entdyn_wootters_concurrence(const entdyn_complex rho[16], double* out) {
  if (rho == nullptr || out == nullptr) return fail(ENTDYN_ERR_ARGUMENT, "null pointer");
  return guarded([&]() {
    entdyn::DensityMatrix dm{entdyn::ComplexMatrix(4)};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const entdyn_complex& z = rho[i * 4 + j];
        dm.mat(i, j) = {z.re, z.im};
      }
    *out = entdyn::wootters_concurrence(dm);
    return ENTDYN_OK;
  });
}

entdyn_status entdyn_verify_run(const double* lambda_over_w, size_t count, unsigned flags,
                                entdyn_verify_callback callback, void* user, int* failures) {
  if (failures == nullptr) return fail(ENTDYN_ERR_ARGUMENT, "null pointer");
  return guarded([&]() {
    entdyn::verify::VerifyOptions options;
    if (lambda_over_w != nullptr && count > 0) {
      options.lambda_over_w.assign(lambda_over_w, lambda_over_w + count);
    }
    if (flags & ENTDYN_VERIFY_FAULT_THRESHOLD_SIGN) {
      options.fault = entdyn::verify::FaultInjection::ThresholdSign;
    }
    const auto results = entdyn::verify::run_verification(options);
    for (const auto& r : results) {
      if (callback != nullptr) {
        int code = 0;
        if (r.status == entdyn::verify::SuiteStatus::Fail) code = 1;
        if (r.status == entdyn::verify::SuiteStatus::Skip) code = 2;
        callback(r.name.c_str(), code, r.detail.c_str(), user);
      }
    }
    *failures = entdyn::verify::count_failures(results);
    return ENTDYN_OK;
  });
}

}  // extern "C"
