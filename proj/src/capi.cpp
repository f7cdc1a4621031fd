#include "diracdegen/diracdegen.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "diracdegen/em.hpp"
#include "diracdegen/error.hpp"
#include "diracdegen/potentials.hpp"
#include "diracdegen/residual.hpp"
#include "diracdegen/spinors.hpp"
#include "diracdegen/symexpr.hpp"
#include "diracdegen/tunneling.hpp"

namespace dd = diracdegen;

struct dd_expr {
  dd::ScalarExpr e;
};

struct dd_spinor_field {
  dd::SpinorField f;
};

struct dd_potential {
  dd::FourPotentialField b;
};

namespace {

thread_local std::string g_last_error;

dd_status fail(dd_status s, const char* what) {
  g_last_error = what;
  return s;
}

// Runs `fn`, translating library exceptions into status codes.
template <class Fn>
dd_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return DD_OK;
  } catch (const dd::ParseError& e) {
    return fail(DD_ERR_PARSE, e.what());
  } catch (const dd::DegenerateDenominator& e) {
    return fail(DD_ERR_DEGENERATE_DENOMINATOR, e.what());
  } catch (const dd::EvanescenceError& e) {
    return fail(DD_ERR_EVANESCENCE, e.what());
  } catch (const dd::DomainError& e) {
    return fail(DD_ERR_DOMAIN, e.what());
  } catch (const dd::InvalidArgument& e) {
    return fail(DD_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DD_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DD_ERR_INTERNAL, "unknown error");
  }
}

template <class... Ptrs>
bool any_null(const Ptrs*... ptrs) {
  return ((ptrs == nullptr) || ...);
}

dd::SpacetimePoint to_point(const dd_point& p) { return {p.t, p.x, p.y, p.z}; }
dd::Complex to_complex(dd_complex c) { return {c.re, c.im}; }
dd_complex from_complex(dd::Complex c) { return {c.real(), c.imag()}; }

dd_spinor from_spinor(const dd::Spinor4& s) {
  dd_spinor out;
  for (std::size_t j = 0; j < 4; ++j) out.c[j] = from_complex(s[j]);
  return out;
}

dd_em_sample from_sample(const dd::EMSample& s) {
  dd_em_sample out;
  for (std::size_t i = 0; i < 3; ++i) {
    out.E[i] = s.E[i];
    out.B[i] = s.B[i];
  }
  return out;
}

dd::EMSample to_sample(const dd_em_sample& s) {
  dd::EMSample out;
  for (std::size_t i = 0; i < 3; ++i) {
    out.E[i] = s.E[i];
    out.B[i] = s.B[i];
  }
  return out;
}

dd_maxwell_report from_report(const dd::MaxwellReport& r) {
  return {r.div_E, r.div_B, r.faraday, r.ampere};
}

dd::Var to_var(dd_var v) {
  switch (v) {
    case DD_VAR_T: return dd::Var::t;
    case DD_VAR_X: return dd::Var::x;
    case DD_VAR_Y: return dd::Var::y;
    case DD_VAR_Z: return dd::Var::z;
  }
  throw dd::InvalidArgument("unknown variable");
}

dd::UnitSystem to_units(dd_units u) {
  switch (u) {
    case DD_UNITS_NATURAL: return dd::UnitSystem::natural();
    case DD_UNITS_SI: return dd::UnitSystem::si();
  }
  throw dd::InvalidArgument("unknown unit system");
}

dd_status null_error() { return fail(DD_ERR_NULL_POINTER, "null pointer argument"); }

}  // namespace

extern "C" {

const char* dd_version(void) { return "1.0.0"; }

const char* dd_status_string(dd_status status) {
  switch (status) {
    case DD_OK: return "ok";
    case DD_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DD_ERR_PARSE: return "parse error";
    case DD_ERR_DOMAIN: return "domain error";
    case DD_ERR_DEGENERATE_DENOMINATOR: return "degenerate denominator";
    case DD_ERR_EVANESCENCE: return "evanescence violation";
    case DD_ERR_NULL_POINTER: return "null pointer";
    case DD_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* dd_last_error(void) { return g_last_error.c_str(); }

dd_status dd_convention_report(dd_convention* out) {
  if (any_null(out)) return null_error();
  return guarded([&] {
    const auto r = dd::degeneracy_convention_self_test();
    *out = dd_convention{r.lower_residual, r.upper_residual, r.lower_passes ? 1 : 0,
                         r.upper_passes ? 1 : 0,
                         dd::standard_gammas().deg_convention == dd::IndexConvention::upper};
  });
}

/* ---- expressions ------------------------------------------------------ */

dd_status dd_expr_parse(const char* text, dd_expr** out) {
  if (any_null(text, out)) return null_error();
  return guarded([&] { *out = new dd_expr{dd::parse_expr(text)}; });
}

dd_status dd_expr_constant(double value, dd_expr** out) {
  if (any_null(out)) return null_error();
  return guarded([&] { *out = new dd_expr{dd::ScalarExpr(value)}; });
}

dd_status dd_expr_scaled(const dd_expr* e, double factor, dd_expr** out) {
  if (any_null(e, out)) return null_error();
  return guarded([&] { *out = new dd_expr{dd::ScalarExpr(factor) * e->e}; });
}

dd_status dd_expr_diff(const dd_expr* e, dd_var v, dd_expr** out) {
  if (any_null(e, out)) return null_error();
  return guarded([&] { *out = new dd_expr{e->e.diff(to_var(v))}; });
}

dd_status dd_expr_eval(const dd_expr* e, const dd_point* p, double* out) {
  if (any_null(e, p, out)) return null_error();
  return guarded([&] { *out = e->e.eval(to_point(*p)); });
}

dd_status dd_expr_to_string(const dd_expr* e, char* buffer, size_t capacity, size_t* needed) {
  if (any_null(e)) return null_error();
  if (buffer == nullptr && capacity > 0) return null_error();
  return guarded([&] {
    const std::string s = e->e.to_string();
    if (needed) *needed = s.size() + 1;
    if (capacity > 0) {
      const std::size_t n = std::min(capacity - 1, s.size());
      std::memcpy(buffer, s.data(), n);
      buffer[n] = '\0';
    }
  });
}

void dd_expr_free(dd_expr* e) { delete e; }

/* ---- spinor fields ---------------------------------------------------- */

dd_status dd_spinor_degenerate(dd_complex c1, double xi, const dd_expr* f, double mass,
                               dd_spinor_field** out) {
  if (any_null(f, out)) return null_error();
  return guarded([&] {
    *out = new dd_spinor_field{dd::degenerate_spinor({to_complex(c1), xi, f->e, mass})};
  });
}

dd_status dd_spinor_degenerate_as_ansatz(dd_complex c1, double xi, const dd_expr* f,
                                         double mass, dd_spinor_field** out) {
  if (any_null(f, out)) return null_error();
  return guarded([&] {
    const dd::DegenerateParams dp{to_complex(c1), xi, f->e, mass};
    *out = new dd_spinor_field{dd::ansatz_spinor(dd::degenerate_as_ansatz(dp))};
  });
}

dd_status dd_spinor_barrier(dd_particle_kind kind, dd_branch branch, dd_complex c_plus,
                            dd_complex c_minus, double mass, dd_spinor_field** out) {
  if (any_null(out)) return null_error();
  return guarded([&] {
    const auto k = kind == DD_ANTIPARTICLE ? dd::ParticleKind::antiparticle
                                           : dd::ParticleKind::particle;
    const auto br = branch == DD_BRANCH_PRIMED ? dd::Branch::primed : dd::Branch::primary;
    *out = new dd_spinor_field{
        dd::barrier_spinor_family(k, br, to_complex(c_plus), to_complex(c_minus), mass)};
  });
}

dd_status dd_spinor_near_degenerate(dd_complex c0, double e1, double e2, double mass,
                                    dd_near_form form, dd_spinor_field** out) {
  if (any_null(out)) return null_error();
  return guarded([&] {
    const auto fm = form == DD_NEAR_EXACT ? dd::NearDegenForm::exact
                                          : dd::NearDegenForm::first_order;
    *out = new dd_spinor_field{
        dd::near_degenerate_spinor({to_complex(c0), e1, e2, mass}, fm)};
  });
}

dd_status dd_spinor_value(const dd_spinor_field* f, const dd_point* p, dd_spinor* out) {
  if (any_null(f, p, out)) return null_error();
  return guarded([&] { *out = from_spinor(f->f.value(to_point(*p))); });
}

dd_status dd_spinor_partial(const dd_spinor_field* f, dd_var v, const dd_point* p,
                            dd_spinor* out) {
  if (any_null(f, p, out)) return null_error();
  return guarded([&] { *out = from_spinor(f->f.partial(to_var(v), to_point(*p))); });
}

int dd_spinor_in_domain(const dd_spinor_field* f, const dd_point* p) {
  if (any_null(f, p)) {
    null_error();
    return -1;
  }
  int r = -1;
  if (guarded([&] { r = f->f.in_domain(to_point(*p)) ? 1 : 0; }) != DD_OK) return -1;
  return r;
}

const char* dd_spinor_family(const dd_spinor_field* f) {
  return f ? f->f.family().c_str() : "";
}

void dd_spinor_free(dd_spinor_field* f) { delete f; }

/* ---- potentials ------------------------------------------------------- */

dd_status dd_potential_zero(dd_potential** out) {
  if (any_null(out)) return null_error();
  return guarded([&] { *out = new dd_potential{dd::FourPotentialField()}; });
}

dd_status dd_potential_a(const dd_expr* f, const dd_expr* g, double xi, double mass,
                         dd_potential** out) {
  if (any_null(f, g, out)) return null_error();
  return guarded([&] { *out = new dd_potential{dd::potential_a(f->e, g->e, xi, mass)}; });
}

dd_status dd_potential_family_b(const dd_potential* a, const dd_expr* s, const double kappa[4],
                                dd_potential** out) {
  if (any_null(a, s, kappa, out)) return null_error();
  return guarded([&] {
    const dd::KappaVector k{{kappa[0], kappa[1], kappa[2], kappa[3]}};
    *out = new dd_potential{dd::family_b(a->b, s->e, k)};
  });
}

dd_status dd_potential_perturbed(double e2, double mass, const dd_expr* s, double kappa2_sign,
                                 dd_potential** out) {
  if (any_null(s, out)) return null_error();
  return guarded(
      [&] { *out = new dd_potential{dd::perturbed_potential(e2, mass, s->e, kappa2_sign)}; });
}

dd_status dd_potential_control(double q, double e0, double v0, dd_potential** out) {
  if (any_null(out)) return null_error();
  return guarded([&] { *out = new dd_potential{dd::control_potential(q, e0, v0)}; });
}

dd_status dd_potential_value(const dd_potential* b, const dd_point* p, double out[4]) {
  if (any_null(b, p, out)) return null_error();
  return guarded([&] {
    const auto v = b->b.value(to_point(*p));
    for (std::size_t mu = 0; mu < 4; ++mu) out[mu] = v[mu];
  });
}

void dd_potential_free(dd_potential* b) { delete b; }

dd_status dd_kappa_from_spinor(const dd_spinor_field* f, const dd_point* p, double out[4]) {
  if (any_null(f, p, out)) return null_error();
  return guarded([&] {
    const auto k = dd::kappa_from_spinor(f->f, to_point(*p));
    for (std::size_t mu = 0; mu < 4; ++mu) out[mu] = k[mu];
  });
}

dd_status dd_degenerate_kappa(double xi, double out[4]) {
  if (any_null(out)) return null_error();
  return guarded([&] {
    const auto k = dd::degenerate_kappa(xi);
    for (std::size_t mu = 0; mu < 4; ++mu) out[mu] = k[mu];
  });
}

dd_status dd_barrier_kappa(dd_branch branch, double out[4]) {
  if (any_null(out)) return null_error();
  return guarded([&] {
    const auto k =
        dd::barrier_kappa(branch == DD_BRANCH_PRIMED ? dd::Branch::primed : dd::Branch::primary);
    for (std::size_t mu = 0; mu < 4; ++mu) out[mu] = k[mu];
  });
}

/* ---- residuals -------------------------------------------------------- */

dd_status dd_dirac_residual(const dd_spinor_field* f, const dd_potential* b, double mass,
                            const dd_point* p, dd_method method, double fd_step,
                            dd_residual_report* out) {
  if (any_null(f, b, p, out)) return null_error();
  return guarded([&] {
    const auto m = method == DD_METHOD_FINITE_DIFFERENCE ? dd::DerivativeMethod::finite_difference
                                                         : dd::DerivativeMethod::analytic;
    const auto r = dd::dirac_residual(f->f, b->b, mass, to_point(*p), m, fd_step);
    *out = dd_residual_report{from_spinor(r.residual), r.relative_norm};
  });
}

dd_status dd_axial_residual(const dd_spinor_field* f, double mass, const dd_point* p,
                            dd_residual_report* out) {
  if (any_null(f, p, out)) return null_error();
  return guarded([&] {
    const auto r = dd::axial_residual(f->f, mass, to_point(*p));
    *out = dd_residual_report{from_spinor(r.residual), r.relative_norm};
  });
}

dd_status dd_degeneracy_check(const dd_spinor_field* f, const dd_point* p, dd_complex* c_dagger,
                              dd_complex* c_transpose, double* norm2) {
  if (any_null(f, p, c_dagger, c_transpose)) return null_error();
  return guarded([&] {
    const auto r = dd::degeneracy_check(f->f, to_point(*p));
    *c_dagger = from_complex(r.c_dagger);
    *c_transpose = from_complex(r.c_transpose);
    if (norm2) *norm2 = r.norm2;
  });
}

dd_status dd_perturbation_residual(dd_complex c0, double e1, double e2, double mass,
                                   const dd_expr* s, const dd_point* p, double kappa2_sign,
                                   dd_perturbation* out) {
  if (any_null(s, p, out)) return null_error();
  return guarded([&] {
    const auto r = dd::perturbation_residual({to_complex(c0), e1, e2, mass}, s->e, to_point(*p),
                                             kappa2_sign);
    *out = dd_perturbation{from_spinor(r.measured), from_spinor(r.predicted),
                           from_spinor(r.first_order), r.spinor_norm};
  });
}

dd_status dd_smallness(double e1, double e2, double s_value, double mass, double out[2]) {
  if (any_null(out)) return null_error();
  return guarded([&] {
    const auto r = dd::smallness_conditions(e1, e2, s_value, mass);
    out[0] = r.e1_s_over_m;
    out[1] = r.e2_s_over_m;
  });
}

/* ---- electromagnetic fields ------------------------------------------- */

dd_status dd_derive_fields(const dd_potential* b, double q, const dd_point* p,
                           dd_em_sample* out) {
  if (any_null(b, p, out)) return null_error();
  return guarded([&] { *out = from_sample(dd::derive_fields(b->b, q, to_point(*p))); });
}

dd_status dd_general_fields_closed_form(const dd_expr* f_q, const dd_expr* s_q, double xi,
                                        const dd_point* p, dd_em_sample* out) {
  if (any_null(f_q, s_q, p, out)) return null_error();
  return guarded([&] {
    *out = from_sample(dd::general_fields_closed_form(f_q->e, s_q->e, xi, to_point(*p)));
  });
}

namespace {
dd::WaveParams to_wave(const dd_wave_params& w) {
  return {w.amplitude1, w.phase1, w.amplitude2, w.phase2, w.wavenumber};
}
}  // namespace

dd_status dd_plane_wave_s(const dd_wave_params* w, dd_expr** out) {
  if (any_null(w, out)) return null_error();
  return guarded([&] { *out = new dd_expr{dd::plane_wave_s(to_wave(*w))}; });
}

dd_status dd_plane_wave_fields(const dd_wave_params* w, const dd_point* p, dd_em_sample* out) {
  if (any_null(w, p, out)) return null_error();
  return guarded([&] { *out = from_sample(dd::plane_wave_fields(to_wave(*w), to_point(*p))); });
}

dd_status dd_poynting(const dd_em_sample* s, double out[3]) {
  if (any_null(s, out)) return null_error();
  return guarded([&] {
    const auto v = dd::poynting(to_sample(*s));
    for (std::size_t i = 0; i < 3; ++i) out[i] = v[i];
  });
}

dd_status dd_lorentz_force(double q, const double v[3], const dd_em_sample* s, double out[3]) {
  if (any_null(v, s, out)) return null_error();
  return guarded([&] {
    const auto f = dd::lorentz_force(q, {v[0], v[1], v[2]}, to_sample(*s));
    for (std::size_t i = 0; i < 3; ++i) out[i] = f[i];
  });
}

dd_status dd_control_fields(double e0, double v0, dd_em_sample* out) {
  if (any_null(out)) return null_error();
  return guarded([&] { *out = from_sample(dd::control_fields(e0, v0)); });
}

dd_status dd_maxwell_residual_at(const dd_potential* b, double q, const dd_point* p,
                                 const double steps[4], dd_maxwell_report* out) {
  if (any_null(b, p, steps, out)) return null_error();
  return guarded([&] {
    const auto& pot = b->b;
    const dd::FieldFunction fields = [&](const dd::SpacetimePoint& x) {
      return dd::derive_fields(pot, q, x);
    };
    *out = from_report(
        dd::maxwell_residual_at(fields, to_point(*p), {steps[0], steps[1], steps[2], steps[3]}));
  });
}

dd_status dd_maxwell_check(const dd_potential* b, double q, const dd_grid* grid,
                           dd_maxwell_report* out) {
  if (any_null(b, grid, out)) return null_error();
  return guarded([&] {
    dd::Grid g;
    for (std::size_t k = 0; k < 4; ++k)
      g.axes[k] = {grid->origin[k], grid->spacing[k], grid->count[k]};
    const auto& pot = b->b;
    const dd::FieldFunction fields = [&](const dd::SpacetimePoint& x) {
      return dd::derive_fields(pot, q, x);
    };
    *out = from_report(dd::maxwell_vacuum_check(fields, g));
  });
}

/* ---- tunneling -------------------------------------------------------- */

dd_status dd_decay_factor(double energy, double barrier_height, double mass, double* out) {
  if (any_null(out)) return null_error();
  return guarded([&] { *out = dd::decay_factor(energy, barrier_height, mass); });
}

dd_status dd_length_scale_si(double mass_kg, double* out) {
  if (any_null(out)) return null_error();
  return guarded([&] { *out = dd::length_scale(mass_kg); });
}

dd_status dd_length_scale(double mass, dd_units units, double* out) {
  if (any_null(out)) return null_error();
  return guarded([&] { *out = dd::length_scale(mass, to_units(units)); });
}

dd_status dd_transmission_coeff(double p, double mass, double width, double z0, dd_units units,
                                dd_complex* out) {
  if (any_null(out)) return null_error();
  return guarded([&] {
    *out = from_complex(dd::transmission_coeff(p, mass, width, z0, to_units(units)));
  });
}

dd_status dd_transmittance(double p, double mass, double width, double z0, dd_units units,
                           double* out, int* zero_limit) {
  if (any_null(out)) return null_error();
  return guarded([&] {
    const auto t = dd::transmittance(p, mass, width, z0, to_units(units));
    *out = t.value;
    if (zero_limit) *zero_limit = t.zero_momentum_limit ? 1 : 0;
  });
}

dd_status dd_transmittance_max(double width, double z0, double* out) {
  if (any_null(out)) return null_error();
  return guarded([&] { *out = dd::transmittance_max(width, z0); });
}

}  // extern "C"
