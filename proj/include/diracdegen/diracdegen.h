/*
 * C interface to the diracdegen library.
 *
 * Objects (expressions, spinor fields, potentials) are opaque handles created
 * by dd_*_create-style functions and released with the matching dd_*_free.
 * Every fallible call returns a dd_status; on failure a human-readable
 * message is available from dd_last_error() on the same thread until the next
 * failing call. Output parameters are left untouched on failure.
 *
 * Natural units (hbar = c = 1) throughout, except where a dd_units argument
 * selects SI.
 */
#ifndef DIRACDEGEN_H
#define DIRACDEGEN_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(DIRACDEGEN_BUILDING)
#    define DD_API __declspec(dllexport)
#  else
#    define DD_API __declspec(dllimport)
#  endif
#else
#  define DD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dd_status {
  DD_OK = 0,
  DD_ERR_INVALID_ARGUMENT = 1,
  DD_ERR_PARSE = 2,
  DD_ERR_DOMAIN = 3,
  DD_ERR_DEGENERATE_DENOMINATOR = 4,
  DD_ERR_EVANESCENCE = 5,
  DD_ERR_NULL_POINTER = 6,
  DD_ERR_INTERNAL = 7
} dd_status;

typedef enum dd_var { DD_VAR_T = 0, DD_VAR_X = 1, DD_VAR_Y = 2, DD_VAR_Z = 3 } dd_var;
typedef enum dd_particle_kind { DD_PARTICLE = 0, DD_ANTIPARTICLE = 1 } dd_particle_kind;
typedef enum dd_branch { DD_BRANCH_PRIMARY = 0, DD_BRANCH_PRIMED = 1 } dd_branch;
typedef enum dd_near_form { DD_NEAR_FIRST_ORDER = 0, DD_NEAR_EXACT = 1 } dd_near_form;
typedef enum dd_method { DD_METHOD_ANALYTIC = 0, DD_METHOD_FINITE_DIFFERENCE = 1 } dd_method;
typedef enum dd_units { DD_UNITS_NATURAL = 0, DD_UNITS_SI = 1 } dd_units;

typedef struct dd_expr dd_expr;
typedef struct dd_spinor_field dd_spinor_field;
typedef struct dd_potential dd_potential;

typedef struct dd_point { double t, x, y, z; } dd_point;
typedef struct dd_complex { double re, im; } dd_complex;
typedef struct dd_spinor { dd_complex c[4]; } dd_spinor;
typedef struct dd_em_sample { double E[3]; double B[3]; } dd_em_sample;

typedef struct dd_residual_report {
  dd_spinor residual;
  double relative_norm; /* |R| / (m |Psi|) */
} dd_residual_report;

typedef struct dd_wave_params {
  double amplitude1, phase1, amplitude2, phase2, wavenumber;
} dd_wave_params;

typedef struct dd_maxwell_report {
  double div_E, div_B, faraday, ampere;
} dd_maxwell_report;

/* Axes in (t, x, y, z) order; z varies fastest when enumerated. */
typedef struct dd_grid {
  double origin[4];
  double spacing[4];
  int count[4];
} dd_grid;

typedef struct dd_perturbation {
  dd_spinor measured;
  dd_spinor predicted;
  dd_spinor first_order;
  double spinor_norm;
} dd_perturbation;

typedef struct dd_convention {
  double lower_residual; /* max |Psi^dagger gamma Psi| / |Psi|^2, lower-index reading */
  double upper_residual;
  int lower_passes;
  int upper_passes;
  int selected_upper; /* 0: lower-index reading in use, 1: upper */
} dd_convention;

/* ---- library ---------------------------------------------------------- */
DD_API const char* dd_version(void);
DD_API const char* dd_status_string(dd_status status);
DD_API const char* dd_last_error(void);
DD_API dd_status dd_convention_report(dd_convention* out);

/* ---- expressions ------------------------------------------------------ */
DD_API dd_status dd_expr_parse(const char* text, dd_expr** out);
DD_API dd_status dd_expr_constant(double value, dd_expr** out);
DD_API dd_status dd_expr_scaled(const dd_expr* e, double factor, dd_expr** out);
DD_API dd_status dd_expr_diff(const dd_expr* e, dd_var v, dd_expr** out);
DD_API dd_status dd_expr_eval(const dd_expr* e, const dd_point* p, double* out);
/* Writes at most `capacity` bytes including the terminator; `needed` (may be
 * NULL) receives the full length plus one. */
DD_API dd_status dd_expr_to_string(const dd_expr* e, char* buffer, size_t capacity,
                                   size_t* needed);
DD_API void dd_expr_free(dd_expr* e);

/* ---- spinor fields ---------------------------------------------------- */
DD_API dd_status dd_spinor_degenerate(dd_complex c1, double xi, const dd_expr* f, double mass,
                                      dd_spinor_field** out);
/* The same family written in the general (d, e, zeta, eta) ansatz form. */
DD_API dd_status dd_spinor_degenerate_as_ansatz(dd_complex c1, double xi, const dd_expr* f,
                                                double mass, dd_spinor_field** out);
DD_API dd_status dd_spinor_barrier(dd_particle_kind kind, dd_branch branch, dd_complex c_plus,
                                   dd_complex c_minus, double mass, dd_spinor_field** out);
DD_API dd_status dd_spinor_near_degenerate(dd_complex c0, double e1, double e2, double mass,
                                           dd_near_form form, dd_spinor_field** out);
DD_API dd_status dd_spinor_value(const dd_spinor_field* f, const dd_point* p, dd_spinor* out);
DD_API dd_status dd_spinor_partial(const dd_spinor_field* f, dd_var v, const dd_point* p,
                                   dd_spinor* out);
/* 1 inside the overflow-guarded region, 0 outside, -1 on error. */
DD_API int dd_spinor_in_domain(const dd_spinor_field* f, const dd_point* p);
/* Family tag; valid while the handle lives. */
DD_API const char* dd_spinor_family(const dd_spinor_field* f);
DD_API void dd_spinor_free(dd_spinor_field* f);

/* ---- potentials ------------------------------------------------------- */
DD_API dd_status dd_potential_zero(dd_potential** out);
DD_API dd_status dd_potential_a(const dd_expr* f, const dd_expr* g, double xi, double mass,
                                dd_potential** out);
DD_API dd_status dd_potential_family_b(const dd_potential* a, const dd_expr* s,
                                       const double kappa[4], dd_potential** out);
DD_API dd_status dd_potential_perturbed(double e2, double mass, const dd_expr* s,
                                        double kappa2_sign, dd_potential** out);
DD_API dd_status dd_potential_control(double q, double e0, double v0, dd_potential** out);
DD_API dd_status dd_potential_value(const dd_potential* b, const dd_point* p, double out[4]);
DD_API void dd_potential_free(dd_potential* b);

DD_API dd_status dd_kappa_from_spinor(const dd_spinor_field* f, const dd_point* p,
                                      double out[4]);
DD_API dd_status dd_degenerate_kappa(double xi, double out[4]);
DD_API dd_status dd_barrier_kappa(dd_branch branch, double out[4]);

/* ---- residuals -------------------------------------------------------- */
DD_API dd_status dd_dirac_residual(const dd_spinor_field* f, const dd_potential* b, double mass,
                                   const dd_point* p, dd_method method, double fd_step,
                                   dd_residual_report* out);
DD_API dd_status dd_axial_residual(const dd_spinor_field* f, double mass, const dd_point* p,
                                   dd_residual_report* out);
DD_API dd_status dd_degeneracy_check(const dd_spinor_field* f, const dd_point* p,
                                     dd_complex* c_dagger, dd_complex* c_transpose,
                                     double* norm2);
DD_API dd_status dd_perturbation_residual(dd_complex c0, double e1, double e2, double mass,
                                          const dd_expr* s, const dd_point* p,
                                          double kappa2_sign, dd_perturbation* out);
/* out[0] = e1 |s| / m, out[1] = e2 |s| / m */
DD_API dd_status dd_smallness(double e1, double e2, double s_value, double mass, double out[2]);

/* ---- electromagnetic fields ------------------------------------------- */
DD_API dd_status dd_derive_fields(const dd_potential* b, double q, const dd_point* p,
                                  dd_em_sample* out);
DD_API dd_status dd_general_fields_closed_form(const dd_expr* f_q, const dd_expr* s_q, double xi,
                                               const dd_point* p, dd_em_sample* out);
DD_API dd_status dd_plane_wave_s(const dd_wave_params* w, dd_expr** out);
DD_API dd_status dd_plane_wave_fields(const dd_wave_params* w, const dd_point* p,
                                      dd_em_sample* out);
DD_API dd_status dd_poynting(const dd_em_sample* s, double out[3]);
DD_API dd_status dd_lorentz_force(double q, const double v[3], const dd_em_sample* s,
                                  double out[3]);
DD_API dd_status dd_control_fields(double e0, double v0, dd_em_sample* out);
/* Vacuum Maxwell residuals of the fields of b at one point, central
 * differences with per-axis steps (t, x, y, z). */
DD_API dd_status dd_maxwell_residual_at(const dd_potential* b, double q, const dd_point* p,
                                        const double steps[4], dd_maxwell_report* out);
DD_API dd_status dd_maxwell_check(const dd_potential* b, double q, const dd_grid* grid,
                                  dd_maxwell_report* out);

/* ---- tunneling -------------------------------------------------------- */
DD_API dd_status dd_decay_factor(double energy, double barrier_height, double mass, double* out);
DD_API dd_status dd_length_scale_si(double mass_kg, double* out);
DD_API dd_status dd_length_scale(double mass, dd_units units, double* out);
DD_API dd_status dd_transmission_coeff(double p, double mass, double width, double z0,
                                       dd_units units, dd_complex* out);
/* zero_limit (may be NULL) is set to 1 when p == 0 and the exact limit is returned. */
DD_API dd_status dd_transmittance(double p, double mass, double width, double z0,
                                  dd_units units, double* out, int* zero_limit);
DD_API dd_status dd_transmittance_max(double width, double z0, double* out);

#ifdef __cplusplus
}
#endif

#endif /* DIRACDEGEN_H */
