// dirac-degen: verification sweeps and CSV export for degenerate Dirac solutions.
//
// Links only against the C interface in diracdegen.h.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "diracdegen/diracdegen.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTolerance = 1;
constexpr int kExitConfig = 2;
constexpr const char* kConfigEnv = "DIRAC_DEGEN_CONFIG";

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(dd_status s, const std::string& context) {
  if (s != DD_OK)
    throw ConfigError(context + ": " + dd_status_string(s) + " (" + dd_last_error() + ")");
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Expr = std::unique_ptr<dd_expr, Deleter<dd_expr, dd_expr_free>>;
using Field = std::unique_ptr<dd_spinor_field, Deleter<dd_spinor_field, dd_spinor_free>>;
using Potential = std::unique_ptr<dd_potential, Deleter<dd_potential, dd_potential_free>>;

Expr parse(const std::string& text, const std::string& what) {
  dd_expr* e = nullptr;
  check(dd_expr_parse(text.c_str(), &e), what + " '" + text + "'");
  return Expr(e);
}

std::string expr_text(const dd_expr* e) {
  size_t needed = 0;
  check(dd_expr_to_string(e, nullptr, 0, &needed), "expression");
  std::string s(needed, '\0');
  check(dd_expr_to_string(e, s.data(), s.size(), nullptr), "expression");
  s.resize(needed - 1);
  return s;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

// Portable uniform draw in [0, 1) from a 64-bit engine.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

double spinor_norm(const dd_spinor& s) {
  double n2 = 0.0;
  for (const auto& c : s.c) n2 += c.re * c.re + c.im * c.im;
  return std::sqrt(n2);
}

struct AxisSpec {
  double origin = 0.0;
  double spacing = 1e-3;
  int count = 1;
};

AxisSpec parse_axis(const std::string& text) {
  AxisSpec a;
  std::istringstream in(text);
  std::string o, h, n;
  if (!std::getline(in, o, ':') || !std::getline(in, h, ':') || !std::getline(in, n) ||
      n.find(':') != std::string::npos)
    throw ConfigError("grid axis '" + text + "' is not of the form o:h:n");
  try {
    std::size_t used = 0;
    a.origin = std::stod(o, &used);
    if (used != o.size()) throw std::invalid_argument(o);
    a.spacing = std::stod(h, &used);
    if (used != h.size()) throw std::invalid_argument(h);
    a.count = std::stoi(n, &used);
    if (used != n.size()) throw std::invalid_argument(n);
  } catch (const std::logic_error&) {
    throw ConfigError("grid axis '" + text + "' has a malformed number");
  }
  if (!(a.spacing > 0.0) || !std::isfinite(a.origin))
    throw ConfigError("grid axis '" + text + "' needs a finite origin and positive spacing");
  if (a.count < 1) throw ConfigError("grid axis '" + text + "' needs at least one point");
  return a;
}

struct Settings {
  std::string command;
  std::optional<double> xi;
  double mass = 1.0;
  std::optional<double> check_mass;
  std::optional<std::string> f_expr, g_expr, s_expr;
  std::vector<std::string> grid;
  std::optional<double> tol;
  double fd_tol = 1e-6;
  double fd_step = 1e-4;
  std::uint64_t seed = 42;
  std::string out;
  std::string units = "natural";
  bool maxwell = false;
  std::string kappa2_sign = "+";
  int points = 5;
  double charge = 1.0;
  // wave preset
  double wave_k = 1.0, wave_e1 = 1.0, wave_d1 = 0.0, wave_e2 = 0.5, wave_d2 = 0.3;
  // transmit
  std::optional<double> width;
  std::string p_grid = "0.01:0.01:1000";
  std::string preset;
  // perturb
  std::vector<double> e1_grid{0.0, 0.001, 0.01};
  std::vector<double> e2_grid{0.0, 0.001, 0.01};
  std::vector<double> s_amp{0.001, 0.01};
  std::string point = "0:0:0:0.5";
};

double kappa2_value(const Settings& s) { return s.kappa2_sign == "-" ? -1.0 : 1.0; }

class CsvWriter {
 public:
  void comment(const std::string& line) { lines_.push_back("# " + line); }
  void header(const std::vector<std::string>& cols) { row(cols); }
  void row(const std::vector<std::string>& cols) {
    std::string line;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i) line += ',';
      line += cols[i];
    }
    lines_.push_back(std::move(line));
  }

  void flush(const std::string& path) const {
    if (path.empty() || path == "-") {
      for (const auto& l : lines_) std::cout << l << '\n';
      std::cout.flush();
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file '" + path + "'");
    for (const auto& l : lines_) f << l << '\n';
  }

 private:
  std::vector<std::string> lines_;
};

void write_ledger(CsvWriter& csv, const Settings& s) {
  dd_convention conv{};
  check(dd_convention_report(&conv), "convention self-test");
  csv.comment(std::string("dirac-degen ") + dd_version() + " command=" + s.command);
  csv.comment("gamma=dirac-pauli signature=(+,-,-,-) operator=i*g^mu*d_mu+b_mu*g^mu-m");
  csv.comment(std::string("gamma_deg=g_0+i*g_1*g_2*g_3 index=") +
              (conv.selected_upper ? "upper" : "lower") +
              " self_test_lower=" + num(conv.lower_residual) +
              " self_test_upper=" + num(conv.upper_residual));
  csv.comment("kappa2_sign=" + std::string(kappa2_value(s) > 0 ? "+1" : "-1"));
  csv.comment("units=" + s.units);
  csv.comment("seed=" + std::to_string(s.seed));
}

// ---- verify --------------------------------------------------------------

struct VerifyTarget {
  std::string family;
  std::string potential;
  double xi;
  const dd_spinor_field* field;
  const dd_potential* b;
};

std::vector<dd_point> sample_points(const dd_spinor_field* f, int n, double mass, double fd_step,
                                    std::mt19937_64& rng) {
  std::vector<dd_point> pts;
  const double span = 10.0 / mass;
  long attempts = 0;
  while (static_cast<int>(pts.size()) < n) {
    if (++attempts > 200000)
      throw ConfigError("could not sample points inside the guarded domain; check --xi/--mass");
    dd_point p{uniform(rng, -span, span), uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0),
               uniform(rng, -span, span)};
    bool ok = dd_spinor_in_domain(f, &p) == 1;
    for (double d : {-2.0 * fd_step, 2.0 * fd_step}) {
      dd_point q = p;
      q.t += d;
      q.z += d;
      ok = ok && dd_spinor_in_domain(f, &q) == 1;
      q = p;
      q.t += d;
      q.z -= d;
      ok = ok && dd_spinor_in_domain(f, &q) == 1;
    }
    if (ok) pts.push_back(p);
  }
  return pts;
}

int cmd_verify(const Settings& s) {
  const double tol = s.tol.value_or(1e-9);
  if (!(tol > 0.0) || !(s.fd_tol > 0.0)) throw ConfigError("tolerances must be positive");
  if (!(s.fd_step > 0.0)) throw ConfigError("--fd-step must be positive");
  if (s.points < 1) throw ConfigError("--points must be at least 1");
  const double m = s.mass;
  const double m_check = s.check_mass.value_or(m);
  if (!(m > 0.0) || !(m_check > 0.0)) throw ConfigError("masses must be positive");

  const std::vector<double> xis =
      s.xi ? std::vector<double>{*s.xi} : std::vector<double>{0.7, std::numbers::pi / 2, 2.3};
  const std::vector<std::string> f_texts =
      s.f_expr ? std::vector<std::string>{*s.f_expr}
               : std::vector<std::string>{"0.5", "t*z + x^2 - 2*y", "sin(x) + cos(y - t)"};
  const std::vector<std::string> s_texts =
      s.s_expr ? std::vector<std::string>{*s.s_expr}
               : std::vector<std::string>{"1.5", "x*y - t", "sin(z + x)", "exp(-t^2) * y"};
  const std::string independent_g = "x*z - sin(t)";

  std::vector<Expr> exprs;
  std::vector<Field> fields;
  std::vector<Potential> pots;
  std::vector<VerifyTarget> targets;

  std::vector<const dd_expr*> s_list;
  for (const auto& t : s_texts) {
    exprs.push_back(parse(t, "s expression"));
    s_list.push_back(exprs.back().get());
  }
  auto add_potential = [&](dd_potential* p) {
    pots.emplace_back(p);
    return pots.back().get();
  };
  // b = base + s kappa for every s, plus the base itself.
  auto add_family = [&](const std::string& family, double xi, const dd_spinor_field* f,
                        const dd_potential* base, const std::string& base_name,
                        const double kappa[4]) {
    targets.push_back({family, base_name, xi, f, base});
    for (std::size_t k = 0; k < s_list.size(); ++k) {
      dd_potential* b = nullptr;
      check(dd_potential_family_b(base, s_list[k], kappa, &b), "family b");
      targets.push_back({family, base_name + "+s*kappa[s=" + s_texts[k] + "]", xi, f,
                         add_potential(b)});
    }
  };

  const dd_complex c1{0.8, -0.3};
  for (double xi : xis) {
    double kappa[4];
    check(dd_degenerate_kappa(xi, kappa), "kappa");
    for (const auto& ft : f_texts) {
      exprs.push_back(parse(ft, "f expression"));
      const dd_expr* f = exprs.back().get();
      std::vector<std::pair<std::string, const dd_expr*>> gs;
      if (s.g_expr) {
        exprs.push_back(parse(*s.g_expr, "g expression"));
        gs.emplace_back(*s.g_expr, exprs.back().get());
      } else {
        dd_expr* fz = nullptr;
        check(dd_expr_diff(f, DD_VAR_Z, &fz), "df/dz");
        exprs.emplace_back(fz);
        gs.emplace_back("df/dz", fz);
        exprs.push_back(parse(independent_g, "g expression"));
        gs.emplace_back(independent_g, exprs.back().get());
      }

      dd_spinor_field* psi = nullptr;
      check(dd_spinor_degenerate(c1, xi, f, m, &psi), "degenerate spinor");
      fields.emplace_back(psi);
      dd_spinor_field* ansatz = nullptr;
      check(dd_spinor_degenerate_as_ansatz(c1, xi, f, m, &ansatz), "ansatz spinor");
      fields.emplace_back(ansatz);

      for (const auto& [g_name, g] : gs) {
        dd_potential* a = nullptr;
        check(dd_potential_a(f, g, xi, m, &a), "potential a");
        const dd_potential* base = add_potential(a);
        const std::string base_name = "a[f=" + ft + ";g=" + g_name + "]";
        add_family("degenerate", xi, psi, base, base_name, kappa);
        targets.push_back({"degenerate-ansatz", base_name, xi, ansatz, base});
      }
    }
  }

  dd_potential* zero = nullptr;
  check(dd_potential_zero(&zero), "zero potential");
  const dd_potential* zero_b = add_potential(zero);
  for (dd_branch branch : {DD_BRANCH_PRIMARY, DD_BRANCH_PRIMED}) {
    double kappa[4];
    check(dd_barrier_kappa(branch, kappa), "barrier kappa");
    const double xi = branch == DD_BRANCH_PRIMARY ? std::numbers::pi / 2 : -std::numbers::pi / 2;
    for (dd_particle_kind kind : {DD_PARTICLE, DD_ANTIPARTICLE}) {
      dd_spinor_field* psi = nullptr;
      check(dd_spinor_barrier(kind, branch, {1.0, 0.25}, {-0.5, 0.75}, m, &psi),
            "barrier spinor");
      fields.emplace_back(psi);
      add_family(dd_spinor_family(psi), xi, psi, zero_b, "0", kappa);
    }
  }

  std::mt19937_64 rng(s.seed);
  CsvWriter csv;
  write_ledger(csv, s);
  csv.comment("mass=" + num(m) + " check_mass=" + num(m_check) + " tol=" + num(tol) +
              " fd_tol=" + num(s.fd_tol) + " fd_step=" + num(s.fd_step) +
              " points=" + std::to_string(s.points));
  csv.header({"family", "potential", "xi", "t", "x", "y", "z", "method", "relative_norm",
              "pass"});

  bool all_pass = true;
  const dd_spinor_field* sampled_for = nullptr;
  std::vector<dd_point> pts;
  for (const auto& tg : targets) {
    if (tg.field != sampled_for) {
      pts = sample_points(tg.field, s.points, m, s.fd_step, rng);
      sampled_for = tg.field;
    }
    for (const auto& p : pts) {
      for (dd_method method : {DD_METHOD_ANALYTIC, DD_METHOD_FINITE_DIFFERENCE}) {
        dd_residual_report r{};
        check(dd_dirac_residual(tg.field, tg.b, m_check, &p, method, s.fd_step, &r),
              "residual");
        // Report relative to the spinor's own mass.
        const double rel = r.relative_norm * m_check / m;
        const double limit = method == DD_METHOD_ANALYTIC ? tol : std::max(tol, s.fd_tol);
        const bool pass = rel <= limit;
        all_pass = all_pass && pass;
        csv.row({tg.family, tg.potential, num(tg.xi), num(p.t), num(p.x), num(p.y), num(p.z),
                 method == DD_METHOD_ANALYTIC ? "analytic" : "finite-difference", num(rel),
                 pass ? "1" : "0"});
      }
    }
  }
  csv.flush(s.out);
  return all_pass ? kExitOk : kExitTolerance;
}

// ---- fields / wave -------------------------------------------------------

dd_grid build_grid(const Settings& s) {
  const char* names = "txyz";
  AxisSpec axes[4] = {{0.0, 0.5, 3}, {-1.0, 1.0, 3}, {-1.0, 1.0, 3}, {0.0, 0.5, 3}};
  std::size_t next = 0;
  for (const auto& g : s.grid) {
    std::size_t axis = next;
    std::string spec = g;
    if (g.size() > 2 && g[1] == '=') {
      const char* pos = std::strchr(names, g[0]);
      if (pos == nullptr || g[0] == '\0') throw ConfigError("unknown grid axis in '" + g + "'");
      axis = static_cast<std::size_t>(pos - names);
      spec = g.substr(2);
    } else {
      ++next;
    }
    if (axis > 3) throw ConfigError("more than four --grid axes given");
    axes[axis] = parse_axis(spec);
  }
  dd_grid grid{};
  for (std::size_t k = 0; k < 4; ++k) {
    grid.origin[k] = axes[k].origin;
    grid.spacing[k] = axes[k].spacing;
    grid.count[k] = axes[k].count;
  }
  return grid;
}

int emit_fields(const Settings& s, const dd_potential* b, const dd_wave_params* wave,
                const std::string& description) {
  const dd_grid grid = build_grid(s);
  if (s.charge == 0.0 || !std::isfinite(s.charge)) throw ConfigError("--charge must be non-zero");

  CsvWriter csv;
  write_ledger(csv, s);
  csv.comment(description);
  std::string axes;
  for (std::size_t k = 0; k < 4; ++k)
    axes += std::string(k ? " " : "") + "txyz"[k] + "=" + num(grid.origin[k]) + ":" +
            num(grid.spacing[k]) + ":" + std::to_string(grid.count[k]);
  csv.comment("grid " + axes + " charge=" + num(s.charge));

  std::vector<std::string> cols{"t", "x", "y", "z", "Ex", "Ey", "Ez", "Bx", "By", "Bz"};
  if (wave) cols.insert(cols.end(), {"Sx", "Sy", "Sz"});
  if (s.maxwell) cols.insert(cols.end(), {"div_E", "div_B", "faraday", "ampere"});
  csv.header(cols);

  for (int it = 0; it < grid.count[0]; ++it)
    for (int ix = 0; ix < grid.count[1]; ++ix)
      for (int iy = 0; iy < grid.count[2]; ++iy)
        for (int iz = 0; iz < grid.count[3]; ++iz) {
          const dd_point p{grid.origin[0] + it * grid.spacing[0],
                           grid.origin[1] + ix * grid.spacing[1],
                           grid.origin[2] + iy * grid.spacing[2],
                           grid.origin[3] + iz * grid.spacing[3]};
          dd_em_sample em{};
          check(dd_derive_fields(b, s.charge, &p, &em), "fields");
          std::vector<std::string> row{num(p.t), num(p.x), num(p.y), num(p.z)};
          for (double v : em.E) row.push_back(num(v));
          for (double v : em.B) row.push_back(num(v));
          if (wave) {
            double S[3];
            check(dd_poynting(&em, S), "poynting");
            for (double v : S) row.push_back(num(v));
          }
          if (s.maxwell) {
            dd_maxwell_report r{};
            check(dd_maxwell_residual_at(b, s.charge, &p, grid.spacing, &r), "maxwell");
            for (double v : {r.div_E, r.div_B, r.faraday, r.ampere}) row.push_back(num(v));
          }
          csv.row(row);
        }
  csv.flush(s.out);
  return kExitOk;
}

int cmd_fields(const Settings& s) {
  const double xi = s.xi.value_or(std::numbers::pi / 2);
  const std::string ft = s.f_expr.value_or("0"), gt = s.g_expr.value_or("0"),
                    st = s.s_expr.value_or("0");
  const Expr f = parse(ft, "f expression"), g = parse(gt, "g expression"),
             sx = parse(st, "s expression");
  dd_potential* a = nullptr;
  check(dd_potential_a(f.get(), g.get(), xi, s.mass, &a), "potential a");
  const Potential base(a);
  double kappa[4];
  check(dd_degenerate_kappa(xi, kappa), "kappa");
  dd_potential* b = nullptr;
  check(dd_potential_family_b(base.get(), sx.get(), kappa, &b), "family b");
  const Potential pot(b);
  return emit_fields(s, pot.get(), nullptr,
                     "potential=a+s*kappa xi=" + num(xi) + " mass=" + num(s.mass) + " f=" + ft +
                         " g=" + gt + " s=" + st);
}

int cmd_wave(const Settings& s) {
  const dd_wave_params w{s.wave_e1, s.wave_d1, s.wave_e2, s.wave_d2, s.wave_k};
  if (w.wavenumber == 0.0) throw ConfigError("--wave-k must be non-zero");
  dd_expr* sq = nullptr;
  check(dd_plane_wave_s(&w, &sq), "plane wave");
  // s is given per unit charge; the potential carries q s.
  dd_expr* qs = nullptr;
  const Expr s_unit(sq);
  check(dd_expr_scaled(s_unit.get(), s.charge, &qs), "plane wave");
  const Expr s_charge(qs);
  dd_potential* zero = nullptr;
  check(dd_potential_zero(&zero), "zero potential");
  const Potential base(zero);
  const double kappa[4] = {1.0, 0.0, 1.0, 0.0};
  dd_potential* b = nullptr;
  check(dd_potential_family_b(base.get(), s_charge.get(), kappa, &b), "family b");
  const Potential pot(b);
  return emit_fields(s, pot.get(), &w,
                     "potential=q*s*(1,0,1,0) s=" + expr_text(s_unit.get()) + " k=" +
                         num(w.wavenumber) + " E1=" + num(w.amplitude1) + " d1=" +
                         num(w.phase1) + " E2=" + num(w.amplitude2) + " d2=" + num(w.phase2));
}

// ---- transmit ------------------------------------------------------------

int cmd_transmit(const Settings& s, bool mass_given) {
  const bool si = s.units == "si";
  const dd_units units = si ? DD_UNITS_SI : DD_UNITS_NATURAL;
  constexpr double kElectronKg = 9.1093837015e-31;
  constexpr double kLightSpeed = 299792458.0;
  const double mass = si && !mass_given ? kElectronKg : s.mass;
  if (!(mass > 0.0)) throw ConfigError("mass must be positive");

  double z0 = 0.0;
  check(dd_length_scale(mass, units, &z0), "length scale");
  const double width = s.width.value_or(z0);
  if (!(width >= 0.0)) throw ConfigError("--width must be non-negative");
  const AxisSpec pg = parse_axis(s.p_grid);
  if (!(pg.origin > 0.0)) throw ConfigError("the p/mc grid must be strictly positive");

  double t_max = 0.0;
  check(dd_transmittance_max(width, z0, &t_max), "transmittance limit");

  CsvWriter csv;
  write_ledger(csv, s);
  csv.comment("mass=" + num(mass) + (si ? " kg" : "") + " z0=" + num(z0) + (si ? " m" : "") +
              " width=" + num(width) + " width_over_z0=" + num(width / z0));
  if (si) {
    double z0_electron = 0.0;
    check(dd_length_scale_si(kElectronKg, &z0_electron), "length scale");
    csv.comment("electron z0=" + num(z0_electron) + " m");
  }
  csv.header({"p_over_mc", "T", "T_max"});

  bool monotone = true;
  double prev = -1.0;
  for (int i = 0; i < pg.count; ++i) {
    const double ratio = pg.origin + i * pg.spacing;
    const double p = si ? ratio * mass * kLightSpeed : ratio * mass;
    double T = 0.0;
    check(dd_transmittance(p, mass, width, z0, units, &T, nullptr), "transmittance");
    if (width > 0.0 ? !(T > prev) : !(T >= prev)) monotone = false;
    prev = T;
    csv.row({num(ratio), num(T), num(t_max)});
  }
  csv.flush(s.out);
  return monotone ? kExitOk : kExitTolerance;
}

// ---- perturb -------------------------------------------------------------

dd_point parse_point(const std::string& text) {
  std::vector<double> c;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ':')) {
    try {
      std::size_t used = 0;
      c.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw ConfigError("point '" + text + "' has a malformed coordinate");
    }
  }
  if (c.size() != 4) throw ConfigError("point '" + text + "' is not of the form t:x:y:z");
  return {c[0], c[1], c[2], c[3]};
}

int cmd_perturb(const Settings& s) {
  const double tol = s.tol.value_or(0.1);
  if (!(tol > 0.0)) throw ConfigError("tolerances must be positive");
  const double m = s.mass;
  if (!(m > 0.0)) throw ConfigError("mass must be positive");
  const dd_point p = parse_point(s.point);
  const std::string shape_text = s.s_expr.value_or("1");
  const Expr shape = parse(shape_text, "s expression");
  for (double e : s.e1_grid)
    if (!(std::abs(e) < 0.1)) throw ConfigError("e1 values must satisfy |e1| < 0.1");
  for (double e : s.e2_grid)
    if (!(std::abs(e) < 0.1)) throw ConfigError("e2 values must satisfy |e2| < 0.1");
  const double k2 = kappa2_value(s);

  CsvWriter csv;
  write_ledger(csv, s);
  csv.comment("mass=" + num(m) + " s=amplitude*(" + shape_text + ") point=" + num(p.t) + ":" +
              num(p.x) + ":" + num(p.y) + ":" + num(p.z) + " ratio_tol=" + num(tol));
  csv.header({"e1", "e2", "s_amplitude", "measured_norm", "predicted_norm", "ratio",
              "e1_s_over_m", "e2_s_over_m"});

  bool all_pass = true;
  const dd_complex c0{1.0, 0.0};
  for (double e1 : s.e1_grid)
    for (double e2 : s.e2_grid)
      for (double amp : s.s_amp) {
        dd_expr* sx = nullptr;
        check(dd_expr_scaled(shape.get(), amp, &sx), "s expression");
        const Expr s_expr(sx);
        double s_value = 0.0;
        check(dd_expr_eval(s_expr.get(), &p, &s_value), "s expression");
        dd_perturbation r{};
        check(dd_perturbation_residual(c0, e1, e2, m, s_expr.get(), &p, k2, &r), "perturbation");
        double cond[2];
        check(dd_smallness(e1, e2, s_value, m, cond), "smallness");
        const double measured = spinor_norm(r.measured);
        const double predicted = spinor_norm(r.predicted);
        const double ratio = predicted > 0.0 ? measured / predicted : std::nan("");
        if (predicted > 0.0 && cond[0] <= 1e-2 && cond[1] <= 1e-2 && !(std::abs(ratio - 1.0) <= tol))
          all_pass = false;
        csv.row({num(e1), num(e2), num(amp), num(measured), num(predicted), num(ratio),
                 num(cond[0]), num(cond[1])});
      }
  csv.flush(s.out);
  return all_pass ? kExitOk : kExitTolerance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification sweeps for degenerate solutions of the Dirac equation"};
  app.require_subcommand(1);
  app.allow_config_extras(false);
  app.set_config("--config", "", "key=value configuration file")->envname(kConfigEnv);
  // Keep unquoted values such as "t*z + x^2" whole; lists use [a; b] or repeated keys.
  auto ini = std::make_shared<CLI::ConfigBase>();
  ini->arrayBounds('[', ']');
  ini->arrayDelimiter(';');
  app.config_formatter(ini);

  Settings s;
  app.add_option("--xi", s.xi, "Spinor angle xi (radians)");
  auto* mass_opt = app.add_option("--mass", s.mass, "Particle mass");
  app.add_option("--check-mass", s.check_mass, "Mass used when evaluating the residual");
  app.add_option("--f-expr", s.f_expr, "Phase function f(t,x,y,z)");
  app.add_option("--g-expr", s.g_expr, "Free function g(t,x,y,z)");
  app.add_option("--s-expr", s.s_expr, "Shift function s(t,x,y,z)");
  app.add_option("--grid", s.grid, "Grid axis o:h:n, optionally prefixed t=, x=, y= or z=");
  app.add_option("--tol", s.tol, "Pass tolerance");
  app.add_option("--fd-tol", s.fd_tol, "Pass tolerance for finite-difference rows");
  app.add_option("--fd-step", s.fd_step, "Finite-difference step");
  app.add_option("--seed", s.seed, "Seed for random sample points");
  app.add_option("--points", s.points, "Random points per spinor");
  app.add_option("--out", s.out, "Output CSV path (default stdout)");
  app.add_option("--units", s.units, "Unit system")->check(CLI::IsMember({"natural", "si"}));
  app.add_flag("--maxwell", s.maxwell, "Append Maxwell residual columns");
  app.add_option("--kappa2-sign", s.kappa2_sign, "Sign of the y-shift in the perturbed potential")
      ->check(CLI::IsMember({"+", "-"}));
  app.add_option("--charge", s.charge, "Particle charge q");
  app.add_option("--wave-k", s.wave_k, "Plane-wave wavenumber");
  app.add_option("--wave-e1", s.wave_e1, "Amplitude of the x polarization");
  app.add_option("--wave-d1", s.wave_d1, "Phase of the x polarization");
  app.add_option("--wave-e2", s.wave_e2, "Amplitude of the z polarization");
  app.add_option("--wave-d2", s.wave_d2, "Phase of the z polarization");
  app.add_option("--width", s.width, "Barrier width (default z0)");
  app.add_option("--p-grid", s.p_grid, "Momentum grid in units of mc, o:h:n");
  app.add_option("--preset", s.preset, "Named preset")->check(CLI::IsMember({"", "electron"}));
  app.add_option("--e1-grid", s.e1_grid, "Helicity imbalance values")->delimiter(',');
  app.add_option("--e2-grid", s.e2_grid, "Energy detuning values")->delimiter(',');
  app.add_option("--s-amp", s.s_amp, "Amplitudes of s")->delimiter(',');
  app.add_option("--point", s.point, "Evaluation point t:x:y:z");

  auto* verify = app.add_subcommand("verify", "Dirac residuals over the built-in families");
  auto* fields = app.add_subcommand("fields", "Electromagnetic fields over a grid");
  auto* wave = app.add_subcommand("wave", "Fields of the plane-wave preset");
  auto* transmit = app.add_subcommand("transmit", "Barrier transmittance versus momentum");
  auto* perturb = app.add_subcommand("perturb", "Nearly degenerate perturbation residuals");
  for (auto* sub : {verify, fields, wave, transmit, perturb}) sub->fallthrough();

  if (const char* env = std::getenv(kConfigEnv); env != nullptr && *env != '\0') {
    if (!std::ifstream(env)) {
      std::cerr << "dirac-degen: config file '" << env << "' from " << kConfigEnv
                << " is not readable\n";
      return kExitConfig;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "dirac-degen: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (s.preset == "electron") s.units = "si";
    if (*verify) {
      s.command = "verify";
      return cmd_verify(s);
    }
    if (*fields) {
      s.command = "fields";
      return cmd_fields(s);
    }
    if (*wave) {
      s.command = "wave";
      return cmd_wave(s);
    }
    if (*transmit) {
      s.command = "transmit";
      return cmd_transmit(s, mass_opt->count() > 0);
    }
    s.command = "perturb";
    return cmd_perturb(s);
  } catch (const ConfigError& e) {
    std::cerr << "dirac-degen: " << e.what() << '\n';
    return kExitConfig;
  }
}
