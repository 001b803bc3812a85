#include "galinv/cli/run.hpp"

#include <sstream>

#include "galinv/calculus/plane_wave.hpp"
#include "galinv/calculus/power.hpp"
#include "galinv/cli/suite.hpp"
#include "galinv/coupling/coupling.hpp"
#include "galinv/engine/cascade.hpp"
#include "galinv/engine/family.hpp"
#include "galinv/io/json.hpp"

namespace galinv {

namespace {

using io::Json;

const char* yes(bool b) { return b ? "yes" : "no"; }

std::string complex_latex(const ComplexRational& z) {
  auto frac = [](const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return std::string(sgn(q) < 0 ? "-" : "") + "\\tfrac{" + mpz_class(abs(q.get_num())).get_str() + "}{" + q.get_den().get_str() + "}";
  };
  if (z.is_zero()) return "0";
  if (sgn(z.im()) == 0) return frac(z.re());
  std::string im = z.im() == 1 ? "i" : z.im() == -1 ? "-i" : frac(z.im()) + "i";
  if (sgn(z.re()) == 0) return im;
  return frac(z.re()) + (sgn(z.im()) > 0 ? "+" : "") + im;
}

std::string matrix_latex(const MatrixCR& m) {
  std::ostringstream os;
  os << "\\begin{pmatrix}";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " & " : "") << complex_latex(m(r, c));
    if (r + 1 < m.rows()) os << " \\\\ ";
  }
  os << "\\end{pmatrix}";
  return os.str();
}

std::string derivative_latex(const MultiIndex& mi) {
  std::string out;
  auto part = [&](const std::string& var, int n) {
    if (n == 0) return;
    out += "\\partial_{" + var + "}";
    if (n > 1) out += "^{" + std::to_string(n) + "}";
  };
  part("t", mi.a);
  for (int j = 0; j < 3; ++j) part(std::to_string(j + 1), mi.b[static_cast<std::size_t>(j)]);
  return out;
}

std::string diffop_latex(const DiffOp& op) {
  if (op.is_zero()) return "0";
  std::string out;
  for (const auto& [mi, m] : op.terms()) {
    out += (out.empty() ? "" : "\n  + ") + matrix_latex(m) + derivative_latex(mi);
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json header(const RunConfig& c) {
  Json config{{"ncomp", c.ncomp}, {"order", c.order}, {"forbid_mixed", c.forbid_mixed}, {"mass", io::to_json(c.mass)}};
  if (c.command == Command::Power) config["N"] = c.N;
  return Json{{"schema", io::kSchema}, {"command", command_name(c.command)}, {"config", std::move(config)}};
}

std::string config_line(const RunConfig& c) {
  std::string s = command_name(c.command) + " ncomp=" + std::to_string(c.ncomp) + " order=" + std::to_string(c.order) +
                  " forbid-mixed=" + yes(c.forbid_mixed) + " mass=" + to_string(c.mass);
  if (c.command == Command::Power) s += " N=" + std::to_string(c.N);
  return s;
}

RunResult run_derive(const RunConfig& c) {
  FamilyOptions opt;
  opt.ncomp = c.ncomp;
  opt.order = c.order;
  opt.forbid_mixed = c.forbid_mixed;
  opt.mass = c.mass;
  const FamilyReport rep = invariant_family(opt);
  const bool with_cascade = c.ncomp == 4 && c.order == 1 && !c.forbid_mixed;
  CascadeReport cascade;
  if (with_cascade) cascade = first_order_cascade(c.mass);

  RunResult out;
  if (!rep.calibration.trivial && !rep.calibration.verified) out.status = kExitInternal;
  if (c.ncomp == 2 && c.order == 1 && rep.dimension() != 0) out.status = kExitMismatch;
  if (with_cascade && !(rep.dimension() == 1 && rep.family[0] == levy_leblond_operator(c.mass))) {
    out.status = kExitMismatch;
  }

  if (c.format == Format::Json) {
    Json j = header(c);
    j["report"] = io::to_json(rep);
    if (with_cascade) j["cascade"] = io::to_json(cascade);
    out.report = dump(j);
  } else if (c.format == Format::Latex) {
    std::ostringstream os;
    os << "% " << config_line(c) << "\n";
    os << "% family dimension: " << rep.dimension() << "\n";
    os << "\\begin{align}\n";
    for (std::size_t k = 0; k < rep.family.size(); ++k) {
      os << "L_{" << k + 1 << "} &= " << diffop_latex(rep.family[k]) << (k + 1 < rep.family.size() ? " \\\\" : "") << "\n";
    }
    os << "\\end{align}\n";
    out.report = os.str();
  } else {
    std::ostringstream os;
    os << config_line(c) << "\n";
    if (!rep.calibration.trivial) {
      os << "boost scale: " << rep.calibration.lambda.to_string() << " (verified " << yes(rep.calibration.verified) << ")\n";
    }
    os << "constraints: unknowns " << rep.unknowns << ", rows " << rep.constraint_rows << ", rank " << rep.rank << "\n";
    os << "raw dimension: " << rep.raw_basis.size() << "\n";
    os << "degenerate dimension: " << rep.degenerate_basis.size() << "\n";
    os << "family dimension: " << rep.dimension() << "\n";
    for (std::size_t k = 0; k < rep.family.size(); ++k) os << "basis " << k + 1 << ": " << to_string(rep.family[k]) << "\n";
    if (with_cascade) {
      os << "cascade:\n";
      for (const auto& st : cascade.stages) {
        os << "  " << st.name << ": " << st.shape << "; dimension " << st.dimension << ", shape " << st.shape_dimension
           << ", printed coefficients agree " << yes(st.printed_equal_modulo_degenerate) << "\n";
      }
    }
    out.report = os.str();
  }
  out.summary = config_line(c) + ": family dimension: " + std::to_string(rep.dimension());
  return out;
}

RunResult run_power(const RunConfig& c) {
  const DiffOp L = levy_leblond_operator(c.mass);
  const DiffOp LN = op_power(L, c.N);
  const GeneratorSet gens = calibrated_representation(4, c.mass).generators;
  const PowerInvarianceReport inv = invariance_of_power(L, c.N, symbolic_boost_context(gens, c.mass));
  const DiffOp S = schrodinger_operator(4, c.mass);
  DiffOp expected = c.N % 2 == 0 ? op_power(S, c.N / 2) : op_compose(L, op_power(S, c.N / 2));
  const bool factor = projectively_equal(LN, expected);
  const std::string factor_name =
      c.N == 2 ? "Schrödinger operator"
               : (c.N % 2 ? "L " : "") + std::string("Schrödinger operator^") + std::to_string(c.N / 2);

  RunResult out;
  if (!inv.invariant || !factor) out.status = kExitMismatch;
  const std::string verdict = (factor ? "equals " : "differs from ") + factor_name + " (projective)";

  if (c.format == Format::Json) {
    Json j = header(c);
    j["expansion"] = io::to_json(LN);
    j["invariance"] = io::to_json(inv);
    j["factorization"] = Json{{"claim", "L^N equals " + factor_name + " (projective)"}, {"holds", factor}};
    out.report = dump(j);
  } else if (c.format == Format::Latex) {
    std::ostringstream os;
    os << "% " << config_line(c) << "\n% " << verdict << "\n";
    os << "\\begin{align}\nL^{" << c.N << "} &= " << diffop_latex(LN) << "\n\\end{align}\n";
    out.report = os.str();
  } else {
    std::ostringstream os;
    os << config_line(c) << "\n";
    os << "L^" << c.N << " = " << to_string(LN) << "\n";
    os << "order: " << inv.order << "\n";
    os << "mixed terms: " << inv.mixed_terms.size();
    for (const auto& mi : inv.mixed_terms) os << " " << mi.label();
    os << "\n";
    os << "invariant under symbolic boost: " << yes(inv.invariant) << " (residual terms " << inv.residual_terms << ")\n";
    os << verdict << "\n";
    out.report = os.str();
  }
  out.summary = config_line(c) + ": " + verdict + ", invariant " + yes(inv.invariant);
  return out;
}

RunResult run_planewave(const RunConfig& c) {
  const DiffOp L = levy_leblond_operator(c.mass);
  std::vector<std::array<Rational, 3>> ks;
  for (int x = -1; x <= 1; ++x) {
    for (int y = -1; y <= 1; ++y) {
      for (int z = -1; z <= 1; ++z) ks.push_back({Rational(x), Rational(y), Rational(z)});
    }
  }
  std::vector<DispersionRow> rows;
  for (const auto& k : ks) {
    const Rational w = free_frequency(k, c.mass);
    for (const auto& r : dispersion_scan(L, c.mass, {k}, {w, w + Rational(1, 2)})) rows.push_back(r);
  }
  bool dispersion_ok = true;
  for (const auto& r : rows) dispersion_ok = dispersion_ok && ((r.nullity != 0) == r.on_shell);

  const GeneratorSet gens = calibrated_representation(4, c.mass).generators;
  GalileiElement g;
  g.R = rotation_from_quaternion(Quaternion{1, 1, 0, 0});
  g.v = {Rational(1, 2), Rational(0), Rational(-1)};
  g.a = {Rational(1), Rational(2), Rational(3)};
  g.b = Rational(1, 3);
  PlaneWave pw;
  pw.mass = c.mass;
  pw.k = {Rational(1), Rational(0), Rational(1)};
  pw.omega = free_frequency(pw.k, c.mass);
  const auto reduction = plane_wave_reduce(L, pw);
  if (reduction.solutions.empty()) {
    RunResult bad;
    bad.status = kExitInternal;
    bad.summary = config_line(c) + ": on-shell plane wave has no spinor solution";
    return bad;
  }
  pw.spinor = reduction.solutions[0];
  const CovarianceReport there = covariance_check(L, pw, g, gens);
  const CovarianceReport back = covariance_check(L, there.image, inverse(g), gens);
  const bool returns = back.image.k == pw.k && back.image.omega == pw.omega;
  const bool covariance_ok = there.input_solves && there.image_solves && there.image_on_shell &&
                             there.derived_sign == kBoostPhaseSign && back.image_solves && returns;

  RunResult out;
  if (!dispersion_ok || !covariance_ok) out.status = kExitMismatch;

  if (c.format == Format::Json) {
    Json j = header(c);
    j["dispersion"] = io::to_json(rows);
    j["covariance"] = Json{{"forward", io::to_json(there)}, {"inverse", io::to_json(back)}, {"returns", returns}};
    out.report = dump(j);
  } else if (c.format == Format::Latex) {
    std::ostringstream os;
    os << "% " << config_line(c) << "\n";
    os << "\\begin{tabular}{rrrrcc}\n$k_1$ & $k_2$ & $k_3$ & $\\omega$ & on shell & nullity \\\\\n\\hline\n";
    for (const auto& r : rows) {
      os << "$" << complex_latex(r.k[0]) << "$ & $" << complex_latex(r.k[1]) << "$ & $" << complex_latex(r.k[2])
         << "$ & $" << complex_latex(r.omega) << "$ & " << yes(r.on_shell) << " & " << r.nullity << " \\\\\n";
    }
    os << "\\end{tabular}\n";
    out.report = os.str();
  } else {
    std::ostringstream os;
    os << to_csv(rows);
    os << "# covariance: input solves " << yes(there.input_solves) << ", image solves " << yes(there.image_solves)
       << ", image on shell " << yes(there.image_on_shell) << ", derived sign " << there.derived_sign
       << ", inverse returns " << yes(returns) << "\n";
    out.report = os.str();
  }
  out.summary = config_line(c) + ": " + std::to_string(rows.size()) + " rows, dispersion " +
                (dispersion_ok ? "consistent" : "inconsistent") + ", covariance " + (covariance_ok ? "holds" : "fails");
  return out;
}

RunResult run_couple(const RunConfig& c) {
  const CouplingDerivation d = derive_pauli_schrodinger(c.mass);
  RunResult out;
  if (!d.matches_reference || !d.free_limit || !d.matches_square) out.status = kExitMismatch;

  if (c.format == Format::Json) {
    Json j = header(c);
    j["derivation"] = io::to_json(d);
    out.report = dump(j);
  } else if (c.format == Format::Latex) {
    std::ostringstream os;
    os << "% " << config_line(c) << "\n";
    os << "\\begin{align}\n";
    os << "0 &= \\left(" << to_latex(d.pair.upper.phi) << "\\right)\\varphi + \\left(" << to_latex(d.pair.upper.chi) << "\\right)\\chi \\\\\n";
    os << "0 &= \\left(" << to_latex(d.pair.lower.phi) << "\\right)\\varphi + \\left(" << to_latex(d.pair.lower.chi) << "\\right)\\chi \\\\\n";
    os << "\\chi &= \\left(" << to_latex(d.chi_of_phi) << "\\right)\\varphi \\\\\n";
    os << "0 &= \\left[" << to_latex(d.result) << "\\right]\\varphi \\\\\n";
    os << "\\text{spin term} &= " << to_latex(d.spin_term) << "\n";
    os << "\\end{align}\n";
    os << "% matches (i d_t - V) - (1/2m)[pi.pi + i sigma.(pi x pi)]: " << yes(d.matches_reference) << "\n";
    out.report = os.str();
  } else {
    std::ostringstream os;
    os << config_line(c) << "\n";
    os << "upper: phi " << to_string(d.pair.upper.phi) << "; chi " << to_string(d.pair.upper.chi) << "\n";
    os << "lower: phi " << to_string(d.pair.lower.phi) << "; chi " << to_string(d.pair.lower.chi) << "\n";
    os << "chi = " << to_string(d.chi_of_phi) << " phi\n";
    os << "result: " << to_string(d.result) << "\n";
    os << "spin term: " << to_string(d.spin_term) << "\n";
    os << "matches reference: " << yes(d.matches_reference) << "\n";
    os << "free limit: " << yes(d.free_limit) << "\n";
    os << "constant potential spin free: " << yes(d.constant_potential_spin_free) << "\n";
    os << "field-free result matches L^2 block: " << yes(d.matches_square) << "\n";
    out.report = os.str();
  }
  out.summary = config_line(c) + ": Pauli-Schrodinger " + (d.matches_reference ? "recovered" : "not recovered");
  return out;
}

RunResult run_prop_suite(const RunConfig& c) {
  const auto results = run_acceptance(SuiteOptions{});
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.pass() ? 1 : 0;

  RunResult out;
  if (passed != results.size()) out.status = kExitMismatch;

  if (c.format == Format::Json) {
    Json j = header(c);
    Json criteria = Json::array();
    for (const auto& r : results) {
      Json checks = Json::array();
      for (const auto& ch : r.checks) checks.push_back(io::claim(ch.claim, ch.pass, ch.witness));
      criteria.push_back(Json{{"id", r.id},
                              {"title", r.title},
                              {"status", r.pass() ? "pass" : "fail"},
                              {"limit_seconds", r.limit},
                              {"within_limit", r.within_limit()},
                              {"checks", std::move(checks)}});
    }
    j["criteria"] = std::move(criteria);
    j["passed"] = passed;
    j["total"] = results.size();
    out.report = dump(j);
  } else {
    const bool tex = c.format == Format::Latex;
    std::ostringstream os;
    os << (tex ? "% " : "") << config_line(c) << "\n";
    if (tex) os << "\\begin{enumerate}\n";
    for (const auto& r : results) {
      os << (tex ? "\\item " : "") << (r.pass() ? "PASS " : "FAIL ") << r.id << " " << r.title
         << (r.within_limit() ? "" : " (time limit exceeded)") << "\n";
      for (const auto& ch : r.checks) {
        if (!tex) os << "    [" << (ch.pass ? "ok" : "FAILED") << "] " << ch.claim << "\n";
      }
    }
    if (tex) os << "\\end{enumerate}\n";
    out.report = os.str();
  }
  std::string timing;
  for (const auto& r : results) timing += (timing.empty() ? "" : "\n") + summary_line(r);
  out.summary = timing + "\n" + std::to_string(passed) + "/" + std::to_string(results.size()) + " criteria pass";
  return out;
}

}  // namespace

Command parse_command(const std::string& s) {
  if (s == "derive") return Command::Derive;
  if (s == "power") return Command::Power;
  if (s == "planewave") return Command::PlaneWave;
  if (s == "couple") return Command::Couple;
  if (s == "prop-suite") return Command::PropSuite;
  throw ConfigError("unknown command '" + s + "'");
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "latex") return Format::Latex;
  if (s == "text") return Format::Text;
  throw ConfigError("unknown format '" + s + "'");
}

Rational parse_mass(const std::string& s) {
  Rational m;
  try {
    m = parse_rational(s);
  } catch (const std::exception&) {
    throw ConfigError("mass '" + s + "' is not a rational number");
  }
  if (sgn(m) <= 0) throw ConfigError("mass must be positive, got " + s);
  return m;
}

void validate(const RunConfig& c) {
  if (c.ncomp != 1 && c.ncomp != 2 && c.ncomp != 4) {
    throw ConfigError("ncomp must be 1, 2 or 4, got " + std::to_string(c.ncomp));
  }
  if (sgn(c.mass) <= 0) throw ConfigError("mass must be positive");
  if (c.command == Command::Derive && (c.order < 1 || c.order > 4)) {
    throw ConfigError("order must be between 1 and 4, got " + std::to_string(c.order));
  }
  if (c.command == Command::Power && (c.N < 1 || c.N > 8)) {
    throw ConfigError("N must be between 1 and 8, got " + std::to_string(c.N));
  }
  if ((c.command == Command::Power || c.command == Command::PlaneWave || c.command == Command::Couple) && c.ncomp != 4) {
    throw ConfigError(command_name(c.command) + " works on the four-component operator; ncomp must be 4");
  }
}

std::string command_name(Command c) {
  switch (c) {
    case Command::Derive: return "derive";
    case Command::Power: return "power";
    case Command::PlaneWave: return "planewave";
    case Command::Couple: return "couple";
    case Command::PropSuite: return "prop-suite";
  }
  return "";
}

std::string extension(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Latex: return "tex";
    case Format::Text: return "txt";
  }
  return "";
}

RunResult run(const RunConfig& c) {
  validate(c);
  switch (c.command) {
    case Command::Derive: return run_derive(c);
    case Command::Power: return run_power(c);
    case Command::PlaneWave: return run_planewave(c);
    case Command::Couple: return run_couple(c);
    case Command::PropSuite: return run_prop_suite(c);
  }
  throw ConfigError("unknown command");
}

}  // namespace galinv
