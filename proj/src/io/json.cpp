#include "galinv/io/json.hpp"

#include <fstream>
#include <stdexcept>
#include <system_error>

namespace galinv::io {

namespace {

Json vec3(const std::array<Rational, 3>& v) { return Json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])}); }

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json ops(const std::vector<DiffOp>& v) {
  Json out = Json::array();
  for (const auto& op : v) out.push_back(to_json(op));
  return out;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const ComplexRational& z) { return Json::array({to_string(z.re()), to_string(z.im())}); }

Json to_json(const MatrixCR& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const DiffOp& op) {
  Json terms = Json::array();
  for (const auto& [mi, m] : op.terms()) {
    terms.push_back(Json{{"dt", mi.a}, {"dx", Json::array({mi.b[0], mi.b[1], mi.b[2]})}, {"matrix", to_json(m)}});
  }
  return Json{{"ncomp", op.ncomp()}, {"terms", std::move(terms)}};
}

Json to_json(const NCExpr& e) {
  Json terms = Json::array();
  for (const auto& [w, m] : e.terms()) {
    Json word = Json::array();
    for (const auto& s : w) word.push_back(s.name());
    terms.push_back(Json{{"word", std::move(word)}, {"matrix", to_json(m)}});
  }
  return Json{{"dim", e.dim()}, {"terms", std::move(terms)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("rational must be a string or integer");
  return parse_rational(j.get<std::string>());
}

ComplexRational complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("complex entry must be [re, im]");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

MatrixCR matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw std::invalid_argument("matrix must be an array of rows");
  MatrixCR m(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != m.cols()) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = complex_from_json(j[i][c]);
  }
  return m;
}

DiffOp diffop_from_json(const Json& j) {
  try {
    DiffOp op(j.at("ncomp").get<std::size_t>());
    for (const auto& t : j.at("terms")) {
      MultiIndex mi;
      mi.a = t.at("dt").get<int>();
      const Json& dx = t.at("dx");
      if (!dx.is_array() || dx.size() != 3) throw std::invalid_argument("dx must have three entries");
      for (std::size_t k = 0; k < 3; ++k) mi.b[k] = dx[k].get<int>();
      if (mi.a < 0 || mi.b[0] < 0 || mi.b[1] < 0 || mi.b[2] < 0) throw std::invalid_argument("negative exponent");
      op.add(mi, matrix_from_json(t.at("matrix")));
    }
    return op;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed operator: ") + e.what());
  } catch (const DimensionError& e) {
    throw std::invalid_argument(std::string("malformed operator: ") + e.what());
  }
}

Json to_json(const FamilyReport& r) {
  Json contexts = Json::array();
  for (std::size_t k = 0; k < r.context_labels.size(); ++k) {
    contexts.push_back(Json{{"context", r.context_labels[k]}, {"rows", r.rows_per_context[k]}});
  }
  const BoostCalibration& c = r.calibration;
  Json calibration{{"trivial", c.trivial}};
  if (!c.trivial) {
    calibration["candidate"] = c.candidate;
    calibration["trial_ratio"] = to_json(c.trial_ratio);
    calibration["lambda"] = to_json(c.lambda);
    calibration["verified"] = c.verified;
    calibration["constant_block_matches"] = c.constant_block_matches;
  }
  return Json{{"ncomp", r.options.ncomp},
              {"order", r.options.order},
              {"forbid_mixed", r.options.forbid_mixed},
              {"mass", to_json(r.options.mass)},
              {"calibration", std::move(calibration)},
              {"constraints", Json{{"unknowns", r.unknowns},
                                   {"rows", r.constraint_rows},
                                   {"rank", r.rank},
                                   {"per_context", std::move(contexts)}}},
              {"raw_dimension", r.raw_basis.size()},
              {"degenerate_dimension", r.degenerate_basis.size()},
              {"family_dimension", r.dimension()},
              {"family", ops(r.family)},
              {"raw_basis", ops(r.raw_basis)},
              {"degenerate_basis", ops(r.degenerate_basis)}};
}

Json to_json(const CascadeReport& r) {
  Json stages = Json::array();
  for (const auto& s : r.stages) {
    stages.push_back(Json{{"stage", s.name},
                          {"shape", s.shape},
                          {"rows", s.rows},
                          {"dimension", s.dimension},
                          {"shape_dimension", s.shape_dimension},
                          {"exact", s.exact},
                          {"fits_modulo_degenerate", s.fits_modulo_degenerate},
                          {"equal_modulo_degenerate", s.equal_modulo_degenerate},
                          {"printed", s.printed},
                          {"printed_exact", s.printed_exact},
                          {"printed_equal_modulo_degenerate", s.printed_equal_modulo_degenerate}});
  }
  return Json{{"degenerate_dimension", r.degenerate_dimension}, {"stages", std::move(stages)}};
}

Json to_json(const PowerInvarianceReport& r) {
  Json mixed = Json::array();
  for (const auto& mi : r.mixed_terms) mixed.push_back(mi.label());
  return Json{{"N", r.N},
              {"order", r.order},
              {"invariant", r.invariant},
              {"residual_terms", r.residual_terms},
              {"mixed_terms", std::move(mixed)}};
}

Json to_json(const std::vector<DispersionRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"k", vec3(r.k)}, {"omega", to_json(r.omega)}, {"on_shell", r.on_shell}, {"nullity", r.nullity}});
  }
  return out;
}

Json to_json(const CovarianceReport& r) {
  return Json{{"input_solves", r.input_solves},
              {"solves_plus", r.candidate_solves[0]},
              {"solves_minus", r.candidate_solves[1]},
              {"derived_sign", r.derived_sign},
              {"image", Json{{"k", vec3(r.image.k)}, {"omega", to_json(r.image.omega)}, {"spinor", vector_json(r.image.spinor)}}},
              {"image_solves", r.image_solves},
              {"image_on_shell", r.image_on_shell}};
}

Json to_json(const CouplingDerivation& d) {
  return Json{{"mass", to_json(d.mass)},
              {"upper", Json{{"phi", to_json(d.pair.upper.phi)}, {"chi", to_json(d.pair.upper.chi)}}},
              {"lower", Json{{"phi", to_json(d.pair.lower.phi)}, {"chi", to_json(d.pair.lower.chi)}}},
              {"chi_of_phi", to_json(d.chi_of_phi)},
              {"result", to_json(d.result)},
              {"reference", to_json(d.reference)},
              {"spin_term", to_json(d.spin_term)},
              {"matches_reference", d.matches_reference},
              {"free_limit", d.free_limit},
              {"constant_potential_spin_free", d.constant_potential_spin_free},
              {"matches_square", d.matches_square}};
}

Json claim(const std::string& text, bool status, Json witness) {
  return Json{{"claim", text}, {"status", status ? "pass" : "fail"}, {"witness", std::move(witness)}};
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  std::filesystem::create_directories(dir);
  const std::filesystem::path tmp = dir / ("." + path.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot replace " + path.string() + ": " + ec.message());
  }
}

}  // namespace galinv::io
