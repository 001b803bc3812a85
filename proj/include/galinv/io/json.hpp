#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "galinv/calculus/plane_wave.hpp"
#include "galinv/calculus/power.hpp"
#include "galinv/coupling/coupling.hpp"
#include "galinv/engine/cascade.hpp"
#include "galinv/engine/family.hpp"

namespace galinv::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "galinv/1";

/// Rationals are strings ("-3/2"); complex entries are ["re", "im"].
Json to_json(const Rational& q);
Json to_json(const ComplexRational& z);
/// Array of rows.
Json to_json(const MatrixCR& m);
/// {ncomp, terms: [{dt, dx: [b1, b2, b3], matrix}]} in canonical term order.
Json to_json(const DiffOp& op);
/// {dim, terms: [{word: [...], matrix}]}.
Json to_json(const NCExpr& e);

Rational rational_from_json(const Json& j);
ComplexRational complex_from_json(const Json& j);
MatrixCR matrix_from_json(const Json& j);
/// Throws std::invalid_argument on malformed input.
DiffOp diffop_from_json(const Json& j);

Json to_json(const FamilyReport& r);
Json to_json(const CascadeReport& r);
Json to_json(const PowerInvarianceReport& r);
Json to_json(const std::vector<DispersionRow>& rows);
Json to_json(const CovarianceReport& r);
Json to_json(const CouplingDerivation& d);

/// {claim, status, witness}.
Json claim(const std::string& text, bool status, Json witness);

/// Writes via a temporary file in the same directory and a rename.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace galinv::io
