#pragma once

#include <filesystem>
#include <iosfwd>

#include "json.hpp"
#include "polyzero/aberth.hpp"
#include "polyzero/certificates.hpp"
#include "polyzero/newton_hadamard.hpp"
#include "polyzero/polynomial.hpp"

namespace polyzero {

// Polynomial wire formats: a JSON array of [re, im] pairs in index order
// 0..n, and a plain-text format with one "re im" line per coefficient.

nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j, bool nondegenerate = false);

void write_polynomial_text(std::ostream& os, const Polynomial& p);
Polynomial read_polynomial_text(std::istream& is, bool nondegenerate = false);

// Dispatches on the file extension: .json or anything else as text.
Polynomial load_polynomial(const std::filesystem::path& path, bool nondegenerate = false);
void save_polynomial(const std::filesystem::path& path, const Polynomial& p);

nlohmann::json polygon_to_json(const NewtonHadamardPolygon& polygon);
nlohmann::json rootset_to_json(const RootSet& roots);
nlohmann::json theorem2_report_to_json(const Theorem2Report& report);
nlohmann::json turan_table_to_json(int m, const std::vector<TuranEstimate>& table);

// Atomic-ish file write: the payload is written in one stream flush.
void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace polyzero
