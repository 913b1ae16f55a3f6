#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "groupwidth/complex.hpp"
#include "groupwidth/morse.hpp"
#include "groupwidth/search.hpp"

namespace gw {

/**
 * SCX documents: JSON text of the form
 *
 *   {"format":"scx-1","vertex_count":N,"maximal_simplices":[[...],...],
 *    "labels":[l_0,...,l_{N-1}],            (optional)
 *    "family":{"kind":"torus","dim":2,"res":4}}   (optional)
 *
 * "family" records how a generated complex was built so that grid-based
 * labelings (tent) can be reconstructed from the file; readers that do not
 * know it ignore it. Labels are checked against the complex on load.
 */
struct ScxDocument {
    SimplicialComplex complex;
    std::optional<MorseLabeling> labels;
    nlohmann::json family;  ///< null when absent
};

/// Throws Error(BadFormat) for malformed documents, the complex_core errors
/// for bad simplices and Error(InvalidLabeling) for labels that break the
/// morse constraint.
ScxDocument parse_scx(const std::string& text);
std::string dump_scx(const ScxDocument& doc);

ScxDocument read_scx(const std::filesystem::path& path);
void write_scx(const std::filesystem::path& path, const ScxDocument& doc);

/// Message listing (the first few of) the simplices a labeling breaks.
std::string describe_violations(const std::vector<Simplex>& violations);

/// Tent labeling for a recorded family: torus and circle families use the
/// first grid axis; a product uses the pullback of its first factor's tent.
/// Returns nullopt for families without a tent.
std::optional<MorseLabeling> family_tent(const nlohmann::json& family);

nlohmann::json report_json(const WidthReport& report);
nlohmann::json search_json(const SearchResult& result, const FieldSpec& field, const std::string& mode);

}  // namespace gw
