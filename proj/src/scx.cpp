#include "groupwidth/scx.hpp"

#include <fstream>
#include <sstream>

#include "groupwidth/error.hpp"
#include "groupwidth/generators.hpp"

namespace gw {

using nlohmann::json;

namespace {

const json& require(const json& doc, const char* key)
{
    if (!doc.contains(key)) throw Error(ErrorCode::BadFormat, std::string("missing field '") + key + "'");
    return doc.at(key);
}

int int_field(const json& obj, const char* key)
{
    const auto& v = require(obj, key);
    if (!v.is_number_integer()) throw Error(ErrorCode::BadFormat, std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

}  // namespace

std::string describe_violations(const std::vector<Simplex>& violations)
{
    constexpr std::size_t kShown = 8;
    std::string out = std::to_string(violations.size()) + " simplices span more than one label:";
    for (std::size_t i = 0; i < violations.size() && i < kShown; ++i) out += " " + json(violations[i]).dump();
    if (violations.size() > kShown) out += " ...";
    return out;
}

ScxDocument parse_scx(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::BadFormat, e.what());
    }
    if (!doc.is_object()) throw Error(ErrorCode::BadFormat, "top level must be an object");
    if (require(doc, "format") != "scx-1") throw Error(ErrorCode::BadFormat, "unsupported format tag");

    const auto& count = require(doc, "vertex_count");
    if (!count.is_number_integer() || count.get<long long>() < 0) throw Error(ErrorCode::BadFormat, "vertex_count must be a non-negative integer");

    const auto& maximal = require(doc, "maximal_simplices");
    if (!maximal.is_array()) throw Error(ErrorCode::BadFormat, "maximal_simplices must be an array");
    std::vector<Simplex> simplices;
    for (const auto& s : maximal) {
        if (!s.is_array()) throw Error(ErrorCode::BadFormat, "each simplex must be an array");
        Simplex t;
        for (const auto& v : s) {
            if (!v.is_number_integer()) throw Error(ErrorCode::BadFormat, "vertex ids must be integers");
            t.push_back(v.get<Vertex>());
        }
        simplices.push_back(std::move(t));
    }

    ScxDocument out;
    out.complex = build_complex(simplices, count.get<std::size_t>());
    if (doc.contains("labels") && !doc.at("labels").is_null()) {
        const auto& labels = doc.at("labels");
        if (!labels.is_array()) throw Error(ErrorCode::BadFormat, "labels must be an array");
        std::vector<int> values;
        for (const auto& l : labels) {
            if (!l.is_number_integer()) throw Error(ErrorCode::BadFormat, "labels must be integers");
            values.push_back(l.get<int>());
        }
        MorseLabeling f(std::move(values));
        const auto violations = validate_labeling(out.complex, f);
        if (!violations.empty()) throw Error(ErrorCode::InvalidLabeling, describe_violations(violations));
        out.labels = std::move(f);
    }
    if (doc.contains("family")) out.family = doc.at("family");
    return out;
}

std::string dump_scx(const ScxDocument& doc)
{
    json out;
    out["format"] = "scx-1";
    out["vertex_count"] = doc.complex.vertex_count();
    json simplices = json::array();
    for (const auto& s : doc.complex.maximal_simplices()) simplices.push_back(s);
    out["maximal_simplices"] = std::move(simplices);
    if (doc.labels) out["labels"] = doc.labels->values();
    if (!doc.family.is_null()) out["family"] = doc.family;
    return out.dump();
}

ScxDocument read_scx(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::BadFormat, "cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_scx(buffer.str());
}

void write_scx(const std::filesystem::path& path, const ScxDocument& doc)
{
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::BadFormat, "cannot write " + path.string());
    out << dump_scx(doc) << '\n';
}

std::optional<MorseLabeling> family_tent(const json& family)
{
    if (!family.is_object() || !family.contains("kind")) return std::nullopt;
    const std::string kind = family.at("kind").get<std::string>();
    if (kind == "circle") return circle_tent_labeling(int_field(family, "m"));
    if (kind == "torus") {
        const int k = int_field(family, "dim");
        const int n = int_field(family, "res");
        if (k < 1 || n < 3) throw Error(ErrorCode::BadFormat, "bad torus family parameters");
        // the tent only depends on the axis-0 coordinate, v mod n
        std::size_t count = 1;
        for (int a = 0; a < k; ++a) count *= static_cast<std::size_t>(n);
        std::vector<int> labels(count);
        for (std::size_t v = 0; v < count; ++v) {
            const int r = static_cast<int>(v % static_cast<std::size_t>(n));
            labels[v] = std::min(r, n - r);
        }
        return MorseLabeling(std::move(labels));
    }
    if (kind == "product") {
        auto first = family_tent(require(family, "first"));
        if (!first) return std::nullopt;
        const int second_count = int_field(family, "second_count");
        std::vector<int> labels;
        for (int a : first->values()) {
            for (int b = 0; b < second_count; ++b) labels.push_back(a);
        }
        return MorseLabeling(std::move(labels));
    }
    return std::nullopt;
}

json report_json(const WidthReport& report)
{
    json out;
    out["field"] = report.field.to_string();
    out["kind"] = "homological_cwr";
    out["max_rank"] = report.max_rank;
    out["qf"] = {{"vertices", report.qf_nodes},
                 {"edges", report.qf_edges},
                 {"betti1", report.qf_betti1},
                 {"class", to_string(report.qf_class)}};
    json slabs = json::array();
    for (const auto& s : report.per_slab) {
        slabs.push_back({{"i", s.slab}, {"component", s.component}, {"size", s.size}, {"rank", s.rank}});
    }
    out["slabs"] = std::move(slabs);
    return out;
}

json search_json(const SearchResult& result, const FieldSpec& field, const std::string& mode)
{
    json out;
    out["field"] = field.to_string();
    out["mode"] = mode;
    out["best_value"] = result.best_value;
    out["exhaustive"] = result.exhaustive;
    out["labelings_visited"] = result.labelings_visited;
    out["seed"] = result.seed;
    out["labels"] = result.certificate.values();
    return out;
}

}  // namespace gw
