#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "sseq/decalage.hpp"

namespace sseq {

/// Thrown by the loaders; what() starts with a JSON-pointer-style location
/// ("/d1/1,0: ...") so callers can surface where the document went wrong.
struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ModelKind { Filtered, Double, CosimplicialAbelian, Cosimplicial };

struct Model {
    ModelKind kind;
    std::optional<FilteredComplex> filtered;
    std::optional<DoubleComplex> double_cx;
    std::optional<CosimplicialAbGroup> cos_ab;
    std::optional<CosimplicialComplex> cos_cx;
};

/// Document format (versioned, "schema": 1 required): a "type" tag in
/// {"filtered_complex","double_complex","cosimplicial_abelian",
/// "cosimplicial_complex"}; matrices are row-major arrays of decimal integer
/// strings; tables are keyed by comma-joined decimal indices ("a,b", "n,i");
/// missing entries mean zero. Validation failures throw ModelError.
Model parse_model(const nlohmann::json& doc);
Model load_model(const std::string& path);

nlohmann::json model_json(const FilteredComplex& f);
nlohmann::json model_json(const DoubleComplex& k);
nlohmann::json model_json(const CosimplicialAbGroup& c);
nlohmann::json model_json(const CosimplicialComplex& c);

/// Flat page listing: one row per nonzero entry, ordered by (r, p, q).
/// `stable` marks rows at or past the stabilization index of their total
/// degree. In the BK convention q is negated (total degree is p + q_CE).
struct PageTable {
    Convention convention = Convention::CE;
    struct Row {
        int r, p, q;
        InvariantFactors entry;
        int d_rank;
        bool stable;
    };
    std::vector<Row> rows;
};

PageTable make_page_table(const FilteredComplex& f, int r_max, Convention conv);
std::string render_tsv(const PageTable& t);
nlohmann::json render_json(const PageTable& t);

nlohmann::json report_json(const ComparisonReport& rep);

}  // namespace sseq
