#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sextic/chern.hpp"
#include "sextic/chow.hpp"
#include "sextic/classify.hpp"
#include "sextic/cohomology.hpp"

namespace sextic {

enum class Format { Json, Csv, Markdown, Svg, Ascii };

Format parse_format(std::string_view s);  // "json" | "csv" | "markdown" | "svg" | "ascii"
std::string_view format_name(Format f);

/// Basis monomial name, e.g. "h1^2 h2" or "eta1 eta2^2"; "1" in degree 0.
std::string monomial_name(Variety v, Monomial m);

/// Human-readable form, e.g. "h2^2 - h1^2"; "0" for the zero class.
std::string chow_to_string(const ChowClass& x);

/// Fixed-schema JSON serializations.
std::string to_json(const ChowClass& x);

/// ChowClass JSON with a degree field appended when the class is of top
/// codimension (the chow CLI output).
std::string chow_result_json(const ChowClass& x);
std::string to_json(const CohomTable& t);
std::string to_json(const Rank2Chern& x);
std::string to_json(const LineBundleReport& r);

/// Cohomology tables, one row per twist (twists empty: the bundle itself).
std::string render_cohom(Variety v, long long a1, long long a2,
                         const std::vector<long long>& twists, Format f);

enum class TableKind {
    Section4,
    IntermediateF,
    IntermediatePhi,
    UlrichF,
    Embeddings,
    SummaryF,
    SummaryPhi,
};

/// CLI spellings: section4, intermediateF, intermediatePhi, ulrichF,
/// embeddings, theoremB-F, theoremB-Phi.
TableKind parse_table_kind(std::string_view s);
std::string_view table_kind_name(TableKind k);

/// Render a classification table as json, csv or markdown.  Column order of
/// the data fields follows the source tables; status and citation columns
/// come last.
std::string render_table(TableKind k, Format f);

}  // namespace sextic
