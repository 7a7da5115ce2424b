#include "sextic/report.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sextic {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json int_json(const Int& n) { return to_longlong(n); }

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json chow_terms(const ChowClass& x) {
    ordered_json terms = ordered_json::array();
    for (const auto& m : ChowClass::basis(x.variety())) {
        const Int& c = x.coeff(m);
        if (c == 0) continue;
        terms.push_back({{"monomial", monomial_name(x.variety(), m)}, {"coeff", int_json(c)}});
    }
    return terms;
}

ordered_json status_json(const Status& s) {
    ordered_json j;
    j["status"] = std::string(resolution_name(s.kind));
    if (!s.witness.empty()) j["witness"] = s.witness;
    if (!s.detail.empty()) j["detail"] = s.detail;
    if (!s.rule_id.empty()) j["rule"] = s.rule_id;
    if (!s.citation.empty()) j["citation"] = s.citation;
    return j;
}

std::string status_main_cell(const Status& s) {
    std::string cell{resolution_name(s.kind)};
    if (!s.witness.empty()) cell += ": " + s.witness;
    if (!s.detail.empty()) cell += (s.witness.empty() ? ": " : "; ") + s.detail;
    return cell;
}

std::string status_citation_cell(const Status& s) {
    if (s.rule_id.empty()) return "";
    return s.rule_id + ": " + s.citation;
}

// Minimal table writer shared by the csv and markdown renderings.
struct TextTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string csv() const {
        std::ostringstream os;
        auto cell = [](const std::string& s) {
            if (s.find_first_of(",\"\n") == std::string::npos) return s;
            std::string q = "\"";
            for (char ch : s) {
                if (ch == '"') q += '"';
                q += ch;
            }
            q += '"';
            return q;
        };
        auto line = [&](const std::vector<std::string>& r) {
            for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << cell(r[i]);
            os << "\n";
        };
        line(header);
        for (const auto& r : rows) line(r);
        return os.str();
    }

    std::string markdown() const {
        std::ostringstream os;
        auto cell = [](const std::string& s) {
            std::string out;
            for (char ch : s) {
                if (ch == '|') out += '\\';
                out += ch;
            }
            return out;
        };
        auto line = [&](const std::vector<std::string>& r) {
            os << "|";
            for (const auto& c : r) os << " " << cell(c) << " |";
            os << "\n";
        };
        line(header);
        os << "|";
        for (std::size_t i = 0; i < header.size(); ++i) os << " --- |";
        os << "\n";
        for (const auto& r : rows) line(r);
        return os.str();
    }
};

std::string pair_cell(long long a, long long b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string triple_cell(long long a, long long b, long long c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::string render_text_or_json(const TextTable& t, const ordered_json& j, Format f) {
    switch (f) {
        case Format::Json: return dump(j);
        case Format::Csv: return t.csv();
        case Format::Markdown: return t.markdown();
        default: throw std::invalid_argument("table format must be json, csv or markdown");
    }
}

}  // namespace

Format parse_format(std::string_view s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "markdown") return Format::Markdown;
    if (s == "svg") return Format::Svg;
    if (s == "ascii") return Format::Ascii;
    throw std::invalid_argument("unknown format: " + std::string(s));
}

std::string_view format_name(Format f) {
    switch (f) {
        case Format::Json: return "json";
        case Format::Csv: return "csv";
        case Format::Markdown: return "markdown";
        case Format::Svg: return "svg";
        case Format::Ascii: return "ascii";
    }
    return "?";
}

std::string monomial_name(Variety v, Monomial m) {
    if (m.e1 == 0 && m.e2 == 0) return "1";
    std::string out;
    for (int which = 0; which < 2; ++which) {
        const int e = which == 0 ? m.e1 : m.e2;
        if (e == 0) continue;
        if (!out.empty()) out += " ";
        out += std::string(generator_name(v, which));
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string chow_to_string(const ChowClass& x) {
    std::string out;
    for (const auto& m : ChowClass::basis(x.variety())) {
        const Int& c = x.coeff(m);
        if (c == 0) continue;
        const Int mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        const std::string name = monomial_name(x.variety(), m);
        if (mag != 1 || name == "1") {
            out += mag.str();
            if (name != "1") out += " ";
        }
        if (name != "1") out += name;
    }
    return out.empty() ? "0" : out;
}

std::string to_json(const ChowClass& x) {
    ordered_json j;
    j["variety"] = std::string(variety_name(x.variety()));
    j["terms"] = chow_terms(x);
    return dump(j);
}

std::string chow_result_json(const ChowClass& x) {
    ordered_json j;
    j["variety"] = std::string(variety_name(x.variety()));
    j["terms"] = chow_terms(x);
    if (x.is_homogeneous(dimension(x.variety())) && !x.is_zero())
        j["degree"] = int_json(x.degree());
    return dump(j);
}

std::string to_json(const CohomTable& t) {
    ordered_json j;
    j["variety"] = std::string(variety_name(t.variety));
    j["bundle"] = {t.a1, t.a2};
    ordered_json h = ordered_json::array();
    for (const auto& hi : t.h) h.push_back(int_json(hi));
    j["h"] = h;
    return dump(j);
}

std::string to_json(const Rank2Chern& x) {
    ordered_json j;
    j["variety"] = std::string(variety_name(x.variety()));
    j["c1"] = {x.c1.a1, x.c1.a2};
    ordered_json c2 = ordered_json::object();
    for (const auto& m : ChowClass::basis(x.variety())) {
        const Int& c = x.c2.coeff(m);
        if (c != 0) c2[monomial_name(x.variety(), m)] = int_json(c);
    }
    j["c2"] = c2;
    return dump(j);
}

std::string to_json(const LineBundleReport& r) {
    ordered_json j;
    j["variety"] = std::string(variety_name(r.variety));
    j["bundle"] = {r.a1, r.a2};
    j["acm"] = r.is_acm;
    j["initial_twist"] = r.initial_twist;
    j["initialized"] = r.is_initialized;
    j["ulrich"] = r.is_ulrich;
    return dump(j);
}

std::string render_cohom(Variety v, long long a1, long long a2,
                         const std::vector<long long>& twists, Format f) {
    const bool twisted = !twists.empty();
    const std::vector<long long> ts = twisted ? twists : std::vector<long long>{0};

    ordered_json rows = ordered_json::array();
    TextTable table;
    table.header = {"variety", "a1", "a2"};
    if (twisted) table.header.insert(table.header.begin(), "twist");
    for (int i = 0; i <= dimension(v); ++i) table.header.push_back("h" + std::to_string(i));
    table.header.push_back("euler");

    for (long long t : ts) {
        const CohomTable ct = cohom_line(v, a1 + t, a2 + t);
        ordered_json j;
        if (twisted) j["twist"] = t;
        j["variety"] = std::string(variety_name(v));
        j["bundle"] = {ct.a1, ct.a2};
        ordered_json h = ordered_json::array();
        for (const auto& hi : ct.h) h.push_back(int_json(hi));
        j["h"] = h;
        rows.push_back(j);

        std::vector<std::string> cells;
        if (twisted) cells.push_back(std::to_string(t));
        cells.push_back(std::string(variety_name(v)));
        cells.push_back(std::to_string(ct.a1));
        cells.push_back(std::to_string(ct.a2));
        for (const auto& hi : ct.h) cells.push_back(hi.str());
        cells.push_back(ct.euler().str());
        table.rows.push_back(std::move(cells));
    }

    if (f == Format::Json) {
        if (!twisted) return dump(rows.front());
        return dump(rows);
    }
    return render_text_or_json(table, rows, f);
}

TableKind parse_table_kind(std::string_view s) {
    if (s == "section4") return TableKind::Section4;
    if (s == "intermediateF") return TableKind::IntermediateF;
    if (s == "intermediatePhi") return TableKind::IntermediatePhi;
    if (s == "ulrichF") return TableKind::UlrichF;
    if (s == "embeddings") return TableKind::Embeddings;
    if (s == "theoremB-F") return TableKind::SummaryF;
    if (s == "theoremB-Phi") return TableKind::SummaryPhi;
    throw std::invalid_argument("unknown table: " + std::string(s));
}

std::string_view table_kind_name(TableKind k) {
    switch (k) {
        case TableKind::Section4: return "section4";
        case TableKind::IntermediateF: return "intermediateF";
        case TableKind::IntermediatePhi: return "intermediatePhi";
        case TableKind::UlrichF: return "ulrichF";
        case TableKind::Embeddings: return "embeddings";
        case TableKind::SummaryF: return "theoremB-F";
        case TableKind::SummaryPhi: return "theoremB-Phi";
    }
    return "?";
}

namespace {

std::string render_section4(Format f) {
    ordered_json rows = ordered_json::array();
    TextTable table;
    table.header = {"(a1,a2)", "(d1,d2)", "e", "h.c2", "c1.c2", "(b1,b2)",
                    "E",       "status",  "citation"};
    for (const auto& row : divisorial_case_table()) {
        ordered_json j;
        j["alpha"] = {row.alpha.first, row.alpha.second};
        j["delta"] = {row.delta.first, row.delta.second};
        j["e"] = row.e;
        j["hc2"] = int_json(row.hc2);
        j["c1c2"] = int_json(row.c1c2);
        j["beta"] = {row.beta.first, row.beta.second};
        j["E"] = row.e_class.is_zero() ? "empty" : chow_to_string(row.e_class);
        j.update(status_json(row.status));
        rows.push_back(j);

        table.rows.push_back({pair_cell(row.alpha.first, row.alpha.second),
                              pair_cell(row.delta.first, row.delta.second),
                              std::to_string(row.e), row.hc2.str(), row.c1c2.str(),
                              pair_cell(row.beta.first, row.beta.second),
                              row.e_class.is_zero() ? "empty" : chow_to_string(row.e_class),
                              status_main_cell(row.status), status_citation_cell(row.status)});
    }
    ordered_json j{{"table", "section4"}, {"rows", rows}};
    return render_text_or_json(table, j, f);
}

std::string render_intermediate_f(Format f) {
    ordered_json rows = ordered_json::array();
    TextTable table;
    table.header = {"case", "(a1,a2)", "(b1,b2)", "deg(E)", "p_a(E)",
                    "dual-twist", "status", "citation"};
    for (const auto& row : intermediate_table_f()) {
        ordered_json j;
        j["case"] = std::string(1, row.label);
        j["alpha"] = {row.alpha.first, row.alpha.second};
        j["beta"] = {row.beta.first, row.beta.second};
        j["deg"] = int_json(row.degree);
        j["genus"] = int_json(row.genus);
        j["dual_twist"] = {{"alpha", {row.dual_alpha.first, row.dual_alpha.second}},
                           {"beta", {row.dual_beta.first, row.dual_beta.second}}};
        j.update(status_json(row.status));
        rows.push_back(j);

        table.rows.push_back(
            {std::string(1, row.label), pair_cell(row.alpha.first, row.alpha.second),
             pair_cell(row.beta.first, row.beta.second), row.degree.str(), row.genus.str(),
             "alpha'=" + pair_cell(row.dual_alpha.first, row.dual_alpha.second) +
                 " beta'=" + pair_cell(row.dual_beta.first, row.dual_beta.second),
             status_main_cell(row.status), status_citation_cell(row.status)});
    }
    ordered_json j{{"table", "intermediateF"}, {"rows", rows}};
    return render_text_or_json(table, j, f);
}

std::string render_intermediate_phi(Format f) {
    ordered_json rows = ordered_json::array();
    TextTable table;
    table.header = {"case", "(a1,a2)", "(m1,m2,m3)", "restricts-to", "deg",
                    "dual-twist", "status", "citation"};
    for (const auto& row : classify_phi()) {
        ordered_json j;
        j["case"] = row.label;
        j["alpha"] = {row.alpha.first, row.alpha.second};
        j["mu"] = {row.mu[0], row.mu[1], row.mu[2]};
        j["restricted_beta"] = {row.restricted_beta.first, row.restricted_beta.second};
        j["deg"] = int_json(row.degree);
        if (row.dual_twist_mu)
            j["dual_twist_mu"] = {(*row.dual_twist_mu)[0], (*row.dual_twist_mu)[1],
                                  (*row.dual_twist_mu)[2]};
        j.update(status_json(row.status));
        rows.push_back(j);

        table.rows.push_back(
            {row.label.empty() ? "-" : row.label, pair_cell(row.alpha.first, row.alpha.second),
             triple_cell(row.mu[0], row.mu[1], row.mu[2]),
             pair_cell(row.restricted_beta.first, row.restricted_beta.second),
             row.degree.str(),
             row.dual_twist_mu ? triple_cell((*row.dual_twist_mu)[0], (*row.dual_twist_mu)[1],
                                             (*row.dual_twist_mu)[2])
                               : "-",
             status_main_cell(row.status), status_citation_cell(row.status)});
    }
    ordered_json j{{"table", "intermediatePhi"}, {"rows", rows}};
    return render_text_or_json(table, j, f);
}

std::string render_ulrich_f(Format f) {
    ordered_json rows = ordered_json::array();
    TextTable table;
    table.header = {"(b1,b2)", "c2", "witnesses"};
    for (const auto& entry : ulrich_beta_f()) {
        const ChowClass c2 = class_from_beta(entry.beta.first, entry.beta.second);
        ordered_json j;
        j["beta"] = {entry.beta.first, entry.beta.second};
        j["c2"] = chow_to_string(c2);
        j["witnesses"] = entry.witnesses;
        rows.push_back(j);
        table.rows.push_back({pair_cell(entry.beta.first, entry.beta.second),
                              chow_to_string(c2), join(entry.witnesses, "; ")});
    }
    ordered_json j{{"table", "ulrichF"}, {"rows", rows}};
    return render_text_or_json(table, j, f);
}

std::string render_embeddings(Format f) {
    ordered_json rows = ordered_json::array();
    TextTable table;
    table.header = {"surface", "(a1,a2)", "(b1,b2)", "(m1,m2,m3)", "status", "citation"};
    for (Surface s : {Surface::F1, Surface::Q}) {
        for (const auto& cand : embedding_candidates(s)) {
            const std::string surf = s == Surface::F1 ? "F1" : "Q";
            ordered_json j;
            j["surface"] = surf;
            j["a"] = {cand.a.first, cand.a.second};
            j["b"] = {cand.b.first, cand.b.second};
            j["mu"] = {cand.mu[0], cand.mu[1], cand.mu[2]};
            j.update(status_json(cand.status));
            rows.push_back(j);
            table.rows.push_back({surf, pair_cell(cand.a.first, cand.a.second),
                                  pair_cell(cand.b.first, cand.b.second),
                                  triple_cell(cand.mu[0], cand.mu[1], cand.mu[2]),
                                  status_main_cell(cand.status),
                                  status_citation_cell(cand.status)});
        }
    }
    ordered_json j{{"table", "embeddings"}, {"rows", rows}};
    return render_text_or_json(table, j, f);
}

std::string render_summary(Variety v, Format f) {
    ordered_json rows = ordered_json::array();
    TextTable table;
    table.header = {"(a1,a2)", "c2", "zero locus", "witnesses", "ulrich"};
    for (const auto& entry : classification_summary(v)) {
        for (const auto& cls : entry.classes) {
            ordered_json j;
            j["alpha"] = {entry.alpha.first, entry.alpha.second};
            j["c2"] = chow_to_string(cls.c2);
            j["zero_locus"] = cls.zero_locus;
            j["witnesses"] = cls.witnesses;
            j["ulrich"] = entry.ulrich;
            rows.push_back(j);
            table.rows.push_back({pair_cell(entry.alpha.first, entry.alpha.second),
                                  chow_to_string(cls.c2), cls.zero_locus,
                                  join(cls.witnesses, "; "), entry.ulrich ? "yes" : "no"});
        }
    }
    ordered_json j{{"table", std::string(table_kind_name(v == Variety::F ? TableKind::SummaryF
                                                                         : TableKind::SummaryPhi))},
                   {"rows", rows}};
    return render_text_or_json(table, j, f);
}

}  // namespace

std::string render_table(TableKind k, Format f) {
    switch (k) {
        case TableKind::Section4: return render_section4(f);
        case TableKind::IntermediateF: return render_intermediate_f(f);
        case TableKind::IntermediatePhi: return render_intermediate_phi(f);
        case TableKind::UlrichF: return render_ulrich_f(f);
        case TableKind::Embeddings: return render_embeddings(f);
        case TableKind::SummaryF: return render_summary(Variety::F, f);
        case TableKind::SummaryPhi: return render_summary(Variety::Phi, f);
    }
    throw std::invalid_argument("render_table: unknown table");
}

}  // namespace sextic
