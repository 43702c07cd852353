#include "parabraid/tables.hpp"

#include <sstream>

#include "parabraid/fock.hpp"

namespace parabraid {

namespace {

std::string csv_cell(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

template <typename... Cells>
void csv_row(std::ostringstream& os, const Cells&... cells) {
    bool first = true;
    auto emit = [&](const std::string& cell) {
        if (!first) os << ',';
        os << csv_cell(cell);
        first = false;
    };
    (emit(cells), ...);
    os << '\n';
}

std::string word_or_unit(const Word& w) { return to_string(w); }

}  // namespace

TableDocument gram_table(int order, int modes, int cutoff) {
    SubmoduleBasis basis = focklike_closure(order, modes, cutoff);
    TableDocument doc;
    std::ostringstream csv;
    csv_row(csv, "degree", "row", "col", "row_word", "col_word", "value");
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t d = 0; d < basis.by_degree.size(); ++d) {
        const auto& block = basis.by_degree[d];
        for (std::size_t a = 0; a < block.size(); ++a) {
            for (std::size_t b = a; b < block.size(); ++b) {
                const int i = block[a];
                const int j = block[b];
                const std::string value = to_string(
                    basis.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                csv_row(csv, std::to_string(d), std::to_string(i), std::to_string(j),
                        word_or_unit(basis.provenance[static_cast<std::size_t>(i)]),
                        word_or_unit(basis.provenance[static_cast<std::size_t>(j)]), value);
                nlohmann::ordered_json row;
                row["degree"] = d;
                row["row"] = i;
                row["col"] = j;
                row["row_word"] = word_or_unit(basis.provenance[static_cast<std::size_t>(i)]);
                row["col_word"] = word_or_unit(basis.provenance[static_cast<std::size_t>(j)]);
                row["value"] = value;
                rows.push_back(std::move(row));
            }
        }
    }
    doc.csv = csv.str();
    doc.json["table"] = "gram";
    doc.json["order"] = order;
    doc.json["modes"] = modes;
    doc.json["cutoff"] = cutoff;
    doc.json["rows"] = std::move(rows);
    return doc;
}

TableDocument matelem_table(int order, int modes, int cutoff) {
    TableDocument doc;
    std::ostringstream csv;
    if (modes == 1) {
        const int n_max = cutoff - 1;
        SingleParabosonProfile profile = single_paraboson_profile(order, n_max);
        csv_row(csv, "n", "norm", "ratio", "ratio_expected", "lowering", "lowering_expected");
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int nn = 0; nn <= n_max; ++nn) {
            const std::string norm = to_string(profile.norms[static_cast<std::size_t>(nn)]);
            const std::string ratio = to_string(profile.ratios[static_cast<std::size_t>(nn)]);
            const std::string ratio_expected =
                std::to_string(nn % 2 == 0 ? nn + order : nn + 1);
            const std::string lowering =
                nn == 0 ? "" : to_string(profile.lowering[static_cast<std::size_t>(nn) - 1]);
            const std::string lowering_expected =
                nn == 0 ? "" : std::to_string(nn % 2 == 0 ? nn : nn - 1 + order);
            csv_row(csv, std::to_string(nn), norm, ratio, ratio_expected, lowering,
                    lowering_expected);
            nlohmann::ordered_json row;
            row["n"] = nn;
            row["norm"] = norm;
            row["ratio"] = ratio;
            row["ratio_expected"] = ratio_expected;
            row["lowering"] = lowering;
            row["lowering_expected"] = lowering_expected;
            rows.push_back(std::move(row));
        }
        doc.json["table"] = "single-paraboson-profile";
        doc.json["order"] = order;
        doc.json["modes"] = modes;
        doc.json["cutoff"] = cutoff;
        doc.json["rows"] = std::move(rows);
    } else {
        SubmoduleBasis basis = focklike_closure(order, modes, cutoff);
        MatrixElementTables tables = matrix_elements(basis);
        csv_row(csv, "record", "mode", "sign", "from", "to", "word", "value");
        nlohmann::ordered_json norms = nlohmann::ordered_json::array();
        for (int j = 0; j < basis.dim(); ++j) {
            const std::string value = to_string(tables.ortho_norms[static_cast<std::size_t>(j)]);
            csv_row(csv, "norm", "", "", std::to_string(j), std::to_string(j),
                    word_or_unit(basis.provenance[static_cast<std::size_t>(j)]), value);
            nlohmann::ordered_json row;
            row["index"] = j;
            row["word"] = word_or_unit(basis.provenance[static_cast<std::size_t>(j)]);
            row["norm"] = value;
            norms.push_back(std::move(row));
        }
        nlohmann::ordered_json elements = nlohmann::ordered_json::array();
        for (const auto& e : tables.entries) {
            const std::string sign = e.sign == Sign::plus ? "+" : "-";
            csv_row(csv, "element", std::to_string(e.mode), sign, std::to_string(e.from),
                    std::to_string(e.to), "", to_string(e.value));
            nlohmann::ordered_json row;
            row["mode"] = e.mode;
            row["sign"] = sign;
            row["from"] = e.from;
            row["to"] = e.to;
            row["value"] = to_string(e.value);
            elements.push_back(std::move(row));
        }
        doc.json["table"] = "matrix-elements";
        doc.json["order"] = order;
        doc.json["modes"] = modes;
        doc.json["cutoff"] = cutoff;
        doc.json["norms"] = std::move(norms);
        doc.json["elements"] = std::move(elements);
    }
    doc.csv = csv.str();
    return doc;
}

TableDocument dims_table(int order, int modes, int cutoff) {
    SubmoduleBasis basis = focklike_closure(order, modes, cutoff);
    DimensionTable table = dimension_table(basis);
    TableDocument doc;
    std::ostringstream csv;
    csv_row(csv, "degree", "submodule_dim", "full_dim");
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int d = 0; d <= table.cutoff; ++d) {
        csv_row(csv, std::to_string(d),
                std::to_string(table.submodule_dims[static_cast<std::size_t>(d)]),
                std::to_string(table.full_dims[static_cast<std::size_t>(d)]));
        nlohmann::ordered_json row;
        row["degree"] = d;
        row["submodule_dim"] = table.submodule_dims[static_cast<std::size_t>(d)];
        row["full_dim"] = table.full_dims[static_cast<std::size_t>(d)];
        rows.push_back(std::move(row));
    }
    doc.csv = csv.str();
    doc.json["table"] = "dimensions";
    doc.json["order"] = order;
    doc.json["modes"] = modes;
    doc.json["cutoff"] = cutoff;
    doc.json["rows"] = std::move(rows);
    return doc;
}

}  // namespace parabraid
