#include "bfh/format.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

namespace bfh {

ParseError::ParseError(std::size_t line, std::size_t col, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + message),
      line_(line),
      col_(col) {}

std::string MatrixDocument::metadata_value(const std::string& key) const {
    for (const auto& [k, v] : metadata)
        if (k == key) return v;
    return "";
}

bool MatrixDocument::is_partition() const { return metadata_value("kind") == "partition"; }

BFHypergraph MatrixDocument::to_hypergraph() const {
    if (kind == Kind::crisp)
        throw std::invalid_argument("document holds a crisp matrix, not a bipolar one");
    return BFHypergraph::from_incidence(row_labels, column_labels, cells);
}

CrispHypergraph MatrixDocument::to_crisp() const {
    if (kind != Kind::crisp)
        throw std::invalid_argument("document holds a bipolar matrix, not a crisp one");
    std::vector<std::pair<std::string, std::vector<VertexId>>> edges;
    for (std::size_t j = 0; j < column_labels.size(); ++j) {
        std::vector<VertexId> members;
        for (std::size_t i = 0; i < row_labels.size(); ++i)
            if (cells[i][j].p == 1.0) members.push_back(row_labels[i]);
        if (members.empty())
            throw std::invalid_argument("crisp edge '" + column_labels[j] + "' is empty");
        edges.emplace_back(column_labels[j], std::move(members));
    }
    return CrispHypergraph(row_labels, std::move(edges));
}

ClassMatrix MatrixDocument::to_class_matrix() const {
    if (kind == Kind::crisp)
        throw std::invalid_argument("document holds a crisp matrix, not a bipolar one");
    ClassMatrix m;
    m.vertices = row_labels;
    for (std::size_t j = 0; j < column_labels.size(); ++j) {
        std::vector<BipolarValue> column;
        column.reserve(row_labels.size());
        for (std::size_t i = 0; i < row_labels.size(); ++i) column.push_back(cells[i][j]);
        m.classes.emplace_back(column_labels[j], std::move(column));
    }
    return m;
}

namespace {

struct Token {
    std::string text;
    std::size_t col;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (line[i] == '(') {
            // a cell token runs to its closing parenthesis
            while (i < line.size() && line[i] != ')') ++i;
            if (i < line.size()) ++i;
        } else {
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
        }
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

// Decimal component with at most six fractional digits.
double parse_component(const std::string& text, std::size_t line, std::size_t col) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
        ++digits;
    }
    if (digits == 0) throw ParseError(line, col, "malformed number '" + text + "'");
    if (i < text.size() && text[i] == '.') {
        ++i;
        std::size_t frac = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
            ++frac;
        }
        if (frac == 0) throw ParseError(line, col, "malformed number '" + text + "'");
        if (frac > 6)
            throw ParseError(line, col,
                             "'" + text + "' has more than 6 decimal digits");
    }
    if (i != text.size()) throw ParseError(line, col, "malformed number '" + text + "'");
    return std::stod(text);
}

BipolarValue parse_bipolar_cell(const std::string& token, std::size_t line,
                                std::size_t col) {
    if (token == "-") return BipolarValue();
    if (token.size() < 2 || token.front() != '(' || token.back() != ')')
        throw ParseError(line, col, "expected cell '(p,n)' or '-', got '" + token + "'");
    std::string inner = token.substr(1, token.size() - 2);
    auto comma = inner.find(',');
    if (comma == std::string::npos)
        throw ParseError(line, col, "cell '" + token + "' is missing a comma");
    auto trim = [](std::string s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.erase(s.begin());
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.pop_back();
        return s;
    };
    std::string p_text = trim(inner.substr(0, comma));
    std::string n_text = trim(inner.substr(comma + 1));
    double p = parse_component(p_text, line, col);
    double n = parse_component(n_text, line, col);
    if (!(p >= 0.0 && p <= 1.0))
        throw ParseError(line, col, "positive degree " + p_text + " outside [0,1]");
    if (!(n >= -1.0 && n <= 0.0))
        throw ParseError(line, col, "negative degree " + n_text + " outside [-1,0]");
    return BipolarValue(p, n);
}

BipolarValue parse_crisp_cell(const std::string& token, std::size_t line,
                              std::size_t col) {
    if (token == "1") return BipolarValue(1.0, 0.0);
    if (token == "0" || token == "-") return BipolarValue();
    throw ParseError(line, col, "expected crisp cell '1', '0' or '-', got '" + token + "'");
}

}  // namespace

MatrixDocument parse_document(const std::string& text) {
    MatrixDocument doc;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;

    std::vector<std::pair<std::vector<Token>, std::size_t>> rows;
    std::optional<std::pair<std::vector<Token>, std::size_t>> header;
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = line;
        while (!stripped.empty() && std::isspace(static_cast<unsigned char>(stripped.back())))
            stripped.pop_back();
        if (stripped.empty()) continue;
        auto first = stripped.find_first_not_of(" \t");
        if (stripped[first] == '#') {
            std::string body = stripped.substr(first + 1);
            auto colon = body.find(':');
            if (colon != std::string::npos) {
                auto trim = [](std::string s) {
                    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
                        s.erase(s.begin());
                    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                        s.pop_back();
                    return s;
                };
                doc.metadata.emplace_back(trim(body.substr(0, colon)),
                                          trim(body.substr(colon + 1)));
            }
            continue;
        }
        auto tokens = tokenize(stripped);
        if (!header) {
            header = {tokens, line_no};
        } else {
            rows.push_back({tokens, line_no});
        }
    }
    if (!header) throw ParseError(line_no, 1, "document has no header line");
    if (rows.empty()) throw ParseError(line_no, 1, "document has no vertex rows");

    std::size_t columns = rows.front().first.size();
    if (columns < 2)
        throw ParseError(rows.front().second, 1, "vertex row needs a label and cells");
    std::size_t n_edges = columns - 1;

    auto header_tokens = header->first;
    if (header_tokens.size() == n_edges + 1) header_tokens.erase(header_tokens.begin());
    if (header_tokens.size() != n_edges)
        throw ParseError(header->second, 1,
                         "header has " + std::to_string(header_tokens.size()) +
                             " labels for " + std::to_string(n_edges) + " columns");
    for (const auto& t : header_tokens) doc.column_labels.push_back(t.text);

    std::string declared_kind = doc.metadata_value("kind");
    bool crisp;
    if (declared_kind == "crisp") {
        crisp = true;
    } else if (!declared_kind.empty()) {
        crisp = false;
    } else {
        // no declaration: bipolar when any cell uses the (p,n) syntax
        crisp = true;
        for (const auto& [tokens, ln] : rows)
            for (std::size_t k = 1; k < tokens.size(); ++k)
                if (!tokens[k].text.empty() && tokens[k].text.front() == '(') crisp = false;
    }
    doc.kind = crisp ? MatrixDocument::Kind::crisp : MatrixDocument::Kind::bipolar;

    std::set<std::string> row_seen, col_seen;
    for (const auto& t : header_tokens)
        if (!col_seen.insert(t.text).second)
            throw ParseError(header->second, t.col, "duplicate edge label '" + t.text + "'");

    for (const auto& [tokens, ln] : rows) {
        if (tokens.size() != n_edges + 1)
            throw ParseError(ln, 1,
                             "row has " + std::to_string(tokens.size() - 1) +
                                 " cells, expected " + std::to_string(n_edges));
        if (!row_seen.insert(tokens[0].text).second)
            throw ParseError(ln, tokens[0].col,
                             "duplicate vertex label '" + tokens[0].text + "'");
        doc.row_labels.push_back(tokens[0].text);
        std::vector<BipolarValue> row;
        for (std::size_t k = 1; k < tokens.size(); ++k) {
            row.push_back(crisp ? parse_crisp_cell(tokens[k].text, ln, tokens[k].col)
                                : parse_bipolar_cell(tokens[k].text, ln, tokens[k].col));
        }
        doc.cells.push_back(std::move(row));
    }
    return doc;
}

std::string format_component(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    std::string s(buf);
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s;
}

std::string format_value(const BipolarValue& v) {
    return "(" + format_component(v.p) + "," + format_component(v.n) + ")";
}

namespace {

std::string render_table(const std::vector<std::pair<std::string, std::string>>& metadata,
                         const std::vector<std::string>& column_labels,
                         const std::vector<std::string>& row_labels,
                         const std::vector<std::vector<std::string>>& cell_text) {
    std::size_t cols = column_labels.size() + 1;
    std::vector<std::size_t> widths(cols, 0);
    for (const auto& r : row_labels) widths[0] = std::max(widths[0], r.size());
    for (std::size_t j = 0; j < column_labels.size(); ++j) {
        widths[j + 1] = column_labels[j].size();
        for (const auto& row : cell_text)
            widths[j + 1] = std::max(widths[j + 1], row[j].size());
    }
    std::ostringstream out;
    for (const auto& [k, v] : metadata) out << "# " << k << ": " << v << "\n";
    auto emit_row = [&](const std::string& label, const std::vector<std::string>& cells) {
        std::string line = label;
        line.resize(widths[0], ' ');
        for (std::size_t j = 0; j < cells.size(); ++j) {
            line += "  ";
            std::string cell = cells[j];
            cell.resize(widths[j + 1], ' ');
            line += cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
    };
    emit_row("", column_labels);
    for (std::size_t i = 0; i < row_labels.size(); ++i) emit_row(row_labels[i], cell_text[i]);
    return out.str();
}

}  // namespace

std::string emit(const MatrixDocument& doc) {
    std::vector<std::vector<std::string>> text(doc.row_labels.size());
    for (std::size_t i = 0; i < doc.row_labels.size(); ++i)
        for (std::size_t j = 0; j < doc.column_labels.size(); ++j) {
            const auto& v = doc.cells[i][j];
            if (doc.kind == MatrixDocument::Kind::crisp)
                text[i].push_back(v.p == 1.0 ? "1" : "0");
            else
                text[i].push_back(v.is_zero() ? "-" : format_value(v));
        }
    return render_table(doc.metadata, doc.column_labels, doc.row_labels, text);
}

std::string emit(const BFHypergraph& h,
                 const std::vector<std::pair<std::string, std::string>>& metadata) {
    std::vector<std::string> columns;
    for (const auto& e : h.edges()) columns.push_back(e.name);
    std::vector<std::vector<std::string>> text(h.vertex_count());
    for (std::size_t i = 0; i < h.vertex_count(); ++i)
        for (std::size_t j = 0; j < h.edge_count(); ++j) {
            const auto& v = h.cell(i, j);
            text[i].push_back(v.is_zero() ? "-" : format_value(v));
        }
    return render_table(metadata, columns, h.vertices(), text);
}

std::string emit(const CrispHypergraph& h,
                 const std::vector<std::pair<std::string, std::string>>& metadata) {
    auto meta = metadata;
    bool has_kind = false;
    for (const auto& [k, v] : meta) has_kind |= (k == "kind");
    if (!has_kind) meta.emplace_back("kind", "crisp");
    std::vector<std::string> columns;
    for (const auto& e : h.edges()) columns.push_back(e.name);
    std::vector<std::vector<std::string>> text(h.vertex_count());
    for (std::size_t i = 0; i < h.vertex_count(); ++i)
        for (std::size_t j = 0; j < h.edge_count(); ++j)
            text[i].push_back(h.incident(i, j) ? "1" : "0");
    return render_table(meta, columns, h.vertices(), text);
}

std::string emit(const ClassMatrix& m,
                 const std::vector<std::pair<std::string, std::string>>& metadata) {
    std::vector<std::string> columns;
    for (const auto& [name, cells] : m.classes) columns.push_back(name);
    std::vector<std::vector<std::string>> text(m.vertices.size());
    for (std::size_t i = 0; i < m.vertices.size(); ++i)
        for (const auto& [name, cells] : m.classes)
            text[i].push_back(cells[i].is_zero() ? "-" : format_value(cells[i]));
    return render_table(metadata, columns, m.vertices, text);
}

void Report::add_deviation(const std::string& id, const std::string& text) {
    deviations.emplace_back(id, text);
}

bool Report::has_deviation(const std::string& id) const {
    for (const auto& [k, v] : deviations)
        if (k == id) return true;
    return false;
}

std::string emit(const Report& r) {
    std::ostringstream out;
    for (const auto& s : r.sections) {
        out << "== " << s.title << " ==\n";
        for (const auto& l : s.lines) out << l << "\n";
    }
    if (!r.deviations.empty()) {
        out << "== deviations ==\n";
        for (const auto& [id, text] : r.deviations) out << id << ": " << text << "\n";
    }
    return out.str();
}

}  // namespace bfh
