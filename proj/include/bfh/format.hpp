#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "bfh/crisp.hpp"
#include "bfh/hypergraph.hpp"
#include "bfh/partition.hpp"

namespace bfh {

/// Parse failure with a source position (1-based line and column).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t col, const std::string& message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return col_; }

private:
    std::size_t line_;
    std::size_t col_;
};

/// One incidence table in text form: optional `# key: value` metadata
/// lines, a header of edge labels, and one row per vertex. Bipolar cells
/// are `(p,n)` with at most six decimal digits per component; crisp cells
/// are `1`/`0`; `-` reads as the neutral cell in both kinds.
struct MatrixDocument {
    enum class Kind { bipolar, crisp };

    std::vector<std::pair<std::string, std::string>> metadata;
    Kind kind = Kind::bipolar;
    std::vector<VertexId> row_labels;
    std::vector<std::string> column_labels;
    std::vector<std::vector<BipolarValue>> cells;  // crisp cells as (1,0)/(0,0)

    std::string metadata_value(const std::string& key) const;
    bool is_partition() const;

    BFHypergraph to_hypergraph() const;
    CrispHypergraph to_crisp() const;
    ClassMatrix to_class_matrix() const;
};

MatrixDocument parse_document(const std::string& text);

/// Canonical emit: metadata, then the table with columns padded to their
/// natural width and two-space separation. parse(emit(x)) == x for every
/// structure whose components are exact six-decimal values.
std::string emit(const MatrixDocument& doc);
std::string emit(const BFHypergraph& h,
                 const std::vector<std::pair<std::string, std::string>>& metadata = {});
std::string emit(const CrispHypergraph& h,
                 const std::vector<std::pair<std::string, std::string>>& metadata = {});
std::string emit(const ClassMatrix& m,
                 const std::vector<std::pair<std::string, std::string>>& metadata = {});

/// Minimal-digit decimal form of one membership component (up to six
/// decimals, trailing zeros trimmed).
std::string format_component(double value);
std::string format_value(const BipolarValue& v);

/// Deterministic human-readable analysis output: titled sections plus any
/// data-inconsistency notes the run triggered, keyed DEV-1..DEV-4.
struct Report {
    struct Section {
        std::string title;
        std::vector<std::string> lines;
    };
    std::vector<Section> sections;
    std::vector<std::pair<std::string, std::string>> deviations;

    void add_deviation(const std::string& id, const std::string& text);
    bool has_deviation(const std::string& id) const;
};

std::string emit(const Report& r);

}  // namespace bfh
