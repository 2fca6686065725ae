#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dunion/analysis.hpp"
#include "dunion/digraph.hpp"
#include "dunion/factorization.hpp"
#include "dunion/matrix.hpp"
#include "dunion/symbolic.hpp"

namespace dunion::io {

using Json = nlohmann::ordered_json;

// Graph:         {"n": 4, "arcs": [[0,1], ...]}           arcs sorted
// Factorization: {"base": <graph>, "factors": [[[t,h],...], ...]}
// Partition:     {"mode": "in"|"out", "classes": {"<v>": [[[t,h],...], ...]}}
// All parsers throw Error(Parse) on malformed input.

Json graph_to_json(const Digraph& d);
Digraph graph_from_json(const Json& j);

Json factorization_to_json(const Factorization& f);
Factorization factorization_from_json(const Json& j);

Json partition_to_json(const ArcPartition& p);
ArcPartition partition_from_json(const Json& j);

Json report_to_json(const AnalysisReport& r);
std::string report_to_text(const AnalysisReport& r);

Json vertex_map_to_json(const VertexMap& m);

/// Compact one-line serialization followed by a newline.
std::string dump(const Json& j);
/// Parses JSON text, mapping syntax errors to Error(Parse).
Json parse(const std::string& text);

/// "row,col,re,im" header, then entries with |value| > tol sorted by (row, col).
std::string matrix_to_csv(const DenseMatrix& m, double tol = kSupportTolerance);
/// Reads the CSV format back into a rows x cols matrix; absent entries are 0.
DenseMatrix matrix_from_csv(const std::string& text, std::size_t rows, std::size_t cols);

/// Per-vertex display labels for DOT output.
using Labels = std::vector<std::string>;
/// v_i^j for diagonal-union copies: vertex j*n + i is copy j+1 of base i.
Labels copy_labels(std::size_t base_order, std::size_t copies);
/// Base-b words of length m, most significant symbol first.
Labels word_labels(std::size_t b, std::size_t m);

/// Byte-deterministic DOT text: vertex lines ascending, then one arc per line.
std::string export_dot(const Digraph& d, const std::optional<Labels>& labels = std::nullopt);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace dunion::io
