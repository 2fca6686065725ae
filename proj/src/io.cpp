#include "dunion/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>
#include <utility>

#include "dunion/error.hpp"

namespace dunion::io {
namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

std::size_t as_index(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    parse_error(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

Json arcs_to_json(std::span<const Arc> arcs) {
  Json out = Json::array();
  for (const Arc& a : arcs) out.push_back({a.tail, a.head});
  return out;
}

std::vector<Arc> arcs_from_json(const Json& j) {
  if (!j.is_array()) parse_error("arc list must be an array");
  std::vector<Arc> arcs;
  arcs.reserve(j.size());
  for (const Json& pair : j) {
    if (!pair.is_array() || pair.size() != 2) parse_error("each arc must be a [tail, head] pair");
    const std::size_t t = as_index(pair[0], "arc tail");
    const std::size_t h = as_index(pair[1], "arc head");
    if (t > UINT32_MAX || h > UINT32_MAX) parse_error("arc endpoint out of range");
    arcs.push_back({static_cast<Vertex>(t), static_cast<Vertex>(h)});
  }
  return arcs;
}

// Library validation errors inside a document are reported as parse errors.
template <typename F>
auto reraise_as_parse(F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::SizeLimit) throw;
    parse_error(e.what());
  }
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);  // no "-0"
  return buf;
}

std::string optional_text(const std::optional<std::size_t>& v, const char* none) {
  return v ? std::to_string(*v) : none;
}

}  // namespace

Json graph_to_json(const Digraph& d) {
  Json j;
  j["n"] = d.order();
  j["arcs"] = arcs_to_json(d.arcs());
  return j;
}

Digraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("arcs"))
    parse_error("graph JSON needs \"n\" and \"arcs\"");
  const std::size_t n = as_index(j["n"], "n");
  check_vertex_count(n, "graph JSON");
  auto arcs = arcs_from_json(j["arcs"]);
  return reraise_as_parse([&] { return Digraph(n, std::move(arcs)); });
}

Json factorization_to_json(const Factorization& f) {
  Json j;
  j["base"] = graph_to_json(f.base);
  Json factors = Json::array();
  for (const Digraph& h : f.factors) factors.push_back(arcs_to_json(h.arcs()));
  j["factors"] = std::move(factors);
  return j;
}

Factorization factorization_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("base") || !j.contains("factors"))
    parse_error("factorization JSON needs \"base\" and \"factors\"");
  Factorization f{graph_from_json(j["base"]), {}};
  if (!j["factors"].is_array()) parse_error("\"factors\" must be an array");
  for (const Json& arcs : j["factors"]) {
    auto list = arcs_from_json(arcs);
    f.factors.push_back(
        reraise_as_parse([&] { return Digraph(f.base.order(), std::move(list)); }));
  }
  if (auto v = validate(f)) parse_error("invalid factorization: " + v->message);
  return f;
}

Json partition_to_json(const ArcPartition& p) {
  Json j;
  j["mode"] = p.mode == SplitMode::In ? "in" : "out";
  Json classes = Json::object();
  for (std::size_t v = 0; v < p.classes.size(); ++v) {
    Json per = Json::array();
    for (const auto& cls : p.classes[v]) per.push_back(arcs_to_json(cls));
    classes[std::to_string(v)] = std::move(per);
  }
  j["classes"] = std::move(classes);
  return j;
}

ArcPartition partition_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("mode") || !j.contains("classes"))
    parse_error("partition JSON needs \"mode\" and \"classes\"");
  ArcPartition p;
  const Json& mode = j["mode"];
  if (mode == "in") p.mode = SplitMode::In;
  else if (mode == "out") p.mode = SplitMode::Out;
  else parse_error("\"mode\" must be \"in\" or \"out\"");
  const Json& classes = j["classes"];
  if (!classes.is_object()) parse_error("\"classes\" must be an object keyed by vertex");
  std::size_t n = 0;
  for (const auto& [key, _] : classes.items()) {
    std::size_t v = 0;
    try {
      std::size_t used = 0;
      v = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      parse_error("partition key \"" + key + "\" is not a vertex index");
    }
    n = std::max(n, v + 1);
  }
  check_vertex_count(n, "partition JSON");
  p.classes.resize(n);
  for (const auto& [key, per] : classes.items()) {
    if (!per.is_array()) parse_error("classes of vertex " + key + " must be an array");
    auto& out = p.classes[std::stoul(key)];
    for (const Json& cls : per) out.push_back(arcs_from_json(cls));
  }
  return p;
}

Json report_to_json(const AnalysisReport& r) {
  Json j;
  j["order"] = r.order;
  j["size"] = r.size;
  j["regular_degree"] = r.regular_degree ? Json(*r.regular_degree) : Json(nullptr);
  j["strongly_connected"] = r.strongly_connected;
  j["diameter"] = r.diameter ? Json(*r.diameter) : Json("infinite");
  j["articulation_points"] = r.articulation_points;
  Json bridges = Json::array();
  for (const Edge& e : r.bridges) bridges.push_back({e.u, e.v});
  j["bridges"] = std::move(bridges);
  j["vertex_connectivity"] = r.vertex_connectivity;
  j["arc_connectivity"] = r.arc_connectivity;
  j["is_line_digraph"] = r.is_line_digraph;
  return j;
}

std::string report_to_text(const AnalysisReport& r) {
  std::string points, bridges;
  for (Vertex v : r.articulation_points) points += (points.empty() ? "" : " ") + std::to_string(v);
  for (const Edge& e : r.bridges)
    bridges += (bridges.empty() ? "" : " ") + std::to_string(e.u) + '-' + std::to_string(e.v);
  const std::pair<const char*, std::string> rows[] = {
      {"order", std::to_string(r.order)},
      {"size", std::to_string(r.size)},
      {"regular_degree", optional_text(r.regular_degree, "none")},
      {"strongly_connected", r.strongly_connected ? "yes" : "no"},
      {"diameter", optional_text(r.diameter, "infinite")},
      {"articulation_points", points.empty() ? "none" : points},
      {"bridges", bridges.empty() ? "none" : bridges},
      {"vertex_connectivity", std::to_string(r.vertex_connectivity)},
      {"arc_connectivity", std::to_string(r.arc_connectivity)},
      {"is_line_digraph", r.is_line_digraph ? "yes" : "no"},
  };
  std::string out;
  for (const auto& [key, value] : rows) {
    out += key;
    out.append(21 - std::string_view(key).size(), ' ');
    out += value + '\n';
  }
  return out;
}

Json vertex_map_to_json(const VertexMap& m) {
  Json j;
  j["map"] = std::vector<Vertex>(m.forward().begin(), m.forward().end());
  return j;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
}

std::string matrix_to_csv(const DenseMatrix& m, double tol) {
  std::string out = "row,col,re,im\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Complex z = m(r, c);
      if (std::abs(z) <= tol) continue;
      out += std::to_string(r) + ',' + std::to_string(c) + ',' + format_double(z.real()) + ',' +
             format_double(z.imag()) + '\n';
    }
  }
  return out;
}

DenseMatrix matrix_from_csv(const std::string& text, std::size_t rows, std::size_t cols) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "row,col,re,im")
    parse_error("matrix CSV must start with the header row,col,re,im");
  DenseMatrix m(rows, cols);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::size_t r = 0, c = 0;
    double re = 0, im = 0;
    char c1 = 0, c2 = 0, c3 = 0;
    if (!(fields >> r >> c1 >> c >> c2 >> re >> c3 >> im) || c1 != ',' || c2 != ',' || c3 != ',')
      parse_error("malformed matrix CSV line " + std::to_string(lineno));
    if (r >= rows || c >= cols)
      parse_error("matrix CSV entry out of range on line " + std::to_string(lineno));
    m(r, c) = {re, im};
  }
  return reraise_as_parse([&] { return DenseMatrix(rows, cols, {m.entries().begin(), m.entries().end()}); });
}

Labels copy_labels(std::size_t base_order, std::size_t copies) {
  Labels out;
  for (std::size_t j = 0; j < copies; ++j)
    for (std::size_t i = 0; i < base_order; ++i)
      out.push_back("v" + std::to_string(i) + "^" + std::to_string(j + 1));
  return out;
}

Labels word_labels(std::size_t b, std::size_t m) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < m; ++i) count *= b;
  Labels out;
  for (std::size_t w = 0; w < count; ++w) {
    std::string word(m, '0');
    std::size_t x = w;
    for (std::size_t pos = m; pos-- > 0; x /= b) {
      const std::size_t sym = x % b;
      word[pos] = static_cast<char>(sym < 10 ? '0' + sym : 'a' + (sym - 10));
    }
    out.push_back(std::move(word));
  }
  return out;
}

std::string export_dot(const Digraph& d, const std::optional<Labels>& labels) {
  if (labels && labels->size() != d.order())
    throw Error(ErrorKind::InvalidArgument, "label count differs from vertex count");
  std::string out = "digraph D {\n";
  for (Vertex v = 0; v < d.order(); ++v) {
    out += "  " + std::to_string(v);
    if (labels) out += " [label=\"" + (*labels)[v] + "\"]";
    out += ";\n";
  }
  for (const Arc& a : d.arcs())
    out += "  " + std::to_string(a.tail) + " -> " + std::to_string(a.head) + ";\n";
  out += "}\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << contents;
}

}  // namespace dunion::io
