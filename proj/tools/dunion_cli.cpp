// dunion: command-line front end for diagonal-union construction and
// topology analysis. Results go to stdout (or --out), diagnostics to stderr.
//
// Exit status: 0 success, 1 a checked property is false, 2 bad input or error.

#include <filesystem>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dunion/analysis.hpp"
#include "dunion/error.hpp"
#include "dunion/factorization.hpp"
#include "dunion/fixtures.hpp"
#include "dunion/io.hpp"
#include "dunion/symbolic.hpp"
#include "dunion/transforms.hpp"

namespace {

using namespace dunion;
namespace fs = std::filesystem;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  return io::read_file(path);
}

Digraph load_graph(const std::string& path) { return io::graph_from_json(io::parse(read_input(path))); }

Factorization load_factorization(const std::string& path) {
  return io::factorization_from_json(io::parse(read_input(path)));
}

struct Output {
  std::string path;
  void write(const std::string& text) const {
    if (path.empty() || path == "-") std::cout << text << std::flush;
    else io::write_file(path, text);
  }
};

Factorization with_base_check(Factorization f, const std::string& graph_path) {
  if (!graph_path.empty() && load_graph(graph_path) != f.base)
    throw Error(ErrorKind::Parse, "--graph does not match the base of --factors");
  return f;
}

void add_gen(CLI::App& app, Output& out, int& status) {
  auto* cmd = app.add_subcommand("gen", "Generate a digraph family as graph JSON");
  struct Opts {
    std::string family;
    std::size_t base = 2, dim = 1, n = 1, k = 1;
    std::vector<std::size_t> set;
    std::uint64_t seed = 0;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("family", opts->family, "debruijn | complete | cayley | cycle | random")
      ->required()
      ->check(CLI::IsMember({"debruijn", "complete", "cayley", "cycle", "random"}));
  cmd->add_option("--base", opts->base, "de Bruijn alphabet size");
  cmd->add_option("--dim", opts->dim, "de Bruijn word length");
  cmd->add_option("--n", opts->n, "vertex count");
  cmd->add_option("--set", opts->set, "Cayley connection set, e.g. 1,2,3")->delimiter(',');
  cmd->add_option("--k", opts->k, "degree of a random regular digraph");
  cmd->add_option("--seed", opts->seed, "seed for random");
  cmd->callback([opts, &out, &status] {
    Digraph d;
    if (opts->family == "debruijn") d = de_bruijn(opts->base, opts->dim);
    else if (opts->family == "complete") d = complete_with_loops(opts->n);
    else if (opts->family == "cayley") d = cayley_zn(opts->n, opts->set);
    else if (opts->family == "cycle") d = directed_cycle(opts->n);
    else d = random_regular(opts->n, opts->k, opts->seed);
    out.write(io::dump(io::graph_to_json(d)));
    status = kOk;
  });
}

void add_factorize(CLI::App& app, Output& out, int& status) {
  auto* cmd = app.add_subcommand("factorize", "Factor a digraph; emits factorization JSON");
  struct Opts {
    std::string graph = "-";
    std::string method = "cycle";
    std::vector<std::string> matrices;
    std::vector<std::size_t> order;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("--graph", opts->graph, "graph JSON (- for stdin)");
  cmd->add_option("--method", opts->method, "cycle | trivial")
      ->check(CLI::IsMember({"cycle", "trivial"}));
  cmd->add_option("--matrices", opts->matrices,
                  "explicit factors as 0/1 matrix CSV files (overrides --method)");
  cmd->add_option("--order", opts->order, "reorder factors, e.g. 1,0")->delimiter(',');
  cmd->callback([opts, &out, &status] {
    const Digraph d = load_graph(opts->graph);
    Factorization f;
    if (!opts->matrices.empty()) {
      std::vector<DenseMatrix> mats;
      for (const auto& path : opts->matrices)
        mats.push_back(io::matrix_from_csv(io::read_file(path), d.order(), d.order()));
      f = factor_from_matrices(d, mats);
    } else if (opts->method == "trivial") {
      f = trivial(d);
    } else {
      f = cycle_factorization(d);
    }
    if (!opts->order.empty()) f = reorder(f, opts->order);
    out.write(io::dump(io::factorization_to_json(f)));
    status = kOk;
  });
}

void add_dunion(CLI::App& app, Output& out, int& status) {
  auto* cmd = app.add_subcommand("dunion", "Diagonal union of a factorization; emits graph JSON");
  struct Opts {
    std::string graph;
    std::string factors;
    std::size_t depth = 1;
    std::string matrix_out;
    bool matrix_route = false;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("--graph", opts->graph, "base graph JSON; checked against the factorization");
  cmd->add_option("--factors", opts->factors, "factorization JSON")->required();
  cmd->add_option("--depth", opts->depth, "iteration depth d >= 1");
  cmd->add_option("--matrix-out", opts->matrix_out, "also write the adjacency matrix as CSV");
  cmd->add_flag("--matrix-route", opts->matrix_route,
                "evaluate the dense matrix formula instead of the arc rule");
  cmd->callback([opts, &out, &status] {
    const auto f = with_base_check(load_factorization(opts->factors), opts->graph);
    const Digraph d = opts->matrix_route ? from_matrix(diagonal_union_matrix(f, opts->depth), 0.5)
                                         : diagonal_union_depth(f, opts->depth).digraph;
    if (!opts->matrix_out.empty())
      io::write_file(opts->matrix_out, io::matrix_to_csv(adjacency_matrix(d)));
    out.write(io::dump(io::graph_to_json(d)));
    status = kOk;
  });
}

void add_linedigraph(CLI::App& app, Output& out, int& status) {
  auto* cmd = app.add_subcommand("linedigraph", "Iterated line digraph; emits graph JSON");
  struct Opts {
    std::string graph = "-";
    std::size_t times = 1;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("--graph", opts->graph, "graph JSON (- for stdin)");
  cmd->add_option("--times", opts->times, "number of applications");
  cmd->callback([opts, &out, &status] {
    out.write(io::dump(io::graph_to_json(iterated_line_digraph(load_graph(opts->graph), opts->times))));
    status = kOk;
  });
}

void add_split(CLI::App& app, Output& out, int& status) {
  auto* cmd = app.add_subcommand("split", "State split (in/out) of a digraph; emits graph JSON");
  struct Opts {
    std::string graph;
    std::string partition;
    std::string factors;
    std::string mode = "in";
    std::string labeling = "vertex";
    std::string labels_out;
    std::string partition_out;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("--graph", opts->graph, "graph JSON (defaults to the factorization base)");
  auto* part = cmd->add_option("--partition", opts->partition, "arc partition JSON");
  auto* fac = cmd->add_option("--factors", opts->factors, "derive the partition from a factorization");
  part->excludes(fac);
  cmd->add_option("--mode", opts->mode, "in | out (with --factors)")->check(CLI::IsMember({"in", "out"}));
  cmd->add_option("--labeling", opts->labeling, "vertex: v_i^j grouped by i; class: grouped by j")
      ->check(CLI::IsMember({"vertex", "class"}));
  cmd->add_option("--labels-out", opts->labels_out, "write [[base, class], ...] per new vertex");
  cmd->add_option("--partition-out", opts->partition_out, "write the partition used as JSON");
  cmd->callback([opts, &out, &status] {
    if (opts->partition.empty() == opts->factors.empty())
      throw Error(ErrorKind::Parse, "split needs exactly one of --partition or --factors");
    Digraph d;
    ArcPartition p;
    if (!opts->factors.empty()) {
      const auto f = with_base_check(load_factorization(opts->factors), opts->graph);
      d = f.base;
      p = partition_from_factorization(f, opts->mode == "in" ? SplitMode::In : SplitMode::Out);
    } else {
      d = load_graph(opts->graph.empty() ? "-" : opts->graph);
      p = io::partition_from_json(io::parse(read_input(opts->partition)));
    }
    const auto split = state_split(d, p);
    const bool by_class = opts->labeling == "class";
    if (!opts->partition_out.empty())
      io::write_file(opts->partition_out, io::dump(io::partition_to_json(p)));
    if (!opts->labels_out.empty()) {
      io::Json labels = io::Json::array();
      for (const auto& l : by_class ? split.class_major_labels : split.vertex_labels)
        labels.push_back({l.base, l.cls});
      io::write_file(opts->labels_out, io::dump(labels));
    }
    out.write(io::dump(io::graph_to_json(by_class ? split.class_major : split.digraph)));
    status = kOk;
  });
}

void add_unitary(CLI::App& app, Output& out, int& status) {
  auto* cmd = app.add_subcommand("unitary", "Unitary weighting of a cycle factorization; emits CSV");
  struct Opts {
    std::string factors;
    std::size_t depth = 1;
    std::string coupling = "fourier";
    std::string coupling_file;
    bool check = false;
    double tol = kUnitaryTolerance;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("--factors", opts->factors, "cycle factorization JSON")->required();
  cmd->add_option("--depth", opts->depth, "iteration depth d >= 1");
  cmd->add_option("--coupling", opts->coupling, "fourier | file")->check(CLI::IsMember({"fourier", "file"}));
  cmd->add_option("--coupling-file", opts->coupling_file, "k x k coupling as matrix CSV");
  cmd->add_flag("--check", opts->check,
                "verify unitarity and exact support; exit 1 on failure");
  cmd->add_option("--tol", opts->tol, "unitarity tolerance (max norm)");
  cmd->callback([opts, &out, &status] {
    const auto f = load_factorization(opts->factors);
    DenseMatrix coupling;
    if (opts->coupling == "file") {
      if (opts->coupling_file.empty())
        throw Error(ErrorKind::Parse, "--coupling file needs --coupling-file");
      coupling = io::matrix_from_csv(io::read_file(opts->coupling_file), f.count(), f.count());
    } else {
      coupling = fourier(f.count());
    }
    const auto u = unitary_weighting(f, opts->depth, coupling);
    status = kOk;
    if (opts->check) {
      const auto check = is_unitary(u, opts->tol);
      const bool support = from_matrix(u) == diagonal_union_depth(f, opts->depth).digraph;
      std::cerr << "unitary: " << (check.unitary ? "yes" : "no") << " (residual " << check.residual
                << "), support matches diagonal union: " << (support ? "yes" : "no") << '\n';
      if (!check.unitary || !support) status = kCheckFailed;
    }
    out.write(io::matrix_to_csv(u));
  });
}

void add_analyze(CLI::App& app, Output& out, int& status) {
  auto* cmd = app.add_subcommand("analyze", "Topology metrics report");
  struct Opts {
    std::string graph = "-";
    std::string format = "json";
    std::vector<std::string> asserts;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("--graph", opts->graph, "graph JSON (- for stdin)");
  cmd->add_option("--format", opts->format, "json | text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--assert", opts->asserts,
                  "properties that must hold: strongly-connected, regular, no-cut-vertices, "
                  "bridgeless, line-digraph")
      ->delimiter(',')
      ->check(CLI::IsMember(
          {"strongly-connected", "regular", "no-cut-vertices", "bridgeless", "line-digraph"}));
  cmd->callback([opts, &out, &status] {
    const auto report = analyze(load_graph(opts->graph));
    out.write(opts->format == "json" ? io::dump(io::report_to_json(report))
                                     : io::report_to_text(report));
    status = kOk;
    for (const auto& a : opts->asserts) {
      bool holds = true;
      if (a == "strongly-connected") holds = report.strongly_connected;
      else if (a == "regular") holds = report.regular_degree.has_value();
      else if (a == "no-cut-vertices") holds = report.articulation_points.empty();
      else if (a == "bridgeless") holds = report.bridges.empty();
      else if (a == "line-digraph") holds = report.is_line_digraph;
      if (!holds) {
        std::cerr << "assertion failed: " << a << '\n';
        status = kCheckFailed;
      }
    }
  });
}

void add_iso(CLI::App& app, Output& out, int& status) {
  auto* cmd = app.add_subcommand("iso", "Isomorphism test; exit 1 when not isomorphic");
  struct Opts {
    std::string graph = "-";
    std::string other;
    std::uint64_t budget = kDefaultIsoBudget;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("--graph", opts->graph, "graph JSON (- for stdin)");
  cmd->add_option("--other", opts->other, "graph JSON to compare against")->required();
  cmd->add_option("--budget", opts->budget, "search node budget");
  cmd->callback([opts, &out, &status] {
    const Digraph a = load_graph(opts->graph);
    const Digraph b = load_graph(opts->other);
    const auto map = isomorphic(a, b, opts->budget);
    if (map) {
      out.write(io::dump(io::vertex_map_to_json(*map)));
      status = kOk;
    } else {
      out.write(io::dump(io::Json{{"map", nullptr}}));
      status = kCheckFailed;
    }
  });
}

void add_export(CLI::App& app, Output& out, int& status) {
  auto* cmd = app.add_subcommand("export", "Export a graph as DOT or adjacency CSV");
  struct Opts {
    std::string graph = "-";
    std::string format = "dot";
    std::string labels = "none";
    std::size_t base_order = 0;
    std::size_t copies = 0;
    std::size_t base = 2;
    std::size_t dim = 0;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("--graph", opts->graph, "graph JSON (- for stdin)");
  cmd->add_option("--format", opts->format, "dot | csv")->check(CLI::IsMember({"dot", "csv"}));
  cmd->add_option("--labels", opts->labels, "none | copies | words")
      ->check(CLI::IsMember({"none", "copies", "words"}));
  cmd->add_option("--base-order", opts->base_order, "n for copy labels v_i^j");
  cmd->add_option("--copies", opts->copies, "k for copy labels v_i^j");
  cmd->add_option("--base", opts->base, "alphabet size for word labels");
  cmd->add_option("--dim", opts->dim, "word length for word labels");
  cmd->callback([opts, &out, &status] {
    const Digraph d = load_graph(opts->graph);
    if (opts->format == "csv") {
      out.write(io::matrix_to_csv(adjacency_matrix(d)));
      status = kOk;
      return;
    }
    std::optional<io::Labels> labels;
    if (opts->labels == "copies") labels = io::copy_labels(opts->base_order, opts->copies);
    else if (opts->labels == "words") labels = io::word_labels(opts->base, opts->dim);
    out.write(io::export_dot(d, labels));
    status = kOk;
  });
}

void add_fixtures(CLI::App& app, int& status) {
  auto* cmd = app.add_subcommand("fixtures", "Write the worked examples as input files");
  auto dir = std::make_shared<std::string>(".");
  cmd->add_option("--dir", *dir, "output directory");
  cmd->callback([dir, &status] {
    fs::create_directories(*dir);
    const auto put = [&](const std::string& name, const std::string& text) {
      io::write_file((fs::path(*dir) / name).string(), text);
    };
    const auto ex2 = fixtures::complete2_loops_swap();
    const auto ex3 = fixtures::cayley4_pairs();
    put("sigma_x.csv", io::matrix_to_csv(rho_reg_zk(2, 1).to_dense()));
    put("identity2.csv", io::matrix_to_csv(DenseMatrix::identity(2)));
    put("k2plus.json", io::dump(io::graph_to_json(ex2.base)));
    put("k2plus_factors.json", io::dump(io::factorization_to_json(ex2)));
    for (std::size_t m = 2; m <= 5; ++m)
      put("debruijn2" + std::to_string(m) + ".json", io::dump(io::graph_to_json(de_bruijn(2, m))));
    put("cayley4.json", io::dump(io::graph_to_json(ex3.base)));
    put("cayley4_factors.json", io::dump(io::factorization_to_json(ex3)));
    status = kOk;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dunion: diagonal-union digraph construction and topology analysis"};
  app.require_subcommand(1);
  Output out;
  app.add_option("--out", out.path, "write results to this file instead of stdout");
  int status = kOk;

  add_gen(app, out, status);
  add_factorize(app, out, status);
  add_dunion(app, out, status);
  add_linedigraph(app, out, status);
  add_split(app, out, status);
  add_unitary(app, out, status);
  add_analyze(app, out, status);
  add_iso(app, out, status);
  add_export(app, out, status);
  add_fixtures(app, status);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  } catch (const Error& e) {
    std::cerr << "dunion: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "dunion: " << e.what() << '\n';
    return kBadInput;
  }
  return status;
}
