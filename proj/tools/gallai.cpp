// Batch front end over the library: line-oriented, deterministic output.
// Exit codes: 0 property holds / success, 1 property fails (witness
// printed), 2 input error, 3 search timeout.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gallai/acceptance.hpp"
#include "gallai/constructions.hpp"
#include "gallai/gallai.hpp"
#include "gallai/homomorphism.hpp"
#include "gallai/io.hpp"
#include "gallai/search.hpp"
#include "gallai/spectrum.hpp"

namespace {

using namespace gallai;

std::string triangle_string(const std::array<int, 3>& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) +
         ")";
}

std::string vertex_list(const std::vector<int>& vs) {
  std::string out = "[";
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vs[i]);
  }
  return out + "]";
}

// Names the small graphs that show up as types and witnesses; falls back
// to an edge-list rendering.
std::string describe_graph(const SimpleGraph& canon) {
  struct Named {
    const char* name;
    SimpleGraph graph;
  };
  static const std::vector<Named> named = [] {
    std::vector<Named> out;
    out.push_back({"P1", canonical_form(path_graph(1))});
    out.push_back({"P2", canonical_form(path_graph(2))});
    out.push_back({"P3", canonical_form(path_graph(3))});
    out.push_back({"P4", canonical_form(path_graph(4))});
    out.push_back({"C3", canonical_form(cycle_graph(3))});
    out.push_back({"C4", canonical_form(cycle_graph(4))});
    out.push_back({"C5", canonical_form(cycle_graph(5))});
    out.push_back({"A", canonical_form(graph_a())});
    return out;
  }();
  for (const auto& [name, graph] : named)
    if (canon == graph) return name;
  std::string out = "n=" + std::to_string(canon.vertex_count()) + " edges=[";
  bool first = true;
  for (const auto& [u, v] : canon.edges()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out + "]";
}

int cmd_construct(const std::string& kind, const std::vector<std::string>& params,
                  const std::string& out_path) {
  auto param_int = [&](size_t i) {
    if (i >= params.size()) throw validation_error("missing parameter for " + kind);
    return std::stoi(params[i]);
  };
  if (kind == "named") {
    if (params.empty()) throw validation_error("named needs P|C|A [k]");
    SimpleGraph g;
    if (params[0] == "P")
      g = path_graph(param_int(1));
    else if (params[0] == "C")
      g = cycle_graph(param_int(1));
    else if (params[0] == "A")
      g = graph_a();
    else
      throw validation_error("named graphs are P <k>, C <k>, A");
    write_ug_file(out_path, g);
    std::cout << "built n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
    return 0;
  }

  ColoredClique k = [&] {
    if (kind == "odd-gon") return odd_gon_no_squares(param_int(0));
    if (kind == "even-gon") return even_gon_no_preceding(param_int(0));
    if (kind == "simple") return simple_clique(param_int(0));
    if (kind == "extremal") return extremal_exact_gallai(param_int(0));
    if (kind == "host") {
      if (params.empty()) throw validation_error("host needs a .ug file");
      return gallai_host(read_ug_file(params[0]));
    }
    throw validation_error("unknown construction '" + kind + "'");
  }();
  write_cgr_file(out_path, k);
  std::cout << "built n=" << k.vertex_count() << " k=" << k.palette_size() << "\n";
  if (kind == "odd-gon") {
    const int half = (k.vertex_count() - 1) / 2;
    std::string map = "positions=[";
    for (int i = 0; i < k.vertex_count(); ++i) {
      if (i) map += ',';
      map += std::to_string(i - half);
    }
    std::cout << map << "]\n";
  }
  if (kind == "even-gon") std::cout << "quad=[0,1,2,3]\n";
  return 0;
}

int cmd_spectrum(const std::string& path) {
  const ColoredClique k = read_cgr_file(path);
  const Spectrum s = spectrum_of(k);
  std::cout << to_string(s) << "\n";
  std::cout << "laws=" << (check_spectrum_laws(s) ? "ok" : "violated") << "\n";
  return 0;
}

int cmd_check(const std::string& path, bool exact) {
  const ColoredClique k = read_cgr_file(path);
  if (auto witness = find_colorful_triangle(k)) {
    std::cout << "NOT-GALLAI witness=" << triangle_string(*witness) << "\n";
    return 1;
  }
  std::cout << "GALLAI";
  int code = 0;
  if (exact) {
    if (auto witness = find_non_exact_triangle(k)) {
      std::cout << " NOT-EXACT witness=" << triangle_string(*witness);
      code = 1;
    } else {
      std::cout << " EXACT";
    }
  }
  std::cout << "\n";
  return code;
}

int cmd_decompose(const std::string& in_path, const std::string& out_path) {
  const ColoredClique k = read_cgr_file(in_path);
  try {
    const GallaiTree tree = decompose(k);
    write_gt_file(out_path, tree);
    std::cout << "tree nodes=" << tree.node_count() << " factors=" << tree.factor_count()
              << " height=" << tree.height() << "\n";
    return 0;
  } catch (const not_gallai_error& e) {
    std::cout << "NOT-GALLAI witness=" << triangle_string(e.triangle()) << "\n";
    return 1;
  }
}

int cmd_compose(const std::string& in_path, const std::string& out_path) {
  const ColoredClique k = recompose(read_gt_file(in_path));
  write_cgr_file(out_path, k);
  std::cout << "built n=" << k.vertex_count() << " k=" << k.palette_size() << "\n";
  return 0;
}

int cmd_classify(const std::string& path) {
  const SimpleGraph g = read_ug_file(path);
  if (!is_connected(g)) throw validation_error("classify needs a connected graph");
  std::cout << "TYPE " << describe_graph(graph_type(g));
  const DualityResult result = classify_monochrome(g);
  if (result.hom) {
    std::cout << " HOM";
    for (size_t v = 0; v < result.hom->map.size(); ++v)
      std::cout << ' ' << v << "->" << result.hom->map[v];
  } else {
    std::cout << " WITNESS " << obstruction_name(result.witness->first)
              << " vertices=" << vertex_list(result.witness->second);
  }
  std::cout << "\n";
  return 0;
}

int cmd_reduce(const std::string& path, const std::string& out_path) {
  const SimpleGraph g = read_ug_file(path);
  const ReducedForm reduced = reduced_form(g);
  std::cout << "reduced n=" << reduced.graph.vertex_count() << " m=" << reduced.graph.edge_count()
            << " map=" << vertex_list(reduced.vertex_map) << "\n";
  if (!out_path.empty())
    write_ug_file(out_path, reduced.graph);
  else
    std::cout << to_ug_string(reduced.graph);
  return 0;
}

int cmd_monochromes(const std::string& path) {
  const ColoredClique k = read_cgr_file(path);
  for (const Monochrome& m : monochromes(k)) {
    std::cout << "monochrome color=" << m.color << " vertices=" << vertex_list(m.vertices)
              << " type=" << describe_graph(graph_type(m.graph)) << "\n";
  }
  return 0;
}

int cmd_search(int n, std::vector<int> forbid, int require, std::uint64_t budget,
               const std::string& out_path) {
  const SearchResult result = search_coloring(n, forbid, require, budget);
  switch (result.status) {
    case SearchStatus::sat:
      std::cout << "SAT nodes=" << result.nodes << "\n";
      if (!out_path.empty()) {
        write_cgr_file(out_path, *result.witness);
        std::cout << "built n=" << result.witness->vertex_count()
                  << " k=" << result.witness->palette_size() << "\n";
      }
      return 0;
    case SearchStatus::unsat:
      std::cout << "UNSAT nodes=" << result.nodes << "\n";
      return 1;
    case SearchStatus::timeout:
      std::cout << "TIMEOUT nodes=" << result.nodes << "\n";
      return 3;
  }
  return 2;
}

int cmd_verify(const std::string& suite) {
  if (suite == "all") return run_all_acceptance_suites(std::cout) == 0 ? 0 : 1;
  return run_acceptance_suite(suite, std::cout) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge-colored complete graphs: spectra, decompositions, dualities"};
  app.require_subcommand(1);

  std::string kind, in_path, out_path;
  std::vector<std::string> params;
  bool exact = false;
  int n = 0, require = 0;
  std::vector<int> forbid;
  std::uint64_t budget = 100'000'000;
  std::string suite = "all";

  auto* construct = app.add_subcommand("construct", "build a named coloring or graph");
  construct->add_option("kind", kind, "odd-gon|even-gon|simple|extremal|host|named")->required();
  construct->add_option("params", params, "construction parameters");
  construct->add_option("--out", out_path, "output file (.cgr or .ug)")->required();

  auto* spectrum_cmd = app.add_subcommand("spectrum", "prohibited colorful-cycle lengths");
  spectrum_cmd->add_option("input", in_path, ".cgr file")->required();

  auto* check = app.add_subcommand("check", "test the Gallai property");
  check->add_option("input", in_path, ".cgr file")->required();
  check->add_flag("--exact", exact, "also require every triangle to use exactly two colors");

  auto* decompose_cmd = app.add_subcommand("decompose", "write the decomposition tree");
  decompose_cmd->add_option("input", in_path, ".cgr file")->required();
  decompose_cmd->add_option("--out", out_path, "output .gt file")->required();

  auto* compose = app.add_subcommand("compose", "rebuild a clique from a tree");
  compose->add_option("input", in_path, ".gt file")->required();
  compose->add_option("--out", out_path, "output .cgr file")->required();

  auto* classify = app.add_subcommand("classify", "duality classification of a connected graph");
  classify->add_option("input", in_path, ".ug file")->required();

  auto* reduce = app.add_subcommand("reduce", "collapse equal neighborhoods");
  reduce->add_option("input", in_path, ".ug file")->required();
  reduce->add_option("--out", out_path, "output .ug file (default: stdout)");

  auto* monochromes_cmd = app.add_subcommand("monochromes", "list one-color components");
  monochromes_cmd->add_option("input", in_path, ".cgr file")->required();

  auto* search = app.add_subcommand("search", "look for a coloring with given cycle spectrum");
  search->add_option("n", n, "vertex count")->required();
  search->add_option("--forbid", forbid, "lengths that must have no colorful cycle");
  search->add_option("--require", require, "length that must have a colorful cycle")->required();
  search->add_option("--budget", budget, "node budget before TIMEOUT");
  search->add_option("--out", out_path, "write the witness .cgr here");

  auto* verify = app.add_subcommand("verify", "run named acceptance suites");
  verify->add_option("suite", suite, "suite name or 'all'");

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed()) return cmd_construct(kind, params, out_path);
    if (spectrum_cmd->parsed()) return cmd_spectrum(in_path);
    if (check->parsed()) return cmd_check(in_path, exact);
    if (decompose_cmd->parsed()) return cmd_decompose(in_path, out_path);
    if (compose->parsed()) return cmd_compose(in_path, out_path);
    if (classify->parsed()) return cmd_classify(in_path);
    if (reduce->parsed()) return cmd_reduce(in_path, out_path);
    if (monochromes_cmd->parsed()) return cmd_monochromes(in_path);
    if (search->parsed()) return cmd_search(n, forbid, require, budget, out_path);
    if (verify->parsed()) return cmd_verify(suite);
  } catch (const not_gallai_error& e) {
    std::cout << "NOT-GALLAI witness=" << triangle_string(e.triangle()) << "\n";
    return 1;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
