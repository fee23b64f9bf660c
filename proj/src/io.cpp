#include "gallai/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace gallai {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-empty line split into tokens; empty vector at end of input.
  std::vector<std::string> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      std::istringstream ss(line);
      std::vector<std::string> tokens;
      std::string tok;
      while (ss >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return tokens;
    }
    return {};
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw validation_error("line " + std::to_string(line_no_) + ": " + why);
  }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

int parse_int(LineReader& reader, const std::string& tok, const char* what) {
  try {
    size_t pos = 0;
    const int value = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    reader.fail(std::string("expected ") + what + ", got '" + tok + "'");
  }
}

void expect_end(LineReader& reader) {
  if (!reader.next().empty()) reader.fail("trailing content after the last expected line");
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw validation_error("cannot write " + path);
  return out;
}

}  // namespace

ColoredClique read_cgr(std::istream& in) {
  LineReader reader(in);
  auto header = reader.next();
  if (header.size() != 3 || header[0] != "cgraph")
    reader.fail("expected header 'cgraph <n> <k>'");
  const int n = parse_int(reader, header[1], "vertex count");
  const int k = parse_int(reader, header[2], "palette size");
  if (n < 1) reader.fail("vertex count must be at least 1");
  if (k < 0) reader.fail("palette size must be nonnegative");

  std::vector<std::vector<int>> color(n, std::vector<int>(n, -1));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      auto line = reader.next();
      if (line.empty()) reader.fail("missing edge line for " + std::to_string(u) + " " +
                                    std::to_string(v));
      if (line.size() != 3) reader.fail("expected '<u> <v> <c>'");
      const int lu = parse_int(reader, line[0], "vertex");
      const int lv = parse_int(reader, line[1], "vertex");
      const int lc = parse_int(reader, line[2], "color");
      if (lu != u || lv != v)
        reader.fail("edges must appear in lexicographic order; expected " + std::to_string(u) +
                    " " + std::to_string(v));
      if (lc < 0 || lc >= k) reader.fail("color id out of range");
      color[u][v] = color[v][u] = lc;
    }
  }
  expect_end(reader);
  return ColoredClique::from_matrix_exact(n, k, color);
}

void write_cgr(std::ostream& out, const ColoredClique& k) {
  out << "cgraph " << k.vertex_count() << ' ' << k.palette_size() << '\n';
  for (int u = 0; u < k.vertex_count(); ++u)
    for (int v = u + 1; v < k.vertex_count(); ++v)
      out << u << ' ' << v << ' ' << k.color(u, v) << '\n';
}

SimpleGraph read_ug(std::istream& in) {
  LineReader reader(in);
  auto header = reader.next();
  if (header.size() != 3 || header[0] != "graph")
    reader.fail("expected header 'graph <n> <m>'");
  const int n = parse_int(reader, header[1], "vertex count");
  const int m = parse_int(reader, header[2], "edge count");
  if (n < 0) reader.fail("vertex count must be nonnegative");
  if (m < 0) reader.fail("edge count must be nonnegative");

  std::vector<std::pair<int, int>> edges;
  std::pair<int, int> prev{-1, -1};
  for (int i = 0; i < m; ++i) {
    auto line = reader.next();
    if (line.empty()) reader.fail("missing edge line");
    if (line.size() != 2) reader.fail("expected '<u> <v>'");
    const int u = parse_int(reader, line[0], "vertex");
    const int v = parse_int(reader, line[1], "vertex");
    if (u < 0 || v >= n || u >= v) reader.fail("edge endpoints must satisfy 0 <= u < v < n");
    if (std::make_pair(u, v) <= prev)
      reader.fail("edges must be strictly increasing in lexicographic order");
    prev = {u, v};
    edges.emplace_back(u, v);
  }
  expect_end(reader);
  return SimpleGraph(n, std::move(edges));
}

void write_ug(std::ostream& out, const SimpleGraph& g) {
  out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

GallaiTree read_gt(std::istream& in) {
  LineReader reader(in);
  auto header = reader.next();
  if (header.size() != 2 || header[0] != "gtree")
    reader.fail("expected header 'gtree <node_count>'");
  const int count = parse_int(reader, header[1], "node count");
  if (count < 1) reader.fail("node count must be at least 1");

  GallaiTree t;
  t.nodes.resize(count);
  t.root = -1;
  for (int id = 0; id < count; ++id) {
    auto line = reader.next();
    if (line.size() != 4 || line[0] != "node" || line[2] != "parent")
      reader.fail("expected 'node <id> parent <pid|->'");
    if (parse_int(reader, line[1], "node id") != id)
      reader.fail("node lines must list ids 0.." + std::to_string(count - 1) + " in order");
    if (line[3] == "-") {
      if (t.root != -1) reader.fail("multiple roots");
      t.root = id;
      t.nodes[id].parent = -1;
    } else {
      const int pid = parse_int(reader, line[3], "parent id");
      if (pid < 0 || pid >= count) reader.fail("parent id out of range");
      t.nodes[id].parent = pid;
      t.nodes[pid].children.push_back(id);
    }
  }
  if (t.root == -1) reader.fail("no root node");

  // Remaining lines: sibling colors, then leaf vertices (any order within).
  std::vector<std::string> line;
  while (!(line = reader.next()).empty()) {
    if (line[0] == "sib") {
      if (line.size() != 4) reader.fail("expected 'sib <id1> <id2> <color>'");
      int a = parse_int(reader, line[1], "node id");
      int b = parse_int(reader, line[2], "node id");
      const int c = parse_int(reader, line[3], "color");
      if (a < 0 || b < 0 || a >= count || b >= count) reader.fail("node id out of range");
      if (a >= b) reader.fail("sibling pair must satisfy id1 < id2");
      if (c < 0) reader.fail("negative color");
      if (!t.sibling_colors.emplace(std::make_pair(a, b), c).second)
        reader.fail("duplicate sibling pair");
    } else if (line[0] == "leaf") {
      if (line.size() != 4 || line[2] != "vertex") reader.fail("expected 'leaf <id> vertex <v>'");
      const int id = parse_int(reader, line[1], "node id");
      const int v = parse_int(reader, line[3], "vertex");
      if (id < 0 || id >= count) reader.fail("node id out of range");
      if (v < 0) reader.fail("negative leaf vertex");
      if (t.nodes[id].leaf_vertex != -1) reader.fail("duplicate leaf line");
      t.nodes[id].leaf_vertex = v;
    } else {
      reader.fail("unknown line '" + line[0] + "'");
    }
  }
  validate_tree(t);
  return t;
}

void write_gt(std::ostream& out, const GallaiTree& t) {
  out << "gtree " << t.node_count() << '\n';
  for (int id = 0; id < t.node_count(); ++id) {
    out << "node " << id << " parent ";
    if (t.nodes[id].parent < 0)
      out << "-";
    else
      out << t.nodes[id].parent;
    out << '\n';
  }
  for (const auto& [pair, color] : t.sibling_colors)
    out << "sib " << pair.first << ' ' << pair.second << ' ' << color << '\n';
  for (int id = 0; id < t.node_count(); ++id)
    if (t.nodes[id].is_leaf()) out << "leaf " << id << " vertex " << t.nodes[id].leaf_vertex << '\n';
}

ColoredClique read_cgr_file(const std::string& path) {
  auto in = open_in(path);
  return read_cgr(in);
}

void write_cgr_file(const std::string& path, const ColoredClique& k) {
  auto out = open_out(path);
  write_cgr(out, k);
}

std::string to_cgr_string(const ColoredClique& k) {
  std::ostringstream out;
  write_cgr(out, k);
  return out.str();
}

SimpleGraph read_ug_file(const std::string& path) {
  auto in = open_in(path);
  return read_ug(in);
}

void write_ug_file(const std::string& path, const SimpleGraph& g) {
  auto out = open_out(path);
  write_ug(out, g);
}

std::string to_ug_string(const SimpleGraph& g) {
  std::ostringstream out;
  write_ug(out, g);
  return out.str();
}

GallaiTree read_gt_file(const std::string& path) {
  auto in = open_in(path);
  return read_gt(in);
}

void write_gt_file(const std::string& path, const GallaiTree& t) {
  auto out = open_out(path);
  write_gt(out, t);
}

std::string to_gt_string(const GallaiTree& t) {
  std::ostringstream out;
  write_gt(out, t);
  return out.str();
}

}  // namespace gallai
