#pragma once

#include <iosfwd>
#include <string>

#include "gallai/colored_clique.hpp"
#include "gallai/gallai_tree.hpp"
#include "gallai/simple_graph.hpp"

namespace gallai {

// Colored clique text format (.cgr):
//   cgraph <n> <k>
//   <u> <v> <c>        one line per edge, 0 <= u < v < n, in (u,v) order
//
// Uncolored graph text format (.ug):
//   graph <n> <m>
//   <u> <v>            m lines, u < v, lexicographic, no duplicates
//
// Decomposition tree text format (.gt):
//   gtree <node_count>
//   node <id> parent <pid|->     one line per node, ids 0..count-1 ascending
//   sib <id1> <id2> <color>      one line per sibling pair, id1 < id2
//   leaf <id> vertex <v>         one line per leaf
//
// Writers emit the canonical serialization (sorted lines as above);
// parsers validate every structural invariant and reject malformed input
// with a validation_error.

ColoredClique read_cgr(std::istream& in);
ColoredClique read_cgr_file(const std::string& path);
void write_cgr(std::ostream& out, const ColoredClique& k);
void write_cgr_file(const std::string& path, const ColoredClique& k);
std::string to_cgr_string(const ColoredClique& k);

SimpleGraph read_ug(std::istream& in);
SimpleGraph read_ug_file(const std::string& path);
void write_ug(std::ostream& out, const SimpleGraph& g);
void write_ug_file(const std::string& path, const SimpleGraph& g);
std::string to_ug_string(const SimpleGraph& g);

GallaiTree read_gt(std::istream& in);
GallaiTree read_gt_file(const std::string& path);
void write_gt(std::ostream& out, const GallaiTree& t);
void write_gt_file(const std::string& path, const GallaiTree& t);
std::string to_gt_string(const GallaiTree& t);

}  // namespace gallai
