#pragma once

#include <iosfwd>
#include <string>

#include "exmatch/kgraph.hpp"

namespace exmatch {

// Text format, ASCII, "\n" line ends:
//   khg 1
//   n=<n> k=<k>
//   <v1> <v2> ... <vk>      one edge per line, vertices ascending,
//   ...                     lines in lexicographic order
// '#'-prefixed lines are comments: accepted anywhere on read, never written.
// The reader is strict about everything else: misordered or repeated edge
// lines, non-ascending vertices, wrong arity and malformed headers are all
// errors, never silently repaired.

std::string write_khg(const KGraph& g);
void write_khg_file(const KGraph& g, const std::string& path);

KGraph read_khg(std::istream& in);
KGraph read_khg(const std::string& text);
KGraph read_khg_file(const std::string& path);

}  // namespace exmatch
