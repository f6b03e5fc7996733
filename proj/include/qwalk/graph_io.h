#ifndef QWALK_GRAPH_IO_H_
#define QWALK_GRAPH_IO_H_

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qwalk/graph.h"

namespace qwalk {

// Malformed input. `offset()` is the byte offset inside the record (graph6)
// or -1 when not meaningful; `line()` is the 1-based line number inside a
// family file, or 0 for a single record.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, long offset, long line = 0);

  long offset() const { return offset_; }
  long line() const { return line_; }

 private:
  long offset_;
  long line_;
};

enum class GraphFormat { kGraph6, kEdgeList };

// Parses one graph6 record. An optional ">>graph6<<" header is accepted;
// sparse6 (':') and digraph6 ('&') records are rejected.
Graph ParseGraph6(std::string_view record);

// Encodes `g` as graph6 without header or trailing newline.
std::string EncodeGraph6(const Graph& g);

// Parses "n" followed by "i j" lines (0-based). Blank lines and lines
// starting with '#' are ignored.
Graph ParseEdgeList(std::string_view text);

// Writes `g` in the edge-list format accepted by ParseEdgeList.
std::string EncodeEdgeList(const Graph& g);

// Reads a whole family. graph6: one record per line. Edge list: blocks, each
// starting with a line holding only the vertex count. Blank lines are
// skipped. Any bad record aborts with a ParseError carrying its line number.
GraphFamily LoadFamily(std::istream& in, GraphFormat format,
                       std::string source);
GraphFamily LoadFamilyFile(const std::string& path, GraphFormat format);

// Picks the format from the first non-blank line: a line made of a single
// integer means edge list, anything else graph6.
GraphFormat DetectFormat(const std::string& path);

}  // namespace qwalk

#endif  // QWALK_GRAPH_IO_H_
