#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfvs/graph.hpp"

namespace sfvs {

/// Malformed instance text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Reads the "p sfvs n m k" format. File ids are 1-based, internal ids 0-based.
Instance parse_instance(std::istream& in);
Instance parse_instance_string(const std::string& text);
Instance load_instance(const std::string& path);

/// Writes the text format. Every identifier below capacity() must be live;
/// use compact() first for instances with deleted vertices.
void write_instance(std::ostream& out, const Instance& inst);
std::string format_instance(const Instance& inst);

struct Compacted {
  Instance instance;
  /// original[i] is the source identifier of compacted vertex i.
  std::vector<Vertex> original;
};

/// Renumbers live vertices to 0..n-1 preserving their relative order.
Compacted compact(const Instance& inst);

/// Parses a vertex list such as "1,4,7" or "1 4 7" (1-based) into a sorted set.
VertexSet parse_vertex_list(const std::string& text);

}  // namespace sfvs
