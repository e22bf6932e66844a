#pragma once

#include <stdexcept>
#include <string>

#include "cgwc/conn_spec.hpp"
#include "cgwc/graph.hpp"

namespace cgwc {

struct ParseError : std::runtime_error {
  int line;
  ParseError(const std::string& message, int line_number)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}
};

struct Instance {
  WeightedGraph graph;
  ConnSpec spec;
  Weight k = 0;

  bool operator==(const Instance& o) const {
    return graph == o.graph && spec == o.spec && k == o.k;
  }
};

// Plain-text instance format:
//   n m
//   u v w        (m edge lines, 0-indexed, one occurrence per pair)
//   spec x1 ...  (nondecreasing, "inf" allowed at the tail)
//   k b
// '#' starts a comment; blank lines are skipped.
Instance parse_instance(const std::string& text);

// Canonical rendering; parse(render(x)) == x and render is idempotent on
// parsed instances.
std::string render_instance(const Instance& inst);

}  // namespace cgwc
