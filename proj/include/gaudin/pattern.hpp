#pragma once

// Gluing patterns: rooted trees over the pole labels 1..N.
//
//   pattern := "[" item ("," item)* "]" ("@" rational)?
//   item    := leaf-index | pattern
//
// A nested pattern is a collision point; "@w" fixes its location. Whitespace is ignored.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gaudin/rational.hpp"

namespace gaudin {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct PatternNode {
  /// Pole label for leaves, 0 for internal nodes.
  int leaf = 0;
  std::vector<PatternNode> children;
  std::optional<Rational> location;
  /// Offset of the node in the source text.
  std::size_t position = 0;

  bool is_leaf() const { return leaf > 0; }
  /// Leaf labels below this node, ascending.
  std::vector<int> leaves() const;
  std::string to_string() const;
};

struct GluingPattern {
  PatternNode root;
  int sites = 0;

  std::string to_string() const { return root.to_string(); }
  /// No nested collisions.
  bool trivial() const;
};

/// Rejects duplicate or missing leaves, out-of-range labels, malformed locations,
/// nodes with fewer than two children and trailing input; errors carry the offset.
GluingPattern parse_pattern(std::string_view text, int sites);
/// N taken as the number of leaves.
GluingPattern parse_pattern(std::string_view text);

/// "[1,...,N]"
GluingPattern trivial_pattern(int sites);
/// "[[[1,2],3],...,N]"
GluingPattern left_comb_pattern(int sites);

}  // namespace gaudin
