#include "gaudin/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace gaudin {

std::vector<int> PatternNode::leaves() const {
  std::vector<int> out;
  if (is_leaf()) {
    out.push_back(leaf);
    return out;
  }
  for (const auto& c : children) {
    auto sub = c.leaves();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string PatternNode::to_string() const {
  if (is_leaf()) return std::to_string(leaf);
  std::string s = "[";
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i > 0) s += ",";
    s += children[i].to_string();
  }
  s += "]";
  if (location) s += "@" + location->get_str();
  return s;
}

bool GluingPattern::trivial() const {
  return std::all_of(root.children.begin(), root.children.end(), [](const PatternNode& c) { return c.is_leaf(); });
}

namespace {

class Parser {
 public:
  /// sites == 0: infer N from the leaves.
  Parser(std::string_view text, int sites) : text_(text), sites_(sites), infer_(sites == 0) {
    if (infer_) sites_ = 1'000'000;
  }

  GluingPattern run() {
    skip_space();
    if (peek() != '[') fail("pattern must start with '['");
    GluingPattern p;
    p.sites = sites_;
    p.root = node();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    if (infer_) sites_ = p.sites = static_cast<int>(seen_.size());
    for (int leaf = 1; leaf <= sites_; ++leaf) {
      if (!seen_.count(leaf)) throw ParseError(text_.size(), "missing leaf " + std::to_string(leaf));
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  PatternNode node() {
    PatternNode n;
    n.position = pos_;
    ++pos_;  // '['
    while (true) {
      skip_space();
      if (peek() == '[') {
        n.children.push_back(node());
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        n.children.push_back(leaf());
      } else {
        fail("expected a leaf index or '['");
      }
      skip_space();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == ']') {
        ++pos_;
        break;
      }
      fail("expected ',' or ']'");
    }
    if (n.children.size() < 2) throw ParseError(n.position, "collision node needs at least two children");
    skip_space();
    if (peek() == '@') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-' ||
                                     text_[pos_] == '+' || text_[pos_] == '/')) {
        ++pos_;
      }
      if (start == pos_) throw ParseError(start, "malformed location: expected a rational after '@'");
      try {
        n.location = parse_rational(text_.substr(start, pos_ - start));
      } catch (const std::invalid_argument& err) {
        throw ParseError(start, std::string("malformed location: ") + err.what());
      }
    }
    return n;
  }

  PatternNode leaf() {
    PatternNode n;
    n.position = pos_;
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000) fail("leaf index too large");
      ++pos_;
    }
    if (value < 1 || value > sites_) {
      throw ParseError(n.position, "leaf " + std::to_string(value) + " outside 1.." + std::to_string(sites_));
    }
    if (!seen_.insert(static_cast<int>(value)).second) {
      throw ParseError(n.position, "duplicate leaf " + std::to_string(value));
    }
    n.leaf = static_cast<int>(value);
    return n;
  }

  std::string_view text_;
  int sites_;
  bool infer_;
  std::size_t pos_ = 0;
  std::set<int> seen_;
};

}  // namespace

GluingPattern parse_pattern(std::string_view text, int sites) {
  if (sites < 1) throw std::invalid_argument("pattern needs N >= 1");
  return Parser(text, sites).run();
}

GluingPattern parse_pattern(std::string_view text) { return Parser(text, 0).run(); }

GluingPattern trivial_pattern(int sites) {
  std::string s = "[";
  for (int i = 1; i <= sites; ++i) s += (i > 1 ? "," : "") + std::to_string(i);
  return parse_pattern(s + "]", sites);
}

GluingPattern left_comb_pattern(int sites) {
  if (sites < 2) throw std::invalid_argument("left comb needs N >= 2");
  std::string s = "[1,2]";
  for (int i = 3; i <= sites; ++i) s = "[" + s + "," + std::to_string(i) + "]";
  return parse_pattern(s, sites);
}

}  // namespace gaudin
