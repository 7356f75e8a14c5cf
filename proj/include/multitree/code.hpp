#ifndef MULTITREE_CODE_HPP
#define MULTITREE_CODE_HPP

// Text codes for canonical trees:
//
//   Tree  := "(" DECIMAL ";" Child* ")"
//   Child := "[" DECIMAL "]" Tree
//
// DECIMAL is the root loop count (in Tree) or the attachment's extra edge
// copies (in Child). Children appear in non-increasing canonical order.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include "core.hpp"

namespace multitree {

class CodeParseError : public std::runtime_error {
 public:
  CodeParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

inline void append_code(std::string& out, const LoopTree& t) {
  out += '(';
  out += std::to_string(t.rootLoops);
  out += ';';
  for (const auto& c : t.children) {
    out += '[';
    out += std::to_string(c.extraMultiplicity);
    out += ']';
    append_code(out, c.subtree);
  }
  out += ')';
}

inline std::string serialize_code(const LoopTree& t) {
  std::string out;
  append_code(out, t);
  return out;
}

namespace detail {

class CodeParser {
 public:
  explicit CodeParser(std::string_view text) : text_(text) {}

  LoopTree parse_all() {
    LoopTree t = tree();
    if (pos_ != text_.size()) fail("trailing characters");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw CodeParseError(what, pos_); }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Size decimal() {
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > std::numeric_limits<Size>::max()) fail("number out of range");
      ++pos_;
    }
    if (pos_ == start) fail("expected digit");
    if (pos_ - start > 1 && text_[start] == '0') {
      pos_ = start;
      fail("leading zero");
    }
    return static_cast<Size>(value);
  }

  LoopTree tree() {
    LoopTree t;
    expect('(');
    t.rootLoops = decimal();
    expect(';');
    while (pos_ < text_.size() && text_[pos_] == '[') {
      const std::size_t childStart = pos_;
      ++pos_;
      ChildAttachment c;
      c.extraMultiplicity = decimal();
      expect(']');
      c.subtree = tree();
      if (!t.children.empty() && compare_codes(t.children.back(), c) < 0) {
        pos_ = childStart;
        fail("children out of canonical order");
      }
      t.children.push_back(std::move(c));
    }
    expect(')');
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a canonical code. Throws CodeParseError on malformed text,
/// leading zeros, or non-canonical child order.
inline LoopTree parse_code(std::string_view text) {
  return detail::CodeParser(text).parse_all();
}

}  // namespace multitree

#endif  // MULTITREE_CODE_HPP
