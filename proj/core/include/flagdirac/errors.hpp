#pragma once

#include <stdexcept>
#include <string>

namespace flagdirac {

/// Rejected input: invalid type/rank, non-integral weight, dimension
/// mismatch, exceeded cap, and similar precondition failures.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal cross-check failed (e.g. the brute-force shell sum produced
/// more than one contributing highest weight). This signals a bug, not bad
/// input, and is surfaced loudly.
class ConsistencyError : public std::logic_error {
public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

/// Tokenizer/parser failure with the byte offset of the first bad token.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

}  // namespace flagdirac
