#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidloom {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument does not hold (malformed word, non-pure input,
/// index out of range, invalid code, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap was exceeded. Results are never truncated silently.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Resource caps. Defaults are sized for desk-scale inputs; the CLI can override them.
struct Limits {
  std::size_t max_free_word = 1'000'000;   // letters per Artin-action image
  std::size_t max_a_word = 100'000;        // letters per A-word produced by combing
  std::size_t jones_max_crossings = 24;    // state sum is 2^crossings
  int homfly_max_strands = 7;
  std::size_t homfly_max_length = 30;
  std::size_t enumeration_frontier = 10'000'000;
};

/// Process-wide caps, read by every operation that can blow up.
Limits current_limits();
void set_limits(const Limits& limits);

namespace detail {
[[noreturn]] void throw_invalid(const std::string& what);
[[noreturn]] void throw_limit(const std::string& what);
}  // namespace detail

}  // namespace braidloom
