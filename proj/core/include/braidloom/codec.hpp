#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidloom/braid.hpp"
#include "braidloom/weave.hpp"

namespace braidloom {

/// (e_1; c_1, ..., c_{l-1}) with c_t in {0, 1, 2}: 0 = next letter one step along
/// the main string with the same sign, 1 = same with flipped sign, 2 = same index
/// (the main string turns around).
struct CodeTuple {
  int lead_sign = 1;
  std::vector<int> cs;

  std::string to_string() const;
  bool operator==(const CodeTuple&) const = default;
};

/// Signed integer form of a zero-stripped tuple. 0 is reserved for tuples whose
/// stripped run is empty or the single digit 1 (all such closures are unknots).
struct WebCode {
  std::int64_t value = 0;
  bool operator==(const WebCode&) const = default;
};

/// Expands the definition form and freely reduces (the unique tight word).
BraidWord tighten(const WovenBraid& w);

/// Throws InvalidInput unless `w` is a tight word of a type-(n) woven braid.
CodeTuple encode_tuple(const BraidWord& w);
/// Strand count is max index + 1. Throws InvalidInput if an index drops below 1.
BraidWord decode_tuple(const CodeTuple& t);

WebCode encode_int(const CodeTuple& t);
/// Tight word with the fewest leading zeros that keeps every index >= 1.
BraidWord decode_int(WebCode code);

/// Tuple with leading and trailing zeros removed.
CodeTuple strip_zeros(const CodeTuple& t);

CodeTuple tuple_mirror(const CodeTuple& t);
CodeTuple tuple_inv(const CodeTuple& t);

/// Some eps in {+1, -1} gives every sigma_i^e the sign e = eps (-1)^i.
bool is_alternating_tight(const BraidWord& w);

enum class SymmetryClass { symmetric, antisymmetric, none };
std::string to_string(SymmetryClass c);

/// inv(w) == w, else inv(w) == mirror(w), tested by braid equality.
SymmetryClass symmetry_class(const BraidWord& w);
SymmetryClass symmetry_class(const WovenBraid& w);

}  // namespace braidloom
