#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidloom/free_group.hpp"
#include "braidloom/permutation.hpp"

namespace braidloom {

/// Word in the Artin generators of B_n. A letter is +i for sigma_i and -i for
/// sigma_i^{-1}; every |letter| lies in [1, n - 1]. The empty word is the identity.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<int> letters);

  /// Whitespace-separated nonzero integers, e.g. "1 -2 -2 1 1 2". Without an
  /// explicit strand count, n = max |index| + 1 (and 1 for the empty word).
  static BraidWord parse(std::string_view text, std::optional<int> strands = {});
  static BraidWord generator(int strands, int i, int sign = 1);

  int strands() const { return strands_; }
  std::span<const int> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t k) const { return letters_[k]; }

  /// Same letters viewed on more strands.
  BraidWord embedded(int strands) const;

  /// Concatenation, cancelling sigma_i^{+-1} sigma_i^{-+1} pairs at the seam.
  BraidWord operator*(const BraidWord& rhs) const;
  BraidWord& operator*=(const BraidWord& rhs);
  BraidWord inverse() const;

  /// Letters as "1 -2 -2"; the empty word prints as "" .
  std::string to_string() const;

  bool operator==(const BraidWord&) const = default;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

/// Composition (n_1, ..., n_k) of n into positive parts.
class TypeVector {
 public:
  TypeVector() = default;
  explicit TypeVector(std::vector<int> parts);

  /// "3,1,2" or "(3,1,2)".
  static TypeVector parse(std::string_view text);
  static TypeVector single(int n) { return TypeVector({n}); }

  const std::vector<int>& parts() const { return parts_; }
  int strands() const { return strands_; }
  int components() const { return static_cast<int>(parts_.size()); }

  /// Partial sums n_1, n_1 + n_2, ..., n (ascending).
  std::vector<int> ends() const;
  /// {1..n} minus ends().
  std::vector<int> complement() const;
  bool is_end(int s) const;

  std::string to_string() const;
  bool operator==(const TypeVector&) const = default;

 private:
  std::vector<int> parts_;
  int strands_ = 0;
};

/// Removes adjacent cancelling pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

/// A_ij = sigma_{j-1} ... sigma_{i+1} sigma_i^2 sigma_{i+1}^-1 ... sigma_{j-1}^-1,
/// or its inverse when sign < 0.
BraidWord expand_a(int i, int j, int strands, int sign = 1);

/// sigma_1 ... sigma_{n-1} with the generators at the part ends omitted.
BraidWord perm_braid(const TypeVector& type);

/// Maps each start position to the end position of its strand. A homomorphism
/// for the diagrammatic product of Permutation.
Permutation permutation_of(const BraidWord& w);

/// Positive permutation braid (each pair of strands crosses at most once)
/// whose permutation is `p`.
BraidWord permutation_lift(const Permutation& p);

/// Rotation by pi: reverses the word and sends sigma_i to sigma_{n-i}.
BraidWord inv(const BraidWord& w);
/// sigma_i -> sigma_i^{-1}.
BraidWord mirror(const BraidWord& w);

/// Artin representation B_n -> Aut(F_n), sigma_i: x_i -> x_i x_{i+1} x_i^-1,
/// x_{i+1} -> x_i, extended by artin_action(a * b) == artin_action(a).compose(artin_action(b)).
FreeEndo artin_action(const BraidWord& w);

/// Image of x_t alone under artin_action(w), built right to left so that only
/// one word is ever held. Throws ResourceLimit past Limits::max_free_word.
FreeWord artin_image(const BraidWord& w, int t);

/// Exact equality in B_n: equal permutations and a trivial combed form of a * b^-1.
bool braids_equal(const BraidWord& a, const BraidWord& b);

}  // namespace braidloom
