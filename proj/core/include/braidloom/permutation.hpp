#pragma once

#include <string>
#include <vector>

namespace braidloom {

/// Bijection of {1, ..., n}. Products are diagrammatic: `(a * b)(x) == b(a(x))`,
/// so the product follows the order of braid words.
class Permutation {
 public:
  Permutation() = default;
  /// `images[x - 1]` is the image of x; throws InvalidInput unless bijective.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Swap of the adjacent points i and i + 1.
  static Permutation transposition(int n, int i);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& then) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// Cycles in order of their smallest element, each starting at that element
  /// and listing x, p(x), p(p(x)), ...
  std::vector<std::vector<int>> cycles() const;
  std::vector<int> cycle_type() const;

  std::string to_string() const;  // cycle notation, "()" for the identity

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

}  // namespace braidloom
