#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace braidloom {

/// Freely reduced word over x_1, ..., x_n and their inverses. A letter is +t for x_t
/// and -t for its inverse. Appending cancels against the tail, so the word is
/// reduced at all times.
class FreeWord {
 public:
  using Letter = std::int16_t;

  FreeWord() = default;
  FreeWord(std::initializer_list<int> letters);

  static FreeWord generator(int t) { return FreeWord{t}; }

  void append(int letter);
  void append(const FreeWord& w);
  void append_inverse(const FreeWord& w);

  FreeWord inverse() const;
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter operator[](std::size_t k) const { return letters_[k]; }

  /// Replaces every x_t by `images[t - 1]`.
  FreeWord substitute(std::span<const FreeWord> images) const;
  /// Drops every occurrence of x_t^{+-1} (the image in F / <<x_t>>).
  FreeWord kill(int t) const;

  std::string to_string() const;

  bool operator==(const FreeWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

FreeWord operator*(FreeWord a, const FreeWord& b);

/// Endomorphism of the free group F_n, stored as the images of the generators.
class FreeEndo {
 public:
  FreeEndo() = default;
  static FreeEndo identity(int n);

  int rank() const { return static_cast<int>(images_.size()); }
  const FreeWord& image(int t) const { return images_[static_cast<std::size_t>(t - 1)]; }
  std::span<const FreeWord> images() const { return images_; }

  bool is_identity() const;
  std::size_t total_length() const;

  /// `f.compose(g)` is the endomorphism x -> f(g(x)).
  FreeEndo compose(const FreeEndo& inner) const;
  FreeWord apply(const FreeWord& w) const;

  /// In-place right composition with the Artin automorphism of sigma_i^{sign}:
  /// this <- this o act(sigma_i^{sign}). `cap` bounds every image length.
  void compose_generator(int i, int sign, std::size_t cap);

  bool operator==(const FreeEndo&) const = default;

 private:
  std::vector<FreeWord> images_;
};

}  // namespace braidloom
