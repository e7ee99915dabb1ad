#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidloom/braid.hpp"

namespace braidloom {

/// A_ij^{sign}, 1 <= i < j.
struct ALetter {
  int i = 1;
  int j = 2;
  int sign = 1;

  ALetter inverse() const { return {i, j, -sign}; }
  bool operator==(const ALetter&) const = default;
};

/// Word in the generators A_ij of the pure braid group P_n, freely reduced letterwise.
class AWord {
 public:
  AWord() = default;
  explicit AWord(int strands);
  AWord(int strands, std::span<const ALetter> letters);

  /// Tokens "A[i,j]" or "A[i,j]^-1", whitespace separated. Without an explicit
  /// strand count, n = max j.
  static AWord parse(std::string_view text, std::optional<int> strands = {});

  int strands() const { return strands_; }
  std::span<const ALetter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void append(ALetter a);
  void append(const AWord& w);
  AWord operator*(const AWord& rhs) const;
  AWord inverse() const;
  AWord embedded(int strands) const;

  /// Every letter has second index j (the word lies in P_n^j).
  bool in_factor(int j) const;

  /// Product of the expanded letters, freely reduced.
  BraidWord expand() const;
  std::string to_string() const;

  bool operator==(const AWord&) const = default;

 private:
  int strands_ = 2;
  std::vector<ALetter> letters_;
};

enum class CombOrder { ascending, descending };

/// beta = beta_2 ... beta_n (ascending) or beta = _n beta ... _2 beta (descending),
/// with the component at j lying in the free factor P_n^j.
struct PureFactorization {
  int strands = 1;
  CombOrder order = CombOrder::ascending;
  std::vector<AWord> components;  // components[j - 2] for j = 2..n

  const AWord& component(int j) const { return components[static_cast<std::size_t>(j - 2)]; }
  /// The components multiplied in the stated order.
  AWord recompose() const;

  bool operator==(const PureFactorization&) const = default;
};

/// Strand starting at `position` removed, remaining crossings renumbered.
/// Also reports where that strand ended.
struct StrandDeletion {
  BraidWord word;
  int end_position = 0;
};
StrandDeletion delete_strand(const BraidWord& w, int position);

/// Descending comb, flattened: an A-word whose expansion is braid-equal to p.
AWord to_a_word(const BraidWord& p);
PureFactorization comb(const BraidWord& p, CombOrder order);

/// The unique _s p in P_n^s with string s free in (_s p)^{-1} p.
AWord left_s_factor(const BraidWord& p, int s);
/// The unique p_s in P_n^s with string s free in p (p_s)^{-1}.
AWord right_s_factor(const BraidWord& p, int s);
/// p can be written without letters A_is.
bool is_free(const BraidWord& p, int s);

/// A_1j -> 1, A_ij -> A_{i-1,j-1} for i >= 2; strands stay n.
AWord nabla(const AWord& a);
/// pi w pi^{-1} with pi = perm_braid(type), freely reduced.
BraidWord delta(const BraidWord& w, const TypeVector& type);
/// A_ij -> A_ij for j < n, A_in -> 1.
AWord phi(const AWord& a);

/// b nabla(b) nabla^2(b) ... nabla^{n-2}(b) for b in P_n^n.
AWord kn_element(const AWord& b);
/// nabla(a) and phi(a) are braid-equal for a = to_a_word(p).
bool kn_member(const BraidWord& p);

}  // namespace braidloom
