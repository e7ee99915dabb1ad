#pragma once

#include <map>
#include <optional>
#include <vector>

#include "braidloom/braid.hpp"
#include "braidloom/pure.hpp"

namespace braidloom {

/// perm_braid(type) * beta_{n_1} * beta_{n_1+n_2} * ... with each beta_j in P_n^j.
class WovenBraid {
 public:
  WovenBraid() = default;
  /// `components` may omit ends whose component is trivial; every key must be a
  /// part end of `type` and every value must lie in that factor.
  WovenBraid(TypeVector type, std::map<int, AWord> components);

  /// The (n) type with pure part `beta` in P_n^n.
  static WovenBraid single(const AWord& beta);

  const TypeVector& type() const { return type_; }
  int strands() const { return type_.strands(); }
  /// Component at the part end j (empty when trivial).
  AWord component(int j) const;
  const std::map<int, AWord>& components() const { return components_; }

  /// Pure part: the components multiplied in ascending order.
  AWord pure_part() const;
  /// Definition-form word, freely reduced (the tight word).
  BraidWord word() const;

  bool operator==(const WovenBraid&) const = default;

 private:
  TypeVector type_;
  std::map<int, AWord> components_;
};

struct CycleNormalization {
  TypeVector type;
  /// tau.inverse() * p * tau == permutation_of(perm_braid(type)).
  Permutation tau;
};

/// Cycles sorted by (length descending, smallest element ascending).
CycleNormalization cycle_normalize(const Permutation& p);

/// One iteration of the freeing loop.
struct WeaveStep {
  int s = 0;
  AWord left_factor;          // _s delta for this s (may be empty)
  std::vector<int> not_free;  // F(alpha) after the step
};

struct WeaveResult {
  WovenBraid woven;
  /// woven.word() is braid-equal to conjugator^{-1} * input * conjugator.
  BraidWord conjugator;
  std::vector<WeaveStep> steps;  // filled only when tracing
};

/// Conjugates `b` into woven form. With `trace`, every freeing step is recorded
/// together with the recomputed set of non-free strings.
WeaveResult weave(const BraidWord& b, bool trace = false);

/// Decomposes `w` as a woven braid of the given type, if it is one.
std::optional<WovenBraid> as_woven(const BraidWord& w, const TypeVector& type);
bool is_woven(const BraidWord& w, const TypeVector& type);

}  // namespace braidloom
