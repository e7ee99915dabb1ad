#pragma once

#include <optional>
#include <string>

#include "braidloom/weave.hpp"

namespace braidloom {

enum class MoveKind { conjugate_kn, stabilize, destabilize };  // I, II+, II-

std::string to_string(MoveKind kind);

struct MoveRecord {
  MoveKind kind = MoveKind::conjugate_kn;
  std::optional<AWord> kappa;  // type I only
  int sign = 0;                // type II only
  WovenBraid before;
  WovenBraid after;
};

/// kappa^{-1} omega kappa for kappa in K_n. Throws InvalidInput when omega is not
/// of type (n) or kappa is not in K_n.
WovenBraid move_I(const WovenBraid& omega, const AWord& kappa);
/// Conjugation by an arbitrary pure kappa; nullopt when the result is not woven of type (n).
std::optional<WovenBraid> move_I_unchecked(const WovenBraid& omega, const AWord& kappa);

/// omega sigma_n^{sign} on n + 1 strands, assembled from the raised component.
WovenBraid move_II_plus(const WovenBraid& omega, int sign);

/// omega' for an input of the form omega' sigma_{n-1}^{+-1} with omega' woven of
/// type (n - 1). Only the freely reduced word itself is inspected.
WovenBraid move_II_minus(const BraidWord& omega);

/// A_in -> A_{i,n+1} for b in P_n^n; the result lives on n + 1 strands.
AWord arrow_up(const AWord& b);

MoveRecord record_move_I(const WovenBraid& omega, const AWord& kappa);
MoveRecord record_move_II_plus(const WovenBraid& omega, int sign);
MoveRecord record_move_II_minus(const BraidWord& omega);

}  // namespace braidloom
