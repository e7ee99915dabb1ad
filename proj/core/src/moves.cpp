#include "braidloom/moves.hpp"

#include <cstdlib>

#include "braidloom/errors.hpp"

namespace braidloom {

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::conjugate_kn: return "I";
    case MoveKind::stabilize: return "II+";
    case MoveKind::destabilize: return "II-";
  }
  return "?";
}

namespace {

void require_single(const WovenBraid& omega, const char* op) {
  if (omega.type().components() != 1) detail::throw_invalid(std::string(op) + ": woven braid must have type (n)");
}

}  // namespace

std::optional<WovenBraid> move_I_unchecked(const WovenBraid& omega, const AWord& kappa) {
  require_single(omega, "move_I");
  if (kappa.strands() != omega.strands()) detail::throw_invalid("move_I: kappa strand count differs");
  const BraidWord k = kappa.expand();
  return as_woven(k.inverse() * omega.word() * k, omega.type());
}

WovenBraid move_I(const WovenBraid& omega, const AWord& kappa) {
  require_single(omega, "move_I");
  if (kappa.strands() != omega.strands()) detail::throw_invalid("move_I: kappa strand count differs");
  if (!kn_member(kappa.expand())) detail::throw_invalid("move_I: kappa is not in K_n");
  auto r = move_I_unchecked(omega, kappa);
  if (!r) throw std::logic_error("move_I: conjugate by a K_n element is not woven");
  return *r;
}

AWord arrow_up(const AWord& b) {
  const int n = b.strands();
  if (!b.in_factor(n)) detail::throw_invalid("arrow_up: argument must lie in P_n^n");
  AWord r(n + 1);
  for (const auto& a : b.letters()) r.append({a.i, n + 1, a.sign});
  return r;
}

WovenBraid move_II_plus(const WovenBraid& omega, int sign) {
  require_single(omega, "move_II_plus");
  if (sign != 1 && sign != -1) detail::throw_invalid("move_II_plus: sign must be +1 or -1");
  const int n = omega.strands();
  // pi_n b sigma_n^-1 = pi_{n+1} A_{n,n+1}^-1 b^up,  pi_n b sigma_n = pi_{n+1} A_{n,n+1}^-1 b^up A_{n,n+1}
  AWord c(n + 1);
  c.append({n, n + 1, -1});
  c.append(arrow_up(omega.component(n)));
  if (sign > 0) c.append({n, n + 1, 1});
  return WovenBraid::single(c);
}

WovenBraid move_II_minus(const BraidWord& omega) {
  const BraidWord w = free_reduce(omega);
  const int n = w.strands();
  if (n < 2 || w.empty() || std::abs(w[w.size() - 1]) != n - 1)
    detail::throw_invalid("move_II_minus: word does not end in sigma_{n-1}^{+-1}");
  std::vector<int> prefix(w.letters().begin(), w.letters().end() - 1);
  for (int x : prefix)
    if (std::abs(x) >= n - 1) detail::throw_invalid("move_II_minus: prefix uses sigma_{n-1}");
  auto r = as_woven(BraidWord(n - 1, std::move(prefix)), TypeVector::single(n - 1));
  if (!r) detail::throw_invalid("move_II_minus: prefix is not woven of type (n-1)");
  return *r;
}

MoveRecord record_move_I(const WovenBraid& omega, const AWord& kappa) {
  return {MoveKind::conjugate_kn, kappa, 0, omega, move_I(omega, kappa)};
}

MoveRecord record_move_II_plus(const WovenBraid& omega, int sign) {
  return {MoveKind::stabilize, std::nullopt, sign, omega, move_II_plus(omega, sign)};
}

MoveRecord record_move_II_minus(const BraidWord& omega) {
  const BraidWord w = free_reduce(omega);
  auto before = as_woven(w, TypeVector::single(w.strands()));
  if (!before) detail::throw_invalid("move_II_minus: input is not woven of type (n)");
  const int sign = w[w.size() - 1] > 0 ? 1 : -1;
  return {MoveKind::destabilize, std::nullopt, sign, *before, move_II_minus(w)};
}

}  // namespace braidloom
