#include "braidloom/weave.hpp"

#include <algorithm>

#include "braidloom/errors.hpp"

namespace braidloom {

WovenBraid::WovenBraid(TypeVector type, std::map<int, AWord> components)
    : type_(std::move(type)) {
  for (auto& [j, c] : components) {
    if (!type_.is_end(j)) detail::throw_invalid("woven component at " + std::to_string(j) + " is not a part end");
    if (!c.in_factor(j)) detail::throw_invalid("woven component at " + std::to_string(j) + " leaves P_n^j");
    if (c.strands() != type_.strands()) detail::throw_invalid("woven component strand count differs from type");
    if (!c.empty()) components_.emplace(j, std::move(c));
  }
}

WovenBraid WovenBraid::single(const AWord& beta) {
  const int n = beta.strands();
  return WovenBraid(TypeVector::single(n), {{n, beta}});
}

AWord WovenBraid::component(int j) const {
  auto it = components_.find(j);
  return it == components_.end() ? AWord(strands()) : it->second;
}

AWord WovenBraid::pure_part() const {
  AWord r(strands());
  for (const auto& [j, c] : components_) r.append(c);
  return r;
}

BraidWord WovenBraid::word() const { return perm_braid(type_) * pure_part().expand(); }

CycleNormalization cycle_normalize(const Permutation& p) {
  auto cycles = p.cycles();
  std::stable_sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  std::vector<int> parts;
  std::vector<int> tau(static_cast<std::size_t>(p.size()));
  int offset = 0;
  for (const auto& c : cycles) {
    const int m = static_cast<int>(c.size());
    parts.push_back(m);
    // the block cycle runs offset+m -> offset+m-1 -> ... -> offset+1 -> offset+m
    for (int k = 0; k < m; ++k) tau[static_cast<std::size_t>(c[static_cast<std::size_t>(k)] - 1)] = offset + m - k;
    offset += m;
  }
  if (parts.empty()) parts.push_back(1);
  return {TypeVector(std::move(parts)), Permutation(std::move(tau))};
}

namespace {

std::vector<int> not_free_set(const BraidWord& pure, const TypeVector& type) {
  const auto f = comb(pure, CombOrder::descending);
  std::vector<int> out;
  for (int s : type.complement())
    if (s >= 2 && !f.component(s).empty()) out.push_back(s);
  return out;
}

}  // namespace

WeaveResult weave(const BraidWord& b, bool trace) {
  const int n = b.strands();
  const auto [type, tau] = cycle_normalize(permutation_of(b));
  const BraidWord pi = perm_braid(type);
  const BraidWord pi_tau = permutation_lift(tau);
  const BraidWord beta_tilde = pi.inverse() * pi_tau.inverse() * b * pi_tau;
  if (!permutation_of(beta_tilde).is_identity()) throw std::logic_error("weave: cycle normalization failed");

  WeaveResult result;
  BraidWord alpha(n);
  auto current = [&] { return alpha.inverse() * beta_tilde * delta(alpha, type); };
  for (int s : type.complement()) {
    if (s < 2) continue;
    AWord factor = left_s_factor(current(), s);
    if (!factor.empty()) alpha *= factor.expand();
    if (trace) result.steps.push_back({s, std::move(factor), not_free_set(current(), type)});
  }

  const BraidWord pure = current();
  const auto asc = comb(pure, CombOrder::ascending);
  std::map<int, AWord> components;
  for (int j = 2; j <= n; ++j) {
    const AWord& c = asc.component(j);
    if (c.empty()) continue;
    if (!type.is_end(j)) throw std::logic_error("weave: string " + std::to_string(j) + " was not freed");
    components.emplace(j, c);
  }
  result.woven = WovenBraid(type, std::move(components));
  result.conjugator = pi_tau * delta(alpha, type);
  return result;
}

std::optional<WovenBraid> as_woven(const BraidWord& w, const TypeVector& type) {
  if (type.strands() != w.strands()) return std::nullopt;
  const BraidWord pi = perm_braid(type);
  if (permutation_of(w) != permutation_of(pi)) return std::nullopt;
  const auto asc = comb(pi.inverse() * w, CombOrder::ascending);
  std::map<int, AWord> components;
  for (int j = 2; j <= type.strands(); ++j) {
    const AWord& c = asc.component(j);
    if (c.empty()) continue;
    if (!type.is_end(j)) return std::nullopt;
    components.emplace(j, c);
  }
  return WovenBraid(type, std::move(components));
}

bool is_woven(const BraidWord& w, const TypeVector& type) { return as_woven(w, type).has_value(); }

}  // namespace braidloom
