#include "braidloom/invariants.hpp"

#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <vector>

#include "braidloom/errors.hpp"

namespace braidloom {

int closure_components(const BraidWord& w) { return static_cast<int>(permutation_of(w).cycles().size()); }

int writhe(const BraidWord& w) {
  int s = 0;
  for (int x : w.letters()) s += x > 0 ? 1 : -1;
  return s;
}

// ---------------------------------------------------------------- bracket

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

}  // namespace

OneVarLaurent jones_via_bracket(const BraidWord& w) {
  const std::size_t len = w.size();
  if (len > current_limits().jones_max_crossings)
    detail::throw_limit("bracket state sum over " + std::to_string(len) + " crossings exceeds the cap of " +
                        std::to_string(current_limits().jones_max_crossings));
  const int n = w.strands();
  if (len == 0) {
    // n unlinked circles: delta^(n-1)
    const OneVarLaurent delta = -(OneVarLaurent::variable(0, 2) + OneVarLaurent::variable(0, -2));
    return delta.pow(static_cast<unsigned>(n - 1));
  }
  const int levels = static_cast<int>(len);
  // node (p, t): strand position p (0-based) between crossing t-1 and t; level `levels` wraps to 0
  auto node = [&](int p, int t) { return p * levels + (t % levels); };
  const std::size_t nodes = static_cast<std::size_t>(n * levels);

  // arcs away from crossings are the same in every state
  UnionFind base(nodes);
  for (int t = 0; t < levels; ++t) {
    const int i = std::abs(w[static_cast<std::size_t>(t)]) - 1;
    for (int p = 0; p < n; ++p)
      if (p != i && p != i + 1) base.unite(node(p, t), node(p, t + 1));
  }

  // coefficient[a][loops]: a = number of A-type smoothings
  std::vector<std::vector<std::int64_t>> counts(len + 1, std::vector<std::int64_t>(nodes + 1, 0));
  const std::uint64_t states = std::uint64_t{1} << len;
  for (std::uint64_t mask = 0; mask < states; ++mask) {
    UnionFind uf = base;
    int a_count = 0;
    for (int t = 0; t < levels; ++t) {
      const int x = w[static_cast<std::size_t>(t)];
      const int i = std::abs(x) - 1;
      const bool vertical = (mask >> t) & 1;
      // sigma_i -> A id + A^-1 e_i ; sigma_i^-1 -> A^-1 id + A e_i
      if ((x > 0) == vertical) ++a_count;
      if (vertical) {
        uf.unite(node(i, t), node(i, t + 1));
        uf.unite(node(i + 1, t), node(i + 1, t + 1));
      } else {
        uf.unite(node(i, t), node(i + 1, t));
        uf.unite(node(i, t + 1), node(i + 1, t + 1));
      }
    }
    std::size_t loops = 0;
    for (std::size_t v = 0; v < nodes; ++v)
      if (uf.find(static_cast<int>(v)) == static_cast<int>(v)) ++loops;
    ++counts[static_cast<std::size_t>(a_count)][loops];
  }

  const OneVarLaurent delta = -(OneVarLaurent::variable(0, 2) + OneVarLaurent::variable(0, -2));
  std::vector<OneVarLaurent> delta_pow{OneVarLaurent(1)};
  OneVarLaurent bracket;
  for (std::size_t a = 0; a <= len; ++a)
    for (std::size_t loops = 1; loops <= nodes; ++loops) {
      const std::int64_t c = counts[a][loops];
      if (!c) continue;
      while (delta_pow.size() < loops) delta_pow.push_back(delta_pow.back() * delta);
      const int exp = static_cast<int>(a) - static_cast<int>(len - a);
      bracket += OneVarLaurent::monomial({exp}, c) * delta_pow[loops - 1];
    }
  // (-A^3)^(-writhe)
  const int wr = writhe(w);
  return OneVarLaurent::monomial({-3 * wr}, (wr % 2) ? -1 : 1) * bracket;
}

// ---------------------------------------------------------------- HOMFLY

namespace {

using Perm = std::vector<std::uint8_t>;  // one-line notation, 0-based images
using Hecke = std::map<Perm, TwoVarLaurent>;

const TwoVarLaurent& z_poly() {
  static const TwoVarLaurent z = TwoVarLaurent::variable(1);
  return z;
}

void accumulate(Hecke& h, const Perm& w, const TwoVarLaurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = h.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) h.erase(it);
  }
}

// h * g_i (0-based i), using g_i^2 = z g_i + 1
Hecke times_generator(const Hecke& h, int i) {
  Hecke r;
  for (const auto& [w, c] : h) {
    Perm ws = w;
    std::swap(ws[static_cast<std::size_t>(i)], ws[static_cast<std::size_t>(i + 1)]);
    if (w[static_cast<std::size_t>(i)] < w[static_cast<std::size_t>(i + 1)]) {
      accumulate(r, ws, c);
    } else {
      accumulate(r, w, c * z_poly());
      accumulate(r, ws, c);
    }
  }
  return r;
}

// h * g_i^-1 = h * (g_i - z)
Hecke times_inverse_generator(const Hecke& h, int i) {
  Hecke r = times_generator(h, i);
  for (const auto& [w, c] : h) accumulate(r, w, -(c * z_poly()));
  return r;
}

// Framed trace: closing an extra strand costs D, closing through g_{m-1} costs v^-1.
class Trace {
 public:
  Trace() {
    const TwoVarLaurent vinv = TwoVarLaurent::monomial({-1, 0});
    d_ = TwoVarLaurent::monomial({-1, -1}) - TwoVarLaurent::monomial({1, -1});
    vinv_ = vinv;
  }

  TwoVarLaurent of(const Hecke& h) {
    TwoVarLaurent r;
    for (const auto& [w, c] : h) r += c * basis(w);
    return r;
  }

 private:
  TwoVarLaurent basis(const Perm& w) {
    if (w.size() <= 1) return TwoVarLaurent(1);
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    const std::size_t m = w.size();
    TwoVarLaurent r;
    if (w[m - 1] == m - 1) {
      r = d_ * basis(Perm(w.begin(), w.end() - 1));
    } else {
      // w = w' s_{m-1} ... s_k with w(k) = m (1-based); trace(g_w') g_{m-1} ... g_k)
      // = v^-1 trace(g_w' g_{m-2} ... g_k) on one strand fewer
      std::size_t k = 0;
      while (w[k] != m - 1) ++k;
      Perm wp = w;
      for (std::size_t j = k; j + 1 < m; ++j) std::swap(wp[j], wp[j + 1]);
      wp.pop_back();
      Hecke h{{wp, TwoVarLaurent(1)}};
      for (std::size_t j = m - 2; j > k; --j) h = times_generator(h, static_cast<int>(j - 1));
      r = vinv_ * of(h);
    }
    memo_.emplace(w, r);
    return r;
  }

  TwoVarLaurent d_, vinv_;
  std::map<Perm, TwoVarLaurent> memo_;
};

}  // namespace

TwoVarLaurent homfly(const BraidWord& w) {
  const Limits lim = current_limits();
  if (w.strands() > lim.homfly_max_strands)
    detail::throw_limit("HOMFLY on " + std::to_string(w.strands()) + " strands exceeds the cap of " +
                        std::to_string(lim.homfly_max_strands));
  if (w.size() > lim.homfly_max_length)
    detail::throw_limit("HOMFLY of a word of length " + std::to_string(w.size()) + " exceeds the cap of " +
                        std::to_string(lim.homfly_max_length));
  Perm id(static_cast<std::size_t>(w.strands()));
  std::iota(id.begin(), id.end(), std::uint8_t{0});
  Hecke h{{id, TwoVarLaurent(1)}};
  for (int x : w.letters()) h = x > 0 ? times_generator(h, x - 1) : times_inverse_generator(h, -x - 1);
  Trace tr;
  return tr.of(h).shifted({writhe(w), 0});
}

TwoVarLaurent homfly_mirror(const TwoVarLaurent& p) {
  TwoVarLaurent r;
  for (const auto& [e, c] : p.terms()) r.add_term({-e[0], e[1]}, e[1] % 2 ? -c : c);
  return r;
}

OneVarLaurent jones_from_homfly(const TwoVarLaurent& p) {
  if (p.is_zero()) return {};
  const int zmin = std::min(0, p.degree_range(1).first);
  const OneVarLaurent z = OneVarLaurent::variable(0, -2) - OneVarLaurent::variable(0, 2);
  // multiply through by z^-zmin so every power is nonnegative, then divide back
  OneVarLaurent numerator;
  for (const auto& [e, c] : p.terms())
    numerator += OneVarLaurent::monomial({-4 * e[0]}, c) * z.pow(static_cast<unsigned>(e[1] - zmin));
  return zmin == 0 ? numerator : exact_divide(numerator, z.pow(static_cast<unsigned>(-zmin)));
}

int mfw_bound(const TwoVarLaurent& p) {
  const auto [lo, hi] = p.degree_range(0);
  return (hi - lo) / 2 + 1;
}

std::string jones_to_string(const OneVarLaurent& p) { return p.to_string({"A"}); }
std::string homfly_to_string(const TwoVarLaurent& p) { return p.to_string({"v", "z"}); }

}  // namespace braidloom
