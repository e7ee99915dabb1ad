#include "braidloom/pure.hpp"

#include <array>
#include <cctype>
#include <cstdlib>
#include <map>
#include <mutex>
#include <regex>
#include <sstream>

#include "braidloom/errors.hpp"

namespace braidloom {

AWord::AWord(int strands) : strands_(strands) {
  if (strands < 1) detail::throw_invalid("A-word needs at least one strand");
}

AWord::AWord(int strands, std::span<const ALetter> letters) : AWord(strands) {
  for (const auto& a : letters) append(a);
}

AWord AWord::parse(std::string_view text, std::optional<int> strands) {
  static const std::regex token(R"(A\[\s*(\d+)\s*,\s*(\d+)\s*\](?:\^\(?\s*([+-]?\d+)\s*\)?)?)");
  std::vector<ALetter> letters;
  std::string s(text);
  auto it = std::sregex_iterator(s.begin(), s.end(), token);
  std::size_t consumed = 0;
  int n = 2;
  for (; it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    for (std::size_t k = consumed; k < static_cast<std::size_t>(m.position()); ++k)
      if (!std::isspace(static_cast<unsigned char>(s[k]))) detail::throw_invalid("bad A-word text near '" + s.substr(k) + "'");
    consumed = static_cast<std::size_t>(m.position() + m.length());
    const int i = std::stoi(m[1].str());
    const int j = std::stoi(m[2].str());
    const int e = m[3].matched ? std::stoi(m[3].str()) : 1;
    if (!(1 <= i && i < j)) detail::throw_invalid("A[i,j] needs 1 <= i < j");
    if (e == 0) detail::throw_invalid("zero exponent in A-word");
    for (int k = 0; k < std::abs(e); ++k) letters.push_back({i, j, e > 0 ? 1 : -1});
    n = std::max(n, j);
  }
  for (std::size_t k = consumed; k < s.size(); ++k)
    if (!std::isspace(static_cast<unsigned char>(s[k]))) detail::throw_invalid("bad A-word text near '" + s.substr(k) + "'");
  if (strands) {
    if (*strands < n) detail::throw_invalid("strand count too small for the given A-letters");
    n = *strands;
  }
  return AWord(n, letters);
}

void AWord::append(ALetter a) {
  if (a.j > strands_ || a.i < 1 || a.i >= a.j) detail::throw_invalid("A-letter index out of range");
  if (!letters_.empty() && letters_.back() == a.inverse())
    letters_.pop_back();
  else
    letters_.push_back(a);
}

void AWord::append(const AWord& w) {
  for (const auto& a : w.letters_) append(a);
}

AWord AWord::operator*(const AWord& rhs) const {
  if (rhs.strands_ != strands_) detail::throw_invalid("strand counts differ in A-word product");
  AWord r = *this;
  r.append(rhs);
  return r;
}

AWord AWord::inverse() const {
  AWord r(strands_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(it->inverse());
  return r;
}

AWord AWord::embedded(int strands) const {
  if (strands < strands_) detail::throw_invalid("cannot embed A-word into fewer strands");
  AWord r = *this;
  r.strands_ = strands;
  return r;
}

bool AWord::in_factor(int j) const {
  for (const auto& a : letters_)
    if (a.j != j) return false;
  return true;
}

BraidWord AWord::expand() const {
  BraidWord w(strands_);
  for (const auto& a : letters_) w *= expand_a(a.i, a.j, strands_, a.sign);
  return w;
}

std::string AWord::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    const auto& a = letters_[k];
    os << (k ? " " : "") << "A[" << a.i << ',' << a.j << ']';
    if (a.sign < 0) os << "^-1";
  }
  return os.str();
}

AWord PureFactorization::recompose() const {
  AWord r(strands);
  if (order == CombOrder::ascending) {
    for (const auto& c : components) r.append(c);
  } else {
    for (auto it = components.rbegin(); it != components.rend(); ++it) r.append(*it);
  }
  return r;
}

StrandDeletion delete_strand(const BraidWord& w, int position) {
  const int n = w.strands();
  if (n < 2 || position < 1 || position > n) detail::throw_invalid("delete_strand: bad position");
  int pos = position;
  std::vector<int> out;
  for (int x : w.letters()) {
    const int i = std::abs(x);
    const int sign = x > 0 ? 1 : -1;
    if (i == pos)
      pos = i + 1;
    else if (i + 1 == pos)
      pos = i;
    else
      out.push_back(sign * (i < pos ? i : i - 1));
  }
  return {free_reduce(BraidWord(n - 1, std::move(out))), pos};
}

namespace {

void require_pure(const BraidWord& p, const char* op) {
  if (!permutation_of(p).is_identity()) detail::throw_invalid(std::string(op) + ": input is not a pure braid");
}

// For u in P_m^m the Artin action sends x_m to c x_m c^{-1}; modulo x_m the map
// u -> c is an anti-isomorphism P_m^m -> F_{m-1}. The images of the A_im form the
// basis x_i -> g_i with g_i = c_i x_i c_i^{-1}, c_i in <x_{i+1}, ..., x_{m-1}>.
// Returns the inverse of that basis change.
FreeWord conjugator_of_last(const FreeWord& img, int m) {
  const std::size_t k = (img.size() - 1) / 2;
  if (img.size() % 2 == 0 || img[k] != m) throw std::logic_error("pure m-braid does not conjugate x_m");
  FreeWord c;
  for (std::size_t t = 0; t < k; ++t) c.append(img[t]);
  return c.kill(m);
}

std::vector<FreeWord> build_basis_inverse(int m) {
  std::vector<FreeWord> g(static_cast<std::size_t>(m - 1));
  for (int i = 1; i < m; ++i) g[static_cast<std::size_t>(i - 1)] = conjugator_of_last(artin_image(expand_a(i, m, m), m), m);
  std::vector<FreeWord> ti(static_cast<std::size_t>(m - 1));
  for (int t = 1; t < m; ++t) ti[static_cast<std::size_t>(t - 1)] = FreeWord::generator(t);
  for (int i = m - 1; i >= 1; --i) {
    const FreeWord& gi = g[static_cast<std::size_t>(i - 1)];
    const std::size_t k = (gi.size() - 1) / 2;
    if (gi.size() % 2 == 0 || gi[k] != i) throw std::logic_error("unexpected shape of A_im conjugator");
    FreeWord c;
    for (std::size_t t = 0; t < k; ++t) {
      if (std::abs(gi[t]) <= i) throw std::logic_error("A_im conjugator is not triangular");
      c.append(gi[t]);
    }
    FreeWord check = c;
    check.append(i);
    check.append_inverse(c);
    if (!(check == gi)) throw std::logic_error("A_im conjugator is not c x_i c^-1");
    const FreeWord tc = c.substitute(ti);
    FreeWord r = tc.inverse();
    r.append(i);
    r.append(tc);
    ti[static_cast<std::size_t>(i - 1)] = std::move(r);
  }
  return ti;
}

const std::vector<FreeWord>& basis_inverse(int m) {
  static std::mutex mu;
  static std::map<int, std::vector<FreeWord>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, build_basis_inverse(m)).first;
  return it->second;
}

// u in P_m^m (as a word on m strands) to its A_{i,m}-word, embedded in n strands.
AWord last_factor(const BraidWord& u, int n, std::size_t cap) {
  const int m = u.strands();
  if (u.empty()) return AWord(n);
  const FreeWord c = conjugator_of_last(artin_image(u, m), m);
  const FreeWord w = c.substitute(basis_inverse(m));
  if (w.size() > cap) detail::throw_limit("combing produced more than " + std::to_string(cap) + " A-letters");
  AWord r(n);
  const auto letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.append({std::abs(*it), m, *it > 0 ? 1 : -1});
  return r;
}

// Ascending comb of a short pure word straight from the Artin images; used for
// the cached building blocks below.
AWord comb_small(const BraidWord& p, std::size_t cap) {
  const int n = p.strands();
  std::vector<AWord> parts(static_cast<std::size_t>(std::max(0, n - 1)), AWord(n));
  BraidWord cur = free_reduce(p);
  for (int m = n; m >= 2; --m) {
    const BraidWord rest = delete_strand(cur, m).word;
    parts[static_cast<std::size_t>(m - 2)] = last_factor(rest.embedded(m).inverse() * cur, n, cap);
    cur = rest;
  }
  AWord r(n);
  for (const auto& c : parts) r.append(c);
  return r;
}

using Letters = std::vector<ALetter>;

// lift(q) sigma lift(q')^-1 as A-letters, q the permutation before the letter
const Letters& letter_block(const Permutation& q, int x, std::size_t cap) {
  static std::mutex mu;
  static std::map<std::pair<std::vector<int>, int>, Letters> cache;
  std::lock_guard lock(mu);
  const auto key = std::make_pair(q.images(), x);
  auto it = cache.find(key);
  if (it == cache.end()) {
    const int n = q.size();
    const BraidWord s = BraidWord::generator(n, std::abs(x), x > 0 ? 1 : -1);
    const BraidWord block = permutation_lift(q) * s * permutation_lift(q * permutation_of(s)).inverse();
    const AWord a = comb_small(block, cap);
    it = cache.emplace(key, Letters(a.letters().begin(), a.letters().end())).first;
  }
  return it->second;
}

// A_rs^-d A_im A_rs^d as a word in the A_{.m}, for s < m
const Letters& conjugate_letter(int m, const ALetter& a, int i, std::size_t cap) {
  static std::mutex mu;
  static std::map<std::array<int, 5>, Letters> cache;
  std::lock_guard lock(mu);
  const std::array<int, 5> key{m, a.i, a.j, a.sign, i};
  auto it = cache.find(key);
  if (it == cache.end()) {
    const BraidWord ra = expand_a(a.i, a.j, m, a.sign);
    const AWord w = last_factor(ra.inverse() * expand_a(i, m, m) * ra, m, cap);
    it = cache.emplace(key, Letters(w.letters().begin(), w.letters().end())).first;
  }
  return it->second;
}

// Any A-letter word for p: p = prod_k lift(q_{k-1}) sigma_k lift(q_k)^-1 with q_k
// the permutation of the first k letters.
Letters pure_letters(const BraidWord& p, std::size_t cap) {
  const int n = p.strands();
  Letters out;
  Permutation q = Permutation::identity(n);
  for (int x : p.letters()) {
    for (const auto& a : letter_block(q, x, cap)) {
      if (!out.empty() && out.back() == a.inverse())
        out.pop_back();
      else
        out.push_back(a);
    }
    q = q * Permutation::transposition(n, std::abs(x));
  }
  return out;
}

// p = q u with q in P_{m-1}, u in the free factor of strand m: appending a lower
// letter a moves it left past u, replacing u by a^-1 u a.
PureFactorization comb_ascending(Letters word, int n, std::size_t cap) {
  PureFactorization f;
  f.strands = n;
  f.order = CombOrder::ascending;
  f.components.assign(static_cast<std::size_t>(std::max(0, n - 1)), AWord(n));
  for (int m = n; m >= 2; --m) {
    AWord u(n);
    Letters q;
    for (const auto& a : word) {
      if (a.j == m) {
        u.append(a);
        continue;
      }
      if (!u.empty()) {
        AWord next(n);
        for (const auto& x : u.letters()) {
          const Letters& img = conjugate_letter(m, a, x.i, cap);
          if (x.sign > 0)
            for (const auto& y : img) next.append(y);
          else
            for (auto it = img.rbegin(); it != img.rend(); ++it) next.append(it->inverse());
        }
        if (next.size() > cap) detail::throw_limit("combing produced more than " + std::to_string(cap) + " A-letters");
        u = std::move(next);
      }
      if (!q.empty() && q.back() == a.inverse())
        q.pop_back();
      else
        q.push_back(a);
    }
    f.components[static_cast<std::size_t>(m - 2)] = std::move(u);
    word = std::move(q);
  }
  return f;
}

}  // namespace

PureFactorization comb(const BraidWord& p, CombOrder order) {
  require_pure(p, "comb");
  const int n = p.strands();
  const std::size_t cap = current_limits().max_a_word;
  if (order == CombOrder::ascending) return comb_ascending(pure_letters(free_reduce(p), cap), n, cap);
  // p^-1 = c_2 ... c_n gives p = c_n^-1 ... c_2^-1
  PureFactorization f = comb_ascending(pure_letters(free_reduce(p.inverse()), cap), n, cap);
  f.order = CombOrder::descending;
  for (auto& c : f.components) c = c.inverse();
  return f;
}

AWord to_a_word(const BraidWord& p) { return comb(p, CombOrder::descending).recompose(); }

AWord left_s_factor(const BraidWord& p, int s) {
  if (s < 2 || s > p.strands()) detail::throw_invalid("left_s_factor: s outside [2, n]");
  return comb(p, CombOrder::descending).component(s);
}

AWord right_s_factor(const BraidWord& p, int s) {
  if (s < 2 || s > p.strands()) detail::throw_invalid("right_s_factor: s outside [2, n]");
  return comb(p, CombOrder::ascending).component(s);
}

bool is_free(const BraidWord& p, int s) {
  if (s < 1 || s > p.strands()) detail::throw_invalid("is_free: s outside [1, n]");
  if (s == 1) {
    require_pure(p, "is_free");
    return true;
  }
  return left_s_factor(p, s).empty();
}

AWord nabla(const AWord& a) {
  AWord r(a.strands());
  for (const auto& x : a.letters())
    if (x.i >= 2) r.append({x.i - 1, x.j - 1, x.sign});
  return r;
}

BraidWord delta(const BraidWord& w, const TypeVector& type) {
  if (type.strands() != w.strands()) detail::throw_invalid("delta: type and word strand counts differ");
  const BraidWord pi = perm_braid(type);
  return pi * w * pi.inverse();
}

AWord phi(const AWord& a) {
  AWord r(a.strands());
  for (const auto& x : a.letters())
    if (x.j < a.strands()) r.append(x);
  return r;
}

AWord kn_element(const AWord& b) {
  const int n = b.strands();
  if (!b.in_factor(n)) detail::throw_invalid("kn_element: argument must lie in P_n^n");
  AWord result = b;
  AWord cur = b;
  for (int k = 1; k <= n - 2; ++k) {
    cur = nabla(cur);
    result.append(cur);
  }
  return result;
}

bool kn_member(const BraidWord& p) {
  // on a descending normal form both maps return descending normal forms, so
  // braid equality is word equality
  const AWord a = to_a_word(p);
  return nabla(a) == phi(a);
}

}  // namespace braidloom
