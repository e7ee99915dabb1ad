#include "braidloom/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "braidloom/errors.hpp"
#include "braidloom/pure.hpp"

namespace braidloom {

namespace {

void check_letters(int strands, std::span<const int> letters) {
  for (int x : letters)
    if (x == 0 || std::abs(x) >= strands)
      detail::throw_invalid("generator index " + std::to_string(x) + " outside [1, " +
                            std::to_string(strands - 1) + "]");
}

void push_reduced(std::vector<int>& out, int x) {
  if (!out.empty() && out.back() == -x)
    out.pop_back();
  else
    out.push_back(x);
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 1) detail::throw_invalid("a braid needs at least one strand");
}

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) detail::throw_invalid("a braid needs at least one strand");
  check_letters(strands_, letters_);
}

BraidWord BraidWord::parse(std::string_view text, std::optional<int> strands) {
  std::vector<int> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == ',')) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !(text[end] == ' ' || text[end] == '\t' || text[end] == '\n' || text[end] == ',')) ++end;
    std::string_view tok = text.substr(pos, end - pos);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size() || value == 0)
      detail::throw_invalid("bad braid letter '" + std::string(text.substr(pos, end - pos)) + "'");
    letters.push_back(value);
    pos = end;
  }
  int n = 1;
  for (int x : letters) n = std::max(n, std::abs(x) + 1);
  if (strands) {
    if (*strands < n) detail::throw_invalid("strand count too small for the given letters");
    n = *strands;
  }
  return BraidWord(n, std::move(letters));
}

BraidWord BraidWord::generator(int strands, int i, int sign) {
  return BraidWord(strands, {sign > 0 ? i : -i});
}

BraidWord BraidWord::embedded(int strands) const {
  if (strands < strands_) detail::throw_invalid("cannot embed into fewer strands");
  BraidWord r = *this;
  r.strands_ = strands;
  return r;
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  BraidWord r = *this;
  r *= rhs;
  return r;
}

BraidWord& BraidWord::operator*=(const BraidWord& rhs) {
  if (rhs.strands_ != strands_) detail::throw_invalid("strand counts differ in product");
  for (int x : rhs.letters_) push_reduced(letters_, x);
  return *this;
}

BraidWord BraidWord::inverse() const {
  BraidWord r(strands_);
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(-*it);
  return r;
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < letters_.size(); ++k) os << (k ? " " : "") << letters_[k];
  return os.str();
}

TypeVector::TypeVector(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) detail::throw_invalid("type vector needs at least one part");
  for (int p : parts_) {
    if (p < 1) detail::throw_invalid("type vector parts must be positive");
    strands_ += p;
  }
}

TypeVector TypeVector::parse(std::string_view text) {
  std::vector<int> parts;
  std::string cleaned;
  for (char c : text) cleaned += (c == '(' || c == ')' || c == ',') ? ' ' : c;
  std::istringstream is(cleaned);
  int v = 0;
  while (is >> v) parts.push_back(v);
  if (!is.eof()) detail::throw_invalid("bad type vector '" + std::string(text) + "'");
  return TypeVector(std::move(parts));
}

std::vector<int> TypeVector::ends() const {
  std::vector<int> e;
  int s = 0;
  for (int p : parts_) e.push_back(s += p);
  return e;
}

std::vector<int> TypeVector::complement() const {
  std::vector<int> c;
  for (int s = 1; s <= strands_; ++s)
    if (!is_end(s)) c.push_back(s);
  return c;
}

bool TypeVector::is_end(int s) const {
  int acc = 0;
  for (int p : parts_) {
    acc += p;
    if (acc == s) return true;
    if (acc > s) return false;
  }
  return false;
}

std::string TypeVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < parts_.size(); ++k) os << (k ? "," : "") << parts_[k];
  os << ')';
  return os.str();
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int x : w.letters()) push_reduced(out, x);
  return BraidWord(w.strands(), std::move(out));
}

BraidWord expand_a(int i, int j, int strands, int sign) {
  if (!(1 <= i && i < j && j <= strands))
    detail::throw_invalid("A[" + std::to_string(i) + "," + std::to_string(j) + "] needs 1 <= i < j <= n");
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(2 * (j - i)));
  for (int k = j - 1; k > i; --k) w.push_back(k);
  w.push_back(i);
  w.push_back(i);
  for (int k = i + 1; k < j; ++k) w.push_back(-k);
  BraidWord a(strands, std::move(w));
  return sign > 0 ? a : a.inverse();
}

BraidWord perm_braid(const TypeVector& type) {
  std::vector<int> w;
  for (int i = 1; i < type.strands(); ++i)
    if (!type.is_end(i)) w.push_back(i);
  return BraidWord(std::max(1, type.strands()), std::move(w));
}

Permutation permutation_of(const BraidWord& w) {
  const int n = w.strands();
  // at[p] = start position of the strand currently at position p
  std::vector<int> at(static_cast<std::size_t>(n + 1));
  for (int p = 1; p <= n; ++p) at[static_cast<std::size_t>(p)] = p;
  for (int x : w.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(x));
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) images[static_cast<std::size_t>(at[static_cast<std::size_t>(p)] - 1)] = p;
  return Permutation(std::move(images));
}

BraidWord permutation_lift(const Permutation& p) {
  const int n = p.size();
  // label[pos] = target position of the strand at pos; bubble sort with adjacent crossings
  std::vector<int> label(static_cast<std::size_t>(n + 1));
  for (int x = 1; x <= n; ++x) label[static_cast<std::size_t>(x)] = p(x);
  std::vector<int> w;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 1; i < n; ++i) {
      auto a = static_cast<std::size_t>(i);
      if (label[a] > label[a + 1]) {
        std::swap(label[a], label[a + 1]);
        w.push_back(i);
        changed = true;
      }
    }
  }
  return BraidWord(std::max(1, n), std::move(w));
}

BraidWord inv(const BraidWord& w) {
  const int n = w.strands();
  std::vector<int> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    const int x = *it;
    out.push_back(x > 0 ? n - x : -(n + x));
  }
  return BraidWord(n, std::move(out));
}

BraidWord mirror(const BraidWord& w) {
  std::vector<int> out(w.letters().begin(), w.letters().end());
  for (int& x : out) x = -x;
  return BraidWord(w.strands(), std::move(out));
}

FreeEndo artin_action(const BraidWord& w) {
  const std::size_t cap = current_limits().max_free_word;
  FreeEndo e = FreeEndo::identity(w.strands());
  for (int x : w.letters()) e.compose_generator(std::abs(x), x > 0 ? 1 : -1, cap);
  return e;
}

FreeWord artin_image(const BraidWord& w, int t) {
  if (t < 1 || t > w.strands()) detail::throw_invalid("artin_image: generator index out of range");
  const std::size_t cap = current_limits().max_free_word;
  FreeWord v{t};
  const auto letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const int i = std::abs(*it);
    const bool pos = *it > 0;
    FreeWord next;
    for (const auto x : v.letters()) {
      const int g = std::abs(x);
      const int e = x > 0 ? 1 : -1;
      if (g == i) {
        if (pos) {
          next.append(i);
          next.append(e * (i + 1));
          next.append(-i);
        } else {
          next.append(e * (i + 1));
        }
      } else if (g == i + 1) {
        if (pos) {
          next.append(e * i);
        } else {
          next.append(-(i + 1));
          next.append(e * i);
          next.append(i + 1);
        }
      } else {
        next.append(x);
      }
    }
    if (next.size() > cap) detail::throw_limit("Artin action image exceeded " + std::to_string(cap) + " letters");
    v = std::move(next);
  }
  return v;
}

bool braids_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) detail::throw_invalid("braids_equal: strand counts differ");
  if (permutation_of(a) != permutation_of(b)) return false;
  const PureFactorization f = comb(a * b.inverse(), CombOrder::ascending);
  return std::all_of(f.components.begin(), f.components.end(), [](const AWord& c) { return c.empty(); });
}

}  // namespace braidloom
