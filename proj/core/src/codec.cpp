#include "braidloom/codec.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "braidloom/errors.hpp"

namespace braidloom {

namespace {

int sign_of(int x) { return x > 0 ? 1 : -1; }

struct Walk {
  std::vector<int> letters;
  int direction = 1;
  int min_index = 1;
  int max_index = 1;
};

// Runs the index/direction/sign recursion from index `start`; never throws.
Walk walk(int lead_sign, const std::vector<int>& cs, int start) {
  Walk r;
  int d = 1;
  int i = start;
  int e = lead_sign;
  r.letters.push_back(e * i);
  r.min_index = r.max_index = i;
  for (int c : cs) {
    const int turn = c * (c - 1) / 2;  // 1 for c == 2, else 0
    i += (1 - turn) * d;
    if (turn) d = -d;
    if (c % 2) e = -e;
    r.letters.push_back(e * i);
    r.min_index = std::min(r.min_index, i);
    r.max_index = std::max(r.max_index, i);
  }
  r.direction = d;
  return r;
}

void check_tuple(const CodeTuple& t) {
  if (t.lead_sign != 1 && t.lead_sign != -1) detail::throw_invalid("tuple lead sign must be +1 or -1");
  for (int c : t.cs)
    if (c < 0 || c > 2) detail::throw_invalid("tuple digits must lie in {0, 1, 2}");
}

}  // namespace

std::string CodeTuple::to_string() const {
  std::ostringstream os;
  os << '(' << (lead_sign > 0 ? "+1" : "-1") << ';';
  for (std::size_t k = 0; k < cs.size(); ++k) os << (k ? "," : " ") << cs[k];
  os << ')';
  return os.str();
}

BraidWord tighten(const WovenBraid& w) { return free_reduce(w.word()); }

BraidWord decode_tuple(const CodeTuple& t) {
  check_tuple(t);
  const Walk r = walk(t.lead_sign, t.cs, 1);
  if (r.min_index < 1) detail::throw_invalid("tuple " + t.to_string() + " drives an index below 1");
  return BraidWord(r.max_index + 1, r.letters);
}

CodeTuple encode_tuple(const BraidWord& w) {
  if (w.empty()) detail::throw_invalid("encode_tuple: empty word");
  CodeTuple t;
  t.lead_sign = sign_of(w[0]);
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    const int a = w[k];
    const int b = w[k + 1];
    if (std::abs(a) == std::abs(b))
      t.cs.push_back(2);
    else
      t.cs.push_back(sign_of(a) == sign_of(b) ? 0 : 1);
  }
  const Walk r = walk(t.lead_sign, t.cs, 1);
  if (!std::equal(r.letters.begin(), r.letters.end(), w.letters().begin(), w.letters().end()))
    detail::throw_invalid("encode_tuple: not a tight word whose letters all involve the main string");
  if (r.direction != 1 || r.max_index != std::abs(w[w.size() - 1]) || w.strands() != r.max_index + 1)
    detail::throw_invalid("encode_tuple: main string does not end at the top position");
  return t;
}

CodeTuple strip_zeros(const CodeTuple& t) {
  CodeTuple r{t.lead_sign, {}};
  auto first = std::find_if(t.cs.begin(), t.cs.end(), [](int c) { return c != 0; });
  if (first == t.cs.end()) return r;
  auto last = std::find_if(t.cs.rbegin(), t.cs.rend(), [](int c) { return c != 0; }).base();
  r.cs.assign(first, last);
  return r;
}

WebCode encode_int(const CodeTuple& t) {
  check_tuple(t);
  const CodeTuple s = strip_zeros(t);
  if (s.cs.empty()) return {0};
  std::int64_t v = s.cs.front() - 1;
  std::int64_t weight = 2;
  for (std::size_t k = 1; k < s.cs.size(); ++k) {
    std::int64_t term = 0;
    if (__builtin_mul_overflow(weight, std::int64_t{s.cs[k]}, &term) || __builtin_add_overflow(v, term, &v))
      detail::throw_limit("web code does not fit in 64 bits");
    if (k + 1 < s.cs.size() && __builtin_mul_overflow(weight, std::int64_t{3}, &weight))
      detail::throw_limit("web code does not fit in 64 bits");
  }
  return {t.lead_sign * v};
}

BraidWord decode_int(WebCode code) {
  if (code.value == 0) detail::throw_invalid("web code 0 is reserved and has no unique tight word");
  const int e = code.value > 0 ? 1 : -1;
  std::uint64_t a = code.value > 0 ? static_cast<std::uint64_t>(code.value) : 0 - static_cast<std::uint64_t>(code.value);
  std::vector<int> run{static_cast<int>(a % 2) + 1};
  for (a /= 2; a; a /= 3) run.push_back(static_cast<int>(a % 3));

  const Walk probe = walk(e, run, 1);
  const int leading = std::max(0, 1 - probe.min_index);
  CodeTuple t{e, std::vector<int>(static_cast<std::size_t>(leading), 0)};
  t.cs.insert(t.cs.end(), run.begin(), run.end());
  const Walk body = walk(e, t.cs, 1);
  if (body.direction != 1)
    detail::throw_invalid("web code " + std::to_string(code.value) + " leaves the main string moving down");
  // trailing zeros climb one step each until the last letter sits at the top index
  const int trailing = body.max_index - std::abs(body.letters.back());
  t.cs.insert(t.cs.end(), static_cast<std::size_t>(trailing), 0);
  const BraidWord w = decode_tuple(t);
  if (w.strands() != body.max_index + 1 || permutation_of(w).cycles().size() != 1)
    throw std::logic_error("decode_int: inflated word is not a single-cycle woven word");
  return w;
}

CodeTuple tuple_mirror(const CodeTuple& t) { return {-t.lead_sign, t.cs}; }

CodeTuple tuple_inv(const CodeTuple& t) {
  int sum = 0;
  for (int c : t.cs) sum += c;
  CodeTuple r{sum % 2 ? -t.lead_sign : t.lead_sign, t.cs};
  std::reverse(r.cs.begin(), r.cs.end());
  return r;
}

bool is_alternating_tight(const BraidWord& w) {
  if (w.empty()) return true;
  auto eps = [](int x) { return sign_of(x) * (std::abs(x) % 2 ? -1 : 1); };
  const int first = eps(w[0]);
  return std::all_of(w.letters().begin(), w.letters().end(), [&](int x) { return eps(x) == first; });
}

std::string to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::symmetric: return "symmetric";
    case SymmetryClass::antisymmetric: return "antisymmetric";
    case SymmetryClass::none: return "none";
  }
  return "?";
}

SymmetryClass symmetry_class(const BraidWord& w) {
  const BraidWord r = inv(w);
  if (braids_equal(r, w)) return SymmetryClass::symmetric;
  if (braids_equal(r, mirror(w))) return SymmetryClass::antisymmetric;
  return SymmetryClass::none;
}

SymmetryClass symmetry_class(const WovenBraid& w) { return symmetry_class(w.word()); }

}  // namespace braidloom
