#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "braidloom/errors.hpp"

namespace braidloom {

namespace detail {
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw_limit("polynomial coefficient overflow");
  return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw_limit("polynomial coefficient overflow");
  return r;
}
}  // namespace detail

/// Laurent polynomial in N variables with integer coefficients. Zero terms are
/// never stored, so structural equality is polynomial equality.
template <std::size_t N>
class Laurent {
 public:
  using Exponent = std::array<int, N>;
  using Terms = std::map<Exponent, std::int64_t>;

  Laurent() = default;
  Laurent(std::int64_t c) { add_term(Exponent{}, c); }  // NOLINT: constants convert implicitly

  static Laurent monomial(const Exponent& e, std::int64_t c = 1) {
    Laurent p;
    p.add_term(e, c);
    return p;
  }
  /// The k-th variable raised to `power`.
  static Laurent variable(std::size_t k, int power = 1) {
    Exponent e{};
    e[k] = power;
    return monomial(e);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::int64_t coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(const Exponent& e, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = detail::checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, detail::checked_mul(c, -1));
    return *this;
  }
  Laurent operator-() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, detail::checked_mul(c, -1));
    return r;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e;
        for (std::size_t k = 0; k < N; ++k) e[k] = ea[k] + eb[k];
        r.add_term(e, detail::checked_mul(ca, cb));
      }
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  /// Multiplies by the monomial with exponent `shift`.
  Laurent shifted(const Exponent& shift) const {
    Laurent r;
    for (const auto& [e, c] : terms_) {
      Exponent s;
      for (std::size_t k = 0; k < N; ++k) s[k] = e[k] + shift[k];
      r.terms_.emplace(s, c);
    }
    return r;
  }

  Laurent pow(unsigned k) const {
    Laurent r(1), base = *this;
    for (; k; k >>= 1) {
      if (k & 1) r *= base;
      if (k > 1) base *= base;
    }
    return r;
  }

  /// Lowest and highest exponent of variable k (both 0 for the zero polynomial).
  std::pair<int, int> degree_range(std::size_t k) const {
    if (terms_.empty()) return {0, 0};
    int lo = terms_.begin()->first[k], hi = lo;
    for (const auto& [e, c] : terms_) {
      lo = std::min(lo, e[k]);
      hi = std::max(hi, e[k]);
    }
    return {lo, hi};
  }

  bool operator==(const Laurent&) const = default;

  /// Canonical text, terms in descending lexicographic exponent order; "0" for zero.
  std::string to_string(const std::array<const char*, N>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::int64_t mag = c < 0 ? -c : c;
      if (first)
        os << (c < 0 ? "-" : "");
      else
        os << (c < 0 ? " - " : " + ");
      first = false;
      bool constant = true;
      for (std::size_t k = 0; k < N; ++k) constant = constant && e[k] == 0;
      bool wrote = false;
      if (mag != 1 || constant) {
        os << mag;
        wrote = true;
      }
      for (std::size_t k = 0; k < N; ++k) {
        if (e[k] == 0) continue;
        if (wrote) os << '*';
        os << names[k];
        if (e[k] != 1) os << '^' << e[k];
        wrote = true;
      }
    }
    return os.str();
  }

 private:
  Terms terms_;
};

using OneVarLaurent = Laurent<1>;
/// Exponents are (v, z).
using TwoVarLaurent = Laurent<2>;

/// Exact quotient a / b in one variable; throws InvalidInput when b does not divide a.
inline OneVarLaurent exact_divide(OneVarLaurent a, const OneVarLaurent& b) {
  if (b.is_zero()) detail::throw_invalid("division by the zero polynomial");
  const auto [blo, bhi] = b.degree_range(0);
  const std::int64_t lead = b.coefficient({bhi});
  OneVarLaurent q;
  while (!a.is_zero()) {
    const auto [alo, ahi] = a.degree_range(0);
    const std::int64_t c = a.coefficient({ahi});
    if (ahi - alo < bhi - blo || c % lead != 0) detail::throw_invalid("polynomial division is not exact");
    const auto t = OneVarLaurent::monomial({ahi - bhi}, c / lead);
    q += t;
    a -= t * b;
  }
  return q;
}

}  // namespace braidloom
