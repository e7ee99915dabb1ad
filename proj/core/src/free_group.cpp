#include "braidloom/free_group.hpp"

#include <cstdlib>
#include <sstream>

#include "braidloom/errors.hpp"

namespace braidloom {

FreeWord::FreeWord(std::initializer_list<int> letters) {
  for (int x : letters) append(x);
}

void FreeWord::append(int letter) {
  if (!letters_.empty() && letters_.back() == -letter)
    letters_.pop_back();
  else
    letters_.push_back(static_cast<Letter>(letter));
}

void FreeWord::append(const FreeWord& w) {
  std::size_t k = 0;
  while (k < w.letters_.size() && !letters_.empty() && letters_.back() == -w.letters_[k]) {
    letters_.pop_back();
    ++k;
  }
  letters_.insert(letters_.end(), w.letters_.begin() + static_cast<std::ptrdiff_t>(k), w.letters_.end());
}

void FreeWord::append_inverse(const FreeWord& w) {
  for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) append(-*it);
}

FreeWord FreeWord::inverse() const {
  FreeWord r;
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(static_cast<Letter>(-*it));
  return r;
}

FreeWord FreeWord::substitute(std::span<const FreeWord> images) const {
  FreeWord r;
  for (Letter x : letters_) {
    const FreeWord& im = images[static_cast<std::size_t>(std::abs(x) - 1)];
    if (x > 0)
      r.append(im);
    else
      r.append_inverse(im);
  }
  return r;
}

FreeWord FreeWord::kill(int t) const {
  FreeWord r;
  for (Letter x : letters_)
    if (std::abs(x) != t) r.append(x);
  return r;
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) os << ' ';
    os << 'x' << std::abs(letters_[k]);
    if (letters_[k] < 0) os << "^-1";
  }
  return os.str();
}

FreeWord operator*(FreeWord a, const FreeWord& b) {
  a.append(b);
  return a;
}

FreeEndo FreeEndo::identity(int n) {
  FreeEndo e;
  e.images_.reserve(static_cast<std::size_t>(n));
  for (int t = 1; t <= n; ++t) e.images_.push_back(FreeWord::generator(t));
  return e;
}

bool FreeEndo::is_identity() const {
  for (std::size_t t = 0; t < images_.size(); ++t) {
    const FreeWord& w = images_[t];
    if (w.size() != 1 || w[0] != static_cast<int>(t) + 1) return false;
  }
  return true;
}

std::size_t FreeEndo::total_length() const {
  std::size_t s = 0;
  for (const auto& w : images_) s += w.size();
  return s;
}

FreeEndo FreeEndo::compose(const FreeEndo& inner) const {
  FreeEndo r;
  r.images_.reserve(inner.images_.size());
  for (const auto& w : inner.images_) r.images_.push_back(w.substitute(images_));
  return r;
}

FreeWord FreeEndo::apply(const FreeWord& w) const { return w.substitute(images_); }

void FreeEndo::compose_generator(int i, int sign, std::size_t cap) {
  auto& a = images_[static_cast<std::size_t>(i - 1)];
  auto& b = images_[static_cast<std::size_t>(i)];
  if (sign > 0) {
    // x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
    FreeWord next = a;
    next.append(b);
    next.append_inverse(a);
    b = std::move(a);
    a = std::move(next);
  } else {
    // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
    FreeWord next = b.inverse();
    next.append(a);
    next.append(b);
    a = std::move(b);
    b = std::move(next);
  }
  if (a.size() > cap || b.size() > cap)
    detail::throw_limit("Artin action image exceeded " + std::to_string(cap) + " letters");
}

}  // namespace braidloom
