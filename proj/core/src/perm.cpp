#include "grpkit/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "grpkit/errors.hpp"
#include "grpkit/primes.hpp"

namespace grpkit {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw std::invalid_argument("images do not form a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::from_images_unchecked(std::vector<Point> images) {
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Point x = cyc[i];
      if (x >= degree) throw std::invalid_argument("cycle point out of range");
      if (used[x]) throw std::invalid_argument("cycles are not disjoint");
      used[x] = true;
      p.images_[x] = cyc[(i + 1) % cyc.size()];
    }
  }
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return from_images_unchecked(std::move(inv));
}

Permutation Permutation::pow(std::int64_t k) const {
  Permutation base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Permutation result(degree());
  while (e > 0) {
    if (e & 1u) result = compose(result, base);
    base = compose(base, base);
    e >>= 1u;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    ord = lcm(ord, len);
  }
  return ord;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  for (const auto& c : cycles()) transpositions += c.size() - 1;
  return transpositions % 2 == 0;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<Point> cyc;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Point Permutation::first_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

std::size_t Permutation::hash() const noexcept {
  // FNV-1a over the image words.
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : images_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch(a.degree(), b.degree());
  Permutation out;
  compose_into(a, b, out);
  return out;
}

void compose_into(const Permutation& a, const Permutation& b, Permutation& out) {
  std::vector<Point> img(a.degree());
  auto ai = a.images();
  auto bi = b.images();
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = bi[ai[i]];
  out = Permutation::from_images_unchecked(std::move(img));
}

Permutation conjugate(const Permutation& h, const Permutation& g) {
  if (h.degree() != g.degree()) throw DegreeMismatch(h.degree(), g.degree());
  // g^-1 h g sends g(x) to g(h(x)).
  std::vector<Point> img(h.degree());
  for (std::size_t x = 0; x < img.size(); ++x) img[g(static_cast<Point>(x))] = g(h(static_cast<Point>(x)));
  return Permutation::from_images_unchecked(std::move(img));
}

std::string to_cycle_string(const Permutation& p) {
  auto cyc = p.cycles();
  if (cyc.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cyc) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ',';
      os << c[i] + 1;
    }
    os << ')';
  }
  return os.str();
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation");
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError("expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<Point> cyc;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("malformed cycle in \"" + std::string(text) + "\"");
      }
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > degree) throw ParseError("point " + std::to_string(v) + " exceeds degree");
        ++i;
      }
      if (v == 0) throw ParseError("points are 1-based; got 0");
      cyc.push_back(static_cast<Point>(v - 1));
    }
    if (cyc.size() > 1) cycles.push_back(std::move(cyc));
  }
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + " in \"" + std::string(text) + "\"");
  }
}

}  // namespace grpkit
