#include "grpkit/group_table.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "grpkit/errors.hpp"

namespace grpkit {

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  if (count_ > other.count_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

ElementSet ElementSet::intersection(const ElementSet& other) const {
  ElementSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out.words_[i] = words_[i] & other.words_[i];
    out.count_ += static_cast<std::size_t>(std::popcount(out.words_[i]));
  }
  return out;
}

std::vector<Elem> ElementSet::members() const {
  std::vector<Elem> out;
  out.reserve(count_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<Elem>(w * 64 + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t ElementSet::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull ^ count_;
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool ElementSet::lex_less(const ElementSet& other) const {
  if (count_ == other.count_) {
    // For equal sizes the smaller sorted list owns the smallest element of the
    // symmetric difference.
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const std::uint64_t diff = words_[i] ^ other.words_[i];
      if (diff == 0) continue;
      const std::uint64_t low = diff & (~diff + 1);
      return (words_[i] & low) != 0;
    }
    return false;
  }
  const auto a = members();
  const auto b = other.members();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

GroupTable::GroupTable(const PermGroup& group, std::uint64_t cap) : group_(group) {
  const std::uint64_t ord = group.order();
  const std::uint64_t hard = std::numeric_limits<Elem>::max();
  if (ord > cap || ord > hard) throw OrderExceedsCap(ord, std::min(cap, hard));
  const auto n = static_cast<std::size_t>(ord);
  const auto gens = group.generators();

  elements_.reserve(n);
  index_.reserve(n * 2);
  elements_.push_back(group.identity());
  index_.emplace(elements_.back(), Elem{0});
  parent_.push_back(0);
  parent_gen_.push_back(0);

  // rmul[x * k + s] = x * gens[s]
  std::vector<Elem> rmul;
  rmul.reserve(n * gens.size());
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation y = compose(elements_[head], gens[s]);
      auto it = index_.find(y);
      Elem idx;
      if (it == index_.end()) {
        idx = static_cast<Elem>(elements_.size());
        index_.emplace(y, idx);
        elements_.push_back(std::move(y));
        parent_.push_back(static_cast<Elem>(head));
        parent_gen_.push_back(static_cast<std::uint16_t>(s));
      } else {
        idx = it->second;
      }
      rmul.push_back(idx);
    }
  }
  if (elements_.size() != n) throw Error("closure size disagrees with chain order");

  const std::size_t k = gens.size();
  table_.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    Elem* row = &table_[x * n];
    row[0] = static_cast<Elem>(x);
    for (std::size_t e = 1; e < n; ++e) {
      row[e] = rmul[std::size_t{row[parent_[e]]} * k + parent_gen_[e]];
    }
  }

  inverse_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem* row = &table_[x * n];
    for (std::size_t y = 0; y < n; ++y) {
      if (row[y] == 0) {
        inverse_[x] = static_cast<Elem>(y);
        break;
      }
    }
  }

  orders_.assign(n, 1);
  for (std::size_t x = 1; x < n; ++x) {
    std::uint64_t o = 1;
    Elem y = static_cast<Elem>(x);
    while (y != 0) {
      y = mul(y, static_cast<Elem>(x));
      ++o;
    }
    orders_[x] = o;
  }

  for (const auto& g : gens) {
    const Elem e = index_.at(g);
    if (e != 0 && std::find(generator_elems_.begin(), generator_elems_.end(), e) == generator_elems_.end()) {
      generator_elems_.push_back(e);
    }
  }
}

Elem GroupTable::power(Elem a, std::uint64_t k) const noexcept {
  Elem result = 0;
  Elem base = a;
  k %= orders_[a];
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    base = mul(base, base);
    k >>= 1u;
  }
  return result;
}

std::optional<Elem> GroupTable::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> GroupTable::word(Elem a) const {
  std::vector<std::size_t> w;
  while (a != 0) {
    w.push_back(parent_gen_[a]);
    a = parent_[a];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

ElementSet GroupTable::full() const {
  ElementSet s(size());
  for (std::size_t i = 0; i < size(); ++i) s.insert(i);
  return s;
}

TableSubgroup GroupTable::whole() const {
  return TableSubgroup{full(), std::vector<Elem>(generator_elems_.begin(), generator_elems_.end())};
}

TableSubgroup GroupTable::trivial() const {
  ElementSet s(size());
  s.insert(0);
  return TableSubgroup{std::move(s), {}};
}

ElementSet GroupTable::closure(std::span<const Elem> gens) const {
  ElementSet s(size());
  std::vector<Elem> queue{0};
  s.insert(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem x = queue[head];
    for (Elem g : gens) {
      const Elem y = mul(x, g);
      if (s.insert(y)) queue.push_back(y);
    }
  }
  return s;
}

TableSubgroup GroupTable::subgroup(std::vector<Elem> gens) const {
  std::erase(gens, Elem{0});
  ElementSet s = closure(gens);
  return TableSubgroup{std::move(s), std::move(gens)};
}

ElementSet GroupTable::extend(const ElementSet& base, std::span<const Elem> extra) const {
  ElementSet out = base;
  const std::vector<Elem> base_members = base.members();
  std::vector<Elem> reps{0};
  for (std::size_t head = 0; head < reps.size(); ++head) {
    const Elem y = reps[head];
    for (Elem s : extra) {
      const Elem z = mul(y, s);
      if (out.test(z)) continue;
      reps.push_back(z);
      for (Elem h : base_members) out.insert(mul(h, z));
    }
  }
  return out;
}

TableSubgroup GroupTable::normal_closure(std::vector<Elem> gens, std::span<const Elem> by) const {
  std::erase(gens, Elem{0});
  ElementSet s = closure(gens);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < gens.size() && !changed; ++i) {
      for (Elem g : by) {
        const Elem c = conj(gens[i], g);
        if (!s.test(c)) {
          gens.push_back(c);
          s = closure(gens);
          changed = true;
          break;
        }
      }
    }
  }
  return TableSubgroup{std::move(s), std::move(gens)};
}

bool GroupTable::normalizes(Elem g, const TableSubgroup& h) const noexcept {
  for (Elem x : h.generators) {
    if (!h.elements.test(conj(x, g))) return false;
  }
  return true;
}

ElementSet GroupTable::normalizer(const ElementSet& within, const TableSubgroup& h) const {
  ElementSet out(size());
  for (Elem g : within.members()) {
    if (normalizes(g, h)) out.insert(g);
  }
  return out;
}

bool GroupTable::is_normal_in(const TableSubgroup& h, std::span<const Elem> of_gens) const noexcept {
  for (Elem g : of_gens) {
    if (!normalizes(g, h)) return false;
  }
  return true;
}

bool GroupTable::contains_all(const ElementSet& s, std::span<const Elem> gens) const noexcept {
  for (Elem g : gens) {
    if (!s.test(g)) return false;
  }
  return true;
}

std::vector<std::vector<Elem>> GroupTable::conjugacy_classes() const {
  std::vector<std::vector<Elem>> classes;
  std::vector<bool> seen(size(), false);
  for (std::size_t x = 0; x < size(); ++x) {
    if (seen[x]) continue;
    std::vector<Elem> cls{static_cast<Elem>(x)};
    seen[x] = true;
    for (std::size_t head = 0; head < cls.size(); ++head) {
      for (Elem g : generator_elems_) {
        const Elem y = conj(cls[head], g);
        if (!seen[y]) {
          seen[y] = true;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

ElementSet GroupTable::center() const {
  ElementSet z(size());
  for (std::size_t x = 0; x < size(); ++x) {
    bool central = true;
    for (Elem g : generator_elems_) {
      if (mul(static_cast<Elem>(x), g) != mul(g, static_cast<Elem>(x))) {
        central = false;
        break;
      }
    }
    if (central) z.insert(x);
  }
  return z;
}

}  // namespace grpkit
