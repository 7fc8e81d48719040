#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncgr1 {

using state_id = std::uint32_t;

/// Thrown when two sets of different width meet in one operation.
class width_mismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Fixed-width bitset over state ids [0, width).
class state_set {
public:
  state_set() = default;
  explicit state_set(std::size_t width);

  static state_set full(std::size_t width);
  static state_set of(std::size_t width, std::initializer_list<state_id> ids);

  std::size_t width() const noexcept { return width_; }
  bool contains(state_id q) const noexcept;
  void insert(state_id q);
  void erase(state_id q);
  void clear() noexcept;

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool intersects(const state_set& other) const;
  bool is_subset_of(const state_set& other) const;

  state_set complement() const;
  state_set& operator|=(const state_set& other);
  state_set& operator&=(const state_set& other);
  state_set& operator-=(const state_set& other);

  friend state_set operator|(state_set lhs, const state_set& rhs) { return lhs |= rhs; }
  friend state_set operator&(state_set lhs, const state_set& rhs) { return lhs &= rhs; }
  friend state_set operator-(state_set lhs, const state_set& rhs) { return lhs -= rhs; }
  bool operator==(const state_set& other) const = default;

  std::vector<state_id> members() const;
  std::string to_string() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int tz = __builtin_ctzll(bits);
        f(static_cast<state_id>(w * 64 + static_cast<std::size_t>(tz)));
        bits &= bits - 1;
      }
    }
  }

private:
  void check_width(const state_set& other) const;
  void check_index(state_id q) const;

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace ncgr1
