#include "ncgr1/state_set.hpp"

#include <bit>
#include <sstream>

namespace ncgr1 {

namespace {
std::size_t word_count(std::size_t width) { return (width + 63) / 64; }
}  // namespace

state_set::state_set(std::size_t width) : width_(width), words_(word_count(width), 0) {}

state_set state_set::full(std::size_t width) {
  state_set s(width);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (width % 64 != 0 && !s.words_.empty()) s.words_.back() = (std::uint64_t{1} << (width % 64)) - 1;
  return s;
}

state_set state_set::of(std::size_t width, std::initializer_list<state_id> ids) {
  state_set s(width);
  for (state_id q : ids) s.insert(q);
  return s;
}

void state_set::check_width(const state_set& other) const {
  if (width_ != other.width_)
    throw width_mismatch("state set width mismatch: " + std::to_string(width_) + " vs " +
                         std::to_string(other.width_));
}

void state_set::check_index(state_id q) const {
  if (q >= width_)
    throw std::out_of_range("state " + std::to_string(q) + " outside set of width " + std::to_string(width_));
}

bool state_set::contains(state_id q) const noexcept {
  if (q >= width_) return false;
  return (words_[q / 64] >> (q % 64)) & 1u;
}

void state_set::insert(state_id q) {
  check_index(q);
  words_[q / 64] |= std::uint64_t{1} << (q % 64);
}

void state_set::erase(state_id q) {
  check_index(q);
  words_[q / 64] &= ~(std::uint64_t{1} << (q % 64));
}

void state_set::clear() noexcept {
  for (auto& w : words_) w = 0;
}

std::size_t state_set::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool state_set::empty() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

bool state_set::intersects(const state_set& other) const {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

bool state_set::is_subset_of(const state_set& other) const {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

state_set state_set::complement() const {
  state_set s = full(width_);
  for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] &= ~words_[i];
  return s;
}

state_set& state_set::operator|=(const state_set& other) {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

state_set& state_set::operator&=(const state_set& other) {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

state_set& state_set::operator-=(const state_set& other) {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<state_id> state_set::members() const {
  std::vector<state_id> out;
  out.reserve(count());
  for_each([&](state_id q) { out.push_back(q); });
  return out;
}

std::string state_set::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each([&](state_id q) {
    if (!first) os << ',';
    os << q;
    first = false;
  });
  os << '}';
  return os.str();
}

}  // namespace ncgr1
