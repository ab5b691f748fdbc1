#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lbranch/bigint.hpp"
#include "lbranch/errors.hpp"

namespace lbranch {

/// An integral weight in fundamental-weight coordinates: coords[i] = <coroot_i, lambda>.
class Weight {
public:
  Weight() = default;
  Weight(std::initializer_list<int> coords) : c_(coords) {}
  explicit Weight(std::vector<int> coords) : c_(std::move(coords)) {}

  static Weight zero(std::size_t rank) { return Weight(std::vector<int>(rank, 0)); }
  static Weight unit(std::size_t rank, std::size_t i)
  {
    Weight w = zero(rank);
    w.c_[i] = 1;
    return w;
  }

  std::size_t size() const { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }
  std::span<const int> coords() const { return c_; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  bool is_dominant() const
  {
    return std::all_of(c_.begin(), c_.end(), [](int x) { return x >= 0; });
  }
  bool is_zero() const
  {
    return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
  }

  Weight& operator+=(const Weight& o)
  {
    for (std::size_t i = 0; i < c_.size(); ++i)
      c_[i] += o.c_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o)
  {
    for (std::size_t i = 0; i < c_.size(); ++i)
      c_[i] -= o.c_[i];
    return *this;
  }
  Weight& operator*=(int k)
  {
    for (int& x : c_)
      x *= k;
    return *this;
  }

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) { return a *= k; }
  friend Weight operator-(Weight a) { return a *= -1; }

  auto operator<=>(const Weight&) const = default;

  std::string to_string() const
  {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i)
        s += ',';
      s += std::to_string(c_[i]);
    }
    return s + ")";
  }

private:
  std::vector<int> c_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept
  {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int x : w)
      h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(x))) * 0x100000001b3ull;
    return h;
  }
};

/// Sparse integer-valued function on weights; the common storage for characters.
using WeightMap = std::map<Weight, BigInt>;

/// Parses "a,b,c" (no spaces) into a weight.
inline Weight parse_weight(std::string_view text)
{
  std::vector<int> coords;
  if (text.empty())
    throw ParseError("empty weight");
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view part = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
      throw ParseError("malformed weight '" + std::string(text) + "'");
    coords.push_back(value);
    if (comma == std::string_view::npos)
      break;
    pos = comma + 1;
  }
  return Weight(std::move(coords));
}

} // namespace lbranch
