#ifndef HEDGEGRAPH_TYPES_HPP
#define HEDGEGRAPH_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <boost/rational.hpp>

namespace hedge {

using VertexId = std::uint32_t;
using HedgeIndex = std::uint32_t;
using Rational = boost::rational<std::int64_t>;

/// Exact decimal rendering of a rational whose denominator divides a power
/// of ten; anything else is written as "num/den".
std::string to_string(const Rational& r);

/// Parses an unsigned or signed decimal literal ("3", "0.25", "-1.5").
/// Throws std::invalid_argument on malformed text.
Rational parse_decimal(std::string_view text);

double to_double(const Rational& r);

/// A value that may be +infinity (used for ratios under the 0/0 = +inf convention).
template <class T>
class Extended {
 public:
  Extended() = default;
  Extended(T value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  static Extended infinity() { return Extended(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  const T& value() const {
    if (!value_) throw std::logic_error("value() on an infinite Extended");
    return *value_;
  }

  friend bool operator==(const Extended& a, const Extended& b) { return a.value_ == b.value_; }
  friend bool operator<(const Extended& a, const Extended& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return *a.value_ < *b.value_;
  }

 private:
  std::optional<T> value_;
};

/// Subset of a fixed hedge universe {0, ..., universe-1}.
class HedgeSet {
 public:
  HedgeSet() = default;
  explicit HedgeSet(std::size_t universe) : bits_(universe) {}

  static HedgeSet full(std::size_t universe);
  static HedgeSet from_indices(std::size_t universe, std::span<const HedgeIndex> indices);
  static HedgeSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(HedgeIndex e) const { return e < bits_.size() && bits_.test(e); }

  void insert(HedgeIndex e);
  void erase(HedgeIndex e);

  std::vector<HedgeIndex> indices() const;
  std::uint64_t mask() const;  // requires universe() <= 64

  template <class F>
  void for_each(F&& fn) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) fn(static_cast<HedgeIndex>(i));
  }

  HedgeSet complement() const;
  bool is_subset_of(const HedgeSet& other) const;

  HedgeSet& operator|=(const HedgeSet& other);
  HedgeSet& operator&=(const HedgeSet& other);
  HedgeSet& operator-=(const HedgeSet& other);
  friend HedgeSet operator|(HedgeSet a, const HedgeSet& b) { return a |= b; }
  friend HedgeSet operator&(HedgeSet a, const HedgeSet& b) { return a &= b; }
  friend HedgeSet operator-(HedgeSet a, const HedgeSet& b) { return a -= b; }

  friend bool operator==(const HedgeSet& a, const HedgeSet& b) { return a.bits_ == b.bits_; }
  /// Total order: sorted index lists compared lexicographically.
  friend bool operator<(const HedgeSet& a, const HedgeSet& b);

 private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  void check_same_universe(const HedgeSet& other) const;
  Bits bits_;
};

std::ostream& operator<<(std::ostream& os, const HedgeSet& set);

/// Raised when an operation receives a hedge set, vertex or argument that is
/// inconsistent with the hedgegraph it is applied to.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when exhaustive enumeration would exceed the configured limits.
class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hedge

#endif  // HEDGEGRAPH_TYPES_HPP
