#include "hedgegraph/types.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace hedge {

std::string to_string(const Rational& r) {
  std::int64_t num = r.numerator();
  std::int64_t den = r.denominator();
  // den must be 2^a 5^b for an exact decimal form.
  std::int64_t rest = den;
  int twos = 0;
  int fives = 0;
  while (rest % 2 == 0) rest /= 2, ++twos;
  while (rest % 5 == 0) rest /= 5, ++fives;
  if (rest != 1) return std::to_string(num) + "/" + std::to_string(den);

  int digits = std::max(twos, fives);
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  std::int64_t scaled = num * (scale / den);
  bool negative = scaled < 0;
  std::uint64_t mag = negative ? static_cast<std::uint64_t>(-scaled) : static_cast<std::uint64_t>(scaled);
  std::string whole = std::to_string(mag / static_cast<std::uint64_t>(scale));
  std::string out = negative ? "-" + whole : whole;
  if (digits > 0) {
    std::string frac = std::to_string(mag % static_cast<std::uint64_t>(scale));
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    out += "." + frac;
  }
  return out;
}

Rational parse_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool seen_digit = false;
  bool seen_point = false;
  constexpr std::int64_t kLimit = std::numeric_limits<std::int64_t>::max() / 10;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.' && !seen_point) {
      seen_point = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    if (num > kLimit || den > kLimit) throw std::invalid_argument("number out of range '" + std::string(text) + "'");
    num = num * 10 + (c - '0');
    if (seen_point) den *= 10;
    seen_digit = true;
  }
  if (!seen_digit) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  return Rational(negative ? -num : num, den);
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

HedgeSet HedgeSet::full(std::size_t universe) {
  HedgeSet s(universe);
  s.bits_.set();
  return s;
}

HedgeSet HedgeSet::from_indices(std::size_t universe, std::span<const HedgeIndex> indices) {
  HedgeSet s(universe);
  for (HedgeIndex e : indices) s.insert(e);
  return s;
}

HedgeSet HedgeSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe < 64 && (mask >> universe) != 0) throw InvalidArgument("mask has bits outside the hedge universe");
  HedgeSet s(universe);
  for (std::size_t i = 0; i < universe && i < 64; ++i)
    if ((mask >> i) & 1U) s.bits_.set(i);
  return s;
}

void HedgeSet::insert(HedgeIndex e) {
  if (e >= bits_.size()) throw InvalidArgument("unknown hedge index " + std::to_string(e));
  bits_.set(e);
}

void HedgeSet::erase(HedgeIndex e) {
  if (e >= bits_.size()) throw InvalidArgument("unknown hedge index " + std::to_string(e));
  bits_.reset(e);
}

std::vector<HedgeIndex> HedgeSet::indices() const {
  std::vector<HedgeIndex> out;
  out.reserve(size());
  for_each([&](HedgeIndex e) { out.push_back(e); });
  return out;
}

std::uint64_t HedgeSet::mask() const {
  if (bits_.size() > 64) throw InvalidArgument("mask() requires a universe of at most 64 hedges");
  std::uint64_t m = 0;
  for_each([&](HedgeIndex e) { m |= std::uint64_t{1} << e; });
  return m;
}

HedgeSet HedgeSet::complement() const {
  HedgeSet s = *this;
  s.bits_.flip();
  return s;
}

bool HedgeSet::is_subset_of(const HedgeSet& other) const {
  check_same_universe(other);
  return bits_.is_subset_of(other.bits_);
}

HedgeSet& HedgeSet::operator|=(const HedgeSet& other) {
  check_same_universe(other);
  bits_ |= other.bits_;
  return *this;
}

HedgeSet& HedgeSet::operator&=(const HedgeSet& other) {
  check_same_universe(other);
  bits_ &= other.bits_;
  return *this;
}

HedgeSet& HedgeSet::operator-=(const HedgeSet& other) {
  check_same_universe(other);
  bits_ -= other.bits_;
  return *this;
}

bool operator<(const HedgeSet& a, const HedgeSet& b) {
  auto ia = a.indices();
  auto ib = b.indices();
  if (ia != ib) return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
  return a.universe() < b.universe();
}

void HedgeSet::check_same_universe(const HedgeSet& other) const {
  if (bits_.size() != other.bits_.size()) throw InvalidArgument("hedge sets over different universes");
}

std::ostream& operator<<(std::ostream& os, const HedgeSet& set) {
  os << '{';
  bool first = true;
  set.for_each([&](HedgeIndex e) {
    os << (first ? "" : ",") << e;
    first = false;
  });
  return os << '}';
}

}  // namespace hedge
