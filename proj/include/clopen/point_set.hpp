#ifndef CLOPEN_POINT_SET_HPP
#define CLOPEN_POINT_SET_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace clopen {

/// A subset of {0..63}; bit i set means point i is a member.
using PointSet = std::uint64_t;

inline constexpr std::size_t max_points = 64;

constexpr PointSet full_set(std::size_t n) {
  return n >= 64 ? ~PointSet{0} : (PointSet{1} << n) - 1;
}

constexpr PointSet singleton(std::size_t i) { return PointSet{1} << i; }

constexpr bool contains(PointSet s, std::size_t i) { return (s >> i) & 1U; }

constexpr bool is_subset(PointSet a, PointSet b) { return (a & ~b) == 0; }

constexpr std::size_t cardinality(PointSet s) {
  return static_cast<std::size_t>(std::popcount(s));
}

/// Least member; undefined for the empty set.
constexpr std::size_t least_point(PointSet s) {
  return static_cast<std::size_t>(std::countr_zero(s));
}

inline std::vector<std::size_t> members(PointSet s) {
  std::vector<std::size_t> out;
  out.reserve(cardinality(s));
  while (s != 0) {
    out.push_back(least_point(s));
    s &= s - 1;
  }
  return out;
}

inline PointSet from_members(const std::vector<std::size_t>& pts) {
  PointSet s = 0;
  for (auto p : pts) s |= singleton(p);
  return s;
}

inline std::string format_set(PointSet s) {
  std::string out = "{";
  bool first = true;
  for (auto p : members(s)) {
    if (!first) out += ",";
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

}  // namespace clopen

#endif  // CLOPEN_POINT_SET_HPP
