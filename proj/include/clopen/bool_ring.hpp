#ifndef CLOPEN_BOOL_RING_HPP
#define CLOPEN_BOOL_RING_HPP

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "clopen/error.hpp"
#include "clopen/point_set.hpp"

namespace clopen {

/// Anything exposing a finite Boolean ring on element ids 0..size()-1.
template <class B>
concept BooleanRing = requires(const B& b, std::size_t i) {
  { b.size() } -> std::convertible_to<std::size_t>;
  { b.add(i, i) } -> std::convertible_to<std::size_t>;
  { b.mul(i, i) } -> std::convertible_to<std::size_t>;
  { b.zero() } -> std::convertible_to<std::size_t>;
  { b.one() } -> std::convertible_to<std::size_t>;
};

inline constexpr std::size_t max_table_bool_ring = 256;

/// Finite Boolean ring given by explicit operation tables.
class BoolRing {
 public:
  BoolRing() = default;

  /// Tables are row-major `size * size`. Throws on any axiom violation.
  BoolRing(std::size_t size, std::vector<std::uint16_t> add,
           std::vector<std::uint16_t> mul, std::size_t zero, std::size_t one)
      : size_(size), add_(std::move(add)), mul_(std::move(mul)), zero_(zero),
        one_(one) {
    validate();
  }

  std::size_t size() const { return size_; }
  std::size_t add(std::size_t a, std::size_t b) const { return add_[a * size_ + b]; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * size_ + b]; }
  std::size_t zero() const { return zero_; }
  std::size_t one() const { return one_; }

  friend bool operator==(const BoolRing&, const BoolRing&) = default;

 private:
  void validate() const {
    if (size_ == 0) fail(ErrorKind::invalid_input, "Boolean ring must be nonempty");
    if (size_ > max_table_bool_ring)
      fail(ErrorKind::resource, "Boolean ring table larger than 256 elements");
    if (add_.size() != size_ * size_ || mul_.size() != size_ * size_)
      fail(ErrorKind::invalid_input, "operation tables must be size x size");
    if (zero_ >= size_ || one_ >= size_)
      fail(ErrorKind::invalid_input, "zero/one out of range");
    for (auto v : add_)
      if (v >= size_) fail(ErrorKind::invalid_input, "add table entry out of range");
    for (auto v : mul_)
      if (v >= size_) fail(ErrorKind::invalid_input, "mul table entry out of range");

    auto violation = [](const std::string& law, std::size_t a, std::size_t b,
                        std::size_t c) {
      fail(ErrorKind::invalid_input,
           "Boolean ring axiom violated: " + law + " at (" + std::to_string(a) +
               "," + std::to_string(b) + "," + std::to_string(c) + ")");
    };
    for (std::size_t a = 0; a < size_; ++a) {
      if (add(a, zero_) != a) violation("a+0=a", a, 0, 0);
      if (mul(a, one_) != a) violation("a*1=a", a, 0, 0);
      if (mul(a, a) != a) violation("a*a=a", a, 0, 0);
      if (add(a, a) != zero_) violation("a+a=0", a, 0, 0);
      for (std::size_t b = 0; b < size_; ++b) {
        if (add(a, b) != add(b, a)) violation("a+b=b+a", a, b, 0);
        if (mul(a, b) != mul(b, a)) violation("ab=ba", a, b, 0);
        for (std::size_t c = 0; c < size_; ++c) {
          if (add(add(a, b), c) != add(a, add(b, c))) violation("(a+b)+c", a, b, c);
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) violation("(ab)c", a, b, c);
          if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
            violation("a(b+c)=ab+ac", a, b, c);
        }
      }
    }
  }

  std::size_t size_ = 0;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::size_t zero_ = 0;
  std::size_t one_ = 0;
};

/// Tabulate any Boolean ring view into an explicit table ring.
template <BooleanRing B>
BoolRing tabulate(const B& b) {
  const std::size_t s = b.size();
  if (s > max_table_bool_ring)
    fail(ErrorKind::resource, "cannot tabulate Boolean ring with " +
                                  std::to_string(s) + " elements");
  std::vector<std::uint16_t> add(s * s), mul(s * s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      add[i * s + j] = static_cast<std::uint16_t>(b.add(i, j));
      mul[i * s + j] = static_cast<std::uint16_t>(b.mul(i, j));
    }
  return BoolRing(s, std::move(add), std::move(mul), b.zero(), b.one());
}

/// The ring (Z/2)^k realized on bit vectors; element id = bit pattern.
class PowerSetRing {
 public:
  explicit PowerSetRing(std::size_t k) : k_(k) {
    if (k > 16) fail(ErrorKind::resource, "(Z/2)^k limited to k <= 16");
  }
  std::size_t size() const { return std::size_t{1} << k_; }
  std::size_t add(std::size_t a, std::size_t b) const { return a ^ b; }
  std::size_t mul(std::size_t a, std::size_t b) const { return a & b; }
  std::size_t zero() const { return 0; }
  std::size_t one() const { return size() - 1; }
  std::size_t rank() const { return k_; }

 private:
  std::size_t k_;
};

/// Clopen subsets of a finite space under symmetric difference and
/// intersection. Elements kept sorted; ids are positions.
class ClopRing {
 public:
  ClopRing(std::size_t points, std::vector<PointSet> clopens)
      : points_(points), sets_(std::move(clopens)) {
    std::sort(sets_.begin(), sets_.end());
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
    if (sets_.empty() || sets_.front() != 0 || sets_.back() != full_set(points_))
      fail(ErrorKind::invalid_input, "clopen family must contain the empty and full sets");
  }

  std::size_t size() const { return sets_.size(); }
  std::size_t zero() const { return 0; }
  std::size_t one() const { return index_of(full_set(points_)); }
  std::size_t add(std::size_t a, std::size_t b) const {
    return index_of(sets_[a] ^ sets_[b]);
  }
  std::size_t mul(std::size_t a, std::size_t b) const {
    return index_of(sets_[a] & sets_[b]);
  }

  PointSet set(std::size_t id) const { return sets_[id]; }
  const std::vector<PointSet>& sets() const { return sets_; }
  std::size_t points() const { return points_; }

  std::size_t index_of(PointSet s) const {
    auto it = std::lower_bound(sets_.begin(), sets_.end(), s);
    if (it == sets_.end() || *it != s)
      fail(ErrorKind::invalid_input, "set " + format_set(s) + " is not clopen");
    return static_cast<std::size_t>(it - sets_.begin());
  }

  bool contains_set(PointSet s) const {
    return std::binary_search(sets_.begin(), sets_.end(), s);
  }

 private:
  std::size_t points_;
  std::vector<PointSet> sets_;
};

inline nlohmann::json to_json(const BoolRing& b) {
  std::vector<std::vector<std::size_t>> add(b.size()), mul(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      add[i].push_back(b.add(i, j));
      mul[i].push_back(b.mul(i, j));
    }
  return {{"size", b.size()}, {"add", add}, {"mul", mul},
          {"zero", b.zero()}, {"one", b.one()}};
}

inline BoolRing bool_ring_from_json(const nlohmann::json& j) {
  try {
    const auto size = j.at("size").get<std::size_t>();
    const auto add = j.at("add").get<std::vector<std::vector<std::size_t>>>();
    const auto mul = j.at("mul").get<std::vector<std::vector<std::size_t>>>();
    if (size > max_table_bool_ring)
      fail(ErrorKind::resource, "Boolean ring JSON larger than 256 elements");
    if (add.size() != size || mul.size() != size)
      fail(ErrorKind::invalid_input, "table row count differs from size");
    std::vector<std::uint16_t> a, m;
    for (std::size_t i = 0; i < size; ++i) {
      if (add[i].size() != size || mul[i].size() != size)
        fail(ErrorKind::invalid_input, "table column count differs from size");
      for (std::size_t k = 0; k < size; ++k) {
        a.push_back(static_cast<std::uint16_t>(std::min<std::size_t>(add[i][k], 0xffff)));
        m.push_back(static_cast<std::uint16_t>(std::min<std::size_t>(mul[i][k], 0xffff)));
      }
    }
    return BoolRing(size, std::move(a), std::move(m), j.at("zero").get<std::size_t>(),
                    j.at("one").get<std::size_t>());
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::invalid_input, std::string("Boolean ring JSON: ") + e.what());
  }
}

}  // namespace clopen

#endif  // CLOPEN_BOOL_RING_HPP
