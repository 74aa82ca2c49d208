#ifndef CLOPEN_RING_HPP
#define CLOPEN_RING_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "clopen/arith.hpp"
#include "clopen/error.hpp"
#include "clopen/gf_poly.hpp"

namespace clopen {

using u64 = std::uint64_t;

inline constexpr u64 max_poly_characteristic = u64{1} << 31;
inline constexpr std::size_t max_poly_degree = 16;
inline constexpr std::size_t max_table_ring = 64;

/// Z/n with n >= 2.
struct Zmod {
  u64 n;
  friend bool operator==(const Zmod&, const Zmod&) = default;
};

/// GF(p)[x]/(f) with f monic of degree >= 1.
struct PolyQuot {
  u64 p;
  gfp::Poly f;
  friend bool operator==(const PolyQuot&, const PolyQuot&) = default;
};

/// A commutative unital ring given by operation tables on 0..size-1.
struct TableRing {
  std::size_t size = 0;
  std::vector<std::uint8_t> add;  // row-major size x size
  std::vector<std::uint8_t> mul;
  std::size_t zero = 0;
  std::size_t one = 0;
  std::string label;  // source path or provenance, used in rendering

  std::size_t plus(std::size_t a, std::size_t b) const { return add[a * size + b]; }
  std::size_t times(std::size_t a, std::size_t b) const { return mul[a * size + b]; }

  friend bool operator==(const TableRing& a, const TableRing& b) {
    return a.size == b.size && a.add == b.add && a.mul == b.mul && a.zero == b.zero &&
           a.one == b.one;
  }
};

struct RingDesc;

struct Product {
  std::vector<RingDesc> factors;
};

/// Descriptor of a computable finite commutative ring.
struct RingDesc {
  std::variant<Zmod, PolyQuot, Product, TableRing> kind;
};

inline bool operator==(const Product& a, const Product& b);
inline bool operator==(const RingDesc& a, const RingDesc& b) { return a.kind == b.kind; }
inline bool operator==(const Product& a, const Product& b) { return a.factors == b.factors; }

inline RingDesc make_zmod(u64 n) {
  if (n < 2) fail(ErrorKind::invalid_input, "Z/n needs modulus n >= 2 (the zero ring is excluded)");
  return {Zmod{n}};
}

inline RingDesc make_poly_quot(u64 p, gfp::Poly f) {
  if (!arith::is_prime(p)) fail(ErrorKind::invalid_input, "GF(p) needs p prime, got " + std::to_string(p));
  if (p >= max_poly_characteristic) fail(ErrorKind::resource, "characteristic too large");
  for (auto& c : f)
    if (c >= p) fail(ErrorKind::invalid_input, "polynomial coefficients must be reduced mod p");
  gfp::trim(f);
  if (gfp::degree(f) < 1) fail(ErrorKind::invalid_input, "modulus polynomial must have degree >= 1");
  if (f.back() != 1) fail(ErrorKind::invalid_input, "modulus polynomial must be monic");
  if (f.size() - 1 > max_poly_degree) fail(ErrorKind::resource, "modulus polynomial degree above 16");
  return {PolyQuot{p, std::move(f)}};
}

inline RingDesc make_product(std::vector<RingDesc> factors) {
  if (factors.empty()) fail(ErrorKind::invalid_input, "product of zero rings is excluded");
  return {Product{std::move(factors)}};
}

/// Validates every commutative unital ring axiom (O(size^3)).
inline RingDesc make_table(TableRing t) {
  const std::size_t s = t.size;
  if (s < 2) fail(ErrorKind::invalid_input, "table ring needs at least 2 elements (zero ring excluded)");
  if (s > max_table_ring) fail(ErrorKind::resource, "table rings are capped at 64 elements");
  if (t.add.size() != s * s || t.mul.size() != s * s)
    fail(ErrorKind::invalid_input, "operation tables must be size x size");
  if (t.zero >= s || t.one >= s) fail(ErrorKind::invalid_input, "zero/one out of range");
  if (t.zero == t.one) fail(ErrorKind::invalid_input, "zero equals one (zero ring excluded)");
  for (std::size_t i = 0; i < s * s; ++i)
    if (t.add[i] >= s || t.mul[i] >= s) fail(ErrorKind::invalid_input, "table entry out of range");
  auto violation = [](const std::string& law, std::size_t a, std::size_t b, std::size_t c) {
    fail(ErrorKind::invalid_input, "ring axiom violated: " + law + " at (" + std::to_string(a) +
                                       "," + std::to_string(b) + "," + std::to_string(c) + ")");
  };
  for (std::size_t a = 0; a < s; ++a) {
    if (t.plus(a, t.zero) != a) violation("a+0=a", a, 0, 0);
    if (t.times(a, t.one) != a) violation("a*1=a", a, 0, 0);
    bool has_neg = false;
    for (std::size_t b = 0; b < s; ++b) {
      has_neg = has_neg || t.plus(a, b) == t.zero;
      if (t.plus(a, b) != t.plus(b, a)) violation("a+b=b+a", a, b, 0);
      if (t.times(a, b) != t.times(b, a)) violation("ab=ba", a, b, 0);
      for (std::size_t c = 0; c < s; ++c) {
        if (t.plus(t.plus(a, b), c) != t.plus(a, t.plus(b, c))) violation("(a+b)+c=a+(b+c)", a, b, c);
        if (t.times(t.times(a, b), c) != t.times(a, t.times(b, c))) violation("(ab)c=a(bc)", a, b, c);
        if (t.times(a, t.plus(b, c)) != t.plus(t.times(a, b), t.times(a, c)))
          violation("a(b+c)=ab+ac", a, b, c);
      }
    }
    if (!has_neg) violation("additive inverse", a, 0, 0);
  }
  return {std::move(t)};
}

inline std::string to_string(const RingDesc& d);

namespace detail {
inline std::string render_factor(const RingDesc& d, bool first) {
  const bool wrap = !first && std::holds_alternative<Product>(d.kind) &&
                    std::get<Product>(d.kind).factors.size() > 1;
  return wrap ? "(" + to_string(d) + ")" : to_string(d);
}
}  // namespace detail

/// Descriptor in the textual grammar: Z/n, GF(p)[x]/(f), A x B, table:path.
inline std::string to_string(const RingDesc& d) {
  return std::visit(
      [](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Zmod>) {
          return "Z/" + std::to_string(k.n);
        } else if constexpr (std::is_same_v<T, PolyQuot>) {
          return "GF(" + std::to_string(k.p) + ")[x]/(" + gfp::format(k.f) + ")";
        } else if constexpr (std::is_same_v<T, Product>) {
          std::string out;
          for (std::size_t i = 0; i < k.factors.size(); ++i) {
            if (i) out += " x ";
            out += detail::render_factor(k.factors[i], i == 0);
          }
          return out;
        } else {
          return "table:" + k.label;
        }
      },
      d.kind);
}

/// Canonical element representation: a flat word vector. Zmod and Table use
/// one word, PolyQuot one word per coefficient (deg f words), Product the
/// concatenation of its factors.
struct RingElem {
  std::vector<u64> words;

  friend bool operator==(const RingElem&, const RingElem&) = default;
  friend auto operator<=>(const RingElem&, const RingElem&) = default;
};

struct RingElemHash {
  std::size_t operator()(const RingElem& e) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : e.words) h ^= std::hash<u64>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

/// A ring descriptor together with its element layout and arithmetic.
class Ring {
 public:
  explicit Ring(RingDesc desc) : desc_(std::move(desc)) {
    if (auto* p = std::get_if<Product>(&desc_.kind)) {
      std::size_t off = 0;
      for (const auto& f : p->factors) {
        children_.emplace_back(f);
        offsets_.push_back(off);
        off += children_.back().width();
      }
      width_ = off;
    } else if (auto* q = std::get_if<PolyQuot>(&desc_.kind)) {
      width_ = q->f.size() - 1;
    } else {
      width_ = 1;
    }
  }

  const RingDesc& desc() const { return desc_; }
  std::string name() const { return to_string(desc_); }
  std::size_t width() const { return width_; }
  const std::vector<Ring>& factors() const { return children_; }

  bool is_zmod() const { return std::holds_alternative<Zmod>(desc_.kind); }
  bool is_poly() const { return std::holds_alternative<PolyQuot>(desc_.kind); }
  bool is_product() const { return std::holds_alternative<Product>(desc_.kind); }
  bool is_table() const { return std::holds_alternative<TableRing>(desc_.kind); }
  const Zmod& zmod() const { return std::get<Zmod>(desc_.kind); }
  const PolyQuot& poly() const { return std::get<PolyQuot>(desc_.kind); }
  const TableRing& table() const { return std::get<TableRing>(desc_.kind); }

  /// The i-th factor's slice of a product element.
  RingElem component(const RingElem& a, std::size_t i) const {
    const auto begin = a.words.begin() + static_cast<std::ptrdiff_t>(offsets_[i]);
    return {{begin, begin + static_cast<std::ptrdiff_t>(children_[i].width())}};
  }

  RingElem assemble(const std::vector<RingElem>& parts) const {
    RingElem out;
    for (const auto& p : parts) out.words.insert(out.words.end(), p.words.begin(), p.words.end());
    return out;
  }

  RingElem zero() const { return from_int(0); }
  RingElem one() const { return from_int(1); }

  RingElem from_int(std::int64_t v) const {
    if (is_product()) return map_factors([&](const Ring& r, std::size_t) { return r.from_int(v); });
    if (is_table()) {
      const auto& t = table();
      std::size_t acc = t.zero;
      const std::size_t unit = v >= 0 ? t.one : negate_index(t, t.one);
      const u64 reps = static_cast<u64>(v >= 0 ? v : -v) % (t.size * t.size);
      for (u64 i = 0; i < reps; ++i) acc = t.plus(acc, unit);
      return {{acc}};
    }
    const u64 m = modulus();
    const std::int64_t sm = static_cast<std::int64_t>(m);
    const u64 r = static_cast<u64>(((v % sm) + sm) % sm);
    if (is_zmod()) return {{r}};
    RingElem e{std::vector<u64>(width_, 0)};
    e.words[0] = r;
    return e;
  }

  RingElem add(const RingElem& a, const RingElem& b) const {
    if (is_product()) return map_factors([&](const Ring& r, std::size_t i) {
      return r.add(component(a, i), component(b, i));
    });
    if (is_table()) return {{table().plus(a.words[0], b.words[0])}};
    const u64 m = modulus();
    RingElem out{a.words};
    for (std::size_t i = 0; i < width_; ++i) out.words[i] = (a.words[i] + b.words[i]) % m;
    return out;
  }

  RingElem neg(const RingElem& a) const {
    if (is_product()) return map_factors([&](const Ring& r, std::size_t i) { return r.neg(component(a, i)); });
    if (is_table()) return {{negate_index(table(), a.words[0])}};
    const u64 m = modulus();
    RingElem out{a.words};
    for (auto& w : out.words) w = (m - w) % m;
    return out;
  }

  RingElem sub(const RingElem& a, const RingElem& b) const { return add(a, neg(b)); }

  RingElem mul(const RingElem& a, const RingElem& b) const {
    if (is_product()) return map_factors([&](const Ring& r, std::size_t i) {
      return r.mul(component(a, i), component(b, i));
    });
    if (is_table()) return {{table().times(a.words[0], b.words[0])}};
    if (is_zmod()) return {{arith::mul_mod(a.words[0], b.words[0], zmod().n)}};
    const auto& q = poly();
    return from_poly(gfp::mod(gfp::mul(to_poly(a), to_poly(b), q.p), q.f, q.p));
  }

  /// Repeated product; pow(a, 0) = 1.
  RingElem pow(RingElem a, u64 k) const {
    RingElem out = one();
    while (k) {
      if (k & 1U) out = mul(out, a);
      a = mul(a, a);
      k >>= 1U;
    }
    return out;
  }

  bool is_zero(const RingElem& a) const { return a == zero(); }

  /// Element count, or nullopt beyond 2^63.
  std::optional<u64> size() const {
    if (is_product()) {
      u64 total = 1;
      for (const auto& c : children_) {
        auto s = c.size();
        if (!s || *s > (u64{1} << 63) / total) return std::nullopt;
        total *= *s;
      }
      return total;
    }
    if (is_table()) return table().size;
    if (is_zmod()) return zmod().n;
    u64 total = 1;
    for (std::size_t i = 0; i < width_; ++i) {
      if (poly().p > (u64{1} << 63) / total) return std::nullopt;
      total *= poly().p;
    }
    return total;
  }

  /// Mixed-radix decoding of an index in [0, size).
  RingElem element_at(u64 index) const {
    if (is_product()) {
      std::vector<RingElem> parts;
      for (const auto& c : children_) {
        const u64 s = *c.size();
        parts.push_back(c.element_at(index % s));
        index /= s;
      }
      return assemble(parts);
    }
    if (is_table() || is_zmod()) return {{index}};
    RingElem e{std::vector<u64>(width_)};
    for (auto& w : e.words) {
      w = index % poly().p;
      index /= poly().p;
    }
    return e;
  }

  u64 index_of(const RingElem& a) const {
    if (is_product()) {
      u64 idx = 0, mult = 1;
      for (std::size_t i = 0; i < children_.size(); ++i) {
        idx += mult * children_[i].index_of(component(a, i));
        mult *= *children_[i].size();
      }
      return idx;
    }
    if (is_table() || is_zmod()) return a.words[0];
    u64 idx = 0;
    for (std::size_t i = width_; i-- > 0;) idx = idx * poly().p + a.words[i];
    return idx;
  }

  /// All elements in index order; throws Error(resource) above `limit`.
  std::vector<RingElem> elements(u64 limit = u64{1} << 20) const {
    const auto s = size();
    if (!s || *s > limit) fail(ErrorKind::resource, "ring " + name() + " too large to enumerate");
    std::vector<RingElem> out;
    out.reserve(*s);
    for (u64 i = 0; i < *s; ++i) out.push_back(element_at(i));
    return out;
  }

  RingElem random(std::mt19937_64& rng) const {
    if (is_product()) return map_factors([&](const Ring& r, std::size_t) { return r.random(rng); });
    if (is_table()) return {{rng() % table().size}};
    const u64 m = modulus();
    RingElem e{std::vector<u64>(width_)};
    for (auto& w : e.words) w = rng() % m;
    return e;
  }

  std::string format(const RingElem& a) const {
    if (is_product()) {
      std::string out = "(";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) out += ", ";
        out += children_[i].format(component(a, i));
      }
      return out + ")";
    }
    if (is_poly()) return gfp::format(to_poly(a));
    return std::to_string(a.words[0]);
  }

  /// Polynomial view of a PolyQuot element.
  gfp::Poly to_poly(const RingElem& a) const {
    gfp::Poly f = a.words;
    gfp::trim(f);
    return f;
  }

  RingElem from_poly(gfp::Poly f) const {
    f = gfp::mod(f, poly().f, poly().p);
    f.resize(width_, 0);
    return {std::move(f)};
  }

 private:
  u64 modulus() const { return is_zmod() ? zmod().n : poly().p; }

  static std::size_t negate_index(const TableRing& t, std::size_t a) {
    for (std::size_t b = 0; b < t.size; ++b)
      if (t.plus(a, b) == t.zero) return b;
    fail(ErrorKind::invalid_input, "table element without additive inverse");
  }

  template <class F>
  RingElem map_factors(F&& f) const {
    std::vector<RingElem> parts;
    parts.reserve(children_.size());
    for (std::size_t i = 0; i < children_.size(); ++i) parts.push_back(f(children_[i], i));
    return assemble(parts);
  }

  RingDesc desc_;
  std::vector<Ring> children_;
  std::vector<std::size_t> offsets_;
  std::size_t width_ = 1;
};

/// Table form of a small ring; element ids are Ring::index_of positions.
inline RingDesc tabulate_ring(const Ring& r, std::string label) {
  const auto elems = r.elements(max_table_ring);
  TableRing t;
  t.size = elems.size();
  t.add.resize(t.size * t.size);
  t.mul.resize(t.size * t.size);
  for (std::size_t i = 0; i < t.size; ++i)
    for (std::size_t j = 0; j < t.size; ++j) {
      t.add[i * t.size + j] = static_cast<std::uint8_t>(r.index_of(r.add(elems[i], elems[j])));
      t.mul[i * t.size + j] = static_cast<std::uint8_t>(r.index_of(r.mul(elems[i], elems[j])));
    }
  t.zero = r.index_of(r.zero());
  t.one = r.index_of(r.one());
  t.label = std::move(label);
  return make_table(std::move(t));
}

/// Relabel a table ring's elements by the permutation `perm` (old -> new).
inline RingDesc permute_table(const TableRing& t, const std::vector<std::size_t>& perm) {
  TableRing out;
  out.size = t.size;
  out.add.resize(t.size * t.size);
  out.mul.resize(t.size * t.size);
  for (std::size_t i = 0; i < t.size; ++i)
    for (std::size_t j = 0; j < t.size; ++j) {
      out.add[perm[i] * t.size + perm[j]] = static_cast<std::uint8_t>(perm[t.plus(i, j)]);
      out.mul[perm[i] * t.size + perm[j]] = static_cast<std::uint8_t>(perm[t.times(i, j)]);
    }
  out.zero = perm[t.zero];
  out.one = perm[t.one];
  out.label = t.label;
  return make_table(std::move(out));
}

inline nlohmann::json table_to_json(const TableRing& t) {
  std::vector<std::vector<std::size_t>> add(t.size), mul(t.size);
  for (std::size_t i = 0; i < t.size; ++i)
    for (std::size_t j = 0; j < t.size; ++j) {
      add[i].push_back(t.plus(i, j));
      mul[i].push_back(t.times(i, j));
    }
  return {{"size", t.size}, {"add", add}, {"mul", mul}, {"zero", t.zero}, {"one", t.one}};
}

inline RingDesc table_from_json(const nlohmann::json& j, std::string label) {
  try {
    TableRing t;
    t.size = j.at("size").get<std::size_t>();
    if (t.size > max_table_ring) fail(ErrorKind::resource, "table rings are capped at 64 elements");
    const auto add = j.at("add").get<std::vector<std::vector<std::size_t>>>();
    const auto mul = j.at("mul").get<std::vector<std::vector<std::size_t>>>();
    if (add.size() != t.size || mul.size() != t.size)
      fail(ErrorKind::invalid_input, "table row count differs from size");
    for (std::size_t i = 0; i < t.size; ++i) {
      if (add[i].size() != t.size || mul[i].size() != t.size)
        fail(ErrorKind::invalid_input, "table column count differs from size");
      for (std::size_t k = 0; k < t.size; ++k) {
        if (add[i][k] >= t.size || mul[i][k] >= t.size)
          fail(ErrorKind::invalid_input, "table entry out of range");
        t.add.push_back(static_cast<std::uint8_t>(add[i][k]));
        t.mul.push_back(static_cast<std::uint8_t>(mul[i][k]));
      }
    }
    t.zero = j.at("zero").get<std::size_t>();
    t.one = j.at("one").get<std::size_t>();
    t.label = std::move(label);
    return make_table(std::move(t));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::invalid_input, std::string("table JSON: ") + e.what());
  }
}

}  // namespace clopen

#endif  // CLOPEN_RING_HPP
