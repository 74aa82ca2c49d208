#ifndef CLOPEN_PARSE_HPP
#define CLOPEN_PARSE_HPP

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "clopen/error.hpp"
#include "clopen/report.hpp"
#include "clopen/ring.hpp"
#include "clopen/topo.hpp"

namespace clopen {

namespace detail {

class DescParser {
 public:
  explicit DescParser(const std::string& text) : s_(text) {}

  RingDesc parse() {
    RingDesc d = product();
    skip();
    if (i_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[i_]) + "'", i_);
    return d;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool literal(const char* lit) {
    const std::string l(lit);
    if (s_.compare(i_, l.size(), l) != 0) return false;
    i_ += l.size();
    return true;
  }

  void expect(const char* lit) {
    if (!literal(lit)) throw ParseError(std::string("expected '") + lit + "'", i_);
  }

  u64 number() {
    const std::size_t start = i_;
    u64 v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      const u64 digit = static_cast<u64>(s_[i_] - '0');
      if (v > (UINT64_MAX - digit) / 10) throw ParseError("number out of range", start);
      v = v * 10 + digit;
      ++i_;
    }
    if (i_ == start) throw ParseError("expected a number", i_);
    return v;
  }

  // Left-associative: A x B x C is (A x B) x C.
  RingDesc product() {
    RingDesc left = factor();
    for (;;) {
      const std::size_t save = i_;
      skip();
      if (i_ < s_.size() && s_[i_] == 'x' && i_ > save) {
        ++i_;
        skip();
        left = make_product({std::move(left), factor()});
      } else {
        i_ = save;
        return left;
      }
    }
  }

  RingDesc factor() {
    skip();
    const std::size_t start = i_;
    if (literal("(")) {
      RingDesc d = product();
      skip();
      expect(")");
      return d;
    }
    if (literal("Z/")) return with_column(start, [&] { return make_zmod(number()); });
    if (literal("GF(")) {
      const u64 p = number();
      expect(")");
      if (!literal("[x]/(")) return with_column(start, [&] {
        if (!arith::is_prime(p)) fail(ErrorKind::invalid_input, "GF(p) needs p prime, got " + std::to_string(p));
        return make_zmod(p);
      });
      if (!arith::is_prime(p))
        throw Error(ErrorKind::invalid_input, "GF(p) needs p prime, got " + std::to_string(p) + " (column " +
                                                  std::to_string(start + 1) + ")");
      gfp::Poly f = poly(p);
      expect(")");
      return with_column(start, [&] { return make_poly_quot(p, std::move(f)); });
    }
    if (literal("table:")) {
      const std::size_t path_start = i_;
      while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) && s_[i_] != ')') ++i_;
      if (i_ == path_start) throw ParseError("expected a table path", i_);
      const std::string path = s_.substr(path_start, i_ - path_start);
      std::ifstream in(path);
      if (!in) fail(ErrorKind::invalid_input, "cannot open table file " + path);
      json j;
      try {
        j = json::parse(in);
      } catch (const json::parse_error& e) {
        fail(ErrorKind::parse, "table file " + path + ": " + e.what());
      }
      return table_from_json(j, path);
    }
    throw ParseError("expected Z/<n>, GF(<p>), table:<path> or '('", i_);
  }

  /// Polynomial in x over GF(p): terms like 3x^2, -x, 1.
  gfp::Poly poly(u64 p) {
    gfp::Poly f;
    bool first = true;
    for (;;) {
      skip();
      bool negative = false;
      if (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) {
        negative = s_[i_] == '-';
        ++i_;
        skip();
      } else if (!first) {
        break;
      }
      first = false;
      const std::size_t start = i_;
      u64 c = 1;
      if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) c = number() % p;
      std::size_t k = 0;
      skip();
      if (i_ < s_.size() && s_[i_] == '*') {
        ++i_;
        skip();
      }
      if (i_ < s_.size() && s_[i_] == 'x') {
        ++i_;
        k = 1;
        if (literal("^")) {
          const u64 e = number();
          if (e > 4 * max_poly_degree) throw ParseError("exponent too large", i_);
          k = static_cast<std::size_t>(e);
        }
      } else if (i_ == start) {
        throw ParseError("expected a term", i_);
      }
      if (f.size() <= k) f.resize(k + 1, 0);
      f[k] = (f[k] + (negative ? (p - c) % p : c)) % p;
    }
    gfp::trim(f);
    return f;
  }

  template <class F>
  RingDesc with_column(std::size_t start, F&& build) {
    try {
      return build();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw Error(e.kind(), std::string(e.what()) + " (column " + std::to_string(start + 1) + ")");
    }
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace detail

/// Z/<n> | GF(<p>) | GF(<p>)[x]/(<poly>) | table:<path> | A x B | (A).
inline RingDesc parse_ring_desc(const std::string& text) { return detail::DescParser(text).parse(); }

/// {"n": k, "opens": [[...]]} or {"n": k, "subbasis": [[...]]}, points 0..k-1.
inline FiniteSpace space_from_json(const json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    if (n > max_points) fail(ErrorKind::resource, "spaces are limited to 64 points");
    auto sets = [&](const char* key) {
      std::vector<PointSet> out;
      for (const auto& s : j.at(key)) {
        PointSet m = 0;
        for (const auto& x : s) {
          const auto p = x.get<std::size_t>();
          if (p >= n) fail(ErrorKind::invalid_input, "point " + std::to_string(p) + " outside the space");
          m |= singleton(p);
        }
        out.push_back(m);
      }
      return out;
    };
    if (j.contains("opens")) {
      auto opens = sets("opens");
      std::sort(opens.begin(), opens.end());
      opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
      return FiniteSpace(n, std::move(opens));
    }
    if (j.contains("subbasis")) return from_subbasis(n, sets("subbasis"));
    fail(ErrorKind::invalid_input, "space JSON needs \"opens\" or \"subbasis\"");
  } catch (const json::exception& e) {
    fail(ErrorKind::invalid_input, std::string("space JSON: ") + e.what());
  }
}

inline json space_to_json(const FiniteSpace& x) {
  json opens = json::array();
  for (auto o : x.opens()) opens.push_back(members(o));
  return {{"n", x.size()}, {"opens", opens}};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::invalid_input, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::parse, path + ": " + e.what());
  }
}

}  // namespace clopen

#endif  // CLOPEN_PARSE_HPP
