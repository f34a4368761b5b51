#pragma once

/**
 * @file pbw.hpp
 * @brief Arithmetic in U(L) on ordered (PBW) monomials, the degree filtration,
 * and the restricted quotient U_p.
 *
 * A monomial e_0^{a_0} ... e_{d-1}^{a_{d-1}} is stored as its exponent vector.
 * Products are straightened by multiplying a normal monomial on the right by
 * one generator at a time, using e_j e_k = e_k e_j + [e_j, e_k] for j > k.
 */

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semicat/lie/algebra.hpp"

namespace semicat {

using Exponents = std::vector<std::uint32_t>;

/// Finite K-combination of PBW monomials; zero coefficients are never stored.
struct PbwElement {
  std::map<Exponents, Coeff> terms;

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const PbwElement&, const PbwElement&) = default;
};

inline std::uint32_t total_degree(const Exponents& a) {
  std::uint32_t s = 0;
  for (auto x : a) s += x;
  return s;
}

namespace detail {

inline void add_term(const CoefficientRing& K, PbwElement& u, const Exponents& m, const Coeff& c) {
  if (K.is_zero(c)) return;
  auto [it, fresh] = u.terms.try_emplace(m, c);
  if (fresh) return;
  it->second = K.add(it->second, c);
  if (K.is_zero(it->second)) u.terms.erase(it);
}

inline void add_scaled(const CoefficientRing& K, PbwElement& acc, const PbwElement& u, const Coeff& c) {
  if (K.is_zero(c)) return;
  for (const auto& [m, x] : u.terms) add_term(K, acc, m, K.mul(c, x));
}

/// Normal monomial m times the generator e_k, straightened.
inline PbwElement times_generator(const LieAlgebra& L, const Exponents& m, std::size_t k) {
  const auto& K = L.coefficients();
  std::optional<std::size_t> last;
  for (std::size_t j = m.size(); j-- > 0;)
    if (m[j]) {
      last = j;
      break;
    }
  PbwElement out;
  if (!last || *last <= k) {
    auto n = m;
    ++n[k];
    out.terms.emplace(std::move(n), K.one());
    return out;
  }
  const std::size_t j = *last;
  auto prefix = m;
  --prefix[j];
  // prefix e_j e_k = (prefix e_k) e_j + prefix [e_j, e_k]
  for (const auto& [mm, c] : times_generator(L, prefix, k).terms)
    add_scaled(K, out, times_generator(L, mm, j), c);
  const auto& br = L.basis_bracket(j, k);
  for (std::size_t l = 0; l < br.size(); ++l)
    if (!K.is_zero(br[l])) add_scaled(K, out, times_generator(L, prefix, l), br[l]);
  return out;
}

inline PbwElement times_generator(const LieAlgebra& L, const PbwElement& u, std::size_t k) {
  const auto& K = L.coefficients();
  PbwElement out;
  for (const auto& [m, c] : u.terms) add_scaled(K, out, times_generator(L, m, k), c);
  return out;
}

}  // namespace detail

inline PbwElement pbw_scalar(const LieAlgebra& L, const Coeff& c) {
  PbwElement u;
  detail::add_term(L.coefficients(), u, Exponents(L.dim(), 0), c);
  return u;
}
inline PbwElement pbw_one(const LieAlgebra& L) { return pbw_scalar(L, L.coefficients().one()); }

inline PbwElement pbw_monomial(const LieAlgebra& L, const Exponents& a, const Coeff& c = 1) {
  if (a.size() != L.dim()) throw DimensionMismatch("exponent vector has the wrong length");
  PbwElement u;
  detail::add_term(L.coefficients(), u, a, c);
  return u;
}

/// The degree-1 element of U(L) representing x in L.
inline PbwElement pbw_from_lie(const LieAlgebra& L, const LieElement& x) {
  PbwElement u;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    Exponents a(L.dim(), 0);
    a[i] = 1;
    detail::add_term(L.coefficients(), u, a, x[i]);
  }
  return u;
}

/// The degree-1 part of u as an element of L.
inline LieElement pbw_linear_part(const LieAlgebra& L, const PbwElement& u) {
  auto x = L.zero();
  for (const auto& [m, c] : u.terms)
    if (total_degree(m) == 1)
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) x[i] = c;
  return x;
}

inline PbwElement pbw_add(const LieAlgebra& L, const PbwElement& u, const PbwElement& v) {
  PbwElement r = u;
  for (const auto& [m, c] : v.terms) detail::add_term(L.coefficients(), r, m, c);
  return r;
}
inline PbwElement pbw_scale(const LieAlgebra& L, const Coeff& c, const PbwElement& u) {
  PbwElement r;
  detail::add_scaled(L.coefficients(), r, u, c);
  return r;
}
inline PbwElement pbw_sub(const LieAlgebra& L, const PbwElement& u, const PbwElement& v) {
  return pbw_add(L, u, pbw_scale(L, L.coefficients().from_int(-1), v));
}

inline PbwElement pbw_multiply(const PbwElement& u, const PbwElement& v, const LieAlgebra& L) {
  const auto& K = L.coefficients();
  PbwElement out;
  for (const auto& [b, cv] : v.terms) {
    PbwElement acc = u;
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::uint32_t r = 0; r < b[k]; ++r) acc = detail::times_generator(L, acc, k);
    detail::add_scaled(K, out, acc, cv);
  }
  return out;
}

inline PbwElement pbw_power(const PbwElement& u, unsigned long long e, const LieAlgebra& L) {
  PbwElement r = pbw_one(L);
  for (unsigned long long i = 0; i < e; ++i) r = pbw_multiply(r, u, L);
  return r;
}

/// Degree of the filtration; nullopt for zero (the bottom value).
inline std::optional<std::uint32_t> pbw_degree(const PbwElement& u) {
  std::optional<std::uint32_t> d;
  for (const auto& [m, c] : u.terms) d = std::max(d.value_or(0), total_degree(m));
  return d;
}

struct Filtration {
  std::optional<std::uint32_t> degree;
  PbwElement leading;  ///< top-degree part, read as a commutative polynomial
};

inline Filtration filtration_and_gr(const PbwElement& u) {
  Filtration f{pbw_degree(u), {}};
  for (const auto& [m, c] : u.terms)
    if (total_degree(m) == f.degree) f.leading.terms.emplace(m, c);
  return f;
}

/// Product in the commutative polynomial ring K[e_0..e_{d-1}] (gr U).
inline PbwElement commutative_multiply(const PbwElement& u, const PbwElement& v, const CoefficientRing& K) {
  PbwElement out;
  for (const auto& [a, x] : u.terms)
    for (const auto& [b, y] : v.terms) {
      Exponents s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      detail::add_term(K, out, s, K.mul(x, y));
    }
  return out;
}

/// Units of U(L) over a domain K: nonzero constants that are units of K.
inline bool is_unit(const PbwElement& u, const LieAlgebra& L) {
  auto d = pbw_degree(u);
  if (!d || *d != 0) return false;
  return L.coefficients().is_unit(u.terms.begin()->second);
}

inline std::string render(const PbwElement& u, const LieAlgebra& L) {
  if (u.is_zero()) return "0";
  const auto& K = L.coefficients();
  std::string s;
  for (const auto& [m, c] : u.terms) {
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += L.labels()[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    std::string coeff = K.render(c);
    if (!s.empty()) s += " + ";
    if (mono.empty()) s += coeff;
    else if (c == 1) s += mono;
    else s += coeff + "*" + mono;
  }
  return s;
}

/// Random element with at most `terms` monomials of degree <= max_degree.
inline PbwElement pbw_sample(const LieAlgebra& L, Rng& rng, std::uint32_t max_degree, std::size_t terms = 3) {
  PbwElement u;
  for (std::size_t t = 0; t < terms; ++t) {
    Exponents a(L.dim(), 0);
    const auto deg = static_cast<std::uint32_t>(uniform_index(rng, max_degree + 1));
    for (std::uint32_t k = 0; k < deg && L.dim(); ++k) ++a[uniform_index(rng, L.dim())];
    detail::add_term(L.coefficients(), u, a, L.coefficients().sample(rng));
  }
  return u;
}

/// All exponent vectors of total degree exactly n (lexicographic).
inline std::vector<Exponents> monomials_of_degree(std::size_t d, std::uint32_t n, std::uint32_t max_exp = UINT32_MAX) {
  std::vector<Exponents> out;
  Exponents a(d, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == d || d == 0) {
      if (d == 0) {
        if (left == 0) out.push_back(a);
        return;
      }
      if (left <= max_exp) {
        a[i] = left;
        out.push_back(a);
        a[i] = 0;
      }
      return;
    }
    for (std::uint32_t x = 0; x <= std::min(left, max_exp); ++x) {
      a[i] = x;
      self(self, i + 1, left - x);
    }
    a[i] = 0;
  };
  rec(rec, 0, n);
  return out;
}

inline std::vector<Exponents> monomials_up_to(std::size_t d, std::uint32_t cap, std::uint32_t max_exp = UINT32_MAX) {
  std::vector<Exponents> out;
  for (std::uint32_t n = 0; n <= cap; ++n)
    for (auto& m : monomials_of_degree(d, n, max_exp)) out.push_back(std::move(m));
  return out;
}

/**
 * Parses expressions such as "2*e*f - h^2 + (e + 1)*f". Products are taken
 * in U(L) through `mul`, so "e*f" straightens to "f*e + h" for sl2.
 * Numbers are read by the coefficient ring (element indices for finite fields).
 */
template <class Mul>
PbwElement parse_pbw(const std::string& text, const LieAlgebra& L, Mul&& mul) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("expression", why + " at position " + std::to_string(pos) + " in '" + text + "'");
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_uint = [&] {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw fail("expected a number");
    return text.substr(start, pos - start);
  };
  std::function<PbwElement()> expr;
  auto factor = [&]() -> PbwElement {
    skip();
    if (pos >= text.size()) throw fail("unexpected end");
    PbwElement base;
    if (text[pos] == '(') {
      ++pos;
      base = expr();
      skip();
      if (pos >= text.size() || text[pos] != ')') throw fail("expected ')'");
      ++pos;
    } else if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      auto num = read_uint();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        num += "/" + read_uint();
      }
      base = pbw_scalar(L, L.coefficients().parse(num));
    } else if (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_') {
      std::size_t start = pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
      const auto label = text.substr(start, pos - start);
      std::size_t i;
      try {
        i = L.index_of(label);
      } catch (const IndexOutOfRange&) {
        throw fail("unknown basis element '" + label + "'");
      }
      base = pbw_from_lie(L, L.basis(i));
    } else {
      throw fail("unexpected character");
    }
    skip();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip();
      auto e = std::stoul(read_uint());
      PbwElement r = pbw_one(L);
      for (unsigned long i = 0; i < e; ++i) r = mul(r, base);
      return r;
    }
    return base;
  };
  auto term = [&]() {
    PbwElement r = factor();
    skip();
    while (pos < text.size() && text[pos] == '*') {
      ++pos;
      r = mul(r, factor());
      skip();
    }
    return r;
  };
  expr = [&]() {
    skip();
    bool negate = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) negate = text[pos++] == '-';
    PbwElement r = term();
    if (negate) r = pbw_scale(L, L.coefficients().from_int(-1), r);
    skip();
    while (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      const bool minus = text[pos++] == '-';
      auto t = term();
      r = minus ? pbw_sub(L, r, t) : pbw_add(L, r, t);
      skip();
    }
    return r;
  };
  auto r = expr();
  skip();
  if (pos != text.size()) throw fail("trailing input");
  return r;
}

inline PbwElement parse_pbw(const std::string& text, const LieAlgebra& L) {
  return parse_pbw(text, L, [&L](const PbwElement& a, const PbwElement& b) { return pbw_multiply(a, b, L); });
}

}  // namespace semicat
