#pragma once

/**
 * @file finite_semiring.hpp
 * @brief Table-based finite semirings and the catalog builders.
 *
 * A finite semiring is a carrier {0, ..., size-1} with dense Cayley tables for
 * addition and multiplication. The only way to obtain a FiniteSemiring is
 * through validate_semiring(), which checks every axiom exhaustively, so a
 * FiniteSemiring value is always a genuine semiring.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semicat/error.hpp"

namespace semicat {

/// Unvalidated tables as read from a file or produced by a builder.
struct SemiringTables {
  std::string name;
  long long size = 0;
  long long zero = 0;
  long long one = 0;
  std::vector<std::vector<long long>> add;
  std::vector<std::vector<long long>> mul;
};

/// Axiom names, in the order validate_semiring checks them.
namespace axiom {
inline constexpr const char* additive_associativity = "additive-associativity";
inline constexpr const char* additive_commutativity = "additive-commutativity";
inline constexpr const char* zero_identity = "zero-identity";
inline constexpr const char* multiplicative_associativity = "multiplicative-associativity";
inline constexpr const char* one_identity = "one-identity";
inline constexpr const char* left_distributivity = "left-distributivity";
inline constexpr const char* right_distributivity = "right-distributivity";
inline constexpr const char* zero_annihilation = "zero-annihilation";
}  // namespace axiom

class FiniteSemiring {
 public:
  using index_type = std::uint32_t;

  std::size_t size() const noexcept { return size_; }
  index_type zero() const noexcept { return zero_; }
  index_type one() const noexcept { return one_; }
  const std::string& name() const noexcept { return name_; }

  index_type add(index_type a, index_type b) const noexcept { return add_[a * size_ + b]; }
  index_type mul(index_type a, index_type b) const noexcept { return mul_[a * size_ + b]; }

  bool commutative() const noexcept {
    for (index_type a = 0; a < size_; ++a)
      for (index_type b = a + 1; b < size_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  SemiringTables tables() const {
    SemiringTables t;
    t.name = name_;
    t.size = static_cast<long long>(size_);
    t.zero = zero_;
    t.one = one_;
    t.add.assign(size_, std::vector<long long>(size_));
    t.mul.assign(size_, std::vector<long long>(size_));
    for (index_type a = 0; a < size_; ++a)
      for (index_type b = 0; b < size_; ++b) {
        t.add[a][b] = add(a, b);
        t.mul[a][b] = mul(a, b);
      }
    return t;
  }

  friend bool operator==(const FiniteSemiring& x, const FiniteSemiring& y) {
    return x.size_ == y.size_ && x.zero_ == y.zero_ && x.one_ == y.one_ && x.add_ == y.add_ &&
           x.mul_ == y.mul_;
  }

 private:
  friend FiniteSemiring validate_semiring(const SemiringTables& tables);

  FiniteSemiring() = default;

  std::string name_;
  std::size_t size_ = 0;
  index_type zero_ = 0;
  index_type one_ = 0;
  std::vector<index_type> add_;
  std::vector<index_type> mul_;
};

namespace detail {

struct AxiomFailure {
  const char* axiom;
  std::vector<std::uint32_t> witness;
};

template <class Add, class Mul>
std::optional<AxiomFailure> first_axiom_failure(std::uint32_t n, std::uint32_t zero,
                                                std::uint32_t one, Add add, Mul mul) {
  using W = std::vector<std::uint32_t>;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (add(add(a, b), c) != add(a, add(b, c)))
          return AxiomFailure{axiom::additive_associativity, W{a, b, c}};
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (add(a, b) != add(b, a)) return AxiomFailure{axiom::additive_commutativity, W{a, b}};
  for (std::uint32_t a = 0; a < n; ++a)
    if (add(a, zero) != a || add(zero, a) != a)
      return AxiomFailure{axiom::zero_identity, W{a}};
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          return AxiomFailure{axiom::multiplicative_associativity, W{a, b, c}};
  for (std::uint32_t a = 0; a < n; ++a)
    if (mul(a, one) != a || mul(one, a) != a) return AxiomFailure{axiom::one_identity, W{a}};
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
          return AxiomFailure{axiom::left_distributivity, W{a, b, c}};
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (mul(add(a, b), c) != add(mul(a, c), mul(b, c)))
          return AxiomFailure{axiom::right_distributivity, W{a, b, c}};
  for (std::uint32_t a = 0; a < n; ++a)
    if (mul(zero, a) != zero || mul(a, zero) != zero)
      return AxiomFailure{axiom::zero_annihilation, W{a}};
  return std::nullopt;
}

}  // namespace detail

/**
 * Checks shape, index ranges and every semiring axiom exhaustively.
 *
 * Throws IndexOutOfRange for malformed tables and AxiomViolation naming the
 * first failing axiom (in the order of the `axiom` namespace) with a witness.
 */
inline FiniteSemiring validate_semiring(const SemiringTables& t) {
  if (t.size < 1) throw IndexOutOfRange("semiring size must be positive");
  const auto n = static_cast<std::size_t>(t.size);
  auto check_table = [&](const std::vector<std::vector<long long>>& table, const char* which) {
    if (table.size() != n)
      throw IndexOutOfRange(std::string(which) + " table has " + std::to_string(table.size()) +
                            " rows, expected " + std::to_string(n));
    for (std::size_t r = 0; r < n; ++r) {
      if (table[r].size() != n)
        throw IndexOutOfRange(std::string(which) + " table row " + std::to_string(r) +
                              " is not of length " + std::to_string(n));
      for (std::size_t c = 0; c < n; ++c)
        if (table[r][c] < 0 || table[r][c] >= t.size)
          throw IndexOutOfRange(std::string(which) + "[" + std::to_string(r) + "][" +
                                std::to_string(c) + "] = " + std::to_string(table[r][c]) +
                                " is out of range");
    }
  };
  check_table(t.add, "add");
  check_table(t.mul, "mul");
  if (t.zero < 0 || t.zero >= t.size) throw IndexOutOfRange("zero index out of range");
  if (t.one < 0 || t.one >= t.size) throw IndexOutOfRange("one index out of range");

  FiniteSemiring s;
  s.name_ = t.name;
  s.size_ = n;
  s.zero_ = static_cast<std::uint32_t>(t.zero);
  s.one_ = static_cast<std::uint32_t>(t.one);
  s.add_.resize(n * n);
  s.mul_.resize(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      s.add_[r * n + c] = static_cast<std::uint32_t>(t.add[r][c]);
      s.mul_[r * n + c] = static_cast<std::uint32_t>(t.mul[r][c]);
    }
  auto failure = detail::first_axiom_failure(
      static_cast<std::uint32_t>(n), s.zero_, s.one_,
      [&](std::uint32_t a, std::uint32_t b) { return s.add(a, b); },
      [&](std::uint32_t a, std::uint32_t b) { return s.mul(a, b); });
  if (failure) throw AxiomViolation(failure->axiom, failure->witness);
  return s;
}

// ---------------------------------------------------------------------------
// Builders. Each returns raw tables; pass them through validate_semiring.
// ---------------------------------------------------------------------------

namespace detail {

template <class Add, class Mul>
SemiringTables tabulate(std::string name, std::size_t n, long long zero, long long one, Add add,
                        Mul mul) {
  SemiringTables t;
  t.name = std::move(name);
  t.size = static_cast<long long>(n);
  t.zero = zero;
  t.one = one;
  t.add.assign(n, std::vector<long long>(n));
  t.mul.assign(n, std::vector<long long>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      t.add[a][b] = static_cast<long long>(add(a, b));
      t.mul[a][b] = static_cast<long long>(mul(a, b));
    }
  return t;
}

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Splits q = p^k with p prime; nullopt if q is not a prime power.
inline std::optional<std::pair<long long, int>> prime_power(long long q) {
  if (q < 2) return std::nullopt;
  long long p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  long long r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) return std::nullopt;
  return std::make_pair(p, k);
}

/// Multiplication of F_p[x] / (f) on base-p digit vectors; f is monic of degree k,
/// given by its k lower coefficients.
inline std::vector<long long> poly_mulmod(const std::vector<long long>& a,
                                          const std::vector<long long>& b,
                                          const std::vector<long long>& f, long long p) {
  const std::size_t k = f.size();
  std::vector<long long> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = 2 * k - 1; d >= k; --d) {
    long long c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    // x^k = -f_lower
    for (std::size_t i = 0; i < k; ++i)
      prod[d - k + i] = ((prod[d - k + i] - c * f[i]) % p + p) % p;
  }
  prod.resize(k);
  return prod;
}

inline std::vector<long long> digits(long long v, long long p, std::size_t k) {
  std::vector<long long> d(k);
  for (std::size_t i = 0; i < k; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

inline long long undigits(const std::vector<long long>& d, long long p) {
  long long v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

}  // namespace detail

inline SemiringTables boolean_tables() {
  return detail::tabulate(
      "boolean", 2, 0, 1, [](std::size_t a, std::size_t b) { return a | b; },
      [](std::size_t a, std::size_t b) { return a & b; });
}

inline SemiringTables trivial_tables() {
  return detail::tabulate(
      "trivial", 1, 0, 0, [](std::size_t, std::size_t) { return 0; },
      [](std::size_t, std::size_t) { return 0; });
}

/// Z/nZ; zmod:1 is the trivial semiring.
inline SemiringTables zmod_tables(long long n) {
  if (n < 1 || n > 4096) throw IndexOutOfRange("zmod modulus must be in [1, 4096]");
  auto m = static_cast<std::size_t>(n);
  return detail::tabulate(
      "zmod:" + std::to_string(n), m, 0, n == 1 ? 0 : 1,
      [m](std::size_t a, std::size_t b) { return (a + b) % m; },
      [m](std::size_t a, std::size_t b) { return (a * b) % m; });
}

/**
 * GF(q) for a prime power q <= 1024. Element index i encodes the polynomial
 * sum_j d_j x^j where d_j are the base-p digits of i; the modulus is the
 * lexicographically first monic irreducible of degree k. For gf:4 this makes
 * 2 = alpha and 3 = alpha + 1 with alpha^2 = alpha + 1.
 */
inline SemiringTables gf_tables(long long q) {
  auto pk = detail::prime_power(q);
  if (!pk || q > 1024) throw IndexOutOfRange("gf order must be a prime power <= 1024");
  const auto [p, k] = *pk;
  const auto n = static_cast<std::size_t>(q);
  const auto kk = static_cast<std::size_t>(k);
  std::vector<long long> modulus(kk, 0);
  if (k > 1) {
    // Smallest f (by lower-coefficient value) with no zero divisors in F_p[x]/(f).
    for (long long code = 0; code < q; ++code) {
      auto f = detail::digits(code, p, kk);
      bool domain = true;
      for (long long a = 1; a < q && domain; ++a)
        for (long long b = 1; b < q && domain; ++b) {
          auto r = detail::poly_mulmod(detail::digits(a, p, kk), detail::digits(b, p, kk), f, p);
          if (detail::undigits(r, p) == 0) domain = false;
        }
      if (domain) {
        modulus = f;
        break;
      }
    }
  }
  return detail::tabulate(
      "gf:" + std::to_string(q), n, 0, 1,
      [&](std::size_t a, std::size_t b) {
        auto da = detail::digits(static_cast<long long>(a), p, kk);
        auto db = detail::digits(static_cast<long long>(b), p, kk);
        for (std::size_t i = 0; i < kk; ++i) da[i] = (da[i] + db[i]) % p;
        return detail::undigits(da, p);
      },
      [&](std::size_t a, std::size_t b) {
        if (k == 1) return static_cast<long long>((a * b) % n);
        return detail::undigits(
            detail::poly_mulmod(detail::digits(static_cast<long long>(a), p, kk),
                                detail::digits(static_cast<long long>(b), p, kk), modulus, p),
            p);
      });
}

/// R x S with componentwise operations; index = a * |S| + b.
inline SemiringTables product_tables(const FiniteSemiring& r, const FiniteSemiring& s) {
  const std::size_t m = s.size();
  return detail::tabulate(
      r.name() + "x" + s.name(), r.size() * m, static_cast<long long>(r.zero() * m + s.zero()),
      static_cast<long long>(r.one() * m + s.one()),
      [&](std::size_t a, std::size_t b) {
        return r.add(static_cast<std::uint32_t>(a / m), static_cast<std::uint32_t>(b / m)) * m +
               s.add(static_cast<std::uint32_t>(a % m), static_cast<std::uint32_t>(b % m));
      },
      [&](std::size_t a, std::size_t b) {
        return r.mul(static_cast<std::uint32_t>(a / m), static_cast<std::uint32_t>(b / m)) * m +
               s.mul(static_cast<std::uint32_t>(a % m), static_cast<std::uint32_t>(b % m));
      });
}

/**
 * Upper-triangular n x n matrices over a finite semiring. Entries (i, j) with
 * i <= j are stored row by row as base-|R| digits of the element index.
 */
inline SemiringTables upper_triangular_tables(const FiniteSemiring& r, std::size_t n) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < n * (n + 1) / 2; ++i) {
    count *= r.size();
    if (count > 4096) throw SizeLimitExceeded("upper-triangular semiring too large");
  }
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) positions.emplace_back(i, j);
  auto decode = [&](std::size_t v) {
    std::vector<std::uint32_t> m(n * n, r.zero());
    for (auto [i, j] : positions) {
      m[i * n + j] = static_cast<std::uint32_t>(v % r.size());
      v /= r.size();
    }
    return m;
  };
  auto encode = [&](const std::vector<std::uint32_t>& m) {
    std::size_t v = 0;
    for (std::size_t s = positions.size(); s-- > 0;)
      v = v * r.size() + m[positions[s].first * n + positions[s].second];
    return v;
  };
  std::vector<std::uint32_t> id(n * n, r.zero());
  const auto zero = encode(id);
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = r.one();
  return detail::tabulate(
      "uptri" + std::to_string(n) + ":" + r.name(), count, static_cast<long long>(zero),
      static_cast<long long>(encode(id)),
      [&](std::size_t a, std::size_t b) {
        auto x = decode(a), y = decode(b);
        for (std::size_t i = 0; i < n * n; ++i) x[i] = r.add(x[i], y[i]);
        return encode(x);
      },
      [&](std::size_t a, std::size_t b) {
        auto x = decode(a), y = decode(b);
        std::vector<std::uint32_t> z(n * n, r.zero());
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
              z[i * n + j] = r.add(z[i * n + j], r.mul(x[i * n + l], y[l * n + j]));
        return encode(z);
      });
}

/// Same carrier and addition, multiplication with its arguments swapped.
inline FiniteSemiring opposite_semiring(const FiniteSemiring& r) {
  auto t = r.tables();
  t.name = r.name() + "^op";
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t b = 0; b < r.size(); ++b)
      t.mul[a][b] = r.mul(static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(a));
  return validate_semiring(t);
}

}  // namespace semicat
