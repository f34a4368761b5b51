#pragma once

/**
 * @file coefficient.hpp
 * @brief Exact coefficient domains for Lie algebras: Z, Q, Z/p and GF(q).
 */

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "semicat/error.hpp"
#include "semicat/semiring/finite_semiring.hpp"
#include "semicat/util/random.hpp"

namespace semicat {

/// Values of every coefficient ring share one representation: a rational for
/// Z and Q, the element index (as an integer) for finite fields.
using Coeff = boost::multiprecision::cpp_rational;

class CoefficientRing {
 public:
  enum class Kind { integers, rationals, finite };
  using value_type = Coeff;

  static std::shared_ptr<const CoefficientRing> integers() {
    return std::shared_ptr<const CoefficientRing>(new CoefficientRing(Kind::integers, "Z"));
  }
  static std::shared_ptr<const CoefficientRing> rationals() {
    return std::shared_ptr<const CoefficientRing>(new CoefficientRing(Kind::rationals, "Q"));
  }
  /// zmod:p for p prime, or gf:q for a prime power q.
  static std::shared_ptr<const CoefficientRing> finite_field(long long q, const std::string& name) {
    auto pk = detail::prime_power(q);
    if (!pk) throw ConfigError(name + ": order must be a prime power");
    std::shared_ptr<CoefficientRing> r(new CoefficientRing(Kind::finite, name));
    r->table_ = std::make_shared<FiniteSemiring>(validate_semiring(gf_tables(q)));
    r->characteristic_ = pk->first;
    const auto n = r->table_->size();
    r->neg_.resize(n);
    r->inv_.assign(n, 0);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        if (r->table_->add(a, b) == 0) r->neg_[a] = b;
        if (r->table_->mul(a, b) == 1) r->inv_[a] = b;
      }
    return r;
  }

  /// "Z", "Q", "zmod:p" (p prime) or "gf:q".
  static std::shared_ptr<const CoefficientRing> parse_name(const std::string& name) {
    if (name == "Z" || name == "integers") return integers();
    if (name == "Q" || name == "rationals") return rationals();
    auto colon = name.find(':');
    if (colon != std::string::npos) {
      const auto head = name.substr(0, colon);
      long long q = 0;
      try {
        std::size_t pos = 0;
        q = std::stoll(name.substr(colon + 1), &pos);
        if (pos != name.size() - colon - 1) q = 0;
      } catch (const std::exception&) {
      }
      if (head == "zmod") {
        if (!detail::is_prime(q)) throw ConfigError("coefficient ring " + name + ": zmod needs a prime modulus");
        return finite_field(q, name);
      }
      if (head == "gf") {
        if (q < 2 || q > 1024) throw ConfigError("coefficient ring " + name + ": order out of range");
        return finite_field(q, name);
      }
    }
    throw ConfigError("unknown coefficient ring '" + name + "'");
  }

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  long long characteristic() const noexcept { return characteristic_; }
  std::optional<std::size_t> finite_size() const {
    if (kind_ == Kind::finite) return table_->size();
    return std::nullopt;
  }

  Coeff zero() const { return 0; }
  Coeff one() const { return 1; }

  Coeff add(const Coeff& a, const Coeff& b) const {
    if (kind_ == Kind::finite) return table_->add(idx(a), idx(b));
    return a + b;
  }
  Coeff neg(const Coeff& a) const {
    if (kind_ == Kind::finite) return neg_[idx(a)];
    return -a;
  }
  Coeff sub(const Coeff& a, const Coeff& b) const { return add(a, neg(b)); }
  Coeff mul(const Coeff& a, const Coeff& b) const {
    if (kind_ == Kind::finite) return table_->mul(idx(a), idx(b));
    return a * b;
  }
  bool equal(const Coeff& a, const Coeff& b) const { return a == b; }
  bool is_zero(const Coeff& a) const { return a == 0; }

  /// Image of the integer n under Z -> K.
  Coeff from_int(long long n) const {
    if (kind_ != Kind::finite) return n;
    const long long p = characteristic_;
    long long r = ((n % p) + p) % p;
    // n * 1 lies in the prime field, whose elements are the indices 0..p-1.
    return r;
  }

  Coeff pow(Coeff a, unsigned long long e) const {
    Coeff r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::optional<Coeff> inverse(const Coeff& a) const {
    switch (kind_) {
      case Kind::integers:
        if (a == 1 || a == -1) return a;
        return std::nullopt;
      case Kind::rationals:
        if (a == 0) return std::nullopt;
        return Coeff(1) / a;
      case Kind::finite:
        if (a == 0) return std::nullopt;
        return inv_[idx(a)];
    }
    return std::nullopt;
  }
  bool is_unit(const Coeff& a) const { return inverse(a).has_value(); }

  /// Inverse in the fraction field (K itself for fields). Throws on zero.
  Coeff field_inverse(const Coeff& a) const {
    if (a == 0) throw Error("division by zero in " + name_);
    if (kind_ == Kind::finite) return inv_[idx(a)];
    return Coeff(1) / a;
  }
  bool in_ring(const Coeff& a) const {
    if (kind_ == Kind::integers) return denominator(a) == 1;
    return true;
  }

  Coeff element(std::size_t i) const {
    if (kind_ != Kind::finite) throw UnsupportedCarrier(name_ + " is infinite");
    return static_cast<long long>(i);
  }
  /// Small values: integers in [-3, 3], halves for Q, anything for finite fields.
  Coeff sample(Rng& rng) const {
    switch (kind_) {
      case Kind::integers: return static_cast<long long>(uniform_index(rng, 7)) - 3;
      case Kind::rationals: return Coeff(static_cast<long long>(uniform_index(rng, 13)) - 6, 2);
      case Kind::finite: return static_cast<long long>(uniform_index(rng, table_->size()));
    }
    return 0;
  }

  std::string render(const Coeff& a) const { return a.str(); }

  /// Integers ("-3"), fractions ("1/2") for Q, element indices for finite fields.
  Coeff parse(const std::string& text) const {
    Coeff v;
    try {
      v = Coeff(text);
    } catch (const std::exception&) {
      throw ParseError("coefficient", "'" + text + "' is not a number");
    }
    if (!in_ring(v)) throw ParseError("coefficient", "'" + text + "' is not in " + name_);
    if (kind_ == Kind::finite) {
      if (denominator(v) != 1 || v < 0 || v >= static_cast<long long>(table_->size()))
        throw ParseError("coefficient", "'" + text + "' is not an element index of " + name_);
    }
    return v;
  }

  /// x -> x^(p^k) on finite fields; identity elsewhere (the only automorphism
  /// of Z, Q and prime fields).
  Coeff frobenius(const Coeff& a, unsigned k = 1) const {
    if (kind_ != Kind::finite) return a;
    Coeff r = a;
    for (unsigned i = 0; i < k; ++i) r = pow(r, static_cast<unsigned long long>(characteristic_));
    return r;
  }

  /// Number of distinct Frobenius powers (the order of Aut K); 1 for Z, Q.
  unsigned automorphism_count() const {
    if (kind_ != Kind::finite) return 1;
    unsigned k = 0;
    for (std::size_t q = 1; q < table_->size(); q *= static_cast<std::size_t>(characteristic_)) ++k;
    return k;
  }

 private:
  CoefficientRing(Kind k, std::string name) : kind_(k), name_(std::move(name)) {}
  static std::uint32_t idx(const Coeff& a) { return static_cast<std::uint32_t>(numerator(a)); }

  Kind kind_;
  std::string name_;
  long long characteristic_ = 0;
  std::shared_ptr<const FiniteSemiring> table_;
  std::vector<std::uint32_t> neg_, inv_;
};

using CoeffRingPtr = std::shared_ptr<const CoefficientRing>;

/// A coefficient ring automorphism: the k-th Frobenius power (k = 0 is the identity).
struct CoeffAutomorphism {
  unsigned power = 0;

  Coeff apply(const CoefficientRing& k, const Coeff& a) const { return k.frobenius(a, power); }
  CoeffAutomorphism inverse(const CoefficientRing& k) const {
    const unsigned n = k.automorphism_count();
    return {(n - power % n) % n};
  }
  CoeffAutomorphism then(const CoefficientRing& k, const CoeffAutomorphism& next) const {
    return {(power + next.power) % k.automorphism_count()};
  }
  std::string name() const { return power == 0 ? "identity" : "frobenius^" + std::to_string(power); }
  friend bool operator==(const CoeffAutomorphism&, const CoeffAutomorphism&) = default;
};

}  // namespace semicat
