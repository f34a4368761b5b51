#pragma once

/**
 * @file semiring.hpp
 * @brief Runtime semiring with finite (table) and built-in infinite carriers.
 *
 * Values are a tagged union. Finite carriers use element indices; naturals and
 * integers use arbitrary precision; the tropical (max-plus) semiring uses exact
 * rationals with an explicit bottom element as its additive zero.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "semicat/error.hpp"
#include "semicat/semiring/finite_semiring.hpp"
#include "semicat/util/random.hpp"

namespace semicat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct FiniteElement {
  std::uint32_t index = 0;
  friend bool operator==(const FiniteElement&, const FiniteElement&) = default;
};
struct Natural {
  BigInt value;
  friend bool operator==(const Natural& a, const Natural& b) { return a.value == b.value; }
};
struct Integer {
  BigInt value;
  friend bool operator==(const Integer& a, const Integer& b) { return a.value == b.value; }
};
/// Max-plus value; std::nullopt is bottom (the additive zero).
struct Tropical {
  std::optional<Rational> value;
  friend bool operator==(const Tropical& a, const Tropical& b) { return a.value == b.value; }
};

using SemiringValue = std::variant<FiniteElement, Natural, Integer, Tropical>;

/// Canonical total order used for deterministic output (within one carrier).
inline bool value_less(const SemiringValue& a, const SemiringValue& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, FiniteElement>) {
          return x.index < y.index;
        } else if constexpr (std::is_same_v<T, Tropical>) {
          if (!x.value) return static_cast<bool>(y.value);
          if (!y.value) return false;
          return *x.value < *y.value;
        } else {
          return x.value < y.value;
        }
      },
      a);
}

class Semiring {
 public:
  enum class Kind { finite, naturals, integers, tropical };
  using value_type = SemiringValue;

  static std::shared_ptr<const Semiring> finite(FiniteSemiring table) {
    auto s = std::shared_ptr<Semiring>(new Semiring(Kind::finite, table.name()));
    s->table_ = std::make_shared<const FiniteSemiring>(std::move(table));
    return s;
  }
  static std::shared_ptr<const Semiring> naturals() {
    return std::shared_ptr<const Semiring>(new Semiring(Kind::naturals, "naturals"));
  }
  static std::shared_ptr<const Semiring> integers() {
    return std::shared_ptr<const Semiring>(new Semiring(Kind::integers, "integers"));
  }
  static std::shared_ptr<const Semiring> tropical() {
    return std::shared_ptr<const Semiring>(new Semiring(Kind::tropical, "tropical"));
  }

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }
  std::optional<std::size_t> finite_size() const {
    if (is_finite()) return table_->size();
    return std::nullopt;
  }
  const FiniteSemiring& table() const {
    if (!is_finite()) throw UnsupportedCarrier(name_ + " has no finite table");
    return *table_;
  }
  bool commutative() const { return is_finite() ? table_->commutative() : true; }

  value_type zero() const {
    switch (kind_) {
      case Kind::finite: return FiniteElement{table_->zero()};
      case Kind::naturals: return Natural{0};
      case Kind::integers: return Integer{0};
      case Kind::tropical: return Tropical{std::nullopt};
    }
    return {};
  }

  value_type one() const {
    switch (kind_) {
      case Kind::finite: return FiniteElement{table_->one()};
      case Kind::naturals: return Natural{1};
      case Kind::integers: return Integer{1};
      case Kind::tropical: return Tropical{Rational(0)};
    }
    return {};
  }

  value_type add(const value_type& a, const value_type& b) const {
    switch (kind_) {
      case Kind::finite: return FiniteElement{table_->add(idx(a), idx(b))};
      case Kind::naturals: return Natural{get<Natural>(a).value + get<Natural>(b).value};
      case Kind::integers: return Integer{get<Integer>(a).value + get<Integer>(b).value};
      case Kind::tropical: {
        const auto& x = get<Tropical>(a).value;
        const auto& y = get<Tropical>(b).value;
        if (!x) return Tropical{y};
        if (!y) return Tropical{x};
        return Tropical{*x < *y ? *y : *x};
      }
    }
    return {};
  }

  value_type mul(const value_type& a, const value_type& b) const {
    switch (kind_) {
      case Kind::finite: return FiniteElement{table_->mul(idx(a), idx(b))};
      case Kind::naturals: return Natural{get<Natural>(a).value * get<Natural>(b).value};
      case Kind::integers: return Integer{get<Integer>(a).value * get<Integer>(b).value};
      case Kind::tropical: {
        const auto& x = get<Tropical>(a).value;
        const auto& y = get<Tropical>(b).value;
        if (!x || !y) return Tropical{std::nullopt};
        return Tropical{*x + *y};
      }
    }
    return {};
  }

  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  /// i-th carrier element; finite carriers only.
  value_type element(std::size_t i) const {
    if (!is_finite()) throw UnsupportedCarrier(name_ + " cannot be enumerated");
    if (i >= table_->size()) throw IndexOutOfRange("element index out of range");
    return FiniteElement{static_cast<std::uint32_t>(i)};
  }

  /// Small random value; finite carriers sample uniformly.
  value_type sample(Rng& rng) const {
    switch (kind_) {
      case Kind::finite: return FiniteElement{static_cast<std::uint32_t>(uniform_index(rng, table_->size()))};
      case Kind::naturals: return Natural{static_cast<long>(uniform_index(rng, 6))};
      case Kind::integers: return Integer{static_cast<long>(uniform_index(rng, 11)) - 5};
      case Kind::tropical: {
        auto k = uniform_index(rng, 14);
        if (k == 13) return Tropical{std::nullopt};
        return Tropical{Rational(static_cast<long>(k) - 6, 2)};
      }
    }
    return {};
  }

  std::string render(const value_type& v) const {
    switch (kind_) {
      case Kind::finite: return std::to_string(idx(v));
      case Kind::naturals: return get<Natural>(v).value.str();
      case Kind::integers: return get<Integer>(v).value.str();
      case Kind::tropical: {
        const auto& x = get<Tropical>(v).value;
        return x ? x->str() : std::string("bottom");
      }
    }
    return {};
  }

  value_type parse(const std::string& text) const {
    try {
      switch (kind_) {
        case Kind::finite: {
          std::size_t pos = 0;
          long long i = std::stoll(text, &pos);
          if (pos != text.size() || i < 0 || static_cast<std::size_t>(i) >= table_->size())
            throw ParseError(text, "not an element of " + name_);
          return FiniteElement{static_cast<std::uint32_t>(i)};
        }
        case Kind::naturals: {
          BigInt v(text);
          if (v < 0) throw ParseError(text, "naturals are nonnegative");
          return Natural{v};
        }
        case Kind::integers: return Integer{BigInt(text)};
        case Kind::tropical:
          if (text == "bottom") return Tropical{std::nullopt};
          return Tropical{Rational(text)};
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(text, std::string("cannot parse value for ") + name_ + ": " + e.what());
    }
    return {};
  }

  /// Value from a small integer: index for finite carriers, the number otherwise.
  value_type from_int(long long v) const {
    switch (kind_) {
      case Kind::finite:
        if (v < 0 || static_cast<std::size_t>(v) >= table_->size())
          throw IndexOutOfRange("element index out of range");
        return FiniteElement{static_cast<std::uint32_t>(v)};
      case Kind::naturals:
        if (v < 0) throw IndexOutOfRange("naturals are nonnegative");
        return Natural{v};
      case Kind::integers: return Integer{v};
      case Kind::tropical: return Tropical{Rational(v)};
    }
    return {};
  }

  /// Two-sided inverse of v, if one exists.
  std::optional<value_type> inverse(const value_type& v) const {
    switch (kind_) {
      case Kind::finite: {
        const auto& t = *table_;
        for (std::uint32_t w = 0; w < t.size(); ++w)
          if (t.mul(idx(v), w) == t.one() && t.mul(w, idx(v)) == t.one())
            return FiniteElement{w};
        return std::nullopt;
      }
      case Kind::naturals:
        if (get<Natural>(v).value == 1) return v;
        return std::nullopt;
      case Kind::integers: {
        const auto& x = get<Integer>(v).value;
        if (x == 1 || x == -1) return v;
        return std::nullopt;
      }
      case Kind::tropical: {
        const auto& x = get<Tropical>(v).value;
        if (!x) return std::nullopt;
        return Tropical{Rational(-*x)};
      }
    }
    return std::nullopt;
  }

  bool is_unit(const value_type& v) const { return inverse(v).has_value(); }

 private:
  Semiring(Kind k, std::string name) : kind_(k), name_(std::move(name)) {}

  template <class T>
  const T& get(const value_type& v) const {
    if (auto p = std::get_if<T>(&v)) return *p;
    throw SemiringMismatch("value does not belong to " + name_);
  }
  std::uint32_t idx(const value_type& v) const { return get<FiniteElement>(v).index; }

  Kind kind_;
  std::string name_;
  std::shared_ptr<const FiniteSemiring> table_;
};

using SemiringPtr = std::shared_ptr<const Semiring>;

/**
 * Resolves a built-in by name: boolean, trivial, naturals, integers, tropical,
 * zmod:<n>, gf:<q>, and products written `<a>*<b>` (finite factors only).
 */
inline SemiringPtr builtin_semiring(const std::string& name) {
  if (auto star = name.find('*'); star != std::string::npos) {
    auto a = builtin_semiring(name.substr(0, star));
    auto b = builtin_semiring(name.substr(star + 1));
    if (!a->is_finite() || !b->is_finite())
      throw UnsupportedCarrier("products need finite factors");
    auto t = product_tables(a->table(), b->table());
    t.name = name;
    return Semiring::finite(validate_semiring(t));
  }
  if (name == "boolean") return Semiring::finite(validate_semiring(boolean_tables()));
  if (name == "trivial") return Semiring::finite(validate_semiring(trivial_tables()));
  if (name == "naturals") return Semiring::naturals();
  if (name == "integers") return Semiring::integers();
  if (name == "tropical") return Semiring::tropical();
  auto parameter = [&](std::size_t prefix) {
    try {
      std::size_t pos = 0;
      long long v = std::stoll(name.substr(prefix), &pos);
      if (pos + prefix != name.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw ConfigError("bad semiring parameter in '" + name + "'");
    }
  };
  if (name.rfind("zmod:", 0) == 0) return Semiring::finite(validate_semiring(zmod_tables(parameter(5))));
  if (name.rfind("gf:", 0) == 0) return Semiring::finite(validate_semiring(gf_tables(parameter(3))));
  throw ConfigError("unknown built-in semiring '" + name + "'");
}

/// Opposite semiring; commutative carriers are returned unchanged.
inline SemiringPtr opposite_semiring(const SemiringPtr& r) {
  if (r->commutative()) return r;
  return Semiring::finite(opposite_semiring(r->table()));
}

/// Units, sorted canonically. Integers/naturals are searched in [-bound, bound].
inline std::vector<SemiringValue> units_of(const Semiring& r, long long search_bound = 16) {
  std::vector<SemiringValue> out;
  switch (r.kind()) {
    case Semiring::Kind::finite:
      for (std::size_t i = 0; i < r.table().size(); ++i)
        if (r.is_unit(r.element(i))) out.push_back(r.element(i));
      break;
    case Semiring::Kind::naturals:
      for (long long v = 0; v <= search_bound; ++v)
        if (r.is_unit(Natural{v})) out.push_back(Natural{v});
      break;
    case Semiring::Kind::integers:
      for (long long v = -search_bound; v <= search_bound; ++v)
        if (r.is_unit(Integer{v})) out.push_back(Integer{v});
      break;
    case Semiring::Kind::tropical:
      throw UnsupportedCarrier("tropical: every non-bottom element is a unit (infinite set)");
  }
  std::sort(out.begin(), out.end(), value_less);
  return out;
}

}  // namespace semicat
