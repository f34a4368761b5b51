#pragma once

// Axiom oracle on raw Cayley tables, independent of the library's validator.

#include <stdexcept>
#include <string>
#include <vector>

#include "semicat/semiring/finite_semiring.hpp"

namespace oracle {

using semicat::SemiringTables;

using Table = std::vector<std::vector<long long>>;

struct Raw {
  long long n, zero, one;
  Table add, mul;
  long long a(long long x, long long y) const { return add[x][y]; }
  long long m(long long x, long long y) const { return mul[x][y]; }
};

Raw raw(const SemiringTables& t) { return {t.size, t.zero, t.one, t.add, t.mul}; }

bool fails_at(const Raw& r, const std::string& ax, const std::vector<std::uint32_t>& w) {
  auto x = [&](std::size_t i) { return static_cast<long long>(w.at(i)); };
  if (ax == "additive-associativity") return r.a(r.a(x(0), x(1)), x(2)) != r.a(x(0), r.a(x(1), x(2)));
  if (ax == "additive-commutativity") return r.a(x(0), x(1)) != r.a(x(1), x(0));
  if (ax == "zero-identity") return r.a(x(0), r.zero) != x(0) || r.a(r.zero, x(0)) != x(0);
  if (ax == "multiplicative-associativity") return r.m(r.m(x(0), x(1)), x(2)) != r.m(x(0), r.m(x(1), x(2)));
  if (ax == "one-identity") return r.m(x(0), r.one) != x(0) || r.m(r.one, x(0)) != x(0);
  if (ax == "left-distributivity")
    return r.m(x(0), r.a(x(1), x(2))) != r.a(r.m(x(0), x(1)), r.m(x(0), x(2)));
  if (ax == "right-distributivity")
    return r.m(r.a(x(0), x(1)), x(2)) != r.a(r.m(x(0), x(2)), r.m(x(1), x(2)));
  if (ax == "zero-annihilation") return r.m(r.zero, x(0)) != r.zero || r.m(x(0), r.zero) != r.zero;
  throw std::logic_error("unknown axiom " + ax);
}

bool axiom_holds_everywhere(const Raw& r, const std::string& ax) {
  for (std::uint32_t a = 0; a < r.n; ++a)
    for (std::uint32_t b = 0; b < r.n; ++b)
      for (std::uint32_t c = 0; c < r.n; ++c)
        if (fails_at(r, ax, {a, b, c})) return false;
  return true;
}

const std::vector<std::string> kAxiomOrder = {
    "additive-associativity", "additive-commutativity", "zero-identity",
    "multiplicative-associativity", "one-identity", "left-distributivity",
    "right-distributivity", "zero-annihilation"};

}  // namespace oracle
