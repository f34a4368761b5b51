#pragma once

/**
 * @file error.hpp
 * @brief Exception hierarchy shared by every semicat module.
 *
 * All failures derive from semicat::Error so callers (the CLI in particular)
 * can catch one type and still dispatch on the concrete class when needed.
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semicat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A semiring (or Lie / restricted) axiom failed; `witness` names the inputs.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::vector<std::uint32_t> witness,
                 const std::string& detail = {})
      : Error("axiom violated: " + axiom + witness_text(witness) +
              (detail.empty() ? "" : " (" + detail + ")")),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<std::uint32_t>& witness() const noexcept { return witness_; }

 private:
  static std::string witness_text(const std::vector<std::uint32_t>& w) {
    std::string s = " at (";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(w[i]);
    }
    return s + ")";
  }

  std::string axiom_;
  std::vector<std::uint32_t> witness_;
};

#define SEMICAT_DEFINE_ERROR(Name) \
  class Name : public Error {      \
   public:                         \
    using Error::Error;            \
  }

SEMICAT_DEFINE_ERROR(IndexOutOfRange);
SEMICAT_DEFINE_ERROR(UnsupportedCarrier);
SEMICAT_DEFINE_ERROR(SizeLimitExceeded);
SEMICAT_DEFINE_ERROR(DimensionMismatch);
SEMICAT_DEFINE_ERROR(SemiringMismatch);
SEMICAT_DEFINE_ERROR(SearchCapExceeded);
SEMICAT_DEFINE_ERROR(ZeroRank);
SEMICAT_DEFINE_ERROR(MissingIso);
SEMICAT_DEFINE_ERROR(NonInvertibleFamily);
SEMICAT_DEFINE_ERROR(NotAnAutomorphism);
SEMICAT_DEFINE_ERROR(InjectionsNotFixed);
SEMICAT_DEFINE_ERROR(NonInvertibleStack);
SEMICAT_DEFINE_ERROR(CapMismatch);
SEMICAT_DEFINE_ERROR(AntisymmetryViolation);
SEMICAT_DEFINE_ERROR(NotBracketPreserving);
SEMICAT_DEFINE_ERROR(DegreeCapExceeded);
SEMICAT_DEFINE_ERROR(ConfigError);
SEMICAT_DEFINE_ERROR(IoError);

#undef SEMICAT_DEFINE_ERROR

/// Jacobi identity failed on basis triple (i, j, k); residual is rendered.
class JacobiViolation : public Error {
 public:
  JacobiViolation(std::size_t i, std::size_t j, std::size_t k, std::string residual)
      : Error("Jacobi identity fails on (" + std::to_string(i) + "," + std::to_string(j) +
              "," + std::to_string(k) + "), residual " + residual),
        i_(i), j_(j), k_(k), residual_(std::move(residual)) {}

  std::size_t i() const noexcept { return i_; }
  std::size_t j() const noexcept { return j_; }
  std::size_t k() const noexcept { return k_; }
  const std::string& residual() const noexcept { return residual_; }

 private:
  std::size_t i_, j_, k_;
  std::string residual_;
};

/// Input could not be parsed; `field` names the offending key or position.
class ParseError : public Error {
 public:
  ParseError(std::string field, const std::string& what)
      : Error("parse error at '" + field + "': " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace semicat
