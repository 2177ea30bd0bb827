/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crystalkit {

using Int = std::int64_t;
using Vec = std::vector<Int>;
using Letter = int;

enum class ErrorCode {
  BadLength,
  BadLetter,
  NotReduced,
  InapplicableMove,
  IncomparableKinds,
  NoUniqueExtremum,
  PeelingIncomplete,
  NotAStringDatum,
  DimensionMismatch,
  UnknownSuite,
  NoUniqueRoot,
  InvalidArgument,
  Overflow,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

// Checked integer arithmetic; all coordinates pass through these.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

Int dot(std::span<const Int> u, std::span<const Int> v);

// The four parametrizations: Lusztig data and string data, each with the
// plain and the *-twisted crystal structure.
enum class Family { L, Lstar, S, Sstar };

inline constexpr Family kAllFamilies[] = {Family::L, Family::Lstar, Family::S,
                                          Family::Sstar};

std::string_view family_name(Family f) noexcept;
Family parse_family(std::string_view name);

inline bool is_starred(Family f) noexcept {
  return f == Family::Lstar || f == Family::Sstar;
}
inline bool is_lusztig(Family f) noexcept {
  return f == Family::L || f == Family::Lstar;
}

enum class StepDirection { Raise, Lower };

std::string format_vec(std::span<const Int> v);

}  // namespace crystalkit
