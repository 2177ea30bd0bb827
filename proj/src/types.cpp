/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "crystalkit/types.hpp"

#include <sstream>

namespace crystalkit {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::BadLetter: return "BadLetter";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::InapplicableMove: return "InapplicableMove";
    case ErrorCode::IncomparableKinds: return "IncomparableKinds";
    case ErrorCode::NoUniqueExtremum: return "NoUniqueExtremum";
    case ErrorCode::PeelingIncomplete: return "PeelingIncomplete";
    case ErrorCode::NotAStringDatum: return "NotAStringDatum";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::NoUniqueRoot: return "NoUniqueRoot";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(error_code_name(code)) + ": " + what);
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::Overflow, "subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "multiplication");
  return r;
}

Int dot(std::span<const Int> u, std::span<const Int> v) {
  if (u.size() != v.size())
    fail(ErrorCode::DimensionMismatch, "dot product of vectors with different lengths");
  Int acc = 0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] == 0 || v[k] == 0) continue;
    acc = checked_add(acc, checked_mul(u[k], v[k]));
  }
  return acc;
}

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::L: return "L";
    case Family::Lstar: return "Lstar";
    case Family::S: return "S";
    case Family::Sstar: return "Sstar";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : kAllFamilies)
    if (family_name(f) == name) return f;
  fail(ErrorCode::InvalidArgument,
       "unknown family '" + std::string(name) + "' (expected L, Lstar, S or Sstar)");
}

std::string format_vec(std::span<const Int> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ')';
  return os.str();
}

}  // namespace crystalkit
