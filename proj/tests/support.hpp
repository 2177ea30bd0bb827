/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <functional>
#include <vector>

#include "crystalkit/rootcore.hpp"
#include "crystalkit/types.hpp"
#include "doctest.h"

namespace testing {

inline std::vector<int> letters_of(const crystalkit::ReducedWord& w) {
  return {w.letters().begin(), w.letters().end()};
}

// Code of the Error thrown by fn; fails the test when nothing is thrown.
inline crystalkit::ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const crystalkit::Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return crystalkit::ErrorCode::InvalidArgument;
}

inline crystalkit::ReducedWord w121() { return crystalkit::validate_reduced_word(3, {1, 2, 1}); }
inline crystalkit::ReducedWord w212() { return crystalkit::validate_reduced_word(3, {2, 1, 2}); }

}  // namespace testing
