/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "crystalkit/crystalkit.h"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "crystalkit/harness.hpp"
#include "crystalkit/serialize.hpp"

struct ck_word {
  crystalkit::ReducedWord word;
};

struct ck_crystal {
  crystalkit::CrystalGraph graph;
};

namespace {

using namespace crystalkit;

thread_local std::string last_error;

ck_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadLength: return CK_BAD_LENGTH;
    case ErrorCode::BadLetter: return CK_BAD_LETTER;
    case ErrorCode::NotReduced: return CK_NOT_REDUCED;
    case ErrorCode::InapplicableMove: return CK_INAPPLICABLE_MOVE;
    case ErrorCode::IncomparableKinds: return CK_INCOMPARABLE_KINDS;
    case ErrorCode::NoUniqueExtremum: return CK_NO_UNIQUE_EXTREMUM;
    case ErrorCode::PeelingIncomplete: return CK_PEELING_INCOMPLETE;
    case ErrorCode::NotAStringDatum: return CK_NOT_A_STRING_DATUM;
    case ErrorCode::DimensionMismatch: return CK_DIMENSION_MISMATCH;
    case ErrorCode::UnknownSuite: return CK_UNKNOWN_SUITE;
    case ErrorCode::NoUniqueRoot: return CK_NO_UNIQUE_ROOT;
    case ErrorCode::InvalidArgument: return CK_INVALID_ARGUMENT;
    case ErrorCode::Overflow: return CK_OVERFLOW;
  }
  return CK_INTERNAL;
}

ck_status set_error(ck_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class Fn>
ck_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    return fn();
  } catch (const Error& e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(CK_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(CK_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) fail(ErrorCode::InvalidArgument, what);
}

Family to_family(ck_family f) {
  switch (f) {
    case CK_FAMILY_L: return Family::L;
    case CK_FAMILY_LSTAR: return Family::Lstar;
    case CK_FAMILY_S: return Family::S;
    case CK_FAMILY_SSTAR: return Family::Sstar;
  }
  fail(ErrorCode::InvalidArgument, "unknown family");
}

CrossingKind to_kind(ck_crossing_kind k) {
  switch (k) {
    case CK_CROSSING_REINEKE: return CrossingKind::Reineke;
    case CK_CROSSING_DUAL_REINEKE: return CrossingKind::DualReineke;
    case CK_CROSSING_KASHIWARA: return CrossingKind::Kashiwara;
  }
  fail(ErrorCode::InvalidArgument, "unknown crossing kind");
}

HighestWeight to_lambda(const ReducedWord& word, const int64_t* lambda, size_t len) {
  require(lambda || len == 0, "lambda is null");
  if (static_cast<int>(len) != word.n() - 1)
    fail(ErrorCode::DimensionMismatch, "lambda needs " + std::to_string(word.n() - 1) +
                                           " coefficients, got " + std::to_string(len));
  return HighestWeight(Vec(lambda, lambda + len));
}

std::span<const Int> to_span(const ReducedWord& word, const int64_t* x, size_t len) {
  require(x != nullptr, "datum is null");
  if (len != word.size())
    fail(ErrorCode::DimensionMismatch, "datum needs " + std::to_string(word.size()) +
                                           " coordinates, got " + std::to_string(len));
  return {reinterpret_cast<const Int*>(x), len};
}

void copy_out(const Vec& v, int64_t* out) {
  require(out != nullptr, "output buffer is null");
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k];
}

}  // namespace

extern "C" {

const char* ck_version(void) { return "1.0.0"; }

const char* ck_status_name(ck_status status) {
  switch (status) {
    case CK_OK: return "OK";
    case CK_BAD_LENGTH: return "BadLength";
    case CK_BAD_LETTER: return "BadLetter";
    case CK_NOT_REDUCED: return "NotReduced";
    case CK_INAPPLICABLE_MOVE: return "InapplicableMove";
    case CK_INCOMPARABLE_KINDS: return "IncomparableKinds";
    case CK_NO_UNIQUE_EXTREMUM: return "NoUniqueExtremum";
    case CK_PEELING_INCOMPLETE: return "PeelingIncomplete";
    case CK_NOT_A_STRING_DATUM: return "NotAStringDatum";
    case CK_DIMENSION_MISMATCH: return "DimensionMismatch";
    case CK_UNKNOWN_SUITE: return "UnknownSuite";
    case CK_NO_UNIQUE_ROOT: return "NoUniqueRoot";
    case CK_INVALID_ARGUMENT: return "InvalidArgument";
    case CK_OVERFLOW: return "Overflow";
    case CK_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case CK_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* ck_last_error(void) { return last_error.c_str(); }

void ck_free_string(char* s) { std::free(s); }

ck_status ck_parse_ints(const char* csv, int64_t* out, size_t cap, size_t* len) {
  return guarded([&] {
    require(csv && len, "null argument");
    std::string_view text(csv);
    std::size_t count = 0;
    if (!text.empty()) {
      std::size_t pos = 0;
      while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string item(text.substr(pos, comma == std::string_view::npos ? text.npos
                                                                               : comma - pos));
        char* end = nullptr;
        errno = 0;
        const long long v = std::strtoll(item.c_str(), &end, 10);
        if (item.empty() || *end != '\0' || errno == ERANGE)
          fail(ErrorCode::InvalidArgument, "'" + item + "' is not an integer");
        if (count < cap && out) out[count] = v;
        ++count;
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
      }
    }
    *len = count;
    if (count > cap) return set_error(CK_BUFFER_TOO_SMALL, "buffer holds " + std::to_string(cap));
    return CK_OK;
  });
}

ck_status ck_parse_family(const char* name, ck_family* out) {
  return guarded([&] {
    require(name && out, "null argument");
    switch (parse_family(name)) {
      case Family::L: *out = CK_FAMILY_L; break;
      case Family::Lstar: *out = CK_FAMILY_LSTAR; break;
      case Family::S: *out = CK_FAMILY_S; break;
      case Family::Sstar: *out = CK_FAMILY_SSTAR; break;
    }
    return CK_OK;
  });
}

ck_status ck_parse_crossing_kind(const char* name, ck_crossing_kind* out) {
  return guarded([&] {
    require(name && out, "null argument");
    switch (parse_crossing_kind(name)) {
      case CrossingKind::Reineke: *out = CK_CROSSING_REINEKE; break;
      case CrossingKind::DualReineke: *out = CK_CROSSING_DUAL_REINEKE; break;
      case CrossingKind::Kashiwara: *out = CK_CROSSING_KASHIWARA; break;
    }
    return CK_OK;
  });
}

ck_status ck_word_parse(int n, const char* csv, ck_word** out) {
  return guarded([&] {
    require(csv && out, "null argument");
    *out = new ck_word{parse_word(n, csv)};
    return CK_OK;
  });
}

ck_status ck_word_create(int n, const int* letters, size_t len, ck_word** out) {
  return guarded([&] {
    require((letters || len == 0) && out, "null argument");
    *out = new ck_word{validate_reduced_word(n, std::span<const Letter>(letters, len))};
    return CK_OK;
  });
}

void ck_word_free(ck_word* word) { delete word; }

int ck_word_rank(const ck_word* word) { return word ? word->word.n() : 0; }

size_t ck_word_length(const ck_word* word) { return word ? word->word.size() : 0; }

ck_status ck_word_letters(const ck_word* word, int* out, size_t cap) {
  return guarded([&] {
    require(word && out, "null argument");
    if (cap < word->word.size()) return set_error(CK_BUFFER_TOO_SMALL, "buffer too small");
    std::copy(word->word.letters().begin(), word->word.letters().end(), out);
    return CK_OK;
  });
}

ck_status ck_word_star(const ck_word* word, ck_word** out) {
  return guarded([&] {
    require(word && out, "null argument");
    *out = new ck_word{star_word(word->word)};
    return CK_OK;
  });
}

ck_status ck_word_opposite(const ck_word* word, ck_word** out) {
  return guarded([&] {
    require(word && out, "null argument");
    *out = new ck_word{opposite_word(word->word)};
    return CK_OK;
  });
}

ck_status ck_roots(const ck_word* word, ck_format format, char** out) {
  return guarded([&] {
    require(word && out, "null argument");
    require(format == CK_FORMAT_JSON || format == CK_FORMAT_TEXT, "roots support json or text");
    *out = copy_string(format == CK_FORMAT_JSON ? roots_json(word->word) : roots_text(word->word));
    return CK_OK;
  });
}

ck_status ck_diagram_dot(const ck_word* word, int a, int dual, char** out) {
  return guarded([&] {
    require(word && out, "null argument");
    if (a < 1 || a >= word->word.n()) fail(ErrorCode::BadLetter, "letter out of range");
    *out = copy_string(to_dot(orient(build_wiring(word->word), a, dual != 0)));
    return CK_OK;
  });
}

ck_status ck_crossings(const ck_word* word, int a, ck_crossing_kind kind, char** out) {
  return guarded([&] {
    require(word && out, "null argument");
    if (a < 1 || a >= word->word.n()) fail(ErrorCode::BadLetter, "letter out of range");
    const auto lattice = crossing_lattice(word->word, a, to_kind(kind));
    *out = copy_string(crossings_json(lattice->diagram(), lattice->crossings()));
    return CK_OK;
  });
}

ck_status ck_inequalities(const ck_word* word, ck_family family, ck_format format, char** out) {
  return guarded([&] {
    require(word && out, "null argument");
    require(format == CK_FORMAT_JSON || format == CK_FORMAT_TEXT,
            "inequalities support json or text");
    const auto system = inequality_system(to_family(family), word->word);
    *out = copy_string(format == CK_FORMAT_JSON ? inequalities_json(system)
                                                : inequalities_text(system));
    return CK_OK;
  });
}

ck_status ck_points(const ck_word* word, ck_family family, const int64_t* lambda,
                    size_t lambda_len, ck_format format, char** out, size_t* count) {
  return guarded([&] {
    require(word && out, "null argument");
    require(format == CK_FORMAT_JSON || format == CK_FORMAT_CSV, "points support json or csv");
    const auto points =
        lattice_points(to_family(family), word->word, to_lambda(word->word, lambda, lambda_len));
    *out = copy_string(format == CK_FORMAT_JSON ? points_json(points) : points_csv(points));
    if (count) *count = points.size();
    return CK_OK;
  });
}

ck_status ck_crystal_create(const ck_word* word, ck_family family, const int64_t* lambda,
                            size_t lambda_len, ck_crystal** out) {
  return guarded([&] {
    require(word && out, "null argument");
    *out = new ck_crystal{enumerate_crystal(to_family(family), word->word,
                                            to_lambda(word->word, lambda, lambda_len))};
    return CK_OK;
  });
}

void ck_crystal_free(ck_crystal* crystal) { delete crystal; }

size_t ck_crystal_size(const ck_crystal* crystal) { return crystal ? crystal->graph.size() : 0; }

ck_status ck_crystal_render(const ck_crystal* crystal, ck_format format, char** out) {
  return guarded([&] {
    require(crystal && out, "null argument");
    require(format == CK_FORMAT_JSON || format == CK_FORMAT_DOT, "crystals support json or dot");
    *out = copy_string(format == CK_FORMAT_JSON ? crystal_json(crystal->graph)
                                                : crystal_dot(crystal->graph));
    return CK_OK;
  });
}

ck_status ck_transition(ck_family family, const ck_word* from, const ck_word* to,
                        const int64_t* x, size_t len, int64_t* out) {
  return guarded([&] {
    require(from && to, "null argument");
    const auto data = to_span(from->word, x, len);
    const Vec y = is_lusztig(to_family(family)) ? phi_transition(from->word, to->word, data)
                                                : psi_transition(from->word, to->word, data);
    copy_out(y, out);
    return CK_OK;
  });
}

ck_status ck_string_datum(const ck_word* word, const int64_t* x, size_t len, int inverse,
                          int64_t* out) {
  return guarded([&] {
    require(word != nullptr, "null argument");
    const auto data = to_span(word->word, x, len);
    copy_out(inverse ? string_inverse(word->word, data) : string_datum(word->word, data), out);
    return CK_OK;
  });
}

ck_status ck_weyl_dim(int n, const int64_t* lambda, size_t lambda_len, uint64_t* out) {
  return guarded([&] {
    require(out && (lambda || lambda_len == 0), "null argument");
    const Rank rank(n);
    if (static_cast<int>(lambda_len) != rank.n() - 1)
      fail(ErrorCode::DimensionMismatch, "lambda needs " + std::to_string(n - 1) + " coefficients");
    *out = weyl_dim(n, HighestWeight(Vec(lambda, lambda + lambda_len)));
    return CK_OK;
  });
}

void ck_suite_params_default(ck_suite_params* params) {
  if (!params) return;
  const SuiteParams d;
  *params = {d.max_n, d.max_lambda_sum, d.height, d.samples, d.sample_max_entry, d.seed, d.threads};
}

size_t ck_suite_count(void) { return suite_names().size(); }

const char* ck_suite_name(size_t index) {
  return index < suite_names().size() ? suite_names()[index].c_str() : nullptr;
}

ck_status ck_verify(const char* suite, const ck_suite_params* params, int* passed,
                    char** report_text, char** report_json) {
  return guarded([&] {
    require(suite && passed, "null argument");
    SuiteParams p;
    if (params) {
      p.max_n = params->max_n;
      p.max_lambda_sum = params->max_lambda_sum;
      p.height = params->height;
      p.samples = params->samples;
      p.sample_max_entry = params->sample_max_entry;
      p.seed = params->seed;
      p.threads = params->threads;
    }
    const auto report = run_suite(suite, p);
    *passed = report.passed() ? 1 : 0;
    if (report_text) *report_text = copy_string(report.text());
    if (report_json) *report_json = copy_string(report.json());
    return CK_OK;
  });
}

}  // extern "C"
