/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
// crystal-kit: command-line frontend over the crystalkit C API.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "crystalkit/crystalkit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Raised for validation errors reported by the library.
struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(ck_status status) {
  if (status == CK_OK) return;
  const std::string message = ck_last_error();
  throw Failure(message.empty() ? std::string(ck_status_name(status)) : message);
}

struct WordDeleter {
  void operator()(ck_word* w) const { ck_word_free(w); }
};
using WordPtr = std::unique_ptr<ck_word, WordDeleter>;

struct StringDeleter {
  void operator()(char* s) const { ck_free_string(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

struct Config {
  int n = 0;
  std::string word;
  std::string family;
  std::string lambda;
  std::string format;
  std::string output;
  int a = 1;
  std::string kind = "reineke";
  bool dual = false;
  std::string to_word;
  std::string x;
  bool inverse = false;
  std::string suite;
  ck_suite_params params{};
};

WordPtr load_word(int n, const std::string& csv) {
  ck_word* w = nullptr;
  check(ck_word_parse(n, csv.c_str(), &w));
  return WordPtr(w);
}

std::vector<int64_t> parse_ints(const std::string& csv) {
  size_t len = 0;
  const ck_status first = ck_parse_ints(csv.c_str(), nullptr, 0, &len);
  if (first != CK_OK && first != CK_BUFFER_TOO_SMALL) check(first);
  std::vector<int64_t> out(len);
  check(ck_parse_ints(csv.c_str(), out.data(), out.size(), &len));
  return out;
}

ck_family parse_family(const std::string& name) {
  ck_family f{};
  check(ck_parse_family(name.c_str(), &f));
  return f;
}

ck_format parse_format(const std::string& name) {
  if (name == "json") return CK_FORMAT_JSON;
  if (name == "csv") return CK_FORMAT_CSV;
  if (name == "dot") return CK_FORMAT_DOT;
  if (name == "text") return CK_FORMAT_TEXT;
  throw Failure("unknown format '" + name + "'");
}

std::string format_ints(const std::vector<int64_t>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out;
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw Failure("cannot open '" + cfg.output + "' for writing");
  file << text;
  if (!file) throw Failure("write to '" + cfg.output + "' failed");
}

void emit(const Config& cfg, char* owned) {
  StringPtr guard(owned);
  emit(cfg, std::string(owned));
}

int cmd_roots(const Config& cfg) {
  const auto w = load_word(cfg.n, cfg.word);
  char* out = nullptr;
  check(ck_roots(w.get(), parse_format(cfg.format.empty() ? "text" : cfg.format), &out));
  emit(cfg, out);
  return kExitOk;
}

int cmd_diagram(const Config& cfg) {
  const auto w = load_word(cfg.n, cfg.word);
  char* out = nullptr;
  check(ck_diagram_dot(w.get(), cfg.a, cfg.dual ? 1 : 0, &out));
  emit(cfg, out);
  return kExitOk;
}

int cmd_crossings(const Config& cfg) {
  const auto w = load_word(cfg.n, cfg.word);
  ck_crossing_kind kind{};
  check(ck_parse_crossing_kind(cfg.kind.c_str(), &kind));
  char* out = nullptr;
  check(ck_crossings(w.get(), cfg.a, kind, &out));
  emit(cfg, out);
  return kExitOk;
}

int cmd_inequalities(const Config& cfg) {
  const auto w = load_word(cfg.n, cfg.word);
  const ck_family family = parse_family(cfg.family);
  char* out = nullptr;
  check(ck_inequalities(w.get(), family, parse_format(cfg.format.empty() ? "json" : cfg.format),
                        &out));
  std::string text(out);
  ck_free_string(out);
  if (!cfg.lambda.empty()) {
    // With a lambda, also list the lattice points of the polytope.
    const auto lambda = parse_ints(cfg.lambda);
    char* pts = nullptr;
    size_t count = 0;
    check(ck_points(w.get(), family, lambda.data(), lambda.size(), CK_FORMAT_JSON, &pts, &count));
    StringPtr guard(pts);
    std::cerr << count << " lattice points for lambda=(" << format_ints(lambda) << ")\n";
  }
  emit(cfg, text);
  return kExitOk;
}

int cmd_points(const Config& cfg) {
  const auto w = load_word(cfg.n, cfg.word);
  const auto lambda = parse_ints(cfg.lambda);
  char* out = nullptr;
  size_t count = 0;
  check(ck_points(w.get(), parse_family(cfg.family), lambda.data(), lambda.size(),
                  parse_format(cfg.format.empty() ? "json" : cfg.format), &out, &count));
  emit(cfg, out);
  return kExitOk;
}

int cmd_crystal(const Config& cfg) {
  const auto w = load_word(cfg.n, cfg.word);
  const auto lambda = parse_ints(cfg.lambda);
  ck_crystal* g = nullptr;
  check(ck_crystal_create(w.get(), parse_family(cfg.family), lambda.data(), lambda.size(), &g));
  std::unique_ptr<ck_crystal, void (*)(ck_crystal*)> guard(g, ck_crystal_free);
  char* out = nullptr;
  check(ck_crystal_render(g, parse_format(cfg.format.empty() ? "json" : cfg.format), &out));
  emit(cfg, out);
  return kExitOk;
}

int cmd_transition(const Config& cfg) {
  const ck_family family = parse_family(cfg.family);
  if (family != CK_FAMILY_L && family != CK_FAMILY_S)
    throw Failure("transition supports --family L or S");
  const auto from = load_word(cfg.n, cfg.word);
  const auto to = load_word(cfg.n, cfg.to_word);
  const auto x = parse_ints(cfg.x);
  std::vector<int64_t> y(ck_word_length(to.get()));
  check(ck_transition(family, from.get(), to.get(), x.data(), x.size(), y.data()));
  emit(cfg, format_ints(y) + "\n");
  return kExitOk;
}

int cmd_string_datum(const Config& cfg) {
  const auto w = load_word(cfg.n, cfg.word);
  const auto x = parse_ints(cfg.x);
  std::vector<int64_t> y(ck_word_length(w.get()));
  check(ck_string_datum(w.get(), x.data(), x.size(), cfg.inverse ? 1 : 0, y.data()));
  emit(cfg, format_ints(y) + "\n");
  return kExitOk;
}

int cmd_verify(const Config& cfg) {
  int passed = 0;
  char* text = nullptr;
  char* json = nullptr;
  check(ck_verify(cfg.suite.c_str(), &cfg.params, &passed, &text, &json));
  StringPtr t(text), j(json);
  emit(cfg, cfg.format == "json" ? std::string(json) : std::string(text));
  if (!passed) std::cerr << "suite " << cfg.suite << " failed\n";
  return passed ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crystal structures, polytopes and transition maps for canonical bases of sl_n"};
  app.require_subcommand(1);
  Config cfg;
  ck_suite_params_default(&cfg.params);

  auto add_word = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "rank parameter n (words for the longest element of S_n)")
        ->required()
        ->check(CLI::Range(2, 64));
    sub->add_option("--word", cfg.word, "reduced word, comma-separated letters")->required();
  };
  auto add_output = [&](CLI::App* sub, const std::vector<std::string>& formats) {
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
    sub->add_option("-o,--output", cfg.output, "write to this file instead of stdout");
  };
  const std::vector<std::string> families = {"L", "Lstar", "S", "Sstar"};

  auto* roots = app.add_subcommand("roots", "root order of a reduced word");
  add_word(roots);
  add_output(roots, {"text", "json"});

  auto* diagram = app.add_subcommand("diagram", "DOT export of the oriented wiring diagram");
  add_word(diagram);
  diagram->add_option("--a", cfg.a, "letter fixing the orientation");
  diagram->add_flag("--dual", cfg.dual, "use the dual orientation");
  add_output(diagram, {"dot"});

  auto* crossings = app.add_subcommand("crossings", "crossings with their r and s vectors");
  add_word(crossings);
  crossings->add_option("--a", cfg.a, "letter")->required();
  crossings->add_option("--kind", cfg.kind, "reineke, dual_reineke or kashiwara")
      ->check(CLI::IsMember({"reineke", "dual_reineke", "kashiwara"}));
  add_output(crossings, {"json"});

  auto* inequalities = app.add_subcommand("inequalities", "cone and highest-weight inequalities");
  add_word(inequalities);
  inequalities->add_option("--family", cfg.family, "L, Lstar, S or Sstar")
      ->required()
      ->check(CLI::IsMember(families));
  inequalities->add_option("--lambda", cfg.lambda, "highest weight; reports the point count");
  add_output(inequalities, {"json", "text"});

  auto* points = app.add_subcommand("points", "lattice points of a polytope");
  add_word(points);
  points->add_option("--family", cfg.family, "L, Lstar, S or Sstar")
      ->required()
      ->check(CLI::IsMember(families));
  points->add_option("--lambda", cfg.lambda, "highest weight, fundamental coordinates")
      ->required();
  add_output(points, {"json", "csv"});

  auto* crystal = app.add_subcommand("crystal", "crystal graph of B(lambda)");
  add_word(crystal);
  crystal->add_option("--family", cfg.family, "L, Lstar, S or Sstar")
      ->required()
      ->check(CLI::IsMember(families));
  crystal->add_option("--lambda", cfg.lambda, "highest weight, fundamental coordinates")
      ->required();
  add_output(crystal, {"json", "dot"});

  auto* transition = app.add_subcommand("transition", "re-express a datum in another word");
  add_word(transition);
  transition->add_option("--family", cfg.family, "L (Lusztig data) or S (string data)")
      ->required()
      ->check(CLI::IsMember({"L", "S"}));
  transition->add_option("--to-word", cfg.to_word, "target reduced word")->required();
  transition->add_option("--x", cfg.x, "datum, comma-separated")->required();
  add_output(transition, {"text"});

  auto* string_datum = app.add_subcommand("string-datum", "string datum of a Lusztig datum");
  add_word(string_datum);
  string_datum->add_option("--x", cfg.x, "datum, comma-separated")->required();
  string_datum->add_flag("--inverse", cfg.inverse, "map a string datum back to Lusztig data");
  add_output(string_datum, {"text"});

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> suites;
  for (size_t i = 0; i < ck_suite_count(); ++i) suites.emplace_back(ck_suite_name(i));
  verify->add_option("--suite", cfg.suite, "suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--max-n", cfg.params.max_n, "largest n")->check(CLI::Range(3, 6));
  verify->add_option("--max-lambda-sum", cfg.params.max_lambda_sum, "largest sum of lambda")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--height", cfg.params.height, "height window for cone checks")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--samples", cfg.params.samples, "random data for path independence")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", cfg.params.seed, "seed for the random data");
  verify->add_option("--threads", cfg.params.threads, "worker threads (0: all)")
      ->check(CLI::NonNegativeNumber);
  add_output(verify, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*roots) return cmd_roots(cfg);
    if (*diagram) return cmd_diagram(cfg);
    if (*crossings) return cmd_crossings(cfg);
    if (*inequalities) return cmd_inequalities(cfg);
    if (*points) return cmd_points(cfg);
    if (*crystal) return cmd_crystal(cfg);
    if (*transition) return cmd_transition(cfg);
    if (*string_datum) return cmd_string_datum(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const Failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
