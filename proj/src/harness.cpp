/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "crystalkit/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "crystalkit/polytopes.hpp"
#include "json.hpp"

namespace crystalkit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
  };
  const std::size_t workers = std::min<std::size_t>(threads, count);
  if (workers <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

using CheckFn = std::function<void(Check&)>;

class Runner {
 public:
  Runner(std::string suite, const SuiteParams& params)
      : threads_(resolve_threads(params.threads)), start_(Clock::now()) {
    report_.suite = std::move(suite);
    report_.params = params;
  }

  // fn(i, check) fills one check per instance; instances run in parallel and
  // are stored in index order.
  void section(const std::string& name, std::size_t count,
               const std::function<void(std::size_t, Check&)>& fn) {
    const auto t0 = Clock::now();
    std::vector<Check> out(count);
    parallel_for(count, threads_, [&](std::size_t i) {
      Check& c = out[i];
      c.section = name;
      try {
        fn(i, c);
      } catch (const std::exception& e) {
        c.passed = false;
        c.witness = std::string("exception: ") + e.what();
      }
    });
    for (auto& c : out) report_.checks.push_back(std::move(c));
    report_.timings.push_back({name, seconds_since(t0)});
  }

  void section(const std::string& name, std::vector<std::pair<std::string, CheckFn>> items) {
    section(name, items.size(), [&](std::size_t i, Check& c) {
      c.id = items[i].first;
      items[i].second(c);
    });
  }

  SuiteReport finish() {
    report_.elapsed_seconds = seconds_since(start_);
    return std::move(report_);
  }

 private:
  SuiteReport report_;
  int threads_;
  Clock::time_point start_;
};

// Counts comparisons and keeps the first mismatch as the witness.
class Tally {
 public:
  template <class What>
  void expect(bool ok, What&& what) {
    ++compared_;
    if (!ok && mismatches_++ == 0) first_ = what();
  }
  std::size_t mismatches() const { return mismatches_; }
  void into(Check& c, const std::string& extra = "") const {
    c.passed = mismatches_ == 0;
    c.detail = (extra.empty() ? "" : extra + " ") + "compared=" + std::to_string(compared_) +
               " mismatches=" + std::to_string(mismatches_);
    if (mismatches_) c.witness = first_;
  }

 private:
  std::size_t compared_ = 0;
  std::size_t mismatches_ = 0;
  std::string first_;
};

std::string fmt(const std::optional<Vec>& v) { return v ? format_vec(*v) : "null"; }

std::string describe(const ReducedWord& w) {
  return "n=" + std::to_string(w.n()) + " word=" + format_word(w);
}

std::string describe(const ReducedWord& w, const HighestWeight& lambda) {
  return describe(w) + " lambda=" + format_vec(lambda.coeffs());
}

std::string describe(Family f, const ReducedWord& w, const HighestWeight& lambda) {
  return "family=" + std::string(family_name(f)) + " " + describe(w, lambda);
}

struct WordLambda {
  ReducedWord word;
  HighestWeight lambda;
};

std::vector<ReducedWord> words_between(int lo, int hi) {
  std::vector<ReducedWord> out;
  for (int n = lo; n <= hi; ++n)
    for (auto& w : all_reduced_words(n)) out.push_back(std::move(w));
  return out;
}

std::vector<WordLambda> word_lambdas(int lo, int hi, Int max_sum) {
  std::vector<WordLambda> out;
  for (int n = lo; n <= hi; ++n) {
    const auto lambdas = dominant_weights_up_to(n, max_sum);
    for (const auto& w : all_reduced_words(n))
      for (const auto& l : lambdas) out.push_back({w, l});
  }
  return out;
}

ReducedWord reversed_word(const ReducedWord& w) {
  std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
  return validate_reduced_word(w.n(), letters);
}

Vec unit_vec(std::size_t size, std::size_t index) {
  Vec v(size, 0);
  v.at(index) = 1;
  return v;
}

Vec negated(Vec v) {
  for (Int& x : v) x = -x;
  return v;
}

Vec reversed(std::span<const Int> v) { return Vec(v.rbegin(), v.rend()); }

Vec sub(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = checked_sub(a[k], b[k]);
  return out;
}

// eta_k(x) = x_k + sum_{l > k} c_{i_k, i_l} x_l, maximized over k with i_k = a.
Int eta_max(const ReducedWord& w, std::span<const Int> x, Letter a) {
  Int best = std::numeric_limits<Int>::min();
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w.letters()[k] != a) continue;
    Int v = x[k];
    for (std::size_t l = k + 1; l < w.size(); ++l)
      v += cartan_entry(w.letters()[k], w.letters()[l]) * x[l];
    best = std::max(best, v);
  }
  return best;
}

std::vector<Vec> sorted_unique(std::vector<Vec> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// ---------------------------------------------------------------- paper-example

void suite_paper_example(Runner& run, const SuiteParams&) {
  const ReducedWord w = example_word();
  run.section("example", {
      {"root-order",
       [&](Check& c) {
         c.instance = describe(w);
         const std::vector<PositiveRoot> expected = {{2, 3}, {1, 3}, {1, 2}, {1, 4}, {1, 5},
                                                     {4, 5}, {2, 5}, {3, 5}, {2, 4}, {3, 4}};
         const auto roots = root_order(w);
         c.passed = std::equal(roots.begin(), roots.end(), expected.begin(), expected.end());
         std::ostringstream got;
         for (const auto& r : roots) got << "(" << r.k << "," << r.l << ")";
         c.detail = got.str();
         if (!c.passed) c.witness = "root order " + got.str();
       }},
      {"first-vertex",
       [&](Check& c) {
         c.instance = describe(w);
         const auto d = build_wiring(w);
         c.passed = d.vertex(1).lower == 2 && d.vertex(1).upper == 3;
         if (!c.passed) c.witness = "vertex 1 has wires " + std::to_string(d.vertex(1).lower) +
                                    "," + std::to_string(d.vertex(1).upper);
       }},
      {"orientation-a3",
       [&](Check& c) {
         c.instance = describe(w) + " a=3";
         const auto ow = orient(build_wiring(w), 3, false);
         for (int wire = 1; wire <= 5; ++wire) {
           const auto want = wire <= 3 ? Direction::LeftToRight : Direction::RightToLeft;
           if (ow.direction(wire) != want) {
             c.passed = false;
             c.witness = "wire " + std::to_string(wire) + " has the wrong orientation";
           }
         }
       }},
      {"reineke-crossing-a3",
       [&](Check& c) {
         c.instance = describe(w) + " a=3 kind=reineke";
         const auto lattice = crossing_lattice(w, 3, CrossingKind::Reineke);
         const std::vector<int> path = {1, 2, 3, 7, 9, 6, 4};
         const Vec r = {0, -1, 1, 0, 0, 0, 0, 0, 1, 0};
         const Vec s = {-1, 0, 0, 1, 0, -1, 1, 0, 1, 0};
         c.passed = false;
         c.witness = "no crossing with vertices (1,2,3,7,9,6,4)";
         for (std::size_t i = 0; i < lattice->size(); ++i) {
           const auto& cr = lattice->crossing(i);
           if (cr.vertices != path) continue;
           const auto& v = lattice->vectors(i);
           const bool turning_ok = cr.turning() == std::vector<int>{2, 3, 9};
           c.passed = turning_ok && v.r == r && v.s == s;
           c.detail = "r=" + format_vec(v.r) + " s=" + format_vec(v.s);
           c.witness = c.passed ? "" : "turning or vectors differ: " + c.detail;
         }
       }},
      {"kashiwara-positions-a2",
       [&](Check& c) {
         c.instance = describe(w) + " a=2";
         std::vector<int> starts;
         for (const auto& cr : kashiwara_crossings(w, 2)) starts.push_back(cr.start);
         c.passed = starts == std::vector<int>{1, 3, 7, 10};
         if (!c.passed) c.witness = "positions differ";
       }},
      {"star-word",
       [&](Check& c) {
         c.instance = describe(w);
         const auto s = star_word(w);
         c.passed = format_word(s) == "3,4,3,2,1,2,3,4,2,3";
         c.detail = format_word(s);
         if (!c.passed) c.witness = "star word " + c.detail;
       }},
  });
}

// ---------------------------------------------------------------- crystal-oracle

void oracle_check(Family f, const ReducedWord& w, const HighestWeight& lambda, Check& c) {
  c.instance = describe(f, w, lambda);
  const auto g = enumerate_crystal(f, w, lambda);
  const std::optional<HighestWeight> lam = lambda;
  Tally t;
  for (const auto& node : g.nodes()) {
    const Vec& x = node.x;
    const std::string at = " at x=" + format_vec(x);
    for (Letter a = 1; a < w.n(); ++a) {
      const std::string where = at + " a=" + std::to_string(a);
      const Int eps = epsilon_closed(f, w, x, a);
      const Int eps_ref = reference_epsilon(f, w, x, a);
      t.expect(eps == eps_ref, [&] {
        return "epsilon " + std::to_string(eps) + " vs " + std::to_string(eps_ref) + where;
      });
      const Int comp = epsilon_complement(f, w, x, a);
      const Int comp_ref = reference_epsilon_complement(f, w, x, a);
      t.expect(comp == comp_ref, [&] {
        return "complement " + std::to_string(comp) + " vs " + std::to_string(comp_ref) + where;
      });
      t.expect(comp <= lambda[a], [&] { return "complement exceeds lambda" + where; });
      for (auto dir : {StepDirection::Lower, StepDirection::Raise}) {
        const auto got = step_closed(f, w, lam, x, a, dir);
        const auto want = reference_step(f, w, lam, x, a, dir);
        t.expect(got == want, [&] {
          return std::string(dir == StepDirection::Lower ? "f" : "e") + " gives " + fmt(got) +
                 " vs oracle " + fmt(want) + where;
        });
      }
      if (auto y = step_closed(f, w, lam, x, a, StepDirection::Lower)) {
        const auto back = step_closed(f, w, lam, *y, a, StepDirection::Raise);
        t.expect(back == x, [&] { return "e after f is " + fmt(back) + where; });
        const auto idx = g.find(*y);
        t.expect(idx.has_value(), [&] { return "f leaves the graph" + where; });
        if (idx) {
          const auto& ny = g.nodes()[*idx];
          const Vec expected_wt = sub(node.wt, simple_root(w.n(), a));
          t.expect(ny.wt == expected_wt, [&] { return "weight not lowered by alpha" + where; });
          t.expect(ny.epsilon[a - 1] == node.epsilon[a - 1] + 1,
                   [&] { return "epsilon not raised by one" + where; });
          t.expect(ny.phi[a - 1] == node.phi[a - 1] - 1,
                   [&] { return "phi not lowered by one" + where; });
        }
      }
      t.expect(node.phi[a - 1] >= 0, [&] { return "negative phi" + where; });
      if (f == Family::S) {
        t.expect(eta_max(w, x, a) == eps, [&] { return "eta maximum differs" + where; });
        const auto y = step_closed(f, w, std::nullopt, x, a, StepDirection::Lower);
        const Vec d = sub(*y, x);
        std::size_t ones = 0;
        bool ok = true;
        for (std::size_t k = 0; k < d.size(); ++k) {
          if (d[k] == 0) continue;
          ok = ok && d[k] == 1 && w.letters()[k] == a;
          ++ones;
        }
        t.expect(ok && ones == 1, [&] { return "string f is not a unit step" + where; });
      }
    }
  }
  t.into(c, "nodes=" + std::to_string(g.size()));
}

void suite_crystal_oracle(Runner& run, const SuiteParams& p) {
  const auto wl = word_lambdas(3, p.max_n, p.max_lambda_sum);
  run.section("oracle-agreement", wl.size() * 4, [&](std::size_t i, Check& c) {
    c.id = "oracle";
    oracle_check(kAllFamilies[i % 4], wl[i / 4].word, wl[i / 4].lambda, c);
  });
  const ReducedWord w5 = example_word();
  const std::vector<HighestWeight> lambdas = {HighestWeight({0, 1, 0, 0}),
                                              HighestWeight({1, 0, 0, 1})};
  run.section("example-word-n5", lambdas.size() * 4, [&](std::size_t i, Check& c) {
    c.id = "oracle";
    oracle_check(kAllFamilies[i % 4], w5, lambdas[i / 4], c);
  });
}

// ---------------------------------------------------------------- polytope-points

void count_check(Family f, const ReducedWord& w, const HighestWeight& lambda, Check& c,
                 std::optional<std::uint64_t> pinned = std::nullopt) {
  c.instance = describe(f, w, lambda);
  const auto lp = enumerate_lattice_points(inequality_system(f, w), lambda);
  const auto g = enumerate_crystal(f, w, lambda);
  const auto dim = weyl_dim(w.n(), lambda);
  const auto crystal_points = g.points();
  c.detail = "count=" + std::to_string(lp.points.size()) + " crystal=" +
             std::to_string(crystal_points.size()) + " weyl=" + std::to_string(dim) +
             " box=" + std::to_string(lp.box);
  c.passed = lp.points == crystal_points && lp.points.size() == dim &&
             (!pinned || dim == *pinned);
  if (!c.passed) {
    for (const auto& x : lp.points)
      if (!g.find(x)) {
        c.witness = "lattice point " + format_vec(x) + " is not a crystal node";
        return;
      }
    for (const auto& x : crystal_points)
      if (!std::binary_search(lp.points.begin(), lp.points.end(), x)) {
        c.witness = "crystal node " + format_vec(x) + " is not a lattice point";
        return;
      }
    c.witness = "counts differ from the dimension";
  }
}

void suite_polytope_points(Runner& run, const SuiteParams& p) {
  run.section("weyl-dim", {
      {"dim-3-11", [](Check& c) {
         c.instance = "n=3 lambda=(1,1)";
         c.passed = weyl_dim(3, HighestWeight({1, 1})) == 8;
       }},
      {"dim-3-10", [](Check& c) {
         c.instance = "n=3 lambda=(1,0)";
         c.passed = weyl_dim(3, HighestWeight({1, 0})) == 3;
       }},
      {"dim-4-101", [](Check& c) {
         c.instance = "n=4 lambda=(1,0,1)";
         c.passed = weyl_dim(4, HighestWeight({1, 0, 1})) == 15;
       }},
      {"dim-4-111", [](Check& c) {
         c.instance = "n=4 lambda=(1,1,1)";
         c.passed = weyl_dim(4, HighestWeight({1, 1, 1})) == 64;
       }},
      {"dim-star-symmetry", [&](Check& c) {
         c.instance = "n<=" + std::to_string(p.max_n);
         Tally t;
         for (int n = 2; n <= p.max_n; ++n)
           for (const auto& l : dominant_weights_up_to(n, p.max_lambda_sum))
             t.expect(weyl_dim(n, l) == weyl_dim(n, l.star()),
                      [&] { return "asymmetric at " + format_vec(l.coeffs()); });
         t.into(c);
       }},
  });

  const auto wl = word_lambdas(3, p.max_n, p.max_lambda_sum);
  run.section("dimension-counts", wl.size() * 4, [&](std::size_t i, Check& c) {
    c.id = "count";
    count_check(kAllFamilies[i % 4], wl[i / 4].word, wl[i / 4].lambda, c);
  });

  const ReducedWord w5 = example_word();
  const std::vector<std::pair<HighestWeight, std::uint64_t>> spot = {
      {HighestWeight({0, 1, 0, 0}), 10}, {HighestWeight({1, 0, 0, 1}), 24}};
  run.section("n5-spot-check", spot.size() * 4, [&](std::size_t i, Check& c) {
    c.id = "count";
    count_check(kAllFamilies[i % 4], w5, spot[i / 4].first, c, spot[i / 4].second);
  });

  const ReducedWord w3 = validate_reduced_word(3, {1, 2, 1});
  const HighestWeight l10({1, 0});
  auto assignment_matches = [&](Family f, HwAssignment a) {
    const auto pts = enumerate_lattice_points(inequality_system(f, w3, a), l10).points;
    return std::pair{pts == enumerate_crystal(f, w3, l10).points(), pts};
  };
  std::vector<std::pair<std::string, CheckFn>> erratum;
  for (Family f : {Family::S, Family::Sstar}) {
    const std::string name(family_name(f));
    erratum.push_back({"adopted-" + name, [=, &assignment_matches](Check& c) {
                         c.instance = describe(f, w3, l10);
                         auto [ok, pts] = assignment_matches(f, HwAssignment::Adopted);
                         c.passed = ok;
                         c.detail = "points=" + std::to_string(pts.size());
                         if (!ok) c.witness = "adopted rows do not reproduce B(lambda)";
                       }});
    erratum.push_back({"printed-" + name, [=, &assignment_matches](Check& c) {
                         c.instance = describe(f, w3, l10);
                         c.control = true;
                         auto [ok, pts] = assignment_matches(f, HwAssignment::Printed);
                         c.passed = !ok;
                         std::string listed;
                         for (const auto& x : pts) listed += format_vec(x);
                         c.detail = "points=" + listed;
                         if (ok) c.witness = "printed rows unexpectedly reproduce B(lambda)";
                       }});
  }
  run.section("erratum-control", std::move(erratum));

  const auto smaller = word_lambdas(3, p.max_n, p.max_lambda_sum - 1);
  run.section("monotonicity", smaller.size() * 4, [&](std::size_t i, Check& c) {
    const Family f = kAllFamilies[i % 4];
    const auto& [w, l] = smaller[i / 4];
    c.id = "subset";
    c.instance = describe(f, w, l);
    const auto base = lattice_points(f, w, l);
    Tally t;
    for (Letter a = 1; a < w.n(); ++a) {
      Vec bigger(l.coeffs().begin(), l.coeffs().end());
      bigger[a - 1] += 1;
      const auto more = lattice_points(f, w, HighestWeight(bigger));
      t.expect(std::includes(more.begin(), more.end(), base.begin(), base.end()),
               [&] { return "not contained in lambda + omega_" + std::to_string(a); });
    }
    t.into(c);
  });

  const auto wl_all = word_lambdas(3, p.max_n, p.max_lambda_sum);
  run.section("weight-multisets", wl_all.size(), [&](std::size_t i, Check& c) {
    const auto& [w, l] = wl_all[i];
    c.id = "weights";
    c.instance = describe(w, l);
    auto weights = [&](Family f, const HighestWeight& lam, bool reverse) {
      std::vector<Vec> out;
      const auto g = enumerate_crystal(f, w, lam);
      for (const auto& node : g.nodes())
        out.push_back(reverse ? reversed(node.wt) : node.wt);
      std::sort(out.begin(), out.end());
      return out;
    };
    const auto base = weights(Family::L, l, false);
    Tally t;
    for (Family f : kAllFamilies)
      t.expect(weights(f, l, false) == base,
               [&] { return "weights of " + std::string(family_name(f)) + " differ"; });
    t.expect(weights(Family::L, l.star(), true) == base,
             [&] { return "weights not symmetric under lambda -> lambda*"; });
    t.into(c);
  });
}

// ---------------------------------------------------------------- cone-membership

void suite_cone_membership(Runner& run, const SuiteParams& p) {
  const auto words = words_between(3, p.max_n);
  run.section("lusztig-cone", words.size(), [&](std::size_t i, Check& c) {
    const auto& w = words[i];
    c.id = "unit-rows";
    c.instance = describe(w);
    std::vector<AffineForm> units;
    for (std::size_t k = 0; k < w.size(); ++k)
      units.push_back({unit_vec(w.size(), k), Vec(w.n() - 1, 0), Sense::GeqZero});
    std::sort(units.begin(), units.end());
    Tally t;
    t.expect(cone_system(Family::L, w) == units, [] { return "L cone is not the orthant"; });
    t.expect(cone_system(Family::Lstar, w) == units,
             [] { return "Lstar cone is not the orthant"; });
    // Every vector of the window is a Lusztig datum: peeling must succeed.
    for (const auto& x : enumerate_binfty(w, p.height)) {
      bool ok = true;
      try {
        string_datum(w, x);
      } catch (const Error&) {
        ok = false;
      }
      t.expect(ok, [&] { return "peeling failed at " + format_vec(x); });
    }
    t.into(c);
  });

  run.section("string-data-in-cone", words.size(), [&](std::size_t i, Check& c) {
    const auto& w = words[i];
    c.id = "membership";
    c.instance = describe(w) + " height=" + std::to_string(p.height);
    const auto rows = cone_system(Family::S, w);
    Tally t;
    t.expect(cone_system(Family::Sstar, w) == rows, [] { return "S and Sstar cones differ"; });
    for (const auto& x : enumerate_binfty(w, p.height)) {
      const Vec s = string_datum(w, x);
      for (const auto& row : rows)
        t.expect(dot(row.coeffs, s) >= 0, [&] {
          return "string datum " + format_vec(s) + " of " + format_vec(x) + " violates " +
                 format_vec(row.coeffs);
        });
    }
    t.into(c);
  });

  run.section("cone-points-attained", words.size(), [&](std::size_t i, Check& c) {
    const auto& w = words[i];
    c.id = "attained";
    c.instance = describe(w) + " height=" + std::to_string(p.height);
    const auto rows = cone_system(Family::S, w);
    auto sum = [](const Vec& v) {
      Int s = 0;
      for (Int x : v) s += x;
      return s;
    };
    // String data dominate Lusztig data in total size, so the Lusztig window
    // of the same height contains every string datum of size <= height.
    std::vector<Vec> attained;
    for (const auto& x : enumerate_binfty(w, p.height)) {
      Vec s = string_datum(w, x);
      if (sum(s) <= p.height) attained.push_back(std::move(s));
    }
    attained = sorted_unique(std::move(attained));
    std::vector<Vec> cone_points;
    for (const auto& x : enumerate_binfty(w, p.height)) {
      bool inside = true;
      for (const auto& row : rows) inside = inside && dot(row.coeffs, x) >= 0;
      if (inside) cone_points.push_back(x);
    }
    c.passed = attained == cone_points;
    c.detail = "cone_points=" + std::to_string(cone_points.size()) +
               " attained=" + std::to_string(attained.size());
    if (!c.passed) {
      for (const auto& x : cone_points)
        if (!std::binary_search(attained.begin(), attained.end(), x)) {
          c.witness = "cone point " + format_vec(x) + " is not a string datum";
          return;
        }
      c.witness = "a string datum lies outside the cone";
    }
  });
}

// ---------------------------------------------------------------- unimodular

// Checks that `map` carries the graph g1 onto g2 and commutes with the
// crystal operators (f with f, or f of the image with e when `anti`).
void map_iso_check(const CrystalGraph& g1, const CrystalGraph& g2, bool anti,
                   WeightMap weights, const std::function<Vec(const Vec&)>& map, Tally& t) {
  std::vector<std::size_t> image(g1.size());
  std::set<std::size_t> hit;
  for (std::size_t u = 0; u < g1.size(); ++u) {
    const Vec y = map(g1.nodes()[u].x);
    const auto v = g2.find(y);
    t.expect(v.has_value(), [&] {
      return "image " + format_vec(y) + " of " + format_vec(g1.nodes()[u].x) + " is not a node";
    });
    if (!v) return;
    image[u] = *v;
    hit.insert(*v);
  }
  t.expect(hit.size() == g1.size() && g1.size() == g2.size(),
           [] { return "map is not a bijection of node sets"; });
  for (std::size_t u = 0; u < g1.size(); ++u) {
    for (Letter a = 1; a < g1.word().n(); ++a) {
      const auto src = anti ? g1.e(u, a) : g1.f(u, a);
      const auto dst = g2.f(image[u], a);
      const bool ok = src.has_value() == dst.has_value() && (!src || image[*src] == *dst);
      t.expect(ok, [&] {
        return "operator mismatch at " + format_vec(g1.nodes()[u].x) + " a=" + std::to_string(a);
      });
    }
  }
  const auto iso = check_graph_iso(g1, g2, anti, weights);
  t.expect(iso.iso, [&] { return "graph matching failed: " + iso.witness; });
  if (iso.iso) t.expect(iso.matching == image, [] { return "BFS matching differs from the map"; });
}

void suite_unimodular(Runner& run, const SuiteParams& p) {
  const auto wl = word_lambdas(3, p.max_n, p.max_lambda_sum);
  run.section("g-affine-bijection", wl.size(), [&](std::size_t i, Check& c) {
    const auto& [w, l] = wl[i];
    c.id = "points";
    c.instance = describe(w, l);
    const auto source = lattice_points(Family::Sstar, w, l);
    const auto target = lattice_points(Family::L, w, l.star());
    std::vector<Vec> image;
    for (const auto& x : source) image.push_back(g_affine(w, l, x));
    const auto distinct = sorted_unique(image);
    c.passed = distinct.size() == source.size() && distinct == target;
    c.detail = "points=" + std::to_string(source.size());
    if (!c.passed) c.witness = "image of Sstar(lambda) differs from L(lambda*)";
  });

  run.section("g-anti-isomorphism", wl.size(), [&](std::size_t i, Check& c) {
    const auto& [w, l] = wl[i];
    c.id = "crystal";
    c.instance = describe(w, l);
    const auto g1 = enumerate_crystal(Family::Sstar, w, l);
    const auto g2 = enumerate_crystal(Family::L, w, l.star());
    Tally t;
    map_iso_check(g1, g2, true, WeightMap::Negated, [&](const Vec& x) { return g_affine(w, l, x); },
                  t);
    t.into(c, "nodes=" + std::to_string(g1.size()));
  });

  run.section("opp-isomorphism", wl.size(), [&](std::size_t i, Check& c) {
    const auto& [w, l] = wl[i];
    c.id = "crystal";
    c.instance = describe(w, l);
    const auto w_opp = opposite_word(w);
    const auto g1 = enumerate_crystal(Family::Lstar, w_opp, l);
    const auto g2 = enumerate_crystal(Family::L, w, l);
    Tally t;
    map_iso_check(g1, g2, false, WeightMap::Same, [](const Vec& x) { return opp(x); }, t);
    t.into(c, "opposite=" + format_word(w_opp));
  });

  run.section("opp-reversed-word", wl.size(), [&](std::size_t i, Check& c) {
    const auto& [w, l] = wl[i];
    c.id = "points";
    c.instance = describe(w, l);
    const auto w_rev = reversed_word(w);
    std::vector<Vec> image;
    for (const auto& x : lattice_points(Family::Lstar, w_rev, l)) image.push_back(opp(x));
    c.passed = sorted_unique(image) == lattice_points(Family::L, w, l.star());
    c.detail = "reversed=" + format_word(w_rev);
    if (!c.passed) c.witness = "opp image of Lstar(reversed, lambda) differs from L(lambda*)";
  });

  run.section("opp-star-word-control", {{"letterwise-star", [&](Check& c) {
    c.control = true;
    c.instance = "n=3.." + std::to_string(p.max_n) + " lambda sum<=" +
                 std::to_string(p.max_lambda_sum);
    std::size_t held = 0;
    std::string first_failure;
    for (const auto& [w, l] : wl) {
      std::vector<Vec> image;
      for (const auto& x : lattice_points(Family::Lstar, star_word(w), l)) image.push_back(opp(x));
      if (sorted_unique(image) == lattice_points(Family::L, w, l.star()))
        ++held;
      else if (first_failure.empty())
        first_failure = describe(w, l);
    }
    c.detail = "letterwise reading held on " + std::to_string(held) + " of " +
               std::to_string(wl.size()) + " instances";
    if (!first_failure.empty()) c.detail += "; first failure " + first_failure;
    c.passed = held < wl.size();
    if (!c.passed) c.witness = "letterwise reading unexpectedly held everywhere";
  }}});
}

// ---------------------------------------------------------------- inequality-bijection

// Normal form of <p, x> >= <q, lambda> (geq) or <p, x> <= <q, lambda>.
AffineForm normal_row(Vec p, Vec q, bool geq) {
  const bool q_zero = std::all_of(q.begin(), q.end(), [](Int v) { return v == 0; });
  if (q_zero) return {geq ? std::move(p) : negated(std::move(p)), std::move(q), Sense::GeqZero};
  if (geq) return {negated(std::move(p)), negated(std::move(q)), Sense::LeqLambda};
  return {std::move(p), std::move(q), Sense::LeqLambda};
}

std::vector<AffineForm> all_rows(const InequalitySystem& s) {
  std::vector<AffineForm> rows = s.cone_rows;
  rows.insert(rows.end(), s.hw_rows.begin(), s.hw_rows.end());
  std::sort(rows.begin(), rows.end());
  return rows;
}

// Pulls the rows of L(word, lambda*) back along y = G(lambda)(x), keeping
// lambda symbolic.
std::vector<AffineForm> pullback_through_g(const ReducedWord& w) {
  const std::size_t N = w.size();
  const int r = w.n() - 1;
  // Columns of F: F e_l.
  std::vector<Vec> f_cols;
  for (std::size_t l = 0; l < N; ++l) f_cols.push_back(f_linear(w, unit_vec(N, l)));
  auto ft = [&](const Vec& c) {
    Vec out(N, 0);
    for (std::size_t l = 0; l < N; ++l) out[l] = dot(c, f_cols[l]);
    return out;
  };
  // <c, underline(lambda)> as a lambda-vector.
  auto lam_of = [&](const Vec& c) {
    Vec out(r, 0);
    for (std::size_t k = 0; k < N; ++k) out[w.letters()[k] - 1] += c[k];
    return out;
  };
  const auto target = inequality_system(Family::L, w);
  std::vector<AffineForm> rows;
  for (const auto& row : target.cone_rows)
    // <c, lu> - <F^T c, x> >= 0.
    rows.push_back(normal_row(ft(row.coeffs), lam_of(row.coeffs), false));
  for (const auto& row : target.hw_rows) {
    // <c, lu> - <F^T c, x> <= lambda*_a = <reversed row, lambda>.
    rows.push_back(normal_row(ft(row.coeffs), sub(lam_of(row.coeffs), reversed(row.lambda_row)),
                              true));
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

std::vector<AffineForm> reversed_rows(const InequalitySystem& s, bool star_lambda) {
  std::vector<AffineForm> rows;
  for (const auto& row : all_rows(s))
    rows.push_back({reversed(row.coeffs), star_lambda ? reversed(row.lambda_row) : row.lambda_row,
                    row.sense});
  std::sort(rows.begin(), rows.end());
  return rows;
}

void suite_inequality_bijection(Runner& run, const SuiteParams& p) {
  const auto words = words_between(3, p.max_n);
  run.section("g-pullback", words.size(), [&](std::size_t i, Check& c) {
    const auto& w = words[i];
    c.id = "rows";
    c.instance = describe(w);
    const auto pulled = pullback_through_g(w);
    const auto source = all_rows(inequality_system(Family::Sstar, w));
    c.passed = pulled == source;
    c.detail = "rows=" + std::to_string(source.size());
    if (!c.passed) {
      for (const auto& row : pulled)
        if (!std::binary_search(source.begin(), source.end(), row)) {
          c.witness = "pulled-back row " + format_vec(row.coeffs) + " | " +
                      format_vec(row.lambda_row) + " is not a row of Sstar";
          return;
        }
      c.witness = "row multisets differ in size";
    }
  });

  run.section("opp-rows", words.size(), [&](std::size_t i, Check& c) {
    const auto& w = words[i];
    c.id = "rows";
    c.instance = describe(w);
    const auto target = all_rows(inequality_system(Family::L, w));
    const auto by_opposite = reversed_rows(inequality_system(Family::Lstar, opposite_word(w)), false);
    // Lstar(reversed word, lambda) against L(word, lambda*).
    const auto by_reverse = reversed_rows(inequality_system(Family::Lstar, reversed_word(w)), true);
    c.passed = by_opposite == target && by_reverse == target;
    c.detail = "rows=" + std::to_string(target.size());
    if (!c.passed) c.witness = by_opposite != target ? "opposite word rows differ"
                                                    : "reversed word rows differ";
  });

  run.section("opp-rows-star-word-control", {{"letterwise-star", [&](Check& c) {
    c.control = true;
    c.instance = "n=3.." + std::to_string(p.max_n);
    std::size_t held = 0;
    for (const auto& w : words)
      if (reversed_rows(inequality_system(Family::Lstar, star_word(w)), true) ==
          all_rows(inequality_system(Family::L, w)))
        ++held;
    c.detail = "letterwise reading held on " + std::to_string(held) + " of " +
               std::to_string(words.size()) + " words";
    c.passed = held < words.size();
    if (!c.passed) c.witness = "letterwise reading unexpectedly held everywhere";
  }}});
}

// ---------------------------------------------------------------- vector-identities

struct WordLetter {
  ReducedWord word;
  Letter a;
};

void suite_vector_identities(Runner& run, const SuiteParams& p) {
  auto words = words_between(3, p.max_n);
  if (p.max_n < 5) words.push_back(example_word());
  std::vector<WordLetter> wa;
  for (const auto& w : words)
    for (Letter a = 1; a < w.n(); ++a) wa.push_back({w, a});

  auto letter_sums = [](const ReducedWord& w, const Vec& s) {
    Vec out(w.n() - 1, 0);
    for (std::size_t k = 0; k < w.size(); ++k) out[w.letters()[k] - 1] += s[k];
    return out;
  };
  auto describe_wa = [](const WordLetter& x) {
    return describe(x.word) + " a=" + std::to_string(x.a);
  };

  // For Gamma_a the sums are delta_{b,a}; for Gamma*_a they are delta_{b,n-a}.
  auto sum_section = [&](const std::string& name, CrossingKind kind, bool dual_index) {
    run.section(name, wa.size(), [&, kind, dual_index](std::size_t i, Check& c) {
      const auto& [w, a] = wa[i];
      c.id = "letter-sums";
      c.instance = describe_wa(wa[i]);
      const auto lattice = crossing_lattice(w, a, kind);
      const Vec want = unit_vec(w.n() - 1, (dual_index ? w.n() - a : a) - 1);
      Tally t;
      for (std::size_t j = 0; j < lattice->size(); ++j)
        t.expect(letter_sums(w, lattice->vectors(j).s) == want, [&] {
          return "crossing " + format_vec(Vec(lattice->crossing(j).vertices.begin(),
                                              lattice->crossing(j).vertices.end())) +
                 " has letter sums " + format_vec(letter_sums(w, lattice->vectors(j).s));
        });
      t.into(c, "crossings=" + std::to_string(lattice->size()));
    });
  };
  sum_section("reineke-sum", CrossingKind::Reineke, false);
  sum_section("dual-reineke-sum", CrossingKind::DualReineke, true);

  run.section("dual-reineke-sum-literal-control", {{"delta-a-b", [&](Check& c) {
    c.control = true;
    c.instance = "all dual Reineke crossings, delta_{b,a}";
    std::size_t held = 0, total = 0;
    for (const auto& [w, a] : wa) {
      const auto lattice = crossing_lattice(w, a, CrossingKind::DualReineke);
      for (std::size_t j = 0; j < lattice->size(); ++j, ++total)
        if (letter_sums(w, lattice->vectors(j).s) == unit_vec(w.n() - 1, a - 1)) ++held;
    }
    c.detail = "held on " + std::to_string(held) + " of " + std::to_string(total) + " crossings";
    c.passed = held < total;
    if (!c.passed) c.witness = "delta_{b,a} unexpectedly held on every dual crossing";
  }}});

  run.section("transpose-identity", wa.size(), [&](std::size_t i, Check& c) {
    const auto& [w, a] = wa[i];
    c.id = "ft-s-equals-r";
    c.instance = describe_wa(wa[i]);
    const auto lattice = crossing_lattice(w, a, CrossingKind::DualReineke);
    Tally t;
    for (std::size_t j = 0; j < lattice->size(); ++j) {
      const auto& v = lattice->vectors(j);
      t.expect(f_transpose(w, v.s) == v.r, [&] {
        return "F^t s = " + format_vec(f_transpose(w, v.s)) + " but r = " + format_vec(v.r);
      });
    }
    t.into(c, "crossings=" + std::to_string(lattice->size()));
  });

  run.section("transpose-reineke-control", {{"ft-s-on-gamma", [&](Check& c) {
    c.control = true;
    c.instance = "all Reineke crossings";
    std::size_t held = 0, total = 0;
    for (const auto& [w, a] : wa) {
      const auto lattice = crossing_lattice(w, a, CrossingKind::Reineke);
      for (std::size_t j = 0; j < lattice->size(); ++j, ++total)
        if (f_transpose(w, lattice->vectors(j).s) == lattice->vectors(j).r) ++held;
    }
    c.detail = "held on " + std::to_string(held) + " of " + std::to_string(total) + " crossings";
    c.passed = held < total;
    if (!c.passed) c.witness = "F^t s = r unexpectedly held on every Reineke crossing";
  }}});

  run.section("kashiwara-vectors", wa.size(), [&](std::size_t i, Check& c) {
    const auto& [w, a] = wa[i];
    c.id = "s-is-f-row";
    c.instance = describe_wa(wa[i]);
    const auto lattice = crossing_lattice(w, a, CrossingKind::Kashiwara);
    const std::size_t N = w.size();
    Tally t;
    for (std::size_t j = 0; j < lattice->size(); ++j) {
      const std::size_t k = lattice->crossing(j).start - 1;
      Vec row(N);
      for (std::size_t l = 0; l < N; ++l) row[l] = f_linear(w, unit_vec(N, l))[k];
      const auto& v = lattice->vectors(j);
      t.expect(v.s == row && v.r == unit_vec(N, k), [&] {
        return "upsilon(" + std::to_string(k + 1) + ") has s=" + format_vec(v.s) +
               ", F row is " + format_vec(row);
      });
    }
    t.into(c);
  });

  run.section("order-properties", wa.size(), [&](std::size_t i, Check& c) {
    const auto& [w, a] = wa[i];
    c.id = "partial-order";
    c.instance = describe_wa(wa[i]);
    Tally t;
    for (auto kind : {CrossingKind::Reineke, CrossingKind::DualReineke, CrossingKind::Kashiwara}) {
      const auto lat = crossing_lattice(w, a, kind);
      const std::size_t m = lat->size();
      const std::string k(crossing_kind_name(kind));
      for (std::size_t x = 0; x < m; ++x) {
        t.expect(lat->leq(x, x), [&] { return k + " not reflexive"; });
        for (std::size_t y = 0; y < m; ++y) {
          if (x != y)
            t.expect(!(lat->leq(x, y) && lat->leq(y, x)), [&] { return k + " not antisymmetric"; });
          if (kind == CrossingKind::Kashiwara)
            t.expect(lat->leq(x, y) || lat->leq(y, x), [&] { return k + " not total"; });
          for (std::size_t z = 0; z < m; ++z)
            if (lat->leq(x, y) && lat->leq(y, z))
              t.expect(lat->leq(x, z), [&] { return k + " not transitive"; });
        }
      }
    }
    t.into(c);
  });

  run.section("count-symmetry", wa.size(), [&](std::size_t i, Check& c) {
    const auto& [w, a] = wa[i];
    c.id = "star-relabel";
    c.instance = describe_wa(wa[i]);
    const auto ws = star_word(w);
    Tally t;
    for (auto kind : {CrossingKind::Reineke, CrossingKind::DualReineke, CrossingKind::Kashiwara}) {
      const auto n1 = crossing_lattice(w, a, kind)->size();
      const auto n2 = crossing_lattice(ws, w.n() - a, kind)->size();
      t.expect(n1 == n2, [&] {
        return std::string(crossing_kind_name(kind)) + " counts " + std::to_string(n1) + " vs " +
               std::to_string(n2);
      });
    }
    t.into(c);
  });
}

// ---------------------------------------------------------------- transition-coherence

std::vector<Vec> sample_data(std::size_t N, const SuiteParams& p, std::uint64_t salt) {
  std::mt19937_64 rng(p.seed ^ (salt * 0x9E3779B97F4A7C15ULL));
  std::vector<Vec> out;
  for (int s = 0; s < p.samples; ++s) {
    Vec x(N);
    for (auto& v : x) v = static_cast<Int>(rng() % static_cast<std::uint64_t>(p.sample_max_entry + 1));
    out.push_back(std::move(x));
  }
  for (std::size_t k = 0; k < N; ++k) out.push_back(unit_vec(N, k));
  return out;
}

// Transports every datum along a BFS tree of the braid graph, then checks that
// each braid edge carries the tree value at one end to the tree value at the
// other. Every cycle of the graph is then consistent.
void path_independence(int n, const std::vector<Vec>& data, Tally& t) {
  const auto root = standard_word(n);
  std::map<std::vector<Letter>, std::size_t> index;
  std::vector<ReducedWord> words;
  std::vector<std::vector<Vec>> value;
  std::deque<std::size_t> queue;
  auto key = [](const ReducedWord& w) {
    return std::vector<Letter>(w.letters().begin(), w.letters().end());
  };
  index.emplace(key(root), 0);
  words.push_back(root);
  value.push_back(data);
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (const auto& [move, next] : braid_neighbors(words[u])) {
      if (index.count(key(next))) continue;
      std::vector<Vec> moved;
      for (const auto& x : value[u]) moved.push_back(apply_braid_move(words[u], move, x).second);
      index.emplace(key(next), words.size());
      queue.push_back(words.size());
      words.push_back(next);
      value.push_back(std::move(moved));
    }
  }
  for (std::size_t u = 0; u < words.size(); ++u) {
    for (const auto& [move, next] : braid_neighbors(words[u])) {
      const std::size_t v = index.at(key(next));
      for (std::size_t d = 0; d < data.size(); ++d) {
        const Vec moved = apply_braid_move(words[u], move, value[u][d]).second;
        t.expect(moved == value[v][d], [&] {
          return "edge " + format_word(words[u]) + " --" + format_move(move) + "--> " +
                 format_word(next) + " on datum " + format_vec(data[d]);
        });
      }
    }
    for (std::size_t d = 0; d < data.size(); ++d) {
      t.expect(phi_transition(root, words[u], data[d]) == value[u][d], [&] {
        return "phi_transition to " + format_word(words[u]) + " differs on " + format_vec(data[d]);
      });
      t.expect(weight_of(Family::L, words[u], value[u][d]) == weight_of(Family::L, root, data[d]),
               [&] { return "weight changed at " + format_word(words[u]); });
    }
  }
}

void suite_transition_coherence(Runner& run, const SuiteParams& p) {
  std::vector<int> ranks;
  for (int n = 3; n <= p.max_n; ++n) ranks.push_back(n);
  run.section("phi-path-independence", ranks.size(), [&](std::size_t i, Check& c) {
    const int n = ranks[i];
    c.id = "all-cycles";
    c.instance = "n=" + std::to_string(n) + " samples=" + std::to_string(p.samples) +
                 " max_entry=" + std::to_string(p.sample_max_entry) +
                 " seed=" + std::to_string(p.seed);
    Tally t;
    path_independence(n, sample_data(n * (n - 1) / 2, p, n), t);
    t.into(c, "words=" + std::to_string(all_reduced_words(n).size()));
  });
  if (p.max_n < 5) {
    run.section("phi-path-independence-n5", {{"sampled", [&](Check& c) {
      SuiteParams q = p;
      q.samples = 20;
      c.instance = "n=5 samples=20 seed=" + std::to_string(p.seed);
      Tally t;
      path_independence(5, sample_data(10, q, 5), t);
      t.into(c, "words=" + std::to_string(all_reduced_words(5).size()));
    }}});
  }

  const auto words = words_between(3, p.max_n);
  run.section("phi-star-opposite", words.size(), [&](std::size_t i, Check& c) {
    const auto& w = words[i];
    c.id = "star-is-opp";
    c.instance = describe(w) + " height=3";
    const auto wo = opposite_word(w);
    Tally t;
    for (const auto& x : enumerate_binfty(w, 3)) {
      const Vec got = phi_transition(w, wo, star_involution(w, x));
      t.expect(got == opp(x), [&] { return "at " + format_vec(x) + " got " + format_vec(got); });
    }
    t.into(c, "opposite=" + format_word(wo));
  });

  run.section("oracle-axioms", words.size(), [&](std::size_t i, Check& c) {
    const auto& w = words[i];
    c.id = "raise-lower";
    c.instance = describe(w) + " height=3";
    Tally t;
    for (const auto& x : enumerate_binfty(w, 3)) {
      for (Letter a = 1; a < w.n(); ++a) {
        for (bool starred : {false, true}) {
          const std::string where = " at " + format_vec(x) + " a=" + std::to_string(a) +
                                    (starred ? " starred" : "");
          const Int eps = oracle_epsilon(w, x, a, starred);
          const Vec y = *oracle_step(w, x, a, starred, StepDirection::Lower);
          t.expect(oracle_step(w, y, a, starred, StepDirection::Raise) == x,
                   [&] { return "raise after lower" + where; });
          t.expect(oracle_epsilon(w, y, a, starred) == eps + 1,
                   [&] { return "epsilon after lower" + where; });
          const auto up = oracle_step(w, x, a, starred, StepDirection::Raise);
          t.expect(up.has_value() == (eps > 0), [&] { return "raise defined iff epsilon > 0" + where; });
          if (up)
            t.expect(oracle_epsilon(w, *up, a, starred) == eps - 1,
                     [&] { return "epsilon after raise" + where; });
        }
      }
    }
    t.into(c);
  });

  run.section("string-roundtrip", words.size(), [&](std::size_t i, Check& c) {
    const auto& w = words[i];
    c.id = "inverse";
    c.instance = describe(w) + " height=" + std::to_string(p.height);
    Tally t;
    for (const auto& x : enumerate_binfty(w, p.height)) {
      const Vec s = string_datum(w, x);
      t.expect(string_inverse(w, s) == x, [&] { return "round trip fails at " + format_vec(x); });
    }
    t.into(c);
  });

  const auto wl = word_lambdas(3, p.max_n, p.max_lambda_sum);
  run.section("psi-string", wl.size(), [&](std::size_t i, Check& c) {
    const auto& [w, l] = wl[i];
    c.id = "psi-of-str";
    c.instance = describe(w, l);
    const auto targets = all_reduced_words(w.n());
    Tally t;
    for (const auto& x : lattice_points(Family::L, w, l)) {
      const Vec s = string_datum(w, x);
      for (const auto& j : targets) {
        const Vec psi = psi_transition(w, j, s);
        const Vec direct = string_datum(j, phi_transition(w, j, x));
        // Stepwise along the braid path, one move at a time.
        Vec stepwise = s;
        ReducedWord cur = w;
        for (const auto& m : path_between(w, j)) {
          const auto next = apply_moves(cur, std::span<const BraidMove>(&m, 1));
          stepwise = psi_transition(cur, next, stepwise);
          cur = next;
        }
        t.expect(psi == direct && stepwise == direct, [&] {
          return "to " + format_word(j) + " at " + format_vec(x) + ": psi " + format_vec(psi) +
                 " stepwise " + format_vec(stepwise) + " str " + format_vec(direct);
        });
      }
    }
    t.into(c);
  });

  run.section("g-phi-psi", wl.size(), [&](std::size_t i, Check& c) {
    const auto& [w, l] = wl[i];
    c.id = "commutation";
    c.instance = describe(w, l);
    const auto targets = all_reduced_words(w.n());
    Tally t;
    for (const auto& s : lattice_points(Family::Sstar, w, l)) {
      const Vec lhs = g_affine(w, l, s);
      for (const auto& j : targets) {
        const Vec rhs = phi_transition(j, w, g_affine(j, l, psi_transition(w, j, s)));
        t.expect(lhs == rhs, [&] {
          return "via " + format_word(j) + " at " + format_vec(s) + ": " + format_vec(lhs) +
                 " vs " + format_vec(rhs);
        });
      }
    }
    t.into(c);
  });
}

}  // namespace

IsoResult check_graph_iso(const CrystalGraph& g1, const CrystalGraph& g2, bool anti,
                          WeightMap weights) {
  IsoResult res;
  if (g1.word().n() != g2.word().n()) {
    res.witness = "graphs of different rank";
    return res;
  }
  if (g1.size() != g2.size()) {
    res.witness = "sizes " + std::to_string(g1.size()) + " and " + std::to_string(g2.size());
    return res;
  }
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> match(g1.size(), kNone);
  std::vector<std::size_t> back(g2.size(), kNone);
  const std::size_t r1 = g1.highest();
  const std::size_t r2 = anti ? g2.lowest() : g2.highest();
  match[r1] = r2;
  back[r2] = r1;
  std::deque<std::size_t> queue{r1};
  auto weight_ok = [&](const Vec& w1, const Vec& w2) {
    switch (weights) {
      case WeightMap::Same: return w1 == w2;
      case WeightMap::Negated: return negated(w1) == w2;
      case WeightMap::Starred: return reversed(w1) == w2;
    }
    return false;
  };
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    const std::size_t v = match[u];
    const auto& x1 = g1.nodes()[u].x;
    const auto& x2 = g2.nodes()[v].x;
    if (!weight_ok(g1.nodes()[u].wt, g2.nodes()[v].wt)) {
      res.witness = "weights of " + format_vec(x1) + " and " + format_vec(x2) + " do not match";
      return res;
    }
    for (Letter a = 1; a < g1.word().n(); ++a) {
      for (bool down : {true, false}) {
        const auto c1 = down ? g1.f(u, a) : g1.e(u, a);
        const auto c2 = (down != anti) ? g2.f(v, a) : g2.e(v, a);
        if (c1.has_value() != c2.has_value()) {
          res.witness = "letter " + std::to_string(a) + " edge at " + format_vec(x1) + " vs " +
                        format_vec(x2);
          return res;
        }
        if (!c1) continue;
        if (match[*c1] == kNone && back[*c2] == kNone) {
          match[*c1] = *c2;
          back[*c2] = *c1;
          queue.push_back(*c1);
        } else if (match[*c1] != *c2) {
          res.witness = "inconsistent pairing at " + format_vec(g1.nodes()[*c1].x);
          return res;
        }
      }
    }
  }
  for (std::size_t u = 0; u < g1.size(); ++u)
    if (match[u] == kNone) {
      res.witness = "node " + format_vec(g1.nodes()[u].x) + " unreachable";
      return res;
    }
  res.iso = true;
  res.matching = std::move(match);
  return res;
}

bool SuiteReport::passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

bool SuiteReport::section_passed(std::string_view section) const {
  return section_checks(section) > 0 &&
         std::none_of(checks.begin(), checks.end(),
                      [&](const Check& c) { return c.section == section && !c.passed; });
}

std::size_t SuiteReport::section_checks(std::string_view section) const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [&](const Check& c) { return c.section == section; }));
}

double SuiteReport::section_seconds(std::string_view section) const {
  double total = 0;
  for (const auto& t : timings)
    if (t.section == section) total += t.seconds;
  return total;
}

std::string SuiteReport::text(bool with_timing) const {
  std::ostringstream out;
  out << "suite " << suite << ": " << (passed() ? "PASS" : "FAIL") << " (" << checks.size()
      << " checks, " << failures() << " failed)\n";
  out << "params: max_n=" << params.max_n << " max_lambda_sum=" << params.max_lambda_sum
      << " height=" << params.height << " samples=" << params.samples
      << " seed=" << params.seed << "\n";
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.section << "/" << c.id
        << (c.control ? " [control]" : "") << " " << c.instance;
    if (!c.detail.empty()) out << " :: " << c.detail;
    out << "\n";
    if (!c.witness.empty()) out << "     witness: " << c.witness << "\n";
  }
  if (with_timing) {
    for (const auto& t : timings) out << "time " << t.section << " " << t.seconds << "s\n";
    out << "elapsed " << elapsed_seconds << "s\n";
  }
  return out.str();
}

std::string SuiteReport::json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["params"] = {{"max_n", params.max_n},
                 {"max_lambda_sum", params.max_lambda_sum},
                 {"height", params.height},
                 {"samples", params.samples},
                 {"sample_max_entry", params.sample_max_entry},
                 {"seed", params.seed}};
  j["passed"] = passed();
  j["failures"] = failures();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json cj;
    cj["section"] = c.section;
    cj["id"] = c.id;
    cj["instance"] = c.instance;
    cj["passed"] = c.passed;
    cj["control"] = c.control;
    cj["detail"] = c.detail;
    if (!c.witness.empty()) cj["witness"] = c.witness;
    j["checks"].push_back(std::move(cj));
  }
  if (with_timing) {
    for (const auto& t : timings) j["timings"][t.section] = t.seconds;
    j["elapsed_seconds"] = elapsed_seconds;
  }
  return j.dump(2) + "\n";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "paper-example",   "crystal-oracle",       "polytope-points",   "cone-membership",
      "unimodular",      "inequality-bijection", "vector-identities", "transition-coherence"};
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteParams& params) {
  if (params.max_n < 3) fail(ErrorCode::InvalidArgument, "max_n must be at least 3");
  if (params.max_lambda_sum < 0 || params.height < 0 || params.samples < 0 ||
      params.sample_max_entry < 0)
    fail(ErrorCode::InvalidArgument, "suite parameters must be nonnegative");
  using SuiteFn = void (*)(Runner&, const SuiteParams&);
  static const std::map<std::string, SuiteFn, std::less<>> table = {
      {"paper-example", suite_paper_example},
      {"crystal-oracle", suite_crystal_oracle},
      {"polytope-points", suite_polytope_points},
      {"cone-membership", suite_cone_membership},
      {"unimodular", suite_unimodular},
      {"inequality-bijection", suite_inequality_bijection},
      {"vector-identities", suite_vector_identities},
      {"transition-coherence", suite_transition_coherence},
  };
  const auto it = table.find(name);
  if (it == table.end()) fail(ErrorCode::UnknownSuite, "unknown suite '" + std::string(name) + "'");
  Runner runner(std::string(name), params);
  it->second(runner, params);
  return runner.finish();
}

int resolve_threads(int requested) {
  int threads = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (const char* cap = std::getenv("CRYSTAL_KIT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(cap, &end, 10);
    if (end != cap && *end == '\0' && v >= 1) threads = std::min<long>(threads, v);
  }
  return threads;
}

ReducedWord example_word() { return validate_reduced_word(5, {2, 1, 2, 3, 4, 3, 2, 1, 3, 2}); }

}  // namespace crystalkit
