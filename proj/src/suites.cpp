// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <chrono>
#include <string>
#include <utility>

#include "mhom/catalog.hpp"
#include "mhom/error.hpp"
#include "mhom/maps.hpp"
#include "structure_internal.hpp"

namespace mhom {

void SuiteReport::merge(const SuiteReport& other) {
  checks_run += other.checks_run;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  for (const auto& [name, s] : other.stats) {
    CheckStats& mine = stats[name];
    mine.run += s.run;
    mine.failed += s.failed;
    mine.skipped += s.skipped;
  }
  for (const auto& [key, value] : other.notes) {
    auto [it, inserted] = notes.emplace(key, value);
    if (!inserted && it->second != value) it->second += "; " + value;
  }
  timing += other.timing;
  canonicalize();
}

void SuiteReport::canonicalize() {
  std::stable_sort(failures.begin(), failures.end(), [](const Witness& a, const Witness& b) {
    return a.format() < b.format();
  });
}

std::string SuiteReport::summary() const {
  std::string out = "suite " + suite + ": " + (passed() ? "PASS" : "FAIL") +
                    " checks_run=" + std::to_string(checks_run) +
                    " failures=" + std::to_string(failures.size()) + "\n";
  out += "  parameters: " + parameters + "\n";
  for (const auto& [name, s] : stats) {
    out += "  " + name + ": run=" + std::to_string(s.run) + " failed=" + std::to_string(s.failed) +
           " skipped=" + std::to_string(s.skipped) + "\n";
  }
  for (const auto& [key, value] : notes) out += "  note " + key + ": " + value + "\n";
  for (const auto& w : failures) out += "  failure: " + w.format() + "\n";
  return out;
}

namespace {

class Recorder {
 public:
  explicit Recorder(SuiteReport& report) : report_(report) {}

  void record(const std::string& check, Witness w) {
    CheckStats& s = report_.stats[check];
    ++s.run;
    ++report_.checks_run;
    if (!w.passed) {
      ++s.failed;
      report_.failures.push_back(std::move(w));
    }
  }
  void fail(const std::string& check, CheckKind kind, const Matroid& m, std::string detail,
            std::optional<Matroid> target = std::nullopt) {
    Witness w;
    w.kind = kind;
    w.passed = false;
    w.matroid = m;
    w.target = std::move(target);
    w.detail = std::move(detail);
    record(check, std::move(w));
  }
  void pass(const std::string& check) {
    ++report_.stats[check].run;
    ++report_.checks_run;
  }
  void skip(const std::string& check, std::size_t count = 1) { report_.stats[check].skipped += count; }

 private:
  SuiteReport& report_;
};

std::string histogram(const std::map<std::size_t, std::size_t>& counts) {
  std::string out;
  for (const auto& [value, count] : counts) {
    if (!out.empty()) out += ' ';
    out += std::to_string(value) + ":" + std::to_string(count);
  }
  return out.empty() ? "none" : out;
}

void run_fact1(Recorder& rec) {
  constexpr std::size_t kMaxSize = 4;
  for (std::size_t s = 1; s <= kMaxSize; ++s) {
    const GroundSet source = GroundSet::indexed(s, "s");
    for (std::size_t t = 1; t <= kMaxSize; ++t) {
      const GroundSet target = GroundSet::indexed(t, "t");
      std::vector<Element> assignment(s, 0);
      while (true) {
        const GroundMap f(source, target, assignment);
        bool ok = true;
        ElementSet bad_a;
        ElementSet bad_b;
        for_each_subset(source.all(), [&](ElementSet a) {
          for_each_subset(source.all(), [&](ElementSet b) {
            const ElementSet fa = image_of_set(f, a);
            const ElementSet fb = image_of_set(f, b);
            const bool holds = image_of_set(f, a | b) == (fa | fb) &&
                               (fa - fb).is_subset_of(image_of_set(f, a - b)) &&
                               (fa ^ fb).is_subset_of(image_of_set(f, a ^ b));
            if (!holds && ok) {
              ok = false;
              bad_a = a;
              bad_b = b;
            }
          });
        });
        if (ok) {
          rec.pass("fact1");
        } else {
          Witness w;
          w.kind = CheckKind::Fact1;
          w.sets = {{"A", bad_a}, {"B", bad_b}};
          w.detail = "s=" + std::to_string(s) + " t=" + std::to_string(t);
          rec.record("fact1", std::move(w));
        }
        std::size_t p = s;
        while (p > 0 && assignment[p - 1] == t - 1) assignment[--p] = 0;
        if (p == 0) break;
        ++assignment[p - 1];
      }
    }
  }
}

struct SubsetTables {
  std::vector<std::uint8_t> corank;
  std::vector<std::uint8_t> connected;
};

SubsetTables subset_tables(const Matroid& m) {
  const std::vector<std::uint8_t> ranks = rank_profile(m);
  SubsetTables t;
  t.corank.resize(ranks.size());
  t.connected.resize(ranks.size());
  for (std::size_t mask = 0; mask < ranks.size(); ++mask) {
    const ElementSet s(mask);
    t.corank[mask] = static_cast<std::uint8_t>(s.size() - ranks[mask]);
    t.connected[mask] = is_connected(m, s);
  }
  return t;
}

void run_facts_on(const Matroid& m, Recorder& rec, std::map<std::size_t, std::size_t>& fact5_k,
                  std::size_t& fact7_nonstrict_run, std::size_t& fact7_nonstrict_failed) {
  const SubsetTables t = subset_tables(m);
  const std::size_t full = m.elements().bits();
  const bool connected = t.connected[full];
  const std::size_t cr = t.corank[full];
  auto crk = [&](ElementSet s, std::size_t k) {
    return t.connected[s.bits()] && t.corank[s.bits()] == k;
  };
  const auto circuits = m.circuits();

  // Fact 2.
  if (connected && m.size() >= 2) {
    for_each_subset(m.elements(), [&](ElementSet a) {
      if (a.empty() || !t.connected[a.bits()] || t.corank[a.bits()] == 0) return;
      for (Element x : m.elements() - a) {
        rec.record("fact2", detail::fact2_unchecked(m, a, x, t.corank[a.bits()]));
      }
    });
  } else {
    rec.skip("fact2");
  }

  // Facts 3 and 5.
  if (connected && cr == 2) {
    for (std::size_t i = 0; i < circuits.size(); ++i) {
      for (std::size_t j = i + 1; j < circuits.size(); ++j) {
        try {
          const ElementSet c = covering_circuit_cr2(m, circuits[i], circuits[j]);
          Witness w;
          w.kind = CheckKind::Fact3;
          w.passed = (circuits[i] ^ circuits[j]).is_subset_of(c) && m.is_circuit(c);
          w.matroid = m;
          w.sets = {{"A", circuits[i]}, {"B", circuits[j]}, {"C", c}};
          rec.record("fact3", std::move(w));
        } catch (const MatroidError& e) {
          Witness w;
          w.kind = CheckKind::Fact3;
          w.matroid = m;
          w.sets = {{"A", circuits[i]}, {"B", circuits[j]}};
          w.detail = e.what();
          rec.record("fact3", std::move(w));
        }
      }
    }
    try {
      const Cr2Structure s = cr2_structure(m);
      ++fact5_k[s.k];
      rec.pass("fact5");
    } catch (const MatroidError& e) {
      rec.fail("fact5", CheckKind::Fact5, m, e.what());
    }
  } else {
    rec.skip("fact3");
    rec.skip("fact5");
  }

  // Fact 4.
  const std::size_t count = std::size_t{1} << m.size();
  for (std::size_t e1 = 1; e1 < count; ++e1) {
    if (!crk(ElementSet(e1), 2)) continue;
    for (std::size_t e2 = e1 + 1; e2 < count; ++e2) {
      if (!crk(ElementSet(e2), 2) || !crk(ElementSet(e1 | e2), 3)) continue;
      rec.record("fact4", detail::fact4_unchecked(m, ElementSet(e1), ElementSet(e2)));
    }
  }

  // Facts 6 and 7.
  if (connected && cr == 3) {
    for (ElementSet a : circuits) {
      for (ElementSet b : circuits) {
        if (a.intersects(b)) continue;
        for (ElementSet c : circuits) {
          if (b == c) continue;
          rec.record("fact6", detail::fact6_unchecked(m, a, b, c));
        }
      }
    }
    for (std::size_t i = 0; i < circuits.size(); ++i) {
      for (std::size_t j = i + 1; j < circuits.size(); ++j) {
        const ElementSet a = circuits[i];
        const ElementSet b = circuits[j];
        if (!a.intersects(b)) continue;
        Witness w = detail::fact7_unchecked(m, a, b);
        if ((a | b) != m.elements()) {
          rec.record("fact7", std::move(w));
        } else {
          ++fact7_nonstrict_run;
          if (!w.passed) ++fact7_nonstrict_failed;
        }
      }
    }
  } else {
    rec.skip("fact6");
    rec.skip("fact7");
  }
}

}  // namespace

SuiteReport verify_facts_suite(const CatalogSpec& spec) {
  check_spec(spec);
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = "facts";
  report.parameters = spec.describe();
  Recorder rec(report);

  run_fact1(rec);

  std::map<std::size_t, std::size_t> fact5_k;
  std::size_t nonstrict_run = 0;
  std::size_t nonstrict_failed = 0;
  std::size_t matroids = 0;
  for_each_matroid(spec, [&](const Matroid& m) {
    ++matroids;
    run_facts_on(m, rec, fact5_k, nonstrict_run, nonstrict_failed);
    return true;
  });
  report.notes["matroids"] = std::to_string(matroids);
  report.notes["fact5.k"] = histogram(fact5_k);
  report.notes["fact7.non_strict"] = "instances=" + std::to_string(nonstrict_run) +
                                     " failing=" + std::to_string(nonstrict_failed);
  report.timing = std::chrono::steady_clock::now() - start;
  report.canonicalize();
  return report;
}

std::vector<Matroid> theorem_sources(const TheoremSuiteOptions& options) {
  CatalogSpec sources = options.sources;
  sources.connected_only = true;
  std::vector<Matroid> out = enumerate_matroids(sources);
  if (options.subdivision_base_max > 0) {
    CatalogSpec base;
    base.max_ground_size = options.subdivision_base_max;
    base.connected_only = true;
    for (const Matroid& h : enumerate_matroids(base)) {
      const bool already_listed = sources.accepts(h) && h.size() >= sources.min_ground_size &&
                                  h.size() <= sources.max_ground_size;
      bool first = true;
      for (Matroid& s : all_subdivisions(h, options.max_fiber)) {
        // The first subdivision is h itself.
        if (!(first && already_listed)) out.push_back(std::move(s));
        first = false;
      }
    }
  }
  return out;
}

SuiteReport verify_theorems_suite(const TheoremSuiteOptions& options) {
  check_spec(options.sources);
  check_spec(options.targets);
  if (options.subdivision_base_max > kMaxEnumeratedGround) {
    throw MatroidError(ErrorKind::SpecTooLarge, "subdivision base size is limited to " +
                                                    std::to_string(kMaxEnumeratedGround));
  }
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = "theorems";
  report.parameters = "sources " + options.sources.describe() +
                      (options.sources.connected_only ? "" : " connected") +
                      (options.subdivision_base_max > 0
                           ? " + subdivisions(fiber<=" + std::to_string(options.max_fiber) +
                                 ") of connected n<=" + std::to_string(options.subdivision_base_max)
                           : std::string{}) +
                      "; targets " + options.targets.describe();
  Recorder rec(report);

  const std::vector<Matroid> sources = theorem_sources(options);
  std::vector<Matroid> targets;
  std::size_t non_binary_targets = 0;
  for (const Matroid& n : enumerate_matroids(options.targets)) {
    if (is_binary(n)) {
      targets.push_back(n);
    } else {
      ++non_binary_targets;
    }
  }

  std::size_t homomorphisms = 0;
  std::size_t qualifying = 0;
  std::size_t vacuous_sources = 0;
  std::size_t non_binary_sources = 0;
  std::map<std::size_t, std::size_t> lemma_classes;
  std::map<std::string, std::size_t> outcomes;

  for (const Matroid& m : sources) {
    const auto non_binary = non_binary_pair(m);
    if (non_binary) ++non_binary_sources;
    std::size_t qualifying_here = 0;
    for (const Matroid& n : targets) {
      if (n.size() > m.size()) continue;
      const bool single = is_single_circuit(n);
      for_each_homomorphism(m, n, [&](const GroundMap& f) {
        ++homomorphisms;
        const Theorem1Result t1 = detail::theorem1_unchecked(f, m, n);
        ++outcomes[std::string(outcome_name(t1.outcome))];
        if (t1.outcome == Theorem1Outcome::Counterexample) {
          Witness w;
          w.kind = CheckKind::Theorem1;
          w.matroid = m;
          w.target = n;
          w.sets = {{"x1", ElementSet::singleton(t1.non_series_pair->first)},
                    {"x2", ElementSet::singleton(t1.non_series_pair->second)}};
          if (t1.separating_circuit) w.sets.push_back({"C", *t1.separating_circuit});
          w.detail = "fiber not in series and target not a single circuit";
          rec.record("theorem1", std::move(w));
        } else {
          rec.pass("theorem1");
        }

        if (options.lemma1) {
          for (ElementSet fiber : f.fibers()) {
            if (fiber.size() < 2) continue;
            for (Element x1 : fiber) {
              for (Element x2 : fiber) {
                if (x1 == x2) continue;
                for (ElementSet a : m.circuits()) {
                  if (!a.contains(x1) || a.contains(x2)) continue;
                  try {
                    Witness w = detail::lemma1_unchecked(f, m, n, x1, x2, a);
                    const ElementSet ab = w.set("A") | w.set("B");
                    if (is_crk(m, ab, 2)) ++lemma_classes[series_partition(restrict(m, ab)).classes.size()];
                    rec.record("lemma1", std::move(w));
                  } catch (const MatroidError& e) {
                    rec.fail("lemma1", CheckKind::Lemma1, m, e.what(), n);
                  }
                }
              }
            }
          }
        }

        if (single) return true;
        ++qualifying;
        ++qualifying_here;
        try {
          detail::decompose_unchecked(f, m, n);
          rec.pass("theorem3");
        } catch (const MatroidError& e) {
          rec.fail("theorem3", CheckKind::Theorem3, m, e.what(), n);
        }
        if (non_binary) {
          Witness w;
          w.kind = CheckKind::Theorem4;
          w.matroid = m;
          w.target = n;
          w.sets = {{"A", non_binary->first}, {"B", non_binary->second}};
          w.detail = "source is not binary";
          rec.record("theorem4", std::move(w));
        } else {
          rec.pass("theorem4");
        }
        return true;
      });
    }
    if (qualifying_here == 0) ++vacuous_sources;
  }

  report.notes["sources"] = std::to_string(sources.size()) + " (non-binary " +
                            std::to_string(non_binary_sources) + ")";
  report.notes["targets"] = std::to_string(targets.size()) + " binary (skipped non-binary " +
                            std::to_string(non_binary_targets) + ")";
  report.notes["homomorphisms"] = std::to_string(homomorphisms);
  report.notes["qualifying_homomorphisms"] = std::to_string(qualifying);
  report.notes["vacuous_sources"] = std::to_string(vacuous_sources);
  std::string outcome_text;
  for (const auto& [name, count] : outcomes) {
    outcome_text += (outcome_text.empty() ? "" : " ") + name + ":" + std::to_string(count);
  }
  report.notes["theorem1.outcomes"] = outcome_text.empty() ? "none" : outcome_text;
  if (options.lemma1) report.notes["lemma1.AuB_series_classes"] = histogram(lemma_classes);
  report.timing = std::chrono::steady_clock::now() - start;
  report.canonicalize();
  return report;
}

}  // namespace mhom
