// Copyright 2026 The biprod Authors.
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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// criteria pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "biprod/biproduct.hpp"
#include "biprod/cli.hpp"
#include "biprod/dsl.hpp"
#include "biprod/fincat.hpp"
#include "biprod/gallery.hpp"
#include "biprod/oracle.hpp"

using namespace biprod;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

// Records the first failure; later failures only bump the count.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary + " (" + std::to_string(checks_) + " checks)"};
    return {false, std::to_string(failures_) + "/" + std::to_string(checks_) +
                       " checks failed; first: " + first_};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

std::string pair_name(const FinCat& cat, ObjId a, ObjId b) {
  return "(" + cat.name(a) + ", " + cat.name(b) + ")";
}

const std::vector<gallery::GalleryEntry>& suite() {
  static const std::vector<gallery::GalleryEntry> entries = gallery::standard_gallery();
  return entries;
}

const std::vector<FinCat>& random_suite() {
  static const std::vector<FinCat> cats = [] {
    std::vector<FinCat> out;
    gallery::RandomBounds bounds;
    bounds.max_morphisms = 12;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      out.push_back(gallery::build_random_category(seed, bounds));
    }
    return out;
  }();
  return cats;
}

const gallery::GalleryEntry& entry(const std::string& name) {
  for (const auto& e : suite()) {
    if (e.name == name) return e;
  }
  throw std::runtime_error("no gallery entry " + name);
}

template <class F>
void each_pair(const FinCat& cat, F&& f) {
  for (ObjId a : cat.objects()) {
    for (ObjId b : cat.objects()) f(a, b);
  }
}

// ------------------------------------------------------------------ criteria

Outcome finset_soundness() {
  Tally t;
  const FinCat cat = gallery::build_finset_skeleton(2);
  // Independent count: Σ n^m over m, n in {0, 1, 2}.
  std::size_t expected_morphisms = 0;
  for (std::size_t m = 0; m <= 2; ++m) {
    for (std::size_t n = 0; n <= 2; ++n) {
      std::size_t k = 1;
      for (std::size_t i = 0; i < m; ++i) k *= n;
      expected_morphisms += k;
    }
  }
  t.expect(expected_morphisms == 11, "sum of n^m is 11");
  t.expect(cat.morphism_count() == expected_morphisms, "FinSet skeleton has 11 morphisms");
  each_pair(cat, [&](ObjId a, ObjId b) {
    const bool empty_pair = cat.name(a) == "0" && cat.name(b) == "0";
    t.expect(find_biproducts(cat, a, b).empty() != empty_pair,
             "library search on " + pair_name(cat, a, b));
  });

  // The same claim through the command line.
  const auto dir = std::filesystem::temp_directory_path() / "biprod_acceptance";
  std::filesystem::create_directories(dir);
  const std::string file = (dir / "finset2.cat").string();
  std::ostringstream out, err;
  t.expect(cli::run({"gallery", "finset", "--max-size", "2", "--emit", file}, out, err) == 0,
           "gallery finset exits 0");
  std::ostringstream jout, jerr;
  const int code = cli::run({"biproducts", file, "--all-pairs", "--json"}, jout, jerr);
  t.expect(code == 0, "biproducts --all-pairs exits 0");
  std::set<std::string> reported;
  try {
    const auto j = nlohmann::json::parse(jout.str());
    for (const auto& c : j.at("certificates")) reported.insert(c.at("subject").get<std::string>());
  } catch (const std::exception& e) {
    t.expect(false, std::string("report parses: ") + e.what());
  }
  t.expect(reported == std::set<std::string>{"(0, 0)"}, "CLI reports only (0, 0)");
  return t.outcome("nonempty exactly for (0, 0)");
}

Outcome lemma_suite() {
  Tally t;
  std::size_t witnesses = 0;
  auto run = [&](const FinCat& cat, const std::string& label) {
    each_pair(cat, [&](ObjId a, ObjId b) {
      for (const auto& w : find_biproducts(cat, a, b)) {
        ++witnesses;
        t.expect(verify_lemma_zero(cat, w, a, b).pass, label + " " + pair_name(cat, a, b));
      }
    });
  };
  for (const auto& cat : random_suite()) {
    t.expect(cat.morphism_count() <= 12, "random category within 12 morphisms");
    run(cat, "random");
  }
  for (const auto& e : suite()) run(e.category, e.name);
  return t.outcome(std::to_string(witnesses) + " witnesses over 1000 random + " +
                   std::to_string(suite().size()) + " gallery categories");
}

Outcome corollary_suite() {
  Tally t;
  const std::set<std::string> non_vacuous{"indiscrete-2", "indiscrete-3", "ab-trivial",
                                          "ab-trivial-2"};
  std::size_t seen = 0;
  for (const auto& e : suite()) {
    const Verdict v = verify_corollary_zeros(e.category);
    t.expect(v.pass, e.name + ": " + v.detail);
    if (non_vacuous.count(e.name)) {
      ++seen;
      t.expect(!v.vacuous, e.name + " is non-vacuous");
      t.expect(e.closed_under_biproducts, e.name + " is flagged closed");
    }
    if (e.closed_under_biproducts) t.expect(!v.vacuous, e.name + " closed implies non-vacuous");
  }
  t.expect(seen == non_vacuous.size(), "all non-vacuous controls present");
  return t.outcome("all gallery categories, 4 non-vacuous");
}

Outcome equivalence_suite() {
  Tally t;
  std::size_t checked = 0, pruned = 0, categories = 0;
  for (const auto& e : suite()) {
    if (!find_zero_structure(e.category).structure) continue;
    ++categories;
    const CMonStructure* cm = e.cmon ? &*e.cmon : nullptr;
    const auto s = definitions_agree_all_pairs(e.category, cm);
    checked += s.witnesses_checked;
    pruned += s.witnesses_pruned;
    t.expect(s.verdict.pass, e.name + ": " + s.verdict.detail);
    std::size_t total = 0;
    each_pair(e.category,
              [&](ObjId a, ObjId b) { total += count_well_typed_witnesses(e.category, a, b); });
    t.expect(s.witnesses_checked + s.witnesses_pruned == total,
             e.name + " sweep covers every well-typed witness");
  }
  // The full sweep without pruning on the smaller categories.
  for (const char* name : {"pointed-3", "ab-small", "ab-coprime", "indiscrete-3"}) {
    const auto& e = entry(name);
    const CMonStructure* cm = e.cmon ? &*e.cmon : nullptr;
    const auto s = definitions_agree_all_pairs(e.category, cm, Sweep::exhaustive);
    t.expect(s.verdict.pass && s.witnesses_pruned == 0, std::string(name) + " exhaustive");
  }
  return t.outcome(std::to_string(categories) + " categories with zeros, " +
                   std::to_string(checked) + " witnesses evaluated, " + std::to_string(pruned) +
                   " failing a retraction");
}

Outcome uniqueness_suite() {
  Tally t;
  std::size_t compared = 0;
  for (const auto& e : suite()) {
    each_pair(e.category, [&](ObjId a, ObjId b) {
      const auto ws = find_biproducts(e.category, a, b);
      for (std::size_t i = 0; i < ws.size(); ++i) {
        for (std::size_t j = 0; j < ws.size(); ++j) {
          if (i == j) continue;
          ++compared;
          const Verdict v = verify_uniqueness(e.category, ws[i], ws[j], a, b);
          t.expect(v.pass, e.name + " " + pair_name(e.category, a, b) + ": " + v.detail);
        }
      }
    });
  }
  return t.outcome(std::to_string(compared) + " ordered witness pairs");
}

Outcome preorder_iff() {
  Tally t;
  const std::vector<std::string> names{"terminal", "walking-arrow", "discrete-2", "chain-3",
                                       "diamond",  "indiscrete-2",  "indiscrete-3",
                                       "preorder-mixed"};
  for (const auto& n : names) {
    const FinCat& cat = entry(n).category;
    each_pair(cat, [&](ObjId a, ObjId b) {
      const bool iso = !cat.hom(a, b).empty() && !cat.hom(b, a).empty();
      const bool found = !find_biproducts(cat, a, b).empty();
      t.expect(found == iso, n + " " + pair_name(cat, a, b));
    });
  }
  return t.outcome(std::to_string(names.size()) + " preorders, both directions");
}

Outcome semigroup_iff() {
  Tally t;
  const auto z2 = gallery::cyclic_group_semigroup(2);
  const auto l3 = gallery::flat_semilattice(2);
  const auto z2z2 = gallery::direct_product(z2, z2);
  const std::vector<gallery::InverseSemigroupSpec> specs{z2, l3, z2z2};
  for (const auto& s : specs) {
    bool ok = true;
    try {
      gallery::validate(s);
    } catch (const std::exception&) {
      ok = false;
    }
    t.expect(ok, s.name + " is a commutative inverse semigroup");
  }
  t.expect(!gallery::neutral_element(l3).has_value(), "semilattice has no neutral element");
  const FinCat cat = gallery::build_inverse_semigroup_category(specs);
  t.expect(validate_category(cat).pass, "semigroup fragment validates");
  std::size_t positive = 0;
  each_pair(cat, [&](ObjId a, ObjId b) {
    const auto& s = specs[a.index];
    const auto& u = specs[b.index];
    const bool unital = gallery::neutral_element(s) && gallery::neutral_element(u);
    const auto st = gallery::direct_product(s, u);
    std::optional<ObjId> carrier;
    for (ObjId c : cat.objects()) {
      if (gallery::isomorphic(specs[c.index], st)) carrier = c;
    }
    const auto ws = find_biproducts(cat, a, b);
    const bool expected = unital && carrier.has_value();
    positive += expected ? 1 : 0;
    t.expect(ws.empty() != expected, pair_name(cat, a, b));
    for (const auto& w : ws) {
      t.expect(carrier && w.carrier == *carrier, pair_name(cat, a, b) + " carrier is S x T");
    }
  });
  t.expect(positive > 0, "some unital pair has its carrier present");
  return t.outcome(std::to_string(positive) + " positive pairs");
}

Outcome con_iff() {
  Tally t;
  const std::vector<gallery::ContractiveSystemSpec> specs{
      gallery::line_system("s", {0, 1, 3}, {0, 0, 1}),
      gallery::ContractiveSystemSpec{"e", 0, {}, {}},
  };
  for (const auto& s : specs) {
    bool ok = true;
    try {
      gallery::validate(s);
    } catch (const std::exception&) {
      ok = false;
    }
    t.expect(ok, s.name + " validates");
    t.expect(gallery::fixed_points(s).size() <= 1, s.name + " has at most one fixed point");
  }
  t.expect(gallery::fixed_points(specs[0]).size() == 1, "s has a fixed point");
  t.expect(gallery::fixed_points(specs[1]).empty(), "e has no fixed point");
  const FinCat cat = gallery::build_con_fragment(specs);
  t.expect(validate_category(cat).pass, "Con fragment validates");
  const ObjId bang = *cat.find_object("!");
  t.expect(gallery::fixed_points(gallery::terminal_system()).size() == 1, "! has its fixed point");
  for (ObjId s : cat.objects()) {
    const bool fixed =
        s == bang || !gallery::fixed_points(specs.at(s.index)).empty();
    const auto ws = find_biproducts(cat, s, bang);
    t.expect(ws.empty() != fixed, pair_name(cat, s, bang));
    for (const auto& w : ws) {
      t.expect(w.carrier == s, pair_name(cat, s, bang) + " carrier is s itself");
    }
  }
  return t.outcome("(s, !) found exactly for systems with a fixed point");
}

Outcome ambiadjunction() {
  Tally t;
  const FinCat& cat = entry("indiscrete-2").category;
  const auto search = canonical_assignment(cat);
  t.expect(search.assignment.has_value(), "canonical assignment exists");
  if (search.assignment) {
    const Verdict v = verify_ambiadjunction(cat, *search.assignment);
    t.expect(v.pass, v.clause + ": " + v.detail);
  }
  return t.outcome("functoriality, both adjunctions, naturality, section");
}

Outcome oracle_equivalence() {
  Tally t;
  std::size_t categories = 0;
  auto run = [&](const FinCat& cat, const std::string& label) {
    if (cat.morphism_count() > 40) return;
    ++categories;
    each_pair(cat, [&](ObjId a, ObjId b) {
      t.expect(find_biproducts(cat, a, b) == oracle::all_biproducts(cat, a, b),
               label + " " + pair_name(cat, a, b));
    });
  };
  for (const auto& e : suite()) run(e.category, e.name);
  for (const auto& cat : random_suite()) run(cat, "random");
  return t.outcome(std::to_string(categories) + " categories with at most 40 morphisms");
}

Outcome duality() {
  Tally t;
  for (const auto& e : suite()) {
    const FinCat op = opposite(e.category);
    t.expect(opposite(op) == e.category, e.name + " double opposite");
    each_pair(e.category, [&](ObjId a, ObjId b) {
      std::vector<BiproductWitness> here;
      for (const auto& w : find_biproducts(e.category, a, b)) here.push_back(w.swapped());
      std::sort(here.begin(), here.end());
      auto there = find_biproducts(op, a, b);
      std::sort(there.begin(), there.end());
      t.expect(here == there, e.name + " " + pair_name(e.category, a, b));
    });
  }
  return t.outcome("every gallery category, every pair");
}

Outcome ternary() {
  Tally t;
  const auto& e = entry("ab-cube");
  const FinCat& cat = e.category;
  const ObjId z2 = *cat.find_object("Z2");
  const ObjId z2z2 = *cat.find_object("Z2xZ2");
  const auto inner = find_biproducts(cat, z2, z2);
  t.expect(!inner.empty(), "Z2 + Z2 exists");
  std::size_t checked = 0;
  for (const auto& ab : inner) {
    if (ab.carrier != z2z2) continue;
    const auto outer = find_biproducts(cat, ab.carrier, z2);
    t.expect(!outer.empty(), "(Z2 + Z2) + Z2 exists");
    if (outer.empty()) break;
    const auto nary = ternary_from_nested(cat, ab, outer.front());
    t.expect(well_typed(cat, nary), "ternary witness well typed");
    const Verdict v = check_nary_biproduct(cat, nary);
    t.expect(v.pass, v.clause + ": " + v.detail);
    t.expect(cat.name(nary.carrier) == "Z2xZ2xZ2", "ternary carrier is Z2xZ2xZ2");
    ++checked;
    break;
  }
  t.expect(checked == 1, "a nested witness was found");
  return t.outcome("(Z2 + Z2) + Z2 in the Ab fragment");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"finset-biproducts", finset_soundness},
      {"lemma-suite", lemma_suite},
      {"corollary-suite", corollary_suite},
      {"equivalence-suite", equivalence_suite},
      {"uniqueness-suite", uniqueness_suite},
      {"preorder-iff", preorder_iff},
      {"semigroup-iff", semigroup_iff},
      {"con-iff", con_iff},
      {"ambiadjunction", ambiadjunction},
      {"oracle-equivalence", oracle_equivalence},
      {"duality", duality},
      {"ternary-coherence", ternary},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first
              << " [" << timing << "]: " << o.note << std::endl;
    failed += o.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
