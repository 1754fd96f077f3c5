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

#include "biprod/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "biprod/biproduct.hpp"
#include "biprod/dsl.hpp"
#include "biprod/error.hpp"
#include "biprod/gallery.hpp"
#include "biprod/oracle.hpp"
#include "biprod/report.hpp"
#include "biprod/universal.hpp"

namespace biprod::cli {

namespace {

/// Bad input that is not a parse error: unknown names, missing files.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  bool json = false;
  bool timing = false;
  bool free_compose = false;

  std::string file;
  std::string pair;
  bool all_pairs = false;
  bool use_oracle = false;
  std::string morphism;
  std::string witness;
  std::string witness2;
  std::string definition = "new";
  std::string theorem;
  std::string morphisms;

  std::string gallery_name;
  std::size_t max_size = 2;
  std::string kind = "chain";
  std::size_t size = 2;
  std::string groups;
  std::uint64_t seed = 0;
  std::size_t max_morphisms = gallery::kDefaultMorphismLimit;
  std::string spec_file;
  std::string emit;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string pair_subject(const FinCat& cat, ObjId a, ObjId b) {
  return "(" + cat.name(a) + ", " + cat.name(b) + ")";
}

ObjId object_named(const FinCat& cat, const std::string& name) {
  auto o = cat.find_object(name);
  if (!o) throw UsageError("unknown object '" + name + "'");
  return *o;
}

MorId morphism_named(const FinCat& cat, const std::string& name) {
  auto m = cat.find_morphism(name);
  if (!m) throw UsageError("unknown morphism '" + name + "'");
  return *m;
}

std::pair<ObjId, ObjId> parse_pair(const FinCat& cat, const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 2) throw UsageError("--pair expects A,B");
  return {object_named(cat, parts[0]), object_named(cat, parts[1])};
}

const dsl::NamedWitness& witness_named(const dsl::CatDoc& doc, const std::string& name) {
  if (name.empty()) throw UsageError("a witness name is required");
  const auto* w = doc.find_witness(name);
  if (!w) throw UsageError("unknown witness '" + name + "'");
  return *w;
}

std::vector<std::pair<ObjId, ObjId>> selected_pairs(const FinCat& cat, const Options& o) {
  std::vector<std::pair<ObjId, ObjId>> out;
  if (o.all_pairs) {
    for (ObjId a : cat.objects()) {
      for (ObjId b : cat.objects()) out.emplace_back(a, b);
    }
  } else if (!o.pair.empty()) {
    out.push_back(parse_pair(cat, o.pair));
  } else {
    throw UsageError("--pair A,B or --all-pairs is required");
  }
  return out;
}

// ------------------------------------------------------------ file commands

void cmd_validate(const dsl::CatDoc& doc, report::Report& r) {
  r.add(doc.category, "validate", "", validate_category(doc.category));
  if (doc.cmon) r.add(doc.category, "validate-cmon", "", validate_cmon(doc.category, *doc.cmon));
}

void cmd_classify(const dsl::CatDoc& doc, const Options& o, report::Report& r) {
  const FinCat& cat = doc.category;
  std::vector<MorId> targets;
  if (!o.morphism.empty()) {
    targets.push_back(morphism_named(cat, o.morphism));
  } else {
    for (std::uint32_t i = 0; i < cat.morphism_count(); ++i) targets.push_back(MorId{i});
  }
  for (MorId m : targets) {
    const auto c = classify_morphism(cat, m);
    r.certificates.push_back({"morphism-class",
                              describe(cat, m),
                              {{"constant", c.constant ? "true" : "false"},
                               {"coconstant", c.coconstant ? "true" : "false"},
                               {"zero", c.zero ? "true" : "false"}}});
  }
}

void cmd_zeros(const dsl::CatDoc& doc, report::Report& r) {
  const FinCat& cat = doc.category;
  auto zs = find_zero_structure(cat);
  r.add(cat, "zero-structure", "", zs.verdict);
  if (!zs.structure) return;
  r.add(cat, "absorbing-law", "", check_zero_structure(cat, *zs.structure));
  for (ObjId a : cat.objects()) {
    for (ObjId b : cat.objects()) {
      r.certificates.push_back({"zero", pair_subject(cat, a, b),
                                {{"morphism", cat.name(zs.structure->zero_of(a, b))}}});
    }
  }
}

void cmd_products(const dsl::CatDoc& doc, const Options& o, bool co, report::Report& r) {
  const FinCat& cat = doc.category;
  const std::string check = co ? "coproducts" : "products";
  for (auto [a, b] : selected_pairs(cat, o)) {
    const std::string subject = pair_subject(cat, a, b);
    std::size_t count = 0;
    if (co) {
      auto ws = find_coproducts(cat, a, b);
      count = ws.size();
      for (const auto& w : ws) r.certify(cat, "coproduct", subject, w);
    } else {
      auto ws = find_products(cat, a, b);
      count = ws.size();
      for (const auto& w : ws) r.certify(cat, "product", subject, w);
    }
    r.add(cat, check, subject,
          Verdict::ok(count == 0 ? std::string("none in this category")
                                 : std::to_string(count) + " found"));
  }
}

void cmd_biproducts(const dsl::CatDoc& doc, const Options& o, report::Report& r) {
  const FinCat& cat = doc.category;
  for (auto [a, b] : selected_pairs(cat, o)) {
    const std::string subject = pair_subject(cat, a, b);
    auto ws = find_biproducts(cat, a, b);
    for (const auto& w : ws) r.certify(cat, "biproduct", subject, w);
    r.add(cat, "biproducts", subject,
          Verdict::ok(ws.empty() ? std::string("no biproduct in this category")
                                 : std::to_string(ws.size()) + " found"));
    if (o.use_oracle) {
      auto expected = oracle::all_biproducts(cat, a, b);
      if (expected == ws) {
        r.add(cat, "oracle", subject, Verdict::ok("search and oracle agree"));
      } else {
        r.add(cat, "oracle", subject,
              Verdict::fail("oracle-diff", "search found " + std::to_string(ws.size()) +
                                               ", oracle found " +
                                               std::to_string(expected.size())));
      }
    }
  }
}

void cmd_check_witness(const dsl::CatDoc& doc, const Options& o, report::Report& r) {
  const FinCat& cat = doc.category;
  const auto& nw = witness_named(doc, o.witness);
  const std::string subject = nw.name + " " + pair_subject(cat, nw.a, nw.b);
  Verdict v;
  if (o.definition == "new") {
    v = check_biproduct(cat, nw.witness, nw.a, nw.b);
  } else if (o.definition == "zero") {
    auto zs = find_zero_structure(cat);
    if (!zs.structure) {
      r.add(cat, "zero-structure", "", zs.verdict);
      return;
    }
    v = check_zero_def_biproduct(cat, *zs.structure, nw.witness, nw.a, nw.b);
  } else if (o.definition == "cmon") {
    if (!doc.cmon) throw UsageError("--definition cmon needs cmon blocks in the document");
    Verdict valid = validate_cmon(cat, *doc.cmon);
    if (!valid) {
      r.add(cat, "validate-cmon", "", valid);
      return;
    }
    v = check_cmon_biproduct(cat, *doc.cmon, nw.witness, nw.a, nw.b);
  } else {
    throw UsageError("--definition must be new, zero or cmon");
  }
  r.add(cat, "biproduct-" + o.definition, subject, v);
  if (v) r.certify(cat, "biproduct", subject, nw.witness);
}

// Adds the certification verdict for `nw` and returns whether it passed.
bool require_certified(const FinCat& cat, const dsl::NamedWitness& nw, report::Report& r) {
  Verdict v = check_biproduct(cat, nw.witness, nw.a, nw.b);
  if (!v) {
    v.clause = "precondition:" + v.clause;
    r.add(cat, "certify", nw.name, v);
    return false;
  }
  return true;
}

void verify_uniqueness_all(const FinCat& cat, report::Report& r) {
  std::size_t pairs_checked = 0;
  for (ObjId a : cat.objects()) {
    for (ObjId b : cat.objects()) {
      auto ws = find_biproducts(cat, a, b);
      for (std::size_t i = 0; i < ws.size(); ++i) {
        for (std::size_t j = i + 1; j < ws.size(); ++j) {
          Verdict v = verify_uniqueness(cat, ws[i], ws[j], a, b);
          ++pairs_checked;
          if (!v) {
            r.add(cat, "uniqueness", pair_subject(cat, a, b), v);
            return;
          }
        }
      }
    }
  }
  r.add(cat, "uniqueness", "",
        pairs_checked == 0
            ? Verdict::vacuously("no pair has two distinct biproduct witnesses")
            : Verdict::ok(std::to_string(pairs_checked) + " witness pairs compared"));
}

void cmd_verify(const dsl::CatDoc& doc, const Options& o, report::Report& r) {
  const FinCat& cat = doc.category;
  const std::string& t = o.theorem;
  if (t == "lemma") {
    if (o.witness.empty()) {
      std::size_t n = 0;
      for (ObjId a : cat.objects()) {
        for (ObjId b : cat.objects()) {
          for (const auto& w : find_biproducts(cat, a, b)) {
            ++n;
            Verdict v = verify_lemma_zero(cat, w, a, b);
            if (!v) {
              r.add(cat, "lemma", pair_subject(cat, a, b), v);
              return;
            }
          }
        }
      }
      r.add(cat, "lemma", "",
            n == 0 ? Verdict::vacuously("no biproduct witnesses in this category")
                   : Verdict::ok(std::to_string(n) + " witnesses checked"));
      return;
    }
    const auto& nw = witness_named(doc, o.witness);
    if (!require_certified(cat, nw, r)) return;
    r.add(cat, "lemma", nw.name, verify_lemma_zero(cat, nw.witness, nw.a, nw.b));
  } else if (t == "corollary") {
    r.add(cat, "corollary", "", verify_corollary_zeros(cat));
  } else if (t == "uniqueness") {
    if (o.witness.empty() && o.witness2.empty()) {
      verify_uniqueness_all(cat, r);
      return;
    }
    const auto& w1 = witness_named(doc, o.witness);
    const auto& w2 = witness_named(doc, o.witness2);
    if (w1.a != w2.a || w1.b != w2.b) throw UsageError("witnesses must share the pair (A, B)");
    if (!require_certified(cat, w1, r) || !require_certified(cat, w2, r)) return;
    r.add(cat, "uniqueness", w1.name + ", " + w2.name,
          verify_uniqueness(cat, w1.witness, w2.witness, w1.a, w1.b));
  } else if (t == "nary") {
    const auto& ab = witness_named(doc, o.witness);
    const auto& abc = witness_named(doc, o.witness2);
    if (abc.a != ab.witness.carrier) {
      throw UsageError("the first factor of " + abc.name + " must be the carrier of " + ab.name);
    }
    if (!require_certified(cat, ab, r) || !require_certified(cat, abc, r)) return;
    auto nary = ternary_from_nested(cat, ab.witness, abc.witness);
    std::string factors;
    for (ObjId f : nary.factors) factors += (factors.empty() ? "" : ", ") + cat.name(f);
    r.add(cat, "nary", "(" + factors + ")", check_nary_biproduct(cat, nary));
  } else if (t == "sum-eq-prod") {
    const auto& wab = witness_named(doc, o.witness);
    const auto& wcd = witness_named(doc, o.witness2);
    auto names = split(o.morphisms, ',');
    if (names.size() != 2) throw UsageError("--morphisms expects f,g");
    const MorId f = morphism_named(cat, names[0]);
    const MorId g = morphism_named(cat, names[1]);
    if (cat.dom(f) != wab.a || cat.cod(f) != wcd.a || cat.dom(g) != wab.b ||
        cat.cod(g) != wcd.b) {
      throw UsageError("--morphisms must be f: A -> C and g: B -> D");
    }
    if (!require_certified(cat, wab, r) || !require_certified(cat, wcd, r)) return;
    auto cmp = check_sum_equals_product_of_morphisms(cat, wab.witness, wcd.witness, f, g);
    r.add(cat, "sum-eq-prod", names[0] + ", " + names[1], cmp.verdict);
    if (cmp.sum != kNoMorphism && cmp.product != kNoMorphism) {
      r.certificates.push_back({"sum-product", names[0] + ", " + names[1],
                                {{"sum", cat.name(cmp.sum)}, {"product", cat.name(cmp.product)}}});
    }
  } else if (t == "ambiadjunction") {
    auto search = canonical_assignment(cat);
    if (!search.assignment) {
      r.add(cat, "ambiadjunction", "",
            Verdict::fail("precondition",
                          "no total biproduct assignment: " +
                              pair_subject(cat, search.missing->first, search.missing->second) +
                              " has no biproduct in this category"));
      return;
    }
    r.add(cat, "ambiadjunction", "", verify_ambiadjunction(cat, *search.assignment));
  } else {
    throw UsageError(
        "--theorem must be lemma, corollary, uniqueness, nary, sum-eq-prod or ambiadjunction");
  }
}

// ------------------------------------------------------------------ gallery

gallery::Rational parse_rational(const nlohmann::json& j) {
  if (j.is_number_integer()) return {j.get<std::int64_t>(), 1};
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return {std::stoll(s), 1};
      return {std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
    } catch (const std::exception&) {
    }
  }
  throw UsageError("distance entries must be integers or \"p/q\" strings");
}

std::size_t index_of(const std::vector<std::string>& xs, const std::string& x) {
  auto it = std::find(xs.begin(), xs.end(), x);
  if (it == xs.end()) throw UsageError("unknown element '" + x + "' in spec");
  return static_cast<std::size_t>(it - xs.begin());
}

std::vector<std::uint32_t> parse_group(const std::string& text) {
  std::vector<std::uint32_t> orders;
  if (text == "0" || text == "1" || text.empty()) return orders;
  for (const auto& part : split(text, 'x')) {
    try {
      orders.push_back(static_cast<std::uint32_t>(std::stoul(part)));
    } catch (const std::exception&) {
      throw UsageError("bad group '" + text + "'; expected orders like 2x2");
    }
  }
  return orders;
}

gallery::GalleryEntry build_gallery(const Options& o) {
  using namespace gallery;
  const std::string& name = o.gallery_name;
  const std::size_t limit = o.max_morphisms;
  nlohmann::json spec;
  if (!o.spec_file.empty()) {
    try {
      spec = nlohmann::json::parse(read_file(o.spec_file));
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(o.spec_file + ": " + e.what());
    }
  }
  auto plain = [&](std::string n, FinCat c) {
    return GalleryEntry{std::move(n), std::move(c), std::nullopt, {}, false, std::nullopt};
  };

  if (name == "finset") {
    auto e = plain("finset-" + std::to_string(o.max_size), build_finset_skeleton(o.max_size, limit));
    for (ObjId a : e.category.objects()) {
      for (ObjId b : e.category.objects()) {
        e.expectations.push_back({a, b, a.index == 0 && b.index == 0});
      }
    }
    return e;
  }
  if (name == "pointed") {
    return plain("pointed-" + std::to_string(o.max_size), build_pointed_sets(o.max_size, limit));
  }
  if (name == "preorder") {
    PreorderSpec ps;
    if (!spec.is_null()) {
      ps.elements = spec.at("elements").get<std::vector<std::string>>();
      for (const auto& rel : spec.at("relation")) {
        ps.relation.emplace_back(index_of(ps.elements, rel.at(0).get<std::string>()),
                                 index_of(ps.elements, rel.at(1).get<std::string>()));
      }
    } else if (o.kind == "chain") {
      ps = chain(o.size);
    } else if (o.kind == "discrete") {
      ps = discrete(o.size);
    } else if (o.kind == "indiscrete") {
      ps = indiscrete(o.size);
    } else if (o.kind == "diamond") {
      ps = diamond();
    } else {
      throw UsageError("--kind must be chain, discrete, indiscrete or diamond");
    }
    return plain("preorder", build_preorder(ps));
  }
  if (name == "ab") {
    AbFragmentSpec fs;
    if (!spec.is_null()) {
      for (const auto& g : spec.at("groups")) {
        fs.groups.push_back(ab_group(g.get<std::vector<std::uint32_t>>()));
      }
    } else {
      if (o.groups.empty()) throw UsageError("--groups expects a list such as 1,2,2x2");
      for (const auto& g : split(o.groups, ',')) fs.groups.push_back(ab_group(parse_group(g)));
    }
    auto frag = build_ab_fragment(fs, limit);
    return GalleryEntry{"ab", std::move(frag.category), std::move(frag.cmon), {}, false,
                        std::nullopt};
  }
  if (name == "semigroups") {
    if (spec.is_null()) throw UsageError("semigroups needs --spec FILE");
    std::vector<InverseSemigroupSpec> specs;
    for (const auto& s : spec.at("semigroups")) {
      InverseSemigroupSpec is;
      is.name = s.at("name").get<std::string>();
      const auto rows = s.at("table").get<std::vector<std::vector<std::size_t>>>();
      is.size = rows.size();
      for (const auto& row : rows) {
        if (row.size() != is.size) throw UsageError(is.name + ": table must be square");
        is.table.insert(is.table.end(), row.begin(), row.end());
      }
      validate(is);
      specs.push_back(std::move(is));
    }
    return plain("semigroups", build_inverse_semigroup_category(specs, limit));
  }
  if (name == "con") {
    if (spec.is_null()) throw UsageError("con needs --spec FILE");
    std::vector<ContractiveSystemSpec> specs;
    for (const auto& s : spec.at("systems")) {
      ContractiveSystemSpec cs;
      const auto endo = s.at("endo").get<std::vector<std::size_t>>();
      const auto sys_name = s.at("name").get<std::string>();
      if (s.contains("positions")) {
        cs = line_system(sys_name, s.at("positions").get<std::vector<std::int64_t>>(), endo);
      } else {
        cs.name = sys_name;
        cs.endo = endo;
        cs.size = endo.size();
        for (const auto& row : s.at("distance")) {
          for (const auto& d : row) cs.distance.push_back(parse_rational(d));
        }
      }
      validate(cs);
      specs.push_back(std::move(cs));
    }
    return plain("con", build_con_fragment(specs, limit));
  }
  if (name == "random") {
    RandomBounds bounds;
    bounds.max_morphisms = std::min<std::size_t>(limit, 40);
    return plain("random-" + std::to_string(o.seed), build_random_category(o.seed, bounds));
  }
  auto entry = gallery_entry(name);
  if (!entry) {
    std::string known = "finset, pointed, preorder, ab, semigroups, con, random";
    for (const auto& n : gallery_names()) known += ", " + n;
    throw UsageError("unknown gallery '" + name + "'; known: " + known);
  }
  return std::move(*entry);
}

void cmd_gallery(const Options& o, report::Report& r, std::ostream& out, bool& emitted_stdout) {
  auto e = build_gallery(o);
  const FinCat& cat = e.category;
  r.describe_category(cat, e.name);
  r.add(cat, "validate", "", validate_category(cat));
  for (const auto& x : e.expectations) {
    const bool found = !find_biproducts(cat, x.a, x.b).empty();
    const std::string expect = x.has_biproduct ? "biproduct expected" : "no biproduct expected";
    const std::string got = found ? "found" : "none in this fragment";
    r.add(cat, "expectation", pair_subject(cat, x.a, x.b),
          found == x.has_biproduct ? Verdict::ok(expect + ", " + got)
                                   : Verdict::fail("expectation", expect + ", " + got));
  }
  if (e.has_zero_structure) {
    const bool has = find_zero_structure(cat).structure.has_value();
    const std::string detail = std::string(*e.has_zero_structure ? "zero structure expected"
                                                                  : "no zero structure expected") +
                               (has ? ", found" : ", none found");
    r.add(cat, "expectation", "zero-structure",
          has == *e.has_zero_structure ? Verdict::ok(detail) : Verdict::fail("expectation", detail));
  }
  if (!o.emit.empty()) {
    dsl::CatDoc doc{e.name, cat, {}, e.cmon};
    const std::string text = dsl::render(doc);
    if (o.emit == "-") {
      out << text;
      emitted_stdout = true;
    } else {
      std::ofstream f(o.emit, std::ios::binary);
      if (!f) throw UsageError("cannot write " + o.emit);
      f << text;
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite-category biproduct checker", "biprod"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit the report as JSON");
  app.add_flag("--timing", o.timing, "Include wall-clock timing in the report");
  app.add_flag("--free-compose", o.free_compose,
               "Derive composites missing from the document when unambiguous");

  auto file_cmd = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("FILE", o.file, "Category description")->required();
    return sub;
  };
  auto* validate = file_cmd("validate", "Check the category axioms");
  auto* classify = file_cmd("classify", "Classify morphisms as constant, coconstant, zero");
  classify->add_option("--morphism", o.morphism, "Only this morphism");
  auto* zeros = file_cmd("zeros", "Find the zero structure");
  auto* products = file_cmd("products", "Find all products of a pair");
  auto* coproducts = file_cmd("coproducts", "Find all coproducts of a pair");
  auto* biproducts = file_cmd("biproducts", "Find all biproducts of a pair");
  for (auto* sub : {products, coproducts, biproducts}) {
    sub->add_option("--pair", o.pair, "Objects A,B");
    sub->add_flag("--all-pairs", o.all_pairs, "Every ordered pair of objects");
  }
  biproducts->add_flag("--oracle", o.use_oracle, "Cross-check against brute force");
  auto* check = file_cmd("check-witness", "Check a declared witness");
  check->add_option("--witness", o.witness, "Witness name")->required();
  check->add_option("--definition", o.definition, "new, zero or cmon")
      ->check(CLI::IsMember({"new", "zero", "cmon"}));
  auto* verify = file_cmd("verify", "Verify a theorem on the category");
  verify->add_option("--theorem", o.theorem)
      ->required()
      ->check(CLI::IsMember(
          {"lemma", "corollary", "uniqueness", "nary", "sum-eq-prod", "ambiadjunction"}));
  verify->add_option("--witness", o.witness, "First witness");
  verify->add_option("--witness2", o.witness2, "Second witness");
  verify->add_option("--morphisms", o.morphisms, "f,g for sum-eq-prod");
  auto* gal = app.add_subcommand("gallery", "Build an example category");
  gal->add_option("NAME", o.gallery_name, "Gallery entry or builder")->required();
  gal->add_option("--max-size", o.max_size, "Largest carrier for finset and pointed");
  gal->add_option("--kind", o.kind, "chain, discrete, indiscrete or diamond");
  gal->add_option("--size", o.size, "Preorder size");
  gal->add_option("--groups", o.groups, "Abelian groups such as 1,2,2x2");
  gal->add_option("--seed", o.seed, "Seed for random");
  gal->add_option("--max-morphisms", o.max_morphisms, "Resource guard");
  gal->add_option("--spec", o.spec_file, "JSON spec file");
  gal->add_option("--emit", o.emit, "Write the category description to FILE (- for stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  auto* sub = app.get_subcommands().front();
  report::Report r;
  r.command = sub->get_name();
  r.args = args;
  const auto start = std::chrono::steady_clock::now();
  bool emitted_stdout = false;
  try {
    if (sub == gal) {
      cmd_gallery(o, r, out, emitted_stdout);
    } else {
      dsl::CatDoc doc = [&] {
        const std::string text = read_file(o.file);
        try {
          return dsl::parse(text, dsl::ParseOptions{o.free_compose});
        } catch (const ParseError& e) {
          err << o.file << ":" << e.what() << "\n";
          throw;
        }
      }();
      r.describe_category(doc.category, doc.name);
      if (sub == validate) {
        cmd_validate(doc, r);
      } else if (sub == classify) {
        cmd_classify(doc, o, r);
      } else if (sub == zeros) {
        cmd_zeros(doc, r);
      } else if (sub == products || sub == coproducts) {
        cmd_products(doc, o, sub == coproducts, r);
      } else if (sub == biproducts) {
        cmd_biproducts(doc, o, r);
      } else if (sub == check) {
        cmd_check_witness(doc, o, r);
      } else if (sub == verify) {
        cmd_verify(doc, o, r);
      }
    }
  } catch (const ParseError&) {
    return kUsage;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidStructure& e) {
    err << "invalid structure: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "bad spec: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
  if (o.timing) {
    r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            start)
                      .count();
  }
  // With --emit -, the description owns stdout and the report goes to err.
  std::ostream& sink = emitted_stdout ? err : out;
  sink << (o.json ? report::to_json(r) : report::to_text(r));
  return r.pass() ? kPass : kFail;
}

}  // namespace biprod::cli
