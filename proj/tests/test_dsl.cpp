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

#include <doctest.h>

#include "biprod/dsl.hpp"
#include "biprod/error.hpp"
#include "biprod/gallery.hpp"
#include "support.hpp"

using namespace biprod;
using namespace biprod::testing;

namespace {

struct Diagnostic {
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;
};

Diagnostic diagnose(const std::string& text, const dsl::ParseOptions& options = {}) {
  try {
    dsl::parse(text, options);
  } catch (const ParseError& e) {
    return {e.line(), e.column(), e.message()};
  }
  return {};
}

const char* kArrow = R"(category arrow {
  objects: A, B;
  morphisms: iA: A -> A, iB: B -> B, f: A -> B;
  id A = iA;
  id B = iB;
}
)";

}  // namespace

TEST_CASE("terminal category") {
  const auto doc = dsl::parse("category one { objects: X; morphisms: e: X -> X; id X = e; }");
  CHECK(doc.name == "one");
  CHECK(doc.category.object_count() == 1);
  CHECK(doc.category.morphism_count() == 1);
  CHECK(validate_category(doc.category).pass);
  CHECK_FALSE(doc.cmon);
}

TEST_CASE("unit-law entries are implicit") {
  const auto doc = dsl::parse(kArrow);
  const FinCat& c = doc.category;
  CHECK(c.compose(mor(c, "f"), mor(c, "iA")) == mor(c, "f"));
  CHECK(c.compose(mor(c, "iB"), mor(c, "f")) == mor(c, "f"));
  CHECK(validate_category(c).pass);
}

TEST_CASE("comments") {
  const auto doc = dsl::parse(
      "# leading\ncategory c { // trailing\n objects: A; morphisms: i: A -> A; id A = i; }\n");
  CHECK(doc.category.morphism_count() == 1);
}

TEST_CASE("diagnostics carry positions") {
  const std::string missing = R"(category e {
  objects: A;
  morphisms: i: A -> A, e: A -> A;
  id A = i;
}
)";
  const auto d = diagnose(missing);
  CHECK(d.line == 5);
  CHECK(d.message == "missing composition entry for e . e");

  const auto syntax = diagnose("category c {\n  objects A;\n}");
  CHECK(syntax.line == 2);
  CHECK(syntax.column == 11);

  const auto unknown = diagnose(
      "category c {\n  objects: A;\n  morphisms: i: A -> A;\n  id A = idA;\n}");
  CHECK(unknown.line == 4);
  CHECK(unknown.column == 10);
  CHECK(unknown.message == "unknown morphism 'idA'");

  CHECK(diagnose("category c { objects: A, A; morphisms: i: A -> A; id A = i; }")
            .message.find("duplicate") != std::string::npos);
  CHECK(diagnose("category c { objects: A; morphisms: i: A -> A, i: A -> A; id A = i; }")
            .message.find("duplicate") != std::string::npos);
  CHECK(diagnose("category c { objects: A; morphisms: i: A -> B; id A = i; }")
            .message.find("unknown object 'B'") != std::string::npos);
  CHECK(diagnose("category c { objects: A; morphisms: i: A -> A; }").message ==
        "missing identity declaration for object 'A'");

  const std::string mismatch = R"(category m {
  objects: A, B;
  morphisms: iA: A -> A, iB: B -> B, f: A -> B, g: A -> B;
  id A = iA; id B = iB;
  f . g = f;
}
)";
  const auto m = diagnose(mismatch);
  CHECK(m.line == 5);
  CHECK(m.message.find("mismatch") != std::string::npos);

  const auto bad_char = diagnose("category c { objects: A$; }");
  CHECK(bad_char.line == 1);
  CHECK(bad_char.column == 24);
}

TEST_CASE("render and parse round trip") {
  for (const auto& e : gallery::standard_gallery()) {
    CAPTURE(e.name);
    dsl::CatDoc doc{e.name, e.category, {}, e.cmon};
    const std::string text = dsl::render(doc);
    const auto back = dsl::parse(text);
    CHECK(back == doc);
    CHECK(dsl::render(back) == text);
    CHECK(dsl::fingerprint(back.category) == dsl::fingerprint(e.category));
  }
}

TEST_CASE("witness blocks") {
  const std::string text = std::string(R"(category iso {
  objects: A, B;
  morphisms: iA: A -> A, iB: B -> B, f: A -> B, g: B -> A;
  id A = iA; id B = iB;
  g . f = iA; f . g = iB;
}
witness w {
  carrier: A;
  pA = iA;
  pB = f;
  iA = iA;
  iB = g;
}
)");
  const auto doc = dsl::parse(text);
  const auto* w = doc.find_witness("w");
  REQUIRE(w);
  CHECK(w->a == obj(doc.category, "A"));
  CHECK(w->b == obj(doc.category, "B"));
  CHECK(check_biproduct(doc.category, w->witness, w->a, w->b).pass);
  CHECK_FALSE(doc.find_witness("v"));
  CHECK(dsl::parse(dsl::render(doc)) == doc);

  std::string broken = text;
  broken.replace(broken.find("iB = g;"), 7, "iB = f;");
  CHECK(diagnose(broken).message.find("type mismatch") != std::string::npos);
  std::string partial = text;
  partial.replace(partial.find("  pB = f;\n"), 10, "");
  CHECK(diagnose(partial).message == "witness 'w' has no pB");
}

TEST_CASE("cmon blocks") {
  const std::string base = R"(category z2 {
  objects: G;
  morphisms: id: G -> G, z: G -> G;
  id G = id;
  z . z = z;
}
)";
  const auto doc = dsl::parse(base + "cmon hom(G, G) { zero = z; id + id = z; }\n");
  REQUIRE(doc.cmon);
  const FinCat& c = doc.category;
  CHECK(doc.cmon->add(c, mor(c, "id"), mor(c, "id")) == mor(c, "z"));
  CHECK(doc.cmon->add(c, mor(c, "z"), mor(c, "id")) == mor(c, "id"));
  CHECK(validate_cmon(c, *doc.cmon).pass);

  CHECK(diagnose(base + "cmon hom(G, G) { id + id = z; }").message == "cmon block has no zero");
  CHECK(diagnose(base + "cmon hom(G, G) { zero = z; }").message == "missing sum entry id + id");
  CHECK(diagnose(base + "cmon hom(G, G) { zero = z; id + id = z; id + id = id; }")
            .message.find("duplicate sum") != std::string::npos);
}

TEST_CASE("free composition") {
  const std::string text = R"(category chain {
  objects: A, B, C;
  morphisms: iA: A -> A, iB: B -> B, iC: C -> C, f: A -> B, g: B -> C, h: A -> C;
  id A = iA; id B = iB; id C = iC;
}
)";
  CHECK(diagnose(text).message == "missing composition entry for g . f");
  dsl::ParseOptions free;
  free.free_compose = true;
  const auto doc = dsl::parse(text, free);
  const FinCat& c = doc.category;
  CHECK(c.compose(mor(c, "g"), mor(c, "f")) == mor(c, "h"));
  CHECK(validate_category(c).pass);
}

TEST_CASE("fingerprint") {
  const auto a = dsl::parse(kArrow);
  const std::string fp = dsl::fingerprint(a.category);
  CHECK(fp.size() == 16);
  CHECK(fp.find_first_not_of("0123456789abcdef") == std::string::npos);
  // FNV-1a of the canonical text, computed with a separate implementation.
  CHECK(dsl::fingerprint(gallery_category("finset-2")) == "b8c136b7303b5e77");
  CHECK(fp != dsl::fingerprint(opposite(a.category)));
}
