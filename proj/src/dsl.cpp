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

#include "biprod/dsl.hpp"

#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>
#include <unordered_map>

#include "biprod/error.hpp"

namespace biprod::dsl {

namespace {

enum class Tok { ident, arrow, lbrace, rbrace, lparen, rparen, colon, semi, comma, equals, dot, plus, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '!' ||
         c == '*';
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < text.size() && text[i + 1] == '/')) {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const std::size_t l = line, cl = col;
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::arrow, "->", l, cl});
      advance(2);
      continue;
    }
    Tok kind;
    switch (c) {
      case '{': kind = Tok::lbrace; break;
      case '}': kind = Tok::rbrace; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case ':': kind = Tok::colon; break;
      case ';': kind = Tok::semi; break;
      case ',': kind = Tok::comma; break;
      case '=': kind = Tok::equals; break;
      case '.': kind = Tok::dot; break;
      case '+': kind = Tok::plus; break;
      default:
        if (!ident_char(c)) {
          throw ParseError(l, cl, std::string("unexpected character '") + c + "'");
        }
        {
          std::size_t j = i;
          // '-' may continue a name, as in finset-2, unless it starts "->".
          while (j < text.size() &&
                 (ident_char(text[j]) ||
                  (text[j] == '-' && (j + 1 >= text.size() || text[j + 1] != '>')))) {
            ++j;
          }
          out.push_back({Tok::ident, std::string(text.substr(i, j - i)), l, cl});
          advance(j - i);
        }
        continue;
    }
    out.push_back({kind, std::string(1, c), l, cl});
    advance(1);
  }
  out.push_back({Tok::end, "end of input", line, col});
  return out;
}

const char* describe(Tok t) {
  switch (t) {
    case Tok::ident: return "a name";
    case Tok::arrow: return "'->'";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::colon: return "':'";
    case Tok::semi: return "';'";
    case Tok::comma: return "','";
    case Tok::equals: return "'='";
    case Tok::dot: return "'.'";
    case Tok::plus: return "'+'";
    case Tok::end: return "end of input";
  }
  return "?";
}

struct Located {
  std::size_t line = 0;
  std::size_t column = 0;
};

struct SumEntry {
  MorId value;
  Located where;
};

struct CMonBlock {
  Located where;
  MorId zero = kNoMorphism;
  std::map<std::pair<std::uint32_t, std::uint32_t>, SumEntry> sums;
};

class Parser {
 public:
  Parser(std::string_view text, ParseOptions options) : toks_(lex(text)), options_(options) {}

  CatDoc run() {
    CatDoc doc;
    expect_keyword("category");
    doc.name = expect(Tok::ident).text;
    parse_category_body();
    doc.category = build_category();
    cat_ = &doc.category;
    std::map<std::pair<std::uint32_t, std::uint32_t>, CMonBlock> cmon_blocks;
    while (peek().kind != Tok::end) {
      const Token& t = peek();
      if (t.kind == Tok::ident && t.text == "witness") {
        doc.witnesses.push_back(parse_witness(doc));
      } else if (t.kind == Tok::ident && t.text == "cmon") {
        parse_cmon(cmon_blocks);
      } else if (t.kind == Tok::ident && t.text == "category") {
        throw error(t, "only one category per document");
      } else {
        throw error(t, "expected 'witness' or 'cmon', found " + quote(t));
      }
    }
    if (!cmon_blocks.empty()) doc.cmon = build_cmon(cmon_blocks);
    return doc;
  }

 private:
  // ----------------------------------------------------------- token helpers
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  static std::string quote(const Token& t) {
    return t.kind == Tok::end ? std::string("end of input") : "'" + t.text + "'";
  }
  static ParseError error(const Token& t, const std::string& msg) {
    return ParseError(t.line, t.column, msg);
  }
  static ParseError error(const Located& l, const std::string& msg) {
    return ParseError(l.line, l.column, msg);
  }
  const Token& expect(Tok kind) {
    const Token& t = peek();
    if (t.kind != kind) {
      throw error(t, std::string("expected ") + describe(kind) + ", found " + quote(t));
    }
    return next();
  }
  void expect_keyword(std::string_view kw) {
    const Token& t = peek();
    if (t.kind != Tok::ident || t.text != kw) {
      throw error(t, "expected '" + std::string(kw) + "', found " + quote(t));
    }
    next();
  }

  // ----------------------------------------------------------------- category
  ObjId object_ref(const Token& t) const {
    auto it = object_index_.find(t.text);
    if (it == object_index_.end()) throw error(t, "unknown object '" + t.text + "'");
    return ObjId{it->second};
  }
  MorId morphism_ref(const Token& t) const {
    auto it = morphism_index_.find(t.text);
    if (it == morphism_index_.end()) throw error(t, "unknown morphism '" + t.text + "'");
    return MorId{it->second};
  }

  void parse_category_body() {
    expect(Tok::lbrace);
    while (peek().kind != Tok::rbrace) {
      const Token& t = peek();
      if (t.kind != Tok::ident) throw error(t, "expected a declaration, found " + quote(t));
      if (t.text == "objects" && peek(1).kind == Tok::colon) {
        next();
        next();
        do {
          const Token& name = expect(Tok::ident);
          if (object_index_.count(name.text)) {
            throw error(name, "duplicate object '" + name.text + "'");
          }
          object_index_[name.text] = static_cast<std::uint32_t>(objects_.size());
          objects_.push_back(name.text);
          identities_.push_back(kNoMorphism);
        } while (peek().kind == Tok::comma && next().kind == Tok::comma);
        expect(Tok::semi);
      } else if (t.text == "morphisms" && peek(1).kind == Tok::colon) {
        next();
        next();
        do {
          const Token& name = expect(Tok::ident);
          if (morphism_index_.count(name.text)) {
            throw error(name, "duplicate morphism '" + name.text + "'");
          }
          expect(Tok::colon);
          const ObjId dom = object_ref(expect(Tok::ident));
          expect(Tok::arrow);
          const ObjId cod = object_ref(expect(Tok::ident));
          morphism_index_[name.text] = static_cast<std::uint32_t>(morphisms_.size());
          morphisms_.push_back({name.text, dom, cod});
        } while (peek().kind == Tok::comma && next().kind == Tok::comma);
        expect(Tok::semi);
      } else if (t.text == "id" && peek(1).kind == Tok::ident && peek(2).kind == Tok::equals) {
        next();
        const ObjId obj = object_ref(next());
        next();
        const Token& mt = expect(Tok::ident);
        const MorId m = morphism_ref(mt);
        if (morphisms_[m.index].dom != obj || morphisms_[m.index].cod != obj) {
          throw error(mt, "type mismatch: identity of " + objects_[obj.index] + " must be " +
                              objects_[obj.index] + " -> " + objects_[obj.index]);
        }
        if (identities_[obj.index] != kNoMorphism) {
          throw error(t, "duplicate identity for " + objects_[obj.index]);
        }
        identities_[obj.index] = m;
        expect(Tok::semi);
      } else {
        const Token& gt = expect(Tok::ident);
        expect(Tok::dot);
        const Token& ft = expect(Tok::ident);
        expect(Tok::equals);
        const Token& ht = expect(Tok::ident);
        expect(Tok::semi);
        const MorId g = morphism_ref(gt), f = morphism_ref(ft), h = morphism_ref(ht);
        const auto& gd = morphisms_[g.index];
        const auto& fd = morphisms_[f.index];
        const auto& hd = morphisms_[h.index];
        if (fd.cod != gd.dom) {
          throw error(gt, "type mismatch: " + gt.text + " . " + ft.text + " is not composable");
        }
        if (hd.dom != fd.dom || hd.cod != gd.cod) {
          throw error(ht, "type mismatch: " + ht.text + " is not " + objects_[fd.dom.index] +
                              " -> " + objects_[gd.cod.index]);
        }
        auto key = std::make_pair(g.index, f.index);
        if (compositions_.count(key)) {
          throw error(gt, "duplicate composition entry for " + gt.text + " . " + ft.text);
        }
        compositions_[key] = {h, {gt.line, gt.column}};
      }
    }
    close_brace_ = {peek().line, peek().column};
    expect(Tok::rbrace);
  }

  FinCat build_category() {
    for (std::size_t o = 0; o < objects_.size(); ++o) {
      if (identities_[o] == kNoMorphism) {
        throw error(close_brace_, "missing identity declaration for object '" + objects_[o] + "'");
      }
    }
    const std::size_t m = morphisms_.size();
    std::vector<MorId> table(m * m, kNoMorphism);
    for (const auto& [key, entry] : compositions_) table[key.first * m + key.second] = entry.value;
    auto is_id = [&](std::uint32_t k) {
      return identities_[morphisms_[k].dom.index] == MorId{k};
    };
    for (std::uint32_t g = 0; g < m; ++g) {
      for (std::uint32_t f = 0; f < m; ++f) {
        if (morphisms_[f].cod != morphisms_[g].dom || table[g * m + f] != kNoMorphism) continue;
        if (is_id(g)) {
          table[g * m + f] = MorId{f};
        } else if (is_id(f)) {
          table[g * m + f] = MorId{g};
        }
      }
    }
    if (options_.free_compose) derive_missing(table);
    for (std::uint32_t g = 0; g < m; ++g) {
      for (std::uint32_t f = 0; f < m; ++f) {
        if (morphisms_[f].cod == morphisms_[g].dom && table[g * m + f] == kNoMorphism) {
          throw error(close_brace_, "missing composition entry for " + morphisms_[g].name +
                                        " . " + morphisms_[f].name);
        }
      }
    }
    return FinCat(objects_, morphisms_, identities_, std::move(table));
  }

  void derive_missing(std::vector<MorId>& table) {
    const std::size_t m = morphisms_.size();
    const std::size_t n = objects_.size();
    std::vector<std::size_t> hom_size(n * n, 0);
    std::vector<MorId> hom_single(n * n, kNoMorphism);
    for (std::uint32_t k = 0; k < m; ++k) {
      const std::size_t key = morphisms_[k].dom.index * n + morphisms_[k].cod.index;
      ++hom_size[key];
      hom_single[key] = MorId{k};
    }
    for (bool progress = true; progress;) {
      progress = false;
      // factorizations[h] = known (a, b) with a∘b = h
      std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> factorizations(m);
      for (std::uint32_t a = 0; a < m; ++a) {
        for (std::uint32_t b = 0; b < m; ++b) {
          const MorId h = table[a * m + b];
          if (h != kNoMorphism) factorizations[h.index].emplace_back(a, b);
        }
      }
      for (std::uint32_t g = 0; g < m; ++g) {
        for (std::uint32_t f = 0; f < m; ++f) {
          if (morphisms_[f].cod != morphisms_[g].dom || table[g * m + f] != kNoMorphism) continue;
          std::vector<MorId> candidates;
          const std::size_t hk = morphisms_[f].dom.index * n + morphisms_[g].cod.index;
          if (hom_size[hk] == 1) candidates.push_back(hom_single[hk]);
          for (auto [a, b] : factorizations[f]) {  // g∘(a∘b) = (g∘a)∘b
            const MorId ga = table[g * m + a];
            if (ga == kNoMorphism) continue;
            const MorId r = table[ga.index * m + b];
            if (r != kNoMorphism) candidates.push_back(r);
          }
          for (auto [a, b] : factorizations[g]) {  // (a∘b)∘f = a∘(b∘f)
            const MorId bf = table[b * m + f];
            if (bf == kNoMorphism) continue;
            const MorId r = table[a * m + bf.index];
            if (r != kNoMorphism) candidates.push_back(r);
          }
          if (candidates.empty()) continue;
          for (MorId c : candidates) {
            if (c != candidates.front()) {
              throw error(close_brace_, "ambiguous derived composite for " + morphisms_[g].name +
                                            " . " + morphisms_[f].name + ": " +
                                            morphisms_[candidates.front().index].name + " or " +
                                            morphisms_[c.index].name);
            }
          }
          table[g * m + f] = candidates.front();
          progress = true;
        }
      }
    }
  }

  // ------------------------------------------------------------------ witness
  NamedWitness parse_witness(const CatDoc& doc) {
    next();
    const Token& name = expect(Tok::ident);
    for (const auto& w : doc.witnesses) {
      if (w.name == name.text) throw error(name, "duplicate witness '" + name.text + "'");
    }
    expect(Tok::lbrace);
    std::optional<ObjId> carrier;
    std::map<std::string, std::pair<MorId, Token>> legs;
    while (peek().kind != Tok::rbrace) {
      const Token& key = expect(Tok::ident);
      if (key.text == "carrier") {
        if (carrier) throw error(key, "duplicate carrier");
        expect(Tok::colon);
        carrier = object_ref(expect(Tok::ident));
      } else if (key.text == "pA" || key.text == "pB" || key.text == "iA" || key.text == "iB") {
        if (legs.count(key.text)) throw error(key, "duplicate entry '" + key.text + "'");
        expect(Tok::equals);
        const Token& mt = expect(Tok::ident);
        legs.emplace(key.text, std::make_pair(morphism_ref(mt), mt));
      } else {
        throw error(key, "expected carrier, pA, pB, iA or iB, found " + quote(key));
      }
      expect(Tok::semi);
    }
    const Token& close = expect(Tok::rbrace);
    if (!carrier) throw error(close, "witness '" + name.text + "' has no carrier");
    for (const char* k : {"pA", "pB", "iA", "iB"}) {
      if (!legs.count(k)) throw error(close, "witness '" + name.text + "' has no " + k);
    }
    const FinCat& cat = *cat_;
    const MorId p_a = legs.at("pA").first, p_b = legs.at("pB").first;
    const MorId i_a = legs.at("iA").first, i_b = legs.at("iB").first;
    const ObjId a = cat.cod(p_a), b = cat.cod(p_b);
    auto check = [&](const char* key, ObjId dom, ObjId cod) {
      const auto& [m, tok] = legs.at(key);
      if (cat.dom(m) != dom || cat.cod(m) != cod) {
        throw error(tok, std::string("type mismatch: ") + key + " must be " + cat.name(dom) +
                             " -> " + cat.name(cod));
      }
    };
    check("pA", *carrier, a);
    check("pB", *carrier, b);
    check("iA", a, *carrier);
    check("iB", b, *carrier);
    return {name.text, BiproductWitness{*carrier, p_a, p_b, i_a, i_b}, a, b};
  }

  // --------------------------------------------------------------------- cmon
  void parse_cmon(std::map<std::pair<std::uint32_t, std::uint32_t>, CMonBlock>& blocks) {
    const Token& kw = next();
    expect_keyword("hom");
    expect(Tok::lparen);
    const ObjId a = object_ref(expect(Tok::ident));
    expect(Tok::comma);
    const ObjId b = object_ref(expect(Tok::ident));
    expect(Tok::rparen);
    auto key = std::make_pair(a.index, b.index);
    if (blocks.count(key)) {
      throw error(kw, "duplicate cmon block for hom(" + objects_[a.index] + ", " +
                          objects_[b.index] + ")");
    }
    CMonBlock block;
    block.where = {kw.line, kw.column};
    auto in_hom = [&](const Token& t) {
      const MorId m = morphism_ref(t);
      if (morphisms_[m.index].dom != a || morphisms_[m.index].cod != b) {
        throw error(t, "type mismatch: " + t.text + " is not in hom(" + objects_[a.index] + ", " +
                           objects_[b.index] + ")");
      }
      return m;
    };
    expect(Tok::lbrace);
    while (peek().kind != Tok::rbrace) {
      if (peek().kind == Tok::ident && peek().text == "zero" && peek(1).kind == Tok::equals) {
        const Token& zt = next();
        next();
        if (block.zero != kNoMorphism) throw error(zt, "duplicate zero");
        block.zero = in_hom(expect(Tok::ident));
      } else {
        const Token& ft = expect(Tok::ident);
        expect(Tok::plus);
        const Token& gt = expect(Tok::ident);
        expect(Tok::equals);
        const Token& ht = expect(Tok::ident);
        const MorId f = in_hom(ft), g = in_hom(gt), h = in_hom(ht);
        auto sk = std::make_pair(f.index, g.index);
        if (block.sums.count(sk)) {
          throw error(ft, "duplicate sum entry for " + ft.text + " + " + gt.text);
        }
        block.sums[sk] = {h, {ft.line, ft.column}};
      }
      expect(Tok::semi);
    }
    if (block.zero == kNoMorphism) throw error(peek(), "cmon block has no zero");
    expect(Tok::rbrace);
    blocks.emplace(key, std::move(block));
  }

  CMonStructure build_cmon(const std::map<std::pair<std::uint32_t, std::uint32_t>, CMonBlock>& blocks) {
    const FinCat& cat = *cat_;
    CMonStructure cm(cat);
    for (ObjId a : cat.objects()) {
      for (ObjId b : cat.objects()) {
        const auto hom = cat.hom(a, b);
        if (hom.empty()) continue;
        auto it = blocks.find({a.index, b.index});
        if (it == blocks.end()) {
          throw error(blocks.begin()->second.where,
                      "cmon structure does not cover hom(" + cat.name(a) + ", " + cat.name(b) + ")");
        }
        const CMonBlock& block = it->second;
        auto& mon = cm.monoid(a, b);
        mon.zero = block.zero;
        const std::size_t k = hom.size();
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            const MorId f = hom[i], g = hom[j];
            MorId value = kNoMorphism;
            if (auto e = block.sums.find({f.index, g.index}); e != block.sums.end()) {
              value = e->second.value;
            } else if (f == block.zero) {
              value = g;
            } else if (g == block.zero) {
              value = f;
            } else if (auto r = block.sums.find({g.index, f.index}); r != block.sums.end()) {
              value = r->second.value;
            } else {
              throw error(block.where, "missing sum entry " + cat.name(f) + " + " + cat.name(g));
            }
            mon.sum[i * k + j] = value;
          }
        }
      }
    }
    return cm;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  ParseOptions options_;

  std::vector<std::string> objects_;
  std::unordered_map<std::string, std::uint32_t> object_index_;
  std::vector<MorphismDecl> morphisms_;
  std::unordered_map<std::string, std::uint32_t> morphism_index_;
  std::vector<MorId> identities_;
  struct Entry {
    MorId value;
    Located where;
  };
  std::map<std::pair<std::uint32_t, std::uint32_t>, Entry> compositions_;
  Located close_brace_;
  const FinCat* cat_ = nullptr;
};

void render_category(std::ostringstream& out, const FinCat& cat, const std::string& name) {
  out << "category " << name << " {\n";
  out << "  objects:";
  for (std::size_t i = 0; i < cat.object_count(); ++i) {
    out << (i ? ", " : " ") << cat.object_names()[i];
  }
  out << ";\n";
  if (cat.morphism_count() > 0) {
    out << "  morphisms:\n";
    for (std::size_t i = 0; i < cat.morphism_count(); ++i) {
      const auto& d = cat.morphisms()[i];
      out << "    " << d.name << ": " << cat.name(d.dom) << " -> " << cat.name(d.cod)
          << (i + 1 < cat.morphism_count() ? ",\n" : ";\n");
    }
  }
  for (ObjId o : cat.objects()) out << "  id " << cat.name(o) << " = " << cat.name(cat.identity(o)) << ";\n";
  const std::size_t m = cat.morphism_count();
  for (std::uint32_t g = 0; g < m; ++g) {
    for (std::uint32_t f = 0; f < m; ++f) {
      const MorId h = cat.compose(MorId{g}, MorId{f});
      if (h == kNoMorphism) continue;
      if (cat.is_identity(MorId{g}) && h == MorId{f}) continue;
      if (cat.is_identity(MorId{f}) && h == MorId{g}) continue;
      out << "  " << cat.name(MorId{g}) << " . " << cat.name(MorId{f}) << " = " << cat.name(h)
          << ";\n";
    }
  }
  out << "}\n";
}

}  // namespace

const NamedWitness* CatDoc::find_witness(std::string_view name) const {
  for (const auto& w : witnesses) {
    if (w.name == name) return &w;
  }
  return nullptr;
}

bool operator==(const CatDoc& a, const CatDoc& b) {
  return a.name == b.name && a.category == b.category && a.witnesses == b.witnesses &&
         a.cmon == b.cmon;
}

CatDoc parse(std::string_view text, const ParseOptions& options) {
  return Parser(text, options).run();
}

std::string render(const FinCat& cat, const std::string& name) {
  std::ostringstream out;
  render_category(out, cat, name);
  return out.str();
}

std::string render(const CatDoc& doc) {
  const FinCat& cat = doc.category;
  std::ostringstream out;
  render_category(out, cat, doc.name);
  for (const auto& w : doc.witnesses) {
    out << "\nwitness " << w.name << " {\n"
        << "  carrier: " << cat.name(w.witness.carrier) << ";\n"
        << "  pA = " << cat.name(w.witness.p_a) << ";\n"
        << "  pB = " << cat.name(w.witness.p_b) << ";\n"
        << "  iA = " << cat.name(w.witness.i_a) << ";\n"
        << "  iB = " << cat.name(w.witness.i_b) << ";\n"
        << "}\n";
  }
  if (doc.cmon) {
    for (ObjId a : cat.objects()) {
      for (ObjId b : cat.objects()) {
        const auto hom = cat.hom(a, b);
        if (hom.empty()) continue;
        const auto& mon = doc.cmon->monoid(a, b);
        out << "\ncmon hom(" << cat.name(a) << ", " << cat.name(b) << ") {\n"
            << "  zero = " << cat.name(mon.zero) << ";\n";
        const std::size_t k = hom.size();
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            const MorId f = hom[i], g = hom[j], v = mon.sum[i * k + j];
            MorId implied = kNoMorphism;
            if (f == mon.zero) {
              implied = g;
            } else if (g == mon.zero) {
              implied = f;
            } else if (i > j) {
              implied = mon.sum[j * k + i];
            }
            if (v == implied) continue;
            out << "  " << cat.name(f) << " + " << cat.name(g) << " = " << cat.name(v) << ";\n";
          }
        }
        out << "}\n";
      }
    }
  }
  return out.str();
}

std::string fingerprint(const FinCat& cat) {
  const std::string text = render(cat, "_");
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace biprod::dsl
