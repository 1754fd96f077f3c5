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

#include "biprod/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "biprod/dsl.hpp"

namespace biprod::report {

namespace {

std::vector<std::string> names(const FinCat& cat, const std::vector<MorId>& ms) {
  std::vector<std::string> out;
  out.reserve(ms.size());
  for (MorId m : ms) {
    out.push_back(m.index < cat.morphism_count() ? cat.name(m) : "<none>");
  }
  return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : sep) + x;
  return s;
}

}  // namespace

bool Report::pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.pass; });
}

void Report::describe_category(const FinCat& cat, const std::string& name) {
  category_name = name;
  fingerprint = dsl::fingerprint(cat);
  object_count = cat.object_count();
  morphism_count = cat.morphism_count();
}

NamedCounterexample name_counterexample(const FinCat& cat, const Counterexample& ce) {
  return {ce.law, names(cat, ce.involved), names(cat, ce.lhs), names(cat, ce.rhs)};
}

void Report::add(const FinCat& cat, std::string check, std::string subject, const Verdict& v) {
  VerdictEntry e{std::move(check), std::move(subject), v.pass, v.vacuous, v.clause, v.detail,
                 std::nullopt};
  if (v.counterexample) e.counterexample = name_counterexample(cat, *v.counterexample);
  verdicts.push_back(std::move(e));
}

void Report::certify(const FinCat& cat, std::string kind, std::string subject,
                     const BiproductWitness& w) {
  certificates.push_back({std::move(kind), std::move(subject),
                          {{"carrier", cat.name(w.carrier)},
                           {"pA", cat.name(w.p_a)},
                           {"pB", cat.name(w.p_b)},
                           {"iA", cat.name(w.i_a)},
                           {"iB", cat.name(w.i_b)}}});
}

void Report::certify(const FinCat& cat, std::string kind, std::string subject,
                     const SpanWitness& w) {
  certificates.push_back({std::move(kind), std::move(subject),
                          {{"apex", cat.name(w.apex)},
                           {"left", cat.name(w.left)},
                           {"right", cat.name(w.right)}}});
}

void Report::certify(const FinCat& cat, std::string kind, std::string subject,
                     const CospanWitness& w) {
  certificates.push_back({std::move(kind), std::move(subject),
                          {{"nadir", cat.name(w.nadir)},
                           {"left", cat.name(w.left)},
                           {"right", cat.name(w.right)}}});
}

std::string to_json(const Report& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = r.command;
  j["args"] = r.args;
  j["category"] = {{"name", r.category_name},
                   {"fingerprint", r.fingerprint},
                   {"objects", r.object_count},
                   {"morphisms", r.morphism_count}};
  ordered_json verdicts = ordered_json::array();
  for (const auto& v : r.verdicts) {
    ordered_json e;
    e["check"] = v.check;
    e["subject"] = v.subject;
    e["pass"] = v.pass;
    e["vacuous"] = v.vacuous;
    e["clause"] = v.clause;
    e["detail"] = v.detail;
    if (v.counterexample) {
      e["counterexample"] = {{"law", v.counterexample->law},
                             {"involved", v.counterexample->involved},
                             {"lhs", v.counterexample->lhs},
                             {"rhs", v.counterexample->rhs}};
    } else {
      e["counterexample"] = nullptr;
    }
    verdicts.push_back(std::move(e));
  }
  j["verdicts"] = std::move(verdicts);
  ordered_json certs = ordered_json::array();
  for (const auto& c : r.certificates) {
    ordered_json fields;
    for (const auto& [k, v] : c.fields) fields[k] = v;
    certs.push_back({{"kind", c.kind}, {"subject", c.subject}, {"fields", std::move(fields)}});
  }
  j["certificates"] = std::move(certs);
  j["pass"] = r.pass();
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j.dump(2) + "\n";
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << r.command << ": " << r.category_name << " [" << r.fingerprint << "] " << r.object_count
     << " objects, " << r.morphism_count << " morphisms\n";
  for (const auto& v : r.verdicts) {
    os << (v.pass ? (v.vacuous ? "VACUOUS " : "PASS ") : "FAIL ") << v.check;
    if (!v.subject.empty()) os << " " << v.subject;
    if (!v.clause.empty()) os << " {" << v.clause << "}";
    if (!v.detail.empty()) os << ": " << v.detail;
    os << "\n";
    if (v.counterexample) {
      const auto& ce = *v.counterexample;
      os << "  counterexample " << ce.law << ": " << join(ce.involved, ", ") << "\n";
      if (!ce.lhs.empty()) {
        os << "  " << join(ce.lhs, " . ") << " != " << join(ce.rhs, " . ") << "\n";
      }
    }
  }
  for (const auto& c : r.certificates) {
    os << "certificate " << c.kind;
    if (!c.subject.empty()) os << " " << c.subject;
    os << ":";
    for (const auto& [k, v] : c.fields) os << " " << k << "=" << v;
    os << "\n";
  }
  os << (r.pass() ? "result: pass" : "result: fail");
  if (r.timing_ms) os << " (" << *r.timing_ms << " ms)";
  os << "\n";
  return os.str();
}

}  // namespace biprod::report
