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

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biprod/biproduct.hpp"
#include "biprod/fincat.hpp"
#include "biprod/verdict.hpp"

namespace biprod::report {

inline constexpr const char* kSchema = "biprod.report/1";

/// A counterexample with every morphism replaced by its display name.
struct NamedCounterexample {
  std::string law;
  std::vector<std::string> involved;
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;
};

struct VerdictEntry {
  std::string check;
  std::string subject;
  bool pass = true;
  bool vacuous = false;
  std::string clause;
  std::string detail;
  std::optional<NamedCounterexample> counterexample;
};

/// Named fields of a certified structure, such as a biproduct witness.
struct Certificate {
  std::string kind;
  std::string subject;
  std::vector<std::pair<std::string, std::string>> fields;
};

struct Report {
  std::string command;
  std::vector<std::string> args;
  std::string category_name;
  std::string fingerprint;
  std::size_t object_count = 0;
  std::size_t morphism_count = 0;
  std::vector<VerdictEntry> verdicts;
  std::vector<Certificate> certificates;
  std::optional<double> timing_ms;

  /// Conjunction of every verdict; an empty report passes.
  bool pass() const;

  void describe_category(const FinCat& cat, const std::string& name);
  void add(const FinCat& cat, std::string check, std::string subject, const Verdict& v);
  void certify(const FinCat& cat, std::string kind, std::string subject,
               const BiproductWitness& w);
  void certify(const FinCat& cat, std::string kind, std::string subject, const SpanWitness& w);
  void certify(const FinCat& cat, std::string kind, std::string subject,
               const CospanWitness& w);
};

NamedCounterexample name_counterexample(const FinCat& cat, const Counterexample& ce);

/// Pretty-printed JSON with a fixed field order.
std::string to_json(const Report& r);
/// Line-oriented human-readable rendering.
std::string to_text(const Report& r);

}  // namespace biprod::report
