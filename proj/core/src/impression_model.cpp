// Copyright 2026 The inpd Authors.
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


#include "inpd/impression_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "builtin_models.hpp"

namespace inpd {

namespace {

constexpr std::array<std::string_view, kEventComponents> kComponentNames{
    "fA_e", "fA_p", "fA_a", "fB_e", "fB_p", "fB_a", "fO_e", "fO_p", "fO_a"};

constexpr std::array<std::string_view, kEventComponents> kRowNames{
    "tA_e", "tA_p", "tA_a", "tB_e", "tB_p", "tB_a", "tO_e", "tO_p", "tO_a"};

int component_index(std::string_view name) {
  for (std::size_t i = 0; i < kComponentNames.size(); ++i) {
    if (kComponentNames[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(',', start);
    out.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

FeatureTerm parse_term(std::string_view label, std::size_t line) {
  if (label == "const") return FeatureTerm::constant();
  if (auto star = label.find('*'); star != std::string_view::npos) {
    int i = component_index(trim(label.substr(0, star)));
    int j = component_index(trim(label.substr(star + 1)));
    if (i < 0 || j < 0) {
      throw ModelError("unknown component in interaction term '" + std::string(label) + "'", line);
    }
    return FeatureTerm::interaction(i, j);
  }
  int i = component_index(label);
  if (i < 0) throw ModelError("unknown feature term '" + std::string(label) + "'", line);
  return FeatureTerm::linear(i);
}

double parse_number(std::string_view text, std::size_t line) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw ModelError("malformed coefficient '" + std::string(text) + "'", line);
  }
  return value;
}

}  // namespace

std::string_view component_name(std::size_t index) { return kComponentNames.at(index); }

std::string FeatureTerm::label() const {
  if (first < 0) return "const";
  std::string out(kComponentNames[first]);
  if (second >= 0) {
    out += '*';
    out += kComponentNames[second];
  }
  return out;
}

ModelError::ModelError(const std::string& what, std::size_t line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line),
      message_(what) {}

ImpressionModel::ImpressionModel(std::string name, std::vector<FeatureTerm> terms,
                                 std::vector<double> coefficients)
    : name_(std::move(name)), terms_(std::move(terms)), coefficients_(std::move(coefficients)) {
  if (terms_.empty() || coefficients_.size() % terms_.size() != 0) {
    throw ModelError("coefficient count does not match the feature terms");
  }
  if (coefficients_.size() / terms_.size() != kEventComponents) {
    throw ModelError("expected 9 coefficient rows, got " +
                     std::to_string(coefficients_.size() / terms_.size()));
  }
  std::size_t constants = 0;
  std::array<std::size_t, kEventComponents> linear{};
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    auto valid = [](int i) { return i >= -1 && i < static_cast<int>(kEventComponents); };
    if (!valid(t.first) || !valid(t.second) || (t.first < 0 && t.second >= 0)) {
      throw ModelError("feature term " + std::to_string(k) + " references an invalid component");
    }
    if (std::count(terms_.begin(), terms_.end(), t) > 1) {
      throw ModelError("duplicate feature term " + t.label());
    }
    switch (t.degree()) {
      case 0: ++constants; break;
      case 1: ++linear[t.first]; break;
      default:
        if (is_behavior_component(t.first) && is_behavior_component(t.second)) {
          behavior_quadratic_ = true;
        }
    }
  }
  if (constants != 1) throw ModelError("model must contain exactly one constant term");
  for (std::size_t i = 0; i < kEventComponents; ++i) {
    if (linear[i] != 1) {
      throw ModelError("missing linear term " + std::string(kComponentNames[i]));
    }
  }
  for (double c : coefficients_) {
    if (!std::isfinite(c)) throw ModelError("non-finite coefficient");
  }
}

ImpressionModel ImpressionModel::identity() {
  std::vector<FeatureTerm> terms{FeatureTerm::constant()};
  for (int i = 0; i < static_cast<int>(kEventComponents); ++i) terms.push_back(FeatureTerm::linear(i));
  std::vector<double> coefficients(kEventComponents * terms.size(), 0.0);
  for (std::size_t i = 0; i < kEventComponents; ++i) coefficients[i * terms.size() + 1 + i] = 1.0;
  return ImpressionModel("identity", std::move(terms), std::move(coefficients));
}

std::array<double, kEventComponents> ImpressionModel::apply(
    const std::array<double, kEventComponents>& f) const {
  std::array<double, kEventComponents> out{};
  const std::size_t k_count = terms_.size();
  for (std::size_t k = 0; k < k_count; ++k) {
    const auto& t = terms_[k];
    double g = 1.0;
    if (t.first >= 0) g *= f[t.first];
    if (t.second >= 0) g *= f[t.second];
    for (std::size_t i = 0; i < kEventComponents; ++i) out[i] += coefficients_[i * k_count + k] * g;
  }
  return out;
}

BehaviorAffine ImpressionModel::linearize_in_behavior(const Epa& actor, const Epa& object) const {
  std::array<double, kEventComponents> fixed{actor.e(), actor.p(), actor.a(), 0.0, 0.0, 0.0,
                                             object.e(), object.p(), object.a()};
  BehaviorAffine out;
  const std::size_t k_count = terms_.size();
  for (std::size_t k = 0; k < k_count; ++k) {
    const auto& t = terms_[k];
    double scale = 1.0;
    int behavior_axis = -1;
    for (int idx : {t.first, t.second}) {
      if (idx < 0) continue;
      if (is_behavior_component(idx)) {
        behavior_axis = idx - 3;
      } else {
        scale *= fixed[idx];
      }
    }
    for (std::size_t i = 0; i < kEventComponents; ++i) {
      double c = coefficients_[i * k_count + k] * scale;
      if (behavior_axis < 0) {
        out.offset[i] += c;
      } else {
        out.slope[i][behavior_axis] += c;
      }
    }
  }
  return out;
}

ImpressionModel parse_impression_model(std::istream& in, std::string name) {
  std::string raw;
  std::size_t line_no = 0;
  std::vector<FeatureTerm> terms;
  std::size_t header_line = 0;
  std::array<std::vector<double>, kEventComponents> rows;
  std::array<bool, kEventComponents> seen{};
  std::size_t row_count = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto cells = split(line);
    if (terms.empty()) {
      if (cells.size() < 2 || cells[0] != "component") {
        throw ModelError("header must start with 'component'", line_no);
      }
      for (std::size_t c = 1; c < cells.size(); ++c) terms.push_back(parse_term(cells[c], line_no));
      header_line = line_no;
      continue;
    }
    if (cells.size() != terms.size() + 1) {
      throw ModelError("expected " + std::to_string(terms.size()) + " coefficients, got " +
                           std::to_string(cells.size() - 1),
                       line_no);
    }
    auto it = std::find(kRowNames.begin(), kRowNames.end(), cells[0]);
    if (it == kRowNames.end()) {
      throw ModelError("unknown transient component '" + std::string(cells[0]) + "'", line_no);
    }
    auto row = static_cast<std::size_t>(it - kRowNames.begin());
    if (seen[row]) throw ModelError("duplicate row " + std::string(cells[0]), line_no);
    seen[row] = true;
    ++row_count;
    for (std::size_t c = 1; c < cells.size(); ++c) rows[row].push_back(parse_number(cells[c], line_no));
  }
  if (terms.empty()) throw ModelError("missing header row", line_no);
  if (row_count != kEventComponents) {
    throw ModelError("expected 9 coefficient rows, got " + std::to_string(row_count), line_no);
  }
  std::vector<double> coefficients;
  coefficients.reserve(kEventComponents * terms.size());
  for (const auto& r : rows) coefficients.insert(coefficients.end(), r.begin(), r.end());
  try {
    return ImpressionModel(std::move(name), std::move(terms), std::move(coefficients));
  } catch (const ModelError& e) {
    throw ModelError(e.message(), header_line);
  }
}

ImpressionModel load_impression_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open impression model file " + path.string());
  try {
    return parse_impression_model(in, path.stem().string());
  } catch (const ModelError& e) {
    throw ModelError(path.string() + ": " + e.message(), e.line());
  }
}

ImpressionModel builtin_impression_model(std::string_view name) {
  std::string_view text;
  if (name == "identity") {
    text = detail::kIdentityModelCsv;
  } else if (name == "default") {
    text = detail::kDefaultModelCsv;
  } else {
    throw ModelError("unknown builtin impression model '" + std::string(name) + "'");
  }
  std::istringstream in{std::string(text)};
  return parse_impression_model(in, std::string(name));
}

ImpressionModel resolve_impression_model(const std::string& name_or_path) {
  if (name_or_path == "identity" || name_or_path == "default") {
    return builtin_impression_model(name_or_path);
  }
  return load_impression_model(name_or_path);
}

}  // namespace inpd
