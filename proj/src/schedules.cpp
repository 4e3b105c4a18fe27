// Copyright 2026 The pfsim Authors
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

#include "pfsim/schedules.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "pfsim/rng.hpp"

namespace pfsim {

namespace {

void check_step(const Step& s) {
  if (s.term < 1) {
    throw InvalidInput("Word: term index " + std::to_string(s.term) +
                       " must be >= 1");
  }
  if (!(s.duration > 0.0) || !std::isfinite(s.duration)) {
    std::ostringstream msg;
    msg << "Word: step durations must be positive and finite, got "
        << s.duration << " for term " << s.term;
    throw InvalidInput(msg.str());
  }
}

void check_dt(double dt, int segments, const char* op) {
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw InvalidInput(std::string(op) + ": dt must be positive");
  if (segments < 1)
    throw InvalidInput(std::string(op) + ": segment count must be >= 1");
}

}  // namespace

Word::Word(std::vector<Step> steps) : steps_(std::move(steps)) {
  for (const auto& s : steps_) check_step(s);
}

void Word::push_back(Step step) {
  check_step(step);
  steps_.push_back(step);
}

void Word::append(const Word& other) {
  steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
}

double Word::total_duration(int term) const {
  double sum = 0.0;
  for (const auto& s : steps_)
    if (s.term == term) sum += s.duration;
  return sum;
}

int Word::max_term() const {
  int m = 0;
  for (const auto& s : steps_) m = std::max(m, s.term);
  return m;
}

Word Word::reversed() const {
  Word out;
  out.steps_.assign(steps_.rbegin(), steps_.rend());
  return out;
}

Word Word::merged() const {
  Word out;
  for (const auto& s : steps_) {
    if (!out.steps_.empty() && out.steps_.back().term == s.term) {
      out.steps_.back().duration += s.duration;
    } else {
      out.steps_.push_back(s);
    }
  }
  return out;
}

UnitaryMixture::UnitaryMixture(std::vector<MixtureEntry> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidInput("UnitaryMixture: no entries");
  double sum = 0.0;
  for (const auto& e : entries_) {
    if (!(e.probability > 0.0) || e.probability > 1.0) {
      throw InvalidInput("UnitaryMixture: probabilities must lie in (0, 1]");
    }
    sum += e.probability;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    std::ostringstream msg;
    msg << "UnitaryMixture: probabilities sum to " << sum << ", not 1";
    throw InvalidInput(msg.str());
  }
}

ComplexMatrix word_unitary(const TermSet& ts, const Word& w) {
  ComplexMatrix u = ComplexMatrix::Identity(ts.dim(), ts.dim());
  // Long schedules repeat a handful of (term, duration) pairs.
  std::map<std::pair<int, double>, ComplexMatrix> cache;
  for (const auto& s : w.steps()) {
    auto key = std::make_pair(s.term, s.duration);
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, expm_hermitian(ts.term(s.term), s.duration)).first;
    }
    u = it->second * u;
  }
  return u;
}

Word trotter_word(const TermSet& ts, double dt, int segments) {
  check_dt(dt, segments, "trotter_word");
  Word w;
  for (int k = 0; k < segments; ++k)
    for (int j = 1; j <= ts.size(); ++j) w.push_back({j, dt});
  return w;
}

Word strang_word(const TermSet& ts, double dt, int segments, StrangMerge merge) {
  check_dt(dt, segments, "strang_word");
  const double half = dt / 2.0;
  Word w;
  for (int k = 0; k < segments; ++k) {
    for (int j = 1; j <= ts.size(); ++j) w.push_back({j, half});
    for (int j = ts.size(); j >= 1; --j) w.push_back({j, half});
  }
  return merge == StrangMerge::kMerged ? w.merged() : w;
}

UnitaryMixture alg1_stage_mixture(const TermSet& ts, double dt) {
  check_dt(dt, 1, "alg1_stage_mixture");
  const int m = ts.size();
  std::vector<MixtureEntry> entries;
  for (int j = 1; j <= m; ++j)
    entries.push_back({1.0 / m, Word({{j, dt}})});
  return UnitaryMixture(std::move(entries));
}

UnitaryMixture alg2_stage_mixture(const TermSet& ts, double dt) {
  check_dt(dt, 1, "alg2_stage_mixture");
  const int m = ts.size();
  if (m > kMaxPermutationTerms) {
    throw InvalidInput("alg2_stage_mixture: m = " + std::to_string(m) +
                       " exceeds 6 (m! entries); use sample_schedule on "
                       "random permutations instead");
  }
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 1);
  std::vector<MixtureEntry> entries;
  double count = 1.0;
  for (int k = 2; k <= m; ++k) count *= k;
  do {
    Word w;
    for (int j : order) w.push_back({j, dt});
    entries.push_back({1.0 / count, std::move(w)});
  } while (std::next_permutation(order.begin(), order.end()));
  return UnitaryMixture(std::move(entries));
}

UnitaryMixture mixture_power(const UnitaryMixture& mix, int stages,
                             std::size_t max_entries) {
  if (stages < 1) throw InvalidInput("mixture_power: stages must be >= 1");
  double projected = 1.0;
  for (int s = 0; s < stages; ++s) projected *= static_cast<double>(mix.size());
  if (projected > static_cast<double>(max_entries)) {
    std::ostringstream msg;
    msg << "mixture_power: " << mix.size() << "^" << stages
        << " entries exceeds the cap of " << max_entries;
    throw InvalidInput(msg.str());
  }
  std::vector<MixtureEntry> current = mix.entries();
  for (int s = 1; s < stages; ++s) {
    std::vector<MixtureEntry> next;
    next.reserve(current.size() * mix.size());
    for (const auto& first : current) {
      for (const auto& second : mix.entries()) {
        Word w = first.word;
        w.append(second.word);
        next.push_back({first.probability * second.probability, std::move(w)});
      }
    }
    current = std::move(next);
  }
  // Renormalize away accumulated rounding in the products.
  double sum = 0.0;
  for (const auto& e : current) sum += e.probability;
  for (auto& e : current) e.probability /= sum;
  return UnitaryMixture(std::move(current));
}

Word sample_schedule(const UnitaryMixture& mix, int stages, std::uint64_t seed) {
  if (stages < 1) throw InvalidInput("sample_schedule: stages must be >= 1");
  Rng rng(seed);
  Word out;
  for (int s = 0; s < stages; ++s) {
    const double u = rng.uniform();
    double acc = 0.0;
    const MixtureEntry* pick = &mix.entries().back();
    for (const auto& e : mix.entries()) {
      acc += e.probability;
      if (u < acc) {
        pick = &e;
        break;
      }
    }
    out.append(pick->word);
  }
  return out;
}

UnitaryMixture deterministic_mixture(Word w) {
  std::vector<MixtureEntry> entries;
  entries.push_back({1.0, std::move(w)});
  return UnitaryMixture(std::move(entries));
}

nlohmann::json to_json(const Word& w) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : w.steps()) steps.push_back({s.term, s.duration});
  return {{"steps", steps}};
}

Word word_from_json(const nlohmann::json& j) {
  try {
    Word w;
    for (const auto& s : j.at("steps")) {
      if (!s.is_array() || s.size() != 2)
        throw InvalidInput("Word JSON: each step must be [index, duration]");
      w.push_back({s[0].get<int>(), s[1].get<double>()});
    }
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("Word JSON: ") + e.what());
  }
}

nlohmann::json to_json(const UnitaryMixture& mix) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : mix.entries())
    entries.push_back({{"p", e.probability}, {"word", to_json(e.word)}});
  return {{"entries", entries}};
}

UnitaryMixture mixture_from_json(const nlohmann::json& j) {
  try {
    std::vector<MixtureEntry> entries;
    for (const auto& e : j.at("entries"))
      entries.push_back({e.at("p").get<double>(), word_from_json(e.at("word"))});
    return UnitaryMixture(std::move(entries));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("Mixture JSON: ") + e.what());
  }
}

}  // namespace pfsim
