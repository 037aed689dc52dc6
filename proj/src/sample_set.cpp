// Copyright 2026 The cqmkit Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "cqmkit/sample_set.hpp"

#include <algorithm>
#include <map>

namespace cqmkit {

double Sample::total_violation() const {
    double total = 0.0;
    for (const auto& v : violations) total += v.magnitude;
    return total;
}

Sample make_sample(const CqmModel& model, const Assignment& x, std::uint64_t count) {
    Sample s;
    auto report = is_feasible(model, x);
    s.assignment = x;
    s.energy = evaluate(model.objective(), x);
    s.num_occurrences = count;
    s.feasible = report.feasible;
    for (std::size_t c = 0; c < report.per_constraint.size(); ++c) {
        if (!report.per_constraint[c].satisfied) {
            s.violations.push_back(
                {model.constraints()[c].name, report.per_constraint[c].violation});
        }
    }
    return s;
}

bool canonical_less(const Sample& a, const Sample& b) {
    if (a.feasible != b.feasible) return a.feasible;
    if (a.energy != b.energy) return a.energy < b.energy;
    return a.assignment < b.assignment;
}

const Sample* SampleSet::best_feasible() const {
    return has_feasible() ? &samples.front() : nullptr;
}

const Sample* SampleSet::least_violating() const {
    const Sample* best = nullptr;
    for (const auto& s : samples) {
        if (best == nullptr || s.total_violation() < best->total_violation()) best = &s;
    }
    return best;
}

std::vector<const Sample*> SampleSet::optimal_samples() const {
    std::vector<const Sample*> out;
    for (const auto& s : samples) {
        if (!s.feasible || s.energy != samples.front().energy) break;
        out.push_back(&s);
    }
    return out;
}

SampleSet aggregate(const CqmModel& model, std::span<const RawSample> raw,
                    std::string backend_name) {
    std::map<Assignment, std::uint64_t> counts;
    for (const auto& [x, count] : raw) {
        if (count > 0) counts[x] += count;
    }

    SampleSet set;
    set.backend_name = std::move(backend_name);
    set.samples.reserve(counts.size());
    for (const auto& [x, count] : counts) {
        set.samples.push_back(make_sample(model, x, count));
        set.total_reads += count;
    }
    std::sort(set.samples.begin(), set.samples.end(), canonical_less);
    return set;
}

nlohmann::json sampleset_to_json(const SampleSet& set, const CqmModel& model,
                                 bool include_timing) {
    using nlohmann::json;
    json samples = json::array();
    for (const auto& s : set.samples) {
        json selected = json::array();
        for (Index v : s.assignment.ones()) selected.push_back(model.label(v));
        json violations = json::array();
        for (const auto& v : s.violations) {
            violations.push_back({{"constraint", v.constraint}, {"violation", v.magnitude}});
        }
        samples.push_back({{"bits", s.assignment.to_string()},
                           {"selected", std::move(selected)},
                           {"energy", s.energy},
                           {"num_occurrences", s.num_occurrences},
                           {"feasible", s.feasible},
                           {"violations", std::move(violations)}});
    }
    json doc{{"backend", set.backend_name},
             {"total_reads", set.total_reads},
             {"num_samples", set.samples.size()},
             {"samples", std::move(samples)}};
    if (include_timing) doc["wall_time_s"] = set.wall_time.count();
    return doc;
}

}  // namespace cqmkit
