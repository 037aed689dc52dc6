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

#include "cqmkit/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cqmkit/annealing.hpp"
#include "cqmkit/catalog.hpp"
#include "cqmkit/choice_model.hpp"
#include "cqmkit/decimal.hpp"
#include "cqmkit/exact_solver.hpp"
#include "cqmkit/exceptions.hpp"
#include "cqmkit/model_json.hpp"
#include "cqmkit/qubo.hpp"
#include "cqmkit/remote.hpp"

namespace cqmkit {

namespace {

using nlohmann::json;

struct SpecOptions {
    std::string minimize;
    std::string maximize;
    std::vector<std::string> bounds;
    std::vector<std::string> scales;

    bool given() const { return !minimize.empty() || !maximize.empty() || !bounds.empty(); }
};

struct Problem {
    CqmModel model;
    std::optional<ChoiceCatalog> catalog;
    ChoiceSpec spec;
};

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

bool looks_like_json(std::string_view text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

CatalogOptions catalog_options(const SpecOptions& opts) {
    CatalogOptions options;
    for (const auto& entry : opts.scales) {
        auto eq = entry.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw InputError("cannot parse scale '" + entry + "'; expected attr=factor");
        }
        std::int64_t factor = 0;
        try {
            factor = std::stoll(entry.substr(eq + 1));
        } catch (const std::exception&) {
            factor = 0;
        }
        if (factor < 1) throw InputError("scale '" + entry + "' must be a positive integer");
        options.scales[entry.substr(0, eq)] = factor;
    }
    return options;
}

ChoiceSpec spec_from_options(const SpecOptions& opts) {
    if (!opts.minimize.empty() && !opts.maximize.empty()) {
        throw InputError("--minimize and --maximize are mutually exclusive");
    }
    ChoiceSpec spec;
    if (!opts.maximize.empty()) {
        spec.objective_attribute = opts.maximize;
        spec.direction = Direction::maximize;
    } else if (!opts.minimize.empty()) {
        spec.objective_attribute = opts.minimize;
    }
    for (const auto& b : opts.bounds) spec.bounds.push_back(parse_bound(b));
    return spec;
}

Problem load_problem(const std::string& path, const SpecOptions& opts, std::istream& in) {
    const std::string text = read_input(path, in);
    Problem p;
    if (looks_like_json(text)) {
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::parse_error& e) {
            throw InputError("'" + path + "' is not valid JSON: " + e.what());
        }
        if (doc.contains("catalog")) p.catalog = catalog_from_json(doc.at("catalog"));
        if (doc.contains("choice")) p.spec = spec_from_json(doc.at("choice"));
        if (p.catalog && opts.given()) {
            p.spec = spec_from_options(opts);
            p.model = build_model(*p.catalog, p.spec);
        } else {
            if (opts.given()) {
                throw InputError("spec flags need a CSV catalog or a model document with a catalog");
            }
            p.model = model_from_json(doc);
        }
        return p;
    }
    p.catalog = parse_catalog(text, catalog_options(opts));
    p.spec = spec_from_options(opts);
    p.model = build_model(*p.catalog, p.spec);
    return p;
}

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", value);
    return buf;
}

// Fixed decimals for constraints with a power-of-ten scale; %g otherwise.
std::string format_at_scale(double value, std::int64_t scale) {
    if (scale > 1) {
        return format_minor_units(std::llround(value * static_cast<double>(scale)), scale);
    }
    return format_number(value);
}

std::int64_t constraint_scale(const CqmModel& model, const std::string& name) {
    const auto* c = model.find_constraint(name);
    return c ? c->scale : 1;
}

std::string objective_display(const Problem& p, double objective) {
    if (p.catalog) {
        if (auto a = p.catalog->attribute_index(p.spec.objective_attribute)) {
            const auto& attr = p.catalog->attributes()[*a];
            return format_minor_units(std::llround(objective * static_cast<double>(attr.scale)),
                                      attr.scale);
        }
    }
    return format_number(objective);
}

json violations_json(const CqmModel& model, const std::vector<Violation>& violations) {
    json out = json::array();
    for (const auto& v : violations) {
        out.push_back({{"constraint", v.constraint},
                       {"violation", v.magnitude},
                       {"display", format_at_scale(v.magnitude,
                                                   constraint_scale(model, v.constraint))}});
    }
    return out;
}

json sample_json(const Problem& p, const Sample& s) {
    json selected = json::array();
    for (Index v : s.assignment.ones()) selected.push_back(p.model.label(v));
    json doc{{"bits", s.assignment.to_string()},
             {"selected", std::move(selected)},
             {"energy", s.energy},
             {"num_occurrences", s.num_occurrences},
             {"feasible", s.feasible},
             {"violations", violations_json(p.model, s.violations)}};
    if (p.catalog) {
        auto report = describe_solution(*p.catalog, p.model, s, p.spec.direction);
        doc["report"] = report_to_json(report);
        doc["report"]["objective_display"] = objective_display(p, report.objective);
    }
    return doc;
}

std::string violation_lines(const CqmModel& model, const std::vector<Violation>& violations) {
    std::string out;
    for (const auto& v : violations) {
        out += "  " + v.constraint + " violated by " +
               format_at_scale(v.magnitude, constraint_scale(model, v.constraint)) + "\n";
    }
    return out;
}

std::string generic_table(const Problem& p, const std::vector<const Sample*>& samples) {
    std::ostringstream out;
    out << "energy        count  feasible  selected\n";
    for (const auto* s : samples) {
        char head[64];
        std::snprintf(head, sizeof(head), "%-12s  %5llu  %-8s ", format_number(s->energy).c_str(),
                      static_cast<unsigned long long>(s->num_occurrences),
                      s->feasible ? "yes" : "no");
        out << head;
        for (Index v : s->assignment.ones()) out << " " << p.model.label(v) << ";";
        out << "\n";
    }
    return out.str();
}

std::string samples_table(const Problem& p, const std::vector<const Sample*>& samples) {
    if (!p.catalog) return generic_table(p, samples);
    std::vector<MealReport> reports;
    for (const auto* s : samples) {
        reports.push_back(describe_solution(*p.catalog, p.model, *s, p.spec.direction));
    }
    return render_meal_table(*p.catalog, reports);
}

// ---------------------------------------------------------------- build

struct BuildOptions {
    std::string input;
    std::string output;
    std::string emit = "model";
    double penalty_multiplier = 2.0;
    double penalty_weight = 0.0;
};

PenaltyPolicy penalty_policy(double multiplier, double weight) {
    return weight > 0.0 ? PenaltyPolicy::fixed(weight) : PenaltyPolicy::automatic(multiplier);
}

int cmd_build(const BuildOptions& opts, const SpecOptions& spec_opts, std::istream& in,
              std::ostream& out, std::ostream& err) {
    Problem p = load_problem(opts.input, spec_opts, in);
    std::string text;
    if (opts.emit == "model") {
        json doc = model_to_json(p.model);
        if (p.catalog) {
            doc["catalog"] = catalog_to_json(*p.catalog);
            doc["choice"] = spec_to_json(p.spec);
        }
        text = doc.dump(2) + "\n";
    } else {
        QuboModel qubo = to_qubo(p.model, penalty_policy(opts.penalty_multiplier, opts.penalty_weight));
        for (const auto& w : qubo.warnings) err << "warning: " << w.constraint << ": " << w.message << "\n";
        text = opts.emit == "qubo" ? qubo_to_json(qubo).dump(2) + "\n" : qubo_to_coo(qubo);
    }

    if (opts.output.empty() || opts.output == "-") {
        out << text;
    } else {
        std::ofstream file(opts.output, std::ios::binary);
        if (!file) throw InputError("cannot write '" + opts.output + "'");
        file << text;
    }
    err << "built " << p.model.num_variables() << " variables, " << p.model.num_constraints()
        << " constraints\n";
    return kExitFeasible;
}

// ---------------------------------------------------------------- solve

struct SolveOptions {
    std::string input;
    std::string backend = "exact";
    std::string format = "table";
    std::size_t top_k = 10;
    std::size_t show = 10;
    bool timing = false;
    SolveParams params;
    double time_limit = 5.0;
    double penalty_multiplier = 2.0;
    double penalty_weight = 0.0;
    std::string endpoint;
    std::string token;
};

int cmd_solve(const SolveOptions& opts, const SpecOptions& spec_opts, std::istream& in,
              std::ostream& out, std::ostream& err) {
    Problem p = load_problem(opts.input, spec_opts, in);
    SolveParams params = opts.params;
    params.time_limit = std::chrono::duration<double>(opts.time_limit);
    params.validate();

    SampleSet set;
    if (opts.backend == "exact") {
        set = solve_exact(p.model, opts.top_k);
    } else if (opts.backend == "sa") {
        QuboModel qubo = to_qubo(p.model, penalty_policy(opts.penalty_multiplier, opts.penalty_weight));
        for (const auto& w : qubo.warnings) err << "warning: " << w.constraint << ": " << w.message << "\n";
        set = solve_sa(qubo, p.model, params);
    } else {
        if (opts.endpoint.empty()) throw InputError("the remote backend needs --endpoint");
        std::optional<std::string> token;
        if (!opts.token.empty()) token = opts.token;
        set = solve_remote(p.model, opts.endpoint, params, token);
    }

    const bool feasible = set.has_feasible();
    const Sample* least = feasible ? nullptr : set.least_violating();

    if (opts.format == "json") {
        json samples = json::array();
        for (const auto& s : set.samples) samples.push_back(sample_json(p, s));
        json doc{{"backend", set.backend_name},
                 {"total_reads", set.total_reads},
                 {"num_samples", set.samples.size()},
                 {"feasible", feasible},
                 {"samples", std::move(samples)}};
        if (feasible) {
            doc["best_energy"] = set.samples.front().energy;
            doc["num_optimal"] = set.optimal_samples().size();
        }
        if (least) doc["least_violating"] = sample_json(p, *least);
        if (opts.timing) doc["wall_time_s"] = set.wall_time.count();
        out << doc.dump(2) << "\n";
        return feasible ? kExitFeasible : kExitInfeasible;
    }

    char timing[64];
    std::snprintf(timing, sizeof(timing), "%.3f s", set.wall_time.count());
    out << "backend: " << set.backend_name << "  total reads: " << set.total_reads
        << "  distinct samples: " << set.samples.size() << "  wall time: " << timing << "\n";
    if (set.empty()) {
        out << "no samples returned\n";
        return kExitInfeasible;
    }
    if (feasible) {
        auto optimal = set.optimal_samples();
        out << "best feasible energy: " << objective_display(p, set.samples.front().energy)
            << " (" << optimal.size() << " optimal sample" << (optimal.size() == 1 ? "" : "s")
            << ")\n\n";
        std::vector<const Sample*> shown;
        for (const auto& s : set.samples) {
            if (shown.size() >= opts.show) break;
            shown.push_back(&s);
        }
        out << samples_table(p, shown);
        if (set.samples.size() > shown.size()) {
            out << "(" << set.samples.size() - shown.size() << " more not shown; use --show)\n";
        }
        return kExitFeasible;
    }

    out << "no feasible solution found\n\nleast violating sample:\n";
    out << samples_table(p, {least});
    out << violation_lines(p.model, least->violations);
    return kExitInfeasible;
}

// ---------------------------------------------------------------- check

struct CheckOptions {
    std::string input;
    std::string assignment_file;
    std::vector<std::string> select;
    std::string format = "table";
};

Index resolve_label(const Problem& p, const std::string& label) {
    if (auto v = p.model.find_variable(label)) return *v;
    if (p.catalog) {
        std::optional<Index> match;
        for (std::size_t i = 0; i < p.catalog->size(); ++i) {
            const auto& item = p.catalog->items()[i];
            if (item.group + "/" + item.name == label) return i;
            if (item.name == label) {
                if (match) throw InputError("label '" + label + "' is ambiguous; use group/name");
                match = i;
            }
        }
        if (match) return *match;
    }
    throw InputError("unknown label '" + label + "'");
}

std::string trim_copy(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Assignment read_assignment(const Problem& p, const CheckOptions& opts) {
    const std::size_t n = p.model.num_variables();
    std::vector<Index> ones;
    for (const auto& label : opts.select) ones.push_back(resolve_label(p, label));

    if (!opts.assignment_file.empty()) {
        std::ifstream file(opts.assignment_file);
        if (!file) throw InputError("cannot read '" + opts.assignment_file + "'");
        std::string content((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());

        std::string bits;
        bool only_bits = true;
        for (char c : content) {
            if (c == '0' || c == '1') {
                bits.push_back(c);
            } else if (!std::isspace(static_cast<unsigned char>(c)) && c != ',') {
                only_bits = false;
                break;
            }
        }
        if (only_bits && !bits.empty()) {
            if (bits.size() != n) {
                throw InputError("bit vector has " + std::to_string(bits.size()) +
                                 " entries, expected " + std::to_string(n));
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (bits[i] == '1') ones.push_back(i);
            }
        } else {
            std::istringstream lines(content);
            std::string line;
            while (std::getline(lines, line)) {
                line = trim_copy(line);
                if (line.empty() || line.front() == '#') continue;
                ones.push_back(resolve_label(p, line));
            }
        }
    }
    return Assignment::with_ones(n, ones);
}

int cmd_check(const CheckOptions& opts, const SpecOptions& spec_opts, std::istream& in,
              std::ostream& out) {
    Problem p = load_problem(opts.input, spec_opts, in);
    if (opts.assignment_file.empty() && opts.select.empty()) {
        throw InputError("check needs --assignment FILE or --select LABEL");
    }
    Assignment x = read_assignment(p, opts);
    FeasibilityReport report = is_feasible(p.model, x);
    Sample sample = make_sample(p.model, x);

    if (opts.format == "json") {
        json verdicts = json::array();
        for (std::size_t c = 0; c < p.model.num_constraints(); ++c) {
            const auto& con = p.model.constraints()[c];
            const auto& v = report.per_constraint[c];
            verdicts.push_back({{"constraint", con.name},
                                {"kind", std::string(to_string(con.kind))},
                                {"satisfied", v.satisfied},
                                {"lhs", v.lhs},
                                {"violation", v.violation},
                                {"violation_display", format_at_scale(v.violation, con.scale)}});
        }
        json doc = sample_json(p, sample);
        doc["constraints"] = std::move(verdicts);
        out << doc.dump(2) << "\n";
        return report.feasible ? kExitFeasible : kExitInfeasible;
    }

    if (p.catalog) out << samples_table(p, {&sample}) << "\n";
    out << "objective: " << objective_display(p, sample.energy) << "\n";
    std::size_t width = 10;
    for (const auto& con : p.model.constraints()) width = std::max(width, display_width(con.name));
    for (std::size_t c = 0; c < p.model.num_constraints(); ++c) {
        const auto& con = p.model.constraints()[c];
        const auto& v = report.per_constraint[c];
        out << con.name << std::string(width - display_width(con.name) + 2, ' ')
            << (v.satisfied ? "ok" : "VIOLATED");
        if (!v.satisfied) out << " by " << format_at_scale(v.violation, con.scale);
        out << "\n";
    }
    out << (report.feasible ? "feasible\n" : "infeasible\n");
    return report.feasible ? kExitFeasible : kExitInfeasible;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateOptions {
    std::string input;
    std::string dump;
    std::uint64_t max_combinations = ExactLimits{}.max_cartesian;
};

int cmd_enumerate(const EnumerateOptions& opts, const SpecOptions& spec_opts, std::istream& in,
                  std::ostream& out) {
    Problem p = load_problem(opts.input, spec_opts, in);
    OneHotStructure structure = one_hot_structure(p.model);
    if (structure.groups.empty()) throw InputError("model has no one-hot groups to enumerate");
    const std::uint64_t count = structure.cartesian_size();
    if (count > opts.max_combinations) {
        throw SizeLimitError("one-hot combination count " + std::to_string(count) +
                             " exceeds the cap of " + std::to_string(opts.max_combinations));
    }
    out << "one-hot combinations: " << count << "\n";
    if (opts.dump.empty()) return kExitFeasible;

    struct Row {
        std::vector<Index> active;
        std::vector<std::int64_t> key;  // catalog minor units, objective first
        double energy;
        bool feasible;
    };
    std::vector<Row> rows;
    rows.reserve(count);
    std::vector<std::size_t> attribute_order;
    if (p.catalog) {
        auto objective = p.catalog->attribute_index(p.spec.objective_attribute).value_or(0);
        attribute_order.push_back(objective);
        for (std::size_t a = 0; a < p.catalog->attributes().size(); ++a) {
            if (a != objective) attribute_order.push_back(a);
        }
    }
    std::uint64_t visited = 0;
    for_each_one_hot_candidate(structure, [&](std::span<const Index> active) {
        ++visited;
        Assignment x = Assignment::with_ones(p.model.num_variables(), active);
        Row row{{active.begin(), active.end()}, {}, evaluate(p.model.objective(), x),
                is_feasible(p.model, x).feasible};
        for (auto a : attribute_order) {
            std::int64_t total = 0;
            for (auto i : active) total += p.catalog->items()[i].values[a];
            row.key.push_back(total);
        }
        if (p.spec.direction == Direction::maximize && !row.key.empty()) row.key[0] = -row.key[0];
        rows.push_back(std::move(row));
    });
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (!a.key.empty()) return a.key < b.key;
        return a.energy < b.energy;
    });

    std::ostringstream csv;
    auto field = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q.push_back('"');
            q.push_back(c);
        }
        return q + "\"";
    };
    csv << "rank";
    if (p.catalog) {
        for (const auto& g : p.catalog->groups()) csv << "," << field(g);
        for (auto a : attribute_order) csv << "," << field(p.catalog->attributes()[a].name);
    } else {
        csv << ",selected,energy";
    }
    csv << ",feasible\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        csv << r + 1;
        if (p.catalog) {
            for (std::size_t g = 0; g < p.catalog->groups().size(); ++g) {
                std::string name;
                for (auto i : row.active) {
                    if (p.catalog->group_of(i) == g) name = p.catalog->items()[i].name;
                }
                csv << "," << field(name);
            }
            for (std::size_t k = 0; k < attribute_order.size(); ++k) {
                const auto& attr = p.catalog->attributes()[attribute_order[k]];
                std::int64_t total = row.key[k];
                if (k == 0 && p.spec.direction == Direction::maximize) total = -total;
                csv << "," << format_minor_units(total, attr.scale);
            }
        } else {
            std::string selected;
            for (auto i : row.active) selected += (selected.empty() ? "" : ";") + p.model.label(i);
            csv << "," << field(selected) << "," << format_number(row.energy);
        }
        csv << "," << (row.feasible ? "yes" : "no") << "\n";
    }

    if (opts.dump == "-") {
        out << csv.str();
    } else {
        std::ofstream file(opts.dump, std::ios::binary);
        if (!file) throw InputError("cannot write '" + opts.dump + "'");
        file << csv.str();
        out << "wrote " << visited << " combinations to " << opts.dump << "\n";
    }
    return kExitFeasible;
}

void add_spec_options(CLI::App* cmd, SpecOptions& opts) {
    cmd->add_option("--minimize", opts.minimize, "Attribute to minimise (default: price)");
    cmd->add_option("--maximize", opts.maximize, "Attribute to maximise");
    cmd->add_option("--bound", opts.bounds, "Bound such as \"calories<=700\"; repeatable")
        ->take_all();
    cmd->add_option("--scale", opts.scales, "Minor-unit factor such as \"weight=1000\"; repeatable")
        ->take_all();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"cqmkit: build and solve one-hot constrained quadratic models from CSV catalogs"};
    app.require_subcommand(1);

    SpecOptions spec_opts;

    BuildOptions build;
    auto* build_cmd = app.add_subcommand("build", "Write the model (or its QUBO) for a catalog");
    build_cmd->add_option("input", build.input, "CSV catalog or model JSON ('-' for stdin)")
        ->required();
    build_cmd->add_option("-o,--output", build.output, "Output file (default: stdout)");
    build_cmd->add_option("--emit", build.emit, "model, qubo or coo")
        ->check(CLI::IsMember({"model", "qubo", "coo"}));
    build_cmd->add_option("--penalty-multiplier", build.penalty_multiplier,
                          "Auto penalty multiplier (>= 1)");
    build_cmd->add_option("--penalty-weight", build.penalty_weight,
                          "Fixed penalty weight; overrides the multiplier");
    add_spec_options(build_cmd, spec_opts);

    SolveOptions solve;
    auto* solve_cmd = app.add_subcommand("solve", "Solve with the exact, sa or remote backend");
    solve_cmd->add_option("input", solve.input, "CSV catalog or model JSON ('-' for stdin)")
        ->required();
    solve_cmd->add_option("--backend", solve.backend, "exact, sa or remote")
        ->check(CLI::IsMember({"exact", "sa", "remote"}));
    solve_cmd->add_option("--format", solve.format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    solve_cmd->add_option("--top-k", solve.top_k, "Exact backend: best samples to keep")
        ->check(CLI::PositiveNumber);
    solve_cmd->add_option("--show", solve.show, "Table rows to print");
    solve_cmd->add_flag("--timing", solve.timing, "Include wall time in JSON output");
    solve_cmd->add_option("--reads", solve.params.num_reads, "Number of reads");
    solve_cmd->add_option("--seed", solve.params.seed, "Random seed");
    solve_cmd->add_option("--sweeps", solve.params.sweeps, "Annealing sweeps per read");
    solve_cmd->add_option("--beta-start", solve.params.beta_start, "Initial inverse temperature");
    solve_cmd->add_option("--beta-end", solve.params.beta_end, "Final inverse temperature");
    solve_cmd->add_option("--workers", solve.params.num_workers, "Threads (0: all cores)");
    solve_cmd->add_option("--time-limit", solve.time_limit, "Remote time limit in seconds");
    solve_cmd->add_option("--penalty-multiplier", solve.penalty_multiplier,
                          "Auto penalty multiplier (>= 1)");
    solve_cmd->add_option("--penalty-weight", solve.penalty_weight,
                          "Fixed penalty weight; overrides the multiplier");
    solve_cmd->add_option("--endpoint", solve.endpoint, "Remote solver base URL")
        ->envname("CQMKIT_ENDPOINT");
    solve_cmd->add_option("--token", solve.token, "Remote bearer token")->envname("CQMKIT_TOKEN");
    add_spec_options(solve_cmd, spec_opts);

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "Report constraint verdicts for an assignment");
    check_cmd->add_option("input", check.input, "CSV catalog or model JSON ('-' for stdin)")
        ->required();
    check_cmd->add_option("--assignment", check.assignment_file,
                          "File of item labels (one per line) or a bit vector");
    check_cmd->add_option("--select", check.select, "Selected item label; repeatable")->take_all();
    check_cmd->add_option("--format", check.format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    add_spec_options(check_cmd, spec_opts);

    EnumerateOptions enumerate;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "Count (and optionally list) every one-hot combination");
    enumerate_cmd->add_option("input", enumerate.input, "CSV catalog or model JSON ('-' for stdin)")
        ->required();
    enumerate_cmd->add_option("--dump", enumerate.dump,
                              "Write a CSV ranking of every combination ('-' for stdout)");
    enumerate_cmd->add_option("--max-combinations", enumerate.max_combinations,
                              "Size cap for the enumeration");
    add_spec_options(enumerate_cmd, spec_opts);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInputError;
    }

    try {
        if (*build_cmd) return cmd_build(build, spec_opts, in, out, err);
        if (*solve_cmd) return cmd_solve(solve, spec_opts, in, out, err);
        if (*check_cmd) return cmd_check(check, spec_opts, in, out);
        if (*enumerate_cmd) return cmd_enumerate(enumerate, spec_opts, in, out);
    } catch (const SizeLimitError& e) {
        err << "error: " << e.what() << "\n";
        return kExitSizeLimit;
    } catch (const BackendError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBackendError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace cqmkit
