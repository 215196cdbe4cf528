/*
 * Copyright 2026 The bosonpd developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bosonpd/characters.hpp"
#include "bosonpd/debug.hpp"
#include "bosonpd/errors.hpp"
#include "bosonpd/kernels.hpp"
#include "bosonpd/matrix.hpp"
#include "bosonpd/models.hpp"
#include "bosonpd/montecarlo.hpp"
#include "bosonpd/probability.hpp"
#include "bosonpd/rational.hpp"
#include "bosonpd/version.hpp"

namespace {

using namespace bosonpd;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitInvariant = 4;

struct SeedOption {
    std::optional<std::uint64_t> value;

    std::uint64_t resolve() {
        if (!value) {
            std::random_device rd;
            value = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
            std::cerr << "seed: " << *value << " (drawn from entropy; pass --seed to reproduce)\n";
        }
        return *value;
    }
};

struct MatrixOptions {
    std::string unitary;      // "identity" or empty
    std::string unitary_file; // JSON nested arrays
    std::string ensemble = "haar";
    int M = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--unitary", unitary, "'identity' for the identity interferometer");
        cmd->add_option("--unitary-file", unitary_file,
                        "JSON file with nested arrays of [re, im] pairs");
        cmd->add_option("--ensemble", ensemble, "haar|ginibre (used when sampling a matrix)")
            ->check(CLI::IsMember({"haar", "ginibre"}));
        cmd->add_option("--M", M, "mode count of the interferometer");
    }

    ComplexMatrix resolve(int min_modes, SeedOption& seed) const {
        const int modes = M > 0 ? M : min_modes;
        if (modes < min_modes)
            throw ValidationError("--M is smaller than the number of occupied ports");
        if (!unitary_file.empty()) return load_matrix(unitary_file);
        if (unitary == "identity") return ComplexMatrix::Identity(modes, modes);
        if (!unitary.empty())
            throw ValidationError("--unitary only understands 'identity'; use --unitary-file");
        const std::uint64_t s = seed.resolve();
        if (ensemble_from_string(ensemble) == Ensemble::haar) return haar_unitary(modes, s, 0);
        return ginibre(modes, modes, 1.0 / modes, s, 0);
    }
};

struct XValue {
    std::string text = "0";
    double value = 0.0;
    std::optional<Rational> exact;

    void parse(const std::string& raw) {
        text = raw;
        if (auto r = parse_rational(raw)) {
            exact = *r;
            value = to_double(*r);
        } else {
            try {
                std::size_t used = 0;
                value = std::stod(raw, &used);
                if (used != raw.size()) throw std::invalid_argument(raw);
            } catch (const std::exception&) {
                throw ValidationError("cannot parse x value '" + raw + "' (use p/q or a decimal)");
            }
        }
        if (!(value >= 0.0 && value <= 1.0))
            throw ValidationError("x must lie in [0, 1], got " + raw);
    }
};

std::vector<int> parse_ports(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        out.push_back(std::stoi(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path);
    out << content;
}

json base_header(const std::string& kind, std::uint64_t seed) {
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["kind"] = kind;
    j["version"] = kVersion;
    j["seed"] = seed;
    return j;
}

void emit(const json& doc, const std::string& output) {
    if (output.empty())
        std::cout << doc.dump(2) << "\n";
    else
        write_file(output, doc.dump(2) + "\n");
}

void emit_report(const ExperimentReport& report, const std::string& output,
                 const std::string& format) {
    if (output.empty() && format == "json") {
        std::cout << report.to_json() << "\n";
        return;
    }
    const std::string base = output.empty() ? report.kind : output;
    write_file(base + ".json", report.to_json() + "\n");
    if (format == "csv" || format == "svg") write_file(base + ".csv", report.histogram_csv());
    if (format == "svg") write_file(base + ".svg", report.histogram_svg());
    std::cerr << "wrote " << base << ".json"
              << (format == "csv" || format == "svg" ? " and histogram files" : "") << "\n";
}

int dispatch(int argc, char** argv) {
    CLI::App app{"bosonpd: partial-distinguishability models of noisy boson sampling"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));
    app.add_flag_callback(
           "-v,--verbose", [] { set_debug_logging(true); },
           "log numerical diagnostics (e.g. truncated imaginary residues) to stderr")
        ->trigger_on_parse();
    app.footer("Environment: BOSONPD_THREADS caps the worker threads used for "
               "distribution enumeration.");

    // ---- probability ----------------------------------------------------
    auto* p_cmd = app.add_subcommand("probability", "evaluate one output probability");
    int p_N = 0, p_R = -1, p_K = -1;
    std::string p_x = "1", p_inputs, p_outputs, p_route = "auto", p_output;
    SeedOption p_seed;
    MatrixOptions p_mat;
    p_cmd->add_option("--N", p_N, "number of bosons")->required();
    p_cmd->add_option("--x", p_x, "distinguishability parameter (p/q or decimal)");
    p_cmd->add_option("--R", p_R, "interference cutoff order (omit for the full model)");
    p_cmd->add_option("--K", p_K, "block size for the rearranged route");
    p_cmd->add_option("--inputs", p_inputs, "comma-separated input ports (default 0..N-1)");
    p_cmd->add_option("--outputs", p_outputs, "comma-separated output ports (default 0..N-1)");
    p_cmd->add_option("--route", p_route, "auto|bruteforce|expansion|convex|rearranged")
        ->check(CLI::IsMember({"auto", "bruteforce", "expansion", "convex", "rearranged"}));
    p_cmd->add_option("--seed", p_seed.value, "seed for sampled interferometers");
    p_cmd->add_option("--output", p_output, "write the JSON report here instead of stdout");
    p_mat.attach(p_cmd);

    // ---- expansion-check -------------------------------------------------
    auto* e_cmd = app.add_subcommand("expansion-check",
                                     "cross-validate all probability routes on random multiports");
    int e_N = 4, e_R = 2, e_K = -1, e_trials = 5;
    std::string e_x = "0.3", e_output;
    SeedOption e_seed;
    e_cmd->add_option("--N", e_N, "number of bosons");
    e_cmd->add_option("--R", e_R, "cutoff order");
    e_cmd->add_option("--K", e_K, "rearranged block size (default N)");
    e_cmd->add_option("--x", e_x, "distinguishability parameter");
    e_cmd->add_option("--trials", e_trials, "number of Haar multiports");
    e_cmd->add_option("--seed", e_seed.value, "master seed");
    e_cmd->add_option("--output", e_output, "output JSON path");

    // ---- negativity -------------------------------------------------------
    auto* n_cmd = app.add_subcommand("negativity",
                                     "histogram the truncated quantum factor over an ensemble");
    ExperimentConfig n_cfg;
    n_cfg.trials = 1000;
    std::string n_ensemble = "ginibre", n_output, n_format = "json";
    SeedOption n_seed;
    n_cmd->add_option("--n", n_cfg.n, "block size")->required();
    n_cmd->add_option("--R", n_cfg.R, "cutoff order")->required();
    n_cmd->add_option("--trials", n_cfg.trials, "ensemble size");
    n_cmd->add_option("--M", n_cfg.M, "mode count (default n)");
    n_cmd->add_option("--ensemble", n_ensemble, "haar|ginibre")
        ->check(CLI::IsMember({"haar", "ginibre"}));
    n_cmd->add_option("--seed", n_seed.value, "master seed");
    n_cmd->add_option("--bins", n_cfg.hist.bins, "histogram bins (default 80)");
    n_cmd->add_option("--output", n_output, "output base path");
    n_cmd->add_option("--format", n_format, "json|csv|svg")
        ->check(CLI::IsMember({"json", "csv", "svg"}));

    // ---- moments ----------------------------------------------------------
    auto* m_cmd = app.add_subcommand("moments", "interference-term moments vs Gaussian theory");
    ExperimentConfig m_cfg;
    m_cfg.trials = 20000;
    std::string m_output;
    SeedOption m_seed;
    m_cmd->add_option("--N", m_cfg.N, "number of bosons")->required();
    m_cmd->add_option("--M", m_cfg.M, "mode count")->required();
    m_cmd->add_option("--trials", m_cfg.trials, "trials");
    m_cmd->add_option("--seed", m_seed.value, "master seed");
    m_cmd->add_option("--output", m_output, "output base path");

    // ---- tvd ---------------------------------------------------------------
    auto* t_cmd = app.add_subcommand("tvd", "exact total variation distance vs the bound");
    ExperimentConfig t_cfg;
    t_cfg.trials = 50;
    std::string t_x = "0.5", t_output;
    SeedOption t_seed;
    t_cmd->add_option("--N", t_cfg.N, "number of bosons")->required();
    t_cmd->add_option("--M", t_cfg.M, "mode count")->required();
    t_cmd->add_option("--x", t_x, "distinguishability parameter");
    t_cmd->add_option("--R", t_cfg.R, "cutoff order")->required();
    t_cmd->add_option("--trials", t_cfg.trials, "trials");
    t_cmd->add_option("--seed", t_seed.value, "master seed");
    t_cmd->add_option("--output", t_output, "output base path");

    // ---- positivity --------------------------------------------------------
    auto* pos_cmd = app.add_subcommand("positivity",
                                       "binomial-transform certificate for a model");
    std::string pos_model = "uniform", pos_x = "1/2", pos_output;
    int pos_N = 0, pos_R = -1, pos_K = -1;
    bool pos_gram = false;
    pos_cmd->add_option("--model", pos_model, "uniform|cutoff|rearranged")
        ->check(CLI::IsMember({"uniform", "cutoff", "rearranged"}));
    pos_cmd->add_option("--N", pos_N, "total bosons")->required();
    pos_cmd->add_option("--R", pos_R, "cutoff order");
    pos_cmd->add_option("--K", pos_K, "rearranged block size");
    pos_cmd->add_option("--x", pos_x, "distinguishability parameter (p/q enables exact mode)");
    pos_cmd->add_flag("--gram", pos_gram, "also compute the Gram minimum eigenvalue (N <= 6)");
    pos_cmd->add_option("--output", pos_output, "output JSON path");

    // ---- threshold ---------------------------------------------------------
    auto* th_cmd = app.add_subcommand("threshold",
                                      "exact positivity threshold of the rearranged model");
    int th_N = 0, th_K = 0, th_R = 0;
    std::string th_output;
    th_cmd->add_option("--N", th_N, "total bosons")->required();
    th_cmd->add_option("--K", th_K, "block size")->required();
    th_cmd->add_option("--R", th_R, "cutoff order")->required();
    th_cmd->add_option("--output", th_output, "output JSON path");

    // ---- characters ----------------------------------------------------------
    auto* ch_cmd = app.add_subcommand("characters",
                                      "irreducible-character expansion of the uniform model");
    int ch_N = 0;
    std::string ch_x = "1/2", ch_output;
    bool ch_table = false;
    ch_cmd->add_option("--N", ch_N, "group degree")->required();
    ch_cmd->add_option("--x", ch_x, "distinguishability parameter");
    ch_cmd->add_flag("--table", ch_table, "include the full character table");
    ch_cmd->add_option("--output", ch_output, "output JSON path");

    // ---- sample -----------------------------------------------------------
    auto* s_cmd = app.add_subcommand("sample", "draw output samples");
    std::string s_mode = "model", s_x = "1", s_output;
    int s_N = 0, s_shots = 1000;
    SeedOption s_seed;
    MatrixOptions s_mat;
    s_cmd->add_option("--mode", s_mode, "model|distinguishable")
        ->check(CLI::IsMember({"model", "distinguishable"}));
    s_cmd->add_option("--N", s_N, "number of particles")->required();
    s_cmd->add_option("--x", s_x, "distinguishability parameter (model mode)");
    s_cmd->add_option("--shots", s_shots, "number of samples");
    s_cmd->add_option("--seed", s_seed.value, "master seed");
    s_cmd->add_option("--output", s_output, "output base path (.csv holds the samples)");
    s_mat.attach(s_cmd);

    // ---- table -------------------------------------------------------------
    auto* tb_cmd = app.add_subcommand("table", "enumerate a no-collision output distribution");
    std::string tb_model = "uniform", tb_x = "1", tb_output, tb_format = "json";
    int tb_N = 0, tb_R = -1;
    SeedOption tb_seed;
    MatrixOptions tb_mat;
    tb_cmd->add_option("--model", tb_model, "uniform|cutoff")
        ->check(CLI::IsMember({"uniform", "cutoff"}));
    tb_cmd->add_option("--N", tb_N, "number of bosons")->required();
    tb_cmd->add_option("--R", tb_R, "cutoff order (cutoff model)");
    tb_cmd->add_option("--x", tb_x, "distinguishability parameter");
    tb_cmd->add_option("--seed", tb_seed.value, "seed for sampled interferometers");
    tb_cmd->add_option("--output", tb_output, "output path");
    tb_cmd->add_option("--format", tb_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    tb_mat.attach(tb_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the message and usage pointer to stderr
        return kExitValidation;
    }

    const auto wall_start = std::chrono::steady_clock::now();
    const auto wall_time = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start)
            .count();
    };

    if (p_cmd->parsed()) {
        XValue x;
        x.parse(p_x);
        const std::vector<int> inputs =
            p_inputs.empty() ? [&] {
                std::vector<int> v(static_cast<std::size_t>(p_N));
                std::iota(v.begin(), v.end(), 0);
                return v;
            }()
                             : parse_ports(p_inputs);
        const std::vector<int> outputs = p_outputs.empty() ? inputs : parse_ports(p_outputs);
        if (static_cast<int>(inputs.size()) != p_N || inputs.size() != outputs.size())
            throw ValidationError("--inputs/--outputs must list exactly N ports");
        int max_port = p_N - 1;
        for (int v : inputs) max_port = std::max(max_port, v);
        for (int v : outputs) max_port = std::max(max_port, v);
        const ComplexMatrix u = p_mat.resolve(max_port + 1, p_seed);

        std::string route = p_route;
        if (route == "auto")
            route = (p_N <= limits::kBruteforceProbabilityCap) ? "bruteforce"
                    : (p_R >= 0)                               ? "expansion"
                                                               : "convex";
        double prob = 0.0;
        if (route == "bruteforce") {
            const FixedPointModel model = p_R >= 0 ? model_cutoff(p_N, p_R, x.value)
                                                   : model_uniform(p_N, x.value);
            prob = probability_bruteforce(u, model, inputs, outputs);
        } else if (route == "expansion") {
            prob = probability_expansion(u, p_R >= 0 ? p_R : p_N, x.value, inputs, outputs);
        } else if (route == "convex") {
            prob = convex_sum_probability(u, x.value, inputs, outputs,
                                          p_R >= 0 ? std::optional<int>(p_R) : std::nullopt);
        } else { // rearranged
            if (p_R < 0) throw ValidationError("route rearranged needs --R");
            prob = rearranged_probability(u, p_K > 0 ? p_K : p_N, p_R, x.value, inputs, outputs);
        }
        json doc = base_header("probability", p_seed.value.value_or(0));
        doc["config"] = {{"N", p_N}, {"x", x.text},  {"R", p_R},
                         {"route", route}, {"inputs", inputs}, {"outputs", outputs}};
        doc["probability"] = prob;
        doc["wall_time_s"] = wall_time();
        emit(doc, p_output);
        return kExitOk;
    }

    if (e_cmd->parsed()) {
        XValue x;
        x.parse(e_x);
        const std::uint64_t seed = e_seed.resolve();
        const int K = e_K > 0 ? e_K : e_N;
        std::vector<int> ports(static_cast<std::size_t>(e_N));
        std::iota(ports.begin(), ports.end(), 0);
        double worst = 0.0;
        for (int trial = 0; trial < e_trials; ++trial) {
            const ComplexMatrix u =
                haar_unitary(e_N, seed, static_cast<std::uint64_t>(trial));
            const double brute = probability_bruteforce(
                u, model_cutoff(e_N, e_R, x.value), ports, ports);
            const double routes[] = {
                probability_expansion(u, e_R, x.value, ports, ports),
                convex_sum_probability(u, x.value, ports, ports, e_R),
                rearranged_probability(u, K, std::min(e_R, K), x.value, ports, ports)};
            for (double r : routes)
                worst = std::max(worst,
                                 std::abs(r - brute) / std::max({std::abs(brute), 1e-12}));
        }
        json doc = base_header("expansion-check", seed);
        doc["config"] = {{"N", e_N}, {"R", e_R}, {"K", K}, {"x", x.text}, {"trials", e_trials}};
        doc["max_relative_deviation"] = worst;
        doc["wall_time_s"] = wall_time();
        emit(doc, e_output);
        if (worst > 1e-9) {
            std::cerr << "route deviation " << worst << " exceeds 1e-9\n";
            return kExitInvariant;
        }
        return kExitOk;
    }

    if (n_cmd->parsed()) {
        n_cfg.master_seed = n_seed.resolve();
        n_cfg.ensemble = ensemble_from_string(n_ensemble);
        const ExperimentReport report = negativity_experiment(n_cfg);
        emit_report(report, n_output, n_format);
        return kExitOk;
    }

    if (m_cmd->parsed()) {
        m_cfg.master_seed = m_seed.resolve();
        const ExperimentReport report = moment_experiment(m_cfg);
        emit_report(report, m_output, "json");
        return kExitOk;
    }

    if (t_cmd->parsed()) {
        XValue x;
        x.parse(t_x);
        t_cfg.x = x.value;
        t_cfg.master_seed = t_seed.resolve();
        const ExperimentReport report = tvd_experiment(t_cfg);
        emit_report(report, t_output, "json");
        return kExitOk;
    }

    if (pos_cmd->parsed()) {
        XValue x;
        x.parse(pos_x);
        FixedPointModel model;
        if (pos_model == "uniform") {
            model = x.exact ? model_uniform(pos_N, *x.exact) : model_uniform(pos_N, x.value);
        } else if (pos_model == "cutoff") {
            if (pos_R < 0) throw ValidationError("cutoff model needs --R");
            model = x.exact ? model_cutoff(pos_N, pos_R, *x.exact)
                            : model_cutoff(pos_N, pos_R, x.value);
        } else {
            if (pos_R < 0 || pos_K <= 0) throw ValidationError("rearranged model needs --K and --R");
            model = x.exact ? model_rearranged(pos_N, pos_K, pos_R, *x.exact)
                            : model_rearranged(pos_N, pos_K, pos_R, x.value);
        }
        const PositivityCertificate cert = binomial_transform(model, x.exact.has_value());
        json doc = base_header("positivity", 0);
        doc["config"] = {{"model", model.label}, {"x", x.text}, {"exact", cert.exact}};
        doc["b"] = cert.b;
        if (cert.b_exact) {
            std::vector<std::string> exact;
            for (const Rational& v : *cert.b_exact) exact.push_back(format_rational(v));
            doc["b_exact"] = exact;
        }
        doc["sufficient_pd"] = cert.sufficient_pd;
        doc["min_b"] = cert.min_b;
        if (pos_gram) doc["gram_min_eigenvalue"] = gram_min_eigenvalue(model);
        doc["wall_time_s"] = wall_time();
        emit(doc, pos_output);
        return kExitOk;
    }

    if (th_cmd->parsed()) {
        const Rational x_star = positivity_threshold(th_N, th_K, th_R);
        json doc = base_header("threshold", 0);
        doc["config"] = {{"N", th_N}, {"K", th_K}, {"R", th_R}};
        doc["x_star"] = format_rational(x_star);
        doc["x_star_decimal"] = to_double(x_star);
        doc["wall_time_s"] = wall_time();
        emit(doc, th_output);
        return kExitOk;
    }

    if (ch_cmd->parsed()) {
        XValue x;
        x.parse(ch_x);
        const CharacterTable table = character_table(ch_N);
        const FixedPointModel model =
            x.exact ? model_uniform(ch_N, *x.exact) : model_uniform(ch_N, x.value);
        CharacterExpansion e = expand_class_function(to_class_function(model, table), table);
        e.x = x.value;
        json doc = base_header("characters", 0);
        doc["config"] = {{"N", ch_N}, {"x", x.text}};
        doc["expansion"] = json::parse(e.to_json(table));
        if (x.exact) {
            const auto f = to_class_function_exact(model, table);
            json exact = json::object();
            const auto q = expand_class_function_exact(*f, table);
            for (std::size_t i = 0; i < q.size(); ++i)
                exact[table.partitions[i].to_string()] = format_rational(q[i]);
            doc["expansion_exact"] = exact;
        }
        if (ch_table) {
            json rows = json::object();
            for (std::size_t r = 0; r < table.partitions.size(); ++r) {
                std::vector<std::int64_t> row;
                for (std::size_t c = 0; c < table.partitions.size(); ++c)
                    row.push_back(table.value(static_cast<int>(r), static_cast<int>(c)));
                rows[table.partitions[r].to_string()] = row;
            }
            doc["character_table"] = {{"classes_in_order", [&] {
                                           std::vector<std::string> names;
                                           for (const auto& p : table.partitions)
                                               names.push_back(p.to_string());
                                           return names;
                                       }()},
                                      {"rows", rows},
                                      {"class_sizes", table.class_sizes}};
        }
        doc["wall_time_s"] = wall_time();
        emit(doc, ch_output);
        return kExitOk;
    }

    if (s_cmd->parsed()) {
        XValue x;
        x.parse(s_x);
        std::vector<int> inputs(static_cast<std::size_t>(s_N));
        std::iota(inputs.begin(), inputs.end(), 0);
        const ComplexMatrix u = s_mat.resolve(s_N, s_seed);
        const std::uint64_t seed = s_seed.resolve();
        const auto shots = s_mode == "model"
                               ? sample_model(u, x.value, inputs, s_shots, seed)
                               : sample_distinguishable(u, inputs, s_shots, seed);
        json cfg = {{"mode", s_mode}, {"N", s_N},      {"x", x.text},
                    {"shots", s_shots}, {"M", s_mat.M}, {"ensemble", s_mat.ensemble}};
        std::string csv = "# kind: sample/" + s_mode + "\n# version: " + kVersion +
                          "\n# seed: " + std::to_string(seed) +
                          "\n# config: " + cfg.dump() + "\nports\n";
        for (const auto& shot : shots) {
            for (std::size_t i = 0; i < shot.size(); ++i)
                csv += (i ? "-" : "") + std::to_string(shot[i]);
            csv += "\n";
        }
        json doc = base_header("sample", seed);
        doc["config"] = cfg;
        doc["wall_time_s"] = wall_time();
        if (s_output.empty()) {
            std::cout << csv;
        } else {
            write_file(s_output + ".csv", csv);
            emit(doc, s_output + ".json");
        }
        return kExitOk;
    }

    if (tb_cmd->parsed()) {
        XValue x;
        x.parse(tb_x);
        std::vector<int> inputs(static_cast<std::size_t>(tb_N));
        std::iota(inputs.begin(), inputs.end(), 0);
        const ComplexMatrix u = tb_mat.resolve(tb_N, tb_seed);
        FixedPointModel model;
        if (tb_model == "cutoff") {
            if (tb_R < 0) throw ValidationError("cutoff model needs --R");
            model = model_cutoff(tb_N, tb_R, x.value);
        } else {
            model = model_uniform(tb_N, x.value);
        }
        const DistributionTable table = enumerate_distribution(u, model, inputs);
        const json cfg = {{"model", model.label}, {"N", tb_N},      {"R", tb_R},
                          {"x", x.text},          {"M", tb_mat.M},  {"ensemble", tb_mat.ensemble},
                          {"wall_time_s", wall_time()}};
        std::string body;
        if (tb_format == "csv") {
            body = "# config: " + cfg.dump() + "\n" + table.to_csv(tb_seed.value);
        } else {
            json doc = json::parse(table.to_json(tb_seed.value));
            doc["config"] = cfg;
            body = doc.dump(2);
        }
        if (tb_output.empty())
            std::cout << body << "\n";
        else
            write_file(tb_output, body);
        return kExitOk;
    }

    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const bosonpd::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const bosonpd::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const bosonpd::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
