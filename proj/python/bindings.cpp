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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bosonpd/characters.hpp"
#include "bosonpd/errors.hpp"
#include "bosonpd/kernels.hpp"
#include "bosonpd/models.hpp"
#include "bosonpd/montecarlo.hpp"
#include "bosonpd/probability.hpp"
#include "bosonpd/version.hpp"

namespace py = pybind11;
using namespace bosonpd;

namespace {

Rational rational_from_string(const std::string& text) {
    const auto r = parse_rational(text);
    if (!r) throw ValidationError("expected a rational like '1/3', got '" + text + "'");
    return *r;
}

Permutation permutation_from_list(const std::vector<int>& images) {
    return Permutation(images);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Partial-distinguishability models of noisy boson sampling";
    m.attr("__version__") = kVersion;

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_OverflowError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

    // symmetric group ------------------------------------------------------
    py::class_<Permutation>(m, "Permutation")
        .def(py::init(&permutation_from_list), py::arg("images"))
        .def_static("identity", &Permutation::identity)
        .def_static("from_cycle", &Permutation::from_cycle)
        .def("__len__", &Permutation::size)
        .def("__call__", [](const Permutation& p, int i) { return p(i); })
        .def("images", &Permutation::images)
        .def("inverse", &Permutation::inverse)
        .def("compose", &Permutation::compose)
        .def("fixed_point_count", &Permutation::fixed_point_count)
        .def("cycle_type",
             [](const Permutation& p) { return cycle_type(p).parts; });

    m.def("derangement_count", &derangement_count, py::arg("s"));
    m.def("derangement_class", [](int n, int s) {
        std::vector<std::vector<int>> out;
        for_each_in_derangement_class(n, s,
                                      [&](const Permutation& p) { out.push_back(p.images()); });
        return out;
    });

    py::class_<CharacterTable>(m, "CharacterTable")
        .def_readonly("n", &CharacterTable::n)
        .def_property_readonly("partitions",
                               [](const CharacterTable& t) {
                                   std::vector<std::vector<int>> out;
                                   for (const auto& p : t.partitions) out.push_back(p.parts);
                                   return out;
                               })
        .def_readonly("class_sizes", &CharacterTable::class_sizes)
        .def_readonly("dims", &CharacterTable::dims)
        .def("value", &CharacterTable::value, py::arg("row"), py::arg("col"));
    m.def("character_table", [](int n) { return character_table(n); }, py::arg("n"));

    // kernels ---------------------------------------------------------------
    m.def("permanent", [](const ComplexMatrix& a) { return permanent(a); }, py::arg("a"));
    m.def("permanent_glynn", [](const ComplexMatrix& a) { return permanent_glynn(a); });
    m.def("permanent_naive", [](const ComplexMatrix& a) { return permanent_naive(a); });
    m.def("interference_term",
          [](const ComplexMatrix& u, const std::vector<int>& sigma,
             const std::vector<int>& inputs, const std::vector<int>& outputs) {
              return interference_term(u, Permutation(sigma), inputs, outputs);
          },
          py::arg("u"), py::arg("sigma"), py::arg("inputs"), py::arg("outputs"));
    m.def("derangement_sums",
          [](const ComplexMatrix& u, const std::vector<int>& inputs,
             const std::vector<int>& outputs, const std::vector<int>& s_set) {
              return derangement_sums(u, inputs, outputs, s_set);
          });
    m.def("derangement_sum",
          [](const ComplexMatrix& u, const std::vector<int>& inputs,
             const std::vector<int>& outputs, int s) {
              return derangement_sum(u, inputs, outputs, s);
          });
    m.def("derangement_sum_bruteforce",
          [](const ComplexMatrix& u, const std::vector<int>& inputs,
             const std::vector<int>& outputs, int s) {
              return derangement_sum_bruteforce(u, inputs, outputs, s);
          });
    m.def("chi_moment", &chi_moment, py::arg("n"));

    // models ------------------------------------------------------------------
    py::class_<FixedPointModel>(m, "FixedPointModel")
        .def_readonly("n_total", &FixedPointModel::n_total)
        .def_readonly("a", &FixedPointModel::a)
        .def_readonly("label", &FixedPointModel::label)
        .def("evaluate", [](const FixedPointModel& m_, const std::vector<int>& images) {
            return m_.evaluate(Permutation(images));
        });
    m.def("model_uniform", [](int N, double x) { return model_uniform(N, x); });
    m.def("model_uniform",
          [](int N, const std::string& x) { return model_uniform(N, rational_from_string(x)); });
    m.def("model_cutoff", [](int N, int R, double x) { return model_cutoff(N, R, x); });
    m.def("model_cutoff", [](int N, int R, const std::string& x) {
        return model_cutoff(N, R, rational_from_string(x));
    });
    m.def("model_rearranged",
          [](int N, int K, int R, double x) { return model_rearranged(N, K, R, x); });
    m.def("model_rearranged", [](int N, int K, int R, const std::string& x) {
        return model_rearranged(N, K, R, rational_from_string(x));
    });

    py::class_<PositivityCertificate>(m, "PositivityCertificate")
        .def_readonly("b", &PositivityCertificate::b)
        .def_readonly("sufficient_pd", &PositivityCertificate::sufficient_pd)
        .def_readonly("min_b", &PositivityCertificate::min_b)
        .def_readonly("exact", &PositivityCertificate::exact)
        .def_property_readonly("b_exact", [](const PositivityCertificate& c) -> py::object {
            if (!c.b_exact) return py::none();
            std::vector<std::string> out;
            for (const Rational& v : *c.b_exact) out.push_back(format_rational(v));
            return py::cast(out);
        });
    m.def("binomial_transform", &binomial_transform, py::arg("model"), py::arg("exact") = false);
    m.def("gram_min_eigenvalue", [](const FixedPointModel& m_) { return gram_min_eigenvalue(m_); });
    m.def("positivity_threshold", [](int N, int K, int R) {
        const Rational x = positivity_threshold(N, K, R);
        return py::make_tuple(format_rational(x), to_double(x));
    });

    // probability ---------------------------------------------------------------
    py::class_<DistributionTable>(m, "DistributionTable")
        .def_property_readonly("configs",
                               [](const DistributionTable& t) {
                                   std::vector<std::vector<int>> out;
                                   for (const auto& c : t.configs) out.push_back(c.ports);
                                   return out;
                               })
        .def_readonly("probs", &DistributionTable::probs)
        .def_readonly("model_label", &DistributionTable::model_label)
        .def("sum", &DistributionTable::sum)
        .def("negative_mass", &DistributionTable::negative_mass)
        .def("to_csv", [](const DistributionTable& t) { return t.to_csv(); })
        .def("to_json", [](const DistributionTable& t) { return t.to_json(); });

    m.def("probability_bruteforce",
          [](const ComplexMatrix& u, const FixedPointModel& model,
             const std::vector<int>& inputs, const std::vector<int>& outputs) {
              return probability_bruteforce(u, model, inputs, outputs);
          });
    m.def("probability_expansion",
          [](const ComplexMatrix& u, int R, double x, const std::vector<int>& inputs,
             const std::vector<int>& outputs) {
              return probability_expansion(u, R, x, inputs, outputs);
          });
    m.def("quantum_factor_cutoff",
          [](const ComplexMatrix& u, int R, const std::vector<int>& inputs,
             const std::vector<int>& outputs) {
              return quantum_factor_cutoff(u, R, inputs, outputs);
          });
    m.def("convex_sum_probability",
          [](const ComplexMatrix& u, double x, const std::vector<int>& inputs,
             const std::vector<int>& outputs, std::optional<int> cutoff) {
              return convex_sum_probability(u, x, inputs, outputs, cutoff);
          },
          py::arg("u"), py::arg("x"), py::arg("inputs"), py::arg("outputs"),
          py::arg("cutoff") = py::none());
    m.def("rearranged_probability",
          [](const ComplexMatrix& u, int K, int R, double x, const std::vector<int>& inputs,
             const std::vector<int>& outputs) {
              return rearranged_probability(u, K, R, x, inputs, outputs);
          });
    m.def("enumerate_distribution", &enumerate_distribution, py::arg("u"), py::arg("model"),
          py::arg("inputs"));
    m.def("total_variation_distance", &total_variation_distance);

    // characters -------------------------------------------------------------
    m.def("character_expansion", [](int N, double x) {
        const CharacterTable table = character_table(N);
        const CharacterExpansion e =
            expand_class_function(to_class_function(model_uniform(N, x), table), table);
        py::dict out;
        for (std::size_t i = 0; i < e.q.size(); ++i)
            out[py::str(table.partitions[i].to_string())] = e.q[i];
        return out;
    });
    m.def("trace_Ln", [](int N, int n, const std::vector<int>& images) {
        return trace_Ln(N, n, Permutation(images));
    });
    m.def("decompose_trace_Ln", [](int N, int n) {
        const CharacterTable table = character_table(N);
        std::vector<std::string> out;
        for (const Rational& v : decompose_trace_Ln(N, n, table))
            out.push_back(format_rational(v));
        return out;
    });
    m.def("immanant", [](const ComplexMatrix& a, const std::vector<int>& parts) {
        return immanant(a, IntegerPartition(parts));
    });

    // ensembles, experiments, samplers ---------------------------------------
    m.def("haar_unitary", &haar_unitary, py::arg("M"), py::arg("seed"), py::arg("stream") = 0);
    m.def("ginibre", &ginibre, py::arg("rows"), py::arg("cols"), py::arg("variance"),
          py::arg("seed"), py::arg("stream") = 0);
    m.def("bound_tvd", &bound_tvd, py::arg("x"), py::arg("R"));
    m.def("unitarity_defect", &unitarity_defect);

    const auto config_from_kwargs = [](std::uint64_t seed, int trials, int n, int N, int M, int R,
                                       double x, const std::string& ensemble) {
        ExperimentConfig cfg;
        cfg.master_seed = seed;
        cfg.trials = trials;
        cfg.n = n;
        cfg.N = N;
        cfg.M = M;
        cfg.R = R;
        cfg.x = x;
        cfg.ensemble = ensemble_from_string(ensemble);
        return cfg;
    };
    m.def("negativity_experiment",
          [config_from_kwargs](int n, int R, int trials, std::uint64_t seed, int M,
                               const std::string& ensemble) {
              return negativity_experiment(
                         config_from_kwargs(seed, trials, n, 0, M, R, 0.0, ensemble))
                  .to_json();
          },
          py::arg("n"), py::arg("R"), py::arg("trials"), py::arg("seed"), py::arg("M") = 0,
          py::arg("ensemble") = "ginibre");
    m.def("moment_experiment",
          [config_from_kwargs](int N, int M, int trials, std::uint64_t seed) {
              return moment_experiment(config_from_kwargs(seed, trials, 0, N, M, 0, 0.0, "ginibre"))
                  .to_json();
          },
          py::arg("N"), py::arg("M"), py::arg("trials"), py::arg("seed"));
    m.def("tvd_experiment",
          [config_from_kwargs](int N, int M, double x, int R, int trials, std::uint64_t seed) {
              return tvd_experiment(config_from_kwargs(seed, trials, 0, N, M, R, x, "haar"))
                  .to_json();
          },
          py::arg("N"), py::arg("M"), py::arg("x"), py::arg("R"), py::arg("trials"),
          py::arg("seed"));
    m.def("sample_distinguishable", &sample_distinguishable, py::arg("u"), py::arg("inputs"),
          py::arg("shots"), py::arg("seed"));
    m.def("sample_model", &sample_model, py::arg("u"), py::arg("x"), py::arg("inputs"),
          py::arg("shots"), py::arg("seed"));
}
