// Copyright 2026 The qaa-maxcut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>

#include "qaa/error.hpp"
#include "qaa/graph.hpp"
#include "qaa/hamiltonian.hpp"
#include "qaa/noise.hpp"
#include "qaa/spectral_flow.hpp"
#include "qaa/statevector.hpp"

namespace py = pybind11;

namespace {

using qaa::Complex;

py::array_t<double> to_numpy(const qaa::RealMatrix& m) {
    py::array_t<double> out({m.rows(), m.cols()});
    std::memcpy(out.mutable_data(), m.data().data(), m.data().size() * sizeof(double));
    return out;
}

py::array_t<Complex> to_numpy(const qaa::ComplexMatrix& m) {
    py::array_t<Complex> out({m.rows(), m.cols()});
    std::memcpy(out.mutable_data(), m.data().data(), m.data().size() * sizeof(Complex));
    return out;
}

template <class T>
qaa::Matrix<T> from_numpy(const py::array_t<T, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 2) throw qaa::InputError("expected a 2-D array");
    qaa::Matrix<T> m(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)));
    std::memcpy(m.data().data(), a.data(), m.data().size() * sizeof(T));
    return m;
}

py::array_t<Complex> state_to_numpy(const qaa::StateVector& sv) {
    py::array_t<Complex> out(std::vector<py::ssize_t>{static_cast<py::ssize_t>(sv.dim())});
    std::memcpy(out.mutable_data(), sv.amplitudes().data(), sv.dim() * sizeof(Complex));
    return out;
}

qaa::StateVector state_from_numpy(const py::array_t<Complex, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 1) throw qaa::InputError("expected a 1-D amplitude array");
    const auto dim = static_cast<std::size_t>(a.shape(0));
    unsigned n = 0;
    while ((std::size_t{1} << n) < dim) ++n;
    std::vector<Complex> amps(a.data(), a.data() + dim);
    return qaa::StateVector(n, std::move(amps));
}

py::dict histogram_to_dict(const qaa::Histogram& h) {
    py::dict d;
    for (const auto& [word, count] : h.counts) d[py::str(qaa::to_msb_string(word, h.n_qubits))] = count;
    return d;
}

qaa::NoiseModel noise_from(const py::object& noise) {
    if (py::isinstance<py::str>(noise)) return qaa::parse_noise_preset(noise.cast<std::string>());
    auto [p1, p2, pro] = noise.cast<std::tuple<double, double, double>>();
    qaa::NoiseModel m{p1, p2, pro};
    qaa::validate(m);
    return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantum adiabatic Max-Cut simulation core";

    static py::exception<qaa::Error> base_error(m, "QaaError", PyExc_RuntimeError);
    static py::exception<qaa::InputError> input_error(m, "InputError", base_error.ptr());
    static py::exception<qaa::BudgetError> budget_error(m, "BudgetError", base_error.ptr());
    static py::exception<qaa::NumericalError> numerical_error(m, "NumericalError", base_error.ptr());
    static py::exception<qaa::DegenerateGapError> gap_error(m, "DegenerateGapError", numerical_error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const qaa::DegenerateGapError& e) {
            gap_error(e.what());
        } catch (const qaa::NumericalError& e) {
            numerical_error(e.what());
        } catch (const qaa::BudgetError& e) {
            budget_error(e.what());
        } catch (const qaa::InputError& e) {
            input_error(e.what());
        } catch (const qaa::Error& e) {
            base_error(e.what());
        }
    });

    py::class_<qaa::Graph>(m, "Graph")
        .def(py::init<unsigned, const std::vector<std::pair<unsigned, unsigned>>&>(), py::arg("n_vertices"),
             py::arg("edges"))
        .def_property_readonly("n_vertices", &qaa::Graph::n_vertices)
        .def_property_readonly("edges",
                               [](const qaa::Graph& g) {
                                   std::vector<std::pair<unsigned, unsigned>> out;
                                   for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
                                   return out;
                               })
        .def("to_json", &qaa::graph_to_json)
        .def("__repr__", [](const qaa::Graph& g) {
            return "<Graph n_vertices=" + std::to_string(g.n_vertices()) + " n_edges=" + std::to_string(g.n_edges()) +
                   ">";
        });

    py::class_<qaa::MaxCutSolution>(m, "MaxCutSolution")
        .def_readonly("max_cut", &qaa::MaxCutSolution::max_cut)
        .def_property_readonly("degeneracy", &qaa::MaxCutSolution::degeneracy)
        .def_property_readonly("words",
                               [](const qaa::MaxCutSolution& s) {
                                   std::vector<std::uint64_t> out;
                                   for (const auto& p : s.solutions) out.push_back(p.word);
                                   return out;
                               })
        .def_property_readonly("solutions", [](const qaa::MaxCutSolution& s) {
            std::vector<std::string> out;
            for (const auto& p : s.solutions) out.push_back(qaa::to_msb_string(p.word, p.n_vertices));
            return out;
        });

    m.def("parse_graph", &qaa::parse_graph, py::arg("text"));
    m.def("load_graph", &qaa::load_graph, py::arg("path"));
    m.def(
        "cut_value",
        [](const qaa::Graph& g, const std::string& bits) {
            return qaa::cut_value(
                g, {static_cast<unsigned>(bits.size()), qaa::from_msb_string(bits)});
        },
        py::arg("graph"), py::arg("bits"), "Cut value of an MSB-first bit string");
    m.def("brute_force_maxcut", &qaa::brute_force_maxcut, py::arg("graph"));

    m.def(
        "build_problem_diagonal", [](const qaa::Graph& g) { return qaa::build_problem_diagonal(g).diag; },
        py::arg("graph"));
    m.def(
        "build_mixer", [](unsigned n) { return to_numpy(qaa::build_mixer(n)); }, py::arg("n_qubits"));
    m.def(
        "interpolate",
        [](const qaa::Graph& g, double s, double zz) { return to_numpy(qaa::interpolate(g, {s, zz})); },
        py::arg("graph"), py::arg("s"), py::arg("zz_factor") = qaa::kDefaultZZFactor);
    m.def(
        "exact_spectrum",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& h) {
            return qaa::exact_spectrum(from_numpy<double>(h)).values;
        },
        py::arg("h"));
    m.def(
        "exact_unitary",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& h, double t) {
            return to_numpy(qaa::exact_unitary(from_numpy<double>(h), t));
        },
        py::arg("h"), py::arg("t"));

    m.def(
        "qaa_evolve",
        [](const qaa::Graph& g, double dt, std::uint64_t steps) {
            return state_to_numpy(qaa::qaa_evolve(g, {dt, steps}));
        },
        py::arg("graph"), py::arg("dt") = 0.1, py::arg("steps") = 1000,
        "Final amplitudes of the adiabatic circuit (basis index bit q = qubit q)");
    m.def(
        "sample_measurements",
        [](const py::array_t<Complex, py::array::c_style | py::array::forcecast>& state, std::uint64_t shots,
           std::uint64_t seed) { return histogram_to_dict(qaa::sample_measurements(state_from_numpy(state), shots, seed)); },
        py::arg("state"), py::arg("shots"), py::arg("seed") = 0);
    m.def(
        "ground_manifold_overlap",
        [](const py::array_t<Complex, py::array::c_style | py::array::forcecast>& state,
           const qaa::MaxCutSolution& sol) { return qaa::ground_manifold_overlap(state_from_numpy(state), sol); },
        py::arg("state"), py::arg("solution"));

    m.def(
        "trotter_unitary",
        [](const qaa::Graph& g, double s, double dt, std::uint64_t steps) {
            return to_numpy(qaa::trotter_unitary(g, s, {dt, steps}));
        },
        py::arg("graph"), py::arg("s"), py::arg("dt") = 0.1, py::arg("steps") = 50);
    m.def(
        "eigenphases",
        [](const py::array_t<Complex, py::array::c_style | py::array::forcecast>& u) {
            return qaa::eigenphases(from_numpy<Complex>(u));
        },
        py::arg("u"));

    py::class_<qaa::SpectralFlow>(m, "SpectralFlow")
        .def_property_readonly("s",
                               [](const qaa::SpectralFlow& f) {
                                   std::vector<double> out;
                                   for (const auto& x : f.samples) out.push_back(x.s);
                                   return out;
                               })
        .def_property_readonly("eigenphases",
                               [](const qaa::SpectralFlow& f) {
                                   std::vector<std::vector<double>> out;
                                   for (const auto& x : f.samples) out.push_back(x.eigenphases);
                                   return out;
                               })
        .def_property_readonly("scaled_points",
                               [](const qaa::SpectralFlow& f) {
                                   std::vector<std::vector<Complex>> out;
                                   for (const auto& x : f.samples) out.push_back(x.scaled_points);
                                   return out;
                               })
        .def_property_readonly("branches",
                               [](const qaa::SpectralFlow& f) {
                                   std::vector<std::vector<std::pair<double, double>>> out;
                                   for (const auto& b : f.branches) {
                                       auto& dst = out.emplace_back();
                                       for (const auto& p : b) dst.emplace_back(p.s, p.phase);
                                   }
                                   return out;
                               })
        .def_readonly("t", &qaa::SpectralFlow::t)
        .def_readonly("scale", &qaa::SpectralFlow::scale)
        .def_readonly("wraps", &qaa::SpectralFlow::wraps)
        .def_readonly("max_phase_spread", &qaa::SpectralFlow::max_phase_spread);

    m.def(
        "compute_flow",
        [](const qaa::Graph& g, std::size_t samples, std::uint64_t steps, double dt, double scale) {
            return qaa::compute_flow(g, {samples, {dt, steps}, scale});
        },
        py::arg("graph"), py::arg("samples") = 20, py::arg("steps") = 50, py::arg("dt") = 0.1, py::arg("scale") = 20.0);
    m.def(
        "ground_phase_at_end",
        [](const qaa::Graph& g, double dt, std::uint64_t steps) {
            return qaa::ground_phase_at_end(g, qaa::brute_force_maxcut(g), {dt, steps});
        },
        py::arg("graph"), py::arg("dt") = 0.1, py::arg("steps") = 50);
    m.def("count_branches_ending_at", &qaa::count_branches_ending_at, py::arg("flow"), py::arg("phase"),
          py::arg("tol") = 1e-6);

    m.def(
        "intersection_index",
        [](const qaa::Graph& g, std::size_t samples, double zz) {
            qaa::IndexParams params;
            params.n_samples = samples;
            params.zz_factor = zz;
            const auto r = qaa::intersection_index(g, params);
            py::dict d;
            d["index"] = r.index;
            d["crossings_down"] = r.crossings_down;
            d["crossings_up"] = r.crossings_up;
            d["rank_start"] = r.rank_start;
            d["rank_end"] = r.rank_end;
            d["evaluations"] = r.evaluations;
            return d;
        },
        py::arg("graph"), py::arg("samples") = 20, py::arg("zz_factor") = qaa::kDefaultZZFactor);

    m.def(
        "noisy_qaa_histogram",
        [](const qaa::Graph& g, const py::object& noise, double dt, std::uint64_t steps, std::uint64_t shots,
           std::uint64_t seed) {
            qaa::NoisyRunConfig cfg{g, {dt, steps}, noise_from(noise), shots, seed};
            qaa::Histogram h;
            {
                py::gil_scoped_release release;
                h = qaa::noisy_qaa_histogram(cfg);
            }
            return histogram_to_dict(h);
        },
        py::arg("graph"), py::arg("noise") = "heron-r3-opt", py::arg("dt") = 0.1, py::arg("steps") = 20,
        py::arg("shots") = 8192, py::arg("seed") = 0,
        "noise: preset name or (p_1q, p_2q, p_ro) tuple");
    m.def(
        "depth_sweep",
        [](const qaa::Graph& g, const py::object& noise, const std::vector<std::uint64_t>& depths, double dt,
           std::uint64_t shots, std::uint64_t seed) {
            const auto hs = qaa::depth_sweep(g, noise_from(noise), depths, dt, shots, seed);
            py::list out;
            for (const auto& h : hs) out.append(histogram_to_dict(h));
            return out;
        },
        py::arg("graph"), py::arg("noise"), py::arg("depths"), py::arg("dt") = 0.1, py::arg("shots") = 8192,
        py::arg("seed") = 0);

    m.def(
        "noise_preset",
        [](const std::string& name) {
            const auto n = qaa::parse_noise_preset(name);
            return std::make_tuple(n.p_1q, n.p_2q, n.p_ro);
        },
        py::arg("name"));
}
