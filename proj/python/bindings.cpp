// Copyright 2026 The qmlearn Authors
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
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>


#include "qmlearn/errors.hpp"
#include "qmlearn/learners.hpp"
#include "qmlearn/oracle.hpp"
#include "qmlearn/poly_io.hpp"
#include "qmlearn/verification.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace qmlearn;

namespace {

PointVec to_point(const FieldCtx &ctx, const std::vector<std::uint32_t> &coords) {
    std::vector<FieldElem> out;
    out.reserve(coords.size());
    for (auto c : coords) {
        if (c >= ctx.q()) throw Error(ErrorCode::IndexOutOfRange, "coordinate outside F_q");
        out.push_back(FieldElem{c});
    }
    return PointVec(std::move(out));
}

std::vector<std::uint32_t> from_point(const PointVec &x) {
    std::vector<std::uint32_t> out;
    for (const auto &c : x.coords()) out.push_back(c.value);
    return out;
}

FieldElem elem(const FieldCtx &ctx, std::uint32_t v) {
    if (v >= ctx.q()) throw Error(ErrorCode::IndexOutOfRange, "value outside F_q");
    return FieldElem{v};
}

py::object report_dict(const VerificationReport &r) {
    return py::module_::import("json").attr("loads")(r.to_json());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact learning of multilinear polynomials over finite fields with counted oracle queries";

    static py::exception<Error> exc(m, "QmlearnError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error &e) {
            exc(e.what());
        }
    });

    py::class_<FieldCtx>(m, "FieldCtx")
        .def(py::init<std::uint32_t, std::uint32_t, std::vector<std::uint32_t>>(), "p"_a, "r"_a, "modulus"_a)
        .def_static("parse", [](const std::string &s) { return FieldCtx::parse(s); }, "spec"_a)
        .def_static("from_order", &FieldCtx::from_order, "q"_a)
        .def_property_readonly("p", &FieldCtx::p)
        .def_property_readonly("r", &FieldCtx::r)
        .def_property_readonly("q", &FieldCtx::q)
        .def_property_readonly("modulus", &FieldCtx::modulus)
        .def_property_readonly("spec", &FieldCtx::spec)
        .def("add", [](const FieldCtx &f, std::uint32_t a, std::uint32_t b) { return f.add(elem(f, a), elem(f, b)).value; })
        .def("sub", [](const FieldCtx &f, std::uint32_t a, std::uint32_t b) { return f.sub(elem(f, a), elem(f, b)).value; })
        .def("mul", [](const FieldCtx &f, std::uint32_t a, std::uint32_t b) { return f.mul(elem(f, a), elem(f, b)).value; })
        .def("neg", [](const FieldCtx &f, std::uint32_t a) { return f.neg(elem(f, a)).value; })
        .def("inv", [](const FieldCtx &f, std::uint32_t a) { return f.inv(elem(f, a)).value; })
        .def("pow", [](const FieldCtx &f, std::uint32_t a, std::uint64_t k) { return f.pow(elem(f, a), k).value; })
        .def("trace", [](const FieldCtx &f, std::uint32_t a) { return f.trace(elem(f, a)); })
        .def("__eq__", [](const FieldCtx &a, const FieldCtx &b) { return a == b; })
        .def("__repr__", [](const FieldCtx &f) { return "FieldCtx('" + f.spec() + "')"; });

    py::class_<MultilinearPoly>(m, "MultilinearPoly")
        .def(py::init<FieldCtx, int, int>(), "field"_a, "n"_a, "d"_a)
        .def_static("random", &random_poly, "field"_a, "n"_a, "d"_a, "seed"_a)
        .def_static("from_json", [](const std::string &s) { return poly_from_json(s); }, "text"_a)
        .def("to_json", &poly_to_json)
        .def_property_readonly("field", &MultilinearPoly::field)
        .def_property_readonly("n", &MultilinearPoly::num_vars)
        .def_property_readonly("d", &MultilinearPoly::degree_bound)
        .def("set", [](MultilinearPoly &f, const std::vector<int> &s, std::uint32_t alpha) {
            f.set(SubsetIndex::from_members(s), FieldElem{alpha});
        }, "S"_a, "alpha"_a)
        .def("coeff", [](const MultilinearPoly &f, const std::vector<int> &s) {
            return f.coeff(SubsetIndex::from_members(s)).value;
        }, "S"_a)
        .def("coeffs", [](const MultilinearPoly &f) {
            py::dict out;
            for (const auto &[s, a] : f.coeffs()) out[py::tuple(py::cast(s.members()))] = a.value;
            return out;
        })
        .def("evaluate", [](const MultilinearPoly &f, const std::vector<std::uint32_t> &x) {
            return evaluate(f, to_point(f.field(), x)).value;
        }, "x"_a)
        .def("evaluate_all", [](const MultilinearPoly &f) {
            checked_dimension(f.field().q(), f.num_vars(), kDefaultMemCap);
            std::vector<std::uint32_t> out;
            for (const auto &v : evaluate_all(f)) out.push_back(v.value);
            return out;
        })
        .def("degree_part", &degree_part, "k"_a)
        .def("discrete_derivative", &discrete_derivative, "i"_a)
        .def("derivative", [](const MultilinearPoly &f, const std::vector<int> &s, const std::vector<std::uint32_t> &x) {
            return derivative_fn(f, SubsetIndex::from_members(s)).fn(to_point(f.field(), x)).value;
        }, "S"_a, "x"_a, "f_S(x) by its alternating-sum definition")
        .def("__eq__", [](const MultilinearPoly &a, const MultilinearPoly &b) { return poly_equal(a, b); })
        .def("__add__", [](const MultilinearPoly &a, const MultilinearPoly &b) { return a + b; })
        .def("__sub__", [](const MultilinearPoly &a, const MultilinearPoly &b) { return a - b; });

    py::class_<HiddenOracle>(m, "HiddenOracle")
        .def(py::init<MultilinearPoly, std::size_t>(), "secret"_a, "mem_cap"_a = kDefaultMemCap)
        .def_property_readonly("queries", &HiddenOracle::queries)
        .def_property_readonly("n", &HiddenOracle::num_vars)
        .def("classical_query", [](const HiddenOracle &o, const std::vector<std::uint32_t> &x) {
            return o.classical_query(to_point(o.field(), x)).value;
        }, "x"_a)
        .def("reduced", &HiddenOracle::reduced, "known"_a);

    py::class_<LearnReport>(m, "LearnReport")
        .def_readonly("learned", &LearnReport::learned)
        .def_readonly("queries_used", &LearnReport::queries_used)
        .def_readonly("per_degree_queries", &LearnReport::per_degree_queries);

    m.def("classical_learn", &classical_learn, "oracle"_a, "n"_a, "d"_a);
    m.def("quantum_learn", &quantum_learn, "oracle"_a, "n"_a, "d"_a);
    m.def("quantum_learn_linear", [](const HiddenOracle &o, int n) {
        const auto r = quantum_learn_linear(o, n);
        return py::make_tuple(from_point(r.a), r.queries, r.probability);
    }, "oracle"_a, "n"_a, "Returns (a, queries, probability).");
    m.def("learn_top_degree", [](const HiddenOracle &o, int n, int d) {
        auto r = learn_top_degree(o, n, d);
        return py::make_tuple(r.top, r.queries);
    }, "oracle"_a, "n"_a, "d"_a);
    m.def("classical_query_count", &classical_query_count, "n"_a, "d"_a);
    m.def("quantum_query_count", &quantum_query_count, "n"_a, "d"_a);
    m.def("lower_bound_report", [](std::uint32_t q, int n, int d, std::uint64_t r) {
        const auto b = lower_bound_report(q, n, d, r);
        return py::make_tuple(b.error_lower_bound, b.min_queries_for_third);
    }, "q"_a, "n"_a, "d"_a, "r"_a, "Returns (error_lower_bound, min_queries_for_third).");

    m.def("qft_matrix", [](const FieldCtx &f) {
        const auto qft = build_qft(f);
        std::vector<std::vector<Amplitude>> rows(f.q(), std::vector<Amplitude>(f.q()));
        for (std::size_t y = 0; y < f.q(); ++y) {
            for (std::size_t x = 0; x < f.q(); ++x) rows[y][x] = qft.forward()(y, x);
        }
        return rows;
    }, "field"_a);

    m.def("verify_lemma_fs", [](const FieldCtx &f, int n, int d, int trials, std::uint64_t seed) {
        return report_dict(verify_lemma_fs(f, n, d, trials, seed));
    }, "field"_a, "n"_a, "d"_a, "trials"_a, "seed"_a = 0);
    m.def("verify_kickback", [](const FieldCtx &f, int n_max, int trials, std::uint64_t seed) {
        return report_dict(verify_kickback(f, n_max, trials, seed));
    }, "field"_a, "n_max"_a, "trials"_a, "seed"_a = 0);
    m.def("verify_counting", [](const FieldCtx &f, int n, int d) {
        return report_dict(verify_counting(f, n, d));
    }, "field"_a, "n"_a, "d"_a);
}
