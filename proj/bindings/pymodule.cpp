// Python bindings for the core operations: exact polynomial arithmetic over
// the universal ring, the chain construction, the norm oracle, identity
// replay, numeric instances, and the lattice cohomology helpers.  Arbitrary-
// precision integers cross the boundary as native Python ints (via decimal
// strings), so nothing is ever truncated.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "normone/construction.hpp"
#include "normone/instances.hpp"
#include "normone/lattice.hpp"
#include "normone/oracle.hpp"
#include "normone/replay.hpp"
#include "normone/serialize.hpp"

namespace py = pybind11;
using namespace normone;

namespace {

py::int_ int_to_py(const Int& v) {
    PyObject* o = PyLong_FromString(v.str().c_str(), nullptr, 10);
    if (o == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(o);
}

Int int_from_py(const py::object& o) {
    return Int(py::str(o).cast<std::string>());
}

Word word_from_py(const GroupContext& ctx, const std::vector<long long>& letters) {
    Word w;
    for (long long l : letters) {
        if (l < 0 || static_cast<std::uint64_t>(l) >= ctx.order())
            throw ParameterError("letter " + std::to_string(l) + " outside group");
        w.push_back(static_cast<Letter>(l));
    }
    return w;
}

std::vector<int> word_to_py(const Word& w) {
    std::vector<int> out;
    out.reserve(w.size());
    for (Letter l : w) out.push_back(static_cast<int>(l));
    return out;
}

Strategy strategy_from_name(const std::string& name) {
    if (name == "unit") return Strategy::Unit;
    if (name == "doubling") return Strategy::Doubling;
    if (name == "explicit") return Strategy::Explicit;
    throw ParameterError("unknown strategy '" + name + "' (use unit, doubling, or explicit)");
}

StepCheck check_from_name(const std::string& name) {
    if (name == "none") return StepCheck::None;
    if (name == "certificate") return StepCheck::Certificate;
    if (name == "oracle") return StepCheck::Oracle;
    throw ParameterError("unknown check '" + name + "' (use none, certificate, or oracle)");
}

InstanceKind kind_from_name(const std::string& name) {
    if (name == "scalar") return InstanceKind::Scalar;
    if (name == "matrix") return InstanceKind::Matrix;
    throw ParameterError("unknown instance kind '" + name + "' (use scalar or matrix)");
}

IntMatrix matrix_from_py(const std::vector<std::vector<py::object>>& rows) {
    std::vector<std::vector<Int>> converted;
    converted.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<Int> r;
        r.reserve(row.size());
        for (const auto& entry : row) r.push_back(int_from_py(entry));
        converted.push_back(std::move(r));
    }
    return IntMatrix::from_rows(converted);
}

py::list matrix_to_py(const IntMatrix& m) {
    py::list out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        py::list row;
        for (std::size_t c = 0; c < m.cols(); ++c) row.append(int_to_py(m.at(r, c)));
        out.append(row);
    }
    return out;
}

py::list factors_to_py(const std::vector<Int>& factors) {
    py::list out;
    for (const Int& f : factors) out.append(int_to_py(f));
    return out;
}

py::dict replay_to_py(const ReplayReport& rep) {
    py::dict out;
    out["m"] = rep.m;
    out["k"] = rep.k;
    out["all_ok"] = rep.all_ok;
    py::list checks;
    for (const IdentityCheck& c : rep.checks) {
        py::dict entry;
        entry["eq"] = c.name;
        entry["ok"] = c.ok;
        entry["residual_terms"] = c.residual_terms;
        checks.append(entry);
    }
    out["checks"] = checks;
    return out;
}

std::string poly_repr(const Poly& P) {
    if (P.term_count() <= 24) return poly_to_text(P);
    return "<element with " + std::to_string(P.term_count()) + " monomials over " +
           P.ctx().describe() + ">";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Exact construction and verification of norm-one elements for cyclic "
        "p-group actions on noncommutative rings.";

    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    static py::exception<VerificationError> verification_exc(m, "VerificationFailure");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const VerificationError& e) {
            py::set_error(verification_exc, e.what());
        }
    });

    py::class_<GroupContext>(m, "GroupContext")
        .def(py::init<int, int>(), py::arg("p"), py::arg("n"))
        .def_property_readonly("p", &GroupContext::p)
        .def_property_readonly("n", &GroupContext::n)
        .def_property_readonly("order", &GroupContext::order)
        .def("subgroup_order", &GroupContext::subgroup_order, py::arg("m"))
        .def("subgroup_step", &GroupContext::subgroup_step, py::arg("m"))
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__repr__", &GroupContext::describe);

    py::class_<Poly>(m, "Poly")
        .def_static("zero", &Poly::zero, py::arg("ctx"))
        .def_static("unit", &Poly::unit, py::arg("ctx"))
        .def_static("generator", &Poly::generator, py::arg("ctx"), py::arg("j") = 0)
        .def_static(
            "constant",
            [](const GroupContext& ctx, const py::object& c) {
                return Poly::constant(ctx, int_from_py(c));
            },
            py::arg("ctx"), py::arg("c"))
        .def_static(
            "from_terms",
            [](const GroupContext& ctx,
               const std::vector<std::pair<py::object, std::vector<long long>>>& terms) {
                std::vector<Poly::Term> built;
                built.reserve(terms.size());
                for (const auto& [c, w] : terms)
                    built.push_back({word_from_py(ctx, w), int_from_py(c)});
                return Poly::from_terms(ctx, std::move(built));
            },
            py::arg("ctx"), py::arg("terms"),
            "Build from (coefficient, word) pairs; merges duplicates and drops zeros.")
        .def_static("from_json", [](const std::string& text) { return poly_from_json(text); },
                    py::arg("text"))
        .def_static("from_text",
                    [](const GroupContext& ctx, const std::string& text) {
                        return poly_from_text(ctx, text);
                    },
                    py::arg("ctx"), py::arg("text"))
        .def_property_readonly("ctx", &Poly::ctx)
        .def_property_readonly("term_count", &Poly::term_count)
        .def_property_readonly("degree", &Poly::degree)
        .def("is_zero", &Poly::is_zero)
        .def("is_unit", &Poly::is_unit)
        .def(
            "coeff",
            [](const Poly& P, const std::vector<long long>& word) {
                return int_to_py(P.coeff(word_from_py(P.ctx(), word)));
            },
            py::arg("word"), "Coefficient of the given word, 0 when absent.")
        .def("terms",
             [](const Poly& P) {
                 py::list out;
                 for (const Poly::Term& t : P.terms())
                     out.append(py::make_tuple(int_to_py(t.coeff), word_to_py(t.word)));
                 return out;
             })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(
            "scale", [](const Poly& P, const py::object& c) { return P.scale(int_from_py(c)); },
            py::arg("c"))
        .def("shift", [](const Poly& P, long long e) { return shift(P, e); }, py::arg("e"),
             "Apply the generator power sigma^e letterwise.")
        .def("to_json", [](const Poly& P) { return poly_to_json(P); })
        .def("to_text", [](const Poly& P) { return poly_to_text(P); })
        .def("to_latex", [](const Poly& P) { return poly_to_latex(P); })
        .def("__repr__", &poly_repr);

    m.def("shift", [](const Poly& P, long long e) { return shift(P, e); }, py::arg("poly"),
          py::arg("e"));
    m.def(
        "normal_form",
        [](const Poly& P, int subgroup_exponent) {
            return RelationSet::for_subgroup_exponent(P.ctx(), subgroup_exponent).normal_form(P);
        },
        py::arg("poly"), py::arg("subgroup_exponent") = 1,
        "Normal form modulo the coset-sum relations of the given subgroup.");
    m.def(
        "norm",
        [](const Poly& P, int m) { return apply_operator(norm_op(SubgroupSpec(P.ctx(), m)), P); },
        py::arg("poly"), py::arg("m"), "The raw subgroup norm: product of all subgroup shifts.");
    m.def(
        "is_norm_one",
        [](const Poly& P, int m) { return is_norm_one(P, SubgroupSpec(P.ctx(), m)); },
        py::arg("poly"), py::arg("m"),
        "Exact check that the subgroup norm reduces to 1 in the universal ring.");
    m.def(
        "norm_residual",
        [](const Poly& P, int m) { return reduce_norm(P, SubgroupSpec(P.ctx(), m)).residual; },
        py::arg("poly"), py::arg("m"),
        "Normal form of the subgroup norm minus 1 (zero iff norm-one).");
    m.def("step_bound", [](int p, int m, int k) { return int_to_py(step_bound(p, m, k)); },
          py::arg("p"), py::arg("m"), py::arg("k"));
    m.def("unit_chain_bound", [](int p, int n) { return int_to_py(unit_chain_bound(p, n)); },
          py::arg("p"), py::arg("n"));

    m.def("norm_defect", &norm_defect, py::arg("x"), py::arg("m"), py::arg("k"));
    m.def("defect_witness", &defect_witness, py::arg("x"), py::arg("m"), py::arg("k"));
    m.def(
        "solve_coboundary",
        [](const Poly& x_wit, const Poly& z, int m, bool check) {
            return solve_coboundary(x_wit, z, SubgroupSpec(x_wit.ctx(), m), check);
        },
        py::arg("x_wit"), py::arg("z"), py::arg("m"), py::arg("check") = true);
    m.def("certify_step", &certify_step, py::arg("p"), py::arg("m"), py::arg("k"),
          "Verify the generic step identity in the step-local presented ring.");
    m.def("generic_step_multiplier", &generic_step_multiplier, py::arg("p"), py::arg("m"),
          py::arg("k"));
    m.def("unit_schedule", &unit_schedule, py::arg("n"));
    m.def("doubling_schedule", &doubling_schedule, py::arg("n"));

    py::class_<LiftStep>(m, "LiftStep")
        .def_readonly("m", &LiftStep::m)
        .def_readonly("k", &LiftStep::k)
        .def_readonly("expanded", &LiftStep::expanded)
        .def_readonly("defect", &LiftStep::defect)
        .def_readonly("witness", &LiftStep::witness)
        .def_readonly("multiplier", &LiftStep::multiplier)
        .def_readonly("output", &LiftStep::output)
        .def_readonly("step_multiplier", &LiftStep::step_multiplier)
        .def_readonly("step_output", &LiftStep::step_output)
        .def_readonly("step_monomials", &LiftStep::step_monomials)
        .def_property_readonly("bound", [](const LiftStep& s) { return int_to_py(s.bound); })
        .def_property_readonly("verified_by",
                               [](const LiftStep& s) { return step_check_name(s.verified_by); })
        .def("__repr__", [](const LiftStep& s) {
            return "<step (" + std::to_string(s.m) + "," + std::to_string(s.k) + "), " +
                   std::to_string(s.step_monomials) + " monomials>";
        });

    py::class_<Chain>(m, "Chain")
        .def_readonly("ctx", &Chain::ctx)
        .def_readonly("schedule", &Chain::schedule)
        .def_readonly("steps", &Chain::steps)
        .def_readonly("final", &Chain::final)
        .def("to_json",
             [](const Chain& c, bool include_polys) { return chain_to_json(c, include_polys); },
             py::arg("include_polys") = false)
        .def("__repr__", [](const Chain& c) {
            return "<chain over " + c.ctx.describe() + ", " + std::to_string(c.steps.size()) +
                   " steps>";
        });

    m.def(
        "generate",
        [](int p, int n, const std::string& strategy,
           const std::vector<std::pair<int, int>>& schedule, const std::string& check,
           std::size_t term_budget) {
            GroupContext ctx(p, n);
            GenerateOptions opts;
            opts.strategy = schedule.empty() ? strategy_from_name(strategy) : Strategy::Explicit;
            opts.schedule = schedule;
            opts.verify = check_from_name(check);
            opts.term_budget = term_budget;
            return generate(ctx, opts);
        },
        py::arg("p"), py::arg("n"), py::arg("strategy") = "unit",
        py::arg("schedule") = std::vector<std::pair<int, int>>{}, py::arg("check") = "oracle",
        py::arg("term_budget") = std::size_t{40'000'000},
        "Run the lifting chain from the generator up to a norm-one element for "
        "the full group.  A nonempty schedule overrides the named strategy.");

    m.def(
        "check_identities",
        [](const Poly& x, int m, int k) { return replay_to_py(check_identities(x, m, k)); },
        py::arg("x"), py::arg("m"), py::arg("k"),
        "Replay the eight derivation identities for one lift step; returns a dict.");
    m.def(
        "replay_report_json",
        [](const Poly& x, int m, int k) { return replay_report_to_json(check_identities(x, m, k)); },
        py::arg("x"), py::arg("m"), py::arg("k"));

    py::class_<InstanceSpec>(m, "InstanceSpec")
        .def_property_readonly(
            "kind",
            [](const InstanceSpec& i) {
                return std::string(i.kind == InstanceKind::Scalar ? "scalar" : "matrix");
            })
        .def_readonly("dim", &InstanceSpec::dim)
        .def_readonly("seed", &InstanceSpec::seed)
        .def_readonly("bound", &InstanceSpec::bound)
        .def_property_readonly("ctx", [](const InstanceSpec& i) { return i.ctx; })
        .def(
            "value",
            [](const InstanceSpec& i, std::size_t g) {
                if (g >= i.values.size()) throw ParameterError("group element out of range");
                const SquareMat& mat = i.values[g];
                py::list rows;
                for (int r = 0; r < mat.dim; ++r) {
                    py::list row;
                    for (int c = 0; c < mat.dim; ++c) row.append(int_to_py(mat.at(r, c)));
                    rows.append(row);
                }
                return rows;
            },
            py::arg("g"), "The generator image at sigma^g, as a dim x dim row list.")
        .def("to_json", [](const InstanceSpec& i) { return instance_to_json(i); })
        .def_static("from_json",
                    [](const std::string& text) { return instance_from_json(text); },
                    py::arg("text"))
        .def("__repr__", [](const InstanceSpec& i) {
            return "<instance " + std::string(i.kind == InstanceKind::Scalar ? "scalar" : "matrix") +
                   " dim " + std::to_string(i.dim) + " seed " + std::to_string(i.seed) + ">";
        });

    m.def(
        "random_instance",
        [](const GroupContext& ctx, const std::string& kind, int dim, std::uint64_t seed,
           int bound) { return random_instance(ctx, kind_from_name(kind), dim, seed, bound); },
        py::arg("ctx"), py::arg("kind") = "matrix", py::arg("dim") = 2, py::arg("seed") = 0,
        py::arg("bound") = 3);
    m.def(
        "check_numeric",
        [](const Poly& P, const InstanceSpec& inst, int m) {
            return check_numeric(P, inst, SubgroupSpec(P.ctx(), m));
        },
        py::arg("poly"), py::arg("instance"), py::arg("m"),
        "Evaluate on the instance and check that the subgroup norm is the unit.");
    m.def("has_noncommuting_witness", &has_noncommuting_witness, py::arg("instance"));

    m.def(
        "tate_h1",
        [](const std::vector<std::vector<py::object>>& t, std::uint32_t order) {
            return factors_to_py(tate_h1(LatticeAction(matrix_from_py(t), order)));
        },
        py::arg("t"), py::arg("order"),
        "Invariant factors (> 1) of ker(norm)/im(T - 1) for the action of T on Z^d.");
    m.def(
        "tate_h2",
        [](const std::vector<std::vector<py::object>>& t, std::uint32_t order) {
            return factors_to_py(tate_h2(LatticeAction(matrix_from_py(t), order)));
        },
        py::arg("t"), py::arg("order"),
        "Invariant factors (> 1) of ker(T - 1)/im(norm) for the action of T on Z^d.");
    m.def(
        "smith_invariant_factors",
        [](const std::vector<std::vector<py::object>>& rows) {
            return factors_to_py(smith_normal_form(matrix_from_py(rows)).invariant_factors());
        },
        py::arg("matrix"), "Nonzero diagonal entries of the Smith normal form.");
    m.def(
        "cyclic_shift_matrix",
        [](std::size_t count, std::size_t step) {
            return matrix_to_py(cyclic_shift_matrix(count, step));
        },
        py::arg("count"), py::arg("step") = 1);
}
