#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jetinv/equations.hpp"
#include "jetinv/forms.hpp"
#include "jetinv/frames.hpp"
#include "jetinv/invariants.hpp"
#include "jetinv/motion.hpp"
#include "jetinv/suites.hpp"
#include "jetinv/syzygy.hpp"

namespace py = pybind11;
using namespace jetinv;

namespace {

std::vector<Rat> rats_of(const std::vector<std::string>& xs) {
    std::vector<Rat> out;
    for (const auto& s : xs) out.push_back(rat_parse(s));
    return out;
}

std::vector<std::string> strs_of(const std::vector<Rat>& xs) {
    std::vector<std::string> out;
    for (const auto& r : xs) out.push_back(rat_str(r));
    return out;
}

} // namespace

PYBIND11_MODULE(_jetinv, m) {
    m.doc() = "Exact verification engine for differential invariants of the Euclidean "
              "motion group on jets of scalar functions";

    // translators run newest-first: keep the base registered before the
    // derived class so BadConfig maps to ValueError
    py::register_exception<Error>(m, "EngineError", PyExc_RuntimeError);
    py::register_exception<BadConfig>(m, "BadConfigError", PyExc_ValueError);

    py::class_<JetPoint>(m, "JetPoint")
        .def_static("from_json", &JetPoint::from_json)
        .def("to_json", &JetPoint::to_json)
        .def_property_readonly("n", &JetPoint::n)
        .def_property_readonly("order", &JetPoint::order)
        .def("u", [](const JetPoint& j) { return rat_str(j.u()); })
        .def("grad", [](const JetPoint& j) { return strs_of(j.grad()); })
        .def("coeff", [](const JetPoint& j, const std::string& key) {
            return rat_str(j.coeff(MultiIndex::parse(key, j.n())));
        })
        .def("__eq__", [](const JetPoint& a, const JetPoint& b) { return a == b; });

    m.def(
        "jet_of_polynomial",
        [](const std::vector<std::pair<std::string, std::vector<int>>>& terms,
           const std::vector<std::string>& x0, int k) {
            int n = static_cast<int>(x0.size());
            Poly p(n);
            for (const auto& [coeff, exps] : terms) {
                Poly t = Poly::constant(n, rat_parse(coeff));
                for (int i = 0; i < n; ++i)
                    t = t * Poly::x(n, i).pow(exps[static_cast<std::size_t>(i)]);
                p += t;
            }
            return jet_of_polynomial(p, rats_of(x0), k);
        },
        py::arg("terms"), py::arg("x0"), py::arg("order"),
        "Exact jet of a polynomial source given as [(coeff, [e1..en]), ...]");

    py::class_<Motion>(m, "Motion")
        .def_static("identity", &Motion::identity)
        .def_static("from_json", &Motion::from_json)
        .def("to_json", &Motion::to_json)
        .def("compose", &Motion::compose)
        .def("inverse", &Motion::inverse)
        .def("act_base",
             [](const Motion& g, const std::vector<std::string>& x) {
                 return strs_of(act_base(g, rats_of(x)));
             })
        .def("__eq__", [](const Motion& a, const Motion& b) { return a == b; });

    m.def(
        "cayley_rotation",
        [](const std::vector<std::vector<std::string>>& skew) {
            QMat s;
            for (const auto& row : skew) s.push_back(rats_of(row));
            return cayley_rotation(SkewParam(s));
        },
        py::arg("skew"), "Exact rational rotation (I+S)(I-S)^{-1} of a skew parameter");

    m.def("prolong_action", &prolong_action, py::arg("motion"), py::arg("jet"));

    m.def(
        "eval_invariant",
        [](const std::string& name, const JetPoint& j) {
            InvariantId id = InvariantId::parse(name);
            if (id.eigen_tagged()) return py::cast(eval_frame_invariant(id, j));
            return py::cast(rat_str(eval_invariant(id, j)));
        },
        py::arg("invariant"), py::arg("jet"),
        "Exact rational value (string) for algebraic invariants; float for eigen-tagged ones");

    m.def("newton_girard",
          [](const std::vector<std::string>& sums) { return strs_of(newton_girard(rats_of(sums))); });

    m.def("cayley_hamilton_reduce",
          [](const JetPoint& j) { return rat_str(cayley_hamilton_reduce(j)); });

    m.def("independence_rank", [](const std::vector<std::string>& names, const JetPoint& j) {
        std::vector<InvariantId> ids;
        for (const auto& s : names) ids.push_back(InvariantId::parse(s));
        return independence_rank(ids, j);
    });

    m.def("gram", [](const JetPoint& j) {
        GramData g = gram(j);
        py::dict out;
        auto mat = [](const QMat& m2) {
            std::vector<std::vector<std::string>> rows;
            for (const auto& r : m2) rows.push_back(strs_of(r));
            return rows;
        };
        out["gamma"] = mat(g.gamma);
        out["gamma_inv"] = mat(g.gamma_inv);
        out["unit_corner"] = mat(g.unit_corner);
        return out;
    });

    m.def(
        "verify_ode",
        [](int n, const std::vector<std::string>& alphas) {
            return verify_ode(CompatConfig{n, rats_of(alphas)});
        },
        py::arg("n"), py::arg("alphas"));

    m.def(
        "dplusf_power",
        [](int n, const std::vector<std::string>& alphas, int k) {
            return dplusf_power(CompatConfig{n, rats_of(alphas)}, k).str();
        },
        py::arg("n"), py::arg("alphas"), py::arg("k"));

    m.def(
        "eikonal_sample",
        [](int n, int k, std::uint64_t seed) { return eikonal_sample(n, k, seed).jet; },
        py::arg("n"), py::arg("order"), py::arg("seed"),
        "Exact random jet on the prolonged eikonal equation");

    m.def(
        "run_suite",
        [](const std::string& suite, int n, int order, int trials, std::uint64_t seed,
           double tolerance, const std::vector<std::string>& alphas, const std::string& out) {
            SuiteConfig cfg;
            cfg.suite = suite;
            cfg.n = n;
            cfg.order = order;
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.tolerance = tolerance;
            cfg.alphas = rats_of(alphas);
            cfg.out_path = out;
            Report rep = run_suite(cfg);
            if (!out.empty()) emit_report(rep, out);
            return rep.to_json();
        },
        py::arg("suite"), py::arg("n") = 2, py::arg("order") = 3, py::arg("trials") = 20,
        py::arg("seed") = 42, py::arg("tolerance") = 1e-9,
        py::arg("alphas") = std::vector<std::string>{}, py::arg("out") = std::string{},
        "Runs a verification suite and returns the canonical report JSON");
}
