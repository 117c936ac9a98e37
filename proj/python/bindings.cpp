#include "witt/cli.hpp"
#include "witt/extension.hpp"
#include "witt/leibniz.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace witt;

namespace {

// rationals cross the boundary as text; the Python side turns them into Fractions
Rational to_rational(const py::object &o) { return parse_rational(py::str(o).cast<std::string>()); }

LambdaParam to_lambda(const py::object &o) { return parse_lambda(py::str(o).cast<std::string>()); }

py::dict h2_dict(const H2Dims &d)
{
	py::dict r;
	r["vir"] = d.vir;
	r["ab"] = d.ab;
	r["mix"] = d.mix;
	r["total"] = d.total;
	return r;
}

RunConfig make_config(const std::optional<std::string> &algebra, const py::object &lambda, const py::object &a,
                      const py::object &b, int window, const std::string &format, const std::string &suite,
                      std::uint64_t seed, const std::string &target)
{
	RunConfig cfg;
	cfg.algebra = algebra;
	if (!lambda.is_none())
		cfg.lambda = to_lambda(lambda);
	if (!a.is_none())
		cfg.a = to_rational(a);
	if (!b.is_none())
		cfg.b = to_rational(b);
	cfg.window = window;
	cfg.format = parse_format(format);
	cfg.suite = suite;
	cfg.seed = seed;
	cfg.target = target;
	return cfg;
}

template <class F> py::tuple run_command(F &&cmd, const RunConfig &cfg)
{
	std::ostringstream out, err;
	int code;
	{
		py::gil_scoped_release release;
		code = cmd(cfg, out, err);
	}
	return py::make_tuple(code, out.str(), err.str());
}

} // namespace

PYBIND11_MODULE(_wittcoh, m)
{
	m.doc() = "Cohomology of Witt-type Lie algebras over Q";

	py::register_exception<Error>(m, "WittError", PyExc_ValueError);

	m.def("normalize_rational", [](const py::object &q) { return format_rational(to_rational(q)); });

	py::class_<AlgebraSpec>(m, "Algebra")
	    .def_static("witt", &AlgebraSpec::witt)
	    .def_static("tensor_density", [](const py::object &a, const py::object &b) {
		    return AlgebraSpec::tensor_density(to_rational(a), to_rational(b));
	    })
	    .def_static("wa", [](const py::object &l) { return AlgebraSpec::semidirect_a(to_lambda(l)); })
	    .def_static("wb", [](const py::object &l) { return AlgebraSpec::semidirect_b(to_lambda(l)); })
	    .def_property_readonly("name", &AlgebraSpec::name)
	    .def_property_readonly("is_extended", [](const AlgebraSpec &s) { return s.kind() == Kind::Extended; })
	    .def("bracket",
	         [](const AlgebraSpec &s, const std::string &x, const std::string &y) {
		         return format_element(bracket(s, parse_element(x), parse_element(y)), s.module_letter());
	         })
	    .def("jacobi_defect",
	         [](const AlgebraSpec &s, const std::string &x, const std::string &y, const std::string &z) {
		         return format_element(jacobi_defect(s, parse_element(x), parse_element(y), parse_element(z)),
		                               s.module_letter());
	         })
	    .def("__repr__", [](const AlgebraSpec &s) { return "<Algebra " + s.name() + ">"; });

	m.def("virasoro", &virasoro);
	m.def("vir_a", [](const py::object &l) { return vir_a(to_lambda(l)); });
	m.def("vir_b", [](const py::object &l) { return vir_b(to_lambda(l)); });
	m.def("cubic_mixing_extension", &cubic_mixing_extension);
	m.def(
	    "verify_extension",
	    [](const AlgebraSpec &s, int N) {
		    py::list out;
		    char letter = s.module_letter();
		    for (const auto &d : verify_extension(s, N))
			    out.append(py::make_tuple(format_basis(d.x, letter), format_basis(d.y, letter),
			                              format_basis(d.z, letter), format_element(d.value, letter)));
		    return out;
	    },
	    py::arg("spec"), py::arg("N") = 8);

	m.def("h2_dimensions", [](const AlgebraSpec &s, int N) { return h2_dict(h2_dimensions(s, N)); }, py::arg("spec"),
	      py::arg("N") = 8);
	m.def("hl2_dimension", &hl2_dimension, py::arg("spec"), py::arg("N") = 8);
	m.def("inv_dimension", &inv_dimension, py::arg("spec"), py::arg("N") = 8);
	m.def("h1_dimension", &h1_adjoint_dimension, py::arg("spec"), py::arg("N") = 8);
	m.def(
	    "exact_sequence_report",
	    [](const AlgebraSpec &s, int N) {
		    ExactSequenceReport r = exact_sequence_report(s, N);
		    py::dict d;
		    d["h2"] = r.h2;
		    d["hl2"] = r.hl2;
		    d["inv"] = r.inv;
		    d["image_rank"] = r.image_rank;
		    d["images_invariant"] = r.images_invariant;
		    d["ok"] = r.ok;
		    return d;
	    },
	    py::arg("spec"), py::arg("N") = 8);
	m.def("check_f_equivariance", [](const py::object &l, int N) { return check_f_equivariance(to_lambda(l), N).empty(); },
	      py::arg("lam"), py::arg("N") = 8);

	m.def("_compose_auts", [](const std::string &s1, const std::string &s2, const AlgebraSpec &spec) {
		return aut_to_json(compose_auts(aut_from_json(s1), aut_from_json(s2), spec));
	});
	m.def("_inverse_aut",
	      [](const std::string &s, const AlgebraSpec &spec) { return aut_to_json(inverse_aut(aut_from_json(s), spec)); });
	m.def("_apply_aut", [](const std::string &s, const AlgebraSpec &spec, const std::string &x) {
		return format_element(apply_aut(aut_from_json(s), spec, parse_element(x)), spec.module_letter());
	});
	m.def("_check_aut", [](const std::string &s, const AlgebraSpec &spec, int N) {
		return check_aut(aut_from_json(s), spec, N).empty();
	});
	m.def("inner_identity_check", [](const py::object &l, int N) { return inner_identity_check(to_lambda(l), N); },
	      py::arg("lam"), py::arg("N") = 8);

	m.def(
	    "_solve",
	    [](const std::string &target, const std::optional<std::string> &algebra, const py::object &lam,
	       const py::object &a, const py::object &b, int window) {
		    RunConfig cfg = make_config(algebra, lam, a, b, window, "json", "all", 0, target);
		    SolveResult r;
		    {
			    py::gil_scoped_release release;
			    r = solve(cfg);
		    }
		    return format_solve_json(r);
	    },
	    py::arg("target"), py::arg("algebra") = py::none(), py::arg("lam") = py::none(), py::arg("a") = py::none(),
	    py::arg("b") = py::none(), py::arg("window") = 8);
	m.def(
	    "tables",
	    [](const std::optional<std::string> &algebra, const py::object &lam, const py::object &a, const py::object &b,
	       int window, const std::string &format) {
		    return run_command(cmd_tables, make_config(algebra, lam, a, b, window, format, "all", 0, ""));
	    },
	    py::arg("algebra") = py::none(), py::arg("lam") = py::none(), py::arg("a") = py::none(),
	    py::arg("b") = py::none(), py::arg("window") = 8, py::arg("format") = "json");
	m.def(
	    "verify",
	    [](const std::optional<std::string> &algebra, const py::object &lam, const py::object &a, const py::object &b,
	       int window, const std::string &format, const std::string &suite, std::uint64_t seed) {
		    return run_command(cmd_verify, make_config(algebra, lam, a, b, window, format, suite, seed, ""));
	    },
	    py::arg("algebra") = py::none(), py::arg("lam") = py::none(), py::arg("a") = py::none(),
	    py::arg("b") = py::none(), py::arg("window") = 8, py::arg("format") = "json", py::arg("suite") = "all",
	    py::arg("seed") = 0);
}
