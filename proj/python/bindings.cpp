#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "residue/cli.hpp"
#include "residue/experiments.hpp"
#include "residue/gausscensus.hpp"
#include "residue/lattice.hpp"
#include "residue/modmath.hpp"
#include "residue/quadcong.hpp"
#include "residue/twosquares.hpp"

namespace py = pybind11;
using namespace residue;

// Python int <-> Natural through decimal text.
namespace pybind11::detail {
template <>
struct type_caster<Natural> {
  PYBIND11_TYPE_CASTER(Natural, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    const std::string text = py::str(src);
    value = Natural::parse(text);
    return true;
  }

  static handle cast(const Natural& n, return_value_policy, handle) {
    const std::string text = n.str();
    return PyLong_FromString(text.c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

py::object optional_natural(const std::optional<Natural>& n) {
  return n ? py::cast(*n) : py::none();
}

py::dict report_dict(const StatReport& r) {
  py::dict d;
  d["test_name"] = r.test_name;
  d["n"] = r.sample_size;
  d["statistic"] = r.statistic;
  d["p_value"] = r.p_value;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quadratic residues, two-square decompositions, Gaussian-prime and lattice-point censuses";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  // modmath
  m.def("is_prime", [](const Natural& n, std::uint64_t seed) { return is_prime(n, seed); }, py::arg("n"),
        py::arg("seed") = kDefaultPrimalitySeed);
  m.def("mod_pow", [](const Natural& b, const Natural& e, const Natural& mod) { return mod_pow(b, e, mod); },
        py::arg("base"), py::arg("exp"), py::arg("modulus"));
  m.def(
      "factorial_mod",
      [](const Natural& n, const Natural& mod) {
        OpCount ops;
        Natural v = factorial_mod(n, mod, &ops);
        return py::make_tuple(v, ops.multiplications);
      },
      py::arg("n"), py::arg("modulus"), "Returns (n! mod modulus, multiplications).");
  m.def(
      "wilson_sqrt_minus_one",
      [](const Natural& p) {
        OpCount ops;
        Natural w = wilson_sqrt_minus_one(Prime4m1(p), &ops);
        return py::make_tuple(w, ops.multiplications);
      },
      py::arg("p"), "Returns (((p-1)/2)! mod p, multiplications).");
  m.def(
      "sqrt_mod_prime",
      [](const Natural& a, const Natural& p) -> py::object {
        const auto r = sqrt_mod_prime(a, Prime(p));
        if (!r) return py::none();
        return py::make_tuple(r->lo, r->hi);
      },
      py::arg("a"), py::arg("p"), "Returns (lo, hi) or None for a non-residue.");
  m.def("legendre_symbol", [](const Natural& a, const Natural& p) { return legendre_symbol(a, Prime(p)); },
        py::arg("a"), py::arg("p"));
  m.def("primes_in_class", &primes_in_class, py::arg("limit"), py::arg("residue"), py::arg("modulus"));

  // quadcong
  m.def(
      "decide",
      [](const Natural& a, const Natural& b, const Natural& c) {
        return optional_natural(decide(QCInstance(a, b, c)).witness);
      },
      py::arg("a"), py::arg("b"), py::arg("c"), "Smallest witness 0 < x < c, or None.");
  m.def(
      "brute_force",
      [](const Natural& a, const Natural& b, const Natural& c) {
        const auto r = brute_force(QCInstance(a, b, c));
        return py::make_tuple(optional_natural(r.verdict.witness), r.visited);
      },
      py::arg("a"), py::arg("b"), py::arg("c"), "Returns (witness or None, visited).");
  m.def(
      "verify_certificate",
      [](const Natural& a, const Natural& b, const Natural& c, const Natural& x) {
        return verify_certificate(QCInstance(a, b, c), x);
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"));

  // twosquares
  m.def(
      "decompose",
      [](const Natural& p) {
        const auto d = decompose(Prime4m1(p));
        return py::make_tuple(d.s, d.t, d.theta);
      },
      py::arg("p"), "Returns (s, t, theta) with p = s^2 + t^2, s > t > 0.");
  m.def(
      "decompose_brute",
      [](const Natural& p) {
        const auto r = decompose_brute(Prime4m1(p));
        return py::make_tuple(r.decomposition.s, r.decomposition.t, r.visited);
      },
      py::arg("p"), "Returns (s, t, visited).");
  m.def("uniqueness_check", [](const Natural& p) { return uniqueness_check(Prime4m1(p)); }, py::arg("p"));

  // gausscensus
  m.def(
      "enumerate_gaussian_primes",
      [](std::uint64_t x, unsigned workers) {
        py::list out;
        for (const auto& g : enumerate_gaussian_primes(x, workers)) out.append(py::make_tuple(g.re, g.im, g.norm, g.arg));
        return out;
      },
      py::arg("x_limit"), py::arg("workers") = 1, "List of (re, im, norm, arg).");
  m.def(
      "count_pi_zi",
      [](std::uint64_t x, unsigned workers) {
        const auto c = count_pi_zi(x, workers);
        return py::make_tuple(c.count, c.ratio);
      },
      py::arg("x_limit"), py::arg("workers") = 1, "Returns (count, count * log(x) / x).");
  m.def("sector_count", py::overload_cast<std::uint64_t, double, double, unsigned>(&sector_count), py::arg("x_limit"),
        py::arg("theta1"), py::arg("theta2"), py::arg("workers") = 1);
  m.def(
      "sector_histogram",
      [](std::uint64_t x, std::size_t bins, bool exclude_axis, unsigned workers) {
        const auto h = sector_histogram(x, bins, {exclude_axis, workers});
        py::dict d;
        d["bin_edges"] = h.bin_edges;
        d["counts"] = h.counts;
        d["total"] = h.total;
        return d;
      },
      py::arg("x_limit"), py::arg("bins"), py::arg("exclude_axis") = false, py::arg("workers") = 1);

  // lattice
  m.def(
      "count_disc",
      [](double r, unsigned workers) {
        const auto d = count_disc(r, workers);
        return py::make_tuple(d.exact, d.approx, d.difference);
      },
      py::arg("r"), py::arg("workers") = 1, "Returns (exact, floor(pi r^2), difference).");
  m.def("count_octant", &count_octant, py::arg("R"), py::arg("workers") = 1);
  m.def("on_circle_count", &on_circle_count, py::arg("R"));
  m.def(
      "prime_point_ratio",
      [](std::uint64_t R, unsigned workers) {
        const auto r = prime_point_ratio(R, workers);
        py::dict d;
        d["R"] = r.R;
        d["N"] = r.N;
        d["N0"] = r.N0;
        d["ratio"] = r.ratio;
        d["predicted"] = r.predicted;
        return d;
      },
      py::arg("R"), py::arg("workers") = 1);
  m.def(
      "fit_octant_constant",
      [](const std::vector<std::uint64_t>& R, unsigned workers) {
        const auto f = fit_octant_constant(R, workers);
        py::dict d;
        d["c"] = f.c;
        d["residuals"] = f.residuals;
        d["point_constants"] = f.point_constants;
        return d;
      },
      py::arg("R_values"), py::arg("workers") = 1);

  // experiments
  m.def(
      "randomness_suite",
      [](std::uint64_t p_limit, std::size_t bins, bool exclude_axis, unsigned workers) {
        py::list out;
        for (const auto& r : randomness_suite(p_limit, {bins, exclude_axis, workers})) out.append(report_dict(r));
        return out;
      },
      py::arg("p_limit"), py::arg("bins") = 16, py::arg("exclude_axis") = false, py::arg("workers") = 1);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line front end in process; returns (exit_code, stdout, stderr).");
}
