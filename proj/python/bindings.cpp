#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <string>
#include <vector>

#include "cusp/asymptotics.hpp"
#include "cusp/cache.hpp"
#include "cusp/census.hpp"
#include "cusp/characters.hpp"
#include "cusp/dirichlet_series.hpp"
#include "cusp/errors.hpp"
#include "cusp/special.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py(const cusp::BigInt& v) {
  const std::string s = v.get_str(16);
  return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 16));
}

py::list to_py(const cusp::IntSeries& s) {
  py::list out;
  for (const auto& c : s.coeffs()) out.append(to_py(c));
  return out;
}

py::dict to_py(const cusp::CensusReport& r) {
  py::dict d;
  d["limit"] = r.limit;
  d["same_sign"] = r.same_sign;
  d["opposite_sign"] = r.opposite_sign;
  d["zero"] = r.zero;
  d["first_same"] = r.first_same;
  d["first_opposite"] = r.first_opposite;
  py::list rows;
  for (const auto& c : r.cumulative) {
    rows.append(py::make_tuple(c.checkpoint, c.same, c.opposite, c.zero));
  }
  d["cumulative"] = rows;
  return d;
}

py::tuple to_py(const cusp::NormalizedCoeffs& nc) {
  std::vector<double> lam(nc.lambdas().begin(), nc.lambdas().end());
  std::vector<int> sign(nc.signs().begin(), nc.signs().end());
  return py::make_tuple(lam, sign);
}

}  // namespace

PYBIND11_MODULE(_cusp, m) {
  m.doc() = "Exact eigenform coefficients and sign-change statistics";

  py::register_exception<cusp::IntegrityError>(m, "IntegrityError", PyExc_ArithmeticError);
  m.attr("CATALOG") = std::vector<int>(cusp::EigenformId::kCatalog.begin(),
                                       cusp::EigenformId::kCatalog.end());

  m.def("delta_coefficients", [](std::size_t x) { return to_py(cusp::delta_series(x)); },
        py::arg("limit"), "tau(0..X), cross-checked between two product expansions");
  m.def("eigenform_coefficients",
        [](int weight, std::size_t x) {
          return to_py(cusp::eigenform_series(cusp::EigenformId(weight), x));
        },
        py::arg("weight"), py::arg("limit"));
  m.def("normalized_coefficients",
        [](int weight, std::size_t x) {
          // index 0 is a placeholder; n runs 1..X
          return to_py(cusp::normalize(cusp::eigenform_series(cusp::EigenformId(weight), x), weight));
        },
        py::arg("weight"), py::arg("limit"), "(lambda, sign) lists indexed by n");
  m.def("coeff_at_power",
        [](std::uint64_t n, unsigned j, int weight) {
          const auto sieve = cusp::build_sieve(std::max<std::uint64_t>(n, 2));
          const auto s = cusp::eigenform_series(cusp::EigenformId(weight), std::max<std::uint64_t>(n, 2));
          return to_py(cusp::coeff_at_power(n, j, s, sieve, weight));
        },
        py::arg("n"), py::arg("j"), py::arg("weight"), "a(n^j) via the Hecke recurrence");

  m.def("char_value",
        [](std::uint32_t modulus, std::uint32_t r, std::int64_t n) -> py::object {
          const auto v = cusp::char_eval(cusp::build_table(modulus), r, n);
          if (v.is_zero()) return py::none();
          return py::make_tuple(v.numerator(), v.denominator());
        },
        py::arg("modulus"), py::arg("r"), py::arg("n"),
        "psi_r(n) as (t, D) meaning exp(2 pi i t/D), or None off the units");
  m.def("orthogonality_check",
        [](std::uint32_t modulus, std::int64_t l, std::int64_t n) {
          const auto q = cusp::orthogonality_check(cusp::build_table(modulus), l, n);
          return py::make_tuple(to_py(q.num), to_py(q.den));
        },
        py::arg("modulus"), py::arg("l"), py::arg("n"));

  m.def("progression_census",
        [](int wf, int wg, std::uint64_t modulus, std::int64_t residue, std::uint64_t x,
           bool cumulative) {
          cusp::EigenformFactory factory(x);
          const auto f = cusp::normalize(factory.eigenform(cusp::EigenformId(wf)), wf);
          const auto g = cusp::normalize(factory.eigenform(cusp::EigenformId(wg)), wg);
          return to_py(cusp::progression_census(f.signs(), g.signs(), modulus, residue, x, cumulative));
        },
        py::arg("weight_f"), py::arg("weight_g"), py::arg("modulus") = 1, py::arg("residue") = 1,
        py::arg("limit") = 1000, py::arg("cumulative") = false);
  m.def("sparse_census",
        [](int wf, int wg, unsigned j, std::uint64_t x, bool cumulative) {
          const std::uint64_t lim = std::max<std::uint64_t>(x, 2);
          cusp::EigenformFactory factory(lim);
          const auto sieve = cusp::build_sieve(lim);
          return to_py(cusp::sparse_census(factory.eigenform(cusp::EigenformId(wf)), wf,
                                           factory.eigenform(cusp::EigenformId(wg)), wg, sieve, j,
                                           x, cumulative));
        },
        py::arg("weight_f"), py::arg("weight_g"), py::arg("power"), py::arg("limit") = 1000,
        py::arg("cumulative") = false);

  m.def("exponent_table", [] {
    const auto t = cusp::exponent_table();
    py::dict d;
    for (unsigned j = 2; j <= 4; ++j) {
      const auto a = t.alpha(j), b = t.beta(j);
      d[py::int_(j)] = py::make_tuple(py::make_tuple(a.num, a.den), py::make_tuple(b.num, b.den));
    }
    return d;
  }, "{j: ((alpha num, den), (beta num, den))}");
  m.def("fit_main_term",
        [](const std::vector<std::uint64_t>& xs, const std::vector<double>& sums) {
          if (xs.size() != sums.size()) throw py::value_error("xs and sums differ in length");
          std::vector<cusp::SumPoint> pts;
          for (std::size_t i = 0; i < xs.size(); ++i) pts.push_back({xs[i], sums[i]});
          const auto r = cusp::fit_main_term(pts);
          py::dict d;
          d["slope"] = r.slope;
          d["slope_stderr"] = r.slope_stderr;
          d["remainder_exponent"] = r.remainder_exponent;
          d["envelope_exponent"] = r.envelope_exponent;
          d["near_zero_slope"] = r.near_zero_slope;
          return d;
        },
        py::arg("xs"), py::arg("sums"));

  m.def("zeta", &cusp::zeta, py::arg("s"));
  m.def("gamma", &cusp::gamma, py::arg("s"));
  m.def("rankin_partial",
        [](int wf, int wg, std::uint64_t modulus, std::int64_t residue, cusp::Complex s,
           std::uint64_t x) {
          cusp::EigenformFactory factory(std::max<std::uint64_t>(x, 2));
          const auto f = cusp::normalize(factory.eigenform(cusp::EigenformId(wf)), wf);
          const auto g = cusp::normalize(factory.eigenform(cusp::EigenformId(wg)), wg);
          const auto p = cusp::rankin_partial(f, g, modulus, residue, s, x);
          return py::make_tuple(p.value, p.tail_bound);
        },
        py::arg("weight_f"), py::arg("weight_g"), py::arg("modulus"), py::arg("residue"),
        py::arg("s"), py::arg("limit"), "(partial sum, tail bound)");

  m.def("write_coeff_cache",
        [](const std::filesystem::path& path, int weight, std::uint64_t x) {
          cusp::write_coeff_cache(
              path, cusp::normalize(cusp::eigenform_series(cusp::EigenformId(weight), x), weight));
        },
        py::arg("path"), py::arg("weight"), py::arg("limit"));
  m.def("read_coeff_cache",
        [](const std::filesystem::path& path) {
          const auto nc = cusp::read_coeff_cache(path);
          auto t = to_py(nc);
          return py::make_tuple(nc.weight(), t[0], t[1]);
        },
        py::arg("path"), "(weight, lambda, sign)");
}
