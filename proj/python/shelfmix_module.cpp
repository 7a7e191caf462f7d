#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "shelfmix/binomial.hpp"
#include "shelfmix/errors.hpp"
#include "shelfmix/normal.hpp"
#include "shelfmix/simulate.hpp"
#include "shelfmix/tv.hpp"

namespace py = pybind11;
using namespace shelfmix;

namespace {

py::object to_py_int(const BigInt& value) {
  const std::string digits = value.get_str();
  PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

py::object to_py_fraction(const BigRat& value) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py_int(value.get_num()), to_py_int(value.get_den()));
}

BigInt big_from_py(const py::object& obj, const char* what) {
  const std::string text = py::str(obj).cast<std::string>();
  try {
    return BigInt(text, 10);
  } catch (const std::invalid_argument&) {
    throw py::value_error(std::string(what) + " must be an integer, got " + text);
  }
}

BigRat rat_from_py(const py::object& obj) {
  // accepts int, fractions.Fraction, or anything else exposing exact
  // numerator/denominator attributes
  if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator"))
    return make_rat(big_from_py(obj.attr("numerator"), "numerator"),
                    big_from_py(obj.attr("denominator"), "denominator"));
  return make_rat(big_from_py(obj, "ratio"), BigInt(1));
}

py::dict tilt_bounds_dict(const TiltBounds& tb) {
  py::dict d;
  d["delta_minus"] = to_py_fraction(tb.delta_minus);
  d["delta_plus"] = to_py_fraction(tb.delta_plus);
  d["argmin_k"] = tb.argmin_k;
  d["argmax_k"] = tb.argmax_k;
  return d;
}

}  // namespace

PYBIND11_MODULE(shelfmix, m) {
  m.doc() =
      "Exact and asymptotic total variation analysis of shelf-shuffled decks.\n"
      "Exact quantities are returned as fractions.Fraction.";

  py::register_exception<bound_error>(m, "BoundError", PyExc_RuntimeError);
  py::register_exception<invariant_error>(m, "InvariantError", PyExc_RuntimeError);

  m.def(
      "count_valleys",
      [](const std::vector<int>& perm) { return count_valleys(perm); },
      py::arg("perm"), "Number of interior positions with p[j-1] > p[j] < p[j+1].");

  m.def(
      "valley_counts",
      [](int n) {
        const ValleyTable vt = ValleyTable::build(n);
        py::list out;
        for (const BigInt& c : vt.counts()) out.append(to_py_int(c));
        return out;
      },
      py::arg("n"), "Exact counts of n-permutations by valley count.");

  m.def(
      "uniform_moments",
      [](int n) {
        const MomentPair mp = uniform_moments(n);
        return py::make_tuple(to_py_fraction(mp.mean), to_py_fraction(mp.variance));
      },
      py::arg("n"), "Closed-form (mean, variance) of the uniform valley count.");

  m.def(
      "table_moments",
      [](int n) {
        const MomentPair mp = ValleyTable::build(n).moments();
        return py::make_tuple(to_py_fraction(mp.mean), to_py_fraction(mp.variance));
      },
      py::arg("n"), "Exact (mean, variance) computed from the valley counts.");

  m.def(
      "uniform_cdf",
      [](int n, int k) { return to_py_fraction(uniform_cdf(n, k)); },
      py::arg("n"), py::arg("k"));

  m.def(
      "cgf_moments",
      [](int n, double theta) {
        const auto [mean, variance] = cgf_moments(n, theta);
        return py::make_tuple(mean, variance);
      },
      py::arg("n"), py::arg("theta"),
      "Mean and variance after reweighting by exp(theta * k).");

  m.def("clt_error", [](int n) { return clt_error(n); }, py::arg("n"));

  m.def(
      "binom",
      [](const py::object& a, const py::object& b) {
        return to_py_int(binom(big_from_py(a, "a"), big_from_py(b, "b")));
      },
      py::arg("a"), py::arg("b"), "Exact binomial coefficient C(a, b).");

  m.def("phi", &phi, py::arg("x"), "Standard normal CDF.");

  m.def(
      "q_values",
      [](int n, const py::object& m_obj) {
        const QTable qt = q_table(n, big_from_py(m_obj, "m"));
        py::list out;
        for (const BigRat& q : qt.q) out.append(to_py_fraction(q));
        return out;
      },
      py::arg("n"), py::arg("m"),
      "Exact per-permutation class probabilities q(k), k = 0..max valleys.");

  m.def(
      "shuffle_valley_pmf",
      [](int n, const py::object& m_obj) {
        const ValleyTable vt = ValleyTable::build(n);
        const auto pmf = shuffle_valley_pmf(q_table(vt, big_from_py(m_obj, "m")), vt);
        py::list out;
        for (const BigRat& p : pmf) out.append(to_py_fraction(p));
        return out;
      },
      py::arg("n"), py::arg("m"), "Exact valley pmf induced by an m-shelf shuffle.");

  m.def(
      "tilt_bounds",
      [](int n, const py::object& m_obj) {
        return tilt_bounds_dict(tilt_bounds(q_table(n, big_from_py(m_obj, "m"))));
      },
      py::arg("n"), py::arg("m"));

  m.def(
      "tilted_pmf",
      [](int n, const py::object& ratio) {
        const TiltedDist dist = tilted_dist(ValleyTable::build(n), rat_from_py(ratio));
        py::list out;
        for (const BigRat& p : dist.pmf()) out.append(to_py_fraction(p));
        return out;
      },
      py::arg("n"), py::arg("ratio"),
      "Uniform valley law reweighted by ratio^k, normalized.");

  m.def(
      "domination_check",
      [](int n, const py::object& m_obj) {
        const DominationReport report = domination_check(n, big_from_py(m_obj, "m"));
        py::dict d;
        d["ok"] = report.ok;
        d["violation_k"] = report.violation_k;
        d["max_slack_lower"] = to_py_fraction(report.max_slack_lower);
        d["max_slack_upper"] = to_py_fraction(report.max_slack_upper);
        return d;
      },
      py::arg("n"), py::arg("m"));

  m.def(
      "tv_exact",
      [](int n, const py::object& m_obj) {
        return to_py_fraction(tv_exact(n, big_from_py(m_obj, "m")));
      },
      py::arg("n"), py::arg("m"), "Exact total variation distance from uniform.");

  m.def(
      "tv_report",
      [](int n, const py::object& m_obj) {
        const TVReport report = tv_report(n, big_from_py(m_obj, "m"));
        py::dict d;
        d["n"] = report.n;
        d["m"] = to_py_int(report.m);
        d["tv"] = to_py_fraction(report.tv);
        d["decimal"] = report.tv_decimal;
        d["asymptotic"] = report.tv_asym;
        d["argmax_k"] = report.argmax_k;
        d["deltas"] = report.deltas ? py::object(tilt_bounds_dict(*report.deltas))
                                    : py::object(py::none());
        return d;
      },
      py::arg("n"), py::arg("m"));

  m.def(
      "tv_asymptotic",
      [](int n, const py::object& m_obj) {
        return tv_asymptotic(n, big_from_py(m_obj, "m"));
      },
      py::arg("n"), py::arg("m"));

  m.def("tv_normal_shift", &tv_normal_shift, py::arg("mu"));

  m.def(
      "cutoff_profile",
      [](int n, const std::vector<double>& thetas) { return cutoff_profile(n, thetas); },
      py::arg("n"), py::arg("thetas"));

  m.def(
      "effective_shelves",
      [](const py::object& m_obj, int repeats) {
        return to_py_int(effective_shelves(big_from_py(m_obj, "m"), repeats));
      },
      py::arg("m"), py::arg("repeats"));

  m.def(
      "mixing_time",
      [](int n, const py::object& m_obj, double eps) {
        const MixingResult result = mixing_time(n, big_from_py(m_obj, "m"), eps);
        py::dict d;
        d["repeats"] = result.repeats;
        d["effective_shelves"] =
            result.repeats > 0 ? to_py_int(result.effective_m) : py::object(py::none());
        d["tv_witness"] = to_py_fraction(result.witness_tv);
        return d;
      },
      py::arg("n"), py::arg("m"), py::arg("eps"));

  m.def(
      "sample_histogram",
      [](int n, long m, std::uint64_t samples, std::uint64_t seed) {
        return run_samples(n, m, samples, seed).valley_histogram;
      },
      py::arg("n"), py::arg("m"), py::arg("samples"), py::arg("seed"),
      "Valley histogram of seeded shuffle samples; reproducible by seed.");

  m.def("empirical_tv", &empirical_tv, py::arg("n"), py::arg("m"), py::arg("samples"),
        py::arg("seed"), "Monte Carlo estimate of tv_exact.");

  m.def(
      "enumerate_exact",
      [](int n, long m) {
        const PermDist dist = enumerate_exact(n, m);
        py::dict out;
        for (const auto& [perm, prob] : dist.probs)
          out[py::tuple(py::cast(perm))] = to_py_fraction(prob);
        return out;
      },
      py::arg("n"), py::arg("m"), "Exact shuffle distribution over all permutations.");

  m.def(
      "composition_check",
      [](int n, long m1, long m2) { return composition_check(n, m1, m2).equal; },
      py::arg("n"), py::arg("m1"), py::arg("m2"));

  m.attr("MAX_DECK_SIZE") = kMaxDeckSize;
  m.attr("__version__") = "1.0.0";
}
