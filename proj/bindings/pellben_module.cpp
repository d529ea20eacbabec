#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "pellben/benford.hpp"
#include "pellben/norm_class.hpp"
#include "pellben/orbit_seq.hpp"
#include "pellben/pell_unit.hpp"
#include "pellben/quadint.hpp"

namespace py = pybind11;

// Python ints <-> mpz_class, routed through decimal strings. Slow path
// only; every value crossing the boundary is small compared to the
// arithmetic behind it.
namespace pybind11 {
namespace detail {

template <>
struct type_caster<mpz_class> {
public:
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) {
            return false;
        }
        PyObject* str = PyObject_Str(src.ptr());
        if (str == nullptr) {
            PyErr_Clear();
            return false;
        }
        const char* text = PyUnicode_AsUTF8(str);
        bool ok = (text != nullptr);
        if (ok) {
            try {
                value = mpz_class(text, 10);
            } catch (const std::invalid_argument&) {
                ok = false;
            }
        } else {
            PyErr_Clear();
        }
        Py_DECREF(str);
        return ok;
    }

    static handle cast(const mpz_class& src, return_value_policy, handle) {
        return PyLong_FromString(src.get_str().c_str(), nullptr, 10);
    }
};

}  // namespace detail
}  // namespace pybind11

namespace {

using namespace pellben;

std::vector<int> pattern_digits(const DigitPattern& p) { return p.digits(); }

}  // namespace

PYBIND11_MODULE(_pellben, m) {
    m.doc() = "Brahmagupta equation x^2 - D y^2 = k over Z(sqrt(D)): orbit "
              "enumeration, canonical orbit sequences and Benford statistics.";

    py::class_<Radicand>(m, "Radicand")
        .def(py::init<BigInt>(), py::arg("d"))
        .def_property_readonly("d", &Radicand::value)
        .def("__eq__", [](const Radicand& a, const Radicand& b) { return a == b; },
             py::is_operator())
        .def("__hash__", [](const Radicand& a) { return py::hash(py::cast(a.value())); })
        .def("__repr__",
             [](const Radicand& a) { return "Radicand(" + a.value().get_str() + ")"; });
    py::implicitly_convertible<py::int_, Radicand>();

    py::class_<QuadInt>(m, "QuadInt")
        .def(py::init<Radicand, BigInt, BigInt>(), py::arg("d"), py::arg("x"), py::arg("y"))
        .def_readonly("d", &QuadInt::d)
        .def_readonly("x", &QuadInt::x)
        .def_readonly("y", &QuadInt::y)
        .def("conj", [](const QuadInt& a) { return conj(a); })
        .def("norm", [](const QuadInt& a) { return norm(a); })
        .def("__mul__", [](const QuadInt& a, const QuadInt& b) { return mul(a, b); },
             py::is_operator())
        .def("__pow__", [](const QuadInt& a, unsigned long n) { return pow(a, n); },
             py::is_operator())
        .def("__neg__", [](const QuadInt& a) { return -a; })
        .def("__eq__", [](const QuadInt& a, const QuadInt& b) { return a == b; },
             py::is_operator())
        .def("__hash__",
             [](const QuadInt& a) { return py::hash(py::cast(to_string(a))); })
        .def("__str__", [](const QuadInt& a) { return to_string(a); })
        .def("__repr__", [](const QuadInt& a) { return "QuadInt(" + to_string(a) + ")"; })
        .def_static("parse", &parse_quadint, py::arg("text"));

    m.def("isqrt", &isqrt, py::arg("n"), "Floor square root of a nonnegative integer.");
    m.def("is_perfect_square", &is_perfect_square, py::arg("n"));

    py::class_<CFExpansion>(m, "CFExpansion")
        .def_readonly("d", &CFExpansion::d)
        .def_readonly("a0", &CFExpansion::a0)
        .def_readonly("period", &CFExpansion::period);

    m.def("cf_sqrt", &cf_sqrt, py::arg("d"),
          "Continued fraction expansion of sqrt(D): integer part and one period.");
    m.def("convergent", &convergent, py::arg("cf"), py::arg("n"),
          "Numerator and denominator of the n-th convergent.");

    py::class_<FundamentalUnit>(m, "FundamentalUnit")
        .def_readonly("value", &FundamentalUnit::value)
        .def_readonly("norm_minus_one", &FundamentalUnit::norm_minus_one);

    m.def("fundamental_unit", &fundamental_unit, py::arg("d"),
          "Fundamental unit of Z(sqrt(D)), computed by continued fractions.");

    py::class_<SearchBox>(m, "SearchBox")
        .def_readonly("u_max", &SearchBox::u_max)
        .def_readonly("v_max", &SearchBox::v_max);

    m.def("search_bounds", &search_bounds, py::arg("d"), py::arg("k"), py::arg("unit"));
    m.def("solutions_in_box", &solutions_in_box, py::arg("d"), py::arg("k"), py::arg("box"),
          py::arg("threads") = 1);
    m.def("associated", &associated, py::arg("a"), py::arg("b"),
          "Whether two elements of equal nonzero norm lie in the same orbit.");

    py::class_<OrbitFundamental>(m, "OrbitFundamental")
        .def_readonly("value", &OrbitFundamental::value)
        .def_readonly("ambiguous", &OrbitFundamental::ambiguous)
        .def_readonly("conjugate_partner", &OrbitFundamental::conjugate_partner);

    py::class_<OrbitPartition>(m, "OrbitPartition")
        .def_readonly("d", &OrbitPartition::d)
        .def_readonly("k", &OrbitPartition::k)
        .def_readonly("fundamentals", &OrbitPartition::fundamentals);

    m.def("orbit_partition", &orbit_partition, py::arg("d"), py::arg("k"),
          py::arg("threads") = 1,
          "Orbit fundamentals of the norm class, empty when unsolvable.");
    m.def("classify", &classify, py::arg("a"), py::arg("partition"));

    py::enum_<Variant>(m, "Variant")
        .value("T1", Variant::T1)
        .value("T2", Variant::T2)
        .value("T3", Variant::T3)
        .value("T4", Variant::T4);

    m.def(
        "generate",
        [](const QuadInt& alpha, const QuadInt& unit, Variant variant, std::size_t n) {
            return generate(SequenceSpec{alpha, unit, variant}, n).terms;
        },
        py::arg("alpha"), py::arg("unit"), py::arg("variant"), py::arg("n"),
        "Terms 1..n of one canonical orbit sequence.");
    m.def(
        "interleave",
        [](const std::vector<std::vector<QuadInt>>& seqs) { return interleave(seqs); },
        py::arg("seqs"));
    m.def(
        "enumerate_norm_class",
        [](const Radicand& d, const BigInt& k, std::size_t n, bool include_seeds,
           int threads) {
            return enumerate_norm_class(d, k, n, fundamental_unit(d), include_seeds, threads);
        },
        py::arg("d"), py::arg("k"), py::arg("n"), py::arg("include_seeds") = false,
        py::arg("threads") = 1,
        "Interleaved enumeration of the norm class, n terms per canonical window.");
    m.def("check_characteristic_roots", &check_characteristic_roots, py::arg("unit"));

    m.def(
        "expected_prob",
        [](const std::vector<int>& digits) { return expected_prob(DigitPattern(digits)); },
        py::arg("pattern"), "Benford probability log10(1 + 1/P) of a leading digit block.");
    m.def("second_digit_marginal", &second_digit_marginal, py::arg("d"));
    m.def(
        "leading_digits",
        [](const BigInt& n, int m_) { return pattern_digits(leading_digits(n, m_)); },
        py::arg("n"), py::arg("m"));
    m.def("log10_mantissa", &log10_mantissa, py::arg("n"));

    py::class_<DigitStats>(m, "DigitStats")
        .def_readonly("m", &DigitStats::m)
        .def_readonly("counts", &DigitStats::counts)
        .def_readonly("total", &DigitStats::total);

    m.def("digit_frequencies", &digit_frequencies, py::arg("terms"), py::arg("m"));
    m.def("empirical_density", &empirical_density, py::arg("points"), py::arg("t"));
    m.def("star_discrepancy", &star_discrepancy, py::arg("points"));

    py::class_<BenfordReport>(m, "BenfordReport")
        .def_readonly("stats", &BenfordReport::stats)
        .def_readonly("expected", &BenfordReport::expected)
        .def_readonly("max_abs_deviation", &BenfordReport::max_abs_deviation)
        .def_readonly("chi_square", &BenfordReport::chi_square)
        .def_readonly("star_discrepancy", &BenfordReport::star_discrepancy)
        .def_readonly("total", &BenfordReport::total);

    m.def("benford_report", &benford_report, py::arg("terms"), py::arg("m"));
}
