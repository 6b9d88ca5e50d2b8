#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cifc/errors.hpp"
#include "cifc/gaussian.hpp"
#include "cifc/lda.hpp"
#include "cifc/lda_bounds.hpp"
#include "cifc/lda_schemes.hpp"
#include "cifc/serialization.hpp"

namespace py = pybind11;
using namespace cifc;

namespace {

// Accepts int, str ("3/5", "0.6") or fractions.Fraction.
Rational to_rational(const py::handle& value) {
    if (py::isinstance<py::int_>(value)) return Rational(value.cast<std::int64_t>());
    return Rational::parse(py::str(value).cast<std::string>());
}

py::object to_fraction(const Rational& r) {
    static const py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.num(), r.den());
}

py::dict bound_dict(const BoundReport& b) {
    py::dict d;
    d["name"] = b.name;
    d["value"] = to_fraction(b.value);
    d["binding"] = b.binding;
    return d;
}

Thm5Case parse_case(const std::string& text) {
    if (text == "Case1") return Thm5Case::Case1;
    if (text == "Case2") return Thm5Case::Case2;
    throw DomainError("case must be 'Case1' or 'Case2'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bounds and linear schemes for K-user cognitive interference channels";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

    py::class_<BinaryMatrix>(m, "BinaryMatrix")
        .def(py::init<std::size_t, std::size_t>())
        .def_static("from_rows", [](const std::vector<std::string>& rows, std::size_t cols) {
            return BinaryMatrix::from_rows(rows, cols);
        })
        .def_static("identity", &BinaryMatrix::identity)
        .def_property_readonly("shape", [](const BinaryMatrix& a) { return py::make_tuple(a.rows(), a.cols()); })
        .def("rank", &BinaryMatrix::rank)
        .def("rows", &BinaryMatrix::to_rows)
        .def("is_zero", &BinaryMatrix::is_zero)
        .def("__getitem__", [](const BinaryMatrix& a, std::pair<std::size_t, std::size_t> rc) {
            if (rc.first >= a.rows() || rc.second >= a.cols()) throw py::index_error();
            return a.get(rc.first, rc.second);
        })
        .def("__mul__", [](const BinaryMatrix& a, const BinaryMatrix& b) { return a * b; })
        .def("__add__", [](const BinaryMatrix& a, const BinaryMatrix& b) { return a + b; })
        .def(py::self == py::self)
        .def("__repr__", [](const BinaryMatrix& a) {
            std::ostringstream out;
            out << "BinaryMatrix(" << a.rows() << "x" << a.cols() << ")";
            return out.str();
        });

    m.def("shift_matrix", &shift_matrix, py::arg("m"), py::arg("n"));

    py::class_<LdaChannel>(m, "LdaChannel")
        .def(py::init<std::vector<std::vector<int>>>(), py::arg("gains"))
        .def_static("symmetric", &LdaChannel::symmetric, py::arg("n_d"), py::arg("n_i"), py::arg("n_c"),
                    py::arg("n_33"), py::arg("n_31") = py::none(), py::arg("n_32") = py::none())
        .def_property_readonly("users", &LdaChannel::users)
        .def_property_readonly("levels", &LdaChannel::levels)
        .def_property_readonly("gains", &LdaChannel::gains)
        .def("to_json", [](const LdaChannel& c) { return to_json_value(c).dump(); })
        .def_static("from_json", [](const std::string& text) { return channel_from_json(nlohmann::json::parse(text)); })
        .def(py::self == py::self);

    py::class_<KnowledgeStructure>(m, "KnowledgeStructure")
        .def(py::init<std::vector<std::vector<int>>>(), py::arg("known"))
        .def_static("named", &KnowledgeStructure::named, py::arg("name"), py::arg("users"))
        .def_property_readonly("users", &KnowledgeStructure::users)
        .def("known", &KnowledgeStructure::known)
        .def("carriers", &KnowledgeStructure::carriers)
        .def("subset_of", &KnowledgeStructure::subset_of)
        .def("to_json", [](const KnowledgeStructure& k) { return to_json_value(k).dump(); })
        .def(py::self == py::self);

    py::class_<LinearScheme>(m, "LinearScheme")
        .def(py::init<const KnowledgeStructure&, int, std::vector<int>>(), py::arg("knowledge"), py::arg("levels"),
             py::arg("bits"))
        .def_property_readonly("bits", &LinearScheme::bits)
        .def_property_readonly("levels", &LinearScheme::levels)
        .def("generator", &LinearScheme::generator)
        .def("set_generator", &LinearScheme::set_generator)
        .def("to_json", [](const LinearScheme& s) { return to_json_value(s).dump(); })
        .def_static("from_json", [](const std::string& text, const KnowledgeStructure& k) {
            return scheme_from_json(nlohmann::json::parse(text), k);
        });

    m.def("receive_map", &receive_map);
    m.def("decodable", &decodable);
    m.def("scheme_rates", [](const LdaChannel& c, const KnowledgeStructure& k, const LinearScheme& s) -> py::object {
        const auto r = scheme_rates(c, k, s);
        if (!r.feasible) return py::none();
        return py::cast(r.rates);
    }, "Rates per user, or None when some receiver cannot decode.");

    m.def("f_func", &f_func, py::arg("c"), py::arg("d"), py::arg("a"), py::arg("b"));
    m.def("cms_outer_sum", [](const LdaChannel& c) { return bound_dict(cms_outer_sum(c)); });
    m.def("cms_outer_rank", [](const LdaChannel& c) { return bound_dict(cms_outer_rank(c)); });
    m.def("coms_outer_rank", [](const LdaChannel& c) { return bound_dict(coms_outer_rank(c)); });
    m.def("sym_cms_outer", [](const py::object& a, const py::object& b) {
        return bound_dict(sym_cms_outer(to_rational(a), to_rational(b)));
    });
    m.def("ifc_cr_outer", [](const py::object& a, const py::object& b) {
        return bound_dict(ifc_cr_outer(to_rational(a), to_rational(b)));
    });
    m.def("classify_regime", [](const py::object& a, const py::object& b, bool n33_condition) {
        const auto label = classify_regime(to_rational(a), to_rational(b), n33_condition);
        return py::make_tuple(std::string(to_string(label.regime)), label.ordering);
    }, py::arg("alpha"), py::arg("beta"), py::arg("n33_condition") = true);
    m.def("bounds_agree", [](const py::object& a, const py::object& b) {
        return bounds_agree(to_rational(a), to_rational(b));
    });

    m.def("example_scheme", [](int which) {
        const auto ex = example_scheme(which);
        py::dict d;
        d["channel"] = ex.channel;
        d["knowledge"] = ex.knowledge;
        d["scheme"] = ex.scheme;
        d["claimed_sum"] = ex.claimed_sum;
        d["description"] = ex.description;
        return d;
    });
    m.def("relay_zero_force", &relay_zero_force, py::arg("channel"), py::arg("bits_1"), py::arg("bits_2"));
    m.def("sneak_bits_extension", &sneak_bits_extension);
    m.def("brute_force_best", [](const LdaChannel& c, const KnowledgeStructure& k, int budget) {
        const auto r = brute_force_best(c, k, budget);
        return py::make_tuple(r.rates, r.scheme);
    }, py::arg("channel"), py::arg("knowledge"), py::arg("max_total_bits") = 8);

    py::class_<GaussianSymParams>(m, "GaussianSymParams")
        .def_static("from_snr", &GaussianSymParams::from_snr, py::arg("K"), py::arg("snr"), py::arg("alpha"),
                    py::arg("beta"), py::arg("h_kk"), py::arg("theta_i") = 0.0, py::arg("theta_c") = 0.0)
        .def_static("from_gains", &GaussianSymParams::from_gains, py::arg("K"), py::arg("h_d"), py::arg("h_i"),
                    py::arg("h_c"), py::arg("h_kk"))
        .def_readwrite("K", &GaussianSymParams::K)
        .def_readwrite("h_d", &GaussianSymParams::h_d)
        .def_readwrite("h_i", &GaussianSymParams::h_i)
        .def_readwrite("h_c", &GaussianSymParams::h_c)
        .def_readwrite("h_kk", &GaussianSymParams::h_kk);

    m.def("strong_conditions_hold", [](const GaussianSymParams& p, const std::string& grid, bool psd_only) {
        const auto c = strong_conditions_hold(p, grid.empty() ? RhoGrid::from_env() : RhoGrid::parse(grid), psd_only);
        py::dict d;
        d["holds"] = c.holds;
        d["direct_link_ok"] = c.direct_link_ok;
        d["worst_margin"] = c.worst_margin;
        d["points_checked"] = c.points_checked;
        d["grid"] = c.grid.str();
        return d;
    }, py::arg("p"), py::arg("grid") = "", py::arg("psd_only") = true);
    m.def("sum_outer_strong", &sum_outer_strong);
    m.def("sum_inner_compound_mac", &sum_inner_compound_mac);
    m.def("k_user_outer", &k_user_outer);
    m.def("thm5_case", [](const GaussianSymParams& p, bool literal) { return to_string(thm5_case(p, literal)); },
          py::arg("p"), py::arg("literal_hkk") = false);
    m.def("thm5_achievable", [](const GaussianSymParams& p, bool literal) {
        const auto r = thm5_achievable(p, literal);
        return py::make_tuple(to_string(r.which), r.rates, r.sum());
    }, py::arg("p"), py::arg("literal_hkk") = false);
    m.def("thm5_gap_bound", [](int K, const std::string& which) { return thm5_gap_bound(K, parse_case(which)); });
    m.def("gdof", [](const std::string& model, int K, const py::object& alpha) {
        return to_fraction(gdof(parse_gdof_model(model), K, to_rational(alpha)));
    });
    m.def("lda_exponent_map", &lda_exponent_map);
}
