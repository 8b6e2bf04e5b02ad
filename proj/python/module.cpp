// Python bindings for the main operations. Exact integers cross the boundary
// as Python ints (via decimal strings), rationals as "p/q" strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scrollar/higher_specht.hpp"
#include "scrollar/ramify.hpp"
#include "scrollar/scrollar.hpp"
#include "scrollar/specht.hpp"

namespace py = pybind11;
using namespace scrollar;

namespace {

py::int_ to_py(const Int& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

std::string rat_str(const Rat& v) { return to_string(v); }

Partition parse_partition(const std::string& text) { return Partition::parse(text); }

ScrollarProfile make_profile(int d, long g, const std::vector<long>& e, bool enforce_maroni) {
    ProfileOptions opts;
    opts.enforce_maroni = enforce_maroni;
    return ScrollarProfile(d, g, e, opts);
}

}  // namespace

PYBIND11_MODULE(pyscrollar, m) {
    m.doc() = "exact scrollar-invariant and resolvent computations for covers of the line";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    m.def("partitions", [](int d) {
        std::vector<std::string> out;
        for (const auto& p : enumerate_partitions(d)) out.push_back(p.to_string());
        return out;
    });
    m.def("conjugate",
          [](const std::string& p) { return parse_partition(p).conjugate().to_string(); });
    m.def("dimension", [](const std::string& p) { return to_py(dimension(parse_partition(p))); });
    m.def("character", [](const std::string& lambda, const std::string& e) {
        return to_py(character(parse_partition(lambda), parse_partition(e)));
    });
    m.def("p_invariant",
          [](const std::string& p) { return to_py(p_invariant(parse_partition(p))); });
    m.def("standard_tableaux", [](const std::string& p) {
        std::vector<std::vector<std::vector<int>>> out;
        for (const auto& t : standard_tableaux(parse_partition(p))) out.push_back(t.rows());
        return out;
    });
    m.def("charge", [](const std::vector<std::vector<int>>& rows) {
        std::vector<int> shape;
        for (const auto& r : rows) shape.push_back(static_cast<int>(r.size()));
        ChargeData cd = charge_data(StandardTableau(Partition(shape), rows));
        return py::make_tuple(cd.reading_word, cd.subscripts, cd.charge, cd.max_subscript);
    });

    m.def("subgroup_order",
          [](int d, const std::string& name) { return subgroup_by_name(d, name).order(); });
    m.def("subgroup_p_invariant",
          [](int d, const std::string& name) { return to_py(p_invariant(subgroup_by_name(d, name))); });
    m.def("coset_character_decomposition", [](int d, const std::string& name) {
        auto mults = decompose(permutation_character(subgroup_by_name(d, name)));
        const auto& classes = CharacterTable::of(d).classes();
        std::vector<std::pair<std::string, py::int_>> out;
        for (size_t i = 0; i < mults.size(); ++i)
            if (mults[i] != 0) out.emplace_back(classes[i].to_string(), to_py(mults[i]));
        return out;
    });
    m.def("product_is_full", [](int d, const std::string& g, const std::string& h) {
        return product_is_full(subgroup_by_name(d, g), subgroup_by_name(d, h));
    });

    m.def(
        "hook_scrollars",
        [](int d, long g, const std::vector<long>& e, int i, bool enforce_maroni) {
            return hook_scrollars(make_profile(d, g, e, enforce_maroni), i).values;
        },
        py::arg("d"), py::arg("g"), py::arg("e"), py::arg("i"), py::arg("enforce_maroni") = true);
    m.def(
        "volume",
        [](int d, long g, const std::vector<long>& e, const std::string& lambda,
           bool enforce_maroni) {
            return to_py(volume(parse_partition(lambda), make_profile(d, g, e, enforce_maroni)));
        },
        py::arg("d"), py::arg("g"), py::arg("e"), py::arg("lambda"),
        py::arg("enforce_maroni") = true);
    m.def(
        "resolvent_summary",
        [](int d, long g, const std::vector<long>& e, const std::string& subgroup,
           bool enforce_maroni) {
            auto s = resolvent_summary(subgroup_by_name(d, subgroup),
                                       make_profile(d, g, e, enforce_maroni), subgroup);
            py::dict out;
            out["index"] = s.index;
            out["invariant_count"] = to_py(s.invariant_count);
            out["total_volume"] = to_py(s.total_volume);
            out["arithmetic_genus"] = to_py(s.arithmetic_genus);
            out["maroni_bound"] = rat_str(s.maroni_bound);
            if (s.full_multiset)
                out["multiset"] = s.full_multiset->values;
            else
                out["multiset"] = py::none();
            return out;
        },
        py::arg("d"), py::arg("g"), py::arg("e"), py::arg("subgroup"),
        py::arg("enforce_maroni") = true);
    m.def("splitting_type_bounds", [](int i, int d, long g) {
        auto b = splitting_type_bounds(i, d, g);
        return py::make_tuple(rat_str(b.lower), rat_str(b.upper));
    });
    m.def("betti_number", [](int i, int d) { return to_py(betti_number(i, d)); });
    m.def("splitting_partition",
          [](int i, int d) { return splitting_partition(i, d).to_string(); });

    m.def("addendum_table", [](int d, const std::string& subgroup) {
        py::list rows;
        for (const auto& r : addendum_table(subgroup_by_name(d, subgroup))) {
            py::dict row;
            row["e"] = r.e.to_string();
            row["base_exponent"] = r.base_exponent;
            row["order_exponent"] = to_py(r.order_exponent);
            row["maximal_exponent"] = to_py(r.maximal_exponent);
            row["pattern"] = r.local_pattern.to_string();
            rows.append(row);
        }
        return rows;
    });
    m.def("is_lambda_maximal", [](const std::string& lambda, const std::string& e) {
        return is_lambda_maximal(parse_partition(lambda), parse_partition(e));
    });

    m.def(
        "local_disc_exponents",
        [](int e, bool force) {
            SplitModel model(e, force);
            py::dict out;
            for (const auto& lambda : enumerate_partitions(e)) {
                auto lattice = model.isotypic_lattice(lambda);
                out[py::str(lambda.to_string())] = model.gram_valuation(lattice.elements);
            }
            out["full"] = model.full_gram_valuation();
            return out;
        },
        py::arg("e"), py::arg("force") = false);
}
