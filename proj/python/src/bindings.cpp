#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lieconv/charmult.hpp"
#include "lieconv/convexity.hpp"
#include "lieconv/error.hpp"
#include "lieconv/lrcomb.hpp"

namespace py = pybind11;
using namespace lieconv;

namespace {

using Coords = std::vector<std::int64_t>;

Weight to_weight(const Coords& c) { return Weight(std::span<const std::int64_t>(c)); }

py::tuple to_tuple(const Weight& w) {
  py::tuple t(w.rank());
  for (std::size_t i = 0; i < w.rank(); ++i) t[i] = w[i];
  return t;
}

py::tuple to_tuple(const Partition& p) {
  py::tuple t(p.length());
  for (std::size_t i = 0; i < p.length(); ++i) t[i] = p[i];
  return t;
}

std::vector<Weight> to_weights(const std::vector<Coords>& ws) {
  std::vector<Weight> out;
  for (const auto& c : ws) out.push_back(to_weight(c));
  return out;
}

py::int_ to_int(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::dict to_dict(const Decomposition& d) {
  py::dict out;
  for (const auto& [w, m] : d.terms()) out[to_tuple(w)] = m;
  return out;
}

Family parse_family(const std::string& f) {
  if (f == "A" || f == "a") return Family::A;
  if (f == "B" || f == "b") return Family::B;
  throw InvalidArgument("unsupported root system family '" + f + "' (expected A or B)");
}

py::dict line_dict(const LineWitness& l) {
  py::dict d;
  d["base"] = to_tuple(l.base);
  d["direction"] = to_tuple(l.direction);
  d["steps"] = l.steps;
  d["occupancies"] = l.occupancies;
  d["class"] = to_string(l.classify());
  return d;
}

py::dict report_dict(const ScanReport& r) {
  py::dict d;
  d["instances_checked"] = r.instances_checked;
  d["lines_checked"] = r.lines_checked;
  py::list vs;
  for (const auto& v : r.violations) {
    py::dict e = line_dict(v.line);
    e["instance_index"] = v.instance_index;
    e["instance"] = v.instance;
    vs.append(e);
  }
  d["violations"] = vs;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weight multiplicities, tensor products, LR and Kostka numbers, and convexity scans for types A and B";

  static py::exception<ResourceError> resource_error(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ResourceError& e) {
      py::set_error(resource_error, e.what());
    } catch (const InternalError& e) {
      py::set_error(PyExc_AssertionError, e.what());
    }
  });

  py::class_<RootSystem>(m, "RootSystem")
      .def(py::init([](const std::string& family, std::size_t rank) { return RootSystem(parse_family(family), rank); }),
           py::arg("family"), py::arg("rank"))
      .def_property_readonly("name", &RootSystem::name)
      .def_property_readonly("rank", &RootSystem::rank)
      .def_property_readonly("cartan", &RootSystem::cartan)
      .def_property_readonly("rho", [](const RootSystem& rs) { return to_tuple(rs.rho()); })
      .def_property_readonly("positive_roots",
                             [](const RootSystem& rs) {
                               py::list out;
                               for (const auto& r : rs.positive_roots()) out.append(to_tuple(r));
                               return out;
                             })
      .def("__repr__", [](const RootSystem& rs) { return "RootSystem('" + rs.name() + "')"; })
      .def(py::self == py::self);

  m.def("is_dominant", [](const RootSystem& rs, const Coords& w) { return is_dominant(rs, to_weight(w)); });
  m.def(
      "to_dominant",
      [](const RootSystem& rs, const Coords& w) {
        const auto f = to_dominant(rs, to_weight(w));
        return py::make_tuple(to_tuple(f.dominant), f.sign, f.singular);
      },
      "(dominant weight, sign, singular)");
  m.def("in_root_lattice", [](const RootSystem& rs, const Coords& w) { return in_root_lattice(rs, to_weight(w)); });
  m.def("dual_weight", [](const RootSystem& rs, const Coords& w) { return to_tuple(dual_weight(rs, to_weight(w))); });
  m.def("weyl_dim", [](const RootSystem& rs, const Coords& w) { return to_int(weyl_dim(rs, to_weight(w))); });
  m.def("partition_to_weight",
        [](std::size_t n, const Coords& p) { return to_tuple(partition_to_weight(n, Partition(p))); });

  m.def("weight_multiplicities", [](const RootSystem& rs, const Coords& w) {
    const auto ws = weight_multiplicities(rs, to_weight(w));
    py::dict out;
    for (const auto& [mu, mult] : ws->sorted()) out[to_tuple(mu)] = mult;
    return out;
  });
  m.def(
      "tensor_decompose",
      [](const RootSystem& rs, const std::vector<Coords>& ws) {
        const auto weights = to_weights(ws);
        return to_dict(tensor_decompose_multi(rs, weights));
      },
      "Klimyk decomposition of the tensor product of the given highest weights");
  m.def(
      "character_product_oracle",
      [](const RootSystem& rs, const std::vector<Coords>& ws, std::int64_t ceiling) {
        const auto weights = to_weights(ws);
        return to_dict(character_product_oracle(rs, weights, ceiling));
      },
      py::arg("rs"), py::arg("weights"), py::arg("dimension_ceiling") = kDefaultDimensionCeiling);
  m.def("invariant_dimension", [](const RootSystem& rs, const std::vector<Coords>& ws) {
    const auto weights = to_weights(ws);
    return invariant_dimension(rs, weights);
  });
  m.def("branch", [](const Coords& p, std::size_t n) {
    py::list out;
    for (const auto& q : branch_gl_to_gl(Partition(p), n)) out.append(to_tuple(q));
    return out;
  });

  m.def("kostka", [](const Coords& shape, const Coords& content) { return kostka(Partition(shape), content); });
  m.def("lr_coefficient", [](const Coords& l, const Coords& mu, const Coords& nu) {
    return lr_coefficient(Partition(l), Partition(mu), Partition(nu));
  });
  m.def("lr_product", [](const Coords& l, const Coords& mu, std::size_t n) {
    py::dict out;
    for (const auto& [nu, c] : lr_product(Partition(l), Partition(mu), n)) out[to_tuple(nu)] = c;
    return out;
  });

  m.def("scan_instance", [](const RootSystem& rs, const std::vector<Coords>& ws) {
    const auto weights = to_weights(ws);
    return report_dict(scan_instance(rs, weights));
  });
  m.def(
      "scan_family",
      [](const RootSystem& rs, std::size_t r, std::int64_t bound, std::optional<std::uint64_t> seed,
         std::optional<std::int64_t> count, unsigned workers, std::int64_t budget) {
        if (count.has_value() != seed.has_value())
          throw InvalidArgument("random mode needs both seed and count");
        const ScanMode mode = count ? ScanMode::random(*seed, *count) : ScanMode::exhaustive();
        ScanReport rep;
        {
          py::gil_scoped_release release;
          rep = scan_family(rs, r, bound, mode, ScanOptions{budget, workers});
        }
        return report_dict(rep);
      },
      py::arg("rs"), py::arg("r"), py::arg("bound"), py::arg("seed") = py::none(), py::arg("count") = py::none(),
      py::arg("workers") = 1, py::arg("instance_budget") = kDefaultInstanceBudget);
  m.def("saturation_probe", [](const RootSystem& rs, const std::vector<Coords>& ws, std::int64_t m_max) {
    const auto weights = to_weights(ws);
    return saturation_probe(rs, weights, m_max);
  });
  m.def("prv_components", [](const RootSystem& rs, const Coords& l, const Coords& mu) {
    py::list out;
    for (const auto& w : prv_components(rs, to_weight(l), to_weight(mu))) out.append(to_tuple(w));
    return out;
  });
}
