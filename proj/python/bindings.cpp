#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thetagr/coordalg.hpp"
#include "thetagr/coords.hpp"
#include "thetagr/hom.hpp"
#include "thetagr/mutation.hpp"
#include "thetagr/tensor.hpp"

namespace py = pybind11;
using namespace thetagr;

namespace {

ThetaLabel label(const std::string& s) {
  auto l = parse_label(s);
  if (!l) throw py::value_error("unknown module label '" + s + "'");
  return *l;
}

void require_n(int n) {
  if (n != 3 && n != 4) throw py::value_error("n must be 3 or 4");
}

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(q));
}

py::list matrix(const Matrix& m) {
  py::list rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.append(fraction(m(r, c)));
    rows.append(row);
  }
  return rows;
}

Matrix from_python(const py::sequence& rows) {
  const std::size_t nr = rows.size(), nc = nr ? py::len(rows[0]) : 0;
  Matrix m(nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    py::sequence row = rows[r];
    if (row.size() != nc) throw py::value_error("ragged matrix");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = parse_rational(py::str(row[c]).cast<std::string>());
  }
  return m;
}

py::dict multiset(const ThetaMultiset& t) {
  py::dict d;
  for (const auto& [l, k] : t.mult) d[py::str(std::string(label_name(l)))] = k;
  return d;
}

class Example {
 public:
  Example(const std::string& name, int n, int k) {
    require_n(n);
    if (name == "sl2n+1")
      e_ = example_sl_2n1(n);
    else if (name == "slnk" && k >= 1)
      e_ = example_sl_nk(n, k);
    else
      throw py::value_error("unknown example '" + name + "' or bad k");
    x_ = extract(e_);
    l_ = assemble(x_.data);
  }

  int n() const { return e_.n; }
  std::size_t dim() const { return e_.dim(); }
  std::string name() const { return e_.name; }

  py::dict dims() const {
    py::dict d;
    for (auto s : spaces_for(e_.n)) d[py::str(std::string(space_name(s)))] = x_.data.dim(s);
    return d;
  }

  py::dict round_trip_report() const {
    const auto r = round_trip(x_);
    py::dict d;
    d["pairs"] = r.pairs;
    d["mismatches"] = r.mismatches;
    d["pass"] = r.pass();
    return d;
  }

  py::dict jacobi(const std::string& mode, std::size_t samples, std::uint64_t seed) const {
    if (mode != "full" && mode != "sampled") throw py::value_error("mode must be full or sampled");
    const auto j = check_jacobi(l_.sc, mode == "full" ? JacobiMode::Full : JacobiMode::Sampled, samples, seed);
    py::dict d;
    d["triples"] = j.triples;
    d["violations"] = j.violations;
    d["seed"] = j.seed;
    d["pass"] = j.pass();
    return d;
  }

  py::dict grading() const {
    const auto g = check_grading(l_);
    py::dict d;
    d["gamma1"] = g.gamma1;
    d["gamma2"] = g.gamma2;
    d["gamma3"] = g.gamma3;
    d["pass"] = g.pass();
    return d;
  }

  bool condition() const {
    if (e_.n != 3) throw py::value_error("the S-condition is defined for n = 3");
    return check_condition_S(l_).holds;
  }

  py::list structure() const {
    py::list out;
    for (const auto& c : verify_section4(x_.data, &l_).checks) {
      py::dict d;
      d["name"] = c.name;
      d["pass"] = c.pass;
      d["asserted"] = c.asserted;
      d["checked"] = c.checked;
      d["failures"] = c.failures;
      d["witness"] = c.witness;
      out.append(d);
    }
    return out;
  }

  py::list mutations(std::size_t count, std::uint64_t seed) const {
    MutationOptions o;
    o.count = count;
    o.seed = seed;
    py::list out;
    for (const auto& m : run_mutations(x_.data, o)) {
      py::dict d;
      d["product"] = m.key.to_string();
      d["jacobi_violations"] = m.jacobi_violations;
      d["new_failures"] = m.new_failures;
      d["detected"] = m.detected();
      out.append(d);
    }
    return out;
  }

  py::list product(const std::string& key) const {
    for (const auto& [k, m] : x_.data.products)
      if (k.to_string() == key) return matrix(m);
    throw py::key_error(key);
  }

  std::vector<std::string> products() const {
    std::vector<std::string> out;
    for (const auto& [k, m] : x_.data.products) out.push_back(k.to_string());
    return out;
  }

 private:
  EmbeddedAlgebra e_;
  Extraction x_;
  GradedLieAlgebra l_;
};

}  // namespace

PYBIND11_MODULE(_thetagr, m) {
  m.doc() = "Exact verification of Theta_n-graded Lie algebras over sl_3 and sl_4";

  m.def("theta_component", [](const std::string& x, const std::string& y, int n) {
    require_n(n);
    const auto t = theta_component(label(x), label(y), n);
    py::dict d;
    d["multiplicities"] = multiset(t);
    d["remainder_dim"] = t.remainder_dim;
    return d;
  }, py::arg("x"), py::arg("y"), py::arg("n"));

  m.def("verify_tables", [](int n) {
    require_n(n);
    py::list out;
    for (const auto& c : verify_tables(n).cells) {
      py::dict d;
      d["row"] = std::string(label_name(c.row));
      d["col"] = std::string(label_name(c.col));
      d["expected"] = c.expected.to_string(n);
      d["computed"] = c.computed.to_string(n);
      d["pass"] = c.pass;
      out.append(d);
    }
    return out;
  }, py::arg("n"));

  m.def("verify_homs", [](int n) {
    require_n(n);
    py::list out;
    for (const auto& c : verify_paper_homs(n).checks) {
      py::dict d;
      d["name"] = hom_name(*c.entry);
      d["dim"] = c.dim_computed;
      d["pass"] = c.pass();
      out.append(d);
    }
    return out;
  }, py::arg("n"));

  m.def("hom_dim", [](const std::string& x, const std::string& y, const std::string& z, int n) {
    require_n(n);
    return hom_space(label(x), label(y), label(z), n).dim();
  }, py::arg("x"), py::arg("y"), py::arg("z"), py::arg("n"));

  m.def("catalog", [](int n, const std::string& l) {
    require_n(n);
    py::list acts;
    for (const auto& a : catalog(n, label(l)).actions) acts.append(matrix(a));
    return acts;
  }, py::arg("n"), py::arg("label"), "Action matrices, one per sl_n basis element.");

  m.def("decompose", [](int n, const py::sequence& actions) {
    require_n(n);
    std::vector<Matrix> ms;
    for (const auto& a : actions) ms.push_back(from_python(a.cast<py::sequence>()));
    if (ms.size() != static_cast<std::size_t>(n * n - 1)) throw py::value_error("expected one action per sl_n basis element");
    const GModule mod = make_module(n, std::move(ms));
    if (!mod.is_representation()) throw py::value_error("not a representation");
    const auto d = isotypic_decompose(mod);
    py::dict out;
    for (const auto& [w, p] : d.parts) out[py::str(std::string(label_name(p.label)))] = p.multiplicity;
    return out;
  }, py::arg("n"), py::arg("actions"));

  py::register_exception<NonThetaConstituent>(m, "NonThetaConstituent", PyExc_ValueError);

  py::class_<Example>(m, "Example")
      .def(py::init<const std::string&, int, int>(), py::arg("name"), py::arg("n"), py::arg("k") = 1)
      .def_property_readonly("n", &Example::n)
      .def_property_readonly("dim", &Example::dim)
      .def_property_readonly("name", &Example::name)
      .def("dims", &Example::dims)
      .def("round_trip", &Example::round_trip_report)
      .def("jacobi", &Example::jacobi, py::arg("mode") = "full", py::arg("samples") = 5000, py::arg("seed") = kDefaultSeed)
      .def("grading", &Example::grading)
      .def("condition", &Example::condition)
      .def("structure", &Example::structure)
      .def("mutations", &Example::mutations, py::arg("count") = 10, py::arg("seed") = kDefaultSeed)
      .def("products", &Example::products)
      .def("product", &Example::product, py::arg("key"));
}
