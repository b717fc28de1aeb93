#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grassmann/explorer.hpp"
#include "grassmann/graph.hpp"
#include "grassmann/recover.hpp"
#include "grassmann/rep.hpp"

#include <sstream>

namespace py = pybind11;
using namespace grassmann;

namespace {

py::object to_pyint(const Integer& v) {
    return py::module_::import("builtins").attr("int")(py::str(v.str()));
}

py::object to_fraction(const Rational& r) {
    const std::string s = boost::multiprecision::numerator(r).str() + "/" +
                          boost::multiprecision::denominator(r).str();
    return py::module_::import("fractions").attr("Fraction")(py::str(s));
}

py::list ints(const std::vector<Integer>& v) {
    py::list out;
    for (const Integer& x : v) out.append(to_pyint(x));
    return out;
}

py::list int_matrix(const std::vector<std::vector<Integer>>& m) {
    py::list out;
    for (const auto& row : m) out.append(ints(row));
    return out;
}

py::list fraction_matrix(const RatMatrix& m) {
    py::list out;
    for (const auto& row : m) {
        py::list r;
        for (const Rational& e : row) r.append(to_fraction(e));
        out.append(r);
    }
    return out;
}

std::vector<Row> rows_from_py(const std::vector<std::vector<int>>& rows) {
    std::vector<Row> out;
    for (const auto& r : rows) {
        Row row;
        for (int e : r) {
            if (e < 0 || e > 255) throw std::invalid_argument("entry out of range");
            row.push_back(static_cast<uint8_t>(e));
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<std::vector<int>> rows_to_py(const Subspace& s) {
    std::vector<std::vector<int>> out;
    for (const Row& r : s.rows()) out.emplace_back(r.begin(), r.end());
    return out;
}

GramKind gram_kind_of(const std::string& kind) {
    if (kind == "geometric") return GramKind::Geometric;
    if (kind == "mixed") return GramKind::Mixed;
    if (kind == "combinatorial") return GramKind::Combinatorial;
    throw std::invalid_argument("kind must be geometric, mixed, or combinatorial");
}

BasisVariant variant_of(const std::string& variant) {
    if (variant == "full") return BasisVariant::Full;
    if (variant == "bar") return BasisVariant::Bar;
    if (variant == "check") return BasisVariant::Check;
    throw std::invalid_argument("variant must be full, bar, or check");
}

/// Bundles parameters, field tables, point index, and the hat memo for one
/// (q, n, k). All heavy operations hang off this.
struct Context {
    Geometry G;
    RepSpace R;
    Context(long q, long n, long k) : G(QParams::make(q, n, k)), R(G) {}

    py::dict params() const {
        const QParams& P = G.params;
        py::dict d;
        d["q"] = P.q;
        d["n"] = P.n;
        d["k"] = P.k;
        d["valency"] = to_pyint(P.valency);
        d["b"] = ints(P.b);
        d["a"] = ints(P.a);
        d["c"] = ints(P.c);
        d["eigenvalues"] = ints(P.theta);
        d["sphere_sizes"] = ints(P.sphere_sizes());
        d["vertex_count"] = to_pyint(P.vertex_count());
        return d;
    }
};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Grassmann graph computations: subspace lattice, Euclidean "
              "representation, meet/join recovery, uniqueness probes.";

    m.def("qint", [](long mm, long q) { return to_pyint(qint(mm, q)); }, py::arg("m"),
          py::arg("q"), "q-integer [m] = (q^m - 1)/(q - 1)");
    m.def("gauss_binom",
          [](long mm, long r, long q) { return to_pyint(gauss_binom(mm, r, q)); }, py::arg("m"),
          py::arg("r"), py::arg("q"),
          "number of r-dimensional subspaces of an m-dimensional space over F_q");
    m.def("intersection_numbers",
          [](long q, long n, long k) { return Context(q, n, k).params(); }, py::arg("q"),
          py::arg("n"), py::arg("k"),
          "valency, intersection numbers, eigenvalues, sphere sizes");

    py::class_<Subspace>(m, "Subspace")
        .def_property_readonly("n", &Subspace::n)
        .def_property_readonly("dim", &Subspace::dim)
        .def_property_readonly("q", &Subspace::q)
        .def("rows", &rows_to_py)
        .def("contains", &Subspace::contains, py::arg("other"))
        .def("serialize", &Subspace::serialize)
        .def("__eq__", [](const Subspace& a, const Subspace& b) { return a == b; })
        .def("__hash__", [](const Subspace& s) { return py::hash(py::str(s.key())); })
        .def("__repr__", [](const Subspace& s) {
            std::ostringstream os;
            os << "Subspace(q=" << s.q() << ", n=" << s.n() << ", dim=" << s.dim() << ", \""
               << s.serialize() << "\")";
            return os.str();
        });

    m.def("subspace",
          [](long q, long n, const std::vector<std::vector<int>>& rows) {
              return Subspace::rref(Field::get(q), n, rows_from_py(rows));
          },
          py::arg("q"), py::arg("n"), py::arg("rows"),
          "canonical subspace spanned by the given row vectors");
    m.def("meet", &meet, py::arg("u"), py::arg("v"));
    m.def("join", &join, py::arg("u"), py::arg("v"));
    m.def("distance", &distance, py::arg("x"), py::arg("y"));

    py::class_<Context>(m, "Context")
        .def(py::init<long, long, long>(), py::arg("q"), py::arg("n"), py::arg("k"))
        .def("params", &Context::params)
        .def("enumerate_subspaces",
             [](const Context& c, long ell) {
                 return enumerate_rref(c.G.F, c.G.params.n, ell);
             },
             py::arg("ell"))
        .def("omega",
             [](const Context& c, const Subspace& u) { return c.G.points.omega(u); },
             py::arg("u"), "point ids of the 1-dim subspaces inside u")
        .def("point",
             [](const Context& c, PointId s) { return c.G.points.point(s); }, py::arg("s"))
        .def("neighbors",
             [](const Context& c, const Subspace& x) { return neighbors(c.G, x); },
             py::arg("x"))
        .def("bc_sets",
             [](const Context& c, const Subspace& x, const Subspace& y) {
                 BCSets s = bc_sets(c.G, x, y);
                 return py::make_tuple(s.B, s.C);
             },
             py::arg("x"), py::arg("y"))
        .def("witness_pair",
             [](const Context& c, long i, uint64_t seed) {
                 auto [x, y] = witness_pair(c.G, i, seed);
                 return py::make_tuple(x, y);
             },
             py::arg("i"), py::arg("seed") = 0)
        .def("hat",
             [](const Context& c, const Subspace& u) {
                 const RepVector& h = c.R.hat(u);
                 py::list out;
                 for (size_t t = 0; t < h.size(); ++t) out.append(to_pyint(h[t]));
                 return out;
             },
             py::arg("u"), "scaled hat-vector coordinates, indexed by point id")
        .def("inner",
             [](const Context& c, const Subspace& u, const Subspace& v) {
                 return to_pyint(c.R.inner(c.R.hat(u), c.R.hat(v)));
             },
             py::arg("u"), py::arg("v"))
        .def("predicted_inner",
             [](const Context& c, long du, long dv, long dm) {
                 return to_pyint(RepSpace::predicted_inner(du, dv, dm, c.G.params));
             },
             py::arg("dim_u"), py::arg("dim_v"), py::arg("dim_meet"))
        .def("eigen_sum_holds",
             [](const Context& c, const Subspace& x) {
                 return c.R.theta1_residual(x).is_zero();
             },
             py::arg("x"))
        .def("stab_partition",
             [](const Context& c, const Subspace& u, const Subspace& v) {
                 const OrbitPartition p = stab_partition_p1(c.G, u, v);
                 return py::make_tuple(p.case_id, p.cells);
             },
             py::arg("u"), py::arg("v"))
        .def("recover_meet_join",
             [](const Context& c, const Subspace& x, const Subspace& y,
                const std::string& variant) {
                 auto [rm, rj] = recover_meet_join(c.R, x, y, variant_of(variant));
                 py::list lm, lj;
                 for (size_t t = 0; t < rm.size(); ++t) lm.append(to_pyint(rm[t]));
                 for (size_t t = 0; t < rj.size(); ++t) lj.append(to_pyint(rj[t]));
                 return py::make_tuple(lm, lj);
             },
             py::arg("x"), py::arg("y"), py::arg("variant") = "full")
        .def("recovery_exact",
             [](const Context& c, const Subspace& x, const Subspace& y) {
                 const RepVector& hm = c.R.hat(meet(x, y));
                 const RepVector& hj = c.R.hat(join(x, y));
                 for (BasisVariant v :
                      {BasisVariant::Full, BasisVariant::Bar, BasisVariant::Check}) {
                     auto [rm, rj] = recover_meet_join(c.R, x, y, v);
                     if (rm != hm || rj != hj) return false;
                 }
                 return true;
             },
             py::arg("x"), py::arg("y"),
             "recover the meet/join hats from graph data in all three variants "
             "and compare with the lattice computation")
        .def("export_graph",
             [](const Context& c, const std::string& path, size_t cap) {
                 export_graph(NativeGraph::build(c.G, cap), c.G.params, path);
             },
             py::arg("path"), py::arg("cap") = 50000);

    m.def("gram_table",
          [](long q, long n, long k, long i, const std::string& kind) {
              const GramTable t = gram_closed_form(gram_kind_of(kind), QParams::make(q, n, k), i);
              py::dict d;
              d["kind"] = kind;
              d["i"] = t.i;
              d["row_labels"] = t.row_labels;
              d["col_labels"] = t.col_labels;
              d["entries"] = int_matrix(t.entries);
              return d;
          },
          py::arg("q"), py::arg("n"), py::arg("k"), py::arg("i"), py::arg("kind"));

    m.def("m_inverse",
          [](long q, long n, long k, long i) {
              return fraction_matrix(m_inverse(QParams::make(q, n, k), i));
          },
          py::arg("q"), py::arg("n"), py::arg("k"), py::arg("i"));

    m.def("transition",
          [](long q, long n, long k, long i, const std::string& direction,
             const std::string& variant) {
              const Direction dir = direction == "geo2comb"   ? Direction::GeoToComb
                                    : direction == "comb2geo" ? Direction::CombToGeo
                                                              : throw std::invalid_argument(
                                                                    "direction must be geo2comb "
                                                                    "or comb2geo");
              const TransitionMatrix t =
                  transition(dir, variant_of(variant), QParams::make(q, n, k), i);
              py::dict d;
              d["from_labels"] = t.from_labels;
              d["to_labels"] = t.to_labels;
              d["entries"] = fraction_matrix(t.entries);
              return d;
          },
          py::arg("q"), py::arg("n"), py::arg("k"), py::arg("i"), py::arg("direction"),
          py::arg("variant") = "full");

    m.def("cosine_table",
          [](long q, long n, long k) { return ints(cosine_table(QParams::make(q, n, k))); },
          py::arg("q"), py::arg("n"), py::arg("k"));

    py::class_<ExternalGraph>(m, "ExternalGraph")
        .def_property_readonly("vertex_count", &ExternalGraph::vertex_count)
        .def("neighbors_of",
             [](const ExternalGraph& g, int32_t v) { return g.adj.at(v); }, py::arg("v"))
        .def("bfs", &ExternalGraph::bfs, py::arg("src"))
        .def("probes", [](const ExternalGraph& g, int32_t x, int32_t y) {
            const ProbeReport rep = run_uniqueness_probes(g, x, y);
            py::dict d;
            d["i"] = rep.i;
            py::list allowed;
            for (const Integer& a : rep.p1.allowed) allowed.append(to_pyint(a));
            d["allowed_values"] = allowed;
            py::dict spectrum;
            for (const auto& [v, cnt] : rep.p1.spectrum) spectrum[to_fraction(v)] = cnt;
            d["spectrum"] = spectrum;
            d["spectrum_within_allowed"] = rep.p1.all_allowed;
            d["class_sizes"] = rep.p2.class_sizes;
            d["equitable"] = rep.p2.equitable;
            d["l0_class_size"] = rep.l0_class_size;
            d["l0_closed"] = rep.p3.closed;
            d["l0_diameter"] = rep.p3.diameter;
            return d;
        });

    m.def("load_graph",
          [](const std::string& path, int sample_roots, uint64_t seed) {
              LoadOptions o;
              o.sample_roots = sample_roots;
              o.seed = seed;
              return load_graph(path, o);
          },
          py::arg("path"), py::arg("sample_roots") = 3, py::arg("seed") = 1);
}
