#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "blagold/blaschke.hpp"
#include "blagold/golden.hpp"
#include "blagold/numerics.hpp"
#include "blagold/poncelet.hpp"
#include "blagold/render.hpp"

namespace py = pybind11;
using namespace blagold;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Blaschke products, golden-ratio constructions and Poncelet ellipses";

    py::register_exception<Error>(m, "BlagoldError");

    py::class_<TolerancePolicy>(m, "TolerancePolicy")
        .def(py::init<>())
        .def_readwrite("eps_root", &TolerancePolicy::eps_root)
        .def_readwrite("eps_geom", &TolerancePolicy::eps_geom)
        .def_readwrite("eps_count", &TolerancePolicy::eps_count)
        .def_readwrite("max_iter", &TolerancePolicy::max_iter);

    py::class_<BlaschkeProduct>(m, "BlaschkeProduct")
        .def(py::init<Complex, std::vector<Complex>, double>(), py::arg("prefactor"),
             py::arg("zeros"), py::arg("eps_geom") = 1e-9)
        .def_static("canonical", &BlaschkeProduct::canonical, py::arg("nonzero_zeros"),
                    py::arg("eps_geom") = 1e-9)
        .def_property_readonly("prefactor", &BlaschkeProduct::prefactor)
        .def_property_readonly("zeros", &BlaschkeProduct::zeros)
        .def_property_readonly("degree", &BlaschkeProduct::degree)
        .def("is_canonical", &BlaschkeProduct::is_canonical, py::arg("eps") = 1e-12)
        .def("__call__", &BlaschkeProduct::evaluate, py::arg("z"),
             py::arg("eps_geom") = 1e-9)
        .def("evaluate", &BlaschkeProduct::evaluate, py::arg("z"),
             py::arg("eps_geom") = 1e-9);

    py::class_<Ellipse>(m, "Ellipse")
        .def(py::init([](Complex f1, Complex f2, double s) {
                 return Ellipse{f1, f2, s};
             }),
             py::arg("focus1"), py::arg("focus2"), py::arg("dist_sum"))
        .def_readonly("focus1", &Ellipse::focus1)
        .def_readonly("focus2", &Ellipse::focus2)
        .def_readonly("dist_sum", &Ellipse::dist_sum)
        .def_property_readonly("semi_major", &Ellipse::semi_major)
        .def_property_readonly("semi_minor", &Ellipse::semi_minor)
        .def_property_readonly("axis_ratio", &Ellipse::axis_ratio)
        .def_property_readonly("center", &Ellipse::center);

    py::class_<ChordSolution>(m, "ChordSolution")
        .def_readonly("z1", &ChordSolution::z1)
        .def_readonly("z2", &ChordSolution::z2)
        .def_readonly("theta", &ChordSolution::theta)
        .def_readonly("short_len", &ChordSolution::short_len)
        .def_readonly("long_len", &ChordSolution::long_len);

    py::class_<ChordClassification>(m, "ChordClassification")
        .def_readonly("ratio", &ChordClassification::ratio)
        .def_readonly("chords", &ChordClassification::chords)
        .def_property_readonly("case_name", [](const ChordClassification& c) {
            switch (c.kind) {
                case ChordCase::None: return "none";
                case ChordCase::Diameter: return "diameter";
                default: return "pair";
            }
        });

    py::class_<GoldenTriangle>(m, "GoldenTriangle")
        .def_readonly("vertices", &GoldenTriangle::vertices)
        .def("lateral_len", &GoldenTriangle::lateral_len)
        .def("base_len", &GoldenTriangle::base_len);

    py::class_<GoldenRectangle>(m, "GoldenRectangle")
        .def_readonly("vertices", &GoldenRectangle::vertices)
        .def_readonly("half_long", &GoldenRectangle::half_long)
        .def_readonly("half_short", &GoldenRectangle::half_short);

    py::class_<PonceletReport>(m, "PonceletReport")
        .def_readonly("max_defect", &PonceletReport::max_defect)
        .def_readonly("samples", &PonceletReport::samples)
        .def_readonly("chords_checked", &PonceletReport::chords_checked);

    py::class_<InscribedEllipseSolution>(m, "InscribedEllipseSolution")
        .def_readonly("focus_a", &InscribedEllipseSolution::focus_a)
        .def_readonly("focus_b", &InscribedEllipseSolution::focus_b)
        .def_readonly("residual", &InscribedEllipseSolution::residual);

    m.attr("ALPHA") = GoldenConstants::alpha;
    m.attr("CHORD_THRESHOLD") = GoldenConstants::chord_threshold;

    m.def("golden_chords",
          [](Complex a) { return golden_chords(a); }, py::arg("a"));
    m.def("golden_triangle", &golden_triangle, py::arg("rotation") = 0.0);
    m.def("golden_rectangle", &golden_rectangle, py::arg("rotation") = 0.0);
    m.def("divides_in_golden_ratio",
          [](Complex p, Complex q, Complex c) {
              return divides_in_golden_ratio(p, q, c);
          },
          py::arg("p"), py::arg("q"), py::arg("c"));

    m.def("preimages_on_circle",
          [](const BlaschkeProduct& B, Complex lam) {
              return preimages_on_circle(B, lam);
          },
          py::arg("product"), py::arg("lam"));
    m.def("is_interspersed",
          [](const std::vector<Complex>& Z, const std::vector<Complex>& W) {
              return is_interspersed(Z, W);
          },
          py::arg("z"), py::arg("w"));
    m.def("construct_identifying_product",
          [](const std::vector<Complex>& Z, const std::vector<Complex>& W) {
              return construct_identifying_product(Z, W);
          },
          py::arg("z"), py::arg("w"));
    m.def("identification_residual", &identification_residual, py::arg("product"),
          py::arg("points"));

    m.def("blaschke3_ellipse",
          [](Complex a1, Complex a2) { return blaschke3_ellipse(a1, a2); },
          py::arg("a1"), py::arg("a2"));
    m.def("steiner_foci",
          [](const std::array<Complex, 3>& t) { return steiner_foci(t); },
          py::arg("triangle"));
    m.def("golden_blaschke_ellipse", &golden_blaschke_ellipse);
    m.def("rotate_blaschke_ellipse", &rotate_blaschke_ellipse, py::arg("ellipse"),
          py::arg("product"), py::arg("phi"));
    m.def("verify_poncelet",
          [](const BlaschkeProduct& B, const Ellipse& e, int samples) {
              return verify_poncelet(B, e, samples);
          },
          py::arg("product"), py::arg("ellipse"), py::arg("samples") = 100);
    m.def("inscribed_ellipse_foci",
          [](const std::array<Complex, 4>& quad, Complex seed) {
              return inscribed_ellipse_foci(quad, seed);
          },
          py::arg("quad"), py::arg("seed"));
    m.def("degree4_ellipse", &degree4_ellipse, py::arg("a"), py::arg("b"));
    m.def("degree4_product_from_foci",
          [](Complex a, Complex b) { return degree4_product_from_foci(a, b); },
          py::arg("a"), py::arg("b"));
    m.def("fujimura_cubic", &fujimura_cubic, py::arg("quad"), py::arg("a"));
    m.def("fujimura_partner_focus", &fujimura_partner_focus, py::arg("quad"),
          py::arg("a"));

    m.def("render_figure",
          [](int figure, int width_px) {
              return render_svg(figure_scene(figure), width_px);
          },
          py::arg("figure"), py::arg("width_px") = 512);
}
