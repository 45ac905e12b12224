#include "blagold/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "blagold/golden.hpp"

namespace blagold {

namespace {

constexpr double kView = 1.1;  // viewport half-width in plane units

void check_in_view(Complex z) {
    if (std::abs(z.real()) > kView || std::abs(z.imag()) > kView)
        throw ViewportOverflow("render_svg: coordinate outside the viewport");
}

std::string num(double v) {
    char buf[32];
    // -0.000000 and 0.000000 must print identically for determinism
    if (v == 0.0) v = 0.0;
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

class SvgWriter {
public:
    explicit SvgWriter(int width_px) : width_(width_px) {
        out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
             << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_
             << "\" height=\"" << width_ << "\" viewBox=\"0 0 " << width_ << " "
             << width_ << "\">\n";
    }

    double sx(double x) const { return (x + kView) / (2.0 * kView) * width_; }
    double sy(double y) const { return (kView - y) / (2.0 * kView) * width_; }
    double scale(double len) const { return len / (2.0 * kView) * width_; }

    std::string stroke_attrs(LineStyle style) const {
        std::string s = " fill=\"none\" stroke=\"black\" stroke-width=\"1\"";
        if (style == LineStyle::Dashed) s += " stroke-dasharray=\"6,4\"";
        return s;
    }

    void circle(Complex center, double r, LineStyle style) {
        out_ << "<circle cx=\"" << num(sx(center.real())) << "\" cy=\""
             << num(sy(center.imag())) << "\" r=\"" << num(scale(r)) << "\""
             << stroke_attrs(style) << "/>\n";
    }

    void dot(Complex at, const std::string& label) {
        check_in_view(at);
        out_ << "<circle cx=\"" << num(sx(at.real())) << "\" cy=\""
             << num(sy(at.imag())) << "\" r=\"3\" fill=\"black\"/>\n";
        if (!label.empty())
            out_ << "<text x=\"" << num(sx(at.real()) + 6.0) << "\" y=\""
                 << num(sy(at.imag()) - 6.0) << "\" font-size=\"14\">" << label
                 << "</text>\n";
    }

    void line(Complex p, Complex q, LineStyle style) {
        check_in_view(p);
        check_in_view(q);
        out_ << "<line x1=\"" << num(sx(p.real())) << "\" y1=\""
             << num(sy(p.imag())) << "\" x2=\"" << num(sx(q.real()))
             << "\" y2=\"" << num(sy(q.imag())) << "\"" << stroke_attrs(style)
             << "/>\n";
    }

    void polygon(const std::vector<Complex>& vs, LineStyle style) {
        out_ << "<polygon points=\"";
        for (std::size_t i = 0; i < vs.size(); ++i) {
            check_in_view(vs[i]);
            if (i) out_ << " ";
            out_ << num(sx(vs[i].real())) << "," << num(sy(vs[i].imag()));
        }
        out_ << "\"" << stroke_attrs(style) << "/>\n";
    }

    void ellipse(const Ellipse& e, LineStyle style) {
        Complex c = e.center();
        if (std::abs(c) + e.semi_major() > kView)
            throw ViewportOverflow("render_svg: ellipse outside the viewport");
        double cx = sx(c.real()), cy = sy(c.imag());
        // y flip negates the rotation angle
        double deg = -e.rotation() * 180.0 / std::numbers::pi;
        out_ << "<ellipse cx=\"" << num(cx) << "\" cy=\"" << num(cy)
             << "\" rx=\"" << num(scale(e.semi_major())) << "\" ry=\""
             << num(scale(e.semi_minor())) << "\" transform=\"rotate("
             << num(deg) << " " << num(cx) << " " << num(cy) << ")\""
             << stroke_attrs(style) << "/>\n";
    }

    std::string finish() {
        out_ << "</svg>\n";
        return out_.str();
    }

private:
    int width_;
    std::ostringstream out_;
};

}  // namespace

std::string render_svg(const SceneDescription& scene, int width_px) {
    if (width_px < 64) throw InvalidArgument("render_svg: width_px >= 64");
    SvgWriter svg(width_px);
    for (const SceneElement& el : scene.elements) {
        std::visit(
            [&](const auto& e) {
                using T = std::decay_t<decltype(e)>;
                if constexpr (std::is_same_v<T, UnitCircleElement>) {
                    svg.circle(Complex(0.0), 1.0, LineStyle::Solid);
                } else if constexpr (std::is_same_v<T, PointElement>) {
                    svg.dot(e.at, e.label);
                } else if constexpr (std::is_same_v<T, ChordElement>) {
                    svg.line(e.chord.p, e.chord.q, e.style);
                } else if constexpr (std::is_same_v<T, EllipseElement>) {
                    svg.ellipse(e.ellipse, e.style);
                } else if constexpr (std::is_same_v<T, PolygonElement>) {
                    svg.polygon(e.vertices, e.style);
                } else if constexpr (std::is_same_v<T, ChordFamilyElement>) {
                    const int n = e.product.degree();
                    for (int k = 0; k < e.sample_count; ++k) {
                        Complex lambda = std::polar(
                            1.0, 2.0 * std::numbers::pi * k / e.sample_count);
                        std::vector<Complex> pre =
                            preimages_on_circle(e.product, lambda);
                        for (int i = 0; i < n; ++i)
                            svg.line(pre[i], pre[(i + 1) % n], e.style);
                    }
                }
            },
            el);
    }
    return svg.finish();
}

namespace {

std::vector<Complex> regular_polygon(int n, double rotation) {
    std::vector<Complex> vs(n);
    for (int k = 0; k < n; ++k)
        vs[k] = std::polar(1.0, rotation + 2.0 * std::numbers::pi * k / n);
    return vs;
}

SceneDescription interspersed_family_scene(int n, double offset, int samples) {
    std::vector<Complex> Z = regular_polygon(n, 0.0);
    std::vector<Complex> W = regular_polygon(n, offset);
    BlaschkeProduct B = construct_identifying_product(Z, W);
    SceneDescription scene;
    scene.elements.push_back(UnitCircleElement{});
    scene.elements.push_back(PolygonElement{Z, LineStyle::Dashed});
    scene.elements.push_back(PolygonElement{W, LineStyle::Dashed});
    scene.elements.push_back(ChordFamilyElement{B, samples, LineStyle::Solid});
    return scene;
}

}  // namespace

SceneDescription figure_scene(int figure) {
    SceneDescription scene;
    scene.elements.push_back(UnitCircleElement{});
    switch (figure) {
        case 1: {
            Complex a(0.5, 0.0);
            ChordClassification cc = golden_chords(a);
            scene.elements.push_back(PointElement{a, "a"});
            for (const ChordSolution& s : cc.chords)
                scene.elements.push_back(
                    ChordElement{Chord{s.z1, s.z2}, LineStyle::Dashed});
            return scene;
        }
        case 2: {
            GoldenTriangle t = golden_triangle(0.0);
            auto [f1, f2] = steiner_foci(t.vertices);
            scene.elements.push_back(PolygonElement{
                {t.vertices.begin(), t.vertices.end()}, LineStyle::Dashed});
            scene.elements.push_back(
                EllipseElement{blaschke3_ellipse(f1, f2), LineStyle::Solid});
            return scene;
        }
        case 3: {
            GoldenTriangle t1 = golden_triangle(0.0);
            GoldenTriangle t2 = golden_triangle(std::numbers::pi / 3.0);
            std::vector<Complex> Z(t1.vertices.begin(), t1.vertices.end());
            std::vector<Complex> W(t2.vertices.begin(), t2.vertices.end());
            BlaschkeProduct B = construct_identifying_product(Z, W);
            scene.elements.push_back(PolygonElement{Z, LineStyle::Dashed});
            scene.elements.push_back(PolygonElement{W, LineStyle::Dashed});
            std::vector<Complex> nz;
            for (Complex z : B.zeros())
                if (std::abs(z) > 1e-12) nz.push_back(z);
            scene.elements.push_back(
                EllipseElement{blaschke3_ellipse(nz[0], nz[1]), LineStyle::Solid});
            return scene;
        }
        case 4: {
            GoldenRectangle r = golden_rectangle(0.0);
            double c = std::sqrt(r.half_long * r.half_long -
                                 r.half_short * r.half_short);
            scene.elements.push_back(PolygonElement{
                {r.vertices.begin(), r.vertices.end()}, LineStyle::Dashed});
            scene.elements.push_back(EllipseElement{
                degree4_ellipse(Complex(c, 0.0), Complex(-c, 0.0)),
                LineStyle::Solid});
            return scene;
        }
        case 5:
            return interspersed_family_scene(5, std::numbers::pi / 5.0, 48);
        case 6:
            return interspersed_family_scene(10, std::numbers::pi / 10.0, 48);
        default:
            throw InvalidArgument("figure_scene: figure index must be 1..6");
    }
}

}  // namespace blagold
