#pragma once

#include <string>
#include <variant>
#include <vector>

#include "blagold/blaschke.hpp"
#include "blagold/poncelet.hpp"

namespace blagold {

enum class LineStyle { Solid, Dashed };

struct UnitCircleElement {};

struct PointElement {
    Complex at;
    std::string label;
};

struct ChordElement {
    Chord chord;
    LineStyle style = LineStyle::Solid;
};

struct EllipseElement {
    Ellipse ellipse;
    LineStyle style = LineStyle::Solid;
};

struct PolygonElement {
    std::vector<Complex> vertices;
    LineStyle style = LineStyle::Solid;
};

/// All consecutive preimage chords for sample_count values of lambda:
/// the envelope picture used where no curve equation exists.
struct ChordFamilyElement {
    BlaschkeProduct product;
    int sample_count;
    LineStyle style = LineStyle::Solid;
};

using SceneElement = std::variant<UnitCircleElement, PointElement, ChordElement,
                                  EllipseElement, PolygonElement,
                                  ChordFamilyElement>;

struct SceneDescription {
    std::vector<SceneElement> elements;
};

/// Deterministic SVG: viewport [-1.1, 1.1]^2 mapped to width_px, y flipped,
/// all coordinates printed with 6 decimals.
std::string render_svg(const SceneDescription& scene, int width_px = 512);

/// The six stock layouts the CLI regenerates (1-based index).
SceneDescription figure_scene(int figure);

}  // namespace blagold
