#pragma once

// SVG tilings of rank <= 2 alcove pictures. Vertices are computed exactly
// (rational images of the fundamental alcove's vertices); the planar
// embedding from the Cartan data is applied only when serializing, at fixed
// decimal precision, so identical specs give byte-identical documents.

#include <string>

#include "alcove/orientation.hpp"

namespace alcove {

enum class Coloring { Orientation, Component, H1Class };

struct RenderSpec {
    int radius = 4;
    Coloring coloring = Coloring::Orientation;
    double width = 800.0;
    double height = 800.0;
    bool labels = false;

    void validate(const RootSystem& rs) const;
};

Coloring parse_coloring(const std::string& name);

struct RenderStats {
    std::size_t alcoves = 0;
    std::size_t colors_used = 0;
};

std::string render_svg(const RootSystem& rs, const RenderSpec& spec, RenderStats* stats = nullptr);

}  // namespace alcove
