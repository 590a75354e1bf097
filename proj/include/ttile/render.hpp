#pragma once

#include <stdexcept>
#include <string>

#include "ttile/construct.hpp"
#include "ttile/grid.hpp"

// Serialization and visualization. JSON is the single interchange format
// (schema version 1, documented in the README); ASCII and SVG are
// render-only.

namespace ttile {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Canonical document: pieces sorted, stable key order.
// {"schema": 1,
//  "region": {"kind": "square"|"an"|"explicit", "n": int, "cells": [[r,c],...]},
//  "tetrominoes": [[[r,c] x4], ...],
//  "monominoes": [[r,c], ...],
//  "trace": {...}}            (optional)
std::string emit_json(const Tiling& t);
std::string emit_json(const Tiling& t, const ConstructionTrace& trace);

// Structural validation only (field types, piece cardinality, coordinate
// signs); tiling-level defects such as overlaps are the verifier's job.
// Throws ParseError with field context on malformed documents.
Tiling parse_json(const std::string& text);

// One character per cell, top row first: letters for tetrominoes (adjacent
// pieces get distinct letters), '.' for monominoes, ' ' for cells outside
// the region or left uncovered. Rejects bounding boxes over 200 x 200.
std::string render_ascii(const Tiling& t);

// Standalone SVG 1.1: one closed outline path per piece with rounded
// joins, monominoes hatch-filled. Styling constants live in SvgStyle.
std::string render_svg(const Tiling& t);

struct SvgStyle {
    double scale = 32.0;         // pixels per cell
    double margin = 8.0;         // pixels around the drawing
    double inset = 0.02;         // cells; gap between adjacent outlines
    double stroke_width = 0.12;  // cells
};

inline constexpr SvgStyle kSvgStyle{};

}  // namespace ttile
