#include "ttile/render.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace ttile {

namespace {

using nlohmann::json;

json cell_to_json(const Cell& c) { return json::array({c.row, c.col}); }

json region_to_json(const Region& r) {
    json out;
    switch (r.kind) {
        case RegionKind::Square:
            out["kind"] = "square";
            out["n"] = r.n;
            break;
        case RegionKind::AN:
            out["kind"] = "an";
            out["n"] = r.n;
            break;
        default: {
            // LStrip has no schema kind of its own; it serializes as explicit.
            out["kind"] = "explicit";
            json cells = json::array();
            for (const Cell& c : r.cells) cells.push_back(cell_to_json(c));
            out["cells"] = std::move(cells);
            break;
        }
    }
    return out;
}

json tiling_to_json(const Tiling& t) {
    Tiling canon = t;
    canon.canonicalize();
    json doc;
    doc["schema"] = 1;
    doc["region"] = region_to_json(canon.region);
    json ts = json::array();
    for (const TPlacement& p : canon.tetrominoes) {
        json piece = json::array();
        for (const Cell& c : p.cells) piece.push_back(cell_to_json(c));
        ts.push_back(std::move(piece));
    }
    doc["tetrominoes"] = std::move(ts);
    json ms = json::array();
    for (const Cell& c : canon.monominoes) ms.push_back(cell_to_json(c));
    doc["monominoes"] = std::move(ms);
    return doc;
}

Cell cell_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw ParseError(where + ": cell must be a [row, col] pair of integers");
    const Cell c{j[0].get<int>(), j[1].get<int>()};
    if (c.row < 0 || c.col < 0)
        throw ParseError(where + ": cell coordinates must be nonnegative");
    return c;
}

}  // namespace

std::string emit_json(const Tiling& t) { return tiling_to_json(t).dump(2) + "\n"; }

std::string emit_json(const Tiling& t, const ConstructionTrace& trace) {
    json doc = tiling_to_json(t);
    json steps = json::array();
    for (const TraceStep& s : trace.steps) {
        json step = json::array();
        step.push_back(to_string(s.kind));
        for (int p : s.params) step.push_back(p);
        steps.push_back(std::move(step));
    }
    doc["trace"] = json{{"n", trace.n}, {"steps", std::move(steps)}};
    return doc.dump(2) + "\n";
}

Tiling parse_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("document: expected a JSON object");
    if (!doc.contains("schema") || !doc["schema"].is_number_integer())
        throw ParseError("schema: missing or not an integer");
    if (doc["schema"].get<int>() != 1)
        throw ParseError("schema: unsupported version " + doc["schema"].dump());

    if (!doc.contains("region") || !doc["region"].is_object())
        throw ParseError("region: missing or not an object");
    const json& jr = doc["region"];
    if (!jr.contains("kind") || !jr["kind"].is_string())
        throw ParseError("region.kind: missing or not a string");
    const std::string kind = jr["kind"].get<std::string>();

    Tiling t;
    try {
        if (kind == "square" || kind == "an") {
            if (!jr.contains("n") || !jr["n"].is_number_integer())
                throw ParseError("region.n: missing or not an integer");
            const int n = jr["n"].get<int>();
            t.region = kind == "square" ? Region::square(n) : Region::an(n);
        } else if (kind == "explicit") {
            if (!jr.contains("cells") || !jr["cells"].is_array())
                throw ParseError("region.cells: missing or not an array");
            std::vector<Cell> cells;
            std::size_t i = 0;
            for (const json& jc : jr["cells"])
                cells.push_back(cell_from_json(jc, "region.cells[" + std::to_string(i++) + "]"));
            t.region = Region::explicit_cells(std::move(cells));
        } else {
            throw ParseError("region.kind: unknown kind '" + kind + "'");
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("region: ") + e.what());
    }

    if (!doc.contains("tetrominoes") || !doc["tetrominoes"].is_array())
        throw ParseError("tetrominoes: missing or not an array");
    std::size_t pi = 0;
    for (const json& jp : doc["tetrominoes"]) {
        const std::string where = "tetrominoes[" + std::to_string(pi++) + "]";
        if (!jp.is_array() || jp.size() != 4)
            throw ParseError(where + ": piece must have 4 cells");
        std::array<Cell, 4> cs{};
        for (std::size_t i = 0; i < 4; ++i)
            cs[i] = cell_from_json(jp[i], where + "[" + std::to_string(i) + "]");
        t.tetrominoes.push_back(TPlacement::from_cells(cs));
    }

    if (!doc.contains("monominoes") || !doc["monominoes"].is_array())
        throw ParseError("monominoes: missing or not an array");
    std::size_t mi = 0;
    for (const json& jc : doc["monominoes"])
        t.monominoes.push_back(cell_from_json(jc, "monominoes[" + std::to_string(mi++) + "]"));

    t.canonicalize();
    return t;
}

std::string render_ascii(const Tiling& t) {
    if (t.region.cells.empty()) return "";
    const Cell lo = t.region.min_corner();
    const Cell hi = t.region.max_corner();
    const int height = hi.row - lo.row + 1;
    const int width = hi.col - lo.col + 1;
    if (height > 200 || width > 200)
        throw std::invalid_argument("render_ascii: bounding box exceeds 200 x 200");

    std::vector<std::string> grid(static_cast<std::size_t>(height), std::string(width, ' '));
    auto at = [&](Cell c) -> char& {
        return grid[static_cast<std::size_t>(c.row - lo.row)][static_cast<std::size_t>(c.col - lo.col)];
    };

    Tiling canon = t;
    canon.canonicalize();

    // Greedy coloring over the piece adjacency graph, pieces in canonical
    // order, so adjacent tetrominoes always read as different letters.
    std::map<Cell, int> owner;
    for (std::size_t i = 0; i < canon.tetrominoes.size(); ++i)
        for (const Cell& c : canon.tetrominoes[i].cells) owner.emplace(c, static_cast<int>(i));

    static const std::string letters =
        "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
    std::vector<int> color(canon.tetrominoes.size(), -1);
    for (std::size_t i = 0; i < canon.tetrominoes.size(); ++i) {
        std::set<int> used;
        for (const Cell& c : canon.tetrominoes[i].cells) {
            const std::array<Cell, 4> nbrs = {Cell{c.row + 1, c.col}, Cell{c.row - 1, c.col},
                                              Cell{c.row, c.col + 1}, Cell{c.row, c.col - 1}};
            for (const Cell& nb : nbrs) {
                auto it = owner.find(nb);
                if (it != owner.end() && it->second != static_cast<int>(i) &&
                    color[static_cast<std::size_t>(it->second)] >= 0)
                    used.insert(color[static_cast<std::size_t>(it->second)]);
            }
        }
        int pick = 0;
        while (used.count(pick) != 0) ++pick;
        color[i] = pick;
        const char letter = letters[static_cast<std::size_t>(pick) % letters.size()];
        for (const Cell& c : canon.tetrominoes[i].cells)
            if (t.region.contains(c)) at(c) = letter;
    }
    for (const Cell& c : canon.monominoes)
        if (t.region.contains(c)) at(c) = '.';

    std::string out;
    for (int r = height - 1; r >= 0; --r) {
        out += grid[static_cast<std::size_t>(r)];
        out += '\n';
    }
    return out;
}

namespace {

struct Pt {
    double x, y;
};

// Boundary polygon of an edge-connected, simply connected piece, counter-
// clockwise (interior on the left), collinear runs merged, then pulled
// inward by `inset`.
std::vector<Pt> piece_outline(std::span<const Cell> cells, double inset) {
    std::set<std::pair<int, int>> in;
    for (const Cell& c : cells) in.insert({c.row, c.col});
    auto inside = [&](int r, int c) { return in.count({r, c}) != 0; };

    // Directed boundary edges keyed by start vertex (x = col, y = row).
    std::map<std::pair<int, int>, std::pair<int, int>> next;
    for (const Cell& c : cells) {
        if (!inside(c.row - 1, c.col)) next[{c.col, c.row}] = {c.col + 1, c.row};
        if (!inside(c.row, c.col + 1)) next[{c.col + 1, c.row}] = {c.col + 1, c.row + 1};
        if (!inside(c.row + 1, c.col)) next[{c.col + 1, c.row + 1}] = {c.col, c.row + 1};
        if (!inside(c.row, c.col - 1)) next[{c.col, c.row + 1}] = {c.col, c.row};
    }

    std::vector<std::pair<int, int>> loop;
    const auto start = next.begin()->first;
    auto v = start;
    do {
        loop.push_back(v);
        v = next.at(v);
    } while (v != start);

    // Merge collinear vertices.
    std::vector<std::pair<int, int>> poly;
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& prev = loop[(i + n - 1) % n];
        const auto& cur = loop[i];
        const auto& nxt = loop[(i + 1) % n];
        const int dx1 = cur.first - prev.first, dy1 = cur.second - prev.second;
        const int dx2 = nxt.first - cur.first, dy2 = nxt.second - cur.second;
        if (dx1 * dy2 - dy1 * dx2 != 0) poly.push_back(cur);
    }

    // Inward offset: each vertex moves by inset along the inward normals of
    // its two incident edges (left of travel direction for a CCW loop).
    std::vector<Pt> out;
    const std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
        const auto& prev = poly[(i + m - 1) % m];
        const auto& cur = poly[i];
        const auto& nxt = poly[(i + 1) % m];
        auto unit = [](int a, int b) { return std::pair<int, int>{a == 0 ? 0 : a / std::abs(a), b == 0 ? 0 : b / std::abs(b)}; };
        const auto d_in = unit(cur.first - prev.first, cur.second - prev.second);
        const auto d_out = unit(nxt.first - cur.first, nxt.second - cur.second);
        const double nx = -static_cast<double>(d_in.second) - static_cast<double>(d_out.second);
        const double ny = static_cast<double>(d_in.first) + static_cast<double>(d_out.first);
        out.push_back(Pt{cur.first + inset * nx, cur.second + inset * ny});
    }
    return out;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

std::string render_svg(const Tiling& t) {
    const SvgStyle& st = kSvgStyle;
    Tiling canon = t;
    canon.canonicalize();

    Cell lo{0, 0}, hi{0, 0};
    if (!canon.region.cells.empty()) {
        lo = canon.region.min_corner();
        hi = canon.region.max_corner();
    }
    const int height_cells = hi.row - lo.row + 1;
    const int width_cells = hi.col - lo.col + 1;
    const double width_px = width_cells * st.scale + 2 * st.margin;
    const double height_px = height_cells * st.scale + 2 * st.margin;

    auto to_px = [&](Pt p) {
        return Pt{st.margin + (p.x - lo.col) * st.scale,
                  st.margin + (static_cast<double>(hi.row + 1) - p.y) * st.scale};
    };
    auto path_for = [&](std::span<const Cell> cells) {
        std::string d;
        const auto outline = piece_outline(cells, st.inset);
        for (std::size_t i = 0; i < outline.size(); ++i) {
            const Pt p = to_px(outline[i]);
            d += (i == 0 ? "M" : " L");
            d += fmt(p.x);
            d += ",";
            d += fmt(p.y);
        }
        d += " Z";
        return d;
    };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out << "<svg width=\"" << fmt(width_px) << "\" height=\"" << fmt(height_px)
        << "\" viewBox=\"0 0 " << fmt(width_px) << " " << fmt(height_px)
        << "\" version=\"1.1\" xmlns=\"http://www.w3.org/2000/svg\">\n";
    out << " <defs>\n"
        << "  <pattern id=\"hatch\" patternUnits=\"userSpaceOnUse\" width=\"6\" height=\"6\""
        << " patternTransform=\"rotate(45)\">\n"
        << "   <line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"black\" stroke-width=\"1\"/>\n"
        << "  </pattern>\n"
        << " </defs>\n";

    const std::string stroke =
        "stroke=\"black\" stroke-width=\"" + fmt(st.stroke_width * st.scale) +
        "\" stroke-linejoin=\"round\" stroke-linecap=\"round\"";
    for (const TPlacement& p : canon.tetrominoes)
        out << " <path d=\"" << path_for(p.cells) << "\" fill=\"none\" " << stroke << "/>\n";
    for (const Cell& c : canon.monominoes) {
        const std::array<Cell, 1> single = {c};
        out << " <path d=\"" << path_for(single) << "\" fill=\"url(#hatch)\" " << stroke << "/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace ttile
