#include "uw/render.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "uw/gasket.hpp"
#include "uw/genealogy.hpp"

namespace uw {

const char* render_mode_name(RenderMode m) {
    switch (m) {
    case RenderMode::Plain: return "plain";
    case RenderMode::ByGeneration: return "generation";
    case RenderMode::Fertility: return "fertility";
    case RenderMode::GasketDots: return "gasket-dots";
    case RenderMode::GasketSolid: return "gasket-solid";
    case RenderMode::TreeOverlay: return "tree";
    }
    return "?";
}

RenderMode render_mode_from_name(const std::string& name) {
    for (RenderMode m : {RenderMode::Plain, RenderMode::ByGeneration, RenderMode::Fertility,
                         RenderMode::GasketDots, RenderMode::GasketSolid,
                         RenderMode::TreeOverlay})
        if (name == render_mode_name(m)) return m;
    throw error("unknown render style: " + name);
}

namespace {

constexpr double kSqrt3 = 1.7320508075688772;
constexpr double kHexCircumradius = 0.5773502691896258; // 1/sqrt(3)

// locale-independent fixed 6-digit decimal
std::string fmt(double v) {
    if (v == 0.0) v = 0.0; // normalize -0
    std::array<char, 64> buf;
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 6);
    return std::string(buf.data(), res.ptr);
}

const char* fertility_color(FertilityClass f) {
    switch (f) {
    case FertilityClass::Patriarch: return "#000000";
    case FertilityClass::Three: return "#2f5fc4";
    case FertilityClass::Two: return "#8040c0";
    case FertilityClass::One: return "#d03030";
    case FertilityClass::Leaf: return "#2f9e44";
    }
    return "#000000";
}

std::string generation_color(uint32_t gen, uint32_t max_gen) {
    // light to dark blue
    constexpr std::array<int, 3> from = {232, 240, 251};
    constexpr std::array<int, 3> to = {8, 48, 107};
    double t = max_gen == 0 ? 0.0 : double(gen) / double(max_gen);
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x",
                  int(std::lround(from[0] + (to[0] - from[0]) * t)),
                  int(std::lround(from[1] + (to[1] - from[1]) * t)),
                  int(std::lround(from[2] + (to[2] - from[2]) * t)));
    return buf;
}

// SVG y axis points down; lattice y points up.
struct Px {
    double x;
    double y;
};

Px to_px(LatticeKind kind, Cell c, double scale) {
    Vec2 e = embed(kind, c);
    return Px{e.x * scale, -e.y * scale};
}

void emit_cell_shape(std::ostringstream& os, LatticeKind kind, Px p, double scale,
                     const std::string& fill, bool stroke) {
    const char* stroke_attr = stroke ? " stroke=\"#808080\" stroke-width=\"1\"" : "";
    if (kind == LatticeKind::Square) {
        os << "<rect x=\"" << fmt(p.x - scale / 2) << "\" y=\"" << fmt(p.y - scale / 2)
           << "\" width=\"" << fmt(scale) << "\" height=\"" << fmt(scale) << "\" fill=\"" << fill
           << "\"" << stroke_attr << "/>\n";
        return;
    }
    os << "<polygon points=\"";
    for (int k = 0; k < 6; ++k) {
        double ang = (30.0 + 60.0 * k) * M_PI / 180.0;
        if (k) os << " ";
        os << fmt(p.x + kHexCircumradius * scale * std::cos(ang)) << ","
           << fmt(p.y - kHexCircumradius * scale * std::sin(ang));
    }
    os << "\" fill=\"" << fill << "\"" << stroke_attr << "/>\n";
}

bool is_gasket_cell(LatticeKind kind, Cell c) {
    for (int slice : slices_of(kind, c)) {
        SliceCoord sc = slice_coords(kind, slice, c);
        if ((uint64_t(sc.a) & uint64_t(sc.b)) == 0) return true;
    }
    return false;
}

// potential fertility of frontier cells: children the next step would give
std::unordered_map<Cell, int, CellHash> lookahead_child_counts(const AutomatonState& s) {
    AutomatonState copy = s;
    copy.cell_budget = std::max<uint64_t>(copy.cell_budget, copy.live.size() * 2 + 64);
    std::unordered_map<Cell, int, CellHash> counts;
    for (Cell born : step(copy)) counts[copy.live.at(born).parent] += 1;
    return counts;
}

FertilityClass class_for_count(const AutomatonState& s, Cell c, size_t n) {
    switch (n) {
    case 0: return FertilityClass::Leaf;
    case 1: return FertilityClass::One;
    case 2: return FertilityClass::Two;
    case 3: return FertilityClass::Three;
    default:
        throw error("cell " + format_cell(s.kind, c) + " has more than 3 children");
    }
}

std::string svg_document(double min_x, double min_y, double max_x, double max_y,
                         const std::string& body) {
    std::ostringstream os;
    double w = max_x - min_x;
    double h = max_y - min_y;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(min_x) << " "
       << fmt(min_y) << " " << fmt(w) << " " << fmt(h) << "\" width=\"" << fmt(w)
       << "\" height=\"" << fmt(h) << "\">\n";
    os << body;
    os << "</svg>\n";
    return os.str();
}

} // namespace

std::string render_state(const AutomatonState& s, const RenderStyle& style) {
    if (style.cell_size < 1) throw error("cell_size must be positive");
    double scale = style.cell_size;

    std::vector<Cell> cells;
    cells.reserve(s.live.size());
    for (const auto& [cell, rec] : s.live) cells.push_back(cell);
    std::sort(cells.begin(), cells.end());

    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    for (Cell c : cells) {
        Px p = to_px(s.kind, c, scale);
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    min_x -= scale;
    min_y -= scale;
    max_x += scale;
    max_y += scale;

    std::unordered_map<Cell, int, CellHash> potential;
    if (style.mode == RenderMode::Fertility) potential = lookahead_child_counts(s);

    std::ostringstream body;
    for (Cell c : cells) {
        Px p = to_px(s.kind, c, scale);
        std::string fill = "#ffffff";
        switch (style.mode) {
        case RenderMode::Plain:
        case RenderMode::GasketDots:
        case RenderMode::TreeOverlay:
            break;
        case RenderMode::ByGeneration:
            fill = generation_color(s.live.at(c).generation, s.generation);
            break;
        case RenderMode::Fertility: {
            FertilityClass fc;
            if (!s.live.at(c).has_parent)
                fc = FertilityClass::Patriarch;
            else if (children_final(s, c))
                fc = fertility_class(s, c);
            else {
                auto it = potential.find(c);
                fc = class_for_count(s, c, size_t(it == potential.end() ? 0 : it->second));
            }
            fill = fertility_color(fc);
            break;
        }
        case RenderMode::GasketSolid:
            if (is_gasket_cell(s.kind, c)) fill = "#000000";
            break;
        }
        emit_cell_shape(body, s.kind, p, scale, fill, style.show_grid);
    }

    if (style.mode == RenderMode::GasketDots) {
        for (Cell c : cells) {
            if (!is_gasket_cell(s.kind, c)) continue;
            Px p = to_px(s.kind, c, scale);
            body << "<circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y) << "\" r=\""
                 << fmt(0.18 * scale) << "\" fill=\"#000000\"/>\n";
        }
    } else if (style.mode == RenderMode::TreeOverlay) {
        for (const auto& [parent, child] : family_tree_edges(s)) {
            Px a = to_px(s.kind, parent, scale);
            Px b = to_px(s.kind, child, scale);
            body << "<line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x)
                 << "\" y2=\"" << fmt(b.y) << "\" stroke=\"#c03030\" stroke-width=\""
                 << fmt(0.12 * scale) << "\"/>\n";
        }
        Px root = to_px(s.kind, kPatriarch, scale);
        body << "<circle cx=\"" << fmt(root.x) << "\" cy=\"" << fmt(root.y) << "\" r=\""
             << fmt(0.2 * scale) << "\" fill=\"#000000\"/>\n";
    }

    return svg_document(min_x, min_y, max_x, max_y, body.str());
}

std::string render_gasket(uint64_t n, const RenderStyle& style) {
    if (style.cell_size < 1) throw error("cell_size must be positive");
    double s = style.cell_size;
    double h = s * kSqrt3 / 2.0;
    std::ostringstream body;
    for (uint64_t r = 0; r <= n; ++r) {
        GasketRow row = gasket_row(r);
        double x0 = double(n - r) * s / 2.0;
        double y_bot = double(r + 1) * h;
        for (uint64_t p = 0; p <= r; ++p) {
            if (!row.test(p)) continue;
            double x = x0 + double(p) * s;
            body << "<polygon points=\"" << fmt(x) << "," << fmt(y_bot) << " " << fmt(x + s)
                 << "," << fmt(y_bot) << " " << fmt(x + s / 2.0) << "," << fmt(y_bot - h)
                 << "\" fill=\"#000000\"/>\n";
        }
    }
    return svg_document(0.0, 0.0, double(n + 1) * s, double(n + 1) * h, body.str());
}

std::string render_bitmap(const AutomatonState& s) {
    if (s.kind != LatticeKind::Square)
        throw error("bitmap rendering supports the square lattice only");
    int64_t g = s.generation;
    int64_t side = 2 * g + 1;
    std::ostringstream os;
    os << "P1\n" << side << " " << side << "\n";
    for (int64_t y = g; y >= -g; --y) {
        for (int64_t x = -g; x <= g; ++x)
            os << (s.live.contains(Cell{int32_t(x), int32_t(y)}) ? '1' : '0');
        os << "\n";
    }
    return os.str();
}

} // namespace uw
