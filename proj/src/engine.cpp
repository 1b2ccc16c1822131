#include "uw/engine.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace uw {

AutomatonState new_automaton(LatticeKind kind) {
    AutomatonState s;
    s.kind = kind;
    s.live.emplace(kPatriarch, BirthRecord{0, false, Cell{}});
    s.frontier = {kPatriarch};
    s.generation = 0;
    return s;
}

namespace {

struct Birth {
    Cell cell;
    Cell parent;

    bool operator<(const Birth& o) const { return cell < o.cell; }
};

void commit_births(AutomatonState& s, std::vector<Birth>& births, std::vector<Cell>& out) {
    std::sort(births.begin(), births.end());
    if (s.live.size() + births.size() > s.cell_budget)
        throw error("cell budget " + std::to_string(s.cell_budget) + " exceeded at generation " +
                    std::to_string(s.generation + 1));
    s.generation += 1;
    out.clear();
    out.reserve(births.size());
    for (const Birth& b : births) {
        s.live.emplace(b.cell, BirthRecord{s.generation, true, b.parent});
        out.push_back(b.cell);
    }
    s.frontier = out;
}

} // namespace

std::vector<Cell> step(AutomatonState& s) {
    auto dirs = directions(s.kind);
    std::vector<Birth> births;
    for (Cell f : s.frontier) {
        for (Cell d : dirs) {
            Cell c{f.x + d.x, f.y + d.y};
            if (s.live.contains(c)) continue;
            int live_neighbors = 0;
            for (Cell e : dirs) {
                if (s.live.contains(Cell{c.x + e.x, c.y + e.y}) && ++live_neighbors > 1) break;
            }
            if (live_neighbors == 1) {
                // the unique live neighbor is the proposing frontier cell,
                // so each newborn is proposed exactly once
                births.push_back(Birth{c, f});
            }
        }
    }
    std::vector<Cell> out;
    commit_births(s, births, out);
    return out;
}

std::vector<Cell> step_naive(AutomatonState& s) {
    auto dirs = directions(s.kind);
    int64_t r = int64_t(s.generation) + 1;
    std::vector<Birth> births;
    auto consider = [&](Cell c) {
        if (s.live.contains(c)) return;
        int live_neighbors = 0;
        Cell parent{};
        for (Cell e : dirs) {
            Cell n{c.x + e.x, c.y + e.y};
            if (s.live.contains(n)) {
                ++live_neighbors;
                parent = n;
            }
        }
        if (live_neighbors == 1) births.push_back(Birth{c, parent});
    };
    if (s.kind == LatticeKind::Square) {
        for (int64_t x = -r; x <= r; ++x)
            for (int64_t y = -(r - std::abs(x)); y <= r - std::abs(x); ++y)
                consider(Cell{int32_t(x), int32_t(y)});
    } else {
        // cube ball of radius r
        for (int64_t x = -r; x <= r; ++x)
            for (int64_t y = std::max(-r, -x - r); y <= std::min(r, -x + r); ++y)
                consider(Cell{int32_t(x), int32_t(y)});
    }
    std::vector<Cell> out;
    commit_births(s, births, out);
    return out;
}

AutomatonState run(LatticeKind kind, uint32_t generations, uint64_t cell_budget) {
    AutomatonState s = new_automaton(kind);
    s.cell_budget = cell_budget;
    for (uint32_t g = 0; g < generations; ++g) step(s);
    return s;
}

std::vector<PopulationRow> population(const AutomatonState& s) {
    std::vector<uint64_t> births(size_t(s.generation) + 1, 0);
    for (const auto& [cell, rec] : s.live) {
        assert(rec.generation <= s.generation);
        births[rec.generation] += 1;
    }
    std::vector<PopulationRow> out;
    out.reserve(births.size());
    uint64_t total = 0;
    for (uint32_t g = 0; g < births.size(); ++g) {
        total += births[g];
        out.push_back(PopulationRow{g, births[g], total});
    }
    assert(total == s.live.size());
    return out;
}

void write_snapshot(const AutomatonState& s, std::ostream& os) {
    std::vector<std::pair<Cell, BirthRecord>> rows(s.live.begin(), s.live.end());
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    os << "uwca-snapshot 1 " << lattice_name(s.kind) << " " << s.generation << "\n";
    int parent_fields = s.kind == LatticeKind::Square ? 2 : 3;
    for (const auto& [cell, rec] : rows) {
        os << rec.generation << " ";
        if (rec.has_parent) {
            os << format_cell(s.kind, rec.parent);
        } else {
            for (int i = 0; i < parent_fields; ++i) os << (i ? " -" : "-");
        }
        os << " " << format_cell(s.kind, cell) << "\n";
    }
}

namespace {

Cell parse_cell(LatticeKind kind, std::istream& line) {
    int64_t x, y;
    if (!(line >> x >> y)) throw error("snapshot: malformed cell coordinates");
    if (kind == LatticeKind::Square) return Cell{int32_t(x), int32_t(y)};
    int64_t z;
    if (!(line >> z)) throw error("snapshot: malformed hex triple");
    return hex_cell(x, y, z);
}

} // namespace

AutomatonState read_snapshot(std::istream& is) {
    std::string magic, kind_name;
    int version = 0;
    uint32_t generation = 0;
    if (!(is >> magic >> version >> kind_name >> generation) || magic != "uwca-snapshot" ||
        version != 1)
        throw error("snapshot: bad header");
    AutomatonState s;
    s.kind = lattice_from_name(kind_name);
    s.generation = generation;
    std::string rest;
    std::getline(is, rest);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        uint32_t gen;
        if (!(ls >> gen)) throw error("snapshot: malformed line: " + line);
        std::string first;
        if (!(ls >> first)) throw error("snapshot: malformed line: " + line);
        BirthRecord rec;
        rec.generation = gen;
        Cell cell;
        if (first == "-") {
            std::string dash;
            ls >> dash; // second placeholder
            if (s.kind == LatticeKind::Hex) ls >> dash;
            rec.has_parent = false;
            cell = parse_cell(s.kind, ls);
        } else {
            std::istringstream head(first);
            int64_t px;
            head >> px;
            int64_t py;
            if (!(ls >> py)) throw error("snapshot: malformed parent: " + line);
            if (s.kind == LatticeKind::Square) {
                rec.parent = Cell{int32_t(px), int32_t(py)};
            } else {
                int64_t pz;
                if (!(ls >> pz)) throw error("snapshot: malformed parent: " + line);
                rec.parent = hex_cell(px, py, pz);
            }
            rec.has_parent = true;
            cell = parse_cell(s.kind, ls);
        }
        if (rec.generation > s.generation)
            throw error("snapshot: birth generation after snapshot generation: " + line);
        if (!s.live.emplace(cell, rec).second)
            throw error("snapshot: duplicate cell: " + line);
        if (rec.generation == s.generation) s.frontier.push_back(cell);
    }
    std::sort(s.frontier.begin(), s.frontier.end());
    if (!s.live.contains(kPatriarch)) throw error("snapshot: missing patriarch");
    for (const auto& [cell, rec] : s.live) {
        if (!rec.has_parent) {
            if (cell != kPatriarch)
                throw error("snapshot: non-patriarch without parent: " +
                            format_cell(s.kind, cell));
            continue;
        }
        auto it = s.live.find(rec.parent);
        if (it == s.live.end() || it->second.generation + 1 != rec.generation ||
            manhattan_distance(s.kind, cell, rec.parent) != 1)
            throw error("snapshot: inconsistent parent for " + format_cell(s.kind, cell));
    }
    return s;
}

} // namespace uw
