#include "uw/analysis.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "uw/gasket.hpp"
#include "uw/genealogy.hpp"

namespace uw {

namespace {

constexpr size_t kMaxSerializedCounterexamples = 100;

void sort_report(VerificationReport& r) {
    std::sort(r.parameters.begin(), r.parameters.end());
    std::sort(r.counts.begin(), r.counts.end());
    std::sort(r.counterexamples.begin(), r.counterexamples.end());
    r.counterexamples.erase(std::unique(r.counterexamples.begin(), r.counterexamples.end()),
                            r.counterexamples.end());
    r.passed = r.counterexamples.empty();
}

VerificationReport make_report(const AutomatonState& s, std::string claim_id) {
    VerificationReport r;
    r.claim_id = std::move(claim_id);
    r.kind = s.kind;
    r.parameters.emplace_back("lattice", lattice_name(s.kind));
    r.parameters.emplace_back("generation", std::to_string(s.generation));
    return r;
}

void for_each_ball_cell(LatticeKind kind, int64_t r, auto&& fn) {
    if (kind == LatticeKind::Square) {
        for (int64_t x = -r; x <= r; ++x)
            for (int64_t y = -(r - std::abs(x)); y <= r - std::abs(x); ++y)
                fn(Cell{int32_t(x), int32_t(y)});
    } else {
        for (int64_t x = -r; x <= r; ++x)
            for (int64_t y = std::max(-r, -x - r); y <= std::min(r, -x + r); ++y)
                fn(Cell{int32_t(x), int32_t(y)});
    }
}

} // namespace

void write_report(const VerificationReport& r, std::ostream& os) {
    os << "claim " << r.claim_id << "\n";
    for (const auto& [k, v] : r.parameters) os << "param " << k << " " << v << "\n";
    os << "pass " << (r.passed ? "true" : "false") << "\n";
    for (const auto& [k, v] : r.counts) os << "count " << k << " " << v << "\n";
    os << "counterexamples " << r.counterexamples.size() << "\n";
    size_t shown = std::min(r.counterexamples.size(), kMaxSerializedCounterexamples);
    for (size_t i = 0; i < shown; ++i)
        os << "counterexample " << format_cell(r.kind, r.counterexamples[i]) << "\n";
    os << "end\n";
}

std::string report_to_string(const VerificationReport& r) {
    std::ostringstream os;
    write_report(r, os);
    return os.str();
}

std::vector<Cell> pioneers(const AutomatonState& s) {
    std::vector<Cell> out;
    for (const auto& [cell, rec] : s.live)
        if (int64_t(rec.generation) == manhattan_distance(s.kind, kPatriarch, cell))
            out.push_back(cell);
    std::sort(out.begin(), out.end());
    return out;
}

VerificationReport verify_pioneer_gasket(const AutomatonState& s, int slice) {
    if (slice < 0 || slice >= slice_count(s.kind))
        throw error("slice index " + std::to_string(slice) + " out of range");
    VerificationReport r = make_report(s, "pioneer-gasket");
    r.parameters.emplace_back("slice", std::to_string(slice));

    std::set<std::pair<int64_t, int64_t>> pioneer_coords;
    for (Cell c : pioneers(s)) {
        if (!in_slice(s.kind, slice, c)) continue;
        SliceCoord sc = slice_coords(s.kind, slice, c);
        pioneer_coords.emplace(sc.a, sc.b);
    }

    // gasket pairs: slice coords (a, b) map to gasket (row a+b, pos b), and
    // membership is the carry-free condition (a & b) == 0
    std::set<std::pair<int64_t, int64_t>> gasket_pairs;
    for (int64_t row = 0; row <= int64_t(s.generation); ++row)
        for (int64_t b = 0; b <= row; ++b)
            if (((row - b) & b) == 0) gasket_pairs.emplace(row - b, b);

    int64_t missing = 0, extra = 0;
    for (const auto& [a, b] : gasket_pairs) {
        if (!pioneer_coords.contains({a, b})) {
            ++missing;
            r.counterexamples.push_back(cell_from_slice(s.kind, SliceCoord{slice, a, b}));
        }
    }
    for (const auto& [a, b] : pioneer_coords) {
        if (!gasket_pairs.contains({a, b})) {
            ++extra;
            r.counterexamples.push_back(cell_from_slice(s.kind, SliceCoord{slice, a, b}));
        }
    }
    r.counts.emplace_back("gasket_pairs", int64_t(gasket_pairs.size()));
    r.counts.emplace_back("pioneers_in_slice", int64_t(pioneer_coords.size()));
    r.counts.emplace_back("gasket_without_pioneer", missing);
    r.counts.emplace_back("pioneer_without_gasket", extra);
    sort_report(r);
    return r;
}

VerificationReport verify_containment(const AutomatonState& s) {
    VerificationReport r = make_report(s, "containment");
    int64_t checked = 0, missing = 0;
    for (int slice = 0; slice < slice_count(s.kind); ++slice) {
        for (int64_t row = 0; row <= int64_t(s.generation); ++row) {
            for (int64_t b = 0; b <= row; ++b) {
                if (((row - b) & b) != 0) continue;
                ++checked;
                Cell c = cell_from_slice(s.kind, SliceCoord{slice, row - b, b});
                if (!s.live.contains(c)) {
                    ++missing;
                    r.counterexamples.push_back(c);
                }
            }
        }
    }
    r.counts.emplace_back("gasket_cells_checked", checked);
    r.counts.emplace_back("missing", missing);
    sort_report(r);
    return r;
}

VerificationReport verify_symmetry(const AutomatonState& s) {
    VerificationReport r = make_report(s, "symmetry");
    int64_t asymmetric = 0, corner_live = 0;
    for (SymmetryElement g : symmetry_group(s.kind)) {
        for (const auto& [cell, rec] : s.live) {
            if (!s.live.contains(apply_symmetry(s.kind, g, cell))) {
                ++asymmetric;
                r.counterexamples.push_back(cell);
            }
        }
    }
    for (const auto& [cell, rec] : s.live) {
        if (on_corner_axis(s.kind, cell)) {
            ++corner_live;
            r.counterexamples.push_back(cell);
        }
    }
    r.counts.emplace_back("group_order", int64_t(symmetry_group(s.kind).size()));
    r.counts.emplace_back("live_cells", int64_t(s.live.size()));
    r.counts.emplace_back("asymmetric_images", asymmetric);
    r.counts.emplace_back("corner_axis_live", corner_live);
    sort_report(r);
    return r;
}

VerificationReport verify_parent_generation(const AutomatonState& s) {
    VerificationReport r = make_report(s, "parent-generation");
    int64_t violations = 0;
    for (const auto& [cell, rec] : s.live) {
        if (!rec.has_parent) continue;
        auto it = s.live.find(rec.parent);
        if (it == s.live.end() || it->second.generation + 1 != rec.generation) {
            ++violations;
            r.counterexamples.push_back(cell);
        }
    }
    r.counts.emplace_back("non_patriarch_cells", int64_t(s.live.size()) - 1);
    r.counts.emplace_back("violations", violations);
    sort_report(r);
    return r;
}

VerificationReport verify_distance_bound(const AutomatonState& s) {
    VerificationReport r = make_report(s, "distance-bound");
    int64_t violations = 0;
    for (const auto& [cell, rec] : s.live) {
        if (manhattan_distance(s.kind, kPatriarch, cell) > int64_t(rec.generation)) {
            ++violations;
            r.counterexamples.push_back(cell);
        }
    }
    r.counts.emplace_back("live_cells", int64_t(s.live.size()));
    r.counts.emplace_back("violations", violations);
    sort_report(r);
    return r;
}

VerificationReport verify_monotone_paths(LatticeKind kind, int radius, uint64_t path_cap) {
    VerificationReport r;
    r.claim_id = "monotone-paths";
    r.kind = kind;
    r.parameters.emplace_back("lattice", lattice_name(kind));
    r.parameters.emplace_back("radius", std::to_string(radius));
    int64_t cells = 0, paths = 0;
    for_each_ball_cell(kind, radius, [&](Cell b) {
        if (b == kPatriarch) return;
        ++cells;
        for (const auto& path : enumerate_shortest_paths(kind, kPatriarch, b, path_cap)) {
            ++paths;
            double prev = -1.0;
            for (Cell c : path) {
                double d = geometric_distance(kind, kPatriarch, c);
                if (d <= prev) {
                    r.counterexamples.push_back(b);
                    return;
                }
                prev = d;
            }
        }
    });
    r.counts.emplace_back("cells_checked", cells);
    r.counts.emplace_back("paths_checked", paths);
    sort_report(r);
    return r;
}

VerificationReport verify_even_distance_children(const AutomatonState& s) {
    if (s.generation < 2) throw error("even-distance claim needs generation >= 2");
    VerificationReport r = make_report(s, "even-distance-children");
    int64_t three_child = 0, three_child_odd = 0;
    int64_t even_cells = 0, even_with_three = 0, even_without_three = 0;
    for (const auto& [cell, rec] : s.live) {
        if (!rec.has_parent) continue;
        if (s.generation < rec.generation + 1) continue;
        size_t nchild = children_of(s, cell).size();
        bool even = manhattan_distance(s.kind, kPatriarch, cell) % 2 == 0;
        if (nchild == 3) {
            ++three_child;
            if (!even) {
                ++three_child_odd;
                r.counterexamples.push_back(cell);
            }
        }
        if (even) {
            ++even_cells;
            nchild == 3 ? ++even_with_three : ++even_without_three;
        }
    }
    r.counts.emplace_back("three_child_cells", three_child);
    r.counts.emplace_back("three_child_at_odd_distance", three_child_odd);
    r.counts.emplace_back("even_distance_cells", even_cells);
    r.counts.emplace_back("even_distance_with_three_children", even_with_three);
    r.counts.emplace_back("even_distance_without_three_children", even_without_three);
    sort_report(r);
    return r;
}

VerificationReport verify_eventually_alive(const AutomatonState& s, int radius) {
    if (s.kind != LatticeKind::Square)
        throw error("eventually-alive predicate is defined for the square lattice only");
    if (radius < 0 || int64_t(s.generation) < 2 * int64_t(radius))
        throw error("eventually-alive needs generation >= 2 * radius");
    if (!std::has_single_bit(uint64_t(s.generation) + 1))
        throw error("eventually-alive needs generation + 1 to be a power of two");
    VerificationReport r = make_report(s, "eventually-alive");
    r.parameters.emplace_back("radius", std::to_string(radius));

    // stability assertion: the ball of the given radius saw no births over
    // the final `radius` steps
    int64_t late_births = 0;
    for (const auto& [cell, rec] : s.live)
        if (manhattan_distance(s.kind, kPatriarch, cell) <= radius &&
            int64_t(rec.generation) > int64_t(s.generation) - radius)
            ++late_births;
    bool stable = late_births == 0;

    int64_t live_not_predicate = 0, predicate_not_live = 0;
    std::vector<Cell> dead_predicate_cells;
    for_each_ball_cell(s.kind, radius, [&](Cell c) {
        bool live = s.live.contains(c);
        bool predicted = eventually_alive_square(c.x, c.y);
        if (live && !predicted) {
            ++live_not_predicate;
            r.counterexamples.push_back(c);
        } else if (!live && predicted) {
            ++predicate_not_live;
            dead_predicate_cells.push_back(c);
        }
    });
    // predicate-true-but-dead cells count against the claim only under the
    // stability assertion; otherwise "eventually" is simply not settled yet
    if (stable)
        r.counterexamples.insert(r.counterexamples.end(), dead_predicate_cells.begin(),
                                 dead_predicate_cells.end());
    r.counts.emplace_back("stability_late_births", late_births);
    r.counts.emplace_back("stability_held", stable ? 1 : 0);
    r.counts.emplace_back("live_but_predicate_false", live_not_predicate);
    r.counts.emplace_back("predicate_true_but_dead", predicate_not_live);
    sort_report(r);
    return r;
}

VerificationReport verify_fertility_domain(const AutomatonState& s) {
    VerificationReport r = make_report(s, "fertility-domain");
    std::set<int> allowed = s.kind == LatticeKind::Square ? std::set<int>{0, 1, 3}
                                                          : std::set<int>{0, 1, 2, 3};
    auto hist = fertility_histogram(s);
    int64_t out_of_domain = 0;
    for (const auto& [children, count] : hist) {
        r.counts.emplace_back("children_" + std::to_string(children), int64_t(count));
        if (!allowed.contains(children)) out_of_domain += int64_t(count);
    }
    if (out_of_domain > 0) {
        for (const auto& [cell, rec] : s.live) {
            if (!rec.has_parent || s.generation < rec.generation + 1) continue;
            if (!allowed.contains(int(children_of(s, cell).size())))
                r.counterexamples.push_back(cell);
        }
    }
    r.counts.emplace_back("out_of_domain_cells", out_of_domain);
    sort_report(r);
    return r;
}

VerificationReport verify_pioneer_closure(const AutomatonState& s) {
    VerificationReport r = make_report(s, "pioneer-closure");
    std::vector<Cell> ps = pioneers(s);
    std::unordered_set<Cell, CellHash> pioneer_set(ps.begin(), ps.end());
    int64_t violations = 0;
    for (Cell c : ps) {
        const BirthRecord& rec = s.live.at(c);
        if (rec.has_parent && !pioneer_set.contains(rec.parent)) {
            ++violations;
            r.counterexamples.push_back(c);
        }
    }
    r.counts.emplace_back("pioneers", int64_t(ps.size()));
    r.counts.emplace_back("violations", violations);
    sort_report(r);
    return r;
}

void sequence_export(LatticeKind kind, uint32_t generations, std::ostream& os,
                     uint64_t cell_budget) {
    AutomatonState s = run(kind, generations, cell_budget);
    os << "generation,births,cumulative\n";
    for (const PopulationRow& row : population(s))
        os << row.generation << "," << row.births << "," << row.cumulative << "\n";
}

} // namespace uw
