#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "uw/analysis.hpp"
#include "uw/engine.hpp"
#include "uw/render.hpp"

using namespace uw;

namespace {

// no partial artifacts: write beside the target, rename into place
void atomic_write(const std::string& path, const std::string& content) {
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw error("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out) throw error("write to " + tmp.string() + " failed");
    }
    std::filesystem::rename(tmp, target);
}

struct ClaimSpec {
    std::string name;
    bool square_only = false;
};

const std::vector<ClaimSpec>& claim_registry() {
    static const std::vector<ClaimSpec> claims{
        {"pioneer-gasket"}, {"containment"},       {"symmetry"},
        {"parent-generation"}, {"distance-bound"}, {"monotone-paths"},
        {"even-distance-children"}, {"eventually-alive", true},
        {"fertility-domain"}, {"pioneer-closure"},
    };
    return claims;
}

std::vector<std::string> split_claims(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

struct VerifyOptions {
    LatticeKind kind;
    uint32_t generations;
    uint64_t budget;
    int slice;  // -1: all slices
    int radius; // 0: claim-specific default
};

std::vector<VerificationReport> run_claim(const std::string& name, const AutomatonState& state,
                                          const VerifyOptions& opt) {
    std::vector<VerificationReport> out;
    if (name == "pioneer-gasket") {
        if (opt.slice >= 0) {
            out.push_back(verify_pioneer_gasket(state, opt.slice));
        } else {
            for (int s = 0; s < slice_count(opt.kind); ++s)
                out.push_back(verify_pioneer_gasket(state, s));
        }
    } else if (name == "containment") {
        out.push_back(verify_containment(state));
    } else if (name == "symmetry") {
        out.push_back(verify_symmetry(state));
    } else if (name == "parent-generation") {
        out.push_back(verify_parent_generation(state));
    } else if (name == "distance-bound") {
        out.push_back(verify_distance_bound(state));
    } else if (name == "monotone-paths") {
        out.push_back(verify_monotone_paths(opt.kind, opt.radius > 0 ? opt.radius : 6));
    } else if (name == "even-distance-children") {
        out.push_back(verify_even_distance_children(state));
    } else if (name == "eventually-alive") {
        int radius = opt.radius > 0 ? opt.radius : int((opt.generations - 1) / 2);
        out.push_back(verify_eventually_alive(state, radius));
    } else if (name == "fertility-domain") {
        out.push_back(verify_fertility_domain(state));
    } else if (name == "pioneer-closure") {
        out.push_back(verify_pioneer_closure(state));
    } else {
        throw error("unknown claim: " + name);
    }
    return out;
}

int cmd_run(LatticeKind kind, uint32_t generations, uint64_t budget, const std::string& out) {
    AutomatonState s = run(kind, generations, budget);
    if (!out.empty()) {
        std::ostringstream snapshot;
        write_snapshot(s, snapshot);
        atomic_write(out, snapshot.str());
    }
    auto pop = population(s);
    std::cout << lattice_name(kind) << " automaton after " << generations << " generations: "
              << s.live.size() << " live cells (" << pop.back().births << " born in generation "
              << generations << ")\n";
    if (!out.empty()) std::cout << "snapshot written to " << out << "\n";
    return 0;
}

int cmd_verify(const VerifyOptions& opt, const std::string& claims_arg,
               const std::string& out) {
    std::vector<std::string> selected;
    if (claims_arg == "all") {
        for (const ClaimSpec& c : claim_registry())
            if (!c.square_only || opt.kind == LatticeKind::Square) selected.push_back(c.name);
    } else {
        selected = split_claims(claims_arg);
        if (selected.empty()) throw CLI::ValidationError("--claims", "empty claim list");
        for (const std::string& name : selected) {
            bool known = false;
            for (const ClaimSpec& c : claim_registry()) known |= c.name == name;
            if (!known) throw CLI::ValidationError("--claims", "unknown claim: " + name);
        }
    }

    AutomatonState state = run(opt.kind, opt.generations, opt.budget);
    std::ostringstream reports;
    bool all_passed = true;
    for (const std::string& name : selected) {
        for (const VerificationReport& r : run_claim(name, state, opt)) {
            write_report(r, reports);
            all_passed &= r.passed;
            std::cout << r.claim_id;
            for (const auto& [k, v] : r.parameters)
                if (k != "lattice" && k != "generation") std::cout << " " << k << "=" << v;
            std::cout << ": " << (r.passed ? "pass" : "FAIL") << " ("
                      << r.counterexamples.size() << " counterexamples)\n";
        }
    }
    if (!out.empty()) {
        atomic_write(out, reports.str());
        std::cout << "reports written to " << out << "\n";
    }
    std::cout << (all_passed ? "all claims hold" : "some claims FAILED") << "\n";
    return all_passed ? 0 : 1;
}

int cmd_render(LatticeKind kind, uint32_t generations, uint64_t budget,
               const std::string& style_name, const std::string& format,
               const std::string& out) {
    AutomatonState s = run(kind, generations, budget);
    std::string doc;
    if (format == "svg") {
        RenderStyle style;
        style.mode = render_mode_from_name(style_name);
        doc = render_state(s, style);
    } else { // pbm
        if (style_name != "plain")
            throw error("portable-bitmap output supports --style plain only");
        doc = render_bitmap(s); // throws for hex
    }
    atomic_write(out, doc);
    std::cout << "figure written to " << out << " (" << doc.size() << " bytes)\n";
    return 0;
}

int cmd_seq(LatticeKind kind, uint32_t generations, uint64_t budget, const std::string& out) {
    std::ostringstream csv;
    sequence_export(kind, generations, csv, budget);
    if (!out.empty()) {
        atomic_write(out, csv.str());
        std::cout << "sequence written to " << out << " (" << generations + 1 << " rows)\n";
    } else {
        AutomatonState s = run(kind, generations, budget);
        std::cout << lattice_name(kind) << " population through generation " << generations
                  << ": " << s.live.size() << " live cells\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ulam-Warburton automaton simulator and claim verifier"};
    app.require_subcommand(1);

    std::string lattice = "square";
    uint32_t generations = 0;
    uint64_t budget = kDefaultCellBudget;
    std::string out_path;
    std::string style_name = "plain";
    std::string format = "svg";
    std::string claims_arg = "all";
    int slice = -1;
    int radius = 0;

    auto add_common = [&](CLI::App* cmd, bool out_required) {
        cmd->add_option("--lattice", lattice, "lattice kind")
            ->check(CLI::IsMember({"square", "hex"}))
            ->capture_default_str();
        cmd->add_option("--generations", generations, "number of growth steps")->required();
        cmd->add_option("--cell-budget", budget, "abort if the live set would exceed this")
            ->check(CLI::PositiveNumber)
            ->envname("UWCA_CELL_BUDGET")
            ->capture_default_str();
        auto* out_opt = cmd->add_option("--out", out_path, "output file path");
        if (out_required) out_opt->required();
    };

    CLI::App* c_run = app.add_subcommand("run", "simulate and write a state snapshot");
    add_common(c_run, false);

    CLI::App* c_verify = app.add_subcommand("verify", "mechanically check the documented claims");
    add_common(c_verify, false);
    c_verify->add_option("--claims", claims_arg,
                         "comma-separated claim names, or 'all'")
        ->capture_default_str();
    c_verify->add_option("--slice", slice, "restrict pioneer-gasket to one slice");
    c_verify->add_option("--radius", radius,
                         "ball radius for monotone-paths (default 6) and eventually-alive "
                         "(default (generations-1)/2)");

    CLI::App* c_render = app.add_subcommand("render", "draw the live set");
    add_common(c_render, true);
    c_render->add_option("--style", style_name, "coloring mode")
        ->check(CLI::IsMember({"plain", "generation", "fertility", "gasket-dots", "gasket-solid",
                               "tree"}))
        ->capture_default_str();
    c_render->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"svg", "pbm"}))
        ->capture_default_str();

    CLI::App* c_seq = app.add_subcommand("seq", "export the population table as CSV");
    add_common(c_seq, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_run->parsed()) return cmd_run(lattice_from_name(lattice), generations, budget,
                                            out_path);
        if (c_verify->parsed())
            return cmd_verify(VerifyOptions{lattice_from_name(lattice), generations, budget,
                                            slice, radius},
                              claims_arg, out_path);
        if (c_render->parsed())
            return cmd_render(lattice_from_name(lattice), generations, budget, style_name,
                              format, out_path);
        if (c_seq->parsed()) return cmd_seq(lattice_from_name(lattice), generations, budget,
                                            out_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
