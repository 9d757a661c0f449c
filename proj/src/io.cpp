#include "kleshchev/io.hpp"

#include <sstream>

namespace kleshchev {

namespace {

Json coeff_to_json(const LaurentPoly& p) {
    Json c = Json::object();
    for (auto [k, v] : p.terms()) c[std::to_string(k)] = v;
    return c;
}

Json ints(const std::vector<int>& xs) {
    Json a = Json::array();
    for (int x : xs) a.push_back(x);
    return a;
}

} // namespace

Json fock_to_json(const FockVector& w) {
    Json out = Json::array();
    for (const auto& [bp, c] : w.terms()) {
        out.push_back(Json{{"bipartition", bp.to_string()}, {"coeff", coeff_to_json(c)}});
    }
    return out;
}

std::string fock_to_text(const FockVector& w) {
    if (w.is_zero()) return "0\n";
    std::string out;
    for (const auto& [bp, c] : w.terms()) out += "(" + c.to_string() + ") * " + bp.to_string() + "\n";
    return out;
}

Json trace_to_json(const AbacusTrace& trace) {
    Json steps = Json::array();
    for (const auto& mv : trace.steps) {
        Json s;
        bool up = mv.kind == MoveKind::Up;
        s["kind"] = up ? "up" : "down";
        s["p"] = mv.extremum;
        s["q"] = up ? mv.added_bead : mv.removed_bead;
        s["removed"] = mv.removed_bead;
        s["added"] = mv.added_bead;
        s["U"] = ints(mv.candidates_u);
        s[up ? "V" : "W"] = ints(mv.candidates_other);
        steps.push_back(std::move(s));
    }
    return Json{{"input", trace.input.to_string()}, {"steps", steps}, {"result", trace.result.to_string()}};
}

Json tau_to_json(const Partition& core, const TauData& data, const Partition& result) {
    return Json{{"input", core.to_string()},
                {"runner_maxima", ints(data.runner_maxima)},
                {"added_beads", ints(data.added_beads)},
                {"result", result.to_string()}};
}

Json blocks_to_json(const OptimalSequence& seq) {
    Json out = Json::array();
    for (const auto& b : seq.blocks) out.push_back(Json{{"i", b.residue.value}, {"a", b.count}});
    return out;
}

std::string word_to_text(const OptimalSequence& seq) {
    return to_string(seq.word());
}

Json crystal_to_json(const CrystalGraph& g) {
    Json nodes = Json::array();
    for (const auto& n : g.nodes) nodes.push_back(n.to_string());
    Json edges = Json::array();
    for (const auto& e : g.edges) {
        edges.push_back(Json{{"from", g.nodes[e.from].to_string()},
                             {"to", g.nodes[e.to].to_string()},
                             {"i", e.label.value}});
    }
    return Json{{"nodes", nodes}, {"edges", edges}};
}

std::string crystal_to_dot(const CrystalGraph& g) {
    std::ostringstream os;
    os << "digraph crystal {\n";
    for (const auto& n : g.nodes) os << "  \"" << n.to_string() << "\";\n";
    for (const auto& e : g.edges) {
        os << "  \"" << g.nodes[e.from].to_string() << "\" -> \"" << g.nodes[e.to].to_string()
           << "\" [label=\"" << e.label.value << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

Json report_to_json(const VerificationReport& report, bool include_timing) {
    Json ranks = Json::array();
    for (const auto& r : report.ranks) {
        Json disc = Json::array();
        for (const auto& d : r.discrepancies) {
            Json j{{"bipartition", d.shape.to_string()},
                   {"kleshchev_akt", d.kleshchev_akt},
                   {"kleshchev_recursive", d.kleshchev_recursive},
                   {"restricted", d.restricted}};
            if (!d.error.empty()) j["error"] = d.error;
            disc.push_back(std::move(j));
        }
        Json fails = Json::array();
        for (const auto& f : r.prop42_failures) {
            fails.push_back(Json{{"bipartition", f.shape.to_string()}, {"reason", f.reason}});
        }
        ranks.push_back(Json{{"n", r.n},
                             {"shapes", r.shapes},
                             {"kleshchev_akt", r.kleshchev_akt},
                             {"kleshchev_recursive", r.kleshchev_recursive},
                             {"restricted", r.restricted},
                             {"discrepancies", disc},
                             {"prop42_failures", fails}});
    }
    Json out{{"params", Json{{"e", report.e}, {"m", report.m}}},
             {"max_rank", report.max_rank},
             {"ranks", ranks},
             {"verdict", report.pass() ? "pass" : "fail"}};
    if (include_timing) {
        const auto& t = report.timing;
        out["timing_ms"] = Json{{"enumerate", t.enumerate_ms},  {"akt", t.akt_ms},
                                {"recursive", t.recursive_ms},  {"restricted", t.restricted_ms},
                                {"expansion", t.expansion_ms},  {"total", t.total_ms}};
    }
    return out;
}

std::string report_to_text(const VerificationReport& report) {
    std::ostringstream os;
    os << "e=" << report.e << " m=" << report.m << " max_rank=" << report.max_rank << "\n";
    os << "rank  shapes  akt  recursive  restricted  discrepancies  expansion_failures\n";
    for (const auto& r : report.ranks) {
        os << r.n << "  " << r.shapes << "  " << r.kleshchev_akt << "  " << r.kleshchev_recursive << "  "
           << r.restricted << "  " << r.discrepancies.size() << "  " << r.prop42_failures.size() << "\n";
        for (const auto& d : r.discrepancies) {
            os << "  discrepancy " << d.shape.to_string() << " akt=" << d.kleshchev_akt
               << " recursive=" << d.kleshchev_recursive << " restricted=" << d.restricted;
            if (!d.error.empty()) os << " error=" << d.error;
            os << "\n";
        }
        for (const auto& f : r.prop42_failures) {
            os << "  expansion " << f.shape.to_string() << ": " << f.reason << "\n";
        }
    }
    os << "verdict: " << (report.pass() ? "pass" : "fail") << "\n";
    return os.str();
}

Json abacus_to_json(const Partition& lambda, int charge, int e, std::size_t window_len) {
    BetaSet beta = beta_set(lambda, charge, window_len);
    std::vector<int> window(beta.window().begin(), beta.window().end());
    Json runners = Json::array();
    for (int r = 0; r < e; ++r) {
        std::vector<int> beads;
        for (int x : window) {
            if (floor_mod(x, e) == r) beads.push_back(x);
        }
        runners.push_back(ints(beads));
    }
    return Json{{"partition", lambda.to_string()},
                {"charge", charge},
                {"e", e},
                {"window", ints(window)},
                {"tail_bound", beta.tail_bound()},
                {"runners", runners},
                {"e_core", is_e_core(beta, e)}};
}

std::string abacus_to_text(const Partition& lambda, int charge, int e, std::size_t window_len) {
    BetaSet beta = beta_set(lambda, charge, window_len);
    std::ostringstream os;
    os << "partition " << lambda.to_string() << ", charge " << charge << ", tail bound " << beta.tail_bound()
       << "\nwindow:";
    for (int x : beta.window()) os << ' ' << x;
    os << "\n";
    // One abacus row per e consecutive positions, lowest positions first.
    int low = beta.tail_bound() + 1;
    low -= floor_mod(low, e);
    int high = beta.window().empty() ? beta.tail_bound() : beta.window().front();
    for (int row = low; row <= high; row += e) {
        os << (row < 0 ? "" : " ") << row << "\t";
        for (int x = row; x < row + e; ++x) os << (beta.contains(x) ? 'O' : '.');
        os << "\n";
    }
    return os.str();
}

} // namespace kleshchev
