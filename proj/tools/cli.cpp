#include "cli.hpp"

#include "kleshchev/abacus.hpp"
#include "kleshchev/crystal.hpp"
#include "kleshchev/error.hpp"
#include "kleshchev/fock.hpp"
#include "kleshchev/io.hpp"
#include "kleshchev/orders.hpp"
#include "kleshchev/sequences.hpp"
#include "kleshchev/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace kleshchev::cli {

namespace {

enum class Format { Text, Json, Dot };

struct Globals {
    int e = 2;
    int m = 0;
    Format format = Format::Text;
    std::string out_file;
    unsigned threads = 1;
};

ResidueSequence parse_word(const std::string& text, int e) {
    ResidueSequence word;
    if (text.empty() || text == "-") return word;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != tok.size()) {
            throw ParseError(ParseErrorKind::NonInteger, "not a residue: '" + tok + "'");
        }
        if (v < 0 || v >= e) throw InputError("residue " + tok + " outside 0.." + std::to_string(e - 1));
        word.push_back(Residue{v});
    }
    return word;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kleshchev and restricted bipartitions: crystal, abacus and Fock-space tools", "kleshchev"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"dot", Format::Dot}};
    app.add_option("--e", g.e, "quantum characteristic e >= 2")->capture_default_str();
    app.add_option("--m", g.m, "charge m of the first component, 0 <= m < e")->capture_default_str();
    app.add_option("--format", g.format, "output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--out", g.out_file, "write output to FILE instead of stdout");
    app.add_option("--threads", g.threads, "worker threads for verify")->check(CLI::Range(1u, 256u));

    std::string bip_arg, part_arg, word_arg, method = "akt", convention = "below", filter = "all";
    int max_rank = 0, rank = 0, charge = 0;
    std::size_t window = 0;
    bool no_check = false, timing = false;

    auto* is_k = app.add_subcommand("is-kleshchev", "test whether a bipartition is Kleshchev");
    is_k->add_option("bipartition", bip_arg, "e.g. 3,2|4,2,1")->required();
    is_k->add_option("--method", method, "akt, recursive or both")
        ->check(CLI::IsMember({"akt", "recursive", "both"}));

    auto* is_r = app.add_subcommand("is-restricted", "test whether a bipartition is restricted");
    is_r->add_option("bipartition", bip_arg)->required();

    auto* roof_cmd = app.add_subcommand("roof", "iterate up_m to an e-core");
    roof_cmd->add_option("partition", part_arg)->required();
    auto* base_cmd = app.add_subcommand("base", "iterate down_0 to an e-core");
    base_cmd->add_option("partition", part_arg)->required();
    auto* tau_cmd = app.add_subcommand("tau", "charge-shift an e-core");
    tau_cmd->add_option("core", part_arg)->required();

    auto* abacus_cmd = app.add_subcommand("abacus", "display a beta window on e runners");
    abacus_cmd->add_option("partition", part_arg)->required();
    abacus_cmd->add_option("--charge", charge, "beta-number charge")->capture_default_str();
    abacus_cmd->add_option("--window", window, "window length (default: parts + e + 1)");

    auto* opt_cmd = app.add_subcommand("optimal-seq", "optimal sequence of a Kleshchev bipartition");
    opt_cmd->add_option("bipartition", bip_arg)->required();

    auto* fock_cmd = app.add_subcommand("fock-expand", "expand divided powers or a residue word in the Fock space");
    auto* fock_bip = fock_cmd->add_option("bipartition", bip_arg, "expand along its optimal sequence");
    auto* fock_word = fock_cmd->add_option("--word", word_arg, "apply f_{s_n}...f_{s_1} to the empty bipartition");
    fock_bip->excludes(fock_word);
    fock_cmd->add_option("--convention", convention, "below, above or classical")
        ->check(CLI::IsMember({"below", "above", "classical"}));
    fock_cmd->add_flag("--no-check", no_check, "skip the unitriangularity check");

    auto* graph_cmd = app.add_subcommand("crystal-graph", "crystal graph of Kleshchev bipartitions");
    graph_cmd->add_option("--max-rank", max_rank)->required()->check(CLI::NonNegativeNumber);

    auto* enum_cmd = app.add_subcommand("enumerate", "list bipartitions of a rank");
    enum_cmd->add_option("--rank", rank)->required()->check(CLI::NonNegativeNumber);
    enum_cmd->add_option("--filter", filter, "all, kleshchev or restricted")
        ->check(CLI::IsMember({"all", "kleshchev", "restricted"}));

    auto* verify_cmd = app.add_subcommand("verify", "exhaustively compare Kleshchev and restricted bipartitions");
    verify_cmd->add_option("--max-rank", max_rank)->required()->check(CLI::NonNegativeNumber);
    verify_cmd->add_flag("--timing", timing, "include per-phase timing in the report");

    try {
        // "-|1,1" would be read as the short option -|; an empty first side means the same thing.
        std::vector<std::string> reversed;
        for (auto it = args.rbegin(); it != args.rend(); ++it) {
            reversed.push_back(it->rfind("-|", 0) == 0 ? it->substr(1) : *it);
        }
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Success;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Success;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << "\n";
        return Usage;
    }

    std::ostringstream buf;
    int code = Success;
    try {
        const Params params(g.e, g.m);
        const bool json = g.format == Format::Json;
        if (g.format == Format::Dot && !graph_cmd->parsed()) {
            throw InputError("--format dot is only available for crystal-graph");
        }

        if (is_k->parsed()) {
            Bipartition bp = parse_bipartition(bip_arg);
            bool akt = method != "recursive" ? akt_is_kleshchev(bp, params) : false;
            bool rec = method != "akt" ? is_kleshchev_recursive(bp, params) : false;
            bool verdict = method == "recursive" ? rec : akt;
            if (method == "both" && akt != rec) {
                err << "error: abacus criterion and good-node recursion disagree on " << bp.to_string() << "\n";
                code = VerificationFailure;
            } else {
                code = verdict ? Success : False;
            }
            if (json) {
                Json j{{"bipartition", bp.to_string()}, {"kleshchev", verdict}};
                if (method == "both") j["recursive"] = rec;
                buf << dump(j);
            } else {
                buf << bool_text(verdict) << "\n";
            }
        } else if (is_r->parsed()) {
            Bipartition bp = parse_bipartition(bip_arg);
            auto witness = restricted_witness(bp, params);
            if (json) {
                Json j{{"bipartition", bp.to_string()}, {"restricted", witness.has_value()}};
                j["witness"] = witness ? Json(to_string(*witness)) : Json(nullptr);
                buf << dump(j);
            } else {
                buf << bool_text(witness.has_value()) << "\n";
                if (witness) buf << "witness: " << to_string(*witness) << "\n";
            }
            code = witness ? Success : False;
        } else if (roof_cmd->parsed() || base_cmd->parsed()) {
            Partition p = parse_partition(part_arg);
            AbacusTrace trace = roof_cmd->parsed() ? roof_trace(p, params) : base_trace(p, params.e());
            if (json) {
                buf << dump(trace_to_json(trace));
            } else {
                for (const auto& mv : trace.steps) {
                    buf << (mv.kind == MoveKind::Up ? "up: bead " : "down: bead ") << mv.removed_bead << " -> "
                        << mv.added_bead << "\n";
                }
                buf << trace.result.to_string() << "\n";
            }
        } else if (tau_cmd->parsed()) {
            Partition core = parse_partition(part_arg);
            auto [result, data] = tau_trace(core, params);
            if (json) {
                buf << dump(tau_to_json(core, data, result));
            } else {
                buf << result.to_string() << "\n";
            }
        } else if (abacus_cmd->parsed()) {
            Partition p = parse_partition(part_arg);
            std::size_t len = window ? window : default_window(p, params.e());
            buf << (json ? dump(abacus_to_json(p, charge, params.e(), len))
                         : abacus_to_text(p, charge, params.e(), len));
        } else if (opt_cmd->parsed()) {
            Bipartition bp = parse_bipartition(bip_arg);
            OptimalSequence seq = optimal_sequence(bp, params);
            if (json) {
                buf << dump(Json{{"bipartition", bp.to_string()},
                                 {"word", word_to_text(seq)},
                                 {"blocks", blocks_to_json(seq)}});
            } else {
                buf << word_to_text(seq) << "\n" << blocks_to_json(seq).dump() << "\n";
            }
        } else if (fock_cmd->parsed()) {
            Convention conv = convention == "below" ? Convention::Below
                              : convention == "above" ? Convention::Above
                                                      : Convention::Classical;
            FockVector w;
            if (fock_word->count() > 0) {
                w = apply_word(parse_word(word_arg, params.e()), params, conv);
            } else if (fock_bip->count() > 0) {
                Bipartition bp = parse_bipartition(bip_arg);
                w = no_check ? expand_optimal_unchecked(bp, params, conv) : expand_optimal(bp, params, conv);
            } else {
                throw InputError("fock-expand needs a bipartition or --word");
            }
            buf << (json ? dump(fock_to_json(w)) : fock_to_text(w));
        } else if (graph_cmd->parsed()) {
            CrystalGraph graph = crystal_graph(params, max_rank);
            if (g.format == Format::Dot) {
                buf << crystal_to_dot(graph);
            } else if (json) {
                buf << dump(crystal_to_json(graph));
            } else {
                for (const auto& e : graph.edges) {
                    buf << graph.nodes[e.from].to_string() << " -" << e.label.value << "-> "
                        << graph.nodes[e.to].to_string() << "\n";
                }
                buf << graph.nodes.size() << " nodes, " << graph.edges.size() << " edges\n";
            }
        } else if (enum_cmd->parsed()) {
            Json list = Json::array();
            for (const auto& bp : enumerate_bipartitions(rank)) {
                bool keep = filter == "all" || (filter == "kleshchev" && akt_is_kleshchev(bp, params)) ||
                            (filter == "restricted" && is_restricted(bp, params));
                if (!keep) continue;
                if (json) {
                    list.push_back(bp.to_string());
                } else {
                    buf << bp.to_string() << "\n";
                }
            }
            if (json) buf << dump(list);
        } else if (verify_cmd->parsed()) {
            VerificationReport report = verify_conjecture(params, max_rank, g.threads);
            buf << (json ? dump(report_to_json(report, timing)) : report_to_text(report));
            code = report.pass() ? Success : VerificationFailure;
        }
    } catch (const InputError& ex) {
        err << "error: " << ex.what() << "\n";
        return Usage;
    } catch (const Error& ex) {
        err << "internal check failed: " << ex.what() << "\n";
        return VerificationFailure;
    }

    if (g.out_file.empty()) {
        out << buf.str();
    } else {
        std::ofstream f(g.out_file, std::ios::binary);
        if (!f) {
            err << "error: cannot open " << g.out_file << " for writing\n";
            return Usage;
        }
        f << buf.str();
    }
    return code;
}

} // namespace kleshchev::cli
