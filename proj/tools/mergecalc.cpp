#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "mergecalc/analysis.hpp"
#include "mergecalc/bounds.hpp"
#include "mergecalc/codec.hpp"
#include "mergecalc/constructions.hpp"
#include "mergecalc/error.hpp"
#include "mergecalc/io.hpp"
#include "mergecalc/search.hpp"

using namespace mergecalc;

namespace {

enum Exit { Ok = 0, Usage = 1, CheckFailed = 2 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_params(const std::string& text, const std::string& flag) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError(flag + ": \"" + item + "\" is not an integer");
        }
    }
    if (out.empty()) throw UsageError(flag + ": expected a comma-separated list of integers");
    return out;
}

std::string slurp(const std::string& where) {
    if (where == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(where);
    if (!in) throw UsageError("cannot read " + where);
    return {std::istreambuf_iterator<char>(in), {}};
}

bool looks_like_json(const std::string& text) {
    auto p = text.find_first_not_of(" \t\r\n");
    return p != std::string::npos && text[p] == '{';
}

// A .json file, a file holding sequence text, "-" for stdin, or inline sequence text.
MergeNetwork load_network(const std::string& where) {
    std::string text = where;
    std::string locus = "argument";
    if (where == "-" || std::filesystem::exists(where)) {
        text = slurp(where);
        locus = where == "-" ? "stdin" : where;
    }
    try {
        if (looks_like_json(text)) return network_from_json(Json::parse(text));
        return decode(parse_sequence(text));
    } catch (const Json::exception& e) {
        throw UsageError(locus + ": " + e.what());
    } catch (const MergeError& e) {
        throw UsageError(locus + ": " + e.what());
    }
}

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw UsageError("--out: cannot write " + out_path);
    out << payload;
}

std::string with_newline(std::string s) {
    if (s.empty() || s.back() != '\n') s += '\n';
    return s;
}

std::string render(const MergeNetwork& net, const std::string& format) {
    if (format == "json") return dump(network_to_json(net));
    if (format == "dot") return network_to_dot(net);
    return with_newline(format_sequence(encode(net)));
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

const char* reroute_kind_name(RerouteKind k) {
    switch (k) {
        case RerouteKind::None: return "none";
        case RerouteKind::HeadSelfReach: return "head-self-reach";
        case RerouteKind::ResidualCycle: return "residual-cycle";
        case RerouteKind::Crossing: return "crossing";
    }
    return "?";
}

// ---- gen ----

struct GenOptions {
    std::string family, params, fixture, from_seq, format = "json", out;
    int n = 0, m = 0, k = 0;
};

std::vector<int> family_params(const GenOptions& o) {
    if (!o.params.empty()) return parse_params(o.params, "--params");
    std::vector<int> p;
    if (o.family == "ones-n") {
        p = {o.k, o.n};
    } else if (o.family == "mn-lower") {
        p = {o.m, o.n};
    } else {
        p = {o.n ? o.n : o.k};
    }
    for (int x : p) {
        if (x == 0) throw UsageError("--family " + o.family + ": missing size flag (--n, --m, --k or --params)");
    }
    return p;
}

int run_gen(const GenOptions& o) {
    const int sources = !o.family.empty() + !o.fixture.empty() + !o.from_seq.empty();
    if (sources != 1) throw UsageError("gen: give exactly one of --family, --fixture, --from-seq");

    if (!o.from_seq.empty()) {
        auto seq = parse_sequence(o.from_seq);
        validate(seq);
        if (o.format == "seq") {
            emit(with_newline(format_sequence(seq)), o.out);
        } else {
            emit(render(decode(seq), o.format), o.out);
        }
        return Ok;
    }
    if (!o.fixture.empty()) {
        emit(render(fixture(o.fixture), o.format), o.out);
        return Ok;
    }
    const auto params = family_params(o);
    const auto r = recipe(o.family, params);
    if (o.format == "seq") {
        // Sequence families print their defining stroke order, not the canonical one.
        const int p = params[0];
        std::optional<MergingSequence> seq;
        if (o.family == "two-n") seq = two_n_sequence(p);
        if (o.family == "e") seq = e_sequence(p);
        if (o.family == "f") seq = f_sequence(p);
        if (o.family == "h") seq = h_sequence(p);
        if (seq) {
            emit(with_newline(format_sequence(*seq)), o.out);
            return Ok;
        }
    }
    emit(render(r.build(), o.format), o.out);
    return Ok;
}

// ---- analyze ----

int run_analyze(const std::string& input, bool as_json) {
    const auto net = load_network(input);
    const auto mergings = find_mergings(net);
    const auto witness = reroute_witness(net);
    const bool reroutable = witness.kind != RerouteKind::None;

    std::vector<int> cuts;
    for (const auto& g : net.groups) cuts.push_back(g.cut());

    Json j;
    j["reroutable"] = reroutable;
    j["mergings"] = mergings.size();
    j["cuts"] = cuts;
    j["covered"] = is_covered(net);
    j["mode"] = net.mode == SourceMode::Identical ? "identical" : "distinct";
    j["reroute_witness"] = {{"kind", reroute_kind_name(witness.kind)}, {"group", witness.group}, {"vertex", witness.vertex}};
    Json list = Json::array();
    for (const auto& m : mergings) list.push_back(merging_to_json(net, m));
    j["merging_list"] = list;

    std::ostringstream text;
    text << "reroutable: " << (reroutable ? "true" : "false") << "; mergings: " << mergings.size() << "\n";
    text << "mode: " << j["mode"].get<std::string>() << "; cuts: " << join(cuts)
         << "; vertices: " << net.dag.vertex_count() << "; edges: " << net.dag.edge_count()
         << "; covered: " << (j["covered"].get<bool>() ? "yes" : "no") << "\n";
    if (reroutable) {
        text << "reroute witness: " << reroute_kind_name(witness.kind) << " in group " << witness.group + 1;
        if (witness.vertex >= 0) text << " at " << net.dag.label(witness.vertex);
        text << "\n";
    }
    for (std::size_t i = 0; i < mergings.size(); ++i) {
        const auto& m = mergings[i];
        text << "  merging " << i + 1 << ": " << net.dag.label(m.head) << " -> " << net.dag.label(m.tail) << " via";
        for (const auto& p : m.participants) text << ' ' << p.group + 1 << '.' << p.path + 1;
        text << "\n";
    }

    // AA walks are defined only for non-reroutable two-group graphs.
    try {
        if (reroutable) throw MergeError(ErrorKind::RerouteDetected, "walks need a non-reroutable graph");
        const auto id = aa_merging_identity(net);
        Json seqs = Json::array();
        std::vector<int> lengths;
        for (const auto& s : id.sequences) {
            seqs.push_back(aa_to_json(net, s));
            lengths.push_back(s.length());
        }
        j["aa"] = {{"lengths", lengths}, {"sum", id.sum_lengths}, {"offset", id.offset}, {"holds", id.holds},
                   {"positivity", id.positivity}, {"note", id.note}, {"sequences", seqs}};
        text << "aa lengths: " << join(lengths, " ") << "; identity " << id.lhs << " = (" << id.sum_lengths;
        if (id.offset) text << " - " << id.offset;
        text << ")/2 " << (id.holds ? "holds" : "FAILS");
        if (!id.positivity) text << " (" << id.note << ")";
        text << "\n";
    } catch (const MergeError& e) {
        j["aa"] = {{"skipped", e.what()}};
        text << "aa: skipped (" << e.what() << ")\n";
    }

    const bool two_by_n = net.groups.size() == 2 && net.groups[0].cut() == 2 && net.mode == SourceMode::Distinct;
    if (two_by_n && !reroutable) {
        try {
            const auto bd = block_decomposition(net);
            j["blocks"] = blocks_to_json(bd);
            text << "blocks: theta " << bd.theta.size() << ", mini " << bd.mini_blocks.size() << ", medium "
                 << bd.medium_blocks.size() << "; x " << bd.x << " y " << bd.y << " z " << bd.z << "\n";
        } catch (const MergeError& e) {
            j["blocks"] = {{"skipped", e.what()}};
            text << "blocks: skipped (" << e.what() << ")\n";
        }
    }
    std::cout << (as_json ? dump(j) : text.str());
    return Ok;
}

// ---- search / count ----

struct SearchOptions {
    std::string type = "m", params;
    std::size_t max_nodes = SearchLimits{}.max_nodes;
    double max_seconds = SearchLimits{}.max_seconds;
    bool json = false;
};

void print_outcome(const SearchOutcome& r, bool as_json) {
    if (as_json) {
        std::cout << dump(outcome_to_json(r));
        return;
    }
    std::cout << r.label() << " = " << r.value << (r.complete ? "" : " (incomplete, lower bound)") << "\n";
    if (r.count) std::cout << "count: " << *r.count << "\n";
    std::cout << "explored: " << r.explored << "; depth bound: " << r.depth_bound << "; elapsed: " << r.elapsed.count()
              << " s\n";
    for (const auto& a : r.assumptions) std::cout << "assumption: " << a << "\n";
    std::cout << "witnesses: " << r.witnesses.size() << "\n";
    for (const auto& w : r.witnesses) std::cout << "  " << w.key << "\n";
}

int run_search(const SearchOptions& o) {
    const SearchLimits lim{o.max_nodes, o.max_seconds};
    const auto p = parse_params(o.params, "--params");
    auto need = [&](std::size_t k) {
        if (p.size() != k) throw UsageError("--type " + o.type + " takes " + std::to_string(k) + " values in --params");
    };
    SearchOutcome r;
    if (o.type == "m") {
        need(2);
        r = search_m(p[0], p[1], lim);
    } else if (o.type == "mstar") {
        if (p.size() == 2 && p[0] != p[1]) throw UsageError("--type mstar: --params must be n or n,n");
        if (p.size() > 2) need(1);
        r = search_m_star(p[0], lim);
    } else if (o.type == "count") {
        need(1);
        r = count_extremal_two_n(p[0], lim);
    } else if (o.type == "added-path") {
        need(3);
        r = search_with_added_path(p[0], p[1], p[2], lim);
    } else {
        throw UsageError("--type: expected m, mstar, count or added-path");
    }
    print_outcome(r, o.json);
    return Ok;
}

// ---- bounds ----

int run_bounds(int m, int n, const std::string& quantity, const std::string& params, bool as_json) {
    BoundTable t;
    if (!params.empty()) {
        t = bound_tables(quantity, parse_params(params, "--params"));
    } else if (m > 0 && n > 0) {
        t = quantity == "M*" ? bound_tables("M*", {m, n}) : bounds_m(m, n);
    } else {
        throw UsageError("bounds: give --m and --n, or --params");
    }
    if (as_json) {
        std::cout << dump(bounds_to_json(t));
        return Ok;
    }
    std::cout << "lower " << t.lower << " upper " << t.upper << "\n";
    std::cout << t.label() << ":";
    for (const auto& f : t.formulas) std::cout << ' ' << f;
    std::cout << "\n";
    return Ok;
}

// ---- verify ----

int run_verify(double max_seconds, bool as_json) {
    bool ok = true;
    Json fixtures = Json::array();
    std::ostringstream text;
    for (const auto& info : fixture_catalog()) {
        const auto net = fixture(info.name);
        const int got = count_mergings(net);
        const bool rr = is_reroutable(net);
        const bool pass = got == info.mergings && rr == info.reroutable;
        ok = ok && pass;
        fixtures.push_back({{"name", info.name}, {"mergings", got}, {"reroutable", rr}, {"pass", pass}});
        text << (pass ? "ok   " : "FAIL ") << "fixture " << info.name << ": mergings " << got << ", reroutable "
             << (rr ? "true" : "false") << "\n";
    }
    SearchLimits lim;
    lim.max_seconds = max_seconds;
    Json known = Json::array();
    for (const auto& c : verify_known_table(lim)) {
        const bool pass = c.status != KnownStatus::Mismatch;
        ok = ok && pass;
        known.push_back(known_check_to_json(c));
        text << (pass ? "ok   " : "FAIL ") << c.label << " = " << c.published_value << ": " << known_status_name(c.status);
        if (c.computed) text << " (computed " << *c.computed << ")";
        if (c.upper > 0) text << " in [" << c.lower << ", " << c.upper << "]";
        if (!c.note.empty()) text << "; " << c.note;
        text << "\n";
    }
    if (as_json) {
        std::cout << dump({{"fixtures", fixtures}, {"known", known}, {"pass", ok}});
    } else {
        std::cout << text.str() << (ok ? "verify: pass\n" : "verify: FAIL\n");
    }
    return ok ? Ok : CheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mergecalc: merging counts, reroutability and extremal searches for Menger path groups"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Emit a family instance, fixture or decoded sequence");
    gen_cmd->add_option("--family", gen.family, "Family name")->check(CLI::IsMember(family_names()));
    gen_cmd->add_option("--params", gen.params, "Comma-separated family parameters");
    gen_cmd->add_option("--n", gen.n, "Size n");
    gen_cmd->add_option("--m", gen.m, "Size m");
    gen_cmd->add_option("--k", gen.k, "Size k");
    gen_cmd->add_option("--fixture", gen.fixture, "Fixture name");
    gen_cmd->add_option("--from-seq", gen.from_seq, "Merging sequence text, e.g. \"2 2 : (1,2) (2,1)\"");
    gen_cmd->add_option("--format", gen.format, "json, dot or seq")->check(CLI::IsMember({"json", "dot", "seq"}));
    gen_cmd->add_option("--out", gen.out, "Output path (default stdout)");

    std::string input;
    bool json = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "Mergings, reroutability, AA walks and blocks of a graph");
    analyze_cmd->add_option("input", input, "Graph JSON, sequence text, or - for stdin")->required();
    analyze_cmd->add_flag("--json", json, "JSON output");

    SearchOptions so;
    auto* search_cmd = app.add_subcommand("search", "Exhaustive extremal search");
    search_cmd->add_option("--type", so.type, "m, mstar, count or added-path");
    search_cmd->add_option("--params", so.params, "m,n | n | n | m,n,extra")->required();
    search_cmd->add_option("--max-nodes", so.max_nodes, "Node budget");
    search_cmd->add_option("--max-seconds", so.max_seconds, "Time budget");
    search_cmd->add_flag("--json", so.json, "JSON output");

    SearchOptions co;
    co.type = "count";
    int count_n = 0;
    auto* count_cmd = app.add_subcommand("count", "Count non-reroutable (2,n) graphs with 3n-1 mergings");
    count_cmd->add_option("--n", count_n, "n")->required()->check(CLI::PositiveNumber);
    count_cmd->add_option("--max-nodes", co.max_nodes, "Node budget");
    count_cmd->add_option("--max-seconds", co.max_seconds, "Time budget");
    count_cmd->add_flag("--json", co.json, "JSON output");

    int bm = 0, bn = 0;
    std::string quantity = "M", bparams;
    auto* bounds_cmd = app.add_subcommand("bounds", "Closed-form bounds for M or M*");
    bounds_cmd->add_option("--m", bm, "m");
    bounds_cmd->add_option("--n", bn, "n");
    bounds_cmd->add_option("--quantity", quantity, "M or M*")->check(CLI::IsMember({"M", "M*"}));
    bounds_cmd->add_option("--params", bparams, "Comma-separated cut tuple");
    bounds_cmd->add_flag("--json", json, "JSON output");

    double verify_seconds = 120.0;
    auto* verify_cmd = app.add_subcommand("verify", "Fixture checks and the known-values table");
    verify_cmd->add_option("--max-seconds", verify_seconds, "Per-entry search budget");
    verify_cmd->add_flag("--json", json, "JSON output");

    std::string as = "json", out;
    auto* export_cmd = app.add_subcommand("export", "Convert a graph between JSON, sequence text and DOT");
    export_cmd->add_option("input", input, "Graph JSON, sequence text, or - for stdin")->required();
    export_cmd->add_option("--as", as, "json, seq or dot")->check(CLI::IsMember({"json", "seq", "dot"}));
    export_cmd->add_option("--out", out, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Ok : Usage;
    }

    try {
        if (*gen_cmd) return run_gen(gen);
        if (*analyze_cmd) return run_analyze(input, json);
        if (*search_cmd) return run_search(so);
        if (*count_cmd) {
            co.params = std::to_string(count_n);
            return run_search(co);
        }
        if (*bounds_cmd) return run_bounds(bm, bn, quantity, bparams, json);
        if (*verify_cmd) return run_verify(verify_seconds, json);
        if (*export_cmd) {
            emit(render(load_network(input), as), out);
            return Ok;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    } catch (const MergeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    }
    return Usage;
}
