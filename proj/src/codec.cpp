#include "mergecalc/codec.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <sstream>

#include "mergecalc/analysis.hpp"
#include "mergecalc/error.hpp"
#include "mergecalc/layout.hpp"

namespace mergecalc {

void validate(const MergingSequence& seq) {
    if (seq.m < 0 || seq.n < 0) throw InvalidStrokeError(0, "negative path count");
    if (seq.identical && seq.m != seq.n) throw InvalidStrokeError(0, "identical source needs m == n");
    for (std::size_t k = 0; k < seq.strokes.size(); ++k) {
        auto [i, j] = seq.strokes[k];
        if (i < 1 || i > seq.m || j < 1 || j > seq.n) {
            throw InvalidStrokeError(static_cast<int>(k + 1), "stroke (" + std::to_string(i) + "," +
                                                                  std::to_string(j) + ") out of range");
        }
    }
}

void validate_against(const MergingSequence& seq, const MergeNetwork& net) {
    validate(seq);
    auto view = two_group_view(net);
    if (static_cast<int>(view.on_phi.size()) != seq.m || static_cast<int>(view.on_psi.size()) != seq.n) {
        throw InvalidStrokeError(0, "path counts differ from the network");
    }
    std::vector<std::size_t> next(view.on_phi.size(), 0);
    std::vector<int> last_psi_pos(view.on_psi.size(), -1);
    for (std::size_t k = 0; k < seq.strokes.size(); ++k) {
        const int pos = static_cast<int>(k + 1);
        auto i = static_cast<std::size_t>(seq.strokes[k].first - 1);
        auto j = static_cast<std::size_t>(seq.strokes[k].second - 1);
        if (next[i] >= view.on_phi[i].size()) throw InvalidStrokeError(pos, "phi path has no further merging");
        const auto& info = view.info[static_cast<std::size_t>(view.on_phi[i][next[i]])];
        if (static_cast<std::size_t>(info.psi) != j) throw InvalidStrokeError(pos, "next merging on phi is with another psi");
        if (info.psi_pos < last_psi_pos[j]) throw InvalidStrokeError(pos, "merging is not past the last one drawn on psi");
        last_psi_pos[j] = info.psi_pos;
        ++next[i];
    }
    for (std::size_t i = 0; i < next.size(); ++i) {
        if (next[i] != view.on_phi[i].size()) {
            throw InvalidStrokeError(static_cast<int>(seq.strokes.size() + 1), "sequence leaves mergings undrawn");
        }
    }
}

MergeNetwork decode(const MergingSequence& seq) {
    validate(seq);
    Layout layout({seq.m, seq.n});
    for (auto [i, j] : seq.strokes) {
        int t = layout.add_token();
        layout.visit(0, i - 1, t);
        layout.visit(1, j - 1, t);
    }
    layout.identical = seq.identical;
    layout.starting_pairs = seq.identical ? seq.n : 0;
    return build_layout(layout);
}

namespace {

// Smallest linear extension of the per-path chains given by the stroke order.
std::vector<Stroke> greedy_order(const std::vector<Stroke>& strokes, int m, int n) {
    std::vector<std::vector<int>> on_phi(static_cast<std::size_t>(m));
    std::vector<std::vector<int>> on_psi(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < strokes.size(); ++k) {
        on_phi[static_cast<std::size_t>(strokes[k].first - 1)].push_back(static_cast<int>(k));
        on_psi[static_cast<std::size_t>(strokes[k].second - 1)].push_back(static_cast<int>(k));
    }
    std::vector<std::size_t> pi(on_phi.size(), 0);
    std::vector<std::size_t> pj(on_psi.size(), 0);
    std::vector<Stroke> out;
    out.reserve(strokes.size());
    while (out.size() < strokes.size()) {
        int best = -1;
        for (std::size_t i = 0; i < on_phi.size(); ++i) {
            if (pi[i] >= on_phi[i].size()) continue;
            int k = on_phi[i][pi[i]];
            auto j = static_cast<std::size_t>(strokes[static_cast<std::size_t>(k)].second - 1);
            if (on_psi[j][pj[j]] != k) continue;
            if (best < 0 || strokes[static_cast<std::size_t>(k)] < strokes[static_cast<std::size_t>(best)]) best = k;
        }
        // Chains come from one total order, so something is always available.
        const auto& s = strokes[static_cast<std::size_t>(best)];
        ++pi[static_cast<std::size_t>(s.first - 1)];
        ++pj[static_cast<std::size_t>(s.second - 1)];
        out.push_back(s);
    }
    return out;
}

}  // namespace

MergingSequence encode(const MergeNetwork& net) {
    auto view = two_group_view(net);
    MergingSequence seq;
    seq.m = static_cast<int>(view.on_phi.size());
    seq.n = static_cast<int>(view.on_psi.size());
    seq.identical = net.mode == SourceMode::Identical;
    std::vector<std::size_t> pi(view.on_phi.size(), 0);
    std::vector<std::size_t> pj(view.on_psi.size(), 0);
    while (seq.strokes.size() < view.mergings.size()) {
        int best = -1;
        for (std::size_t i = 0; i < view.on_phi.size(); ++i) {
            if (pi[i] >= view.on_phi[i].size()) continue;
            int k = view.on_phi[i][pi[i]];
            auto j = static_cast<std::size_t>(view.info[static_cast<std::size_t>(k)].psi);
            if (view.on_psi[j][pj[j]] != k) continue;
            best = k;
            break;  // smallest i wins; its psi index is fixed by k
        }
        if (best < 0) throw MergeError(ErrorKind::CycleDetected, "merging orders admit no common extension");
        const auto& info = view.info[static_cast<std::size_t>(best)];
        ++pi[static_cast<std::size_t>(info.phi)];
        ++pj[static_cast<std::size_t>(info.psi)];
        seq.strokes.push_back({info.phi + 1, info.psi + 1});
    }
    return seq;
}

std::string canonical_key(const MergingSequence& seq) {
    validate(seq);
    std::vector<int> sigma(static_cast<std::size_t>(seq.m));
    std::vector<int> tau(static_cast<std::size_t>(seq.n));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::vector<Stroke> best;
    std::vector<Stroke> relabeled(seq.strokes.size());
    auto consider = [&] {
        for (std::size_t k = 0; k < seq.strokes.size(); ++k) {
            relabeled[k] = {sigma[static_cast<std::size_t>(seq.strokes[k].first - 1)],
                            tau[static_cast<std::size_t>(seq.strokes[k].second - 1)]};
        }
        auto order = greedy_order(relabeled, seq.m, seq.n);
        if (best.empty() || order < best) best = std::move(order);
    };
    do {
        if (seq.identical) {
            tau = sigma;
            consider();
        } else {
            std::iota(tau.begin(), tau.end(), 1);
            do {
                consider();
            } while (std::next_permutation(tau.begin(), tau.end()));
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    MergingSequence canon = seq;
    canon.strokes = best;
    return format_sequence(canon);
}

std::string canonical_key(const MergeNetwork& net) { return canonical_key(encode(net)); }

std::string format_sequence(const MergingSequence& seq) {
    std::ostringstream out;
    out << seq.m << ' ' << seq.n << (seq.identical ? " * :" : " :");
    for (auto [i, j] : seq.strokes) out << " (" << i << ',' << j << ')';
    return out.str();
}

MergingSequence parse_sequence(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw MergeError(ErrorKind::ParseError, "missing ':' in sequence \"" + text + "\"");
    MergingSequence seq;
    {
        std::istringstream head(text.substr(0, colon));
        if (!(head >> seq.m >> seq.n)) throw MergeError(ErrorKind::ParseError, "expected 'm n' before ':'");
        std::string rest;
        if (head >> rest) {
            if (rest != "*") throw MergeError(ErrorKind::ParseError, "unexpected '" + rest + "' before ':'");
            seq.identical = true;
        }
        if (head >> rest) throw MergeError(ErrorKind::ParseError, "unexpected '" + rest + "' before ':'");
    }
    static const std::regex stroke(R"(\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
    std::string body = text.substr(colon + 1);
    auto it = body.cbegin();
    std::smatch match;
    while (it != body.cend()) {
        if (!std::regex_search(it, body.cend(), match, stroke, std::regex_constants::match_continuous)) {
            if (std::all_of(it, body.cend(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); })) break;
            throw MergeError(ErrorKind::ParseError, "bad stroke near \"" + std::string(it, body.cend()) + "\"");
        }
        seq.strokes.push_back({std::stoi(match[1]), std::stoi(match[2])});
        it = match[0].second;
    }
    validate(seq);
    return seq;
}

}  // namespace mergecalc
