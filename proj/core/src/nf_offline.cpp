#include "netfreq/nf_offline.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace netfreq {
namespace {

void require_sealed(const SuffixTree& tree) {
    if (!tree.sealed()) throw std::logic_error("offline net frequency needs a sealed tree");
}

std::vector<Symbol> leaf_child_symbols(const SuffixTree& tree, NodeId u) {
    std::vector<Symbol> out;
    tree.for_each_child(u, [&](Symbol y, NodeId v) {
        if (tree.is_leaf(v)) out.push_back(y);
    });
    return out;
}

}  // namespace

std::size_t offline_single_nf(const SuffixTree& tree, std::span<const Symbol> s) {
    require_sealed(tree);
    if (s.empty()) throw std::invalid_argument("net frequency of the empty string");
    const auto locus = tree.locate(s);
    // Unique and non-branching strings have no net occurrence.
    if (!locus || tree.is_leaf(locus->node) || locus->depth < tree.depth(locus->node)) return 0;

    const NodeId u = locus->node;
    std::size_t nf = tree.leaf_child_count(u);
    if (nf == 0) return 0;
    tree.for_each_weiner_link(u, [&](Symbol, NodeId w) {
        tree.for_each_child(w, [&](Symbol y, NodeId q) {
            if (!tree.is_leaf(q)) return;
            const NodeId p = tree.child(u, y);
            if (p != kNoNode && tree.is_leaf(p)) --nf;
        });
    });
    return nf;
}

OfflineNfBreakdown offline_nf_breakdown(const SuffixTree& tree, std::span<const Symbol> s) {
    require_sealed(tree);
    OfflineNfBreakdown out;
    out.nf = offline_single_nf(tree, s);

    auto unique_right = [&](std::span<const Symbol> str) -> std::vector<Symbol> {
        const auto locus = tree.locate(str);
        if (!locus || tree.is_leaf(locus->node)) return {};
        if (locus->depth < tree.depth(locus->node)) return {};  // only one right extension, and it repeats
        return leaf_child_symbols(tree, locus->node);
    };
    out.unique_right = unique_right(s);

    std::vector<Symbol> extended(s.size() + 1);
    std::copy(s.begin(), s.end(), extended.begin() + 1);
    for (std::size_t x = 0; x < tree.text().alphabet_size(); ++x) {
        extended[0] = static_cast<Symbol>(x);
        const auto locus = tree.locate(extended);
        if (!locus || tree.is_leaf(locus->node)) continue;
        out.repeated_left.push_back(static_cast<Symbol>(x));
        out.unique_right_of_left.emplace_back(static_cast<Symbol>(x), unique_right(extended));
    }
    return out;
}

std::vector<NfReport> offline_all_nf(const SuffixTree& tree) {
    require_sealed(tree);
    // Accumulators indexed by node id. Visiting xS credits xS and debits
    // S = slink(xS); values are exact only once every node has been visited.
    std::vector<std::int64_t> nf(tree.node_count(), 0);
    for (std::uint32_t i = 1; i < tree.node_count(); ++i) {
        const NodeId v{i};
        if (tree.is_leaf(v)) continue;
        const NodeId u = tree.suffix_link(v);
        tree.for_each_child(v, [&](Symbol y, NodeId w) {
            if (!tree.is_leaf(w)) return;
            ++nf[i];
            const NodeId p = tree.child(u, y);
            if (p != kNoNode && tree.is_leaf(p)) --nf[index_of(u)];
        });
    }

    std::vector<NfReport> reports;
    for (std::uint32_t i = 1; i < tree.node_count(); ++i) {
        const NodeId v{i};
        if (tree.is_leaf(v) || nf[i] <= 0) continue;
        const std::size_t begin = tree.start(v);
        reports.push_back(NfReport{{begin, begin + tree.depth(v) - 1}, static_cast<std::size_t>(nf[i]), v});
    }
    std::sort(reports.begin(), reports.end(),
              [](const NfReport& a, const NfReport& b) { return a.occurrence < b.occurrence; });
    return reports;
}

}  // namespace netfreq
