#include "netfreq/nf_online.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace netfreq {
namespace {

// Sy is unique: child(u, y) is a leaf and no repeated suffix continues along its edge.
bool unique_right(const SuffixTree& tree, const ImplicitRegistry& reg, NodeId u, Symbol y) {
    const NodeId p = tree.child(u, y);
    return p != kNoNode && tree.is_leaf(p) && reg.edge_is_implicit_free(p);
}

std::size_t unique_right_count(const SuffixTree& tree, const ImplicitRegistry& reg, NodeId u) {
    std::size_t count = 0;
    tree.for_each_child(u, [&](Symbol, NodeId p) {
        if (tree.is_leaf(p) && reg.edge_is_implicit_free(p)) ++count;
    });
    return count;
}

std::int64_t nf_at(const OnlineBuilder& index, Locus locus) {
    const SuffixTree& tree = index.tree();
    const ImplicitRegistry& reg = index.registry();
    const NodeId u = locus.node;

    // The longest repeated suffix inside an edge occurs once more besides the
    // end of the text, and both occurrences are net. On a branching node this
    // shortcut does not hold (other occurrences can have repeated left
    // extensions), so that case takes the general route below.
    if (locus.depth < tree.depth(u) && locus == index.active_point()) {
        return static_cast<std::int64_t>(rho(index, locus));
    }
    if (tree.is_leaf(u) || locus.depth < tree.depth(u)) return 0;

    const bool coinciding = reg.coincides_with_branching(tree, u);
    std::int64_t nf = static_cast<std::int64_t>(unique_right_count(tree, reg, u)) + (coinciding ? 1 : 0);
    if (nf == 0) return 0;

    // Left extensions xS that are branching nodes.
    tree.for_each_weiner_link(u, [&](Symbol, NodeId w) {
        tree.for_each_child(w, [&](Symbol y, NodeId q) {
            if (tree.is_leaf(q) && reg.edge_is_implicit_free(q) && unique_right(tree, reg, u, y)) --nf;
        });
    });
    if (!coinciding) return nf;

    // Left extensions xS that are repeated suffixes: both end with the virtual
    // end-of-text extension, and at most one real symbol can follow xS.
    for (const Locus& target : implicit_weiner_links(index, locus)) {
        --nf;
        if (target.depth == tree.depth(target.node)) continue;
        // str(q)[1..l] is followed by text position start(q) + l (1-based),
        // i.e. zero-based index start(q) - 1 + l.
        const Symbol y = tree.text()[tree.start(target.node) - 1 + target.depth];
        if (tree.is_leaf(target.node) && reg.deepest_implicit_on_edge(target.node) == target.depth &&
            unique_right(tree, reg, u, y)) {
            --nf;
        }
    }
    return nf;
}

}  // namespace

std::size_t rho(const OnlineBuilder& index, Locus locus) {
    const SuffixTree& tree = index.tree();
    const ImplicitRegistry& reg = index.registry();
    if (!reg.is_implicit(tree, locus)) throw std::invalid_argument("rho needs an implicit node");
    switch (reg.classify(tree, locus)) {
        case ImplicitClass::Coinciding:
            return 1 + unique_right_count(tree, reg, locus.node);
        case ImplicitClass::Internal:
            return 1;
        case ImplicitClass::External:
            return reg.deepest_implicit_on_edge(locus.node) == locus.depth ? 2 : 1;
    }
    return 0;
}

std::vector<Locus> implicit_weiner_links(const OnlineBuilder& index, Locus locus) {
    const SuffixTree& tree = index.tree();
    const ImplicitRegistry& reg = index.registry();
    if (!tree.is_branching(locus.node) || locus.depth != tree.depth(locus.node) ||
        !reg.coincides_with_branching(tree, locus.node)) {
        throw std::invalid_argument("implicit Weiner links need a locus coinciding with a branching node");
    }

    const std::size_t target = locus.depth + 1;
    std::vector<Locus> found;
    auto consider = [&](NodeId q) {
        if (tree.depth(tree.parent(q)) >= target || tree.depth(q) < target) return;
        const Locus candidate{q, target};
        if (!reg.is_implicit(tree, candidate)) return;
        if (std::find(found.begin(), found.end(), candidate) == found.end()) found.push_back(candidate);
    };

    // The parent of a target is wlink(v, x) for the lowest ancestor v of the
    // node that has one, or the root.
    NodeId p = locus.node;
    while (p != kRoot) {
        p = tree.parent(p);
        tree.for_each_weiner_link(p, [&](Symbol, NodeId w) {
            tree.for_each_child(w, [&](Symbol, NodeId q) { consider(q); });
        });
    }
    tree.for_each_child(kRoot, [&](Symbol, NodeId q) { consider(q); });
    return found;
}

std::size_t online_single_nf(const OnlineBuilder& index, std::span<const Symbol> s) {
    if (s.empty()) throw std::invalid_argument("net frequency of the empty string");
    const auto locus = index.tree().locate(s);
    if (!locus) return 0;
    return static_cast<std::size_t>(std::max<std::int64_t>(0, nf_at(index, *locus)));
}

std::vector<NfReport> online_all_nf(const OnlineBuilder& index) {
    const SuffixTree& tree = index.tree();
    const ImplicitRegistry& reg = index.registry();

    std::vector<std::int64_t> nf(tree.node_count(), 0);
    NodeId tau = kNoNode;
    for (std::uint32_t i = 1; i < tree.node_count(); ++i) {
        const NodeId v{i};
        if (tree.is_leaf(v)) continue;
        const NodeId u = tree.suffix_link(v);
        tree.for_each_child(v, [&](Symbol y, NodeId w) {
            if (!tree.is_leaf(w) || !reg.edge_is_implicit_free(w)) return;
            ++nf[i];
            if (unique_right(tree, reg, u, y)) --nf[index_of(u)];
        });
        if (reg.coincides_with_branching(tree, v)) {
            // End of text: unique for xS, and for S when S is also a repeated suffix.
            ++nf[i];
            if (u != kRoot && reg.coincides_with_branching(tree, u)) --nf[index_of(u)];
            if (tau == kNoNode || tree.depth(v) > tree.depth(tau)) tau = v;
        }
    }
    // Only the longest coinciding repeated suffix can have a left extension
    // that is a repeated suffix inside an edge; recompute it in full.
    if (tau != kNoNode) nf[index_of(tau)] = nf_at(index, Locus{tau, tree.depth(tau)});

    std::vector<NfReport> reports;
    for (std::uint32_t i = 1; i < tree.node_count(); ++i) {
        const NodeId v{i};
        if (tree.is_leaf(v) || nf[i] <= 0) continue;
        const std::size_t begin = tree.start(v);
        reports.push_back(NfReport{{begin, begin + tree.depth(v) - 1}, static_cast<std::size_t>(nf[i]), v});
    }

    const Locus active = index.active_point();
    if (active.depth > 0 && active.depth < tree.depth(active.node)) {
        const std::size_t value = rho(index, active);
        const std::size_t begin = tree.start(active.node);
        reports.push_back(NfReport{{begin, begin + active.depth - 1}, value, active.node});
    }
    std::sort(reports.begin(), reports.end(),
              [](const NfReport& a, const NfReport& b) { return a.occurrence < b.occurrence; });
    return reports;
}

}  // namespace netfreq
