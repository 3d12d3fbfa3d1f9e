#include "netfreq/implicit_registry.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace netfreq {

bool ImplicitDepths::contains(std::size_t d) const {
    if (count == 0 || d > deepest) return false;
    if (count == 1) return d == deepest;
    const std::size_t gap = deepest - d;
    return gap % step == 0 && gap / step < count;
}

std::vector<std::size_t> ImplicitDepths::depths() const {
    std::vector<std::size_t> out;
    out.reserve(count);
    for (std::size_t i = count; i-- > 0;) out.push_back(deepest - i * step);
    return out;
}

const char* to_string(ImplicitClass c) {
    switch (c) {
        case ImplicitClass::External: return "external";
        case ImplicitClass::Internal: return "internal";
        case ImplicitClass::Coinciding: return "coinciding";
    }
    return "?";
}

const ImplicitRegistry::EdgeRecord& ImplicitRegistry::record(NodeId u) const {
    static const EdgeRecord kEmpty{};
    const auto i = index_of(u);
    return i < records_.size() ? records_[i] : kEmpty;
}

void ImplicitRegistry::on_event(const SuffixTree&, const ExtendEvent& event) {
    // Splits are resolved lazily: a stale locus (v, d) is lifted to the
    // ancestor whose edge now holds depth d when the chain is advanced.
    if (std::holds_alternative<NewLeaf>(event)) ++pending_leaves_;
}

void ImplicitRegistry::end_phase(const SuffixTree& tree, Symbol c, std::size_t active_length) {
    // Each leaf inserted in the phase retires one repeated suffix (or the empty one).
    if (chain_.size() + 1 != active_length + pending_leaves_) {
        throw std::logic_error("registry out of sync with the builder");
    }
    pending_leaves_ = 0;

    for (const Locus& locus : chain_) records_[index_of(locus.node)] = EdgeRecord{};
    if (mode_ == RegistryMode::Incremental) {
        advance_chain(tree, c, active_length);
    } else {
        recompute_chain(tree, active_length);
    }
    index_chain(tree);
}

void ImplicitRegistry::clear() {
    for (const Locus& locus : chain_) records_[index_of(locus.node)] = EdgeRecord{};
    chain_.clear();
    pending_leaves_ = 0;
}

void ImplicitRegistry::advance_chain(const SuffixTree& tree, Symbol c, std::size_t active_length) {
    const std::size_t old_size = chain_.size();
    scratch_.clear();
    // New suffix of length L + 1 extends the old one of length L, which sits at index old_size - L.
    for (std::size_t length = active_length; length >= 2; --length) {
        Locus locus = chain_[old_size - (length - 1)];
        while (tree.depth(tree.parent(locus.node)) >= locus.depth) locus.node = tree.parent(locus.node);
        if (locus.depth < tree.depth(locus.node)) {
            ++locus.depth;
        } else {
            locus = Locus{tree.child(locus.node, c), locus.depth + 1};
        }
        scratch_.push_back(locus);
    }
    if (active_length >= 1) scratch_.push_back(Locus{tree.child(kRoot, c), 1});
    chain_.swap(scratch_);
}

void ImplicitRegistry::recompute_chain(const SuffixTree& tree, std::size_t active_length) {
    const auto& text = tree.text();
    const std::size_t n = text.size();
    chain_.clear();
    for (std::size_t length = active_length; length >= 1; --length) {
        const std::size_t begin = n - length;
        NodeId u = kRoot;
        while (true) {
            const NodeId v = tree.child(u, text[begin + tree.depth(u)]);
            if (v == kNoNode) throw std::logic_error("repeated suffix missing from the tree");
            if (tree.depth(v) >= length) {
                chain_.push_back(Locus{v, length});
                break;
            }
            u = v;
        }
    }
}

void ImplicitRegistry::index_chain(const SuffixTree& tree) {
    if (records_.size() < tree.node_count()) records_.resize(tree.node_count());
    for (const Locus& locus : chain_) {
        EdgeRecord& rec = records_[index_of(locus.node)];
        const auto d = static_cast<std::uint32_t>(locus.depth);
        if (locus.depth == tree.depth(locus.node)) {
            rec.coinciding_depth = d;
            continue;
        }
        if (rec.count == 0) {
            rec.deepest = d;
        } else if (!tree.is_leaf(locus.node)) {
            throw std::logic_error("two implicit nodes on an internal edge");
        } else if (rec.count == 1) {
            rec.step = rec.deepest - d;
        } else if (rec.deepest - rec.count * rec.step != d) {
            throw std::logic_error("leaf-edge implicit depths are not an arithmetic progression");
        }
        ++rec.count;
    }
}

std::optional<Locus> ImplicitRegistry::suffix_locus(std::size_t length) const {
    if (length == 0 || length > chain_.size()) return std::nullopt;
    return chain_[chain_.size() - length];
}

EdgeImplicits ImplicitRegistry::implicit_on_edge(NodeId child) const {
    if (child == kRoot) throw std::invalid_argument("the root has no incoming edge");
    const EdgeRecord& rec = record(child);
    return EdgeImplicits{ImplicitDepths{rec.deepest, rec.step, rec.count}, rec.coinciding_depth != 0};
}

std::optional<std::size_t> ImplicitRegistry::deepest_implicit_on_edge(NodeId child) const {
    if (child == kRoot) throw std::invalid_argument("the root has no incoming edge");
    const EdgeRecord& rec = record(child);
    if (rec.coinciding_depth != 0) return rec.coinciding_depth;
    if (rec.count != 0) return rec.deepest;
    return std::nullopt;
}

bool ImplicitRegistry::coincides_with_branching(const SuffixTree& tree, NodeId u) const {
    if (!tree.is_branching(u)) throw std::invalid_argument("coincides_with_branching needs a branching node");
    return record(u).coinciding_depth != 0;
}

bool ImplicitRegistry::is_implicit(const SuffixTree& tree, Locus locus) const {
    if (locus.node == kRoot || locus.depth == 0) return false;
    const EdgeRecord& rec = record(locus.node);
    if (locus.depth == tree.depth(locus.node)) return rec.coinciding_depth != 0;
    return ImplicitDepths{rec.deepest, rec.step, rec.count}.contains(locus.depth);
}

ImplicitClass ImplicitRegistry::classify(const SuffixTree& tree, Locus locus) const {
    if (locus.depth == tree.depth(locus.node)) return ImplicitClass::Coinciding;
    return tree.is_leaf(locus.node) ? ImplicitClass::External : ImplicitClass::Internal;
}

void ImplicitRegistry::dump(const SuffixTree& tree, std::ostream& out) const {
    for (const Locus& locus : chain_) {
        out << index_of(locus.node) << '\t' << locus.depth << '\t' << to_string(classify(tree, locus)) << '\n';
    }
}

}  // namespace netfreq
