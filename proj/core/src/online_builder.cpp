#include "netfreq/online_builder.hpp"

#include <stdexcept>

namespace netfreq {

OnlineBuilder::OnlineBuilder(std::size_t alphabet_size, RegistryMode mode)
    : tree_(alphabet_size), registry_(mode) {}

std::vector<ExtendEvent> OnlineBuilder::extend(Symbol c) {
    std::vector<ExtendEvent> events;
    if (tree_.sealed()) throw std::logic_error("extend on a sealed tree");
    tree_.append_symbol(c);
    run_phase(c, &events);
    return events;
}

void OnlineBuilder::append(Symbol c) {
    if (tree_.sealed()) throw std::logic_error("extend on a sealed tree");
    tree_.append_symbol(c);
    run_phase(c, nullptr);
}

void OnlineBuilder::append(std::span<const Symbol> symbols) {
    for (Symbol c : symbols) append(c);
}

void OnlineBuilder::seal() {
    if (tree_.sealed()) throw std::logic_error("tree is already sealed");
    tree_.seal_text();
    run_phase(tree_.text().sentinel(), nullptr);
    registry_.clear();
}

Locus OnlineBuilder::active_point() const {
    if (active_length_ == 0) {
        return Locus{active_node_, tree_.depth(active_node_)};
    }
    const NodeId next = tree_.child(active_node_, tree_.text()[active_edge_]);
    return Locus{next, tree_.depth(active_node_) + active_length_};
}

void OnlineBuilder::emit(const ExtendEvent& event, std::vector<ExtendEvent>* events) {
    registry_.on_event(tree_, event);
    if (events != nullptr) events->push_back(event);
}

void OnlineBuilder::link_pending(NodeId target, std::vector<ExtendEvent>* events) {
    if (pending_link_ == kNoNode) return;
    tree_.set_suffix_link(pending_link_, target);
    emit(SuffixLinkSet{pending_link_, target}, events);
    pending_link_ = kNoNode;
}

// Standard remainder/active-point formulation: the active point is the locus
// of the suffix of length remainder_ still to be made explicit, canonized by
// walking down whole edges before each step; rule 3 ends the phase.
void OnlineBuilder::run_phase(Symbol c, std::vector<ExtendEvent>* events) {
    const auto& text = tree_.text();
    const std::size_t pos = text.size() - 1;
    const Locus before = active_point();
    pending_link_ = kNoNode;
    ++remainder_;

    while (remainder_ > 0) {
        if (active_length_ == 0) active_edge_ = pos;
        const NodeId next = tree_.child(active_node_, text[active_edge_]);
        if (next == kNoNode) {
            const NodeId leaf = tree_.add_leaf(active_node_, pos + 1 - remainder_);
            emit(NewLeaf{leaf, active_node_}, events);
            link_pending(active_node_, events);
        } else {
            const std::size_t edge_length = tree_.depth(next) - tree_.depth(active_node_);
            if (active_length_ >= edge_length) {
                active_edge_ += edge_length;
                active_length_ -= edge_length;
                active_node_ = next;
                continue;
            }
            if (text[tree_.edge_start0(next) + active_length_] == c) {
                ++active_length_;
                link_pending(active_node_, events);
                break;
            }
            const NodeId split = tree_.split_edge(next, tree_.depth(active_node_) + active_length_);
            emit(EdgeSplit{next, split}, events);
            const NodeId leaf = tree_.add_leaf(split, pos + 1 - remainder_);
            emit(NewLeaf{leaf, split}, events);
            link_pending(split, events);
            pending_link_ = split;
        }
        --remainder_;
        if (active_node_ == kRoot && active_length_ > 0) {
            --active_length_;
            active_edge_ = pos + 1 - remainder_;
        } else if (active_node_ != kRoot) {
            active_node_ = tree_.suffix_link(active_node_);
        }
    }

    const Locus after = active_point();
    if (after != before) emit(ActiveMoved{before, after}, events);
    registry_.end_phase(tree_, c, remainder_);
}

OnlineBuilder build_sealed(std::span<const Symbol> text, std::size_t alphabet_size) {
    OnlineBuilder builder(alphabet_size);
    builder.append(text);
    builder.seal();
    return builder;
}

}  // namespace netfreq
