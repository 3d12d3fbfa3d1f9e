#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "netfreq/extend_event.hpp"
#include "netfreq/implicit_registry.hpp"
#include "netfreq/suffix_tree.hpp"

namespace netfreq {

/// Ukkonen's online construction. After every extend() the tree is the
/// implicit suffix tree of the text read so far, every branching node has its
/// suffix link and reciprocal Weiner link, and the registry holds the current
/// implicit nodes.
///
/// Mutation is single-threaded; const queries may run concurrently between
/// extensions.
class OnlineBuilder {
public:
    explicit OnlineBuilder(std::size_t alphabet_size = kDefaultAlphabetSize,
                           RegistryMode mode = RegistryMode::Incremental);

    /// Appends c and returns the structural events of the phase, in order.
    std::vector<ExtendEvent> extend(Symbol c);
    /// As extend(), without materializing the event list.
    void append(Symbol c);
    void append(std::span<const Symbol> symbols);

    /// Appends the sentinel so every suffix ends at its own leaf.
    void seal();

    /// Locus of the longest repeated suffix; (kRoot, 0) when there is none.
    Locus active_point() const;

    const SuffixTree& tree() const { return tree_; }
    const ImplicitRegistry& registry() const { return registry_; }
    const TextStore& text() const { return tree_.text(); }
    bool sealed() const { return tree_.sealed(); }

private:
    void run_phase(Symbol c, std::vector<ExtendEvent>* events);
    void emit(const ExtendEvent& event, std::vector<ExtendEvent>* events);
    void link_pending(NodeId target, std::vector<ExtendEvent>* events);

    SuffixTree tree_;
    ImplicitRegistry registry_;

    NodeId active_node_ = kRoot;
    std::size_t active_edge_ = 0;  // zero-based text index of the active edge's first symbol
    std::size_t active_length_ = 0;
    std::size_t remainder_ = 0;
    NodeId pending_link_ = kNoNode;
};

/// Builds the sealed suffix tree of text in one go.
OnlineBuilder build_sealed(std::span<const Symbol> text, std::size_t alphabet_size = kDefaultAlphabetSize);

}  // namespace netfreq
