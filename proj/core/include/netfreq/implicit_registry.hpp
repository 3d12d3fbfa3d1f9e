#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "netfreq/extend_event.hpp"
#include "netfreq/suffix_tree.hpp"

namespace netfreq {

/// Implicit depths strictly inside one edge, as the progression
/// deepest, deepest - step, ..., deepest - (count - 1) * step.
struct ImplicitDepths {
    std::size_t deepest = 0;
    std::size_t step = 0;
    std::size_t count = 0;

    bool empty() const { return count == 0; }
    bool contains(std::size_t d) const;
    /// Ascending.
    std::vector<std::size_t> depths() const;
};

struct EdgeImplicits {
    ImplicitDepths within;
    /// The locus (child, depth(child)) is an implicit node.
    bool coinciding = false;
};

enum class ImplicitClass { External, Internal, Coinciding };

const char* to_string(ImplicitClass c);

/// How the registry keeps itself current after each extension.
enum class RegistryMode {
    /// Advance every repeated-suffix locus by the new symbol.
    Incremental,
    /// Re-locate every suffix of the active string from the root (slow; for differential tests).
    Recompute,
};

/// The implicit nodes of an implicit suffix tree: loci of the repeated
/// suffixes of the current text, indexed per edge.
///
/// Updated by OnlineBuilder inside each extension. Members are kept in
/// suffix-chain order, longest repeated suffix first. Per-edge records are
/// keyed by the edge's child node: at most one depth on an internal edge, an
/// arithmetic progression on a leaf edge, and a flag for a locus sitting
/// exactly on a branching node.
class ImplicitRegistry {
public:
    explicit ImplicitRegistry(RegistryMode mode = RegistryMode::Incremental) : mode_(mode) {}

    RegistryMode mode() const { return mode_; }

    void on_event(const SuffixTree& tree, const ExtendEvent& event);
    /// Called once per extension after Ukkonen's phase; active_length is the
    /// length of the new longest repeated suffix.
    void end_phase(const SuffixTree& tree, Symbol c, std::size_t active_length);
    /// A sealed tree has no repeated suffixes.
    void clear();

    /// Number of implicit nodes (= length of the longest repeated suffix).
    std::size_t size() const { return chain_.size(); }
    /// Loci of the repeated suffixes, longest first.
    std::span<const Locus> chain() const { return chain_; }
    /// Locus of the repeated suffix of the given length, if any.
    std::optional<Locus> suffix_locus(std::size_t length) const;

    EdgeImplicits implicit_on_edge(NodeId child) const;
    /// Deepest implicit depth on the incoming edge of child, including a coinciding one.
    std::optional<std::size_t> deepest_implicit_on_edge(NodeId child) const;
    /// No implicit node strictly inside the edge into child.
    bool edge_is_implicit_free(NodeId child) const { return record(child).count == 0; }
    /// Throws std::invalid_argument unless u is a branching node of tree.
    bool coincides_with_branching(const SuffixTree& tree, NodeId u) const;
    bool is_implicit(const SuffixTree& tree, Locus locus) const;
    ImplicitClass classify(const SuffixTree& tree, Locus locus) const;

    /// One line per implicit node in chain order: child id, depth, class.
    void dump(const SuffixTree& tree, std::ostream& out) const;

private:
    struct EdgeRecord {
        std::uint32_t deepest = 0;
        std::uint32_t step = 0;
        std::uint32_t count = 0;
        std::uint32_t coinciding_depth = 0;  // 0: the node itself is not implicit
    };

    const EdgeRecord& record(NodeId u) const;
    void advance_chain(const SuffixTree& tree, Symbol c, std::size_t active_length);
    void recompute_chain(const SuffixTree& tree, std::size_t active_length);
    void index_chain(const SuffixTree& tree);

    RegistryMode mode_;
    std::vector<Locus> chain_;
    std::vector<Locus> scratch_;
    std::vector<EdgeRecord> records_;
    std::size_t pending_leaves_ = 0;
};

}  // namespace netfreq
