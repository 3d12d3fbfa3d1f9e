#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "netfreq/text_store.hpp"

// Brute-force reference implementations. Nothing here touches the suffix tree.
namespace netfreq::oracle {

using Text = std::vector<Symbol>;

/// Occurrences of s in text by direct scan.
std::size_t frequency(std::span<const Symbol> text, std::span<const Symbol> s);

/// Net occurrences of s: f(S) >= 2 and both one-symbol extensions unique,
/// an extension past either end of the text counting as unique. In sealed
/// mode a unique terminator is appended first.
std::size_t nf(std::span<const Symbol> text, std::span<const Symbol> s, bool sealed);

/// Suffixes occurring at least twice, longest first.
std::vector<Text> repeated_suffixes(std::span<const Symbol> text);

/// Net frequency by counting extension pairs (x, y) with xS, Sy and xSy all
/// unique, where x and y also range over a virtual unique symbol before the
/// text and one after it. The one after it plays the sentinel's role, so the
/// value is the same for an open text and its sealed copy.
std::size_t nf_by_extension_pairs(std::span<const Symbol> text, std::span<const Symbol> s);

struct NfEntry {
    Text string;
    std::size_t nf = 0;
    friend bool operator==(const NfEntry&, const NfEntry&) = default;
};

/// Every distinct repeated substring with positive NF, sorted by string.
std::vector<NfEntry> all_nf(std::span<const Symbol> text, bool sealed);

/// Same result as all_nf via pairwise longest-common-extension tables:
/// occurrence i is net exactly when its longest repeated extension has
/// length m >= 1 and the one starting at i - 1 is at most m. O(n^2).
std::vector<NfEntry> all_nf_lce(std::span<const Symbol> text, bool sealed);

/// Distinct substrings, sorted (for exhaustive sweeps).
std::vector<Text> distinct_substrings(std::span<const Symbol> text);

}  // namespace netfreq::oracle
