#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace netfreq {

/// Symbol code. Alphabet symbols are 0..alphabet_size-1; the sentinel is
/// the value alphabet_size and can only enter a text through seal().
using Symbol = std::uint16_t;

inline constexpr std::size_t kDefaultAlphabetSize = 256;
inline constexpr std::size_t kMaxAlphabetSize = 256;

/// A 1-based inclusive occurrence (start, end) in the text.
struct Occurrence {
    std::size_t start = 0;
    std::size_t end = 0;

    std::size_t length() const { return end - start + 1; }
    friend bool operator==(const Occurrence&, const Occurrence&) = default;
    friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

/// Append-only symbol sequence. Positions in the public API are 1-based.
class TextStore {
public:
    explicit TextStore(std::size_t alphabet_size = kDefaultAlphabetSize);

    /// Appends c and returns its (1-based) position, i.e. the new length.
    std::size_t append(Symbol c);

    /// Appends the sentinel; the store is immutable afterwards.
    void seal();

    bool sealed() const { return sealed_; }
    bool empty() const { return symbols_.empty(); }
    std::size_t size() const { return symbols_.size(); }
    std::size_t alphabet_size() const { return alphabet_size_; }
    Symbol sentinel() const { return static_cast<Symbol>(alphabet_size_); }
    bool is_sentinel(Symbol c) const { return c == sentinel(); }

    Symbol at(std::size_t position) const;
    std::span<const Symbol> symbols() const { return symbols_; }
    std::span<const Symbol> substring(Occurrence occ) const;

    /// Naive O(n * |pattern|) occurrence count over the current text.
    std::size_t frequency(std::span<const Symbol> pattern) const;

    // Zero-based access for the tree internals; no bounds check.
    Symbol operator[](std::size_t index) const { return symbols_[index]; }

private:
    std::vector<Symbol> symbols_;
    std::size_t alphabet_size_;
    bool sealed_ = false;
};

/// Maps bytes to symbols of the 256-value byte alphabet.
std::vector<Symbol> to_symbols(std::string_view bytes);

/// Inverse of to_symbols; throws if a symbol is not a byte value.
std::string to_bytes(std::span<const Symbol> symbols);

}  // namespace netfreq
