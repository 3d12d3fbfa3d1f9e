#include "netfreq/text_store.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace netfreq {

TextStore::TextStore(std::size_t alphabet_size) : alphabet_size_(alphabet_size) {
    if (alphabet_size == 0 || alphabet_size > kMaxAlphabetSize) {
        throw std::invalid_argument("alphabet size must be in [1, 256]");
    }
}

std::size_t TextStore::append(Symbol c) {
    if (sealed_) throw std::logic_error("append to a sealed text");
    if (c >= alphabet_size_) {
        throw std::invalid_argument(is_sentinel(c) ? "the sentinel can only be appended by seal()"
                                                   : "symbol outside the alphabet");
    }
    symbols_.push_back(c);
    return symbols_.size();
}

void TextStore::seal() {
    if (sealed_) throw std::logic_error("text is already sealed");
    symbols_.push_back(sentinel());
    sealed_ = true;
}

Symbol TextStore::at(std::size_t position) const {
    if (position == 0 || position > symbols_.size()) {
        throw std::out_of_range("text position " + std::to_string(position) + " out of range");
    }
    return symbols_[position - 1];
}

std::span<const Symbol> TextStore::substring(Occurrence occ) const {
    if (occ.start == 0 || occ.start > occ.end || occ.end > symbols_.size()) {
        throw std::out_of_range("invalid occurrence");
    }
    return std::span<const Symbol>(symbols_).subspan(occ.start - 1, occ.length());
}

std::size_t TextStore::frequency(std::span<const Symbol> pattern) const {
    if (pattern.empty()) throw std::invalid_argument("frequency of the empty string");
    if (pattern.size() > symbols_.size()) return 0;
    std::size_t count = 0;
    for (std::size_t i = 0; i + pattern.size() <= symbols_.size(); ++i) {
        if (std::equal(pattern.begin(), pattern.end(), symbols_.begin() + i)) ++count;
    }
    return count;
}

std::vector<Symbol> to_symbols(std::string_view bytes) {
    std::vector<Symbol> out;
    out.reserve(bytes.size());
    for (char b : bytes) out.push_back(static_cast<unsigned char>(b));
    return out;
}

std::string to_bytes(std::span<const Symbol> symbols) {
    std::string out;
    out.reserve(symbols.size());
    for (Symbol s : symbols) {
        if (s > 0xFF) throw std::invalid_argument("symbol is not a byte value");
        out.push_back(static_cast<char>(s));
    }
    return out;
}

}  // namespace netfreq
