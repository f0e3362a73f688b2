#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "labseq/bounds.hpp"
#include "labseq/common.hpp"

namespace labseq {

/// A +-1 sequence stored one bit per element; a set bit marks a -1.
/// Element i lives at bit (i % 64) of word (i / 64), so shifting the bit
/// image right by k aligns element i+k with element i.
class binary_sequence {
  public:
    binary_sequence() = default;

    /// All-plus sequence of the given length.
    explicit binary_sequence(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {
        if (n == 0) throw error("sequence length must be at least 1");
    }

    static binary_sequence from_elements(std::span<const int> elems) {
        binary_sequence s(elems.size());
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (elems[i] != 1 && elems[i] != -1)
                throw error("sequence elements must be +1 or -1");
            if (elems[i] == -1) s.words_[i / 64] |= std::uint64_t{1} << (i % 64);
        }
        return s;
    }

    /// Low 64-bit constructor used by the search kernels (n <= 64).
    static binary_sequence from_bits(std::uint64_t bits, std::size_t n) {
        if (n > 64) throw error("bit constructor limited to 64 elements");
        binary_sequence s(n);
        s.words_[0] = n == 64 ? bits : bits & ((std::uint64_t{1} << n) - 1);
        return s;
    }

    [[nodiscard]] std::size_t length() const { return n_; }

    /// Element at 0-based index i, as +1 or -1.
    [[nodiscard]] int at(std::size_t i) const {
        check_index(i);
        return (words_[i / 64] >> (i % 64)) & 1 ? -1 : 1;
    }

    void set(std::size_t i, int value) {
        check_index(i);
        if (value != 1 && value != -1) throw error("sequence elements must be +1 or -1");
        const std::uint64_t bit = std::uint64_t{1} << (i % 64);
        if (value == -1)
            words_[i / 64] |= bit;
        else
            words_[i / 64] &= ~bit;
    }

    void flip(std::size_t i) {
        check_index(i);
        words_[i / 64] ^= std::uint64_t{1} << (i % 64);
    }

    [[nodiscard]] std::size_t minus_count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    [[nodiscard]] const std::vector<std::uint64_t>& words() const { return words_; }
    [[nodiscard]] std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

    [[nodiscard]] std::vector<int> elements() const {
        std::vector<int> v(n_);
        for (std::size_t i = 0; i < n_; ++i) v[i] = at(i);
        return v;
    }

    [[nodiscard]] std::string to_string() const {
        std::string s(n_, '+');
        for (std::size_t i = 0; i < n_; ++i)
            if ((words_[i / 64] >> (i % 64)) & 1) s[i] = '-';
        return s;
    }

    friend bool operator==(const binary_sequence& a, const binary_sequence& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

    /// Lexicographic order on the element string, with +1 before -1.
    /// Shorter sequences order before longer ones with an equal prefix.
    friend bool lex_less(const binary_sequence& a, const binary_sequence& b) {
        const std::size_t nw = std::min(a.words_.size(), b.words_.size());
        for (std::size_t w = 0; w < nw; ++w) {
            const std::uint64_t d = a.words_[w] ^ b.words_[w];
            if (d != 0) return (a.words_[w] & (d & -d)) == 0;
        }
        return a.n_ < b.n_;
    }

  private:
    void check_index(std::size_t i) const {
        if (i >= n_)
            throw error("position " + std::to_string(i) + " out of range for length " +
                        std::to_string(n_));
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Parses either a compact run of '+'/'-' characters or whitespace/comma
/// separated tokens "1", "+1", "-1". Reports the offending 1-based position
/// (character position for the compact form, token index otherwise).
inline binary_sequence parse_sequence(std::string_view text) {
    static constexpr std::string_view separators = " \t\r\n,";
    std::size_t begin = text.find_first_not_of(separators);
    if (begin == std::string_view::npos) throw parse_error("empty sequence input", 0);
    std::size_t end = text.find_last_not_of(separators);
    const std::string_view trimmed = text.substr(begin, end - begin + 1);

    const bool has_separator = trimmed.find_first_of(separators) != std::string_view::npos;
    std::vector<int> elems;
    if (!has_separator) {
        bool compact = true;
        for (char c : trimmed)
            if (c != '+' && c != '-') { compact = false; break; }
        if (compact) {
            elems.reserve(trimmed.size());
            for (char c : trimmed) elems.push_back(c == '+' ? 1 : -1);
            return binary_sequence::from_elements(elems);
        }
        static constexpr int plus_one[] = {1};
        static constexpr int minus_one[] = {-1};
        if (trimmed == "1" || trimmed == "+1") return binary_sequence::from_elements(plus_one);
        if (trimmed == "-1") return binary_sequence::from_elements(minus_one);
        // Neither a sign run nor a single token: point at the first bad character.
        for (std::size_t i = 0; i < trimmed.size(); ++i)
            if (trimmed[i] != '+' && trimmed[i] != '-')
                throw parse_error(std::string("invalid sequence character '") + trimmed[i] +
                                      "' at position " + std::to_string(i + 1),
                                  i + 1);
    }

    std::size_t pos = 0, token_index = 0;
    while (pos < trimmed.size()) {
        pos = trimmed.find_first_not_of(separators, pos);
        if (pos == std::string_view::npos) break;
        std::size_t stop = trimmed.find_first_of(separators, pos);
        if (stop == std::string_view::npos) stop = trimmed.size();
        const std::string_view token = trimmed.substr(pos, stop - pos);
        ++token_index;
        if (token == "1" || token == "+1")
            elems.push_back(1);
        else if (token == "-1")
            elems.push_back(-1);
        else
            throw parse_error("invalid sequence token \"" + std::string(token) +
                                  "\" at position " + std::to_string(token_index),
                              token_index);
        pos = stop;
    }
    if (elems.empty()) throw parse_error("empty sequence input", 0);
    return binary_sequence::from_elements(elems);
}

/// The aperiodic autocorrelations R_1..R_{N-1} and the derived quantities.
struct autocorrelation_profile {
    std::size_t n = 0;
    std::vector<std::int64_t> lags;  // lags[k-1] holds R_k
    std::int64_t energy = 0;
    std::optional<merit_factor> merit;  // absent when energy is zero (N = 1)
};

namespace detail {

/// Popcount of (bits ^ (bits >> k)) over the low `len` bits of the word image.
inline std::int64_t shifted_mismatches(const std::vector<std::uint64_t>& words, std::size_t k,
                                       std::size_t len) {
    const std::size_t word_shift = k / 64, bit_shift = k % 64;
    std::int64_t mismatches = 0;
    std::size_t counted = 0;
    for (std::size_t w = 0; counted < len; ++w) {
        std::uint64_t shifted = words[w + word_shift] >> bit_shift;
        if (bit_shift != 0 && w + word_shift + 1 < words.size())
            shifted |= words[w + word_shift + 1] << (64 - bit_shift);
        std::uint64_t diff = words[w] ^ shifted;
        const std::size_t remaining = len - counted;
        if (remaining < 64) diff &= (std::uint64_t{1} << remaining) - 1;
        mismatches += std::popcount(diff);
        counted += std::min<std::size_t>(64, remaining);
    }
    return mismatches;
}

}  // namespace detail

/// R_k = (N-k) - 2 * popcount((bits XOR (bits >> k)) & low-(N-k)-mask):
/// a mismatch between element i and element i+k is exactly a -1 product.
inline autocorrelation_profile autocorrelate(const binary_sequence& seq) {
    if (seq.length() == 0) throw error("cannot autocorrelate an empty sequence");
    autocorrelation_profile p;
    p.n = seq.length();
    p.lags.reserve(p.n - 1);
    for (std::size_t k = 1; k < p.n; ++k) {
        const std::size_t len = p.n - k;
        const std::int64_t r = static_cast<std::int64_t>(len) -
                               2 * detail::shifted_mismatches(seq.words(), k, len);
        p.lags.push_back(r);
        p.energy += r * r;
    }
    if (p.energy > 0 && p.n >= 2) p.merit = merit_of(p.n, p.energy);
    return p;
}

}  // namespace labseq
