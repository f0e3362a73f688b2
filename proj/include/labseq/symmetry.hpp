#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "labseq/sequence.hpp"

namespace labseq {

/// Energy-preserving transforms: global negation, reversal, and the
/// alternating flip x_i -> (-1)^i x_i (1-based), which negates elements at
/// odd 1-based positions (even 0-based indices).
inline binary_sequence negated(const binary_sequence& seq) {
    binary_sequence out(seq.length());
    for (std::size_t i = 0; i < seq.length(); ++i) out.set(i, -seq.at(i));
    return out;
}

inline binary_sequence reversed(const binary_sequence& seq) {
    binary_sequence out(seq.length());
    for (std::size_t i = 0; i < seq.length(); ++i) out.set(i, seq.at(seq.length() - 1 - i));
    return out;
}

inline binary_sequence alternated(const binary_sequence& seq) {
    binary_sequence out(seq.length());
    for (std::size_t i = 0; i < seq.length(); ++i)
        out.set(i, i % 2 == 0 ? -seq.at(i) : seq.at(i));
    return out;
}

/// The closure of a sequence under {negation, reversal, alternating flip}.
/// The three generators commute up to negation, so the closure is the at most
/// eight images neg^a(alt^b(rev^c(seq))).
struct symmetry_orbit {
    std::vector<binary_sequence> members;  // distinct, sorted lexicographically
    binary_sequence canonical;             // members.front()
};

inline symmetry_orbit orbit_of(const binary_sequence& seq) {
    std::vector<binary_sequence> images;
    images.reserve(8);
    for (int c = 0; c < 2; ++c) {
        for (int b = 0; b < 2; ++b) {
            binary_sequence base = c ? reversed(seq) : seq;
            if (b) base = alternated(base);
            images.push_back(negated(base));
            images.push_back(std::move(base));
        }
    }
    std::sort(images.begin(), images.end(),
              [](const binary_sequence& a, const binary_sequence& b) { return lex_less(a, b); });
    images.erase(std::unique(images.begin(), images.end()), images.end());
    symmetry_orbit orbit;
    orbit.canonical = images.front();
    orbit.members = std::move(images);
    return orbit;
}

/// Lexicographically smallest orbit member; the deduplication and reporting
/// representative.
inline binary_sequence canonical_form(const binary_sequence& seq) {
    return orbit_of(seq).canonical;
}

namespace detail {

inline constexpr std::uint64_t low_mask(unsigned n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

inline std::uint64_t reverse_low_bits(std::uint64_t v, unsigned n) {
    v = ((v >> 1) & 0x5555555555555555ULL) | ((v & 0x5555555555555555ULL) << 1);
    v = ((v >> 2) & 0x3333333333333333ULL) | ((v & 0x3333333333333333ULL) << 2);
    v = ((v >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((v & 0x0F0F0F0F0F0F0F0FULL) << 4);
    v = ((v >> 8) & 0x00FF00FF00FF00FFULL) | ((v & 0x00FF00FF00FF00FFULL) << 8);
    v = ((v >> 16) & 0x0000FFFF0000FFFFULL) | ((v & 0x0000FFFF0000FFFFULL) << 16);
    v = (v >> 32) | (v << 32);
    return v >> (64 - n);
}

/// Lexicographic comparison of bit images (bit i holds element i; +1 = 0 bit
/// sorts first): the image with a 0 at the lowest differing bit is smaller.
inline bool lex_less_bits(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t d = a ^ b;
    if (d == 0) return false;
    const std::uint64_t lowest = d & (~d + 1);
    return (a & lowest) == 0;
}

/// All eight symmetry images of an n-bit image, in a fixed order.
inline std::array<std::uint64_t, 8> orbit_images(std::uint64_t bits, unsigned n) {
    const std::uint64_t mask = low_mask(n);
    const std::uint64_t alt = 0x5555555555555555ULL & mask;
    const std::uint64_t rev = reverse_low_bits(bits, n);
    return {bits,       bits ^ mask,       bits ^ alt, (bits ^ alt) ^ mask,
            rev,        rev ^ mask,        rev ^ alt,  (rev ^ alt) ^ mask};
}

inline std::uint64_t canonical_bits(std::uint64_t bits, unsigned n) {
    std::uint64_t best = bits;
    for (std::uint64_t img : orbit_images(bits, n))
        if (lex_less_bits(img, best)) best = img;
    return best;
}

inline bool is_canonical_bits(std::uint64_t bits, unsigned n) {
    for (std::uint64_t img : orbit_images(bits, n))
        if (lex_less_bits(img, bits)) return false;
    return true;
}

inline unsigned orbit_size_bits(std::uint64_t bits, unsigned n) {
    auto images = orbit_images(bits, n);
    std::sort(images.begin(), images.end());
    return static_cast<unsigned>(std::unique(images.begin(), images.end()) - images.begin());
}

}  // namespace detail

}  // namespace labseq
