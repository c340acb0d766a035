#pragma once

// Letters and words over an involutive alphabet A u A*, the star involution,
// and the bit-level operations (nimsum, periodic masks) used at rank 1.
//
// Words are immutable values; every operation returns a fresh word. At rank 1
// the binary view identifies a with '0' and a* with '1'.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace freestar {

inline constexpr unsigned kMaxRank = 26;

// A generator or its starred partner, packed as (generator << 1) | starred.
class Letter {
public:
    constexpr Letter(unsigned generator, bool starred)
        : code_(static_cast<std::uint8_t>((generator << 1) | (starred ? 1u : 0u))) {}

    constexpr unsigned generator() const { return code_ >> 1; }
    constexpr bool starred() const { return (code_ & 1u) != 0; }

    // a <-> a*
    constexpr Letter partner() const { return from_code(static_cast<std::uint8_t>(code_ ^ 1u)); }

    char text() const;                     // 'a','A','b','B',...
    static Letter from_text(char c);

    static constexpr Letter from_code(std::uint8_t code) { return Letter(code); }
    constexpr std::uint8_t code() const { return code_; }

    friend constexpr auto operator<=>(Letter lhs, Letter rhs) = default;

private:
    explicit constexpr Letter(std::uint8_t code) : code_(code) {}
    std::uint8_t code_;
};

class Word {
public:
    Word() = default;

    static Word from_text(std::string_view s);   // inverse of text()
    static Word from_bits(std::string_view s);   // '0' = a, '1' = a*
    static Word repeated(Letter l, std::size_t n);

    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }
    Letter at(std::size_t i) const { return Letter::from_code(static_cast<std::uint8_t>(data_[i])); }
    Letter operator[](std::size_t i) const { return at(i); }

    Word star() const;           // reverse, toggling every star flag; an involution
    Word reversed() const;
    Word complemented() const;   // toggle star flags in place (a <-> a*)

    Word subword(std::size_t pos, std::size_t len) const;
    Word prefix(std::size_t len) const { return subword(0, len); }
    Word suffix_from(std::size_t pos) const { return subword(pos, size() - pos); }

    Word operator+(const Word& rhs) const;
    Word& operator+=(const Word& rhs);
    Word appended(Letter l) const;

    unsigned max_generator() const;   // 0 for the empty word
    bool is_binary() const;           // every letter has generator 0

    std::string text() const;
    std::string bits() const;         // requires is_binary()

    // Maximal runs of equal letters, in order.
    std::vector<std::pair<Letter, std::size_t>> runs() const;
    std::size_t max_run() const;

    // Shortlex: length first, then letter codes. The one canonical order.
    std::strong_ordering operator<=>(const Word& rhs) const {
        if (auto c = data_.size() <=> rhs.data_.size(); c != 0) return c;
        int c = data_.compare(rhs.data_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }
    bool operator==(const Word&) const = default;

    const std::string& raw() const { return data_; }

private:
    explicit Word(std::string data) : data_(std::move(data)) {}
    std::string data_;
};

// Bitwise binary addition of equal-length rank-1 words.
// Throws std::invalid_argument on a length or rank mismatch.
Word nimsum(const Word& u, const Word& v);

// A periodic infinite bit word with a phase offset; prefixes of any length.
class MaskWord {
public:
    explicit MaskWord(std::string period_bits, std::size_t phase = 0);

    static MaskWord omega();       // (01)^inf
    static MaskWord omega_inv();   // (10)^inf, i.e. omega at phase 1

    bool bit(std::size_t i) const;
    Word prefix(std::size_t n) const;

    const std::string& period() const { return period_; }
    std::size_t phase() const { return phase_; }

private:
    std::string period_;
    std::size_t phase_;
};

// phi_Q(v) = v xor Q_{|v|}; length-preserving and its own inverse.
Word phi_mask(const MaskWord& q, const Word& v);

}  // namespace freestar

template <>
struct std::hash<freestar::Word> {
    std::size_t operator()(const freestar::Word& w) const noexcept {
        return std::hash<std::string_view>{}(std::string_view(w.raw()));
    }
};
