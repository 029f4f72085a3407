#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "rgroups/numeric.hpp"

namespace rgroups {

/// One letter of a free-group word: a 1-based generator index with a sign.
/// Stored as the nonzero code +g / -g, the same encoding used on disk.
class Letter {
public:
    constexpr explicit Letter(std::int32_t code) : code_(code) {}

    constexpr std::int32_t code() const { return code_; }
    constexpr std::int32_t generator() const { return code_ < 0 ? -code_ : code_; }
    constexpr int sign() const { return code_ < 0 ? -1 : +1; }
    constexpr bool positive() const { return code_ > 0; }
    constexpr Letter inverse() const { return Letter(-code_); }
    constexpr bool inverse_of(Letter other) const { return code_ == -other.code_; }

    friend constexpr bool operator==(Letter, Letter) = default;

private:
    std::int32_t code_;
};

using Word = std::vector<Letter>;

Word word_from_codes(const std::vector<std::int32_t>& codes);
std::vector<std::int32_t> word_to_codes(const Word& w);

/// Comma-separated signed codes, e.g. "1,2,-1"; the on-disk relator syntax.
std::string word_to_string(const Word& w);

bool is_freely_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);
bool is_positive(const Word& w);

/// The unique freely reduced word equal to w in the free group.
Word free_reduce(const Word& w);

/// Free-reduces, then strips mutually inverse first/last letters until the
/// result is cyclically reduced. The result is conjugate to w.
Word cyclic_reduce(const Word& w);

Word inverse_word(const Word& w);

/// w rotated left by offset positions (offset taken mod length).
Word rotate(const Word& w, std::size_t offset);

/// Total order on letters used for cyclic canonical forms:
/// a1 < a1^-1 < a2 < a2^-1 < ...
constexpr int letter_rank(Letter l) {
    return 2 * (l.generator() - 1) + (l.positive() ? 0 : 1);
}

/// Lexicographically least rotation of w under letter_rank.
Word canonical_rotation(const Word& w);

/// |C_{k,n}|, the number of cyclically reduced words of length k over n
/// generators: (2n-1)^k + n + (n-1)(-1)^k. Requires n >= 1, k >= 1.
BigInt count_cyclically_reduced(int n, int k);

/// |C'_{k,n}| = n^k. Requires n >= 1, k >= 1.
BigInt count_positive(int n, int k);

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (Letter l : w) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(l.code()));
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace rgroups
