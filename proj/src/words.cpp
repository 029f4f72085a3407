#include "rgroups/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace rgroups {

Word word_from_codes(const std::vector<std::int32_t>& codes) {
    Word w;
    w.reserve(codes.size());
    for (std::int32_t c : codes) {
        if (c == 0) throw std::invalid_argument("letter code 0 is not a letter");
        w.push_back(Letter(c));
    }
    return w;
}

std::vector<std::int32_t> word_to_codes(const Word& w) {
    std::vector<std::int32_t> codes;
    codes.reserve(w.size());
    for (Letter l : w) codes.push_back(l.code());
    return codes;
}

std::string word_to_string(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(w[i].code());
    }
    return out;
}

bool is_freely_reduced(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i].inverse_of(w[i + 1])) return false;
    return true;
}

bool is_cyclically_reduced(const Word& w) {
    if (!is_freely_reduced(w)) return false;
    if (w.size() >= 2 && w.front().inverse_of(w.back())) return false;
    return true;
}

bool is_positive(const Word& w) {
    return std::all_of(w.begin(), w.end(), [](Letter l) { return l.positive(); });
}

Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Letter l : w) {
        if (!out.empty() && out.back().inverse_of(l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    std::size_t lo = 0, hi = r.size();
    while (hi - lo >= 2 && r[lo].inverse_of(r[hi - 1])) {
        ++lo;
        --hi;
    }
    return Word(r.begin() + static_cast<std::ptrdiff_t>(lo),
                r.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word inverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
    return out;
}

Word rotate(const Word& w, std::size_t offset) {
    if (w.empty()) return w;
    offset %= w.size();
    Word out;
    out.reserve(w.size());
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(offset), w.end());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(offset));
    return out;
}

Word canonical_rotation(const Word& w) {
    if (w.empty()) return w;
    const auto less = [&](const Word& a, const Word& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            const int ra = letter_rank(a[i]);
            const int rb = letter_rank(b[i]);
            if (ra != rb) return ra < rb;
        }
        return false;
    };
    Word best = w;
    for (std::size_t off = 1; off < w.size(); ++off) {
        Word cand = rotate(w, off);
        if (less(cand, best)) best = std::move(cand);
    }
    return best;
}

BigInt count_cyclically_reduced(int n, int k) {
    if (n < 1 || k < 1)
        throw std::invalid_argument("count_cyclically_reduced: need n,k >= 1");
    const BigInt parity = (k % 2 == 0) ? BigInt(n - 1) : BigInt(1 - n);
    return ipow(BigInt(2 * n - 1), static_cast<std::uint64_t>(k)) + n + parity;
}

BigInt count_positive(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("count_positive: need n,k >= 1");
    return ipow(BigInt(n), static_cast<std::uint64_t>(k));
}

}  // namespace rgroups
