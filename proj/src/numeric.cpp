#include "rgroups/numeric.hpp"

#include <stdexcept>

namespace rgroups {

BigInt ipow(const BigInt& base, std::uint64_t exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        exp >>= 1;
        if (exp > 0) b *= b;
    }
    return result;
}

BigInt iroot_floor(const BigInt& x, std::uint64_t q) {
    if (x < 0) throw std::invalid_argument("iroot_floor: negative radicand");
    if (q == 0) throw std::invalid_argument("iroot_floor: zeroth root");
    if (q == 1 || x <= 1) return x;

    // Newton iteration on r -> ((q-1)r + x / r^(q-1)) / q, started above the
    // root so the sequence decreases monotonically to floor(x^(1/q)).
    const std::uint64_t bits = msb(x) + 1;
    BigInt r = BigInt(1) << static_cast<unsigned>(bits / q + 1);
    while (true) {
        BigInt next = ((q - 1) * r + x / ipow(r, q - 1)) / q;
        if (next >= r) break;
        r = next;
    }
    while (ipow(r, q) > x) --r;
    return r;
}

BigInt floor_pow(const BigInt& base, const BigRat& e) {
    if (base < 1) throw std::invalid_argument("floor_pow: base must be >= 1");
    if (e < 0) throw std::invalid_argument("floor_pow: negative exponent");
    const BigInt p = numerator(e);
    const BigInt q = denominator(e);
    if (p > 1'000'000 || q > 1'000'000)
        throw std::invalid_argument("floor_pow: exponent out of supported range");
    return iroot_floor(ipow(base, p.convert_to<std::uint64_t>()),
                       q.convert_to<std::uint64_t>());
}

BigInt ceil_pow(const BigInt& base, const BigRat& e) {
    const BigInt p = numerator(e);
    const BigInt q = denominator(e);
    if (base < 1 || e < 0) throw std::invalid_argument("ceil_pow: bad arguments");
    if (p > 1'000'000 || q > 1'000'000)
        throw std::invalid_argument("ceil_pow: exponent out of supported range");
    const BigInt power = ipow(base, p.convert_to<std::uint64_t>());
    BigInt r = iroot_floor(power, q.convert_to<std::uint64_t>());
    if (ipow(r, q.convert_to<std::uint64_t>()) != power) ++r;
    return r;
}

BigRat parse_rational(std::string_view text) {
    const auto bad = [&] {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    };
    if (text.empty()) bad();
    std::string_view num = text;
    std::string_view den = "1";
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    const auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    if (!is_int(num) || !is_int(den)) bad();
    const BigInt p(std::string(num));
    const BigInt q(std::string(den));
    if (q == 0) bad();
    return BigRat(p, q);
}

std::string rational_to_string(const BigRat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace rgroups
