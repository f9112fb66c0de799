// Copyright 2026 The bupoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bupoly/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <ostream>
#include <utility>

namespace bupoly {

namespace {

constexpr int kWordBits = 64;

// Largest exponent parse_poly accepts; keeps hostile inputs from requesting
// multi-megabyte masks.
constexpr unsigned kMaxParsedExponent = 1u << 20;

std::uint64_t spread_half(std::uint32_t v) {
    std::uint64_t x = v;
    x = (x | (x << 16)) & 0x0000ffff0000ffffull;
    x = (x | (x << 8)) & 0x00ff00ff00ff00ffull;
    x = (x | (x << 4)) & 0x0f0f0f0f0f0f0f0full;
    x = (x | (x << 2)) & 0x3333333333333333ull;
    x = (x | (x << 1)) & 0x5555555555555555ull;
    return x;
}

}  // namespace

void Poly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Poly Poly::monomial(int degree) {
    if (degree < 0) throw std::domain_error("Poly::monomial: negative degree");
    Poly p;
    p.words_.resize(static_cast<std::size_t>(degree) / kWordBits + 1, 0);
    p.words_.back() = std::uint64_t{1} << (degree % kWordBits);
    return p;
}

Poly Poly::from_mask(std::uint64_t mask) {
    Poly p;
    if (mask != 0) p.words_.push_back(mask);
    return p;
}

Poly Poly::from_words(std::span<const std::uint64_t> words) {
    Poly p;
    p.words_.assign(words.begin(), words.end());
    p.trim();
    return p;
}

int Poly::degree() const {
    if (words_.empty()) return kMinusInfinity;
    int top = static_cast<int>(words_.size()) - 1;
    return top * kWordBits + (kWordBits - 1 - std::countl_zero(words_.back()));
}

bool Poly::coeff(int i) const {
    if (i < 0) return false;
    std::size_t w = static_cast<std::size_t>(i) / kWordBits;
    if (w >= words_.size()) return false;
    return (words_[w] >> (i % kWordBits)) & 1u;
}

int Poly::weight() const {
    int count = 0;
    for (std::uint64_t w : words_) count += std::popcount(w);
    return count;
}

bool Poly::eval(bool point) const {
    return point ? (weight() & 1) != 0 : coeff(0);
}

Poly Poly::shifted_left(int bits) const {
    if (bits < 0) throw std::domain_error("Poly::shifted_left: negative shift");
    if (is_zero() || bits == 0) return *this;
    Poly out;
    out.xor_shifted(*this, bits);
    return out;
}

void Poly::xor_shifted(const Poly& src, int bits) {
    if (src.is_zero()) return;
    const std::size_t word_shift = static_cast<std::size_t>(bits) / kWordBits;
    const int bit_shift = bits % kWordBits;
    const std::size_t n = src.words_.size();
    const std::size_t need = n + word_shift + (bit_shift != 0 ? 1 : 0);
    if (words_.size() < need) words_.resize(need, 0);
    if (bit_shift == 0) {
        for (std::size_t i = 0; i < n; ++i) words_[i + word_shift] ^= src.words_[i];
    } else {
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t w = src.words_[i];
            words_[i + word_shift] ^= (w << bit_shift) | carry;
            carry = w >> (kWordBits - bit_shift);
        }
        if (carry != 0) words_[n + word_shift] ^= carry;
    }
    trim();
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (words_.size() < rhs.words_.size()) words_.resize(rhs.words_.size(), 0);
    for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    Poly out;
    if (lhs.is_zero() || rhs.is_zero()) return out;
    // Carry-less product: XOR a shifted copy of rhs for every set bit of
    // lhs. Word-at-a-time shifts keep this cheap for the dense small masks
    // this library works with.
    const Poly& a = lhs.words_.size() <= rhs.words_.size() ? lhs : rhs;
    const Poly& b = lhs.words_.size() <= rhs.words_.size() ? rhs : lhs;
    out.words_.reserve(a.words_.size() + b.words_.size());
    for (std::size_t wi = 0; wi < a.words_.size(); ++wi) {
        std::uint64_t w = a.words_[wi];
        while (w != 0) {
            const int bit = std::countr_zero(w);
            w &= w - 1;
            out.xor_shifted(b, static_cast<int>(wi) * kWordBits + bit);
        }
    }
    return out;
}

std::strong_ordering Poly::operator<=>(const Poly& rhs) const {
    if (words_.size() != rhs.words_.size())
        return words_.size() <=> rhs.words_.size();
    for (std::size_t i = words_.size(); i-- > 0;) {
        if (words_[i] != rhs.words_[i]) return words_[i] <=> rhs.words_[i];
    }
    return std::strong_ordering::equal;
}

DivRem divrem(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("divrem: division by zero polynomial");
    DivRem out;
    out.remainder = num;
    const int dd = den.degree();
    int dr;
    while (!out.remainder.is_zero() && (dr = out.remainder.degree()) >= dd) {
        const int s = dr - dd;
        out.remainder.xor_shifted(den, s);
        out.quotient.xor_shifted(Poly::one(), s);
    }
    return out;
}

Poly operator/(const Poly& num, const Poly& den) { return divrem(num, den).quotient; }

Poly operator%(const Poly& num, const Poly& den) {
    // Remainder-only reduction; skips the quotient bookkeeping of divrem.
    if (den.is_zero()) throw std::domain_error("divrem: division by zero polynomial");
    Poly r = num;
    const int dd = den.degree();
    int dr;
    while (!r.is_zero() && (dr = r.degree()) >= dd) r.xor_shifted(den, dr - dd);
    return r;
}

Poly gcd(Poly p, Poly q) {
    if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    while (!q.is_zero()) {
        Poly r = p % q;
        p = std::move(q);
        q = std::move(r);
    }
    return p;
}

Poly pow(const Poly& base, unsigned n) {
    Poly result = Poly::one();
    Poly b = base;
    while (n != 0) {
        if (n & 1u) result *= b;
        n >>= 1;
        if (n != 0) b = square(b);
    }
    return result;
}

Poly square(const Poly& p) {
    Poly out;
    const auto& in = p.words_;
    if (in.empty()) return out;
    out.words_.resize(in.size() * 2, 0);
    for (std::size_t i = 0; i < in.size(); ++i) {
        out.words_[2 * i] = spread_half(static_cast<std::uint32_t>(in[i]));
        out.words_[2 * i + 1] = spread_half(static_cast<std::uint32_t>(in[i] >> 32));
    }
    out.trim();
    return out;
}

Poly derivative(const Poly& p) {
    const auto in = p.words();
    std::vector<std::uint64_t> out(in.size(), 0);
    for (std::size_t i = 0; i < in.size(); ++i)
        out[i] = (in[i] & 0xaaaaaaaaaaaaaaaaull) >> 1;
    return Poly::from_words(out);
}

Poly translate(const Poly& p) {
    // Horner from the top coefficient down: res <- res*(x+1) + c_i.
    Poly res;
    for (int i = p.degree(); i >= 0; --i) {
        res = res.shifted_left(1) + res;
        if (p.coeff(i)) res += Poly::one();
    }
    return res;
}

Poly reciprocal(const Poly& p) {
    if (p.is_zero() || !p.coeff(0))
        throw std::domain_error("reciprocal: constant term is zero");
    const int d = p.degree();
    std::vector<std::uint64_t> w(static_cast<std::size_t>(d) / 64 + 1, 0);
    for (int i = 0; i <= d; ++i) {
        if (p.coeff(i)) {
            const int j = d - i;
            w[static_cast<std::size_t>(j) / 64] |= std::uint64_t{1} << (j % 64);
        }
    }
    return Poly::from_words(w);
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        if (!p.coeff(i)) continue;
        if (!out.empty()) out += '+';
        if (i == 0)
            out += '1';
        else if (i == 1)
            out += 'x';
        else {
            out += "x^";
            out += std::to_string(i);
        }
    }
    return out;
}

std::string to_hex(const Poly& p) {
    static constexpr char digits[] = "0123456789abcdef";
    if (p.is_zero()) return "0x0";
    const auto w = p.words();
    std::string out = "0x";
    bool leading = true;
    for (std::size_t i = w.size(); i-- > 0;) {
        for (int nib = 15; nib >= 0; --nib) {
            const unsigned d = (w[i] >> (4 * nib)) & 0xfu;
            if (leading && d == 0) continue;
            leading = false;
            out += digits[d];
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

parse_error::parse_error(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek(char c) const { return pos < text.size() && text[pos] == c; }

    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, pos); }

    Poly parse_sum() {
        Poly value = parse_product();
        skip_ws();
        while (eat('+')) {
            skip_ws();
            value += parse_product();
            skip_ws();
        }
        return value;
    }

    Poly parse_product() {
        Poly value = parse_factor();
        skip_ws();
        while (eat('*')) {
            skip_ws();
            value *= parse_factor();
            skip_ws();
        }
        return value;
    }

    Poly parse_factor() {
        Poly base = parse_primary();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            return pow(base, parse_exponent());
        }
        return base;
    }

    Poly parse_primary() {
        skip_ws();
        if (eat('(')) {
            skip_ws();
            Poly inner = parse_sum();
            skip_ws();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (eat('x')) return Poly::x();
        if (eat('1')) return Poly::one();
        if (eat('0')) {
            if (eat('x')) return parse_hex();
            return Poly::zero();
        }
        fail("expected '1', 'x', '(' or a hex literal");
    }

    Poly parse_hex() {
        const std::size_t start = pos;
        std::vector<unsigned> nibbles;
        while (pos < text.size() && std::isxdigit(static_cast<unsigned char>(text[pos]))) {
            const char c = text[pos++];
            nibbles.push_back(c <= '9' ? static_cast<unsigned>(c - '0')
                                       : static_cast<unsigned>(std::tolower(c) - 'a' + 10));
        }
        if (nibbles.empty()) {
            pos = start;
            fail("expected hex digits after '0x'");
        }
        std::vector<std::uint64_t> words((nibbles.size() + 15) / 16, 0);
        for (std::size_t i = 0; i < nibbles.size(); ++i) {
            // nibbles are most-significant first
            const std::size_t k = nibbles.size() - 1 - i;
            words[k / 16] |= std::uint64_t{nibbles[i]} << (4 * (k % 16));
        }
        return Poly::from_words(words);
    }

    unsigned parse_exponent() {
        skip_ws();
        const std::size_t start = pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected an exponent");
        std::uint64_t value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
            if (value > kMaxParsedExponent) {
                pos = start;
                fail("exponent overflow");
            }
            ++pos;
        }
        return static_cast<unsigned>(value);
    }
};

}  // namespace

Poly parse_poly(std::string_view text) {
    Parser parser{text};
    parser.skip_ws();
    if (parser.pos == text.size()) parser.fail("empty input");
    Poly value = parser.parse_sum();
    parser.skip_ws();
    if (parser.pos != text.size()) parser.fail("unexpected trailing input");
    return value;
}

}  // namespace bupoly
