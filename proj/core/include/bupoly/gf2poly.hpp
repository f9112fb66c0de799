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

#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bupoly {

class Poly;
struct DivRem;
DivRem divrem(const Poly& num, const Poly& den);
Poly square(const Poly& p);

/// A polynomial over F2 stored as a bit-mask of coefficients, little-endian
/// by degree: bit i of the mask is the coefficient of x^i. The mask is
/// unbounded (multi-word); the zero polynomial is the empty mask.
///
/// Polys are immutable values with structural equality: two Polys are equal
/// iff their masks are equal. All operations are pure, so Polys can be
/// shared freely across threads.
class Poly {
public:
    /// degree() of the zero polynomial. Deliberately far from -1 so that
    /// accidental arithmetic on it produces loudly wrong values instead of
    /// plausible off-by-one degrees.
    static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

    Poly() = default;

    static Poly zero() { return Poly{}; }
    static Poly one() { return from_mask(1); }
    static Poly x() { return from_mask(2); }
    static Poly x_plus_one() { return from_mask(3); }
    static Poly monomial(int degree);
    static Poly from_mask(std::uint64_t mask);
    static Poly from_words(std::span<const std::uint64_t> words);

    bool is_zero() const { return words_.empty(); }
    bool is_one() const { return words_.size() == 1 && words_[0] == 1; }

    int degree() const;

    /// Coefficient of x^i (false for i < 0 or beyond the mask).
    bool coeff(int i) const;

    /// Number of nonzero coefficients.
    int weight() const;

    /// Evaluate at a point of F2: p(0) is the constant term, p(1) the
    /// parity of the coefficient count.
    bool eval(bool point) const;

    std::span<const std::uint64_t> words() const { return {words_.data(), words_.size()}; }

    /// p * x^bits.
    Poly shifted_left(int bits) const;

    Poly& operator+=(const Poly& rhs);
    friend Poly operator+(Poly lhs, const Poly& rhs) {
        lhs += rhs;
        return lhs;
    }

    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    Poly& operator*=(const Poly& rhs) {
        *this = *this * rhs;
        return *this;
    }

    bool operator==(const Poly&) const = default;

    /// Total order by (degree, mask); coincides with comparing the masks as
    /// unbounded integers. Used for all canonical orderings in the library.
    std::strong_ordering operator<=>(const Poly& rhs) const;

private:
    using WordVec = boost::container::small_vector<std::uint64_t, 2>;

    void trim();
    void xor_shifted(const Poly& src, int bits);

    friend DivRem divrem(const Poly& num, const Poly& den);
    friend Poly operator%(const Poly& num, const Poly& den);
    friend Poly square(const Poly& p);

    WordVec words_;
};

struct DivRem {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division: num = quotient * den + remainder with
/// deg(remainder) < deg(den). Throws std::domain_error if den is zero.
DivRem divrem(const Poly& num, const Poly& den);

Poly operator/(const Poly& num, const Poly& den);
Poly operator%(const Poly& num, const Poly& den);

/// Greatest common divisor (monic by construction over F2).
/// Throws std::domain_error if both arguments are zero.
Poly gcd(Poly p, Poly q);

/// p^n with pow(p, 0) == 1 for every p.
Poly pow(const Poly& base, unsigned n);

/// p^2 via the Frobenius bit-spread (no reduction, exact square).
Poly square(const Poly& p);

/// Formal derivative; in characteristic 2 the even-degree terms vanish.
Poly derivative(const Poly& p);

/// p(x+1). An involution and a ring homomorphism; preserves the degree.
Poly translate(const Poly& p);

/// x^deg(p) * p(1/x): the coefficient mask reversed across the degree.
/// Requires a nonzero constant term so the degree is preserved; throws
/// std::domain_error otherwise.
Poly reciprocal(const Poly& p);

/// Canonical sum form, descending degree: "x^4+x+1", "x", "1", "0".
std::string to_string(const Poly& p);

/// Coefficient mask as a hex literal: "0x13"; the zero polynomial is "0x0".
std::string to_hex(const Poly& p);

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Error raised by parse_poly, carrying the offset of the offending input.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parse the ASCII polynomial grammar:
///
///   sum     := product ('+' product)*
///   product := factor ('*' factor)*
///   factor  := primary ('^' uint)?
///   primary := '1' | '0' | 'x' | '(' sum ')' | '0x' hexdigits
///
/// This accepts the sum form ("x^4+x+1"), the product form
/// ("x^3*(x+1)^4*(x^2+x+1)") and the hex form ("0x13", the coefficient
/// mask). Whitespace is ignored. Round-trips with to_string/to_hex and the
/// factored formatter.
Poly parse_poly(std::string_view text);

}  // namespace bupoly

template <>
struct std::hash<bupoly::Poly> {
    std::size_t operator()(const bupoly::Poly& p) const noexcept {
        // FNV-1a over the words.
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t w : p.words()) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};
