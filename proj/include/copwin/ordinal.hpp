#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace copwin {

// An ordinal below epsilon_0 in Cantor normal form:
//
//     w^e1 * c1 + w^e2 * c2 + ... + w^ek * ck
//
// with exponents e1 > e2 > ... > ek (themselves ordinals) and integer
// coefficients ci >= 1. The empty sum is 0; a finite ordinal n is the
// single term w^0 * n. The representation is canonical, so structural
// equality is value equality. Values are immutable once built.
class Ordinal {
public:
    struct Term;

    Ordinal();                 // zero
    Ordinal(std::uint64_t n);  // finite ordinal; implicit so literals read naturally
    Ordinal(const Ordinal&);
    Ordinal(Ordinal&&) noexcept;
    Ordinal& operator=(const Ordinal&);
    Ordinal& operator=(Ordinal&&) noexcept;
    ~Ordinal();

    // w * coefficient; zero coefficient yields 0.
    static Ordinal omega(std::uint64_t coefficient = 1);
    // w^exponent * coefficient; zero coefficient yields 0.
    static Ordinal omega_pow(Ordinal exponent, std::uint64_t coefficient = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_finite() const;
    bool is_limit() const;      // nonzero with no finite part; 0 is not a limit
    bool is_successor() const;  // has a nonzero finite part
    std::uint64_t finite_value() const;  // pre: is_finite()

    const std::vector<Term>& terms() const { return terms_; }

private:
    explicit Ordinal(std::vector<Term> terms);

    std::vector<Term> terms_;  // strictly decreasing exponents

    friend Ordinal add(const Ordinal&, const Ordinal&);
    friend std::strong_ordering compare(const Ordinal&, const Ordinal&);
};

struct Ordinal::Term {
    Ordinal exponent;
    std::uint64_t coefficient = 1;
};

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

inline std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
    return compare(a, b);
}
inline bool operator==(const Ordinal& a, const Ordinal& b) {
    return compare(a, b) == std::strong_ordering::equal;
}

// Ordinal addition. Associative, not commutative: terms of `a` below the
// leading exponent of `b` are absorbed.
Ordinal add(const Ordinal& a, const Ordinal& b);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }

inline Ordinal successor(const Ordinal& a) { return add(a, Ordinal(1)); }

struct OrdinalSplit {
    Ordinal limit_part;            // 0 or a limit ordinal
    std::uint64_t finite_part = 0; // < w
};

// a = limit_part + finite_part
OrdinalSplit split(const Ordinal& a);

// Text grammar (ASCII, whitespace ignored):
//   ordinal := "0" | term ("+" term)*
//   term    := nat | "w" ("^" exp)? ("*" nat)?
//   exp     := nat | "w" | "(" ordinal ")"
// The parser is strict: terms must already be in strictly decreasing
// exponent order and coefficients must be nonzero; non-canonical input is
// rejected, not normalized. Throws parse_error with a 1-based position.
Ordinal parse_ordinal(std::string_view text);

// Canonical rendering; omits "*1" and "^1". parse_ordinal(to_string(a)) == a.
std::string to_string(const Ordinal& a);

std::ostream& operator<<(std::ostream& os, const Ordinal& a);

}  // namespace copwin
