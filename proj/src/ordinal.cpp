#include "copwin/ordinal.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <ostream>
#include <utility>

#include "copwin/errors.hpp"

namespace copwin {

Ordinal::Ordinal() = default;
Ordinal::Ordinal(const Ordinal&) = default;
Ordinal::Ordinal(Ordinal&&) noexcept = default;
Ordinal& Ordinal::operator=(const Ordinal&) = default;
Ordinal& Ordinal::operator=(Ordinal&&) noexcept = default;
Ordinal::~Ordinal() = default;

Ordinal::Ordinal(std::uint64_t n) {
    if (n > 0) terms_.push_back(Term{Ordinal(), n});
}

Ordinal::Ordinal(std::vector<Term> terms) : terms_(std::move(terms)) {}

Ordinal Ordinal::omega(std::uint64_t coefficient) {
    return omega_pow(Ordinal(1), coefficient);
}

Ordinal Ordinal::omega_pow(Ordinal exponent, std::uint64_t coefficient) {
    if (coefficient == 0) return Ordinal();
    std::vector<Term> t;
    t.push_back(Term{std::move(exponent), coefficient});
    return Ordinal(std::move(t));
}

bool Ordinal::is_finite() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

bool Ordinal::is_limit() const {
    return !terms_.empty() && !terms_.back().exponent.is_zero();
}

bool Ordinal::is_successor() const {
    return !terms_.empty() && terms_.back().exponent.is_zero();
}

std::uint64_t Ordinal::finite_value() const {
    if (terms_.empty()) return 0;
    if (!is_finite()) throw domain_error("finite_value() on an infinite ordinal");
    return terms_[0].coefficient;
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto c = compare(a.terms_[i].exponent, b.terms_[i].exponent);
        if (c != std::strong_ordering::equal) return c;
        if (a.terms_[i].coefficient != b.terms_[i].coefficient)
            return a.terms_[i].coefficient <=> b.terms_[i].coefficient;
    }
    return a.terms_.size() <=> b.terms_.size();
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;

    const Ordinal& lead = b.terms_.front().exponent;
    // Keep the terms of a whose exponent is >= b's leading exponent; the
    // rest are absorbed.
    std::size_t keep = a.terms_.size();
    while (keep > 0 && compare(a.terms_[keep - 1].exponent, lead) == std::strong_ordering::less)
        --keep;

    std::vector<Ordinal::Term> out(a.terms_.begin(), a.terms_.begin() + keep);
    std::size_t b_from = 0;
    if (!out.empty() && compare(out.back().exponent, lead) == std::strong_ordering::equal) {
        std::uint64_t merged = out.back().coefficient + b.terms_.front().coefficient;
        if (merged < out.back().coefficient) throw domain_error("coefficient overflow in add");
        out.back().coefficient = merged;
        b_from = 1;
    }
    out.insert(out.end(), b.terms_.begin() + b_from, b.terms_.end());
    return Ordinal(std::move(out));
}

OrdinalSplit split(const Ordinal& a) {
    OrdinalSplit s;
    if (a.is_zero()) return s;
    const auto& terms = a.terms();
    if (terms.back().exponent.is_zero()) {
        s.finite_part = terms.back().coefficient;
        std::vector<Ordinal::Term> rest(terms.begin(), terms.end() - 1);
        Ordinal limit;
        for (auto& t : rest) limit = add(limit, Ordinal::omega_pow(t.exponent, t.coefficient));
        s.limit_part = limit;
    } else {
        s.limit_part = a;
    }
    return s;
}

namespace {

class OrdinalParser {
public:
    explicit OrdinalParser(std::string_view text) : text_(text) {}

    Ordinal parse_full() {
        skip_ws();
        if (eof()) fail("empty ordinal");
        Ordinal result = parse_sum();
        skip_ws();
        if (!eof()) fail("unexpected trailing input");
        return result;
    }

private:
    Ordinal parse_sum() {
        // "0" is only valid as a complete (sub)ordinal, not as a summand.
        if (peek() == '0') {
            std::size_t at = pos_;
            std::uint64_t n = parse_nat();
            if (n == 0) {
                skip_ws();
                if (!eof() && peek() == '+') fail("zero term in a sum", at);
                return Ordinal();
            }
            return finish_sum(Ordinal(n), at);
        }
        std::size_t at = pos_;
        return finish_sum(parse_term(), at);
    }

    Ordinal finish_sum(Ordinal first, std::size_t first_at) {
        struct Parsed {
            Ordinal value;
            std::size_t at;
        };
        std::vector<Parsed> parts;
        parts.push_back({std::move(first), first_at});
        skip_ws();
        while (!eof() && peek() == '+') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            parts.push_back({parse_term(), at});
            skip_ws();
        }
        // Strict CNF: each term's exponent must be strictly below the
        // previous one. A term here is a single-term ordinal by construction.
        Ordinal out = parts[0].value;
        for (std::size_t i = 1; i < parts.size(); ++i) {
            const Ordinal& prev_exp = out.terms().back().exponent;
            const Ordinal& cur_exp = parts[i].value.terms().front().exponent;
            if (compare(cur_exp, prev_exp) != std::strong_ordering::less)
                fail("exponents must be strictly decreasing", parts[i].at);
            out = add(out, parts[i].value);
        }
        return out;
    }

    // One term: a positive nat, or w with optional ^exp and *nat.
    Ordinal parse_term() {
        if (eof()) fail("expected term");
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t at = pos_;
            std::uint64_t n = parse_nat();
            if (n == 0) fail("zero coefficient", at);
            return Ordinal(n);
        }
        if (c != 'w') fail("expected term");
        ++pos_;
        Ordinal exponent(1);
        std::uint64_t coefficient = 1;
        skip_ws();
        if (!eof() && peek() == '^') {
            ++pos_;
            skip_ws();
            exponent = parse_exponent();
            skip_ws();
        }
        if (!eof() && peek() == '*') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            coefficient = parse_nat();
            if (coefficient == 0) fail("zero coefficient", at);
        }
        if (exponent.is_zero()) return Ordinal(coefficient);
        return Ordinal::omega_pow(std::move(exponent), coefficient);
    }

    Ordinal parse_exponent() {
        if (eof()) fail("expected exponent");
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return Ordinal(parse_nat());
        if (c == 'w') {
            ++pos_;
            return Ordinal::omega();
        }
        if (c == '(') {
            ++pos_;
            skip_ws();
            Ordinal inner = parse_sum();
            skip_ws();
            if (eof() || peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        fail("expected exponent");
    }

    std::uint64_t parse_nat() {
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected number");
        std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        std::uint64_t value = 0;
        auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (res.ec != std::errc()) fail("number out of range", start);
        return value;
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }
    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw parse_error(msg, 0, at + 1);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void format_exponent(const Ordinal& e, std::string& out) {
    if (e.is_finite()) {
        out += std::to_string(e.finite_value());
    } else if (e == Ordinal::omega()) {
        out += 'w';
    } else {
        out += '(';
        out += to_string(e);
        out += ')';
    }
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return OrdinalParser(text).parse_full(); }

std::string to_string(const Ordinal& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& term : a.terms()) {
        if (!first) out += '+';
        first = false;
        if (term.exponent.is_zero()) {
            out += std::to_string(term.coefficient);
            continue;
        }
        out += 'w';
        if (!(term.exponent == Ordinal(1))) {
            out += '^';
            format_exponent(term.exponent, out);
        }
        if (term.coefficient != 1) {
            out += '*';
            out += std::to_string(term.coefficient);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << to_string(a); }

}  // namespace copwin
