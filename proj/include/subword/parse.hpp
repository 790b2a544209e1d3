#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subword/word.hpp"

namespace subword {

/// Syntax error carrying the 0-based byte offset of the offending character.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

// Guard against "a^1000000000" allocating gigabytes.
inline constexpr long kMaxExponentMagnitude = 1'000'000;

// Recursive-descent parser over any signed-generator alphabet:
//   seq  := { term }
//   term := atom [ "^" integer ] | "[" seq "," seq "]"
// Whitespace may separate tokens anywhere.
template <typename L>
class SeqParser {
public:
    SeqParser(std::string_view text, std::span<const std::pair<std::string_view, L>> atoms)
        : text_(text), atoms_(atoms) {}

    std::vector<L> parse() {
        auto seq = parse_seq();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return seq;
    }

private:
    std::vector<L> parse_seq() {
        std::vector<L> out;
        while (true) {
            skip_ws();
            if (pos_ == text_.size() || text_[pos_] == ',' || text_[pos_] == ']') return out;
            auto term = parse_term();
            out.insert(out.end(), term.begin(), term.end());
        }
    }

    std::vector<L> parse_term() {
        if (text_[pos_] == '[') {
            ++pos_;
            auto u = parse_seq();
            expect(',');
            auto v = parse_seq();
            expect(']');
            // [u, v] = u v u^-1 v^-1
            std::vector<L> out = u;
            out.insert(out.end(), v.begin(), v.end());
            for (auto it = u.rbegin(); it != u.rend(); ++it) out.push_back(inverse(*it));
            for (auto it = v.rbegin(); it != v.rend(); ++it) out.push_back(inverse(*it));
            return out;
        }
        L atom = parse_atom();
        long exponent = 1;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            exponent = parse_integer();
        }
        std::vector<L> out;
        L letter = exponent < 0 ? inverse(atom) : atom;
        long count = exponent < 0 ? -exponent : exponent;
        out.assign(static_cast<std::size_t>(count), letter);
        return out;
    }

    L parse_atom() {
        for (const auto& [name, letter] : atoms_) {
            if (text_.substr(pos_).starts_with(name)) {
                pos_ += name.size();
                return letter;
            }
        }
        fail("expected a generator");
    }

    long parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        bool negative = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            negative = true;
            ++pos_;
        }
        if (pos_ == text_.size() || !is_digit(text_[pos_])) fail("expected an integer");
        long value = 0;
        while (pos_ < text_.size() && is_digit(text_[pos_])) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > kMaxExponentMagnitude)
                throw parse_error("exponent magnitude exceeds 10^6", start);
            ++pos_;
        }
        return negative ? -value : value;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ == text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                       text_[pos_] == '\n' || text_[pos_] == '\r'))
            ++pos_;
    }

    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    [[noreturn]] void fail(const std::string& what) { throw parse_error(what, pos_); }

    std::string_view text_;
    std::span<const std::pair<std::string_view, L>> atoms_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses the word grammar over atoms "a", "b":
///   word := term { term } | "" ;  term := atom [ "^" int ] | "[" word "," word "]"
/// "g^-k" expands to k copies of g^-1; "[u,v]" expands to the commutator.
inline Word parse_word(std::string_view text) {
    static constexpr std::pair<std::string_view, Letter> atoms[] = {
        {"a", letters::a},
        {"b", letters::b},
    };
    detail::SeqParser<Letter> parser(text, atoms);
    return Word(parser.parse());
}

} // namespace subword
