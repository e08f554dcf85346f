#include "phinewton/parser.hpp"

#include <cctype>
#include <vector>

namespace phinewton {

namespace {

constexpr unsigned long kMaxExponent = 1000;

class Parser {
   public:
    explicit Parser(std::string_view src) {
        for (std::size_t i = 0; i < src.size(); ++i) {
            if (std::isspace(static_cast<unsigned char>(src[i]))) continue;
            text_.push_back(src[i]);
            columns_.push_back(i + 1);
        }
        end_column_ = src.size() + 1;
    }

    IntPoly parse() {
        if (text_.empty()) fail("empty expression");
        IntPoly result = expr();
        if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return result;
    }

   private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, pos_ < columns_.size() ? columns_[pos_] : end_column_);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool starts_factor() const {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
    }

    IntPoly expr() {
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        IntPoly acc = term();
        if (negate) acc = -acc;
        while (peek() == '+' || peek() == '-') {
            const bool minus = peek() == '-';
            ++pos_;
            IntPoly t = term();
            if (minus) {
                acc -= t;
            } else {
                acc += t;
            }
        }
        return acc;
    }

    IntPoly term() {
        IntPoly acc = factor();
        for (;;) {
            if (peek() == '*') {
                ++pos_;
                acc *= factor();
            } else if (starts_factor()) {
                acc *= factor();
            } else {
                return acc;
            }
        }
    }

    IntPoly factor() {
        IntPoly b = base();
        if (peek() != '^') return b;
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a non-negative integer exponent");
        const BigInt e = digits();
        if (e > kMaxExponent) fail("exponent exceeds " + std::to_string(kMaxExponent));
        return b.pow(static_cast<unsigned>(e.get_ui()));
    }

    IntPoly base() {
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt v = digits();
            if (peek() == '.' || peek() == '/') fail("non-integer coefficient");
            return IntPoly::constant(std::move(v));
        }
        if (c == 'x') {
            ++pos_;
            return IntPoly::x();
        }
        if (std::isalpha(static_cast<unsigned char>(c))) fail(std::string("unknown variable '") + c + "'");
        if (c == '(') {
            ++pos_;
            IntPoly inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == '.') fail("non-integer coefficient");
        if (c == '\0') fail("unexpected end of expression");
        fail(std::string("expected a number, 'x' or '(' but found '") + c + "'");
    }

    BigInt digits() {
        std::string s;
        while (std::isdigit(static_cast<unsigned char>(peek()))) s.push_back(text_[pos_++]);
        return BigInt(s);
    }

    std::string text_;
    std::vector<std::size_t> columns_;
    std::size_t end_column_ = 1;
    std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_poly(std::string_view src) { return Parser(src).parse(); }

}  // namespace phinewton
