#include "hessform/parser.hpp"

#include <cctype>

namespace hessform {

namespace {

struct Token {
    enum Kind { Number, Variable, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    size_t pos = 0;
    Rational value;    // Number
    int var_index = 0; // Variable
};

class Lexer {
public:
    Lexer(std::string_view text, int arity) : text_(text), arity_(arity) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        current_ = Token{Token::End, pos_};
        if (pos_ >= text_.size()) return;

        const size_t start = pos_;
        const char c = text_[pos_];
        switch (c) {
            case '+': current_ = {Token::Plus, start}; ++pos_; return;
            case '-': current_ = {Token::Minus, start}; ++pos_; return;
            case '*': current_ = {Token::Star, start}; ++pos_; return;
            case '^': current_ = {Token::Caret, start}; ++pos_; return;
            case '(': current_ = {Token::LParen, start}; ++pos_; return;
            case ')': current_ = {Token::RParen, start}; ++pos_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits = read_digits();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                // a rational literal, not a division operator
                ++pos_;
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    throw ParseError("expected digits after '/' in rational literal", pos_);
                std::string den = read_digits();
                current_ = {Token::Number, start, Rational::from_string(digits + "/" + den)};
            } else {
                current_ = {Token::Number, start, Rational::from_string(digits)};
            }
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            current_ = {Token::Variable, start, Rational(0), lex_variable()};
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }

    std::string read_digits() {
        const size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    int lex_variable() {
        const size_t start = pos_;
        const char c = text_[pos_++];
        if (c == 'x' && pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            std::string digits = read_digits();
            if (digits.size() > 2) throw ParseError("variable index too large", start);
            const int idx = std::stoi(digits);
            check_index(idx, "x" + digits, start);
            return idx;
        }
        int idx;
        switch (c) {
            case 'x': idx = 0; break;
            case 'y': idx = 1; break;
            case 'z': idx = 2; break;
            default:
                throw ParseError(std::string("unknown variable '") + c + "'", start);
        }
        check_index(idx, std::string(1, c), start);
        return idx;
    }

    void check_index(int idx, const std::string& name, size_t start) const {
        if (idx >= arity_)
            throw ParseError("variable '" + name + "' out of range for arity " +
                                 std::to_string(arity_),
                             start);
    }

    std::string_view text_;
    int arity_;
    size_t pos_ = 0;
    Token current_;
};

class Parser {
public:
    Parser(std::string_view text, int arity) : lex_(text, arity), arity_(arity) {}

    Form parse() {
        Form f = expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::End) throw ParseError("unexpected trailing input", t.pos);
        return f;
    }

private:
    Form expr() {
        bool negate = false;
        if (lex_.peek().kind == Token::Plus) lex_.take();
        else if (lex_.peek().kind == Token::Minus) {
            lex_.take();
            negate = true;
        }
        Form acc = term();
        if (negate) acc = -acc;
        while (true) {
            const Token::Kind k = lex_.peek().kind;
            if (k == Token::Plus) {
                lex_.take();
                acc += term();
            } else if (k == Token::Minus) {
                lex_.take();
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Form term() {
        Form acc = factor();
        while (lex_.peek().kind == Token::Star) {
            lex_.take();
            acc = acc * factor();
        }
        return acc;
    }

    Form factor() {
        Form base = primary();
        while (lex_.peek().kind == Token::Caret) {
            lex_.take();
            const Token t = lex_.peek();
            if (t.kind != Token::Number) throw ParseError("expected exponent after '^'", t.pos);
            lex_.take();
            if (!t.value.is_integer() || t.value.sign() < 0)
                throw ParseError("exponent must be a nonnegative integer", t.pos);
            long k;
            try {
                k = std::stol(t.value.numerator_str());
            } catch (const std::exception&) {
                throw ParseError("exponent too large", t.pos);
            }
            base = base.pow(static_cast<int>(k));
        }
        return base;
    }

    Form primary() {
        const Token t = lex_.take();
        switch (t.kind) {
            case Token::Number: return Form::constant(arity_, t.value);
            case Token::Variable: return Form::variable(arity_, t.var_index);
            case Token::LParen: {
                Form f = expr();
                const Token close = lex_.take();
                if (close.kind != Token::RParen) throw ParseError("expected ')'", close.pos);
                return f;
            }
            default:
                throw ParseError("expected a number, variable or '('", t.pos);
        }
    }

    Lexer lex_;
    int arity_;
};

}  // namespace

Form parse_form(std::string_view text, int arity) {
    if (arity < 1) throw std::invalid_argument("parse_form: arity must be >= 1");
    return Parser(text, arity).parse();
}

int infer_arity(std::string_view text) {
    int arity = 1;
    for (size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == 'y') arity = std::max(arity, 2);
        else if (c == 'z') arity = std::max(arity, 3);
        else if (c == 'x' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            size_t j = i + 1;
            std::string digits;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) digits += text[j++];
            if (digits.size() <= 2) arity = std::max(arity, std::stoi(digits) + 1);
            i = j - 1;
        }
    }
    return arity;
}

}  // namespace hessform
