#include "retractlab/parser.hpp"

#include <cctype>

namespace retractlab {

namespace {

struct Token {
    enum Kind { Integer, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= text_.size()) return {Token::End, "", start};
        char c = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
                digits += text_[i_++];
            }
            return {Token::Integer, digits, start};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string ident;
            while (i_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_')) {
                ident += text_[i_++];
            }
            return {Token::Ident, ident, start};
        }
        ++i_;
        switch (c) {
        case '+': return {Token::Plus, "+", start};
        case '-': return {Token::Minus, "-", start};
        case '*': return {Token::Star, "*", start};
        case '^': return {Token::Caret, "^", start};
        case '/': return {Token::Slash, "/", start};
        case '(': return {Token::LParen, "(", start};
        case ')': return {Token::RParen, ")", start};
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

private:
    const std::string& text_;
    std::size_t i_ = 0;
};

class Parser {
public:
    Parser(const std::string& text, const FieldSpec& field,
           const std::vector<std::string>& vars)
        : field_(field), vars_(vars), ring_{field, vars.size()}, lexer_(text) {
        advance();
    }

    Polynomial parse() {
        Polynomial result = expr();
        if (tok_.kind != Token::End) {
            if (tok_.kind == Token::Ident || tok_.kind == Token::Integer ||
                tok_.kind == Token::LParen) {
                throw ParseError("missing operator before '" + tok_.text +
                                     "' (multiplication must be explicit)",
                                 tok_.pos);
            }
            throw ParseError("unexpected '" + tok_.text + "'", tok_.pos);
        }
        return result;
    }

private:
    void advance() { tok_ = lexer_.next(); }

    Polynomial expr() {
        Polynomial acc = term();
        while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
            bool minus = tok_.kind == Token::Minus;
            advance();
            Polynomial rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (true) {
            if (tok_.kind == Token::Star) {
                advance();
                acc = acc * factor();
            } else if (tok_.kind == Token::Slash) {
                throw ParseError("division is only supported between integer literals",
                                 tok_.pos);
            } else if (tok_.kind == Token::Ident || tok_.kind == Token::Integer ||
                       tok_.kind == Token::LParen) {
                throw ParseError("missing operator before '" + tok_.text +
                                     "' (multiplication must be explicit)",
                                 tok_.pos);
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial factor() {
        if (tok_.kind == Token::Minus) {
            advance();
            return -factor();
        }
        if (tok_.kind == Token::Plus) {
            advance();
            return factor();
        }
        Polynomial base = primary();
        if (tok_.kind == Token::Caret) {
            std::size_t caret_pos = tok_.pos;
            advance();
            if (tok_.kind != Token::Integer) {
                throw ParseError("'^' needs a nonnegative integer exponent", caret_pos);
            }
            unsigned long e;
            try {
                e = std::stoul(tok_.text);
            } catch (const std::exception&) {
                throw ParseError("exponent out of range", tok_.pos);
            }
            if (e > max_total_degree()) {
                throw ResourceLimitError("exponent " + tok_.text + " exceeds the degree cap of " +
                                         std::to_string(max_total_degree()));
            }
            advance();
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial primary() {
        if (tok_.kind == Token::Integer) {
            mpz_class num(tok_.text);
            advance();
            if (tok_.kind == Token::Slash) {
                advance();
                if (tok_.kind != Token::Integer) {
                    throw ParseError("malformed rational: expected an integer denominator",
                                     tok_.pos);
                }
                mpz_class den(tok_.text);
                if (den == 0) throw ParseError("malformed rational: zero denominator", tok_.pos);
                advance();
                return Polynomial::constant(ring_, mpq_class(num, den));
            }
            return Polynomial::constant(ring_, mpq_class(num));
        }
        if (tok_.kind == Token::Ident) {
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (vars_[i] == tok_.text) {
                    advance();
                    return Polynomial::variable(ring_, i);
                }
            }
            std::string hint;
            if (tok_.text == "U" || tok_.text == "V") {
                hint = " (reserved co-action variable, not valid in this context)";
            }
            throw ParseError("unknown identifier '" + tok_.text + "'" + hint, tok_.pos);
        }
        if (tok_.kind == Token::LParen) {
            advance();
            Polynomial inner = expr();
            if (tok_.kind != Token::RParen) {
                throw ParseError("expected ')'", tok_.pos);
            }
            advance();
            return inner;
        }
        throw ParseError("expected a literal, variable, or '('", tok_.pos);
    }

    FieldSpec field_;
    const std::vector<std::string>& vars_;
    Ring ring_;
    Lexer lexer_;
    Token tok_{Token::End, "", 0};
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const FieldSpec& field,
                            const std::vector<std::string>& vars) {
    Parser parser(text, field, vars);
    return parser.parse();
}

ParsedExpr parse_expression(const std::string& text, const FieldSpec& field,
                            const std::vector<std::string>& vars) {
    return ParsedExpr{text, parse_polynomial(text, field, vars), vars};
}

std::vector<Polynomial> parse_image_list(const std::string& text, const FieldSpec& field,
                                         const std::vector<std::string>& vars) {
    std::vector<Polynomial> out;
    std::string cur;
    auto flush = [&](std::size_t pos) {
        bool blank = cur.find_first_not_of(" \t") == std::string::npos;
        if (blank) throw ParseError("empty image in image list", pos);
        out.push_back(parse_polynomial(cur, field, vars));
        cur.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == ';') {
            flush(i);
        } else {
            cur += text[i];
        }
    }
    flush(text.size());
    return out;
}

} // namespace retractlab
