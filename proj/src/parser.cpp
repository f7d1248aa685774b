#include "crrigid/parser.hpp"

#include <cctype>

namespace crrigid {

namespace {

enum class Tok { Rational, Ident, Conj, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : s_(src) {}

    Token next() {
        skip_ws();
        int l = line_, c = col_;
        if (pos_ >= s_.size()) return {Tok::End, "", l, c};
        char ch = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string t;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) t += advance();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                size_t save = pos_;
                int sl = line_, sc = col_;
                t += advance();
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                    pos_ = save;
                    line_ = sl;
                    col_ = sc;
                    t.pop_back();
                } else {
                    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) t += advance();
                }
            }
            return {Tok::Rational, t, l, c};
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::string t;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                t += advance();
            return {Tok::Ident, t, l, c};
        }
        advance();
        switch (ch) {
            case '~': return {Tok::Conj, "~", l, c};
            case '+': return {Tok::Plus, "+", l, c};
            case '-': return {Tok::Minus, "-", l, c};
            case '*': return {Tok::Star, "*", l, c};
            case '^': return {Tok::Caret, "^", l, c};
            case '(': return {Tok::LParen, "(", l, c};
            case ')': return {Tok::RParen, ")", l, c};
            default: throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
        }
    }

  private:
    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;

    char advance() {
        char ch = s_[pos_++];
        if (ch == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return ch;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
    }
};

class Parser {
  public:
    Parser(const std::string& src, const std::vector<std::string>& vars, std::int64_t sqrt_d)
        : lex_(src), vars_(vars), d_(sqrt_d), n_(static_cast<int>(vars.size())) {
        cur_ = lex_.next();
    }

    MPoly parse() {
        MPoly p = expr();
        if (cur_.kind != Tok::End) fail("trailing input");
        return p;
    }

  private:
    Lexer lex_;
    Token cur_;
    const std::vector<std::string>& vars_;
    std::int64_t d_;
    int n_;

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, cur_.line, cur_.col); }

    void eat(Tok k, const std::string& what) {
        if (cur_.kind != k) fail("expected " + what);
        cur_ = lex_.next();
    }

    MPoly expr() {
        bool neg = false;
        if (cur_.kind == Tok::Minus) {
            neg = true;
            cur_ = lex_.next();
        }
        MPoly p = term();
        if (neg) p = -p;
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            bool minus = cur_.kind == Tok::Minus;
            cur_ = lex_.next();
            MPoly q = term();
            if (minus)
                p -= q;
            else
                p += q;
        }
        return p;
    }

    MPoly term() {
        MPoly p = factor();
        while (cur_.kind == Tok::Star) {
            cur_ = lex_.next();
            p = p * factor();
        }
        return p;
    }

    MPoly factor() {
        MPoly b = base();
        if (cur_.kind == Tok::Caret) {
            cur_ = lex_.next();
            if (cur_.kind != Tok::Rational || cur_.text.find('/') != std::string::npos)
                fail("expected natural exponent after '^'");
            long k = std::stol(cur_.text);
            cur_ = lex_.next();
            MPoly p = MPoly::constant(n_, CScalar(1L));
            for (long j = 0; j < k; ++j) p = p * b;
            return p;
        }
        return b;
    }

    int var_index(const Token& t) const {
        for (int j = 0; j < n_; ++j)
            if (vars_[j] == t.text) return j;
        return -1;
    }

    MPoly base() {
        switch (cur_.kind) {
            case Tok::Rational: {
                Rational q = parse_rational(cur_.text);
                cur_ = lex_.next();
                return MPoly::constant(n_, CScalar(q));
            }
            case Tok::Ident: {
                if (cur_.text == "i") {
                    cur_ = lex_.next();
                    return MPoly::constant(n_, CScalar::unit_i());
                }
                if (cur_.text == "sqrt") {
                    if (d_ <= 0) fail("'sqrt' used but no radicand declared");
                    cur_ = lex_.next();
                    return MPoly::constant(n_, CScalar(QuadExt::sqrt_d(d_)));
                }
                int j = var_index(cur_);
                if (j < 0) fail("unknown identifier '" + cur_.text + "'");
                cur_ = lex_.next();
                return MPoly::variable(n_, j);
            }
            case Tok::Conj: {
                cur_ = lex_.next();
                if (cur_.kind != Tok::Ident) fail("'~' must be followed by a variable name");
                if (cur_.text == "i" || cur_.text == "sqrt") fail("'~' applies only to variables");
                int j = var_index(cur_);
                if (j < 0) fail("unknown identifier '" + cur_.text + "'");
                cur_ = lex_.next();
                return MPoly::conj_variable(n_, j);
            }
            case Tok::LParen: {
                cur_ = lex_.next();
                MPoly p = expr();
                eat(Tok::RParen, "')'");
                return p;
            }
            default: fail("expected rational, 'i', 'sqrt', variable, '~', or '('");
        }
    }
};

}  // namespace

MPoly parse_poly(const std::string& src, const std::vector<std::string>& vars, std::int64_t sqrt_d) {
    Parser p(src, vars, sqrt_d);
    return p.parse();
}

CScalar parse_scalar(const std::string& src, std::int64_t sqrt_d) {
    MPoly p = parse_poly(src, {}, sqrt_d);
    return p.constant_term();
}

}  // namespace crrigid
