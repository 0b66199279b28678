#include "dpclab/parse.hpp"

#include <algorithm>
#include <vector>

namespace dpclab {

namespace {

bool ident_byte(unsigned char c) {
    if (c >= 0x80) return true;  // UTF-8 continuation or start, e.g. ∘
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '+' || c == '\'' || c == '-';
}

struct Token {
    enum Kind { LParen, RParen, Comma, Arrow, Ident, End } kind;
    std::string text;
};

class Lexer {
  public:
    explicit Lexer(std::string_view s) : s_(s) {}

    Token next() {
        skip_ws();
        if (pos_ >= s_.size()) return {Token::End, ""};
        char c = s_[pos_];
        if (c == '(') { ++pos_; return {Token::LParen, "("}; }
        if (c == ')') { ++pos_; return {Token::RParen, ")"}; }
        if (c == ',') { ++pos_; return {Token::Comma, ","}; }
        if (c == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '>') {
            pos_ += 2;
            return {Token::Arrow, "->"};
        }
        if (c == '#') throw SyntaxError("'#' is reserved for internal symbols");
        if (!ident_byte(static_cast<unsigned char>(c)))
            throw SyntaxError(std::string("unexpected character '") + c + "'");
        size_t start = pos_;
        while (pos_ < s_.size()) {
            char d = s_[pos_];
            if (d == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '>') break;
            if (d == '#') throw SyntaxError("'#' is reserved for internal symbols");
            if (!ident_byte(static_cast<unsigned char>(d))) break;
            ++pos_;
        }
        return {Token::Ident, std::string(s_.substr(start, pos_ - start))};
    }

    Token peek() {
        size_t save = pos_;
        Token t = next();
        pos_ = save;
        return t;
    }

    // consume raw input until the paren nesting returns to `depth`
    void skip_balanced(int depth) {
        int d = depth;
        while (pos_ < s_.size()) {
            char c = s_[pos_++];
            if (c == '(') ++d;
            if (c == ')') {
                --d;
                if (d < depth) return;
            }
        }
        throw SyntaxError("unbalanced COMMENT block");
    }

  private:
    void skip_ws() {
        while (pos_ < s_.size() &&
               (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r'))
            ++pos_;
    }
    std::string_view s_;
    size_t pos_ = 0;
};

Term parse_term_rec(Lexer& lex, const std::set<std::string>& vars) {
    Token t = lex.next();
    if (t.kind != Token::Ident) throw SyntaxError("expected identifier, got '" + t.text + "'");
    bool is_variable = vars.count(t.text) > 0;
    if (lex.peek().kind != Token::LParen) {
        return is_variable ? make_var(t.text) : make_fun(t.text);
    }
    if (is_variable)
        throw SyntaxError("variable '" + t.text + "' used with arguments");
    lex.next();  // (
    std::vector<Term> args;
    while (true) {
        args.push_back(parse_term_rec(lex, vars));
        Token sep = lex.next();
        if (sep.kind == Token::RParen) break;
        if (sep.kind != Token::Comma)
            throw SyntaxError("expected ',' or ')' in argument list, got '" + sep.text + "'");
    }
    return make_fun(t.text, std::move(args));
}

}  // namespace

Term parse_term(std::string_view text, const std::set<std::string>& vars) {
    Lexer lex(text);
    Term t = parse_term_rec(lex, vars);
    if (lex.next().kind != Token::End) throw SyntaxError("trailing input after term");
    return t;
}

Trs parse_trs(std::string_view text) {
    Lexer lex(text);
    std::set<std::string> vars;
    std::vector<Rule> rules;
    bool seen_rules = false;
    while (true) {
        Token t = lex.next();
        if (t.kind == Token::End) break;
        if (t.kind != Token::LParen) throw SyntaxError("expected '(' at top level");
        Token kw = lex.next();
        if (kw.kind != Token::Ident)
            throw SyntaxError("expected VAR, RULES or COMMENT after '('");
        if (kw.text == "VAR") {
            while (true) {
                Token v = lex.next();
                if (v.kind == Token::RParen) break;
                if (v.kind != Token::Ident) throw SyntaxError("bad VAR declaration");
                vars.insert(v.text);
            }
        } else if (kw.text == "RULES") {
            seen_rules = true;
            while (true) {
                if (lex.peek().kind == Token::RParen) {
                    lex.next();
                    break;
                }
                Term lhs = parse_term_rec(lex, vars);
                Token arrow = lex.next();
                if (arrow.kind != Token::Arrow)
                    throw SyntaxError("expected '->' in rule, got '" + arrow.text + "'");
                Term rhs = parse_term_rec(lex, vars);
                rules.push_back(Rule{lhs, rhs});
            }
        } else if (kw.text == "COMMENT") {
            lex.skip_balanced(1);
        } else {
            throw SyntaxError("unknown declaration '" + kw.text + "'");
        }
    }
    if (!seen_rules) throw SyntaxError("missing (RULES ...) declaration");
    return make_trs(std::move(rules));
}

std::string print_trs(const Trs& trs) {
    std::set<std::string> vars;
    for (const Rule& r : trs.rules) {
        for (Sym v : variables_of(r.lhs)) vars.insert(symbol_name(v));
        for (Sym v : variables_of(r.rhs)) vars.insert(symbol_name(v));
    }
    std::string out = "(VAR";
    for (const std::string& v : vars) out += " " + v;
    out += ")\n(RULES\n";
    for (const Rule& r : trs.rules) out += "  " + rule_to_string(r) + "\n";
    out += ")\n";
    return out;
}

}  // namespace dpclab
