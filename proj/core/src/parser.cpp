#include "jetcoh/parser.hpp"

#include "jetcoh/error.hpp"

#include <cctype>

namespace jetcoh {

namespace {

class Parser {
public:
    Parser(std::string_view text, const JetLimits& limits) : s_(text), limits_(limits) {}

    ExprNode parse() {
        ExprNode e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    std::string_view s_;
    const JetLimits& limits_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
    [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError("syntax error: " + what, at); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::string digits() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return std::string(s_.substr(start, pos_ - start));
    }

    int nat() {
        const std::size_t at = (skip(), pos_);
        const std::string d = digits();
        if (d.size() > 6) fail_at("number too large", at);
        return std::stoi(d);
    }

    ExprNode expr() {
        ExprNode e = term();
        for (;;) {
            if (accept('+')) e = ExprNode::binary(ExprNode::Kind::add, std::move(e), term());
            else if (accept('-')) e = ExprNode::binary(ExprNode::Kind::sub, std::move(e), term());
            else return e;
        }
    }

    ExprNode term() {
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        ExprNode e = factor();
        while (accept('*')) e = ExprNode::binary(ExprNode::Kind::mul, std::move(e), factor());
        return negate ? ExprNode::negate(std::move(e)) : e;
    }

    ExprNode factor() {
        ExprNode e = atom();
        while (accept('^')) {
            const bool neg = accept('-');
            Rational ex(nat());
            if (neg) ex = -ex;
            e = ExprNode::power(std::move(e), ex);
        }
        return e;
    }

    ExprNode atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ExprNode e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            if (accept('/')) {
                const std::size_t at = pos_;
                const std::string den = digits();
                if (den.find_first_not_of('0') == std::string::npos) fail_at("zero denominator", at);
                num += "/" + den;
            }
            return ExprNode::number(parse_rational(num));
        }
        if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected '" + std::string(1, c) + "'");
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const std::string_view word = s_.substr(start, pos_ - start);
        if (word == "lam") return ExprNode::lam();
        if (word == "hinv") return ExprNode::jet(hinv_symbol());
        if (word == "S") return ExprNode::schwarzian_node();
        if (word == "det") {
            expect('(');
            const std::size_t at = (skip(), pos_);
            const int p = nat();
            expect(',');
            const int q = nat();
            expect(')');
            if (p >= q) fail_at("det(p,q) needs p < q", at);
            if (q > limits_.max_order) throw OrderCapExceeded("det order " + std::to_string(q) + " exceeds the cap");
            return ExprNode::det(p, q);
        }
        Family fam{};
        if (word.size() != 1 || !family_from_letter(word[0], fam) || fam == Family::hinv)
            fail_at("unknown family or symbol '" + std::string(word) + "'", start);
        expect('[');
        const std::size_t at = (skip(), pos_);
        const int order = nat();
        expect(']');
        if (fam == Family::h && order < 1) fail_at("h jets start at h[1]", at);
        return ExprNode::jet(jet(fam, order, limits_));
    }
};

}  // namespace

ExprNode parse_tree(std::string_view text, const JetLimits& limits) { return Parser(text, limits).parse(); }

DiffExpr parse_expr(std::string_view text, const JetLimits& limits) { return normalize(parse_tree(text, limits), limits); }

std::string print_expr(const DiffExpr& e) { return e.to_string(); }

}  // namespace jetcoh
