#include "phasetrop/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace phasetrop {

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : PreconditionError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      msg_(msg),
      line_(line),
      column_(column)
{
}

namespace {

enum class Tok { Number, Ident, Symbol, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t column;
};

std::vector<Token> tokenize(const std::string& s, std::size_t line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::Number, s.substr(start, i - start), start + 1});
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            out.push_back({Tok::Ident, s.substr(start, i - start), start + 1});
        } else if (std::string("+-*/^()[]{},=:").find(c) != std::string::npos) {
            out.push_back({Tok::Symbol, std::string(1, c), start + 1});
            ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line, start + 1);
        }
    }
    out.push_back({Tok::End, "", s.size() + 1});
    return out;
}

class ExprParser {
public:
    ExprParser(std::vector<Token> toks, std::size_t line, const std::vector<std::string>& vars)
        : toks_(std::move(toks)), line_(line), vars_(vars)
    {
    }

    ValuedPoly expr()
    {
        ValuedPoly acc = term();
        while (is("+") || is("-")) {
            bool minus = next().text == "-";
            ValuedPoly rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    const Token& peek() const { return toks_[pos_]; }
    bool is(const std::string& sym) const { return peek().kind == Tok::Symbol && peek().text == sym; }
    bool at_end() const { return peek().kind == Tok::End; }
    const Token& next() { return toks_[pos_++]; }
    void expect(const std::string& sym)
    {
        if (!is(sym)) fail("expected '" + sym + "'");
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const
    {
        std::string what = at_end() ? "end of line" : "'" + peek().text + "'";
        throw ParseError(msg + " but found " + what, line_, peek().column);
    }
    std::string ident()
    {
        if (peek().kind != Tok::Ident) fail("expected a name");
        return next().text;
    }

private:
    ValuedPoly term()
    {
        ValuedPoly acc = unary();
        while (is("*") || is("/")) {
            bool div = next().text == "/";
            std::size_t col = peek().column;
            ValuedPoly rhs = unary();
            if (!div) {
                acc = acc * rhs;
                continue;
            }
            if (!rhs.is_constant()) throw ParseError("division by a non-scalar", line_, col);
            if (rhs.is_zero()) throw ParseError("division by zero", line_, col);
            acc = acc.scaled(rhs.coefficient(MonomialExp(n())).inverse());
        }
        return acc;
    }

    ValuedPoly unary()
    {
        if (is("-")) {
            ++pos_;
            return -unary();
        }
        if (is("+")) {
            ++pos_;
            return unary();
        }
        return power();
    }

    ValuedPoly power()
    {
        if (peek().kind == Tok::Ident && peek().text == "t") {
            ++pos_;
            Exponent e = 1;
            if (is("^")) {
                ++pos_;
                e = t_exponent();
            }
            return ValuedPoly(n(), HahnScalar::t_power(e));
        }
        ValuedPoly base = primary();
        if (is("^")) {
            ++pos_;
            if (peek().kind != Tok::Number) fail("expected a natural exponent");
            unsigned long k = std::stoul(next().text);
            if (k > 64) throw ParseError("exponent too large", line_, toks_[pos_ - 1].column);
            base = base.pow(static_cast<unsigned>(k));
        }
        return base;
    }

    Exponent t_exponent()
    {
        if (peek().kind == Tok::Number) return Rational(Integer(next().text));
        if (is("-")) {
            ++pos_;
            if (peek().kind != Tok::Number) fail("expected an integer exponent");
            return -Rational(Integer(next().text));
        }
        if (is("(")) {
            ++pos_;
            bool neg = false;
            if (is("-")) {
                ++pos_;
                neg = true;
            }
            if (peek().kind != Tok::Number) fail("expected a rational exponent");
            Integer num(next().text);
            Integer den(1);
            if (is("/")) {
                ++pos_;
                if (peek().kind != Tok::Number) fail("expected a denominator");
                den = Integer(next().text);
                if (den == 0) throw ParseError("zero denominator", line_, toks_[pos_ - 1].column);
            }
            expect(")");
            Rational e(neg ? -num : num, den);
            e.canonicalize();
            return e;
        }
        fail("expected a rational exponent");
    }

    ValuedPoly primary()
    {
        const Token& tk = peek();
        if (tk.kind == Tok::Number) {
            ++pos_;
            return ValuedPoly(n(), HahnScalar(Coeff(Rational(Integer(tk.text)))));
        }
        if (tk.kind == Tok::Ident) {
            ++pos_;
            if (tk.text == "i") return ValuedPoly(n(), HahnScalar(Coeff::imag_unit()));
            auto it = std::find(vars_.begin(), vars_.end(), tk.text);
            if (it == vars_.end()) throw ParseError("unknown variable '" + tk.text + "'", line_, tk.column);
            return ValuedPoly::variable(n(), static_cast<std::size_t>(it - vars_.begin()));
        }
        if (is("(")) {
            ++pos_;
            ValuedPoly inner = expr();
            expect(")");
            return inner;
        }
        fail("expected a number, variable or '('");
    }

    std::size_t n() const { return vars_.size(); }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::size_t line_;
    const std::vector<std::string>& vars_;
};

ValuedPoly parse_full(const std::string& text, std::size_t line, const std::vector<std::string>& vars)
{
    ExprParser p(tokenize(text, line), line, vars);
    ValuedPoly f = p.expr();
    if (!p.at_end()) p.fail("expected an operator");
    return f;
}

}  // namespace

HahnScalar parse_scalar(const std::string& text)
{
    static const std::vector<std::string> none;
    ValuedPoly f = parse_full(text, 1, none);
    return f.coefficient(MonomialExp(0));
}

ValuedPoly parse_poly(const std::string& text, const std::vector<std::string>& vars)
{
    return parse_full(text, 1, vars);
}

const SessionItem* Session::find(const std::string& name) const
{
    for (const auto& it : items)
        if (it.name == name) return &it;
    return nullptr;
}

Session parse_session(const std::string& text)
{
    Session s;
    std::set<std::string> names;
    bool declared = false;
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string body = raw.substr(0, raw.find('#'));
        ExprParser p(tokenize(body, line), line, s.vars);
        if (p.at_end()) continue;
        std::string kw = p.ident();
        if (kw == "vars") {
            if (declared) throw ParseError("variables declared twice", line, 1);
            p.expect(":");
            while (!p.at_end()) {
                std::size_t col = p.peek().column;
                std::string v = p.ident();
                if (v == "t" || v == "i") throw ParseError("'" + v + "' is reserved", line, col);
                if (std::find(s.vars.begin(), s.vars.end(), v) != s.vars.end())
                    throw ParseError("duplicate variable '" + v + "'", line, col);
                s.vars.push_back(v);
            }
            if (s.vars.empty()) throw ParseError("no variables declared", line, body.size() + 1);
            if (s.vars.size() > kMaxVars - 3) throw ParseError("too many variables", line, 1);
            declared = true;
            continue;
        }
        if (kw != "poly" && kw != "ideal" && kw != "mat")
            throw ParseError("unknown statement '" + kw + "'", line, 1);
        std::size_t col = p.peek().column;
        std::string name = p.ident();
        if (!names.insert(name).second) throw ParseError("duplicate name '" + name + "'", line, col);
        p.expect("=");
        SessionItem item{name, ValuedPoly(), line};
        if (kw == "poly") {
            item.value = p.expr();
        } else if (kw == "ideal") {
            p.expect("{");
            std::vector<ValuedPoly> gens{p.expr()};
            while (p.is(",")) {
                p.next();
                gens.push_back(p.expr());
            }
            p.expect("}");
            item.value = std::move(gens);
        } else {
            Mat2Entries m;
            p.expect("[");
            for (int r = 0; r < 2; ++r) {
                if (r == 1) p.expect(",");
                p.expect("[");
                for (int c = 0; c < 2; ++c) {
                    if (c == 1) p.expect(",");
                    std::size_t ecol = p.peek().column;
                    ValuedPoly e = p.expr();
                    if (!e.is_constant()) throw ParseError("matrix entries must be scalars", line, ecol);
                    m[2 * r + c] = e.coefficient(MonomialExp(s.vars.size()));
                }
                p.expect("]");
            }
            p.expect("]");
            item.value = m;
        }
        if (!p.at_end()) p.fail("expected end of line");
        s.items.push_back(std::move(item));
    }
    return s;
}

}  // namespace phasetrop
