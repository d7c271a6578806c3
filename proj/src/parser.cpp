#include "jacres/parser.hpp"

#include "jacres/errors.hpp"

#include <cctype>
#include <sstream>

namespace jacres {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, LBracket, RBracket, Comma, Colon, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    Lexer(const std::string& s, int line) : s_(s), line_(line) {}

    Token next() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
        int col = static_cast<int>(pos_) + 1;
        if (pos_ >= s_.size() || s_[pos_] == '#') return {Tok::End, "", line_, col};
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return {Tok::Int, s_.substr(start, pos_ - start), line_, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return {Tok::Ident, s_.substr(start, pos_ - start), line_, col};
        }
        ++pos_;
        switch (c) {
        case '+': return {Tok::Plus, "+", line_, col};
        case '-': return {Tok::Minus, "-", line_, col};
        case '*': return {Tok::Star, "*", line_, col};
        case '^': return {Tok::Caret, "^", line_, col};
        case '/': return {Tok::Slash, "/", line_, col};
        case '(': return {Tok::LParen, "(", line_, col};
        case ')': return {Tok::RParen, ")", line_, col};
        case '[': return {Tok::LBracket, "[", line_, col};
        case ']': return {Tok::RBracket, "]", line_, col};
        case ',': return {Tok::Comma, ",", line_, col};
        case ':': return {Tok::Colon, ":", line_, col};
        default:
            throw parse_error(std::string("unexpected character '") + c + "'", line_, col);
        }
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
    int line_;
};

class ExprParser {
public:
    ExprParser(const std::string& text, int line, const Ring& ring)
        : lex_(text, line), ring_(ring) {
        advance();
    }

    Polynomial parse_full() {
        Polynomial p = parse_expr();
        expect_end();
        return p;
    }

    Polynomial parse_expr() {
        bool negate = false;
        if (cur_.kind == Tok::Plus) {
            advance();
        } else if (cur_.kind == Tok::Minus) {
            negate = true;
            advance();
        }
        Polynomial acc = parse_term();
        if (negate) acc = -acc;
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            bool minus = cur_.kind == Tok::Minus;
            advance();
            Polynomial t = parse_term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    void expect_end() {
        if (cur_.kind != Tok::End)
            throw parse_error("unexpected token '" + cur_.text + "'", cur_.line, cur_.col);
    }

    bool at_comma() const { return cur_.kind == Tok::Comma; }
    void eat_comma() { advance(); }

private:
    void advance() { cur_ = lex_.next(); }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (cur_.kind == Tok::Star) {
            advance();
            acc = acc * parse_factor();
        }
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        if (cur_.kind == Tok::Caret) {
            advance();
            if (cur_.kind != Tok::Int)
                throw parse_error("exponent must be a nonnegative integer literal", cur_.line,
                                  cur_.col);
            long e = std::stol(cur_.text);
            advance();
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    Polynomial parse_base() {
        switch (cur_.kind) {
        case Tok::Int: {
            mpz_class num(cur_.text);
            advance();
            if (cur_.kind == Tok::Slash) {
                advance();
                if (cur_.kind != Tok::Int)
                    throw parse_error("expected integer denominator", cur_.line, cur_.col);
                mpz_class den(cur_.text);
                if (den == 0) throw parse_error("zero denominator", cur_.line, cur_.col);
                advance();
                return Polynomial::constant(ring_, Q(num) / Q(den));
            }
            return Polynomial::constant(ring_, Q(num));
        }
        case Tok::Ident: {
            int idx = ring_.var_index(cur_.text);
            if (idx < 0)
                throw parse_error("unknown variable '" + cur_.text + "'", cur_.line, cur_.col);
            advance();
            return Polynomial::variable(ring_, idx);
        }
        case Tok::LParen: {
            advance();
            Polynomial p = parse_expr();
            if (cur_.kind != Tok::RParen)
                throw parse_error("expected ')'", cur_.line, cur_.col);
            advance();
            return p;
        }
        default:
            throw parse_error("unexpected token '" + cur_.text + "'", cur_.line, cur_.col);
        }
    }

    Lexer lex_;
    Token cur_{Tok::End, "", 0, 0};
    Ring ring_;
};

struct RingDecl {
    Field field;
    std::vector<std::string> vars;
    std::string tail; // remainder of the line after the closing bracket
    int tail_col = 0;
};

// Parses `<F>[v1,...]` and returns whatever follows the bracket.
RingDecl parse_ring_decl(const std::string& text, int line) {
    Lexer lex(text, line);
    Token t = lex.next();
    if (t.kind != Tok::Ident) throw parse_error("expected field name (Q or F<p>)", line, t.col);
    Field field;
    if (t.text == "Q") {
        field = Field::rationals();
    } else if (t.text.size() > 1 && t.text[0] == 'F') {
        std::string digits = t.text.substr(1);
        for (char c : digits)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw parse_error("expected field name (Q or F<p>)", line, t.col);
        try {
            field = Field::prime_field(std::stoul(digits));
        } catch (const invalid_input& e) {
            throw parse_error(e.what(), line, t.col);
        }
    } else {
        throw parse_error("expected field name (Q or F<p>)", line, t.col);
    }
    t = lex.next();
    if (t.kind != Tok::LBracket) throw parse_error("expected '['", line, t.col);
    std::vector<std::string> vars;
    while (true) {
        t = lex.next();
        if (t.kind != Tok::Ident) throw parse_error("expected variable name", line, t.col);
        vars.push_back(t.text);
        t = lex.next();
        if (t.kind == Tok::RBracket) break;
        if (t.kind != Tok::Comma) throw parse_error("expected ',' or ']'", line, t.col);
    }
    RingDecl d;
    d.field = field;
    d.vars = std::move(vars);
    size_t after = text.find(']');
    d.tail = text.substr(after + 1);
    d.tail_col = static_cast<int>(after) + 2;
    return d;
}

struct Line {
    std::string key;
    std::string rest;
    int number;
    int rest_col;
};

std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        size_t hash = raw.find('#');
        std::string body = hash == std::string::npos ? raw : raw.substr(0, hash);
        size_t first = body.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        size_t colon = body.find(':', first);
        if (colon == std::string::npos)
            throw parse_error("expected '<key>: ...' line", number, static_cast<int>(first) + 1);
        std::string key = body.substr(first, colon - first);
        size_t kend = key.find_last_not_of(" \t");
        key = key.substr(0, kend + 1);
        out.push_back({key, body.substr(colon + 1), number, static_cast<int>(colon) + 2});
    }
    return out;
}

} // namespace

Ring ParsedSystem::xring() const {
    if (!relative()) return ring;
    return Ring(xvars, ring.field());
}

ParsedSystem parse_system(const std::string& text) {
    auto lines = split_lines(text);
    const Line* ring_line = nullptr;
    const Line* coeff_line = nullptr;
    for (const auto& l : lines) {
        if (l.key == "ring") {
            if (ring_line) throw parse_error("duplicate ring declaration", l.number, 1);
            ring_line = &l;
        } else if (l.key == "coeff") {
            if (coeff_line) throw parse_error("duplicate coeff declaration", l.number, 1);
            coeff_line = &l;
        } else if (l.key != "f") {
            throw parse_error("unknown line key '" + l.key + "'", l.number, 1);
        }
    }
    if (!ring_line) throw parse_error("missing ring declaration", 1, 1);

    RingDecl rd = parse_ring_decl(ring_line->rest, ring_line->number);
    {
        Lexer lex(rd.tail, ring_line->number);
        Token t = lex.next();
        if (t.kind != Tok::End)
            throw parse_error("unexpected trailing text after ring declaration", ring_line->number, t.col);
    }

    ParsedSystem sys;
    sys.xvars = rd.vars;

    if (coeff_line) {
        RingDecl cd = parse_ring_decl(coeff_line->rest, coeff_line->number);
        if (!(cd.field == rd.field))
            throw parse_error("coeff field must match ring field", coeff_line->number, 1);
        sys.uvars = cd.vars;
        std::vector<std::string> ambient = sys.uvars;
        ambient.insert(ambient.end(), sys.xvars.begin(), sys.xvars.end());
        try {
            sys.ring = Ring(std::move(ambient), rd.field);
        } catch (const invalid_input& e) {
            throw parse_error(e.what(), coeff_line->number, 1);
        }
        CoeffRingSpec spec;
        spec.uvars = sys.uvars;
        // Optional relation list: /(expr, expr, ...)
        Lexer lex(cd.tail, coeff_line->number);
        Token t = lex.next();
        if (t.kind == Tok::Slash) {
            size_t open = cd.tail.find('(');
            size_t close = cd.tail.rfind(')');
            if (open == std::string::npos || close == std::string::npos || close < open)
                throw parse_error("expected '(<expr>,...)' after '/'", coeff_line->number, 1);
            Ring urng(sys.uvars, rd.field);
            std::string inner = cd.tail.substr(open + 1, close - open - 1);
            ExprParser ep(inner, coeff_line->number, urng);
            while (true) {
                Polynomial rel = ep.parse_expr();
                // Lift the relation into the ambient ring.
                std::vector<Polynomial> images;
                for (int i = 0; i < static_cast<int>(sys.uvars.size()); ++i)
                    images.push_back(Polynomial::variable(sys.ring, i));
                spec.relations.push_back(rel.substitute(images, sys.ring));
                if (!ep.at_comma()) break;
                ep.eat_comma();
            }
            ep.expect_end();
        } else if (t.kind != Tok::End) {
            throw parse_error("unexpected trailing text after coeff declaration", coeff_line->number, t.col);
        }
        sys.coeff = std::move(spec);
    } else {
        try {
            sys.ring = Ring(sys.xvars, rd.field);
        } catch (const invalid_input& e) {
            throw parse_error(e.what(), ring_line->number, 1);
        }
    }

    for (const auto& l : lines) {
        if (l.key != "f") continue;
        ExprParser ep(l.rest, l.number, sys.ring);
        sys.generators.push_back(ep.parse_full());
    }
    if (sys.generators.empty()) throw parse_error("missing generator lines (f: ...)", 1, 1);
    return sys;
}

Polynomial parse_polynomial(const std::string& expr, const Ring& ring) {
    ExprParser ep(expr, 1, ring);
    return ep.parse_full();
}

Arc make_arc(std::vector<Polynomial> components) {
    if (components.empty()) throw invalid_input("arc needs at least one component");
    Arc a;
    a.tring = components.front().ring();
    bool any_nonzero = false;
    for (const auto& c : components) {
        if (!(c.ring() == a.tring)) throw invalid_input("arc components live in different rings");
        if (!Field::is_zero(c.constant_coeff()))
            throw invalid_input("arc component has nonzero constant term");
        if (!c.is_zero()) any_nonzero = true;
    }
    if (!any_nonzero) throw invalid_input("arc has all components zero");
    a.components = std::move(components);
    return a;
}

std::vector<Arc> parse_arcs(const std::string& text, const Field& field) {
    Ring tring({"t"}, field);
    std::vector<Arc> arcs;
    for (const auto& l : split_lines(text)) {
        if (l.key != "arc") throw parse_error("unknown line key '" + l.key + "'", l.number, 1);
        ExprParser ep(l.rest, l.number, tring);
        std::vector<Polynomial> comps;
        while (true) {
            comps.push_back(ep.parse_expr());
            if (!ep.at_comma()) break;
            ep.eat_comma();
        }
        ep.expect_end();
        try {
            arcs.push_back(make_arc(std::move(comps)));
        } catch (const invalid_input& e) {
            throw parse_error(e.what(), l.number, 1);
        }
    }
    if (arcs.empty()) throw parse_error("no arc lines found", 1, 1);
    return arcs;
}

} // namespace jacres
