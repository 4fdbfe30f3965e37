#include "nccalc/text.hpp"

#include <cctype>

#include "json.hpp"

namespace nccalc {

namespace {

enum class Tok { End, Plus, Minus, Star, Slash, Caret, LParen, RParen, VarX, VarY, Number, Inv };

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;
    Tok tok = Tok::End;
    std::size_t tok_pos = 0;
    Rat number;
    bool rational_literals;  // lex p/q as one token (the noncommutative grammar)

    Lexer(const std::string& t, bool rat_lits) : text(t), rational_literals(rat_lits) { advance(); }

    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(tok_pos, what); }

    void advance() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        tok_pos = pos;
        if (pos >= text.size()) {
            tok = Tok::End;
            return;
        }
        const char c = text[pos];
        switch (c) {
            case '+': tok = Tok::Plus; ++pos; return;
            case '-': tok = Tok::Minus; ++pos; return;
            case '*': tok = Tok::Star; ++pos; return;
            case '/': tok = Tok::Slash; ++pos; return;
            case '^': tok = Tok::Caret; ++pos; return;
            case '(': tok = Tok::LParen; ++pos; return;
            case ')': tok = Tok::RParen; ++pos; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t end = pos;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
            std::string digits = text.substr(pos, end - pos);
            pos = end;
            if (rational_literals && pos < text.size() && text[pos] == '/') {
                std::size_t dstart = pos + 1;
                std::size_t dend = dstart;
                while (dend < text.size() && std::isdigit(static_cast<unsigned char>(text[dend])))
                    ++dend;
                if (dend == dstart) throw SyntaxError(dstart, "expected denominator digits");
                const std::string den = text.substr(dstart, dend - dstart);
                if (mpz_class(den) == 0) throw SyntaxError(dstart, "zero denominator literal");
                pos = dend;
                number = Rat(mpz_class(digits), mpz_class(den));
                number.canonicalize();
            } else {
                number = Rat(mpz_class(digits));
            }
            tok = Tok::Number;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t end = pos;
            while (end < text.size() && std::isalpha(static_cast<unsigned char>(text[end]))) ++end;
            const std::string word = text.substr(pos, end - pos);
            pos = end;
            if (word == "x") tok = Tok::VarX;
            else if (word == "y") tok = Tok::VarY;
            else if (word == "inv") tok = Tok::Inv;
            else throw SyntaxError(tok_pos, "unknown identifier '" + word + "'");
            return;
        }
        throw SyntaxError(pos, std::string("unexpected character '") + c + "'");
    }

    void expect(Tok t, const char* what) {
        if (tok != t) fail(std::string("expected ") + what);
        advance();
    }
};

// ---------------------------------------------------------------------------
// noncommutative grammar

struct NCParser {
    ExprStore& store;
    Lexer lex;

    NCParser(ExprStore& s, const std::string& text) : store(s), lex(text, true) {}

    NCExpr parse() {
        NCExpr e = expr();
        if (lex.tok != Tok::End) lex.fail("trailing input");
        return store.normalize(e);
    }

    NCExpr expr() {
        NCExpr acc = term();
        while (lex.tok == Tok::Plus || lex.tok == Tok::Minus) {
            const bool minus = lex.tok == Tok::Minus;
            lex.advance();
            const NCExpr rhs = term();
            acc = minus ? store.sub(acc, rhs) : store.add(acc, rhs);
        }
        return acc;
    }

    NCExpr term() {
        NCExpr acc = factor();
        while (lex.tok == Tok::Star) {
            lex.advance();
            acc = store.mul(acc, factor());
        }
        return acc;
    }

    NCExpr factor() {
        if (lex.tok == Tok::Minus) {
            lex.advance();
            return store.neg(factor());
        }
        return primary();
    }

    NCExpr primary() {
        switch (lex.tok) {
            case Tok::VarX:
                lex.advance();
                return store.var_x();
            case Tok::VarY:
                lex.advance();
                return store.var_y();
            case Tok::Number: {
                const Rat v = lex.number;
                lex.advance();
                return store.constant(v);
            }
            case Tok::Inv: {
                lex.advance();
                lex.expect(Tok::LParen, "'(' after inv");
                const NCExpr inner = expr();
                lex.expect(Tok::RParen, "')'");
                try {
                    return store.inv(store.normalize(inner));
                } catch (const CommutatorInverse&) {
                    throw CommutatorInverse("operand lies in the commutator ideal: inv(" +
                                            print_nc(store.normalize(inner)) + ")");
                }
            }
            case Tok::LParen: {
                lex.advance();
                const NCExpr inner = expr();
                lex.expect(Tok::RParen, "')'");
                return inner;
            }
            default:
                lex.fail("expected an atom");
        }
    }
};

// precedence levels for printing
int prec_of(NodeKind k) {
    switch (k) {
        case NodeKind::Add: return 1;
        case NodeKind::Mul: return 2;
        case NodeKind::Neg: return 3;
        default: return 4;
    }
}

// Sign of the leftmost multiplicative leaf; lets sums print "a - b" instead
// of "a + -b" when the right operand carries a leading negation. A leading
// -1 coefficient is excluded: stripping its sign would leave a unit factor
// that folds away on re-parsing.
bool leading_negative(NCExpr e) {
    switch (e.kind()) {
        case NodeKind::Const: return sgn(e.value()) < 0 && e.value() != -1;
        case NodeKind::Neg: return true;
        case NodeKind::Mul: return leading_negative(e.child(0));
        default: return false;
    }
}

void print_rec(NCExpr e, std::string& out);

// Prints the negation of e; only called when leading_negative(e).
void print_negated(NCExpr e, std::string& out) {
    switch (e.kind()) {
        case NodeKind::Const:
            out += rat_to_string(Rat(-e.value()));
            return;
        case NodeKind::Neg: {
            const NCExpr inner = e.child(0);
            const bool parens = prec_of(inner.kind()) <= prec_of(NodeKind::Add);
            if (parens) out += "(";
            print_rec(inner, out);
            if (parens) out += ")";
            return;
        }
        case NodeKind::Mul: {
            print_negated(e.child(0), out);
            out += " * ";
            const NCExpr rhs = e.child(1);
            const bool rp = rhs.kind() == NodeKind::Add || rhs.kind() == NodeKind::Mul;
            if (rp) out += "(";
            print_rec(rhs, out);
            if (rp) out += ")";
            return;
        }
        default:
            return;  // unreachable: guarded by leading_negative
    }
}

void print_rec(NCExpr e, std::string& out) {
    switch (e.kind()) {
        case NodeKind::Const:
            out += rat_to_string(e.value());
            return;
        case NodeKind::VarX:
            out += "x";
            return;
        case NodeKind::VarY:
            out += "y";
            return;
        case NodeKind::Add: {
            print_rec(e.child(0), out);
            const NCExpr rhs = e.child(1);
            if (rhs.kind() == NodeKind::Const && sgn(rhs.value()) < 0) {
                out += " - ";
                out += rat_to_string(Rat(-rhs.value()));
            } else if (leading_negative(rhs)) {
                out += " - ";
                print_negated(rhs, out);
            } else {
                out += " + ";
                const bool parens = rhs.kind() == NodeKind::Add;
                if (parens) out += "(";
                print_rec(rhs, out);
                if (parens) out += ")";
            }
            return;
        }
        case NodeKind::Mul: {
            const NCExpr lhs = e.child(0);
            const NCExpr rhs = e.child(1);
            const bool lp = prec_of(lhs.kind()) < prec_of(NodeKind::Mul);
            if (lp) out += "(";
            print_rec(lhs, out);
            if (lp) out += ")";
            out += " * ";
            const bool rp = rhs.kind() == NodeKind::Add || rhs.kind() == NodeKind::Mul;
            if (rp) out += "(";
            print_rec(rhs, out);
            if (rp) out += ")";
            return;
        }
        case NodeKind::Neg: {
            out += "-";
            const NCExpr inner = e.child(0);
            const bool parens = prec_of(inner.kind()) < prec_of(NodeKind::Neg);
            if (parens) out += "(";
            print_rec(inner, out);
            if (parens) out += ")";
            return;
        }
        case NodeKind::Inv:
            out += "inv(";
            print_rec(e.child(0), out);
            out += ")";
            return;
    }
}

// ---------------------------------------------------------------------------
// commutative grammar

struct CommParser {
    Lexer lex;
    static constexpr long kMaxExponent = 512;

    explicit CommParser(const std::string& text) : lex(text, false) {}

    CommRat parse() {
        CommRat v = expr();
        if (lex.tok != Tok::End) lex.fail("trailing input");
        return v;
    }

    CommRat expr() {
        CommRat acc = term();
        while (lex.tok == Tok::Plus || lex.tok == Tok::Minus) {
            const bool minus = lex.tok == Tok::Minus;
            lex.advance();
            const CommRat rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    CommRat term() {
        CommRat acc = factor();
        while (lex.tok == Tok::Star || lex.tok == Tok::Slash) {
            const bool div = lex.tok == Tok::Slash;
            const std::size_t at = lex.tok_pos;
            lex.advance();
            const CommRat rhs = factor();
            if (div && rhs.is_zero()) throw SyntaxError(at, "division by zero");
            acc = div ? acc / rhs : acc * rhs;
        }
        return acc;
    }

    CommRat factor() {
        if (lex.tok == Tok::Minus) {
            lex.advance();
            return -factor();
        }
        return power();
    }

    CommRat power() {
        CommRat base = primary();
        if (lex.tok == Tok::Caret) {
            lex.advance();
            if (lex.tok != Tok::Number || lex.number.get_den() != 1)
                lex.fail("expected a nonnegative integer exponent");
            if (lex.number.get_num() > kMaxExponent) lex.fail("exponent too large");
            long e = lex.number.get_num().get_si();
            lex.advance();
            CommRat acc(Rat(1));
            for (; e > 0; --e) acc = acc * base;
            return acc;
        }
        return base;
    }

    CommRat primary() {
        switch (lex.tok) {
            case Tok::VarX:
                lex.advance();
                return CommRat::var_x();
            case Tok::VarY:
                lex.advance();
                return CommRat::var_y();
            case Tok::Number: {
                const Rat v = lex.number;
                lex.advance();
                return CommRat(v);
            }
            case Tok::LParen: {
                lex.advance();
                const CommRat inner = expr();
                lex.expect(Tok::RParen, "')'");
                return inner;
            }
            default:
                lex.fail("expected an atom");
        }
    }
};

}  // namespace

NCExpr parse_nc(ExprStore& store, const std::string& text) {
    return NCParser(store, text).parse();
}

std::string print_nc(NCExpr e) {
    std::string out;
    print_rec(e, out);
    return out;
}

CommRat parse_comm(const std::string& text) { return CommParser(text).parse(); }

CommRat parse_comm_x(const std::string& text) {
    const CommRat v = parse_comm(text).reduced();
    if (v.num().degree_y() > 0 || v.den().degree_y() > 0)
        throw NcError("NonUnivariateEntry", "entry depends on y: " + text);
    return v;
}

VEntry parse_ventry(const std::string& text) {
    const CommRat v = parse_comm(text).reduced();
    const bool poly = v.den().is_constant() && v.den().constant_term() == 1;
    if (!poly || v.num().total_degree() > 1)
        throw SyntaxError(0, "not an affine combination of 1, x, y: " + text);
    VEntry e;
    for (const auto& [m, c] : v.num().terms()) {
        if (m == Mono{0, 0}) e.alpha = c;
        else if (m == Mono{1, 0}) e.beta = c;
        else e.gamma = c;
    }
    return e;
}

std::string print_ventry(const VEntry& e) { return e.to_poly().str(); }

VMatrix vmatrix_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SyntaxError(0, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
        throw SyntaxError(0, "expected an object with an \"entries\" array");
    const auto& rows = j["entries"];
    const int k = static_cast<int>(rows.size());
    if (k == 0) throw SyntaxError(0, "empty matrix");
    VMatrix m(k);
    for (int i = 0; i < k; ++i) {
        if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != k)
            throw SyntaxError(0, "matrix is not square");
        for (int c = 0; c < k; ++c) {
            if (!rows[i][c].is_string()) throw SyntaxError(0, "matrix entries must be strings");
            m.at(i, c) = parse_ventry(rows[i][c].get<std::string>());
        }
    }
    return m;
}

std::string vmatrix_to_json(const VMatrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.size(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(print_ventry(m.at(i, j)));
        rows.push_back(row);
    }
    nlohmann::ordered_json j;
    j["entries"] = rows;
    return j.dump();
}

namespace {

GL2Rat parse_gl2_body(const std::string& body, std::size_t base_pos) {
    const auto semi = body.find(';');
    if (semi == std::string::npos) throw SyntaxError(base_pos, "expected ';' between matrix rows");
    const std::string top = body.substr(0, semi);
    const std::string bottom = body.substr(semi + 1);
    const auto c1 = top.find(',');
    const auto c2 = bottom.find(',');
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw SyntaxError(base_pos, "expected ',' between matrix entries");
    return GL2Rat(parse_comm_x(top.substr(0, c1)), parse_comm_x(top.substr(c1 + 1)),
                  parse_comm_x(bottom.substr(0, c2)), parse_comm_x(bottom.substr(c2 + 1)));
}

}  // namespace

CremonaWord parse_word(ExprStore& store, const std::string& text) {
    CremonaWord word;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        if (text.compare(pos, 3, "tau") == 0) {
            word.push_back(GenTau{});
            pos += 3;
            continue;
        }
        if ((text[pos] == 't' || text[pos] == 'p') && pos + 1 < text.size() &&
            text[pos + 1] == '[') {
            const bool is_t = text[pos] == 't';
            const auto close = text.find(']', pos + 2);
            if (close == std::string::npos) throw SyntaxError(pos, "unterminated '['");
            const GL2Rat a = parse_gl2_body(text.substr(pos + 2, close - pos - 2), pos + 2);
            if (is_t) word.push_back(GenT{a});
            else word.push_back(GenP{a});
            pos = close + 1;
            continue;
        }
        if (text.compare(pos, 6, "inner(") == 0) {
            int depth = 1;
            std::size_t end = pos + 6;
            while (end < text.size() && depth > 0) {
                if (text[end] == '(') ++depth;
                if (text[end] == ')') --depth;
                ++end;
            }
            if (depth != 0) throw SyntaxError(pos, "unterminated inner(");
            word.push_back(GenInner{parse_nc(store, text.substr(pos + 6, end - pos - 7))});
            pos = end;
            continue;
        }
        throw SyntaxError(pos, "expected a generator: tau, t[..], p[..] or inner(..)");
    }
    return word;
}

}  // namespace nccalc
