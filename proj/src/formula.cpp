#include "letlab/formula.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

namespace letlab {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::make(Conn c, std::string name, std::shared_ptr<const Node> a,
                      std::shared_ptr<const Node> b) {
    std::size_t h = hash_combine(0x5e71ab, static_cast<std::size_t>(c));
    if (!name.empty()) h = hash_combine(h, std::hash<std::string>{}(name));
    if (a) h = hash_combine(h, a->hash);
    if (b) h = hash_combine(h, b->hash);
    auto node = std::make_shared<Node>();
    node->conn = c;
    node->hash = h;
    node->name = std::move(name);
    node->a = std::move(a);
    node->b = std::move(b);
    return Formula(std::move(node));
}

Formula Formula::var(std::string name) { return make(Conn::Var, std::move(name), nullptr, nullptr); }
Formula Formula::top() { return make(Conn::Top, {}, nullptr, nullptr); }
Formula Formula::bot() { return make(Conn::Bot, {}, nullptr, nullptr); }
Formula Formula::neg(Formula a) { return make(Conn::Not, {}, std::move(a.node_), nullptr); }
Formula Formula::circ(Formula a) { return make(Conn::Circ, {}, std::move(a.node_), nullptr); }
Formula Formula::conj(Formula a, Formula b) {
    return make(Conn::And, {}, std::move(a.node_), std::move(b.node_));
}
Formula Formula::disj(Formula a, Formula b) {
    return make(Conn::Or, {}, std::move(a.node_), std::move(b.node_));
}
Formula Formula::impl(Formula a, Formula b) {
    return make(Conn::Imp, {}, std::move(a.node_), std::move(b.node_));
}

const std::string& Formula::name() const { return node_->name; }
Formula Formula::child() const { return Formula(node_->a); }
Formula Formula::lhs() const { return Formula(node_->a); }
Formula Formula::rhs() const { return Formula(node_->b); }

bool Formula::operator==(const Formula& other) const {
    const Node* x = node_.get();
    const Node* y = other.node_.get();
    if (x == y) return true;
    if (x->hash != y->hash || x->conn != y->conn) return false;
    switch (x->conn) {
        case Conn::Var: return x->name == y->name;
        case Conn::Top:
        case Conn::Bot: return true;
        case Conn::Not:
        case Conn::Circ: return Formula(x->a) == Formula(y->a);
        default: return Formula(x->a) == Formula(y->a) && Formula(x->b) == Formula(y->b);
    }
}

bool Formula::implication_free() const {
    switch (conn()) {
        case Conn::Imp: return false;
        case Conn::Not:
        case Conn::Circ: return child().implication_free();
        case Conn::And:
        case Conn::Or: return lhs().implication_free() && rhs().implication_free();
        default: return true;
    }
}

// ---------------------------------------------------------------------------
// Parsing

ParseError::ParseError(std::size_t offset, std::string expected, std::string got)
    : std::runtime_error("syntax error at byte " + std::to_string(offset) + ": expected " +
                         expected + ", got " + got),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { Not, Circ, And, Or, Imp, LParen, RParen, Top, Bot, Ident, Comma, Turnstile, End };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            tok_ = {Tok::End, start, "end of input"};
            return;
        }
        // Unicode aliases come first since they are multi-byte.
        static const struct {
            std::string_view text;
            Tok kind;
        } kFixed[] = {
            {"¬", Tok::Not},  {"∘", Tok::Circ}, {"∧", Tok::And},
            {"∨", Tok::Or},   {"→", Tok::Imp},  {"⊤", Tok::Top},
            {"⊥", Tok::Bot},  {"->", Tok::Imp},      {"|-", Tok::Turnstile},
            {"~", Tok::Not},       {"@", Tok::Circ},      {"&", Tok::And},
            {"|", Tok::Or},        {"(", Tok::LParen},    {")", Tok::RParen},
            {",", Tok::Comma},
        };
        for (const auto& f : kFixed) {
            if (text_.substr(pos_, f.text.size()) == f.text) {
                pos_ += f.text.size();
                tok_ = {f.kind, start, std::string(f.text)};
                return;
            }
        }
        char c = text_[pos_];
        if (ident_start(c)) {
            std::size_t end = pos_;
            while (end < text_.size() && ident_char(text_[end])) ++end;
            std::string word(text_.substr(pos_, end - pos_));
            pos_ = end;
            if (word == "o") {
                tok_ = {Tok::Circ, start, word};
            } else if (word == "T" || word == "top") {
                tok_ = {Tok::Top, start, word};
            } else if (word == "F" || word == "bot") {
                tok_ = {Tok::Bot, start, word};
            } else {
                tok_ = {Tok::Ident, start, word};
            }
            return;
        }
        throw ParseError(start, "a formula token", "'" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token tok_{Tok::End, 0, ""};
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    Formula formula() { return imp(); }

    Sequent sequent() {
        std::vector<Formula> premises;
        if (lex_.peek().kind != Tok::Turnstile) {
            premises.push_back(imp());
            while (lex_.peek().kind == Tok::Comma) {
                lex_.take();
                premises.push_back(imp());
            }
        }
        expect(Tok::Turnstile, "'|-'");
        Formula conclusion = imp();
        return Sequent{std::move(premises), std::move(conclusion)};
    }

    void expect_end() {
        if (lex_.peek().kind != Tok::End)
            throw ParseError(lex_.peek().offset, "end of input", "'" + lex_.peek().text + "'");
    }

private:
    Formula imp() {
        Formula left = disjunction();
        if (lex_.peek().kind == Tok::Imp) {
            lex_.take();
            return Formula::impl(std::move(left), imp());  // right-associative
        }
        return left;
    }

    Formula disjunction() {
        Formula f = conjunction();
        while (lex_.peek().kind == Tok::Or) {
            lex_.take();
            f = Formula::disj(std::move(f), conjunction());
        }
        return f;
    }

    Formula conjunction() {
        Formula f = unary();
        while (lex_.peek().kind == Tok::And) {
            lex_.take();
            f = Formula::conj(std::move(f), unary());
        }
        return f;
    }

    Formula unary() {
        switch (lex_.peek().kind) {
            case Tok::Not: lex_.take(); return Formula::neg(unary());
            case Tok::Circ: lex_.take(); return Formula::circ(unary());
            default: return atom();
        }
    }

    Formula atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Ident: return Formula::var(t.text);
            case Tok::Top: return Formula::top();
            case Tok::Bot: return Formula::bot();
            case Tok::LParen: {
                Formula f = imp();
                expect(Tok::RParen, "')'");
                return f;
            }
            default:
                throw ParseError(t.offset, "a variable, 'T', 'F', '~', 'o' or '('",
                                 "'" + t.text + "'");
        }
    }

    void expect(Tok kind, const char* what) {
        Token t = lex_.take();
        if (t.kind != kind) throw ParseError(t.offset, what, "'" + t.text + "'");
    }

    Lexer lex_;
};

}  // namespace

Formula parse_formula(std::string_view text) {
    Parser p(text);
    Formula f = p.formula();
    p.expect_end();
    return f;
}

Sequent parse_sequent(std::string_view text) {
    Parser p(text);
    Sequent s = p.sequent();
    p.expect_end();
    return s;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Precedence: unary 4 > And 3 > Or 2 > Imp 1.
int precedence(Conn c) {
    switch (c) {
        case Conn::Imp: return 1;
        case Conn::Or: return 2;
        case Conn::And: return 3;
        case Conn::Not:
        case Conn::Circ: return 4;
        default: return 5;
    }
}

void print_rec(std::ostringstream& out, const Formula& f, int min_prec) {
    int prec = precedence(f.conn());
    bool parens = prec < min_prec;
    if (parens) out << '(';
    switch (f.conn()) {
        case Conn::Var: out << f.name(); break;
        case Conn::Top: out << 'T'; break;
        case Conn::Bot: out << 'F'; break;
        case Conn::Not:
            out << '~';
            print_rec(out, f.child(), 4);
            break;
        case Conn::Circ:
            out << "o ";
            print_rec(out, f.child(), 4);
            break;
        case Conn::And:
            print_rec(out, f.lhs(), 3);
            out << " & ";
            print_rec(out, f.rhs(), 4);  // right operand of same precedence needs parens
            break;
        case Conn::Or:
            print_rec(out, f.lhs(), 2);
            out << " | ";
            print_rec(out, f.rhs(), 3);
            break;
        case Conn::Imp:
            print_rec(out, f.lhs(), 2);  // left operand of '->' needs parens if itself an Imp
            out << " -> ";
            print_rec(out, f.rhs(), 1);  // right-associative
            break;
    }
    if (parens) out << ')';
}

}  // namespace

std::string to_string(const Formula& f) {
    std::ostringstream out;
    print_rec(out, f, 0);
    return out.str();
}

std::string to_string(const Sequent& s) {
    std::ostringstream out;
    for (std::size_t i = 0; i < s.premises.size(); ++i) {
        if (i) out << ", ";
        out << to_string(s.premises[i]);
    }
    if (!s.premises.empty()) out << ' ';
    out << "|- " << to_string(s.conclusion);
    return out.str();
}

// ---------------------------------------------------------------------------
// Closures and variables

namespace {

void closure_rec(const Formula& f, std::vector<Formula>& out,
                 std::unordered_set<Formula, FormulaHash>& seen) {
    if (seen.count(f)) return;
    if (f.is_unary()) {
        closure_rec(f.child(), out, seen);
    } else if (f.is_binary()) {
        closure_rec(f.lhs(), out, seen);
        closure_rec(f.rhs(), out, seen);
    }
    if (seen.insert(f).second) out.push_back(f);
}

}  // namespace

std::vector<Formula> subformula_closure(const Sequent& s) {
    std::vector<Formula> out;
    std::unordered_set<Formula, FormulaHash> seen;
    for (const Formula& p : s.premises) closure_rec(p, out, seen);
    closure_rec(s.conclusion, out, seen);
    return out;
}

std::vector<Formula> subformula_closure(const Formula& f) {
    return subformula_closure(Sequent{{}, f});
}

std::vector<Formula> triple_closure(const std::vector<Formula>& base) {
    std::vector<Formula> out = base;
    std::unordered_set<Formula, FormulaHash> seen(base.begin(), base.end());
    for (const Formula& f : base) {
        for (Formula g : {Formula::neg(f), Formula::circ(f)}) {
            if (seen.insert(g).second) out.push_back(g);
        }
    }
    return out;
}

namespace {

void vars_rec(const Formula& f, std::vector<std::string>& out,
              std::unordered_set<std::string>& seen) {
    switch (f.conn()) {
        case Conn::Var:
            if (seen.insert(f.name()).second) out.push_back(f.name());
            break;
        case Conn::Not:
        case Conn::Circ: vars_rec(f.child(), out, seen); break;
        case Conn::And:
        case Conn::Or:
        case Conn::Imp:
            vars_rec(f.lhs(), out, seen);
            vars_rec(f.rhs(), out, seen);
            break;
        default: break;
    }
}

}  // namespace

std::vector<std::string> variables(const Formula& f) {
    std::vector<std::string> out;
    std::unordered_set<std::string> seen;
    vars_rec(f, out, seen);
    return out;
}

std::vector<std::string> variables(const Sequent& s) {
    std::vector<std::string> out;
    std::unordered_set<std::string> seen;
    for (const Formula& p : s.premises) vars_rec(p, out, seen);
    vars_rec(s.conclusion, out, seen);
    return out;
}

}  // namespace letlab
