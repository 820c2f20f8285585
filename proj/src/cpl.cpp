#include "letlab/cpl.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace letlab {

BoolTerm BoolTerm::var(std::string base, int coordinate) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Var;
    node->base = std::move(base);
    node->coord = coordinate;
    return BoolTerm(std::move(node));
}

BoolTerm BoolTerm::top() {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Top;
    return BoolTerm(std::move(node));
}

BoolTerm BoolTerm::bot() {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Bot;
    return BoolTerm(std::move(node));
}

BoolTerm BoolTerm::comp(BoolTerm a) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Comp;
    node->a = std::move(a.node_);
    return BoolTerm(std::move(node));
}

BoolTerm BoolTerm::meet(BoolTerm a, BoolTerm b) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Meet;
    node->a = std::move(a.node_);
    node->b = std::move(b.node_);
    return BoolTerm(std::move(node));
}

BoolTerm BoolTerm::join(BoolTerm a, BoolTerm b) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Join;
    node->a = std::move(a.node_);
    node->b = std::move(b.node_);
    return BoolTerm(std::move(node));
}

BoolTerm BoolTerm::imp(BoolTerm a, BoolTerm b) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Imp;
    node->a = std::move(a.node_);
    node->b = std::move(b.node_);
    return BoolTerm(std::move(node));
}

BoolTerm BoolTerm::child() const { return BoolTerm(node_->a); }
BoolTerm BoolTerm::lhs() const { return BoolTerm(node_->a); }
BoolTerm BoolTerm::rhs() const { return BoolTerm(node_->b); }

// ---------------------------------------------------------------------------
// Printing.  Same-operator meet/join chains print flat on the left spine;
// any other binary operand is parenthesized, so mixed * / + / => nestings
// are always explicit.

namespace {

bool is_binary_kind(BoolTerm::Kind k) {
    return k == BoolTerm::Kind::Meet || k == BoolTerm::Kind::Join || k == BoolTerm::Kind::Imp;
}

void print_term(std::ostringstream& out, const BoolTerm& t, BoolTerm::Kind parent, bool left_slot) {
    const BoolTerm::Kind k = t.kind();
    const bool flat_chain = is_binary_kind(k) && k == parent && left_slot &&
                            k != BoolTerm::Kind::Imp;
    const bool parens = is_binary_kind(k) && parent != BoolTerm::Kind::Var && !flat_chain;
    if (parens) out << '(';
    switch (k) {
        case BoolTerm::Kind::Var: out << t.base() << '^' << t.coord(); break;
        case BoolTerm::Kind::Top: out << '1'; break;
        case BoolTerm::Kind::Bot: out << '0'; break;
        case BoolTerm::Kind::Comp: {
            out << '-';
            const BoolTerm c = t.child();
            if (is_binary_kind(c.kind())) {
                out << '(';
                print_term(out, c, BoolTerm::Kind::Var, false);
                out << ')';
            } else {
                print_term(out, c, BoolTerm::Kind::Comp, false);
            }
            break;
        }
        case BoolTerm::Kind::Meet:
            print_term(out, t.lhs(), k, true);
            out << " * ";
            print_term(out, t.rhs(), k, false);
            break;
        case BoolTerm::Kind::Join:
            print_term(out, t.lhs(), k, true);
            out << " + ";
            print_term(out, t.rhs(), k, false);
            break;
        case BoolTerm::Kind::Imp:
            print_term(out, t.lhs(), k, true);
            out << " => ";
            print_term(out, t.rhs(), k, false);
            break;
    }
    if (parens) out << ')';
}

}  // namespace

std::string to_string(const BoolTerm& t) {
    std::ostringstream out;
    // Kind::Var as parent means "top level / no parentheses needed"
    print_term(out, t, BoolTerm::Kind::Var, false);
    return out.str();
}

std::vector<CoordVar> term_variables(const BoolTerm& t) {
    std::vector<CoordVar> out;
    auto seen = [&](const CoordVar& v) {
        return std::find(out.begin(), out.end(), v) != out.end();
    };
    // explicit stack, left-to-right
    std::vector<BoolTerm> stack{t};
    std::vector<BoolTerm> order;
    while (!stack.empty()) {
        BoolTerm cur = stack.back();
        stack.pop_back();
        switch (cur.kind()) {
            case BoolTerm::Kind::Var: {
                CoordVar v{cur.base(), cur.coord()};
                if (!seen(v)) out.push_back(v);
                break;
            }
            case BoolTerm::Kind::Comp: stack.push_back(cur.child()); break;
            case BoolTerm::Kind::Meet:
            case BoolTerm::Kind::Join:
            case BoolTerm::Kind::Imp:
                stack.push_back(cur.rhs());
                stack.push_back(cur.lhs());
                break;
            default: break;
        }
    }
    return out;
}

CoordTerms coord_terms(const Formula& f, Logic logic) {
    require_in_fragment(f, logic);
    using BT = BoolTerm;
    switch (f.conn()) {
        case Conn::Var:
            return {BT::var(f.name(), 1), BT::var(f.name(), 2), BT::var(f.name(), 3)};
        case Conn::Top: return {BT::top(), BT::bot(), BT::top()};
        case Conn::Bot: return {BT::bot(), BT::top(), BT::top()};
        case Conn::Not: {
            CoordTerms c = coord_terms(f.child(), logic);
            return {c.t2, c.t1, c.t3};
        }
        case Conn::Circ: {
            CoordTerms c = coord_terms(f.child(), logic);
            return {c.t3, BT::comp(c.t3), BT::top()};
        }
        case Conn::And: {
            CoordTerms z = coord_terms(f.lhs(), logic);
            CoordTerms w = coord_terms(f.rhs(), logic);
            return {BT::meet(z.t1, w.t1), BT::join(z.t2, w.t2),
                    BT::join(BT::join(BT::meet(BT::meet(z.t1, z.t3), BT::meet(w.t1, w.t3)),
                                      BT::meet(z.t2, z.t3)),
                             BT::meet(w.t2, w.t3))};
        }
        case Conn::Or: {
            CoordTerms z = coord_terms(f.lhs(), logic);
            CoordTerms w = coord_terms(f.rhs(), logic);
            return {BT::join(z.t1, w.t1), BT::meet(z.t2, w.t2),
                    BT::join(BT::join(BT::meet(BT::meet(z.t2, z.t3), BT::meet(w.t2, w.t3)),
                                      BT::meet(z.t1, z.t3)),
                             BT::meet(w.t1, w.t3))};
        }
        case Conn::Imp: {
            CoordTerms z = coord_terms(f.lhs(), logic);
            CoordTerms w = coord_terms(f.rhs(), logic);
            return {BT::imp(z.t1, w.t1), BT::meet(z.t1, w.t2),
                    BT::join(BT::join(BT::meet(z.t1, BT::meet(w.t2, w.t3)),
                                      BT::meet(z.t2, z.t3)),
                             BT::meet(w.t1, w.t3))};
        }
    }
    throw std::logic_error("unreachable");
}

BoolTerm snapshot_constraint(const std::string& var) {
    using BT = BoolTerm;
    BT p1 = BT::var(var, 1), p2 = BT::var(var, 2), p3 = BT::var(var, 3);
    return BT::meet(BT::imp(p3, BT::join(p1, p2)),
                    BT::comp(BT::meet(BT::meet(BT::var(var, 1), BT::var(var, 2)), BT::var(var, 3))));
}

BoolTerm constraint_term(const std::vector<std::string>& vars) {
    if (vars.empty()) return BoolTerm::top();
    BoolTerm t = snapshot_constraint(vars[0]);
    for (std::size_t i = 1; i < vars.size(); ++i)
        t = BoolTerm::meet(std::move(t), snapshot_constraint(vars[i]));
    return t;
}

BoolTerm reduce_sequent(const Sequent& s, Logic logic) {
    require_in_fragment(s, logic);
    const BoolTerm constraints = constraint_term(variables(s));
    const BoolTerm goal = coord_terms(s.conclusion, logic).t1;
    if (s.premises.empty()) return BoolTerm::imp(constraints, goal);
    Formula premise_conj = s.premises[0];
    for (std::size_t i = 1; i < s.premises.size(); ++i)
        premise_conj = Formula::conj(std::move(premise_conj), s.premises[i]);
    const BoolTerm antecedent = coord_terms(premise_conj, logic).t1;
    return BoolTerm::imp(constraints, BoolTerm::imp(antecedent, goal));
}

// ---------------------------------------------------------------------------
// Truth tables.  The term DAG is compiled once into a postorder program
// (shared subterms become one instruction), then evaluated 64 rows per pass
// with bitwise lanes: variable i < 6 varies within a block, the rest select
// the block.

namespace {

struct Program {
    enum class Op : std::uint8_t { Load, Const, Comp, Meet, Join, Imp };
    struct Instr {
        Op op;
        int a = 0, b = 0;  // operand registers, or variable index / constant for Load/Const
    };
    std::vector<Instr> code;
    std::vector<CoordVar> vars;
};

Program compile_term(const BoolTerm& t) {
    Program prog;
    prog.vars = term_variables(t);
    std::unordered_map<const void*, int> reg;
    auto var_index = [&](const BoolTerm& v) {
        const CoordVar cv{v.base(), v.coord()};
        for (std::size_t i = 0; i < prog.vars.size(); ++i)
            if (prog.vars[i] == cv) return static_cast<int>(i);
        throw std::logic_error("unregistered variable");
    };

    // iterative postorder over the DAG
    std::vector<std::pair<BoolTerm, bool>> stack{{t, false}};
    while (!stack.empty()) {
        auto [cur, expanded] = stack.back();
        stack.pop_back();
        if (reg.count(cur.id())) continue;
        if (!expanded) {
            stack.push_back({cur, true});
            switch (cur.kind()) {
                case BoolTerm::Kind::Comp: stack.push_back({cur.child(), false}); break;
                case BoolTerm::Kind::Meet:
                case BoolTerm::Kind::Join:
                case BoolTerm::Kind::Imp:
                    stack.push_back({cur.rhs(), false});
                    stack.push_back({cur.lhs(), false});
                    break;
                default: break;
            }
            continue;
        }
        Program::Instr instr;
        switch (cur.kind()) {
            case BoolTerm::Kind::Var: instr = {Program::Op::Load, var_index(cur), 0}; break;
            case BoolTerm::Kind::Top: instr = {Program::Op::Const, 1, 0}; break;
            case BoolTerm::Kind::Bot: instr = {Program::Op::Const, 0, 0}; break;
            case BoolTerm::Kind::Comp:
                instr = {Program::Op::Comp, reg.at(cur.child().id()), 0};
                break;
            case BoolTerm::Kind::Meet:
                instr = {Program::Op::Meet, reg.at(cur.lhs().id()), reg.at(cur.rhs().id())};
                break;
            case BoolTerm::Kind::Join:
                instr = {Program::Op::Join, reg.at(cur.lhs().id()), reg.at(cur.rhs().id())};
                break;
            case BoolTerm::Kind::Imp:
                instr = {Program::Op::Imp, reg.at(cur.lhs().id()), reg.at(cur.rhs().id())};
                break;
        }
        reg[cur.id()] = static_cast<int>(prog.code.size());
        prog.code.push_back(instr);
    }
    return prog;
}

// bit r of lane(i) is (r >> i) & 1, for the six in-block variables
constexpr std::uint64_t kLanes[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

std::uint64_t run_block(const Program& prog, std::uint64_t block, std::vector<std::uint64_t>& regs) {
    regs.resize(prog.code.size());
    for (std::size_t i = 0; i < prog.code.size(); ++i) {
        const auto& instr = prog.code[i];
        switch (instr.op) {
            case Program::Op::Load: {
                const int v = instr.a;
                regs[i] = v < 6 ? kLanes[v]
                                : ((block >> (v - 6)) & 1 ? ~std::uint64_t{0} : 0);
                break;
            }
            case Program::Op::Const: regs[i] = instr.a ? ~std::uint64_t{0} : 0; break;
            case Program::Op::Comp: regs[i] = ~regs[instr.a]; break;
            case Program::Op::Meet: regs[i] = regs[instr.a] & regs[instr.b]; break;
            case Program::Op::Join: regs[i] = regs[instr.a] | regs[instr.b]; break;
            case Program::Op::Imp: regs[i] = ~regs[instr.a] | regs[instr.b]; break;
        }
    }
    return prog.code.empty() ? ~std::uint64_t{0} : regs.back();
}

}  // namespace

TautResult TruthTableEngine::tautology(const BoolTerm& t) const {
    const Program prog = compile_term(t);
    const std::size_t m = prog.vars.size();
    if (m > 62) throw std::invalid_argument("too many variables for a truth table");
    const std::uint64_t rows = std::uint64_t{1} << m;
    const std::uint64_t block_rows = rows < 64 ? rows : 64;
    const std::uint64_t blocks = rows < 64 ? 1 : rows >> 6;
    const std::uint64_t row_mask =
        block_rows == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << block_rows) - 1;

    TautResult result{true, {}, 0};
    std::vector<std::uint64_t> regs;
    for (std::uint64_t block = 0; block < blocks; ++block) {
        const std::uint64_t out = run_block(prog, block, regs) | ~row_mask;
        if (out == ~std::uint64_t{0}) {
            result.rows_checked += block_rows;
            continue;
        }
        const int bit = std::countr_one(out);
        result.rows_checked += static_cast<std::uint64_t>(bit) + 1;
        result.tautology = false;
        const std::uint64_t row = (block << 6) | static_cast<std::uint64_t>(bit);
        for (std::size_t i = 0; i < m; ++i)
            result.falsifier.emplace_back(prog.vars[i], static_cast<bool>(row >> i & 1));
        return result;
    }
    return result;
}

TautResult cpl_taut(const BoolTerm& t) { return TruthTableEngine{}.tautology(t); }

std::string reduce_report(const Sequent& s, Logic logic) {
    std::ostringstream out;
    out << "sequent: " << to_string(s) << '\n';
    out << "constraints: " << to_string(constraint_term(variables(s))) << '\n';
    if (!s.premises.empty()) {
        Formula premise_conj = s.premises[0];
        for (std::size_t i = 1; i < s.premises.size(); ++i)
            premise_conj = Formula::conj(std::move(premise_conj), s.premises[i]);
        out << "premise-term: " << to_string(coord_terms(premise_conj, logic).t1) << '\n';
    }
    out << "conclusion-term: " << to_string(coord_terms(s.conclusion, logic).t1) << '\n';
    out << "reduction: " << to_string(reduce_sequent(s, logic)) << '\n';
    return out.str();
}

}  // namespace letlab
