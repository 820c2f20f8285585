#include "letlab/twist.hpp"

#include <sstream>
#include <stdexcept>

namespace letlab {

namespace {

std::uint64_t pack(const Snapshot& z) {
    return (std::uint64_t{z.pos} << 42) | (std::uint64_t{z.neg} << 21) | std::uint64_t{z.cls};
}

}  // namespace

TwistAlgebra::TwistAlgebra(BooleanAlgebra base, Logic logic)
    : base_(base), logic_(logic), domain_(snapshot_domain(base)) {
    const int d = size();
    index_.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) index_[pack(domain_[static_cast<std::size_t>(i)])] = i;

    const BooleanAlgebra& B = base_;
    auto land = [&](BElem a, BElem b) { return B.meet(a, b); };
    auto lor = [&](BElem a, BElem b) { return B.join(a, b); };

    auto lookup = [&](const Snapshot& z) {
        auto it = index_.find(pack(z));
        if (it == index_.end()) throw std::logic_error("twist operation left the snapshot domain");
        return it->second;
    };

    const bool with_imp = has_implication(logic);
    and_.resize(static_cast<std::size_t>(d) * d);
    or_.resize(static_cast<std::size_t>(d) * d);
    if (with_imp) imp_.resize(static_cast<std::size_t>(d) * d);
    not_.resize(static_cast<std::size_t>(d));
    circ_.resize(static_cast<std::size_t>(d));

    for (int i = 0; i < d; ++i) {
        const Snapshot z = domain_[static_cast<std::size_t>(i)];
        not_[static_cast<std::size_t>(i)] = lookup({z.neg, z.pos, z.cls});
        circ_[static_cast<std::size_t>(i)] = lookup({z.cls, B.comp(z.cls), B.top()});
        for (int j = 0; j < d; ++j) {
            const Snapshot w = domain_[static_cast<std::size_t>(j)];
            and_[idx(i, j)] = lookup({land(z.pos, w.pos), lor(z.neg, w.neg),
                                      lor(lor(land(land(z.pos, z.cls), land(w.pos, w.cls)),
                                              land(z.neg, z.cls)),
                                          land(w.neg, w.cls))});
            or_[idx(i, j)] = lookup({lor(z.pos, w.pos), land(z.neg, w.neg),
                                     lor(lor(land(land(z.neg, z.cls), land(w.neg, w.cls)),
                                             land(z.pos, z.cls)),
                                         land(w.pos, w.cls))});
            if (with_imp)
                imp_[idx(i, j)] = lookup({B.imp(z.pos, w.pos), land(z.pos, w.neg),
                                          lor(lor(land(z.pos, land(w.neg, w.cls)),
                                                  land(z.neg, z.cls)),
                                              land(w.pos, w.cls))});
        }
    }
    top_ = lookup({B.top(), B.bottom(), B.top()});
    bot_ = lookup({B.bottom(), B.top(), B.top()});
}

int TwistAlgebra::index_of(const Snapshot& z) const {
    auto it = index_.find(pack(z));
    if (it == index_.end())
        throw std::invalid_argument("not a snapshot of this algebra: " + to_string(base_, z));
    return it->second;
}

int TwistAlgebra::op_imp(int i, int j) const {
    if (imp_.empty())
        throw FragmentError("implication is not available in the " +
                            std::string(to_string(logic_)) + " fragment");
    return imp_[idx(i, j)];
}

bool order_leq(const BooleanAlgebra& algebra, const Snapshot& z, const Snapshot& w) {
    if (!is_snapshot(algebra, z) || !is_snapshot(algebra, w))
        throw std::invalid_argument("order_leq arguments must be snapshots of the same algebra");
    return algebra.leq(z.pos, w.pos) && algebra.leq(w.neg, z.neg) &&
           algebra.leq(algebra.meet(w.neg, w.cls), algebra.meet(z.neg, z.cls)) &&
           algebra.leq(z.cls, algebra.join(algebra.meet(z.pos, w.cls), z.neg));
}

namespace detail {

LatticeReport verify_lattice_tables(int size, const std::vector<int>& and_table,
                                    const std::vector<int>& or_table, int top_index,
                                    int bottom_index) {
    LatticeReport report;
    auto meet = [&](int i, int j) { return and_table[static_cast<std::size_t>(i) * size + j]; };
    auto join = [&](int i, int j) { return or_table[static_cast<std::size_t>(i) * size + j]; };
    auto fail = [&](const std::string& what) {
        if (report.failures.size() < 20) report.failures.push_back(what);
    };

    for (int i = 0; i < size; ++i) {
        ++report.checks;
        if (meet(i, i) != i) fail("idempotence of meet at " + std::to_string(i));
        if (join(i, i) != i) fail("idempotence of join at " + std::to_string(i));
        if (meet(i, top_index) != i) fail("z /\\ T != z at " + std::to_string(i));
        if (join(i, bottom_index) != i) fail("z \\/ F != z at " + std::to_string(i));
    }
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
            ++report.checks;
            if (meet(i, j) != meet(j, i)) fail("meet commutativity");
            if (join(i, j) != join(j, i)) fail("join commutativity");
            if (meet(i, join(i, j)) != i)
                fail("absorption z /\\ (z \\/ w) at (" + std::to_string(i) + "," +
                     std::to_string(j) + ")");
            if (join(i, meet(i, j)) != i)
                fail("absorption z \\/ (z /\\ w) at (" + std::to_string(i) + "," +
                     std::to_string(j) + ")");
        }
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            for (int k = 0; k < size; ++k) {
                ++report.checks;
                if (meet(i, meet(j, k)) != meet(meet(i, j), k)) fail("meet associativity");
                if (join(i, join(j, k)) != join(join(i, j), k)) fail("join associativity");
            }
    return report;
}

}  // namespace detail

LatticeReport verify_lattice(const TwistAlgebra& twist) {
    const int d = twist.size();
    std::vector<int> and_table(static_cast<std::size_t>(d) * d);
    std::vector<int> or_table(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            and_table[static_cast<std::size_t>(i) * d + j] = twist.op_and(i, j);
            or_table[static_cast<std::size_t>(i) * d + j] = twist.op_or(i, j);
        }
    return detail::verify_lattice_tables(d, and_table, or_table, twist.top_index(),
                                         twist.bottom_index());
}

TwistEntailResult twist_entails(const TwistAlgebra& twist, const Sequent& s,
                                std::uint64_t budget) {
    require_in_fragment(s, twist.logic());
    const std::vector<std::string> vars = variables(s);
    const std::vector<Formula> closure = subformula_closure(s);
    const std::size_t k = vars.size();
    const int d = twist.size();

    // cost check before enumerating
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > budget / static_cast<std::uint64_t>(d)) {
            return {TwistEntailResult::Status::BudgetExceeded, {}, 0};
        }
        total *= static_cast<std::uint64_t>(d);
    }

    // positions of premises/conclusion and child links within the closure
    std::unordered_map<Formula, int, FormulaHash> pos;
    for (std::size_t i = 0; i < closure.size(); ++i) pos[closure[i]] = static_cast<int>(i);
    struct NodePlan {
        Conn conn;
        int a = -1, b = -1;   // child indices
        int var = -1;         // index into vars
    };
    std::vector<NodePlan> plan(closure.size());
    for (std::size_t i = 0; i < closure.size(); ++i) {
        const Formula& f = closure[i];
        NodePlan& p = plan[i];
        p.conn = f.conn();
        if (f.is_unary()) p.a = pos.at(f.child());
        if (f.is_binary()) {
            p.a = pos.at(f.lhs());
            p.b = pos.at(f.rhs());
        }
        if (f.conn() == Conn::Var)
            for (std::size_t v = 0; v < k; ++v)
                if (vars[v] == f.name()) p.var = static_cast<int>(v);
    }
    std::vector<int> premise_pos;
    for (const Formula& p : s.premises) premise_pos.push_back(pos.at(p));
    const int conclusion_pos = pos.at(s.conclusion);

    std::vector<int> digits(k, 0);
    std::vector<int> value(closure.size());
    TwistEntailResult result{TwistEntailResult::Status::Valid, {}, 0};
    while (true) {
        ++result.assignments_checked;
        for (std::size_t i = 0; i < closure.size(); ++i) {
            const NodePlan& p = plan[i];
            switch (p.conn) {
                case Conn::Var: value[i] = digits[static_cast<std::size_t>(p.var)]; break;
                case Conn::Top: value[i] = twist.top_index(); break;
                case Conn::Bot: value[i] = twist.bottom_index(); break;
                case Conn::Not: value[i] = twist.op_not(value[static_cast<std::size_t>(p.a)]); break;
                case Conn::Circ:
                    value[i] = twist.op_circ(value[static_cast<std::size_t>(p.a)]);
                    break;
                case Conn::And:
                    value[i] = twist.op_and(value[static_cast<std::size_t>(p.a)],
                                            value[static_cast<std::size_t>(p.b)]);
                    break;
                case Conn::Or:
                    value[i] = twist.op_or(value[static_cast<std::size_t>(p.a)],
                                           value[static_cast<std::size_t>(p.b)]);
                    break;
                case Conn::Imp:
                    value[i] = twist.op_imp(value[static_cast<std::size_t>(p.a)],
                                            value[static_cast<std::size_t>(p.b)]);
                    break;
            }
        }
        bool premises_hold = true;
        for (int pp : premise_pos)
            if (!twist.designated(value[static_cast<std::size_t>(pp)])) {
                premises_hold = false;
                break;
            }
        if (premises_hold && !twist.designated(value[static_cast<std::size_t>(conclusion_pos)])) {
            result.status = TwistEntailResult::Status::Invalid;
            for (std::size_t i = 0; i < k; ++i)
                result.countermodel.emplace_back(vars[i], twist.at(digits[i]));
            return result;
        }

        std::size_t p = k;
        while (p > 0) {
            --p;
            if (++digits[p] < d) break;
            digits[p] = 0;
            if (p == 0) return result;
        }
        if (k == 0) return result;
    }
}

// --- A6 -----------------------------------------------------------------

std::uint8_t a6_encoding(Value6 v) {
    switch (v) {
        case Value6::N: return 0b000;
        case Value6::T0: return 0b010;
        case Value6::F0: return 0b001;
        case Value6::T: return 0b110;
        case Value6::F: return 0b101;
        case Value6::B: return 0b011;
    }
    return 0;
}

namespace {

std::optional<Value6> a6_decode(std::uint8_t bits) {
    for (Value6 v : kAllValues)
        if (a6_encoding(v) == bits) return v;
    return std::nullopt;
}

}  // namespace

bool a6_order(Value6 z, Value6 w) {
    return (a6_encoding(z) & ~a6_encoding(w)) == 0;
}

Value6 a6_meet(Value6 z, Value6 w) {
    const std::uint8_t raw = a6_encoding(z) & a6_encoding(w);
    if (auto v = a6_decode(raw)) return *v;
    // only {c} can fall out of the domain (T ∩ F); its sole lower bound is ∅
    return Value6::N;
}

std::optional<Value6> a6_join(Value6 z, Value6 w) {
    return a6_decode(a6_encoding(z) | a6_encoding(w));
}

}  // namespace letlab
