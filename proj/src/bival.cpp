#include "letlab/bival.hpp"

#include <sstream>
#include <stdexcept>

namespace letlab {

Bivaluation::Bivaluation(std::vector<Formula> domain) : domain_(std::move(domain)) {
    bits_.resize(domain_.size(), false);
    for (std::size_t i = 0; i < domain_.size(); ++i) position_[domain_[i]] = i;
}

Bivaluation Bivaluation::on_triple_closure(const Sequent& s) {
    return Bivaluation(triple_closure(subformula_closure(s)));
}

bool Bivaluation::value(const Formula& f) const {
    auto it = position_.find(f);
    if (it == position_.end())
        throw std::out_of_range("formula '" + to_string(f) + "' outside the bivaluation domain");
    return bits_[it->second];
}

void Bivaluation::set(const Formula& f, bool v) {
    auto it = position_.find(f);
    if (it == position_.end())
        throw std::out_of_range("formula '" + to_string(f) + "' outside the bivaluation domain");
    bits_[it->second] = v;
}

bool Bivaluation::domain_is_closed() const {
    for (const Formula& f : domain_) {
        if (f.is_unary() && !contains(f.child())) return false;
        if (f.is_binary() && (!contains(f.lhs()) || !contains(f.rhs()))) return false;
    }
    return true;
}

const char* to_string(ClauseId c) {
    switch (c) {
        case ClauseId::V1: return "v1";
        case ClauseId::V2: return "v2";
        case ClauseId::V3: return "v3";
        case ClauseId::V4: return "v4";
        case ClauseId::V5: return "v5";
        case ClauseId::V6: return "v6";
        case ClauseId::V7: return "v7";
        case ClauseId::V8: return "v8";
        case ClauseId::Vp1: return "vp1";
        case ClauseId::Vp2: return "vp2";
        case ClauseId::Vp3: return "vp3";
        case ClauseId::Vp4: return "vp4";
        case ClauseId::Vp5: return "vp5";
        case ClauseId::Vp6: return "vp6";
        case ClauseId::Vp7: return "vp7";
        case ClauseId::Vp8: return "vp8";
        case ClauseId::Vp9: return "vp9";
        case ClauseId::Vp10: return "vp10";
        case ClauseId::Vp11: return "vp11";
        case ClauseId::Vp12: return "vp12";
        case ClauseId::Vp13: return "vp13";
        case ClauseId::Vp14: return "vp14";
        case ClauseId::Vp15: return "vp15";
        case ClauseId::Vp16: return "vp16";
        case ClauseId::Vp17: return "vp17";
        case ClauseId::V9: return "v9";
        case ClauseId::V10: return "v10";
        case ClauseId::V11: return "v11";
        case ClauseId::Consts: return "constants";
    }
    return "?";
}

std::optional<ClauseSet> clause_set_from_string(const std::string& name) {
    if (name == "letk") return ClauseSet::LetKV1V8;
    if (name == "letk+") return ClauseSet::LetKPlusVp1Vp17;
    if (name == "letk+compact") return ClauseSet::LetKPlusCompact;
    return std::nullopt;
}

namespace {

// Reads clause operands off the bivaluation, remembering whether some
// required formula was missing; the instance is then "not applicable".
struct Probe {
    const Bivaluation& rho;
    bool applicable = true;

    bool operator()(const Formula& f) {
        if (!rho.contains(f)) {
            applicable = false;
            return false;
        }
        return rho.value(f);
    }
};

void run_instance(const Bivaluation& rho, ClauseReport& report, ClauseId clause, const Formula& at,
                  auto&& body) {
    Probe probe{rho};
    const bool holds = body(probe);
    if (!probe.applicable) {
        report.not_applicable.emplace_back(clause, at);
        return;
    }
    ++report.instances_checked;
    if (!holds)
        report.violations.push_back({clause, at, std::string(to_string(clause)) +
                                                     " violated at '" + to_string(at) + "'"});
}

}  // namespace

ClauseReport check_clauses(const Bivaluation& rho, ClauseSet set) {
    if (!rho.domain_is_closed())
        throw std::invalid_argument("bivaluation domain is not subformula-closed");

    const bool plus = set != ClauseSet::LetKV1V8;
    const bool expanded = set == ClauseSet::LetKPlusVp1Vp17;
    const bool compact = set == ClauseSet::LetKPlusCompact;

    ClauseReport report;
    auto check = [&](ClauseId id, const Formula& at, auto&& body) {
        run_instance(rho, report, id, at, body);
    };

    for (const Formula& f : rho.domain()) {
        const bool fv = rho.value(f);
        switch (f.conn()) {
            case Conn::Top:
                check(ClauseId::Consts, f, [&](Probe&) { return fv; });
                break;
            case Conn::Bot:
                check(ClauseId::Consts, f, [&](Probe&) { return !fv; });
                break;
            case Conn::And: {
                const Formula a = f.lhs(), b = f.rhs();
                check(ClauseId::V1, f, [&](Probe& p) { return fv == (p(a) && p(b)); });
                break;
            }
            case Conn::Or: {
                const Formula a = f.lhs(), b = f.rhs();
                check(ClauseId::V2, f, [&](Probe& p) { return fv == (p(a) || p(b)); });
                break;
            }
            case Conn::Imp: {
                const Formula a = f.lhs(), b = f.rhs();
                check(ClauseId::V3, f, [&](Probe& p) { return fv == (!p(a) || p(b)); });
                break;
            }
            case Conn::Not: {
                const Formula g = f.child();
                switch (g.conn()) {
                    case Conn::Not:
                        check(ClauseId::V4, f, [&](Probe& p) { return fv == p(g.child()); });
                        break;
                    case Conn::And:
                        check(ClauseId::V5, f, [&](Probe& p) {
                            return fv == (p(Formula::neg(g.lhs())) || p(Formula::neg(g.rhs())));
                        });
                        break;
                    case Conn::Or:
                        check(ClauseId::V6, f, [&](Probe& p) {
                            return fv == (p(Formula::neg(g.lhs())) && p(Formula::neg(g.rhs())));
                        });
                        break;
                    case Conn::Imp:
                        check(ClauseId::V7, f, [&](Probe& p) {
                            return fv == (p(g.lhs()) && p(Formula::neg(g.rhs())));
                        });
                        break;
                    case Conn::Top:
                        check(ClauseId::Consts, f, [&](Probe&) { return !fv; });
                        break;
                    case Conn::Bot:
                        check(ClauseId::Consts, f, [&](Probe&) { return fv; });
                        break;
                    default: break;
                }
                break;
            }
            case Conn::Circ: {
                const Formula g = f.child();
                check(ClauseId::V8, f, [&](Probe& p) {
                    const bool ga = p(g);
                    const bool gna = p(Formula::neg(g));
                    return !fv || (gna == !ga);
                });
                if (g.conn() == Conn::Top || g.conn() == Conn::Bot)
                    check(ClauseId::Consts, f, [&](Probe&) { return fv; });
                if (!plus) break;
                if (g.conn() == Conn::Circ)
                    check(ClauseId::Vp1, f, [&](Probe&) { return fv; });
                if (g.conn() == Conn::Not)
                    check(ClauseId::Vp2, f,
                          [&](Probe& p) { return fv == p(Formula::circ(g.child())); });
                if (g.is_binary()) {
                    const Formula a = g.lhs(), b = g.rhs();
                    const Formula na = Formula::neg(a), nb = Formula::neg(b);
                    const Formula ca = Formula::circ(a), cb = Formula::circ(b);
                    if (g.conn() == Conn::And) {
                        if (expanded) {
                            check(ClauseId::Vp3, f, [&](Probe& p) {
                                return !(p(ca) && p(a) && p(cb) && p(b)) || fv;
                            });
                            check(ClauseId::Vp4, f,
                                  [&](Probe& p) { return !(p(ca) && p(na)) || fv; });
                            check(ClauseId::Vp5, f,
                                  [&](Probe& p) { return !(p(cb) && p(nb)) || fv; });
                            check(ClauseId::Vp6, f, [&](Probe& p) {
                                return !(fv && p(a) && p(b)) || (p(ca) && p(cb));
                            });
                            check(ClauseId::Vp7, f, [&](Probe& p) {
                                return !(fv && (p(na) || p(nb))) ||
                                       ((p(ca) && p(na)) || (p(cb) && p(nb)));
                            });
                        }
                        if (compact)
                            check(ClauseId::V9, f, [&](Probe& p) {
                                return fv == ((p(a) && p(ca) && p(b) && p(cb)) ||
                                              (p(na) && p(ca)) || (p(nb) && p(cb)));
                            });
                    } else if (g.conn() == Conn::Or) {
                        if (expanded) {
                            check(ClauseId::Vp8, f,
                                  [&](Probe& p) { return !(p(ca) && p(a)) || fv; });
                            check(ClauseId::Vp9, f,
                                  [&](Probe& p) { return !(p(cb) && p(b)) || fv; });
                            check(ClauseId::Vp10, f, [&](Probe& p) {
                                return !(p(ca) && p(na) && p(cb) && p(nb)) || fv;
                            });
                            check(ClauseId::Vp11, f, [&](Probe& p) {
                                return !(fv && (p(a) || p(b))) ||
                                       ((p(ca) && p(a)) || (p(cb) && p(b)));
                            });
                            check(ClauseId::Vp12, f, [&](Probe& p) {
                                return !(fv && !p(a) && !p(b)) || (p(ca) && p(cb));
                            });
                        }
                        if (compact)
                            check(ClauseId::V10, f, [&](Probe& p) {
                                return fv == ((p(na) && p(ca) && p(nb) && p(cb)) ||
                                              (p(a) && p(ca)) || (p(b) && p(cb)));
                            });
                    } else {  // Imp
                        if (expanded) {
                            check(ClauseId::Vp13, f,
                                  [&](Probe& p) { return !(p(ca) && p(na)) || fv; });
                            check(ClauseId::Vp14, f,
                                  [&](Probe& p) { return !(p(cb) && p(b)) || fv; });
                            check(ClauseId::Vp15, f, [&](Probe& p) {
                                return !(p(a) && p(cb) && p(nb)) || fv;
                            });
                            check(ClauseId::Vp16, f, [&](Probe& p) {
                                return !(fv && (!p(a) || p(b))) ||
                                       ((p(ca) && p(na)) || (p(cb) && p(b)));
                            });
                            check(ClauseId::Vp17, f, [&](Probe& p) {
                                return !(fv && p(a) && p(nb)) || p(cb);
                            });
                        }
                        if (compact)
                            check(ClauseId::V11, f, [&](Probe& p) {
                                return fv == ((p(a) && p(nb) && p(cb)) || (p(na) && p(ca)) ||
                                              (p(b) && p(cb)));
                            });
                    }
                }
                break;
            }
            default: break;
        }
    }
    return report;
}

// --- profiles ---------------------------------------------------------------

bool LocalProfile::triples_are_snapshots() const {
    auto ok = [](bool x, bool nx, bool cx) { return (!cx || x || nx) && !(x && nx && cx); };
    return ok(a, na, ca) && ok(b, nb, cb) && ok(c, nc, cc);
}

std::vector<LocalProfile> all_constrained_profiles() {
    std::vector<LocalProfile> out;
    for (int m = 0; m < 512; ++m) {
        LocalProfile p{static_cast<bool>(m & 1),   static_cast<bool>(m & 2),
                       static_cast<bool>(m & 4),   static_cast<bool>(m & 8),
                       static_cast<bool>(m & 16),  static_cast<bool>(m & 32),
                       static_cast<bool>(m & 64),  static_cast<bool>(m & 128),
                       static_cast<bool>(m & 256)};
        if (p.triples_are_snapshots()) out.push_back(p);
    }
    return out;
}

std::vector<LocalProfile> coherent_profiles(Conn conn) {
    std::vector<LocalProfile> out;
    for (const LocalProfile& p : all_constrained_profiles()) {
        bool c = false, nc = false;
        switch (conn) {
            case Conn::And: c = p.a && p.b, nc = p.na || p.nb; break;
            case Conn::Or: c = p.a || p.b, nc = p.na && p.nb; break;
            case Conn::Imp: c = !p.a || p.b, nc = p.a && p.nb; break;
            default: throw std::invalid_argument("binary connective expected");
        }
        if (p.c == c && p.nc == nc) out.push_back(p);
    }
    return out;
}

bool profile_satisfies(ClauseId clause, const LocalProfile& p, bool primed) {
    switch (clause) {
        case ClauseId::Vp3: return !(p.ca && p.a && p.cb && p.b) || p.cc;
        case ClauseId::Vp4: return !(p.ca && p.na) || p.cc;
        case ClauseId::Vp5: return !(p.cb && p.nb) || p.cc;
        case ClauseId::Vp6:
            if (!primed) return !(p.cc && p.a && p.b) || (p.ca && p.cb);
            return !(p.a && p.b && (!p.ca || !p.cb)) || !p.cc;
        case ClauseId::Vp7:
            if (!primed) return !(p.cc && (p.na || p.nb)) || ((p.ca && p.na) || (p.cb && p.nb));
            return !((p.na || p.nb) && (!p.ca || !p.na) && (!p.cb || !p.nb)) || !p.cc;
        case ClauseId::Vp8: return !(p.ca && p.a) || p.cc;
        case ClauseId::Vp9: return !(p.cb && p.b) || p.cc;
        case ClauseId::Vp10: return !(p.ca && p.na && p.cb && p.nb) || p.cc;
        case ClauseId::Vp11:
            if (!primed) return !(p.cc && (p.a || p.b)) || ((p.ca && p.a) || (p.cb && p.b));
            return !((p.a || p.b) && (!p.ca || !p.a) && (!p.cb || !p.b)) || !p.cc;
        case ClauseId::Vp12:
            if (!primed) return !(p.cc && !p.a && !p.b) || (p.ca && p.cb);
            return !(!p.a && !p.b && (!p.ca || !p.cb)) || !p.cc;
        case ClauseId::Vp13: return !(p.ca && p.na) || p.cc;
        case ClauseId::Vp14: return !(p.cb && p.b) || p.cc;
        case ClauseId::Vp15: return !(p.a && p.cb && p.nb) || p.cc;
        case ClauseId::Vp16:
            if (!primed) return !(p.cc && (!p.a || p.b)) || ((p.ca && p.na) || (p.cb && p.b));
            return !((!p.a || p.b) && (!p.ca || !p.na) && (!p.cb || !p.b)) || !p.cc;
        case ClauseId::Vp17:
            if (!primed) return !(p.cc && p.a && p.nb) || p.cb;
            return !(p.a && p.nb && !p.cb) || !p.cc;
        case ClauseId::V9:
            return p.cc == ((p.a && p.ca && p.b && p.cb) || (p.na && p.ca) || (p.nb && p.cb));
        case ClauseId::V10:
            return p.cc == ((p.na && p.ca && p.nb && p.cb) || (p.a && p.ca) || (p.b && p.cb));
        case ClauseId::V11:
            return p.cc == ((p.a && p.nb && p.cb) || (p.na && p.ca) || (p.b && p.cb));
        default: throw std::invalid_argument("clause has no profile-level form");
    }
}

// --- translations -------------------------------------------------------

Value6 TripleValuation::at(const Formula& f) const {
    for (std::size_t i = 0; i < domain.size(); ++i)
        if (domain[i] == f) return values[i];
    throw std::out_of_range("formula '" + to_string(f) + "' outside the valuation domain");
}

Bivaluation from_valuation(const ClosureValuation& v) {
    Bivaluation rho(v.domain());
    for (std::size_t i = 0; i < v.domain().size(); ++i)
        rho.set(v.domain()[i], is_designated(v.at_index(i)));
    return rho;
}

Bivaluation from_valuation(const TripleValuation& v) {
    Bivaluation rho(v.domain);
    for (std::size_t i = 0; i < v.domain.size(); ++i)
        rho.set(v.domain[i], is_designated(v.values[i]));
    return rho;
}

TripleValuation to_valuation(const Bivaluation& rho, const std::vector<Formula>& base,
                             TranslationTarget target) {
    TripleValuation out;
    out.domain = base;
    out.values.reserve(base.size());
    for (const Formula& f : base) {
        const Formula nf = Formula::neg(f), cf = Formula::circ(f);
        if (!rho.contains(f) || !rho.contains(nf) || !rho.contains(cf))
            throw std::invalid_argument("domain of the bivaluation lacks the companions of '" +
                                        to_string(f) + "'");
        const Snapshot z{rho.value(f), rho.value(nf), rho.value(cf)};
        auto v = value6_of(z);
        if (!v)
            throw ClauseViolationError("triple at '" + to_string(f) +
                                       "' is not a snapshot (v8 fails)");
        out.values.push_back(*v);
    }

    // legality for the chosen semantics
    auto lookup = [&](const Formula& f) { return out.at(f); };
    for (const Formula& f : base) {
        if (f.is_leaf()) {
            if (f.conn() == Conn::Top && lookup(f) != Value6::T)
                throw ClauseViolationError("T must evaluate to T");
            if (f.conn() == Conn::Bot && lookup(f) != Value6::F)
                throw ClauseViolationError("F must evaluate to F");
            continue;
        }
        const Value6 got = lookup(f);
        if (target == TranslationTarget::LetKNmatrix) {
            const MultiOpTable& t = nmatrix_table(Logic::LetK);
            ValueSet allowed;
            switch (f.conn()) {
                case Conn::Not: allowed = t.neg[static_cast<int>(lookup(f.child()))]; break;
                case Conn::Circ: allowed = t.circ[static_cast<int>(lookup(f.child()))]; break;
                case Conn::And:
                    allowed = t.conj[static_cast<int>(lookup(f.lhs()))]
                                    [static_cast<int>(lookup(f.rhs()))];
                    break;
                case Conn::Or:
                    allowed = t.disj[static_cast<int>(lookup(f.lhs()))]
                                    [static_cast<int>(lookup(f.rhs()))];
                    break;
                case Conn::Imp:
                    allowed = t.imp[static_cast<int>(lookup(f.lhs()))]
                                   [static_cast<int>(lookup(f.rhs()))];
                    break;
                default: break;
            }
            if (!allowed.contains(got))
                throw ClauseViolationError("value at '" + to_string(f) +
                                           "' is outside the multioperation output " +
                                           allowed.to_string());
        } else {
            const OpTable& t = matrix6_table(Logic::LetKPlus);
            Value6 want = got;
            switch (f.conn()) {
                case Conn::Not: want = t.neg[static_cast<int>(lookup(f.child()))]; break;
                case Conn::Circ: want = t.circ[static_cast<int>(lookup(f.child()))]; break;
                case Conn::And:
                    want = t.conj[static_cast<int>(lookup(f.lhs()))]
                                 [static_cast<int>(lookup(f.rhs()))];
                    break;
                case Conn::Or:
                    want = t.disj[static_cast<int>(lookup(f.lhs()))]
                                 [static_cast<int>(lookup(f.rhs()))];
                    break;
                case Conn::Imp:
                    want = t.imp[static_cast<int>(lookup(f.lhs()))]
                                [static_cast<int>(lookup(f.rhs()))];
                    break;
                default: break;
            }
            if (want != got)
                throw ClauseViolationError("value at '" + to_string(f) + "' is " +
                                           std::string(to_string(got)) + " but the tables give " +
                                           to_string(want));
        }
    }
    return out;
}

}  // namespace letlab
