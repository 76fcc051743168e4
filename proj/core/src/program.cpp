#include "dlgbn/program.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace dlgbn {

namespace {

bool is_ident_start(char c) { return std::isalnum(static_cast<unsigned char>(c)); }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool try_consume(std::string_view tok) {
        skip_ws();
        if (text_.substr(pos_).starts_with(tok)) {
            for (std::size_t i = 0; i < tok.size(); ++i) advance();
            return true;
        }
        return false;
    }

    void expect(std::string_view tok, const std::string& what) {
        if (!try_consume(tok)) fail("expected " + what);
    }

    std::string ident() {
        skip_ws();
        if (pos_ >= text_.size() || !is_ident_start(text_[pos_]))
            fail("expected identifier");
        std::string out;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
            out += text_[pos_];
            advance();
        }
        return out;
    }

    // "not" only counts as the negation keyword when followed by a break.
    bool try_keyword_not() {
        skip_ws();
        if (!text_.substr(pos_).starts_with("not")) return false;
        std::size_t after = pos_ + 3;
        if (after < text_.size() && is_ident_char(text_[after])) return false;
        for (int i = 0; i < 3; ++i) advance();
        return true;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

    int line() const { return line_; }
    int col() const { return col_; }

private:
    void advance() {
        if (pos_ < text_.size()) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

Term parse_term(Lexer& lx) {
    int line = lx.line(), col = lx.col();
    std::string name = lx.ident();
    lx.skip_ws();
    if (lx.peek() == '(')
        throw ParseError("function symbol '" + name + "' is not allowed", line, col);
    Term t;
    t.name = std::move(name);
    t.kind = std::isupper(static_cast<unsigned char>(t.name[0])) ? Term::Kind::Variable
                                                                 : Term::Kind::Constant;
    return t;
}

Atom parse_atom(Lexer& lx) {
    int line = lx.line(), col = lx.col();
    Atom a;
    a.predicate = lx.ident();
    if (std::isupper(static_cast<unsigned char>(a.predicate[0])))
        throw ParseError("variable '" + a.predicate + "' cannot be used as a predicate", line, col);
    if (a.predicate == "u" || a.predicate == "not")
        throw ParseError("'" + a.predicate + "' is a reserved identifier", line, col);
    if (lx.try_consume("(")) {
        a.args.push_back(parse_term(lx));
        while (lx.try_consume(",")) a.args.push_back(parse_term(lx));
        lx.expect(")", "')'");
    }
    return a;
}

}  // namespace

bool Atom::is_ground() const {
    return std::all_of(args.begin(), args.end(),
                       [](const Term& t) { return t.kind == Term::Kind::Constant; });
}

std::string GroundAtom::text() const {
    if (args.empty()) return predicate;
    std::string out = predicate + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out += ",";
        out += args[i];
    }
    out += ")";
    return out;
}

Program parse(std::string_view text) {
    Lexer lx(text);
    Program prog;
    std::map<std::string, std::size_t> arity;
    auto check_arity = [&](const Atom& a, int line, int col) {
        auto [it, inserted] = arity.emplace(a.predicate, a.args.size());
        if (!inserted && it->second != a.args.size())
            throw ParseError("predicate '" + a.predicate + "' used with arities " +
                                 std::to_string(it->second) + " and " +
                                 std::to_string(a.args.size()),
                             line, col);
    };
    while (!lx.eof()) {
        int line = lx.line(), col = lx.col();
        Rule r;
        r.head = parse_atom(lx);
        check_arity(r.head, line, col);
        if (lx.try_consume(":-")) {
            do {
                int lline = lx.line(), lcol = lx.col();
                bool neg = lx.try_keyword_not();
                Atom a = parse_atom(lx);
                check_arity(a, lline, lcol);
                (neg ? r.neg_body : r.pos_body).push_back(std::move(a));
            } while (lx.try_consume(","));
        }
        lx.expect(".", "'.' at end of rule");
        prog.rules.push_back(std::move(r));
    }
    return prog;
}

GroundProgram::GroundProgram(std::vector<GroundAtom> herbrand_base,
                             std::vector<std::string> universe, std::vector<GroundRule> rules)
    : atoms_(std::move(herbrand_base)), universe_(std::move(universe)), rules_(std::move(rules)) {
    for (GroundRule& r : rules_) {
        std::sort(r.pos_body.begin(), r.pos_body.end());
        r.pos_body.erase(std::unique(r.pos_body.begin(), r.pos_body.end()), r.pos_body.end());
        std::sort(r.neg_body.begin(), r.neg_body.end());
        r.neg_body.erase(std::unique(r.neg_body.begin(), r.neg_body.end()), r.neg_body.end());
    }
    std::sort(rules_.begin(), rules_.end());
    rules_.erase(std::unique(rules_.begin(), rules_.end()), rules_.end());
    check_invariants();
}

void GroundProgram::check_invariants() const {
    if (!std::is_sorted(atoms_.begin(), atoms_.end()))
        throw std::logic_error("herbrand base not in canonical order");
    for (const GroundRule& r : rules_) {
        auto in_base = [&](AtomId id) { return id < atoms_.size(); };
        if (!in_base(r.head)) throw std::logic_error("rule head outside the herbrand base");
        for (AtomId a : r.pos_body)
            if (!in_base(a)) throw std::logic_error("body atom outside the herbrand base");
        for (AtomId a : r.neg_body)
            if (!in_base(a)) throw std::logic_error("body atom outside the herbrand base");
    }
}

std::vector<std::string> GroundProgram::atom_names() const {
    std::vector<std::string> names;
    names.reserve(atoms_.size());
    for (const GroundAtom& a : atoms_) names.push_back(a.text());
    return names;
}

bool GroundProgram::uni_rule() const {
    std::vector<int> heads(atoms_.size(), 0);
    for (const GroundRule& r : rules_)
        if (++heads[r.head] > 1) return false;
    return true;
}

bool GroundProgram::negative() const {
    return std::all_of(rules_.begin(), rules_.end(),
                       [](const GroundRule& r) { return r.pos_body.empty(); });
}

namespace {

GroundAtom substitute(const Atom& a, const std::map<std::string, std::string>& binding) {
    GroundAtom g;
    g.predicate = a.predicate;
    for (const Term& t : a.args) {
        if (t.kind == Term::Kind::Constant)
            g.args.push_back(t.name);
        else
            g.args.push_back(binding.at(t.name));
    }
    return g;
}

struct GroundedRule {
    GroundAtom head;
    std::set<GroundAtom> pos, neg;
    bool operator<(const GroundedRule& o) const {
        return std::tie(head, pos, neg) < std::tie(o.head, o.pos, o.neg);
    }
};

}  // namespace

GroundResult ground(const Program& p) {
    std::set<std::string> universe;
    std::set<std::string> variables_seen;
    for (const Rule& r : p.rules) {
        auto scan = [&](const Atom& a) {
            for (const Term& t : a.args)
                (t.kind == Term::Kind::Constant ? universe : variables_seen).insert(t.name);
        };
        scan(r.head);
        for (const Atom& a : r.pos_body) scan(a);
        for (const Atom& a : r.neg_body) scan(a);
    }
    if (!variables_seen.empty() && universe.empty())
        throw GroundingError("variables occur but the herbrand universe is empty");

    std::vector<std::string> consts(universe.begin(), universe.end());
    GroundResult out;

    std::set<GroundedRule> grounded;
    for (const Rule& r : p.rules) {
        std::set<std::string> vars, pos_vars;
        auto collect = [](const Atom& a, std::set<std::string>& into) {
            for (const Term& t : a.args)
                if (t.kind == Term::Kind::Variable) into.insert(t.name);
        };
        collect(r.head, vars);
        for (const Atom& a : r.pos_body) {
            collect(a, vars);
            collect(a, pos_vars);
        }
        for (const Atom& a : r.neg_body) collect(a, vars);
        for (const std::string& v : vars) {
            if (!pos_vars.count(v)) {
                out.warnings.push_back("unsafe rule: variable " + v +
                                       " does not occur in a positive body atom");
                break;
            }
        }

        std::vector<std::string> var_list(vars.begin(), vars.end());
        std::vector<std::size_t> idx(var_list.size(), 0);
        while (true) {
            std::map<std::string, std::string> binding;
            for (std::size_t i = 0; i < var_list.size(); ++i) binding[var_list[i]] = consts[idx[i]];
            GroundedRule gr;
            gr.head = substitute(r.head, binding);
            for (const Atom& a : r.pos_body) gr.pos.insert(substitute(a, binding));
            for (const Atom& a : r.neg_body) gr.neg.insert(substitute(a, binding));
            grounded.insert(std::move(gr));
            // next substitution
            std::size_t i = 0;
            for (; i < idx.size(); ++i) {
                if (++idx[i] < consts.size()) break;
                idx[i] = 0;
            }
            if (i == idx.size() && !var_list.empty()) break;
            if (var_list.empty()) break;
        }
    }

    std::set<GroundAtom> base_set;
    for (const GroundedRule& gr : grounded) {
        base_set.insert(gr.head);
        base_set.insert(gr.pos.begin(), gr.pos.end());
        base_set.insert(gr.neg.begin(), gr.neg.end());
    }
    std::vector<GroundAtom> base(base_set.begin(), base_set.end());
    std::map<GroundAtom, AtomId> id_of;
    for (AtomId i = 0; i < base.size(); ++i) id_of[base[i]] = i;

    std::vector<GroundRule> rules;
    rules.reserve(grounded.size());
    for (const GroundedRule& gr : grounded) {
        GroundRule r;
        r.head = id_of.at(gr.head);
        for (const GroundAtom& a : gr.pos) r.pos_body.push_back(id_of.at(a));
        for (const GroundAtom& a : gr.neg) r.neg_body.push_back(id_of.at(a));
        rules.push_back(std::move(r));
    }

    out.program = GroundProgram(std::move(base), std::move(consts), std::move(rules));
    return out;
}

GroundProgram parse_ground(std::string_view text) { return ground(parse(text)).program; }

SignedDigraph atom_dependency_graph(const GroundProgram& g) {
    SignedDigraph adg(g.atom_names());
    for (const GroundRule& r : g.rules()) {
        for (AtomId u : r.pos_body) adg.add_arc(u, r.head, Sign::Positive);
        for (AtomId u : r.neg_body) adg.add_arc(u, r.head, Sign::Negative);
    }
    return adg;
}

bool is_tight(const GroundProgram& g) {
    // cycle search restricted to positive arcs
    std::size_t n = g.atom_count();
    std::vector<std::vector<AtomId>> pos_adj(n);
    for (const GroundRule& r : g.rules())
        for (AtomId u : r.pos_body) pos_adj[u].push_back(r.head);
    std::vector<int> color(n, 0);  // 0 white, 1 on stack, 2 done
    std::vector<std::pair<AtomId, std::size_t>> stack;
    for (AtomId s = 0; s < n; ++s) {
        if (color[s] != 0) continue;
        stack.push_back({s, 0});
        color[s] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < pos_adj[v].size()) {
                AtomId w = pos_adj[v][next++];
                if (color[w] == 1) return false;
                if (color[w] == 0) {
                    color[w] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                color[v] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

std::string pretty_print(const GroundProgram& g) {
    std::ostringstream os;
    for (const GroundRule& r : g.rules()) {
        os << g.atom(r.head).text();
        if (!r.pos_body.empty() || !r.neg_body.empty()) {
            os << " :- ";
            bool first = true;
            for (AtomId a : r.pos_body) {
                if (!first) os << ", ";
                os << g.atom(a).text();
                first = false;
            }
            for (AtomId a : r.neg_body) {
                if (!first) os << ", ";
                os << "not " << g.atom(a).text();
                first = false;
            }
        }
        os << ".\n";
    }
    return os.str();
}

std::string atom_names_of(const GroundProgram& g, State s) {
    std::string out;
    for (std::size_t i = 0; i < g.atom_count(); ++i) {
        if (s >> i & 1u) {
            if (!out.empty()) out += ", ";
            out += g.atom(static_cast<AtomId>(i)).text();
        }
    }
    if (out.empty()) return "∅";
    return "{" + out + "}";
}

}  // namespace dlgbn
