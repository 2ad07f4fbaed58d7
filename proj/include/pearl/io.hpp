#pragma once

// Line-oriented text formats for complexes, algebras, module data and
// disk-count functions, with canonical emission: generators sorted by
// (degree descending, name), terms by (target, exponent).  Parsing is
// strict -- duplicate generators, duplicate terms and non-integer degrees
// are line-numbered errors, never silent cancellations.

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "pearl/pearl_complex.hpp"
#include "pearl/quantum_algebra.hpp"
#include "pearl/torus.hpp"

namespace pearl::io {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int ln, const std::string& msg)
        : std::runtime_error("line " + std::to_string(ln) + ": " + msg), line(ln) {}
};

namespace detail {

struct Lines {
    std::vector<std::pair<int, std::vector<std::string>>> rows;  // (line no, tokens)
    std::size_t pos = 0;

    explicit Lines(std::istream& in) {
        std::string raw;
        int ln = 0;
        while (std::getline(in, raw)) {
            ++ln;
            if (auto hash = raw.find('#'); hash != std::string::npos)
                raw.erase(hash);
            std::istringstream is(raw);
            std::vector<std::string> toks;
            std::string t;
            while (is >> t)
                toks.push_back(t);
            if (!toks.empty())
                rows.emplace_back(ln, std::move(toks));
        }
    }

    bool done() const { return pos >= rows.size(); }
    const std::vector<std::string>& peek() const { return rows[pos].second; }
    int line() const { return pos < rows.size() ? rows[pos].first : -1; }
    std::vector<std::string> next() { return rows[pos++].second; }
};

inline int to_int(const std::string& s, int line, const std::string& what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, what + " must be an integer, got '" + s + "'");
    }
}

inline long long to_ll(const std::string& s, int line, const std::string& what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, what + " must be an integer, got '" + s + "'");
    }
}

// exponent from a token "t^k", k >= 1
inline int t_power(const std::string& tok, int line) {
    if (tok.rfind("t^", 0) != 0)
        throw ParseError(line, "expected t^<k>, got '" + tok + "'");
    int k = to_int(tok.substr(2), line, "t exponent");
    if (k < 1)
        throw ParseError(line, "t exponent must be >= 1 (t^0 terms are written bare)");
    return k;
}

// canonical generator order: degree descending, then name
inline std::vector<std::size_t> canonical_order(const std::vector<Generator>& gens) {
    std::vector<std::size_t> idx(gens.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (gens[a].degree != gens[b].degree)
            return gens[a].degree > gens[b].degree;
        return gens[a].id < gens[b].id;
    });
    return idx;
}

}  // namespace detail

struct ParsedComplex {
    PearlComplex complex;
    bool minimal = false;
};

inline ParsedComplex parse_complex(std::istream& in) {
    detail::Lines lines(in);
    if (lines.done() || lines.peek() != std::vector<std::string>{"pearl-complex"})
        throw ParseError(lines.line(), "expected 'pearl-complex' header");
    lines.next();
    std::string name;
    std::optional<int> maslov, top;
    bool minimal = false;
    std::vector<Generator> gens;
    std::vector<std::pair<int, std::vector<std::string>>> dlines;
    while (!lines.done()) {
        int ln = lines.line();
        auto toks = lines.next();
        const std::string& key = toks[0];
        if (key == "end")
            break;
        if (key == "name" && toks.size() == 2) {
            name = toks[1];
        } else if (key == "maslov" && toks.size() == 2) {
            maslov = detail::to_int(toks[1], ln, "maslov");
        } else if (key == "top" && toks.size() == 2) {
            top = detail::to_int(toks[1], ln, "top");
        } else if (key == "minimal" && toks.size() == 2 && toks[1] == "true") {
            minimal = true;
        } else if (key == "gen" && toks.size() == 3) {
            Generator g{toks[1], detail::to_int(toks[2], ln, "degree")};
            for (auto& old : gens)
                if (old.id == g.id)
                    throw ParseError(ln, "duplicate generator id '" + g.id + "'");
            gens.push_back(g);
        } else if (key == "d") {
            dlines.emplace_back(ln, toks);
        } else {
            throw ParseError(ln, "unrecognized line starting with '" + key + "'");
        }
    }
    if (!maslov)
        throw ParseError(-1, "missing 'maslov' line");
    PearlComplex c(name, GradingContext(*maslov), gens, top);
    for (auto& [ln, toks] : dlines) {
        // d <id> = <term> { + <term> },  term := <id> | <id> t^<k>
        if (toks.size() < 4 || toks[2] != "=")
            throw ParseError(ln, "malformed differential line");
        int src = -1;
        try {
            src = c.index_of(toks[1]);
        } catch (const std::exception&) {
            throw ParseError(ln, "unknown generator '" + toks[1] + "'");
        }
        std::size_t i = 3;
        std::set<std::pair<int, int>> seen;
        while (i < toks.size()) {
            int tgt = -1;
            try {
                tgt = c.index_of(toks[i]);
            } catch (const std::exception&) {
                throw ParseError(ln, "unknown generator '" + toks[i] + "'");
            }
            ++i;
            int exp = 0;
            if (i < toks.size() && toks[i] != "+") {
                exp = detail::t_power(toks[i], ln);
                ++i;
            }
            if (!seen.insert({tgt, exp}).second)
                throw ParseError(ln, "duplicate differential term '" + c.gens()[tgt].id + "'");
            c.set_del(exp, tgt, src, Gf2::one());
            if (i < toks.size()) {
                if (toks[i] != "+")
                    throw ParseError(ln, "expected '+' between terms");
                ++i;
                if (i == toks.size())
                    throw ParseError(ln, "trailing '+'");
            }
        }
    }
    return {std::move(c), minimal};
}

inline std::string emit_complex(const PearlComplex& c, bool minimal = false) {
    std::ostringstream os;
    os << "pearl-complex\n";
    if (!c.name().empty())
        os << "name " << c.name() << "\n";
    os << "maslov " << c.maslov() << "\n";
    if (c.declared_top())
        os << "top " << *c.declared_top() << "\n";
    if (minimal)
        os << "minimal true\n";
    auto order = detail::canonical_order(c.gens());
    std::vector<std::size_t> rank(c.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        rank[order[i]] = i;
    for (auto g : order)
        os << "gen " << c.gens()[g].id << " " << c.gens()[g].degree << "\n";
    for (auto g : order) {
        auto b = c.boundary(static_cast<int>(g));
        if (b.empty())
            continue;
        std::vector<std::pair<int, int>> terms(b.terms.begin(), b.terms.end());
        std::sort(terms.begin(), terms.end(), [&](auto& x, auto& y) {
            if (rank[x.first] != rank[y.first])
                return rank[x.first] < rank[y.first];
            return x.second < y.second;
        });
        os << "d " << c.gens()[g].id << " =";
        bool first = true;
        for (auto& [tgt, e] : terms) {
            os << (first ? " " : " + ") << c.gens()[tgt].id;
            if (e > 0)
                os << " t^" << e;
            first = false;
        }
        os << "\n";
    }
    os << "end\n";
    return os.str();
}

// ------------------------------------------------------------------ algebra

using AlgebraAny = std::variant<QuantumAlgebra<Gf2>, QuantumAlgebra<Rat>>;

namespace detail {

template <class F>
FormalSum<F> parse_sum(const QuantumAlgebra<F>& a, const std::vector<std::string>& toks,
                       std::size_t from, int ln) {
    FormalSum<F> out;
    if (from < toks.size() && toks[from] == "0") {
        if (from + 1 != toks.size())
            throw ParseError(ln, "nothing may follow a literal 0");
        return out;
    }
    std::set<std::pair<int, int>> seen;
    std::size_t i = from;
    while (i < toks.size()) {
        std::string tok = toks[i];
        long long coeff = 1;
        if (auto star = tok.find('*'); star != std::string::npos) {
            coeff = to_ll(tok.substr(0, star), ln, "coefficient");
            tok = tok.substr(star + 1);
        }
        int k = -1;
        try {
            k = a.index_of(tok);
        } catch (const std::exception&) {
            throw ParseError(ln, "unknown basis element '" + tok + "'");
        }
        ++i;
        int e = 0;
        if (i < toks.size() && toks[i] != "+") {
            e = t_power(toks[i], ln);
            ++i;
        }
        if (!seen.insert({k, e}).second)
            throw ParseError(ln, "duplicate term '" + tok + "'");
        F c = F::from_int(coeff);
        if (c.is_zero())
            throw ParseError(ln, "coefficient of '" + tok + "' vanishes in this field");
        out.add(c, k, e);
        if (i < toks.size()) {
            if (toks[i] != "+")
                throw ParseError(ln, "expected '+' between terms");
            ++i;
            if (i == toks.size())
                throw ParseError(ln, "trailing '+'");
        }
    }
    return out;
}

template <class F>
QuantumAlgebra<F> build_algebra(const std::string& name, int maslov, int top,
                                const std::vector<Generator>& basis, const std::string& unit,
                                const std::vector<std::pair<int, std::vector<std::string>>>& mul_lines,
                                const std::vector<std::pair<int, std::vector<std::string>>>& aug_lines) {
    QuantumAlgebra<F> a(name, GradingContext(maslov), basis, top, unit);
    // unit laws are filled in by default and may be overwritten explicitly
    for (std::size_t x = 0; x < basis.size(); ++x) {
        a.mul[a.unit][x] = FormalSum<F>::basis(static_cast<int>(x));
        a.mul[x][a.unit] = FormalSum<F>::basis(static_cast<int>(x));
    }
    std::set<std::pair<int, int>> seen;
    for (auto& [ln, toks] : mul_lines) {
        if (toks.size() < 5 || toks[3] != "=")
            throw ParseError(ln, "malformed mul line");
        int i = a.index_of(toks[1]);
        int j = a.index_of(toks[2]);
        if (!seen.insert({i, j}).second)
            throw ParseError(ln, "duplicate mul entry");
        a.mul[i][j] = parse_sum(a, toks, 4, ln);
    }
    for (auto& [ln, toks] : aug_lines) {
        if (toks.size() != 4 || toks[2] != "=")
            throw ParseError(ln, "malformed aug line");
        a.aug[a.index_of(toks[1])] = F::from_int(to_ll(toks[3], ln, "augmentation value"));
    }
    return a;
}

// shared element-list parser for the algebra block
struct AlgebraRaw {
    std::string name;
    std::string field;
    std::optional<int> maslov, top;
    std::vector<Generator> basis;
    std::string unit;
    std::vector<std::pair<int, std::vector<std::string>>> mul_lines, aug_lines;
};

inline AlgebraRaw parse_algebra_block(Lines& lines) {
    if (lines.done() || lines.peek() != std::vector<std::string>{"algebra"})
        throw ParseError(lines.line(), "expected 'algebra' header");
    lines.next();
    AlgebraRaw raw;
    while (!lines.done()) {
        int ln = lines.line();
        auto toks = lines.next();
        const std::string& key = toks[0];
        if (key == "end")
            return raw;
        if (key == "name" && toks.size() == 2) {
            raw.name = toks[1];
        } else if (key == "field" && toks.size() == 2) {
            if (toks[1] != "gf2" && toks[1] != "rational")
                throw ParseError(ln, "field must be gf2 or rational");
            raw.field = toks[1];
        } else if (key == "maslov" && toks.size() == 2) {
            raw.maslov = to_int(toks[1], ln, "maslov");
        } else if (key == "top" && toks.size() == 2) {
            raw.top = to_int(toks[1], ln, "top");
        } else if (key == "basis" && toks.size() == 3) {
            Generator g{toks[1], to_int(toks[2], ln, "degree")};
            for (auto& old : raw.basis)
                if (old.id == g.id)
                    throw ParseError(ln, "duplicate basis id '" + g.id + "'");
            raw.basis.push_back(g);
        } else if (key == "unit" && toks.size() == 2) {
            raw.unit = toks[1];
        } else if (key == "mul") {
            raw.mul_lines.emplace_back(ln, toks);
        } else if (key == "aug") {
            raw.aug_lines.emplace_back(ln, toks);
        } else {
            throw ParseError(ln, "unrecognized line starting with '" + key + "'");
        }
    }
    throw ParseError(-1, "algebra block missing 'end'");
}

inline AlgebraAny realize(const AlgebraRaw& raw) {
    if (raw.field.empty())
        throw ParseError(-1, "missing 'field' line");
    if (!raw.maslov)
        throw ParseError(-1, "missing 'maslov' line");
    if (!raw.top)
        throw ParseError(-1, "missing 'top' line");
    if (raw.unit.empty())
        throw ParseError(-1, "missing 'unit' line");
    if (raw.field == "gf2")
        return build_algebra<Gf2>(raw.name, *raw.maslov, *raw.top, raw.basis, raw.unit,
                                  raw.mul_lines, raw.aug_lines);
    return build_algebra<Rat>(raw.name, *raw.maslov, *raw.top, raw.basis, raw.unit,
                              raw.mul_lines, raw.aug_lines);
}

}  // namespace detail

inline AlgebraAny parse_algebra(std::istream& in) {
    detail::Lines lines(in);
    auto raw = detail::parse_algebra_block(lines);
    return detail::realize(raw);
}

namespace detail {

template <class F>
std::string render_sum_sorted(const QuantumAlgebra<F>& a, const FormalSum<F>& s,
                              const std::vector<std::size_t>& rank) {
    if (s.is_zero())
        return "0";
    auto terms = s.terms();
    std::sort(terms.begin(), terms.end(), [&](const Term<F>& x, const Term<F>& y) {
        if (rank[x.k] != rank[y.k])
            return rank[x.k] < rank[y.k];
        return x.e < y.e;
    });
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms) {
        if (!first)
            os << " + ";
        first = false;
        if (!t.c.is_one())
            os << t.c.str() << "*";
        os << a.basis[t.k].id;
        if (t.e > 0)
            os << " t^" << t.e;
    }
    return os.str();
}

template <class F>
void emit_algebra_body(std::ostringstream& os, const QuantumAlgebra<F>& a) {
    os << "algebra\n";
    if (!a.name.empty())
        os << "name " << a.name << "\n";
    os << "field " << (F::tag() == BaseField::GF2 ? "gf2" : "rational") << "\n";
    os << "maslov " << a.ctx.maslov << "\n";
    os << "top " << a.top << "\n";
    auto order = canonical_order(a.basis);
    std::vector<std::size_t> rank(a.basis.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        rank[order[i]] = i;
    for (auto g : order)
        os << "basis " << a.basis[g].id << " " << a.basis[g].degree << "\n";
    os << "unit " << a.basis[a.unit].id << "\n";
    for (auto i : order)
        for (auto j : order)
            os << "mul " << a.basis[i].id << " " << a.basis[j].id << " = "
               << render_sum_sorted(a, a.mul[i][j], rank) << "\n";
    for (auto g : order) {
        auto it = a.aug.find(static_cast<int>(g));
        if (it != a.aug.end() && !it->second.is_zero())
            os << "aug " << a.basis[g].id << " = " << it->second.str() << "\n";
    }
    os << "end\n";
}

}  // namespace detail

template <class F>
std::string emit_algebra(const QuantumAlgebra<F>& a) {
    std::ostringstream os;
    detail::emit_algebra_body(os, a);
    return os.str();
}

inline std::string emit_algebra(const AlgebraAny& a) {
    return std::visit([](const auto& x) { return emit_algebra(x); }, a);
}

// ------------------------------------------------------------ module-action

using ModuleAny = std::variant<ModuleAction<Gf2>, ModuleAction<Rat>>;

namespace detail {

template <class F>
ModuleAction<F> build_module(const std::string&, QuantumAlgebra<F> ambient,
                             QuantumAlgebra<F> lagr,
                             const std::vector<std::pair<int, std::vector<std::string>>>& act_lines,
                             const std::vector<std::pair<int, std::vector<std::string>>>& incl_lines,
                             const std::vector<std::pair<int, std::vector<std::string>>>& pair_lines) {
    ModuleAction<F> m;
    m.ambient = std::move(ambient);
    m.lagr = std::move(lagr);
    m.init_act();
    for (std::size_t x = 0; x < m.lagr.basis.size(); ++x)
        m.act[m.ambient.unit][x] = FormalSum<F>::basis(static_cast<int>(x));
    std::set<std::pair<int, int>> seen;
    for (auto& [ln, toks] : act_lines) {
        if (toks.size() < 5 || toks[3] != "=")
            throw ParseError(ln, "malformed act line");
        int a = m.ambient.index_of(toks[1]);
        int x = m.lagr.index_of(toks[2]);
        if (!seen.insert({a, x}).second)
            throw ParseError(ln, "duplicate act entry");
        m.act[a][x] = parse_sum(m.lagr, toks, 4, ln);
    }
    for (auto& [ln, toks] : incl_lines) {
        if (toks.size() < 4 || toks[2] != "=")
            throw ParseError(ln, "malformed incl line");
        int x = m.lagr.index_of(toks[1]);
        if (m.incl.count(x))
            throw ParseError(ln, "duplicate incl entry");
        m.incl[x] = parse_sum(m.ambient, toks, 3, ln);
    }
    if (!pair_lines.empty()) {
        Mat<F> p(m.ambient.basis.size(), m.ambient.basis.size());
        for (auto& [ln, toks] : pair_lines) {
            if (toks.size() != 5 || toks[3] != "=")
                throw ParseError(ln, "malformed pair line");
            int a = m.ambient.index_of(toks[1]);
            int b = m.ambient.index_of(toks[2]);
            p.at(a, b) = F::from_int(to_ll(toks[4], ln, "pairing value"));
        }
        m.pairing = p;
    }
    return m;
}

}  // namespace detail

inline ModuleAny parse_module(std::istream& in) {
    detail::Lines lines(in);
    if (lines.done() || lines.peek() != std::vector<std::string>{"module-action"})
        throw ParseError(lines.line(), "expected 'module-action' header");
    lines.next();
    std::string name;
    std::optional<detail::AlgebraRaw> ambient, lagr;
    std::vector<std::pair<int, std::vector<std::string>>> act_lines, incl_lines, pair_lines;
    while (!lines.done()) {
        int ln = lines.line();
        auto toks = lines.next();
        const std::string& key = toks[0];
        if (key == "end")
            break;
        if (key == "name" && toks.size() == 2) {
            name = toks[1];
        } else if (key == "ambient" && toks.size() == 1) {
            ambient = detail::parse_algebra_block(lines);
        } else if (key == "lagrangian" && toks.size() == 1) {
            lagr = detail::parse_algebra_block(lines);
        } else if (key == "act") {
            act_lines.emplace_back(ln, toks);
        } else if (key == "incl") {
            incl_lines.emplace_back(ln, toks);
        } else if (key == "pair") {
            pair_lines.emplace_back(ln, toks);
        } else {
            throw ParseError(ln, "unrecognized line starting with '" + key + "'");
        }
    }
    if (!ambient || !lagr)
        throw ParseError(-1, "module-action needs ambient and lagrangian blocks");
    if (ambient->field != lagr->field)
        throw ParseError(-1, "ambient and lagrangian fields differ");
    auto amb = detail::realize(*ambient);
    auto lag = detail::realize(*lagr);
    if (ambient->field == "gf2")
        return detail::build_module<Gf2>(name, std::get<QuantumAlgebra<Gf2>>(amb),
                                         std::get<QuantumAlgebra<Gf2>>(lag), act_lines,
                                         incl_lines, pair_lines);
    return detail::build_module<Rat>(name, std::get<QuantumAlgebra<Rat>>(amb),
                                     std::get<QuantumAlgebra<Rat>>(lag), act_lines, incl_lines,
                                     pair_lines);
}

template <class F>
std::string emit_module(const ModuleAction<F>& m, const std::string& name = "") {
    std::ostringstream os;
    os << "module-action\n";
    if (!name.empty())
        os << "name " << name << "\n";
    os << "ambient\n";
    detail::emit_algebra_body(os, m.ambient);
    os << "lagrangian\n";
    detail::emit_algebra_body(os, m.lagr);
    auto aorder = detail::canonical_order(m.ambient.basis);
    auto lorder = detail::canonical_order(m.lagr.basis);
    std::vector<std::size_t> lrank(m.lagr.basis.size());
    for (std::size_t i = 0; i < lorder.size(); ++i)
        lrank[lorder[i]] = i;
    std::vector<std::size_t> arank(m.ambient.basis.size());
    for (std::size_t i = 0; i < aorder.size(); ++i)
        arank[aorder[i]] = i;
    for (auto a : aorder)
        for (auto x : lorder)
            os << "act " << m.ambient.basis[a].id << " " << m.lagr.basis[x].id << " = "
               << detail::render_sum_sorted(m.lagr, m.act[a][x], lrank) << "\n";
    for (auto x : lorder) {
        auto it = m.incl.find(static_cast<int>(x));
        if (it != m.incl.end())
            os << "incl " << m.lagr.basis[x].id << " = "
               << detail::render_sum_sorted(m.ambient, it->second, arank) << "\n";
    }
    if (m.pairing)
        for (auto a : aorder)
            for (auto b : aorder)
                if (!m.pairing->at(a, b).is_zero())
                    os << "pair " << m.ambient.basis[a].id << " " << m.ambient.basis[b].id
                       << " = " << m.pairing->at(a, b).str() << "\n";
    os << "end\n";
    return os.str();
}

inline std::string emit_module(const ModuleAny& m, const std::string& name = "") {
    return std::visit([&](const auto& x) { return emit_module(x, name); }, m);
}

// --------------------------------------------------------------------- nu

struct ParsedNu {
    NuFunction nu;
    std::string name;
};

inline ParsedNu parse_nu(std::istream& in) {
    detail::Lines lines(in);
    if (lines.done() || lines.peek() != std::vector<std::string>{"nu"})
        throw ParseError(lines.line(), "expected 'nu' header");
    lines.next();
    ParsedNu out;
    while (!lines.done()) {
        int ln = lines.line();
        auto toks = lines.next();
        if (toks[0] == "end")
            return out;
        if (toks[0] == "name" && toks.size() == 2) {
            out.name = toks[1];
        } else if (toks[0] == "v" && toks.size() == 3) {
            std::pair<int, int> kl{detail::to_int(toks[1], ln, "k"),
                                   detail::to_int(toks[2], ln, "l")};
            if (!out.nu.support.insert(kl).second)
                throw ParseError(ln, "duplicate nu entry");
        } else {
            throw ParseError(ln, "unrecognized line starting with '" + toks[0] + "'");
        }
    }
    throw ParseError(-1, "nu block missing 'end'");
}

inline std::string emit_nu(const NuFunction& nu, const std::string& name = "") {
    std::ostringstream os;
    os << "nu\n";
    if (!name.empty())
        os << "name " << name << "\n";
    for (auto& [k, l] : nu.support)
        os << "v " << k << " " << l << "\n";
    os << "end\n";
    return os.str();
}

// -------------------------------------------------------------- points etc.

inline TorusPoint parse_point(const std::string& s, int line = -1) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw ParseError(line, "point must be written x,y");
    auto rational = [&](const std::string& part) {
        auto slash = part.find('/');
        try {
            if (slash == std::string::npos)
                return Rational(boost::multiprecision::cpp_int(part));
            return Rational(boost::multiprecision::cpp_int(part.substr(0, slash)),
                            boost::multiprecision::cpp_int(part.substr(slash + 1)));
        } catch (const std::exception&) {
            throw ParseError(line, "malformed rational '" + part + "'");
        }
    };
    return {rational(s.substr(0, comma)), rational(s.substr(comma + 1))};
}

// element expression in the aterm syntax, e.g. "p + 2*h t^1"
template <class F>
FormalSum<F> parse_element(const QuantumAlgebra<F>& a, const std::string& text) {
    std::istringstream is(text);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t)
        toks.push_back(t);
    return detail::parse_sum(a, toks, 0, -1);
}

}  // namespace pearl::io
