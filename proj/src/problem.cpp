#include "trilie/problem.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <utility>
#include <variant>

namespace trilie {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

bool valid_ident(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

struct Loader {
    std::string basename;
    Problem p;
    std::set<std::string> param_set, all_basis;
    std::map<std::string, std::size_t> space_index, ext_index;
    bool header_seen = false;

    [[noreturn]] void fail(std::size_t ln, const std::string& msg) const {
        throw ProblemError(basename + ":" + std::to_string(ln) + ": " + msg);
    }

    void check_names(const ParamExpr& e, const std::set<std::string>& allowed,
                     std::size_t ln) const {
        if (e.kind == ParamExpr::Kind::param && allowed.find(e.name) == allowed.end())
            fail(ln, "unknown name '" + e.name + "'");
        if (e.lhs) check_names(*e.lhs, allowed, ln);
        if (e.rhs) check_names(*e.rhs, allowed, ln);
    }

    ExprPtr parse_checked(const std::string& text, const std::set<std::string>& allowed,
                          std::size_t ln) const {
        if (text.empty()) fail(ln, "missing expression");
        ExprPtr e;
        try {
            e = parse_expr(text);
        } catch (const std::invalid_argument& ex) {
            fail(ln, ex.what());
        }
        check_names(*e, allowed, ln);
        return e;
    }

    std::set<std::string> env_for(const SpaceDecl& sp) const {
        std::set<std::string> env = param_set;
        env.insert(sp.basis.begin(), sp.basis.end());
        return env;
    }

    SpaceDecl& named_space(const std::string& name, std::size_t ln) {
        const auto it = space_index.find(name);
        if (it == space_index.end()) fail(ln, "undeclared space '" + name + "'");
        return p.spaces[it->second];
    }

    ExtensionDecl& named_extension(const std::string& name, std::size_t ln) {
        const auto it = ext_index.find(name);
        if (it == ext_index.end()) fail(ln, "undeclared extension '" + name + "'");
        return p.extensions[it->second];
    }

    std::size_t basis_index(const SpaceDecl& sp, const std::string& name, std::size_t ln) const {
        for (std::size_t i = 0; i < sp.basis.size(); ++i)
            if (sp.basis[i] == name) return i;
        fail(ln, "'" + name + "' is not a basis vector of space '" + sp.name + "'");
    }

    std::vector<std::string> key_list(const std::string& tok, char open, char close,
                                      std::size_t ln) const {
        if (tok.size() < 2 || tok.front() != open || tok.back() != close)
            fail(ln, "malformed key '" + tok + "'");
        std::vector<std::string> parts;
        std::string cur;
        for (std::size_t i = 1; i + 1 < tok.size(); ++i) {
            if (tok[i] == ',') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += tok[i];
            }
        }
        parts.push_back(cur);
        for (const auto& part : parts)
            if (part.empty()) fail(ln, "malformed key '" + tok + "'");
        return parts;
    }

    void add_entry(std::map<std::size_t, ProblemEntry>& table, std::size_t key, ExprPtr expr,
                   std::size_t ln) const {
        if (table.count(key)) fail(ln, "duplicate entry");
        table[key] = ProblemEntry{std::move(expr), ln};
    }

    void handle(const std::string& raw, std::size_t ln) {
        const std::size_t first = raw.find_first_not_of(" \t");
        if (first == std::string::npos || raw[first] == '#') return;
        const auto toks = split_ws(raw);
        if (!header_seen) {
            if (toks.size() != 2 || toks[0] != "tlx") fail(ln, "expected header 'tlx 1'");
            if (toks[1] != "1") fail(ln, "unsupported format version '" + toks[1] + "'");
            header_seen = true;
            return;
        }
        const std::string& kw = toks[0];
        if (kw == "param") {
            for (std::size_t i = 1; i < toks.size(); ++i) {
                const std::string& name = toks[i];
                if (!valid_ident(name)) fail(ln, "invalid parameter name '" + name + "'");
                if (param_set.count(name)) fail(ln, "duplicate parameter '" + name + "'");
                if (all_basis.count(name))
                    fail(ln, "parameter '" + name + "' collides with a basis vector");
                param_set.insert(name);
                p.params.push_back(name);
            }
        } else if (kw == "guard") {
            const std::string text = trim(raw.substr(raw.find("guard", first) + 5));
            p.guards.emplace_back(text, parse_checked(text, param_set, ln));
        } else if (kw == "space") {
            if (toks.size() < 5 || toks[2] != "dim" || toks[4] != "basis")
                fail(ln, "expected 'space <name> dim <n> basis <names...>'");
            const std::string& name = toks[1];
            if (!valid_ident(name)) fail(ln, "invalid space name '" + name + "'");
            if (space_index.count(name)) fail(ln, "duplicate space '" + name + "'");
            std::size_t dim = 0;
            for (char c : toks[3]) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    fail(ln, "invalid dimension '" + toks[3] + "'");
                dim = dim * 10 + static_cast<std::size_t>(c - '0');
            }
            SpaceDecl sp;
            sp.name = name;
            sp.line = ln;
            for (std::size_t i = 5; i < toks.size(); ++i) {
                const std::string& b = toks[i];
                if (!valid_ident(b)) fail(ln, "invalid basis name '" + b + "'");
                if (param_set.count(b))
                    fail(ln, "basis vector '" + b + "' collides with a parameter");
                for (const auto& prev : sp.basis)
                    if (prev == b) fail(ln, "duplicate basis vector '" + b + "'");
                sp.basis.push_back(b);
            }
            if (sp.basis.size() != dim)
                fail(ln, "dimension is " + toks[3] + " but " +
                             std::to_string(sp.basis.size()) + " basis names are given");
            space_index[name] = p.spaces.size();
            all_basis.insert(sp.basis.begin(), sp.basis.end());
            p.spaces.push_back(std::move(sp));
        } else if (kw == "bracket") {
            const auto eq = raw.find('=');
            if (eq == std::string::npos) fail(ln, "missing '='");
            const auto lhs = split_ws(raw.substr(0, eq));
            if (lhs.size() != 3) fail(ln, "expected 'bracket <space> [keys] = <expr>'");
            SpaceDecl& sp = named_space(lhs[1], ln);
            const auto keys = key_list(lhs[2], '[', ']', ln);
            if (keys.size() != 2 && keys.size() != 3)
                fail(ln, "bracket keys must name 2 or 3 basis vectors");
            const int arity = static_cast<int>(keys.size());
            if (sp.arity == 0)
                sp.arity = arity;
            else if (sp.arity != arity)
                fail(ln, "mixed bracket arities in space '" + sp.name + "'");
            std::vector<std::size_t> idx;
            for (const auto& k : keys) idx.push_back(basis_index(sp, k, ln));
            std::size_t key = 0;
            if (arity == 3) {
                if (!(idx[0] < idx[1] && idx[1] < idx[2]))
                    fail(ln, "bracket keys must be strictly increasing (canonical triples)");
                key = triple_rank(sp.basis.size(), idx[0], idx[1], idx[2]);
            } else {
                key = idx[0] * sp.basis.size() + idx[1];
            }
            add_entry(sp.entries, key, parse_checked(trim(raw.substr(eq + 1)), env_for(sp), ln),
                      ln);
        } else if (kw == "extension") {
            if (toks.size() != 6 || toks[2] != "base" || toks[4] != "fiber")
                fail(ln, "expected 'extension <name> base <space> fiber <space>'");
            const std::string& name = toks[1];
            if (!valid_ident(name)) fail(ln, "invalid extension name '" + name + "'");
            if (ext_index.count(name)) fail(ln, "duplicate extension '" + name + "'");
            ExtensionDecl ext;
            ext.name = name;
            ext.line = ln;
            named_space(toks[3], ln);
            named_space(toks[5], ln);
            ext.base = space_index[toks[3]];
            ext.fiber = space_index[toks[5]];
            ext_index[name] = p.extensions.size();
            p.extensions.push_back(std::move(ext));
        } else if (kw == "rho" || kw == "nu" || kw == "omega") {
            const auto eq = raw.find('=');
            if (eq == std::string::npos) fail(ln, "missing '='");
            const auto lhs = split_ws(raw.substr(0, eq));
            ExtensionDecl& ext = named_extension(lhs.size() > 1 ? lhs[1] : "", ln);
            const SpaceDecl& base = p.spaces[ext.base];
            const SpaceDecl& fiber = p.spaces[ext.fiber];
            const std::size_t gd = base.basis.size(), hd = fiber.basis.size();
            ExprPtr rhs = parse_checked(trim(raw.substr(eq + 1)), env_for(fiber), ln);
            if (kw == "rho") {
                if (lhs.size() != 4) fail(ln, "expected 'rho <ext> [xi,xj] <va> = <expr>'");
                const auto keys = key_list(lhs[2], '[', ']', ln);
                if (keys.size() != 2) fail(ln, "rho takes a pair of base vectors");
                const std::size_t i = basis_index(base, keys[0], ln);
                const std::size_t j = basis_index(base, keys[1], ln);
                if (!(i < j)) fail(ln, "rho keys must be strictly increasing (canonical pairs)");
                const std::size_t a = basis_index(fiber, lhs[3], ln);
                add_entry(ext.rho, pair_rank(gd, i, j) * hd + a, std::move(rhs), ln);
            } else if (kw == "nu") {
                if (lhs.size() != 4) fail(ln, "expected 'nu <ext> <xi> (va,vb) = <expr>'");
                const std::size_t i = basis_index(base, lhs[2], ln);
                const auto keys = key_list(lhs[3], '(', ')', ln);
                if (keys.size() != 2) fail(ln, "nu takes a pair of fiber vectors");
                const std::size_t a = basis_index(fiber, keys[0], ln);
                const std::size_t b = basis_index(fiber, keys[1], ln);
                if (!(a < b)) fail(ln, "nu keys must be strictly increasing (canonical pairs)");
                add_entry(ext.nu, i * pair_count(hd) + pair_rank(hd, a, b), std::move(rhs), ln);
            } else {
                if (lhs.size() != 3) fail(ln, "expected 'omega <ext> [xi,xj,xk] = <expr>'");
                const auto keys = key_list(lhs[2], '[', ']', ln);
                if (keys.size() != 3) fail(ln, "omega takes a triple of base vectors");
                const std::size_t i = basis_index(base, keys[0], ln);
                const std::size_t j = basis_index(base, keys[1], ln);
                const std::size_t k = basis_index(base, keys[2], ln);
                if (!(i < j && j < k))
                    fail(ln, "omega keys must be strictly increasing (canonical triples)");
                add_entry(ext.omega, triple_rank(gd, i, j, k), std::move(rhs), ln);
            }
        } else if (kw == "task") {
            const auto& known = known_tasks();
            for (std::size_t i = 1; i < toks.size(); ++i) {
                bool ok = false;
                for (const auto& k : known) ok = ok || k == toks[i];
                if (!ok) fail(ln, "unknown task '" + toks[i] + "'");
                p.tasks.push_back(toks[i]);
            }
        } else {
            fail(ln, "unknown directive '" + kw + "'");
        }
    }

    void finish() const {
        if (!header_seen) throw ProblemError(basename + ": missing 'tlx 1' header");
        for (const auto& ext : p.extensions) {
            if (p.spaces[ext.base].arity == 2)
                fail(ext.line, "extension base '" + p.spaces[ext.base].name +
                                   "' carries a binary bracket");
            if (p.spaces[ext.fiber].arity == 2)
                fail(ext.line, "extension fiber '" + p.spaces[ext.fiber].name +
                                   "' carries a binary bracket");
        }
    }
};

using Value = std::variant<Scalar, std::vector<Scalar>>;

struct ValueEval {
    const std::map<std::string, Scalar>& params;
    const std::map<std::string, std::size_t>& basis;
    std::size_t dim;
    const std::string& where;

    [[noreturn]] void fail(const std::string& m) const { throw ProblemError(where + ": " + m); }

    Value combine(Value a, Value b, int sign) const {
        auto* sa = std::get_if<Scalar>(&a);
        auto* sb = std::get_if<Scalar>(&b);
        if (sa && sb) return sign > 0 ? Scalar(*sa + *sb) : Scalar(*sa - *sb);
        if (!sa && !sb) {
            auto& va = std::get<std::vector<Scalar>>(a);
            const auto& vb = std::get<std::vector<Scalar>>(b);
            for (std::size_t i = 0; i < va.size(); ++i) {
                if (sign > 0)
                    va[i] += vb[i];
                else
                    va[i] -= vb[i];
            }
            return a;
        }
        // a zero number passes as the zero vector
        if (sa && *sa == 0) {
            if (sign < 0) {
                auto& vb = std::get<std::vector<Scalar>>(b);
                for (auto& x : vb) x = -x;
            }
            return b;
        }
        if (sb && *sb == 0) return a;
        fail("cannot add a number to a vector");
    }

    Value eval(const ParamExpr& e) const {
        using K = ParamExpr::Kind;
        switch (e.kind) {
            case K::literal: return e.value;
            case K::param: {
                if (const auto it = params.find(e.name); it != params.end()) return it->second;
                if (const auto it = basis.find(e.name); it != basis.end()) {
                    std::vector<Scalar> v(dim, 0);
                    v[it->second] = 1;
                    return v;
                }
                fail("unknown name '" + e.name + "'");
            }
            case K::neg: {
                Value v = eval(*e.lhs);
                if (auto* s = std::get_if<Scalar>(&v)) return Scalar(-*s);
                for (auto& x : std::get<std::vector<Scalar>>(v)) x = -x;
                return v;
            }
            case K::add: return combine(eval(*e.lhs), eval(*e.rhs), 1);
            case K::sub: return combine(eval(*e.lhs), eval(*e.rhs), -1);
            case K::mul: {
                Value a = eval(*e.lhs);
                Value b = eval(*e.rhs);
                auto* sa = std::get_if<Scalar>(&a);
                auto* sb = std::get_if<Scalar>(&b);
                if (sa && sb) return Scalar(*sa * *sb);
                if (sa) {
                    for (auto& x : std::get<std::vector<Scalar>>(b)) x *= *sa;
                    return b;
                }
                if (sb) {
                    for (auto& x : std::get<std::vector<Scalar>>(a)) x *= *sb;
                    return a;
                }
                fail("cannot multiply two vectors");
            }
            case K::div: {
                Value a = eval(*e.lhs);
                Value b = eval(*e.rhs);
                auto* sb = std::get_if<Scalar>(&b);
                if (!sb) fail("cannot divide by a vector");
                if (*sb == 0) fail("division by zero");
                if (auto* sa = std::get_if<Scalar>(&a)) return Scalar(*sa / *sb);
                for (auto& x : std::get<std::vector<Scalar>>(a)) x /= *sb;
                return a;
            }
        }
        fail("malformed expression");
    }
};

std::vector<Scalar> eval_vector(const ProblemEntry& ent, const std::string& basename,
                                const std::map<std::string, Scalar>& params,
                                const std::map<std::string, std::size_t>& basis,
                                std::size_t dim) {
    const std::string where = basename + ":" + std::to_string(ent.line);
    Value v = ValueEval{params, basis, dim, where}.eval(*ent.expr);
    if (const auto* s = std::get_if<Scalar>(&v)) {
        if (*s == 0) return std::vector<Scalar>(dim, Scalar(0));
        throw ProblemError(where + ": entry evaluates to a number; expected a vector");
    }
    return std::get<std::vector<Scalar>>(std::move(v));
}

std::map<std::string, std::size_t> basis_map(const SpaceDecl& sp) {
    std::map<std::string, std::size_t> m;
    for (std::size_t i = 0; i < sp.basis.size(); ++i) m[sp.basis[i]] = i;
    return m;
}

}  // namespace

const std::vector<std::string>& known_tasks() {
    static const std::vector<std::string> k = {
        "check-3lie",  "check-leibniz", "check-rep",            "check-extension",
        "check-mc",    "check-gauge",   "check-fundamental-ext", "roundtrip-mc-extension"};
    return k;
}

Problem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ProblemError("cannot open file: " + path);
    const std::size_t slash = path.find_last_of('/');
    Loader L;
    L.basename = slash == std::string::npos ? path : path.substr(slash + 1);
    L.p.basename = L.basename;
    std::string line;
    std::size_t ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        L.handle(line, ln);
    }
    L.finish();
    return L.p;
}

Resolved resolve_problem(const Problem& p, const std::map<std::string, Scalar>& assignment) {
    for (const auto& name : p.params)
        if (!assignment.count(name))
            throw ProblemError(p.basename + ": missing value for parameter '" + name + "'");
    for (const auto& [name, value] : assignment) {
        (void)value;
        bool known = false;
        for (const auto& q : p.params) known = known || q == name;
        if (!known) throw ProblemError(p.basename + ": unknown parameter '" + name + "'");
    }
    for (const auto& [text, ast] : p.guards) {
        Scalar v;
        try {
            v = eval_expr(*ast, assignment);
        } catch (const std::invalid_argument&) {
            throw GuardViolation(p.basename, text);
        }
        if (v == 0) throw GuardViolation(p.basename, text);
    }

    Resolved out;
    // remember where each space landed: (is_binary, index in its list)
    std::vector<std::pair<bool, std::size_t>> slot(p.spaces.size());
    for (std::size_t si = 0; si < p.spaces.size(); ++si) {
        const SpaceDecl& sp = p.spaces[si];
        const auto basis = basis_map(sp);
        const std::size_t dim = sp.basis.size();
        if (sp.arity == 2) {
            LeibnizAlgebra L = make_leibniz(sp.name, sp.basis);
            for (const auto& [key, ent] : sp.entries)
                L.b[key] = eval_vector(ent, p.basename, assignment, basis, dim);
            slot[si] = {true, out.binary.size()};
            out.binary.push_back(std::move(L));
        } else {
            ThreeLieAlgebra A = make_three_lie(sp.name, sp.basis);
            for (const auto& [key, ent] : sp.entries)
                A.c[key] = eval_vector(ent, p.basename, assignment, basis, dim);
            slot[si] = {false, out.ternary.size()};
            out.ternary.push_back(std::move(A));
        }
    }
    for (const auto& ext : p.extensions) {
        const ThreeLieAlgebra& g = out.ternary[slot[ext.base].second];
        const ThreeLieAlgebra& h = out.ternary[slot[ext.fiber].second];
        const auto fiber_basis = basis_map(p.spaces[ext.fiber]);
        const std::size_t hd = h.dim;
        ExtensionDatum D = make_extension_datum(g, h);
        for (const auto& [key, ent] : ext.rho)
            D.rho[key / hd][key % hd] = eval_vector(ent, p.basename, assignment, fiber_basis, hd);
        for (const auto& [key, ent] : ext.nu)
            D.nu[key / pair_count(hd)][key % pair_count(hd)] =
                eval_vector(ent, p.basename, assignment, fiber_basis, hd);
        for (const auto& [key, ent] : ext.omega)
            D.omega[key] = eval_vector(ent, p.basename, assignment, fiber_basis, hd);
        out.extensions.push_back(ResolvedExtension{ext.name, std::move(D)});
    }
    return out;
}

}  // namespace trilie
