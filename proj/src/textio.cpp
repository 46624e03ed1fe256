#include "twistcoh/textio.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "twistcoh/qexterior.hpp"

namespace twc {

namespace {

constexpr int kMaxAlgebraDim = 64;
constexpr int kMaxModuleDim = 256;

struct Token {
    std::string text;
    int col = 0;
};

struct Line {
    int number = 0;
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
        Line l{number, {}};
        size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            if (i >= raw.size()) break;
            size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
            l.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
            i = j;
        }
        if (!l.tokens.empty()) out.push_back(std::move(l));
    }
    return out;
}

class Parser {
public:
    Parser(Workspace& ws, const std::string& text, std::string source)
        : ws_(ws), lines_(tokenize(text)), source_(std::move(source)) {}

    void run() {
        while (pos_ < lines_.size()) {
            const Line& l = lines_[pos_];
            const std::string& kw = l.tokens[0].text;
            if (kw == "algebra")
                algebra();
            else if (kw == "automorphism")
                automorphism();
            else if (kw == "module")
                module();
            else
                syntax(l, 0, "expected 'algebra', 'automorphism' or 'module', got '" + kw + "'");
        }
    }

private:
    Workspace& ws_;
    std::vector<Line> lines_;
    std::string source_;
    size_t pos_ = 0;

    [[noreturn]] void syntax(const Line& l, size_t tok, const std::string& msg) const {
        int col = tok < l.tokens.size() ? l.tokens[tok].col : (l.tokens.empty() ? 1 : l.tokens.back().col);
        throw ParseError("SyntaxError", msg, source_, l.number, col);
    }
    [[noreturn]] void invalid(const Line& l, const std::string& entity, const Error& e) const {
        throw ParseError("ValidationError", entity + ": " + e.what(), source_, l.number, l.tokens[0].col, entity,
                         e.kind());
    }
    [[noreturn]] void dangling(const Line& l, size_t tok, const std::string& what) const {
        throw ParseError("DanglingReference", "unknown " + what + " '" + l.tokens[tok].text + "'", source_, l.number,
                         l.tokens[tok].col, l.tokens[tok].text);
    }

    const Line& next(const Line& header) {
        if (++pos_ >= lines_.size()) syntax(header, 0, "block not closed by 'end'");
        return lines_[pos_];
    }

    int integer(const Line& l, size_t tok, int lo, int hi) const {
        if (tok >= l.tokens.size()) syntax(l, tok, "missing integer");
        const std::string& s = l.tokens[tok].text;
        int v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size()) syntax(l, tok, "expected an integer, got '" + s + "'");
        if (v < lo || v > hi)
            syntax(l, tok, "integer " + s + " out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
        return v;
    }

    Scalar scalar(const Line& l, size_t tok, Field f) const {
        try {
            return Scalar::parse(f, l.tokens[tok].text);
        } catch (const Error& e) {
            syntax(l, tok, e.what());
        }
    }

    // exactly n coefficients starting at token `from`
    Vec coeffs(const Line& l, size_t from, int n, Field f) const {
        if (l.tokens.size() != from + n) {
            const long got = static_cast<long>(l.tokens.size()) - static_cast<long>(from);
            syntax(l, std::min(l.tokens.size(), from + n),
                   "expected " + std::to_string(n) + " coefficients, got " + std::to_string(std::max(got, 0L)));
        }
        Vec v;
        for (int i = 0; i < n; ++i) v.push_back(scalar(l, from + i, f));
        return v;
    }

    void expect_arity(const Line& l, size_t n) const {
        if (l.tokens.size() != n)
            syntax(l, std::min(l.tokens.size(), n), "expected " + std::to_string(n - 1) + " argument(s)");
    }

    void fresh(const Line& l, size_t tok, const std::string& kind, bool taken) const {
        if (taken) syntax(l, tok, kind + " '" + l.tokens[tok].text + "' already defined");
    }

    std::string where(const Line& l) const { return source_ + ":" + std::to_string(l.number); }

    void algebra() {
        const Line& h = lines_[pos_];
        expect_arity(h, 2);
        const std::string name = h.tokens[1].text;
        fresh(h, 1, "algebra", ws_.algebras.count(name) > 0);
        AlgebraData raw;
        raw.name = name;
        bool have_field = false, have_dim = false, have_unit = false;
        std::optional<Vec> form;
        for (;;) {
            const Line& l = next(h);
            const std::string& kw = l.tokens[0].text;
            if (kw == "end") {
                expect_arity(l, 1);
                break;
            }
            if (kw == "field") {
                expect_arity(l, 2);
                if (have_field) syntax(l, 0, "field given twice");
                const std::string& f = l.tokens[1].text;
                if (f == "Q") {
                    raw.field = Field::rationals();
                } else if (f.size() > 1 && f[0] == 'F') {
                    Line tmp = l;
                    tmp.tokens[1].text = f.substr(1);
                    int p = integer(tmp, 1, 2, 2147483647);
                    try {
                        raw.field = Field::prime(static_cast<uint32_t>(p));
                    } catch (const Error& e) {
                        syntax(l, 1, e.what());
                    }
                } else {
                    syntax(l, 1, "field must be Q or F<p>");
                }
                have_field = true;
                continue;
            }
            if (!have_field) syntax(l, 0, "'field' must come first");
            if (kw == "dim") {
                expect_arity(l, 2);
                if (have_dim) syntax(l, 0, "dim given twice");
                raw.dim = integer(l, 1, 1, kMaxAlgebraDim);
                raw.mult.assign(raw.dim, std::vector<Vec>(raw.dim, zero_vec(raw.field, raw.dim)));
                have_dim = true;
                continue;
            }
            if (!have_dim) syntax(l, 0, "'dim' must precede '" + kw + "'");
            const int d = raw.dim;
            if (kw == "basis") {
                expect_arity(l, 1 + d);
                raw.labels.clear();
                for (int i = 0; i < d; ++i) {
                    for (const auto& seen : raw.labels)
                        if (seen == l.tokens[1 + i].text) syntax(l, 1 + i, "duplicate basis label");
                    raw.labels.push_back(l.tokens[1 + i].text);
                }
            } else if (kw == "unit") {
                raw.unit = coeffs(l, 1, d, raw.field);
                have_unit = true;
            } else if (kw == "mul") {
                if (l.tokens.size() < 4 || l.tokens[3].text != ":") syntax(l, 3, "expected 'mul <i> <j> : <coeffs>'");
                int i = integer(l, 1, 0, d - 1), j = integer(l, 2, 0, d - 1);
                raw.mult[i][j] = coeffs(l, 4, d, raw.field);
            } else if (kw == "radical") {
                std::vector<Vec> rad;
                for (size_t t = 1; t < l.tokens.size(); ++t) rad.push_back(unit_vec(raw.field, d, integer(l, t, 0, d - 1)));
                raw.radical = rad;
            } else if (kw == "idempotent") {
                raw.idempotents.push_back(coeffs(l, 1, d, raw.field));
            } else if (kw == "form") {
                form = coeffs(l, 1, d, raw.field);
            } else {
                syntax(l, 0, "unknown algebra directive '" + kw + "'");
            }
        }
        if (!have_dim) syntax(h, 0, "algebra without 'dim'");
        if (!have_unit) syntax(h, 0, "algebra without 'unit'");
        AlgebraPtr a;
        try {
            a = validate_algebra(raw);
        } catch (const Error& e) {
            invalid(h, name, e);
        }
        if (form) {
            FrobeniusForm fm{a, *form};
            try {
                nakayama(fm);
            } catch (const Error& e) {
                invalid(h, name, e);
            }
            ws_.forms[name] = fm;
        }
        ws_.algebras[name] = a;
        ws_.algebra_order.push_back(name);
        ws_.provenance["algebra " + name] = where(h);
        ++pos_;
    }

    AlgebraPtr algebra_ref(const Line& l, size_t tok) const {
        auto it = ws_.algebras.find(l.tokens[tok].text);
        if (it == ws_.algebras.end()) dangling(l, tok, "algebra");
        return it->second;
    }

    void automorphism() {
        const Line& h = lines_[pos_];
        if (h.tokens.size() != 4 || h.tokens[2].text != "on") syntax(h, 2, "expected 'automorphism <name> on <algebra>'");
        const std::string name = h.tokens[1].text;
        fresh(h, 1, "automorphism", ws_.morphisms.count(name) > 0);
        AlgebraPtr a = algebra_ref(h, 3);
        std::vector<Vec> rows;
        for (;;) {
            const Line& l = next(h);
            if (l.tokens[0].text == "end") {
                expect_arity(l, 1);
                break;
            }
            if (l.tokens[0].text != "row") syntax(l, 0, "expected 'row' or 'end'");
            if (static_cast<int>(rows.size()) == a->dim) syntax(l, 0, "too many rows");
            rows.push_back(coeffs(l, 1, a->dim, a->field));
        }
        if (static_cast<int>(rows.size()) != a->dim) syntax(lines_[pos_], 0, "expected " + std::to_string(a->dim) + " rows");
        try {
            ws_.morphisms[name] = make_automorphism(a, Matrix::from_rows(a->field, rows, a->dim));
        } catch (const Error& e) {
            invalid(h, name, e);
        }
        ws_.morphism_algebra[name] = h.tokens[3].text;
        ws_.morphism_order.push_back(name);
        ws_.provenance["automorphism " + name] = where(h);
        ++pos_;
    }

    void module() {
        const Line& h = lines_[pos_];
        if (h.tokens.size() != 4 || h.tokens[2].text != "over") syntax(h, 2, "expected 'module <name> over <algebra>'");
        const std::string name = h.tokens[1].text;
        fresh(h, 1, "module", ws_.modules.count(name) > 0);
        AlgebraPtr a = algebra_ref(h, 3);
        int m = -1;
        std::vector<std::optional<Matrix>> act(a->dim);
        for (;;) {
            const Line& l = next(h);
            const std::string& kw = l.tokens[0].text;
            if (kw == "end") {
                expect_arity(l, 1);
                break;
            }
            if (kw == "dim") {
                expect_arity(l, 2);
                if (m >= 0) syntax(l, 0, "dim given twice");
                m = integer(l, 1, 0, kMaxModuleDim);
                continue;
            }
            if (kw != "action") syntax(l, 0, "expected 'dim', 'action' or 'end'");
            if (m < 0) syntax(l, 0, "'dim' must precede 'action'");
            if (l.tokens.size() != 3 || l.tokens[2].text != ":") syntax(l, 2, "expected 'action <i> :'");
            const int i = integer(l, 1, 0, a->dim - 1);
            if (act[i]) syntax(l, 1, "action given twice");
            std::vector<Vec> rows;
            for (int r = 0; r < m; ++r) rows.push_back(coeffs(next(h), 0, m, a->field));
            act[i] = Matrix::from_rows(a->field, rows, m);
        }
        if (m < 0) syntax(h, 0, "module without 'dim'");
        std::vector<Matrix> actions;
        for (int i = 0; i < a->dim; ++i) {
            if (!act[i]) syntax(lines_[pos_], 0, "missing action of basis element " + std::to_string(i));
            actions.push_back(*act[i]);
        }
        try {
            Module mod(a, m, actions, name);
            mod.validate();
            ws_.modules[name] = mod;
        } catch (const Error& e) {
            invalid(h, name, e);
        }
        ws_.module_algebra[name] = h.tokens[3].text;
        ws_.module_order.push_back(name);
        ws_.provenance["module " + name] = where(h);
        ++pos_;
    }
};

std::string join(const Vec& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].str();
    return s;
}

[[noreturn]] void missing(const std::string& kind, const std::string& name) {
    throw ParseError("DanglingReference", "unknown " + kind + " '" + name + "'", "", 0, 0, name);
}

}  // namespace

const AlgebraPtr& Workspace::algebra(const std::string& name) const {
    auto it = algebras.find(name);
    if (it == algebras.end()) missing("algebra", name);
    return it->second;
}

const AlgebraMorphism& Workspace::morphism(const std::string& name) const {
    auto it = morphisms.find(name);
    if (it == morphisms.end()) missing("automorphism", name);
    return it->second;
}

const Module& Workspace::module(const std::string& name) const {
    auto it = modules.find(name);
    if (it == modules.end()) missing("module", name);
    return it->second;
}

const AlgebraPtr& Workspace::algebra_or_only(const std::string& name) const {
    if (!name.empty()) return algebra(name);
    if (algebras.size() != 1)
        throw Error("AmbiguousAlgebra", "workspace has " + std::to_string(algebras.size()) + " algebras; name one");
    return algebras.begin()->second;
}

std::string Workspace::algebra_name(const AlgebraPtr& a) const {
    for (const auto& [n, p] : algebras)
        if (p == a) return n;
    throw Error("DanglingReference", "algebra not in workspace");
}

void parse_into(Workspace& ws, const std::string& text, const std::string& source) {
    Parser(ws, text, source).run();
}

Workspace parse_text(const std::string& text, const std::string& source) {
    Workspace ws;
    parse_into(ws, text, source);
    return ws;
}

Workspace load_files(const std::vector<std::string>& paths) {
    Workspace ws;
    for (const auto& p : paths) {
        std::ifstream in(p);
        if (!in) throw Error("IoError", "cannot read " + p);
        std::stringstream buf;
        buf << in.rdbuf();
        parse_into(ws, buf.str(), p);
    }
    return ws;
}

std::string emit_algebra(const std::string& name, const Algebra& a, const FrobeniusForm* form) {
    std::ostringstream o;
    o << "algebra " << name << "\n";
    o << "field " << a.field.name() << "\n";
    o << "dim " << a.dim << "\n";
    o << "basis";
    for (const auto& l : a.labels) o << " " << l;
    o << "\nunit " << join(a.unit) << "\n";
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            if (!is_zero(a.mult[i][j])) o << "mul " << i << " " << j << " : " << join(a.mult[i][j]) << "\n";
    // the radical is only expressible when spanned by basis elements
    std::vector<int> rad;
    for (const auto& r : a.radical) {
        int hit = -1, nz = 0;
        for (int i = 0; i < a.dim; ++i)
            if (!r[i].is_zero()) ++nz, hit = i;
        if (nz != 1) {
            rad.clear();
            break;
        }
        rad.push_back(hit);
    }
    if (!rad.empty() && static_cast<int>(rad.size()) == a.radical_dim()) {
        o << "radical";
        for (int i : rad) o << " " << i;
        o << "\n";
    }
    for (const auto& e : a.idempotents) o << "idempotent " << join(e) << "\n";
    if (form) o << "form " << join(form->functional) << "\n";
    o << "end\n";
    return o.str();
}

std::string emit_morphism(const std::string& name, const std::string& algebra, const AlgebraMorphism& m) {
    std::ostringstream o;
    o << "automorphism " << name << " on " << algebra << "\n";
    for (int r = 0; r < m.matrix.rows(); ++r) o << "row " << join(m.matrix.row(r)) << "\n";
    o << "end\n";
    return o.str();
}

std::string emit_module(const std::string& name, const std::string& algebra, const Module& m) {
    std::ostringstream o;
    o << "module " << name << " over " << algebra << "\n";
    o << "dim " << m.dim << "\n";
    for (int i = 0; i < m.alg->dim; ++i) {
        o << "action " << i << " :\n";
        for (int r = 0; r < m.dim; ++r) o << join(m.action[i].row(r)) << "\n";
    }
    o << "end\n";
    return o.str();
}

std::string emit_workspace(const Workspace& ws) {
    std::string out;
    for (const auto& n : ws.algebra_order) {
        auto f = ws.forms.find(n);
        out += emit_algebra(n, *ws.algebras.at(n), f == ws.forms.end() ? nullptr : &f->second) + "\n";
    }
    for (const auto& n : ws.morphism_order) out += emit_morphism(n, ws.morphism_algebra.at(n), ws.morphisms.at(n)) + "\n";
    for (const auto& n : ws.module_order) out += emit_module(n, ws.module_algebra.at(n), ws.modules.at(n)) + "\n";
    return out;
}

Workspace builtin_workspace(const Scalar& q) {
    QExterior qe = build_qexterior(QExteriorParams{q.field(), q});
    Workspace ws;
    const std::string an = "Lq";
    ws.algebras[an] = qe.alg;
    ws.forms[an] = qe.form;
    ws.algebra_order.push_back(an);
    ws.morphisms["nu"] = qe.nu;
    ws.morphism_algebra["nu"] = an;
    ws.morphism_order.push_back("nu");
    const Field f = q.field();
    auto add = [&](const std::string& name, Module m) {
        m.name = name;
        ws.modules[name] = m;
        ws.module_algebra[name] = an;
        ws.module_order.push_back(name);
        ws.provenance["module " + name] = "builtin";
    };
    const Scalar one = Scalar::one(f), zero = Scalar::zero(f);
    add("M", build_module(qe, one, one));
    add("M_1_2", build_module(qe, one, Scalar(f, 2L)));
    add("M_1_m1", build_module(qe, one, -one));
    add("M_1_0", build_module(qe, one, zero));
    add("M_0_1", build_module(qe, zero, one));
    add("k", top(regular_module(qe.alg)).module);
    add("Lambda", regular_module(qe.alg));
    ws.provenance["algebra " + an] = "builtin";
    ws.provenance["automorphism nu"] = "builtin";
    return ws;
}

}  // namespace twc
