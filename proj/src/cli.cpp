#include "twistcoh/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <random>

#include "twistcoh/hochschild.hpp"
#include "twistcoh/qexterior.hpp"
#include "twistcoh/textio.hpp"
#include "twistcoh/varieties.hpp"

namespace twc {

using nlohmann::json;

FrobeniusForm find_frobenius_form(const AlgebraPtr& a, uint64_t seed, int trials) {
    auto ok = [&](const Vec& v) {
        FrobeniusForm f{a, v};
        return invert(f.gram()).has_value();
    };
    for (int i = a->dim - 1; i >= 0; --i)
        if (ok(a->basis(i))) return {a, a->basis(i)};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int k = 0; k < trials; ++k) {
        Vec v = a->zero();
        for (auto& c : v) c = Scalar(a->field, coef(rng));
        if (ok(v)) return {a, v};
    }
    throw Error("NotFrobenius", "no nondegenerate functional found for " + a->name);
}

namespace {

json jvec(const Vec& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(s.str());
    return out;
}

json jmat(const Matrix& m) {
    json out = json::array();
    for (int r = 0; r < m.rows(); ++r) out.push_back(jvec(m.row(r)));
    return out;
}

json jgrowth(const GrowthEstimate& g) {
    json out;
    out["verdict"] = to_string(g.verdict);
    out["stride"] = g.stride;
    out["window"] = {g.start, g.end};
    out["values"] = g.values;
    out["gamma"] = g.gamma ? json(*g.gamma) : json(nullptr);
    if (g.verdict == GrowthVerdict::PolynomialDegree) out["degree"] = g.degree;
    return out;
}

json jclass(const ExtClass& c) {
    return {{"degree", c.degree()}, {"power", c.power()}, {"coords", jvec(c.coords)}};
}

json jfg(const FgEvidence& e) {
    json out;
    out["verdict"] = to_string(e.verdict);
    out["t"] = e.t;
    out["window"] = e.window;
    out["generator_degrees"] = e.generator_degrees;
    out["ext_dims"] = e.ext_dims;
    out["new_generators"] = e.new_generators;
    out["generated_up_to"] = e.generated_up_to >= 0 ? json(e.generated_up_to) : json(nullptr);
    out["action_injective_from"] = e.action_injective_from ? json(*e.action_injective_from) : json(nullptr);
    if (e.witness) {
        out["witness"] = jclass(*e.witness);
        out["witness_degree"] = e.witness_degree;
        out["transition_degree"] = e.transition_degree;
        out["witness_annihilated"] = e.witness_annihilated;
    }
    if (!e.note.empty()) out["note"] = e.note;
    return out;
}

json jcert(const PeriodicityCertificate& c) {
    json out;
    out["found"] = c.found;
    if (c.found) {
        out["shift"] = c.j;
        out["period"] = c.w;
        out["source_dim"] = c.source.dim;
        out["intertwiner"] = jmat(c.intertwiner);
        out["verified"] = c.verified;
        out["vacuous"] = c.vacuous;
    }
    if (!c.note.empty()) out["note"] = c.note;
    return out;
}

struct Options {
    std::vector<std::string> workspace;
    std::string algebra;
    std::string twist = "id";
    int t = 1;
    std::string q = "2";
    std::string field = "Q";
    uint64_t seed = 1;
    int window = -1, steps = -1, max_degree = -1;
    std::string method = "minimal";
    std::string json_path;
    std::string module;
    std::string target;
    int max_shift = 4, max_period = 4;
    int index = 2;
    long n = 1;
    int gen_index = 2;
    bool products = false;
    std::string emit_path;
};

int pick(int v, int dflt) { return v >= 0 ? v : dflt; }

Field parse_field(const std::string& s) {
    if (s == "Q") return Field::rationals();
    if (s.size() > 1 && s[0] == 'F') {
        try {
            return Field::prime(static_cast<uint32_t>(std::stoul(s.substr(1))));
        } catch (const std::logic_error&) {
        }
    }
    throw Error("UsageError", "field must be Q or F<p>, got " + s);
}

class Runner {
public:
    explicit Runner(const Options& o) : o_(o) {
        if (o.workspace.empty()) {
            ws_ = builtin_workspace(Scalar::parse(parse_field(o.field), o.q));
            builtin_ = true;
        } else {
            ws_ = load_files(o.workspace);
        }
    }

    json run(const std::string& cmd) {
        json r;
        if (cmd == "resolve") r = resolve();
        else if (cmd == "ext") r = ext();
        else if (cmd == "hochschild") r = hochschild();
        else if (cmd == "strong-check") r = strong_check();
        else if (cmd == "variety-dim") r = variety_dim();
        else if (cmd == "periodicity") r = periodic();
        else if (cmd == "fg-check") r = fg();
        else if (cmd == "nakayama") r = nakayama_cmd();
        else if (cmd == "reduce") r = reduce();
        else if (cmd == "builtin") r = builtin();
        else throw Error("UsageError", "unknown command " + cmd);
        r["workspace"] = builtin_ ? json("builtin") : json(o_.workspace);
        return r;
    }

private:
    const Options& o_;
    Workspace ws_;
    bool builtin_ = false;

    const Module& mod() const {
        if (o_.module.empty()) throw Error("UsageError", "a module name is required");
        return ws_.module(o_.module);
    }
    AlgebraPtr alg() const { return o_.module.empty() ? ws_.algebra_or_only(o_.algebra) : mod().alg; }
    AlgebraMorphism twist_on(const AlgebraPtr& a) const {
        if (o_.twist == "id" || o_.twist == "identity") return AlgebraMorphism::identity(a);
        const AlgebraMorphism& m = ws_.morphism(o_.twist);
        if (m.source != a) throw Error("TwistMismatch", "automorphism " + o_.twist + " is not on " + a->name);
        return m;
    }
    int t() const {
        if (o_.t < 1) throw Error("OutOfRange", "--t must be positive");
        return o_.t;
    }
    HHMethod method() const { return parse_method(o_.method); }

    json header(const std::string& cmd) const {
        json r;
        r["schema_version"] = kSchemaVersion;
        r["command"] = cmd;
        return r;
    }

    HHSample hh(const AlgebraPtr& a, int D, bool products) const {
        return hh_twisted(a, twist_on(a), t(), D, method(), products);
    }

    std::vector<ExtClass> generators(const AlgebraPtr& a) const {
        HHSample s = hh(a, o_.gen_index, true);
        std::vector<ExtClass> out;
        for (const auto& g : sample_generators(s.ring))
            if (g.degree() > 0) out.push_back(g);
        return out;
    }

    json resolve() {
        const Module& m = mod();
        const int steps = pick(o_.steps, 6);
        ResolutionPtr r = minimal_resolution(m, steps);
        json out = header("resolve");
        out["module"] = o_.module;
        out["steps"] = steps;
        out["lengths"] = betti_lengths(*r, steps);
        out["ranks"] = betti_ranks(*r, steps);
        json checks = json::array();
        for (int n = 0; n <= steps; ++n)
            checks.push_back({{"n", n}, {"complex", r->is_complex_at(n)}, {"minimal", r->minimal_at(n)}});
        out["checks"] = checks;
        out["cover_only"] = steps == 0;
        return out;
    }

    json ext() {
        const Module& m = mod();
        const int D = pick(o_.max_degree, 4);
        const Module target = o_.target.empty() ? top(regular_module(m.alg)).module : ws_.module(o_.target);
        AlgebraMorphism psi = twist_on(m.alg);
        ResolutionPtr r = minimal_resolution(m, t() * D + 1);
        json out = header("ext");
        out["module"] = o_.module;
        out["target"] = o_.target.empty() ? "top" : o_.target;
        out["twist"] = o_.twist;
        out["t"] = o_.t;
        out["max_index"] = D;
        std::vector<int> dims, degrees;
        for (int j = 0; j <= D; ++j) {
            dims.push_back(twisted_ext_space(r, target, psi, o_.t, j)->dim());
            degrees.push_back(o_.t * j);
        }
        out["degrees"] = degrees;
        out["dims"] = dims;
        return out;
    }

    json hochschild() {
        AlgebraPtr a = alg();
        const int D = pick(o_.max_degree, 4);
        HHSample s = hh(a, D, o_.products);
        json out = header("hochschild");
        out["algebra"] = ws_.algebra_name(a);
        out["twist"] = o_.twist;
        out["t"] = o_.t;
        out["method"] = to_string(s.method);
        out["max_index"] = D;
        out["dims"] = s.ring.dims();
        if (o_.products) {
            out["associativity_violations"] = associativity_violations(s.ring);
            json table = json::array();
            for (const auto& [key, v] : s.ring.products) {
                auto [j1, a1, j2, b] = key;
                table.push_back({{"left", {j1, a1}}, {"right", {j2, b}}, {"coords", jvec(v)}});
            }
            out["products"] = table;
        }
        return out;
    }

    json strong_check() {
        AlgebraPtr a = alg();
        const int j = o_.index;
        if (j < 0) throw Error("OutOfRange", "--index must be nonnegative");
        HHSample s = hh(a, j, false);
        AlgebraMorphism psi = twist_on(a);
        json out = header("strong-check");
        out["algebra"] = ws_.algebra_name(a);
        out["twist"] = o_.twist;
        out["t"] = o_.t;
        out["index"] = j;
        out["n"] = o_.n;
        json cls = json::array();
        bool all = true;
        for (size_t b = 0; b < s.ring.basis[j].size(); ++b) {
            const ExtClass& eta = s.ring.basis[j][b];
            const bool strong = strong_comm_check(eta, psi, o_.n);
            all = all && strong;
            json c = {{"basis", b}, {"strong", strong}};
            try {
                c["bar_criterion"] = bar_criterion_check(eta, psi, o_.n);
            } catch (const Error& e) {
                if (e.kind() != "SizeCap" && e.kind() != "Unsupported") throw;
                c["bar_criterion"] = nullptr;
            }
            cls.push_back(c);
        }
        out["classes"] = cls;
        out["all_strong"] = all;
        return out;
    }

    json variety_dim() {
        const Module& m = mod();
        AlgebraPtr a = m.alg;
        VarietyReport v = variety_report(m, twist_on(a), t(), generators(a), pick(o_.window, 12), 10);
        json out = header("variety-dim");
        out["module"] = o_.module;
        out["twist"] = o_.twist;
        out["t"] = o_.t;
        out["dim"] = v.dim ? json(*v.dim) : json(nullptr);
        out["trivial"] = v.trivial;
        out["ext_vanishes"] = v.ext_vanishes;
        out["complexity"] = jgrowth(v.growth);
        out["fg"] = jfg(v.fg);
        out["caveats"] = v.caveats;
        return out;
    }

    json periodic() {
        const Module& m = mod();
        PeriodicityCertificate c = periodicity(m, twist_on(m.alg), t(), o_.max_shift, o_.max_period, o_.seed);
        json out = header("periodicity");
        out["module"] = o_.module;
        out["twist"] = o_.twist;
        out["t"] = o_.t;
        out["max_shift"] = o_.max_shift;
        out["max_period"] = o_.max_period;
        out["seed"] = o_.seed;
        out["certificate"] = jcert(c);
        return out;
    }

    json fg() {
        const Module& m = mod();
        AlgebraPtr a = m.alg;
        FgEvidence e = fg_check(m, generators(a), twist_on(a), t(), pick(o_.window, 10));
        json out = header("fg-check");
        out["module"] = o_.module;
        out["twist"] = o_.twist;
        out["evidence"] = jfg(e);
        return out;
    }

    json nakayama_cmd() {
        AlgebraPtr a = alg();
        const std::string name = ws_.algebra_name(a);
        auto it = ws_.forms.find(name);
        FrobeniusForm form = it != ws_.forms.end() ? it->second : find_frobenius_form(a, o_.seed);
        AlgebraMorphism nu = nakayama(form);
        json out = header("nakayama");
        out["algebra"] = name;
        out["form"] = jvec(form.functional);
        out["form_source"] = it != ws_.forms.end() ? "given" : "searched";
        out["matrix"] = jmat(nu.matrix);
        out["is_identity"] = nu.is_identity();
        return out;
    }

    json reduce() {
        const Module& m = mod();
        AlgebraPtr a = m.alg;
        const int j = o_.index;
        if (j < 1) throw Error("DegreeZero", "--index must be positive");
        HHSample s = hh(a, j, false);
        if (s.ring.basis[j].empty()) throw Error("ZeroClass", "HH in index " + std::to_string(j) + " vanishes");
        const ExtClass& eta = s.ring.basis[j].front();
        KEtaExtension k = k_eta(eta);
        TensoredSequence ts = tensor_sequence(k, m);
        Module red = tensor_over_algebra(syzygy(k.k_eta), m).module;
        const int W = pick(o_.window, 8);
        json out = header("reduce");
        out["module"] = o_.module;
        out["twist"] = o_.twist;
        out["t"] = o_.t;
        out["eta"] = jclass(eta);
        out["k_eta_dim"] = k.k_eta.dim;
        out["sequence_exact"] = k.exact;
        out["tensored_dims"] = {ts.left.dim, ts.middle.dim, ts.right.dim};
        out["tensored_exact"] = ts.exact;
        out["result_dim"] = red.dim;
        out["complexity_before"] = jgrowth(complexity(m, t(), W));
        out["complexity_after"] = jgrowth(complexity(red, t(), W));
        return out;
    }

    json builtin() {
        json out = header("builtin");
        Workspace b = builtin_workspace(Scalar::parse(parse_field(o_.field), o_.q));
        const std::string text = emit_workspace(b);
        out["q"] = o_.q;
        out["field"] = o_.field;
        out["modules"] = b.module_order;
        out["text"] = text;
        if (!o_.emit_path.empty()) {
            std::ofstream f(o_.emit_path);
            if (!f) throw Error("IoError", "cannot write " + o_.emit_path);
            f << text;
            out["written"] = o_.emit_path;
        }
        return out;
    }
};

json error_report(const std::string& cmd, const std::string& kind, const std::string& msg) {
    json r;
    r["schema_version"] = kSchemaVersion;
    r["command"] = cmd;
    r["error"] = {{"kind", kind}, {"message", msg}};
    return r;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Twisted Hochschild cohomology and support varieties"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("-w,--workspace", o.workspace, "workspace files (default: the built-in quantum exterior algebra)");
    app.add_option("--algebra", o.algebra, "algebra name");
    app.add_option("--twist", o.twist, "automorphism name, or id");
    app.add_option("--t", o.t, "twist stride t");
    app.add_option("--q", o.q, "parameter of the built-in algebra");
    app.add_option("--field", o.field, "field of the built-in algebra (Q or F<p>)");
    app.add_option("--seed", o.seed, "seed for randomized searches");
    app.add_option("--window", o.window, "complexity window or fg degree bound");
    app.add_option("--steps", o.steps, "resolution steps");
    app.add_option("--max-degree", o.max_degree, "largest index n of Ext^{tn}");
    app.add_option("--method", o.method, "minimal | bar | builtin");
    app.add_option("--json", o.json_path, "also write the report to this path");

    const std::vector<std::pair<std::string, std::string>> cmds = {
        {"resolve", "minimal projective resolution of a module"},
        {"ext", "dimensions of twisted Ext into a target module"},
        {"hochschild", "twisted Hochschild cohomology dimensions"},
        {"strong-check", "strong commutativity of HH basis classes"},
        {"variety-dim", "twisted support variety dimension"},
        {"periodicity", "periodicity certificate search"},
        {"fg-check", "finite generation evidence"},
        {"nakayama", "Nakayama automorphism of a Frobenius form"},
        {"reduce", "cut down the variety dimension with K_eta"},
        {"builtin", "emit the built-in workspace"},
    };
    const std::vector<std::string> with_module = {"resolve", "ext", "variety-dim", "periodicity", "fg-check", "reduce"};
    for (const auto& [name, desc] : cmds) {
        CLI::App* sub = app.add_subcommand(name, desc);
        if (std::find(with_module.begin(), with_module.end(), name) != with_module.end())
            sub->add_option("module", o.module, "module name")->required();
        if (name == "ext") sub->add_option("--target", o.target, "target module (default: the top of the algebra)");
        if (name == "periodicity") {
            sub->add_option("--max-shift", o.max_shift, "largest shift j");
            sub->add_option("--max-period", o.max_period, "largest period w");
        }
        if (name == "strong-check" || name == "reduce") sub->add_option("--index", o.index, "HH index n of HH^{tn}");
        if (name == "strong-check") sub->add_option("--n", o.n, "power of the twist in the check");
        if (name == "fg-check" || name == "variety-dim")
            sub->add_option("--gen-index", o.gen_index, "largest HH index sampled for generators");
        if (name == "hochschild") sub->add_flag("--products", o.products, "include the product table");
        if (name == "builtin") sub->add_option("--emit", o.emit_path, "write the workspace text here");
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    std::string cmd;
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        out << error_report("", "UsageError", e.what()).dump(2) << "\n";
        return 2;
    }
    for (const auto* s : app.get_subcommands()) cmd = s->get_name();

    json report;
    int code = 0;
    try {
        Runner r(o);
        report = r.run(cmd);
    } catch (const ParseError& e) {
        report = error_report(cmd, e.kind(), e.what());
        report["error"]["source"] = e.source;
        report["error"]["line"] = e.line;
        report["error"]["col"] = e.col;
        if (!e.entity.empty()) report["error"]["entity"] = e.entity;
        if (!e.cause.empty()) report["error"]["cause"] = e.cause;
        err << e.source << ":" << e.line << ":" << e.col << ": " << e.kind() << ": " << e.what() << "\n";
        code = 1;
    } catch (const Error& e) {
        report = error_report(cmd, e.kind(), e.what());
        err << e.kind() << ": " << e.what() << "\n";
        code = e.kind() == "UsageError" ? 2 : 1;
    } catch (const std::exception& e) {
        report = error_report(cmd, "InternalError", e.what());
        err << "InternalError: " << e.what() << "\n";
        code = 1;
    }
    const std::string text = report.dump(2) + "\n";
    out << text;
    if (!o.json_path.empty()) {
        std::ofstream f(o.json_path);
        if (!f) {
            err << "cannot write " << o.json_path << "\n";
            return 1;
        }
        f << text;
    }
    return code;
}

}  // namespace twc
