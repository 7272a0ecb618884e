#include "app.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "coxeter.hpp"
#include "json.hpp"
#include "module.hpp"
#include "pathalg.hpp"
#include "tautilt.hpp"

namespace preproj::app {

using nlohmann::json;
using namespace repmod;

namespace {

[[noreturn]] void invalid(const std::string& path, const std::string& what) {
    fail(ErrorCode::ValidationError, path + ": " + what);
}

int64_t read_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) invalid(path, "expected an integer");
    return v.get<int64_t>();
}

std::string join_ints(const std::vector<size_t>& v) {
    std::string s = "[";
    for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + "]";
}

std::string vertex_list(const std::vector<int>& v) {
    std::string s;
    for (size_t k = 0; k < v.size(); ++k) s += (k ? "+" : "") + std::string("e") + std::to_string(v[k] + 1) + "P";
    return s.empty() ? "0" : s;
}

std::string node_id(const std::string& word) { return word.empty() ? "we" : "w" + word; }

void require_dynkin(const RunConfig& cfg, const std::string& what) {
    if (!cartan::is_dynkin(cfg.data.cartan, cfg.data.symmetrizer))
        fail(ErrorCode::NotDynkin, what + " needs a Cartan datum of Dynkin type, where Pi is finite-dimensional");
}

pathalg::AlgebraPtr build_algebra(const RunConfig& cfg) { return pathalg::Algebra::build(cfg.data, cfg.field); }

coxeter::WeylGroup full_weyl(const RunConfig& cfg) {
    coxeter::WeylGroup w = coxeter::WeylGroup::enumerate(cfg.data.cartan, cfg.cap);
    if (!w.complete())
        fail(ErrorCode::CapExceeded, "Weyl group has more than " + std::to_string(cfg.cap) + " elements");
    return w;
}

// ---------------------------------------------------------------------------

CommandResult cmd_check(const RunConfig& cfg, const OutputOptions& opts) {
    const auto& d = cfg.data;
    const int n = d.n();
    const bool dynkin = cartan::is_dynkin(d.cartan, d.symmetrizer);
    json comps = json::array();
    for (const auto& comp : d.cartan.components()) {
        std::vector<int> one_based;
        for (int v : comp) one_based.push_back(v + 1);
        comps.push_back({{"vertices", one_based}, {"dynkin", cartan::component_is_dynkin(d.cartan, d.symmetrizer, comp)}});
    }
    json orient = json::array();
    for (const auto& [i, j] : d.orientation.pairs) orient.push_back({i + 1, j + 1});
    json j = {{"rank", n},
              {"cartan", d.cartan.entries()},
              {"symmetrizer", d.symmetrizer.c},
              {"symmetrizer_minimal", d.symmetrizer.minimal},
              {"orientation", orient},
              {"components", comps},
              {"gram", cartan::gram_matrix(d.cartan, d.symmetrizer)},
              {"dynkin", dynkin},
              {"arrows", d.quiver.arrow_count()},
              {"field", cfg.field.name()}};
    if (opts.json) return {0, j.dump(2) + "\n", ""};
    std::ostringstream os;
    os << "rank: " << n << "\n";
    os << "cartan: " << json(d.cartan.entries()).dump() << "\n";
    os << "symmetrizer: " << json(d.symmetrizer.c).dump() << (d.symmetrizer.minimal ? " (minimal)" : "") << "\n";
    os << "orientation: " << orient.dump() << "\n";
    for (const auto& c : comps)
        os << "component " << c["vertices"].dump() << ": " << (c["dynkin"].get<bool>() ? "Dynkin" : "not Dynkin") << "\n";
    os << "doubled quiver: " << d.quiver.arrow_count() << " arrows\n";
    os << "Dynkin type: " << (dynkin ? "yes" : "no") << "\n";
    return {0, os.str(), ""};
}

CommandResult cmd_algebra(const RunConfig& cfg, const OutputOptions& opts) {
    auto a = build_algebra(cfg);
    pathalg::AlgebraReport r = pathalg::verify_algebra(*a, 64, cfg.seed);
    json j = {{"dim", r.dim},
              {"projective_dims", r.projective_dims},
              {"radical_layers", r.radical_layers},
              {"verified", r.ok},
              {"field", cfg.field.name()}};
    std::vector<int> sigma;
    bool selfinjective = true;
    try {
        sigma = nakayama_permutation(a);
        std::vector<int> one_based;
        for (int s : sigma) one_based.push_back(s + 1);
        j["nakayama_permutation"] = one_based;
    } catch (const Error&) {
        selfinjective = false;
        j["nakayama_permutation"] = nullptr;
    }
    std::vector<std::string> names;
    if (opts.basis) {
        for (size_t b = 0; b < a->dim(); ++b) names.push_back(a->basis_name(b));
        j["basis"] = names;
    }
    if (!r.ok) j["failure"] = r.failure;
    const int code = r.ok ? 0 : 1;
    if (opts.json) return {code, j.dump(2) + "\n", r.ok ? "" : r.failure + "\n"};
    std::ostringstream os;
    os << "dim Pi = " << r.dim << "\n";
    for (int i = 0; i < a->n(); ++i)
        os << "dim e" << i + 1 << "Pi = " << r.projective_dims[i] << "  radical layers " << join_ints(r.radical_layers[i])
           << "\n";
    if (selfinjective) {
        os << "Nakayama permutation:";
        for (int s : sigma) os << " " << s + 1;
        os << "\n";
    }
    os << "relations and associativity: " << (r.ok ? "ok" : "FAILED: " + r.failure) << "\n";
    if (opts.basis) {
        os << "basis:";
        for (const auto& s : names) os << " " << s;
        os << "\n";
    }
    return {code, os.str(), ""};
}

CommandResult cmd_weyl(const RunConfig& cfg, const OutputOptions& opts) {
    coxeter::WeylGroup w = coxeter::WeylGroup::enumerate(cfg.data.cartan, cfg.cap);
    json elems = json::array();
    for (const auto& e : w.elements()) elems.push_back({{"word", coxeter::word_string(e.word)}, {"length", e.length}});
    json j = {{"order", w.size()}, {"longest_length", w.max_length()}, {"elements", elems}, {"complete", w.complete()}};
    if (opts.json) return {0, j.dump(2) + "\n", ""};
    std::ostringstream os;
    if (w.complete()) {
        os << "order: " << w.size() << "\n";
        os << "longest element: w" << coxeter::word_string(w[w.longest()].word) << " (length " << w.max_length() << ")\n";
    } else {
        os << "truncated ball: " << w.size() << " elements up to length " << w.max_length() << " (cap " << cfg.cap
           << "); the group is larger\n";
    }
    for (const auto& e : w.elements()) os << node_id(coxeter::word_string(e.word)) << " " << e.length << "\n";
    return {0, os.str(), ""};
}

json pair_json(const tautilt::SttPair& p) {
    json summands = json::array(), dims = json::array(), ranks = json::array(), proj = json::array();
    for (const auto& s : p.summands) {
        summands.push_back(s.name);
        dims.push_back(s.module.dims());
        auto r = locally_free_rank(s.module);
        ranks.push_back(r ? json(*r) : json(nullptr));
    }
    for (int v : p.projective) proj.push_back("e" + std::to_string(v + 1) + "P");
    return {{"word", p.word}, {"summands", summands}, {"dims", dims}, {"rank_vectors", ranks}, {"projective", proj}};
}

CommandResult cmd_stt(const RunConfig& cfg, const OutputOptions& opts) {
    require_dynkin(cfg, "stt");
    auto a = build_algebra(cfg);
    auto w = full_weyl(cfg);
    tautilt::IdealSemigroup sg(a, w);
    json pairs = json::array();
    std::ostringstream os;
    for (size_t e = 0; e < w.size(); ++e) {
        tautilt::SttPair p = tautilt::stt_pair(sg, e);
        pairs.push_back(pair_json(p));
        os << node_id(p.word) << ": (" << p.label() << ", " << vertex_list(p.projective) << ")\n";
    }
    if (opts.json) return {0, json{{"pairs", pairs}}.dump(2) + "\n", ""};
    os << w.size() << " support tau-tilting pairs\n";
    return {0, os.str(), ""};
}

CommandResult cmd_mutation_graph(const RunConfig& cfg, const OutputOptions& opts) {
    require_dynkin(cfg, "mutation-graph");
    auto a = build_algebra(cfg);
    auto w = full_weyl(cfg);
    tautilt::IdealSemigroup sg(a, w);
    tautilt::MutationGraph g = tautilt::mutation_graph(sg);
    std::ostringstream os;
    if (opts.dot) {
        os << "digraph mutation {\n";
        for (const auto& p : g.nodes) os << "  \"" << node_id(p.word) << "\" [label=\"" << p.label() << "\"];\n";
        for (const auto& e : g.edges)
            os << "  \"" << node_id(g.nodes[e.from].word) << "\" -> \"" << node_id(g.nodes[e.to].word) << "\" [label=\""
               << e.label + 1 << "\"];\n";
        os << "}\n";
        return {0, os.str(), ""};
    }
    if (opts.json) {
        json nodes = json::array(), edges = json::array();
        for (const auto& p : g.nodes) nodes.push_back(pair_json(p));
        for (const auto& e : g.edges)
            edges.push_back({{"from", g.nodes[e.from].word}, {"to", g.nodes[e.to].word}, {"label", e.label + 1}});
        return {0, json{{"nodes", nodes}, {"edges", edges}}.dump(2) + "\n", ""};
    }
    for (const auto& p : g.nodes) os << node_id(p.word) << ": " << p.label() << "\n";
    for (const auto& e : g.edges)
        os << node_id(g.nodes[e.from].word) << " --" << e.label + 1 << "--> " << node_id(g.nodes[e.to].word) << "\n";
    return {0, os.str(), ""};
}

CommandResult cmd_verify(const RunConfig& cfg, const OutputOptions& opts) {
    std::vector<CheckLine> lines = verify_suite(cfg);
    bool ok = true;
    json arr = json::array();
    std::ostringstream os;
    for (const auto& l : lines) {
        ok = ok && l.ok;
        arr.push_back({{"name", l.name}, {"ok", l.ok}, {"detail", l.detail}});
        os << (l.ok ? "PASS " : "FAIL ") << l.name << (l.detail.empty() ? "" : ": " + l.detail) << "\n";
    }
    if (opts.json) return {ok ? 0 : 1, json{{"ok", ok}, {"checks", arr}}.dump(2) + "\n", ""};
    os << (ok ? "all checks passed" : "verification FAILED") << "\n";
    return {ok ? 0 : 1, os.str(), ""};
}

}  // namespace

// ---------------------------------------------------------------------------

Field parse_field(const std::string& spec) {
    if (spec == "rational") return Field::rationals();
    if (spec.rfind("fp:", 0) == 0) {
        const std::string digits = spec.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 9)
            invalid("field", "expected fp:<prime>");
        try {
            return Field::prime(static_cast<uint32_t>(std::stoul(digits)));
        } catch (const Error& e) {
            invalid("field", e.what());
        }
    }
    invalid("field", "expected 'rational' or 'fp:<p>'");
}

RunConfig load_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::ParseError, e.what());
    }
    if (!j.is_object()) invalid("$", "config must be a JSON object");
    for (const auto& [key, _] : j.items())
        if (key != "cartan" && key != "symmetrizer" && key != "orientation" && key != "field" && key != "cap" &&
            key != "seed")
            invalid(key, "unknown key");
    if (!j.contains("cartan")) invalid("cartan", "missing");
    const json& c = j["cartan"];
    if (!c.is_array() || c.empty()) invalid("cartan", "expected a nonempty array of rows");
    cartan::IntMatrix entries;
    for (size_t r = 0; r < c.size(); ++r) {
        const std::string rp = "cartan[" + std::to_string(r) + "]";
        if (!c[r].is_array() || c[r].size() != c.size()) invalid(rp, "expected a row of length " + std::to_string(c.size()));
        std::vector<int64_t> row;
        for (size_t k = 0; k < c[r].size(); ++k) row.push_back(read_int(c[r][k], rp + "[" + std::to_string(k) + "]"));
        entries.push_back(std::move(row));
    }
    const size_t n = entries.size();

    std::optional<std::vector<int64_t>> sym;
    if (j.contains("symmetrizer")) {
        const json& s = j["symmetrizer"];
        if (s.is_string()) {
            if (s.get<std::string>() != "minimal") invalid("symmetrizer", "expected \"minimal\" or an array");
        } else if (s.is_array()) {
            if (s.size() != n) invalid("symmetrizer", "expected " + std::to_string(n) + " entries");
            std::vector<int64_t> v;
            for (size_t k = 0; k < s.size(); ++k) v.push_back(read_int(s[k], "symmetrizer[" + std::to_string(k) + "]"));
            sym = std::move(v);
        } else {
            invalid("symmetrizer", "expected \"minimal\" or an array");
        }
    }

    std::optional<cartan::Orientation> orient;
    if (j.contains("orientation")) {
        const json& o = j["orientation"];
        if (!o.is_array()) invalid("orientation", "expected an array of [i, j] pairs");
        cartan::Orientation out;
        for (size_t k = 0; k < o.size(); ++k) {
            const std::string p = "orientation[" + std::to_string(k) + "]";
            if (!o[k].is_array() || o[k].size() != 2) invalid(p, "expected a pair [i, j]");
            const int64_t a = read_int(o[k][0], p + "[0]"), b = read_int(o[k][1], p + "[1]");
            if (a < 1 || b < 1 || a > static_cast<int64_t>(n) || b > static_cast<int64_t>(n))
                invalid(p, "vertex out of range 1.." + std::to_string(n));
            out.pairs.emplace(static_cast<int>(a - 1), static_cast<int>(b - 1));
        }
        orient = std::move(out);
    }

    RunConfig cfg;
    if (j.contains("field")) {
        const json& f = j["field"];
        if (!f.is_object() || !f.contains("type") || !f["type"].is_string()) invalid("field.type", "expected a string");
        const std::string type = f["type"].get<std::string>();
        if (type == "rational") {
            cfg.field = Field::rationals();
        } else if (type == "prime") {
            if (!f.contains("p")) invalid("field.p", "missing");
            const int64_t p = read_int(f["p"], "field.p");
            if (p < 2 || p > 4'000'000'000LL) invalid("field.p", "out of range");
            try {
                cfg.field = Field::prime(static_cast<uint32_t>(p));
            } catch (const Error& e) {
                invalid("field.p", e.what());
            }
        } else {
            invalid("field.type", "expected \"rational\" or \"prime\"");
        }
    }
    if (j.contains("cap")) {
        const int64_t cap = read_int(j["cap"], "cap");
        if (cap <= 0) invalid("cap", "must be positive");
        cfg.cap = static_cast<size_t>(cap);
    }
    if (j.contains("seed")) {
        const int64_t seed = read_int(j["seed"], "seed");
        if (seed < 0) invalid("seed", "must be nonnegative");
        cfg.seed = static_cast<uint64_t>(seed);
    }

    try {
        cfg.data = cartan::CartanData::make(entries, sym ? &*sym : nullptr, orient ? &*orient : nullptr);
    } catch (const Error& e) {
        std::string path = "cartan";
        if (e.code() == ErrorCode::NotASymmetrizer) path = "symmetrizer";
        if (e.code() == ErrorCode::InvalidOrientation) path = "orientation";
        invalid(path, std::string(error_code_name(e.code())) + ": " + e.what());
    }
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ParseError, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_config(ss.str());
}

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"check", "algebra", "weyl", "stt", "mutation-graph", "verify"};
    return names;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::VerificationFailed:
        case ErrorCode::ReportFailure:
        case ErrorCode::SocleNotSimple:
        case ErrorCode::Internal: return 1;
        default: return 2;
    }
}

CommandResult run_command(const RunConfig& cfg, const std::string& command, const OutputOptions& opts) {
    try {
        if (command == "check") return cmd_check(cfg, opts);
        if (command == "algebra") return cmd_algebra(cfg, opts);
        if (command == "weyl") return cmd_weyl(cfg, opts);
        if (command == "stt") return cmd_stt(cfg, opts);
        if (command == "mutation-graph") return cmd_mutation_graph(cfg, opts);
        if (command == "verify") return cmd_verify(cfg, opts);
        return {2, "", "unknown command '" + command + "'\n"};
    } catch (const Error& e) {
        return {exit_code_for(e.code()), "", std::string(error_code_name(e.code())) + ": " + e.what() + "\n"};
    }
}

// ---------------------------------------------------------------------------

std::vector<CheckLine> verify_suite(const RunConfig& cfg) {
    std::vector<CheckLine> out;
    auto add = [&](const std::string& name, bool ok, const std::string& detail = "") {
        out.push_back({name, ok, detail});
    };
    const auto& d = cfg.data;
    const int n = d.n();

    // Weyl side: geometric representation and Coxeter orders
    {
        bool ok = true;
        std::string detail;
        for (int i = 0; i < n; ++i) {
            auto si = coxeter::simple_reflection_matrix(d.cartan, i);
            if (!(si * si == coxeter::IntSquare::identity(n))) ok = false, detail = "s" + std::to_string(i + 1) + "^2 != 1";
            for (int j = 0; j < i; ++j) {
                const int m = coxeter::coxeter_order(d.cartan, i, j);
                auto p = si * coxeter::simple_reflection_matrix(d.cartan, j);
                auto acc = p;
                int order = 0;
                for (int k = 1; k <= 6; ++k) {
                    if (acc == coxeter::IntSquare::identity(n)) {
                        order = k;
                        break;
                    }
                    acc = acc * p;
                }
                if (order != m) {
                    ok = false;
                    detail = "order of s" + std::to_string(i + 1) + "s" + std::to_string(j + 1) + " is " +
                             (order ? std::to_string(order) : "> 6") + ", expected " + (m ? std::to_string(m) : "infinite");
                }
            }
        }
        add("Coxeter relations of the geometric representation", ok, detail);
    }
    coxeter::WeylGroup w = coxeter::WeylGroup::enumerate(d.cartan, cfg.cap);
    const bool dynkin = cartan::is_dynkin(d.cartan, d.symmetrizer);
    if (!dynkin) {
        add("Weyl group ball", true,
            std::to_string(w.size()) + " elements up to length " + std::to_string(w.max_length()) +
                (w.complete() ? "" : " (truncated)"));
        add("algebra-side checks skipped", true, "Pi is infinite-dimensional for non-Dynkin data");
        return out;
    }
    if (!w.complete()) {
        add("Weyl group enumeration", false, "cap " + std::to_string(cfg.cap) + " reached");
        return out;
    }
    add("Weyl group enumeration", true, "|W| = " + std::to_string(w.size()));

    pathalg::AlgebraPtr a;
    try {
        a = build_algebra(cfg);
    } catch (const Error& e) {
        add("algebra construction", false, e.what());
        return out;
    }
    pathalg::AlgebraReport ar = pathalg::verify_algebra(*a, 64, cfg.seed);
    add("relations, associativity and unit of Pi", ar.ok, ar.ok ? "dim Pi = " + std::to_string(ar.dim) : ar.failure);

    try {
        const auto sigma = nakayama_permutation(a);
        std::vector<ModuleRep> e, p, ei;
        for (int i = 0; i < n; ++i) {
            e.push_back(generalized_simple(a, i));
            p.push_back(projective(a, i));
            ei.push_back(tautilt::ideal_block(a, tautilt::vertex_ideal(*a, {i}), i));
        }
        {
            bool ok = true;
            std::string detail;
            for (int i = 0; i < n; ++i) {
                int64_t lhs = static_cast<int64_t>(e[i].dim() + e[sigma[i]].dim());
                for (int j = 0; j < n; ++j)
                    if (j != i) lhs += std::abs(d.cartan(j, i)) * static_cast<int64_t>(p[j].dim());
                if (lhs != 2 * static_cast<int64_t>(p[i].dim()))
                    ok = false, detail = "fails at vertex " + std::to_string(i + 1);
            }
            add("dim E_i + dim E_sigma(i) + sum_j |c_ji| dim e_jPi = 2 dim e_iPi", ok, detail);
        }
        {
            bool ok = true;
            for (int i = 0; i < n; ++i)
                ok = ok && d.c(i) == d.c(sigma[i]) && is_isomorphic(nakayama_functor(e[sigma[i]]), e[i], cfg.seed);
            add("c_i = c_sigma(i) and nu E_sigma(i) = E_i", ok);
        }
        {
            bool ok = true;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    ok = ok && hom_dim(p[j], e[i]) == (i == j ? static_cast<size_t>(d.c(i)) : 0u);
            add("dim Hom(e_jPi, E_i) = c_i delta_ij", ok);
        }
        {
            bool ok = true;
            for (int i = 0; i < n; ++i) {
                const auto ideal = tautilt::vertex_ideal(*a, {i});
                for (int j = 0; j < n; ++j) ok = ok && hom_dim(tautilt::ideal_block(a, ideal, j), e[i]) == 0;
            }
            add("Hom(I_i, E_i) = 0", ok);
        }
        {
            bool ok = true;
            for (int i = 0; i < n; ++i) {
                bool isolated = true;
                for (int j = 0; j < n; ++j) isolated = isolated && !d.cartan.adjacent(i, j);
                if (!isolated) ok = ok && is_isomorphic(tau(ei[i]), e[i], cfg.seed);
            }
            add("tau(e_iI_i) = E_i", ok);
        }
        {
            std::vector<ModuleRep> corpus;
            for (int i = 0; i < n; ++i) {
                corpus.push_back(e[i]);
                if (!ei[i].is_zero()) corpus.push_back(ei[i]);
                corpus.push_back(p[i]);
            }
            bool ok = true;
            for (size_t x = 0; x < corpus.size(); ++x)
                for (size_t y = 0; y < x; ++y) ok = ok && ext1_dim(corpus[x], corpus[y]) == ext1_dim(corpus[y], corpus[x]);
            add("Ext^1 symmetry on E_i, e_iI_i, e_iPi", ok);
        }
    } catch (const Error& err) {
        add("homological identities", false, err.what());
        return out;
    }

    tautilt::IdealSemigroup sg(a, w);
    tautilt::ClassificationReport r = tautilt::classification_report(sg, 400, cfg.seed);
    auto first_failure = [&](const std::string& prefix) {
        for (const auto& f : r.failures)
            if (f.rfind(prefix, 0) == 0) return f;
        return std::string();
    };
    add("every reduced word of w gives the same ideal I_w", r.well_defined, first_failure("reduced"));
    add("the ideals I_w are pairwise distinct", r.injective, r.injective ? "" : r.failures.front());
    add("every (I_w, P_w) is a support tau-tilting pair", r.stt_ok, first_failure("pair"));
    {
        std::string names;
        for (const auto& s : r.tau_rigid_names) names += (names.empty() ? "" : ", ") + s;
        add("nonzero blocks e_iI_w are indecomposable tau-rigid", r.tau_rigid_ok, "{" + names + "}");
    }
    add("I_u I_v = I_(u*v) for the Demazure product", r.demazure_ok,
        std::to_string(r.demazure_pairs) + " pairs" + (r.demazure_ok ? "" : "; " + first_failure("I_u")));

    tautilt::MutationGraph g = tautilt::mutation_graph(sg);
    std::vector<size_t> edges;
    if (n <= 2) {
        for (size_t k = 0; k < g.edges.size(); ++k) edges.push_back(k);
    } else {
        std::mt19937_64 rng(cfg.seed);
        std::vector<size_t> all(g.edges.size());
        for (size_t k = 0; k < all.size(); ++k) all[k] = k;
        std::shuffle(all.begin(), all.end(), rng);
        edges.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(std::min<size_t>(20, all.size())));
    }
    {
        bool ok = true;
        std::string detail = std::to_string(edges.size()) + " of " + std::to_string(g.edges.size()) + " edges";
        for (const auto& c : tautilt::check_edges_by_mutation(a, g, edges))
            if (!c.ok) ok = false, detail = "edge " + std::to_string(c.edge) + ": " + c.reason;
        add("mutation graph edges reproduced by left mutation", ok, detail);
    }
    add(std::to_string(r.stt_count) + " support τ-tilting modules = |W|", r.stt_count == w.size(),
        "|W| = " + std::to_string(w.size()));
    return out;
}

}  // namespace preproj::app
