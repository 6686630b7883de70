#include "linfty/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace linf::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------- JSON helpers

void check_keys(const json& obj, const std::string& what, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional = {}) {
    if (!obj.is_object()) throw InputError(what + " must be an object");
    std::set<std::string> allowed;
    for (const char* k : required) {
        allowed.insert(k);
        if (!obj.contains(k)) throw InputError(what + ": missing field '" + k + "'");
    }
    for (const char* k : optional) allowed.insert(k);
    for (const auto& [k, v] : obj.items())
        if (!allowed.count(k)) throw InputError(what + ": unknown field '" + k + "'");
}

int get_int(const json& obj, const char* key) {
    const json& v = obj.at(key);
    if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

std::string get_string(const json& obj, const char* key) {
    const json& v = obj.at(key);
    if (!v.is_string()) throw InputError(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

int parse_weight_key(const std::string& key) {
    if (key.empty() || key.size() > 3 || !std::all_of(key.begin(), key.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw InputError("map weight '" + key + "' is not a positive integer");
    const int n = std::stoi(key);
    if (n < 1) throw InputError("map weight must be at least 1");
    return n;
}

bool valid_name(const std::string& name) {
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    });
}

Word parse_word(const GradedSpace& space, const std::string& key) {
    std::string_view s = key;
    if (s.size() < 3 || s.front() != '(' || s.back() != ')') throw InputError("word '" + key + "' must look like (x,y)");
    s = s.substr(1, s.size() - 2);
    Word w;
    while (true) {
        const auto comma = s.find(',');
        std::string name(s.substr(0, comma));
        name.erase(0, name.find_first_not_of(' '));
        name.erase(name.find_last_not_of(' ') + 1);
        w.push_back(space.index(name));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return w;
}

void read_values(MultiMap& m, const json& values) {
    if (!values.is_object()) throw InputError("map values must be an object of word -> linear combination");
    std::set<Word> seen;
    for (const auto& [key, val] : values.items()) {
        if (!val.is_string()) throw InputError("value of " + key + " must be a string");
        const Word w = parse_word(*m.source(), key);
        if (static_cast<int>(w.size()) != m.weight())
            throw InputError("word " + key + " given to a map of weight " + std::to_string(m.weight()));
        if (auto canon = canonicalize(*m.source(), w); canon && !seen.insert(canon->word).second)
            throw InputError("word " + key + " is given twice");
        m.set(w, parse_element(m.target(), val.get<std::string>(), m.output_degree(w)));
    }
}

json write_values(const MultiMap& m) {
    json out = json::object();
    for (const auto& [w, v] : m.values()) out[word_to_string(*m.source(), w)] = to_string(v);
    return out;
}

json write_components(const ComponentMap& c) {
    json out = json::object();
    for (int n = 1; n <= c.cap(); ++n)
        if (!c.component(n).zero()) out[std::to_string(n)] = write_values(c.component(n));
    return out;
}

json write_path(const PolyVector& v) {
    json out = json::array();
    if (v.zero()) return out;
    for (int j = 0; j <= max_power(v); ++j) out.push_back(to_string(coefficient(v, j)));
    return out;
}

PolyVector read_path(const SpacePtr& space, int degree, const json& arr) {
    if (!arr.is_array()) throw InputError("a path must be an array of linear combinations, one per power of t");
    PolyVector v(space, degree);
    for (std::size_t j = 0; j < arr.size(); ++j) {
        if (!arr[j].is_string()) throw InputError("path coefficients must be strings");
        const Element e = parse_element(space, arr[j].get<std::string>(), degree);
        for (const auto& [i, c] : e.terms()) v.add_term(i, Poly::monomial(c, static_cast<int>(j)));
    }
    return v;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw InputError("cannot write " + path.string());
}

template <class T>
T load_as(const fs::path& base, const std::string& ref, std::optional<int> cap, const char* kind) {
    Document d = load_document(base / ref, cap);
    if (auto* p = std::get_if<T>(&d)) return std::move(*p);
    throw InputError(ref + " is not a " + kind + " document");
}

int document_cap(const json& j, std::optional<int> cap) {
    const int c = cap ? *cap : get_int(j, "cap");
    if (c < 1) throw InputError("cap must be at least 1");
    return c;
}

// ---------------------------------------------------------------- per kind

AlgebraDoc parse_algebra(const json& j, std::optional<int> cap) {
    check_keys(j, "algebra", {"kind", "cap", "basis", "maps"});
    const int own_cap = get_int(j, "cap");
    if (own_cap < 1) throw InputError("cap must be at least 1");
    const json& b = j.at("basis");
    if (!b.is_object() || b.empty()) throw InputError("basis must be a nonempty object of name -> degree");
    std::vector<BasisElement> basis;
    for (const auto& [name, deg] : b.items()) {
        if (!valid_name(name)) throw InputError("invalid basis name '" + name + "'");
        if (!deg.is_number_integer()) throw InputError("degree of " + name + " must be an integer");
        basis.push_back({name, deg.get<int>()});
    }
    SpacePtr space = make_space(std::move(basis));
    const json& maps = j.at("maps");
    if (!maps.is_object()) throw InputError("maps must be an object keyed by weight");
    std::vector<MultiMap> qs;
    for (const auto& [key, vals] : maps.items()) {
        const int n = parse_weight_key(key);
        if (n > own_cap) throw InputError("map of weight " + key + " exceeds the cap " + std::to_string(own_cap));
        MultiMap m(space, space, n, 2 - n);
        read_values(m, vals);
        qs.push_back(std::move(m));
    }
    LInftyStructure L(space, own_cap, qs);
    return {cap ? recap(L, *cap) : L};
}

MorphismDoc parse_morphism(const json& j, const fs::path& base, std::optional<int> cap) {
    check_keys(j, "morphism", {"kind", "cap", "source", "target", "components"});
    const int c = document_cap(j, cap);
    const std::string source_ref = get_string(j, "source");
    const std::string target_ref = get_string(j, "target");
    const LInftyStructure src = load_as<AlgebraDoc>(base, source_ref, c, "algebra").algebra;
    const LInftyStructure dst = load_as<AlgebraDoc>(base, target_ref, c, "algebra").algebra;
    ComponentMap comps(src.space(), dst.space(), c, 0);
    const json& cj = j.at("components");
    if (!cj.is_object()) throw InputError("components must be an object keyed by weight");
    for (const auto& [key, vals] : cj.items()) {
        const int n = parse_weight_key(key);
        if (n > get_int(j, "cap")) throw InputError("component of weight " + key + " exceeds the cap");
        MultiMap m(src.space(), dst.space(), n, 1 - n);
        read_values(m, vals);
        if (n <= c) comps.set_component(std::move(m));
    }
    return {source_ref, target_ref, MorphismComponents(src, dst, comps)};
}

MCDoc parse_mc(const json& j, const fs::path& base, std::optional<int> cap) {
    check_keys(j, "mc-element", {"kind", "cap", "algebra", "element"});
    const int c = document_cap(j, cap);
    MCDoc d;
    d.algebra_ref = get_string(j, "algebra");
    d.algebra = load_as<AlgebraDoc>(base, d.algebra_ref, c, "algebra").algebra;
    d.element = parse_element(d.algebra.space(), get_string(j, "element"), 1);
    if (d.element.degree() != 1) throw InputError("a Maurer-Cartan element must have degree 1");
    return d;
}

MapDoc parse_map(const json& j, const fs::path& base, std::optional<int> cap) {
    check_keys(j, "map", {"kind", "source", "target", "weight", "degree", "values"});
    MapDoc d;
    d.source_ref = get_string(j, "source");
    d.target_ref = get_string(j, "target");
    const SpacePtr src = load_as<AlgebraDoc>(base, d.source_ref, cap, "algebra").algebra.space();
    const SpacePtr dst = load_as<AlgebraDoc>(base, d.target_ref, cap, "algebra").algebra.space();
    d.map = MultiMap(src, dst, get_int(j, "weight"), get_int(j, "degree"));
    read_values(d.map, j.at("values"));
    return d;
}

RequestDoc parse_request(const json& j, const fs::path& base, std::optional<int> cap) {
    check_keys(j, "request", {"kind", "cap", "morphism", "n", "H"});
    const int c = document_cap(j, cap);
    const std::string morphism_ref = get_string(j, "morphism");
    const std::string map_ref = get_string(j, "H");
    return {morphism_ref, map_ref,
            {load_as<MorphismDoc>(base, morphism_ref, c, "morphism").morphism, get_int(j, "n"),
             load_as<MapDoc>(base, map_ref, c, "map").map}};
}

HomotopyDoc parse_homotopy(const json& j, const fs::path& base, std::optional<int> cap) {
    check_keys(j, "homotopy", {"kind", "cap", "from", "to", "h0", "h1"});
    const int c = document_cap(j, cap);
    const std::string from_ref = get_string(j, "from");
    const std::string to_ref = get_string(j, "to");
    MorphismComponents F = load_as<MorphismDoc>(base, from_ref, c, "morphism").morphism;
    MorphismComponents G = load_as<MorphismDoc>(base, to_ref, c, "morphism").morphism;
    if (!(F.source() == G.source()) || !(F.target() == G.target()))
        throw InputError("the two morphisms of a homotopy must share source and target");
    const ConvolutionAlgebra U = build_convolution(F.source(), F.target());
    HomotopyElement h{read_path(U.space(), 1, j.at("h0")), read_path(U.space(), 0, j.at("h1"))};
    return {from_ref, to_ref, std::move(F), std::move(G), std::move(h)};
}

// ---------------------------------------------------------------- reports

struct Report {
    Report(std::string command, int cap) : command(std::move(command)), cap(cap) {}

    std::string command;
    int cap = 0;
    bool ok = true;
    json data = json::object();
    std::vector<std::string> lines;
};

void print(const Report& r, bool as_json, std::ostream& out) {
    if (as_json) {
        json j;
        j["command"] = r.command;
        j["cap"] = r.cap;
        j["verdict"] = r.ok ? "pass" : "fail";
        for (const auto& [k, v] : r.data.items()) j[k] = v;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& l : r.lines) out << l << "\n";
    }
}

std::string cap_text(int cap) { return "weight cap " + std::to_string(cap); }

std::string steps(int k) { return std::to_string(k) + (k == 1 ? " step" : " steps"); }

void add_residuals(Report& r, const GradedSpace& space, const ResidualReport& rep, const std::string& key) {
    json arr = json::array();
    for (const auto& [n, list] : rep.residuals)
        for (const auto& wr : list) {
            arr.push_back({{"weight", n}, {"word", word_to_string(space, wr.word)}, {"value", to_string(wr.value)}});
            r.lines.push_back("  weight " + std::to_string(n) + " " + word_to_string(space, wr.word) + ": " +
                              to_string(wr.value));
        }
    r.data[key] = arr;
}

fs::path resolve(const fs::path& base, const std::string& ref) { return fs::absolute(base / ref).lexically_normal(); }

std::string relative_to(const fs::path& target, const fs::path& dir) {
    return fs::absolute(target).lexically_normal().lexically_proximate(fs::absolute(dir).lexically_normal()).generic_string();
}

fs::path dir_of(const fs::path& file) {
    const fs::path p = file.parent_path();
    return p.empty() ? fs::path(".") : p;
}

// ---------------------------------------------------------------- commands

struct Options {
    std::optional<int> cap;
    std::string format = "text";
    std::string input;
    std::string pi;
    std::string xi;
    std::optional<int> n;
    std::string H;
    std::string out;
    std::string homotopy_out;
};

template <class T>
T expect(const Document& d, const char* kind) {
    if (auto* p = std::get_if<T>(&d)) return *p;
    throw InputError(std::string("expected a ") + kind + " document");
}

Report check_linfty_cmd(const Options& o) {
    const LInftyStructure L = expect<AlgebraDoc>(load_document(o.input, o.cap), "algebra").algebra;
    Report r{"check-linfty", L.cap()};
    const ResidualReport rep = check_relations(L);
    r.ok = rep.pass();
    r.lines.push_back(std::string("relations ") + (r.ok ? "hold" : "fail") + " up to " + cap_text(L.cap()));
    add_residuals(r, *L.space(), rep, "residuals");
    return r;
}

Report check_morphism_cmd(const Options& o) {
    const MorphismComponents F = expect<MorphismDoc>(load_document(o.input, o.cap), "morphism").morphism;
    Report r{"check-morphism", F.cap()};
    const bool src = check_relations(F.source()).pass();
    const bool dst = check_relations(F.target()).pass();
    r.data["source_relations"] = src ? "hold" : "fail";
    r.data["target_relations"] = dst ? "hold" : "fail";
    if (!src) r.lines.push_back("source relations fail up to " + cap_text(F.cap()));
    if (!dst) r.lines.push_back("target relations fail up to " + cap_text(F.cap()));
    const ResidualReport rep = check_morphism(F);
    r.ok = src && dst && rep.pass();
    r.lines.push_back(std::string("morphism relations ") + (rep.pass() ? "hold" : "fail") + " up to " +
                      cap_text(F.cap()));
    add_residuals(r, *F.source().space(), rep, "residuals");
    return r;
}

bool q1_squares_to_zero(const LInftyStructure& L) {
    for (const Word& w : wedge_basis(*L.space(), 1))
        if (!relation_residual(L, w).zero()) return false;
    return true;
}

Report cohomology_cmd(const Options& o) {
    const LInftyStructure L = expect<AlgebraDoc>(load_document(o.input, o.cap), "algebra").algebra;
    Report r{"cohomology", L.cap()};
    if (!q1_squares_to_zero(L)) {
        r.ok = false;
        r.lines.push_back("Q_1 does not square to zero (" + cap_text(L.cap()) + ")");
        return r;
    }
    const CohomologyReport h = cohomology(L);
    r.lines.push_back("cohomology of Q_1 (" + cap_text(L.cap()) + ")");
    json degrees = json::array();
    for (const auto& [d, dim] : h.dimensions) {
        json reps = json::array();
        r.lines.push_back("H^" + std::to_string(d) + ": dimension " + std::to_string(dim));
        if (auto it = h.representatives.find(d); it != h.representatives.end())
            for (const Element& e : it->second) {
                reps.push_back(to_string(e));
                r.lines.push_back("  " + to_string(e));
            }
        degrees.push_back({{"degree", d}, {"dimension", dim}, {"representatives", reps}});
    }
    r.data["cohomology"] = degrees;
    return r;
}

Report quasi_iso_cmd(const Options& o) {
    const MorphismComponents F = expect<MorphismDoc>(load_document(o.input, o.cap), "morphism").morphism;
    Report r{"quasi-iso", F.cap()};
    bool chain_map = q1_squares_to_zero(F.source()) && q1_squares_to_zero(F.target());
    for (const Word& w : wedge_basis(*F.source().space(), 1))
        chain_map = chain_map && morphism_residual(F, w).zero();
    if (!chain_map) {
        r.ok = false;
        r.lines.push_back("F_1 is not a chain map (" + cap_text(F.cap()) + ")");
        return r;
    }
    const QuasiIsoReport q = is_quasi_iso(F);
    json per = json::array();
    for (const auto& [d, ok] : q.per_degree) {
        per.push_back({{"degree", d}, {"isomorphism", ok}});
        r.lines.push_back("H^" + std::to_string(d) + ": " + (ok ? "isomorphism" : "not an isomorphism"));
    }
    r.ok = q.verdict;
    r.data["per_degree"] = per;
    r.lines.push_back(std::string(q.verdict ? "F is" : "F is not") + " a quasi-isomorphism (" + cap_text(F.cap()) + ")");
    return r;
}

/// The algebra and element named by an algebra document plus --pi, or by an mc-element document.
std::pair<LInftyStructure, Element> algebra_and_pi(const Options& o) {
    Document d = load_document(o.input, o.cap);
    if (auto* mc = std::get_if<MCDoc>(&d)) {
        if (!o.pi.empty()) return {mc->algebra, parse_element(mc->algebra.space(), o.pi, 1)};
        return {mc->algebra, mc->element};
    }
    const LInftyStructure L = expect<AlgebraDoc>(d, "algebra or mc-element").algebra;
    if (o.pi.empty()) throw InputError("--pi is required with an algebra document");
    return {L, parse_element(L.space(), o.pi, 1)};
}

void add_mc_residual(Report& r, const MCReport& mc) {
    json contributions = json::object();
    r.lines.push_back("residual: " + to_string(mc.residual));
    for (const auto& [n, v] : mc.contributions) {
        contributions[std::to_string(n)] = to_string(v);
        r.lines.push_back("  weight " + std::to_string(n) + ": " + to_string(v));
    }
    r.data["residual"] = to_string(mc.residual);
    r.data["contributions"] = contributions;
}

Report mc_check_cmd(const Options& o) {
    const auto [L, pi] = algebra_and_pi(o);
    Report r{"mc-check", L.cap()};
    if (pi.degree() != 1) throw InputError("a Maurer-Cartan element must have degree 1");
    const MCReport mc = mc_residual(L, pi);
    r.ok = mc.pass();
    r.data["element"] = to_string(pi);
    r.lines.push_back(std::string("Maurer-Cartan equation ") + (r.ok ? "holds" : "fails") + " for " +
                      to_string(pi) + " up to " + cap_text(L.cap()));
    add_mc_residual(r, mc);
    return r;
}

Report twist_cmd(const Options& o) {
    const auto [L, pi] = algebra_and_pi(o);
    Report r{"twist", L.cap()};
    r.data["element"] = to_string(pi);
    LInftyStructure T;
    try {
        T = twist(L, pi);
    } catch (const NotMaurerCartan& e) {
        r.ok = false;
        r.lines.push_back(to_string(pi) + " is not Maurer-Cartan up to " + cap_text(L.cap()));
        r.lines.push_back("residual: " + to_string(e.residual()));
        r.data["residual"] = to_string(e.residual());
        return r;
    }
    const ResidualReport rep = check_relations(T);
    r.ok = rep.pass();
    for (int n = 1; n <= T.cap(); ++n)
        for (const auto& [w, v] : T.map(n).values())
            r.lines.push_back("Q^pi_" + std::to_string(n) + word_to_string(*T.space(), w) + " = " + to_string(v));
    r.lines.push_back(std::string("twisted relations ") + (r.ok ? "hold" : "fail") + " up to " + cap_text(T.cap()));
    add_residuals(r, *T.space(), rep, "residuals");
    r.data["algebra"] = json::parse(serialize_algebra(T));
    if (!o.out.empty()) {
        write_file(o.out, serialize_algebra(T));
        r.lines.push_back("wrote " + o.out);
    }
    return r;
}

Report gauge_flow_cmd(const Options& o) {
    const auto [L, pi] = algebra_and_pi(o);
    Report r{"gauge-flow", L.cap()};
    if (o.xi.empty()) throw InputError("--xi is required");
    const Element xi = parse_element(L.space(), o.xi, 0);
    if (xi.degree() != 0) throw InputError("the gauge parameter must have degree 0");
    r.data["start"] = to_string(pi);
    r.data["xi"] = to_string(xi);
    GaugeFlow flow;
    try {
        flow = gauge_flow(L, pi, xi);
    } catch (const NotMaurerCartan& e) {
        r.ok = false;
        r.lines.push_back("start point " + to_string(pi) + " is not Maurer-Cartan up to " + cap_text(L.cap()));
        r.lines.push_back("residual: " + to_string(e.residual()));
        r.data["residual"] = to_string(e.residual());
        return r;
    } catch (const NonTerminationError& e) {
        r.ok = false;
        r.lines.push_back(std::string("non-termination: ") + e.what() + " (" + cap_text(L.cap()) + ")");
        r.data["error"] = e.what();
        return r;
    }
    r.data["path"] = write_path(flow.path);
    r.data["iterations"] = flow.iterations;
    r.lines.push_back("pi_t = " + to_string(flow.path));
    r.lines.push_back("Picard iteration reached a fixpoint after " + steps(flow.iterations));
    json samples = json::object();
    for (const Rational& t : {Rational(0), Rational(1, 2), Rational(1)}) {
        const bool mc = mc_residual(L, evaluate(flow.path, t)).pass();
        samples[format_rational(t)] = mc;
        r.ok = r.ok && mc;
        r.lines.push_back("pi_" + format_rational(t) + " = " + to_string(evaluate(flow.path, t)) +
                          (mc ? " is" : " is not") + " Maurer-Cartan up to " + cap_text(L.cap()));
    }
    r.data["maurer_cartan_at"] = samples;
    return r;
}

Report lemma1_cmd(const Options& o) {
    Document d = load_document(o.input, o.cap);
    fs::path morphism_path;
    std::optional<PerturbationRequest> request;
    std::optional<MorphismDoc> source_doc;
    if (auto* rq = std::get_if<RequestDoc>(&d)) {
        if (o.n || !o.H.empty()) throw InputError("--n and --H cannot be combined with a request document");
        request = rq->request;
        morphism_path = resolve(dir_of(o.input), rq->morphism_ref);
        source_doc = load_as<MorphismDoc>(dir_of(o.input), rq->morphism_ref, request->F.cap(), "morphism");
    } else {
        source_doc = expect<MorphismDoc>(d, "morphism or request");
        if (!o.n || o.H.empty()) throw InputError("--n and --H are required with a morphism document");
        morphism_path = fs::absolute(o.input).lexically_normal();
        request = PerturbationRequest{source_doc->morphism, *o.n, expect<MapDoc>(load_document(o.H, o.cap), "map").map};
    }
    const PerturbationRequest& req = *request;
    Report r{"lemma1", req.F.cap()};
    const ConvolutionAlgebra U = build_convolution(req.F.source(), req.F.target());
    std::optional<Perturbation> perturbed;
    try {
        perturbed = perturb(U, req);
    } catch (const NonTerminationError& e) {
        r.ok = false;
        r.lines.push_back(std::string("non-termination: ") + e.what() + " (" + cap_text(req.F.cap()) + ")");
        return r;
    }
    const Perturbation& p = *perturbed;
    const ResidualReport rep = check_morphism(p.morphism);
    r.ok = rep.pass();
    r.data["n"] = req.n;
    r.data["components"] = write_components(p.morphism.components());
    r.lines.push_back("perturbed at weight " + std::to_string(req.n) + " (flow fixpoint after " +
                      steps(p.flow.iterations) + ")");
    for (int k = 1; k <= p.morphism.cap(); ++k)
        for (const auto& [w, v] : p.morphism.component(k).values())
            r.lines.push_back("F~_" + std::to_string(k) + word_to_string(*p.morphism.source().space(), w) + " = " +
                              to_string(v));
    r.lines.push_back(std::string("morphism relations ") + (r.ok ? "hold" : "fail") + " up to " +
                      cap_text(p.morphism.cap()));
    add_residuals(r, *p.morphism.source().space(), rep, "residuals");
    const fs::path in_dir = dir_of(morphism_path);
    if (!o.out.empty()) {
        const fs::path out_dir = dir_of(o.out);
        MorphismDoc out{relative_to(in_dir / source_doc->source_ref, out_dir),
                        relative_to(in_dir / source_doc->target_ref, out_dir), p.morphism};
        write_file(o.out, serialize(out));
        r.lines.push_back("wrote " + o.out);
    }
    if (!o.homotopy_out.empty()) {
        if (o.out.empty()) throw InputError("--homotopy-out needs --out for the perturbed morphism");
        const fs::path h_dir = dir_of(o.homotopy_out);
        HomotopyDoc h{relative_to(morphism_path, h_dir), relative_to(o.out, h_dir), req.F, p.morphism,
                      gauge_to_homotopy(U, req.F, gauge_parameter(req.F, req.H))};
        write_file(o.homotopy_out, serialize(h));
        r.lines.push_back("wrote " + o.homotopy_out);
    }
    return r;
}

Report homotopy_check_cmd(const Options& o) {
    const HomotopyDoc h = expect<HomotopyDoc>(load_document(o.input, o.cap), "homotopy");
    Report r{"homotopy-check", h.from.cap()};
    const ConvolutionAlgebra U = build_convolution(h.from.source(), h.from.target());
    const HomotopyReport rep = check_homotopy(U, h.from, h.to, h.h);
    r.ok = rep.pass();
    const auto status = [](bool ok) { return ok ? "holds" : "fails"; };
    r.lines.push_back(std::string("Maurer-Cartan equation for h0 ") + status(rep.curvature.zero()));
    if (!rep.curvature.zero()) r.lines.push_back("  residual: " + to_string(rep.curvature));
    r.lines.push_back(std::string("flow equation d h0/dt = Q^{h0}_1(h1) ") + status(rep.flow_defect.zero()));
    if (!rep.flow_defect.zero()) r.lines.push_back("  residual: " + to_string(rep.flow_defect));
    r.lines.push_back(std::string("h0 at t = 0 ") + (rep.start_ok ? "is" : "is not") + " the first morphism");
    r.lines.push_back(std::string("h0 at t = 1 ") + (rep.end_ok ? "is" : "is not") + " the second morphism");
    r.lines.push_back(std::string("homotopy ") + status(r.ok) + " up to " + cap_text(r.cap));
    r.data["curvature"] = write_path(rep.curvature);
    r.data["flow_defect"] = write_path(rep.flow_defect);
    r.data["start"] = rep.start_ok;
    r.data["end"] = rep.end_ok;
    return r;
}

Report convolution_mc_cmd(const Options& o) {
    const MorphismComponents F = expect<MorphismDoc>(load_document(o.input, o.cap), "morphism").morphism;
    Report r{"convolution-mc", F.cap()};
    const ConvolutionAlgebra U = build_convolution(F.source(), F.target());
    const Element alpha = U.to_u(morphism_to_mc(F));
    const MCReport mc = mc_residual(U.structure(), alpha);
    r.ok = mc.pass();
    r.data["element"] = to_string(alpha);
    r.lines.push_back("element of the convolution algebra: " + to_string(alpha));
    r.lines.push_back(std::string("Maurer-Cartan equation ") + (r.ok ? "holds" : "fails") + " in the convolution algebra up to " +
                      cap_text(F.cap()));
    add_mc_residual(r, mc);
    return r;
}

}  // namespace

LInftyStructure recap(const LInftyStructure& L, int cap) {
    if (cap < 1) throw InputError("cap must be at least 1");
    std::vector<MultiMap> maps;
    for (int n = 1; n <= std::min(cap, L.cap()); ++n) maps.push_back(L.map(n));
    return LInftyStructure(L.space(), cap, maps);
}

Document parse_document(std::string_view text, const fs::path& base, std::optional<int> cap) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw InputError("a document must be an object with a string 'kind'");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "algebra") return parse_algebra(j, cap);
    if (kind == "morphism") return parse_morphism(j, base, cap);
    if (kind == "mc-element") return parse_mc(j, base, cap);
    if (kind == "map") return parse_map(j, base, cap);
    if (kind == "request") return parse_request(j, base, cap);
    if (kind == "homotopy") return parse_homotopy(j, base, cap);
    throw InputError("unknown document kind '" + kind + "'");
}

Document load_document(const fs::path& path, std::optional<int> cap) {
    try {
        return parse_document(read_file(path), dir_of(path), cap);
    } catch (const InputError& e) {
        const std::string msg = e.what();
        if (msg.find(path.string()) != std::string::npos) throw;
        throw InputError(path.string() + ": " + msg);
    }
}

std::string serialize_algebra(const LInftyStructure& L) {
    json j;
    j["kind"] = "algebra";
    j["cap"] = L.cap();
    json basis = json::object();
    for (const auto& b : L.space()->basis()) basis[b.name] = b.degree;
    j["basis"] = basis;
    j["maps"] = write_components(L.components());
    return j.dump(2) + "\n";
}

std::string serialize(const Document& doc) {
    struct Visitor {
        std::string operator()(const AlgebraDoc& d) const { return serialize_algebra(d.algebra); }
        std::string operator()(const MorphismDoc& d) const {
            json j;
            j["kind"] = "morphism";
            j["cap"] = d.morphism.cap();
            j["source"] = d.source_ref;
            j["target"] = d.target_ref;
            j["components"] = write_components(d.morphism.components());
            return j.dump(2) + "\n";
        }
        std::string operator()(const MCDoc& d) const {
            json j;
            j["kind"] = "mc-element";
            j["cap"] = d.algebra.cap();
            j["algebra"] = d.algebra_ref;
            j["element"] = to_string(d.element);
            return j.dump(2) + "\n";
        }
        std::string operator()(const MapDoc& d) const {
            json j;
            j["kind"] = "map";
            j["source"] = d.source_ref;
            j["target"] = d.target_ref;
            j["weight"] = d.map.weight();
            j["degree"] = d.map.degree();
            j["values"] = write_values(d.map);
            return j.dump(2) + "\n";
        }
        std::string operator()(const RequestDoc& d) const {
            json j;
            j["kind"] = "request";
            j["cap"] = d.request.F.cap();
            j["morphism"] = d.morphism_ref;
            j["n"] = d.request.n;
            j["H"] = d.map_ref;
            return j.dump(2) + "\n";
        }
        std::string operator()(const HomotopyDoc& d) const {
            json j;
            j["kind"] = "homotopy";
            j["cap"] = d.from.cap();
            j["from"] = d.from_ref;
            j["to"] = d.to_ref;
            j["h0"] = write_path(d.h.h0);
            j["h1"] = write_path(d.h.h1);
            return j.dump(2) + "\n";
        }
    };
    return std::visit(Visitor{}, doc);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with weight-truncated L-infinity algebras"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--cap", o.cap, "override the document weight cap")->check(CLI::PositiveNumber);
    app.add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "json"}));

    using Handler = Report (*)(const Options&);
    std::vector<std::pair<CLI::App*, Handler>> commands;
    const auto add = [&](const char* name, const char* help, Handler h) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        sub->add_option("file", o.input, "input document")->required();
        commands.emplace_back(sub, h);
        return sub;
    };
    add("check-linfty", "check the relations of an algebra", check_linfty_cmd);
    add("check-morphism", "check the relations of a morphism", check_morphism_cmd);
    add("cohomology", "cohomology of Q_1", cohomology_cmd);
    add("quasi-iso", "whether F_1 is a quasi-isomorphism", quasi_iso_cmd);
    add("mc-check", "Maurer-Cartan residual", mc_check_cmd)->add_option("--pi", o.pi, "element as a linear combination");
    CLI::App* tw = add("twist", "twist an algebra by a Maurer-Cartan element", twist_cmd);
    tw->add_option("--pi", o.pi, "element as a linear combination");
    tw->add_option("--out", o.out, "write the twisted algebra here");
    CLI::App* gf = add("gauge-flow", "gauge flow of a Maurer-Cartan element", gauge_flow_cmd);
    gf->add_option("--pi", o.pi, "start point as a linear combination");
    gf->add_option("--xi", o.xi, "degree-0 gauge parameter")->required();
    CLI::App* l1 = add("lemma1", "perturb a morphism at one weight", lemma1_cmd);
    l1->add_option("--n", o.n, "perturbation weight");
    l1->add_option("--H", o.H, "map document with the perturbation");
    l1->add_option("--out", o.out, "write the perturbed morphism here");
    l1->add_option("--homotopy-out", o.homotopy_out, "write the homotopy to the perturbed morphism here");
    add("homotopy-check", "check a homotopy between morphisms", homotopy_check_cmd);
    add("convolution-mc", "Maurer-Cartan element of a morphism in the convolution algebra", convolution_mc_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return pass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }

    try {
        for (const auto& [sub, handler] : commands) {
            if (!sub->parsed()) continue;
            const Report r = handler(o);
            print(r, o.format == "json", out);
            return r.ok ? pass : failure;
        }
    } catch (const NotMaurerCartan& e) {
        err << "error: " << e.what() << "\n";
        return failure;
    } catch (const NonTerminationError& e) {
        err << "error: " << e.what() << "\n";
        return failure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }
    return input_error;
}

}  // namespace linf::cli
