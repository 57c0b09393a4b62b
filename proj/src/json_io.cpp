#include "galdist/json_io.hpp"

#include <fstream>
#include <sstream>

namespace galdist::io {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field: ") + key);
    return j.at(key);
}

int integer(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::int64_t integer64(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

int optional_int(const Json& j, const char* key, int fallback) {
    return j.contains(key) ? integer(j.at(key), key) : fallback;
}

std::vector<int> one_based_list(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& e : j) out.push_back(integer(e, what) - 1);
    return out;
}

}  // namespace

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

Json to_json(const Q& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return to_string(q);
}

Q rational(const Json& j) {
    if (j.is_number_integer()) return Q(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw InputError("expected a rational (integer or \"p/q\" string)");
}

std::vector<Q> rational_list(const Json& j) {
    if (!j.is_array()) throw InputError("expected an array of rationals");
    std::vector<Q> out;
    for (const auto& e : j) out.push_back(rational(e));
    return out;
}

Json to_json(const SquareClass& c) {
    return Json{{"p", c.prime.value()}, {"val", c.val}, {"unit", c.unit}, {"rep", c.representative().get_si()}};
}

SquareClass square_class(const Json& j, const Prime& p) {
    if (j.is_number_integer() || j.is_string()) return reduce(rational(j), p);
    if (j.contains("rep")) return reduce(rational(j.at("rep")), p);
    return SquareClass(p, integer(field(j, "val"), "val"), integer64(field(j, "unit"), "unit"));
}

Json to_json(const RatMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(to_json(x));
        out.push_back(r);
    }
    return out;
}

RatMatrix rat_matrix(const Json& j) {
    if (!j.is_array()) throw InputError("matrix must be an array of rows");
    RatMatrix out;
    for (const auto& row : j) out.push_back(rational_list(row));
    for (const auto& row : out)
        if (row.size() != out.size()) throw InputError("matrix must be square");
    return out;
}

Json to_json(const BiquadElement& x) {
    if (x.is_rational()) return to_json(x.coeff(0));
    Json out = Json::array();
    for (int i = 0; i < 4; ++i) out.push_back(to_json(x.coeff(i)));
    return out;
}

Json to_json(const BiquadMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(to_json(m(i, k)));
        out.push_back(r);
    }
    return out;
}

BiquadMatrix biquad_matrix(const Json& j, const BiquadField& f) {
    if (!j.is_array() || j.empty()) throw InputError("matrix must be a nonempty array of rows");
    const std::size_t n = j.size();
    BiquadMatrix out(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != n) throw InputError("matrix must be square");
        for (std::size_t k = 0; k < n; ++k) {
            const Json& e = j[i][k];
            if (e.is_array()) {
                std::vector<Q> c = rational_list(e);
                c.resize(4, Q(0));
                if (e.size() > 4) throw InputError("at most four coordinates per entry");
                out(i, k) = BiquadElement(f, c[0], c[1], c[2], c[3]);
            } else {
                out(i, k) = BiquadElement(f, rational(e));
            }
        }
    }
    return out;
}

ClassicalPair classical_pair(const Json& j) {
    const Case kind = parse_case(field(j, "case").get<std::string>());
    const Prime p(integer64(field(j, "p"), "p"));
    const std::int64_t a = integer64(field(j, "a"), "a");
    const std::int64_t b = j.contains("b") ? integer64(j.at("b"), "b") : 0;
    const BiquadField model = b == 0 ? BiquadField::quadratic(a) : BiquadField::klein(a, b);
    std::vector<Q> kernel = j.contains("kernel") ? rational_list(j.at("kernel")) : std::vector<Q>{};
    return ClassicalPair::make(kind, model, p, kernel, optional_int(j, "n", 0));
}

Json to_json(const ClassicalPair& pair) {
    Json kernel = Json::array();
    for (const auto& q : pair.kernel()) kernel.push_back(to_json(q));
    return Json{{"case", case_name(pair.kind())}, {"p", pair.prime().value()}, {"a", pair.model().a},
                {"b", pair.model().b}, {"kernel", kernel}, {"n", pair.n()}};
}

Composition composition(const Json& j) {
    Composition c;
    const Json& parts = field(j, "parts");
    if (!parts.is_array()) throw InputError("parts must be an array");
    for (const auto& e : parts) c.parts.push_back(integer(e, "parts"));
    c.r = optional_int(j, "r", 0);
    c.split_even_sign = optional_int(j, "sign", 1);
    return c;
}

Json to_json(const Composition& c) { return Json{{"parts", c.parts}, {"r", c.r}, {"sign", c.split_even_sign}}; }

SignedPerm signed_perm(const Json& j) {
    const std::vector<int> rho = one_based_list(field(j, "rho"), "rho");
    SignedPerm w = SignedPerm::identity(static_cast<int>(rho.size()));
    w.rho = rho;
    std::vector<bool> seen(rho.size(), false);
    for (int r : rho) {
        if (r < 0 || r >= static_cast<int>(rho.size()) || seen[static_cast<std::size_t>(r)])
            throw InputError("rho must be a permutation of 1..k");
        seen[static_cast<std::size_t>(r)] = true;
    }
    if (j.contains("c"))
        for (int i : one_based_list(j.at("c"), "c")) {
            if (i < 0 || i >= static_cast<int>(rho.size())) throw InputError("c index out of range");
            w.c[static_cast<std::size_t>(i)] = true;
        }
    return w;
}

Json to_json(const SignedPerm& w) {
    Json rho = Json::array(), c = Json::array();
    for (int i = 0; i < w.k(); ++i) {
        rho.push_back(w.rho[static_cast<std::size_t>(i)] + 1);
        if (w.c[static_cast<std::size_t>(i)]) c.push_back(i + 1);
    }
    return Json{{"rho", rho}, {"c", c}};
}

XOrbitInvariant orbit_invariant(const Json& j, const Prime& p) {
    XOrbitInvariant inv;
    inv.kind = parse_case(field(j, "case").get<std::string>());
    switch (inv.kind) {
        case Case::Symplectic: break;
        case Case::Unitary: inv.gamma_bit = integer(field(j, "gamma_bit"), "gamma_bit"); break;
        case Case::Orthogonal:
            inv.special = j.value("special", true);
            inv.partial = square_class(field(j, "partial"), p);
            inv.hasse = integer(field(j, "hasse"), "hasse");
            if (inv.hasse != 1 && inv.hasse != -1) throw InputError("hasse must be 1 or -1");
            break;
    }
    return inv;
}

Json to_json(const XOrbitInvariant& inv) {
    Json out{{"case", case_name(inv.kind)}};
    if (inv.kind == Case::Unitary) out["gamma_bit"] = inv.gamma_bit;
    if (inv.kind == Case::Orthogonal) {
        out["special"] = inv.special;
        if (inv.partial) out["partial"] = to_json(*inv.partial);
        out["hasse"] = inv.hasse;
    }
    return out;
}

Json to_json(const FormInvariants& inv) {
    Json out{{"case", case_name(inv.kind)}, {"rank", inv.rank}};
    if (inv.disc) out["disc"] = to_json(*inv.disc);
    if (inv.kind == Case::Orthogonal) out["hasse"] = inv.hasse;
    if (inv.kind == Case::Unitary) out["det_norm_bit"] = inv.det_norm_bit;
    return out;
}

namespace {

std::vector<std::pair<int, int>> index_pairs(const Json& j, const char* what) {
    std::vector<std::pair<int, int>> out;
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array of pairs");
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) throw InputError(std::string(what) + " entries must be pairs");
        out.emplace_back(integer(e[0], what) - 1, integer(e[1], what) - 1);
    }
    return out;
}

}  // namespace

CuspidalDatum cuspidal_datum(const Json& j, const Prime& p) {
    CuspidalDatum d;
    const Json& labels = field(j, "labels");
    if (!labels.is_array()) throw InputError("labels must be an array");
    for (const auto& l : labels) d.labels.push_back(l.get<std::string>());
    if (j.contains("conj_dual")) d.conj_dual = index_pairs(j.at("conj_dual"), "conj_dual");
    if (j.contains("sigma_tau")) d.sigma_tau = index_pairs(j.at("sigma_tau"), "sigma_tau");
    if (j.contains("linear_dist"))
        for (int i : one_based_list(j.at("linear_dist"), "linear_dist")) d.linear_dist.insert(i);
    if (j.contains("unitary_dist")) {
        const Json& u = j.at("unitary_dist");
        if (!u.is_object()) throw InputError("unitary_dist must map indices to bit lists");
        for (const auto& [key, bits] : u.items()) {
            int idx = 0;
            try {
                idx = std::stoi(key) - 1;
            } catch (const std::exception&) {
                throw InputError("unitary_dist keys must be indices");
            }
            auto& set = d.unitary_dist[idx];
            if (!bits.is_array()) throw InputError("unitary_dist values must be bit lists");
            for (const auto& b : bits) set.insert(integer(b, "unitary_dist"));
        }
    }
    if (j.contains("pi0_dist"))
        for (const auto& o : j.at("pi0_dist")) d.pi0_dist.push_back(orbit_invariant(o, p));
    return d;
}

Json to_json(const CuspidalDatum& d) {
    Json conj = Json::array(), st = Json::array(), lin = Json::array(), pi0 = Json::array();
    for (const auto& [i, k] : d.conj_dual) conj.push_back({i + 1, k + 1});
    for (const auto& [i, k] : d.sigma_tau) st.push_back({i + 1, k + 1});
    for (int i : d.linear_dist) lin.push_back(i + 1);
    Json uni = Json::object();
    for (const auto& [i, bits] : d.unitary_dist) uni[std::to_string(i + 1)] = std::vector<int>(bits.begin(), bits.end());
    for (const auto& o : d.pi0_dist) pi0.push_back(to_json(o));
    return Json{{"labels", d.labels}, {"conj_dual", conj}, {"sigma_tau", st},
                {"linear_dist", lin}, {"unitary_dist", uni}, {"pi0_dist", pi0}};
}

Json to_json(const Witness& w) {
    Json out = to_json(w.w);
    Json bits = Json::object();
    for (const auto& [i, b] : w.y_bits) bits[std::to_string(i + 1)] = b;
    out["y_bits"] = bits;
    out["z_orbit"] = to_json(w.z_orbit);
    return out;
}

Json to_json(const Verdict& v) {
    Json out{{"distinguished", v.distinguished}};
    out["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
    out["failure_log"] = v.failure_log;
    return out;
}

Json to_json(const Root& r) { return Json(std::vector<int>(r.begin(), r.end())); }

Json to_json(const Vertex& v) { return Json{{"comp", to_json(v.comp)}, {"w", to_json(v.w)}}; }

Json to_json(const DescentResult& d) {
    Json path = Json::array();
    for (const auto& s : d.path)
        path.push_back(Json{{"step", s.step}, {"alpha", to_json(s.alpha)}, {"new_comp", to_json(s.vertex.comp)},
                            {"new_w", to_json(s.vertex.w)}});
    return Json{{"path", path},
                {"terminal", to_json(d.terminal)},
                {"minimality_verified", d.minimality_verified}};
}

QuadExtension quad_extension(const Json& j) {
    const Prime p(integer64(field(j, "p"), "p"));
    return QuadExtension(reduce(rational(field(j, "d")), p));
}

GroupDescriptor group_descriptor(const Json& j, const Prime& fallback) {
    const GroupFamily family = parse_family(field(j, "family").get<std::string>());
    const int m = integer(field(j, "m"), "m");
    const Prime p = j.contains("p") ? Prime(integer64(j.at("p"), "p")) : fallback;
    std::optional<std::int64_t> d;
    if (j.contains("d")) d = integer64(j.at("d"), "d");
    std::optional<std::vector<Q>> kernel;
    if (j.contains("kernel")) kernel = rational_list(j.at("kernel"));
    return make_descriptor(family, m, p, d, kernel);
}

Json to_json(const GroupDescriptor& y) {
    Json out{{"family", family_name(y.family)}, {"m", y.m}, {"p", y.prime.value()}};
    if (y.unitary_d) out["d"] = *y.unitary_d;
    if (y.family == GroupFamily::SO) {
        Json kernel = Json::array();
        for (const auto& q : y.so_kernel) kernel.push_back(to_json(q));
        out["kernel"] = kernel;
    }
    return out;
}

std::string formula_text(const CharacterFormula& chi) {
    if (chi.kind == "trivial") return "1";
    const std::string eta = "eta_{" + chi.extension + "}";
    std::string map = chi.kind == "eta_det" ? "det" : chi.kind == "eta_sn" ? "sn" : "wsn";
    std::string raw = eta + "^" + std::to_string(chi.exponent) + " o " + map;
    std::string reduced = chi.reduced_exponent == 0 ? "1" : eta + " o " + map;
    return raw + " = " + reduced;
}

Json to_json(const CharacterFormula& chi) {
    return Json{{"kind", chi.kind},
                {"exponent", chi.exponent},
                {"reduced_exponent", chi.reduced_exponent},
                {"extension", chi.extension},
                {"trivial", chi.is_trivial()},
                {"formula", formula_text(chi)}};
}

namespace {

SymbolicRep symbolic_rep(const Json& j) {
    SymbolicRep r;
    r.label = integer(field(j, "label"), "label") - 1;
    if (j.contains("ops")) {
        for (const auto& op : j.at("ops")) {
            const std::string s = op.get<std::string>();
            if (s == "sigma") r.ops ^= OpSigma;
            else if (s == "tau") r.ops ^= OpTau;
            else if (s == "dual") r.ops ^= OpDual;
            else throw InputError("unknown twist: " + s);
        }
    }
    return r;
}

}  // namespace

GLProductDatum gl_product_datum(const Json& j) {
    GLProductDatum d;
    for (const auto& l : field(j, "labels")) d.labels.push_back(l.get<std::string>());
    d.has_middle = j.value("middle", false);
    for (const auto& b : field(j, "blocks")) d.blocks.push_back({symbolic_rep(b), integer(field(b, "size"), "size")});
    if (j.contains("isomorphisms"))
        for (const auto& pr : j.at("isomorphisms")) {
            if (!pr.is_array() || pr.size() != 2) throw InputError("isomorphisms must be pairs");
            d.isomorphisms.emplace_back(symbolic_rep(pr[0]), symbolic_rep(pr[1]));
        }
    if (j.contains("distinguished"))
        for (const auto& f : j.at("distinguished")) {
            const std::string chi = f.value("chi", "trivial");
            if (chi != "trivial" && chi != "eta") throw InputError("chi must be trivial or eta");
            d.distinguished.emplace_back(symbolic_rep(f), chi == "eta" ? GLCharacter::Eta : GLCharacter::Trivial);
        }
    return d;
}

Json to_json(const GLProductResult& r) {
    Json units = Json::array();
    for (const auto& u : r.decomposition) {
        Json blocks = Json::array();
        for (int b : u.blocks) blocks.push_back(b + 1);
        units.push_back(Json{{"kind", u.kind}, {"blocks", blocks}});
    }
    return Json{{"distinguished", r.distinguished}, {"decomposition", units}};
}

}  // namespace galdist::io
