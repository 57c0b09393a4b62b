#include "selftest.hpp"

#include "galdist/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace galdist;
using io::Json;

namespace {

// Inline JSON when the text looks like JSON, otherwise a file path.
Json json_arg(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) return io::parse(text);
    return io::read_file(text);
}

std::vector<Q> rational_csv(const std::string& text) {
    std::vector<Q> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!piece.empty()) out.push_back(parse_rational(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string current_command;

void emit(const Json& payload) {
    Json out{{"command", current_command}, {"version", io::kSchemaVersion}};
    for (auto it = payload.begin(); it != payload.end(); ++it) out[it.key()] = it.value();
    std::cout << out.dump(2) << "\n";
}

int fail(const char* kind, const std::string& message, int code) {
    emit(Json{{"error", {{"kind", kind}, {"message", message}}}});
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for Galois symmetric pairs of classical groups"};
    app.require_subcommand(1);
    std::string output = "json";
    app.add_option("--output", output, "Output format")->check(CLI::IsMember({"json"}));

    std::function<int()> action;

    // hilbert
    std::string ha, hb;
    std::int64_t hp = 0;
    auto* hilbert_cmd = app.add_subcommand("hilbert", "Local Hilbert symbol (a,b)_p");
    hilbert_cmd->add_option("-a", ha, "First argument (rational)")->required();
    hilbert_cmd->add_option("-b", hb, "Second argument (rational)")->required();
    hilbert_cmd->add_option("-p", hp, "Prime")->required();
    hilbert_cmd->callback([&] {
        action = [&] {
            const Prime p(hp);
            emit(Json{{"symbol", hilbert(parse_rational(ha), parse_rational(hb), p)}});
            return 0;
        };
    });

    // form-invariants
    std::string fcase, fentries, fd;
    std::int64_t fp = 0;
    int frank = 0;
    auto* form_cmd = app.add_subcommand("form-invariants", "Invariants of a diagonal epsilon-hermitian form");
    form_cmd->add_option("--case", fcase, "symplectic | orthogonal | unitary")->required();
    form_cmd->add_option("-p", fp, "Prime")->required();
    form_cmd->add_option("--entries", fentries, "Comma separated diagonal entries");
    form_cmd->add_option("--rank", frank, "Rank (symplectic)");
    form_cmd->add_option("-d", fd, "Quadratic extension d (unitary)");
    form_cmd->callback([&] {
        action = [&] {
            const Prime p(fp);
            const Case kind = parse_case(fcase);
            DiagForm form;
            if (kind == Case::Symplectic) {
                form = symplectic_form(frank, p);
            } else if (kind == Case::Orthogonal) {
                form = orthogonal_form(rational_csv(fentries), p);
            } else {
                if (fd.empty()) throw InputError("unitary forms need -d");
                form = unitary_form(rational_csv(fentries), QuadExtension(reduce(parse_rational(fd), p)));
            }
            Json out = io::to_json(invariants(form));
            out["anisotropic"] = form.rank() > 0 && is_anisotropic(form);
            emit(out);
            return 0;
        };
    });

    // orbit-count
    std::string ocase, odisc, opair, ocomponent = "full";
    int on = 0;
    std::int64_t op = 3;
    auto* orbit_cmd = app.add_subcommand("orbit-count", "Orbit counts for forms or for the symmetric space X");
    orbit_cmd->add_option("--case", ocase, "symplectic | orthogonal | unitary");
    orbit_cmd->add_option("--n", on, "Rank of the forms");
    orbit_cmd->add_option("--disc", odisc, "Discriminant (orthogonal forms)");
    orbit_cmd->add_option("-p", op, "Prime for --disc");
    orbit_cmd->add_option("--pair", opair, "Classical pair (JSON or file); counts orbits in X");
    orbit_cmd->add_option("--component", ocomponent, "full | SX | complement")
        ->check(CLI::IsMember({"full", "SX", "complement"}));
    orbit_cmd->callback([&] {
        action = [&] {
            if (!opair.empty()) {
                const ClassicalPair pair = io::classical_pair(json_arg(opair));
                const Component c = ocomponent == "SX" ? Component::SX
                                    : ocomponent == "complement" ? Component::Complement
                                                                 : Component::Full;
                emit(Json{{"count", orbit_count_X(pair, c)}, {"component", ocomponent}});
                return 0;
            }
            if (ocase.empty()) throw InputError("orbit-count needs --case or --pair");
            std::optional<SquareClass> disc;
            if (!odisc.empty()) disc = reduce(parse_rational(odisc), Prime(op));
            emit(Json{{"count", orbit_count(parse_case(ocase), on, disc)}});
            return 0;
        };
    });

    // involutions
    std::string icomp, ipair;
    bool iparity = false;
    auto* inv_cmd = app.add_subcommand("involutions", "Signed involutions compatible with a composition");
    inv_cmd->add_option("--comp", icomp, "Composition (JSON or file)")->required();
    inv_cmd->add_option("--pair", ipair, "Classical pair; selects the parity filter and orbit counts");
    inv_cmd->add_flag("--parity-filter", iparity, "Keep only even o(c) when no pair is given");
    inv_cmd->callback([&] {
        action = [&] {
            const Composition comp = io::composition(json_arg(icomp));
            std::optional<ClassicalPair> pair;
            if (!ipair.empty()) {
                pair = io::classical_pair(json_arg(ipair)).with_n(comp.total());
                validate_composition(comp, *pair);
            }
            const auto list = pair ? involutions_for(comp, *pair) : enumerate_involutions(comp, iparity);
            Json items = Json::array();
            for (const auto& w : list) {
                Json item = io::to_json(w);
                Json fixed = Json::array();
                for (int i : fixed_signed(w)) fixed.push_back(i + 1);
                item["I"] = fixed;
                item["o"] = odd_count(w, comp);
                item["N"] = fixed_signed_size(w, comp);
                if (pair) item["admissible_orbits"] = admissible_orbit_count(comp, w, *pair);
                items.push_back(item);
            }
            emit(Json{{"count", items.size()}, {"involutions", items}});
            return 0;
        };
    });

    // build-tw
    std::string tpair, tcomp, tw;
    bool txw = false;
    auto* tw_cmd = app.add_subcommand("build-tw", "Weyl representative t_w and optionally x_w");
    tw_cmd->add_option("--pair", tpair, "Classical pair (JSON or file)")->required();
    tw_cmd->add_option("--comp", tcomp, "Composition (JSON or file)")->required();
    tw_cmd->add_option("--w", tw, "Signed involution {\"rho\":[...],\"c\":[...]}")->required();
    tw_cmd->add_flag("--xw", txw, "Also build x_w with trivial y-orbits and the first z orbit");
    tw_cmd->callback([&] {
        action = [&] {
            const Composition comp = io::composition(json_arg(tcomp));
            const ClassicalPair pair = io::classical_pair(json_arg(tpair)).with_n(comp.total());
            const SignedPerm w = io::signed_perm(json_arg(tw));
            Json out{{"t_w", io::to_json(build_tw(comp, w, pair))}};
            if (txw) {
                std::map<int, int> bits;
                for (int i : fixed_signed(w)) bits[i] = 0;
                const auto zs = realize_orbits(pair.with_n(comp.r), z_component(comp, w, pair));
                if (zs.empty()) throw DomainError("no z orbit in the required component");
                const XwResult res = build_xw(comp, w, bits, zs.front(), pair);
                out["x_w"] = io::to_json(res.x);
                out["predicted_orbit"] = io::to_json(res.predicted);
                out["classified_orbit"] = io::to_json(classify_x(res.x, hilbert90_matrix(res.x), pair));
            }
            emit(out);
            return 0;
        };
    });

    // descend and cone
    std::string dcomp, dw, dpair;
    bool ddoubled = false;
    auto* desc_cmd = app.add_subcommand("descend", "Descent to a terminal vertex of the graph of involutions");
    desc_cmd->add_option("--comp", dcomp, "Composition (JSON or file)")->required();
    desc_cmd->add_option("--w", dw, "Signed involution")->required();
    desc_cmd->add_option("--pair", dpair, "Classical pair; selects the last simple root");
    desc_cmd->add_flag("--doubled", ddoubled, "Use 2e_k as the last simple root");
    desc_cmd->callback([&] {
        action = [&] {
            const Composition comp = io::composition(json_arg(dcomp));
            RootSystem roots{comp.k(), ddoubled ? 2 : 1};
            if (!dpair.empty()) roots = root_system_for(comp, io::classical_pair(json_arg(dpair)));
            const SignedPerm w = io::signed_perm(json_arg(dw));
            if (!w.is_involution() || !compatible(w, comp)) throw DomainError("w is not a compatible involution");
            emit(io::to_json(descend(Vertex{comp, w}, roots)));
            return 0;
        };
    });

    std::string cw, clambda, cc = "0";
    bool cdoubled = false;
    auto* cone_cmd = app.add_subcommand("cone", "Membership in the cone D(c) of a vertex");
    cone_cmd->add_option("--w", cw, "Signed involution")->required();
    cone_cmd->add_option("--lambda", clambda, "Comma separated rational coordinates")->required();
    cone_cmd->add_option("--c", cc, "Threshold c (rational)");
    cone_cmd->add_flag("--doubled", cdoubled, "Use 2e_k as the last root");
    cone_cmd->callback([&] {
        action = [&] {
            const SignedPerm w = io::signed_perm(json_arg(cw));
            const Weight lambda = rational_csv(clambda);
            const RootSystem roots{w.k(), cdoubled ? 2 : 1};
            emit(Json{{"contains", cone_contains(ThetaAction::from(w), roots, lambda, parse_rational(cc))}});
            return 0;
        };
    });

    // distinguish
    std::string spair, scomp, sdata, starget;
    auto* dist_cmd = app.add_subcommand("distinguish", "Decide distinction of an induced representation");
    dist_cmd->add_option("--pair", spair, "Classical pair (JSON or file)")->required();
    dist_cmd->add_option("--comp", scomp, "Composition (JSON or file)")->required();
    dist_cmd->add_option("--data", sdata, "Cuspidal datum (JSON or file)")->required();
    dist_cmd->add_option("--target", starget, "Target orbit invariant (JSON or file)")->required();
    dist_cmd->callback([&] {
        action = [&] {
            const Composition comp = io::composition(json_arg(scomp));
            const ClassicalPair pair = io::classical_pair(json_arg(spair)).with_n(comp.total());
            const CuspidalDatum data = io::cuspidal_datum(json_arg(sdata), pair.prime());
            const XOrbitInvariant target = io::orbit_invariant(json_arg(starget), pair.prime());
            const Verdict v = decide(pair, comp, data, target);
            Json out = io::to_json(v);
            if (v.witness) out["necessary_condition"] = necessary_condition(data, v.witness->w);
            emit(out);
            return 0;
        };
    });

    // prasad-char
    std::string pgroup, pext;
    auto* prasad_cmd = app.add_subcommand("prasad-char", "Quadratic character and opposition group");
    prasad_cmd->add_option("--group", pgroup, "Group descriptor (JSON or file)")->required();
    prasad_cmd->add_option("--ext", pext, "Quadratic extension {\"p\":..,\"d\":..}")->required();
    prasad_cmd->callback([&] {
        action = [&] {
            const QuadExtension e = io::quad_extension(json_arg(pext));
            const GroupDescriptor y = io::group_descriptor(json_arg(pgroup), e.base);
            emit(Json{{"group", io::to_json(y)},
                      {"character", io::to_json(prasad_character(y, e))},
                      {"opposition_group", io::to_json(opposition_group(y, e))}});
            return 0;
        };
    });

    // spinor-norm
    std::string smatrix, sform;
    std::int64_t sp = 0;
    auto* sn_cmd = app.add_subcommand("spinor-norm", "Spinor norm through a reflection decomposition");
    sn_cmd->add_option("--matrix", smatrix, "Matrix g (JSON or file)")->required();
    sn_cmd->add_option("--form", sform, "Gram matrix of the form (JSON or file)")->required();
    sn_cmd->add_option("-p", sp, "Prime")->required();
    sn_cmd->callback([&] {
        action = [&] {
            const RatMatrix g = io::rat_matrix(json_arg(smatrix));
            const RatMatrix gram = io::rat_matrix(json_arg(sform));
            const ReflectionDecomposition d = cartan_dieudonne(g, gram);
            Json vectors = Json::array();
            for (const auto& v : d.vectors) {
                Json row = Json::array();
                for (const auto& x : v) row.push_back(io::to_json(x));
                vectors.push_back(row);
            }
            emit(Json{{"class", io::to_json(reduce(d.norm_product, Prime(sp)))},
                      {"norm_product", io::to_json(d.norm_product)},
                      {"reflections", vectors}});
            return 0;
        };
    });

    // selftest
    int depth = 1;
    if (const char* env = std::getenv("GALDIST_SELFTEST_DEPTH")) depth = std::atoi(env);
    auto* self_cmd = app.add_subcommand("selftest", "Run the oracle suites");
    self_cmd->add_option("--depth", depth, "Search depth (default from GALDIST_SELFTEST_DEPTH or 1)");
    self_cmd->callback([&] {
        action = [&] {
            const Json report = tools::run_selftest(depth);
            emit(report);
            return report["failed"].get<int>() == 0 ? 0 : 1;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("input", e.what(), 2);
    }
    try {
        if (!app.get_subcommands().empty()) current_command = app.get_subcommands().front()->get_name();
        return action ? action() : 2;
    } catch (const InputError& e) {
        return fail("input", e.what(), 2);
    } catch (const nlohmann::json::exception& e) {
        return fail("input", e.what(), 2);
    } catch (const DomainError& e) {
        return fail("domain", e.what(), 1);
    }
}
