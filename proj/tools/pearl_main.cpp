// Command-line front end: validation, homology, minimal models, spectral
// sequences, algebra verification, torus enumeration, packing bounds and
// the example catalog.  Exit codes: 0 success, 1 verification failure,
// 2 parse or usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <functional>
#include <variant>

#include "pearl/catalog.hpp"
#include "pearl/io.hpp"
#include "pearl/minimal_model.hpp"
#include "pearl/spectral.hpp"

using namespace pearl;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(boost::multiprecision::cpp_rational(boost::multiprecision::cpp_int(s)));
        return Rat(boost::multiprecision::cpp_rational(
            boost::multiprecision::cpp_int(s.substr(0, slash)),
            boost::multiprecision::cpp_int(s.substr(slash + 1))));
    } catch (const std::exception&) {
        throw std::runtime_error("malformed rational '" + s + "'");
    }
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r.v;
    return os.str();
}

bool records = false;

void kv(const std::string& key, const std::string& value) {
    std::cout << key << "=" << value << "\n";
}

int cmd_check(const std::string& file) {
    std::istringstream in(slurp(file));
    auto parsed = io::parse_complex(in);
    auto rep = validate(parsed.complex);
    if (rep.ok()) {
        if (records)
            kv("valid", "true");
        else
            std::cout << "valid\n";
        return kOk;
    }
    if (records) {
        kv("valid", "false");
        kv("issues", std::to_string(rep.issues.size()));
    } else {
        std::cout << rep.str();
    }
    return kFail;
}

int cmd_homology(const std::string& file, const std::string& coeff,
                 const std::vector<int>& window) {
    std::istringstream in(slurp(file));
    auto parsed = io::parse_complex(in);
    GradedDims h;
    if (coeff == "plus") {
        std::optional<std::pair<int, int>> w;
        if (window.size() == 2)
            w = std::make_pair(window[0], window[1]);
        h = homology_plus(parsed.complex, w);
    } else {
        h = homology_full(parsed.complex);
    }
    if (records) {
        kv("coeff", coeff);
        kv("window.lo", std::to_string(h.lo));
        kv("window.hi", std::to_string(h.hi));
        kv("periodic", h.fully_periodic ? "full" : "tail");
        for (int i = h.lo; i <= h.hi; ++i)
            kv("dim." + std::to_string(i), std::to_string(h.at(i)));
    } else {
        std::cout << (coeff == "plus" ? "Q+H" : "QH") << " of " << parsed.complex.name()
                  << (h.fully_periodic ? "  (one period, N_L-periodic)" : "") << "\n";
        for (int i = h.hi; i >= h.lo; --i)
            std::cout << "  degree " << i << ": " << h.at(i) << "\n";
    }
    return kOk;
}

int cmd_minimal(const std::string& file) {
    std::istringstream in(slurp(file));
    auto parsed = io::parse_complex(in);
    auto mm = reduce(parsed.complex);
    // the fundamental class, when the model pins one down
    std::optional<std::string> top_id;
    int tops = 0;
    for (auto& g : mm.model.gens())
        if (g.degree == mm.model.max_degree()) {
            ++tops;
            top_id = g.id;
        }
    if (tops != 1 || mm.model.size() == 0)
        top_id.reset();
    bool full = qh_is_full(mm);
    std::optional<bool> vanishes;
    if (top_id)
        vanishes = qh_vanishes(mm, *top_id);
    if (records) {
        kv("generators", std::to_string(mm.model.size()));
        kv("qh_is_full", full ? "true" : "false");
        kv("qh_vanishes", vanishes ? (*vanishes ? "true" : "false") : "na");
        for (std::size_t g = 0; g < mm.model.size(); ++g) {
            auto b = mm.model.boundary(static_cast<int>(g));
            if (b.empty())
                continue;
            std::ostringstream os;
            bool first = true;
            for (auto& [tgt, e] : b.terms) {
                os << (first ? "" : " + ") << mm.model.gens()[tgt].id << " t^" << e;
                first = false;
            }
            kv("delta." + mm.model.gens()[g].id, os.str());
        }
    } else {
        std::cout << io::emit_complex(mm.model, true);
        std::cout << "# qh_is_full " << (full ? "true" : "false") << "\n";
        if (vanishes)
            std::cout << "# qh_vanishes " << (*vanishes ? "true" : "false") << "\n";
    }
    return kOk;
}

int cmd_ss(const std::string& file, int max_page) {
    std::istringstream in(slurp(file));
    auto parsed = io::parse_complex(in);
    auto pg = pages(parsed.complex, max_page);
    int cp = collapse_page(parsed.complex);
    bool ab = abutment_check(parsed.complex);
    if (records) {
        kv("collapse", std::to_string(cp));
        kv("abutment", ab ? "true" : "false");
        for (auto& page : pg)
            for (auto& [pq, d] : page.dims) {
                std::string key = "r" + std::to_string(page.r) + ".p" +
                                  std::to_string(pq.first) + ".q" + std::to_string(pq.second);
                kv("e." + key, std::to_string(d));
                kv("dr." + key, std::to_string(page.dr_rank.at(pq)));
            }
    } else {
        for (auto& page : pg) {
            std::cout << "page E^" << page.r << "\n";
            for (auto& [pq, d] : page.dims)
                if (d != 0 || page.dr_rank.at(pq) != 0)
                    std::cout << "  (" << pq.first << "," << pq.second << ")  dim " << d
                              << "  d" << page.r << "-rank " << page.dr_rank.at(pq) << "\n";
        }
        std::cout << "collapse page " << cp << "\n";
        std::cout << "abutment " << (ab ? "ok" : "MISMATCH") << "\n";
    }
    return ab ? kOk : kFail;
}

int cmd_algebra_verify(const std::string& file) {
    std::string text = slurp(file);
    std::istringstream sniff(text);
    std::string first;
    sniff >> first;
    AlgebraReport rep;
    bool is_module = (first == "module-action");
    if (is_module) {
        std::istringstream in(text);
        auto m = io::parse_module(in);
        rep = std::visit([](const auto& x) { return verify_module(x); }, m);
    } else {
        std::istringstream in(text);
        auto a = io::parse_algebra(in);
        rep = std::visit([](const auto& x) { return verify_algebra(x); }, a);
    }
    if (records) {
        kv("ok", rep.ok() ? "true" : "false");
        if (!is_module)
            kv("commutative", rep.commutative ? "true" : "false");
        kv("issues", std::to_string(rep.issues.size()));
    } else {
        if (!rep.ok())
            std::cout << rep.str();
        std::cout << (rep.ok() ? "ok" : "failed") << "\n";
        if (!is_module)
            std::cout << "commutative " << (rep.commutative ? "yes" : "no") << "\n";
    }
    return rep.ok() ? kOk : kFail;
}

int cmd_algebra_euler(const std::string& file) {
    std::istringstream in(slurp(file));
    auto any = io::parse_algebra(in);
    return std::visit(
        [&](const auto& a) {
            auto e = quantum_euler(a);
            bool inv = is_invertible(a, e);
            if (records) {
                kv("euler", a.render(e));
                kv("invertible", inv ? "true" : "false");
                kv("semisimple", inv ? "true" : "false");
            } else {
                std::cout << "quantum Euler class: " << a.render(e) << "\n";
                std::cout << "invertible " << (inv ? "yes" : "no") << "\n";
                std::cout << "semi-simple " << (inv ? "yes" : "no") << "\n";
            }
            return kOk;
        },
        any);
}

int cmd_algebra_invertible(const std::string& file, const std::string& element, int degree,
                           bool degree_set, int samples) {
    std::istringstream in(slurp(file));
    auto any = io::parse_algebra(in);
    return std::visit(
        [&](const auto& a) {
            if (!element.empty()) {
                auto x = io::parse_element(a, element);
                auto inv = invert(a, x);
                if (records) {
                    kv("invertible", inv.ok ? "true" : "false");
                    if (inv.ok && inv.laurent)
                        kv("inverse", a.render(*inv.laurent));
                } else if (inv.ok) {
                    std::cout << "invertible\n";
                    if (inv.laurent)
                        std::cout << "inverse: " << a.render(*inv.laurent) << "\n";
                    else
                        std::cout << "inverse has fraction-field coefficients\n";
                } else {
                    std::cout << "not invertible\n";
                }
                return inv.ok ? kOk : kFail;
            }
            if (!degree_set)
                throw std::runtime_error("need --element or --degree");
            auto res = has_invertible_of_degree(a, degree, samples);
            if (records) {
                kv("found", res.found ? "yes" : "probably-no");
                kv("exhaustive", res.exhaustive ? "true" : "false");
                if (res.found)
                    kv("witness", a.render(res.witness));
            } else if (res.found) {
                std::cout << "invertible element of degree " << degree << ": "
                          << a.render(res.witness) << "\n";
            } else {
                std::cout << (res.exhaustive ? "none (exhaustive over the GF(2)-span)"
                                             : "probably none (randomized search)")
                          << "\n";
            }
            return res.found ? kOk : kFail;
        },
        any);
}

int cmd_torus_synth(const std::string& file) {
    std::istringstream in(slurp(file));
    auto parsed = io::parse_nu(in);
    auto d1 = d1_class(parsed.nu);
    auto ring = synthesize(parsed.nu);
    if (records) {
        kv("d1", std::to_string(d1.first) + "," + std::to_string(d1.second));
        if (!ring) {
            kv("result", "vanishing");
        } else {
            kv("result", "ring");
            kv("alpha", ring->alpha ? "1" : "0");
            kv("beta", ring->beta ? "1" : "0");
            kv("gamma_sum", ring->gamma_sum ? "1" : "0");
        }
    } else if (!ring) {
        std::cout << "D_1 = (" << d1.first << "," << d1.second << ") != 0: QH(L) = 0\n";
    } else {
        auto named = ring->ring;
        named.name = parsed.name.empty() ? "torus" : parsed.name + "-ring";
        std::cout << io::emit_algebra(named);
        std::cout << "# alpha " << (ring->alpha ? 1 : 0) << " beta " << (ring->beta ? 1 : 0)
                  << " gamma_sum " << (ring->gamma_sum ? 1 : 0) << "\n";
    }
    return kOk;
}

int cmd_torus_counts(const std::string& which, const std::string& file,
                     const std::vector<std::string>& pts) {
    std::istringstream in(slurp(file));
    auto parsed = io::parse_nu(in);
    std::vector<TorusPoint> p;
    for (auto& s : pts)
        p.push_back(io::parse_point(s));
    if (which == "s1") {
        if (p.size() != 3)
            throw std::runtime_error("s1 needs --p1 --p2 --p3");
        int v = s1_geometric(parsed.nu, p[0], p[1], p[2]);
        records ? kv("s1", std::to_string(v)) : void(std::cout << "s1 = " << v << "\n");
    } else if (which == "n4") {
        if (p.size() != 3)
            throw std::runtime_error("n4 needs --p1 --p2 --p3");
        int v = n4(parsed.nu, p[0], p[1], p[2]);
        if (records) {
            kv("n4", std::to_string(v));
            kv("m_convention", "synthesized");
        } else {
            std::cout << "n4 = " << v << "\n"
                      << "# m is the synthesized basis element; n4 depends on the point"
                      << " configuration\n";
        }
    } else {
        if (p.size() != 4)
            throw std::runtime_error("epsilon needs --p1 (y0) --p2 (x0) --p3 (y2) --p4 (x2)");
        int v = epsilon_coeff(parsed.nu, p[0], p[1], p[2], p[3]);
        records ? kv("epsilon", std::to_string(v))
                : void(std::cout << "epsilon = " << v << "\n");
    }
    return kOk;
}

int print_bounds(const std::vector<catalog::BoundLine>& lines) {
    bool all_pass = true;
    for (auto& b : lines) {
        if (records) {
            kv("bound." + b.name, rat_str(b.threshold));
            if (b.pass)
                kv("pass." + b.name, *b.pass ? "true" : "false");
            if (b.attained && *b.attained)
                kv("attained." + b.name, "true");
        } else {
            std::cout << b.name << ": " << b.lhs << " <= " << rat_str(b.threshold);
            if (b.equality)
                std::cout << "  (sharp)";
            if (b.pass) {
                std::cout << (*b.pass ? "  [pass" : "  [FAIL");
                if (b.attained && *b.attained)
                    std::cout << ", boundary case";
                std::cout << "]";
            }
            std::cout << "\n";
        }
        if (b.pass && !*b.pass)
            all_pass = false;
    }
    return all_pass ? kOk : kFail;
}

int cmd_catalog_list() {
    auto cat = catalog::make_catalog();
    std::sort(cat.begin(), cat.end(), [](auto& a, auto& b) { return a.name < b.name; });
    for (auto& e : cat) {
        if (records)
            kv("entry." + e.name, e.kind);
        else
            std::cout << e.name << "  (" << e.kind << ")\n";
    }
    return kOk;
}

int cmd_catalog_emit(const std::string& name) {
    auto cat = catalog::make_catalog();
    const auto& e = catalog::find_entry(cat, name);
    if (e.complex)
        std::cout << io::emit_complex(*e.complex);
    else if (e.algebra)
        std::cout << io::emit_algebra(*e.algebra);
    else if (e.algebra_q)
        std::cout << io::emit_algebra(*e.algebra_q);
    else if (e.module)
        std::cout << io::emit_module(*e.module, e.name);
    else if (e.nu)
        std::cout << io::emit_nu(*e.nu, e.name);
    return kOk;
}

int cmd_catalog_selftest() {
    auto cat = catalog::make_catalog();
    std::sort(cat.begin(), cat.end(), [](auto& a, auto& b) { return a.name < b.name; });
    bool all = true;
    int total = 0;
    for (auto& e : cat)
        for (auto& res : e.run_checks()) {
            ++total;
            all = all && res.pass;
            if (records)
                kv("selftest." + e.name + "." + res.name, res.pass ? "pass" : "fail");
            else
                std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << e.name << "/" << res.name
                          << "\n";
        }
    if (!records)
        std::cout << (all ? "selftest ok, " : "selftest FAILED, ") << total << " checks\n";
    return all ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pearl-complex and Lagrangian quantum homology toolkit"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "records"}));

    std::string file, coeff = "plus", element, target = "raw", emit_name;
    std::vector<int> window;
    int max_page = 4, degree = 0, samples = 64, n = 2, nl = 2;
    bool clifford = false, two_torsion = false;
    std::vector<std::string> p_opts(4);
    std::string tau, eprime, esecond, energy, r_opt, rho_opt;
    std::vector<std::string> r_list, rho_list;

    auto* check = app.add_subcommand("check", "validate a pearl-complex file");
    check->add_option("file", file)->required();

    auto* hom = app.add_subcommand("homology", "graded homology dimensions");
    hom->add_option("file", file)->required();
    hom->add_option("--coeff", coeff)->check(CLI::IsMember({"plus", "full"}));
    hom->add_option("--window", window)->expected(2);

    auto* minimal = app.add_subcommand("minimal", "reduce to the minimal model");
    minimal->add_option("file", file)->required();

    auto* ss = app.add_subcommand("ss", "degree-filtration spectral sequence");
    ss->add_option("file", file)->required();
    ss->add_option("--max-page", max_page);

    auto* alg = app.add_subcommand("algebra", "quantum algebra operations");
    alg->require_subcommand(1);
    auto* alg_verify = alg->add_subcommand("verify", "verify algebra or module axioms");
    alg_verify->add_option("file", file)->required();
    auto* alg_euler = alg->add_subcommand("euler", "even quantum Euler class");
    alg_euler->add_option("file", file)->required();
    auto* alg_inv = alg->add_subcommand("invertible", "invertibility questions");
    alg_inv->add_option("file", file)->required();
    alg_inv->add_option("--element", element, "element expression, e.g. 'h' or 'p + u t^1'");
    auto* deg_opt = alg_inv->add_option("--degree", degree, "search a pure-degree slice");
    alg_inv->add_option("--samples", samples);

    auto* torus = app.add_subcommand("torus", "2-torus enumeration");
    torus->require_subcommand(1);
    auto* tsynth = torus->add_subcommand("synth", "quantum product from nu");
    tsynth->add_option("file", file)->required();
    std::vector<CLI::App*> tpt;
    for (auto* name : {"s1", "n4", "epsilon"}) {
        auto* sub = torus->add_subcommand(name);
        sub->add_option("file", file)->required();
        sub->add_option("--p1", p_opts[0]);
        sub->add_option("--p2", p_opts[1]);
        sub->add_option("--p3", p_opts[2]);
        sub->add_option("--p4", p_opts[3]);
        tpt.push_back(sub);
    }

    auto* bounds = app.add_subcommand("bounds", "Gromov radius and packing bounds");
    bounds->require_subcommand(1);
    auto* bgromov = bounds->add_subcommand("gromov", "raw energy bounds");
    bgromov->add_option("--eprime", eprime)->required();
    bgromov->add_option("--esecond", esecond)->required();
    bgromov->add_option("--r", r_opt);
    bgromov->add_option("--rho", rho_opt);
    auto* bcpn = bounds->add_subcommand("cpn", "Lagrangians in CP^n");
    bcpn->add_option("--n", n)->required();
    auto* bcpn_nl = bcpn->add_option("--nl", nl);
    bcpn->add_flag("--clifford", clifford);
    bcpn->add_flag("--two-torsion", two_torsion);
    bcpn->add_option("--r", r_opt);
    bcpn->add_option("--rho", rho_opt);
    auto* btorus = bounds->add_subcommand("torus", "monotone torus bounds");
    btorus->add_option("--tau", tau, "monotonicity constant as a multiple of pi")->required();
    auto* btorus_n = btorus->add_option("--n", n);
    btorus->add_option("--r", r_opt);
    auto* bmixed = bounds->add_subcommand("mixed", "mixed symplectic packing");
    bmixed->add_option("--target", target)
        ->check(CLI::IsMember({"clifford", "quadric-sphere", "raw"}));
    bmixed->add_option("--r", r_list);
    bmixed->add_option("--rho", rho_list);
    bmixed->add_option("--energy", energy);

    auto* cat = app.add_subcommand("catalog", "built-in worked examples");
    cat->require_subcommand(1);
    cat->add_subcommand("list", "list entries");
    auto* cemit = cat->add_subcommand("emit", "write an entry in its text format");
    cemit->add_option("name", emit_name)->required();
    cat->add_subcommand("selftest", "run every expected identity");

    // the global --format flag may follow any subcommand
    std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
        a->fallthrough(true);
        for (auto* s : a->get_subcommands([](const CLI::App*) { return true; }))
            allow_fallthrough(s);
    };
    allow_fallthrough(&app);

    CLI11_PARSE(app, argc, argv);
    records = (format == "records");

    try {
        if (*check)
            return cmd_check(file);
        if (*hom)
            return cmd_homology(file, coeff, window);
        if (*minimal)
            return cmd_minimal(file);
        if (*ss)
            return cmd_ss(file, max_page);
        if (alg_verify->parsed())
            return cmd_algebra_verify(file);
        if (alg_euler->parsed())
            return cmd_algebra_euler(file);
        if (alg_inv->parsed())
            return cmd_algebra_invertible(file, element, degree, deg_opt->count() > 0, samples);
        if (tsynth->parsed())
            return cmd_torus_synth(file);
        for (std::size_t i = 0; i < tpt.size(); ++i)
            if (tpt[i]->parsed()) {
                std::vector<std::string> pts;
                for (auto& s : p_opts)
                    if (!s.empty())
                        pts.push_back(s);
                return cmd_torus_counts(i == 0 ? "s1" : (i == 1 ? "n4" : "epsilon"), file, pts);
            }
        if (bgromov->parsed()) {
            std::optional<Rat> r, rho;
            if (!r_opt.empty())
                r = parse_rational(r_opt);
            if (!rho_opt.empty())
                rho = parse_rational(rho_opt);
            return print_bounds(catalog::gromov_bounds_raw(parse_rational(eprime),
                                                           parse_rational(esecond), r, rho));
        }
        if (bcpn->parsed()) {
            std::optional<Rat> r, rho;
            if (!r_opt.empty())
                r = parse_rational(r_opt);
            if (!rho_opt.empty())
                rho = parse_rational(rho_opt);
            if (bcpn_nl->count() == 0)
                nl = two_torsion ? n + 1 : 2;
            return print_bounds(catalog::cpn_bounds(n, nl, clifford, two_torsion, r, rho));
        }
        if (btorus->parsed()) {
            std::optional<Rat> r;
            if (!r_opt.empty())
                r = parse_rational(r_opt);
            std::optional<int> nn;
            if (btorus_n->count() > 0)
                nn = n;
            return print_bounds(catalog::torus_bounds(parse_rational(tau), nn, r));
        }
        if (bmixed->parsed()) {
            std::vector<Rat> rs, rhos;
            for (auto& s : r_list)
                rs.push_back(parse_rational(s));
            for (auto& s : rho_list)
                rhos.push_back(parse_rational(s));
            std::optional<Rat> e;
            if (!energy.empty())
                e = parse_rational(energy);
            return print_bounds(catalog::mixed_packing(target, rs, rhos, e));
        }
        if (cat->get_subcommand("list")->parsed())
            return cmd_catalog_list();
        if (cemit->parsed())
            return cmd_catalog_emit(emit_name);
        if (cat->get_subcommand("selftest")->parsed())
            return cmd_catalog_selftest();
    } catch (const io::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const GeometryError& e) {
        std::cerr << "degenerate configuration: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
