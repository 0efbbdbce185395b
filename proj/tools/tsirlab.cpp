// tsirlab: exact computations around the Tsirelson norms, the graph metrics
// on finite subsets of N, their embedding maps, and the concentration
// experiments.  All numeric output is exact: rationals print as num/den
// (squared values for the l2 host).
#include "CLI11.hpp"
#include "json.hpp"

#include "tsirelson/conclab.hpp"
#include "tsirelson/dual_norm.hpp"

#include <fstream>
#include <iostream>

using namespace tsirelson;
using nlohmann::json;

namespace {

enum class Out { text, json_out, csv };

Out parse_out(const std::string& s) {
    if (s == "text") return Out::text;
    if (s == "json") return Out::json_out;
    if (s == "csv") return Out::csv;
    throw std::invalid_argument("--out must be text, json or csv");
}

FiniteSet parse_alphabet(const std::string& spec) {
    const auto dots = spec.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("alphabet must be a range lo..hi");
    const int lo = std::stoi(spec.substr(0, dots));
    const int hi = std::stoi(spec.substr(dots + 2));
    return range_set(lo, hi);
}

// vector text, or the JSON array form [{"pos":p,"num":n,"den":d}]
SparseVector parse_vector_arg(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\n");
    if (first != std::string::npos && text[first] == '[') {
        const json doc = json::parse(text);
        std::vector<VectorEntry> entries;
        for (const auto& item : doc) {
            const long den = item.value("den", 1L);
            entries.push_back({item.at("pos").get<int>(),
                               make_rational(Integer(item.at("num").get<long>()), Integer(den))});
        }
        return SparseVector::make(std::move(entries));
    }
    return parse_vector(text);
}

json functional_json(const NormFunctional& f) {
    if (f.is_leaf()) return json{{"leaf", {{"pos", f.leaf_pos()}, {"sign", f.leaf_sign()}}}};
    json children = json::array();
    for (const auto& c : f.children()) children.push_back(functional_json(c));
    return json{{"node", children}};
}

std::string csv_quote(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

struct MapChoice {
    std::string name;
    bool exactly_k;  // domain [A]^k rather than [A]^{<=k}
    Metric default_kind;
};

MapChoice map_choice(const std::string& name) {
    if (name == "symdiff") return {name, false, Metric::symdiff};
    if (name == "tree") return {name, false, Metric::tree};
    if (name == "hamming") return {name, true, Metric::hamming};
    if (name == "tree-c0") return {name, false, Metric::tree};
    if (name == "johnson-l2") return {name, true, Metric::johnson};
    throw std::invalid_argument("unknown map '" + name + "'");
}

PointMap build_map(const MapChoice& choice, int k) {
    if (choice.name == "symdiff")
        return [](const FinitePoint& p) { return map_symdiff(p); };
    if (choice.name == "tree")
        return [](const FinitePoint& p) { return map_tree_lemma(p, PairingFunction::sets()); };
    if (choice.name == "hamming")
        return [](const FinitePoint& p) { return map_hamming(p, PairingFunction::pairs()); };
    if (choice.name == "tree-c0")
        return [k](const FinitePoint& p) {
            return map_tree_c0(p, k, PairingFunction::sets_offset(k));
        };
    // johnson-l2: the 1/sqrt(k) rescaling is applied to squared distances
    return [k](const FinitePoint& p) { return map_johnson_l2(p, false, k).vec; };
}

int run_norm(const std::string& input, Out out) {
    const SparseVector x = parse_vector_arg(input);
    const auto [value, cert] = t_norm(x);
    if (out == Out::json_out) {
        json doc{{"value", rational_str(value)}, {"certificate", functional_json(cert)}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << rational_str(value) << "\n";
        std::cout << "certificate: " << functional_str(cert) << "\n";
    }
    return 0;
}

int run_dual_norm(const std::string& input, Out out) {
    const SparseVector x = parse_vector_arg(input);
    const auto [value, cert] = tstar_norm(x);
    if (out == Out::json_out) {
        json doc{{"value", rational_str(value)},
                 {"witness", vector_str(cert.primal_witness)},
                 {"cuts", cert.constraint_set.size()}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << rational_str(value) << "\n";
        std::cout << "witness: " << vector_str(cert.primal_witness) << "\n";
        std::cout << "cuts: " << cert.constraint_set.size() << "\n";
    }
    return 0;
}

int run_check_213(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("--n must be in 1..10");
    Rational worst(0);
    SparseVector worst_sum;
    for (unsigned signs = 0; signs < (1u << n); ++signs) {
        std::vector<SparseVector> blocks;
        for (int j = 0; j < n; ++j)
            blocks.push_back(Rational((signs >> j) & 1 ? -1 : 1) * SparseVector::basis(n + j));
        const auto r = check_block_inequality(blocks);
        if (r.sum_norm > worst) {
            worst = r.sum_norm;
            SparseVector sum;
            for (const auto& b : blocks) sum = sum + b;
            worst_sum = std::move(sum);
        }
    }
    if (worst <= 2) {
        std::cout << "value " << rational_str(worst) << " ≤ 2 OK\n";
        return 0;
    }
    std::cout << "value " << rational_str(worst) << " > 2 FAIL\n";
    std::cout << "witness: " << vector_str(worst_sum) << "\n";
    return 1;
}

int run_dist(const std::string& kind_name, const std::string& p_text,
             const std::string& q_text) {
    const Metric kind = parse_metric(kind_name);
    const FinitePoint p = parse_point(p_text);
    const FinitePoint q = parse_point(q_text);
    const Rational d = metric_distance({kind, Rational(1)}, p, q);
    std::cout << d.get_num().get_str() << "\n";
    return 0;
}

int run_graph_check(const std::string& kind_name, int k, const std::string& alphabet_spec) {
    const Metric kind = parse_metric(kind_name);
    const FiniteSet alphabet = parse_alphabet(alphabet_spec);
    const auto report = check_graph_agreement(kind, k, alphabet);
    std::cout << "pairs " << report.pairs << " agree " << report.agree << " excluded "
              << report.excluded.size() << "\n";
    for (const auto& [p, q] : report.excluded)
        std::cout << "excluded: " << point_str(p) << " | " << point_str(q) << "\n";
    if (report.sound && report.excluded.empty()) {
        std::cout << "OK\n";
        return 0;
    }
    std::cout << (report.sound ? "OK (with exclusions)\n" : "FAIL\n");
    return report.sound ? 0 : 1;
}

int run_enumerate(const std::string& alphabet_spec, int k, const std::string& variant) {
    EnumerateVariant v;
    if (variant == "exactly")
        v = EnumerateVariant::exactly_k;
    else if (variant == "upto")
        v = EnumerateVariant::up_to_k;
    else
        throw std::invalid_argument("--variant must be exactly or upto");
    for (const auto& p : enumerate_points(parse_alphabet(alphabet_spec), k, v))
        std::cout << point_str(p) << "\n";
    return 0;
}

int run_embed(const std::string& map_name, const std::string& space_name, int k,
              const std::string& alphabet_spec, bool scaled, Out out) {
    const MapChoice choice = map_choice(map_name);
    parse_host(space_name);  // validated; the image vector reads the same in every host
    if (scaled && choice.name != "johnson-l2")
        throw std::invalid_argument("--scaled applies to the johnson-l2 map");
    const FiniteSet alphabet = parse_alphabet(alphabet_spec);
    const PointMap f = build_map(choice, k);
    const auto points = enumerate_points(
        alphabet, k, choice.exactly_k ? EnumerateVariant::exactly_k : EnumerateVariant::up_to_k);
    const Rational scale_sq = scaled ? make_rational(1, k) : Rational(1);

    if (out == Out::json_out) {
        json rows = json::array();
        for (const auto& p : points) {
            json row{{"point", point_str(p)}, {"image", vector_str(f(p))}};
            if (scaled) row["scale_sq"] = rational_str(scale_sq);
            rows.push_back(std::move(row));
        }
        std::cout << rows.dump(2) << "\n";
    } else if (out == Out::csv) {
        std::cout << (scaled ? "point,image,scale_sq\n" : "point,image\n");
        for (const auto& p : points) {
            std::cout << csv_quote(point_str(p)) << "," << csv_quote(vector_str(f(p)));
            if (scaled) std::cout << "," << csv_quote(rational_str(scale_sq));
            std::cout << "\n";
        }
    } else {
        for (const auto& p : points) {
            std::cout << point_str(p) << " -> " << vector_str(f(p));
            if (scaled) std::cout << "  (scale_sq " << rational_str(scale_sq) << ")";
            std::cout << "\n";
        }
    }
    return 0;
}

int run_moduli(const std::string& map_name, const std::string& space_name,
               const std::string& kind_name, int k, const std::string& alphabet_spec,
               const std::string& scale_text, bool scaled, Out out) {
    const MapChoice choice = map_choice(map_name);
    const HostSpace space = parse_host(space_name);
    const Metric kind = kind_name.empty() ? choice.default_kind : parse_metric(kind_name);
    const Rational scale = scale_text.empty() ? Rational(1) : parse_rational(scale_text);
    if (scale <= 0) throw std::invalid_argument("--scale must be positive");
    if (scaled && (choice.name != "johnson-l2" || space.kind != Host::l2))
        throw std::invalid_argument("--scaled needs the johnson-l2 map into l2");
    const FiniteSet alphabet = parse_alphabet(alphabet_spec);
    const PointMap f = build_map(choice, k);
    // the source metric dictates the domain: its graph versions live on [A]^k
    const bool exactly = kind == Metric::johnson || kind == Metric::hamming || choice.exactly_k;
    const auto points = enumerate_points(
        alphabet, k, exactly ? EnumerateVariant::exactly_k : EnumerateVariant::up_to_k);
    const Rational image_scale_sq = scaled ? make_rational(1, k) : Rational(1);
    const auto report = compute_moduli(f, points, {kind, scale}, space, image_scale_sq);

    if (out == Out::json_out) {
        json rows = json::array();
        for (size_t i = 0; i < report.distances.size(); ++i)
            rows.push_back(json{{"t", rational_str(report.distances[i])},
                                {"rho", rational_str(report.rho[i].second)},
                                {"omega", rational_str(report.omega[i].second)}});
        json doc{{"squared", report.squared},
                 {"lip", rational_str(report.lip)},
                 {"rows", std::move(rows)}};
        std::cout << doc.dump(2) << "\n";
    } else if (out == Out::csv) {
        std::cout << "t,rho_sq_or_val,omega_sq_or_val\n";
        for (size_t i = 0; i < report.distances.size(); ++i)
            std::cout << rational_str(report.distances[i]) << ","
                      << rational_str(report.rho[i].second) << ","
                      << rational_str(report.omega[i].second) << "\n";
    } else {
        std::cout << "squared: " << (report.squared ? "yes" : "no") << "\n";
        std::cout << "lip: " << rational_str(report.lip) << "\n";
        for (size_t i = 0; i < report.distances.size(); ++i)
            std::cout << "t " << rational_str(report.distances[i]) << "  rho "
                      << rational_str(report.rho[i].second) << "  omega "
                      << rational_str(report.omega[i].second) << "\n";
    }
    return 0;
}

json concentration_json(const ConcentrationReport& rep) {
    return json{{"k", rep.k},
                {"alphabet", point_str(rep.alphabet)},
                {"squared", rep.squared},
                {"lip", rational_str(rep.lip)},
                {"full_diameter", rational_str(rep.full_diameter)},
                {"best_subalphabet", point_str(rep.best_subalphabet)},
                {"sub_diameter", rational_str(rep.sub_diameter)},
                {"bound_5lip", rational_str(rep.bound_5lip)},
                {"holds", rep.holds},
                {"search_mode",
                 rep.search_mode == SearchMode::exhaustive ? "exhaustive" : "greedy"}};
}

int run_concentrate(std::string family_name, std::string space_name, int k,
                    std::string alphabet_spec, int subsize, std::string mode_name,
                    std::string kind_name, long budget, const std::string& config_path,
                    Out out) {
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw std::invalid_argument("cannot open config '" + config_path + "'");
        const json cfg = json::parse(in);
        family_name = cfg.at("family").get<std::string>();
        space_name = cfg.at("space").get<std::string>();
        k = cfg.at("k").get<int>();
        const auto& range = cfg.at("alphabet");
        alphabet_spec = std::to_string(range.at(0).get<int>()) + ".." +
                        std::to_string(range.at(1).get<int>());
        subsize = cfg.at("subsize").get<int>();
        mode_name = cfg.at("mode").get<std::string>();
        if (cfg.contains("kind")) kind_name = cfg.at("kind").get<std::string>();
    }
    SearchMode mode;
    if (mode_name == "exhaustive")
        mode = SearchMode::exhaustive;
    else if (mode_name == "greedy")
        mode = SearchMode::greedy;
    else
        throw std::invalid_argument("--mode must be exhaustive or greedy");
    const MetricKind kind{kind_name.empty() ? Metric::hamming : parse_metric(kind_name),
                          Rational(1)};
    const MapFamily family = parse_family(family_name);
    const HostSpace space = parse_host(space_name);
    const FiniteSet alphabet = parse_alphabet(alphabet_spec);
    const auto rep =
        concentration_check(family, space, k, alphabet, subsize, mode, kind, budget);

    if (out == Out::json_out) {
        std::cout << concentration_json(rep).dump(2) << "\n";
    } else if (out == Out::csv) {
        std::cout << "k,alphabet,lip,full_diameter,best_subalphabet,sub_diameter,bound_5lip,"
                     "holds,search_mode\n";
        std::cout << rep.k << "," << csv_quote(point_str(rep.alphabet)) << ","
                  << rational_str(rep.lip) << "," << rational_str(rep.full_diameter) << ","
                  << csv_quote(point_str(rep.best_subalphabet)) << ","
                  << rational_str(rep.sub_diameter) << "," << rational_str(rep.bound_5lip)
                  << "," << (rep.holds ? "true" : "false") << ","
                  << (rep.search_mode == SearchMode::exhaustive ? "exhaustive" : "greedy")
                  << "\n";
    } else {
        std::cout << "k: " << rep.k << "\n";
        std::cout << "alphabet: " << point_str(rep.alphabet) << "\n";
        std::cout << "squared: " << (rep.squared ? "yes" : "no") << "\n";
        std::cout << "lip: " << rational_str(rep.lip) << "\n";
        std::cout << "full_diameter: " << rational_str(rep.full_diameter) << "\n";
        std::cout << "best_subalphabet: " << point_str(rep.best_subalphabet) << "\n";
        std::cout << "sub_diameter: " << rational_str(rep.sub_diameter) << "\n";
        std::cout << "bound_5lip: " << rational_str(rep.bound_5lip) << "\n";
        std::cout << "holds: " << (rep.holds ? "yes" : "no") << "\n";
    }
    if (rep.holds) return 0;

    // exhibit a pair realizing the surviving diameter
    const PointMap f = family.builder(k, alphabet);
    NormCache cache(space);
    const auto pts = enumerate_points(rep.best_subalphabet, k, EnumerateVariant::exactly_k);
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (cache.distance(f(pts[i]), f(pts[j])) == rep.sub_diameter) {
                std::cout << "witness: " << point_str(pts[i]) << " | " << point_str(pts[j])
                          << "\n";
                return 1;
            }
    return 1;
}

int run_contrast(const std::string& ks_text, Out out) {
    std::vector<int> ks;
    for (int v : parse_point(ks_text)) ks.push_back(v);
    const auto rows = contrast_experiment(ks);
    if (out == Out::json_out) {
        json arr = json::array();
        for (const auto& r : rows) {
            json row{{"k", r.k},
                     {"l2_sub_diameter_sq", rational_str(r.l2_diameter_sq)},
                     {"l2_lip_sq", rational_str(r.l2_lip_sq)},
                     {"l2_ratio_sq", rational_str(r.l2_ratio_sq)}};
            if (r.has_tstar) {
                row["tstar_sub_diameter"] = rational_str(r.tstar_sub_diameter);
                row["tstar_lip"] = rational_str(r.tstar_lip);
                row["tstar_ratio"] = rational_str(r.tstar_ratio);
            }
            arr.push_back(std::move(row));
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        std::cout << "k,tstar_sub_diameter,tstar_lip,tstar_ratio,l2_sub_diameter_sq,l2_lip_sq,"
                     "l2_ratio_sq\n";
        for (const auto& r : rows) {
            std::cout << r.k << ",";
            if (r.has_tstar)
                std::cout << rational_str(r.tstar_sub_diameter) << ","
                          << rational_str(r.tstar_lip) << "," << rational_str(r.tstar_ratio);
            else
                std::cout << ",,";
            std::cout << "," << rational_str(r.l2_diameter_sq) << ","
                      << rational_str(r.l2_lip_sq) << "," << rational_str(r.l2_ratio_sq)
                      << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Tsirelson-norm laboratory"};
    app.require_subcommand(1);

    std::string vec_text, out_name = "text";
    std::string kind_name, space_name = "Tstar", alphabet_spec, p_text, q_text;
    std::string map_name, family_name = "summing", mode_name = "exhaustive",
                          variant = "exactly";
    std::string scale_text, ks_text, config_path;
    int k = 0, n = 2, level = 0, offset = 0, n_max = 0, subsize = 0;
    long budget = 200000;
    bool scaled = false;

    auto* norm = app.add_subcommand("norm", "T norm with a maximizing certificate");
    norm->add_option("vector", vec_text, "vector as pos:num/den tokens or JSON")->required();
    norm->add_option("--out", out_name);

    auto* dual = app.add_subcommand("dual-norm", "T* norm with a primal witness");
    dual->add_option("vector", vec_text)->required();
    dual->add_option("--out", out_name);

    auto* lvl = app.add_subcommand("level-norm", "k-th inductive norm");
    lvl->add_option("vector", vec_text)->required();
    lvl->add_option("--k", level)->required();

    auto* c213 = app.add_subcommand(
        "check-213", "norm of n signed dual unit blocks against the bound 2");
    c213->add_option("--n", n)->required();

    auto* dist = app.add_subcommand("dist", "metric distance between two points");
    dist->add_option("--kind", kind_name, "tree|symdiff|hamming|johnson")->required();
    dist->add_option("p", p_text)->required();
    dist->add_option("q", q_text);

    auto* gcheck = app.add_subcommand("graph-check", "BFS distances against the formulas");
    gcheck->add_option("--kind", kind_name)->required();
    gcheck->add_option("--k", k)->required();
    gcheck->add_option("--alphabet", alphabet_spec, "inclusive range lo..hi")->required();

    auto* enumc = app.add_subcommand("enumerate", "list points of [alphabet]^k");
    enumc->add_option("--alphabet", alphabet_spec)->required();
    enumc->add_option("--k", k)->required();
    enumc->add_option("--variant", variant, "exactly|upto");

    auto* embed = app.add_subcommand("embed", "evaluate an embedding map");
    embed->add_option("--map", map_name, "symdiff|tree|hamming|tree-c0|johnson-l2")
        ->required();
    embed->add_option("--space", space_name, "l1|l2|c0|T|Tstar");
    embed->add_option("--k", k)->required();
    embed->add_option("--alphabet", alphabet_spec)->required();
    embed->add_flag("--scaled", scaled, "rescale johnson-l2 by 1/sqrt(k)");
    embed->add_option("--out", out_name);

    auto* moduli = app.add_subcommand("moduli", "compression/expansion moduli of a map");
    moduli->add_option("--map", map_name)->required();
    moduli->add_option("--space", space_name);
    moduli->add_option("--kind", kind_name, "source metric (defaults to the map's own)");
    moduli->add_option("--k", k)->required();
    moduli->add_option("--alphabet", alphabet_spec)->required();
    moduli->add_option("--scale", scale_text, "source metric scale, e.g. 1/3");
    moduli->add_flag("--scaled", scaled);
    moduli->add_option("--out", out_name);

    auto* fund =
        app.add_subcommand("fundamental", "norm of a far-out block of k basis vectors");
    fund->add_option("--space", space_name);
    fund->add_option("--k", k)->required();
    fund->add_option("--offset", offset)->required();

    auto* psi =
        app.add_subcommand("psi", "minimal signed block norm over n_1<...<n_k <= N");
    psi->add_option("--space", space_name);
    psi->add_option("--k", k)->required();
    psi->add_option("--N", n_max)->required();
    psi->add_option("--budget", budget);

    auto* conc = app.add_subcommand("concentrate", "sub-alphabet diameter against 5 Lip");
    conc->add_option("--family", family_name, "summing|hamming-lemma");
    conc->add_option("--space", space_name);
    conc->add_option("--k", k);
    conc->add_option("--alphabet", alphabet_spec);
    conc->add_option("--subsize", subsize);
    conc->add_option("--mode", mode_name, "exhaustive|greedy");
    conc->add_option("--kind", kind_name, "hamming|johnson");
    conc->add_option("--budget", budget);
    conc->add_option("--config", config_path, "JSON config document");
    conc->add_option("--out", out_name);

    auto* contrast = app.add_subcommand("contrast", "T* versus l2 diameter/Lip ratios");
    contrast->add_option("--ks", ks_text, "comma-separated k values")->required();
    contrast->add_option("--out", out_name);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const Out out = parse_out(out_name);
        if (*norm) return run_norm(vec_text, out);
        if (*dual) return run_dual_norm(vec_text, out);
        if (*lvl) {
            std::cout << rational_str(t_norm_level(parse_vector_arg(vec_text), level)) << "\n";
            return 0;
        }
        if (*c213) return run_check_213(n);
        if (*dist) return run_dist(kind_name, p_text, q_text);
        if (*gcheck) return run_graph_check(kind_name, k, alphabet_spec);
        if (*enumc) return run_enumerate(alphabet_spec, k, variant);
        if (*embed) return run_embed(map_name, space_name, k, alphabet_spec, scaled, out);
        if (*moduli)
            return run_moduli(map_name, space_name, kind_name, k, alphabet_spec, scale_text,
                              scaled, out);
        if (*fund) {
            std::cout << rational_str(fundamental_estimate(parse_host(space_name), k, offset))
                      << "\n";
            return 0;
        }
        if (*psi) {
            std::cout << rational_str(psi_estimate(parse_host(space_name), k, n_max, budget))
                      << "\n";
            return 0;
        }
        if (*conc)
            return run_concentrate(family_name, space_name, k, alphabet_spec, subsize,
                                   mode_name, kind_name, budget, config_path, out);
        if (*contrast) return run_contrast(ks_text, out == Out::text ? Out::csv : out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
