#include "crrigid/report.hpp"

#include "crrigid/parser.hpp"
#include "crrigid/printing.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace crrigid {

namespace {

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return Json::parse(buf.str());
}

std::optional<int> sphere_spec(const std::string& text) {
    if (text.rfind("sphere:", 0) != 0) return std::nullopt;
    int n = std::stoi(text.substr(7));
    if (n < 1) throw ValidationError("sphere dimension must be >= 1");
    return n;
}

std::vector<std::string> default_names(int n) {
    std::vector<std::string> names;
    for (int j = 0; j < n; ++j) names.push_back("z" + std::to_string(j + 1));
    return names;
}

Json point_json(const Point& p) {
    Json a = Json::array();
    for (const auto& c : p) a.push_back(scalar_string(c));
    return a;
}

Json section_json(const VectorSection& s, const std::vector<std::string>& vars) {
    Json a = Json::array();
    for (const auto& c : s.comps) a.push_back(poly_string(c, vars));
    return a;
}

Json field_json(const PolyVectorField& f, const std::vector<std::string>& vars) {
    Json a = Json::array();
    for (const auto& c : f.comps) a.push_back(poly_string(c, vars));
    return a;
}

Json multiindex_json(const std::vector<Multiindex>& iota) {
    Json a = Json::array();
    for (const auto& m : iota) a.push_back(m);
    return a;
}

int effective_degree_cap(const SessionConfig& cfg, const HoloMap& H) {
    return cfg.degree_cap > 0 ? cfg.degree_cap : H.degree() + 2;
}

int effective_nondeg_cap(const SessionConfig& cfg, const HoloMap& H) {
    return cfg.nondeg_cap > 0 ? cfg.nondeg_cap : default_nondeg_cap(H);
}

Json nondeg_json(const AnalysisSetup& s) {
    int cap = effective_nondeg_cap(s.cfg, s.H);
    Json out;
    out["cap"] = cap;
    NondegCertificate gen = k0_generic(s.H, s.M, s.Mp, cap);
    if (gen.degenerate) {
        out["k0"] = Json();
        out["k0_generic"] = Json();
        out["status"] = "degenerate up to cap";
    } else {
        NondegCertificate order = k0_order(s.H, s.M, s.Mp, cap);
        if (order.degenerate) {
            out["k0"] = Json();
            out["status"] = "degenerate up to cap at a sample point";
        } else {
            out["k0"] = order.k0;
            out["status"] = "nondegenerate";
            Json w;
            w["k0"] = order.k0;
            w["iota"] = multiindex_json(order.iota);
            w["ell"] = order.ell;
            if (order.point) w["point"] = point_json(*order.point);
            out["witness"] = w;
        }
        out["k0_generic"] = gen.k0;
        Json gw;
        gw["iota"] = multiindex_json(gen.iota);
        gw["ell"] = gen.ell;
        // the determinant lives on the complexification; conjugate slots print as ~var
        gw["reduced_determinant"] = poly_string(gen.reduced_determinant, s.vars);
        out["generic_witness"] = gw;
    }
    Json pts = Json::array();
    for (const auto& p : s.M.points()) {
        NondegCertificate c = k0_at_point(s.H, s.M, s.Mp, p, cap);
        Json e;
        e["point"] = point_json(p);
        if (c.degenerate) {
            e["k0"] = Json();
        } else {
            e["k0"] = c.k0;
            e["determinant_value"] = scalar_string(c.value);
        }
        pts.push_back(e);
    }
    out["points"] = pts;
    return out;
}

Json config_json(const SessionConfig& cfg, const AnalysisSetup* s) {
    Json out;
    out["field_sqrt"] = cfg.sqrt_d;
    if (s) {
        out["degree_cap"] = effective_degree_cap(cfg, s->H);
        out["nondeg_cap"] = effective_nondeg_cap(cfg, s->H);
    }
    out["seed"] = cfg.seed;
    return out;
}

Json header_json(const SessionConfig& cfg, const Json& echo, const AnalysisSetup* s) {
    Json out;
    out["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
    out["config"] = config_json(cfg, s);
    out["input"] = echo;
    return out;
}

int holk_prolong_cap(const AnalysisSetup& s, int order) {
    if (s.cfg.prolong_cap > 0) return s.cfg.prolong_cap;
    int base = effective_degree_cap(s.cfg, s.H);
    return base + (order - 1) * std::max(1, s.H.degree());
}

}  // namespace

AnalysisSetup load_analysis_input(const std::string& path, const SessionConfig& cli) {
    Json doc = read_json_file(path);
    SessionConfig cfg = cli;
    if (doc.contains("field_sqrt")) cfg.sqrt_d = doc["field_sqrt"].get<std::int64_t>();
    if (cfg.sqrt_d <= 0) throw ValidationError("field_sqrt must be a positive square-free integer");
    if (doc.contains("seed") && !cfg.seed_from_cli) cfg.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("caps")) {
        const Json& caps = doc["caps"];
        if (caps.contains("degree") && cfg.degree_cap == 0) cfg.degree_cap = caps["degree"].get<int>();
        if (caps.contains("nondeg") && cfg.nondeg_cap == 0) cfg.nondeg_cap = caps["nondeg"].get<int>();
        if (caps.contains("prolong") && cfg.prolong_cap == 0) cfg.prolong_cap = caps["prolong"].get<int>();
    }

    if (!doc.contains("variables")) throw std::runtime_error("input: missing 'variables'");
    std::vector<std::string> vars = doc["variables"].get<std::vector<std::string>>();
    int n = static_cast<int>(vars.size());

    if (!doc.contains("source_rho")) throw std::runtime_error("input: missing 'source_rho'");
    std::string src_text = doc["source_rho"].get<std::string>();
    std::optional<Hypersurface> M;
    if (auto sn = sphere_spec(src_text)) {
        if (*sn != n) throw ValidationError("source sphere dimension disagrees with 'variables'");
        M = sphere(*sn);
    } else {
        MPoly rho = parse_poly(src_text, vars, cfg.sqrt_d);
        try {
            M = Hypersurface(n, rho);
        } catch (const std::invalid_argument& e) {
            throw ValidationError(e.what());
        }
        if (M->is_sphere()) M = sphere(n);  // pick up the stock points
    }

    if (!doc.contains("target")) throw std::runtime_error("input: missing 'target'");
    std::string tgt_text = doc["target"].get<std::string>();
    std::optional<Hypersurface> Mp;
    std::vector<std::string> tvars;
    if (auto tn = sphere_spec(tgt_text)) {
        Mp = sphere(*tn);
        tvars = doc.contains("target_variables") ? doc["target_variables"].get<std::vector<std::string>>()
                                                 : default_names(*tn);
    } else {
        if (!doc.contains("target_variables"))
            throw std::runtime_error("input: target rho text requires 'target_variables'");
        tvars = doc["target_variables"].get<std::vector<std::string>>();
        MPoly rho = parse_poly(tgt_text, tvars, cfg.sqrt_d);
        try {
            Mp = Hypersurface(static_cast<int>(tvars.size()), rho);
        } catch (const std::invalid_argument& e) {
            throw ValidationError(e.what());
        }
        if (Mp->is_sphere()) Mp = sphere(static_cast<int>(tvars.size()));
    }
    if (static_cast<int>(tvars.size()) != Mp->dim())
        throw std::runtime_error("input: 'target_variables' length disagrees with the target dimension");

    if (!doc.contains("map")) throw std::runtime_error("input: missing 'map'");
    std::vector<MPoly> comps;
    for (const auto& t : doc["map"]) comps.push_back(parse_poly(t.get<std::string>(), vars, cfg.sqrt_d));
    if (static_cast<int>(comps.size()) != Mp->dim())
        throw ValidationError("map component count disagrees with the target dimension");
    HoloMap H(n, comps);

    if (doc.contains("points")) {
        for (const auto& pj : doc["points"]) {
            Point p;
            for (const auto& cj : pj) p.push_back(parse_scalar(cj.get<std::string>(), cfg.sqrt_d));
            try {
                M->add_point(p);
            } catch (const std::invalid_argument& e) {
                throw ValidationError(e.what());
            }
        }
    }

    return AnalysisSetup{cfg, vars, tvars, std::move(*M), std::move(*Mp), std::move(H), doc};
}

SegreSetup load_segre_input(const std::string& path, const SessionConfig& cli) {
    Json doc = read_json_file(path);
    SessionConfig cfg = cli;
    if (doc.contains("field_sqrt")) cfg.sqrt_d = doc["field_sqrt"].get<std::int64_t>();
    if (doc.contains("seed") && !cfg.seed_from_cli) cfg.seed = doc["seed"].get<std::uint64_t>();

    if (!doc.contains("cr_dim")) throw std::runtime_error("segre input: missing 'cr_dim'");
    int cr = doc["cr_dim"].get<int>();
    if (!doc.contains("variables")) throw std::runtime_error("segre input: missing 'variables'");
    std::vector<std::string> vars = doc["variables"].get<std::vector<std::string>>();
    if (static_cast<int>(vars.size()) != 2 * cr + 1)
        throw std::runtime_error("segre input: 'variables' must list z-block, chi-block and tau (2n+1 names)");
    if (!doc.contains("Q")) throw std::runtime_error("segre input: missing 'Q'");
    MPoly Q = parse_poly(doc["Q"].get<std::string>(), vars, cfg.sqrt_d);
    int trunc = doc.contains("involution_truncation") ? doc["involution_truncation"].get<int>() : 3;

    NormalComplexification nc;
    try {
        nc = make_normal_complexification(cr, Q, trunc);
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
    return SegreSetup{cfg, vars, std::move(nc), doc};
}

Json run_nondegen(const AnalysisSetup& s) {
    if (!maps_into(s.H, s.M, s.Mp)) throw ValidationError("map does not send the source into the target");
    Json rep = header_json(s.cfg, s.echo, &s);
    rep["maps_into"] = true;
    rep["nondegeneracy"] = nondeg_json(s);
    return rep;
}

Json run_analyze(const AnalysisSetup& s) {
    if (!maps_into(s.H, s.M, s.Mp)) throw ValidationError("map does not send the source into the target");
    Json rep = header_json(s.cfg, s.echo, &s);
    rep["maps_into"] = true;
    rep["nondegeneracy"] = nondeg_json(s);

    RigidityVerdict v = rigidity_verdict(s.H, s.M, s.Mp, effective_degree_cap(s.cfg, s.H));

    Json hol;
    hol["dim"] = v.dim_hol;
    hol["degree_cap"] = v.degree_cap_used;
    hol["exact"] = v.exact_basis;
    Json basis = Json::array();
    for (const auto& b : v.hol.basis) basis.push_back(section_json(b, s.vars));
    hol["basis"] = basis;
    rep["hol"] = hol;

    Json aut;
    aut["dim"] = v.dim_aut;
    aut["stabilizer_dim"] = v.dim_stabilizer;
    aut["hol_M_dim"] = v.hol_M_dim;
    aut["hol_Mp_dim"] = v.hol_Mp_dim;
    Json autbasis = Json::array();
    for (const auto& b : v.aut.aut_basis) autbasis.push_back(section_json(b, s.vars));
    aut["basis"] = autbasis;
    Json stab = Json::array();
    for (const auto& [S, Sp] : v.aut.stabilizer) {
        Json e;
        e["source"] = field_json(S, s.vars);
        e["target"] = field_json(Sp, s.target_vars);
        stab.push_back(e);
    }
    aut["stabilizer"] = stab;
    rep["aut"] = aut;

    Json verdict;
    verdict["status"] = v.verdict;
    verdict["rigid"] = v.rigid;
    verdict["complement_dim"] = v.complement;
    verdict["exact"] = v.exact_basis;
    verdict["degree_cap_used"] = v.degree_cap_used;
    rep["verdict"] = verdict;
    return rep;
}

Json run_holk(const AnalysisSetup& s) {
    Json rep = run_analyze(s);
    int order = std::max(2, s.cfg.order);
    int dcap = effective_degree_cap(s.cfg, s.H);
    DeformationBasis hol1 = solve_hol(s.H, s.M, s.Mp, dcap);

    Json table = Json::array();
    for (int i = 0; i < hol1.dim(); ++i) {
        JetCurve jet = make_jet(s.H, {hol1.basis[i]});
        int reached = 1;
        Json row;
        row["direction"] = i;
        row["status"] = "extended";
        for (int ord = 2; ord <= order; ++ord) {
            ProlongationResult res = prolong(jet, s.M, s.Mp, holk_prolong_cap(s, ord));
            if (!res.extended) {
                row["status"] = "obstructed";
                row["obstructed_at_order"] = ord;
                Json labels = Json::array();
                for (const auto& l : res.residual_labels) labels.push_back(l);
                row["residual_rows"] = labels;
                break;
            }
            jet.coeffs.push_back(res.particular);
            reached = ord;
        }
        row["extended_to_order"] = reached;
        table.push_back(row);
    }

    Json holk;
    holk["order"] = order;
    holk["prolongation_cap_order2"] = holk_prolong_cap(s, 2);
    holk["directions"] = table;

    ObstructionQuadric q = obstruction_quadric(s.H, s.M, s.Mp, hol1, holk_prolong_cap(s, 2));
    Json qj;
    qj["basis_dim"] = q.basis_dim;
    qj["cokernel_dim"] = static_cast<int>(q.coker_labels.size());
    qj["identically_zero"] = q.is_identically_zero();
    Json forms = Json::array();
    for (size_t r = 0; r < q.forms.size(); ++r) {
        bool all_zero = true;
        for (const auto& row : q.forms[r])
            for (const auto& x : row) all_zero = all_zero && x.is_zero();
        if (all_zero) continue;
        Json f;
        f["row"] = q.coker_labels[r];
        Json mat = Json::array();
        for (const auto& row : q.forms[r]) {
            Json jrow = Json::array();
            for (const auto& x : row) jrow.push_back(quadext_string(x));
            mat.push_back(jrow);
        }
        f["matrix"] = mat;
        forms.push_back(f);
    }
    qj["nonzero_forms"] = forms;
    holk["obstruction_quadric"] = qj;

    rep["holk"] = holk;
    return rep;
}

Json run_segre(const SegreSetup& s) {
    Json rep = header_json(s.cfg, s.echo, nullptr);
    MinimalityReport m = minimality(s.nc, s.cfg.bound, s.cfg.seed);
    Json seg;
    seg["cr_dim"] = s.nc.n;
    seg["Q"] = poly_string(s.nc.Q, s.vars);
    seg["involution_truncation"] = s.nc.trunc;
    seg["bound"] = m.bound;
    seg["ranks"] = m.ranks;
    seg["minimal"] = m.t_min.has_value();
    if (m.t_min) {
        seg["t"] = *m.t_min;
        seg["jet_order_hint"] = *m.jet_order_hint;
    } else {
        seg["status"] = "not minimal up to " + std::to_string(m.bound);
    }
    seg["seed"] = m.seed;
    rep["segre"] = seg;
    return rep;
}

void emit_report(const Json& report, const SessionConfig& cfg) {
    std::string text = report.dump(2) + "\n";
    if (cfg.json_out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.json_out);
    if (!out) throw std::runtime_error("cannot write report: " + cfg.json_out);
    out << text;
}

}  // namespace crrigid
