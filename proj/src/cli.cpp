#include "jacres/cli.hpp"

#include "jacres/artin.hpp"
#include "jacres/bezoutian.hpp"
#include "jacres/closure.hpp"
#include "jacres/errors.hpp"
#include "jacres/expansion.hpp"
#include "jacres/newton.hpp"
#include "jacres/relative.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

namespace jacres::cli {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Caps caps_from_env() {
    Caps caps;
    if (const char* env = std::getenv("JACRES_MAX_STEPS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) caps.max_steps = v;
    }
    return caps;
}

std::string mono_str(const Ring& ring, const Monomial& m) {
    return Polynomial::from_term(ring, m, Q(1)).to_string();
}

void emit(std::ostream& out, bool as_json, const json& j,
          const std::vector<std::string>& plain) {
    if (as_json) {
        out << j.dump() << "\n";
    } else {
        for (const auto& line : plain) out << line << "\n";
    }
}

// Deterministic probe polynomials for the pairing subcommand.
std::vector<Polynomial> probe_polynomials(const Ring& ring, int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> expd(0, 3), coeffd(-4, 4), termsd(1, 4);
    std::vector<Polynomial> out;
    while (static_cast<int>(out.size()) < count) {
        Polynomial p(ring);
        int terms = termsd(rng);
        for (int t = 0; t < terms; ++t) {
            std::vector<int> e(ring.nvars());
            for (auto& x : e) x = expd(rng);
            int c = coeffd(rng);
            if (c == 0) c = 1;
            p = p + Polynomial::from_term(ring, Monomial(std::move(e)), Q(c));
        }
        out.push_back(std::move(p));
    }
    return out;
}

struct Options {
    std::string file;
    std::string poly;
    std::string powers;
    std::string arcs_file;
    std::vector<std::string> witnesses;
    int mcap = 3;
    int probes = 20;
    bool as_json = false;
};

MultiIndex parse_powers(const std::string& text, int n) {
    MultiIndex m;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            m.push_back(std::stoi(item));
        } catch (...) {
            throw invalid_input("bad --powers entry '" + item + "'");
        }
    }
    if (static_cast<int>(m.size()) != n)
        throw invalid_input("--powers needs one entry per variable");
    return m;
}

int dispatch(const std::string& cmd, const Options& opt, std::ostream& out) {
    Caps caps = caps_from_env();
    ParsedSystem sys = parse_system(read_file(opt.file));
    const Ring& ring = sys.ring;

    if (cmd == "dim") {
        DimensionResult dr = quotient_dimension(flattened_ideal(sys), caps);
        json j;
        std::vector<std::string> plain;
        j["finite"] = dr.finite;
        if (dr.finite) {
            j["dim"] = dr.dim;
            json monos = json::array();
            std::string line = "monomials:";
            for (const auto& m : dr.std_monomials) {
                monos.push_back(mono_str(ring, m));
                line += " " + mono_str(ring, m);
            }
            j["monomials"] = monos;
            plain = {"finite: true", "dim: " + std::to_string(dr.dim), line};
        } else {
            j["witness"] = ring.var_name(dr.witness_var);
            plain = {"finite: false", "witness: " + ring.var_name(dr.witness_var)};
        }
        emit(out, opt.as_json, j, plain);
        return 0;
    }

    if (cmd == "member") {
        if (opt.poly.empty()) throw invalid_input("member needs --poly");
        Polynomial g = parse_polynomial(opt.poly, ring);
        auto [in, cert] = relative_member(g, sys, caps);
        if (!cert.verifies(g, flattened_ideal(sys)))
            throw invariant_violation("membership certificate failed to re-multiply");
        json j;
        j["member"] = in;
        emit(out, opt.as_json, j, {in ? "true" : "false"});
        return 0;
    }

    if (cmd == "jactest") {
        if (sys.relative()) throw invalid_input("jactest expects a plain system (no coeff:)");
        JacobianVerdict v = jacobian_test(sys.generators, caps);
        json j;
        j["dim_finite"] = v.dim_finite;
        if (v.dim_finite)
            j["dim"] = v.dim;
        else
            j["witness"] = ring.var_name(v.witness_var);
        j["jacobian_in_ideal"] = v.jacobian_in_ideal;
        if (v.socle_generated) j["socle_generated"] = *v.socle_generated;
        if (v.char_caveat) j["char_caveat"] = true;
        std::vector<std::string> plain;
        plain.push_back(std::string("dim_finite: ") + (v.dim_finite ? "true" : "false"));
        if (v.dim_finite) plain.push_back("dim: " + std::to_string(v.dim));
        plain.push_back(std::string("dim_positive: ") + (v.dim_positive ? "true" : "false"));
        plain.push_back("jacobian: " + v.jacobian.to_string());
        plain.push_back(std::string("jacobian_in_ideal: ") + (v.jacobian_in_ideal ? "true" : "false"));
        if (v.socle_generated)
            plain.push_back(std::string("socle_generated: ") + (*v.socle_generated ? "true" : "false"));
        if (v.char_caveat) plain.push_back("char_caveat: true");
        emit(out, opt.as_json, j, plain);
        return 0;
    }

    if (cmd == "socle") {
        if (sys.relative()) throw invalid_input("socle expects a plain system (no coeff:)");
        QuotientAlgebra alg = QuotientAlgebra::build(sys.generators, caps);
        auto soc = alg.socle();
        json j;
        j["socle_dim"] = soc.basis.size();
        j["simple"] = soc.simple;
        json basis = json::array();
        std::string line = "basis:";
        for (const auto& b : soc.basis) {
            basis.push_back(b.to_string());
            line += " " + b.to_string();
        }
        j["basis"] = basis;
        emit(out, opt.as_json, j,
             {"socle_dim: " + std::to_string(soc.basis.size()),
              std::string("simple: ") + (soc.simple ? "true" : "false"), line});
        return 0;
    }

    if (cmd == "residue") {
        if (sys.relative()) throw invalid_input("residue expects a plain system (no coeff:)");
        Polynomial r = opt.poly.empty() ? Polynomial::constant(ring, Q(1))
                                        : parse_polynomial(opt.poly, ring);
        Q value;
        if (opt.powers.empty()) {
            QuotientAlgebra alg = QuotientAlgebra::build(sys.generators, caps);
            value = alg.trace_residue(r);
        } else {
            value = residue_power(sys.generators, r, parse_powers(opt.powers, ring.nvars()), caps);
        }
        json j;
        j["value"] = to_string(value);
        emit(out, opt.as_json, j, {to_string(value)});
        return 0;
    }

    if (cmd == "pairing") {
        if (sys.relative()) throw invalid_input("pairing expects a plain system (no coeff:)");
        auto probes = probe_polynomials(ring, opt.probes, 20240915u);
        NondegeneracyVerdict v = nondegeneracy_check(sys.generators, probes, caps);
        json j;
        j["pairing_invertible"] = v.pairing_invertible;
        j["probes"] = v.probes;
        j["kernel_matches_ideal"] = v.mismatches == 0;
        emit(out, opt.as_json, j,
             {std::string("pairing_invertible: ") + (v.pairing_invertible ? "true" : "false"),
              "probes: " + std::to_string(v.probes),
              std::string("kernel_matches_ideal: ") + (v.mismatches == 0 ? "true" : "false")});
        return 0;
    }

    if (cmd == "samuel") {
        if (opt.poly.empty()) throw invalid_input("samuel needs --poly");
        Polynomial a = parse_polynomial(opt.poly, ring);
        Q v = samuel_monomial(sys.generators, a);
        json j;
        j["value"] = to_string(v);
        emit(out, opt.as_json, j, {to_string(v)});
        return 0;
    }

    if (cmd == "arcs") {
        if (opt.arcs_file.empty()) throw invalid_input("arcs needs --arcs FILE");
        auto arcs = parse_arcs(read_file(opt.arcs_file), ring.field());
        std::optional<Polynomial> probe;
        if (!opt.poly.empty()) probe = parse_polynomial(opt.poly, ring);
        json all = json::array();
        std::vector<std::string> plain;
        for (size_t i = 0; i < arcs.size(); ++i) {
            ArcReportResult rep = arc_report(sys.generators, arcs[i], probe, caps);
            json j;
            json ords = json::array();
            std::string ordline = "orders:";
            for (const auto& o : rep.generator_orders) {
                ords.push_back(o ? json(*o) : json("inf"));
                ordline += " " + (o ? std::to_string(*o) : std::string("inf"));
            }
            j["orders"] = ords;
            j["min_order"] = rep.min_order ? json(*rep.min_order) : json("inf");
            if (probe) {
                j["probe_order"] = rep.probe_order ? json(*rep.probe_order) : json("inf");
                j["ratio"] = rep.ratio_defined ? json(to_string(*rep.ratio)) : json("undefined");
            }
            j["cramer_ok"] = rep.cramer_ok;
            all.push_back(j);
            plain.push_back("arc " + std::to_string(i + 1) + ": " + ordline +
                            " min " + (rep.min_order ? std::to_string(*rep.min_order) : std::string("inf")) +
                            (probe ? (rep.ratio_defined ? " ratio " + to_string(*rep.ratio)
                                                        : std::string(" ratio undefined"))
                                   : std::string()) +
                            (rep.cramer_ok ? " cramer ok" : " cramer FAILED"));
        }
        emit(out, opt.as_json, all, plain);
        return 0;
    }

    if (cmd == "loja") {
        if (sys.relative()) throw invalid_input("loja expects a plain system (no coeff:)");
        std::vector<Arc> arcs;
        if (!opt.arcs_file.empty()) arcs = parse_arcs(read_file(opt.arcs_file), ring.field());
        LojaCertificateResult c = loja_certificate(sys.generators, arcs, opt.mcap, caps);
        json j;
        j["rank0"] = c.rank0;
        j["codim"] = c.codim;
        if (c.no_statement) {
            j["statement"] = "none";
            emit(out, opt.as_json, j,
                 {"rank0: " + std::to_string(c.rank0), "codim: " + std::to_string(c.codim),
                  "statement: none (n - m <= 1)"});
            return 0;
        }
        j["s"] = c.containment_index;
        j["theta_lb"] = to_string(c.theta_lb);
        j["strict_order"] = c.strict_order;
        j["closure_certified"] = c.closure_certified;
        if (c.vbar_exact) j["vbar"] = to_string(*c.vbar_exact);
        if (c.vbar_lower) j["vbar_lower"] = to_string(*c.vbar_lower);
        if (c.vbar_upper) j["vbar_upper"] = to_string(*c.vbar_upper);
        std::vector<std::string> plain = {
            "rank0: " + std::to_string(c.rank0),
            "codim: " + std::to_string(c.codim),
            "s: " + std::to_string(c.containment_index),
            "theta_lb: " + to_string(c.theta_lb),
            std::string("strict_order: ") + (c.strict_order ? "true" : "false"),
            std::string("closure_certified: ") + (c.closure_certified ? "true" : "false")};
        if (c.vbar_exact) plain.push_back("vbar: " + to_string(*c.vbar_exact));
        if (c.vbar_lower) plain.push_back("vbar_lower: " + to_string(*c.vbar_lower));
        if (c.vbar_upper) plain.push_back("vbar_upper: " + to_string(*c.vbar_upper));
        emit(out, opt.as_json, j, plain);
        return 0;
    }

    if (cmd == "hessian") {
        if (sys.relative()) throw invalid_input("hessian expects a plain system (no coeff:)");
        if (sys.generators.size() != 1)
            throw invalid_input("hessian expects a single f: line");
        HessianVerdict v = hessian_criterion(sys.generators.front(), caps);
        json j;
        j["isolated"] = v.isolated;
        j["hessian"] = v.hessian.to_string();
        j["hessian_in_jacobian_ideal"] = v.hessian_in_jacobian_ideal;
        j["jacobian_ideal_integrally_closed"] =
            v.jacobian_ideal_closed == ClosedVerdict::yes
                ? "true"
                : v.jacobian_ideal_closed == ClosedVerdict::no ? "false" : "not computed";
        emit(out, opt.as_json, j,
             {std::string("isolated: ") + (v.isolated ? "true" : "false"),
              "hessian: " + v.hessian.to_string(),
              std::string("hessian_in_jacobian_ideal: ") +
                  (v.hessian_in_jacobian_ideal ? "true" : "false"),
              "jacobian_ideal_integrally_closed: " +
                  std::string(j["jacobian_ideal_integrally_closed"].get<std::string>())});
        return 0;
    }

    if (cmd == "relative") {
        if (!sys.relative()) throw invalid_input("relative expects a coeff: clause");
        CoeffAnalysis ca = analyze_coeff(sys, caps);
        json j;
        j["kind"] = ca.kind == CoeffKind::domain_polynomial ? "domain_polynomial"
                                                            : "artinian_quotient";
        std::vector<std::string> plain = {"kind: " + j["kind"].get<std::string>()};

        std::vector<Polynomial> witnesses;
        for (const auto& w : opt.witnesses) witnesses.push_back(parse_polynomial(w, ring));
        if (witnesses.empty()) witnesses = sys.generators; // generators lie in the radical
        Th31Report th31 = theorem31_check(sys, witnesses, caps);
        json jw = json::array();
        for (const auto& w : th31.witnesses) {
            json e;
            e["witness"] = w.witness.to_string();
            e["radical_power"] = w.radical_power;
            e["jw_in_ideal"] = w.jw_in_ideal;
            jw.push_back(e);
            plain.push_back("witness " + w.witness.to_string() + ": w^" +
                            std::to_string(w.radical_power) + " in I, J*w in I: " +
                            (w.jw_in_ideal ? "true" : "false"));
        }
        j["th31"] = {{"asserted", th31.asserted},
                     {"witnesses", jw},
                     {"jacobian_in_ideal", th31.jacobian_in_ideal},
                     {"conclusion1", th31.conclusion1_observed ? "observed" : "not observed"},
                     {"conclusion2", th31.conclusion2_observed ? "observed" : "not observed"}};
        plain.push_back(std::string("th31 asserted: ") + (th31.asserted ? "true" : "false"));
        plain.push_back("th31 conclusion1 (J*radical in I): " +
                        std::string(th31.conclusion1_observed ? "observed" : "not observed"));
        plain.push_back("th31 conclusion2 (J not in I): " +
                        std::string(th31.conclusion2_observed ? "observed" : "not observed"));

        try {
            Polynomial g = opt.poly.empty() ? Polynomial::constant(ring, Q(1))
                                            : parse_polynomial(opt.poly, ring);
            TraceResult tr = trace_over_A(sys, g, caps);
            j["trace"] = {{"free", true}, {"rank", tr.rank}, {"value", tr.trace.to_string()}};
            plain.push_back("trace rank: " + std::to_string(tr.rank));
            plain.push_back("trace: " + tr.trace.to_string());
        } catch (const invalid_input& e) {
            j["trace"] = {{"free", false}, {"reason", e.what()}};
            plain.push_back(std::string("trace: not free (") + e.what() + ")");
        }

        if (ca.kind == CoeffKind::artinian_quotient) {
            try {
                Th33Report th33 = theorem33_probe(sys, caps);
                j["th33"] = {{"quotient_artinian", th33.quotient_artinian},
                             {"jacobian_in_ideal", th33.jacobian_in_ideal},
                             {"conclusion", th33.observed ? "observed" : "not observed"}};
                plain.push_back(std::string("th33 quotient_artinian: ") +
                                (th33.quotient_artinian ? "true" : "false"));
                plain.push_back("th33 conclusion (non-Artinian => J in I): " +
                                std::string(th33.observed ? "observed" : "not observed"));
            } catch (const invalid_input& e) {
                j["th33"] = {{"skipped", e.what()}};
                plain.push_back(std::string("th33 skipped: ") + e.what());
            }
        }
        emit(out, opt.as_json, j, plain);
        return 0;
    }

    throw invalid_input("unknown subcommand '" + cmd + "'");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact local-algebra toolkit: jacobians, residues, socles, closures"};
    app.name("jacres");
    app.require_subcommand(1);

    static const std::vector<std::string> names = {"dim",    "member", "jactest", "socle",
                                                   "residue", "pairing", "samuel",  "arcs",
                                                   "loja",   "hessian", "relative"};
    Options opt;
    for (const auto& name : names) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("file", opt.file, "system file")->required();
        sub->add_flag("--json", opt.as_json, "JSON output");
        sub->add_option("--poly", opt.poly, "polynomial expression");
        if (name == "residue") sub->add_option("--powers", opt.powers, "m1,m2,...");
        if (name == "arcs" || name == "loja")
            sub->add_option("--arcs", opt.arcs_file, "arc file");
        if (name == "loja") sub->add_option("--mcap", opt.mcap, "power search depth");
        if (name == "pairing") sub->add_option("--probes", opt.probes, "probe count");
        if (name == "relative")
            sub->add_option("--witness", opt.witnesses, "radical witness expression");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 3;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), opt, out);
    } catch (const parse_error& e) {
        err << "parse error at line " << e.line << ", column " << e.col << ": " << e.what()
            << "\n";
        return 3;
    } catch (const invalid_input& e) {
        err << "invalid input: " << e.what() << "\n";
        return 3;
    } catch (const inconclusive_error& e) {
        err << "inconclusive: " << e.what() << "\n";
        return 2;
    } catch (const invariant_violation& e) {
        err << "invariant violated: " << e.what() << "\n";
        return 4;
    }
}

} // namespace jacres::cli
