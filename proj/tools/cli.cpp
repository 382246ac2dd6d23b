#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "wrt/classify.hpp"
#include "wrt/geodesic.hpp"
#include "wrt/markoff.hpp"

namespace wrt {

namespace {

using json = nlohmann::ordered_json;

std::string fmt_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        fail(errc::bad_input, "not an integer: " + s);
    }
}

std::vector<Int> parse_int_list(const std::string& s, std::size_t count, const char* what) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
    if (out.size() != count) fail(errc::bad_input, std::string("expected ") + what);
    return out;
}

Ideal ideal_from_option(FieldPtr fc, const std::string& spec) {
    if (spec.empty()) return unit_ideal(std::move(fc));
    auto v = parse_int_list(spec, 3, "--ideal a,b,d");
    return ideal_from_canonical(std::move(fc), v[0], v[1], v[2]);
}

json qi_json(const QuadInt& x) { return json::array({x.a.get_str(), x.c.get_str()}); }

json twist_json(const TwistClass& t) {
    json j;
    j["abs_cos"] = rat_str(Rat(abs(t.cos_theta)));
    j["cos"] = rat_str(t.cos_theta);
    j["f4"] = t.f4.get_str();
    j["kind"] = twist_kind_name(t.kind);
    j["alpha"] = t.alpha;
    j["rho"] = sphere_packing_radius(t.cos_theta);
    j["witness"] = {{"x", qi_json(t.witness.x)}, {"y", qi_json(t.witness.y)}};
    j["beta"] = {{"num", qi_json(t.beta.num)}, {"den", t.beta.den.get_str()}};
    return j;
}

const char* kAlphaNote =
    "alpha = ((conj(y)^2 - conj(x)^2)/(x^2 - y^2))^(1/4); the product form "
    "((conj(y)^2 - conj(x)^2)(x^2 - y^2))^(1/4) seen elsewhere does not equalize "
    "the twisted lengths";

struct Options {
    std::string ideal_spec;
    std::string x_spec;
    std::string family;
    std::string out_path;
    std::string format = "table";
    bool as_json = false;
    bool as_csv = false;
    long samples = 2048;
    std::string d_str, min_d_str, max_d_str, max_c_str;
};

void cmd_field(const Options& o, std::ostream& out) {
    FieldPtr fc = make_field(parse_int(o.d_str));
    if (o.as_json) {
        json j;
        j["D"] = fc->D.get_str();
        j["disc"] = fc->disc.get_str();
        j["tr_omega"] = fc->tr_omega;
        j["norm_omega"] = fc->norm_omega.get_str();
        j["fund_unit"] = qi_json(fc->fund_unit);
        j["fund_unit_norm"] = fc->fund_unit_norm;
        j["regulator"] = fc->regulator;
        out << j.dump(2) << "\n";
        return;
    }
    out << "D            " << fc->D << "\n";
    out << "disc         " << fc->disc << "\n";
    out << "omega        " << (fc->tr_omega ? "(1 + sqrt(D))/2" : "sqrt(D)") << "\n";
    out << "Tr(omega)    " << fc->tr_omega << "\n";
    out << "N(omega)     " << fc->norm_omega << "\n";
    out << "fund unit    " << qi_str(fc->fund_unit) << "  =  "
        << fmt_double(std::exp(fc->regulator)) << "\n";
    out << "N(eps)       " << fc->fund_unit_norm << "\n";
    out << "regulator    " << fmt_double(fc->regulator) << "\n";
}

void cmd_twists(const Options& o, std::ostream& out) {
    FieldPtr fc = make_field(parse_int(o.d_str));
    Ideal I = ideal_from_option(fc, o.ideal_spec);
    TwistSet ts = well_rounded_twists(I);
    Int bound = twist_enumeration_bound(I);
    if (o.as_json) {
        json j;
        j["D"] = fc->D.get_str();
        j["ideal"] = json::array({I.a.get_str(), I.b.get_str(), I.d.get_str()});
        j["norm"] = I.norm().get_str();
        j["bound"] = bound.get_str();
        j["principal_count"] = ts.principal_count;
        j["alpha_convention"] = kAlphaNote;
        j["classes"] = json::array();
        for (const TwistClass& t : ts.classes) j["classes"].push_back(twist_json(t));
        out << j.dump(2) << "\n";
        return;
    }
    if (o.as_csv) {
        out << "abs_cos,cos,f4,kind,alpha,rho,x_a,x_c,y_a,y_c\n";
        for (const TwistClass& t : ts.classes) {
            out << rat_str(Rat(abs(t.cos_theta))) << "," << rat_str(t.cos_theta) << ","
                << t.f4 << "," << twist_kind_name(t.kind) << "," << fmt_double(t.alpha) << ","
                << fmt_double(sphere_packing_radius(t.cos_theta)) << "," << t.witness.x.a << ","
                << t.witness.x.c << "," << t.witness.y.a << "," << t.witness.y.c << "\n";
        }
        return;
    }
    out << "# K = Q(sqrt(" << fc->D << ")), disc " << fc->disc << ", ideal (" << I.a << ", "
        << qi_str(I.basis_v()) << "), N(I) = " << I.norm() << "\n";
    out << "# |N(x)| <= " << bound << "; principal ideals up to units/Galois: "
        << ts.principal_count << "; well-rounded twists: " << ts.classes.size() << "\n";
    out << "# " << kAlphaNote << "\n";
    for (const TwistClass& t : ts.classes) {
        out << "|cos| = " << rat_str(Rat(abs(t.cos_theta))) << "  cos = " << rat_str(t.cos_theta)
            << "  f4 = " << t.f4 << "  kind = " << twist_kind_name(t.kind)
            << "  alpha = " << fmt_double(t.alpha)
            << "  rho = " << fmt_double(sphere_packing_radius(t.cos_theta)) << "  basis {"
            << qi_str(t.witness.x) << " ; " << qi_str(t.witness.y) << "}\n";
    }
}

void cmd_extend(const Options& o, std::ostream& out) {
    FieldPtr fc = make_field(parse_int(o.d_str));
    Ideal I = ideal_from_option(fc, o.ideal_spec);
    auto v = parse_int_list(o.x_spec, 2, "--x a,c");
    QuadInt x(v[0], v[1]);
    auto bases = extend_to_good_bases(I, x);
    if (o.as_json) {
        json j;
        j["D"] = fc->D.get_str();
        j["ideal"] = json::array({I.a.get_str(), I.b.get_str(), I.d.get_str()});
        j["x"] = qi_json(x);
        j["norm_x"] = qi_norm(*fc, x).get_str();
        j["bases"] = json::array();
        for (const BasisPair& b : bases) {
            json e;
            e["y"] = qi_json(b.y);
            e["f4"] = f4_value(b).get_str();
            e["cos"] = rat_str(cos_theta(b));
            j["bases"].push_back(e);
        }
        out << j.dump(2) << "\n";
        return;
    }
    out << "# x = " << qi_str(x) << ", N(x) = " << qi_norm(*fc, x) << ", ideal norm " << I.norm()
        << "\n";
    if (bases.empty()) {
        out << "no good bases extend x\n";
        return;
    }
    for (const BasisPair& b : bases) {
        out << "y = " << qi_str(b.y) << "  f4 = " << f4_value(b)
            << "  cos = " << rat_str(cos_theta(b)) << "\n";
    }
}

void cmd_geodesic(const Options& o, std::ostream& out) {
    FieldPtr fc = make_field(parse_int(o.d_str));
    Ideal I = ideal_from_option(fc, o.ideal_spec);
    if (o.samples < 2) fail(errc::bad_input, "--samples must be at least 2");
    auto samples = sample_geodesic(I, static_cast<int>(o.samples));
    if (o.out_path.empty()) fail(errc::bad_input, "--out PATH is required");
    std::ofstream f(o.out_path);
    if (!f) fail(errc::bad_input, "cannot open output file " + o.out_path);
    write_geodesic_csv(f, samples);
    auto crossings = crossing_cosines(I, static_cast<int>(o.samples));
    out << "wrote " << samples.size() << " samples to " << o.out_path << "\n";
    out << "alpha window [1, " << fmt_double(std::exp(closure_log_window(I))) << "]\n";
    out << "well-rounded crossings |x|:";
    for (double c : crossings) out << " " << fmt_double(c);
    out << "\n";
}

json markoff_row(const MarkoffTriple& t) {
    json j;
    j["triple"] = json::array({t.a.get_str(), t.b.get_str(), t.c.get_str()});
    if (mod_floor(t.c, 2) == 0) {
        j["odd"] = false;
        return j;
    }
    j["odd"] = true;
    MarkoffIdealData md = markoff_ideal(t);
    j["D"] = md.field->D.get_str();
    j["k"] = md.k.get_str();
    j["ell"] = md.ell.get_str();
    j["ideal"] = json::array({md.ideal.a.get_str(), md.ideal.b.get_str(), md.ideal.d.get_str()});
    if (t.c > 1) {
        MarkoffGoodBases gb = markoff_good_bases(t);
        j["cos1"] = rat_str(gb.cos1);
        j["cos2"] = rat_str(gb.cos2);
    } else {
        j["cos1"] = "0";
        j["cos2"] = nullptr;
    }
    MarkoffMpd mm = markoff_mpd(t);
    j["min_norm"] = mm.min_norm.get_str();
    j["n_lambda"] = mm.n_lambda;
    j["meets_s_hat"] = mm.meets_s_hat;
    return j;
}

void cmd_markoff(const Options& o, std::ostream& out) {
    Int max_c = parse_int(o.max_c_str);
    std::vector<MarkoffTriple> triples;
    if (o.family.empty()) {
        triples = markoff_tree(max_c);
    } else {
        std::vector<MarkoffTriple> fam;
        if (o.family == "fibonacci")
            fam = fibonacci_triples(64);
        else if (o.family == "pell")
            fam = pell_triples(64);
        else
            fail(errc::bad_input, "--family must be fibonacci or pell");
        for (const MarkoffTriple& t : fam)
            if (t.c <= max_c) triples.push_back(t);
    }
    if (o.as_json) {
        json j = json::array();
        for (const MarkoffTriple& t : triples) j.push_back(markoff_row(t));
        out << j.dump(2) << "\n";
        return;
    }
    for (const MarkoffTriple& t : triples) {
        out << "(" << t.a << ", " << t.b << ", " << t.c << ")";
        if (mod_floor(t.c, 2) == 0) {
            out << "  even c: skipped (non-maximal order)\n";
            continue;
        }
        MarkoffIdealData md = markoff_ideal(t);
        out << "  D = " << md.field->D << "  k = " << md.k << "  I_c = (" << md.ideal.a << ", "
            << md.ideal.b << ", " << md.ideal.d << ")";
        if (t.c > 1) {
            MarkoffGoodBases gb = markoff_good_bases(t);
            out << "  cos = (" << rat_str(gb.cos1) << ", " << rat_str(gb.cos2) << ")";
        } else {
            out << "  cos = (0, -)";
        }
        MarkoffMpd mm = markoff_mpd(t);
        out << "  N(Lambda) = " << fmt_double(mm.n_lambda)
            << (mm.meets_s_hat ? " = S_hat" : " != S_hat") << "\n";
    }
}

void cmd_classify(const Options& o, std::ostream& out) {
    Int max_d = parse_int(o.max_d_str);
    bool all_agree = true;
    json rows = json::array();
    for (const Int& D : square_free_in(Int(2), max_d)) {
        FieldPtr fc = make_field(D);
        bool special = is_special_form(D);
        bool unique_orth = unique_orthogonal_twist(fc);
        RegulatorBound rb = regulator_lower_bound(*fc);
        bool agree = special == unique_orth && special == rb.equality;
        all_agree = all_agree && agree;
        if (o.as_json) {
            json j;
            j["D"] = D.get_str();
            j["special_form"] = special;
            j["unique_orthogonal"] = unique_orth;
            j["regulator"] = fc->regulator;
            j["reg_lower_bound"] = rb.bound;
            j["reg_equality"] = rb.equality;
            j["agree"] = agree;
            rows.push_back(j);
        } else {
            out << "D = " << D << "  special_form = " << (special ? "yes" : "no ")
                << "  unique_orthogonal = " << (unique_orth ? "yes" : "no ")
                << "  reg_equality = " << (rb.equality ? "yes" : "no ")
                << (agree ? "" : "  MISMATCH") << "\n";
        }
    }
    if (o.as_json) {
        json j;
        j["rows"] = rows;
        j["all_agree"] = all_agree;
        out << j.dump(2) << "\n";
    } else {
        out << (all_agree ? "all three conditions agree" : "MISMATCH FOUND") << "\n";
    }
    if (!all_agree) fail(errc::internal, "classification conditions disagree");
}

void survey_row_table(const FieldReport& fr, std::ostream& out) {
    out << "D = " << fr.D << "  disc = " << fr.disc << "  R = " << fmt_double(fr.regulator)
        << "  N(eps) = " << fr.fund_unit_norm << "  S_K = " << fr.s_k
        << "  |w| = " << fr.twists.size() << "  |P| = " << fr.principal_count << "  cos:";
    for (const TwistClass& t : fr.twists) out << " " << rat_str(Rat(abs(t.cos_theta)));
    out << (fr.unique_orthogonal ? "  [unique orthogonal]" : "") << "\n";
}

void cmd_survey(const Options& o, std::ostream& out) {
    Int min_d = parse_int(o.min_d_str);
    Int max_d = parse_int(o.max_d_str);
    if (min_d > max_d) fail(errc::bad_input, "--min-D must not exceed --max-D");
    if (o.format == "csv") {
        out << "D,disc,regulator,reg_lower_bound,reg_equality,fund_unit_norm,s_k,s_hat,"
               "n_classes,principal_count,unique_orthogonal,cos_list\n";
        survey(min_d, max_d, [&](const FieldReport& fr) {
            out << fr.D << "," << fr.disc << "," << fmt_double(fr.regulator) << ","
                << fmt_double(fr.reg_lower_bound) << "," << (fr.reg_equality ? 1 : 0) << ","
                << fr.fund_unit_norm << "," << fr.s_k << "," << fmt_double(fr.s_hat) << ","
                << fr.twists.size() << "," << fr.principal_count << ","
                << (fr.unique_orthogonal ? 1 : 0) << ",";
            for (std::size_t i = 0; i < fr.twists.size(); ++i)
                out << (i ? ";" : "") << rat_str(Rat(abs(fr.twists[i].cos_theta)));
            out << "\n";
        });
    } else if (o.format == "json") {
        json rows = json::array();
        survey(min_d, max_d, [&](const FieldReport& fr) {
            json j;
            j["D"] = fr.D.get_str();
            j["disc"] = fr.disc.get_str();
            j["regulator"] = fr.regulator;
            j["reg_lower_bound"] = fr.reg_lower_bound;
            j["reg_equality"] = fr.reg_equality;
            j["fund_unit_norm"] = fr.fund_unit_norm;
            j["s_k"] = fr.s_k.get_str();
            j["s_hat"] = fr.s_hat;
            j["principal_count"] = fr.principal_count;
            j["unique_orthogonal"] = fr.unique_orthogonal;
            j["classes"] = json::array();
            for (const TwistClass& t : fr.twists) j["classes"].push_back(twist_json(t));
            rows.push_back(j);
        });
        out << rows.dump(2) << "\n";
    } else if (o.format == "table") {
        survey(min_d, max_d, [&](const FieldReport& fr) { survey_row_table(fr, out); });
    } else {
        fail(errc::bad_input, "--format must be table, csv, or json");
    }
}

void cmd_mpd(const Options& o, std::ostream& out) {
    FieldPtr fc = make_field(parse_int(o.d_str));
    Ideal I = ideal_from_option(fc, o.ideal_spec);
    Int m = min_nonzero_abs_norm(I);
    double v = mpd(I);
    double shat = s_hat_k(fc->disc);
    if (o.as_json) {
        json j;
        j["D"] = fc->D.get_str();
        j["ideal"] = json::array({I.a.get_str(), I.b.get_str(), I.d.get_str()});
        j["norm"] = I.norm().get_str();
        j["min_abs_norm"] = m.get_str();
        j["mpd"] = v;
        j["s_hat"] = shat;
        j["principal"] = is_principal(I);
        out << j.dump(2) << "\n";
        return;
    }
    out << "ideal (" << I.a << ", " << qi_str(I.basis_v()) << ")  N(I) = " << I.norm() << "\n";
    out << "min |N(x)|   " << m << "\n";
    out << "N(Lambda_I)  " << fmt_double(v) << "\n";
    out << "S_hat_K      " << fmt_double(shat) << "\n";
    out << "principal    " << (is_principal(I) ? "yes" : "no") << "\n";
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"well-rounded twists of ideal lattices from real quadratic fields"};
    app.require_subcommand(1);
    Options o;

    auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.as_json, "JSON output"); };
    auto add_ideal = [&](CLI::App* c) {
        c->add_option("--ideal", o.ideal_spec, "ideal as canonical triple a,b,d");
    };

    CLI::App* field = app.add_subcommand("field", "field constants for Q(sqrt(D))");
    field->add_option("D", o.d_str, "square-free D >= 2")->required();
    add_json(field);

    CLI::App* twists = app.add_subcommand("twists", "all well-rounded twists of an ideal lattice");
    twists->add_option("D", o.d_str)->required();
    add_ideal(twists);
    add_json(twists);
    twists->add_flag("--csv", o.as_csv, "CSV output");

    CLI::App* extend = app.add_subcommand("extend", "good bases containing a given element");
    extend->add_option("D", o.d_str)->required();
    extend->add_option("--x", o.x_spec, "element as a,c meaning a + c*omega")->required();
    add_ideal(extend);
    add_json(extend);

    CLI::App* geo = app.add_subcommand("geodesic", "sample the geodesic in the fundamental domain");
    geo->add_option("D", o.d_str)->required();
    geo->add_option("--samples", o.samples, "number of samples")->required();
    geo->add_option("--out", o.out_path, "CSV output path")->required();
    add_ideal(geo);

    CLI::App* mk = app.add_subcommand("markoff", "Markoff triples, ideals, and their good bases");
    mk->add_option("--max", o.max_c_str, "largest Markoff number c")->required();
    mk->add_option("--family", o.family, "fibonacci or pell");
    add_json(mk);

    CLI::App* cls = app.add_subcommand("classify", "fields whose only well-rounded twist is orthogonal");
    cls->add_option("--max-D", o.max_d_str, "upper bound for D")->required();
    add_json(cls);

    CLI::App* sv = app.add_subcommand("survey", "per-field report over a range of D");
    sv->add_option("--min-D", o.min_d_str)->required();
    sv->add_option("--max-D", o.max_d_str)->required();
    sv->add_option("--format", o.format, "table, csv, or json");

    CLI::App* mp = app.add_subcommand("mpd", "minimum product distance of an ideal lattice");
    mp->add_option("D", o.d_str)->required();
    add_ideal(mp);
    add_json(mp);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (field->parsed()) cmd_field(o, out);
        else if (twists->parsed()) cmd_twists(o, out);
        else if (extend->parsed()) cmd_extend(o, out);
        else if (geo->parsed()) cmd_geodesic(o, out);
        else if (mk->parsed()) cmd_markoff(o, out);
        else if (cls->parsed()) cmd_classify(o, out);
        else if (sv->parsed()) cmd_survey(o, out);
        else if (mp->parsed()) cmd_mpd(o, out);
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == errc::internal ? 1 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace wrt
