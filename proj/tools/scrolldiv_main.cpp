#include <cctype>
#include <cstdint>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "scrolldiv/cohomology.hpp"
#include "scrolldiv/divisors.hpp"
#include "scrolldiv/errors.hpp"
#include "scrolldiv/intersect.hpp"
#include "scrolldiv/oracle.hpp"
#include "scrolldiv/transform.hpp"

using json = nlohmann::ordered_json;
using namespace scrolldiv;

namespace {

json json_int(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

json json_rat(const Rat& v) {
    return numerator(v).str() + "/" + denominator(v).str();
}

json json_pic(const PicClass& c) { return json::array({json_int(c.a), json_int(c.b)}); }

json json_form(const SheafForm& s) { return json::array({json_int(s.a), json_int(s.b)}); }

json json_cohom(const CohomVector& h) {
    json out = json::array();
    for (const Int& v : h) out.push_back(json_int(v));
    return out;
}

Int parse_int_flag(const std::string& flag, const std::string& value) {
    if (value.empty())
        throw std::invalid_argument(flag + " expects an integer");
    for (size_t i = 0; i < value.size(); ++i) {
        char c = value[i];
        bool ok = std::isdigit(static_cast<unsigned char>(c)) ||
                  (i == 0 && (c == '-' || c == '+') && value.size() > 1);
        if (!ok)
            throw std::invalid_argument(flag + " expects an integer, got '" + value + "'");
    }
    return Int(value);
}

/// Splits "x1;x2;..." where each x is "a" or "a,b".
std::vector<std::vector<Int>> parse_class_list(const std::string& value) {
    std::vector<std::vector<Int>> out;
    std::string entry;
    auto flush_entry = [&] {
        std::vector<Int> parts;
        std::string piece;
        for (char c : entry) {
            if (c == ',') {
                parts.push_back(parse_int_flag("--classes", piece));
                piece.clear();
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                piece += c;
            }
        }
        parts.push_back(parse_int_flag("--classes", piece));
        out.push_back(std::move(parts));
        entry.clear();
    };
    for (char c : value) {
        if (c == ';')
            flush_entry();
        else
            entry += c;
    }
    flush_entry();
    return out;
}

struct Options {
    std::string scroll;
    std::string a, b, d, d2, vb, vb2;
    std::string classes;
    std::string space = "tilde";
    bool as_json = false;
};

std::string render_scalar(const json& value) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_array()) {
        std::string out = "(";
        for (size_t i = 0; i < value.size(); ++i) {
            if (i) out += ", ";
            out += render_scalar(value[i]);
        }
        return out + ")";
    }
    return value.dump();
}

void render_text_value(const std::string& key, const json& value) {
    if (value.is_object()) {
        for (const auto& [sub, v] : value.items()) render_text_value(key + "." + sub, v);
        return;
    }
    std::cout << key << " = " << render_scalar(value) << "\n";
}

void emit(const json& envelope, bool as_json) {
    if (as_json) {
        std::cout << envelope.dump(2) << "\n";
        return;
    }
    render_text_value("command", envelope["command"]);
    render_text_value("scroll", envelope["scroll"]);
    for (const auto& [key, value] : envelope["result"].items()) render_text_value(key, value);
    for (const auto& w : envelope["warnings"])
        std::cout << "warning: " << w.get<std::string>() << "\n";
}

json scroll_json(const Scroll& s) {
    json out = json::array();
    for (const Int& a : s.degrees) out.push_back(json_int(a));
    return out;
}

struct Command {
    const Options& opts;
    Scroll scroll;
    json inputs = json::object();
    json result = json::object();
    std::vector<std::string> warnings;

    explicit Command(const Options& o) : opts(o), scroll(classify(parse_scroll_spec(o.scroll))) {}

    Int flag(const std::string& name, const std::string& raw) {
        Int v = parse_int_flag(name, raw);
        inputs[name.substr(2)] = json_int(v);
        return v;
    }

    json envelope(const std::string& command) const {
        json env;
        env["command"] = command;
        env["scroll"] = scroll_json(scroll);
        env["inputs"] = inputs;
        env["result"] = result;
        env["warnings"] = warnings;
        return env;
    }
};

void run_classify(Command& cmd) {
    const Scroll& s = cmd.scroll;
    cmd.result["regime"] = std::string(regime_name(s.regime));
    cmd.result["f"] = json_int(s.f);
    cmd.result["r"] = s.r;
    cmd.result["n"] = json_int(s.n);
    cmd.result["vertex_dim"] = s.vertex_dim;
    if (s.is_singular()) cmd.result["vertex_codim"] = s.r - s.vertex_dim;
    cmd.result["canonical_class"] = json_pic(canonical_class(s));
    if (s.is_cone()) cmd.result["exceptional_class"] = json_pic(exceptional_class(s));
}

void run_cohom(Command& cmd) {
    Int a = cmd.flag("--a", cmd.opts.a);
    Int b = cmd.flag("--b", cmd.opts.b);
    cmd.inputs["space"] = cmd.opts.space;
    CohomVector h = cmd.opts.space == "x" ? cohomology_x(cmd.scroll, a, b)
                                          : cohomology_tilde(cmd.scroll, a, b);
    cmd.result["h"] = json_cohom(h);
    cmd.result["chi"] = json_int(chi_tilde(cmd.scroll, a, b));
    if (a >= 0 && b >= -1) cmd.result["h0_closed"] = json_int(h0_closed(cmd.scroll, a, b));
}

void run_sheaf(Command& cmd) {
    const Scroll& s = cmd.scroll;
    if (!cmd.opts.classes.empty()) {
        cmd.inputs["classes"] = cmd.opts.classes;
        auto entries = parse_class_list(cmd.opts.classes);
        if (entries.size() != 2 || entries[0].size() != 2 || entries[1].size() != 2)
            throw std::invalid_argument("sheaf --classes expects exactly two a,b pairs");
        SheafForm s1{entries[0][0], entries[0][1], s.regime};
        SheafForm s2{entries[1][0], entries[1][1], s.regime};
        cmd.result["sum"] = json_form(div_group_op(s, s1, s2));
        return;
    }
    if (!cmd.opts.d.empty()) {
        Int d = cmd.flag("--d", cmd.opts.d);
        SheafForm form = sheaf_of_divisor(s, WeilClass::ruling(d));
        cmd.result["form"] = json_form(form);
        cmd.result["cartier"] = *is_cartier(s, WeilClass::ruling(d));
        cmd.result["dual"] = json_form(div_dual(s, form));
        return;
    }
    Int a = cmd.flag("--a", cmd.opts.a);
    Int b = cmd.flag("--b", cmd.opts.b);
    cmd.result["reflexive"] = is_reflexive(s, a, b);
    SheafForm form = normalize_sheaf(s, a, b);
    cmd.result["form"] = json_form(form);
    WeilClass image = strict_image(s, {a, b});
    if (s.is_cone())
        cmd.result["image"] = json_int(image.d());
    else
        cmd.result["image"] = json::array({json_int(image.a), json_int(image.b)});
    std::optional<bool> cartier = is_cartier(s, image);
    if (cartier) {
        cmd.result["cartier"] = *cartier;
    } else {
        cmd.result["cartier"] = "undetermined";
        cmd.warnings.push_back(
            "Cartier status of classes with nonzero fiber part is undetermined in this regime");
    }
    cmd.result["dual"] = json_form(div_dual(s, form));
}

void run_linsys(Command& cmd) {
    Int d = cmd.flag("--d", cmd.opts.d);
    Int dim = dim_linear_system(cmd.scroll, d);
    Int closed = dim_linear_system_closed(cmd.scroll, d);
    cmd.result["dim"] = json_int(dim);
    cmd.result["h0"] = json_int(dim + 1);
    cmd.result["closed_form"] = json_int(closed);
    if (closed != dim)
        cmd.warnings.push_back("closed-form dimension gives " + closed.str() +
                               "; the section-count dimension " + dim.str() +
                               " is authoritative (known discrepancy on Cartier multiples)");
}

void run_transform(Command& cmd) {
    Int d = cmd.flag("--d", cmd.opts.d);
    TransformData t = transform_data(cmd.scroll, d);
    cmd.result["total"] = json_pic(t.total);
    auto [ra, rb] = rational_total_transform(cmd.scroll, d);
    cmd.result["rational"] = json::array({json_rat(ra), json_rat(rb)});
    cmd.result["k"] = json_int(t.k);
    cmd.result["h"] = json_int(t.h);
    if (d >= 0) cmd.result["epsilon"] = json_rat(epsilon(cmd.scroll, d));
    if (!cmd.opts.d2.empty()) {
        Int d2 = cmd.flag("--d2", cmd.opts.d2);
        cmd.result["total2"] = json_pic(integral_total_transform(cmd.scroll, d2));
        cmd.result["total_sum"] = json_pic(integral_total_transform(cmd.scroll, d + d2));
        cmd.result["defect"] = json_int(sum_defect(cmd.scroll, d, d2));
    }
    if (!cmd.opts.vb.empty()) {
        Int vb = cmd.flag("--vb", cmd.opts.vb);
        cmd.result["latitude"] = json_int(pushforward_latitude(cmd.scroll, d, vb));
    }
}

void run_intersect(Command& cmd) {
    Int d = cmd.flag("--d", cmd.opts.d);
    Int d2 = cmd.flag("--d2", cmd.opts.d2);
    ConeCiInvariants inv = cone_ci_invariants(cmd.scroll, d, d2);
    cmd.result["degree"] = json_int(inv.degree);
    if (inv.genus) {
        cmd.result["genus"] = json_int(*inv.genus);
    } else {
        cmd.warnings.push_back(
            "DimensionTooSmall: the intersection on a surface cone is zero-dimensional; "
            "genus omitted");
    }
    cmd.result["chi0"] = json_int(inv.chi0);
    ResolutionTriple res = intersection_resolution(cmd.scroll, d, d2);
    cmd.result["resolution"] = {{"left", json_pic(res.left)},
                                {"mid1", json_pic(res.mid1)},
                                {"mid2", json_pic(res.mid2)}};
    cmd.result["defect"] = json_int(sum_defect(cmd.scroll, d, d2));
    if (cmd.scroll.r >= 3 && d > cmd.scroll.f && d2 > cmd.scroll.f) {
        CiClosedForm closed = ci_closed_form(cmd.scroll, d, d2);
        cmd.result["closed_form"] = {{"degree", json_int(closed.degree)},
                                     {"genus", json_int(closed.genus)}};
        if (closed.degree != inv.degree)
            cmd.warnings.push_back("closed-form degree cross-check gives " +
                                   closed.degree.str() + "; the resolution-based degree " +
                                   inv.degree.str() + " is authoritative (known discrepancy)");
        if (inv.genus && closed.genus != *inv.genus)
            cmd.warnings.push_back("closed-form genus cross-check gives " + closed.genus.str() +
                                   "; the resolution-based genus " + inv.genus->str() +
                                   " is authoritative");
    }
    if (!cmd.opts.vb.empty() || !cmd.opts.vb2.empty()) {
        Int vb = cmd.flag("--vb", cmd.opts.vb);
        Int vb2 = cmd.flag("--vb2", cmd.opts.vb2);
        cmd.result["vertex_multiplicity"] =
            json_int(vertex_multiplicity(cmd.scroll, {d, vb}, {d2, vb2}));
        cmd.result["vertex_pairing"] = json_rat(mumford_vertex_multiplicity(cmd.scroll, vb, vb2));
    }
}

void run_genus(Command& cmd) {
    Int d = cmd.flag("--d", cmd.opts.d);
    cmd.result["genus"] = json_int(genus_divisor(cmd.scroll, d));
    if (cmd.scroll.r == 2 && d > cmd.scroll.n - 1)
        cmd.result["castelnuovo"] = json_int(castelnuovo_genus_bound(cmd.scroll.n, d));
}

void run_ci(Command& cmd) {
    cmd.inputs["classes"] = cmd.opts.classes;
    cmd.inputs["space"] = cmd.opts.space;
    auto entries = parse_class_list(cmd.opts.classes);
    bool on_x = cmd.opts.space == "x";
    if (on_x && cmd.scroll.is_cone()) {
        std::vector<Int> degrees;
        for (const auto& e : entries) {
            if (e.size() != 1)
                throw std::invalid_argument(
                    "ci --classes on a cone expects single degrees d1;d2;...");
            degrees.push_back(e[0]);
        }
        cmd.result["pairing"] = json_rat(mumford_intersection(cmd.scroll, degrees));
        return;
    }
    std::vector<PicClass> pics;
    for (const auto& e : entries) {
        if (e.size() != 2)
            throw std::invalid_argument("ci --classes expects a,b pairs");
        pics.push_back({e[0], e[1]});
    }
    if (on_x && cmd.scroll.regime == Regime::HigherCodim) {
        std::vector<WeilClass> classes;
        for (const PicClass& p : pics) classes.push_back(WeilClass::pair(p.a, p.b));
        cmd.result["degree"] = json_int(ci_degree_high_codim(cmd.scroll, classes));
        return;
    }
    cmd.result["product"] = json_int(pic_intersect(cmd.scroll, pics));
}

void run_acm(Command& cmd) {
    if (!cmd.opts.classes.empty()) {
        cmd.inputs["classes"] = cmd.opts.classes;
        auto entries = parse_class_list(cmd.opts.classes);
        std::vector<std::pair<Int, Int>> classes;
        Int twist_sum = 0;
        for (const auto& e : entries) {
            if (e.size() != 2)
                throw std::invalid_argument("acm --classes expects a,b pairs");
            classes.emplace_back(e[0], e[1]);
            twist_sum += e[1];
        }
        cmd.result["acm"] = acm_koszul(cmd.scroll, classes);
        cmd.result["twist_sum"] = json_int(twist_sum);
        cmd.result["f"] = json_int(cmd.scroll.f);
        return;
    }
    Int d = cmd.flag("--d", cmd.opts.d);
    if (!cmd.opts.d2.empty()) {
        Int d2 = cmd.flag("--d2", cmd.opts.d2);
        cmd.result["acm"] = is_acm_cone(cmd.scroll, d, d2);
        return;
    }
    cmd.result["acm"] = is_acm_cone(cmd.scroll, d);
}

void run_verify(Command& cmd) {
    if (!cmd.opts.d.empty()) {
        Int d = cmd.flag("--d", cmd.opts.d);
        Int d2 = cmd.flag("--d2", cmd.opts.d2);
        auto samples = oracle::hilbert_samples(cmd.scroll, d, d2);
        json sample_json = json::array();
        for (const auto& s : samples)
            sample_json.push_back(json::array({json_int(s.k), json_int(s.chi)}));
        oracle::HilbertFit fit = oracle::hilbert_degree_genus(cmd.scroll, d, d2);
        ConeCiInvariants inv = cone_ci_invariants(cmd.scroll, d, d2);
        cmd.result["samples"] = sample_json;
        cmd.result["degree"] = json_int(fit.degree);
        cmd.result["chi0"] = json_int(fit.chi0);
        cmd.result["fast_degree"] = json_int(inv.degree);
        cmd.result["fast_chi0"] = json_int(inv.chi0);
        cmd.result["match"] = fit.degree == inv.degree && fit.chi0 == inv.chi0;
        return;
    }
    Int a = cmd.flag("--a", cmd.opts.a);
    Int b = cmd.flag("--b", cmd.opts.b);
    CohomVector reference = oracle::naive_cohomology(cmd.scroll, a, b);
    CohomVector fast = cohomology_tilde(cmd.scroll, a, b);
    cmd.result["reference"] = json_cohom(reference);
    cmd.result["fast"] = json_cohom(fast);
    cmd.result["match"] = reference == fast;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact divisor calculus on rational normal scrolls"};
    app.require_subcommand(1);

    Options opts;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--scroll", opts.scroll, "splitting type a1,a2,...,ar")->required();
        sub->add_flag("--json", opts.as_json, "emit a JSON envelope");
        return sub;
    };
    auto* c_classify = add_common(app.add_subcommand("classify", "regime and basic invariants"));
    auto* c_cohom = add_common(app.add_subcommand("cohom", "cohomology of O(a,b)"));
    c_cohom->add_option("--a", opts.a)->required();
    c_cohom->add_option("--b", opts.b)->required();
    c_cohom->add_option("--space", opts.space)->check(CLI::IsMember({"tilde", "x"}));
    auto* c_sheaf = add_common(app.add_subcommand("sheaf", "divisorial sheaf normal forms"));
    c_sheaf->add_option("--d", opts.d);
    c_sheaf->add_option("--a", opts.a);
    c_sheaf->add_option("--b", opts.b);
    c_sheaf->add_option("--classes", opts.classes, "two normal forms a1,b1;a2,b2");
    auto* c_linsys = add_common(app.add_subcommand("linsys", "dimension of |dR|"));
    c_linsys->add_option("--d", opts.d)->required();
    auto* c_transform = add_common(app.add_subcommand("transform", "total transforms of dR"));
    c_transform->add_option("--d", opts.d)->required();
    c_transform->add_option("--d2", opts.d2);
    c_transform->add_option("--vb", opts.vb, "vertex multiplicity");
    auto* c_intersect =
        add_common(app.add_subcommand("intersect", "invariants of the scheme d1R meet d2R"));
    c_intersect->add_option("--d", opts.d)->required();
    c_intersect->add_option("--d2", opts.d2)->required();
    c_intersect->add_option("--vb", opts.vb, "vertex multiplicity of the first divisor");
    c_intersect->add_option("--vb2", opts.vb2, "vertex multiplicity of the second divisor");
    auto* c_genus = add_common(app.add_subcommand("genus", "arithmetic genus of dR"));
    c_genus->add_option("--d", opts.d)->required();
    auto* c_ci = add_common(app.add_subcommand("ci", "intersection products"));
    c_ci->add_option("--classes", opts.classes, "a1,b1;a2,b2;... or d1;d2;... on a cone")
        ->required();
    c_ci->add_option("--space", opts.space)->check(CLI::IsMember({"tilde", "x"}));
    auto* c_acm = add_common(app.add_subcommand("acm", "arithmetic Cohen-Macaulayness"));
    c_acm->add_option("--d", opts.d);
    c_acm->add_option("--d2", opts.d2);
    c_acm->add_option("--classes", opts.classes, "classes a1,b1;... meaning a*H - b*R");
    auto* c_verify = add_common(app.add_subcommand("verify", "independent reference checks"));
    c_verify->add_option("--a", opts.a);
    c_verify->add_option("--b", opts.b);
    c_verify->add_option("--d", opts.d);
    c_verify->add_option("--d2", opts.d2);

    opts.space = "";
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    if (opts.space.empty()) opts.space = app.got_subcommand(c_ci) ? "x" : "tilde";

    std::string command;
    void (*handler)(Command&) = nullptr;
    if (app.got_subcommand(c_classify)) command = "classify", handler = run_classify;
    if (app.got_subcommand(c_cohom)) command = "cohom", handler = run_cohom;
    if (app.got_subcommand(c_sheaf)) command = "sheaf", handler = run_sheaf;
    if (app.got_subcommand(c_linsys)) command = "linsys", handler = run_linsys;
    if (app.got_subcommand(c_transform)) command = "transform", handler = run_transform;
    if (app.got_subcommand(c_intersect)) command = "intersect", handler = run_intersect;
    if (app.got_subcommand(c_genus)) command = "genus", handler = run_genus;
    if (app.got_subcommand(c_ci)) command = "ci", handler = run_ci;
    if (app.got_subcommand(c_acm)) command = "acm", handler = run_acm;
    if (app.got_subcommand(c_verify)) command = "verify", handler = run_verify;

    try {
        Command cmd(opts);
        handler(cmd);
        emit(cmd.envelope(command), opts.as_json);
        return 0;
    } catch (const DomainError& e) {
        if (opts.as_json) {
            json env;
            env["command"] = command;
            env["scroll"] = opts.scroll;
            env["error"] = {{"code", e.code()}, {"message", e.message()}};
            std::cout << env.dump(2) << "\n";
        }
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    }
}
