/*
   Copyright 2026 The sextactic authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sextactic/branch.hpp"
#include "sextactic/census.hpp"
#include "sextactic/differential.hpp"
#include "sextactic/fixtures.hpp"
#include "sextactic/parser.hpp"
#include "sextactic/rational.hpp"

// Subcommand front end. Exit codes: 0 success, 1 domain error, 2 usage.

namespace sextactic::cli {

enum class Format { text, machine };

/// Thrown for problems with the invocation itself (missing files etc).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Key/value report. Text output aligns the keys; machine output is
/// `key = value`, one per line.
class Report {
   public:
    explicit Report(Format f) : format_(f) {}

    void kv(const std::string& key, const std::string& value) { rows_.push_back({key, value, false}); }
    void kv(const std::string& key, long value) { kv(key, std::to_string(value)); }
    /// Free text line, text format only.
    void line(const std::string& text) { rows_.push_back({"", text, true}); }
    /// Key/value row, machine format only (the text form carries it in a table).
    void machine_kv(const std::string& key, const std::string& value) { rows_.push_back({key, value, false, true}); }
    void machine_kv(const std::string& key, long value) { machine_kv(key, std::to_string(value)); }

    void write(std::ostream& out) const {
        std::size_t width = 0;
        for (const auto& r : rows_)
            if (!r.text_only && !r.machine_only) width = std::max(width, r.key.size());
        for (const auto& r : rows_) {
            if (r.machine_only && format_ == Format::text) continue;
            if (r.text_only) {
                if (format_ == Format::text) out << r.value << "\n";
                continue;
            }
            if (format_ == Format::machine)
                out << r.key << " = " << r.value << "\n";
            else
                out << std::left << std::setw(static_cast<int>(width)) << r.key << " = " << r.value << "\n";
        }
    }

   private:
    struct Row {
        std::string key, value;
        bool text_only;
        bool machine_only = false;
    };
    Format format_;
    std::vector<Row> rows_;
};

/// A parse error together with the text its span refers to.
class InputError : public ParseError {
   public:
    InputError(const ParseError& e, std::string input)
        : ParseError(e.kind(), e.what(), *e.span()), input_(std::move(input)) {}
    const std::string& input() const noexcept { return input_; }

   private:
    std::string input_;
};

template <class Fn>
auto parsing(const std::string& text, Fn fn) {
    try {
        return fn(text);
    } catch (const InputError&) {
        throw;
    } catch (const ParseError& e) {
        throw InputError(e, text);
    }
}

inline MPoly read_poly(const std::string& text) {
    return parsing(text, [](const std::string& s) { return parse_poly(s); });
}
inline PointP2 read_point(const std::string& text) {
    return parsing(text, [](const std::string& s) { return parse_point(s); });
}
inline RationalParam read_param(const std::string& text) {
    return parsing(text, [](const std::string& s) { return parse_param(s); });
}
inline std::vector<PointP1> read_p1_list(const std::string& text) {
    return parsing(text, [](const std::string& s) { return parse_p1_list(s); });
}
inline PointP1 read_p1(const std::string& text) {
    return parsing(text, [](const std::string& s) { return parse_p1(s); });
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        // bundled fixtures are available by bare file name
        if (auto text = fixture_file(path)) return std::string(*text);
        throw UsageError("cannot read file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline BranchParam read_branch(const std::string& path) {
    return parsing(read_file(path), [](const std::string& s) { return parse_branch(s); });
}
inline CurveProfile read_profile(const std::string& path) {
    return parsing(read_file(path), [](const std::string& s) { return parse_profile(s); });
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

inline std::string factor_text(const BinaryForm& f) {
    return f.size() > 1 ? "(" + f.to_string() + ")" : f.to_string();
}

/// "H(0:0:1)" for coordinate labels, "H[p4]" otherwise.
inline std::string labelled(const std::string& prefix, const std::string& label) {
    return !label.empty() && label[0] == '(' ? prefix + label : prefix + "[" + label + "]";
}

inline void factor_table(Report& rep, const std::string& prefix, const std::vector<ZeroClass>& classes) {
    rep.line("factor | degree | multiplicity");
    std::vector<std::string> machine;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& z = classes[i];
        rep.line(z.factor.to_string() + " | " + std::to_string(z.degree) + " | " + std::to_string(z.multiplicity));
        machine.push_back(factor_text(z.factor) + "^" + std::to_string(z.multiplicity));
    }
    rep.kv(prefix + "factors", join(machine, " "));
}

struct Options {
    Format format = Format::text;
    bool normalize = false;
};

inline Hessian2Variant parse_variant(const std::string& v) {
    if (v == "corrected") return Hessian2Variant::corrected;
    if (v == "cayley1865") return Hessian2Variant::cayley1865;
    throw UsageError("unknown variant '" + v + "' (corrected | cayley1865)");
}

inline std::vector<long> parse_long_list(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            long v = std::stol(item, &used);
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("not an integer list: '" + text + "'");
        }
    }
    if (out.empty()) throw UsageError("empty integer list");
    return out;
}

inline void cmd_hessian(const Options& o, const std::string& implicit, std::ostream& out) {
    MPoly F = read_poly(implicit);
    MPoly H = hessian(F).H;
    if (o.normalize && !H.is_zero()) H = primitive_part(H);
    Report rep(o.format);
    rep.kv("H", H.to_string());
    rep.kv("degree", H.is_zero() ? std::string("-") : std::to_string(*H.degree()));
    rep.write(out);
}

inline void cmd_hessian2(const Options& o, const std::string& implicit, const std::string& variant, std::ostream& out) {
    MPoly F = read_poly(implicit);
    Hessian2Variant v = parse_variant(variant);
    MPoly H2 = hessian2(F, v, o.normalize);
    Report rep(o.format);
    rep.kv("variant", to_string(v));
    rep.kv("H2", H2.to_string());
    rep.kv("degree", static_cast<long>(*H2.degree()));
    rep.kv("content", content(H2).get_str());
    rep.write(out);
}

inline void cmd_osculate(const Options& o, const std::string& implicit, const std::string& point, std::ostream& out) {
    MPoly F = read_poly(implicit);
    PointP2 p = read_point(point);
    Report rep(o.format);
    rep.kv("point", p.normalized().to_string());
    rep.kv("O_p", osculating_conic(F, p).to_string());
    rep.write(out);
}

inline void cmd_wronski(const Options& o, const std::string& param, bool omega, const std::string& at,
                        std::ostream& out) {
    RationalParam p = read_param(param);
    Report rep(o.format);
    rep.kv("param", p.to_string());
    rep.kv("d", static_cast<long>(p.d));
    if (omega) {
        if (!at.empty()) {
            PointP1 pt = read_p1(at);
            rep.kv("at", pt.normalized().to_string());
            rep.kv("omega", omega_conic_at(p, pt).to_string());
        } else {
            OmegaConic om = omega_conic(p);
            const char* names[6] = {"x^2", "y^2", "z^2", "y*z", "x*z", "x*y"};
            for (std::size_t j = 0; j < 6; ++j) rep.kv(std::string("omega[") + names[j] + "]", om.coeffs[j].to_string());
        }
        rep.write(out);
        return;
    }
    WeierstrassScan scan = xi_wronskian(p);
    rep.kv("xi", scan.xi.to_string());
    rep.kv("degree", static_cast<long>(*scan.xi.degree()));
    rep.kv("content", scan.content.get_str());
    factor_table(rep, "", scan.zero_classes);
    WeightTable tab = weights_from_xi(scan, p);
    rep.line("parameter | point | weight | points in class");
    std::vector<std::string> ws;
    for (const auto& e : tab.entries) {
        std::string where = e.zero.root ? e.zero.root->to_string() : "roots of " + e.zero.factor.to_string();
        std::string pt = e.point ? e.point->to_string() : "conjugate class";
        rep.line(where + " | " + pt + " | " + std::to_string(e.weight) + " | " + std::to_string(e.points));
        for (unsigned k = 0; k < e.points; ++k) ws.push_back(std::to_string(e.weight));
    }
    rep.kv("weights", join(ws, ","));
    rep.kv("total", static_cast<long>(tab.total));
    rep.write(out);
}

inline void cmd_orders(const Options& o, const std::string& param, const std::string& poly_spec,
                       const std::string& implicit, const std::string& variant, const std::string& at,
                       std::ostream& out) {
    RationalParam p = read_param(param);
    MPoly G(xyz_vars());
    if (poly_spec == "@hessian" || poly_spec == "@hessian2") {
        if (implicit.empty()) throw UsageError(poly_spec + " needs --implicit");
        MPoly F = read_poly(implicit);
        if (!pullback(F, p).is_zero())
            throw Error(errors::invalid_argument, "the parametrization does not lie on the implicit curve");
        G = poly_spec == "@hessian" ? hessian(F).H : hessian2(F, parse_variant(variant));
    } else {
        G = read_poly(poly_spec);
    }
    std::vector<PointP1> params = at.empty() ? std::vector<PointP1>{} : read_p1_list(at);
    OrderReport r = intersection_orders(G, p, params);
    Report rep(o.format);
    rep.kv("param", p.to_string());
    for (const auto& [pt, k] : r.orders) rep.kv("order" + pt.to_string(), static_cast<long>(k));
    rep.kv("degree", static_cast<long>(r.degree));
    rep.kv("residual", static_cast<long>(r.residual));
    factor_table(rep, "pullback_", zero_classes(pullback(G, p)));
    rep.write(out);
}

inline std::string ladder_text(const std::array<int, 6>& h) {
    std::vector<std::string> v;
    for (int x : h) v.push_back(std::to_string(x));
    return join(v, ",");
}

inline void cmd_weight(const Options& o, const std::string& file, std::ostream& out) {
    WeightReport w = weight2(read_branch(file));
    Report rep(o.format);
    rep.kv("w2", w.w2);
    rep.kv("m", w.m);
    rep.kv("l", w.l);
    rep.kv("c", w.c ? std::to_string(*w.c) : std::string("-"));
    rep.kv("kind", to_string(w.kind));
    if (w.kind == PointKind::sextactic) rep.kv("sextactic_order", w.sextactic_order);
    rep.kv("ladder", ladder_text(w.ladder.h));
    rep.write(out);
}

inline void cmd_ladder(const Options& o, const std::string& file, std::ostream& out) {
    ValuationLadder lad = valuation_ladder(read_branch(file));
    Report rep(o.format);
    rep.kv("h", ladder_text(lad.h));
    for (std::size_t i = 0; i < 6; ++i) rep.kv("witness[" + std::to_string(lad.h[i]) + "]", lad.witnesses[i].to_string());
    rep.write(out);
}

inline void cmd_osc_branch(const Options& o, const std::string& file, std::ostream& out) {
    BranchParam b = read_branch(file);
    WeightReport w = weight2(b);
    Report rep(o.format);
    rep.kv("conic", hyperosculating_conic_at_branch(b).to_string());
    rep.kv("order", w.c ? *w.c : w.ladder.h[5]);
    rep.write(out);
}

inline void cmd_multiplicity_bounds(const Options& o, const std::string& ms_text, long d, std::optional<long> l,
                        std::optional<long> c, std::ostream& out, int& exit_code) {
    std::vector<long> ms_long = parse_long_list(ms_text);
    std::vector<int> ms(ms_long.begin(), ms_long.end());
    auto opt_int = [](std::optional<long> v) -> std::optional<int> {
        return v ? std::optional<int>(static_cast<int>(*v)) : std::nullopt;
    };
    Lemma37Report r = validate_lemma37(ms, static_cast<int>(d), opt_int(l), opt_int(c));
    auto list = [](const std::vector<int>& v) {
        std::vector<std::string> s;
        for (int x : v) s.push_back(std::to_string(x));
        return s.empty() ? std::string("-") : join(s, ",");
    };
    Report rep(o.format);
    rep.kv("consistent", r.consistent ? "yes" : "no");
    rep.kv("feasible_l", list(r.feasible_l));
    rep.kv("feasible_c", list(r.feasible_c));
    if (r.k_for_l) rep.kv("k_l", *r.k_for_l);
    if (r.k_for_c) rep.kv("k_c", *r.k_for_c);
    for (const auto& n : r.notes) rep.line("note: " + n);
    rep.write(out);
    if (!r.consistent) exit_code = 1;
}

inline void cmd_count(const Options& o, const std::string& file, bool per_branch, std::ostream& out) {
    CurveProfile prof = read_profile(file);
    CensusReport c = sextactic_count(prof, per_branch);
    Report rep(o.format);
    rep.line("point | role | m | l | c | delta | weight");
    for (const auto& r : prof.points) {
        std::string w = r.role == PointRole::smooth_sextactic_candidate ? std::to_string(*r.c - 5)
                                                                        : std::to_string(weight_of(r));
        rep.line(r.label + " | " + to_string(r.role) + " | " + std::to_string(r.m) + " | " + std::to_string(r.l) +
                 " | " + (r.c ? std::to_string(*r.c) : "-") + " | " + (r.delta ? std::to_string(*r.delta) : "-") +
                 " | " + w);
        rep.machine_kv(labelled("weight", r.label), w);
    }
    rep.kv("d", prof.d);
    rep.kv("g", prof.g);
    rep.kv("brill_segre", c.brill_segre);
    rep.kv("sum_I", c.sum_i);
    rep.kv("sum_J", c.sum_j);
    rep.kv("s", c.s);
    if (c.v) rep.kv("v", *c.v);
    if (c.genus0_count) rep.kv("genus0_count", c.genus0_agrees ? "agrees" : "DISAGREES");
    rep.kv("listed_sextactic", c.listed_sextactic);
    if (prof.total_delta()) {
        Corollary36Report k = corollary36_check(prof, c.s);
        rep.kv("identity1", std::to_string(k.lhs1) + " = " + std::to_string(k.rhs1) + " (residual " +
                                std::to_string(k.residual1()) + ")");
        rep.kv("identity2", std::to_string(k.lhs2) + " = " + std::to_string(k.rhs2) + " (residual " +
                                std::to_string(k.residual2()) + ")");
    }
    rep.write(out);
}

inline void cmd_predict39(const Options& o, const std::string& file, std::ostream& out) {
    CurveProfile prof = read_profile(file);
    Report rep(o.format);
    rep.line("point | (H.C)_p | (H2.C)_p");
    for (const auto& r : prof.points) {
        if (r.role != PointRole::cusp) continue;
        long h = hessian_order_predict(r), h2 = conjecture39_predict(r);
        rep.line(r.label + " | " + std::to_string(h) + " | " + std::to_string(h2));
        rep.machine_kv(labelled("H", r.label), h);
        rep.machine_kv(labelled("H2", r.label), h2);
    }
    rep.write(out);
}

inline void cmd_examples(const Options& o, const std::string& name, std::ostream& out) {
    if (name.empty()) {
        Report rep(o.format);
        for (const auto& f : bundled_examples()) rep.kv(std::string(f.name), std::string(f.summary));
        for (const auto& f : fixture_files()) rep.kv("file", std::string(f.name));
        rep.write(out);
        return;
    }
    if (auto text = fixture_file(name)) {
        out << *text;
        return;
    }
    const CurveFixture* f = find_example(name);
    if (!f) throw UsageError("no bundled example named '" + name + "'");
    Report rep(o.format);
    rep.kv("name", std::string(f->name));
    if (!f->implicit.empty()) {
        MPoly F = read_poly(std::string(f->implicit));
        rep.kv("F", F.to_string());
        auto hb = hessian(F);
        rep.kv("H", hb.H.to_string());
        if (!hb.H.is_zero()) rep.kv("H2", hessian2(F, Hessian2Variant::corrected, true).to_string());
        if (!f->point.empty()) rep.kv("O" + std::string(f->point), osculating_conic(F, read_point(std::string(f->point))).to_string());
        if (!f->param.empty()) {
            RationalParam p = read_param(std::string(f->param));
            rep.kv("param", p.to_string());
            OrderReport h = intersection_orders(hb.H, p, {});
            for (const auto& pt_text : f->params_of_interest) {
                PointP1 pt = read_p1(std::string(pt_text));
                rep.kv("point" + pt.to_string(), curve_point(p, pt).to_string());
                rep.kv("(H.C)" + pt.to_string(), static_cast<long>(linear_factor_order(pullback(hb.H, p), pt.s, pt.t)));
                rep.kv("(H2.C)" + pt.to_string(),
                       static_cast<long>(linear_factor_order(pullback(hessian2(F), p), pt.s, pt.t)));
            }
            (void)h;
            if (p.d >= 3) {
                WeierstrassScan scan = xi_wronskian(p);
                rep.kv("xi", scan.xi.to_string());
                std::vector<std::string> ws;
                for (const auto& e : weights_from_xi(scan, p).entries)
                    for (unsigned k = 0; k < e.points; ++k) ws.push_back(std::to_string(e.weight));
                rep.kv("weights", join(ws, ","));
            }
        }
    }
    if (!f->profile.empty()) {
        CurveProfile prof = parse_profile(*fixture_file(f->profile));
        CensusReport c = sextactic_count(prof);
        rep.kv("s", c.s);
        if (c.v) rep.kv("v", *c.v);
    }
    rep.write(out);
}

inline void print_error(std::ostream& err, const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    const auto* ie = dynamic_cast<const InputError*>(&e);
    const std::string input = ie ? ie->input() : std::string();
    if (auto sp = e.span()) {
        err << "  at bytes " << sp->begin << ".." << sp->end << "\n";
        if (!input.empty() && sp->end <= input.size() && input.find('\n') == std::string::npos) {
            err << "  " << input << "\n  " << std::string(sp->begin, ' ')
                << std::string(std::max<std::size_t>(1, sp->end - sp->begin), '^') << "\n";
        }
    }
}

/// Runs one invocation; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Hessians, 2-Hessians, osculating conics and sextactic-point counts of plane curves",
                 "sextactic"};
    app.require_subcommand(1);
    std::string format = "text";
    Options opt;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));
    app.add_flag("--normalize", opt.normalize, "Print primitive integer representatives");
    app.fallthrough();

    std::string implicit, variant = "corrected", point, param, at, poly_spec, file, ms, name;
    bool omega = false, per_branch = false;
    long d = 0;
    std::optional<long> l, c;

    auto* hes = app.add_subcommand("hessian", "Hessian determinant of F");
    hes->add_option("--implicit", implicit, "Curve polynomial in x, y, z")->required();
    auto* hes2 = app.add_subcommand("hessian2", "2-Hessian of F (degree 12d - 27)");
    hes2->add_option("--implicit", implicit, "Curve polynomial in x, y, z")->required();
    hes2->add_option("--variant", variant, "corrected | cayley1865")->check(CLI::IsMember({"corrected", "cayley1865"}));
    auto* osc = app.add_subcommand("osculate", "Osculating conic at a smooth rational point");
    osc->add_option("--implicit", implicit, "Curve polynomial in x, y, z")->required();
    osc->add_option("--point", point, "Point (a:b:c)")->required();
    auto* wr = app.add_subcommand("wronski", "Wronskian xi of a rational parametrization and its zero classes");
    wr->add_option("--param", param, "Triple (e0 : e1 : e2) of forms in s, t")->required();
    wr->add_flag("--omega", omega, "Print the osculating-conic determinant instead");
    wr->add_option("--at", at, "Parameter (s0:t0) for --omega");
    auto* ord = app.add_subcommand("orders", "Intersection orders of G with a parametrized curve");
    ord->add_option("--param", param, "Triple (e0 : e1 : e2)")->required();
    ord->add_option("--poly", poly_spec, "Polynomial G, or @hessian / @hessian2 of --implicit")->required();
    ord->add_option("--implicit", implicit, "Curve polynomial for @hessian / @hessian2");
    ord->add_option("--variant", variant, "corrected | cayley1865 for @hessian2")
        ->check(CLI::IsMember({"corrected", "cayley1865"}));
    ord->add_option("--at", at, "Parameters (s0:t0)[,(s1:t1)...]");
    auto* wt = app.add_subcommand("weight", "2-Weierstrass weight of a branch");
    wt->add_option("--branch", file, "Branch file")->required();
    auto* lad = app.add_subcommand("ladder", "Attainable conic intersection orders of a branch");
    lad->add_option("--branch", file, "Branch file")->required();
    auto* ob = app.add_subcommand("osc-branch", "Hyperosculating conic of a branch");
    ob->add_option("--branch", file, "Branch file")->required();
    auto* bounds = app.add_subcommand("check-lemma37", "Check (l, c) against a multiplicity sequence");
    bounds->add_option("--ms", ms, "Multiplicity sequence, e.g. 3,2")->required();
    bounds->add_option("--d", d, "Curve degree")->required();
    bounds->add_option("--l", l, "Tangent intersection l");
    bounds->add_option("--c", c, "Osculating conic intersection c");
    auto* cnt = app.add_subcommand("count", "Sextactic and inflection counts of a profile");
    cnt->add_option("--profile", file, "Profile file")->required();
    cnt->add_flag("--per-branch", per_branch, "Allow several branches per point label");
    auto* p39 = app.add_subcommand("predict39", "Predicted local intersection numbers of H and H2 at cusps");
    p39->add_option("--profile", file, "Profile file")->required();
    auto* ex = app.add_subcommand("examples", "List or run the bundled examples");
    ex->add_option("name", name, "Example or fixture file name");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    opt.format = format == "machine" ? Format::machine : Format::text;

    int code = 0;
    try {
        if (hes->parsed()) {
            cmd_hessian(opt, implicit, out);
        } else if (hes2->parsed()) {
            cmd_hessian2(opt, implicit, variant, out);
        } else if (osc->parsed()) {
            cmd_osculate(opt, implicit, point, out);
        } else if (wr->parsed()) {
            cmd_wronski(opt, param, omega, at, out);
        } else if (ord->parsed()) {
            cmd_orders(opt, param, poly_spec, implicit, variant, at, out);
        } else if (wt->parsed()) {
            cmd_weight(opt, file, out);
        } else if (lad->parsed()) {
            cmd_ladder(opt, file, out);
        } else if (ob->parsed()) {
            cmd_osc_branch(opt, file, out);
        } else if (bounds->parsed()) {
            cmd_multiplicity_bounds(opt, ms, d, l, c, out, code);
        } else if (cnt->parsed()) {
            cmd_count(opt, file, per_branch, out);
        } else if (p39->parsed()) {
            cmd_predict39(opt, file, out);
        } else if (ex->parsed()) {
            cmd_examples(opt, name, out);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        print_error(err, e);
        return 1;
    }
    return code;
}

}  // namespace sextactic::cli
