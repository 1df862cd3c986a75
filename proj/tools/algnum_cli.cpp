#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "algnum/complexexp.hpp"
#include "algnum/digitarith.hpp"
#include "algnum/errors.hpp"
#include "algnum/finiteness.hpp"
#include "algnum/gauss.hpp"
#include "algnum/language.hpp"
#include "algnum/numsys.hpp"
#include "algnum/padic.hpp"
#include "algnum/tiles.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;
using namespace algnum;

namespace {

// ---- exact parsing of integers, rationals and Gaussian rationals ----------

Int parse_int(const std::string& s) {
    std::string t = (!s.empty() && s.front() == '+') ? s.substr(1) : s;
    if (t.empty()) throw DomainError("empty integer token");
    try {
        return Int(t);
    } catch (const std::invalid_argument&) {
        throw DomainError("malformed integer: " + s);
    }
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Rat q = make_rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
    return q;
}

// complex integer part: "a+bi", "a-bi", "bi", "i", "-i", "a"
GaussInt parse_complex_int(const std::string& s) {
    Int re(0), im(0);
    size_t pos = 0;
    bool any = false;
    while (pos < s.size()) {
        size_t start = pos;
        if (s[pos] == '+' || s[pos] == '-') ++pos;
        size_t digits_begin = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        bool imaginary = pos < s.size() && s[pos] == 'i';
        std::string tok = s.substr(start, pos - start);
        if (imaginary) {
            ++pos;
            if (pos - 1 == digits_begin) tok += "1";  // bare i or signed i
        }
        if (tok.empty()) throw DomainError("malformed Gaussian integer: " + s);
        if (imaginary) {
            im += parse_int(tok);
        } else {
            re += parse_int(tok);
        }
        any = true;
    }
    if (!any) throw DomainError("malformed Gaussian integer: " + s);
    return {re, im};
}

// "(a+bi)/c", "a+bi", "a/c", "a", "bi", ...
GaussRat parse_gauss_rat(const std::string& raw) {
    std::string s;
    for (char c : raw) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) throw DomainError("empty value");
    Int den(1);
    std::string head = s;
    if (s.front() == '(') {
        auto close = s.find(')');
        if (close == std::string::npos) throw DomainError("unbalanced parenthesis in " + raw);
        head = s.substr(1, close - 1);
        std::string rest = s.substr(close + 1);
        if (!rest.empty()) {
            if (rest.front() != '/') throw DomainError("malformed value: " + raw);
            den = parse_int(rest.substr(1));
        }
    } else if (s.find('i') == std::string::npos) {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            head = s.substr(0, slash);
            den = parse_int(s.substr(slash + 1));
        }
    }
    if (den == 0) throw DomainError("zero denominator in " + raw);
    GaussInt z = parse_complex_int(head);
    return {make_rat(z.re, den), make_rat(z.im, den)};
}

// ---- JSON encoding ---------------------------------------------------------

json json_gauss_rat(const GaussRat& x) {
    return json{{"re_num", x.re.get_num().get_str()},
                {"re_den", x.re.get_den().get_str()},
                {"im_num", x.im.get_num().get_str()},
                {"im_den", x.im.get_den().get_str()},
                {"value", x.str()}};
}

json json_expansion(const Expansion& e, const NumberSystem& ns) {
    json digits = json::array();
    for (int d : e.digits) digits.push_back(d);
    return json{{"digits", digits},
                {"msb_exponent", e.empty() ? 0 : e.msb_exponent},
                {"kind", e.kind == WordKind::Integer ? "integer" : "fractional"},
                {"word", e.str(ns.digit_max() >= 10)}};
}

json json_config(const NumberSystem& ns) {
    json poly = json::array();
    poly.push_back(ns.a2().get_str());
    if (ns.degree() == 2) poly.push_back(ns.a1().get_str());
    poly.push_back(ns.a0().get_str());
    json basis = json::array();
    basis.push_back(ns.basis1().str());
    if (ns.degree() == 2) basis.push_back(ns.basis2().str());
    return json{{"alpha", ns.str()},
                {"degree", ns.degree()},
                {"polynomial", poly},
                {"digit_set", "0.." + std::to_string(ns.digit_max())},
                {"basis", basis},
                {"num", ns.num().str()},
                {"den", ns.den().str()}};
}

json json_valuation(const Valuation& v) {
    if (v.infinite) return json("inf");
    return json(v.v);
}

// ---- shared option plumbing ------------------------------------------------

struct AlphaOpts {
    std::string alpha;
    std::string alpha_re, alpha_im;

    void attach(CLI::App* cmd) {
        cmd->add_option("--alpha", alpha, "base as \"(a+bi)/c\", \"a+bi\" or \"a/b\"");
        cmd->add_option("--alpha-re", alpha_re, "real part of the base as \"p/q\"");
        cmd->add_option("--alpha-im", alpha_im, "imaginary part of the base as \"p/q\"");
    }
    NumberSystem resolve() const {
        if (!alpha.empty()) return NumberSystem::make(parse_gauss_rat(alpha));
        if (alpha_re.empty() && alpha_im.empty()) {
            throw DomainError("no base given: use --alpha or --alpha-re/--alpha-im");
        }
        Rat re = alpha_re.empty() ? Rat(0) : parse_rat(alpha_re);
        Rat im = alpha_im.empty() ? Rat(0) : parse_rat(alpha_im);
        return NumberSystem::make(GaussRat(re, im));
    }
};

void emit(const json& out, const std::string& path) {
    std::string text = out.dump(2) + "\n";
    if (path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(path, std::ios::binary);
        f << text;
    }
}

ComplexInput resolve_input(const std::string& x, const std::string& x_re,
                           const std::string& x_im, long n, long precision_bits) {
    if (x == "sqrt2") {
        long bits = precision_bits > 0 ? precision_bits : 64 + 4 * n;
        return ComplexInput::sqrt2(bits);
    }
    if (!x.empty()) {
        GaussRat v = parse_gauss_rat(x);
        return ComplexInput::exact(v.re, v.im);
    }
    Rat re = x_re.empty() ? Rat(0) : parse_rat(x_re);
    Rat im = x_im.empty() ? Rat(0) : parse_rat(x_im);
    if (precision_bits > 0) return ComplexInput::approx(re, im, precision_bits);
    return ComplexInput::exact(re, im);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact digit expansions of complex numbers in algebraic bases"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("-o,--output", out_path, "write the result to a file instead of stdout");

    // expand
    auto* cmd_expand = app.add_subcommand("expand", "integer expansion of a lattice point");
    AlphaOpts a_expand;
    a_expand.attach(cmd_expand);
    std::string expand_n;
    long expand_max_steps = 1000000;
    cmd_expand->add_option("--n", expand_n, "lattice point as a Gaussian rational")->required();
    cmd_expand->add_option("--max-steps", expand_max_steps, "iteration budget");

    // finiteness
    auto* cmd_fin = app.add_subcommand("finiteness", "decide the finiteness property");
    AlphaOpts a_fin;
    a_fin.attach(cmd_fin);

    // tree
    auto* cmd_tree = app.add_subcommand("tree", "expansion tree levels");
    AlphaOpts a_tree;
    a_tree.attach(cmd_tree);
    int tree_depth = 3;
    std::string tree_format = "json";
    cmd_tree->add_option("--depth", tree_depth, "levels to enumerate");
    cmd_tree->add_option("--format", tree_format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));

    // add / mul
    auto* cmd_add = app.add_subcommand("add", "digitwise sum of two expansions");
    auto* cmd_mul = app.add_subcommand("mul", "digitwise product of two expansions");
    AlphaOpts a_add, a_mul;
    std::string add_x, add_y, mul_x, mul_y;
    long add_budget = 10000, mul_budget = 10000;
    a_add.attach(cmd_add);
    cmd_add->add_option("--x", add_x, "left digit word")->required();
    cmd_add->add_option("--y", add_y, "right digit word")->required();
    cmd_add->add_option("--max-rewrites", add_budget, "carry rewrite budget");
    a_mul.attach(cmd_mul);
    cmd_mul->add_option("--x", mul_x, "left digit word")->required();
    cmd_mul->add_option("--y", mul_y, "right digit word")->required();
    cmd_mul->add_option("--max-rewrites", mul_budget, "carry rewrite budget");

    // approx
    auto* cmd_approx = app.add_subcommand("approx", "approximate the expansion of a complex x");
    AlphaOpts a_approx;
    a_approx.attach(cmd_approx);
    std::string approx_x, approx_re, approx_im;
    long approx_n = 10, approx_bits = 0;
    cmd_approx->add_option("--x", approx_x, "symbolic input (sqrt2) or exact Gaussian rational");
    cmd_approx->add_option("--x-re", approx_re, "real part as \"p/q\"");
    cmd_approx->add_option("--x-im", approx_im, "imaginary part as \"p/q\"");
    cmd_approx->add_option("--n", approx_n, "approximation depth");
    cmd_approx->add_option("--precision-bits", approx_bits, "declared input precision");

    // check
    auto* cmd_check = app.add_subcommand("check", "convergence report of a digit word");
    AlphaOpts a_check;
    a_check.attach(cmd_check);
    std::string check_word;
    long check_depth = -1;
    cmd_check->add_option("--word", check_word, "digit word, radix point allowed")->required();
    cmd_check->add_option("--depth", check_depth, "positions to check (default: whole word)");

    // ambi
    auto* cmd_ambi = app.add_subcommand("ambi", "expansion of a pair (x, y)");
    AlphaOpts a_ambi;
    a_ambi.attach(cmd_ambi);
    std::string ambi_x, ambi_re, ambi_im, ambi_y;
    long ambi_frac = 24, ambi_bits = 0;
    cmd_ambi->add_option("--x", ambi_x, "symbolic input (sqrt2) or exact Gaussian rational");
    cmd_ambi->add_option("--x-re", ambi_re, "real part as \"p/q\"");
    cmd_ambi->add_option("--x-im", ambi_im, "imaginary part as \"p/q\"");
    cmd_ambi->add_option("--y", ambi_y, "lattice part as a Gaussian rational")->required();
    cmd_ambi->add_option("--frac-digits", ambi_frac, "fractional digits to produce");
    cmd_ambi->add_option("--precision-bits", ambi_bits, "declared input precision");

    // tile
    auto* cmd_tile = app.add_subcommand("tile", "render tiles as point clouds");
    AlphaOpts a_tile;
    a_tile.attach(cmd_tile);
    std::string tile_window = "-4,4,-4.5,4.5", tile_pixels = "800x900";
    std::string tile_format = "ppm", tile_out = "tiles.ppm";
    int tile_depth = 8, tile_maxlen = 3;
    long tile_probe = 0;
    cmd_tile->add_option("--window", tile_window, "x0,x1,y0,y1");
    cmd_tile->add_option("--pixels", tile_pixels, "WxH");
    cmd_tile->add_option("--depth", tile_depth, "fractional tail depth");
    cmd_tile->add_option("--max-word-length", tile_maxlen, "integer parts up to this length");
    cmd_tile->add_option("--format", tile_format, "ppm or svg")
        ->check(CLI::IsMember({"ppm", "svg"}));
    cmd_tile->add_option("--image", tile_out, "image output path");
    cmd_tile->add_option("--probe", tile_probe, "run the coverage probe with this many samples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (cmd_expand->parsed()) {
            NumberSystem ns = a_expand.resolve();
            GaussRat v = parse_gauss_rat(expand_n);
            auto p = ns.to_lattice(v);
            if (!p) throw DomainError(v.str() + " is not a point of the lattice");
            json out{{"config", json_config(ns)}, {"n", json_gauss_rat(v)}};
            auto r = integer_expansion(ns, *p, expand_max_steps);
            if (auto* e = std::get_if<Expansion>(&r)) {
                out["finite"] = true;
                out["digits"] = e->str(ns.digit_max() >= 10);
                out["expansion"] = json_expansion(*e, ns);
            } else {
                const auto& cyc = std::get<CycleReport>(r);
                out["finite"] = false;
                json cycle = json::array();
                for (size_t i = 0; i < cyc.cycle.size(); ++i) {
                    cycle.push_back(json{{"value", ns.lattice_value(cyc.cycle[i]).str()},
                                         {"digit", cyc.digits[i]}});
                }
                out["cycle"] = cycle;
            }
            emit(out, out_path);
        } else if (cmd_fin->parsed()) {
            NumberSystem ns = a_fin.resolve();
            FinitenessDecision dec = decide_finiteness(ns);
            json witnesses = json::array(), orbits = json::array(), failures = json::array();
            for (const SrsPoint& z : dec.witnesses) {
                witnesses.push_back(json{{"z", json::array({z.first, z.second})},
                                         {"value", ns.lattice_value(iota(ns, z)).str()}});
            }
            for (const WitnessOrbit& o : dec.orbits) {
                json j{{"witness", json::array({o.witness.first, o.witness.second})},
                       {"reaches_zero", o.reaches_zero}};
                if (!o.reaches_zero) {
                    json cyc = json::array();
                    for (const SrsPoint& c : o.cycle) {
                        cyc.push_back(json::array({c.first, c.second}));
                    }
                    j["cycle"] = cyc;
                }
                orbits.push_back(j);
            }
            for (const auto& f : dec.failures) {
                json cyc = json::array();
                for (size_t i = 0; i < f.cycle.size(); ++i) {
                    cyc.push_back(json{{"value", ns.lattice_value(f.cycle[i]).str()},
                                       {"digit", f.cycle_digits[i]}});
                }
                failures.push_back(json{
                    {"witness", json::array({f.witness.first, f.witness.second})},
                    {"cycle", cyc}});
            }
            emit(json{{"config", json_config(ns)},
                      {"finite", dec.finite},
                      {"witnesses", witnesses},
                      {"orbits", orbits},
                      {"failures", failures}},
                 out_path);
        } else if (cmd_tree->parsed()) {
            NumberSystem ns = a_tree.resolve();
            if (tree_format == "dot") {
                std::string dot = tree_dot(ns, tree_depth);
                if (out_path.empty()) {
                    std::cout << dot;
                } else {
                    std::ofstream(out_path, std::ios::binary) << dot;
                }
            } else {
                json levels = json::array();
                for (int k = 0; k <= tree_depth; ++k) {
                    json level = json::array();
                    for (const auto& e : enumerate_level(ns, k)) {
                        std::string w;
                        for (size_t i = 0; i < e.word.size(); ++i) {
                            if (ns.digit_max() >= 10 && i > 0) w += ',';
                            w += std::to_string(e.word[i]);
                        }
                        level.push_back(json{
                            {"word", w},
                            {"value", ns.lattice_value(e.node).str()},
                            {"residue", branch_digits(ns, e.node).residue}});
                    }
                    levels.push_back(json{{"k", k},
                                          {"count", level.size()},
                                          {"words", level}});
                }
                emit(json{{"config", json_config(ns)}, {"levels", levels}}, out_path);
            }
        } else if (cmd_add->parsed() || cmd_mul->parsed()) {
            bool is_add = cmd_add->parsed();
            NumberSystem ns = (is_add ? a_add : a_mul).resolve();
            bool wide = ns.digit_max() >= 10;
            Expansion x = Expansion::parse(is_add ? add_x : mul_x, wide);
            Expansion y = Expansion::parse(is_add ? add_y : mul_y, wide);
            DigitArith arith(ns);
            Expansion r = is_add ? arith.add(x, y, add_budget) : arith.multiply(x, y, mul_budget);
            emit(json{{"config", json_config(ns)},
                      {"x", json_expansion(x, ns)},
                      {"y", json_expansion(y, ns)},
                      {"carry_word", arith.carry_word().str(wide)},
                      {"result", json_expansion(r, ns)},
                      {"value", json_gauss_rat(evaluate(ns, r))}},
                 out_path);
        } else if (cmd_approx->parsed()) {
            NumberSystem ns = a_approx.resolve();
            ComplexInput x = resolve_input(approx_x, approx_re, approx_im, approx_n, approx_bits);
            Expansion w = approximate_expansion(ns, x, approx_n);
            NumericValue v = numeric_evaluate(ns, w);
            char re_buf[40], im_buf[40], err_buf[40];
            std::snprintf(re_buf, sizeof re_buf, "%.16g", v.re);
            std::snprintf(im_buf, sizeof im_buf, "%.16g", v.im);
            std::snprintf(err_buf, sizeof err_buf, "%.3g", v.error_bound);
            emit(json{{"config", json_config(ns)},
                      {"n", approx_n},
                      {"w_n", json_expansion(w, ns)},
                      {"evaluation",
                       json{{"re", re_buf}, {"im", im_buf}, {"error_bound", err_buf}}}},
                 out_path);
        } else if (cmd_check->parsed()) {
            NumberSystem ns = a_check.resolve();
            Expansion w = Expansion::parse(check_word, ns.digit_max() >= 10);
            ConvergenceReport rep = check_convergence(ns, w, check_depth);
            json primes = json::array();
            for (const auto& pt : rep.primes) {
                json vals = json::array();
                for (const auto& [l, v] : pt.partial_sum_valuations) {
                    vals.push_back(json{{"l", l}, {"nu", json_valuation(v)}});
                }
                primes.push_back(json{{"prime", pt.prime.str()},
                                      {"multiplicity", pt.multiplicity},
                                      {"valuations", vals}});
            }
            json out{{"config", json_config(ns)},
                     {"word", json_expansion(w, ns)},
                     {"valid", rep.valid},
                     {"valuation_violation", rep.valuation_violation},
                     {"primes", primes}};
            if (rep.invalid_at) {
                out["invalid_at"] = json{{"l", rep.invalid_at->first},
                                         {"prime", rep.invalid_at->second.str()}};
            } else {
                out["invalid_at"] = nullptr;
            }
            emit(out, out_path);
        } else if (cmd_ambi->parsed()) {
            NumberSystem ns = a_ambi.resolve();
            ComplexInput x = resolve_input(ambi_x, ambi_re, ambi_im, ambi_frac + 12, ambi_bits);
            GaussRat yv = parse_gauss_rat(ambi_y);
            auto y = ns.to_lattice(yv);
            if (!y) throw DomainError(yv.str() + " is not a point of the lattice");
            Expansion w = ambi_expansion(ns, Ambinumber{x, *y}, ambi_frac);
            NumericValue v = numeric_evaluate(ns, w);
            json residuals = json::array();
            for (const auto& dp : denominator_primes(ns)) {
                residuals.push_back(json{
                    {"prime", dp.prime.str()},
                    {"nu_of_residual",
                     json_valuation(valuation(evaluate(ns, w) - yv, dp.prime))}});
            }
            char re_buf[40], im_buf[40];
            std::snprintf(re_buf, sizeof re_buf, "%.16g", v.re);
            std::snprintf(im_buf, sizeof im_buf, "%.16g", v.im);
            emit(json{{"config", json_config(ns)},
                      {"y", json_gauss_rat(yv)},
                      {"word", json_expansion(w, ns)},
                      {"evaluation", json{{"re", re_buf}, {"im", im_buf}}},
                      {"residual_valuations", residuals}},
                 out_path);
        } else if (cmd_tile->parsed()) {
            NumberSystem ns = a_tile.resolve();
            double x0, x1, y0, y1;
            if (std::sscanf(tile_window.c_str(), "%lf,%lf,%lf,%lf", &x0, &x1, &y0, &y1) != 4) {
                throw DomainError("window must be x0,x1,y0,y1");
            }
            Window win{x0, x1, y0, y1};
            if (tile_probe > 0) {
                CoverageStats stats =
                    tiling_coverage_probe(ns, win, static_cast<size_t>(tile_probe), tile_depth);
                json hist = json::object();
                for (const auto& [m, c] : stats.multiplicity_histogram) {
                    hist[std::to_string(m)] = c;
                }
                emit(json{{"config", json_config(ns)},
                          {"samples", stats.samples},
                          {"hit_rate", stats.hit_rate()},
                          {"multiplicity_one_rate", stats.multiplicity_one_rate()},
                          {"multiplicity_histogram", hist}},
                     out_path);
            } else {
                int w = 0, h = 0;
                if (std::sscanf(tile_pixels.c_str(), "%dx%d", &w, &h) != 2) {
                    throw DomainError("pixels must be WxH");
                }
                std::vector<TileCloud> clouds;
                size_t points = 0;
                for (int k = 0; k <= tile_maxlen; ++k) {
                    for (const auto& e : enumerate_level(ns, k)) {
                        // words with leading zeros repeat shorter integer parts
                        if (!e.word.empty() && e.word.front() == 0) continue;
                        clouds.push_back(tile_cloud(ns, e.node, tile_depth));
                        points += clouds.back().points.size();
                    }
                }
                if (tile_format == "ppm") {
                    auto img = render_ppm(clouds, win, w, h);
                    std::ofstream f(tile_out, std::ios::binary);
                    f.write(reinterpret_cast<const char*>(img.data()),
                            static_cast<std::streamsize>(img.size()));
                } else {
                    std::ofstream(tile_out, std::ios::binary) << render_svg(clouds, win, w, h);
                }
                emit(json{{"config", json_config(ns)},
                          {"tiles", clouds.size()},
                          {"points", points},
                          {"depth", tile_depth},
                          {"image", tile_out},
                          {"format", tile_format}},
                     out_path);
            }
        }
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const PrecisionError& e) {
        std::cerr << "precision error: " << e.what() << " (need about " << e.required_extra_bits
                  << " more bits)\n";
        return 3;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
