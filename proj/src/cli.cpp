#include "eulerian/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulerian/curve.hpp"
#include "eulerian/quad_search.hpp"
#include "eulerian/search_runner.hpp"
#include "eulerian/triple_equation.hpp"
#include "eulerian/triple_family.hpp"
#include "eulerian/tuples.hpp"

namespace eulerian {

namespace {

using nlohmann::ordered_json;

std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        out.push_back(Rat::parse(std::string_view(text).substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

Int parse_int(const std::string& text) {
    Rat r = Rat::parse(text);
    if (!r.is_integer())
        throw parse_error("expected an integer, got \"" + text + "\"");
    return r.num();
}

IntRange parse_range(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw parse_error("range must look like lo:hi, got \"" + text + "\"");
    IntRange r{parse_int(text.substr(0, colon)), parse_int(text.substr(colon + 1))};
    if (r.lo > r.hi)
        throw parse_error("empty range \"" + text + "\"");
    return r;
}

Point parse_point(const Curve& c, const std::string& text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw parse_error("point must look like K,J, got \"" + text + "\"");
    return Point::affine(c, Rat::parse(text.substr(0, comma)), Rat::parse(text.substr(comma + 1)));
}

std::size_t decimal_digits(const Int& n) {
    Int a = n < 0 ? Int(-n) : n;
    return a.get_str().size();
}

const char* status_name(TupleStatus s) {
    switch (s) {
    case TupleStatus::eulerian: return "eulerian";
    case TupleStatus::not_eulerian: return "not-eulerian";
    default: return "degenerate";
    }
}

ordered_json pairs_to_json(const std::vector<PairReport>& pairs) {
    ordered_json arr = ordered_json::array();
    for (const PairReport& pr : pairs) {
        ordered_json p;
        p["i"] = pr.i;
        p["j"] = pr.j;
        p["value"] = pr.value.str();
        p["square"] = pr.square;
        if (pr.root)
            p["root"] = pr.root->str();
        arr.push_back(std::move(p));
    }
    return arr;
}

void print_pairs_text(std::ostream& out, const std::vector<PairReport>& pairs) {
    for (const PairReport& pr : pairs) {
        out << "  (" << pr.i << "," << pr.j << ")  " << pr.value.str();
        if (pr.square)
            out << " = (" << pr.root->str() << ")^2";
        else
            out << "  [not a square]";
        out << '\n';
    }
}

int cmd_verify(const std::string& tuple_text, bool as_squares, bool json, std::ostream& out) {
    std::vector<Rat> values = parse_rat_list(tuple_text);
    std::vector<Rat> roots;
    if (as_squares) {
        for (const Rat& v : values)
            roots.push_back(sqrt_exact(v)); // not_a_square -> exit 1 in the dispatcher
    } else {
        roots = values;
    }
    if (roots.size() < 2)
        throw parse_error("a tuple needs at least two members");

    const SquareTuple tuple(roots);
    const VerifyResult res = is_eulerian(tuple);
    const bool has_ppt = tuple.size() == 3;
    VerifyResult ppt{TupleStatus::eulerian, {}};
    if (has_ppt)
        ppt = product_plus_third(tuple);

    if (json) {
        ordered_json j;
        ordered_json roots_j = ordered_json::array(), squares_j = ordered_json::array();
        for (const Rat& r : tuple.roots) {
            roots_j.push_back(r.str());
            squares_j.push_back(sq(r).str());
        }
        j["roots"] = std::move(roots_j);
        j["squares"] = std::move(squares_j);
        j["status"] = status_name(res.status);
        j["pairs"] = pairs_to_json(res.pairs);
        if (has_ppt) {
            j["product_plus_third"] = {{"status", status_name(ppt.status)},
                                       {"checks", pairs_to_json(ppt.pairs)}};
        }
        out << j.dump() << '\n';
    } else {
        out << "roots:";
        for (const Rat& r : tuple.roots)
            out << ' ' << r.str();
        out << "\nsquares:";
        for (const Rat& r : tuple.roots)
            out << ' ' << sq(r).str();
        out << "\npair identities a*b + a + b:\n";
        print_pairs_text(out, res.pairs);
        if (has_ppt) {
            out << "product plus third a*b + c:\n";
            print_pairs_text(out, ppt.pairs);
        }
        out << "status: " << status_name(res.status) << '\n';
    }
    return res.ok() ? 0 : 1;
}

int cmd_solve_triple(const std::string& squares_text, bool json, std::ostream& out) {
    std::vector<Rat> s = parse_rat_list(squares_text);
    if (s.size() != 3)
        throw parse_error("solve-triple needs exactly three squares");
    const TripleSystem sys(s[0], s[1], s[2]);
    const TripleSolution sol = solve(sys);

    if (json) {
        ordered_json j;
        j["squares"] = {s[0].str(), s[1].str(), s[2].str()};
        j["x"] = sol.x.str();
        j["x_digits"] = {decimal_digits(sol.x.num()), decimal_digits(sol.x.den())};
        j["roots"] = {sol.roots[0].str(), sol.roots[1].str(), sol.roots[2].str()};
        j["g"] = sol.g_star.str();
        j["f"] = sol.f_star.str();
        out << j.dump() << '\n';
    } else {
        out << "x = " << sol.x.str() << "\n";
        out << "digits: " << decimal_digits(sol.x.num()) << " / " << decimal_digits(sol.x.den())
            << "\n";
        for (int i = 0; i < 3; ++i) {
            const Rat coeff = sys.s(i) + Rat(1);
            out << "(" << coeff.str() << ")x + " << sys.s(i).str() << " = (" << sol.roots[i].str()
                << ")^2\n";
        }
        out << "g = " << sol.g_star.str() << "\n";
        out << "f = " << sol.f_star.str() << "\n";
    }
    return 0;
}

int cmd_triple_family(const std::string& m_text, const std::string& gen_text, int count,
                      std::ostream& out) {
    const Rat m = Rat::parse(m_text);
    if (m.is_zero())
        throw parse_error("m must be nonzero");
    const Int p = m.num(), q = m.den();
    const Curve c = curve_for_m(p, q);
    const Point gen = parse_point(c, gen_text);
    for (const FamilyTriple& ft : family(p, q, gen, count)) {
        ordered_json j;
        j["k"] = ft.k;
        j["point"] = {{"K", ft.point.K().str()}, {"J", ft.point.J().str()}};
        j["n"] = ft.n.str();
        ordered_json roots = ordered_json::array(), squares = ordered_json::array();
        for (const Rat& r : ft.triple.roots) {
            roots.push_back(r.str());
            squares.push_back(sq(r).str());
        }
        j["roots"] = std::move(roots);
        j["squares"] = std::move(squares);
        j["eulerian"] = true; // family() only emits verified triples
        out << j.dump() << '\n';
    }
    return 0;
}

int cmd_curve(const std::string& a_text, const std::string& b_text, const std::string& scan_text,
              bool torsion, const std::string& mul_text, const std::string& point_text, bool json,
              std::ostream& out) {
    const Curve c(Rat::parse(a_text), Rat::parse(b_text));
    ordered_json j;
    j["a"] = c.A.str();
    j["b"] = c.B.str();

    auto emit_points = [&](const char* label, const std::vector<Point>& pts) {
        if (json) {
            ordered_json arr = ordered_json::array();
            for (const Point& p : pts)
                arr.push_back({{"K", p.K().str()}, {"J", p.J().str()}});
            j[label] = std::move(arr);
        } else {
            out << label << ":\n";
            for (const Point& p : pts)
                out << p.K().str() << ',' << p.J().str() << '\n';
        }
    };

    if (torsion)
        emit_points("torsion", two_torsion(c));
    if (!scan_text.empty()) {
        const IntRange r = parse_range(scan_text);
        emit_points("points", integer_point_scan(c, r.lo, r.hi));
    }
    if (!mul_text.empty()) {
        if (point_text.empty())
            throw parse_error("--mul needs --point K,J");
        const Point p = parse_point(c, point_text);
        const Point r = scalar_mul(c, parse_int(mul_text), p);
        if (json) {
            if (r.is_infinity())
                j["multiple"] = "infinity";
            else
                j["multiple"] = {{"K", r.K().str()}, {"J", r.J().str()}};
        } else {
            out << "multiple:\n";
            if (r.is_infinity())
                out << "infinity\n";
            else
                out << r.K().str() << ',' << r.J().str() << '\n';
        }
    }
    if (json)
        out << j.dump() << '\n';
    return 0;
}

int cmd_search_quad(const SearchBounds& bounds, const std::string& out_path,
                    const std::string& checkpoint, bool resume, int jobs, long max_units,
                    std::ostream& out) {
    RunnerConfig config;
    config.bounds = bounds;
    config.out_path = out_path;
    config.checkpoint_path = checkpoint;
    config.resume = resume;
    config.jobs = jobs;
    if (max_units >= 0)
        config.max_units = static_cast<std::size_t>(max_units);
    const RunnerStats stats = run_search(config);
    out << "units " << stats.units_done << "/" << stats.total_units << " full " << stats.full_hits
        << " near5 " << stats.near_miss_hits << (stats.completed ? " done" : " stopped") << '\n';
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Eulerian tuples of squares: verification, curve families, "
                 "the triple equation, and the quadruple search"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit a single JSON document instead of text");

    auto* verify = app.add_subcommand("verify", "check the pair identities of a tuple");
    verify->fallthrough();
    std::string tuple_text;
    bool as_squares = false;
    verify->add_option("tuple", tuple_text, "comma-separated roots, e.g. 18,3/5,8/5,224/107")
        ->required();
    verify->add_flag("--squares", as_squares, "treat the entries as the squares themselves");

    auto* solve = app.add_subcommand("solve-triple", "solve (s_i+1)x + s_i = square for x");
    solve->fallthrough();
    std::string squares_text;
    solve->add_option("--squares", squares_text, "the three square constants, e.g. 25/9,64/9,196/9")
        ->required();

    auto* fam = app.add_subcommand("triple-family", "triples from multiples of a curve point");
    fam->fallthrough();
    std::string m_text, gen_text;
    int count = 1;
    fam->add_option("--m", m_text, "the family parameter m = p/q")->required();
    fam->add_option("--gen", gen_text, "generator point K,J")->required();
    fam->add_option("--count", count, "multiples of the generator to walk")
        ->check(CLI::PositiveNumber);

    auto* curve = app.add_subcommand("curve", "inspect a curve J^2 = K^3 + A K^2 + B K");
    curve->fallthrough();
    std::string a_text, b_text, scan_text, mul_text, point_text;
    bool torsion = false;
    curve->add_option("--a", a_text, "coefficient A")->required();
    curve->add_option("--b", b_text, "coefficient B")->required();
    curve->add_option("--scan", scan_text, "integer point scan over lo:hi");
    curve->add_flag("--torsion", torsion, "list the points of order two");
    curve->add_option("--mul", mul_text, "scalar for --point");
    curve->add_option("--point", point_text, "point K,J for --mul");

    auto* search = app.add_subcommand("search-quad", "two-stage quadruple search");
    search->fallthrough();
    std::string x_max, m_max, k_range_text, u_range_text, out_path, checkpoint_path, resume_path;
    int jobs = 1;
    long max_units = -1;
    search->add_option("--x-max", x_max, "height bound for x = e/f")->required();
    search->add_option("--m-max", m_max, "height bound for m = g/h")->required();
    search->add_option("--k-range", k_range_text, "K window lo:hi")->required();
    search->add_option("--u-range", u_range_text, "U window lo:hi on the integer w model")
        ->required();
    search->add_option("--out", out_path, "JSONL output file")->required();
    search->add_option("--checkpoint", checkpoint_path, "write checkpoints to this file");
    search->add_option("--resume", resume_path, "resume from this checkpoint file");
    search->add_option("--jobs", jobs, "parallel work units")
        ->envname("EULERIAN_JOBS")
        ->check(CLI::PositiveNumber);
    search->add_option("--max-units", max_units, "stop after this many work units (resumable)");

    try {
        std::vector<const char*> argv;
        argv.push_back("eulerian");
        for (const std::string& a : args)
            argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed())
            return cmd_verify(tuple_text, as_squares, json, out);
        if (solve->parsed())
            return cmd_solve_triple(squares_text, json, out);
        if (fam->parsed())
            return cmd_triple_family(m_text, gen_text, count, out);
        if (curve->parsed())
            return cmd_curve(a_text, b_text, scan_text, torsion, mul_text, point_text, json, out);
        if (search->parsed()) {
            SearchBounds bounds{parse_int(x_max), parse_int(m_max), parse_range(k_range_text),
                                parse_range(u_range_text)};
            if (bounds.x_height_max < 1 || bounds.m_height_max < 1)
                throw parse_error("height bounds must be positive");
            const bool resume = !resume_path.empty();
            const std::string ck = resume ? resume_path : checkpoint_path;
            return cmd_search_quad(bounds, out_path, ck, resume, jobs, max_units, out);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const math_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace eulerian
