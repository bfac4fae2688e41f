#include "eulerian/quad_search.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace eulerian {

namespace {

void check_params(const Int& e, const Int& f, const Int& g, const Int& h) {
    if (sgn(e) <= 0 || sgn(f) <= 0)
        throw std::invalid_argument("x = e/f needs positive e and f");
    if (sgn(g) == 0 || sgn(h) <= 0)
        throw std::invalid_argument("m = g/h needs g != 0 and h >= 1");
    Int gc;
    mpz_gcd(gc.get_mpz_t(), e.get_mpz_t(), f.get_mpz_t());
    if (gc != 1)
        throw std::invalid_argument("e and f must be coprime");
    mpz_gcd(gc.get_mpz_t(), g.get_mpz_t(), h.get_mpz_t());
    if (gc != 1)
        throw std::invalid_argument("g and h must be coprime");
}

} // namespace

Curve curve_AB(const Int& e, const Int& f, const Int& g, const Int& h) {
    check_params(e, f, g, h);
    const Int e2 = e * e, f2 = f * f, g2 = g * g, h2 = h * h;
    const Int e4 = e2 * e2, f4 = f2 * f2, g4 = g2 * g2, h4 = h2 * h2;
    const Int e6 = e4 * e2, f6 = f4 * f2, g6 = g4 * g2, h6 = h4 * h2;
    const Int e8 = e4 * e4, f8 = f4 * f4, g8 = g4 * g4, h8 = h4 * h4;

    const Int a = -2 * (e4 * h4 + 2 * e2 * f2 * h4 + f4 * (g4 - 4 * g2 * h2 + h4));
    const Int b = e8 * h8 + 4 * e6 * f2 * h8 - 2 * e4 * f4 * h4 * (g4 + 4 * g2 * h2 - 3 * h4) -
                  4 * e2 * f6 * h4 * (g4 + 4 * g2 * h2 - h4) +
                  f8 * (g8 - 8 * g6 * h2 + 14 * g4 * h4 - 8 * g2 * h6 + h8);
    return Curve(Rat(a), Rat(b));
}

Rat n_from_point4(const TripleParams& params, const Point& pt) {
    if (pt.is_infinity() || pt.K().is_zero())
        throw two_torsion_error("n is undefined at K = 0");
    const Rat m(params.g, params.h);
    return pt.J() / (Rat(2 * params.f * params.f * params.h * params.h) * pt.K() * m);
}

Curve w_curve(const Rat& x, const Rat& y) {
    if (x.is_zero() || y.is_zero())
        throw std::invalid_argument("w_curve needs nonzero x and y");
    const Rat x2 = sq(x), y2 = sq(y);
    const Rat a = x2 * (Rat(2) * y2 + Rat(1)) + y2;
    const Rat b = x2 * y2 * (y2 + Rat(1)) * (x2 + Rat(1));
    return Curve(a, b); // singular (throws) iff |x| = |y|
}

ScaledCurve w_curve_integer(const Rat& x, const Rat& y) {
    const Curve base = w_curve(x, y);
    const Int c = x.den() * y.den();
    const Int c2 = c * c;
    const Rat a = base.A * Rat(c2);
    const Rat b = base.B * Rat(c2 * c2);
    return ScaledCurve{Curve(a, b), c};
}

Rat r_from_point(const Rat& x, const Rat& y, const Point& pt) {
    if (pt.is_infinity())
        throw pole_error("r is undefined at infinity");
    const Rat denom = y * (sq(x) * (sq(y) + Rat(1)) + pt.K());
    if (denom.is_zero())
        throw pole_error("r is undefined at U = -x^2(y^2+1)");
    return pt.J() / denom;
}

std::string hit_key(const SearchHit& hit) {
    std::string key;
    for (const Rat& r : hit.roots) {
        key += r.str();
        key += '|';
    }
    return key;
}

std::vector<TripleParams> enumerate_units(const SearchBounds& bounds) {
    std::vector<TripleParams> units;
    Int gc;
    for (Int s = 2; s <= 2 * bounds.x_height_max; ++s) {
        Int e_lo = std::max(Int(1), Int(s - bounds.x_height_max));
        Int e_hi = std::min(Int(s - 1), bounds.x_height_max);
        for (Int e = e_lo; e <= e_hi; ++e) {
            const Int f = s - e;
            mpz_gcd(gc.get_mpz_t(), e.get_mpz_t(), f.get_mpz_t());
            if (gc != 1)
                continue;
            for (Int t = 2; t <= 2 * bounds.m_height_max; ++t) {
                Int g_lo = std::max(Int(1), Int(t - bounds.m_height_max));
                Int g_hi = std::min(Int(t - 1), bounds.m_height_max);
                for (Int g = g_lo; g <= g_hi; ++g) {
                    const Int h = t - g;
                    mpz_gcd(gc.get_mpz_t(), g.get_mpz_t(), h.get_mpz_t());
                    if (gc != 1)
                        continue;
                    units.push_back(TripleParams{e, f, g, h});
                }
            }
        }
    }
    return units;
}

namespace {

// w candidates for a fixed (x, y): scanned on the integer model, mapped back
// through r. Each entry keeps the scanned point for reporting.
struct WCandidate {
    Point u_point; // on the integer model
    Rat w;         // positive representative
};

std::vector<WCandidate> w_candidates(const Rat& x, const Rat& y, const IntRange& u_range,
                                     const ScaledCurve& model) {
    std::vector<WCandidate> out;
    const Rat c2(model.scale * model.scale);
    const Rat c3(model.scale * model.scale * model.scale);
    const Rat x2p1 = sq(x) + Rat(1);
    for (const Point& upt : integer_point_scan(model.curve, u_range.lo, u_range.hi)) {
        if (upt.J().is_zero())
            continue; // V = 0 gives r = 0, w = 0
        const Rat u = upt.K() / c2;
        const Rat v = upt.J() / c3;
        // Both V signs flip only the sign of w; keep the positive branch.
        const Rat denom = y * (sq(x) * (sq(y) + Rat(1)) + u);
        if (denom.is_zero())
            continue;
        const Rat r = v / denom;
        if (sq(r) == x2p1)
            continue;
        const Rat w = abs(param_t(x, r));
        if (w.is_zero())
            continue;
        out.push_back(WCandidate{upt, w});
    }
    return out;
}

} // namespace

std::vector<SearchHit> search_unit(const TripleParams& params, const SearchBounds& bounds) {
    std::vector<SearchHit> hits;
    const Rat x(params.e, params.f);
    const Rat m(params.g, params.h);
    if (sq(m) == sq(x) + Rat(1))
        return hits; // parameterization pole
    const Rat y = abs(param_t(x, m));
    if (y.is_zero() || y == abs(x))
        return hits;

    std::optional<Curve> curve;
    try {
        curve = curve_AB(params.e, params.f, params.g, params.h);
    } catch (const singular_curve&) {
        return hits;
    }

    // Lazily built: the w stage depends only on (x, y).
    std::vector<WCandidate> wcands;
    bool wcands_ready = false;

    std::set<Rat> z_seen;
    for (const Point& kpt : integer_point_scan(*curve, bounds.k_range.lo, bounds.k_range.hi)) {
        if (kpt.K().is_zero() || kpt.J().is_zero())
            continue; // torsion, z = 0
        // Both J signs flip only the sign of z; the positive branch covers both.
        const Rat n = n_from_point4(params, kpt);
        if (sq(n) == sq(x) + Rat(1))
            continue;
        const Rat z = abs(param_t(x, n));
        if (z.is_zero())
            continue;
        SquareTuple triple({x, y, z});
        if (triple.degenerate())
            continue;
        if (!z_seen.insert(z).second)
            continue;
        if (!is_eulerian(triple).ok())
            throw std::logic_error("curve point failed the triple construction guarantee");

        if (!wcands_ready) {
            wcands = w_candidates(x, y, bounds.u_range, w_curve_integer(x, y));
            wcands_ready = true;
        }
        std::set<Rat> w_seen;
        for (const WCandidate& cand : wcands) {
            const Rat& w = cand.w;
            if (w == x || w == y || w == z)
                continue;
            if (!w_seen.insert(w).second)
                continue;
            SearchHit hit;
            hit.params = params;
            hit.k_point = kpt;
            hit.u_point = cand.u_point;
            hit.u_scale = x.den() * y.den();
            hit.roots = {x, y, z, w};
            std::sort(hit.roots.begin(), hit.roots.end());
            const VerifyResult vr = is_eulerian(SquareTuple(hit.roots));
            std::size_t bad = 0;
            for (const PairReport& pr : vr.pairs)
                if (!pr.square)
                    ++bad;
            if (bad > 1)
                throw std::logic_error("w candidate failed a constructed identity");
            hit.pairs = vr.pairs;
            hit.cls = bad == 0 ? HitClass::full : HitClass::near_miss5;
            hits.push_back(std::move(hit));
        }
    }
    return hits;
}

void search(const SearchBounds& bounds, const std::function<void(const SearchHit&)>& emit) {
    std::set<std::string> seen;
    for (const TripleParams& unit : enumerate_units(bounds))
        for (const SearchHit& hit : search_unit(unit, bounds))
            if (seen.insert(hit_key(hit)).second)
                emit(hit);
}

} // namespace eulerian
