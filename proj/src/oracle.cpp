#include "oracle.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace hms::oracle {

namespace {

Rat rat_abs(const Rat& r) { return r < Rat(0) ? -r : r; }

int mod3(long v) { return static_cast<int>(((v % 3) + 3) % 3); }

struct LiftedLine {
    H1Class dir;
    Rat rhs;  // eta(x, y) = rhs in the plane
};

// eta_d(x,y) = d.b*x - d.a*y; intersection of two lifted lines.
Vec2 intersect(const LiftedLine& l1, const LiftedLine& l2) {
    const Int det = Int(l1.dir.a) * Int(l2.dir.b) - Int(l1.dir.b) * Int(l2.dir.a);
    if (det == 0) fail(errc::internal, "oracle: intersecting parallel lifts");
    Vec2 p;
    p.x = (Rat(Int(l1.dir.a)) * l2.rhs - Rat(Int(l2.dir.a)) * l1.rhs) / Rat(det);
    p.y = (Rat(Int(l1.dir.b)) * l2.rhs - Rat(Int(l2.dir.b)) * l1.rhs) / Rat(det);
    return p;
}

Rat triangle_area(const Vec2& p, const Vec2& q, const Vec2& r) {
    const Rat cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return rat_abs(cross) / Rat(2);
}

// Corner-name cosets, frozen from the reference configuration.  The level of
// a lift is the integer eta(P) - offset; for each transverse pair the value
// below is invariant under deck transformations and identifies which of the
// intersection points on the torus a corner projects to.
//   Hom(L0,L1), coset (m0 + m1) mod 3 : x0 -> 1, y0 -> 2, z0 -> 0
//   Hom(L1,L2), coset (m1 + m2) mod 3 : x1 -> 1, y1 -> 0, z1 -> 2
//   Hom(L0,L2), coset (2*m0 + m2) mod 3 : xbar -> 0, ybar -> 1, zbar -> 2
struct FamilySpec {
    int coset01;      // alpha families: required (m0+m1) mod 3
    int coset12;      // alpha families: required (m1+m2) mod 3
    int coset02;      // all families: resulting/required (2*m0+m2) mod 3
    int phi_kind;     // 0: n(3n+1)/2, 1: n(3n-1)/2, 2: 3n(n-1)/2
    bool two_minima;  // the phi law vanishes at n = 0 and n = 1
};

FamilySpec family_spec(Family f) {
    switch (f) {
        case Family::xy: return {1, 0, 2, 0, false};
        case Family::yz: return {2, 2, 0, 0, false};
        case Family::zx: return {0, 1, 1, 0, false};
        case Family::yx: return {2, 1, 2, 1, false};
        case Family::zy: return {0, 0, 0, 1, false};
        case Family::xz: return {1, 2, 1, 1, false};
        case Family::xx: return {1, 1, 0, 2, true};
        case Family::yy: return {2, 0, 1, 2, true};
        case Family::zz: return {0, 2, 2, 2, true};
        case Family::xbar: return {0, 0, 0, 0, false};
        case Family::ybar: return {0, 0, 1, 2, true};
        case Family::zbar: return {0, 0, 2, 1, false};
    }
    fail(errc::internal, "oracle: bad family");
}

long long phi_of(int kind, long n) {
    switch (kind) {
        case 0: return static_cast<long long>(n) * (3LL * n + 1) / 2;
        case 1: return static_cast<long long>(n) * (3LL * n - 1) / 2;
        default: return 3LL * n * (static_cast<long long>(n) - 1) / 2;
    }
}

const Family kAlphaFamilies[9] = {Family::xy, Family::yx, Family::xx, Family::yy, Family::zz,
                                  Family::yz, Family::zy, Family::zx, Family::xz};

}  // namespace

Family family_from_label(const std::string& label) {
    static const std::map<std::string, Family> names = {
        {"xy", Family::xy},     {"yx", Family::yx},     {"xx", Family::xx},
        {"yy", Family::yy},     {"zz", Family::zz},     {"yz", Family::yz},
        {"zy", Family::zy},     {"zx", Family::zx},     {"xz", Family::xz},
        {"xbar", Family::xbar}, {"ybar", Family::ybar}, {"zbar", Family::zbar}};
    auto it = names.find(label);
    if (it != names.end()) return it->second;
    if (label == "b" || label == "b'" || label == "bbar" || label == "bprime")
        fail(errc::unsupported, "oracle: the b/b' compositions carry no stated area law");
    fail(errc::invalid_argument, "oracle: unknown family label " + label);
}

std::string family_label(Family f) {
    switch (f) {
        case Family::xy: return "xy";
        case Family::yx: return "yx";
        case Family::xx: return "xx";
        case Family::yy: return "yy";
        case Family::zz: return "zz";
        case Family::yz: return "yz";
        case Family::zy: return "zy";
        case Family::zx: return "zx";
        case Family::xz: return "xz";
        case Family::xbar: return "xbar";
        case Family::ybar: return "ybar";
        case Family::zbar: return "zbar";
    }
    return "?";
}

bool family_needs_point(Family f) {
    return f == Family::xbar || f == Family::ybar || f == Family::zbar;
}

long long family_phi(Family f, long n) { return phi_of(family_spec(f).phi_kind, n); }

const Rat& TorusModel::area_Ci(int i) const {
    if (i < 0 || i >= k_) fail(errc::invalid_argument, "oracle: point index out of range");
    return area_Ci_[static_cast<size_t>(i)];
}

Rat TorusModel::area_Delta(int i, int j) const { return (area_Ci(j) - area_Ci(i)) / Rat(3); }

Rat TorusModel::base_area(Family f, int point) const {
    auto it = families_.find({f, family_needs_point(f) ? point : -1});
    if (it == families_.end()) fail(errc::invalid_argument, "oracle: family/point not in model");
    return it->second.base_area;
}

long TorusModel::intersection_count(int i, int j) const {
    if (i < 0 || j < 0 || i >= static_cast<int>(lines_.size()) ||
        j >= static_cast<int>(lines_.size()) || i == j)
        fail(errc::invalid_argument, "oracle: bad cycle pair");
    const Line& a = lines_[static_cast<size_t>(i)];
    const Line& b = lines_[static_cast<size_t>(j)];
    const long long det = intersection_number(a.dir, b.dir);
    if (det == 0) return 0;  // distinct parallels by genericity
    // Honest count: solve over a window of level pairs and deduplicate the
    // solutions modulo Z^2.
    std::set<std::pair<Rat, Rat>> pts;
    const long w = static_cast<long>(std::abs(det)) + 2;
    for (long m = 0; m < w; ++m) {
        for (long n = 0; n < w; ++n) {
            const Vec2 p = intersect({a.dir, a.offset + Rat(Int(m))},
                                     {b.dir, b.offset + Rat(Int(n))});
            auto frac = [](const Rat& r) {
                Int fl = r.numerator() / r.denominator();
                if (r < Rat(0) && fl * r.denominator() != r.numerator()) fl -= 1;
                return r - Rat(fl);
            };
            pts.emplace(frac(p.x), frac(p.y));
        }
    }
    return static_cast<long>(pts.size());
}

namespace {

struct Builder {
    int k;
    std::vector<Line> lines;

    std::array<LiftedLine, 3> lifted(const std::array<int, 3>& idx,
                                     const std::array<long, 3>& levels) const {
        std::array<LiftedLine, 3> out;
        for (int t = 0; t < 3; ++t) {
            const Line& l = lines[static_cast<size_t>(idx[static_cast<size_t>(t)])];
            out[static_cast<size_t>(t)] = {l.dir, l.offset + Rat(Int(levels[static_cast<size_t>(t)]))};
        }
        return out;
    }

    Rat area(const std::array<int, 3>& idx, const std::array<long, 3>& levels) const {
        const auto l = lifted(idx, levels);
        return triangle_area(intersect(l[0], l[1]), intersect(l[1], l[2]), intersect(l[0], l[2]));
    }
};

std::array<long, 3> plus(const std::array<long, 3>& a, const std::array<long, 3>& b, long m) {
    return {a[0] + m * b[0], a[1] + m * b[1], a[2] + m * b[2]};
}

}  // namespace

TorusModel TorusModel::build(int k, unsigned long seed) {
    if (k < 0 || k > 8) fail(errc::invalid_argument, "oracle: k outside [0, 8]");

    for (unsigned long attempt = 0; attempt < 64; ++attempt) {
        // Deterministic offset grid: splitmix-style scramble of (seed, slot).
        auto draw = [&](int slot) {
            unsigned long long x = seed * 0x9E3779B97F4A7C15ULL + 0xBF58476D1CE4E5B9ULL * attempt +
                                   0x94D049BB133111EBULL * static_cast<unsigned long long>(slot + 1);
            x ^= x >> 30;
            x *= 0xBF58476D1CE4E5B9ULL;
            x ^= x >> 27;
            x *= 0x94D049BB133111EBULL;
            x ^= x >> 31;
            const long j = static_cast<long>(x % 61) - 30;  // in [-30, 30]
            return Rat(Int(j), Int(257));
        };

        TorusModel model;
        model.k_ = k;
        model.seed_ = seed;
        Builder b;
        b.k = k;
        // Reference configuration with a seeded rational perturbation.
        b.lines.push_back({H1Class{-2, -1}, Rat(Int(0)) + draw(0)});
        b.lines.push_back({H1Class{-1, 1}, Rat(Int(1), Int(2)) + draw(1)});
        b.lines.push_back({H1Class{1, 2}, Rat(Int(0)) + draw(2)});
        for (int i = 0; i < k; ++i)
            b.lines.push_back({H1Class{1, 1}, Rat(Int(3), Int(4)) + draw(3 + i)});

        auto is_integer = [](const Rat& r) { return r.denominator() == 1; };
        bool generic = true;
        const Rat o0 = b.lines[0].offset, o1 = b.lines[1].offset, o2 = b.lines[2].offset;
        if (is_integer(o0 + o2 - o1)) generic = false;  // L0, L1, L2 concurrent
        for (int i = 0; i < k && generic; ++i) {
            const Rat oi = b.lines[static_cast<size_t>(3 + i)].offset;
            if (is_integer(Rat(Int(-2)) * o0 + o1 - Rat(Int(3)) * oi)) generic = false;
            if (is_integer(o0 - o2 + Rat(Int(3)) * oi)) generic = false;
            if (is_integer(o1 - Rat(Int(2)) * o2 + Rat(Int(3)) * oi)) generic = false;
            for (int j = 0; j < i; ++j)
                if (is_integer(oi - b.lines[static_cast<size_t>(3 + j)].offset)) generic = false;
        }
        if (!generic) continue;

        // Scan a family for its minimal triangles.  Returns the level triple
        // of the global minimum (and the runner-up among its neighbors).
        const long scan = 48;
        struct ScanResult {
            std::array<long, 3> min_levels;
            Rat min_area;
            std::array<long, 3> next_levels;
            Rat next_area;
            bool min_unique = true;
        };
        auto scan_family = [&](const std::array<int, 3>& idx, const std::array<long, 3>& anchor,
                               const std::array<long, 3>& step) -> std::optional<ScanResult> {
            long best = 0;
            Rat best_area = b.area(idx, anchor);
            for (long m = -scan; m <= scan; ++m) {
                const Rat a = b.area(idx, plus(anchor, step, m));
                if (a < best_area) {
                    best_area = a;
                    best = m;
                }
            }
            if (std::abs(best) > scan - 8) return std::nullopt;  // window too small
            const Rat up = b.area(idx, plus(anchor, step, best + 1));
            const Rat down = b.area(idx, plus(anchor, step, best - 1));
            ScanResult r;
            r.min_levels = plus(anchor, step, best);
            r.min_area = best_area;
            if (up <= down) {
                r.next_levels = plus(anchor, step, best + 1);
                r.next_area = up;
            } else {
                r.next_levels = plus(anchor, step, best - 1);
                r.next_area = down;
            }
            r.min_unique = r.next_area != r.min_area;
            return r;
        };

        // --- alpha families -------------------------------------------------
        const std::array<int, 3> alpha_idx{0, 1, 2};
        const std::array<long, 3> alpha_step{1, -1, 1};
        std::map<Family, ScanResult> scans;
        bool ok = true;
        for (Family f : kAlphaFamilies) {
            const FamilySpec spec = family_spec(f);
            // Anchor levels realizing the corner cosets (m1 = 0).
            const std::array<long, 3> anchor{spec.coset01, 0, spec.coset12};
            if (mod3(2 * anchor[0] + anchor[2]) != spec.coset02)
                fail(errc::internal, "oracle: inconsistent corner table");
            auto s = scan_family(alpha_idx, anchor, alpha_step);
            if (!s || !s->min_unique) {
                ok = false;
                break;
            }
            scans[f] = *s;
        }
        if (!ok) continue;

        // The exchange-chain area from the six-triangle combination.
        const Rat area_C = scans[Family::xy].min_area + scans[Family::yz].min_area +
                           scans[Family::zx].min_area - scans[Family::yx].min_area -
                           scans[Family::zy].min_area - scans[Family::xz].min_area;
        if (area_C == Rat(0) || rat_abs(area_C) >= Rat(1)) continue;

        // Freeze base + orientation of each family against area_C.
        auto orient_unique_min = [&](Family f, const ScanResult& s, const Rat& target,
                                     const std::array<int, 3>& idx,
                                     const std::array<long, 3>& step) -> std::optional<FamilyState> {
            const FamilySpec spec = family_spec(f);
            const Rat d_up = b.area(idx, plus(s.min_levels, step, 1)) - s.min_area;
            FamilyState st;
            st.line_idx = idx;
            st.base_levels = s.min_levels;
            st.base_area = s.min_area;
            const bool plus_fits = d_up == target + Rat(Int(phi_of(spec.phi_kind, 1)));
            const bool minus_fits = d_up == -target + Rat(Int(phi_of(spec.phi_kind, -1)));
            if (plus_fits == minus_fits) return std::nullopt;
            const long e = plus_fits ? 1 : -1;
            st.step = {e * step[0], e * step[1], e * step[2]};
            return st;
        };
        auto orient_two_minima = [&](Family f, const ScanResult& s, const Rat& target,
                                     const std::array<int, 3>& idx,
                                     const std::array<long, 3>& step) -> std::optional<FamilyState> {
            // The law vanishes at n = 0 and n = 1, so T(1) = T(0) + target
            // picks both the base and the direction.
            FamilyState st;
            st.line_idx = idx;
            if (s.next_area - s.min_area == target) {
                st.base_levels = s.min_levels;
                st.base_area = s.min_area;
            } else if (s.min_area - s.next_area == target) {
                st.base_levels = s.next_levels;
                st.base_area = s.next_area;
            } else {
                return std::nullopt;
            }
            // step direction: from base towards the partner minimum
            long dir = 0;
            for (int t = 0; t < 3 && dir == 0; ++t)
                if (step[static_cast<size_t>(t)] != 0)
                    dir = (s.min_levels[static_cast<size_t>(t)] == st.base_levels[static_cast<size_t>(t)]
                               ? s.next_levels[static_cast<size_t>(t)] - st.base_levels[static_cast<size_t>(t)]
                               : s.min_levels[static_cast<size_t>(t)] - st.base_levels[static_cast<size_t>(t)]) /
                          step[static_cast<size_t>(t)];
            st.step = {dir * step[0], dir * step[1], dir * step[2]};
            return st;
        };

        for (Family f : kAlphaFamilies) {
            const FamilySpec spec = family_spec(f);
            std::optional<FamilyState> st =
                spec.two_minima ? orient_two_minima(f, scans[f], area_C, alpha_idx, alpha_step)
                                : orient_unique_min(f, scans[f], area_C, alpha_idx, alpha_step);
            if (!st) {
                ok = false;
                break;
            }
            model.families_[{f, -1}] = *st;
        }
        if (!ok) continue;

        // --- bar families per blown-up cycle ---------------------------------
        const std::array<long, 3> bar_step{0, 0, 1};
        std::vector<Rat> area_Ci;
        for (int i = 0; i < k && ok; ++i) {
            const std::array<int, 3> idx{0, 2, 3 + i};
            auto anchor_for = [&](Family f) -> std::array<long, 3> {
                const int c = family_spec(f).coset02;
                // (2*m0 + m2) mod 3 == c with m0 = 0
                return {0, c, 0};
            };
            auto sx = scan_family(idx, anchor_for(Family::xbar), bar_step);
            auto sy = scan_family(idx, anchor_for(Family::ybar), bar_step);
            auto sz = scan_family(idx, anchor_for(Family::zbar), bar_step);
            if (!sx || !sy || !sz || !sx->min_unique || !sz->min_unique) {
                ok = false;
                break;
            }
            // Pin area(C_i) as the unique value consistent with both the xbar
            // and zbar family laws.
            auto candidates = [&](const ScanResult& s, int phi_kind) {
                const Rat d_up = b.area(idx, plus(s.min_levels, bar_step, 1)) - s.min_area;
                return std::array<Rat, 2>{d_up - Rat(Int(phi_of(phi_kind, 1))),
                                          -(d_up - Rat(Int(phi_of(phi_kind, -1))))};
            };
            const auto cx = candidates(*sx, 0);
            const auto cz = candidates(*sz, 1);
            std::optional<Rat> aci;
            int matches = 0;
            for (const Rat& u : cx)
                for (const Rat& v : cz)
                    if (u == v) {
                        ++matches;
                        aci = u;
                    }
            if (matches != 1 || !aci || *aci == Rat(0) || rat_abs(*aci) >= Rat(1)) {
                ok = false;
                break;
            }

            auto stx = orient_unique_min(Family::xbar, *sx, *aci, idx, bar_step);
            auto stz = orient_unique_min(Family::zbar, *sz, *aci, idx, bar_step);
            auto sty = orient_two_minima(Family::ybar, *sy, *aci, idx, bar_step);
            if (!stx || !stz || !sty) {
                ok = false;
                break;
            }
            model.families_[{Family::xbar, i}] = *stx;
            model.families_[{Family::ybar, i}] = *sty;
            model.families_[{Family::zbar, i}] = *stz;
            area_Ci.push_back(*aci);
        }
        if (!ok) continue;

        // Distinct chain areas so every Delta strip is nonzero.
        for (int i = 0; i < k && ok; ++i)
            for (int j = i + 1; j < k; ++j)
                if (area_Ci[static_cast<size_t>(i)] == area_Ci[static_cast<size_t>(j)]) ok = false;
        if (!ok) continue;

        model.lines_ = b.lines;
        model.area_C_ = area_C;
        model.area_Ci_ = area_Ci;
        return model;
    }
    fail(errc::degenerate, "oracle: no generic model found for this seed");
}

std::vector<TriangleArea> TorusModel::enumerate(Family f, int point, long n_lo, long n_hi) const {
    if (n_lo > n_hi) fail(errc::invalid_argument, "oracle: empty n range");
    auto it = families_.find({f, family_needs_point(f) ? point : -1});
    if (it == families_.end()) fail(errc::invalid_argument, "oracle: family/point not in model");
    const FamilyState& st = it->second;
    Builder b;
    b.k = k_;
    b.lines = lines_;
    std::vector<TriangleArea> out;
    out.reserve(static_cast<size_t>(n_hi - n_lo + 1));
    for (long n = n_lo; n <= n_hi; ++n) {
        TriangleArea t;
        t.n = n;
        t.area = b.area(st.line_idx, plus(st.base_levels, st.step, n));
        out.push_back(t);
    }
    return out;
}

OracleReport verify_chain_relations(const TorusModel& model, long n_max) {
    OracleReport rep;
    rep.k = model.k();
    rep.seed = model.seed();

    auto add = [&](const std::string& name, const Rat& lhs, const Rat& rhs) {
        rep.checks.push_back({name, lhs == rhs, lhs, rhs});
    };

    // Area-offset laws, exact over the window.
    auto check_law = [&](Family f, int point) {
        const std::string tag =
            family_label(f) + (family_needs_point(f) ? "[" + std::to_string(point) + "]" : "");
        const Rat base = model.base_area(f, point);
        const Rat c_area = family_needs_point(f) ? model.area_Ci(point) : model.area_C();
        bool all_ok = true;
        for (const TriangleArea& t : model.enumerate(f, point, -n_max, n_max)) {
            const Rat expect = base + Rat(Int(t.n)) * c_area + Rat(Int(family_phi(f, t.n)));
            if (t.area != expect) all_ok = false;
        }
        rep.checks.push_back({"law_" + tag, all_ok, Rat(0), Rat(0)});
    };
    for (Family f : {Family::xy, Family::yx, Family::xx, Family::yy, Family::zz, Family::yz,
                     Family::zy, Family::zx, Family::xz})
        check_law(f, -1);
    for (int i = 0; i < model.k(); ++i)
        for (Family f : {Family::xbar, Family::ybar, Family::zbar}) check_law(f, i);

    // Chain identities between base triangles.
    auto base = [&](Family f, int p = -1) { return model.base_area(f, p); };
    add("chain_C_six_triangle",
        base(Family::xy) + base(Family::yz) + base(Family::zx) - base(Family::yx) -
            base(Family::zy) - base(Family::xz),
        model.area_C());
    add("chain_fiber_minus_C",
        base(Family::xx) + base(Family::yy) + base(Family::zz) - base(Family::yx) -
            base(Family::zy) - base(Family::xz),
        Rat(1) - model.area_C());
    for (int i = 0; i < model.k(); ++i) {
        const std::string si = "[" + std::to_string(i) + "]";
        add("chain_zero" + si,
            Rat(2) * base(Family::zbar, i) + base(Family::xy) + base(Family::zz) -
                base(Family::xbar, i) - base(Family::ybar, i) - base(Family::zy) -
                base(Family::xz),
            Rat(0));
        add("chain_Ci" + si,
            Rat(2) * base(Family::xbar, i) + base(Family::yz) + base(Family::xx) -
                base(Family::ybar, i) - base(Family::zbar, i) - base(Family::xz) -
                base(Family::yx),
            model.area_Ci(i));
        add("chain_fiber_minus_Ci" + si,
            Rat(2) * base(Family::ybar, i) + base(Family::zx) + base(Family::yy) -
                base(Family::zbar, i) - base(Family::xbar, i) - base(Family::yx) -
                base(Family::zy),
            Rat(1) - model.area_Ci(i));
    }
    for (int i = 0; i < model.k(); ++i) {
        for (int j = i + 1; j < model.k(); ++j) {
            const std::string sij = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
            const Rat delta = model.area_Delta(i, j);
            add("chain_delta_yz" + sij,
                base(Family::ybar, i) + base(Family::zbar, j) - base(Family::ybar, j) -
                    base(Family::zbar, i),
                delta);
            add("chain_delta_zx" + sij,
                base(Family::zbar, i) + base(Family::xbar, j) - base(Family::zbar, j) -
                    base(Family::xbar, i),
                delta);
            add("chain_delta_xy" + sij,
                base(Family::xbar, i) + base(Family::ybar, j) - base(Family::xbar, j) -
                    base(Family::ybar, i),
                Rat(-2) * delta);
        }
    }

    // Intersection counts against the homology pairing.
    bool counts_ok = true;
    const auto classes = vanishing_cycle_classes(model.k());
    for (size_t i = 0; i < classes.size(); ++i)
        for (size_t j = i + 1; j < classes.size(); ++j)
            if (model.intersection_count(static_cast<int>(i), static_cast<int>(j)) !=
                std::abs(intersection_number(classes[i], classes[j])))
                counts_ok = false;
    rep.checks.push_back({"intersection_counts", counts_ok, Rat(0), Rat(0)});

    rep.pass = true;
    for (const ChainCheck& c : rep.checks)
        if (!c.ok) rep.pass = false;
    return rep;
}

}  // namespace hms::oracle
