#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"

#include "k3/cyclotomic.hpp"
#include "k3/errors.hpp"
#include "k3/obstruction.hpp"
#include "k3/padic.hpp"

using namespace k3;

namespace {

const IntPoly Xm1{-1, 1};
const IntPoly Xp1{1, 1};
const IntPoly lehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};

struct CycloProduct {
    int m_plus = 0, m_minus = 0;
    std::map<uint64_t, int> parts;  // n >= 3 -> multiplicity
    IntPoly poly() const {
        IntPoly f = pow(Xm1, m_plus) * pow(Xp1, m_minus);
        for (auto [n, m] : parts) f *= pow(cyclotomic(n), m);
        return f;
    }
};

// Random even-degree cyclotomic products satisfying (Square) with m_+- != 1.
std::vector<CycloProduct> cyclo_corpus(std::size_t count, uint64_t seed, int max_deg) {
    const std::vector<uint64_t> pool{3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 16, 18, 20, 24, 30};
    std::mt19937_64 rng(seed);
    std::vector<CycloProduct> out;
    while (out.size() < count) {
        CycloProduct c;
        int par = rng() % 2;
        const int choices[2][3] = {{0, 2, 4}, {3, 3, 5}};
        c.m_plus = choices[par][rng() % 3];
        c.m_minus = choices[par][rng() % 3];
        int k = 1 + rng() % 3;
        for (int i = 0; i < k; ++i) c.parts[pool[rng() % pool.size()]] += 1 + (rng() % 4 == 0);
        IntPoly f = c.poly();
        if (f.degree() > max_deg || f.degree() % 2) continue;
        if (!check_square(f).holds) continue;
        out.push_back(c);
    }
    return out;
}

// Partition of I(F;Q) for a cyclotomic product from the closed-form rules.
std::vector<std::vector<std::size_t>> cyclo_partition(const CycloProduct& c, int i_plus, int i_minus) {
    std::vector<uint64_t> idx;  // 1 for X - 1, 2 for X + 1, else n
    if (c.m_plus) idx.push_back(1);
    if (c.m_minus) idx.push_back(2);
    for (auto [n, m] : c.parts) idx.push_back(n);
    IntPoly f12 = IntPoly::constant(1);
    for (auto [n, m] : c.parts) f12 *= pow(cyclotomic(n), m);
    auto side_open = [&](int m, int i, const Int& at, uint64_t p) {
        if (m >= 3) return true;
        if (m != 2) return false;
        Rat d(abs(at));
        if (((m - i) / 2) % 2) d = -d;
        return !class_eq(d, Rat(-1), p);
    };
    std::size_t n = idx.size();
    std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            uint64_t x = idx[a], y = idx[b];
            bool rel = false;
            if (x == 1 && y == 2) {
                rel = side_open(c.m_plus, i_plus, f12.eval(Int(1)), 2) && side_open(c.m_minus, i_minus, f12.eval(Int(-1)), 2);
            } else if (x <= 2) {
                bool plus = x == 1;
                Int v = cyclotomic(y).eval(Int(plus ? 1 : -1));
                for (uint64_t p = 2; p < 64; ++p) {
                    if (!is_prime_u64(p) || v % p != 0) continue;
                    bool open = plus ? side_open(c.m_plus, i_plus, f12.eval(Int(1)), p)
                                     : side_open(c.m_minus, i_minus, f12.eval(Int(-1)), p);
                    if (open && cyclo_symbol_set(y, p).contains(reduce_mod_p(plus ? Xm1 : Xp1, p))) rel = true;
                }
            } else {
                rel = !pi_cyclo(x, y).empty();
            }
            adj[a][b] = adj[b][a] = rel;
        }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (adj[a][k] && adj[k][b]) adj[a][b] = 1;
    std::vector<std::vector<std::size_t>> parts;
    std::vector<bool> seen(n, false);
    for (std::size_t a = 0; a < n; ++a) {
        if (seen[a]) continue;
        std::vector<std::size_t> cls{a};
        seen[a] = true;
        for (std::size_t b = a + 1; b < n; ++b)
            if (adj[a][b]) {
                cls.push_back(b);
                seen[b] = true;
            }
        parts.push_back(cls);
    }
    return parts;
}

int mod4(int v) { return ((v % 4) + 4) % 4; }

}  // namespace

TEST_CASE("check_square") {
    CHECK_FALSE(check_square(cyclotomic(13)).holds);
    CHECK(check_square(cyclotomic(13)).failing == "|F(1)|");
    CHECK(check_square(cyclotomic(13)).value == 13);
    CHECK(check_square(cyclotomic(20)).holds);
    IntPoly g{-1, 2, 1}, gs{-1, -2, 1};
    CHECK(star(g) == RatPoly(gs));
    CHECK(check_square(g * gs).holds);
    CHECK(check_square(pow(Xm1, 4) * cyclotomic(12)).holds);
    CHECK_THROWS_AS(check_square(Xm1), DomainError);
}

TEST_CASE("check_square multiplicativity on cyclotomic products") {
    std::mt19937_64 rng(7);
    const std::vector<uint64_t> pool{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 18, 20};
    int checked = 0;
    for (int t = 0; t < 400; ++t) {
        IntPoly f = IntPoly::constant(1), g = IntPoly::constant(1);
        for (int i = 0; i < 3; ++i) f *= cyclotomic(pool[rng() % pool.size()]);
        for (int i = 0; i < 3; ++i) g *= cyclotomic(pool[rng() % pool.size()]);
        if (f.degree() % 2 || g.degree() % 2) continue;
        bool sf = check_square(f).holds, sg = check_square(g).holds, sfg = check_square(f * g).holds;
        if (sf && sg) CHECK(sfg);
        if (sfg && sg && g.eval(Int(1)) * g.eval(Int(-1)) != 0) CHECK(sf);
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("check_sign") {
    CHECK_THROWS_AS(check_sign(lehmer, 3, 19), DomainError);
    CHECK(check_sign(lehmer, 1, 9));
    CHECK_FALSE(check_sign(lehmer, 0, 10));
    CHECK_FALSE(check_sign(lehmer, 2, 8));
    CHECK(check_sign(cyclotomic(12), 0, 4));
    CHECK_FALSE(check_sign(cyclotomic(12), 1, 3));
    CHECK(check_sign(pow(Xm1, 2) * cyclotomic(12), 1, 5));
}

TEST_CASE("enumerate_index_maps") {
    auto a = enumerate_index_maps(cyclotomic(12), 4, 0);
    REQUIRE(a.size() == 1);
    CHECK(a[0].per_factor[0] == std::vector<int>{2, 2});
    auto b = enumerate_index_maps(cyclotomic(12), 2, 2);
    REQUIRE(b.size() == 2);
    CHECK(b[0].per_factor[0] == std::vector<int>{-2, 2});
    CHECK(b[1].per_factor[0] == std::vector<int>{2, -2});
    auto c = enumerate_index_maps(lehmer, 1, 9);
    REQUIRE(c.size() == 1);
    CHECK(c[0].per_factor[0] == std::vector<int>{-2, -2, -2, -2});
    CHECK_THROWS_AS(enumerate_index_maps(lehmer, 3, 19), DomainError);
    CHECK(enumerate_index_maps(lehmer, 0, 10).empty());
    CHECK(enumerate_index_maps(cyclotomic(12), 2, 2, 1).size() == 1);
    auto d = enumerate_index_maps(pow(Xm1, 4) * cyclotomic(12), 8, 0);
    REQUIRE(d.size() == 1);
    CHECK(d[0].i_plus == 4);
    for (auto& m : b) CHECK_NOTHROW(validate_index(cyclotomic(12), m));
}

TEST_CASE("index congruence over full enumeration up to degree 12") {
    // Every even-degree *-symmetric cyclotomic product of degree <= 12 with (Square).
    std::vector<uint64_t> pool;
    for (uint64_t n = 1; n <= 42; ++n)
        if (totient(n) <= 12) pool.push_back(n);
    std::size_t polys = 0, maps = 0;
    std::vector<uint64_t> cur;
    auto rec = [&](auto&& self, std::size_t start, IntPoly f) -> void {
        if (f.degree() > 0 && f.degree() % 2 == 0 && check_square(f).holds) {
            Analysis a = analyze(f);
            int e = a.circle.eF12;
            for (int r = 0; r <= f.degree(); ++r) {
                int s = f.degree() - r;
                if ((r - s) % 8) continue;
                for (auto& m : enumerate_index_maps(f, r, s)) {
                    CHECK(mod4(m.i_plus + m.i_minus - (1 - e)) == 0);
                    ++maps;
                }
            }
            ++polys;
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
            IntPoly g = f * cyclotomic(pool[i]);
            if (g.degree() <= 12) self(self, i, g);
        }
    };
    rec(rec, 0, IntPoly::constant(1));
    CHECK(polys > 100);
    CHECK(maps > 1000);
}

TEST_CASE("enumeration is empty exactly when (Sign) fails") {
    for (auto& c : cyclo_corpus(40, 11, 14)) {
        IntPoly f = c.poly();
        for (int r = 0; r <= f.degree(); ++r)
            CHECK(enumerate_index_maps(f, r, f.degree() - r, 1).empty() == !check_sign(f, r, f.degree() - r));
    }
    for (int r = 0; r <= 10; ++r) CHECK(enumerate_index_maps(lehmer, r, 10 - r, 1).empty() == !check_sign(lehmer, r, 10 - r));
}

TEST_CASE("delta and primed symbol sets") {
    IntPoly f = pow(Xm1, 4) * cyclotomic(12);
    auto d = delta(f, 0, 0);
    CHECK(d.delta_plus == 1);
    CHECK(d.delta_minus == 1);
    CHECK(delta(f, 2, 0).delta_plus == -1);
    CHECK_THROWS_AS(delta(f, 1, 0), DomainError);
    CHECK(delta(cyclotomic(12) * cyclotomic(3) * cyclotomic(6), 0, 0).delta_plus == 3);
    // odd m_+ doubles both sides
    IntPoly g = pow(Xm1, 3) * pow(Xp1, 3) * cyclotomic(3);
    CHECK(delta(g, 1, 1).delta_plus == Rat(-6));
    CHECK(delta(g, 3, 3).delta_minus == Rat(2));
    for (uint64_t p : {2, 3, 5, 7}) {
        CHECK(primed_symbol_set(f, 0, 0, Side::plus, p).members == std::vector<ModPoly>{reduce_mod_p(Xm1, p)});
        CHECK_THROWS_AS(primed_symbol_set(f, 0, 0, Side::minus, p), DomainError);
    }
    IntPoly h = Xm1 * Xp1 * cyclotomic(12);
    for (uint64_t p : {2, 3, 5}) CHECK(primed_symbol_set(h, 1, 1, Side::plus, p).empty());
    // m_+ = 2 and delta_+ = -|Phi_12(1)| = -1 in every Q_p
    IntPoly k = pow(Xm1, 2) * pow(Xp1, 2) * cyclotomic(12);
    for (uint64_t p : {2, 3, 5, 7, 11}) CHECK(primed_symbol_set(k, 0, 0, Side::plus, p).empty());
    // delta_+ = 1 at (2,2): -1 is a square in Q_5 only
    for (uint64_t p : {2, 3, 7, 11}) CHECK_FALSE(primed_symbol_set(k, 2, 2, Side::plus, p).empty());
    CHECK(primed_symbol_set(k, 2, 2, Side::plus, 5).empty());
    // m_+ = 2, delta_+ = -3
    IntPoly q = pow(Xm1, 2) * pow(Xp1, 2) * cyclotomic(3) * cyclotomic(6);
    CHECK(delta(q, 0, 0).delta_plus == -3);
    CHECK(primed_symbol_set(q, 0, 0, Side::plus, 2).empty() == class_eq(Rat(-3), Rat(-1), 2));
    CHECK(primed_symbol_set(q, 0, 0, Side::plus, 3).empty() == class_eq(Rat(-3), Rat(-1), 3));
    CHECK_FALSE(primed_symbol_set(q, 0, 0, Side::plus, 7).empty());
    CHECK(primed_symbol_set(q, 0, 0, Side::plus, 13).empty());
}

TEST_CASE("equivalence classes") {
    auto a = equivalence_classes(pow(Xm1, 4) * cyclotomic(12), 0, 0);
    REQUIRE(a.elements.size() == 2);
    CHECK(a.elements[0] == Xm1);
    CHECK(a.classes.size() == 2);
    CHECK(a.edges.empty());

    auto b = equivalence_classes(pow(Xm1, 3) * pow(Xp1, 3), 1, 1);
    REQUIRE(b.classes.size() == 1);
    REQUIRE(b.edges.size() == 1);
    CHECK(b.edges[0].p == 2);

    IntPoly f = cyclotomic(3) * cyclotomic(6) * cyclotomic(9) * cyclotomic(18);
    auto c = equivalence_classes(f, 0, 0);
    CHECK(c.classes.size() == 1);
    bool found = false;
    for (auto& e : c.edges)
        if (c.elements[e.a] == cyclotomic(6) && c.elements[e.b] == cyclotomic(3)) {
            found = true;
            CHECK(e.p == 2);
        }
    CHECK(found);
    CHECK_THROWS_AS(equivalence_classes(cyclotomic(13), 0, 0), DomainError);

    // separate J+ and J- at (0,0), joined at (2,2)
    IntPoly k = pow(Xm1, 2) * pow(Xp1, 2) * cyclotomic(12);
    CHECK(equivalence_classes(k, 0, 0).classes.size() == 3);
    CHECK(equivalence_classes(k, 2, 2).classes.size() == 2);
}

TEST_CASE("equivalence classes agree with the cyclotomic closed forms") {
    for (auto& c : cyclo_corpus(60, 5, 28)) {
        IntPoly f = c.poly();
        for (int ip : {0, 1, 2}) {
            for (int im : {0, 1, 2}) {
                if ((ip - c.m_plus) % 2 || (im - c.m_minus) % 2) continue;
                if (c.m_plus == 0 && ip) continue;
                if (c.m_minus == 0 && im) continue;
                auto eq = equivalence_classes(f, ip, im);
                CHECK(eq.classes == cyclo_partition(c, ip, im));
                for (auto& e : eq.edges) CHECK(eq.class_of[e.a] == eq.class_of[e.b]);
            }
        }
    }
}

TEST_CASE("eta_infinity") {
    IntPoly f = pow(Xm1, 4) * cyclotomic(12);
    IndexMap top{4, 0, {{2, 2}}, 8, 0};
    CHECK(eta_infinity(f, top) == std::vector<int>{0, 0});
    IndexMap mid{0, 0, {{2, -2}}, 4, 4};
    CHECK(eta_infinity(f, mid) == std::vector<int>{1, 1});
    IndexMap bad{4, 0, {{2, 0}}, 8, 0};
    CHECK_THROWS_AS(eta_infinity(f, bad), DomainError);
    // a degree-2 factor of multiplicity 1 at value 2
    CHECK(eta_infinity(cyclotomic(3), IndexMap{0, 0, {{2}}, 2, 0}) == std::vector<int>{0});
}

TEST_CASE("construct_vanishing_index") {
    IntPoly f = pow(Xm1, 4) * cyclotomic(12);
    auto v = construct_vanishing_index(f, 0, 0);
    CHECK(v.map.i_plus == 0);
    CHECK(v.map.r == 4);
    CHECK(v.map.s == 4);
    CHECK(v.map.per_factor[0][0] + v.map.per_factor[0][1] == 0);
    CHECK(v.vanishing_guaranteed);

    CHECK_THROWS_AS(construct_vanishing_index(f, 2, 0), DomainError);
    CHECK_THROWS_AS(construct_vanishing_index(Xm1 * Xp1 * cyclotomic(12), 1, 1), Unsupported);
    CHECK_THROWS_AS(construct_vanishing_index(cyclotomic(13), 0, 0), DomainError);

    auto w = construct_vanishing_index(lehmer * lehmer, 0, 0);
    CHECK_NOTHROW(validate_index(lehmer * lehmer, w.map));

    IntPoly k = pow(Xm1, 2) * pow(Xp1, 2) * cyclotomic(12);
    auto s = construct_vanishing_index(k, 0, 0);
    CHECK(s.route == "X - 1 and X + 1 in separate classes");
    auto t = construct_vanishing_index(k, 2, 2);
    CHECK(t.route == "X - 1 and X + 1 in one class");
    CHECK(mod4(t.map.i_plus) == 2);
    CHECK(mod4(t.map.i_minus) == 2);

    auto u = construct_vanishing_index(pow(Xm1, 6) * pow(Xp1, 4) * cyclotomic(12), 2, 2);
    CHECK(u.route.find("remainder") != std::string::npos);
}

TEST_CASE("construction over a cyclotomic corpus") {
    for (auto& c : cyclo_corpus(80, 3, 30)) {
        IntPoly f = c.poly();
        Analysis a = analyze(f);
        int e = a.circle.eF12;
        for (int ip = -c.m_plus; ip <= c.m_plus; ip += 2)
            for (int im = -c.m_minus; im <= c.m_minus; im += 2) {
                if (mod4(ip + im - (1 - e))) continue;
                for (uint64_t seed : {0ull, 1ull, 99ull}) {
                    auto v = construct_vanishing_index(f, ip, im, seed);
                    CHECK(mod4(v.map.i_plus - ip) == 0);
                    CHECK(mod4(v.map.i_minus - im) == 0);
                    CHECK(v.map.r == f.degree() / 2);
                }
            }
    }
}

TEST_CASE("obstruction map on the worked example") {
    IntPoly f = pow(Xm1, 4) * cyclotomic(12);
    auto maps = enumerate_index_maps(f, 8, 0);
    REQUIRE(maps.size() == 1);
    auto top = obstruction_map(f, maps[0]);
    REQUIRE(top.eq.classes.size() == 2);
    CHECK(top.eq.elements[top.eq.classes[0][0]] == Xm1);
    CHECK(top.values[0] == 1);
    CHECK_FALSE(top.vanishes);
    CHECK(top.reduced_rank == 1);

    // t' = t_f + id on the (2,2) part: X - 1 at 0, the pairs of Phi_12 at +2 and -2
    IndexMap tp{0, 0, {{2, -2}}, 4, 4};
    auto mid = obstruction_map(f, tp);
    CHECK(mid.vanishes);
    CHECK(mid.values == std::vector<int>{0, 0});

    CHECK_THROWS_AS(obstruction_map(f, IndexMap{2, 0, {{2, -2}}, 6, 2}), DomainError);
    CHECK_THROWS_AS(obstruction_map(Xm1 * Xp1 * cyclotomic(12), IndexMap{1, 1, {{2, 2}}, 6, 0}), DomainError);
    CHECK_THROWS_AS(obstruction_map(Xm1 * Xp1 * pow(cyclotomic(12), 2) * cyclotomic(3), IndexMap{1, 1, {{2}, {4, 0}}, 10, 2}),
                    Unsupported);
}

TEST_CASE("single class vanishes") {
    IntPoly f = lehmer * lehmer;
    for (auto& m : enumerate_index_maps(f, 10, 10, 5)) {
        auto rep = obstruction_map(f, m);
        CHECK(rep.vanishes);
        CHECK(rep.reduced_rank == 0);
    }
    IntPoly g = cyclotomic(30);
    auto rep = obstruction_map(g, enumerate_index_maps(g, 8, 0)[0]);
    CHECK(rep.vanishes);
}

TEST_CASE("comparison self-consistency and zero sums") {
    std::size_t checked = 0;
    for (auto& c : cyclo_corpus(100, 17, 26)) {
        IntPoly f = c.poly();
        int n = f.degree() / 2;
        for (int r = n % 4; r <= f.degree(); r += 4) {
            int s = f.degree() - r;
            if ((r - s) % 8) continue;
            for (auto& m : enumerate_index_maps(f, r, s, 3)) {
                auto rep = obstruction_map(f, m);
                int total = 0;
                for (int v : rep.values) total += v;
                CHECK(total % 2 == 0);
                CHECK(rep.vanishes == std::all_of(rep.values.begin(), rep.values.end(), [](int v) { return v == 0; }));
                auto j1 = construct_vanishing_index(f, m.i_plus, m.i_minus, 1).map;
                auto j2 = construct_vanishing_index(f, m.i_plus, m.i_minus, 2).map;
                auto e1 = eta_infinity(f, j1), e2 = eta_infinity(f, j2);
                for (auto& cls : rep.eq.classes) {
                    int x = 0;
                    for (auto i : cls) x ^= e1[i] ^ e2[i];
                    CHECK(x == 0);
                }
                ++checked;
            }
        }
    }
    CHECK(checked >= 100);
}
