#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "reduxalg/presented.hpp"

using namespace reduxalg;

namespace {

pring_ptr fxa() { return make_ring({"x", "y"}, {1, 1}, {"x^2", "x*y", "y^2"}, field(32003)); }
pring_ptr fxb() { return make_ring({"x", "y"}, {1, 1}, {"x^2", "y^2"}, field(32003)); }
pring_ptr sb() { return make_ring({"x", "y"}, {1, 1}, {"x^2"}, field(32003)); }
pring_ptr fxc() { return make_ring({"x", "y", "z"}, {4, 6, 7}, {"x^3 - y^2", "z^2 - x^2*y"}, field(32003)); }
pring_ptr fxf() {
    return make_ring({"x", "y", "z"}, {3, 7, 8}, {"x^5 - y*z", "y^2 - z*x^2", "z^2 - x^3*y"}, field(32003));
}

poly pp(const pring_ptr& R, const std::string& s) { return parse_poly(R->ambient(), s); }

}  // namespace

TEST_CASE("make_ring: radical-square-zero ring has the expected basis") {
    pring_ptr R = fxa();
    std::multiset<std::string> basis;
    for (const auto& g : R->ideal_basis()) basis.insert(g.str());
    CHECK(basis == std::multiset<std::string>{"x^2", "x*y", "y^2"});
}

TEST_CASE("make_ring: homogeneity is decided by the weights") {
    CHECK_NOTHROW(fxc());
    CHECK_THROWS_WITH_AS(make_ring({"x", "y", "z"}, {1, 1, 1}, {"x^3 - y^2", "z^2 - x^2*y"}, field(32003)),
                         doctest::Contains("inhomogeneous"), algebra_error);
    CHECK_THROWS_AS(make_ring({"x", "y"}, {1, 1}, {"x^2 - 1"}, field(32003)), algebra_error);
}

TEST_CASE("residue field, ideal module, free module") {
    pring_ptr R = fxa();
    presented_module k = residue_field(R);
    CHECK(k.ngens() == 1);
    CHECK(k.nrels() == 2);  // x and y; x^2, xy, y^2 already reduce to zero

    pring_ptr S = sb();
    presented_module n = ideal_module(S, {pp(S, "x"), pp(S, "y")});
    CHECK(n.ngens() == 2);
    // syzygies of {x, y} mod x^2: the Koszul one and x*e_x
    CHECK(n.nrels() == 2);
    std::multiset<int> rel_degs;
    for (const auto& c : n.rels()) rel_degs.insert(*c.degree());
    CHECK(rel_degs == std::multiset<int>{2, 2});

    presented_module F = free_module(R, {0, 0});
    CHECK(F.ngens() == 2);
    CHECK(F.nrels() == 0);

    CHECK_THROWS_AS(ideal_module(S, {pp(S, "x^2")}), algebra_error);  // zero generator
}

TEST_CASE("hilbert function and length of small fixtures") {
    pring_ptr R = fxa();
    presented_module RR = cyclic_module(R, {});
    CHECK(RR.hilbert_function(0) == 1);
    CHECK(RR.hilbert_function(1) == 2);
    CHECK(RR.hilbert_function(2) == 0);
    CHECK(module_length(RR) == 3);

    pring_ptr B = fxb();
    CHECK(module_length(cyclic_module(B, {})) == 4);

    // FX-C: R/I with I=(x,y) has length 2, R/(x) has length 4
    pring_ptr C = fxc();
    CHECK(module_length(cyclic_module(C, {pp(C, "x"), pp(C, "y")})) == 2);
    CHECK(module_length(cyclic_module(C, {pp(C, "x")})) == 4);
}

TEST_CASE("minimal presentation prunes unit relations") {
    pring_ptr R = fxa();
    // coker [1, x]: the unit relation collapses everything
    presented_module junk = cyclic_module(R, {pp(R, "1"), pp(R, "x")});
    presented_module m = minimal_presentation(junk);
    CHECK(m.ngens() == 0);
    CHECK(m.is_zero());

    // free module is untouched
    presented_module F = free_module(R, {0, 1});
    CHECK(presentations_identical(minimal_presentation(F), F));

    // the maximal ideal of S presented with a redundant generator
    pring_ptr S = sb();
    presented_module n3 = ideal_module(S, {pp(S, "x"), pp(S, "y"), pp(S, "x*y")});
    minimalize_data md = minimalize(n3);
    CHECK(md.m.ngens() == 2);
    CHECK(md.m.entries_in_max_ideal());
    // Hilbert function is preserved
    for (int d = 0; d <= 6; ++d) CHECK(md.m.hilbert_function(d) == n3.hilbert_function(d));
    // idempotent
    CHECK(presentations_identical(minimal_presentation(md.m), md.m));
}

TEST_CASE("syzygies of the residue field") {
    pring_ptr R = fxa();
    presented_module k = residue_field(R);
    presented_module o1 = syzygy_module(k);
    // the maximal ideal of FX-A is isomorphic to k^2
    CHECK(o1.ngens() == 2);
    CHECK(o1.shifts() == std::vector<int>{1, 1});
    CHECK(o1.nrels() == 4);  // x,y kill both generators
    CHECK(module_length(o1) == 2);
    presented_module o2 = nth_syzygy(k, 2);
    CHECK(o2.ngens() == 4);

    presented_module F = free_module(R, {0, 2});
    CHECK(syzygy_module(F).ngens() == 0);

    pring_ptr B = fxb();
    presented_module okb = syzygy_module(residue_field(B));
    CHECK(okb.ngens() == 2);
}

TEST_CASE("composite of presentation maps is zero") {
    // relation columns of a minimal syzygy evaluate to zero in the module
    pring_ptr B = fxb();
    presented_module k = residue_field(B);
    presented_module o = syzygy_module(k);
    // each relation of o, applied to o's generators (= relation columns
    // of k), must land in the relation submodule of k
    for (const auto& rel : o.rels()) {
        free_vec acc(k.cover());
        for (int i = 0; i < o.ngens(); ++i) acc = acc.add(k.rels()[static_cast<std::size_t>(i)].poly_mul(rel.at(i)));
        CHECK(k.rel_gb().contains(acc));
    }
}

TEST_CASE("direct sums, powers, twists") {
    pring_ptr R = fxa();
    presented_module k = residue_field(R);
    presented_module z = zero_module(R);
    CHECK(presentations_identical(direct_sum(k, z), k));
    presented_module k2 = power_module(k, 2);
    CHECK(k2.ngens() == 2);
    CHECK(module_length(k2) == 2);
    presented_module kt = twist(k, -3);
    CHECK(kt.shifts() == std::vector<int>{3});
    CHECK(kt.hilbert_function(3) == 1);
    CHECK(kt.hilbert_function(0) == 0);
}

TEST_CASE("tensor products") {
    pring_ptr R = fxa();
    presented_module k = residue_field(R);
    presented_module kk = minimal_presentation(tensor(k, k));
    CHECK(kk.ngens() == 1);
    CHECK(module_length(kk) == 1);

    // N (x) R/q over FX-F: N = (y, z, x^4), q = (x): three residue classes
    pring_ptr F = fxf();
    presented_module N = ideal_module(F, {pp(F, "y"), pp(F, "z"), pp(F, "x^4")});
    presented_module NQ = minimal_presentation(tensor_ring_quotient(N, {pp(F, "x")}));
    CHECK(NQ.ngens() == 3);
    CHECK(module_length(NQ) == 3);
    std::multiset<int> degs(NQ.shifts().begin(), NQ.shifts().end());
    CHECK(degs == std::multiset<int>{7, 8, 12});
}

TEST_CASE("ring changes") {
    pring_ptr S = sb();
    pring_ptr R = quotient_ring(S, {pp(S, "y^2")});
    presented_module nS = ideal_module(S, {pp(S, "x"), pp(S, "y")});
    presented_module nR = to_ring(nS, R);
    CHECK(nR.ring().get() == R.get());
    CHECK(nR.ngens() == 2);
    // back up along the surjection
    presented_module back = restrict_scalars(nR, S);
    CHECK(back.ring().get() == S.get());
    // y^2 now kills both generators
    CHECK(back.hilbert_function(3) < nS.hilbert_function(3) + 1);

    pring_ptr other = make_ring({"a", "b"}, {1, 1}, {"a^2"}, field(32003));
    CHECK_THROWS_AS(to_ring(nS, other), algebra_error);
}

TEST_CASE("syzygy ignores free summands") {
    pring_ptr R = fxa();
    presented_module k = residue_field(R);
    presented_module kf = direct_sum(k, free_module(R, {0}));
    presented_module a = syzygy_module(k);
    presented_module b = syzygy_module(kf);
    CHECK(a.shifts() == b.shifts());
    CHECK(a.nrels() == b.nrels());
    for (int d = 0; d <= 4; ++d) CHECK(a.hilbert_function(d) == b.hilbert_function(d));
}
