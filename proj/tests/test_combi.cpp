#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ehk/characters.h"
#include "ehk/errors.h"
#include "ehk/parse.h"
#include "ehk/partition.h"

#include <algorithm>

using namespace ehk;

namespace {

const Context* QT = Context::qt();

FieldElement fe(const std::string& s) { return parse_field(s, QT); }

LaurentPoly lp(const std::string& s) {
    FieldElement f = parse_field(s, QT);
    if (!f.den().is_one()) throw DomainError("not a polynomial: " + s);
    return f.num();
}

} // namespace

TEST_CASE("partition basics") {
    CHECK(is_partition({}));
    CHECK(is_partition({3, 1}));
    CHECK(!is_partition({1, 3}));
    CHECK(!is_partition({2, 0}));

    CHECK(p_weight({3, 2, 1}) == 6);
    CHECK(p_conjugate({3, 1}) == Partition{2, 1, 1});
    CHECK(p_conjugate({}) == Partition{});
    CHECK(p_nstat({2, 1}) == 1);
    CHECK(p_contains({3, 2}, {2, 2}));
    CHECK(!p_contains({3, 1}, {2, 2}));
    CHECK(p_dominates({3, 1}, {2, 2}));
    CHECK(!p_dominates({2, 2}, {3, 1}));

    CHECK(p_arm({10, 9, 9, 9, 6, 3, 3}, 3, 4) == 5);
    CHECK(p_leg({10, 9, 9, 9, 6, 3, 3}, 3, 4) == 2);
    CHECK(p_arm({1}, 1, 1) == 0);
    CHECK(p_leg({1}, 1, 1) == 0);
    CHECK(p_arm({}, 1, 1) == -1);
    CHECK(p_leg({}, 1, 1) == -1);

    CHECK(p_addable({1}) == std::vector<Cell>{{2, 1}, {1, 2}});
    CHECK(p_removable({1}) == std::vector<Cell>{{1, 1}});
    CHECK(p_removable({2, 1}) == std::vector<Cell>{{2, 1}, {1, 2}});
    CHECK(p_addable({2, 1}) == std::vector<Cell>{{3, 1}, {2, 2}, {1, 3}});

    CHECK(p_add_cell({1}, {1, 2}) == Partition{2});
    CHECK(p_remove_cell({2, 1}, {2, 1}) == Partition{2});
    CHECK_THROWS_AS(p_add_cell({1}, {1, 3}), DomainError);
    CHECK(p_cell_diff({2, 1}, {1, 1}) == Cell{1, 2});
    CHECK(p_skew_cells({2, 2}, {1}).size() == 3);

    CHECK(partitions_of(0) == std::vector<Partition>{{}});
    CHECK(partitions_of(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
    CHECK(partitions_of(6).size() == 11);
    CHECK(partitions_of(8).size() == 22);

    CHECK(parse_partition("(2,1)") == Partition{2, 1});
    CHECK(parse_partition("[3]") == Partition{3});
    CHECK(parse_partition("") == Partition{});
    CHECK(parse_partition("()") == Partition{});
    CHECK_THROWS_AS(parse_partition("(1,2)"), ParseError);
    CHECK(p_to_string({2, 1}) == "(2,1)");

    CHECK(multipartitions_of(2, 2).size() == 5);
    CHECK(mp_weight({{2, 1}, {1}}) == 4);
}

TEST_CASE("box statistics") {
    CHECK(b_stat({2, 1}, 1) == lp("1 + q + t"));
    CHECK(b_stat({1}, 5) == lp("1"));
    CHECK(b_stat({2}, -1) == lp("1 + t^(-1)"));
    CHECK(b_stat({2}, 1) == lp("1 + t"));
    CHECK(b_stat({1, 1}, 1) == lp("1 + q"));
    CHECK(b_stat({}, 3) == lp("0"));
}

TEST_CASE("characters") {
    CHECK(tangent_char({1}) == lp("q^(-1) + t^(-1)"));
    CHECK(tangent_char({2}) == lp("q^(-2) + q*t^(-1) + q^(-1) + t^(-1)"));
    CHECK(tangent_char({}) == lp("0"));

    CHECK(taut_char({2, 1}) == lp("1 + t + q"));
    CHECK(taut_char({1}) == lp("1"));
    CHECK(taut_char({2}) == lp("1 + t"));

    CHECK(normal_char({1}, {2}) == lp("q^(-2) + t^(-1)"));
    CHECK(normal_char({}, {1}) == lp("0"));
    CHECK(normal_char({1}, {1, 1}) == lp("q^(-1) + t^(-2)"));
    CHECK_THROWS_AS(normal_char({2}, {1}), DomainError);

    CHECK(lambda_T_star({1}) == fe("(1 - q)*(1 - t)"));
    CHECK(lambda_N_star({1}, {2}) == fe("(1 - q^2)*(1 - t)"));
    CHECK(lambda_N_star({}, {1}) == fe("1"));

    // The hook products match the lambda operation on the dual characters.
    for (int n = 0; n <= 4; ++n) {
        for (const Partition& lam : partitions_of(n)) {
            CHECK(lambda_T_star(lam) == lambda_of(char_dual(tangent_char(lam))));
            for (const Partition& mu : partitions_of(n == 0 ? 0 : n - 1)) {
                if (!p_contains(lam, mu) || n == 0) continue;
                CHECK(lambda_N_star(mu, lam) == lambda_of(char_dual(normal_char(mu, lam))));
            }
        }
    }

    CHECK(virtual_char({1}, {}) == lp("q*t"));
    CHECK(virtual_char({2}, {1}) == lp("t + q^2 + q*t"));
    CHECK(virtual_char({1, 1}, {1}) == lp("t^2 + q + q*t"));
}

TEST_CASE("eigenvalue frames") {
    GTFrame f1 = garsia_tesler({1});
    REQUIRE(f1.x.size() == 1);
    REQUIRE(f1.u.size() == 2);
    CHECK(f1.x[0] == fe("1"));
    CHECK(f1.u[0] == fe("q^(-1)"));
    CHECK(f1.u[1] == fe("t^(-1)"));

    GTFrame f2 = garsia_tesler({2});
    CHECK(f2.x[0] == fe("t"));
    CHECK(f2.u[0] == fe("t*q^(-1)"));
    CHECK(f2.u[1] == fe("t^(-1)"));

    // Removable-box monomials are the x's; addable-box monomials are qt*u.
    for (int n = 0; n <= 6; ++n) {
        for (const Partition& lam : partitions_of(n)) {
            GTFrame f = garsia_tesler(lam);
            std::vector<Cell> rem = p_removable(lam);
            std::vector<Cell> add = p_addable(lam);
            REQUIRE(f.x.size() == rem.size());
            REQUIRE(f.u.size() == add.size());
            for (const Cell& s : rem) {
                FieldElement m(box_monomial(s));
                CHECK(std::count(f.x.begin(), f.x.end(), m) == 1);
            }
            FieldElement qt = fe("q*t");
            for (const Cell& s : add) {
                FieldElement m(box_monomial(s));
                bool found = false;
                for (const FieldElement& u : f.u)
                    if (u * qt == m) found = true;
                CHECK(found);
            }
        }
    }
}
