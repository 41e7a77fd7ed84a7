#include "doctest.h"

#include "whc/families.hpp"
#include "whc/graph_io.hpp"
#include "whc/isomorphism.hpp"

using whc::make_complete;
using whc::make_q;
using whc::make_r;
using whc::make_s;

TEST_CASE("complete graphs") {
    CHECK(make_complete(2, 2).edge_count() == 4);
    CHECK(make_complete(4, 3).edge_count() == 12);
    CHECK(make_complete(4, 3).degree_sequence().all == std::vector<int>{3, 3, 3, 3, 4, 4, 4});
    CHECK(make_complete(1, 1).edge_count() == 1);
    CHECK_THROWS_AS(make_complete(0, 3), std::invalid_argument);
}

TEST_CASE("Q family: edge formula and degree structure") {
    CHECK(make_q(5, 2).edge_count() == 22);
    CHECK(make_q(5, 3).edge_count() == 21);
    CHECK(make_q(4, 2).edge_count() == 14);

    // deleted-side degrees
    const auto q52 = make_q(5, 2);
    CHECK(q52.degree_x(0) == 2);          // t
    for (int j = 0; j < 3; ++j) CHECK(q52.degree_y(j) == 4); // n-t+1

    for (int n = 3; n <= 12; ++n)
        for (int t = 2; t <= whc::q_max_t(n); ++t)
            CHECK(make_q(n, t).edge_count() == n * (n - t + 1) + t * (t - 1));

    CHECK_THROWS_WITH_AS(make_q(5, 4), doctest::Contains("2 <= t <= (n+1)/2"),
                         std::invalid_argument);
    CHECK_THROWS_AS(make_q(5, 1), std::invalid_argument);
}

TEST_CASE("R family: edge formula and sigma") {
    CHECK(make_r(5, 2).edge_count() == 19);
    CHECK(make_r(4, 2).edge_count() == 12);
    CHECK(make_r(5, 2).sigma() == 6);

    for (int n = 3; n <= 10; ++n)
        for (int t = 2; t <= n - 1; ++t) {
            CHECK(make_r(n, t).edge_count() == t * t + (n - t + 1) * (n - t + 1) - 1);
            CHECK(make_r(n, t).sigma() == n + 1);
        }

    CHECK_THROWS_AS(make_r(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(make_r(3, 1), std::invalid_argument);
}

TEST_CASE("S family: one edge below R") {
    CHECK(make_s(5, 2).edge_count() == 18);
    CHECK(make_s(4, 3).edge_count() == 11);

    for (int n = 3; n <= 10; ++n)
        for (int t = 2; t <= n - 1; ++t) {
            const auto r = make_r(n, t);
            const auto s = make_s(n, t);
            CHECK(s.edge_count() == r.edge_count() - 1);
            CHECK(s.sigma() == n + 1);
            // labelled subgraph differing in exactly the cut edge
            CHECK_FALSE(s.has_edge(t - 1, t - 1));
            CHECK(r.has_edge(t - 1, t - 1));
            CHECK(s.with_edge(t - 1, t - 1) == r);
        }
}

TEST_CASE("constructors are canonical: byte-identical serialization") {
    const std::string first = whc::write_graph_text(make_q(4, 2));
    CHECK(first == whc::write_graph_text(make_q(4, 2)));
    CHECK(first ==
          "p bip 4 4\n"
          "e 1 3\ne 1 4\n"
          "e 2 1\ne 2 2\ne 2 3\ne 2 4\n"
          "e 3 1\ne 3 2\ne 3 3\ne 3 4\n"
          "e 4 1\ne 4 2\ne 4 3\ne 4 4\n");
}

TEST_CASE("mirrored block parameters give isomorphic R graphs") {
    CHECK(whc::is_isomorphic(make_r(4, 3), make_r(4, 2), false).has_value());
    CHECK(whc::is_isomorphic(make_s(5, 4), make_s(5, 2), false).has_value());
}
