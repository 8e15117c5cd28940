#include <doctest.h>

#include <random>

#include "copwin/capture.hpp"
#include "copwin/errors.hpp"
#include "copwin/generators.hpp"
#include "copwin/symbolic.hpp"
#include "testutil.hpp"

using copwin::add;
using copwin::eta_of_S;
using copwin::in_lambda_T;
using copwin::in_upsilon;
using copwin::Ordinal;
using copwin::parse_ordinal;
using copwin::rho_of_S;
using copwin::rho_polat_generalized;
using copwin::to_string;
using copwin::tree_rho_from_eta;

TEST_CASE("eta of the S family") {
    CHECK(eta_of_S(Ordinal(4)) == Ordinal(3));
    CHECK(eta_of_S(Ordinal(1)) == Ordinal(0));
    CHECK(eta_of_S(Ordinal::omega()) == Ordinal::omega());
    CHECK(eta_of_S(parse_ordinal("w+1")) == Ordinal::omega());
    CHECK(eta_of_S(parse_ordinal("w*2")) == parse_ordinal("w*2"));
    CHECK_THROWS_AS(eta_of_S(Ordinal(0)), copwin::domain_error);
}

TEST_CASE("rho of the S family") {
    CHECK(rho_of_S(Ordinal(4)) == Ordinal(5));
    CHECK(rho_of_S(Ordinal(1)) == Ordinal(0));
    CHECK(rho_of_S(Ordinal(2)) == Ordinal(1));
    CHECK(to_string(rho_of_S(parse_ordinal("w+1"))) == "w*2");
    CHECK(to_string(rho_of_S(parse_ordinal("w*2"))) == "w*3");
    CHECK_THROWS_AS(rho_of_S(Ordinal(0)), copwin::domain_error);
}

TEST_CASE("tomega family report") {
    auto report = copwin::tomega_report();
    REQUIRE(report.eta.has_value());
    CHECK(to_string(*report.eta) == "w");
    CHECK(to_string(report.rho) == "w*2");
    CHECK(add(*report.eta, Ordinal::omega()) == report.rho);
    CHECK_FALSE(report.theta_description.empty());
}

TEST_CASE("tomega per-vertex ordinals") {
    CHECK(copwin::eta_tomega_root() == Ordinal::omega());
    CHECK(copwin::eta_tomega_vertex(5, 1) == Ordinal::omega());
    CHECK(to_string(copwin::eta_tomega_vertex(5, 3)) == "w+2");
    CHECK_THROWS_AS(copwin::eta_tomega_vertex(3, 4), copwin::domain_error);
    CHECK_THROWS_AS(copwin::eta_tomega_vertex(3, 0), copwin::domain_error);
}

TEST_CASE("generalized Polat CR-ordinals") {
    CHECK(to_string(rho_polat_generalized(1, 1)) == "w+1");
    CHECK(to_string(rho_polat_generalized(3, 1)) == "w+3");
    CHECK(to_string(rho_polat_generalized(2, 3)) == "w*3+5");
    CHECK_THROWS_AS(rho_polat_generalized(0, 1), copwin::domain_error);
    CHECK_THROWS_AS(rho_polat_generalized(1, 0), copwin::domain_error);

    auto base = copwin::polat_report(1, 1);
    REQUIRE(base.eta.has_value());
    CHECK(*base.eta == Ordinal::omega());
    auto general = copwin::polat_report(2, 3);
    CHECK_FALSE(general.eta.has_value());
}

TEST_CASE("lambda_T membership") {
    CHECK(in_lambda_T(Ordinal(5)));
    CHECK(in_lambda_T(parse_ordinal("w*2")));
    CHECK_FALSE(in_lambda_T(Ordinal::omega()));
    CHECK_FALSE(in_lambda_T(parse_ordinal("w+1")));
    CHECK_FALSE(in_lambda_T(parse_ordinal("w^2")));
    CHECK(in_lambda_T(parse_ordinal("w^2+w")));
    CHECK(in_lambda_T(Ordinal(0)));
    CHECK_FALSE(in_lambda_T(parse_ordinal("w^2+w*3+1")));
    CHECK(in_lambda_T(parse_ordinal("w^2+w*3")));
}

TEST_CASE("upsilon membership") {
    CHECK(in_upsilon(parse_ordinal("w+1")));
    CHECK_FALSE(in_upsilon(Ordinal::omega()));
    CHECK_FALSE(in_upsilon(parse_ordinal("w*2+1")));
    CHECK(in_upsilon(parse_ordinal("w*2+3")));
    CHECK(in_upsilon(Ordinal(7)));
    CHECK(in_upsilon(parse_ordinal("w*2")));      // (w) + w with w a limit
    CHECK_FALSE(in_upsilon(parse_ordinal("w^2"))); // not w*i+k, not alpha+w
    CHECK(in_upsilon(parse_ordinal("w^2+w")));
}

TEST_CASE("lambda_T is contained in upsilon") {
    std::mt19937_64 rng(515151);
    for (int i = 0; i < 2000; ++i) {
        Ordinal a = testutil::random_ordinal(rng);
        if (in_lambda_T(a)) CHECK(in_upsilon(a));
    }
}

TEST_CASE("tree rho from eta") {
    CHECK(tree_rho_from_eta(Ordinal(3), true, 5) == Ordinal(5));
    CHECK(to_string(tree_rho_from_eta(Ordinal::omega(), false)) == "w*2");
    CHECK(to_string(tree_rho_from_eta(parse_ordinal("w^2+w"), false)) == "w^2+w*2");
    CHECK_THROWS_AS(tree_rho_from_eta(Ordinal::omega(), true, 5), copwin::domain_error);
    CHECK_THROWS_AS(tree_rho_from_eta(Ordinal(3), true, std::nullopt), copwin::domain_error);
    CHECK_THROWS_AS(tree_rho_from_eta(Ordinal(3), false), copwin::domain_error);
}

TEST_CASE("every infinite tree rho lands in lambda_T") {
    std::mt19937_64 rng(616161);
    for (int i = 0; i < 1000; ++i) {
        Ordinal eta = testutil::random_ordinal(rng);
        if (eta.is_finite()) eta = add(Ordinal::omega_pow(2), eta);
        CHECK(in_lambda_T(tree_rho_from_eta(eta, false)));
    }
}

TEST_CASE("rho_of_S agrees with the tree law") {
    std::mt19937_64 rng(717171);
    for (int i = 0; i < 500; ++i) {
        Ordinal alpha = copwin::successor(testutil::random_ordinal(rng));
        Ordinal eta = eta_of_S(alpha);
        if (eta.is_finite()) continue;
        CHECK(rho_of_S(alpha) == tree_rho_from_eta(eta, false));
    }
}

TEST_CASE("symbolic S values match the concrete engine") {
    for (int n = 1; n <= 9; ++n) {
        auto graph = copwin::make_s_tree(n + 1).graph;
        auto t = copwin::compute_capture_table(graph);
        Ordinal eta = eta_of_S(Ordinal(static_cast<std::uint64_t>(n) + 1));
        Ordinal rho = rho_of_S(Ordinal(static_cast<std::uint64_t>(n) + 1));
        REQUIRE(eta.is_finite());
        REQUIRE(rho.is_finite());
        CHECK(t.eta_of_graph() ==
              copwin::CaptureValue::finite(static_cast<std::int64_t>(eta.finite_value())));
        CHECK(t.rho() == static_cast<int>(rho.finite_value()));
        // finite branch of the tree law, with the engine-computed diameter
        CHECK(rho_of_S(Ordinal(static_cast<std::uint64_t>(n) + 1)) ==
              tree_rho_from_eta(eta, true, graph.diameter()));
    }
}

TEST_CASE("truncated tomega vertex values grow without bound") {
    // For j >= 2 the symbolic value of x{i}.{j} is infinite; on the finite
    // truncations its engine value must increase strictly with n.
    for (auto [i, j] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}}) {
        std::int64_t prev = -1;
        for (int n = i; n <= i + 4; ++n) {
            auto t = copwin::compute_capture_table(copwin::make_tomega(n));
            auto value =
                t.eta_of_vertex("x" + std::to_string(i) + "." + std::to_string(j));
            REQUIRE(!value.is_never());
            CHECK(value.value() > prev);
            prev = value.value();
        }
    }
}
