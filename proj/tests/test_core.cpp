// Round trips and small algebraic identities for the value types. Every
// expected literal here is checkable by hand.

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

#include "greedylab/config.hpp"
#include "greedylab/index_set.hpp"
#include "greedylab/rational.hpp"
#include "greedylab/sign_pattern.hpp"
#include "greedylab/sparse_vector.hpp"
#include "greedylab/weights.hpp"

using namespace greedylab;

TEST_CASE("rational parse, normalize, print") {
    REQUIRE(rational::parse("3/4").str() == "3/4");
    REQUIRE(rational::parse("-6/8").str() == "-3/4");
    REQUIRE(rational::parse("2").str() == "2");
    REQUIRE(rational::parse("0/5").str() == "0");
    REQUIRE((rational(1, 2) + rational(1, 3)).str() == "5/6");
    REQUIRE((rational(1, 2) * rational(2, 3)).str() == "1/3");
    REQUIRE(rational(-1, 3) < rational(0));
    REQUIRE(abs(rational(-7, 2)) == rational(7, 2));
    REQUIRE_THROWS_AS(rational::parse("1/0"), std::domain_error);
    REQUIRE_THROWS_AS(rational::parse("x"), std::invalid_argument);
}

TEST_CASE("scalar_ops string forms per mode") {
    REQUIRE(scalar_ops<rational>::str(rational(1, 3)) == "1/3");
    REQUIRE(std::string(scalar_ops<rational>::mode_name()) == "exact");
    REQUIRE(std::string(scalar_ops<double>::mode_name()) == "float");
    // %.17g survives a parse round trip
    double v = 0.1 + 0.2;
    REQUIRE(std::strtod(scalar_ops<double>::str(v).c_str(), nullptr) == v);
}

TEST_CASE("index_set ordering and relations") {
    index_set a = index_set::parse("1,3,5");
    REQUIRE(a.str() == "{1,3,5}");
    REQUIRE(a.min() == 1);
    REQUIRE(a.max() == 5);
    REQUIRE(a.contains(3));
    REQUIRE(!a.contains(2));

    index_set b{6, 8};
    REQUIRE(a.strictly_left_of(b));
    REQUIRE(!b.strictly_left_of(a));
    REQUIRE(index_set{}.strictly_left_of(b)); // empty set sits left of everything
    REQUIRE(a.strictly_left_of(index_set{}));

    REQUIRE(a.unite(b).str() == "{1,3,5,6,8}");
    REQUIRE(a.disjoint_with(b));
    REQUIRE(!a.disjoint_with(index_set{5, 6}));

    REQUIRE(index_set::parse("{2,4}") == index_set({2, 4}));
    REQUIRE(index_set::parse("") == index_set{});
    REQUIRE(index_set({3, 3}) == index_set{3}); // duplicates collapse
    REQUIRE_THROWS_AS(index_set({0}), std::out_of_range);
}

TEST_CASE("sign_pattern stores only the minus positions") {
    sign_pattern all;
    REQUIRE(all.all_plus());
    REQUIRE(all.sign(7) == 1);
    sign_pattern p(index_set{2, 5});
    REQUIRE(p.sign(2) == -1);
    REQUIRE(p.sign(3) == 1);
    REQUIRE(p.negatives() == index_set({2, 5}));
}

TEST_CASE("sparse_vector encode/decode round trip") {
    auto x = sparse_vector<rational>::decode("1:1,3:-2,7:1/2");
    REQUIRE(x.encode() == "1:1,3:-2,7:1/2");
    REQUIRE(x.support() == index_set({1, 3, 7}));
    REQUIRE(x.coef(3) == rational(-2));
    REQUIRE(x.coef(4) == rational(0));
    REQUIRE(x.max_modulus() == rational(2));

    auto y = sparse_vector<double>::decode("2:0.5,4:-1");
    REQUIRE(y.support_size() == 2);
    REQUIRE(y.coef(2) == 0.5);
}

TEST_CASE("sparse_vector algebra drops explicit zeros") {
    auto x = sparse_vector<rational>::decode("1:1,2:1");
    auto y = sparse_vector<rational>::decode("2:-1,3:4");
    auto s = add(x, y);
    REQUIRE(s.support() == index_set({1, 3})); // the 2-entries cancel
    REQUIRE(sub(s, s).empty());
    REQUIRE(project(s, index_set{3}).encode() == "3:4");
    REQUIRE(project(s, index_set{9}).empty());
}

TEST_CASE("weight sequences: values, names, tails") {
    auto unit = weight_sequence::parse("unit");
    REQUIRE(unit.name() == "unit");
    REQUIRE(unit.at(19) == rational(1));
    REQUIRE(unit.weight_of(index_set{1, 5, 9}) == rational(3));
    REQUIRE(!unit.sum_finite());
    REQUIRE(unit.sup_finite());
    REQUIRE(unit.limsup() == rational(1));

    auto harm = weight_sequence::parse("harmonic");
    REQUIRE(harm.at(4) == rational(1, 4));
    REQUIRE(harm.weight_of(index_set{2, 3}) == rational(5, 6));
    REQUIRE(!harm.sum_finite());
    REQUIRE(harm.limsup() == rational(0));

    auto geo = weight_sequence::parse("geometric:1/3");
    REQUIRE(geo.at(1) == rational(1));
    REQUIRE(geo.at(3) == rational(1, 9));
    REQUIRE(geo.sum_finite());
    // tail of sum r^k from n is r^{n-1}/(1-r)
    REQUIRE(geo.tail_sum_from(3) == rational(1, 6));

    auto grow = weight_sequence::parse("geometric:2");
    REQUIRE(!grow.sup_finite());
    REQUIRE(!grow.sum_finite());

    auto ex = weight_sequence::parse("explicit:1,1/2;tail=1/2");
    REQUIRE(ex.at(1) == rational(1));
    REQUIRE(ex.at(2) == rational(1, 2));
    REQUIRE(ex.at(100) == rational(1, 2));
    REQUIRE(ex.sup_finite());
    REQUIRE(!ex.sum_finite());
    REQUIRE(ex.limsup() == rational(1, 2));
    REQUIRE(weight_sequence::parse(ex.name()).at(2) == rational(1, 2));

    REQUIRE_THROWS_AS(weight_sequence::parse("geometric:0"), std::domain_error);
    REQUIRE_THROWS_AS(weight_sequence::parse("nope"), std::invalid_argument);
}

TEST_CASE("experiment config validation and seed environment override") {
    experiment_config c;
    REQUIRE_NOTHROW(c.validate());
    c.mode = "symbolic";
    REQUIRE_THROWS_AS(c.validate(), std::invalid_argument);
    c.mode = "exact";
    c.window = 0;
    REQUIRE_THROWS_AS(c.validate(), std::invalid_argument);

    ::setenv("GREEDYLAB_SEED", "123", 1);
    REQUIRE(env_seed() == 123ULL);
    ::setenv("GREEDYLAB_SEED", "12x", 1);
    REQUIRE_THROWS_AS(env_seed(), std::invalid_argument);
    ::unsetenv("GREEDYLAB_SEED");
    REQUIRE(!env_seed().has_value());

    nlohmann::json j = {{"mode", "float"}, {"space", "lp:2"}, {"seed", "99"}, {"samples", 10}};
    auto fromj = config_from_json(j);
    REQUIRE(fromj.mode == "float");
    REQUIRE(fromj.seed == 99ULL);
    REQUIRE(fromj.samples == 10);
    REQUIRE(fromj.echo()["seed"] == "99"); // echoed as a string, never a number
}
