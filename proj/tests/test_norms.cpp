// Norm engines: frozen values computed by hand plus sampled axiom checks.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <memory>

#include "greedylab/dual_norm.hpp"
#include "greedylab/norms.hpp"
#include "greedylab/sampler.hpp"

using namespace greedylab;

namespace {

template <class R>
std::unique_ptr<norm_engine<R>> engine(const std::string& shorthand) {
    return make_engine<R>(space_spec_from_shorthand(shorthand));
}

// nonnegativity, definiteness, homogeneity, triangle inequality, and (when
// declared) invariance under sign flips
template <class R>
void check_axioms(const norm_engine<R>& e, int window, unsigned long long seed) {
    vector_stream<R> vs(window, seed);
    sparse_vector<R> prev;
    for (int k = 0; k < 60; ++k) {
        auto x = vs.next();
        if (x.empty()) continue;
        R nx = e.norm(x);
        REQUIRE(R(0) < nx);
        if constexpr (scalar_ops<R>::exact) {
            REQUIRE(e.norm(scale(x, R(-3))) == R(3) * nx);
        } else {
            REQUIRE(e.norm(scale(x, R(-3))) == Catch::Approx(3 * nx).epsilon(1e-9));
        }
        REQUIRE(e.norm(negate(x)) == nx);
        if (!prev.empty()) {
            R lhs = e.norm(add(x, prev));
            R rhs = nx + e.norm(prev);
            if constexpr (scalar_ops<R>::exact) {
                REQUIRE(lhs <= rhs);
            } else {
                REQUIRE(lhs <= rhs * (1 + 1e-9));
            }
        }
        if (e.one_unconditional()) {
            // flip the sign of every other support point
            std::vector<typename sparse_vector<R>::entry> flipped;
            bool flip = false;
            for (auto& [i, c] : x) {
                flipped.emplace_back(i, flip ? -c : c);
                flip = !flip;
            }
            REQUIRE(e.norm(sparse_vector<R>(flipped)) == nx);
            auto sup = x.support();
            if (sup.size() > 1) {
                index_set first{sup.min()};
                REQUIRE(e.norm(project(x, first)) <= nx);
            }
        }
        prev = x;
    }
    REQUIRE(e.norm(sparse_vector<R>{}) == R(0));
}

} // namespace

TEST_CASE("lp norms: hand values and axioms") {
    auto l1 = engine<rational>("lp:1");
    REQUIRE(l1->norm(sparse_vector<rational>::decode("1:1,3:-2")) == rational(3));
    REQUIRE(l1->normalized_basis());
    auto linf = engine<rational>("lp:inf");
    REQUIRE(linf->norm(sparse_vector<rational>::decode("1:1,3:-2,9:1/2")) == rational(2));

    auto l2 = engine<double>("lp:2");
    REQUIRE(l2->norm(sparse_vector<double>::decode("1:1,3:-2")) == std::sqrt(5.0));
    REQUIRE(l2->name() == "lp:2");

    // exact mode admits only p = 1 and p = inf
    REQUIRE_THROWS_AS(engine<rational>("lp:2"), std::invalid_argument);
    REQUIRE_THROWS_AS(engine<double>("lp:1/2"), std::invalid_argument);

    check_axioms(*l1, 12, 11);
    check_axioms(*linf, 12, 12);
    check_axioms(*l2, 12, 13);
}

TEST_CASE("spreading norm: factorial levels and closed forms") {
    auto sp = engine<rational>("spreading:N=12");
    auto* se = dynamic_cast<spreading_engine<rational>*>(sp.get());
    REQUIRE(se != nullptr);
    REQUIRE(se->levels() == std::vector<int>{1, 2, 6});
    REQUIRE(sp->structural_window() == 12);

    // left block of length 6 only meets levels 1 and 2: top-2 sum
    REQUIRE(sp->norm(indicator<rational>(index_set::parse("1,2,3,4,5,6"))) == rational(2));
    // right block [7,12] fully clears level 6
    REQUIRE(sp->norm(indicator<rational>(index_set::parse("7,8,9,10,11,12"))) == rational(6));
    // singletons are normalized
    REQUIRE(sp->norm(indicator<rational>(index_set{12})) == rational(1));
    // mixed moduli at level 2: top two of (3, 2, 1) sitting right of 2
    REQUIRE(sp->norm(sparse_vector<rational>::decode("2:3,5:2,9:1")) == rational(5));

    // n_max shorthand: spreading:3 covers window 2*3! = 12
    auto sp2 = engine<rational>("spreading:3");
    REQUIRE(sp2->structural_window() == 12);

    REQUIRE_THROWS_AS(sp->norm(indicator<rational>(index_set{13})), std::out_of_range);
    check_axioms(*sp, 12, 21);
    check_axioms(*engine<double>("spreading:N=12"), 12, 22);
}

TEST_CASE("partial-sum norm: running weighted prefixes") {
    auto ps = engine<rational>("partial_sum");
    // coefficient sequence 1,1,2,2,3,3,...
    REQUIRE(partial_sum_coefficient(1) == 1);
    REQUIRE(partial_sum_coefficient(2) == 1);
    REQUIRE(partial_sum_coefficient(5) == 3);
    REQUIRE(ps->norm(indicator<rational>(index_set{5})) == rational(3));
    REQUIRE(!ps->normalized_basis());
    REQUIRE(!ps->one_unconditional());

    // prefix sums of (1, -1): 1 then 0, so the norm sees the first spike
    REQUIRE(ps->norm(sparse_vector<rational>::decode("1:1,2:-1")) == rational(1));
    // -1/2 on 1..4 digs to -3, the spike at 5 climbs back to 0
    auto dig = sparse_vector<rational>::decode("1:-1/2,2:-1/2,3:-1/2,4:-1/2,5:1");
    REQUIRE(ps->norm(dig) == rational(3));
    // alternating +-1 on 1..12 has running sums 1,0,2,0,3,0,... peak 6
    std::vector<std::pair<int, rational>> alt;
    for (int i = 1; i <= 12; ++i) alt.emplace_back(i, rational(i % 2 ? 1 : -1));
    REQUIRE(ps->norm(sparse_vector<rational>(alt)) == rational(6));

    // not 1-unconditional: flipping the dip at 2 doubles the peak
    REQUIRE(ps->norm(sparse_vector<rational>::decode("1:1,2:1")) == rational(2));

    vector_stream<rational> vs(12, 31);
    for (int k = 0; k < 40; ++k) {
        auto x = vs.next();
        if (x.empty()) continue;
        REQUIRE(ps->norm(scale(x, rational(-2))) == rational(2) * ps->norm(x));
        REQUIRE(ps->norm(negate(x)) == ps->norm(x));
    }
}

TEST_CASE("modular norm: bisection against closed-form points") {
    auto en = engine<double>("modular:1,2,3,4,5,6,7,8");
    REQUIRE(en->name() == "modular:p=1,2,3,4,5,6,7,8");
    // singletons are exact
    REQUIRE(en->norm(sparse_vector<double>::decode("3:0.25")) == 0.25);
    // e1 + e2 with exponents (1,2): l solves 1/l + 1/l^2 = 1, the golden ratio
    double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    REQUIRE(en->norm(sparse_vector<double>::decode("1:1,2:1")) == Catch::Approx(phi).epsilon(1e-9));
    // scaling by t rescales the infimum
    REQUIRE(en->norm(sparse_vector<double>::decode("1:2,2:2")) ==
            Catch::Approx(2 * phi).epsilon(1e-9));

    // exact mode refuses the family
    REQUIRE_THROWS_AS(engine<rational>("modular:1,2"), std::invalid_argument);
    REQUIRE_THROWS_AS(en->norm(sparse_vector<double>::decode("9:1")), std::out_of_range);

    check_axioms(*en, 8, 41);
}

TEST_CASE("polyhedral dual norm on the spreading family") {
    auto sp = engine<rational>("spreading:N=4");
    auto* se = dynamic_cast<spreading_engine<rational>*>(sp.get());
    REQUIRE(se != nullptr);

    // dual of 1_{[1,2]}: mass can sit on disjoint level-1 singletons {1},{2}
    auto d12 = dual_norm_polyhedral(*se, sparse_vector<rational>::decode("1:1,2:1"));
    REQUIRE(d12.value == rational(2));
    // dual of 1_{[3,4]}: any feasible y has y_3 + y_4 <= 1 (a level-2 set)
    auto d34 = dual_norm_polyhedral(*se, sparse_vector<rational>::decode("3:1,4:1"));
    REQUIRE(d34.value == rational(1));
    REQUIRE(d12.lp_rows <= 30);
    REQUIRE(d34.lp_rows <= 30);

    // duality pairing: |<z, x>| <= dual(z) * norm(x) on sampled pairs
    vector_stream<rational> vs(4, 51);
    for (int k = 0; k < 25; ++k) {
        auto z = vs.next();
        auto x = vs.next();
        if (z.empty() || x.empty()) continue;
        rational pairing(0);
        for (auto& [i, c] : z) pairing += c * x.coef(i);
        auto dz = dual_norm_polyhedral(*se, z);
        REQUIRE(abs(pairing) <= dz.value * sp->norm(x));
        // the witness carries the signs of z, so the raw pairing attains value
        rational attained(0);
        for (auto& [i, c] : dz.witness) attained += z.coef(i) * c;
        REQUIRE(attained == dz.value);
    }
}

TEST_CASE("engine factory rejects malformed specs") {
    REQUIRE_THROWS_AS(engine<double>("modular:2,2"), std::invalid_argument);
    REQUIRE_THROWS_AS(engine<double>("warp:9"), std::invalid_argument);
    REQUIRE_THROWS_AS(engine<rational>("spreading:N=0"), std::invalid_argument);
    REQUIRE(effective_window(*engine<rational>("spreading:N=12"), 30) == 12);
    REQUIRE(effective_window(*engine<rational>("lp:1"), 30) == 30);
}
