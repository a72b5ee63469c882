#include <cmath>
#include <random>

#include "doctest.h"

#include "confract/conservation.hpp"
#include "confract/symmetry.hpp"
#include "confract/verify.hpp"
#include "conserved_reference.hpp"

using namespace confract;

namespace {

SolutionDerivatives random_derivs(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> d(-2, 2);
    SolutionDerivatives s;
    s.u = d(rng), s.v = d(rng), s.u_x = d(rng), s.v_x = d(rng), s.u_xx = d(rng), s.v_xx = d(rng);
    s.u_t = d(rng), s.v_t = d(rng), s.u_xt = d(rng), s.v_xt = d(rng);
    return s;
}

ref::Derivs to_ref(const SolutionDerivatives& s)
{
    return {s.u, s.v, s.u_x, s.v_x, s.u_xx, s.v_xx, s.u_t, s.v_t, s.u_xt, s.v_xt};
}

std::array<double, 4> random_k(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> d(-1, 1);
    return {d(rng), d(rng), d(rng), d(rng)};
}

double close(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

}  // namespace

TEST_CASE("expression tree matches the plain transcription")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> pos(0.3, 2.5);
    for (Transcription tr : {Transcription::corrected, Transcription::uncorrected})
        for (int trial = 0; trial < 40; ++trial) {
            const SolutionDerivatives d = random_derivs(rng);
            const auto k = random_k(rng);
            const double x = pos(rng), t = pos(rng);
            const double a = pos(rng), b = pos(rng), al = std::uniform_real_distribution<double>(0.2, 1)(rng);
            const double c = pos(rng), m = pos(rng), n = pos(rng);
            const bool uncorrected = tr == Transcription::uncorrected;
            for (int id = 1; id <= 5; ++id) {
                CAPTURE(id);
                const ConservedVector v = conserved_vector(id, k, Example31Params{a, b}, Order(al), tr);
                const ref::Pair r = ref::example31(id, k, a, b, al, to_ref(d), x, t, uncorrected);
                CHECK(close(v.Ct(d, x, t), r.ct) < 1e-12);
                CHECK(close(v.Cx(d, x, t), r.cx) < 1e-12);
                const ConservedVector w = conserved_vector(id, k, Eq3Params{c, m, n}, Order(al), tr);
                const ref::Pair s = ref::eq3(id, k, c, m, n, al, to_ref(d), x, t, uncorrected);
                CHECK(close(w.Ct(d, x, t), s.ct) < 1e-12);
                CHECK(close(w.Cx(d, x, t), s.cx) < 1e-12);
            }
        }
}

TEST_CASE("all k zero gives the zero vector")
{
    std::mt19937_64 rng(1);
    const SolutionDerivatives d = random_derivs(rng);
    for (int id = 1; id <= 5; ++id) {
        const ConservedVector v = conserved_vector(id, {0, 0, 0, 0}, Example31Params{2, 0.5}, Order(0.6));
        CHECK(v.Ct(d, 1.2, 0.7) == 0);
        CHECK(v.Cx(d, 1.2, 0.7) == 0);
        const ConservedVector w = conserved_vector(id, {0, 0, 0, 0}, Eq3Params{1, 1, 4}, Order(0.5));
        CHECK(w.Ct(d, 1.2, 0.7) == 0);
        CHECK(w.Cx(d, 1.2, 0.7) == 0);
    }
}

TEST_CASE("case 4 density vanishes on the zero pair")
{
    const ConservedVector v = conserved_vector(4, {0.3, -0.2, 0.9, 0.5}, Example31Params{2, 0.5}, Order(0.6));
    CHECK(v.Ct(SolutionDerivatives{}, 1.1, 0.4) == 0);
}

TEST_CASE("case 5 density, second constant")
{
    const double a = 2, b = 0.5;
    const ConservedVector v = conserved_vector(5, {0, 1, 0, 0}, Example31Params{a, b}, Order(0.6));
    SolutionDerivatives d;
    d.u = 0.7;
    d.v = -1.3;
    CHECK(v.Ct(d, 1.1, 0.4) == doctest::Approx(a * d.v + d.u));
}

TEST_CASE("linear in the constants")
{
    std::mt19937_64 rng(3);
    const SolutionDerivatives d = random_derivs(rng);
    const auto k1 = random_k(rng), k2 = random_k(rng);
    std::array<double, 4> sum;
    for (int i = 0; i < 4; ++i)
        sum[i] = 2 * k1[i] - 3 * k2[i];
    for (int id = 1; id <= 5; ++id) {
        const Eq3Params p{1, 1, 4};
        const auto A = conserved_vector(id, k1, p, Order(0.5));
        const auto B = conserved_vector(id, k2, p, Order(0.5));
        const auto S = conserved_vector(id, sum, p, Order(0.5));
        CHECK(S.Ct(d, 0.9, 1.3) == doctest::Approx(2 * A.Ct(d, 0.9, 1.3) - 3 * B.Ct(d, 0.9, 1.3)));
        CHECK(S.Cx(d, 0.9, 1.3) == doctest::Approx(2 * A.Cx(d, 0.9, 1.3) - 3 * B.Cx(d, 0.9, 1.3)));
    }
}

TEST_CASE("divergence vanishes on solutions")
{
    const Example31Params p{2, 0.5};
    const Order al(0.6);
    const SolutionPair orbit =
        flow_v3_example31(combine(1, steady_seed_example31(1, p), 1, steady_seed_example31(2, p)), 0.3, p, al);
    const Eq3Params q{1, 1, 4};
    const Order be(0.5);
    const SolutionPair orbit3 = flow_v3_eq3(combine(1, steady_seed_eq3(1, q), 1, steady_seed_eq3(2, q)), 0.3, q, be);
    for (int id = 1; id <= 5; ++id)
        for (double x : {0.5, 1.3, 2.0})
            for (double t : {0.3, 1.1, 2.0}) {
                CHECK(divergence_detail(conserved_vector(id, {0.4, -0.8, 0.3, 0.6}, p, al), orbit, {x, t}).scaled() <
                      1e-8);
                CHECK(divergence_detail(conserved_vector(id, {0.4, -0.8, 0.3, 0.6}, q, be), orbit3, {x, t}).scaled() <
                      1e-8);
            }
}

TEST_CASE("the uncorrected forms of the four amended vectors are not conserved")
{
    const Example31Params p{2, 0.5};
    const Order al(0.6);
    const SolutionPair orbit =
        flow_v3_example31(combine(1, steady_seed_example31(1, p), 1, steady_seed_example31(2, p)), 0.3, p, al);
    const Eq3Params q{1, 1, 4};
    const Order be(0.5);
    const SolutionPair orbit3 = flow_v3_eq3(combine(1, steady_seed_eq3(1, q), 1, steady_seed_eq3(2, q)), 0.3, q, be);
    const std::vector<double> xs{0.6, 1.4}, ts{0.5, 1.5};
    CHECK(max_divergence(conserved_vector(1, {0, 1, 0, 0}, p, al, Transcription::uncorrected), orbit, xs, ts) > 1e-3);
    CHECK(max_divergence(conserved_vector(3, {0, 1, 0, 0}, p, al, Transcription::uncorrected), orbit, xs, ts) > 1e-3);
    CHECK(max_divergence(conserved_vector(5, {1, 1, 1, 1}, p, al, Transcription::uncorrected), orbit, xs, ts) > 1e-3);
    CHECK(max_divergence(conserved_vector(5, {1, 1, 1, 1}, q, be, Transcription::uncorrected), orbit3, xs, ts) > 1e-3);
}

TEST_CASE("non-solutions break conservation")
{
    const Example31Params p{2, 0.5};
    const Order al(0.6);
    const SolutionPair bad = make_analytic_pair([](double x, double) {
        return PairJet{Jet::var_x(x) * Jet::var_x(x), Jet::constant(0)};
    });
    const std::vector<double> xs{0.6, 1.4}, ts{0.5, 1.5};
    for (int id : {1, 3, 4, 5})
        CHECK(max_divergence(conserved_vector(id, {0.5, 0.5, 0.5, 0.5}, p, al), bad, xs, ts) > 1e-3);
}

TEST_CASE("expression printing")
{
    const Expr e = 2.0 * (xpow(2) * tpow(0.5) * Expr(Atom::u_x)) - Expr(Atom::v);
    CHECK(e.terms().size() == 2);
    CHECK(e.to_string().find("u_x") != std::string::npos);
    SolutionDerivatives d;
    d.u_x = 1;
    d.v = 3;
    CHECK(e.evaluate(d, 2, 4) == doctest::Approx(2 * 4 * 2 - 3));
    CHECK(e.magnitude(d, 2, 4) == doctest::Approx(16));
    CHECK_THROWS_AS(conserved_vector(6, {1, 0, 0, 0}, Example31Params{2, 0.5}, Order(0.6)), ParameterError);
}
