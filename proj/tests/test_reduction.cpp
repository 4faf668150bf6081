#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <recur2d/generator.hpp>
#include <recur2d/reduction.hpp>

#include <random>
#include <stdexcept>
#include <vector>

using namespace recur2d;

namespace {

Rational rand_rational(std::mt19937_64& rng) {
    return make_rational(long(rng() % 19) - 9, long(rng() % 9) + 1);
}

std::vector<Rational> rand_vector(int n, std::mt19937_64& rng) {
    std::vector<Rational> v;
    for (int k = 0; k < n; ++k) v.push_back(rand_rational(rng));
    return v;
}

AffineOperator<Rational> rand_operator(int n, std::mt19937_64& rng) {
    AffineOperator<Rational> t{OperatorMatrix<Rational>(n), rand_vector(n, rng)};
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) t.matrix.at(r, c) = rand_rational(rng);
    return t;
}

}  // namespace

TEST_CASE("pack_solution lays diagonals out top-to-bottom with zero padding") {
    const auto p = labeled_instance<Rational>(4);
    const auto w = naive_solve(p);
    const auto xs = pack_solution(w);
    REQUIRE(xs.size() == 7);

    const auto& x4 = xs[3];
    CHECK(x4.d == 4);
    CHECK(x4.entries[0] == w.at(1, 4));
    CHECK(x4.entries[1] == w.at(2, 3));
    CHECK(x4.entries[2] == w.at(3, 2));
    CHECK(x4.entries[3] == w.at(4, 1));

    const auto& x6 = xs[5];
    CHECK(x6.entries[0] == w.at(3, 4));
    CHECK(x6.entries[1] == w.at(4, 3));
    CHECK(x6.entries[2] == 0);
    CHECK(x6.entries[3] == 0);

    // Third diagonal runs (1,3), (2,2), (3,1): strictly one cell per row.
    const auto& x3 = xs[2];
    CHECK(x3.entries[0] == w.at(1, 3));
    CHECK(x3.entries[1] == w.at(2, 2));
    CHECK(x3.entries[2] == w.at(3, 1));
    CHECK(x3.entries[3] == 0);
}

TEST_CASE("pack_solution n=1") {
    const auto p = labeled_instance<Rational>(1);
    const auto w = naive_solve(p);
    const auto xs = pack_solution(w);
    REQUIRE(xs.size() == 1);
    CHECK(xs[0].entries == std::vector<Rational>{w.at(1, 1)});
}

TEST_CASE("unpack_solution inverts pack_solution") {
    for (int n : {1, 2, 5, 9}) {
        const auto p = generate_instance<Rational>(n, 42 + n);
        const auto w = naive_solve(p);
        CHECK(unpack_solution(pack_solution(w), n) == w);
    }
}

TEST_CASE("unpack_solution rejects wrong shapes") {
    const auto p = generate_instance<Rational>(2, 1);
    auto xs = pack_solution(naive_solve(p));
    xs.push_back(xs.back());  // length 2n, not 2n-1
    CHECK_THROWS_AS(unpack_solution(xs, 2), std::invalid_argument);

    auto xs2 = pack_solution(naive_solve(p));
    xs2[1].d = 3;
    CHECK_THROWS_AS(unpack_solution(xs2, 2), std::invalid_argument);
}

TEST_CASE("step_offset matches the n=4 structural tables") {
    const auto p = labeled_instance<Rational>(4);

    const auto k1 = step_offset(p, 1);
    CHECK(k1.entries[0] == p.c.at(1, 1) + p.a.at(1, 1) * p.north_of(1) + p.b.at(1, 1) * p.west_of(1));
    CHECK(k1.entries[1] == 0);
    CHECK(k1.entries[2] == 0);
    CHECK(k1.entries[3] == 0);

    const auto k3 = step_offset(p, 3);
    CHECK(k3.entries[0] == p.c.at(1, 3) + p.a.at(1, 3) * p.north_of(3));
    CHECK(k3.entries[1] == p.c.at(2, 2));
    CHECK(k3.entries[2] == p.c.at(3, 1) + p.b.at(3, 1) * p.west_of(3));
    CHECK(k3.entries[3] == 0);

    const auto k6 = step_offset(p, 6);
    CHECK(k6.entries[0] == p.c.at(3, 4));
    CHECK(k6.entries[1] == p.c.at(4, 3));
    CHECK(k6.entries[2] == 0);
    CHECK(k6.entries[3] == 0);

    CHECK_THROWS_AS(step_offset(p, 0), std::out_of_range);
    CHECK_THROWS_AS(step_offset(p, 8), std::out_of_range);
}

TEST_CASE("step_matrix matches the n=4 structural tables") {
    const auto p = labeled_instance<Rational>(4);

    const auto h4 = step_matrix(p, 4);
    int nonzero = 0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (h4.at(r, c) != 0) ++nonzero;
    CHECK(nonzero == 6);
    CHECK(h4.at(0, 0) == p.b.at(1, 4));
    CHECK(h4.at(1, 0) == p.a.at(2, 3));
    CHECK(h4.at(1, 1) == p.b.at(2, 3));
    CHECK(h4.at(2, 1) == p.a.at(3, 2));
    CHECK(h4.at(2, 2) == p.b.at(3, 2));
    CHECK(h4.at(3, 2) == p.a.at(4, 1));

    const auto h5 = step_matrix(p, 5);
    CHECK(h5.at(0, 0) == p.a.at(2, 4));
    CHECK(h5.at(0, 1) == p.b.at(2, 4));
    CHECK(h5.at(1, 1) == p.a.at(3, 3));
    CHECK(h5.at(1, 2) == p.b.at(3, 3));
    CHECK(h5.at(2, 2) == p.a.at(4, 2));
    CHECK(h5.at(2, 3) == p.b.at(4, 2));
    for (int c = 0; c < 4; ++c) CHECK(h5.at(3, c) == 0);

    const auto h7 = step_matrix(p, 7);
    CHECK(h7.at(0, 0) == p.a.at(4, 4));
    CHECK(h7.at(0, 1) == p.b.at(4, 4));
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (!(r == 0 && c <= 1)) CHECK(h7.at(r, c) == 0);

    const auto h1 = step_matrix(p, 1);
    CHECK(h1 == OperatorMatrix<Rational>(4));
}

TEST_CASE("fresh step matrices are banded with zero rows past the diagonal length") {
    std::mt19937_64 seeds(5);
    for (int n : {1, 2, 3, 7, 16}) {
        const auto p = generate_instance<Rational>(n, seeds());
        for (int d = 1; d <= diag_count(n); ++d) {
            const auto h = step_matrix(p, d);
            const auto k = step_offset(p, d);
            const int len = diag_len(d, n);
            int nonzero = 0;
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    if (h.at(r, c) != 0) {
                        ++nonzero;
                        REQUIRE(r < len);
                        // lower-bidiagonal while growing, upper while shrinking
                        if (d <= n)
                            REQUIRE((c == r || c == r - 1));
                        else
                            REQUIRE((c == r || c == r + 1));
                    }
            REQUIRE(nonzero <= 2 * len - (d <= n ? 1 : 0));
            for (int r = len; r < n; ++r) REQUIRE(k.entries[std::size_t(r)] == 0);
        }
    }
}

TEST_CASE("apply: zero matrix returns the offset, identity returns the input") {
    std::mt19937_64 rng(7);
    const int n = 5;
    const auto x = rand_vector(n, rng);
    const auto k = rand_vector(n, rng);
    CHECK(apply(AffineOperator<Rational>{OperatorMatrix<Rational>(n), k}, x) == k);
    CHECK(apply(AffineOperator<Rational>::identity(n), x) == x);
    CHECK_THROWS_AS(apply(AffineOperator<Rational>::identity(4), x), std::invalid_argument);
}

TEST_CASE("apply advances one packed diagonal to the next") {
    const auto p = labeled_instance<Rational>(4);
    const auto xs = pack_solution(naive_solve(p));
    const auto x2 = apply(step_operator(p, 2), xs[0].entries);
    CHECK(x2 == xs[1].entries);
}

TEST_CASE("every diagonal is the affine image of its predecessor") {
    std::mt19937_64 seeds(11);
    for (int n : {1, 2, 3, 4, 6, 10}) {
        const auto p = generate_instance<Rational>(n, seeds());
        const auto xs = pack_solution(naive_solve(p));
        REQUIRE(xs[0].entries == step_offset(p, 1).entries);
        for (int d = 2; d <= diag_count(n); ++d)
            REQUIRE(apply(step_operator(p, d), xs[std::size_t(d - 2)].entries) ==
                    xs[std::size_t(d - 1)].entries);
    }
}

TEST_CASE("compose obeys identity laws and matches nested application") {
    std::mt19937_64 rng(13);
    for (int n : {1, 2, 4, 8}) {
        const auto id = AffineOperator<Rational>::identity(n);
        for (int trial = 0; trial < 10; ++trial) {
            const auto t1 = rand_operator(n, rng);
            const auto t2 = rand_operator(n, rng);
            const auto x = rand_vector(n, rng);
            CHECK(compose(id, t1) == t1);
            CHECK(compose(t1, id) == t1);
            CHECK(apply(compose(t2, t1), x) == apply(t2, apply(t1, x)));
        }
    }
    CHECK_THROWS_AS(compose(AffineOperator<Rational>::identity(3),
                            AffineOperator<Rational>::identity(4)),
                    std::invalid_argument);
}

TEST_CASE("composing after the zero-matrix step keeps a zero linear part") {
    const auto p = labeled_instance<Rational>(4);
    const auto xs = pack_solution(naive_solve(p));
    const auto prefix2 = compose(step_operator(p, 2), step_operator(p, 1));
    CHECK(prefix2.matrix == OperatorMatrix<Rational>(4));
    CHECK(prefix2.offset == xs[1].entries);
}

TEST_CASE("compose is associative in exact mode") {
    std::mt19937_64 rng(17);
    for (int n : {1, 3, 5, 8}) {
        for (int trial = 0; trial < 8; ++trial) {
            const auto t1 = rand_operator(n, rng);
            const auto t2 = rand_operator(n, rng);
            const auto t3 = rand_operator(n, rng);
            REQUIRE(compose(compose(t3, t2), t1) == compose(t3, compose(t2, t1)));
        }
    }
}

TEST_CASE("composing k step matrices keeps bandwidth at most k+1") {
    // Structural mask argument, independent of scalar values.
    std::mt19937_64 seeds(19);
    for (int n : {4, 9, 16}) {
        const auto p = generate_instance<Rational>(n, seeds());
        std::vector<std::vector<std::vector<bool>>> masks;
        for (int d = 1; d <= diag_count(n); ++d) {
            const auto h = step_matrix(p, d);
            std::vector<std::vector<bool>> mask(std::size_t(n), std::vector<bool>(std::size_t(n)));
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) mask[std::size_t(r)][std::size_t(c)] = h.at(r, c) != 0;
            masks.push_back(std::move(mask));
        }
        std::mt19937_64 rng(seeds());
        for (int trial = 0; trial < 12; ++trial) {
            const int lo = int(rng() % std::uint64_t(diag_count(n) - 1)) + 2;  // skip d=1 (all-zero)
            const int hi = lo + int(rng() % std::uint64_t(diag_count(n) - lo + 1));
            auto acc = masks[std::size_t(lo - 1)];
            int lower = lo <= n ? 1 : 0, upper = 1 - (lo <= n ? 1 : 0);
            for (int d = lo + 1; d <= hi; ++d) {
                const auto& m = masks[std::size_t(d - 1)];
                std::vector<std::vector<bool>> prod{std::size_t(n), std::vector<bool>(std::size_t(n))};
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c) {
                        bool any = false;
                        for (int k = 0; k < n && !any; ++k)
                            any = m[std::size_t(r)][std::size_t(k)] && acc[std::size_t(k)][std::size_t(c)];
                        prod[std::size_t(r)][std::size_t(c)] = any;
                    }
                acc = std::move(prod);
                (d <= n ? lower : upper) += 1;
            }
            const int factors = hi - lo + 1;
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    if (acc[std::size_t(r)][std::size_t(c)]) {
                        REQUIRE(c - r <= upper);
                        REQUIRE(r - c <= lower);
                        REQUIRE(std::abs(r - c) <= factors);  // band of at most factors+1 diagonals
                    }
        }
    }
}

TEST_CASE("debug text forms") {
    const auto p = labeled_instance<Rational>(2);
    const auto h2 = step_matrix(p, 2);
    CHECK(format_matrix(h2) == "20102/1 0/1\n10201/1 0/1\n");
    CHECK(format_vector(step_offset(p, 1).entries) ==
          "1411140302/1 0/1\n");  // 30101 + 10101*40001 + 20101*50100

    OperatorMatrix<double> m(1);
    m.at(0, 0) = 0.1;
    CHECK(format_matrix(m) == "0.10000000000000001\n");
}
