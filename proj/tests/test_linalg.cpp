#include <doctest.h>

#include <cmath>

#include "radlab/complex_matrix.hpp"
#include "radlab/hermitian_eigen.hpp"
#include "radlab/matrix_functions.hpp"
#include "radlab/matrix_io.hpp"
#include "radlab/rng.hpp"

using namespace radlab;

namespace {

const cplx I1(0.0, 1.0);

ComplexMatrix random_matrix(Rng& rng, std::size_t n) {
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.complex_gaussian();
    return a;
}

ComplexMatrix random_hermitian(Rng& rng, std::size_t n) { return re_part(random_matrix(rng, n)); }

ComplexMatrix random_psd(Rng& rng, std::size_t n) {
    const ComplexMatrix g = random_matrix(rng, n);
    return detail::gram(g);
}

double fro_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).frobenius_norm();
}

// Independent oracle for the operator norm: power iteration on A*A.
double power_iteration_norm(const ComplexMatrix& a, int iters = 3000) {
    const ComplexMatrix g = adjoint(a) * a;
    Rng rng(987654321ULL);
    double best = 0.0;
    for (int restart = 0; restart < 3; ++restart) {
        Vector v = rng.unit_vector(a.dim());
        double lam = 0.0;
        for (int i = 0; i < iters; ++i) {
            Vector w = matvec(g, v);
            const double nw = vec_norm(w);
            if (nw == 0.0) {
                lam = 0.0;
                break;
            }
            for (auto& z : w) z /= nw;
            v = std::move(w);
            lam = nw;
        }
        best = std::max(best, lam);
    }
    return std::sqrt(best);
}

} // namespace

TEST_CASE("adjoint on the stated cases") {
    CHECK(adjoint(ComplexMatrix::identity(3)) == ComplexMatrix::identity(3));

    ComplexMatrix shift{{0.0, 1.0}, {0.0, 0.0}};
    ComplexMatrix shift_t{{0.0, 0.0}, {1.0, 0.0}};
    CHECK(adjoint(shift) == shift_t);

    ComplexMatrix one_i{{I1}};
    CHECK(adjoint(one_i)(0, 0) == -I1);

    Rng rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        const ComplexMatrix a = random_matrix(rng, 4);
        CHECK(adjoint(adjoint(a)) == a); // exact involution
    }
}

TEST_CASE("Cartesian decomposition") {
    ComplexMatrix shift{{0.0, 1.0}, {0.0, 0.0}};
    const ComplexMatrix re = re_part(shift);
    const ComplexMatrix im = im_part(shift);
    CHECK(re(0, 1) == cplx(0.5, 0.0));
    CHECK(re(1, 0) == cplx(0.5, 0.0));
    CHECK(im(0, 1) == cplx(0.0, -0.5));
    CHECK(im(1, 0) == cplx(0.0, 0.5));

    Rng rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const ComplexMatrix a = random_matrix(rng, 5);
        const ComplexMatrix re_a = re_part(a), im_a = im_part(a);
        CHECK(re_a.is_exactly_hermitian());
        CHECK(im_a.is_exactly_hermitian());
        ComplexMatrix rebuilt = im_a;
        rebuilt *= I1;
        rebuilt += re_a;
        CHECK(fro_diff(rebuilt, a) <= 1e-14 * a.frobenius_norm());
        // triangle-inequality sanity
        CHECK(operator_norm(a) <= operator_norm(re_a) + operator_norm(im_a) + 1e-12);
    }

    const ComplexMatrix h = random_hermitian(rng, 4);
    CHECK(fro_diff(re_part(h), h) == 0.0);
    CHECK(im_part(h).frobenius_norm() == 0.0);
    ComplexMatrix ih = h;
    ih *= I1;
    CHECK(re_part(ih).frobenius_norm() <= 1e-15 * h.frobenius_norm());
    CHECK(fro_diff(im_part(ih), h) <= 1e-15 * h.frobenius_norm());
}

TEST_CASE("hermitian_eigen on small fixed matrices") {
    auto eig = hermitian_eigen(ComplexMatrix::diagonal({1.0, 4.0}));
    CHECK(eig.eigenvalues[0] == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(eig.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));

    ComplexMatrix sym{{0.0, 0.5}, {0.5, 0.0}};
    eig = hermitian_eigen(sym);
    CHECK(eig.eigenvalues[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(eig.eigenvalues[1] == doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("hermitian_eigen reconstruction and orthonormality") {
    const ToleranceConfig cfg;
    Rng rng(42);
    // random dim-5 case from the contract, then the bulk property run
    for (int rep = 0; rep < 1000; ++rep) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 11.0);
        const ComplexMatrix h = random_hermitian(rng, n);
        const HermitianEigen eig = hermitian_eigen(h, cfg);

        ComplexMatrix vt = eig.eigenvectors;
        const ComplexMatrix recon =
            eig.eigenvectors * ComplexMatrix::diagonal([&] {
                Vector d(n);
                for (std::size_t i = 0; i < n; ++i) d[i] = eig.eigenvalues[i];
                return d;
            }()) * adjoint(eig.eigenvectors);
        const double scale = std::max(1e-30, h.frobenius_norm());
        REQUIRE(fro_diff(recon, h) <= cfg.eig_tol * scale);

        const ComplexMatrix gram_v = adjoint(eig.eigenvectors) * eig.eigenvectors;
        REQUIRE(fro_diff(gram_v, ComplexMatrix::identity(n)) <= cfg.eig_tol);

        for (std::size_t i = 0; i + 1 < n; ++i)
            REQUIRE(eig.eigenvalues[i] >= eig.eigenvalues[i + 1]);
    }
}

TEST_CASE("hermitian_eigen rejects non-Hermitian input") {
    ComplexMatrix a{{0.0, 1.0}, {0.0, 0.0}};
    CHECK_THROWS_AS(hermitian_eigen(a), NotHermitian);
}

TEST_CASE("operator_norm") {
    CHECK(operator_norm(ComplexMatrix::diagonal({1.0, -2.0})) == doctest::Approx(2.0));
    ComplexMatrix shift{{0.0, 1.0}, {0.0, 0.0}};
    CHECK(operator_norm(shift) == doctest::Approx(1.0));

    Rng rng(5);
    for (int rep = 0; rep < 10; ++rep) {
        const ComplexMatrix a = random_matrix(rng, 4);
        const double lib = operator_norm(a);
        const double oracle = power_iteration_norm(a);
        CHECK(lib == doctest::Approx(oracle).epsilon(1e-8));
    }
}

TEST_CASE("matrix_abs") {
    const ComplexMatrix d = ComplexMatrix::diagonal({1.0, -2.0});
    CHECK(fro_diff(matrix_abs(d), ComplexMatrix::diagonal({1.0, 2.0})) <= 1e-12);

    // unitary: |U| = I
    ComplexMatrix u{{cplx(0.0, 0.0), cplx(0.0, 1.0)}, {cplx(1.0, 0.0), cplx(0.0, 0.0)}};
    CHECK(fro_diff(matrix_abs(u), ComplexMatrix::identity(2)) <= 1e-12);

    ComplexMatrix shift{{0.0, 1.0}, {0.0, 0.0}};
    CHECK(fro_diff(matrix_abs(shift), ComplexMatrix::diagonal({0.0, 1.0})) <= 1e-12);

    Rng rng(17);
    for (int rep = 0; rep < 10; ++rep) {
        const ComplexMatrix a = random_matrix(rng, 5);
        const ComplexMatrix abs_a = matrix_abs(a);
        CHECK(abs_a.is_exactly_hermitian());
        const auto eig = hermitian_eigen(abs_a);
        CHECK(eig.eigenvalues.back() >= -1e-12);
        CHECK(operator_norm(abs_a) == doctest::Approx(operator_norm(a)).epsilon(1e-8));
        // |A|^2 = A*A
        CHECK(fro_diff(abs_a * abs_a, adjoint(a) * a) <=
              1e-10 * std::max(1.0, a.frobenius_norm() * a.frobenius_norm()));
    }
}

TEST_CASE("psd_power") {
    const ComplexMatrix d = ComplexMatrix::diagonal({4.0, 9.0});
    CHECK(fro_diff(psd_power(d, 0.5), ComplexMatrix::diagonal({2.0, 3.0})) <= 1e-12);

    Rng rng(23);
    const ComplexMatrix h = random_psd(rng, 4);
    CHECK(psd_power(h, 1.0) == h); // exact identity case

    const ComplexMatrix p3 = psd_power(h, 0.3);
    const ComplexMatrix p7 = psd_power(h, 0.7);
    CHECK(fro_diff(p3 * p7, h) <= 1e-8 * std::max(1.0, h.frobenius_norm()));

    // s = 0 yields the projector onto the range (0^0 := 0)
    const ComplexMatrix rank1 = ComplexMatrix::diagonal({3.0, 0.0});
    CHECK(fro_diff(psd_power(rank1, 0.0), ComplexMatrix::diagonal({1.0, 0.0})) <= 1e-12);

    CHECK_THROWS_AS(psd_power(ComplexMatrix::diagonal({-1.0, 1.0}), 0.5), NegativeEigenvalue);
    CHECK_THROWS_AS(psd_power(h, -0.5), InvalidSpec);
}

TEST_CASE("matrix JSON round trip") {
    Rng rng(29);
    const ComplexMatrix a = random_matrix(rng, 3);
    const nlohmann::json j = matrix_to_json(a);
    const ComplexMatrix back = matrix_from_json(j);
    CHECK(back == a); // bit-exact via shortest round-trip doubles

    CHECK_THROWS_AS(matrix_from_json(nlohmann::json::object()), ParseError);
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json{{"dim", 2}, {"entries", {1, 2}}}),
                    ParseError);
    nlohmann::json bad = matrix_to_json(a);
    bad["entries"][0][0] = {1.0};
    CHECK_THROWS_AS(matrix_from_json(bad), ParseError);
}
