#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace invsg;

namespace {
  Eigen::MatrixXcd random_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::MatrixXcd                       m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
      for (Eigen::Index j = 0; j < cols; ++j) {
        double const re = u(rng);
        m(i, j)         = {re, u(rng)};
      }
    }
    return m;
  }

  Eigen::MatrixXcd unitary(Eigen::Index n, std::mt19937_64& rng) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(random_matrix(n, n, rng));
    return qr.householderQ();
  }
}  // namespace

TEST_CASE("operator norm of I + swap", "[linalg]") {
  Eigen::MatrixXcd m(2, 2);
  m << 1, 1, 1, 1;
  CHECK(op_norm(m) == Catch::Approx(2.0).epsilon(1e-12));
  CHECK(op_norm(Eigen::MatrixXcd::Zero(3, 3)) == 0.0);
  CHECK(op_norm(Eigen::MatrixXcd(0, 0)) == 0.0);
}

TEST_CASE("operator norm against SVD", "[linalg]") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    auto const rows = static_cast<Eigen::Index>(1 + rng() % 12);
    auto const cols = static_cast<Eigen::Index>(1 + rng() % 12);
    auto const m    = random_matrix(rows, cols, rng);
    CHECK(op_norm(m) == Catch::Approx(oracle::largest_singular_value(m)).epsilon(1e-10));
  }
}

TEST_CASE("operator norm with clustered singular values", "[linalg]") {
  std::mt19937_64 rng(2);
  for (double gap : {0.0, 1e-14, 1e-9, 3e-5, 1e-3}) {
    for (int t = 0; t < 5; ++t) {
      Eigen::Index const n = 8;
      Eigen::VectorXd    d = Eigen::VectorXd::LinSpaced(n, 0.1, 0.6);
      d(n - 1)             = 2.0;
      d(n - 2)             = 2.0 - gap;
      Eigen::MatrixXcd const m = unitary(n, rng) * d.cast<scalar>().asDiagonal() * unitary(n, rng);
      INFO("gap " << gap);
      // within a cluster the answer is only resolved to the cluster width
      CHECK(op_norm(m) == Catch::Approx(oracle::largest_singular_value(m)).epsilon(std::max(1e-10, gap)));
    }
  }
}

TEST_CASE("start vector orthogonal to the top singular vector", "[linalg]") {
  // all-ones is orthogonal to (1, -1), the top right singular vector
  Eigen::MatrixXcd m(2, 2);
  m << 3, -3, 1, 1;
  CHECK(op_norm(m) == Catch::Approx(oracle::largest_singular_value(m)).epsilon(1e-12));
}

TEST_CASE("non-finite input", "[linalg]") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
  m(0, 1)            = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(op_norm(m), Error);
}

TEST_CASE("numeric rank against LU", "[linalg]") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    auto const rows = static_cast<Eigen::Index>(2 + rng() % 10);
    auto const k    = static_cast<Eigen::Index>(1 + rng() % 6);
    auto const cols = static_cast<Eigen::Index>(1 + rng() % 10);
    Eigen::MatrixXcd const m = random_matrix(rows, k, rng) * random_matrix(k, cols, rng);
    CHECK(static_cast<Eigen::Index>(numeric_rank(m)) == oracle::rank(m));
  }
  CHECK(numeric_rank(Eigen::MatrixXcd::Zero(4, 4)) == 0);
}

TEST_CASE("partial isometries", "[linalg]") {
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(3, 3);
  p(0, 1)            = 1.0;
  CHECK(is_partial_isometry(p));
  p(0, 2) = 1.0;
  CHECK_FALSE(is_partial_isometry(p));
}
