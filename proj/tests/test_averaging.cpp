#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <map>
#include <sstream>

#include "simsat/averaging.hpp"

using namespace simsat;

TEST_CASE("projector structure at N=2, M=2") {
  const TupleSpace space(2, 2);
  const auto ev = build_even_projector(space);
  CHECK(ev.dimension() == 4);
  CHECK(ev.scale() == doctest::Approx(0.5));
  for (std::uint32_t s = 0; s < 4; ++s) {
    CHECK(ev.row(s).size() == 2);
    CHECK(ev.contains(s, s));  // reflexive
  }
  // row sums scale * D^{1/2} = 1
  for (std::uint32_t s = 0; s < 4; ++s)
    CHECK(ev.scale() * static_cast<double>(ev.row(s).size()) == doctest::Approx(1.0));
}

TEST_CASE("N=1 projectors are the 1x1 identity") {
  const TupleSpace space(1, 2);
  const auto ev = build_even_projector(space);
  CHECK(ev.dimension() == 1);
  CHECK(ev.scale() == doctest::Approx(1.0));
  CHECK(ev.contains(0, 0));
  const DenseHermitian a = build_symmetrized_average(space);
  CHECK(a(0, 0).real() == doctest::Approx(2.0));
}

TEST_CASE("projectors are idempotent and Hermitian") {
  for (auto [n, m] : {std::pair{2, 2}, {3, 2}, {2, 4}}) {
    const TupleSpace space(n, m);
    for (const auto& p : {build_even_projector(space), build_odd_projector(space)}) {
      const Eigen::MatrixXd dense = p.to_dense();
      CHECK((dense - dense.transpose()).cwiseAbs().maxCoeff() == 0.0);
      CHECK((dense * dense - dense).cwiseAbs().maxCoeff() <= 1e-14);
    }
  }
}

TEST_CASE("projector rows: symmetric support, unit row sums") {
  for (auto [n, m] : {std::pair{2, 2}, {3, 2}, {2, 4}, {3, 4}}) {
    const TupleSpace space(n, m);
    for (const auto& p : {build_even_projector(space), build_odd_projector(space)}) {
      for (std::uint32_t s = 0; s < space.dimension(); ++s) {
        CHECK(p.scale() * static_cast<double>(p.row(s).size()) ==
              doctest::Approx(1.0).epsilon(1e-14));
        for (auto t : p.row(s)) CHECK(p.contains(t, s));
      }
    }
  }
}

TEST_CASE("cycle matrix") {
  const TupleSpace m1(2, 1);
  const auto c1 = build_cycle_matrix(m1);
  for (std::uint32_t s = 0; s < m1.dimension(); ++s) CHECK(c1.row(s) ==
      std::vector<std::uint32_t>{s});  // M=1: identity

  const TupleSpace space(2, 2);
  const auto c = build_cycle_matrix(space);
  CHECK(c.scale() == 1.0);
  // C V_s = V_{c^{-1}(s)}: column s has its single 1 in row r with c(r) = s.
  const Eigen::MatrixXd dense = c.to_dense();
  for (std::uint32_t s = 0; s < space.dimension(); ++s) {
    Eigen::VectorXd basis = Eigen::VectorXd::Zero(4);
    basis(s) = 1.0;
    const Eigen::VectorXd image = dense * basis;
    for (std::uint32_t r = 0; r < 4; ++r)
      CHECK(image(r) == (space.cycle_shift_rank(r) == s ? 1.0 : 0.0));
  }
  // C^2 = Id at M=2, and orbit lengths divide M in general
  CHECK((dense * dense - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
  CHECK(cycle_spectrum_divides_m(space));
  CHECK(cycle_spectrum_divides_m(TupleSpace(2, 4)));
  CHECK(cycle_spectrum_divides_m(TupleSpace(3, 2)));
}

TEST_CASE("similarity and commutation, exact") {
  for (auto [n, m] : {std::pair{1, 2}, {2, 2}, {3, 2}, {2, 4}}) {
    const auto rep = check_similarity(TupleSpace(n, m));
    CHECK_MESSAGE(rep.ok, rep.detail);
  }
}

TEST_CASE("weaving product, exact") {
  for (auto [n, m] : {std::pair{1, 2}, {2, 2}, {3, 2}, {2, 4}}) {
    const auto rep = check_weaving_product(TupleSpace(n, m));
    CHECK_MESSAGE(rep.ok, rep.detail);
  }
  // N=2, M=2: 8 nonzero entries in each product
  const TupleSpace space(2, 2);
  const auto rows = weave_rows(space);
  std::size_t support = 0;
  for (const auto& r : rows) support += r.size();
  CHECK(support == 8);
}

TEST_CASE("symmetrized average structure") {
  const TupleSpace space(2, 2);
  const DenseHermitian a = build_symmetrized_average(space);
  const Eigen::MatrixXd ev = build_even_projector(space).to_dense();
  const Eigen::MatrixXd odd = build_odd_projector(space).to_dense();

  // A = (A_ev + A_odd)^2 - A_ev - A_odd
  const Eigen::MatrixXd sum = ev + odd;
  const Eigen::MatrixXd expected = sum * sum - sum;
  CHECK((a.real() - expected).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK(a.imag().cwiseAbs().maxCoeff() == 0.0);

  // ones is a joint eigenvector: eigenvalue 1 for the projectors, 2 for A
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(4);
  CHECK((ev * ones - ones).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK((odd * ones - ones).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK((a.real() * ones - 2.0 * ones).cwiseAbs().maxCoeff() <= 1e-14);

  // direct product identity against the weaving indicator, both orientations
  const double scale = static_cast<double>(factorial(2)) / 4.0;
  Eigen::MatrixXd direct = Eigen::MatrixXd::Zero(4, 4);
  for (std::uint32_t s = 0; s < 4; ++s)
    for (std::uint32_t t = 0; t < 4; ++t) {
      if (space.weaves(s, t)) direct(s, t) += scale;
      if (space.weaves(t, s)) direct(s, t) += scale;
    }
  CHECK((a.real() - direct).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("spectral checks") {
  SUBCASE("zero matrix") {
    CHECK(check_psd(DenseHermitian::Zero(3, 3)) == 0.0);
  }
  SUBCASE("non-Hermitian rejected") {
    DenseHermitian h(2, 2);
    h << 1.0, 2.0, 3.0, 1.0;
    CHECK_THROWS_AS(check_psd(h), std::invalid_argument);
  }
  SUBCASE("A is PSD and A_ev + A_odd has the spectral gap") {
    for (auto [n, m] : {std::pair{2, 2}, {3, 2}, {2, 4}}) {
      const TupleSpace space(n, m);
      const DenseHermitian a = build_symmetrized_average(space);
      const double lambda_min = check_psd(a);
      CHECK(lambda_min >= -1e-9 * a.cwiseAbs().maxCoeff());

      const Eigen::MatrixXd sum = build_even_projector(space).to_dense() +
                                  build_odd_projector(space).to_dense();
      const Eigen::VectorXd spec =
          hermitian_eigenvalues(sum.cast<std::complex<double>>());
      for (Eigen::Index i = 0; i < spec.size(); ++i) {
        const bool near_zero = spec(i) <= 1e-9 && spec(i) >= -1e-9;
        const bool at_least_one = spec(i) >= 1.0 - 1e-9;
        CHECK((near_zero || at_least_one));
      }
    }
  }
}

TEST_CASE("spectral gap counterexample at N=3, M=4") {
  // The projector-sum gap (every nonzero eigenvalue >= 1) holds at M = 2 and
  // at (2,4) but fails at (3,4): the even/odd invariant subspaces meet at
  // principal angles with cosine 1/2 there, so A_ev + A_odd acquires
  // eigenvalue 1/2 and the symmetrized average acquires -1/4. The structural
  // product identities still hold exactly; only the positivity claim breaks.
  const TupleSpace space(3, 4);
  CHECK(check_similarity(space).ok);
  CHECK(check_weaving_product(space).ok);

  const DenseHermitian a = build_symmetrized_average(space);
  const double lambda_min = check_psd(a);
  CHECK(lambda_min == doctest::Approx(-0.25).epsilon(1e-9));

  const Eigen::MatrixXd sum = build_even_projector(space).to_dense() +
                              build_odd_projector(space).to_dense();
  const Eigen::VectorXd spec = hermitian_eigenvalues(sum.cast<std::complex<double>>());
  bool has_half = false;
  for (Eigen::Index i = 0; i < spec.size(); ++i)
    has_half = has_half || std::abs(spec(i) - 0.5) < 1e-9;
  CHECK(has_half);
}

TEST_CASE("integer certificate for the (3,4) principal cosine 1/2") {
  // Exact arithmetic only. Let I_ev, I_odd be the unscaled 0/1 class
  // indicator matrices (class size 36, so A_ev = I_ev/36). The vector W1
  // below is constant on ev-classes and satisfies
  //     I_ev I_odd W1 = 324 W1 = (36/2)^2 W1,
  // i.e. A_ev A_odd W1 = (1/4) W1 with W1 in the ev-invariant subspace and
  // A_odd W1 != 0. Writing u = A_odd W1, the plane span{W1, u} is invariant
  // under both projections with Gram cosine exactly 1/2, so A_ev + A_odd
  // has eigenvalue 1/2 and A = A_ev A_odd + A_odd A_ev has eigenvalue -1/4
  // on W1-normalized minus u-normalized. This certifies the spectral-gap
  // failure without floating point.
  const TupleSpace space(3, 4);
  const auto d = static_cast<std::uint32_t>(space.dimension());

  // class ids by first appearance, keyed on transition signatures
  std::map<std::array<std::uint32_t, 2>, std::uint32_t> ev_ids, od_ids;
  std::vector<std::uint32_t> ev_of(d), od_of(d);
  for (std::uint32_t s = 0; s < d; ++s) {
    const std::array<std::uint32_t, 2> ev_sig{space.transition_rank(s, 2),
                                              space.transition_rank(s, 4)};
    const std::array<std::uint32_t, 2> od_sig{space.transition_rank(s, 1),
                                              space.transition_rank(s, 3)};
    ev_of[s] = ev_ids.emplace(ev_sig, static_cast<std::uint32_t>(ev_ids.size()))
                   .first->second;
    od_of[s] = od_ids.emplace(od_sig, static_cast<std::uint32_t>(od_ids.size()))
                   .first->second;
  }
  REQUIRE(ev_ids.size() == 36);
  REQUIRE(od_ids.size() == 36);

  // sparse kernel vector over ev-class ids (first-appearance order)
  std::vector<long long> class_values(36, 0);
  class_values[7] = 1;
  class_values[8] = -1;
  class_values[13] = -1;
  class_values[14] = 1;

  std::vector<std::vector<std::uint32_t>> ev_members(36), od_members(36);
  for (std::uint32_t s = 0; s < d; ++s) {
    ev_members[ev_of[s]].push_back(s);
    od_members[od_of[s]].push_back(s);
  }

  std::vector<long long> w1(d), u(d), v(d);
  for (std::uint32_t s = 0; s < d; ++s) w1[s] = class_values[ev_of[s]];
  bool u_nonzero = false;
  for (std::uint32_t s = 0; s < d; ++s) {
    long long acc = 0;
    for (auto y : od_members[od_of[s]]) acc += w1[y];
    u[s] = acc;
    u_nonzero = u_nonzero || acc != 0;
  }
  CHECK(u_nonzero);
  for (std::uint32_t s = 0; s < d; ++s) {
    long long acc = 0;
    for (auto y : ev_members[ev_of[s]]) acc += u[y];
    v[s] = acc;
  }
  for (std::uint32_t s = 0; s < d; ++s) CHECK(v[s] == 324 * w1[s]);
}

TEST_CASE("M odd is refused by the builders") {
  const TupleSpace space(2, 3);
  CHECK_THROWS_AS(build_even_projector(space), std::invalid_argument);
  CHECK_THROWS_AS(build_odd_projector(space), std::invalid_argument);
  CHECK_THROWS_AS(build_symmetrized_average(space), std::invalid_argument);
}

TEST_CASE("triplet dump") {
  const TupleSpace space(2, 1);
  std::ostringstream os;
  build_cycle_matrix(space).write_triplets(os);
  CHECK(os.str() == "0 0 1\n1 1 1\n");
}
