#include "simsat/averaging.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>

namespace simsat {

bool ScaledIndicatorMatrix::contains(std::uint32_t s, std::uint32_t t) const {
  const auto& r = rows_[s];
  return std::binary_search(r.begin(), r.end(), t);
}

std::uint64_t ScaledIndicatorMatrix::support_size() const {
  std::uint64_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

Eigen::MatrixXd ScaledIndicatorMatrix::to_dense() const {
  const auto n = static_cast<Eigen::Index>(dim_);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (std::uint32_t s = 0; s < dim_; ++s)
    for (auto t : rows_[s]) out(s, t) = scale_;
  return out;
}

void ScaledIndicatorMatrix::write_triplets(std::ostream& os) const {
  for (std::uint32_t s = 0; s < dim_; ++s)
    for (auto t : rows_[s]) os << s << ' ' << t << ' ' << scale_ << '\n';
}

namespace {

// Tuples grouped by their transition signature at the given parity.
// parity_even=true keys on transitions at even m, else odd m.
struct Classes {
  std::vector<std::uint32_t> class_of;               // tuple rank -> class id
  std::vector<std::vector<std::uint32_t>> members;   // class id -> sorted ranks
};

Classes split_classes(const TupleSpace& space, bool parity_even) {
  const auto d = static_cast<std::uint32_t>(space.dimension());
  const int big_m = space.multilinearity();
  std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
  Classes out;
  out.class_of.resize(d);
  for (std::uint32_t s = 0; s < d; ++s) {
    std::vector<std::uint32_t> key;
    key.reserve(static_cast<std::size_t>(big_m / 2));
    for (int m = parity_even ? 2 : 1; m <= big_m; m += 2)
      key.push_back(space.transition_rank(s, m));
    auto [it, fresh] = ids.emplace(std::move(key),
                                   static_cast<std::uint32_t>(out.members.size()));
    if (fresh) out.members.emplace_back();
    out.class_of[s] = it->second;
    out.members[it->second].push_back(s);
  }
  return out;
}

ScaledIndicatorMatrix projector_from_classes(const TupleSpace& space,
                                             const Classes& classes) {
  const auto d = space.dimension();
  const double root_d = std::sqrt(static_cast<double>(d));
  std::vector<std::vector<std::uint32_t>> rows(d);
  for (std::uint32_t s = 0; s < d; ++s)
    rows[s] = classes.members[classes.class_of[s]];  // already sorted
  return ScaledIndicatorMatrix(d, 1.0 / root_d, std::move(rows));
}

void require_even_m(const TupleSpace& space, const char* who) {
  if (space.multilinearity() % 2 != 0)
    throw std::invalid_argument(std::string(who) +
                                ": M must be even; embed odd systems first");
}

}  // namespace

ScaledIndicatorMatrix build_even_projector(const TupleSpace& space) {
  require_even_m(space, "build_even_projector");
  return projector_from_classes(space, split_classes(space, true));
}

ScaledIndicatorMatrix build_odd_projector(const TupleSpace& space) {
  require_even_m(space, "build_odd_projector");
  return projector_from_classes(space, split_classes(space, false));
}

ScaledIndicatorMatrix build_cycle_matrix(const TupleSpace& space) {
  const auto d = space.dimension();
  std::vector<std::vector<std::uint32_t>> rows(d);
  for (std::uint32_t s = 0; s < d; ++s) rows[s] = {space.cycle_shift_rank(s)};
  return ScaledIndicatorMatrix(d, 1.0, std::move(rows));
}

std::vector<std::vector<std::uint32_t>> weave_rows(const TupleSpace& space) {
  require_even_m(space, "weave_rows");
  const auto d = static_cast<std::uint32_t>(space.dimension());
  std::vector<std::vector<std::uint32_t>> rows(d);
  for (std::uint32_t s = 0; s < d; ++s)
    for (std::uint32_t t = 0; t < d; ++t)
      if (space.weaves(s, t)) rows[s].push_back(t);
  return rows;
}

DenseHermitian build_symmetrized_average(const TupleSpace& space) {
  require_even_m(space, "build_symmetrized_average");
  const auto d = static_cast<Eigen::Index>(space.dimension());
  const double scale = static_cast<double>(factorial(space.degree())) /
                       static_cast<double>(space.dimension());
  DenseHermitian a = DenseHermitian::Zero(d, d);
  const auto rows = weave_rows(space);
  for (std::uint32_t s = 0; s < space.dimension(); ++s)
    for (auto t : rows[s]) {
      a(s, t) += scale;  // sigma weaves tau orientation (A_ev A_odd)
      a(t, s) += scale;  // transposed orientation (A_odd A_ev)
    }
  return a;
}

StructureReport check_similarity(const TupleSpace& space) {
  const auto ev = build_even_projector(space);
  const auto odd = build_odd_projector(space);
  const auto d = static_cast<std::uint32_t>(space.dimension());
  StructureReport rep;
  auto fail = [&rep](const std::string& what, std::uint32_t s, std::uint32_t t) {
    rep.ok = false;
    rep.detail = what + " mismatch at (" + std::to_string(s) + "," +
                 std::to_string(t) + ")";
  };
  // (C A_ev C^{-1})(s,t) = A_ev(c(s), c(t))
  for (std::uint32_t s = 0; s < d && rep.ok; ++s) {
    const auto cs = space.cycle_shift_rank(s);
    for (std::uint32_t t = 0; t < d; ++t)
      if (odd.contains(s, t) != ev.contains(cs, space.cycle_shift_rank(t))) {
        fail("A_odd vs C A_ev C^-1", s, t);
        break;
      }
  }
  auto shift2 = [&space](std::uint32_t s) {
    return space.cycle_shift_rank(space.cycle_shift_rank(s));
  };
  // (C^2 P)(s,t) = P(c^2(s), t);  (P C^2)(s,t) = P(s, c^{-2}(t)), i.e.
  // supports agree iff P(c^2(s), c^2(t)) = P(s, t).
  for (const auto* p : {&ev, &odd}) {
    const char* name = (p == &ev) ? "C^2 with A_ev" : "C^2 with A_odd";
    for (std::uint32_t s = 0; s < d && rep.ok; ++s)
      for (std::uint32_t t = 0; t < d; ++t)
        if (p->contains(s, t) != p->contains(shift2(s), shift2(t))) {
          fail(name, s, t);
          break;
        }
  }
  return rep;
}

StructureReport check_weaving_product(const TupleSpace& space) {
  const auto ev_classes = split_classes(space, true);
  const auto odd_classes = split_classes(space, false);
  const auto d = static_cast<std::uint32_t>(space.dimension());
  const auto group_order = static_cast<std::uint32_t>(factorial(space.degree()));
  StructureReport rep;

  // counts[t] = #{ mu : s ~p1 mu, mu ~p2 t }; the product identity demands
  // exactly |S_N| on weaving pairs (in the stated orientation), 0 elsewhere.
  std::vector<std::uint32_t> counts(d, 0);
  auto run = [&](const Classes& p1, const Classes& p2, bool transposed,
                 const char* name) {
    for (std::uint32_t s = 0; s < d && rep.ok; ++s) {
      for (auto mu : p1.members[p1.class_of[s]])
        for (auto t : p2.members[p2.class_of[mu]]) ++counts[t];
      for (std::uint32_t t = 0; t < d; ++t) {
        const bool on = transposed ? space.weaves(t, s) : space.weaves(s, t);
        if (counts[t] != (on ? group_order : 0)) {
          rep.ok = false;
          rep.detail = std::string(name) + " at (" + std::to_string(s) + "," +
                       std::to_string(t) + "): count " +
                       std::to_string(counts[t]) + " vs expected " +
                       std::to_string(on ? group_order : 0);
          break;
        }
      }
      for (auto t : p1.members[p1.class_of[s]])
        for (auto u : p2.members[p2.class_of[t]]) counts[u] = 0;
    }
  };
  // A_odd A_ev (s,t): mu ~odd s then mu ~ev t; support is sigma W tau.
  run(odd_classes, ev_classes, false, "A_odd*A_ev vs weaving indicator");
  if (rep.ok)
    // A_ev A_odd has the transposed orientation tau W sigma.
    run(ev_classes, odd_classes, true, "A_ev*A_odd vs weaving indicator^T");
  return rep;
}

double check_psd(const DenseHermitian& h) {
  const double max_abs = h.cwiseAbs().maxCoeff();
  const double tol_sym = 1e-12 * max_abs;
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > tol_sym)
    throw std::invalid_argument("check_psd: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<DenseHermitian> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

Eigen::VectorXd hermitian_eigenvalues(const DenseHermitian& h) {
  Eigen::SelfAdjointEigenSolver<DenseHermitian> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

bool cycle_spectrum_divides_m(const TupleSpace& space) {
  const auto d = static_cast<std::uint32_t>(space.dimension());
  const int big_m = space.multilinearity();
  std::vector<bool> seen(d, false);
  for (std::uint32_t s = 0; s < d; ++s) {
    if (seen[s]) continue;
    int len = 0;
    std::uint32_t cur = s;
    do {
      seen[cur] = true;
      cur = space.cycle_shift_rank(cur);
      ++len;
    } while (cur != s);
    if (big_m % len != 0) return false;
  }
  return true;
}

}  // namespace simsat
