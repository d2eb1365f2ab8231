#ifndef BLOCKMOD_CLOSURE_HPP
#define BLOCKMOD_CLOSURE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "blockmod/omega.hpp"
#include "blockmod/polynomial.hpp"

namespace blockmod {

/// Reduced row echelon basis of a subspace of Q[d1, d2]_{<= degree_cap}.
///
/// Invariants: every vector is monic at its pivot, the pivot is its graded-lex
/// leading monomial, pivots are strictly decreasing, and no vector has a
/// nonzero coefficient at another vector's pivot. Under these invariants the
/// vectors whose pivot has degree <= d span exactly the intersection of the
/// subspace with the polynomials of degree <= d.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(int degree_cap) : degree_cap_(degree_cap) {}

  int degree_cap() const { return degree_cap_; }
  std::size_t dimension() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const std::vector<Poly2>& vectors() const { return vectors_; }

  std::vector<Monomial2> pivots() const {
    std::vector<Monomial2> out;
    out.reserve(vectors_.size());
    for (const auto& v : vectors_) out.push_back(v.leading().first);
    return out;
  }

  /// Residual of v after eliminating every pivot; zero iff v is in the span.
  Poly2 reduce(Poly2 v) const {
    for (const auto& row : vectors_) {
      const Rational c = v.coefficient(row.leading().first);
      if (!c.is_zero()) v.add_scaled(row, -c);
    }
    return v;
  }

  bool contains(const Poly2& v) const { return reduce(v).is_zero(); }

  /// Adds v to the span. Returns true iff the dimension grew.
  bool insert(const Poly2& v) {
    if (v.total_degree() > degree_cap_) throw std::invalid_argument("vector exceeds the basis degree cap");
    Poly2 r = reduce(v);
    if (r.is_zero()) return false;
    r = r.scaled(r.leading().second.inverse());
    const Monomial2 pivot = r.leading().first;
    for (auto& row : vectors_) {
      const Rational c = row.coefficient(pivot);
      if (!c.is_zero()) row.add_scaled(r, -c);
    }
    GradedLexGreater<2> greater;
    auto pos = vectors_.begin();
    while (pos != vectors_.end() && greater(pos->leading().first, pivot)) ++pos;
    vectors_.insert(pos, std::move(r));
    return true;
  }

  /// Basis of the intersection with polynomials of degree <= cap.
  SubspaceBasis truncated(int cap) const {
    SubspaceBasis out(cap);
    for (const auto& v : vectors_)
      if (v.total_degree() <= cap) out.vectors_.push_back(v);
    return out;
  }

 private:
  int degree_cap_;
  std::vector<Poly2> vectors_;
};

/// Returns span(basis + {v}) as a new basis.
inline SubspaceBasis span_insert(SubspaceBasis basis, const Poly2& v) {
  basis.insert(v);
  return basis;
}

enum class ClosureTag { zero, omega_prime, full, other };

inline const char* to_string(ClosureTag t) {
  switch (t) {
    case ClosureTag::zero:
      return "ZERO";
    case ClosureTag::omega_prime:
      return "OMEGA_PRIME";
    case ClosureTag::full:
      return "FULL";
    case ClosureTag::other:
      return "OTHER";
  }
  return "OTHER";
}

struct ClosureResult {
  ClosureTag tag = ClosureTag::zero;
  std::size_t dimension = 0;
  std::string diagnostics;
};

/// Classifies a reduced basis at degree bound D against the trichotomy
/// {0, Omega' cap V_D, V_D}. `box_radius` only feeds the diagnostics of OTHER.
inline ClosureResult classify_span(const SubspaceBasis& basis, int degree_bound, const ParamSet& p,
                                   long box_radius = -1) {
  ClosureResult out;
  out.dimension = basis.dimension();
  const auto full = static_cast<std::size_t>(monomial_count2(degree_bound));
  if (basis.empty()) {
    out.tag = ClosureTag::zero;
    return out;
  }
  if (out.dimension == full) {
    out.tag = ClosureTag::full;
    return out;
  }
  bool all_vanish = true;
  for (const auto& v : basis.vectors()) all_vanish = all_vanish && omega_prime_membership(v, p);
  if (all_vanish && out.dimension + 1 == full) {
    out.tag = ClosureTag::omega_prime;
    return out;
  }
  out.tag = ClosureTag::other;
  out.diagnostics = "dimension " + std::to_string(out.dimension) + " of " + std::to_string(full) + ", " +
                    (all_vanish ? "inside" : "not inside") + " Omega'; ";
  if (box_radius >= 0 && box_radius < degree_bound + 2) {
    out.diagnostics += "likely truncation artifact: box radius " + std::to_string(box_radius) +
                       " is below D+2, rerun with larger B";
  } else {
    out.diagnostics += "theorem-violation candidate (or truncation artifact: rerun with larger B and D)";
  }
  return out;
}

struct ClosureOutput {
  SubspaceBasis basis;      // fixpoint, degree <= D
  SubspaceBasis workspace;  // span of basis and all its one-step images, degree <= D+1
  ClosureResult result;
};

/// Default box radius for a degree bound: D + 2 distinct values per coordinate
/// are what coefficient extraction in m1, m2 needs.
constexpr long default_box_radius(int degree_bound) { return degree_bound + 2; }

/// Smallest subspace S of V_D containing the seeds with
///   (S + span{L_m . v : v in S, m in [-B,B]^2}) cap V_D = S,
/// computed in a workspace of degree <= D+1 so that degree-lowering
/// cancellations across different m are kept. Deterministic: seeds in the
/// given order, indices in row-major order.
inline ClosureOutput closure(const std::vector<Poly2>& seeds, int degree_bound, long box_radius, const ParamSet& p) {
  if (degree_bound < 1) throw std::invalid_argument("closure needs D >= 1");
  if (box_radius < 1) throw std::invalid_argument("closure needs B >= 1");
  const int cap = degree_bound + 1;
  const auto workspace_full = static_cast<std::size_t>(monomial_count2(cap));
  const std::vector<IndexPair> box = index_box(box_radius);

  SubspaceBasis workspace(cap);
  for (const auto& s : seeds) {
    if (s.total_degree() > degree_bound) throw std::invalid_argument("seed degree exceeds D");
    workspace.insert(s);
  }

  // Vectors whose images are already in the workspace; spans the current S.
  SubspaceBasis processed(degree_bound);
  for (;;) {
    std::vector<Poly2> fresh;
    for (const auto& v : workspace.vectors()) {
      if (v.total_degree() > degree_bound) continue;
      Poly2 r = processed.reduce(v);
      if (r.is_zero()) continue;
      processed.insert(r);
      fresh.push_back(std::move(r));
    }
    if (fresh.empty()) break;
    for (const auto& v : fresh) {
      for (IndexPair m : box) {
        if (workspace.dimension() == workspace_full) break;
        workspace.insert(act_basis(m, v, p));
      }
    }
  }

  SubspaceBasis basis = workspace.truncated(degree_bound);
  ClosureResult result = classify_span(basis, degree_bound, p, box_radius);
  return {std::move(basis), std::move(workspace), std::move(result)};
}

/// Failures of the Omega' invariance certificate for a closure result: a
/// basis vector v and index m such that L_m . v is not in the workspace span
/// or does not vanish at (0, -q alpha).
struct CertificateFailure {
  std::size_t vector_index;
  IndexPair m;
  std::string reason;
};

inline std::vector<CertificateFailure> certify_invariance(const ClosureOutput& out, long box_radius,
                                                          const ParamSet& p) {
  std::vector<CertificateFailure> failures;
  const auto& vs = out.basis.vectors();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!omega_prime_membership(vs[i], p)) failures.push_back({i, {0, 0}, "basis vector not in Omega'"});
    for (IndexPair m : index_box(box_radius)) {
      const Poly2 image = act_basis(m, vs[i], p);
      if (!omega_prime_membership(image, p)) failures.push_back({i, m, "image not in Omega'"});
      if (!out.workspace.contains(image)) failures.push_back({i, m, "image outside workspace span"});
    }
  }
  return failures;
}

}  // namespace blockmod

#endif  // BLOCKMOD_CLOSURE_HPP
