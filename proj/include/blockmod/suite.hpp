#ifndef BLOCKMOD_SUITE_HPP
#define BLOCKMOD_SUITE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "blockmod/algebra.hpp"
#include "blockmod/closure.hpp"
#include "blockmod/identities.hpp"
#include "blockmod/omega.hpp"
#include "blockmod/random.hpp"

namespace blockmod {

using Json = nlohmann::ordered_json;

enum class CheckStatus { pass, fail, error };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::error:
      return "error";
  }
  return "error";
}

/// One verified statement. `anchor` names the identity or formula checked.
struct Check {
  std::string name;
  std::string anchor;
  CheckStatus status = CheckStatus::pass;
  Json witness;  // null when there is nothing to show

  bool passed() const { return status == CheckStatus::pass; }
};

inline Json to_json(const Check& c) {
  Json j;
  j["name"] = c.name;
  j["paper_anchor"] = c.anchor;
  j["status"] = to_string(c.status);
  j["witness"] = c.witness;
  return j;
}

inline CheckStatus status_of(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

/// Runs body, turning any exception into an `error` check.
inline Check guarded(std::string name, std::string anchor, const std::function<Check()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {std::move(name), std::move(anchor), CheckStatus::error, Json{{"exception", e.what()}}};
  }
}

namespace anchors {
inline constexpr const char* bracket = "[L_m,L_n] = (n1(m2+q) - m1(n2+q)) L_{m+n}, [D2,L_n] = n2 L_n";
inline constexpr const char* jacobi = "[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0";
inline constexpr const char* action = "L_m . f(d) = f(d-m) g_m(d), g_m = lambda^m((m2+q) d1 - m1(d2 + q alpha))";
inline constexpr const char* module_axiom = "(L_m L_n - L_n L_m) . f = [L_m,L_n] . f";
inline constexpr const char* transposed = "g_m = lambda^m((q alpha + m2) d1 - m1(alpha + d2)) is not a module";
inline constexpr const char* closure = "nonzero submodules of Omega(lambda,alpha) are Omega and Omega'";
inline constexpr const char* certificate = "Omega' = d1 Omega + (q alpha + d2) Omega is a submodule";
inline constexpr const char* witt = "g_{im} = q lambda_m^i (d1 - i m1 alpha) mod X_m";
inline constexpr const char* gg = "g_n(d-m) g_m - g_m(d-n) g_n = (n1(m2+q) - m1(n2+q)) g_{m+n}";
inline constexpr const char* G = "G_m(d) - G_m(d-m) = 2 m1 q^2 d1, G_m = g_m(d+m) g_{-m}";
inline constexpr const char* Fh = "G_m = h_m(X_m) + q^2 d1 (d1 + m1), h_m = -(X - q m1(alpha-1))(X - q m1 alpha)";
inline constexpr const char* p1p2const = "d1, d2 and constant coefficients of the g_m bracket relation";
inline constexpr const char* iso = "Omega(lambda,alpha) ~ Omega(mu,beta) iff lambda = mu and alpha = beta";
inline constexpr const char* lemma_poly = "F(X,Y) - F(X,Y-c) = aX + bY iff F = (f(X) + (2aX + bc)Y + bY^2)/2c";
}  // namespace anchors

/// Generators L_m (m in the box of the given radius) followed by D2.
inline std::vector<AlgebraElement> generator_list(long radius) {
  std::vector<AlgebraElement> out;
  for (IndexPair m : index_box(radius)) out.push_back(AlgebraElement::basis(m));
  out.push_back(AlgebraElement::d2());
  return out;
}

inline Json json_strings(const std::vector<ParamSet>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.str());
  return out;
}

// Criterion 1

/// Jacobi identity on every triple of generators in [-radius, radius]^2 plus D2.
inline Check jacobi_suite(const std::vector<Rational>& qs, long radius) {
  return guarded("jacobi", anchors::jacobi, [&] {
    const auto gens = generator_list(radius);
    std::size_t triples = 0;
    Json qs_json = Json::array();
    for (const auto& q : qs) {
      qs_json.push_back(q.str());
      const AlgebraContext ctx(q);
      for (const auto& x : gens)
        for (const auto& y : gens)
          for (const auto& z : gens) {
            ++triples;
            const AlgebraElement d = jacobi_defect(x, y, z, ctx);
            if (!d.is_zero()) {
              return Check{"jacobi", anchors::jacobi, CheckStatus::fail,
                           Json{{"q", q.str()},
                                {"x", to_string(x)},
                                {"y", to_string(y)},
                                {"z", to_string(z)},
                                {"defect", to_string(d)}}};
            }
          }
    }
    return Check{"jacobi", anchors::jacobi, CheckStatus::pass,
                 Json{{"q_values", qs_json}, {"radius", radius}, {"triples", triples}}};
  });
}

inline Check jacobi_suite() {
  return jacobi_suite({Rational(1), Rational(5, 7), Rational(-2), Rational(3, 2), Rational(7)}, 3);
}

// Criteria 2 and 3

struct AxiomDefect {
  std::size_t x_index;
  std::size_t y_index;
  std::size_t f_index;
  Poly2 defect;
};

/// First nonzero module-axiom defect over generator pairs and test vectors.
inline std::optional<AxiomDefect> first_axiom_defect(const std::vector<AlgebraElement>& gens,
                                                      const std::vector<Poly2>& fs, const ParamSet& p,
                                                      ActionRule rule) {
  for (std::size_t k = 0; k < fs.size(); ++k)
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j) {
        Poly2 d = module_axiom_defect(gens[i], gens[j], fs[k], p, rule);
        if (!d.is_zero()) return AxiomDefect{i, j, k, std::move(d)};
      }
  return std::nullopt;
}

inline Json describe(const AxiomDefect& d, const std::vector<AlgebraElement>& gens, const std::vector<Poly2>& fs,
                     const ParamSet& p) {
  return Json{{"params", p.str()},
              {"x", to_string(gens[d.x_index])},
              {"y", to_string(gens[d.y_index])},
              {"f", to_string(fs[d.f_index])},
              {"defect", to_string(d.defect)}};
}

inline std::vector<Poly2> random_test_vectors(SplitMix64& rng, std::size_t count, int max_degree) {
  std::vector<Poly2> fs;
  while (fs.size() < count) {
    Poly2 f = random_poly2(rng, max_degree);
    if (!f.is_zero()) fs.push_back(std::move(f));
  }
  return fs;
}

/// Module axioms for generator pairs in [-radius, radius]^2 plus D2.
inline Check module_axiom_suite(const std::vector<ParamSet>& params, const std::vector<Poly2>& fs, long radius) {
  return guarded("module_axioms", anchors::module_axiom, [&] {
    const auto gens = generator_list(radius);
    for (const auto& p : params) {
      if (auto d = first_axiom_defect(gens, fs, p, ActionRule::canonical))
        return Check{"module_axioms", anchors::module_axiom, CheckStatus::fail, describe(*d, gens, fs, p)};
    }
    return Check{"module_axioms", anchors::module_axiom, CheckStatus::pass,
                 Json{{"param_sets", json_strings(params)},
                      {"test_vectors", fs.size()},
                      {"radius", radius},
                      {"pairs_per_vector", gens.size() * gens.size()}}};
  });
}

inline Check module_axiom_suite(SplitMix64& rng) {
  const std::vector<ParamSet> params = standard_param_sweep(rng);
  const std::vector<Poly2> fs = random_test_vectors(rng, 10, 4);
  return module_axiom_suite(params, fs, 2);
}

/// The transposed closed form must break a module axiom, and the canonical one
/// must not, on the same grid and for the same parameters (alpha not 0 or 1).
/// The gg identity is also checked to fail under the transposed form.
inline Check transposed_control(const ParamSet& p, const std::vector<Poly2>& fs, long radius) {
  return guarded("transposed_control", anchors::transposed, [&] {
    if (p.alpha().is_zero() || p.alpha() == Rational(1))
      throw std::invalid_argument("transposed control needs alpha outside {0, 1}");
    const auto gens = generator_list(radius);
    const auto bad = first_axiom_defect(gens, fs, p, ActionRule::transposed);
    const auto good = first_axiom_defect(gens, fs, p, ActionRule::canonical);
    std::optional<std::pair<IndexPair, IndexPair>> gg_pair;
    for (IndexPair m : index_box(radius)) {
      for (IndexPair n : index_box(radius))
        if (!replay_gg(m, n, p, ActionRule::transposed).is_zero()) {
          gg_pair = {m, n};
          break;
        }
      if (gg_pair) break;
    }
    Json w;
    w["params"] = p.str();
    w["transposed_defect"] = bad ? describe(*bad, gens, fs, p) : Json();
    w["canonical_defect"] = good ? describe(*good, gens, fs, p) : Json();
    w["transposed_gg_pair"] = gg_pair ? Json::array({gg_pair->first.str(), gg_pair->second.str()}) : Json();
    return Check{"transposed_control", anchors::transposed, status_of(bad && !good && gg_pair), w};
  });
}

inline Check transposed_control(SplitMix64& rng) {
  ParamSet base = random_params(rng, QKind::generic);
  Rational alpha = base.alpha();
  if (alpha.is_zero() || alpha == Rational(1)) alpha = Rational(3, 5);
  const ParamSet p(base.q(), base.lambda1(), base.lambda2(), alpha);
  const std::vector<Poly2> fs = random_test_vectors(rng, 10, 4);
  return transposed_control(p, fs, 2);
}

// Criteria 4 and 5

/// Random seed of degree <= max_degree with a prescribed relation to Omega':
/// inside it (and nonzero) or outside it.
inline Poly2 random_closure_seed(SplitMix64& rng, const ParamSet& p, int max_degree, bool inside) {
  const auto [x, y] = p.special_point();
  for (;;) {
    Poly2 f = random_poly2(rng, max_degree);
    const Rational v = evaluate(f, x, y);
    if (inside) {
      f -= Poly2(v);
      if (!f.is_zero()) return f;
    } else {
      if (v.is_zero()) f += Poly2(1);
      return f;
    }
  }
}

/// Closure dichotomy at scale plus the Omega' certificate for every
/// OMEGA_PRIME result. Returns {dichotomy check, certificate check}.
inline std::array<Check, 2> dichotomy_suite(SplitMix64& rng, const std::vector<ParamSet>& params, int degree_bound,
                                            long box_radius, int seed_degree, std::size_t seeds_per_kind) {
  std::array<Check, 2> out{Check{"closure_dichotomy", anchors::closure, CheckStatus::pass, Json()},
                           Check{"omega_prime_certificate", anchors::certificate, CheckStatus::pass, Json()}};
  try {
    const auto full_dim = static_cast<std::size_t>(monomial_count2(degree_bound));
    std::size_t runs = 0, full = 0, prime = 0, other = 0, certified = 0, certified_vectors = 0;
    Json first_bad, first_uncertified;
    for (const auto& p : params) {
      for (bool inside : {false, true}) {
        for (std::size_t k = 0; k < seeds_per_kind; ++k) {
          const Poly2 seed = random_closure_seed(rng, p, seed_degree, inside);
          const ClosureOutput res = closure({seed}, degree_bound, box_radius, p);
          ++runs;
          const ClosureTag want = inside ? ClosureTag::omega_prime : ClosureTag::full;
          const std::size_t want_dim = inside ? full_dim - 1 : full_dim;
          if (res.result.tag == ClosureTag::full) ++full;
          if (res.result.tag == ClosureTag::omega_prime) ++prime;
          if (res.result.tag == ClosureTag::other) ++other;
          if ((res.result.tag != want || res.result.dimension != want_dim) && first_bad.is_null()) {
            first_bad = Json{{"params", p.str()},
                             {"seed", to_string(seed)},
                             {"tag", to_string(res.result.tag)},
                             {"dimension", res.result.dimension},
                             {"diagnostics", res.result.diagnostics}};
          }
          if (res.result.tag == ClosureTag::omega_prime) {
            const auto failures = certify_invariance(res, box_radius, p);
            ++certified;
            certified_vectors += res.basis.dimension();
            if (!failures.empty() && first_uncertified.is_null()) {
              const auto& f = failures.front();
              first_uncertified = Json{{"params", p.str()},
                                       {"seed", to_string(seed)},
                                       {"vector", to_string(res.basis.vectors()[f.vector_index])},
                                       {"m", f.m.str()},
                                       {"reason", f.reason}};
            }
          }
        }
      }
    }
    out[0].status = status_of(first_bad.is_null());
    out[0].witness = Json{{"param_sets", json_strings(params)},
                          {"D", degree_bound},
                          {"B", box_radius},
                          {"closures", runs},
                          {"full", full},
                          {"omega_prime", prime},
                          {"other", other},
                          {"first_mismatch", first_bad}};
    out[1].status = status_of(first_uncertified.is_null() && certified > 0);
    out[1].witness = Json{{"omega_prime_results", certified},
                          {"basis_vectors_checked", certified_vectors},
                          {"images_per_vector", index_box(box_radius).size()},
                          {"first_failure", first_uncertified}};
  } catch (const std::exception& e) {
    for (auto& c : out) {
      c.status = CheckStatus::error;
      c.witness = Json{{"exception", e.what()}};
    }
  }
  return out;
}

inline std::array<Check, 2> dichotomy_suite(SplitMix64& rng) {
  const std::vector<ParamSet> params{ParamSet(Rational(1), Rational(1), Rational(1), Rational(0)),
                                     ParamSet(Rational(1), Rational(1), Rational(1), Rational(1, 2))};
  return dichotomy_suite(rng, params, 5, 7, 3, 20);
}

// Criterion 6

inline Check witt_suite(const std::vector<ParamSet>& params, const std::vector<IndexPair>& ms, long i_lo, long i_hi) {
  return guarded("witt_restriction", anchors::witt, [&] {
    std::size_t checked = 0;
    for (const auto& p : params)
      for (IndexPair m : ms) {
        const WittRestriction r = witt_restrict(m, i_lo, i_hi, p);
        checked += static_cast<std::size_t>(i_hi - i_lo + 1);
        if (!r.ok()) {
          const auto& bad = r.mismatches.front();
          return Check{"witt_restriction", anchors::witt, CheckStatus::fail,
                       Json{{"params", p.str()},
                            {"m", m.str()},
                            {"i", bad.i},
                            {"reduced", to_string(bad.reduced)},
                            {"expected", to_string(bad.expected)}}};
        }
      }
    Json ms_json = Json::array();
    for (IndexPair m : ms) ms_json.push_back(m.str());
    return Check{"witt_restriction", anchors::witt, CheckStatus::pass,
                 Json{{"param_sets", json_strings(params)}, {"m", ms_json}, {"i_range", {i_lo, i_hi}}, {"checked", checked}}};
  });
}

inline Check witt_suite(SplitMix64& rng) {
  return witt_suite(standard_param_sweep(rng), {{1, 0}, {2, 3}, {-1, 4}}, -4, 4);
}

// Criterion 7

/// Indices (0,-q) for integral q and (0,-2q) for half-integral q that fall in the box.
inline std::vector<IndexPair> exceptional_indices(const Rational& q, long radius) {
  std::vector<IndexPair> out;
  for (long k : {1L, 2L}) {
    const Rational v = Rational(k) * q;
    if (!v.is_integer()) continue;
    const long n2 = -v.numerator().get_si();
    if (std::labs(n2) <= radius) {
      const IndexPair e{0, n2};
      if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    }
  }
  return out;
}

/// Sample of index pairs from the box: pairs through every exceptional index
/// first (four with it on each side), then uniform pairs up to `count`.
inline std::vector<std::pair<IndexPair, IndexPair>> sample_pairs(SplitMix64& rng, long radius, std::size_t count,
                                                                 const std::vector<IndexPair>& exceptional) {
  std::vector<std::pair<IndexPair, IndexPair>> out;
  auto draw = [&]() {
    const long a = rng.uniform(-radius, radius);
    const long b = rng.uniform(-radius, radius);
    return IndexPair{a, b};
  };
  for (IndexPair e : exceptional)
    for (int k = 0; k < 4 && out.size() + 2 <= count; ++k) {
      const IndexPair u = draw();
      out.push_back({e, u});
      const IndexPair v = draw();
      out.push_back({v, e});
    }
  while (out.size() < count) {
    const IndexPair m = draw();
    const IndexPair n = draw();
    out.push_back({m, n});
  }
  return out;
}

inline Check replay_gg_check(const ParamSet& p, const std::vector<std::pair<IndexPair, IndexPair>>& pairs,
                             ActionRule rule = ActionRule::canonical) {
  return guarded("replay_gg", anchors::gg, [&] {
    for (const auto& [m, n] : pairs) {
      const Poly2 d = replay_gg(m, n, p, rule);
      if (!d.is_zero())
        return Check{"replay_gg", anchors::gg, CheckStatus::fail,
                     Json{{"params", p.str()}, {"m", m.str()}, {"n", n.str()}, {"defect", to_string(d)}}};
    }
    return Check{"replay_gg", anchors::gg, CheckStatus::pass, Json{{"params", p.str()}, {"pairs", pairs.size()}}};
  });
}

inline Check replay_G_check(const ParamSet& p, long radius) {
  return guarded("replay_G", anchors::G, [&] {
    const auto box = index_box(radius);
    for (IndexPair m : box) {
      const Poly2 d = replay_G(m, p);
      if (!d.is_zero())
        return Check{"replay_G", anchors::G, CheckStatus::fail,
                     Json{{"params", p.str()}, {"m", m.str()}, {"defect", to_string(d)}}};
    }
    return Check{"replay_G", anchors::G, CheckStatus::pass, Json{{"params", p.str()}, {"indices", box.size()}}};
  });
}

inline Check replay_Fh_check(const ParamSet& p, long radius) {
  return guarded("replay_Fh", anchors::Fh, [&] {
    std::size_t checked = 0;
    for (IndexPair m : index_box(radius)) {
      if (m.m1 == 0) continue;
      const FhReplay r = replay_Fh(m, p);
      ++checked;
      if (r.defect || !r.matches_expected)
        return Check{"replay_Fh", anchors::Fh, CheckStatus::fail,
                     Json{{"params", p.str()},
                          {"m", m.str()},
                          {"d1_dependent", r.defect},
                          {"remainder", to_string(r.remainder, xd_names())},
                          {"h", to_string(r.h, std::array<std::string, 1>{"X"})},
                          {"expected_h", to_string(r.expected_h, std::array<std::string, 1>{"X"})}}};
    }
    return Check{"replay_Fh", anchors::Fh, CheckStatus::pass, Json{{"params", p.str()}, {"indices", checked}}};
  });
}

inline Check replay_p1p2const_check(const ParamSet& p, const std::vector<std::pair<IndexPair, IndexPair>>& pairs) {
  return guarded("replay_p1p2const", anchors::p1p2const, [&] {
    std::size_t checked = 0;
    for (const auto& [m, n] : pairs) {
      if (m.is_zero() || n.is_zero()) continue;
      const CoefficientDefects d = replay_p1p2const(m, n, p);
      ++checked;
      if (!d.all_zero())
        return Check{"replay_p1p2const", anchors::p1p2const, CheckStatus::fail,
                     Json{{"params", p.str()},
                          {"m", m.str()},
                          {"n", n.str()},
                          {"d1_coefficient", d.d1_coefficient.str()},
                          {"d2_coefficient", d.d2_coefficient.str()},
                          {"constant", d.constant.str()}}};
    }
    return Check{"replay_p1p2const", anchors::p1p2const, CheckStatus::pass,
                 Json{{"params", p.str()}, {"pairs", checked}}};
  });
}

/// All four replays for one parameter set over [-radius, radius]^2.
inline std::vector<Check> replay_checks(SplitMix64& rng, const ParamSet& p, long radius, std::size_t pair_count) {
  const auto pairs = sample_pairs(rng, radius, pair_count, exceptional_indices(p.q(), radius));
  return {replay_gg_check(p, pairs), replay_G_check(p, radius), replay_Fh_check(p, radius),
          replay_p1p2const_check(p, pairs)};
}

/// Criterion 7: replays over three parameter sets (integral, half-integral and
/// generic q), merged into one check.
inline Check replay_suite(SplitMix64& rng) {
  return guarded("identity_replay", "gg, G, Fh and coefficient identities", [&] {
    // Integral q is redrawn until (0,-q) and (0,-2q) lie in the box, half-integral q until (0,-2q) does.
    auto with_exceptional = [&rng](QKind kind) {
      const std::size_t wanted = kind == QKind::integer ? 2 : 1;
      for (;;) {
        ParamSet p = random_params(rng, kind);
        if (exceptional_indices(p.q(), 3).size() == wanted) return p;
      }
    };
    const std::vector<ParamSet> params{with_exceptional(QKind::integer), with_exceptional(QKind::half_integer),
                                       random_params(rng, QKind::generic)};
    Json per = Json::array();
    bool ok = true;
    Json first_failure;
    for (const auto& p : params) {
      Json exc = Json::array();
      for (IndexPair e : exceptional_indices(p.q(), 3)) exc.push_back(e.str());
      for (const Check& c : replay_checks(rng, p, 3, 200)) {
        if (!c.passed() && first_failure.is_null()) first_failure = to_json(c);
        ok = ok && c.passed();
      }
      per.push_back(Json{{"params", p.str()}, {"exceptional_indices", exc}});
    }
    return Check{"identity_replay", "gg, G, Fh and coefficient identities", status_of(ok),
                 Json{{"param_sets", per}, {"radius", 3}, {"pairs", 200}, {"first_failure", first_failure}}};
  });
}

// Criterion 8

/// Pairwise iso_check over a parameter grid (same q): true exactly on the
/// diagonal, and off it a witness index whose g_m differ.
inline Check iso_suite(const std::vector<ParamSet>& grid, long radius) {
  return guarded("iso_rigidity", anchors::iso, [&] {
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < grid.size(); ++i)
      for (std::size_t j = 0; j < grid.size(); ++j) {
        ++pairs;
        const IsoResult r = iso_check(grid[i], grid[j], radius);
        const bool equal = grid[i] == grid[j];
        bool ok = r.isomorphic == equal;
        if (ok && !equal)
          ok = r.witness.has_value() && !(action_on_one(*r.witness, grid[i]) == action_on_one(*r.witness, grid[j]));
        if (!ok)
          return Check{"iso_rigidity", anchors::iso, CheckStatus::fail,
                       Json{{"left", grid[i].str()},
                            {"right", grid[j].str()},
                            {"isomorphic", r.isomorphic},
                            {"witness", r.witness ? Json(r.witness->str()) : Json()}}};
      }
    Json g = json_strings(grid);
    return Check{"iso_rigidity", anchors::iso, CheckStatus::pass, Json{{"grid", g}, {"ordered_pairs", pairs}}};
  });
}

inline std::vector<ParamSet> iso_grid() {
  auto P = [](Rational l1, Rational l2, Rational a) { return ParamSet(Rational(1), l1, l2, a); };
  return {P(1, 1, 0),
          P(1, 2, 0),
          P(2, 1, 0),
          P(1, 1, Rational(1, 2)),
          P(-1, 1, 0),
          P(1, -1, 0),
          P(Rational(1, 2), 3, 1),
          P(1, 1, 1),
          P(2, 2, -1),
          P(Rational(3, 2), 1, 0)};
}

inline Check iso_suite() { return iso_suite(iso_grid(), 1); }

// Criterion 9

inline Check lemma_poly_suite(SplitMix64& rng, std::size_t positives, std::size_t negatives) {
  return guarded("lemma_poly", anchors::lemma_poly, [&] {
    for (std::size_t k = 0; k < positives + negatives; ++k) {
      const Poly1 f = random_poly1(rng, 3);
      const Rational a = random_rational(rng);
      const Rational b = random_rational(rng);
      const Rational c = random_nonzero_rational(rng);
      Poly2 F = lemma_poly_build(f, a, b, c);
      const bool negative = k >= positives;
      if (negative) {
        const auto xk = static_cast<unsigned>(rng.uniform(0, 2));
        F.add_term({xk, 3}, random_nonzero_rational(rng));
      }
      if (lemma_poly_check(F, a, b, c) == negative)
        return Check{"lemma_poly", anchors::lemma_poly, CheckStatus::fail,
                     Json{{"F", to_string(F, std::array<std::string, 2>{"X", "Y"})},
                          {"a", a.str()},
                          {"b", b.str()},
                          {"c", c.str()},
                          {"expected", negative ? "reject" : "accept"}}};
    }
    return Check{"lemma_poly", anchors::lemma_poly, CheckStatus::pass,
                 Json{{"positives", positives}, {"negatives", negatives}}};
  });
}

inline Check lemma_poly_suite(SplitMix64& rng) { return lemma_poly_suite(rng, 100, 10); }

/// Criterion k draws from SplitMix64(seed + k), so criteria are independent
/// of each other and of evaluation order.
inline SplitMix64 criterion_rng(std::uint64_t seed, int criterion) {
  return SplitMix64(seed + static_cast<std::uint64_t>(criterion));
}

/// Checks for criteria 1 through 9 in order (criterion 4 contributes two).
inline std::vector<Check> library_acceptance_checks(std::uint64_t seed) {
  std::vector<Check> out;
  out.push_back(jacobi_suite());
  SplitMix64 r2 = criterion_rng(seed, 2);
  out.push_back(module_axiom_suite(r2));
  SplitMix64 r3 = criterion_rng(seed, 3);
  out.push_back(transposed_control(r3));
  SplitMix64 r4 = criterion_rng(seed, 4);
  for (auto& c : dichotomy_suite(r4)) out.push_back(std::move(c));
  SplitMix64 r6 = criterion_rng(seed, 6);
  out.push_back(witt_suite(r6));
  SplitMix64 r7 = criterion_rng(seed, 7);
  out.push_back(replay_suite(r7));
  out.push_back(iso_suite());
  SplitMix64 r9 = criterion_rng(seed, 9);
  out.push_back(lemma_poly_suite(r9));
  return out;
}

}  // namespace blockmod

#endif  // BLOCKMOD_SUITE_HPP
