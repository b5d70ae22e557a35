#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "proxkit/chain.hpp"
#include "proxkit/finite_map.hpp"
#include "proxkit/morphisms.hpp"
#include "proxkit/report.hpp"
#include "proxkit/roundideal.hpp"

namespace proxkit {

// The two models share one vocabulary so the law harness can be written
// once. Objects are proximity frames; ℜL carries ≪, 𝒞L carries ⊑ on the
// same carrier, 𝔍L is the frame of all ideals with ⊆.
//
// Natural transformation components, all as morphisms:
//   sigma  ς_L : ℜL → L          kappa κ_L : L → ℜL      alpha α_L : L → ℜL
//   r      r_L : ℜL → ℜℜL        beta  β_L : ℜL → 𝒞L     epsilon ε_L : 𝒞L → L
//   c      c_L : 𝒞L → 𝒞𝒞L        m_incl m_L : ℜL → 𝔍L

struct FiniteModel {
  using Object = FiniteProxFrame;
  using Map = FiniteMap;
  using Point = Elem;

  static Object R(const Object& p);
  static Object C(const Object& p);
  static Object I(const Object& p);

  static Map identity(const Object& p) { return identity_map(p); }
  static Map compose(const Map& g, const Map& f) { return proxkit::compose(g, f); }
  static Map retag(const Map& f, const Object& dom, const Object& cod) { return proxkit::retag(f, dom, cod); }
  static Map rmap(const Map& f) { return proxkit::rmap(f); }
  static Map cmap(const Map& f);
  static Map imap(const Map& f);

  static Map sigma(const Object& p) { return sigma_map(p); }
  static Map kappa(const Object& p) { return kappa_map(p); }
  static Map alpha(const Object& p) { return alpha_map(p); }
  static Map r(const Object& p);
  static Map r_via_R(const Object& p);
  static Map beta(const Object& p);
  static Map epsilon(const Object& p);
  static Map c(const Object& p);
  static Map m_incl(const Object& p);

  /// r_L(I) from {K : K ≪ I}, located among the round ideals of ℜL.
  static Point r_by_membership(const Object& p, Point ideal);
  /// c_L(Ī) from {K̄ : ε_L(K̄) ∈ I}, located among the ⊑-round ideals of 𝒞L.
  static Point c_by_membership(const Object& p, Point ideal);

  /// ⊆ and ς-relation between elements of ℜL, and the second reading of ⊑.
  static bool subideal(const Object& p, Point i, Point j);
  static bool max_prox_by_sigma(const Object& p, Point i, Point j);
  static bool max_prox_by_kappa(const Object& p, Point i, Point j);

  static bool is_proxhom(const Map& f) { return proxkit::is_proxhom(f); }
  static bool is_pframemap(const Map& f) { return proxkit::is_pframemap(f); }
  static bool is_proper(const Map& f) { return proxkit::is_proper(f); }
  static bool is_stably_compact(const Object&) { return true; }

  static std::optional<Point> difference(const Map& f, const Map& g) { return first_difference(f, g); }
  static std::optional<Point> not_leq(const Map& f, const Map& g) { return first_not_leq(f, g); }
  static bool leq(const Object& p, Point a, Point b) { return p.frame->leq(a, b); }
  static std::string name(const Object& p, Point x) { return p.frame->id(x); }
  static std::string describe(const Object& p) { return p.name; }
  /// Every element; finite instances are checked exhaustively.
  static std::vector<Point> points(const Object& p, std::size_t extra, std::uint64_t seed);
};

struct ChainModel {
  using Object = ProxChain;
  using Map = ChainMap;
  using Point = Code;

  static Object R(const Object& p) { return round_ideal_chain(p); }
  static Object C(const Object& p) { return max_proximity_chain(p); }
  static Object I(const Object& p) { return ideal_frame(p.shape); }

  static Map identity(const Object& p) { return identity_map(p); }
  static Map compose(const Map& g, const Map& f) { return proxkit::compose(g, f); }
  static Map retag(const Map& f, const Object& dom, const Object& cod) { return f.retag(dom, cod); }
  static Map rmap(const Map& f) { return proxkit::rmap(f); }
  static Map cmap(const Map& f);
  static Map imap(const Map& f);

  static Map sigma(const Object& p) { return sigma_map(p); }
  static Map kappa(const Object& p) { return kappa_map(p); }
  static Map alpha(const Object& p) { return alpha_map(p); }
  static Map r(const Object& p);
  static Map r_via_R(const Object& p);
  static Map beta(const Object& p);
  static Map epsilon(const Object& p);
  static Map c(const Object& p);
  static Map m_incl(const Object& p);

  static Point r_by_membership(const Object& p, Point ideal);
  static Point c_by_membership(const Object& p, Point ideal);

  static bool subideal(const Object& p, Point i, Point j);
  static bool max_prox_by_sigma(const Object& p, Point i, Point j);
  static bool max_prox_by_kappa(const Object& p, Point i, Point j);

  static bool is_proxhom(const Map& f) { return proxkit::is_proxhom(f); }
  static bool is_pframemap(const Map& f) { return proxkit::is_pframemap(f); }
  static bool is_proper(const Map& f) { return proxkit::is_proper(f); }
  static bool is_stably_compact(const Object& p) { return proxkit::is_stably_compact(p); }

  static std::optional<Point> difference(const Map& f, const Map& g) { return first_difference(f, g); }
  static std::optional<Point> not_leq(const Map& f, const Map& g) { return first_not_leq(f, g); }
  static bool leq(const Object&, Point a, Point b) { return a <= b; }
  static std::string name(const Object&, Point x) { return element_name(x); }
  static std::string describe(const Object& p) { return proxkit::describe(p); }
  /// Class points of the shape plus `extra` seeded random elements.
  static std::vector<Point> points(const Object& p, std::size_t extra, std::uint64_t seed);
};

/// Canonical form of a down-set of a chain frame given by membership. A
/// block is taken to be exhausted once the set contains offset 2^50 of it.
/// Returns nullopt for the empty set.
std::optional<ChainIdeal> classify_downset(const ChainShape& shape, const std::function<bool(Code)>& contains);

/// v • u = v ∘ ℜu ∘ r_L for u : ℜL → M and v : ℜM → N. Throws NotComposable.
FiniteMap kleisli_compose(const FiniteMap& v, const FiniteMap& u);
ChainMap kleisli_compose(const ChainMap& v, const ChainMap& u);

/// The frame of round ideals carrying ⊑.
inline FiniteProxFrame max_proximity(const FiniteProxFrame& p) { return FiniteModel::C(p); }
inline ProxChain max_proximity(const ProxChain& p) { return ChainModel::C(p); }

/// β_L ∘ α_L : L → 𝒞L. Throws NotStablyCompact.
FiniteMap coalgebra_structure(const FiniteProxFrame& p);
ChainMap coalgebra_structure(const ProxChain& p);

/// Decides ℜf ∘ α_L = α_M ∘ f and compares with properness of f; the report
/// passes when the two agree. `detail` records both answers.
LawReport check_coalgebra_morphism(const FiniteMap& f);
LawReport check_coalgebra_morphism(const ChainMap& f);

struct LawConfig {
  std::size_t samples = 16;  // extra seeded points per object on chain instances
  std::uint64_t seed = 42;
};

LawReport kz_check(const FiniteProxFrame& p, const LawConfig& cfg = {});
LawReport kz_check(const ProxChain& p, const LawConfig& cfg = {});
LawReport subcomonad_check(const FiniteProxFrame& p, const LawConfig& cfg = {});
LawReport subcomonad_check(const ProxChain& p, const LawConfig& cfg = {});

// Law suites. Each returns one report per law, in a fixed order.

/// (ℜ, r, ς): counits, coassociativity, idempotence, r by two routes.
std::vector<LawReport> r_comonad_laws(const FiniteProxFrame& p, const LawConfig& cfg = {});
std::vector<LawReport> r_comonad_laws(const ProxChain& p, const LawConfig& cfg = {});
/// (𝒞, ε, c) together with ⊑, adjunctions, the KZ inequality and the submonad identities.
std::vector<LawReport> c_comonad_laws(const FiniteProxFrame& p, const LawConfig& cfg = {});
std::vector<LawReport> c_comonad_laws(const ProxChain& p, const LawConfig& cfg = {});
/// β∘α coalgebra identities; empty for frames that are not stably compact.
std::vector<LawReport> coalgebra_laws(const FiniteProxFrame& p, const LawConfig& cfg = {});
std::vector<LawReport> coalgebra_laws(const ProxChain& p, const LawConfig& cfg = {});

/// θ/ρ, decomposition, ∗ versus ∘, Kleisli functoriality and the five
/// naturality squares over a family of maps between catalog objects.
/// Maps of the wrong class for a law are skipped by that law.
std::vector<LawReport> morphism_laws(const std::vector<FiniteMap>& maps, const std::string& instance,
                                     const LawConfig& cfg = {});
std::vector<LawReport> morphism_laws(const std::vector<ChainMap>& maps, const std::string& instance,
                                     const LawConfig& cfg = {});
std::vector<LawReport> naturality_laws(const std::vector<FiniteMap>& maps, const std::string& instance,
                                       const LawConfig& cfg = {});
std::vector<LawReport> naturality_laws(const std::vector<ChainMap>& maps, const std::string& instance,
                                       const LawConfig& cfg = {});

}  // namespace proxkit
