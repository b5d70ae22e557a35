#pragma once

#include <vector>

#include "proxkit/chain.hpp"
#include "proxkit/exec.hpp"
#include "proxkit/finite_map.hpp"
#include "proxkit/proximity.hpp"
#include "proxkit/roundideal.hpp"

namespace proxkit {

// Validators. Axiom names for proximity homomorphisms: meet-hom, bottom,
// subadditive, approximation. For proximity-preserving frame maps:
// frame-hom, preserves-prec; `proper` records whether ≪ is preserved.

AxiomReport validate_proxhom(const FiniteMap& f);
AxiomReport validate_proxhom(const ChainMap& f);
AxiomReport validate_pframemap(const FiniteMap& f);
AxiomReport validate_pframemap(const ChainMap& f);

bool is_proxhom(const FiniteMap& f);
bool is_proxhom(const ChainMap& f);
bool is_pframemap(const FiniteMap& f);
bool is_pframemap(const ChainMap& f);
bool preserves_prec(const FiniteMap& f);
bool preserves_prec(const ChainMap& f);
bool is_proper(const FiniteMap& f);
bool is_proper(const ChainMap& f);

// Structure maps, as morphisms.

/// κ_L : L → ℜL.
FiniteMap kappa_map(const FiniteProxFrame& p);
ChainMap kappa_map(const ProxChain& p);
/// ς_L : ℜL → L.
FiniteMap sigma_map(const FiniteProxFrame& p);
ChainMap sigma_map(const ProxChain& p);
/// α_L : L → ℜL for stably compact L. Throws NotStablyCompact.
FiniteMap alpha_map(const FiniteProxFrame& p);
ChainMap alpha_map(const ProxChain& p);
/// ℜf : ℜL → ℜM.
FiniteMap rmap(const FiniteMap& f);
ChainMap rmap(const ChainMap& f);

/// (g∗f)(a) = ⋁{g(f(b)) : b ≺ a}. Throws NotComposable.
FiniteMap star_compose(const FiniteMap& g, const FiniteMap& f);
ChainMap star_compose(const ChainMap& g, const ChainMap& f);

/// θ(f) = ς_M ∘ ℜf : ℜL → M.
FiniteMap theta(const FiniteMap& f);
ChainMap theta(const ChainMap& f);
/// ρ(ψ) = ψ ∘ κ_L : L → M, for ψ : ℜL → M. Throws NotComposable when ψ
/// does not start at ℜL.
FiniteMap rho(const FiniteMap& psi, const FiniteProxFrame& base);
ChainMap rho(const ChainMap& psi, const ProxChain& base);

enum class MapClass { proxhom, pframemap };

/// Every map of the class between two finite proximity frames, in
/// lexicographic table order.
std::vector<FiniteMap> enumerate_maps(const FiniteProxFrame& dom, const FiniteProxFrame& cod, MapClass cls,
                                      Exec exec = Exec::parallel);

}  // namespace proxkit
