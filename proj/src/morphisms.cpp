#include "proxkit/morphisms.hpp"

#include "proxkit/error.hpp"

namespace proxkit {
namespace {

using Witness = std::optional<std::vector<Elem>>;

// ---- finite checks; each returns the elements of a failure --------------

Witness meet_hom_failure(const FiniteMap& f) {
  const FiniteFrame& L = *f.dom.frame;
  const FiniteFrame& M = *f.cod.frame;
  if (f(L.top()) != M.top()) return std::vector<Elem>{L.top()};
  for (Elem a = 0; a < L.size(); ++a) {
    for (Elem b = a + 1; b < L.size(); ++b) {
      if (f(L.meet(a, b)) != M.meet(f(a), f(b))) return std::vector<Elem>{a, b};
    }
  }
  return std::nullopt;
}

Witness join_hom_failure(const FiniteMap& f) {
  const FiniteFrame& L = *f.dom.frame;
  const FiniteFrame& M = *f.cod.frame;
  for (Elem a = 0; a < L.size(); ++a) {
    for (Elem b = a + 1; b < L.size(); ++b) {
      if (f(L.join(a, b)) != M.join(f(a), f(b))) return std::vector<Elem>{a, b};
    }
  }
  return std::nullopt;
}

Witness subadditive_failure(const FiniteMap& f) {
  const FiniteFrame& L = *f.dom.frame;
  const FiniteFrame& M = *f.cod.frame;
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem b = 0; b < L.size(); ++b) for_each_member(f.dom.below[b], [&](Elem a) { pairs.emplace_back(a, b); });
  for (const auto& [a1, b1] : pairs) {
    for (const auto& [a2, b2] : pairs) {
      if (!f.cod.rel(f(L.join(a1, a2)), M.join(f(b1), f(b2)))) return std::vector<Elem>{a1, b1, a2, b2};
    }
  }
  return std::nullopt;
}

Witness approximation_failure(const FiniteMap& f) {
  const FiniteFrame& M = *f.cod.frame;
  for (Elem a = 0; a < f.dom.size(); ++a) {
    Elem acc = M.bot();
    for_each_member(f.dom.below[a], [&](Elem b) { acc = M.join(acc, f(b)); });
    if (acc != f(a)) return std::vector<Elem>{a};
  }
  return std::nullopt;
}

Witness prec_failure(const FiniteMap& f) {
  for (Elem b = 0; b < f.dom.size(); ++b) {
    Witness w;
    for_each_member(f.dom.below[b], [&](Elem a) {
      if (!w && !f.cod.rel(f(a), f(b))) w = std::vector<Elem>{a, b};
    });
    if (w) return w;
  }
  return std::nullopt;
}

// On a finite frame ≪ is ≤.
Witness proper_failure(const FiniteMap& f) {
  for (Elem b = 0; b < f.dom.size(); ++b) {
    Witness w;
    for_each_member(f.dom.frame->down(b), [&](Elem a) {
      if (!w && !f.cod.frame->leq(f(a), f(b))) w = std::vector<Elem>{a, b};
    });
    if (w) return w;
  }
  return std::nullopt;
}

AxiomCheck finite_check(const FiniteMap& f, std::string axiom, const Witness& w, const std::string& what) {
  AxiomCheck c{std::move(axiom)};
  if (w) {
    c.verdict = Verdict::fail;
    for (Elem e : *w) c.witness.push_back(f.dom.frame->id(e));
    c.detail = what;
  }
  return c;
}

// ---- chain checks --------------------------------------------------------

using CodeWitness = std::optional<std::vector<Code>>;

CodeWitness monotone_failure(const ChainMap& f) {
  const ChainShape& s = f.dom().shape;
  for (std::uint32_t q = 0; q <= s.k; ++q) {
    const AffineSeq& b = f.blocks()[q];
    for (std::uint64_t r = 0; r + 1 <= b.head.size(); ++r) {
      if (b.at(r + 1) < b.at(r)) return std::vector<Code>{{q, r}, {q, r + 1}};
    }
    if (q < s.k && f.block_sup(q) > f({q + 1, 0})) {
      return std::vector<Code>{{q, b.head.size() + 1}, {q + 1, 0}};
    }
  }
  return std::nullopt;
}

CodeWitness chain_meet_hom_failure(const ChainMap& f) {
  // Binary meets on a chain are minima, so meet preservation is monotonicity.
  if (f(f.dom().shape.top()) != f.cod().shape.top()) return std::vector<Code>{f.dom().shape.top()};
  return monotone_failure(f);
}

CodeWitness chain_prec_failure(const ChainMap& f) {
  // Given monotonicity, ≺ fails only where a non-reflexive limit of the
  // codomain is hit by two points or by a reflexive point.
  const ProxChain& cod = f.cod();
  for (std::uint32_t q = 1; q <= cod.shape.k; ++q) {
    if (cod.reflexive(lim(q))) continue;
    const Preimage pre = preimage(f, lim(q));
    if (pre.count >= 2) return std::vector<Code>{*pre.first, *pre.second};
    if (pre.count == 1 && f.dom().reflexive(*pre.first)) return std::vector<Code>{*pre.first, *pre.first};
  }
  return std::nullopt;
}

CodeWitness chain_limit_failure(const ChainMap& f, bool only_non_reflexive) {
  for (std::uint32_t q = 1; q <= f.dom().shape.k; ++q) {
    if (only_non_reflexive && f.dom().reflexive(lim(q))) continue;
    if (f(lim(q)) != f.block_sup(q - 1)) return std::vector<Code>{lim(q)};
  }
  return std::nullopt;
}

CodeWitness chain_proper_failure(const ChainMap& f) {
  for (std::uint32_t q = 1; q <= f.cod().shape.k; ++q) {
    const Preimage pre = preimage(f, lim(q));
    if (pre.count >= 2) return std::vector<Code>{*pre.first, *pre.second};
    if (pre.count == 1 && !is_limit(*pre.first)) return std::vector<Code>{*pre.first, *pre.first};
  }
  return std::nullopt;
}

AxiomCheck chain_check(std::string axiom, const CodeWitness& w, const std::string& what) {
  AxiomCheck c{std::move(axiom), Verdict::symbolic};
  if (w) {
    c.verdict = Verdict::fail;
    for (Code e : *w) c.witness.push_back(element_name(e));
    c.detail = what;
  }
  return c;
}

CodeWitness bottom_failure(const ChainMap& f) {
  if (f(f.dom().shape.bot()) != f.cod().shape.bot()) return std::vector<Code>{f.dom().shape.bot()};
  return std::nullopt;
}

}  // namespace

// ---- validators ------------------------------------------------------------

AxiomReport validate_proxhom(const FiniteMap& f) {
  AxiomReport r;
  r.checks.push_back(finite_check(f, "meet-hom", meet_hom_failure(f), "binary meets or the top are not preserved"));
  r.checks.push_back(finite_check(f, "bottom", f(f.dom.frame->bot()) == f.cod.frame->bot()
                                                    ? Witness{}
                                                    : Witness{std::vector<Elem>{f.dom.frame->bot()}},
                                  "f(0) ≠ 0"));
  r.checks.push_back(finite_check(f, "subadditive", subadditive_failure(f),
                                  "a1 ≺ b1, a2 ≺ b2 but f(a1 ∨ a2) ⊀ f(b1) ∨ f(b2)"));
  r.checks.push_back(finite_check(f, "approximation", approximation_failure(f), "f(a) ≠ ⋁{f(b) : b ≺ a}"));
  return r;
}

AxiomReport validate_pframemap(const FiniteMap& f) {
  AxiomReport r;
  Witness hom = meet_hom_failure(f);
  if (!hom) hom = join_hom_failure(f);
  if (!hom && f(f.dom.frame->bot()) != f.cod.frame->bot()) hom = std::vector<Elem>{f.dom.frame->bot()};
  r.checks.push_back(finite_check(f, "frame-hom", hom, "finite meets or joins are not preserved"));
  r.checks.push_back(finite_check(f, "preserves-prec", prec_failure(f), "a ≺ b but f(a) ⊀ f(b)"));
  r.proper = !proper_failure(f).has_value();
  return r;
}

AxiomReport validate_proxhom(const ChainMap& f) {
  AxiomReport r;
  r.checks.push_back(chain_check("meet-hom", chain_meet_hom_failure(f), "not monotone or top not preserved"));
  r.checks.push_back(chain_check("bottom", bottom_failure(f), "f(0) ≠ 0"));
  r.checks.push_back(chain_check("subadditive", chain_prec_failure(f), "a ≺ b but f(a) ⊀ f(b)"));
  r.checks.push_back(chain_check("approximation", chain_limit_failure(f, true),
                                 "value at a non-reflexive limit differs from the supremum below it"));
  return r;
}

AxiomReport validate_pframemap(const ChainMap& f) {
  AxiomReport r;
  CodeWitness hom = chain_meet_hom_failure(f);
  if (!hom) hom = bottom_failure(f);
  if (!hom) hom = chain_limit_failure(f, false);
  r.checks.push_back(chain_check("frame-hom", hom, "directed joins, finite meets or bounds are not preserved"));
  r.checks.push_back(chain_check("preserves-prec", chain_prec_failure(f), "a ≺ b but f(a) ⊀ f(b)"));
  r.proper = !chain_proper_failure(f).has_value();
  return r;
}

bool is_proxhom(const FiniteMap& f) {
  return f(f.dom.frame->bot()) == f.cod.frame->bot() && !meet_hom_failure(f) && !approximation_failure(f) &&
         !subadditive_failure(f);
}
bool is_proxhom(const ChainMap& f) { return validate_proxhom(f).ok(); }
bool is_pframemap(const FiniteMap& f) {
  return f(f.dom.frame->bot()) == f.cod.frame->bot() && !meet_hom_failure(f) && !join_hom_failure(f) &&
         !prec_failure(f);
}
bool is_pframemap(const ChainMap& f) { return validate_pframemap(f).ok(); }
bool preserves_prec(const FiniteMap& f) { return !prec_failure(f); }
bool preserves_prec(const ChainMap& f) { return !chain_prec_failure(f); }
bool is_proper(const FiniteMap& f) { return !proper_failure(f); }
bool is_proper(const ChainMap& f) { return !chain_proper_failure(f); }

// ---- structure maps --------------------------------------------------------

FiniteMap kappa_map(const FiniteProxFrame& p) {
  const FiniteRoundIdeals R = round_ideal_frame(p);
  std::vector<Elem> table;
  for (Elem a = 0; a < p.size(); ++a) table.push_back(R.locate(kappa(p, a)));
  return FiniteMap{p, R.way_below, std::move(table)};
}

FiniteMap sigma_map(const FiniteProxFrame& p) {
  const FiniteRoundIdeals R = round_ideal_frame(p);
  std::vector<Elem> table;
  for (ElemSet I : R.members) table.push_back(sigma(p, I));
  return FiniteMap{R.way_below, p, std::move(table)};
}

FiniteMap alpha_map(const FiniteProxFrame& p) {
  const FiniteRoundIdeals R = round_ideal_frame(p);
  std::vector<Elem> table;
  for (Elem a = 0; a < p.size(); ++a) table.push_back(R.locate(alpha(p, a)));
  return FiniteMap{p, R.way_below, std::move(table)};
}

FiniteMap rmap(const FiniteMap& f) {
  const FiniteRoundIdeals Rl = round_ideal_frame(f.dom);
  const FiniteRoundIdeals Rm = round_ideal_frame(f.cod);
  std::vector<Elem> table;
  for (ElemSet I : Rl.members) table.push_back(Rm.locate(rmap(f, I)));
  return FiniteMap{Rl.way_below, Rm.way_below, std::move(table)};
}

ChainMap kappa_map(const ProxChain& p) {
  std::vector<AffineSeq> blocks;
  for (std::uint32_t q = 0; q <= p.shape.k; ++q) {
    blocks.push_back(AffineSeq{{}, Tail{q, 1, static_cast<std::int64_t>(p.shift(q))}});
  }
  return ChainMap(p, round_ideal_chain(p), std::move(blocks));
}

ChainMap sigma_map(const ProxChain& p) {
  const ProxChain R = round_ideal_chain(p);
  std::vector<AffineSeq> blocks;
  for (std::uint32_t q = 0; q <= p.shape.k; ++q) {
    const auto s = static_cast<std::int64_t>(p.shift(q));
    AffineSeq b{{}, Tail{q, 1, -s}};
    if (s == 1) b.head.push_back(lim(q));  // BelowLim(q) and Prin(Lim(q)) both join to Lim(q)
    blocks.push_back(std::move(b));
  }
  return ChainMap(R, p, std::move(blocks));
}

ChainMap alpha_map(const ProxChain& p) {
  if (!is_stably_compact(p)) {
    throw Error(ErrorKind::NotStablyCompact, describe(p) + ": top is a limit");
  }
  std::vector<AffineSeq> blocks;
  for (std::uint32_t q = 0; q <= p.shape.k; ++q) {
    AffineSeq b{{}, Tail{q, 1, static_cast<std::int64_t>(p.shift(q))}};
    if (q >= 1) b.head.push_back(lim(q));  // {b ≪ Lim(q)} = BelowLim(q)
    blocks.push_back(std::move(b));
  }
  return ChainMap(p, round_ideal_chain(p), std::move(blocks));
}

ChainMap rmap(const ChainMap& f) {
  // Principal ideals: ℜf(Prin(x)) = κ(f(x)). Limit positions hold
  // BelowLim(q), whose image depends on the supremum of f below Lim(q).
  ChainMap out = compose(kappa_map(f.cod()), compose(f, sigma_map(f.dom())));
  for (std::uint32_t q = 1; q <= f.dom().shape.k; ++q) {
    out = out.with_value(lim(q), encode(f.cod(), rmap(f, below_lim(q))));
  }
  return out;
}

FiniteMap star_compose(const FiniteMap& g, const FiniteMap& f) {
  if (!(f.cod == g.dom)) throw Error(ErrorKind::NotComposable, "codomain and domain differ");
  const FiniteFrame& N = *g.cod.frame;
  std::vector<Elem> table;
  for (Elem a = 0; a < f.dom.size(); ++a) {
    Elem acc = N.bot();
    for_each_member(f.dom.below[a], [&](Elem b) { acc = N.join(acc, g(f(b))); });
    table.push_back(acc);
  }
  return FiniteMap{f.dom, g.cod, std::move(table)};
}

ChainMap star_compose(const ChainMap& g, const ChainMap& f) {
  ChainMap gf = compose(g, f);
  ChainMap out = gf;
  for (std::uint32_t q = 1; q <= f.dom().shape.k; ++q) {
    if (!f.dom().reflexive(lim(q))) out = out.with_value(lim(q), gf.block_sup(q - 1));
  }
  return out;
}

FiniteMap theta(const FiniteMap& f) { return compose(sigma_map(f.cod), rmap(f)); }
ChainMap theta(const ChainMap& f) { return compose(sigma_map(f.cod()), rmap(f)); }

FiniteMap rho(const FiniteMap& psi, const FiniteProxFrame& base) { return compose(psi, kappa_map(base)); }
ChainMap rho(const ChainMap& psi, const ProxChain& base) { return compose(psi, kappa_map(base)); }

}  // namespace proxkit
