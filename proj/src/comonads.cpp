#include "proxkit/comonads.hpp"

#include <algorithm>
#include <random>
#include <type_traits>

#include "proxkit/error.hpp"

namespace proxkit {

// ---- finite model ----------------------------------------------------------

FiniteProxFrame FiniteModel::R(const Object& p) { return round_ideal_frame(p).way_below; }
FiniteProxFrame FiniteModel::C(const Object& p) { return round_ideal_frame(p).max_proximity; }
FiniteProxFrame FiniteModel::I(const Object& p) { return ideal_frame(p.frame).way_below; }

FiniteMap FiniteModel::cmap(const Map& f) { return proxkit::retag(proxkit::rmap(f), C(f.dom), C(f.cod)); }

FiniteMap FiniteModel::imap(const Map& f) {
  return proxkit::rmap(proxkit::retag(f, order_proximity(f.dom.frame), order_proximity(f.cod.frame)));
}

FiniteMap FiniteModel::r(const Object& p) { return kappa_map(R(p)); }
FiniteMap FiniteModel::r_via_R(const Object& p) { return proxkit::rmap(kappa_map(p)); }

FiniteMap FiniteModel::beta(const Object& p) {
  const FiniteRoundIdeals ri = round_ideal_frame(p);
  return proxkit::retag(identity_map(ri.way_below), ri.way_below, ri.max_proximity);
}

FiniteMap FiniteModel::epsilon(const Object& p) { return proxkit::retag(sigma_map(p), C(p), p); }

FiniteMap FiniteModel::c(const Object& p) {
  const FiniteMap bk = proxkit::compose(beta(p), kappa_map(p));
  const Object Cp = C(p);
  return proxkit::retag(proxkit::rmap(bk), Cp, C(Cp));
}

FiniteMap FiniteModel::m_incl(const Object& p) {
  const FiniteRoundIdeals ri = round_ideal_frame(p);
  const FiniteRoundIdeals all = ideal_frame(p.frame);
  std::vector<Elem> table;
  for (ElemSet I : ri.members) table.push_back(all.locate(I));
  return FiniteMap{ri.way_below, all.way_below, std::move(table)};
}

Elem FiniteModel::r_by_membership(const Object& p, Point ideal) {
  const FiniteRoundIdeals ri = round_ideal_frame(p);
  ElemSet S = 0;
  for (Elem K = 0; K < ri.members.size(); ++K) {
    if (way_below_ideals(*p.frame, ri.members[K], ri.members[ideal])) S |= singleton(K);
  }
  return round_ideal_frame(ri.way_below).locate(S);
}

Elem FiniteModel::c_by_membership(const Object& p, Point ideal) {
  const FiniteRoundIdeals ri = round_ideal_frame(p);
  ElemSet S = 0;
  for (Elem K = 0; K < ri.members.size(); ++K) {
    if (contains(ri.members[ideal], proxkit::sigma(p, ri.members[K]))) S |= singleton(K);
  }
  return round_ideal_frame(ri.max_proximity).locate(S);
}

bool FiniteModel::subideal(const Object& p, Point i, Point j) {
  const FiniteRoundIdeals ri = round_ideal_frame(p);
  return is_subset(ri.members[i], ri.members[j]);
}

bool FiniteModel::max_prox_by_sigma(const Object& p, Point i, Point j) {
  const FiniteRoundIdeals ri = round_ideal_frame(p);
  return is_subset(ri.members[i], ri.members[j]) &&
         p.rel(proxkit::sigma(p, ri.members[i]), proxkit::sigma(p, ri.members[j]));
}

bool FiniteModel::max_prox_by_kappa(const Object& p, Point i, Point j) {
  const FiniteRoundIdeals ri = round_ideal_frame(p);
  return is_subset(ri.members[i], ri.members[j]) &&
         way_below_ideals(*p.frame, ri.members[i], proxkit::kappa(p, proxkit::sigma(p, ri.members[j])));
}

std::vector<Elem> FiniteModel::points(const Object& p, std::size_t, std::uint64_t) {
  std::vector<Elem> out(p.size());
  for (Elem x = 0; x < p.size(); ++x) out[x] = x;
  return out;
}

// ---- chain model -----------------------------------------------------------

ChainMap ChainModel::cmap(const Map& f) { return proxkit::rmap(f).retag(C(f.dom()), C(f.cod())); }

ChainMap ChainModel::imap(const Map& f) {
  return proxkit::rmap(f.retag(chain_order_proximity(f.dom().shape), chain_order_proximity(f.cod().shape)));
}

ChainMap ChainModel::r(const Object& p) { return kappa_map(R(p)); }
ChainMap ChainModel::r_via_R(const Object& p) { return proxkit::rmap(kappa_map(p)); }
ChainMap ChainModel::beta(const Object& p) { return identity_map(R(p)).retag(R(p), C(p)); }
ChainMap ChainModel::epsilon(const Object& p) { return sigma_map(p).retag(C(p), p); }

ChainMap ChainModel::c(const Object& p) {
  const ChainMap bk = proxkit::compose(beta(p), kappa_map(p));
  return proxkit::rmap(bk).retag(C(p), C(C(p)));
}

ChainMap ChainModel::m_incl(const Object& p) {
  // Block q ≥ 1 of ℜL is BelowLim(q), then Prin(Lim(q)) when Lim(q) is
  // reflexive, then the successors. 𝔍L always has the Prin(Lim(q)) slot.
  std::vector<AffineSeq> blocks;
  blocks.push_back(AffineSeq{{}, Tail{0, 1, 0}});
  for (std::uint32_t q = 1; q <= p.shape.k; ++q) {
    blocks.push_back(AffineSeq{{lim(q)}, Tail{q, 1, 1 - static_cast<std::int64_t>(p.shift(q))}});
  }
  return ChainMap(R(p), I(p), std::move(blocks));
}

Code ChainModel::r_by_membership(const Object& p, Point ideal) {
  const ChainIdeal I = decode(p, ideal);
  const ProxChain Rp = R(p);
  const auto S = classify_downset(Rp.shape, [&](Code K) { return way_below_ideals(decode(p, K), I); });
  if (!S) throw Error(ErrorKind::UnsupportedRepresentation, "empty set of ideals way below " + ideal_name(I));
  return encode(Rp, *S);
}

Code ChainModel::c_by_membership(const Object& p, Point ideal) {
  const ChainIdeal I = decode(p, ideal);
  const ChainMap eps = epsilon(p);
  const ProxChain Cp = C(p);
  const auto S = classify_downset(Cp.shape, [&](Code K) { return I.contains(eps(K)); });
  if (!S) throw Error(ErrorKind::UnsupportedRepresentation, "c(" + ideal_name(I) + ") is empty");
  return encode(Cp, *S);
}

bool ChainModel::subideal(const Object& p, Point i, Point j) {
  return proxkit::subideal(decode(p, i), decode(p, j));
}

bool ChainModel::max_prox_by_sigma(const Object& p, Point i, Point j) {
  const ChainIdeal I = decode(p, i), J = decode(p, j);
  return proxkit::subideal(I, J) && p.rel(proxkit::sigma(p, I), proxkit::sigma(p, J));
}

bool ChainModel::max_prox_by_kappa(const Object& p, Point i, Point j) {
  const ChainIdeal I = decode(p, i), J = decode(p, j);
  return proxkit::subideal(I, J) && way_below_ideals(I, proxkit::kappa(p, proxkit::sigma(p, J)));
}

std::vector<Code> ChainModel::points(const Object& p, std::size_t extra, std::uint64_t seed) {
  std::vector<Code> out = chain_class_points(p.shape);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < extra; ++i) {
    const auto q = static_cast<std::uint32_t>(rng() % (p.shape.k + 1));
    const std::uint64_t r = p.shape.finite_block(q) ? rng() % (p.shape.m + 1) : rng() % 1000000;
    out.push_back({q, r});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<ChainIdeal> classify_downset(const ChainShape& shape, const std::function<bool(Code)>& in) {
  if (in(shape.top())) return prin(shape.top());
  for (std::uint32_t q = shape.k + 1; q-- > 0;) {
    if (!in({q, 0})) continue;
    if (shape.finite_block(q)) {
      std::uint64_t r = 0;
      while (r < shape.m && in({q, r + 1})) ++r;
      return prin({q, r});
    }
    constexpr std::uint64_t kFar = std::uint64_t{1} << 50;
    if (in({q, kFar})) return below_lim(q + 1);
    std::uint64_t lo = 0, hi = 1;  // in(lo), and eventually !in(hi)
    while (in({q, hi})) lo = hi, hi *= 2;
    while (hi - lo > 1) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      (in({q, mid}) ? lo : hi) = mid;
    }
    return prin({q, lo});
  }
  return std::nullopt;
}

// ---- Kleisli composition ---------------------------------------------------

// r_L is κ of the round-ideal frame, so it is determined by u's domain.
FiniteMap kleisli_compose(const FiniteMap& v, const FiniteMap& u) {
  return compose(v, compose(rmap(u), kappa_map(u.dom)));
}

ChainMap kleisli_compose(const ChainMap& v, const ChainMap& u) {
  return compose(v, compose(rmap(u), kappa_map(u.dom())));
}

// ---- coalgebras ------------------------------------------------------------

FiniteMap coalgebra_structure(const FiniteProxFrame& p) {
  return compose(FiniteModel::beta(p), alpha_map(p));
}

ChainMap coalgebra_structure(const ProxChain& p) { return compose(ChainModel::beta(p), alpha_map(p)); }

namespace {

const FiniteProxFrame& dom_of(const FiniteMap& f) { return f.dom; }
const FiniteProxFrame& cod_of(const FiniteMap& f) { return f.cod; }
const ProxChain& dom_of(const ChainMap& f) { return f.dom(); }
const ProxChain& cod_of(const ChainMap& f) { return f.cod(); }

bool member(const FiniteProxFrame& p, Elem ideal, Elem a) {
  return contains(round_ideal_frame(p).members[ideal], a);
}
bool member(const ProxChain& p, Code ideal, Code a) { return decode(p, ideal).contains(a); }

template <class M>
class Harness {
 public:
  using Object = typename M::Object;
  using Map = typename M::Map;
  using Point = typename M::Point;

  explicit Harness(const LawConfig& cfg) : cfg_(cfg) {}

  LawReport start(const std::string& law, const std::string& instance) const {
    LawReport r;
    r.law = law;
    r.instance = instance;
    r.seed = cfg_.seed;
    return r;
  }

  std::vector<Point> points(const Object& o) const { return M::points(o, cfg_.samples, cfg_.seed); }

  static void fail(LawReport& rep, std::vector<std::string> witness, std::string detail) {
    if (!rep.pass) return;
    rep.pass = false;
    rep.witness = std::move(witness);
    rep.detail = std::move(detail);
  }

  /// Runs `body`, turning library errors into a failed report.
  template <class F>
  static void guarded(LawReport& rep, F&& body) {
    try {
      body();
    } catch (const Error& e) {
      fail(rep, e.witness(), e.what());
    }
  }

  // Exact comparison first, then pointwise evaluation as a guard on the
  // symbolic code paths.
  void equal(LawReport& rep, const Map& f, const Map& g, const std::string& what) const {
    if (!rep.pass) return;
    if (!(dom_of(f) == dom_of(g)) || !(cod_of(f) == cod_of(g))) {
      fail(rep, {}, what + ": the two sides have different types");
      return;
    }
    const Object& dom = dom_of(f);
    const Object& cod = cod_of(f);
    if (auto x = M::difference(f, g)) {
      fail(rep, {M::name(dom, *x), M::name(cod, f(*x)), M::name(cod, g(*x))},
           what + " fails at " + M::name(dom, *x));
      return;
    }
    for (Point x : points(dom)) {
      ++rep.samples;
      if (f(x) != g(x)) {
        fail(rep, {M::name(dom, x), M::name(cod, f(x)), M::name(cod, g(x))},
             what + " fails pointwise at " + M::name(dom, x));
        return;
      }
    }
  }

  void leq(LawReport& rep, const Map& f, const Map& g, const std::string& what) const {
    if (!rep.pass) return;
    if (!(dom_of(f) == dom_of(g))) {
      fail(rep, {}, what + ": the two sides have different domains");
      return;
    }
    const Object& dom = dom_of(f);
    const Object& cod = cod_of(f);
    if (auto x = M::not_leq(f, g)) {
      fail(rep, {M::name(dom, *x), M::name(cod, f(*x)), M::name(cod, g(*x))},
           what + " fails at " + M::name(dom, *x));
      return;
    }
    for (Point x : points(dom)) {
      ++rep.samples;
      if (!M::leq(cod, f(x), g(x))) {
        fail(rep, {M::name(dom, x), M::name(cod, f(x)), M::name(cod, g(x))},
             what + " fails pointwise at " + M::name(dom, x));
        return;
      }
    }
  }

  // ---- (ℜ, r, ς) -----------------------------------------------------------

  std::vector<LawReport> r_laws(const Object& L) const {
    const std::string inst = M::describe(L);
    std::vector<LawReport> out;

    LawReport ks = start("R.kappa-sigma", inst);
    guarded(ks, [&] {
      const Map sigma = M::sigma(L), kappa = M::kappa(L);
      equal(ks, M::compose(sigma, kappa), M::identity(L), "ς∘κ = 1");
      leq(ks, M::identity(M::R(L)), M::compose(kappa, sigma), "1 ≤ κ∘ς");
    });
    out.push_back(ks);

    LawReport left = start("R.counit.left", inst);
    guarded(left, [&] {
      equal(left, M::compose(M::sigma(M::R(L)), M::r(L)), M::identity(M::R(L)), "ς_ℜL ∘ r_L = 1");
    });
    out.push_back(left);

    LawReport right = start("R.counit.right", inst);
    guarded(right, [&] {
      equal(right, M::compose(M::rmap(M::sigma(L)), M::r(L)), M::identity(M::R(L)), "ℜς_L ∘ r_L = 1");
    });
    out.push_back(right);

    LawReport assoc = start("R.coassoc", inst);
    guarded(assoc, [&] {
      const Map r = M::r(L);
      equal(assoc, M::compose(M::r(M::R(L)), r), M::compose(M::rmap(r), r), "r_ℜL ∘ r_L = ℜr_L ∘ r_L");
    });
    out.push_back(assoc);

    LawReport routes = start("R.r-routes", inst);
    guarded(routes, [&] { equal(routes, M::r(L), M::r_via_R(L), "κ_ℜL = ℜκ_L"); });
    out.push_back(routes);

    LawReport memb = start("R.r-membership", inst);
    guarded(memb, [&] {
      const Object R = M::R(L);
      const Map r = M::r(L);
      for (Point I : points(R)) {
        ++memb.samples;
        const Point by_rule = M::r_by_membership(L, I);
        if (r(I) != by_rule) {
          fail(memb, {M::name(R, I), M::name(M::R(R), r(I)), M::name(M::R(R), by_rule)},
               "r_L(I) differs from {K : K ≪ I}");
          return;
        }
      }
    });
    out.push_back(memb);

    LawReport idem = start("R.idempotent", inst);
    guarded(idem, [&] {
      const Map r = M::r(L), rs = M::rmap(M::sigma(L));
      equal(idem, M::compose(rs, r), M::identity(M::R(L)), "ℜς ∘ r = 1");
      equal(idem, M::compose(r, rs), M::identity(M::R(M::R(L))), "r ∘ ℜς = 1");
    });
    out.push_back(idem);
    return out;
  }

  // ---- (𝒞, ε, c) -----------------------------------------------------------

  LawReport kz(const Object& L) const {
    LawReport rep = start("C.kz", M::describe(L));
    guarded(rep, [&] {
      leq(rep, M::epsilon(M::C(L)), M::cmap(M::epsilon(L)), "ε_𝒞L ≤ 𝒞(ε_L)");
    });
    return rep;
  }

  LawReport submonad(const Object& L) const {
    LawReport rep = start("C.submonad", M::describe(L));
    guarded(rep, [&] {
      const Object R = M::R(L), C = M::C(L);
      const Map beta = M::beta(L);
      const Map via_R = M::compose(M::beta(C), M::rmap(beta));
      const Map via_C = M::compose(M::cmap(beta), M::beta(R));
      equal(rep, via_R, via_C, "β_𝒞L∘ℜβ_L = 𝒞β_L∘β_ℜL");
      equal(rep, M::compose(M::c(L), beta), M::compose(via_R, M::r(L)), "c_L∘β_L = (ββ)_L∘r_L");
      equal(rep, M::compose(M::epsilon(L), beta), M::sigma(L), "ε∘β = ς");
    });
    return rep;
  }

  std::vector<LawReport> c_laws(const Object& L) const {
    const std::string inst = M::describe(L);
    std::vector<LawReport> out;

    LawReport valid = start("C.max-proximity.valid", inst);
    guarded(valid, [&] {
      const AxiomReport ax = validate_proximity(M::C(L));
      ++valid.samples;
      if (const AxiomCheck* bad = ax.first_failure()) fail(valid, bad->witness, "⊑ fails " + bad->axiom);
    });
    out.push_back(valid);

    LawReport defs = start("C.max-proximity.defs", inst);
    LawReport incl = start("C.way-below-in-max", inst);
    guarded(defs, [&] {
      const Object R = M::R(L), C = M::C(L);
      const std::vector<Point> pts = points(R);
      std::uint64_t strict = 0;
      for (Point I : pts) {
        for (Point J : pts) {
          ++defs.samples;
          ++incl.samples;
          const bool by_sigma = M::max_prox_by_sigma(L, I, J);
          const bool by_kappa = M::max_prox_by_kappa(L, I, J);
          if (by_sigma != by_kappa || by_sigma != C.rel(I, J)) {
            fail(defs, {M::name(R, I), M::name(R, J)}, "the readings of ⊑ disagree");
          }
          if (R.rel(I, J) && !C.rel(I, J)) fail(incl, {M::name(R, I), M::name(R, J)}, "≪ not contained in ⊑");
          if (C.rel(I, J) && !R.rel(I, J)) ++strict;
        }
      }
      incl.detail = std::to_string(strict) + " sampled pairs in ⊑ but not in ≪";
    });
    out.push_back(defs);
    out.push_back(incl);

    LawReport eb = start("C.epsilon-beta", inst);
    guarded(eb, [&] { equal(eb, M::compose(M::epsilon(L), M::beta(L)), M::sigma(L), "ε∘β = ς"); });
    out.push_back(eb);

    LawReport left = start("C.counit.left", inst);
    guarded(left, [&] {
      equal(left, M::compose(M::epsilon(M::C(L)), M::c(L)), M::identity(M::C(L)), "ε_𝒞L ∘ c_L = 1");
    });
    out.push_back(left);

    LawReport right = start("C.counit.right", inst);
    guarded(right, [&] {
      equal(right, M::compose(M::cmap(M::epsilon(L)), M::c(L)), M::identity(M::C(L)), "𝒞(ε_L) ∘ c_L = 1");
    });
    out.push_back(right);

    LawReport assoc = start("C.coassoc", inst);
    guarded(assoc, [&] {
      const Map c = M::c(L);
      equal(assoc, M::compose(M::c(M::C(L)), c), M::compose(M::cmap(c), c), "c_𝒞L ∘ c_L = 𝒞(c_L) ∘ c_L");
    });
    out.push_back(assoc);

    LawReport memb = start("C.c-membership", inst);
    guarded(memb, [&] {
      const Object C = M::C(L), CC = M::C(M::C(L));
      const Map c = M::c(L);
      for (Point I : points(C)) {
        ++memb.samples;
        const Point by_rule = M::c_by_membership(L, I);
        if (c(I) != by_rule) {
          fail(memb, {M::name(C, I), M::name(CC, c(I)), M::name(CC, by_rule)},
               "c_L(I) differs from {K : ε(K) ∈ I}");
          return;
        }
      }
    });
    out.push_back(memb);

    LawReport adj = start("C.adjunction", inst);
    guarded(adj, [&] {
      const Object C = M::C(L), CC = M::C(C);
      const Map c = M::c(L), epsC = M::epsilon(C), eps = M::epsilon(L);
      const Map bkC = M::compose(M::beta(C), M::kappa(C));
      const Map bk = M::compose(M::beta(L), M::kappa(L));
      leq(adj, M::identity(C), M::compose(epsC, c), "1 ≤ ε_𝒞L∘c_L");
      leq(adj, M::compose(c, epsC), M::identity(CC), "c_L∘ε_𝒞L ≤ 1");
      leq(adj, M::identity(CC), M::compose(bkC, epsC), "1 ≤ β_𝒞Lκ_𝒞L∘ε_𝒞L");
      leq(adj, M::compose(epsC, bkC), M::identity(C), "ε_𝒞L∘β_𝒞Lκ_𝒞L ≤ 1");
      leq(adj, M::identity(C), M::compose(bk, eps), "1 ≤ β_Lκ_L∘ε_L");
      leq(adj, M::compose(eps, bk), M::identity(L), "ε_L∘β_Lκ_L ≤ 1");
    });
    out.push_back(adj);

    out.push_back(kz(L));
    out.push_back(submonad(L));

    LawReport lemma = start("C.ccl-lemma", inst);
    guarded(lemma, [&] {
      const Object C = M::C(L), CC = M::C(C);
      const Map eps = M::epsilon(L), epsC = M::epsilon(C);
      const std::vector<Point> cpts = points(C);
      for (Point J : points(CC)) {
        const Point x = epsC(J);
        // The least K̄ with x ⊑ K̄ is x itself or its successor.
        std::vector<Point> cands = cpts;
        cands.push_back(x);
        if constexpr (std::is_same_v<M, ChainModel>) {
          if (x != C.shape.top()) cands.push_back({x.block, x.offset + 1});
        }
        for (Point I : cpts) {
          ++lemma.samples;
          const bool lhs = member(L, I, eps(x));
          bool rhs = false;
          for (Point K : cands) rhs = rhs || (C.rel(x, K) && member(L, I, eps(K)));
          if (lhs != rhs) {
            fail(lemma, {M::name(CC, J), M::name(C, I)}, "membership through 𝒞𝒞L disagrees");
            return;
          }
        }
      }
    });
    out.push_back(lemma);

    if constexpr (std::is_same_v<M, ChainModel>) {
      LawReport np = start("C.nonprincipal", inst);
      guarded(np, [&] {
        const Object C = M::C(L);
        const Map c = M::c(L);
        for (std::uint32_t q = 1; q <= L.shape.k; ++q) {
          ++np.samples;
          const Code x = encode(L, below_lim(q));
          const ChainIdeal got = decode(C, c(x));
          const Code first = encode(L, prin(succ(q - 1, 0)));
          const ChainIdeal expected = dir_sup(C, ElementFamily{{}, Tail{first.block, 1, static_cast<std::int64_t>(first.offset)}});
          if (got != expected || got.kind != ChainIdeal::Kind::below_lim) {
            fail(np, {ideal_name(below_lim(q)), ideal_name(got), ideal_name(expected)},
                 "c(β(BelowLim)) is not the union of the β(Prin(Succ))");
            return;
          }
        }
      });
      out.push_back(np);
    }
    return out;
  }

  // ---- coalgebras ----------------------------------------------------------

  std::vector<LawReport> coalgebra(const Object& L) const {
    if (!M::is_stably_compact(L)) return {};
    const std::string inst = M::describe(L);
    std::vector<LawReport> out;
    LawReport counit = start("coalg.counit", inst);
    LawReport coassoc = start("coalg.coassoc", inst);
    LawReport adj = start("coalg.alpha-adjoint", inst);
    guarded(counit, [&] {
      const Map ba = coalgebra_structure(L);
      equal(counit, M::compose(M::epsilon(L), ba), M::identity(L), "ε∘βα = 1");
      guarded(coassoc, [&] {
        equal(coassoc, M::compose(M::c(L), ba), M::compose(M::cmap(ba), ba), "c∘βα = 𝒞(βα)∘βα");
      });
      guarded(adj, [&] {
        const Map alpha = M::alpha(L), sigma = M::sigma(L);
        leq(adj, M::identity(L), M::compose(sigma, alpha), "1 ≤ ς∘α");
        leq(adj, M::compose(alpha, sigma), M::identity(M::R(L)), "α∘ς ≤ 1");
        leq(adj, alpha, M::kappa(L), "α ≤ κ");
      });
    });
    out.push_back(counit);
    out.push_back(coassoc);
    out.push_back(adj);
    return out;
  }

  LawReport coalgebra_morphism(const Map& f) const {
    LawReport rep = start("coalg.morphism", M::describe(dom_of(f)) + " -> " + M::describe(cod_of(f)));
    guarded(rep, [&] {
      const Map lhs = M::compose(M::rmap(f), M::alpha(dom_of(f)));
      const Map rhs = M::compose(M::alpha(cod_of(f)), f);
      const auto diff = M::difference(lhs, rhs);
      const bool proper = M::is_proper(f);
      rep.samples = 1;
      rep.detail = std::string("coalgebra morphism: ") + (diff ? "no" : "yes") + ", proper: " + (proper ? "yes" : "no");
      if (diff.has_value() == proper) {
        rep.pass = false;
        if (diff) rep.witness = {M::name(dom_of(f), *diff)};
      }
    });
    return rep;
  }

  // ---- morphisms -----------------------------------------------------------

  std::vector<LawReport> morphisms(const std::vector<Map>& maps, const std::string& inst) const {
    std::vector<Map> hom, frm;
    for (const Map& f : maps) {
      if (M::is_proxhom(f)) hom.push_back(f);
      if (M::is_pframemap(f)) frm.push_back(f);
    }
    std::vector<LawReport> out;

    LawReport dec = start("M.decomposition", inst);
    guarded(dec, [&] {
      for (const Map& f : hom) {
        equal(dec, M::compose(M::sigma(cod_of(f)), M::compose(M::rmap(f), M::kappa(dom_of(f)))), f,
              "ς∘ℜf∘κ = f");
      }
    });
    out.push_back(dec);

    LawReport tr = start("M.theta-rho", inst);
    guarded(tr, [&] {
      std::vector<std::pair<Map, Object>> psis;
      for (const Map& f : hom) {
        const Map t = theta(f);
        if (!M::is_pframemap(t)) fail(tr, {}, "θ(f) is not a ≺-preserving frame map");
        equal(tr, rho(t, dom_of(f)), f, "ρθ = 1");
        psis.emplace_back(t, dom_of(f));
      }
      for (const Map& g : frm) psis.emplace_back(M::compose(g, M::sigma(dom_of(g))), dom_of(g));
      if constexpr (std::is_same_v<M, FiniteModel>) {
        // Every ≺-preserving frame map ℜL → M between the objects in play.
        std::vector<Object> objs;
        for (const Map& f : maps) {
          for (const Object& o : {dom_of(f), cod_of(f)}) {
            if (std::find(objs.begin(), objs.end(), o) == objs.end()) objs.push_back(o);
          }
        }
        for (const Object& a : objs) {
          for (const Object& b : objs) {
            for (const Map& psi : enumerate_maps(M::R(a), b, MapClass::pframemap)) psis.emplace_back(psi, a);
          }
        }
      }
      for (const auto& [psi, base] : psis) {
        const Map f = rho(psi, base);
        if (!M::is_proxhom(f)) fail(tr, {}, "ρ(ψ) is not a proximity homomorphism");
        equal(tr, theta(f), psi, "θρ = 1");
      }
    });
    out.push_back(tr);

    LawReport proper = start("M.rmap-proper", inst);
    guarded(proper, [&] {
      for (const Map& f : hom) {
        ++proper.samples;
        const Map rf = M::rmap(f);
        if (!M::is_pframemap(rf) || !M::is_proper(rf)) fail(proper, {}, "ℜf is not a proper frame map");
      }
    });
    out.push_back(proper);

    LawReport pm = start("M.rmap-preserves-max", inst);
    guarded(pm, [&] {
      for (const Map& g : frm) {
        ++pm.samples;
        if (!preserves_prec(M::cmap(g))) fail(pm, {}, "ℜf does not preserve ⊑");
      }
    });
    out.push_back(pm);

    LawReport sl = start("M.star-leq", inst);
    LawReport remark = start("M.star-remark", inst);
    LawReport kf = start("M.kleisli.functor", inst);
    LawReport kid = start("M.kleisli.identity", inst);
    LawReport ka = start("M.kleisli.assoc", inst);
    guarded(sl, [&] {
      for (const Map& f : hom) {
        const Map tf = theta(f);
        equal(kid, kleisli_compose(M::sigma(cod_of(f)), tf), tf, "ς • θf = θf");
        equal(kid, kleisli_compose(tf, M::sigma(dom_of(f))), tf, "θf • ς = θf");
        for (const Map& g : hom) {
          if (!(cod_of(f) == dom_of(g))) continue;
          const Map star = star_compose(g, f), comp = M::compose(g, f);
          if (!M::is_proxhom(star)) fail(sl, {}, "g∗f is not a proximity homomorphism");
          leq(sl, star, comp, "g∗f ≤ g∘f");
          if (M::is_proxhom(comp)) equal(remark, star, comp, "g∘f homomorphism ⇒ g∗f = g∘f");
          ++remark.samples;
          equal(kf, theta(star), kleisli_compose(theta(g), tf), "θ(g∗f) = θg • θf");
          std::size_t triples = 0;
          for (const Map& h : hom) {
            if (!(cod_of(g) == dom_of(h)) || ++triples > 8) continue;
            const Map th = theta(h), tg = theta(g);
            equal(ka, kleisli_compose(kleisli_compose(th, tg), tf), kleisli_compose(th, kleisli_compose(tg, tf)),
                  "(θh • θg) • θf = θh • (θg • θf)");
          }
        }
      }
    });
    for (LawReport* r : {&sl, &remark, &kf, &kid, &ka}) out.push_back(*r);
    return out;
  }

  std::vector<LawReport> naturality(const std::vector<Map>& maps, const std::string& inst) const {
    std::vector<Map> hom, frm;
    for (const Map& f : maps) {
      if (M::is_proxhom(f)) hom.push_back(f);
      if (M::is_pframemap(f)) frm.push_back(f);
    }
    std::vector<LawReport> out;
    const auto square = [&](const char* law, const std::vector<Map>& family, auto&& sides, const char* what) {
      LawReport rep = start(law, inst);
      guarded(rep, [&] {
        for (const Map& f : family) {
          const auto [lhs, rhs] = sides(f);
          equal(rep, lhs, rhs, what);
        }
      });
      out.push_back(rep);
    };
    square("N.sigma", frm, [](const Map& f) {
      return std::pair{M::compose(f, M::sigma(dom_of(f))), M::compose(M::sigma(cod_of(f)), M::rmap(f))};
    }, "f∘ς_L = ς_M∘ℜf");
    square("N.m", hom, [](const Map& f) {
      return std::pair{M::compose(M::imap(f), M::m_incl(dom_of(f))), M::compose(M::m_incl(cod_of(f)), M::rmap(f))};
    }, "𝔍f∘m_L = m_M∘ℜf");
    square("N.r", hom, [](const Map& f) {
      return std::pair{M::compose(M::rmap(M::rmap(f)), M::r(dom_of(f))), M::compose(M::r(cod_of(f)), M::rmap(f))};
    }, "ℜℜf∘r_L = r_M∘ℜf");
    square("N.beta", hom, [](const Map& f) {
      return std::pair{M::compose(M::cmap(f), M::beta(dom_of(f))), M::compose(M::beta(cod_of(f)), M::rmap(f))};
    }, "𝒞f∘β_L = β_M∘ℜf");
    square("N.c", frm, [](const Map& f) {
      const Map cf = M::cmap(f);
      return std::pair{M::compose(M::cmap(cf), M::c(dom_of(f))), M::compose(M::c(cod_of(f)), cf)};
    }, "𝒞𝒞f∘c_L = c_M∘𝒞f");
    square("N.epsilon", frm, [](const Map& f) {
      return std::pair{M::compose(f, M::epsilon(dom_of(f))), M::compose(M::epsilon(cod_of(f)), M::cmap(f))};
    }, "f∘ε_L = ε_M∘𝒞f");
    return out;
  }

 private:
  LawConfig cfg_;
};

}  // namespace

LawReport check_coalgebra_morphism(const FiniteMap& f) { return Harness<FiniteModel>({}).coalgebra_morphism(f); }
LawReport check_coalgebra_morphism(const ChainMap& f) { return Harness<ChainModel>({}).coalgebra_morphism(f); }

LawReport kz_check(const FiniteProxFrame& p, const LawConfig& cfg) { return Harness<FiniteModel>(cfg).kz(p); }
LawReport kz_check(const ProxChain& p, const LawConfig& cfg) { return Harness<ChainModel>(cfg).kz(p); }
LawReport subcomonad_check(const FiniteProxFrame& p, const LawConfig& cfg) {
  return Harness<FiniteModel>(cfg).submonad(p);
}
LawReport subcomonad_check(const ProxChain& p, const LawConfig& cfg) { return Harness<ChainModel>(cfg).submonad(p); }

std::vector<LawReport> r_comonad_laws(const FiniteProxFrame& p, const LawConfig& cfg) {
  return Harness<FiniteModel>(cfg).r_laws(p);
}
std::vector<LawReport> r_comonad_laws(const ProxChain& p, const LawConfig& cfg) {
  return Harness<ChainModel>(cfg).r_laws(p);
}
std::vector<LawReport> c_comonad_laws(const FiniteProxFrame& p, const LawConfig& cfg) {
  return Harness<FiniteModel>(cfg).c_laws(p);
}
std::vector<LawReport> c_comonad_laws(const ProxChain& p, const LawConfig& cfg) {
  return Harness<ChainModel>(cfg).c_laws(p);
}
std::vector<LawReport> coalgebra_laws(const FiniteProxFrame& p, const LawConfig& cfg) {
  return Harness<FiniteModel>(cfg).coalgebra(p);
}
std::vector<LawReport> coalgebra_laws(const ProxChain& p, const LawConfig& cfg) {
  return Harness<ChainModel>(cfg).coalgebra(p);
}
std::vector<LawReport> morphism_laws(const std::vector<FiniteMap>& maps, const std::string& instance,
                                     const LawConfig& cfg) {
  return Harness<FiniteModel>(cfg).morphisms(maps, instance);
}
std::vector<LawReport> morphism_laws(const std::vector<ChainMap>& maps, const std::string& instance,
                                     const LawConfig& cfg) {
  return Harness<ChainModel>(cfg).morphisms(maps, instance);
}
std::vector<LawReport> naturality_laws(const std::vector<FiniteMap>& maps, const std::string& instance,
                                       const LawConfig& cfg) {
  return Harness<FiniteModel>(cfg).naturality(maps, instance);
}
std::vector<LawReport> naturality_laws(const std::vector<ChainMap>& maps, const std::string& instance,
                                       const LawConfig& cfg) {
  return Harness<ChainModel>(cfg).naturality(maps, instance);
}

}  // namespace proxkit
