// Acceptance suite: one line per criterion, exit 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "proxkit/catalog.hpp"
#include "proxkit/comonads.hpp"
#include "proxkit/error.hpp"
#include "proxkit/morphisms.hpp"

using namespace proxkit;

namespace {

// Collects failures of one criterion; the first few are printed.
class Check {
 public:
  void require(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  void law(const LawReport& r) {
    require(r.pass && r.samples > 0, r.law + " on " + r.instance + (r.detail.empty() ? "" : " (" + r.detail + ")"));
  }
  void laws(const std::vector<LawReport>& rs) {
    require(!rs.empty(), "empty law suite");
    for (const LawReport& r : rs) law(r);
  }
  void note(std::string s) { notes_ = std::move(s); }

  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (!notes_.empty()) os << ", " << notes_;
    for (std::size_t i = 0; i < failures_.size() && i < 3; ++i) os << "; failed: " << failures_[i];
    if (failures_.size() > 3) os << "; and " << failures_.size() - 3 << " more";
    return os.str();
  }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
  std::string notes_;
};

const Catalog& cat() { return Catalog::builtin(); }
const ProxChain& p1() {
  static const ProxChain p = cat().instance("chain:k=1").chain();
  return p;
}
const ProxChain& p2() {
  static const ProxChain p = cat().instance("chain:k=2").chain();
  return p;
}

std::vector<bool> profile(const std::function<bool(Code)>& contains, const std::vector<Code>& window) {
  std::vector<bool> out;
  for (Code c : window) out.push_back(contains(c));
  return out;
}

// Canonical elements of a chain frame: class points plus a window.
std::vector<Code> chain_points(const ChainShape& s, std::uint64_t n = 12) {
  std::vector<Code> out = oracle::chain_window(s, n);
  for (Code c : chain_class_points(s)) out.push_back(c);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool same_on(const ChainMap& f, const ChainMap& g) {
  if (first_difference(f, g)) return false;
  for (Code x : chain_points(f.dom().shape)) {
    if (f(x) != g(x)) return false;
  }
  return true;
}

std::vector<ChainMap> chain_proxhoms() {
  std::vector<ChainMap> out;
  for (const NamedChainMap& m : cat().chain_maps()) {
    if (is_proxhom(m.map)) out.push_back(m.map);
  }
  return out;
}

std::string name_of(const ChainMap& f) {
  for (const NamedChainMap& m : cat().chain_maps()) {
    if (m.map == f) return m.name;
  }
  return "map " + describe(f.dom()) + "->" + describe(f.cod());
}

// ---- criteria ----------------------------------------------------------------

void finite_collapse(Check& c) {
  std::size_t frames = 0;
  std::uint64_t relations = 0;
  for (const Instance& inst : cat().finite_instances(5)) {
    const FiniteFrame& f = *inst.finite().frame;
    for (Exec e : {Exec::serial, Exec::parallel}) {
      const CollapseResult r = search_proximities(f, e);
      c.require(r.survivors == 1 && !r.counterexample, inst.name + ": library search finds another proximity");
    }
    const oracle::BruteCollapse b = oracle::brute_force_collapse(f);
    c.require(b.survivors == 1 && b.only_order, inst.name + ": brute force finds another proximity");
    c.law(certify_finite_collapse(f, inst.name));
    ++frames;
    relations += b.subsets;
  }
  c.require(frames == 4, "expected the four catalog frames of at most 5 elements");
  c.note(std::to_string(frames) + " frames, " + std::to_string(relations) + " relations by brute force");
}

void chain_compactification(Check& c) {
  const ProxChain& p = p1();
  const ProxChain r = round_ideal_chain(p);
  const Json j = compactify(Instance{"chain:k=1", p});
  std::vector<std::string> ideals;
  for (const Json& e : j["elements"]) ideals.push_back(e["ideal"]);
  c.require(ideals == std::vector<std::string>{"Prin(Succ(0,n))", "BelowLim(1)", "Prin(Lim(1))"},
            "classification lists other classes");
  c.require(j["order_type"] == "ω+2", "order type is not ω+2");
  c.require(r.shape == ChainShape{1, 1}, "ℜL does not have shape ω+2");
  c.require(kappa(p, lim(1)) == prin(lim(1)), "κ(Lim(1)) != Prin(Lim(1))");
  c.require(sigma(p, below_lim(1)) == lim(1), "ς(BelowLim(1)) != Lim(1)");

  // Independent enumeration of round ideals generated by elements of index <= 50.
  constexpr std::uint64_t n = 50;
  const auto found = oracle::enumerate_chain_round_ideals(p, n);
  const std::vector<Code> window = oracle::chain_window(p.shape, n + 5);
  std::set<std::vector<bool>> expected;
  for (const auto& s : found) expected.insert(profile(s.contains, window));
  std::set<std::vector<bool>> classified;
  for (Code code : oracle::chain_window(r.shape, n + 2)) {
    const ChainIdeal I = decode(p, code);
    if (I.kind == ChainIdeal::Kind::prin && I.at.block < p.shape.k && I.at.offset > n) continue;
    classified.insert(profile([&](Code x) { return I.contains(x); }, window));
  }
  c.require(classified == expected, "classification disagrees with enumeration on membership probes");
  c.require(found.size() == n + 3, "enumeration should find n+1 principal ideals plus BelowLim(1) and Prin(Lim(1))");
  c.note(std::to_string(found.size()) + " enumerated round ideals");
}

void theta_rho(Check& c) {
  std::size_t finite_maps = 0, frame_maps = 0;
  const auto frames = cat().finite_instances(4);
  for (const Instance& a : frames) {
    const FiniteProxFrame& L = a.finite();
    const FiniteRoundIdeals RL = round_ideal_frame(L);
    for (const Instance& b : frames) {
      const FiniteProxFrame& M = b.finite();
      const auto maps = enumerate_maps(L, M, MapClass::proxhom);
      c.require(maps == oracle::literal_proxhoms(L, M), a.name + "->" + b.name + ": validated maps differ from the oracle");
      for (const FiniteMap& f : maps) {
        c.require(rho(theta(f), L) == f, a.name + "->" + b.name + ": ρθf != f");
        ++finite_maps;
      }
      for (const FiniteMap& psi : enumerate_maps(RL.way_below, M, MapClass::pframemap)) {
        c.require(theta(rho(psi, L)) == psi, a.name + "->" + b.name + ": θρψ != ψ");
        ++frame_maps;
      }
    }
  }
  // Named chain maps plus an affine family n -> a*n + b.
  std::vector<ChainMap> chain;
  for (const char* n : {"id", "double", "shift3", "h"}) chain.push_back(cat().chain_map(n));
  for (std::uint64_t a = 1; a <= 3; ++a) {
    for (std::int64_t b = 0; b <= 3; ++b) {
      chain.push_back(ChainMap(p1(), p1(), {AffineSeq{{{0, 0}}, Tail{0, a, b}}, AffineSeq{{}, constant_tail(lim(1))}}));
    }
  }
  for (const ChainMap& f : chain) {
    c.require(is_proxhom(f), name_of(f) + " is not a ProxHom");
    c.require(same_on(rho(theta(f), f.dom()), f), name_of(f) + ": ρθf != f");
    const ChainMap psi = theta(f);
    c.require(same_on(theta(rho(psi, f.dom())), psi), name_of(f) + ": θρψ != ψ");
  }
  c.note(std::to_string(finite_maps) + " finite ProxHoms, " + std::to_string(frame_maps) + " frame maps, " +
         std::to_string(chain.size()) + " chain maps");
}

void decomposition(Check& c) {
  std::size_t count = 0;
  for (const FiniteMap& f : finite_proxhoms(cat(), 8)) {
    const FiniteMap d = compose(sigma_map(f.cod), compose(rmap(f), kappa_map(f.dom)));
    c.require(d == f, f.dom.name + "->" + f.cod.name + ": ς∘ℜf∘κ != f");
    for (Elem x = 0; x < f.dom.size(); ++x) {
      c.require(sigma(f.cod, rmap(f, kappa(f.dom, x))) == f(x), "pointwise decomposition at " + f.dom.frame->id(x));
    }
    ++count;
  }
  for (const ChainMap& f : chain_proxhoms()) {
    const ChainMap d = compose(sigma_map(f.cod()), compose(rmap(f), kappa_map(f.dom())));
    c.require(same_on(d, f), name_of(f) + ": ς∘ℜf∘κ != f");
    for (Code x : chain_points(f.dom().shape)) {
      c.require(sigma(f.cod(), rmap(f, kappa(f.dom(), x))) == f(x),
                name_of(f) + ": pointwise decomposition at " + element_name(x));
    }
    ++count;
  }
  c.note(std::to_string(count) + " ProxHoms");
}

void r_comonad(Check& c) {
  std::size_t instances = 0;
  const auto keep = [](const std::vector<LawReport>& rs) {
    std::vector<LawReport> out;
    for (const LawReport& r : rs) {
      if (r.law == "R.counit.left" || r.law == "R.counit.right" || r.law == "R.coassoc") out.push_back(r);
    }
    return out;
  };
  for (const Instance& i : cat().instances()) {
    const auto rs = i.is_chain() ? r_comonad_laws(i.chain()) : r_comonad_laws(i.finite());
    c.require(keep(rs).size() == 3, i.name + ": missing counit or coassociativity law");
    c.laws(rs);
    ++instances;
  }
  // r_L and ς_{ℜL} are mutually inverse.
  for (const ProxChain& p : {p1(), p2()}) {
    const ProxChain R = round_ideal_chain(p);
    const ChainMap r = ChainModel::r(p);
    const ChainMap s = sigma_map(R);
    c.require(same_on(compose(s, r), identity_map(R)), describe(p) + ": ς∘r != 1");
    c.require(same_on(compose(r, s), identity_map(round_ideal_chain(R))), describe(p) + ": r∘ς != 1");
    for (Code x : chain_points(R.shape)) {
      c.require(s(r(x)) == x, describe(p) + ": r not injective at " + element_name(x));
    }
    for (Code y : chain_points(round_ideal_chain(R).shape)) {
      c.require(r(s(y)) == y, describe(p) + ": r not surjective at " + element_name(y));
    }
  }
  c.note(std::to_string(instances) + " instances");
}

void c_comonad(Check& c) {
  const ProxChain& p = p1();
  const auto rs = c_comonad_laws(p);
  for (const char* id : {"C.counit.left", "C.counit.right", "C.coassoc", "C.nonprincipal", "C.c-membership"}) {
    bool present = false;
    for (const LawReport& r : rs) present = present || r.law == id;
    c.require(present, std::string("missing ") + id);
  }
  c.laws(rs);

  // c(β(BelowLim(1))) is the directed union of c(β(Prin(Succ(0,n)))).
  const ProxChain C = max_proximity_chain(p);
  const ChainMap beta = ChainModel::beta(p);
  const ChainMap cm = ChainModel::c(p);
  const ChainIdeal top = decode(C, cm(beta(encode(p, below_lim(1)))));
  std::vector<ChainIdeal> family;
  for (std::uint64_t n = 0; n <= 60; ++n) family.push_back(decode(C, cm(beta(encode(p, prin(succ(0, n)))))));
  for (Code x : oracle::chain_window(C.shape, 40)) {
    bool in_union = false;
    for (const ChainIdeal& I : family) in_union = in_union || I.contains(x);
    c.require(top.contains(x) == in_union, "non-principal comultiplication differs at " + element_name(x));
  }
  c.require(top.kind == ChainIdeal::Kind::below_lim, "c(β(BelowLim(1))) is principal");

  // ε_{𝒞L}(c(Ī)) = Ī.
  const ChainMap eps = ChainModel::epsilon(C);
  for (Code x : chain_points(C.shape)) c.require(eps(cm(x)) == x, "ε(c(Ī)) != Ī at " + element_name(x));
}

void separation(Check& c) {
  const ProxChain& p = p1();
  const ProxChain R = round_ideal_chain(p);
  const ProxChain C = max_proximity_chain(p);
  const Code bl = encode(p, below_lim(1));
  c.require(C.rel(bl, bl), "BelowLim(1) ⊑ BelowLim(1) fails");
  c.require(!R.rel(bl, bl), "BelowLim(1) ≪ BelowLim(1) holds");
  c.require(!way_below_ideals(below_lim(1), below_lim(1)), "ideal-level ≪ holds on BelowLim(1)");
  c.require(validate_proximity(C).ok(), "⊑ fails the proximity validator");
  std::size_t pairs = 0;
  for (Code i : chain_points(R.shape)) {
    for (Code j : chain_points(R.shape)) {
      // I ⊑ J iff I ⊆ J and ς(I) ≺ ς(J), read on canonical ideals.
      const ChainIdeal I = decode(p, i), J = decode(p, j);
      const bool def = subideal(I, J) && p.rel(sigma(p, I), sigma(p, J));
      const bool by_sigma = ChainModel::max_prox_by_sigma(p, i, j);
      const bool by_kappa = ChainModel::max_prox_by_kappa(p, i, j);
      c.require(def == by_sigma && by_sigma == by_kappa && by_sigma == C.rel(i, j),
                "⊑ readings disagree on " + element_name(i) + ", " + element_name(j));
      ++pairs;
    }
  }
  c.note(std::to_string(pairs) + " classified pairs");
}

void non_idempotence(Check& c) {
  const ProxChain& p = p1();
  const ProxChain C = max_proximity_chain(p);
  const ProxChain CC = max_proximity_chain(C);
  // Elements at or above the first limit: Lim(1) and its successors.
  const auto above = [](const ProxChain& q) {
    std::uint64_t n = 0;
    for (Code x : oracle::chain_window(q.shape, 0)) n += x >= lim(1) ? 1 : 0;
    return n;
  };
  c.require(above(C) == 2, "𝒞L has " + std::to_string(above(C)) + " elements at or above Lim(1)");
  c.require(above(CC) == 3, "𝒞𝒞L has " + std::to_string(above(CC)) + " elements at or above Lim(1)");
  const ChainMap eps = ChainModel::epsilon(C);
  bool collapsed = false;
  for (Code y : chain_points(C.shape)) collapsed = collapsed || preimage(eps, y).count >= 2;
  c.require(collapsed, "ε_{𝒞L} is injective");
  c.require(!(C.shape == CC.shape), "𝒞L and 𝒞𝒞L have the same order type");
  c.note("counts " + std::to_string(above(C)) + " and " + std::to_string(above(CC)));
}

void star_vs_compose(Check& c) {
  const ChainMap& f = cat().chain_map("f");
  const ChainMap& g = cat().chain_map("g");
  c.require(is_proxhom(f) && is_proxhom(g), "f or g is not a ProxHom");
  c.require(star_compose(g, f)(lim(1)) == succ(0, 0), "(g∗f)(Lim(1)) != Succ(0,0)");
  c.require(compose(g, f)(lim(1)) == lim(2), "(g∘f)(Lim(1)) != top");
  // Literal join over b ≺ Lim(1), which are the Succ(0,n).
  Code acc = succ(0, 0);
  for (std::uint64_t n = 0; n <= 200; ++n) acc = join(acc, g(f(succ(0, n))));
  c.require(acc == succ(0, 0), "literal join over b ≺ Lim(1) is not Succ(0,0)");
  const AxiomReport v = validate_proxhom(compose(g, f));
  c.require(!v.ok(), "g∘f passes the ProxHom validator");
  const AxiomCheck* fail = v.first_failure();
  c.require(fail != nullptr && std::find(fail->witness.begin(), fail->witness.end(), "Lim(1)") != fail->witness.end(),
            "validator witness is not Lim(1)");
  // The Remark: ∗ agrees with ∘ whenever g∘f is a ProxHom.
  std::size_t pairs = 0;
  for (const ChainMap& a : chain_proxhoms()) {
    for (const ChainMap& b : chain_proxhoms()) {
      if (!(a.cod() == b.dom())) continue;
      const ChainMap ba = compose(b, a);
      if (is_proxhom(ba)) c.require(same_on(star_compose(b, a), ba), name_of(b) + "∗" + name_of(a) + " != ∘");
      ++pairs;
    }
  }
  c.note(std::to_string(pairs) + " composable catalog pairs");
}

void kleisli(Check& c) {
  std::size_t pairs = 0;
  const auto fin = finite_proxhoms(cat(), 8);
  for (const FiniteMap& f : fin) {
    for (const FiniteMap& g : fin) {
      if (!(f.cod == g.dom)) continue;
      c.require(theta(star_compose(g, f)) == kleisli_compose(theta(g), theta(f)), "F(g∗f) != F(g)•F(f)");
      ++pairs;
    }
    c.require(kleisli_compose(theta(f), sigma_map(f.dom)) == theta(f), "θf • ς != θf");
    c.require(kleisli_compose(sigma_map(f.cod), theta(f)) == theta(f), "ς • θf != θf");
  }
  const auto chain = chain_proxhoms();
  for (const ChainMap& f : chain) {
    for (const ChainMap& g : chain) {
      if (!(f.cod() == g.dom())) continue;
      c.require(same_on(theta(star_compose(g, f)), kleisli_compose(theta(g), theta(f))),
                "F(" + name_of(g) + "∗" + name_of(f) + ") != F(g)•F(f)");
      ++pairs;
    }
    c.require(same_on(kleisli_compose(theta(f), sigma_map(f.dom())), theta(f)), name_of(f) + ": θf • ς != θf");
    c.require(same_on(kleisli_compose(sigma_map(f.cod()), theta(f)), theta(f)), name_of(f) + ": ς • θf != θf");
  }
  const ChainMap u = theta(cat().chain_map("double"));
  const ChainMap v = theta(cat().chain_map("shift3"));
  const ChainMap w = theta(cat().chain_map("h"));
  c.require(same_on(kleisli_compose(kleisli_compose(w, v), u), kleisli_compose(w, kleisli_compose(v, u))),
            "• is not associative on (double, shift3, h)");
  c.note(std::to_string(pairs) + " composable pairs");
}

void naturality(Check& c) {
  std::size_t reports = 0;
  const auto squares = [&](const std::vector<LawReport>& rs) {
    for (const char* id : {"N.sigma", "N.m", "N.r", "N.beta", "N.c"}) {
      bool present = false;
      for (const LawReport& r : rs) present = present || r.law == id;
      c.require(present, std::string("missing ") + id);
    }
    c.laws(rs);
    reports += rs.size();
  };
  squares(naturality_laws(finite_proxhoms(cat(), 8), "finite-catalog"));
  for (const Instance& i : cat().chain_instances()) squares(naturality_laws(cat().chain_maps_touching(i.chain()), i.name));
  // ς square read on ideals for the proximity-preserving frame maps.
  for (const ChainMap& f : chain_proxhoms()) {
    if (!is_pframemap(f)) continue;
    for (Code x : chain_points(round_ideal_chain(f.dom()).shape)) {
      const ChainIdeal I = decode(f.dom(), x);
      c.require(f(sigma(f.dom(), I)) == sigma(f.cod(), rmap(f, I)), name_of(f) + ": f∘ς != ς∘ℜf at " + ideal_name(I));
    }
  }
  c.note(std::to_string(reports) + " law reports");
}

void coalgebras(Check& c) {
  const ProxChain& p = p1();
  c.require(!is_stably_compact(p), "chain:k=1 accepted as stably compact");
  bool rejected = false;
  try {
    (void)alpha_map(p);
  } catch (const Error& e) {
    rejected = e.kind() == ErrorKind::NotStablyCompact;
  }
  c.require(rejected, "α on chain:k=1 does not raise NotStablyCompact");
  c.require(coalgebra_laws(p).empty(), "coalgebra laws ran on chain:k=1");

  const ProxChain R = round_ideal_chain(p);
  c.require(is_stably_compact(R), "ℜ(chain:k=1) rejected");
  c.laws(coalgebra_laws(R));

  // Coalgebra morphism witnesses: a proper map and a non-proper one.
  const LawReport yes = check_coalgebra_morphism(identity_map(R));
  c.require(yes.pass && yes.detail == "coalgebra morphism: yes, proper: yes", "identity witness: " + yes.detail);
  const ProxChain U = chain_proximity(ChainShape{1, 2}, {});
  const ProxChain V = chain_proximity(ChainShape{1, 1}, {1});
  const ChainMap w(U, V, {AffineSeq{{}, Tail{0, 1, 0}}, AffineSeq{{lim(1), lim(1)}, constant_tail({1, 1})}});
  const LawReport no = check_coalgebra_morphism(w);
  c.require(no.pass && no.detail == "coalgebra morphism: no, proper: no", "non-proper witness: " + no.detail);
  for (const FiniteMap& f : finite_proxhoms(cat(), 8)) c.require(check_coalgebra_morphism(f).pass, "finite witness");

  for (const Instance& i : cat().instances()) c.law(i.is_chain() ? kz_check(i.chain()) : kz_check(i.finite()));
  c.law(kz_check(R));
}

void ideal_functor(Check& c) {
  for (const Instance& i : cat().finite_instances()) {
    const FiniteProxFrame& p = i.finite();
    const FiniteRoundIdeals ri = round_ideal_frame(p);
    const FiniteRoundIdeals id = ideal_frame(p.frame);
    c.require(ri.members == id.members, i.name + ": round ideals differ from ideals");
    c.require(*ri.way_below.frame == *id.way_below.frame, i.name + ": frame orders differ");
    // Elementwise against a subset scan for ideals.
    const FiniteFrame& f = *p.frame;
    std::vector<ElemSet> scan;
    for (ElemSet s = 1; s < (ElemSet{1} << f.size()); ++s) {
      bool ideal = true;
      for (Elem a = 0; a < f.size(); ++a) {
        if (!contains(s, a)) continue;
        for (Elem b = 0; b < f.size(); ++b) {
          if ((f.leq(b, a) && !contains(s, b)) || (contains(s, b) && !contains(s, f.join(a, b)))) ideal = false;
        }
      }
      if (ideal) scan.push_back(s);
    }
    std::vector<ElemSet> got = ri.members;
    std::sort(got.begin(), got.end());
    c.require(got == scan, i.name + ": compactify elements differ from the ideal scan");
  }
  const ProxChain leq = chain_order_proximity(build_chain_frame(1));
  const ProxChain r = round_ideal_chain(leq);
  const ProxChain I = ideal_frame(leq.shape);
  c.require(r == I, "ℜ(chain k=1, ≤) differs from the ideal frame");
  const Json out = compactify(Instance{"chain:k=1,leq", leq});
  c.require(out["shape"]["k"] == I.shape.k && out["shape"]["m"] == I.shape.m, "compactify shape differs");
  // Every ideal of the window is round for ≤, so the enumeration finds all of them.
  constexpr std::uint64_t n = 30;
  const std::vector<Code> window = oracle::chain_window(leq.shape, n + 5);
  std::set<std::vector<bool>> expected;
  for (const auto& s : oracle::enumerate_chain_round_ideals(leq, n)) expected.insert(profile(s.contains, window));
  std::set<std::vector<bool>> got;
  for (Code code : oracle::chain_window(I.shape, n + 2)) {
    const ChainIdeal J = decode(leq, code);
    if (J.kind == ChainIdeal::Kind::prin && J.at.block < leq.shape.k && J.at.offset > n) continue;
    got.insert(profile([&](Code x) { return J.contains(x); }, window));
  }
  c.require(got == expected, "chain ideals differ from the enumeration");
}

// Pads to a display width, counting UTF-8 code points.
std::string pad(const std::string& s, std::size_t width) {
  std::size_t points = 0;
  for (unsigned char ch : s) points += (ch & 0xC0) != 0x80 ? 1 : 0;
  return s + std::string(points < width ? width - points : 0, ' ');
}

struct Criterion {
  int id;
  const char* title;
  void (*run)(Check&);
  double limit_seconds;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "finite collapse certificate", finite_collapse, 5.0},
      {2, "stable compactification of chain k=1", chain_compactification, 0},
      {3, "theta/rho bijection", theta_rho, 0},
      {4, "decomposition f = ς∘ℜf∘κ", decomposition, 0},
      {5, "comonad (ℜ, r, ς)", r_comonad, 0},
      {6, "comonad (𝒞, c, ε) on chain k=1", c_comonad, 0},
      {7, "⊑ versus ≪ separation", separation, 0},
      {8, "non-idempotence of 𝒞", non_idempotence, 0},
      {9, "∗ versus ∘ on chain k=2", star_vs_compose, 0},
      {10, "Kleisli functor", kleisli, 0},
      {11, "naturality squares", naturality, 0},
      {12, "coalgebras and KZ", coalgebras, 0},
      {13, "ideal-functor identity", ideal_functor, 0},
  };
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cr.limit_seconds > 0) c.require(secs < cr.limit_seconds, "runtime over limit");
    failed += c.ok() ? 0 : 1;
    std::printf("%s %2d  %s %7.2fs  %s\n", c.ok() ? "PASS" : "FAIL", cr.id, pad(cr.title, 40).c_str(), secs,
                c.summary().c_str());
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria pass, %.2fs total\n", static_cast<int>(criteria.size()) - failed, criteria.size(), total);
  return failed == 0 && total < 60.0 ? 0 : 1;
}
