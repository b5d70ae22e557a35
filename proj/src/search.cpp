#include "proxkit/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "proxkit/error.hpp"
#include "proxkit/morphisms.hpp"

namespace proxkit {

namespace {

// Strict order on p points as a bitmask over ordered pairs (i, j), bit i*p+j.
using Relation = std::uint32_t;

bool transitive(Relation r, int p) {
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if (!((r >> (i * p + j)) & 1u)) continue;
      for (int k = 0; k < p; ++k) {
        if (((r >> (j * p + k)) & 1u) && !((r >> (i * p + k)) & 1u)) return false;
      }
    }
  }
  return true;
}

Relation canonical(Relation r, int p) {
  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  Relation best = r;
  do {
    Relation s = 0;
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < p; ++j) {
        if ((r >> (i * p + j)) & 1u) s |= Relation{1} << (perm[i] * p + perm[j]);
      }
    }
    best = std::min(best, s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Posets on p points up to isomorphism. Every poset has a linear
// extension, so relations inside i < j suffice.
std::vector<Relation> posets(int p) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) slots.emplace_back(i, j);
  }
  std::vector<Relation> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    Relation r = 0;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if ((mask >> s) & 1u) r |= Relation{1} << (slots[s].first * p + slots[s].second);
    }
    if (transitive(r, p)) out.push_back(canonical(r, p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FiniteProxFrame downsets_of(int p, Relation r) {
  Poset poset;
  std::string name = "D(" + std::to_string(p);
  for (int i = 0; i < p; ++i) poset.elements.push_back("x" + std::to_string(i));
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if ((r >> (i * p + j)) & 1u) {
        poset.leq.emplace_back(poset.elements[i], poset.elements[j]);
        name += ";" + std::to_string(i) + "<" + std::to_string(j);
      }
    }
  }
  name += ")";
  return order_proximity(std::make_shared<const FiniteFrame>(downset_frame(poset)), name);
}

FiniteProxFrame chain_of(std::size_t n) {
  std::vector<std::string> ids;
  std::vector<LeqPair> leq;
  for (std::size_t i = 0; i < n; ++i) {
    ids.push_back(std::to_string(i));
    if (i > 0) leq.emplace_back(ids[i - 1], ids[i]);
  }
  return order_proximity(std::make_shared<const FiniteFrame>(FiniteFrame::build(ids, leq)),
                         "chain" + std::to_string(n));
}

std::vector<std::string> table_witness(const FiniteMap& f) {
  std::vector<std::string> w;
  for (Elem a = 0; a < f.dom.size(); ++a) w.push_back(f.dom.frame->id(a) + "->" + f.cod.frame->id(f(a)));
  return w;
}

SearchResult search_collapse(std::size_t n, Exec exec) {
  SearchResult res{"collapse", n};
  for (const FiniteProxFrame& p : generate_frames(n)) {
    const CollapseResult c = search_proximities(*p.frame, exec);
    ++res.frames;
    res.checked += c.candidates;
    res.certificate.push_back(p.name + ": " + std::to_string(p.size()) + " elements, " +
                              std::to_string(c.candidates) + " candidates, " + std::to_string(c.survivors) +
                              " survivor" + (c.survivors == 1 ? "" : "s"));
    if (c.survivors != 1 || c.counterexample) {
      SearchFinding f{p.name, {}, std::to_string(c.survivors) + " relations satisfy the axioms"};
      if (c.counterexample) {
        for (Elem b = 0; b < p.size(); ++b) {
          for (Elem a = 0; a < p.size(); ++a) {
            if (contains((*c.counterexample)[b], a)) f.witness.push_back(p.frame->id(a) + "<" + p.frame->id(b));
          }
        }
      }
      res.counterexamples.push_back(std::move(f));
    }
  }
  res.note = res.ok() ? "only the order survives on every frame" : "a proximity other than the order exists";
  return res;
}

SearchResult search_theta_rho(std::size_t n, Exec exec) {
  SearchResult res{"theta-rho", n};
  const auto frames = generate_frames(n);
  res.frames = frames.size();
  for (const FiniteProxFrame& L : frames) {
    const FiniteRoundIdeals RL = round_ideal_frame(L);
    for (const FiniteProxFrame& M : frames) {
      for (const FiniteMap& f : enumerate_maps(L, M, MapClass::proxhom, exec)) {
        ++res.checked;
        if (!(rho(theta(f), L) == f)) {
          res.counterexamples.push_back({L.name + "->" + M.name, table_witness(f), "rho(theta(f)) != f"});
        }
      }
      for (const FiniteMap& psi : enumerate_maps(RL.way_below, M, MapClass::pframemap, exec)) {
        ++res.checked;
        if (!(theta(rho(psi, L)) == psi)) {
          res.counterexamples.push_back({L.name + "->" + M.name, table_witness(psi), "theta(rho(psi)) != psi"});
        }
      }
    }
  }
  res.note = res.ok() ? "theta and rho are mutually inverse on every pair" : "round trip fails";
  return res;
}

SearchResult search_star_vs_compose(std::size_t n, Exec exec) {
  SearchResult res{"star-vs-compose", n};
  const auto frames = generate_frames(n);
  res.frames = frames.size();
  // Maps are cached per ordered pair of frames.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<FiniteMap>> homs;
  for (std::size_t i = 0; i < frames.size(); ++i) {
    for (std::size_t j = 0; j < frames.size(); ++j) {
      homs[{i, j}] = enumerate_maps(frames[i], frames[j], MapClass::proxhom, exec);
    }
  }
  for (std::size_t i = 0; i < frames.size(); ++i) {
    for (std::size_t j = 0; j < frames.size(); ++j) {
      for (std::size_t k = 0; k < frames.size(); ++k) {
        for (const FiniteMap& f : homs[{i, j}]) {
          for (const FiniteMap& g : homs[{j, k}]) {
            ++res.checked;
            const FiniteMap s = star_compose(g, f);
            const FiniteMap c = compose(g, f);
            if (const auto x = first_difference(s, c)) {
              res.counterexamples.push_back({frames[i].name + "->" + frames[j].name + "->" + frames[k].name,
                                             {frames[i].frame->id(*x)}, "g*f differs from g.f"});
            }
          }
        }
      }
    }
  }
  res.note = res.ok() ? "no finite witness; the separating example lives on chain:k=2 "
                        "(proxkit laws --suite morphisms --instance chain:k=2)"
                      : "g*f and g.f differ on a finite frame";
  return res;
}

}  // namespace

std::vector<FiniteProxFrame> generate_frames(std::size_t max_size) {
  std::vector<FiniteProxFrame> out;
  for (int p = 1; p <= 5; ++p) {
    for (Relation r : posets(p)) {
      // The down-set frame has at least p + 1 elements; skip posets that cannot fit.
      if (static_cast<std::size_t>(p) + 1 > max_size) continue;
      FiniteProxFrame f = downsets_of(p, r);
      if (f.size() <= max_size) out.push_back(std::move(f));
    }
  }
  for (std::size_t n = 7; n <= max_size; ++n) out.push_back(chain_of(n));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

SearchResult run_search(const std::string& law, std::size_t max_size, Exec exec) {
  if (law == "collapse") {
    if (max_size > kMaxSearchRelations) {
      throw Error(ErrorKind::TooLarge, "relation search is limited to --max-size <= 12");
    }
    return search_collapse(max_size, exec);
  }
  if (law == "theta-rho" || law == "star-vs-compose") {
    if (max_size > kMaxSearchMorphisms) {
      throw Error(ErrorKind::TooLarge, "morphism search is limited to --max-size <= 5");
    }
    return law == "theta-rho" ? search_theta_rho(max_size, exec) : search_star_vs_compose(max_size, exec);
  }
  throw Error(ErrorKind::InvalidParameter, "unknown search law '" + law + "'");
}

Json to_json(const SearchResult& r) {
  Json out{{"law", r.law},
           {"max_size", r.max_size},
           {"verdict", r.ok() ? "pass" : "fail"},
           {"frames", r.frames},
           {"checked", r.checked}};
  Json ce = Json::array();
  for (const SearchFinding& f : r.counterexamples) {
    ce.push_back(Json{{"frame", f.frame}, {"witness", f.witness}, {"detail", f.detail}});
  }
  out["counterexamples"] = ce;
  if (!r.certificate.empty()) out["certificate"] = r.certificate;
  out["note"] = r.note;
  return out;
}

}  // namespace proxkit
