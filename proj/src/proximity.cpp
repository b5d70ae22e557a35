#include "proxkit/proximity.hpp"

#include <algorithm>

#include "proxkit/error.hpp"

namespace proxkit {

bool AxiomReport::ok() const noexcept { return first_failure() == nullptr; }

const AxiomCheck* AxiomReport::first_failure() const noexcept {
  for (const auto& c : checks) {
    if (c.verdict == Verdict::fail) return &c;
  }
  return nullptr;
}

namespace {

void check_columns(const FiniteFrame& frame, std::span<const ElemSet> below) {
  if (below.size() != frame.size()) {
    throw Error(ErrorKind::MalformedRelation,
                "relation has " + std::to_string(below.size()) + " columns for " +
                    std::to_string(frame.size()) + " elements");
  }
  for (ElemSet col : below) {
    if (!is_subset(col, frame.all())) {
      throw Error(ErrorKind::MalformedRelation, "relation references elements outside the frame");
    }
  }
}

AxiomCheck fail(std::string axiom, std::vector<std::string> witness, std::string detail) {
  return AxiomCheck{std::move(axiom), Verdict::fail, std::move(witness), std::move(detail)};
}

}  // namespace

AxiomReport validate_proximity(const FiniteFrame& f, std::span<const ElemSet> below) {
  check_columns(f, below);
  const auto n = static_cast<Elem>(f.size());
  const auto rel = [&](Elem a, Elem b) { return contains(below[b], a); };
  const auto& id = [&](Elem e) -> const std::string& { return f.id(e); };
  AxiomReport report;

  {
    AxiomCheck c{"finer-than-order"};
    for (Elem b = 0; b < n && c.verdict == Verdict::pass; ++b) {
      const ElemSet bad = below[b] & ~f.down(b);
      if (bad != 0) {
        const Elem a = static_cast<Elem>(std::countr_zero(bad));
        c = fail(c.axiom, {id(a), id(b)}, id(a) + " ≺ " + id(b) + " but " + id(a) + " ≰ " + id(b));
      }
    }
    report.checks.push_back(std::move(c));
  }

  {
    AxiomCheck c{"bounded-sublattice"};
    if (!rel(f.bot(), f.bot())) {
      c = fail(c.axiom, {id(f.bot()), id(f.bot())}, "0 ≺ 0 is missing");
    } else if (!rel(f.top(), f.top())) {
      c = fail(c.axiom, {id(f.top()), id(f.top())}, "1 ≺ 1 is missing");
    } else {
      std::vector<std::pair<Elem, Elem>> pairs;
      for (Elem b = 0; b < n; ++b) for_each_member(below[b], [&](Elem a) { pairs.emplace_back(a, b); });
      for (std::size_t i = 0; i < pairs.size() && c.verdict == Verdict::pass; ++i) {
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
          const auto [a, b] = pairs[i];
          const auto [x, y] = pairs[j];
          const bool meet_ok = rel(f.meet(a, x), f.meet(b, y));
          if (!meet_ok || !rel(f.join(a, x), f.join(b, y))) {
            const std::string op = meet_ok ? "join" : "meet";
            c = fail(c.axiom, {id(a), id(b), id(x), id(y)},
                     "componentwise " + op + " of (" + id(a) + "," + id(b) + ") and (" + id(x) + "," +
                         id(y) + ") is not related");
            break;
          }
        }
      }
    }
    report.checks.push_back(std::move(c));
  }

  {
    AxiomCheck c{"weakening"};
    for (Elem cc = 0; cc < n && c.verdict == Verdict::pass; ++cc) {
      for_each_member(below[cc], [&](Elem b) {
        if (c.verdict != Verdict::pass) return;
        for_each_member(f.up(cc), [&](Elem d) {
          if (c.verdict != Verdict::pass) return;
          const ElemSet missing = f.down(b) & ~below[d];
          if (missing != 0) {
            const Elem a = static_cast<Elem>(std::countr_zero(missing));
            c = fail(c.axiom, {id(a), id(b), id(cc), id(d)},
                     id(a) + " ≤ " + id(b) + " ≺ " + id(cc) + " ≤ " + id(d) + " but not " + id(a) + " ≺ " +
                         id(d));
          }
        });
      });
    }
    report.checks.push_back(std::move(c));
  }

  {
    AxiomCheck c{"interpolation"};
    for (Elem b = 0; b < n && c.verdict == Verdict::pass; ++b) {
      for_each_member(below[b], [&](Elem a) {
        if (c.verdict != Verdict::pass) return;
        bool found = false;
        for_each_member(below[b], [&](Elem mid) { found = found || rel(a, mid); });
        if (!found) {
          c = fail(c.axiom, {id(a), id(b)}, "no c with " + id(a) + " ≺ c ≺ " + id(b));
        }
      });
    }
    report.checks.push_back(std::move(c));
  }

  {
    AxiomCheck c{"approximation"};
    for (Elem a = 0; a < n; ++a) {
      const Elem j = f.join_of(below[a]);
      if (j != a) {
        c = fail(c.axiom, {id(a)}, "join of {b : b ≺ " + id(a) + "} is " + id(j) + ", not " + id(a));
        break;
      }
    }
    report.checks.push_back(std::move(c));
  }

  bool collapse = true;
  for (Elem a = 0; a < n; ++a) collapse = collapse && below[a] == f.down(a);
  report.collapse = collapse;
  return report;
}

AxiomReport validate_proximity(const FiniteProxFrame& p) { return validate_proximity(*p.frame, p.below); }

bool is_proximity(const FiniteFrame& f, std::span<const ElemSet> below) noexcept {
  const auto n = static_cast<Elem>(f.size());
  if (below.size() != n) return false;
  const auto rel = [&](Elem a, Elem b) { return contains(below[b], a); };
  // Cheapest checks first: most candidates in a search fail approximation.
  for (Elem a = 0; a < n; ++a) {
    if (!is_subset(below[a], f.down(a)) || f.join_of(below[a]) != a) return false;
  }
  if (!rel(f.bot(), f.bot()) || !rel(f.top(), f.top())) return false;
  for (Elem c = 0; c < n; ++c) {
    bool ok = true;
    for_each_member(below[c], [&](Elem b) {
      if (!ok) return;
      for_each_member(f.up(c), [&](Elem d) { ok = ok && is_subset(f.down(b), below[d]); });
      bool found = false;
      for_each_member(below[c], [&](Elem mid) { found = found || rel(b, mid); });
      ok = ok && found;
    });
    if (!ok) return false;
  }
  for (Elem b = 0; b < n; ++b) {
    for (Elem y = 0; y < n; ++y) {
      bool ok = true;
      for_each_member(below[b], [&](Elem a) {
        for_each_member(below[y], [&](Elem x) {
          ok = ok && rel(f.meet(a, x), f.meet(b, y)) && rel(f.join(a, x), f.join(b, y));
        });
      });
      if (!ok) return false;
    }
  }
  return true;
}

// ---- chains ----------------------------------------------------------------

std::vector<Code> chain_class_points(const ChainShape& shape) {
  static constexpr std::uint64_t kOffsets[] = {0, 1, 2, 1000};
  std::vector<Code> out;
  for (std::uint32_t q = 0; q < shape.k; ++q) {
    for (std::uint64_t r : kOffsets) out.push_back({q, r});
  }
  for (std::uint64_t r = 0; r <= std::min<std::uint64_t>(shape.m, 2); ++r) out.push_back({shape.k, r});
  if (shape.m > 2) out.push_back({shape.k, shape.m});
  return out;
}

AxiomReport validate_proximity(const ChainShape& shape, const ChainRelation& rel) {
  const std::vector<Code> pts = chain_class_points(shape);
  const auto name = [](Code c) { return element_name(c); };
  AxiomReport report;

  {
    AxiomCheck c{"finer-than-order", Verdict::symbolic};
    for (Code a : pts) {
      for (Code b : pts) {
        if (c.verdict == Verdict::symbolic && rel(a, b) && b < a) {
          c = fail(c.axiom, {name(a), name(b)}, name(a) + " ≺ " + name(b) + " but " + name(a) + " > " + name(b));
        }
      }
    }
    report.checks.push_back(std::move(c));
  }

  // Consecutive class points suffice: the class points are totally ordered,
  // so one-step weakening in each argument composes to the general case.
  AxiomCheck weak{"weakening", Verdict::symbolic};
  for (std::size_t i = 0; i < pts.size() && weak.verdict == Verdict::symbolic; ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (!rel(pts[i], pts[j])) continue;
      if (i > 0 && !rel(pts[i - 1], pts[j])) {
        weak = fail(weak.axiom, {name(pts[i - 1]), name(pts[i]), name(pts[j]), name(pts[j])},
                    name(pts[i]) + " ≺ " + name(pts[j]) + " but not " + name(pts[i - 1]) + " ≺ " + name(pts[j]));
        break;
      }
      if (j + 1 < pts.size() && !rel(pts[i], pts[j + 1])) {
        weak = fail(weak.axiom, {name(pts[i]), name(pts[i]), name(pts[j]), name(pts[j + 1])},
                    name(pts[i]) + " ≺ " + name(pts[j]) + " but not " + name(pts[i]) + " ≺ " + name(pts[j + 1]));
        break;
      }
    }
  }

  {
    // On a chain the componentwise meet/join of two related pairs is one of
    // the four pairs (a|x, b|y); all four are checked on the class points.
    AxiomCheck c{"bounded-sublattice", Verdict::symbolic};
    if (!rel(shape.bot(), shape.bot())) {
      c = fail(c.axiom, {name(shape.bot()), name(shape.bot())}, "0 ≺ 0 is missing");
    } else if (!rel(shape.top(), shape.top())) {
      c = fail(c.axiom, {name(shape.top()), name(shape.top())}, "1 ≺ 1 is missing");
    } else {
      std::vector<std::pair<Code, Code>> pairs;
      for (Code a : pts) {
        for (Code b : pts) {
          if (rel(a, b)) pairs.emplace_back(a, b);
        }
      }
      for (std::size_t i = 0; i < pairs.size() && c.verdict == Verdict::symbolic; ++i) {
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
          const auto [a, b] = pairs[i];
          const auto [x, y] = pairs[j];
          if (!rel(meet(a, x), meet(b, y)) || !rel(join(a, x), join(b, y))) {
            c = fail(c.axiom, {name(a), name(b), name(x), name(y)},
                     "componentwise meet or join of (" + name(a) + "," + name(b) + ") and (" + name(x) + "," +
                         name(y) + ") is not related");
            break;
          }
        }
      }
    }
    report.checks.push_back(std::move(c));
  }
  report.checks.push_back(std::move(weak));

  {
    AxiomCheck c{"interpolation", Verdict::symbolic};
    for (Code a : pts) {
      for (Code b : pts) {
        if (c.verdict != Verdict::symbolic || !rel(a, b)) continue;
        std::vector<Code> candidates = pts;
        candidates.push_back(a);
        candidates.push_back(b);
        if (shape.contains({a.block, a.offset + 1})) candidates.push_back({a.block, a.offset + 1});
        const bool found = std::any_of(candidates.begin(), candidates.end(),
                                       [&](Code mid) { return rel(a, mid) && rel(mid, b); });
        if (!found) c = fail(c.axiom, {name(a), name(b)}, "no c with " + name(a) + " ≺ c ≺ " + name(b));
      }
    }
    report.checks.push_back(std::move(c));
  }

  {
    AxiomCheck c{"approximation", Verdict::symbolic};
    for (Code a : pts) {
      if (rel(a, a)) continue;
      if (!is_limit(a)) {
        const Code bound = a.offset == 0 ? a : Code{a.block, a.offset - 1};
        c = fail(c.axiom, {name(a)}, "{b : b ≺ " + name(a) + "} is bounded by " + name(bound));
        break;
      }
      // The predecessors of a limit: cofinal in the previous block exactly
      // when every probe of that block is related, and then the family
      // n ↦ Succ(q-1, n) has supremum Lim(q).
      const std::uint32_t q = a.block - 1;
      std::optional<Code> gap;
      for (std::uint64_t r : {std::uint64_t{0}, std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{1000},
                              std::uint64_t{1} << 40}) {
        if (!rel(Code{q, r}, a)) {
          gap = Code{q, r};
          break;
        }
      }
      const ElementFamily family{{}, Tail{q, 1, 0}};
      if (gap || family.sup() != a) {
        c = fail(c.axiom, {name(a)},
                 "{b : b ≺ " + name(a) + "} misses " + name(gap.value_or(a)) + ", so its join is below " + name(a));
        break;
      }
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

AxiomReport validate_proximity(const ProxChain& p) {
  const std::uint64_t allowed = ((p.shape.k >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (p.shape.k + 1)) - 1)) &
                                ~std::uint64_t{1};
  if ((p.reflexive_limits & ~allowed) != 0) {
    throw Error(ErrorKind::MalformedRelation, "reflexive limit set refers to blocks outside 1..k");
  }
  return validate_proximity(p.shape, [&p](Code a, Code b) { return p.rel(a, b); });
}

// ---- builders --------------------------------------------------------------

FiniteProxFrame order_proximity(std::shared_ptr<const FiniteFrame> frame, std::string name) {
  FiniteProxFrame p{std::move(frame), {}, std::move(name)};
  for (Elem a = 0; a < p.size(); ++a) p.below.push_back(p.frame->down(a));
  return p;
}

FiniteProxFrame product_proximity(const FiniteProxFrame& p, const FiniteProxFrame& q) {
  auto frame = std::make_shared<const FiniteFrame>(product(*p.frame, *q.frame));
  std::vector<Elem> index(p.size() * q.size());
  for (Elem a = 0; a < p.size(); ++a) {
    for (Elem b = 0; b < q.size(); ++b) {
      index[a * q.size() + b] = frame->at("(" + p.frame->id(a) + "," + q.frame->id(b) + ")");
    }
  }
  std::vector<ElemSet> below(frame->size(), 0);
  for (Elem a = 0; a < p.size(); ++a) {
    for (Elem b = 0; b < q.size(); ++b) {
      ElemSet col = 0;
      for_each_member(p.below[a], [&](Elem x) {
        for_each_member(q.below[b], [&](Elem y) { col |= singleton(index[x * q.size() + y]); });
      });
      below[index[a * q.size() + b]] = col;
    }
  }
  std::string name = p.name.empty() || q.name.empty() ? std::string{} : p.name + "*" + q.name;
  return FiniteProxFrame{std::move(frame), std::move(below), std::move(name)};
}

CandidateRelation well_inside(const FiniteFrame& f) {
  std::vector<ElemSet> below(f.size(), 0);
  for (Elem a = 0; a < f.size(); ++a) {
    for (Elem b = 0; b < f.size(); ++b) {
      if (f.join(f.pseudocomplement(a), b) == f.top()) below[b] |= singleton(a);
    }
  }
  AxiomReport report = validate_proximity(f, below);
  return CandidateRelation{std::move(below), std::move(report)};
}

LawReport certify_finite_collapse(const FiniteFrame& frame, const std::string& instance, Exec exec) {
  const CollapseResult r = search_proximities(frame, exec);
  LawReport report{"P.collapse", instance};
  report.samples = r.candidates;
  report.pass = r.survivors == 1 && !r.counterexample;
  report.detail = std::to_string(r.candidates) + " candidate relations, " + std::to_string(r.survivors) +
                  " satisfy every axiom";
  if (r.counterexample) {
    for (Elem b = 0; b < frame.size(); ++b) {
      for_each_member((*r.counterexample)[b], [&](Elem a) { report.witness.push_back(frame.id(a) + "≺" + frame.id(b)); });
    }
  }
  return report;
}

}  // namespace proxkit
