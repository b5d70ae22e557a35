#include "proxkit/io.hpp"

#include <algorithm>
#include <sstream>

#include "proxkit/error.hpp"

namespace proxkit {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::vector<std::string> strings(const Json& arr, const char* what) {
  if (!arr.is_array()) parse_error(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const Json& s : arr) {
    if (!s.is_string()) parse_error(std::string(what) + " entries must be strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

std::vector<LeqPair> pairs(const Json& arr, const char* what) {
  if (!arr.is_array()) parse_error(std::string(what) + " must be an array of pairs");
  std::vector<LeqPair> out;
  for (const Json& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      parse_error(std::string(what) + " entries must be [\"a\", \"b\"] pairs");
    }
    out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return out;
}

std::vector<ElemSet> relation_columns(const FiniteFrame& f, const Json& doc) {
  std::vector<ElemSet> below(f.size(), 0);
  if (doc.is_string()) {
    const std::string s = doc.get<std::string>();
    if (s == "leq") {
      for (Elem b = 0; b < f.size(); ++b) below[b] = f.down(b);
    } else if (s == "well-inside") {
      below = well_inside(f).below;
    } else {
      parse_error("unknown proximity '" + s + "'");
    }
    return below;
  }
  for (const auto& [a, b] : pairs(field(doc, "pairs"), "proximity pairs")) below[f.at(b)] |= singleton(f.at(a));
  return below;
}

Instance parse_finite_like(const Json& doc, const std::string& kind) {
  std::shared_ptr<const FiniteFrame> frame;
  std::vector<ElemSet> default_below;
  if (kind == "finite") {
    const auto ids = strings(field(doc, "elements"), "elements");
    const auto leq = doc.contains("leq") ? pairs(doc.at("leq"), "leq") : std::vector<LeqPair>{};
    frame = std::make_shared<const FiniteFrame>(FiniteFrame::build(ids, leq));
  } else if (kind == "downsets") {
    Poset p{strings(field(doc, "points"), "points"),
            doc.contains("leq") ? pairs(doc.at("leq"), "leq") : std::vector<LeqPair>{}};
    frame = std::make_shared<const FiniteFrame>(downset_frame(p));
  } else if (kind == "topology") {
    Topology t{strings(field(doc, "points"), "points"), {}};
    const Json& opens = field(doc, "opens");
    if (!opens.is_array()) parse_error("opens must be an array");
    for (const Json& o : opens) t.opens.push_back(strings(o, "open set"));
    frame = std::make_shared<const FiniteFrame>(open_set_frame(t));
  } else {  // product
    const Instance l = parse_instance(field(doc, "left"));
    const Instance r = parse_instance(field(doc, "right"));
    if (l.is_chain() || r.is_chain()) parse_error("products are limited to finite factors");
    const FiniteProxFrame pq = product_proximity(l.finite(), r.finite());
    frame = pq.frame;
    default_below = pq.below;
  }
  std::vector<ElemSet> below;
  if (doc.contains("proximity")) {
    below = relation_columns(*frame, doc.at("proximity"));
  } else if (!default_below.empty()) {
    below = default_below;
  } else {
    below = relation_columns(*frame, "leq");
  }
  const std::string name = doc.value("name", kind);
  return Instance{name, FiniteProxFrame{frame, std::move(below), name}};
}

Instance parse_chain(const Json& doc) {
  const Json& kj = field(doc, "k");
  if (!kj.is_number_integer() || kj.get<std::int64_t>() < 0) parse_error("k must be a non-negative integer");
  ChainShape shape = build_chain_frame(kj.get<std::uint32_t>());
  if (doc.contains("m")) {
    if (!doc.at("m").is_number_integer() || doc.at("m").get<std::int64_t>() < 0) parse_error("m must be >= 0");
    shape.m = doc.at("m").get<std::uint64_t>();
  }
  ProxChain p;
  if (doc.contains("reflexive")) {
    std::vector<std::uint32_t> R;
    for (const Json& q : doc.at("reflexive")) {
      if (!q.is_number_integer() || q.get<std::int64_t>() < 0) parse_error("reflexive entries must be block indices");
      R.push_back(q.get<std::uint32_t>());
    }
    p = chain_proximity(shape, R);
  } else {
    const std::string s = doc.value("proximity", "leq");
    if (s == "leq") {
      p = chain_order_proximity(shape);
    } else if (s == "way-below") {
      p = chain_way_below_relation(shape);
    } else {
      parse_error("unknown chain proximity '" + s + "'");
    }
  }
  return Instance{doc.value("name", describe(p)), p};
}

Json code_json(Code c) { return element_name(c); }

Json tail_json(const Tail& t) {
  if (t.slope == 0) return Json{{"const", element_name(t.at(0))}};
  return Json{{"block", t.block}, {"a", t.slope}, {"b", t.intercept}};
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::symbolic: return "symbolic";
  }
  return "?";
}

}  // namespace

Instance parse_instance(const Json& doc) {
  try {
    if (!doc.is_object()) parse_error("instance must be a JSON object");
    const std::string kind = doc.value("kind", "finite");
    if (kind == "chain") return parse_chain(doc);
    if (kind == "finite" || kind == "downsets" || kind == "topology" || kind == "product") {
      return parse_finite_like(doc, kind);
    }
    parse_error("unknown instance kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    parse_error(e.what());
  }
}

Json print_instance(const Instance& inst) {
  Json out;
  if (inst.is_chain()) {
    const ProxChain& p = inst.chain();
    out["kind"] = "chain";
    out["name"] = inst.name;
    out["k"] = p.shape.k;
    out["m"] = p.shape.m;
    out["reflexive"] = p.reflexive_limit_list();
    return out;
  }
  const FiniteProxFrame& p = inst.finite();
  const FiniteFrame& f = *p.frame;
  out["kind"] = "finite";
  out["name"] = inst.name;
  out["elements"] = f.ids();
  Json leq = Json::array();
  for (const auto& [a, b] : f.covers()) leq.push_back({f.id(a), f.id(b)});
  out["leq"] = leq;
  bool is_order = true;
  for (Elem b = 0; b < f.size(); ++b) is_order = is_order && p.below[b] == f.down(b);
  if (is_order) {
    out["proximity"] = "leq";
  } else {
    Json rel = Json::array();
    for (Elem a = 0; a < f.size(); ++a) {
      for (Elem b = 0; b < f.size(); ++b) {
        if (p.rel(a, b)) rel.push_back({f.id(a), f.id(b)});
      }
    }
    out["proximity"] = Json{{"pairs", rel}};
  }
  return out;
}

FiniteMap parse_finite_map(const Json& doc, const InstanceResolver& resolve) {
  try {
    const Instance dom = resolve(field(doc, "dom"));
    const Instance cod = resolve(field(doc, "cod"));
    if (dom.is_chain() || cod.is_chain()) parse_error("table maps need finite frames");
    const FiniteFrame& L = *dom.finite().frame;
    const FiniteFrame& M = *cod.finite().frame;
    const Json& table = field(doc, "table");
    if (!table.is_object()) parse_error("table must map element ids to element ids");
    std::vector<Elem> values(L.size(), 0);
    std::vector<bool> seen(L.size(), false);
    for (const auto& [k, v] : table.items()) {
      if (!v.is_string()) parse_error("table values must be element ids");
      const Elem a = L.at(k);
      values[a] = M.at(v.get<std::string>());
      seen[a] = true;
    }
    for (Elem a = 0; a < L.size(); ++a) {
      if (!seen[a]) throw Error(ErrorKind::MalformedMap, "no value for '" + L.id(a) + "'", {L.id(a)});
    }
    return make_map(dom.finite(), cod.finite(), std::move(values));
  } catch (const nlohmann::json::exception& e) {
    parse_error(e.what());
  }
}

ChainMap parse_chain_map(const Json& doc, const InstanceResolver& resolve) {
  try {
    const Instance dom = resolve(field(doc, "dom"));
    const Instance cod = resolve(field(doc, "cod"));
    if (!dom.is_chain() || !cod.is_chain()) parse_error("block maps need chain frames");
    const Json& blocks = field(doc, "blocks");
    if (!blocks.is_array()) parse_error("blocks must be an array");
    std::vector<AffineSeq> seqs;
    for (const Json& b : blocks) {
      AffineSeq s;
      if (b.contains("const")) {
        s.tail = constant_tail(parse_element(b.at("const").get<std::string>()));
      } else {
        for (const auto& h : strings(b.value("head", Json::array()), "head")) s.head.push_back(parse_element(h));
        const Json& t = field(b, "tail");
        if (t.contains("const")) {
          s.tail = constant_tail(parse_element(t.at("const").get<std::string>()));
        } else {
          s.tail = Tail{field(t, "block").get<std::uint32_t>(), field(t, "a").get<std::uint64_t>(),
                        field(t, "b").get<std::int64_t>()};
        }
      }
      seqs.push_back(std::move(s));
    }
    ChainMap f(dom.chain(), cod.chain(), std::move(seqs));
    if (doc.contains("exceptions")) {
      for (const auto& [k, v] : doc.at("exceptions").items()) {
        f = f.with_value(parse_element(k), parse_element(v.get<std::string>()));
      }
    }
    if (doc.value("limits", "") == "derived") {
      for (std::uint32_t q = 1; q <= f.dom().shape.k; ++q) {
        if (!f.dom().reflexive(lim(q))) f = f.with_value(lim(q), f.block_sup(q - 1));
      }
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    parse_error(e.what());
  }
}

Json print_map(const FiniteMap& f) {
  Json table;
  for (Elem a = 0; a < f.dom.size(); ++a) table[f.dom.frame->id(a)] = f.cod.frame->id(f(a));
  return Json{{"dom", print_instance(Instance{f.dom.name, f.dom})},
              {"cod", print_instance(Instance{f.cod.name, f.cod})},
              {"table", table}};
}

Json print_map(const ChainMap& f) {
  Json blocks = Json::array();
  for (const AffineSeq& s : f.blocks()) {
    Json head = Json::array();
    for (Code c : s.head) head.push_back(code_json(c));
    blocks.push_back(Json{{"head", head}, {"tail", tail_json(s.tail)}});
  }
  return Json{{"dom", print_instance(Instance{describe(f.dom()), f.dom()})},
              {"cod", print_instance(Instance{describe(f.cod()), f.cod()})},
              {"blocks", blocks}};
}

ChainIdeal parse_chain_ideal(const std::string& text) {
  const auto inner = [&](std::size_t prefix) {
    if (text.size() <= prefix || text.back() != ')') parse_error("malformed ideal '" + text + "'");
    return text.substr(prefix, text.size() - prefix - 1);
  };
  if (text.rfind("Prin(", 0) == 0) return prin(parse_element(inner(5)));
  if (text.rfind("BelowLim(", 0) == 0) {
    const std::string q = inner(9);
    if (q.empty() || !std::all_of(q.begin(), q.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      parse_error("malformed ideal '" + text + "'");
    }
    return below_lim(static_cast<std::uint32_t>(std::stoul(q)));
  }
  parse_error("unknown ideal '" + text + "'");
}

IdealTerm parse_ideal_term(const Json& doc, const InstanceResolver& resolve) {
  try {
    if (doc.is_string()) return IdealTerm::canonical(parse_chain_ideal(doc.get<std::string>()));
    if (doc.contains("join")) {
      std::vector<IdealTerm> parts;
      for (const Json& p : doc.at("join")) parts.push_back(parse_ideal_term(p, resolve));
      return IdealTerm::join(std::move(parts));
    }
    if (doc.contains("dirFam")) {
      const Json& fam = doc.at("dirFam");
      ElementFamily f;
      for (const auto& h : strings(fam.value("head", Json::array()), "head")) f.head.push_back(parse_element(h));
      const Json& t = field(fam, "tail");
      f.tail = t.contains("const") ? constant_tail(parse_element(t.at("const").get<std::string>()))
                                   : Tail{field(t, "block").get<std::uint32_t>(), field(t, "a").get<std::uint64_t>(),
                                          field(t, "b").get<std::int64_t>()};
      return IdealTerm::dir_fam(std::move(f));
    }
    if (doc.contains("image")) {
      const Json& img = doc.at("image");
      auto f = std::make_shared<const ChainMap>(parse_chain_map(field(img, "map"), resolve));
      return IdealTerm::image(std::move(f), parse_ideal_term(field(img, "of"), resolve));
    }
    parse_error("unknown ideal term");
  } catch (const nlohmann::json::exception& e) {
    parse_error(e.what());
  }
}

Json to_json(const AxiomReport& report) {
  Json out;
  out["ok"] = report.ok();
  Json checks = Json::array();
  for (const AxiomCheck& c : report.checks) {
    Json j{{"axiom", c.axiom}, {"verdict", verdict_name(c.verdict)}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(j);
  }
  out["checks"] = checks;
  if (report.collapse) out["collapse"] = *report.collapse;
  if (report.proper) out["proper"] = *report.proper;
  return out;
}

Json to_json(const LawReport& report) {
  Json out{{"law", report.law},
           {"instance", report.instance},
           {"verdict", report.pass ? "pass" : "fail"},
           {"samples", report.samples},
           {"seed", report.seed}};
  if (!report.witness.empty()) out["witness"] = report.witness;
  if (!report.detail.empty()) out["detail"] = report.detail;
  return out;
}

// ---- compactification ------------------------------------------------------

std::string order_type(const ChainShape& shape) {
  const std::string omega = shape.k == 1 ? "ω" : "ω·" + std::to_string(shape.k);
  return omega + "+" + std::to_string(shape.m + 1);
}

namespace {

struct ChainClass {
  std::string position;  // element of ℜL, named as a chain element
  std::string ideal;
  std::string sigma;
  bool family = false;  // stands for n = 0, 1, 2, ...
};

std::vector<ChainClass> chain_classes(const ProxChain& p) {
  const ProxChain R = round_ideal_chain(p);
  std::vector<ChainClass> out;
  for (std::uint32_t q = 0; q <= R.shape.k; ++q) {
    const std::uint64_t s = p.shift(q);
    if (q >= 1) {
      out.push_back({element_name(lim(q)), ideal_name(below_lim(q)), element_name(lim(q))});
      if (s == 1) out.push_back({element_name({q, 1}), ideal_name(prin(lim(q))), element_name(lim(q))});
    }
    const std::uint64_t first = q == 0 ? 0 : 1 + s;  // first offset holding Prin(Succ(q, 0))
    if (!R.shape.finite_block(q)) {
      const std::string qs = std::to_string(q);
      const std::string off = s == 0 ? "n" : "n+1";
      out.push_back({"Succ(" + qs + "," + off + ")", "Prin(Succ(" + qs + ",n))", "Succ(" + qs + ",n)", true});
    } else {
      for (std::uint64_t r = first; r <= R.shape.m; ++r) {
        const ChainIdeal I = decode(p, {q, r});
        out.push_back({element_name({q, r}), ideal_name(I), element_name(sigma(p, I))});
      }
    }
  }
  return out;
}

}  // namespace

Json compactify(const Instance& inst) {
  Json out;
  out["instance"] = inst.name;
  if (inst.is_chain()) {
    const ProxChain& p = inst.chain();
    const ProxChain R = round_ideal_chain(p);
    out["kind"] = "chain";
    out["order_type"] = order_type(R.shape);
    out["shape"] = Json{{"k", R.shape.k}, {"m", R.shape.m}};
    Json classes = Json::array();
    for (const ChainClass& c : chain_classes(p)) {
      Json j{{"position", c.position}, {"ideal", c.ideal}, {"sigma", c.sigma}};
      if (c.family) j["range"] = "n>=0";
      classes.push_back(j);
    }
    out["elements"] = classes;
    out["way_below"] = Json{{"rule", "strict order"}, {"reflexive_limits", R.reflexive_limit_list()}};
    const ProxChain C = max_proximity_chain(p);
    out["max_proximity"] = Json{{"rule", "strict order plus reflexive limits"},
                                {"reflexive_limits", C.reflexive_limit_list()}};
    return out;
  }
  const FiniteProxFrame& p = inst.finite();
  const FiniteRoundIdeals ri = round_ideal_frame(p);
  const FiniteFrame& L = *p.frame;
  const FiniteFrame& RL = *ri.way_below.frame;
  out["kind"] = "finite";
  out["size"] = RL.size();
  Json elems = Json::array();
  for (Elem i = 0; i < RL.size(); ++i) {
    Json members = Json::array();
    for (Elem a = 0; a < L.size(); ++a) {
      if (contains(ri.members[i], a)) members.push_back(L.id(a));
    }
    elems.push_back(Json{{"id", RL.id(i)}, {"members", members}, {"sigma", L.id(sigma(p, ri.members[i]))}});
  }
  out["elements"] = elems;
  const auto rel = [&](const FiniteProxFrame& r) {
    Json pairs = Json::array();
    for (Elem a = 0; a < RL.size(); ++a) {
      for (Elem b = 0; b < RL.size(); ++b) {
        if (r.rel(a, b)) pairs.push_back({RL.id(a), RL.id(b)});
      }
    }
    return pairs;
  };
  out["way_below"] = rel(ri.way_below);
  out["max_proximity"] = rel(ri.max_proximity);
  return out;
}

std::string compactify_text(const Instance& inst) {
  std::ostringstream os;
  const Json j = compactify(inst);
  os << "round ideals of " << inst.name;
  if (inst.is_chain()) {
    os << " (order type " << j["order_type"].get<std::string>() << ")\n";
  } else {
    os << " (" << j["size"].get<std::size_t>() << " elements)\n";
  }
  for (const Json& e : j["elements"]) {
    if (inst.is_chain()) {
      os << "  " << e["position"].get<std::string>() << "  " << e["ideal"].get<std::string>() << "  sigma "
         << e["sigma"].get<std::string>();
      if (e.contains("range")) os << "  for n>=0";
    } else {
      os << "  " << e["id"].get<std::string>() << "  {";
      bool first = true;
      for (const Json& m : e["members"]) {
        os << (first ? "" : ",") << m.get<std::string>();
        first = false;
      }
      os << "}  sigma " << e["sigma"].get<std::string>();
    }
    os << "\n";
  }
  if (inst.is_chain()) {
    const auto list = [](const Json& arr) {
      std::string s = "[";
      for (const Json& q : arr) s += (s.size() > 1 ? "," : "") + std::to_string(q.get<std::uint32_t>());
      return s + "]";
    };
    os << "  way below: strict order, reflexive limits " << list(j["way_below"]["reflexive_limits"]) << "\n";
    os << "  max proximity: strict order, reflexive limits " << list(j["max_proximity"]["reflexive_limits"])
       << "\n";
  } else {
    os << "  way below pairs: " << j["way_below"].size() << "\n";
    os << "  max proximity pairs: " << j["max_proximity"].size() << "\n";
  }
  return os.str();
}

std::string compactify_dot(const Instance& inst) {
  if (!inst.is_chain()) return to_dot(*round_ideal_frame(inst.finite()).way_below.frame, inst.name);
  // Infinite blocks are drawn with their first offsets and an ellipsis node.
  const ProxChain p = inst.chain();
  const ProxChain R = round_ideal_chain(p);
  std::ostringstream os;
  os << "digraph \"" << inst.name << "\" {\n  rankdir=BT;\n";
  std::vector<std::string> nodes;
  for (std::uint32_t q = 0; q <= R.shape.k; ++q) {
    const std::uint64_t last = R.shape.finite_block(q) ? R.shape.m : 2 + p.shift(q);
    for (std::uint64_t r = 0; r <= last; ++r) nodes.push_back(ideal_name(decode(p, {q, r})));
    if (!R.shape.finite_block(q)) nodes.push_back("…" + std::to_string(q));
  }
  for (const std::string& n : nodes) {
    os << "  \"" << n << "\"";
    if (n.rfind("…", 0) == 0) os << " [label=\"…\", shape=plaintext]";
    os << ";\n";
  }
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    os << "  \"" << nodes[i] << "\" -> \"" << nodes[i + 1] << "\"";
    if (nodes[i].rfind("…", 0) == 0 || nodes[i + 1].rfind("…", 0) == 0) os << " [style=dashed]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace proxkit
