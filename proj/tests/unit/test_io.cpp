#include <doctest.h>

#include "proxkit/catalog.hpp"
#include "proxkit/comonads.hpp"
#include "proxkit/error.hpp"
#include "proxkit/morphisms.hpp"

using namespace proxkit;

namespace {

const Catalog& cat() { return Catalog::builtin(); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("catalog contents") {
    std::vector<std::string> names;
    for (const Instance& i : cat().instances()) names.push_back(i.name);
    CHECK(names == std::vector<std::string>{"two", "chain3", "chain4", "diamond", "cube3", "chain:k=1", "chain:k=2"});
    CHECK(cat().instance("cube3").finite().size() == 8);
    CHECK(cat().instance("chain:k=1").chain() == chain_proximity(build_chain_frame(1), {1}));
    CHECK(cat().instance("chain:k=2").chain() == chain_proximity(build_chain_frame(2), {2}));
    CHECK(cat().instance("R(chain:k=1)").chain() == round_ideal_chain(cat().instance("chain:k=1").chain()));
    CHECK(cat().instance("C(R(two))").finite().size() == 2);
    CHECK(kind_of([] { cat().instance("pentagon"); }) == ErrorKind::UnknownInstance);
    CHECK(cat().finite_instances(4).size() == 4);
    for (const Instance& i : cat().instances()) {
      if (i.is_chain()) {
        CHECK(validate_proximity(i.chain()).ok());
      } else {
        CHECK(validate_proximity(i.finite()).ok());
      }
    }
  }

  TEST_CASE("catalog chain morphisms") {
    const ProxChain p1 = cat().instance("chain:k=1").chain();
    CHECK(cat().chain_map("id") == identity_map(p1));
    CHECK(cat().chain_map("double")(succ(0, 7)) == succ(0, 14));
    CHECK(cat().chain_map("shift3")(succ(0, 0)) == succ(0, 0));
    CHECK(cat().chain_map("shift3")(succ(0, 4)) == succ(0, 7));
    CHECK(cat().chain_map("h")(succ(0, 9)) == succ(0, 0));
    CHECK(cat().chain_map("f")(succ(0, 2)) == succ(1, 2));
    CHECK(cat().chain_map("e")(succ(0, 3)) == succ(1, 2));
    for (const NamedChainMap& m : cat().chain_maps()) {
      CAPTURE(m.name);
      CHECK(is_proxhom(m.map));
    }
    CHECK(is_pframemap(cat().chain_map("e")));
    CHECK(is_proper(cat().chain_map("e")));
    CHECK(is_pframemap(cat().chain_map("q")));
    CHECK(!is_proper(cat().chain_map("q")));
    CHECK(cat().chain_maps_touching(p1).size() == 6);
  }

  TEST_CASE("parse then print is idempotent") {
    const std::vector<Json> docs = {
        Json::parse(R"j({"kind":"downsets","name":"v","points":["a","b","c"],"leq":[["a","c"],["b","c"]]})j"),
        Json::parse(R"j({"kind":"topology","name":"sierpinski","points":["x","y"],"opens":[[],["x"],["x","y"]]})j"),
        Json::parse(R"j({"kind":"product","name":"sq","left":{"elements":["0","1"],"leq":[["0","1"]]},
                        "right":{"elements":["0","1"],"leq":[["0","1"]]}})j"),
        Json::parse(R"j({"kind":"finite","elements":["0","m","1"],"leq":[["0","m"],["m","1"]],
                        "proximity":{"pairs":[["0","0"],["0","m"],["0","1"],["m","1"],["1","1"]]}})j"),
        Json::parse(R"j({"kind":"chain","k":3,"m":2,"reflexive":[1,3]})j"),
        Json::parse(R"j({"kind":"chain","k":1,"m":1,"proximity":"way-below"})j"),
    };
    for (const Json& d : docs) {
      CAPTURE(d.dump());
      const Json once = print_instance(parse_instance(d));
      const Json twice = print_instance(parse_instance(once));
      CHECK(once.dump() == twice.dump());
    }
    for (const Instance& i : cat().instances()) CHECK(print_instance(parse_instance(print_instance(i))) == print_instance(i));
  }

  TEST_CASE("parse errors") {
    CHECK(kind_of([] { parse_instance(Json::parse(R"j({"kind":"nope"})j")); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_instance(Json::parse(R"j({"kind":"chain"})j")); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_instance(Json::parse(R"j({"elements":"x"})j")); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_instance(Json::parse(R"j({"elements":["a","b"],"leq":[["a","b"],["b","a"]]})j")); }) !=
          ErrorKind::ParseError);
    CHECK(kind_of([] { parse_chain_ideal("Prin(Lim(1)"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_chain_ideal("BelowLim(x)"); }) == ErrorKind::ParseError);
    const InstanceResolver resolve = [](const Json& r) { return cat().resolve(r); };
    CHECK(kind_of([&] {
            parse_finite_map(Json::parse(R"j({"dom":"two","cod":"two","table":{"0":"0"}})j"), resolve);
          }) == ErrorKind::MalformedMap);
  }

  TEST_CASE("maps and ideal terms") {
    const InstanceResolver resolve = [](const Json& r) { return cat().resolve(r); };
    const FiniteMap f =
        parse_finite_map(Json::parse(R"j({"dom":"chain3","cod":"two","table":{"0":"0","m":"1","1":"1"}})j"), resolve);
    CHECK(f.table == std::vector<Elem>{0, 1, 1});
    CHECK(print_map(f)["table"].dump() == R"j({"0":"0","m":"1","1":"1"})j");
    const ChainMap g = parse_chain_map(print_map(cat().chain_map("shift3")), resolve);
    CHECK(g == cat().chain_map("shift3"));
    const ChainMap d = parse_chain_map(
        Json::parse(R"j({"dom":"chain:k=2","cod":"chain:k=2","limits":"derived",
                        "blocks":[{"tail":{"block":0,"a":1,"b":0}},{"const":"Lim(2)"},{"const":"Lim(2)"}]})j"),
        resolve);
    CHECK(d(lim(1)) == lim(1));
    const ProxChain p1 = cat().instance("chain:k=1").chain();
    const IdealTerm t = parse_ideal_term(
        Json::parse(R"j({"join":["Prin(Succ(0,3))",{"dirFam":{"tail":{"block":0,"a":1,"b":0}}}]})j"), resolve);
    CHECK(normalize(p1, t) == below_lim(1));
    CHECK(parse_chain_ideal("Prin(Lim(1))") == prin(lim(1)));
  }

  TEST_CASE("report json") {
    LawReport r{"R.coassoc", "chain:k=1", false, 12, 42, {"Lim(1)"}, "differs"};
    CHECK(to_json(r).dump() ==
          R"j({"law":"R.coassoc","instance":"chain:k=1","verdict":"fail","samples":12,"seed":42,"witness":["Lim(1)"],"detail":"differs"})j");
    const Json a = to_json(validate_proximity(cat().instance("diamond").finite()));
    CHECK(a["ok"] == true);
  }

  TEST_CASE("compactify output") {
    const Json c = compactify(cat().instance("chain:k=1"));
    CHECK(c["order_type"] == "ω+2");
    std::vector<std::string> ideals;
    for (const Json& e : c["elements"]) ideals.push_back(e["ideal"]);
    CHECK(ideals == std::vector<std::string>{"Prin(Succ(0,n))", "BelowLim(1)", "Prin(Lim(1))"});
    const Json c2 = compactify(cat().instance("chain:k=2"));
    CHECK(c2["order_type"] == "ω·2+2");
    CHECK(compactify(cat().instance("diamond"))["size"] == 4);
    const std::string dot = compactify_dot(cat().instance("diamond"));
    CHECK(dot.find("->") != std::string::npos);
    CHECK(compactify_text(cat().instance("chain:k=1")).find("BelowLim(1)") != std::string::npos);
  }
}
