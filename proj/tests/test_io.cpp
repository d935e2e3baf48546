#include <gtest/gtest.h>

#include <functional>

#include "hennings/builtin.hpp"
#include "hennings/io.hpp"

using namespace hennings;
using namespace hennings::moves;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const IoError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Io, GroupRoundTrip) {
  for (const auto& g : {cyclic_group(5), symmetric_group(3), product_group(cyclic_group(2), cyclic_group(3))}) {
    EXPECT_EQ(group_from_json(group_to_json(g)), g);
  }
  EXPECT_EQ(group_from_json(Json("cyclic:4")), cyclic_group(4));
  EXPECT_NE(error_of([] { group_from_json(Json::parse(R"({"order": 2, "table": [[1,1],[0,0]]})")); }).find("group"),
            std::string::npos);
}

TEST(Io, AlgebraRoundTrip) {
  for (const auto& h : {build_cyclic({1, 1, 0}), build_cyclic({2, 3, 1}), build_cyclic({3, 4, 2}), build_kac_paljutkin()}) {
    const Json j = algebra_to_json(h);
    EXPECT_EQ(algebra_from_json(j).data(), h.data());
    EXPECT_EQ(algebra_from_json(Json::parse(j.dump())).data(), h.data());
    EXPECT_EQ(algebra_to_json(algebra_from_json(j)).dump(), j.dump());
  }
}

TEST(Io, AlgebraAcceptsNamedGrades) {
  const auto h = build_kac_paljutkin();
  Json j = algebra_to_json(h);
  for (auto& e : j["antipode"]) e[0] = h.group().name(GroupElement{e[0].get<std::size_t>()});
  EXPECT_EQ(algebra_from_json(j).data(), h.data());
}

TEST(Io, AlgebraErrorsNameTheField) {
  const Json good = algebra_to_json(build_cyclic({2, 3, 1}));
  {
    Json j = good;
    j["antipode"][0][2][1] = "1/0";
    EXPECT_NE(error_of([&] { algebra_from_json(j); }).find("antipode[0][2][1]"), std::string::npos);
  }
  {
    Json j = good;
    j["dims"].push_back(3);
    EXPECT_NE(error_of([&] { algebra_from_json(j); }).find("dims"), std::string::npos);
  }
  {
    Json j = good;
    j.erase("rmatrix");
    EXPECT_NE(error_of([&] { algebra_from_json(j); }).find("rmatrix"), std::string::npos);
  }
  {
    Json j = good;
    j["product"][0][2] = 7;
    EXPECT_NE(error_of([&] { algebra_from_json(j); }).find("product[0][2]"), std::string::npos);
  }
  {
    Json j = good;
    j["conductor"] = 0;
    EXPECT_NE(error_of([&] { algebra_from_json(j); }).find("conductor"), std::string::npos);
  }
}

TEST(Io, CorruptedAntipodeStillLoads) {
  Json j = algebra_to_json(build_cyclic({2, 3, 1}));
  j["antipode"][3][2] = Json::array({0, "1"});
  EXPECT_NO_THROW(algebra_from_json(j));
}

TEST(Io, DiagramRoundTrip) {
  for (const auto& name : builtin_diagram_names()) {
    const auto d = builtin_diagram(name);
    EXPECT_EQ(diagram_from_json(diagram_to_json(d)), d) << name;
  }
  const auto b = braid_closure(3, {1, -2, 1});
  EXPECT_EQ(diagram_from_json(diagram_to_json(b)), b);
}

TEST(Io, DiagramErrors) {
  Json j = diagram_to_json(builtin_diagram("s1xs1xs2"));
  j["crossings"][0]["sign"] = "0";
  EXPECT_NE(error_of([&] { diagram_from_json(j); }).find("crossings[0].sign"), std::string::npos);
  Json k = diagram_to_json(builtin_diagram("cp2"));
  k["undotted"][0]["events"].erase(1);
  EXPECT_NE(error_of([&] { diagram_from_json(k); }).find("crossing 0"), std::string::npos);
  Json e = diagram_to_json(builtin_diagram("cp2"));
  e["undotted"][0]["events"][0] = Json::object({{"strand", 1}});
  EXPECT_NE(error_of([&] { diagram_from_json(e); }).find("undotted[0].events[0]"), std::string::npos);
}

TEST(Io, MoveRoundTrip) {
  const auto g = symmetric_group(3);
  const std::vector<MoveSpec> all = {R2Insert{1, 2, 0, 1, Sign::Negative, false},
                                     R2Remove{3, 4},
                                     R3{0, 1, 2},
                                     CurlTransfer{2, std::nullopt},
                                     CurlTransfer{2, 5},
                                     FingerInsert{0, 1, 2, 3, Direction::Up, false},
                                     FingerRemove{1, 4},
                                     DotReverse{2},
                                     DotSlide{0, 1},
                                     HandleSlide{1, 0, 2},
                                     HandleUnslide{1, 0},
                                     CancelPairInsert{Direction::Up},
                                     CancelPairDelete{3},
                                     UnknotInsert{},
                                     UnknotDelete{2},
                                     GlobalConjugate{GroupElement{4}},
                                     Reorient{1},
                                     Rotate{1, 3}};
  for (const auto& m : all) {
    const Json j = move_to_json(m, g);
    const MoveSpec back = move_from_json(j, g);
    EXPECT_EQ(back.index(), m.index());
    EXPECT_EQ(move_to_json(back, g), j);
    EXPECT_EQ(describe(back, g), describe(m, g));
  }
  Json script = Json::object({{"steps", Json::array()}});
  for (const auto& m : all) script["steps"].push_back(move_to_json(m, g));
  EXPECT_EQ(moves_from_json(script, g).size(), all.size());
  EXPECT_EQ(moves_from_json(script["steps"], g).size(), all.size());
}

TEST(Io, MoveErrorsNameTheStep) {
  const auto g = cyclic_group(2);
  const Json script = Json::parse(R"([{"type": "unknot-insert"}, {"type": "twist"}])");
  EXPECT_NE(error_of([&] { moves_from_json(script, g); }).find("step 1"), std::string::npos);
  const Json missing = Json::parse(R"([{"type": "r2-remove", "first": 0}])");
  EXPECT_NE(error_of([&] { moves_from_json(missing, g); }).find("second"), std::string::npos);
}

TEST(Io, MissingFile) {
  EXPECT_NE(error_of([] { read_json_file("/nonexistent/file.json"); }).find("cannot open"), std::string::npos);
}
