#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2grad/json_io.hpp"

using namespace g2grad;

namespace {

Grading sample_grading() {
  GradingDescriptor d;
  d.type = 5;
  d.params["g"] = {1};
  return canonical_c_grading(AbelianGroup({3}), d);
}

}  // namespace

TEST_CASE("group round trip") {
  const AbelianGroup g({4, 2});
  CHECK(group_from_json(group_to_json(g)) == g);
  CHECK(group_to_json(g) == Json{{"factors", {4, 2}}});
  CHECK(group_from_json(group_to_json(AbelianGroup())) == AbelianGroup());

  CHECK_THROWS_AS(group_from_json(Json{{"factors", "nope"}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(group_from_json(Json::object()), std::invalid_argument);
  CHECK_THROWS_AS(group_from_json(Json{{"factors", {4, 1}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(group_from_json(Json{{"factors", {2.5}}}),
                  std::invalid_argument);
}

TEST_CASE("element round trip validates residues") {
  const AbelianGroup g({4, 2});
  const GroupElement e{3, 1};
  CHECK(element_from_json(element_to_json(e), g) == e);
  CHECK_THROWS_AS(element_from_json(Json::array({4, 0}), g),
                  std::invalid_argument);
  CHECK_THROWS_AS(element_from_json(Json::array({0}), g),
                  std::invalid_argument);
  CHECK_THROWS_AS(element_from_json(Json("x"), g), std::invalid_argument);
}

TEST_CASE("matrix round trip keeps exact scalars") {
  Matrix m(2, 3);
  m.at(0, 0) = Cyc(make_rational(-3, 7));
  m.at(0, 2) = Cyc::zeta(4);
  m.at(1, 1) = Cyc::zeta(3) + Cyc(2);
  const Json j = matrix_to_json(m);
  CHECK(matrix_from_json(j) == m);
  CHECK(j[0][0] == "-3/7");
  CHECK(j[0][2] == "cyc(4):0,1");

  CHECK_THROWS_AS(matrix_from_json(Json("not a matrix")),
                  std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1","2"],["3"]])")),
                  std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([[1,2]])")),
                  std::invalid_argument);  // numbers, not scalar strings
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["abc"]])")),
                  std::invalid_argument);
}

TEST_CASE("grading round trip") {
  const Grading g = sample_grading();
  CHECK(grading_from_json(grading_to_json(g)) == g);

  const Grading l = induce_on_L(g);
  CHECK(grading_from_json(grading_to_json(l)) == l);

  const Json j = grading_to_json(g);
  CHECK(j["ambient"] == "octonion");
  CHECK(j["components"].size() == 3);
  CHECK(grading_to_json(l)["ambient"] == "g2");
}

TEST_CASE("arbitrary spanning sets normalize to the canonical basis") {
  const Grading g = sample_grading();
  Json j = grading_to_json(g);
  // Replace the identity component basis with redundant, scaled spans.
  j["components"][0]["basis"] = Json::array(
      {Json::array({"2", "0", "0", "0", "0", "0", "0", "0"}),
       Json::array({"3", "5", "0", "0", "0", "0", "0", "0"}),
       Json::array({"1", "1", "0", "0", "0", "0", "0", "0"})});
  const Grading parsed = grading_from_json(j);
  CHECK(parsed == g);
}

TEST_CASE("descriptor block is emitted on request and ignored on input") {
  GradingDescriptor d;
  d.type = 5;
  d.params["g"] = {1};
  const Grading g = sample_grading();

  const Json without = grading_to_json(g);
  CHECK_FALSE(without.contains("descriptor"));

  Json with = grading_to_json(g, &d);
  REQUIRE(with.contains("descriptor"));
  CHECK(with["descriptor"]["type"] == 5);
  CHECK(grading_from_json(with) == g);

  const GradingDescriptor back = descriptor_from_json(with["descriptor"]);
  CHECK(back.type == d.type);
  CHECK(back.params == d.params);
}

TEST_CASE("grading parse rejects malformed documents") {
  const Grading g = sample_grading();
  const Json good = grading_to_json(g);

  Json no_group = good;
  no_group.erase("group");
  CHECK_THROWS_AS(grading_from_json(no_group), std::invalid_argument);

  Json bad_ambient = good;
  bad_ambient["ambient"] = "quaternion";
  CHECK_THROWS_AS(grading_from_json(bad_ambient), std::invalid_argument);

  Json bad_label = good;
  bad_label["components"][0]["label"] = Json::array({7});
  CHECK_THROWS_AS(grading_from_json(bad_label), std::invalid_argument);

  Json short_vector = good;
  short_vector["components"][0]["basis"][0] = Json::array({"1", "0"});
  CHECK_THROWS_AS(grading_from_json(short_vector), std::invalid_argument);

  Json dup_label = good;
  dup_label["components"][1]["label"] = dup_label["components"][0]["label"];
  CHECK_THROWS_AS(grading_from_json(dup_label), std::invalid_argument);

  Json zero_component = good;
  zero_component["components"][0]["basis"] = Json::array(
      {Json::array({"0", "0", "0", "0", "0", "0", "0", "0"})});
  CHECK_THROWS_AS(grading_from_json(zero_component), std::invalid_argument);

  CHECK_THROWS_AS(grading_from_json(Json("[]")), std::invalid_argument);
}

TEST_CASE("verify report serialization") {
  VerifyReport ok;
  ok.ok = true;
  ok.pairs_checked = 9;
  const Json j = verify_report_to_json(ok);
  CHECK(j["ok"] == true);
  CHECK(j["pairs_checked"] == 9);
  CHECK_FALSE(j.contains("failure"));

  VerifyReport bad_report;
  bad_report.ok = false;
  bad_report.pairs_checked = 1;
  bad_report.failure = VerifyFailure{
      "product escapes the component at the product label",
      GroupElement{0}, GroupElement{1}, "witness text"};
  const Json jf = verify_report_to_json(bad_report);
  CHECK(jf["failure"]["left_label"] == Json::array({0}));
  CHECK(jf["failure"]["right_label"] == Json::array({1}));
  CHECK(jf["failure"]["witness"] == "witness text");
}

TEST_CASE("classification serialization") {
  const Classification c = classify_c_grading(sample_grading());
  const Json j = classification_to_json(c);
  CHECK(j["outcome"] == "recognized");
  CHECK(j["type"] == 5);
  CHECK(j["params"]["g"] == Json::array({1}));
  CHECK(j["sigma"].is_array());

  Classification un;
  un.recognized = false;
  un.reason = "no match";
  const Json ju = classification_to_json(un);
  CHECK(ju["outcome"] == "unrecognized");
  CHECK(ju["reason"] == "no match");
  CHECK_FALSE(ju.contains("type"));
}

TEST_CASE("iso result serialization") {
  IsoResult r;
  r.verdict = IsoVerdict::NonIsomorphic;
  r.detail = "groups differ";
  const Json j = iso_result_to_json(r);
  CHECK(j["verdict"] == "non_isomorphic");
  CHECK(j["detail"] == "groups differ");
}

TEST_CASE("selfcheck serialization shape") {
  SelfCheckReport r;
  r.ok = false;
  r.seed = 7;
  r.items.push_back({"first", true, "fine"});
  r.items.push_back({"second", false, "broken"});
  const Json j = selfcheck_to_json(r);
  CHECK(j["ok"] == false);
  CHECK(j["seed"] == 7);
  REQUIRE(j["checks"].size() == 2);
  CHECK(j["checks"][1]["name"] == "second");
  CHECK(j["checks"][1]["ok"] == false);
}
