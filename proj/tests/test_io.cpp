#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hitwalk/error.hpp"
#include "hitwalk/json_io.hpp"

using namespace hitwalk;

TEST_CASE("graph JSON schema and integral weight rendering") {
  const Graph g = generate("cycle", {4});
  const Json j = graph_to_json(g);
  CHECK(j["n"] == 4);
  CHECK(j["directed"] == false);
  const std::string text = format_json(j);
  CHECK(text.find("\"adj\"") != std::string::npos);
  // integral weights render as exact decimals, not floats
  CHECK(text.find("1,") != std::string::npos);
  CHECK(text.find("1.0") == std::string::npos);
  const Graph back = graph_from_json(Json::parse(text));
  CHECK(back.adj == g.adj);
}

TEST_CASE("graph JSON rejects malformed input") {
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 2})")), InvalidInput);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 3, "adj": [[0,1],[1,0]]})")),
                  InvalidInput);
  // disconnected adjacency
  CHECK_THROWS_AS(
      graph_from_json(Json::parse(R"({"n": 3, "adj": [[0,1,0],[1,0,0],[0,0,0]]})")),
      DisconnectedGraph);
}

TEST_CASE("floats are rendered with 17 significant digits") {
  Json j;
  j["x"] = 2.6180339887498949;  // (3 + sqrt 5) / 2
  j["y"] = 1.0 / 3.0;
  const std::string text = format_json(j);
  CHECK(text.find("2.6180339887498949") != std::string::npos);
  CHECK(text.find("0.33333333333333331") != std::string::npos);
  // round trip is exact
  CHECK(Json::parse(text)["x"].get<double>() == 2.6180339887498949);
}

TEST_CASE("non-finite floats render as null") {
  Json j;
  j["x"] = std::nan("");
  CHECK(format_json(j).find("null") != std::string::npos);
}

TEST_CASE("partition JSON round trip") {
  const Partition p = make_partition({{2}, {0, 1}, {3, 4, 5}}, 2, 6);
  const Json j = partition_to_json(p);
  CHECK(j["center"] == 2);
  const Partition back = partition_from_json(Json::parse(format_json(j)), 6);
  CHECK(back.blocks == p.blocks);
  CHECK(back.center == p.center);
}

TEST_CASE("quotient JSON carries kind-specific fields") {
  const Graph q3 = generate("hypercube", {3});
  const PerronData perron_data = perron(q3);
  const Partition p = coarsest_stabilized(q3, 0, QuotientKind::equitable);
  EquitableCheck eq = check_equitable(q3, p);
  attach_block_weights(*eq.quotient, p, perron_data);
  const Json je = quotient_to_json(*eq.quotient);
  CHECK(je["kind"] == "equitable");
  CHECK(je.contains("nu_block"));
  CHECK_FALSE(je.contains("lambda1"));

  const EquitableCheck wq = check_weight_equitable(q3, p, perron_data);
  const Json jw = quotient_to_json(*wq.quotient);
  CHECK(jw["kind"] == "weight");
  CHECK(jw["lambda1"].get<double>() == doctest::Approx(3.0));
}

TEST_CASE("hitting report JSON fields") {
  const HittingReport r = hit_full(generate("cycle", {5}), 0, WalkKind::simple);
  const Json j = report_to_json(r);
  CHECK(j["target"] == 0);
  CHECK(j["method"] == "full");
  CHECK(j["walk"] == "simple");
  CHECK(j["times"].size() == 5);
  CHECK(j["times"][1].get<double>() == doctest::Approx(4.0));
  CHECK(j["residual"].get<double>() >= 0.0);
}

TEST_CASE("label function JSON round trip") {
  const Graph g = generate("star", {3});
  std::vector<int> colors{3, 1, 1, 1};
  const LabelFunction f = distance_label_function(g, colors);
  const LabelFunction back = label_function_from_json(Json::parse(format_json(label_function_to_json(f))));
  CHECK(back.n == f.n);
  CHECK(back.codes == f.codes);
  CHECK(back.alphabet == f.alphabet);
}

TEST_CASE("label function JSON validation") {
  // color reused off-diagonal
  const Json bad = Json::parse(R"({"alphabet": ["c", "x"], "labels": [[0, 0], [1, 0]]})");
  CHECK_THROWS_AS(label_function_from_json(bad), InvalidInput);
}

TEST_CASE("scheme JSON: relation list and label matrix forms") {
  const AssociationScheme s = hamming_scheme(2);
  const Json j = scheme_to_json(s);
  const AssociationScheme back = scheme_from_json(j);
  CHECK(back.n == s.n);
  CHECK(back.d == s.d);
  CHECK(back.p == s.p);

  // the same scheme as a single label matrix
  Json labels;
  labels["n"] = s.n;
  Json rows = Json::array();
  for (int u = 0; u < s.n; ++u) {
    Json row = Json::array();
    for (int v = 0; v < s.n; ++v) {
      int k = 0;
      for (int r = 0; r <= s.d; ++r)
        if (s.relations[r].at(u, v) == 1) k = r;
      row.push_back(k);
    }
    rows.push_back(row);
  }
  labels["labels"] = rows;
  const AssociationScheme from_labels = scheme_from_json(labels);
  CHECK(from_labels.p == s.p);
}

TEST_CASE("intersection array and verdict JSON") {
  const Graph pet = generate("petersen");
  const auto chk = intersection_array(pet, 0);
  REQUIRE(chk.ok());
  const Json j = intersection_array_to_json(*chk.array);
  CHECK(j["kind"] == "integer");
  CHECK(j["c"] == Json::parse("[1, 1]"));
  CHECK(j["b"] == Json::parse("[3, 2]"));

  const EquiWisRVerdict v =
      check_weight_f_equitable_implies_f_equitable(pet, distance_label_function(pet));
  const Json jv = verdict_to_json(v);
  CHECK(jv["applicable"] == true);
  CHECK(jv["consistent"] == true);
}

TEST_CASE("scheme JSON rejects non-schemes") {
  Json j;
  j["n"] = 3;
  j["relations"] = Json::parse("[[[1,0,0],[0,1,0],[0,0,1]], [[0,1,0],[1,0,0],[0,0,0]]]");
  CHECK_THROWS_AS(scheme_from_json(j), InvalidInput);
}
