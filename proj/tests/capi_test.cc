#include <nlohmann/json.hpp>

#include <string>

#include "gtest/gtest.h"
#include "framespace/framespace.h"

namespace {

using Json = nlohmann::json;

const char* kTwoTunnels = R"({"tunnels": [{"id": "A", "intensity": "1"}, {"id": "B", "intensity": "3/2"}],
                              "interference": [["A", "B", "2"]]})";
const char* kChainBase = R"({"distinctions": [{"id": "a", "cost": "1"}, {"id": "x", "cost": "1"},
                                              {"id": "b", "cost": "2"}],
                             "compose": [["a", "x", "b"]]})";

// Takes ownership of a string returned through the C API.
std::string take(char* text) {
  std::string out = text ? text : "";
  fs_free_string(text);
  return out;
}

}  // namespace

TEST(CApi, VersionAndStatusNames) {
  EXPECT_NE(std::string(fs_version()), "");
  EXPECT_STREQ(fs_status_name(FS_OK), "ok");
  EXPECT_STREQ(fs_status_name(FS_ERR_PARSE), "parse");
}

TEST(CApi, HandleLifecycle) {
  fs_tunnel_system* system = nullptr;
  ASSERT_EQ(fs_tunnel_system_parse(kTwoTunnels, &system), FS_OK);
  size_t size = 0;
  EXPECT_EQ(fs_tunnel_system_size(system, &size), FS_OK);
  EXPECT_EQ(size, 2u);
  fs_tunnel_space* space = nullptr;
  ASSERT_EQ(fs_tunnel_space_build(system, &space), FS_OK);
  size_t points = 0;
  EXPECT_EQ(fs_tunnel_space_point_count(space, &points), FS_OK);
  EXPECT_EQ(points, 2u);
  char* d = nullptr;
  ASSERT_EQ(fs_tunnel_space_distance(space, 0, 1, &d), FS_OK);
  EXPECT_EQ(take(d), "2");
  EXPECT_EQ(fs_tunnel_space_distance(space, 0, 5, &d), FS_ERR_INVALID);

  fs_prolif_space* image = nullptr;
  ASSERT_EQ(fs_functor_f(space, &image), FS_OK);
  fs_tunnel_space* back = nullptr;
  ASSERT_EQ(fs_functor_g(image, &back), FS_OK);
  char* a = nullptr;
  char* b = nullptr;
  ASSERT_EQ(fs_tunnel_space_to_json(space, &a), FS_OK);
  ASSERT_EQ(fs_tunnel_space_to_json(back, &b), FS_OK);
  EXPECT_EQ(take(a), take(b));

  int ok = 0;
  char* diff = nullptr;
  EXPECT_EQ(fs_tunnel_round_trip(space, &ok, &diff), FS_OK);
  EXPECT_EQ(ok, 1);
  EXPECT_EQ(take(diff), "[]");
  EXPECT_EQ(fs_prolif_round_trip(image, &ok, nullptr), FS_OK);
  EXPECT_EQ(ok, 1);

  char* json = nullptr;
  ASSERT_EQ(fs_tunnel_space_to_json(space, &json), FS_OK);
  fs_tunnel_space* reloaded = nullptr;
  EXPECT_EQ(fs_tunnel_space_parse(json, &reloaded), FS_OK);
  fs_free_string(json);

  fs_tunnel_space_free(reloaded);
  fs_tunnel_space_free(back);
  fs_prolif_space_free(image);
  fs_tunnel_space_free(space);
  fs_tunnel_system_free(system);
}

TEST(CApi, ProlifHandles) {
  fs_prolif_base* base = nullptr;
  ASSERT_EQ(fs_prolif_base_parse(kChainBase, &base), FS_OK);
  fs_prolif_space* space = nullptr;
  ASSERT_EQ(fs_prolif_space_build(base, &space), FS_OK);
  size_t foci = 0;
  EXPECT_EQ(fs_prolif_space_point_count(space, &foci), FS_OK);
  char* json = nullptr;
  ASSERT_EQ(fs_prolif_base_to_json(base, &json), FS_OK);
  EXPECT_EQ(Json::parse(take(json))["distinctions"].size(), 3u);
  fs_prolif_space_free(space);
  fs_prolif_base_free(base);
}

TEST(CApi, ErrorsAndNullArguments) {
  fs_tunnel_system* system = nullptr;
  EXPECT_EQ(fs_tunnel_system_parse("{", &system), FS_ERR_PARSE);
  EXPECT_NE(std::string(fs_last_error()).find("line 1"), std::string::npos) << fs_last_error();
  EXPECT_EQ(fs_tunnel_system_parse(R"({"tunnels": []})", &system), FS_ERR_INVALID);
  EXPECT_EQ(system, nullptr);
  EXPECT_EQ(fs_tunnel_system_parse(nullptr, &system), FS_ERR_NULL_ARGUMENT);
  EXPECT_EQ(fs_tunnel_system_parse(kTwoTunnels, nullptr), FS_ERR_NULL_ARGUMENT);
  char* report = nullptr;
  EXPECT_EQ(fs_build(kTwoTunnels, nullptr, nullptr), FS_ERR_NULL_ARGUMENT);
  EXPECT_EQ(fs_build("[1]", nullptr, &report), FS_ERR_PARSE);
  fs_tunnel_system_free(nullptr);
  fs_free_string(nullptr);
}

TEST(CApi, Reports) {
  char* report = nullptr;
  ASSERT_EQ(fs_build(kTwoTunnels, nullptr, &report), FS_OK);
  auto built = Json::parse(take(report));
  EXPECT_EQ(built["metric"], Json::parse(R"([["0", "2"], ["2", "0"]])"));

  ASSERT_EQ(fs_check_equivalence(kChainBase, nullptr, &report), FS_OK);
  auto eq = Json::parse(take(report));
  for (const auto& c : eq["checks"]) EXPECT_NE(c["status"], "FAIL") << c.dump();

  fs_options options{7, 0, 1};
  ASSERT_EQ(fs_check_equivalence_random(10, &options, &report), FS_OK);
  auto random = Json::parse(take(report));
  EXPECT_EQ(random["seed"], 7);
  EXPECT_TRUE(random.contains("timings_ms"));

  ASSERT_EQ(fs_spectrum(kChainBase, nullptr, &report), FS_OK);
  EXPECT_EQ(Json::parse(take(report))["max_deviation"], 0.0);

  ASSERT_EQ(fs_generate_interval(2, "hull", &report), FS_OK);
  EXPECT_EQ(Json::parse(take(report))["tunnels"].size(), 6u);
  EXPECT_EQ(fs_generate_interval(2, "bogus", &report), FS_ERR_INVALID);
}

TEST(CApi, ReportsAreDeterministic) {
  fs_options options{3, 0, 0};
  char* a = nullptr;
  char* b = nullptr;
  ASSERT_EQ(fs_check_morphism_random(20, &options, &a), FS_OK);
  ASSERT_EQ(fs_check_morphism_random(20, &options, &b), FS_OK);
  EXPECT_EQ(take(a), take(b));
}

int main(int argc, char **argv) {
  ::testing::InitGoogleTest(&argc, argv);
  return RUN_ALL_TESTS();
}
