// Exercises the shared library through its C header only.

#include <gtest/gtest.h>

#include <string>

#include "mustafin/mustafin.h"

namespace {

struct Owned {
  char* s = nullptr;
  ~Owned() { mf_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct Config {
  mf_config* c = nullptr;
  ~Config() { mf_config_free(c); }
};

const char* kChain = R"({"d":3,"points":[[0,-1,-2],[0,-2,-4],[0,-3,-6]],"label":"chain"})";

}  // namespace

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STREQ(mf_version(), "1.0.0");
  EXPECT_STREQ(mf_status_name(MF_OK), "ok");
  EXPECT_STREQ(mf_status_name(MF_ERR_PARSE), "parse_error");
  EXPECT_STREQ(mf_status_name(MF_ERR_DOMAIN), "domain_error");
  EXPECT_STREQ(mf_status_name(MF_ERR_INVARIANT), "invariant_violation");
}

TEST(CApi, ParseAndQuery) {
  Config cfg;
  ASSERT_EQ(mf_config_parse_json(kChain, &cfg.c), MF_OK);
  EXPECT_EQ(mf_config_dim(cfg.c), 3u);
  EXPECT_EQ(mf_config_size(cfg.c), 3u);
  int64_t p[3];
  ASSERT_EQ(mf_config_point(cfg.c, 1, p), MF_OK);
  EXPECT_EQ(p[2], -4);
  EXPECT_EQ(mf_config_point(cfg.c, 3, p), MF_ERR_USAGE);

  int inside = -1;
  const int64_t x[3] = {5, 4, 1};  // normalizes to (0,-1,-4)
  ASSERT_EQ(mf_contains(cfg.c, x, &inside), MF_OK);
  EXPECT_EQ(inside, 1);
  int gp = -1;
  ASSERT_EQ(mf_general_position(cfg.c, &gp), MF_OK);
  EXPECT_EQ(gp, 1);
  size_t total = 0, primary = 0, secondary = 0;
  ASSERT_EQ(mf_component_counts(cfg.c, &total, &primary, &secondary), MF_OK);
  EXPECT_EQ(total, 6u);
  EXPECT_EQ(primary, 3u);
  EXPECT_EQ(secondary, 3u);
}

TEST(CApi, CreateFromArray) {
  Config cfg;
  const int64_t coords[] = {0, 0, 0, 0, 1, 1};
  ASSERT_EQ(mf_config_create(3, 2, coords, &cfg.c), MF_OK);
  Owned h;
  const int64_t v[] = {0, 1, 1};
  const size_t u[] = {1, 1};
  ASSERT_EQ(mf_hilbert(cfg.c, v, u, &h.s), MF_OK);
  EXPECT_EQ(h.str(), "5");
  Owned h0;
  const size_t zero[] = {0, 0};
  ASSERT_EQ(mf_hilbert(cfg.c, v, zero, &h0.s), MF_OK);
  EXPECT_EQ(h0.str(), "1");
}

TEST(CApi, ErrorCodes) {
  Config cfg;
  EXPECT_EQ(mf_config_parse_json("{oops", &cfg.c), MF_ERR_PARSE);
  EXPECT_NE(std::string(mf_last_error()), "");
  EXPECT_EQ(mf_config_parse_json(R"({"d":3,"points":[[0,1]]})", &cfg.c), MF_ERR_DIMENSION);
  EXPECT_EQ(mf_config_parse_json(R"({"d":3,"points":[[0,1,2],[1,2,3]]})", &cfg.c),
            MF_ERR_CONTRACT);
  EXPECT_EQ(mf_config_parse_json(nullptr, &cfg.c), MF_ERR_USAGE);
  EXPECT_EQ(cfg.c, nullptr);

  ASSERT_EQ(mf_config_parse_json(kChain, &cfg.c), MF_OK);
  EXPECT_STREQ(mf_last_error(), "");
  Owned out;
  const int64_t outside[] = {0, 0, 0};
  const size_t u[] = {0, 0, 0};
  EXPECT_EQ(mf_hilbert(cfg.c, outside, u, &out.s), MF_ERR_DOMAIN);
  EXPECT_EQ(mf_report_hull(cfg.c, MF_FORMAT_DOT, &out.s), MF_ERR_USAGE);
  EXPECT_EQ(out.s, nullptr);

  Config bad;
  EXPECT_EQ(mf_config_local_model(1, &bad.c), MF_ERR_CONTRACT);
}

TEST(CApi, Reports) {
  Config cfg;
  ASSERT_EQ(mf_config_parse_json(kChain, &cfg.c), MF_OK);
  Owned cls, tbl, dot, gp, doc, hull;
  ASSERT_EQ(mf_report_classify(cfg.c, MF_FORMAT_JSON, &cls.s), MF_OK);
  EXPECT_NE(cls.str().find("\"label\": \"chain\""), std::string::npos);
  EXPECT_NE(cls.str().find("\"monomial_type\": true"), std::string::npos);
  ASSERT_EQ(mf_report_classify(cfg.c, MF_FORMAT_TABLE, &tbl.s), MF_OK);
  EXPECT_NE(tbl.str().find("components: 6"), std::string::npos);
  ASSERT_EQ(mf_report_graph(cfg.c, MF_FORMAT_DOT, &dot.s), MF_OK);
  EXPECT_EQ(dot.str().rfind("graph linked {", 0), 0u);
  ASSERT_EQ(mf_report_gp(cfg.c, MF_FORMAT_JSON, &gp.s), MF_OK);
  EXPECT_NE(gp.str().find("\"general_position\": true"), std::string::npos);
  ASSERT_EQ(mf_report_config(cfg.c, MF_FORMAT_JSON, &doc.s), MF_OK);
  ASSERT_EQ(mf_report_hull(cfg.c, MF_FORMAT_JSON, &hull.s), MF_OK);
  EXPECT_NE(hull.str().find("\"size\": 6"), std::string::npos);
}

TEST(CApi, Verify) {
  Config cfg;
  ASSERT_EQ(mf_config_local_model(3, &cfg.c), MF_OK);
  Owned out;
  int passed = 0;
  ASSERT_EQ(mf_report_verify(cfg.c, 5, MF_FORMAT_TABLE, &out.s, &passed), MF_OK);
  EXPECT_EQ(passed, 1);
  EXPECT_NE(out.str().find("all checks passed"), std::string::npos);
}
