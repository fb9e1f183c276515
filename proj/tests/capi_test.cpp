#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "gpdrift/gpdrift.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    gpd_string_free(s);
    return out;
}

}  // namespace

TEST(CApi, GraphParseAndStats) {
    const std::string text = R"({"vertices":["a","b","c","d","e"],"edges":[[0,1],[1,2],[2,3],[3,4],[4,0],[1,0]]})";
    gpd_graph* g = nullptr;
    ASSERT_EQ(gpd_graph_parse(text.data(), text.size(), &g), GPD_OK);
    EXPECT_EQ(gpd_graph_vertex_count(g), 5);
    EXPECT_EQ(gpd_graph_duplicate_edges(g), 1u);
    gpd_graph_stats s;
    ASSERT_EQ(gpd_graph_compute_stats(g, &s), GPD_OK);
    EXPECT_EQ(s.D, 5);
    EXPECT_EQ(s.C, 2);
    EXPECT_EQ(s.B, 4);
    EXPECT_EQ(s.small_cliques, 0);
    gpd_graph_free(g);
    gpd_graph_free(nullptr);
}

TEST(CApi, ErrorCodesAndMessages) {
    gpd_graph* g = nullptr;
    const std::string loop = R"({"vertices":["a"],"edges":[[0,0]]})";
    EXPECT_EQ(gpd_graph_parse(loop.data(), loop.size(), &g), GPD_ERR_INVALID_ARGUMENT);
    EXPECT_NE(std::string(gpd_last_error()), "");
    const std::string junk = "{not json";
    EXPECT_EQ(gpd_graph_parse(junk.data(), junk.size(), &g), GPD_ERR_PARSE);
    EXPECT_EQ(gpd_graph_load("/nonexistent/graph.json", &g), GPD_ERR_IO);
    EXPECT_EQ(gpd_graph_cycle(2, &g), GPD_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(gpd_graph_cycle(5, nullptr), GPD_ERR_INVALID_ARGUMENT);
    gpd_kappa_result k;
    EXPECT_EQ(gpd_kappa(4, 2, 16, &k), GPD_ERR_SMALL_CLIQUES);
    std::int64_t num, den;
    EXPECT_EQ(gpd_mean_u(4, 2, 10, &num, &den), GPD_ERR_DOMAIN);
    ASSERT_EQ(gpd_graph_cycle(5, &g), GPD_OK);
    EXPECT_STREQ(gpd_last_error(), "");
    gpd_graph_free(g);
}

TEST(CApi, BoundValues) {
    std::int64_t num = 0, den = 0;
    ASSERT_EQ(gpd_mean_u(4, 2, 17, &num, &den), GPD_OK);
    EXPECT_EQ(num, 11);
    EXPECT_EQ(den, 119);
    ASSERT_EQ(gpd_mean_u(4, 2, 16, &num, &den), GPD_OK);
    EXPECT_EQ(num, 0);
    gpd_kappa_result k;
    ASSERT_EQ(gpd_kappa(4, 2, 100, &k), GPD_OK);
    EXPECT_NEAR(k.kappa, 0.3252, 1e-3);
    EXPECT_LT(k.mgf_at_t_star, 1.0);
    char* csv = nullptr;
    ASSERT_EQ(gpd_sweep_cycles_csv(17, 12000, 50, &csv), GPD_OK);
    std::string text = take(csv);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 51);
    EXPECT_EQ(gpd_sweep_cycles_csv(2, 10, 3, &csv), GPD_ERR_INVALID_ARGUMENT);
}

TEST(CApi, PilingRender) {
    const std::string text = R"({"vertices":["a","b","c"],"edges":[[0,1]]})";
    gpd_graph* g = nullptr;
    ASSERT_EQ(gpd_graph_parse(text.data(), text.size(), &g), GPD_OK);
    char* out = nullptr;
    ASSERT_EQ(gpd_piling_render(g, "z", "a c b", &out), GPD_OK);
    EXPECT_EQ(take(out), "a^1 0, 0 b^1, 0 c^1 0");
    EXPECT_EQ(gpd_piling_render(g, "zmod:1", "a", &out), GPD_ERR_INVALID_ARGUMENT);
    EXPECT_NE(gpd_piling_render(g, "z", "a q", &out), GPD_OK);
    gpd_graph_free(g);
}

TEST(CApi, BatchLifecycleIsDeterministic) {
    gpd_graph* g = nullptr;
    ASSERT_EQ(gpd_graph_cycle(50, &g), GPD_OK);
    gpd_batch* a = nullptr;
    gpd_batch* b = nullptr;
    ASSERT_EQ(gpd_batch_run(g, "z", "letters:", 40, 50, 7, 1, &a), GPD_OK);
    ASSERT_EQ(gpd_batch_run(g, "z", "letters:", 40, 50, 7, 3, &b), GPD_OK);
    char *ca = nullptr, *cb = nullptr;
    ASSERT_EQ(gpd_batch_trials_csv(a, &ca), GPD_OK);
    ASSERT_EQ(gpd_batch_trials_csv(b, &cb), GPD_OK);
    EXPECT_EQ(take(ca), take(cb));

    double mean = 0, se = 0;
    ASSERT_EQ(gpd_batch_drift(a, &mean, &se), GPD_OK);
    EXPECT_GT(mean, 1.0);
    EXPECT_GT(se, 0.0);

    char* checks = nullptr;
    int all_pass = -1;
    ASSERT_EQ(gpd_batch_checks_csv(a, 7, &checks, &all_pass), GPD_OK);
    std::string text = take(checks);
    EXPECT_EQ(all_pass, 1) << text;
    EXPECT_EQ(text.substr(0, text.find('\n')), "check,statistic,threshold,pass");
    EXPECT_NE(text.find("chain_inequality,0,0,true"), std::string::npos);
    EXPECT_NE(text.find("domination,0,0,skipped"), std::string::npos);  // too few trials
    gpd_batch_free(a);
    gpd_batch_free(b);

    gpd_batch* one = nullptr;
    ASSERT_EQ(gpd_batch_run(g, "z", "letters:", 10, 1, 7, 1, &one), GPD_OK);
    ASSERT_EQ(gpd_batch_drift(one, &mean, &se), GPD_OK);
    EXPECT_TRUE(std::isnan(se));
    gpd_batch_free(one);

    gpd_batch* bad = nullptr;
    EXPECT_EQ(gpd_batch_run(g, "z", "letters:", 10, 0, 7, 1, &bad), GPD_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(gpd_batch_run(g, "z", "bogus", 10, 5, 7, 1, &bad), GPD_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(gpd_batch_run(g, "zmod:x", "letters:", 10, 5, 7, 1, &bad), GPD_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(bad, nullptr);
    gpd_graph_free(g);
}

TEST(CApi, Version) { EXPECT_STREQ(gpd_version(), "1.0.0"); }
