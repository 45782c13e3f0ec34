#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stratifold/stratifold.h>

#include <string>

namespace {

const std::string kX23 = R"({"white":[{"id":"w0","genus":0},{"id":"w1","genus":0}],"black":[{"id":"b1"}],
  "edges":[{"white":"w0","black":"b1","label":2},{"white":"w1","black":"b1","label":3}]})";

const std::string kBranchStar = R"({"white":[{"id":"u1","genus":0},{"id":"u2","genus":0},{"id":"u3","genus":0},
  {"id":"t1","genus":0},{"id":"t2","genus":0},{"id":"t3","genus":0}],
  "black":[{"id":"b0"},{"id":"c1"},{"id":"c2"},{"id":"c3"}],
  "edges":[{"white":"u1","black":"b0","label":1},{"white":"u2","black":"b0","label":1},
  {"white":"u3","black":"b0","label":1},{"white":"u1","black":"c1","label":1},{"white":"t1","black":"c1","label":2},
  {"white":"u2","black":"c2","label":1},{"white":"t2","black":"c2","label":2},{"white":"u3","black":"c3","label":1},
  {"white":"t3","black":"c3","label":2}]})";

sfd_graph* parse(const std::string& text) {
    sfd_graph* g = nullptr;
    REQUIRE(sfd_graph_parse(text.data(), text.size(), &g) == SFD_OK);
    return g;
}

std::string take(char* s) {
    std::string out(s);
    sfd_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("version") { CHECK(std::string(sfd_version()) == "1.0.0"); }

TEST_CASE("parse errors set status and message") {
    sfd_graph* g = nullptr;
    std::string bad = "{";
    CHECK(sfd_graph_parse(bad.data(), bad.size(), &g) == SFD_ERR_PARSE);
    CHECK(g == nullptr);
    CHECK(std::string(sfd_last_error()).find("byte") != std::string::npos);
    CHECK(sfd_graph_parse(nullptr, 0, &g) == SFD_ERR_ARGUMENT);
    CHECK(sfd_graph_parse(kX23.data(), kX23.size(), nullptr) == SFD_ERR_ARGUMENT);
}

TEST_CASE("graph accessors and serialization") {
    auto* g = parse(kBranchStar);
    CHECK(sfd_graph_white_count(g) == 6);
    CHECK(sfd_graph_black_count(g) == 4);
    CHECK(sfd_graph_edge_count(g) == 9);

    char* text = nullptr;
    REQUIRE(sfd_graph_serialize(g, &text) == SFD_OK);
    auto serial = take(text);
    auto* again = parse(serial);
    REQUIRE(sfd_graph_serialize(again, &text) == SFD_OK);
    CHECK(take(text) == serial);

    REQUIRE(sfd_graph_export_dot(g, &text) == SFD_OK);
    CHECK(take(text).rfind("graph stratifold {", 0) == 0);

    sfd_shape shape{};
    REQUIRE(sfd_graph_shape(g, &shape) == SFD_OK);
    CHECK(shape.is_tree == 1);
    CHECK(shape.is_linear == 0);
    CHECK(shape.is_trivalent == 1);

    int ok = 0;
    REQUIRE(sfd_graph_validate(g, SFD_FORMAT_JSON, &ok, &text) == SFD_OK);
    CHECK(ok == 1);
    take(text);
    sfd_graph_free(again);
    sfd_graph_free(g);
}

TEST_CASE("validation failures are reported, not raised") {
    std::string doc = R"({"white":[{"id":"w0","genus":0},{"id":"w1","genus":0}],"black":[{"id":"b1"}],
      "edges":[{"white":"w0","black":"b1","label":1},{"white":"w1","black":"b1","label":1}]})";
    auto* g = parse(doc);
    int ok = 1;
    char* report = nullptr;
    REQUIRE(sfd_graph_validate(g, SFD_FORMAT_TEXT, &ok, &report) == SFD_OK);
    CHECK(ok == 0);
    CHECK(take(report).find("black_label_sum") != std::string::npos);
    sfd_verdict* v = nullptr;
    CHECK(sfd_decide(g, &v) == SFD_ERR_INVALID_GRAPH);
    sfd_graph_free(g);
}

TEST_CASE("homology through the C API") {
    auto* g = parse(kBranchStar);
    sfd_group* group = nullptr;
    REQUIRE(sfd_h1(g, &group) == SFD_OK);
    CHECK(sfd_group_is_trivial(group) == 0);
    CHECK(sfd_group_free_rank(group) == 0);
    REQUIRE(sfd_group_torsion_count(group) == 1);
    char* s = nullptr;
    REQUIRE(sfd_group_torsion_at(group, 0, &s) == SFD_OK);
    CHECK(take(s) == "2");
    CHECK(sfd_group_torsion_at(group, 5, &s) == SFD_ERR_ARGUMENT);
    REQUIRE(sfd_group_render(group, SFD_FORMAT_TEXT, &s) == SFD_OK);
    CHECK(take(s) == "Z2");
    sfd_group_free(group);

    REQUIRE(sfd_h1_mod(g, 6, &group) == SFD_OK);
    REQUIRE(sfd_group_render(group, SFD_FORMAT_JSON, &s) == SFD_OK);
    CHECK(take(s).find("\"modulus\": 6") != std::string::npos);
    sfd_group_free(group);
    CHECK(sfd_h1_mod(g, 1, &group) == SFD_ERR_ARGUMENT);

    std::int64_t value = -1;
    REQUIRE(sfd_graph_betti1(g, &value) == SFD_OK);
    CHECK(value == 0);
    REQUIRE(sfd_euler_char_m(g, &value) == SFD_OK);
    CHECK(value == 3);
    CHECK(sfd_sphere_count(g, &value) == SFD_ERR_PRECONDITION);
    sfd_graph_free(g);
}

TEST_CASE("decisions through the C API") {
    auto* x23 = parse(kX23);
    sfd_verdict* v = nullptr;
    REQUIRE(sfd_decide(x23, &v) == SFD_OK);
    CHECK(sfd_verdict_get_status(v) == SFD_SIMPLY_CONNECTED);
    char* s = nullptr;
    REQUIRE(sfd_verdict_render(v, SFD_FORMAT_TEXT, 0, &s) == SFD_OK);
    CHECK(take(s) == "SimplyConnected (Theorem: linear gcd criterion)\n");
    sfd_verdict_free(v);
    std::int64_t spheres = 0;
    REQUIRE(sfd_sphere_count(x23, &spheres) == SFD_OK);
    CHECK(spheres == 1);
    CHECK(sfd_decide_trivalent(x23, &v) == SFD_ERR_PRECONDITION);

    auto* fig = parse(kBranchStar);
    REQUIRE(sfd_decide_trivalent(fig, &v) == SFD_OK);
    CHECK(sfd_verdict_get_status(v) == SFD_NOT_SIMPLY_CONNECTED);
    CHECK(sfd_verdict_has_trace(v) == 1);
    REQUIRE(sfd_verdict_render(v, SFD_FORMAT_JSON, 1, &s) == SFD_OK);
    CHECK(take(s).find("\"trace\"") != std::string::npos);
    sfd_verdict_free(v);
    REQUIRE(sfd_z6_verdict(fig, &v) == SFD_OK);
    CHECK(sfd_verdict_get_status(v) == SFD_NOT_SIMPLY_CONNECTED);
    sfd_verdict_free(v);
    sfd_graph_free(fig);
    sfd_graph_free(x23);
}

TEST_CASE("verdicts outlive their graph handle") {
    auto* g = parse(kX23);
    sfd_verdict* v = nullptr;
    REQUIRE(sfd_decide(g, &v) == SFD_OK);
    sfd_graph_free(g);
    char* s = nullptr;
    REQUIRE(sfd_verdict_render(v, SFD_FORMAT_TEXT, 1, &s) == SFD_OK);
    take(s);
    sfd_verdict_free(v);
}

TEST_CASE("generation and enumeration") {
    sfd_gen_params p;
    sfd_gen_params_default(&p);
    CHECK(p.max_black == 4);
    p.seed = 99;
    sfd_graph* a = nullptr;
    sfd_graph* b = nullptr;
    REQUIRE(sfd_generate(SFD_GEN_TRIVALENT, &p, &a) == SFD_OK);
    REQUIRE(sfd_generate(SFD_GEN_TRIVALENT, &p, &b) == SFD_OK);
    char* sa = nullptr;
    char* sb = nullptr;
    sfd_graph_serialize(a, &sa);
    sfd_graph_serialize(b, &sb);
    CHECK(take(sa) == take(sb));
    sfd_graph_free(a);
    sfd_graph_free(b);
    CHECK(sfd_generate(static_cast<sfd_gen_kind>(9), &p, &a) == SFD_ERR_ARGUMENT);

    sfd_enumeration* e = nullptr;
    REQUIRE(sfd_enumerate_trivalent(1, &e) == SFD_OK);
    CHECK(sfd_enumeration_size(e) == 3);
    CHECK(sfd_enumeration_at(e, 0) != nullptr);
    CHECK(sfd_enumeration_at(e, 3) == nullptr);
    sfd_enumeration_free(e);
    CHECK(sfd_enumerate_trivalent(9, &e) == SFD_ERR_ARGUMENT);
}

TEST_CASE("null handles are safe") {
    CHECK(sfd_graph_white_count(nullptr) == 0);
    CHECK(sfd_verdict_get_status(nullptr) == SFD_UNKNOWN);
    sfd_graph_free(nullptr);
    sfd_verdict_free(nullptr);
    sfd_group_free(nullptr);
    sfd_enumeration_free(nullptr);
    sfd_verdict* v = nullptr;
    CHECK(sfd_decide(nullptr, &v) == SFD_ERR_ARGUMENT);
}
