#include <cstdint>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "rigidity/rigidity.h"

using nlohmann::json;

namespace {

struct Session {
    rig_session* s = nullptr;
    Session() { REQUIRE(rig_session_create(&s) == RIG_OK); }
    ~Session() { rig_session_destroy(s); }
};

struct Result {
    rig_result* r = nullptr;
    ~Result() { rig_result_destroy(r); }
    json doc() const { return json::parse(rig_result_json(r)); }
};

}  // namespace

TEST_CASE("lifecycle and null handling") {
    CHECK(std::string(rig_version()).size() > 0);
    CHECK(rig_session_create(nullptr) == RIG_E_ARGUMENT);
    rig_session_destroy(nullptr);
    rig_result_destroy(nullptr);
    CHECK(std::string(rig_result_json(nullptr)).empty());
    Session s;
    CHECK(rig_root_system(s.s, "A2", nullptr) == RIG_E_ARGUMENT);
    Result r;
    CHECK(rig_root_system(nullptr, "A2", &r.r) == RIG_E_ARGUMENT);
    CHECK(rig_root_system(s.s, nullptr, &r.r) == RIG_E_ARGUMENT);
    CHECK(r.r == nullptr);
    CHECK(rig_session_set_weight_cap(s.s, 0) == RIG_E_ARGUMENT);
}

TEST_CASE("errors map to status codes with a message") {
    Session s;
    Result r;
    CHECK(rig_root_system(s.s, "Q7", &r.r) == RIG_E_DOMAIN);
    CHECK(std::string(rig_last_error()).find("Q7") != std::string::npos);
    const int64_t bad_len[] = {1};
    CHECK(rig_certify(s.s, "A2", bad_len, 1, 0, &r.r) == RIG_E_DOMAIN);
    const int64_t lam[] = {1, 1};
    CHECK(rig_certify(s.s, "A2", lam, 2, -2, &r.r) == RIG_E_DOMAIN);
    const int64_t marked[] = {4};
    CHECK(rig_grading(s.s, "A2", nullptr, 0, marked, 1, &r.r) == RIG_E_DOMAIN);
    CHECK(rig_oracle(s.s, "A2", nullptr, 0, "frobnicate", 2, &r.r) == RIG_E_DOMAIN);
    CHECK(std::string(rig_status_name(RIG_E_RESOURCE)) == "resource");
    rig_session_set_weight_cap(s.s, 5);
    CHECK(rig_decompose(s.s, "A2", lam, 2, &r.r) == RIG_E_RESOURCE);
}

TEST_CASE("certify") {
    Session s;
    const int64_t lam[] = {1, 1};
    Result rigid, not_rigid;
    REQUIRE(rig_certify(s.s, "A2", lam, 2, 0, &rigid.r) == RIG_OK);
    CHECK(rig_result_positive(rigid.r) == 1);
    CHECK(rigid.doc()["rigid"] == true);
    REQUIRE(rig_certify(s.s, "A2", lam, 2, -1, &not_rigid.r) == RIG_OK);
    CHECK(rig_result_positive(not_rigid.r) == 0);
    const auto d = not_rigid.doc();
    CHECK(d["obstructions"].size() == 2);
    CHECK(d["obstructions"][0]["degree"] == "1");
}

TEST_CASE("grading with and without a weight") {
    Session s;
    const int64_t lam[] = {1, 0, 0, 0, 0, 0, 0, 0};
    Result a, b;
    REQUIRE(rig_grading(s.s, "E8", lam, 8, nullptr, 0, &a.r) == RIG_OK);
    CHECK(a.doc()["osculating_length"] == 4);
    CHECK(a.doc()["f"] == 8);
    const int64_t marked[] = {2};
    REQUIRE(rig_grading(s.s, "A3", nullptr, 0, marked, 1, &b.r) == RIG_OK);
    CHECK(b.doc()["k"] == 1);
    CHECK(b.doc()["f"].is_null());
}

TEST_CASE("oracle and paper tables") {
    Session s;
    Result o, p;
    REQUIRE(rig_oracle(s.s, "A1", nullptr, 0, "sym^2(defining)", 3, &o.r) == RIG_OK);
    CHECK(rig_result_positive(o.r) == 1);
    CHECK(o.doc()["agrees"] == true);
    REQUIRE(rig_paper_tables(s.s, &p.r) == RIG_OK);
    CHECK(p.doc()["all_match"] == false);
    CHECK(rig_result_positive(p.r) == 0);
}

TEST_CASE("cache through a session") {
    const auto dir = std::filesystem::temp_directory_path() / "rigidity-capi-cache";
    std::filesystem::remove_all(dir);
    Session s;
    REQUIRE(rig_session_set_cache_dir(s.s, dir.c_str()) == RIG_OK);
    const int64_t lam[] = {2, 1};
    Result a, b;
    REQUIRE(rig_decompose(s.s, "A2", lam, 2, &a.r) == RIG_OK);
    REQUIRE(rig_decompose(s.s, "A2", lam, 2, &b.r) == RIG_OK);
    CHECK(rig_result_cache_hit(a.r) == 0);
    CHECK(rig_result_cache_hit(b.r) == 1);
    CHECK(std::string(rig_result_json(a.r)) == rig_result_json(b.r));
    CHECK(rig_result_warning_count(b.r) == 0);
    CHECK(rig_result_warning(b.r, 0) == nullptr);
    rig_session_set_cache_dir(s.s, nullptr);
    Result c;
    REQUIRE(rig_decompose(s.s, "A2", lam, 2, &c.r) == RIG_OK);
    CHECK(rig_result_cache_hit(c.r) == 0);
    std::filesystem::remove_all(dir);
}
