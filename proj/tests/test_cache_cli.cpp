#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "orbitham/cache.hpp"
#include "orbitham/json_io.hpp"

using namespace orbitham;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("orbitham-test-" + std::to_string(std::rand()) + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

std::string run_cli(const std::string& args, int* exit_code = nullptr) {
  std::string cmd = std::string(ORBITHAM_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  if (exit_code) *exit_code = WEXITSTATUS(status);
  return out;
}

}  // namespace

TEST_CASE("cache round trip and idempotent rewrites") {
  TempDir tmp;
  RootSystem rs = RootSystem::build("A2");
  CacheStore cache(tmp.path);
  MExpansion d;
  d.terms.emplace(Weight{2, 0}, BigInt(1));
  d.terms.emplace(Weight{0, 1}, BigInt(2));
  cache.store_decomposition(rs, Weight{1, 0}, 1, d);
  auto got = cache.load_decomposition(rs, Weight{1, 0}, 1);
  REQUIRE(got.has_value());
  CHECK(*got == d);
  // identical rewrite is fine
  CHECK_NOTHROW(cache.store_decomposition(rs, Weight{1, 0}, 1, d));
  // conflicting rewrite is a hard error
  MExpansion bad = d;
  bad.terms[Weight{0, 1}] = 3;
  CHECK_THROWS_AS(cache.store_decomposition(rs, Weight{1, 0}, 1, bad), Error);
  auto stats = cache.stats();
  CHECK(stats.systems == 1);
  CHECK(stats.records == 1);
}

TEST_CASE("cache survives reopening and validates its header") {
  TempDir tmp;
  RootSystem rs = RootSystem::build("A2");
  {
    CacheStore cache(tmp.path);
    TauPoly p;
    p.add_term(Weight{1, 0}, Rational(7));
    cache.store_m2tau(rs, Weight{1, 0}, p);
  }
  {
    CacheStore cache(tmp.path);
    auto got = cache.load_m2tau(rs, Weight{1, 0});
    REQUIRE(got.has_value());
    CHECK(got->terms.at(Weight{1, 0}) == 7);
  }
  // corrupt the header: loading must fail loudly, never reuse silently
  {
    std::ofstream out(tmp.path / "A2.jsonl", std::ios::trunc);
    out << "{\"format\":999,\"system\":\"A2\",\"normalization\":\"other\"}\n";
  }
  CacheStore cache(tmp.path);
  try {
    cache.load_m2tau(rs, Weight{1, 0});
    FAIL("expected header mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::cache_mismatch);
  }
}

TEST_CASE("warm and cold caches give identical results") {
  TempDir tmp;
  AlgebraOptions opts;
  OrbitAlgebra cold(RootSystem::build("E8"), opts);
  MExpansion fresh = cold.decompose_product(Weight{1, 0, 0, 0, 0, 0, 0, 0}, 2);
  TauPoly fresh_poly = cold.m_to_tau(Weight{1, 1, 0, 0, 0, 0, 0, 0});

  CacheStore cache(tmp.path);
  {
    OrbitAlgebra writer(RootSystem::build("E8"), opts);
    writer.attach_cache(&cache);
    CHECK(writer.decompose_product(Weight{1, 0, 0, 0, 0, 0, 0, 0}, 2) == fresh);
    CHECK(writer.m_to_tau(Weight{1, 1, 0, 0, 0, 0, 0, 0}) == fresh_poly);
  }
  {
    OrbitAlgebra reader(RootSystem::build("E8"), opts);
    reader.attach_cache(&cache);
    CHECK(reader.decompose_product(Weight{1, 0, 0, 0, 0, 0, 0, 0}, 2) == fresh);
    CHECK(reader.m_to_tau(Weight{1, 1, 0, 0, 0, 0, 0, 0}) == fresh_poly);
  }
  CHECK(cache.stats().records >= 2);
  cache.clear();
  CHECK(cache.stats().records == 0);
}

TEST_CASE("cli: orbit sizes and json output") {
  int code = 0;
  std::string out = run_cli("orbit E8 w8 --json", &code);
  CHECK(code == 0);
  auto j = nlohmann::json::parse(out);
  CHECK(j.at("size") == "483840");
  out = run_cli("orbit E8 [1,0,0,0,0,0,0,0]", &code);
  CHECK(code == 0);
  CHECK(out.find("240") != std::string::npos);
}

TEST_CASE("cli: decompose matches the library and is cache-stable") {
  TempDir tmp;
  std::string args = "decompose E8 w1 2 --json --cache-dir " + tmp.path.string();
  int code = 0;
  std::string cold = run_cli(args, &code);
  CHECK(code == 0);
  std::string warm = run_cli(args, &code);
  CHECK(code == 0);
  CHECK(cold == warm);  // byte-identical with a warm cache

  OrbitAlgebra alg(RootSystem::build("E8"));
  MExpansion d = alg.decompose_product(Weight{1, 0, 0, 0, 0, 0, 0, 0}, 2);
  CHECK(nlohmann::json::parse(cold) == mexpansion_to_json(d));
}

TEST_CASE("cli: machine-readable errors and nonzero exit") {
  int code = 0;
  std::string out = run_cli("orbit E8 w9 --json", &code);
  CHECK(code == 2);
  auto j = nlohmann::json::parse(out);
  CHECK(j.contains("error"));
  CHECK(j.at("error").at("code") == "index_out_of_range");

  out = run_cli("roots H4 --json", &code);
  CHECK(code == 2);
  j = nlohmann::json::parse(out);
  CHECK(j.at("error").at("code") == "unknown_system");
}

TEST_CASE("cli: spectrum table with rational coupling") {
  int code = 0;
  std::string out = run_cli("spectrum E8 --ht-bound 46 --nu 0 --json", &code);
  CHECK(code == 0);
  auto j = nlohmann::json::parse(out);
  REQUIRE(j.size() == 3);  // 0, w1, w2
  CHECK(j[1].at("eps_at_nu") == "-2");  // pure Laplacian at nu = 0
  CHECK(j[2].at("eps_at_nu") == "-4");
}

TEST_CASE("cli: eigen subcommand") {
  int code = 0;
  std::string out = run_cli("eigen E8 w1 --json", &code);
  CHECK(code == 0);
  auto j = nlohmann::json::parse(out);
  CHECK(j.at("label") == nlohmann::json::array({1, 0, 0, 0, 0, 0, 0, 0}));
  // eigenvalue -2 - 58 nu
  CHECK(j.at("eigenvalue").at("num") == nlohmann::json::array({"-2", "-58"}));
}

TEST_CASE("cli: verify on small systems") {
  int code = 0;
  std::string out = run_cli("verify A2 --numeric --samples 10 --tol 1e-9", &code);
  CHECK(code == 0);
  CHECK(out.find("[PASS]") != std::string::npos);
  out = run_cli("verify E6", &code);
  CHECK(code == 0);
}
