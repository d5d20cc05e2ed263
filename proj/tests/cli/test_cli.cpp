// Copyright 2026 the cayley-srg authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end checks of the command-line surface: exit codes, report schema,
// pipe composition, determinism of content hashes.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

int failures = 0;

#define CHECK_MSG(cond, msg)                                              \
  do {                                                                    \
    if (!(cond)) {                                                        \
      std::cerr << "[FAIL] " << __LINE__ << ": " << (msg) << std::endl;  \
      ++failures;                                                         \
    }                                                                     \
  } while (0)

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <path-to-cayley-srg>" << std::endl;
    return 2;
  }
  std::string tool = argv[1];
  std::string tmp = (std::filesystem::temp_directory_path() / "csrg-cli-test").string();
  std::filesystem::remove_all(tmp);
  std::filesystem::create_directories(tmp);
  setenv("CAYLEY_CACHE_DIR", (tmp + "/cache").c_str(), 1);

  {
    RunResult r = run(tool + " field --p 3 --f 6");
    CHECK_MSG(r.exit_code == 0, "field subcommand exits 0");
    auto j = nlohmann::json::parse(r.out, nullptr, false);
    CHECK_MSG(!j.is_discarded(), "field output is JSON");
    CHECK_MSG(j["schema"] == "cayley-srg-report/1", "schema version present");
    CHECK_MSG(j["field"]["q"] == 729, "field reports q = 729");
  }
  {
    // explicit primitive modulus x^2 + x + 2 over F_3; a reducible one is a usage error
    RunResult r = run(tool + " field --p 3 --f 2 --modulus 2,1,1");
    CHECK_MSG(r.exit_code == 0, "explicit modulus accepted");
    auto j = nlohmann::json::parse(r.out);
    CHECK_MSG(j["field"]["modulus"] == nlohmann::json({2, 1, 1}), "modulus echoed");
    RunResult bad = run(tool + " field --p 3 --f 2 --modulus 1,1,1");
    CHECK_MSG(bad.exit_code == 2, "reducible modulus is a usage error, got " + std::to_string(bad.exit_code));
  }
  {
    RunResult r = run(tool + " gauss --p 3 --f 2 --order 2 --index 1 --closed quadratic");
    CHECK_MSG(r.exit_code == 0, "gauss exits 0");
    auto j = nlohmann::json::parse(r.out);
    CHECK_MSG(std::abs(j["gauss"]["re"].get<double>() - 3.0) < 1e-9, "G_9(eta) = 3");
    CHECK_MSG(j["gauss"]["deviation"].get<double>() < 1e-9, "closed form agrees");
  }
  {
    RunResult r = run(tool + " subdiff --p 3 --f 5 --N 11");
    CHECK_MSG(r.exit_code == 0, "subdiff exits 0");
    auto j = nlohmann::json::parse(r.out);
    CHECK_MSG(j["subdifference"]["I"].size() == 5, "subdiff reports |I| = 5");
  }
  {
    // the pipe from the construction to the verifier
    RunResult r =
        run(tool + " construct --family elliptic-half --p 3 --m 3 --q 3 --partition conic | " + tool + " verify");
    CHECK_MSG(r.exit_code == 0, "construct | verify exits 0");
    auto j = nlohmann::json::parse(r.out);
    CHECK_MSG(j["result"]["pass"] == true, "verification passed");
    CHECK_MSG(j["result"]["v"] == 729, "v = 729");
    CHECK_MSG(j["result"]["k"] == 112, "k = 112");
    CHECK_MSG(j["result"]["lambda"] == 1, "lambda = 1");
    CHECK_MSG(j["result"]["mu"] == 20, "mu = 20");
  }
  {
    // the axes variant through the pipe: the hyperbolic-quadric graph
    RunResult r = run(tool + " construct --family hyperbolic --p 3 --m 3 --q 3 --N 13 --include-axes | " + tool +
                      " verify");
    CHECK_MSG(r.exit_code == 0, "axes variant verifies");
    auto j = nlohmann::json::parse(r.out);
    CHECK_MSG(j["result"]["k"] == 260 && j["result"]["lambda"] == 97 && j["result"]["mu"] == 90,
              "hyperbolic-quadric parameters");
  }
  {
    // determinism: identical content hashes across runs
    RunResult r1 = run(tool + " construct --family hyperbolic --p 3 --m 3 --q 3 --N 13");
    RunResult r2 = run(tool + " construct --family hyperbolic --p 3 --m 3 --q 3 --N 13");
    auto j1 = nlohmann::json::parse(r1.out), j2 = nlohmann::json::parse(r2.out);
    CHECK_MSG(j1["construction"]["connection_set"]["content_hash"] == j2["construction"]["connection_set"]["content_hash"],
              "content hash is deterministic");
  }
  {
    // verified mathematical failure: a corrupted descriptor exits 1
    RunResult c = run(tool + " construct --family elliptic --p 3 --m 3 --q 3 --N 13 --out " + tmp + "/e.json");
    CHECK_MSG(c.exit_code == 0, "construct --out exits 0");
    std::ifstream is(tmp + "/e.json");
    auto j = nlohmann::json::parse(is);
    auto& indices = j["construction"]["connection_set"]["indices"];
    std::uint64_t moved = (indices[0].get<std::uint64_t>() + 1) % 13;
    indices[0] = moved;  // likely collides or breaks two-valuedness
    std::ofstream os(tmp + "/bad.json");
    os << j.dump();
    os.close();
    RunResult r = run(tool + " verify --in " + tmp + "/bad.json");
    CHECK_MSG(r.exit_code == 1, "verify of a corrupted set exits 1, got " + std::to_string(r.exit_code));
  }
  {
    RunResult r = run(tool + " check-condition --p 3 --f 8 --q 3 --N 5 --side subdiff --partition canonical");
    CHECK_MSG(r.exit_code == 0, "check-condition passes at (3,5,3^8)");
    auto j = nlohmann::json::parse(r.out);
    CHECK_MSG(j["condition"]["pass"] == true, "condition pass flag set");
    RunResult rg =
        run(tool + " check-condition --p 3 --f 8 --q 3 --N 5 --side subdiff --partition canonical --global-sign");
    CHECK_MSG(rg.exit_code == 0, "the strict single-sign mode also passes here");
  }
  {
    // (I, {}) fails the condition at (3,3,13): -2 is not a power of 3 mod 13
    std::ofstream os(tmp + "/part.json");
    os << "{\"P1\":[0,1,3,9],\"P2\":[]}";
    os.close();
    RunResult r = run(tool + " check-condition --p 3 --f 3 --N 13 --side subdiff --partition file:" + tmp +
                      "/part.json");
    CHECK_MSG(r.exit_code == 1, "a failing condition exits 1, got " + std::to_string(r.exit_code));
  }
  {
    RunResult r = run(tool + " gauss --p 3 --f 8 --order 5 --index 2 --closed semiprimitive");
    CHECK_MSG(r.exit_code == 0, "semi-primitive gauss comparison exits 0");
    auto j = nlohmann::json::parse(r.out);
    CHECK_MSG(j["gauss"]["deviation"].get<double>() < 1e-6, "semi-primitive closed form agrees");
    CHECK_MSG(std::abs(j["gauss"]["closed_re"].get<double>() + 81.0) < 1e-9, "G = -81 at (3,5,3^8)");
  }
  {
    // a verify run from a stored descriptor reproduces the content hash
    run(tool + " construct --family hyperbolic-half --p 5 --m 3 --q 5 --N 31 --side complement --partition quadric"
               " --out " + tmp + "/h2.json");
    RunResult r = run(tool + " verify --in " + tmp + "/h2.json --threads 2");
    CHECK_MSG(r.exit_code == 0, "verify of the stored quadric halving exits 0");
    auto j = nlohmann::json::parse(r.out);
    CHECK_MSG(j["result"]["v"] == 15625 && j["result"]["k"] == 6200, "H2 parameters verified");
    CHECK_MSG(j["construction"]["content_hash_recomputed"] == j["construction"]["connection_set"]["content_hash"],
              "rebuilt set hashes identically to the descriptor");
  }
  {
    // canonical sporadic halving through the pipe: (3^5, 11) -> (59049, 13420, 2947, 3080)
    RunResult r = run(tool + " construct --family elliptic-half --p 3 --f 5 --N 11 --partition canonical | " + tool +
                      " verify");
    CHECK_MSG(r.exit_code == 0, "canonical elliptic halving verifies");
    auto j = nlohmann::json::parse(r.out);
    CHECK_MSG(j["result"]["v"] == 59049 && j["result"]["k"] == 13420 && j["result"]["lambda"] == 2947 &&
                  j["result"]["mu"] == 3080,
              "sporadic halving parameters");
  }
  {
    // the exhaustive sporadic search: 512 candidates, no hit on the subdifference side
    RunResult r = run(tool + " search --p 7 --f 9 --N 37 --side subdiff");
    CHECK_MSG(r.exit_code == 0, "search exits 0 at (7^9, 37)");
    auto j = nlohmann::json::parse(r.out);
    CHECK_MSG(j["search"]["candidates"] == 512, "512 candidates");
    CHECK_MSG(j["search"]["hits"].empty(), "no subdifference-side partition passes");
  }
  {
    RunResult r = run(tool + " search --p 3 --f 3 --N 13 --side subdiff");
    CHECK_MSG(r.exit_code == 0, "search exits 0");
    auto j = nlohmann::json::parse(r.out);
    CHECK_MSG(j["search"]["candidates"] == 16, "search over 2^4 ordered partitions");
    CHECK_MSG(!j["search"]["hits"].empty(), "the conic partition shows up");
  }
  {
    RunResult r = run(tool + " lemma-check --which hyperbolic-half --p 3 --f 4 --q 3 --N 5");
    CHECK_MSG(r.exit_code == 0, "lemma-check exits 0");
    auto j = nlohmann::json::parse(r.out);
    CHECK_MSG(j["lemma_check"]["max_deviation"].get<double>() <= 1e-6, "deviation within tolerance");
  }
  {
    RunResult r = run(tool + " catalog");
    CHECK_MSG(r.exit_code == 0, "catalog exits 0");
    auto j = nlohmann::json::parse(r.out);
    CHECK_MSG(j["catalog"].size() > 30, "catalog lists every family instance");
    bool found_big = false;
    for (const auto& row : j["catalog"])
      if (row["v"].is_string()) found_big = true;
    CHECK_MSG(found_big, "large sporadic parameters serialize as strings");
  }
  {
    RunResult r = run(tool + " export --family elliptic-half --p 3 --m 3 --q 3 --partition conic --format edgelist --out " +
                      tmp + "/g.el");
    CHECK_MSG(r.exit_code == 0, "export exits 0");
    std::ifstream is(tmp + "/g.el");
    std::string header;
    std::getline(is, header);
    CHECK_MSG(header.find("v=729") != std::string::npos, "edgelist header carries the vertex count");
    std::size_t lines = 0;
    std::string line;
    while (std::getline(is, line))
      if (!line.empty()) ++lines;
    CHECK_MSG(lines == 40824, "edgelist has 729*112/2 lines, got " + std::to_string(lines));
  }
  {
    RunResult r = run(tool + " frobnicate");
    CHECK_MSG(r.exit_code == 2, "unknown subcommand exits 2");
    RunResult r2 = run(tool + " verify --family elliptic --p 4 --m 3 --q 4 --N 13");
    CHECK_MSG(r2.exit_code == 2, "non-prime p is a usage error (exit 2), got " + std::to_string(r2.exit_code));
  }

  std::filesystem::remove_all(tmp);
  if (failures) {
    std::cerr << failures << " CLI check(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all CLI checks passed" << std::endl;
  return 0;
}
