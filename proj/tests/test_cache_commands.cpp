#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cusp/cache.hpp"
#include "cusp/commands.hpp"
#include "doctest.h"

namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("cusp_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("cache round trip and layout") {
  const auto dir = scratch_dir("cache");
  const auto nc = cusp::normalize(cusp::delta_series(300), 12);
  const auto path = cusp::cache_file_name(dir, 12, 300);
  CHECK(path.filename() == "cusp_w12_X300.bin");
  cusp::write_coeff_cache(path, nc);
  CHECK(fs::file_size(path) == cusp::kCacheHeaderSize + cusp::kCacheRecordSize * 300);
  const auto back = cusp::read_coeff_cache(path);
  CHECK(back == nc);
  CHECK(back.sign(2) == -1);
  CHECK(back.lambda(2) == doctest::Approx(-0.530330085889910643).epsilon(1e-12));

  std::ifstream raw(path, std::ios::binary);
  std::array<unsigned char, 17> h{};
  raw.read(reinterpret_cast<char*>(h.data()), 17);
  CHECK(std::string(h.begin(), h.begin() + 4) == "CUSP");
  CHECK(h[4] == 1);
  CHECK(h[5] == 0);
  CHECK(h[6] == 12);
  CHECK(h[7] == 0);
  CHECK(h[8] == 44);  // 300 = 0x012c
  CHECK(h[9] == 1);
  CHECK(h[16] == 0);
}

TEST_CASE("cache rejects corrupted files") {
  const auto nc = cusp::normalize(cusp::delta_series(20), 12);
  std::ostringstream out;
  cusp::write_coeff_cache(out, nc);
  const std::string good = out.str();

  auto read = [](std::string bytes) {
    std::istringstream in(bytes);
    return cusp::read_coeff_cache(in);
  };
  CHECK_NOTHROW(read(good));
  std::string bad = good;
  bad[0] = 'X';
  CHECK_THROWS_AS(read(bad), cusp::CacheFormatError);
  bad = good;
  bad[4] = 2;
  CHECK_THROWS_AS(read(bad), cusp::CacheFormatError);
  bad = good;
  bad[6] = 14;
  CHECK_THROWS_AS(read(bad), cusp::CacheFormatError);
  bad = good;
  bad[16] = 1;
  CHECK_THROWS_AS(read(bad), cusp::CacheFormatError);
  CHECK_THROWS_AS(read(good.substr(0, good.size() - 1)), cusp::CacheFormatError);
  CHECK_THROWS_AS(read(good + "x"), cusp::CacheFormatError);
  bad = good;
  bad[17] = 5;
  CHECK_THROWS_AS(read(bad), cusp::CacheFormatError);
}

TEST_CASE("commands are deterministic with and without a cache") {
  const auto dir = scratch_dir("cmd");
  cusp::CoefficientSource plain;
  cusp::CensusArgs ca;
  ca.limit = 2000;
  ca.modulus = 5;
  ca.residue = 2;
  ca.cumulative = true;
  std::ostringstream a, b, c;
  cusp::cmd_census(plain, ca, a);
  {
    cusp::CoefficientSource cached(dir);
    cusp::cmd_census(cached, ca, b);
  }
  CHECK(fs::exists(cusp::cache_file_name(dir, 12, 2000)));
  {
    cusp::CoefficientSource cached(dir);
    cusp::cmd_census(cached, ca, c);
  }
  CHECK(a.str() == b.str());
  CHECK(a.str() == c.str());
  const auto ls = lines(a.str());
  CHECK(ls.front() == "n_checkpoint,same,opposite,zero,first_same,first_opposite");
  CHECK(fields(ls.back())[0] == "2000");

  cusp::SumsArgs sa;
  sa.weight_g = 12;
  sa.checkpoints = {100, 300, 1000, 3000, 10000, 20000};
  sa.fit = true;
  std::ostringstream s1, s2;
  cusp::cmd_sums(plain, sa, s1);
  cusp::CoefficientSource cached(dir);
  cusp::cmd_sums(cached, sa, s2);
  CHECK(s1.str() == s2.str());
  const auto sl = lines(s1.str());
  REQUIRE(sl.size() == 7);
  CHECK(std::stod(fields(sl[1])[5]) > 0);
}

TEST_CASE("census command outputs") {
  cusp::CoefficientSource src;
  std::ostringstream out;
  cusp::cmd_census(src, cusp::CensusArgs{12, 16, 1, 1, 100, false}, out);
  const auto ls = lines(out.str());
  REQUIRE(ls.size() == 2);
  const auto f = fields(ls[1]);
  CHECK(f[0] == "100");
  CHECK(f[4] == "1");
  CHECK(f[5] == "2");

  std::ostringstream self;
  cusp::cmd_sparse(src, cusp::SparseArgs{12, 12, 3, 500, true}, self);
  for (std::size_t i = 1; const auto& l : lines(self.str())) {
    if (i++ == 1) continue;
    CHECK(fields(l)[2] == "0");
  }

  std::ostringstream sink;
  CHECK_THROWS_AS(cusp::cmd_sparse(src, cusp::SparseArgs{12, 16, 5, 100, false}, sink),
                  cusp::UsageError);
  CHECK_THROWS_AS(cusp::cmd_census(src, cusp::CensusArgs{12, 16, 6, 4, 100, false}, sink),
                  cusp::UsageError);
  CHECK_THROWS_AS(cusp::cmd_census(src, cusp::CensusArgs{14, 16, 1, 1, 100, false}, sink),
                  cusp::UsageError);
}

TEST_CASE("windows and rankin commands") {
  cusp::CoefficientSource src;
  cusp::WindowArgs wa;
  wa.x_grid = {1.0, 100.0, 1000.0};
  std::ostringstream out;
  cusp::cmd_windows(src, wa, out);
  const auto ls = lines(out.str());
  REQUIRE(ls.size() == 4);
  CHECK(ls[0] == "x,h,first,last,same,opposite,zero,both_signs,degenerate,product_sum,g_sum");
  CHECK(fields(ls[1])[8] == "0");

  cusp::RankinArgs ra;
  ra.truncations = {10, 100};
  std::ostringstream r;
  cusp::cmd_rankin(src, ra, r);
  const auto rl = lines(r.str());
  REQUIRE(rl.size() == 3);
  CHECK(fields(rl[1]).size() == 14);
  CHECK(fields(rl[1])[6] == "0");

  ra.s = {0.75, 0};
  std::ostringstream sink;
  CHECK_THROWS_AS(cusp::cmd_rankin(src, ra, sink), cusp::UsageError);
  ra.exploratory = true;
  std::ostringstream ex;
  cusp::cmd_rankin(src, ra, ex);
  CHECK(fields(lines(ex.str())[1]).size() == 14);
}

TEST_CASE("format_double") {
  CHECK(cusp::format_double(0.1) == "0.10000000000000001");
  CHECK(cusp::format_double(-2) == "-2");
}
