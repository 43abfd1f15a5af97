#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with args (already shell-quoted); stderr folded into out.
Run cli(std::string const& args) {
  std::string const cmd = std::string("'") + DELTARING_CLI + "' " + args + " 2>&1";
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (p == nullptr) {
    return r;
  }
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) {
    r.out.append(buf.data(), n);
  }
  int const status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_dir() {
  auto const d = std::filesystem::temp_directory_path() / "deltaring_cli_test";
  std::filesystem::create_directories(d);
  return d;
}

}  // namespace

TEST(Cli, ClassifyT2) {
  auto const r = cli("classify 'T(2, Z2)'");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find(R"("delta_quasipolar": {
      "holds": true)"),
            std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find(R"("abelian": {
      "holds": false)"),
            std::string::npos);
}

TEST(Cli, SpectralAndDescribe) {
  auto const r = cli("spectral 'T(2, Z2)' --element 6");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find(R"("label": "[[1,1],[0,0]]")"), std::string::npos);
  auto const d = cli("--describe 'T(2, Z2)' --format md");
  ASSERT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("| 6 | `[[1,1],[0,0]]` |"), std::string::npos) << d.out;
}

TEST(Cli, DeltaReportsCoincidence) {
  auto const r = cli("delta Z4 --format md");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("coincide: yes"), std::string::npos) << r.out;
}

TEST(Cli, VerifyDefaultCorpusExitsZero) {
  auto const r = cli("verify --format md");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(" 0 fail"), std::string::npos);
}

TEST(Cli, VerifyCheckFilterAndManifest) {
  auto const m = temp_dir() / "small.txt";
  std::ofstream(m) << "# two rings\nZ2\nZ3\n";
  auto const r = cli("verify --manifest '" + m.string() + "' --check C15");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find(R"("pass": 1)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find(R"("na": 1)"), std::string::npos);
}

TEST(Cli, CorpusPrintsManifest) {
  auto const r = cli("corpus");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("T(2, Z2)\n"), std::string::npos);
}

TEST(Cli, ErrorExitCodes) {
  auto const parse = cli("classify 'prod(Z2 Z3)'");
  EXPECT_EQ(parse.code, 2);
  EXPECT_EQ(parse.out.rfind("deltaring: error: parse: column 9:", 0), 0u)
      << parse.out;
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
  EXPECT_EQ(cli("spectral Z4 --element 4").code, 2);
  EXPECT_EQ(cli("verify --check C99").code, 2);
  EXPECT_EQ(cli("classify 'corner(Z4, 2)'").code, 2);
  EXPECT_EQ(cli("verify --manifest /nonexistent/manifest.txt").code, 2);
  auto const cap = cli("classify 'M(2, Z9)'");
  EXPECT_EQ(cap.code, 3);
  EXPECT_EQ(cap.out.rfind("deltaring: error: capacity:", 0), 0u) << cap.out;
  auto const bad_manifest = temp_dir() / "bad.txt";
  std::ofstream(bad_manifest) << "Z2\n\nT(2 Z2)\n";
  auto const m = cli("verify --manifest '" + bad_manifest.string() + "'");
  EXPECT_EQ(m.code, 2);
  EXPECT_NE(m.out.find("manifest: line 3"), std::string::npos) << m.out;
}

TEST(Cli, ErrorsAreSingleLine) {
  for (auto const* args : {"classify 'prod(Z2 Z3)'", "frobnicate",
                           "classify 'M(2, Z9)'"}) {
    auto const r = cli(args);
    ASSERT_FALSE(r.out.empty());
    EXPECT_EQ(r.out.find('\n'), r.out.size() - 1) << r.out;
  }
}

TEST(Cli, ValidateFlagsBrokenTable) {
  auto const f = temp_dir() / "bad_z2.json";
  std::ofstream(f) << R"({"size": 2, "add": [[0,1],[1,0]],)"
                   << R"( "mul": [[0,1],[0,1]], "zero": 0, "one": 1})";
  auto const r = cli("validate 'table:" + f.string() + "'");
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_NE(r.out.find(R"("valid": false)"), std::string::npos);
}
