#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lctb/cli.hpp"
#include "lctb/io.hpp"

using namespace lctb;
namespace fs = std::filesystem;

namespace {

const fs::path fixtures = LCTB_FIXTURE_DIR;

struct Result {
    int code;
    std::string out;
    std::string err;
};

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() / ("lctb_cli_" + std::string(info->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    Result run(std::vector<std::string> args) {
        args.insert(args.begin(), "lctb");
        args.push_back("--out");
        args.push_back(dir_.string());
        std::vector<const char*> argv;
        for (const auto& a : args) {
            argv.push_back(a.c_str());
        }
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return {code, out.str(), err.str()};
    }

    std::string fixture(const std::string& name) const { return (fixtures / name).string(); }
    fs::path out(const std::string& name) const { return dir_ / name; }

    // The error record is the last line; warnings may precede it.
    static nlohmann::json error_record(const Result& r) {
        std::string err = r.err;
        while (!err.empty() && err.back() == '\n') {
            err.pop_back();
        }
        return nlohmann::json::parse(err.substr(err.find_last_of('\n') + 1));
    }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, FourierOfGaussianMatchesFixture) {
    const Result r = run({"transform", fixture("gaussian.csv"), "--params", "fourier", "--grid", "-6:0.03125:385"});
    ASSERT_EQ(r.code, 0) << r.err;
    const SampledSignal F = read_signal_csv(out("transform.csv"));
    const SampledSignal expected = read_signal_csv(fixtures / "gaussian_fourier.csv");
    EXPECT_LT(relative_l2_error(F, expected), 1e-4);
}

TEST_F(CliTest, ConfigSuppliesParamsAndGrid) {
    const Result r = run({"--config", fixture("config.json"), "transform", fixture("gaussian.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(read_signal_csv(out("transform.csv")).size(), 385u);
}

TEST_F(CliTest, IdentityReproducesRows) {
    ASSERT_EQ(run({"transform", fixture("gaussian.csv"), "--params", "identity"}).code, 0);
    std::ifstream a(fixtures / "gaussian.csv");
    std::ifstream b(out("transform.csv"));
    const SampledSignal f = read_signal_csv(a, "a");
    const SampledSignal g = read_signal_csv(b, "b");
    EXPECT_EQ(sup_distance(f, g), 0.0);
}

TEST_F(CliTest, TransformThenInverseRoundTrips) {
    ASSERT_EQ(run({"transform", fixture("gaussian.csv"), "--params", "2,1,3,2", "--grid", "-16:0.03125:1025", "--plot"})
                  .code,
              0);
    EXPECT_TRUE(fs::exists(out("transform.svg")));
    ASSERT_EQ(run({"transform", out("transform.csv").string(), "--params", "2,1,3,2", "--inverse", "--grid",
                   "-8:0.015625:1025"})
                  .code,
              0);
    EXPECT_LT(relative_l2_error(read_signal_csv(out("inverse.csv")), read_signal_csv(fixtures / "gaussian.csv")),
              1e-4);
}

TEST_F(CliTest, MalformedCsvExitsTwo) {
    std::ofstream(out("bad.csv")) << "t,re,im\n0,1\n";
    const Result r = run({"transform", out("bad.csv").string(), "--params", "fourier"});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(error_record(r)["error"], "ParseError");
}

TEST_F(CliTest, MissingParamsExitsTwo) {
    const Result r = run({"transform", fixture("gaussian.csv")});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(error_record(r)["error"], "ConfigError");
}

TEST_F(CliTest, NumericalErrorExitsThree) {
    const Result r = run({"transform", fixture("gaussian.csv"), "--params", "0.5,0,0,2", "--grid", "-16:0.5:65"});
    EXPECT_EQ(r.code, 3);
    EXPECT_EQ(error_record(r)["error"], "DomainError");
}

TEST_F(CliTest, UsageErrorsExitTwo) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"transform"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST_F(CliTest, BoxWithBoxIsTriangle) {
    ASSERT_EQ(run({"convolve", fixture("box.csv"), fixture("box.csv"), "--params", "fourier"}).code, 0);
    const SampledSignal h = read_signal_csv(out("convolve.csv"));
    const SampledSignal tri = read_signal_csv(fixtures / "triangle.csv");
    EXPECT_LT(sup_distance(h, tri), 1e-12);
}

TEST_F(CliTest, ZeroConvolvesToZero) {
    ASSERT_EQ(run({"convolve", fixture("zero.csv"), fixture("box.csv"), "--params", "2,1,3,2"}).code, 0);
    EXPECT_EQ(sup_norm(read_signal_csv(out("convolve.csv"))), 0.0);
}

TEST_F(CliTest, MismatchedStepsExitTwo) {
    const Result r = run({"convolve", fixture("box.csv"), fixture("gaussian.csv"), "--params", "2,1,3,2"});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(error_record(r)["error"], "GridError");
}

TEST_F(CliTest, EdgeWarningForTruncatedInput) {
    const Result r = run({"convolve", fixture("box.csv"), fixture("box.csv"), "--params", "fourier"});
    EXPECT_NE(r.err.find("\"warning\":\"edge\""), std::string::npos);
}

TEST_F(CliTest, TriangularMemberSidecar) {
    const Result r = run({"delta", "--family", "triangular", "--n", "8", "--params", "2,1,3,2"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(out("delta_triangular_8.json"));
    const auto j = nlohmann::json::parse(in);
    EXPECT_NEAR(j["condition_i"].get<double>(), 1.0, 1e-6);
    EXPECT_EQ(j["passed"], true);
    EXPECT_TRUE(fs::exists(out("delta_triangular_8.csv")));
}

TEST_F(CliTest, PaperMemberFailsMassCondition) {
    ASSERT_EQ(run({"delta", "--family", "paper", "--n", "2", "--params", "2,1,3,2"}).code, 0);
    std::ifstream in(out("delta_paper_2.json"));
    const auto j = nlohmann::json::parse(in);
    EXPECT_NEAR(j["condition_i"].get<double>(), 0.625, 1e-6);
    EXPECT_EQ(j["passed"], false);
}

TEST_F(CliTest, ZeroIndexExitsTwo) {
    EXPECT_EQ(run({"delta", "--family", "triangular", "--n", "0", "--params", "2,1,3,2"}).code, 2);
}

TEST_F(CliTest, VerifyUnknownClaimExitsTwo) { EXPECT_EQ(run({"verify", "no-such-claim"}).code, 2); }

TEST_F(CliTest, VerifyUngatedClaim) {
    const Result r = run({"verify", "second-derivative"});
    EXPECT_EQ(r.code, 0);
    std::ifstream in(out("verify.json"));
    const auto j = nlohmann::json::parse(in);
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0]["gated"], false);
    EXPECT_NE(r.out.find("second-derivative"), std::string::npos);
}

TEST_F(CliTest, VerifyFailureExitsOne) {
    std::ofstream(out("strict.json")) << R"({"tolerances": {"quadrature": 1e-300}})";
    EXPECT_EQ(run({"--config", out("strict.json").string(), "verify", "round-trip"}).code, 1);
}

TEST_F(CliTest, BoehmEmbedWritesSequences) {
    const Result r = run({"boehm", "embed", fixture("gaussian.csv"), "--params", "2,1,3,2", "--depth", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    for (int n = 1; n <= 4; ++n) {
        EXPECT_TRUE(fs::exists(out("numerator_" + std::to_string(n) + ".csv"))) << n;
    }
    EXPECT_FALSE(fs::exists(out("numerator_5.csv")));
    std::ifstream in(out("summary.json"));
    const auto j = nlohmann::json::parse(in);
    EXPECT_LE(j["compat_residual"].get<double>(), 1e-4);
}

TEST_F(CliTest, BoehmLctOfZeroIsZero) {
    std::ofstream f(out("zero.csv"));
    write_signal_csv(f, SampledSignal::zeros(Grid(-8.0, 1.0 / 64.0, 1025)));
    f.close();
    ASSERT_EQ(run({"boehm", "lct", out("zero.csv").string(), "--params", "2,1,3,2", "--grid", "-4:0.0625:129"}).code,
              0);
    for (int n = 1; n <= 4; ++n) {
        EXPECT_EQ(sup_norm(read_signal_csv(out("lct_numerator_" + std::to_string(n) + ".csv"))), 0.0);
    }
    EXPECT_EQ(sup_norm(read_signal_csv(out("lct_limit.csv"))), 0.0);
}

TEST_F(CliTest, BoehmDeriveNeedsSmoothFamily) {
    const Result r =
        run({"boehm", "derive", fixture("gaussian.csv"), "--family", "triangular", "--k", "2", "--params", "2,1,3,2"});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(error_record(r)["error"], "SmoothnessError");
}

TEST_F(CliTest, BoehmDeriveCovariant) {
    const Result r = run({"boehm", "derive", fixture("gaussian.csv"), "--scale", "4", "--k", "2", "--params", "2,1,3,2"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(out("summary.json"));
    const auto j = nlohmann::json::parse(in);
    EXPECT_EQ(j["rule"], "covariant");
    EXPECT_LE(j["compat_residual"].get<double>(), 1e-4);
}

TEST_F(CliTest, BoehmConvergeReportsBothModes) {
    const Result r = run({"boehm", "converge", fixture("gaussian.csv"), "--params", "2,1,3,2"});
    EXPECT_EQ(r.code, 0) << r.err;
    std::ifstream in(out("converge.json"));
    const auto j = nlohmann::json::parse(in);
    EXPECT_EQ(j["Delta"]["converging"], true);
    EXPECT_EQ(j["delta"]["converging"], true);
}
