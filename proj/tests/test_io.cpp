#include <gtest/gtest.h>

#include <sstream>

#include "lctb/errors.hpp"
#include "lctb/io.hpp"

using namespace lctb;

namespace {

SampledSignal parse(const std::string& text) {
    std::istringstream in(text);
    return read_signal_csv(in);
}

}  // namespace

TEST(SignalCsv, RoundTripIsBitExact) {
    const SampledSignal f = SampledSignal::sample(Grid(-1.0 / 3.0, 1.0 / 7.0, 50), [](double t) {
        return std::polar(std::exp(-t * t), 1.0 / (1.0 + t * t));
    });
    std::ostringstream out;
    write_signal_csv(out, f);
    const SampledSignal g = parse(out.str());
    ASSERT_EQ(g.size(), f.size());
    EXPECT_EQ(g.start(), f.start());
    for (std::size_t i = 0; i < f.size(); ++i) {
        EXPECT_EQ(g[i], f[i]);
    }
    std::ostringstream again;
    write_signal_csv(again, g);
    EXPECT_EQ(again.str(), out.str());
}

TEST(SignalCsv, ToleratesBlankLinesAndWhitespace) {
    const SampledSignal f = parse("\nt,re,im\n0, 1, 0\n 0.5,2,-1\n\n1,3,0\n");
    EXPECT_EQ(f.size(), 3u);
    EXPECT_DOUBLE_EQ(f.step(), 0.5);
    EXPECT_EQ(f[1], cplx(2.0, -1.0));
}

TEST(SignalCsv, Rejections) {
    EXPECT_THROW(parse("time,re,im\n0,1,0\n1,1,0\n"), ParseError);
    EXPECT_THROW(parse("t,re,im\n0,1\n1,1,0\n"), ParseError);
    EXPECT_THROW(parse("t,re,im\n0,1,abc\n1,1,0\n"), ParseError);
    EXPECT_THROW(parse("t,re,im\n0,1,0\n"), ParseError);
    EXPECT_THROW(parse("t,re,im\n0,1,0\n0.5,1,0\n0.6,1,0\n"), GridError);
    EXPECT_THROW(parse("t,re,im\n1,1,0\n0,1,0\n"), GridError);
    EXPECT_THROW(parse("t,re,im\n0,nan,0\n1,1,0\n"), NonFiniteError);
    EXPECT_THROW(parse("t,re,im\n0,1,inf\n1,1,0\n"), NonFiniteError);
    EXPECT_THROW(read_signal_csv(std::filesystem::path("/nonexistent/x.csv")), ParseError);
}

TEST(ParseParams, Forms) {
    EXPECT_EQ(parse_params("2,1,3,2"), make_params(2.0, 1.0, 3.0, 2.0));
    EXPECT_EQ(parse_params("fourier"), special_params(SpecialKind::fourier));
    EXPECT_EQ(parse_params("identity"), special_params(SpecialKind::identity));
    EXPECT_EQ(parse_params("frft:0.5"), special_params(SpecialKind::frft, 0.5));
    EXPECT_THROW(parse_params("1,2,3"), ParseError);
    EXPECT_THROW(parse_params("1,1,1,1"), DeterminantError);
    EXPECT_THROW(parse_params("frft:x"), ParseError);
}

TEST(ParseGrid, Forms) {
    const Grid g = parse_grid("-6:0.03125:385");
    EXPECT_EQ(g.start(), -6.0);
    EXPECT_EQ(g.count(), 385u);
    EXPECT_THROW(parse_grid("0:1"), ParseError);
    EXPECT_THROW(parse_grid("0:1:1.5"), GridError);
    EXPECT_THROW(parse_grid("0:-1:10"), GridError);
}

TEST(RunConfig, ParsesAndValidates) {
    const RunConfig c = parse_config(nlohmann::json::parse(R"({
        "params": [2, 1, 3, 2],
        "tgrid": {"start": -4, "step": 0.0625, "count": 129},
        "ugrid": "-4:0.0625:129",
        "family": "triangular",
        "depth": 3,
        "seed": 11,
        "tolerances": {"smooth": 0.002}
    })"));
    ASSERT_TRUE(c.params.has_value());
    EXPECT_EQ(*c.params, make_params(2.0, 1.0, 3.0, 2.0));
    EXPECT_EQ(c.tgrid->count(), 129u);
    EXPECT_EQ(c.depth, 3u);
    EXPECT_EQ(c.tolerances.smooth, 0.002);

    const TestBattery b = battery_from_config(c);
    EXPECT_EQ(b.params.front().params, *c.params);
    EXPECT_EQ(b.seed, 11u);
    EXPECT_EQ(b.tol.smooth, 0.002);

    EXPECT_THROW(parse_config(nlohmann::json::parse(R"({"colour": 1})")), ConfigError);
    EXPECT_THROW(parse_config(nlohmann::json::parse(R"({"depth": "four"})")), ConfigError);
    EXPECT_THROW(parse_config(nlohmann::json::parse(R"({"depth": 1})")), ConfigError);
    EXPECT_THROW(parse_config(nlohmann::json::parse(R"({"tolerances": {"smooth": -1}})")), ConfigError);
    EXPECT_THROW(parse_config(nlohmann::json::parse(R"({"params": "fourier", "family": "x"})")), ConfigError);
    EXPECT_THROW(parse_config(nlohmann::json::parse("[1]")), ConfigError);
}

TEST(ReportJson, CarriesEveryField) {
    VerificationReport r;
    r.claim_id = "x";
    r.gated = false;
    r.parts.push_back(ReportPart{"p", ReportPart::Rule::decreasing, 0.5, 0.0, true, {3.0, 2.0}, ""});
    const nlohmann::json j = to_json(r);
    for (const char* key : {"claim_id", "statement", "inputs", "lhs_norm", "rhs_norm", "residual", "tolerance",
                            "passed", "gated", "runtime_ms", "parts", "notes"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j["gated"], false);
    EXPECT_EQ(j["parts"][0]["rule"], "decreasing");
    EXPECT_EQ(j["parts"][0]["sequence"].size(), 2u);
    EXPECT_NE(format_report_table({r}).find("FAIL"), std::string::npos);
}

TEST(SvgPlot, HasBothPanels) {
    const SampledSignal f = SampledSignal::sample(Grid(-1.0, 0.1, 21), [](double t) { return cplx(t, 1.0); });
    const std::string svg = render_svg_plot(f, "demo");
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_NE(svg.find("|F|"), std::string::npos);
    EXPECT_NE(svg.find("arg F"), std::string::npos);
    EXPECT_EQ(std::count(svg.begin(), svg.end(), '\n') > 5, true);
}
